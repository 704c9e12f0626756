#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "skimjson/error.h"
#include "skimjson/padded_document.h"

namespace skimjson {

/// Scanner state threaded across 64-byte blocks.
struct block_carry {
  std::uint64_t odd_backslash = 0;    // 1 if the block ended in an odd backslash run
  std::uint64_t in_string = 0;        // all-ones if still inside a string literal
  std::uint64_t follows_boundary = 1; // 1 if the last byte was whitespace/structural/quote

  bool operator==(const block_carry&) const = default;
};

/// Bit classification of one 64-byte block. Bit i refers to byte i.
struct block_classification {
  std::uint64_t structural_bits = 0; // byte begins a pseudo-structural token
  std::uint64_t in_string_bits = 0;  // byte lies inside a string (opening quote included)
  std::uint64_t control_bits = 0;    // control byte outside a string (whitespace excluded)
};

/// Classifies one fully readable 64-byte block, threading `carry` exactly.
/// Pure apart from the carry update; never fails (errors are aggregated by
/// build_index).
block_classification classify_block(const std::uint8_t* block, block_carry& carry);

/// Accepts exactly the well-formed UTF-8 sequences: no overlong forms, no
/// surrogates, nothing above U+10FFFF.
outcome<void> validate_utf8(std::string_view bytes);

/// Ascending byte offsets of every pseudo-structural character: the six
/// structural characters, opening quotes, and the first byte of each
/// number or atom token. A view over parser-owned storage.
class structural_index {
 public:
  structural_index() = default;
  structural_index(const std::uint32_t* offsets, std::uint32_t count,
                   std::uint32_t document_length)
      : offsets_(offsets), count_(count), document_length_(document_length) {}

  std::uint32_t count() const noexcept { return count_; }
  std::uint32_t document_length() const noexcept { return document_length_; }
  std::uint32_t operator[](std::uint32_t i) const noexcept { return offsets_[i]; }

  /// End of token i's span: the next token's offset, or the document end
  /// for the last token. Valid for i < count() via an internal sentinel.
  std::uint32_t token_end(std::uint32_t i) const noexcept { return offsets_[i + 1]; }

  const std::uint32_t* begin() const noexcept { return offsets_; }
  const std::uint32_t* end() const noexcept { return offsets_ + count_; }

 private:
  const std::uint32_t* offsets_ = nullptr;
  std::uint32_t count_ = 0;
  std::uint32_t document_length_ = 0;
};

/// Stage 1: scans the document in 64-byte blocks and fills `storage` with
/// the structural offsets (plus a sentinel entry equal to the document
/// length). On success the input is guaranteed valid UTF-8, every string
/// is closed, and only JSON whitespace separates tokens outside strings.
/// The document is NOT guaranteed to be valid JSON: value bodies and
/// bracket structure are checked lazily on access.
outcome<structural_index> build_index(const padded_document& doc,
                                      std::vector<std::uint32_t>& storage);

}  // namespace skimjson
