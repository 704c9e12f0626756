#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>

#include "skimjson/error.h"

namespace skimjson {

/// Immutable document bytes with a guaranteed readable, zero-valued
/// suffix of kPadding bytes past the logical end. The padding lets the
/// indexer read whole 64-byte blocks without a bounds check at the tail.
///
/// Construction always copies; the logical content is bit-identical to
/// the caller's input and never changes afterwards. A padded_document is
/// safe for shared concurrent reads.
class padded_document {
 public:
  /// One indexing block. All bytes in [size(), size() + kPadding) read as 0.
  static constexpr std::size_t kPadding = 64;

  /// Offsets must fit 32-bit index entries, padding included.
  static constexpr std::size_t kMaxLength = (std::uint64_t{1} << 32) - kPadding;

  padded_document() = default;
  padded_document(padded_document&&) noexcept = default;
  padded_document& operator=(padded_document&&) noexcept = default;
  padded_document(const padded_document&) = delete;
  padded_document& operator=(const padded_document&) = delete;

  /// Copies `raw` into freshly allocated padded storage. Inputs longer
  /// than kMaxLength are rejected with CAPACITY.
  static outcome<padded_document> from_bytes(std::string_view raw);

  /// Reads an entire file into a padded_document.
  static outcome<padded_document> load_file(const std::string& path);

  const std::uint8_t* data() const noexcept { return bytes_.get(); }
  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  /// Logical content as a view (padding excluded).
  std::string_view text() const noexcept {
    return {reinterpret_cast<const char*>(bytes_.get()), length_};
  }

  /// Non-owning view of [start, end); valid while the document lives.
  /// Out-of-range offsets are a usage error.
  outcome<std::string_view> view(std::size_t start, std::size_t end) const;

 private:
  padded_document(std::unique_ptr<std::uint8_t[]> bytes, std::size_t length)
      : bytes_(std::move(bytes)), length_(length) {}

  std::unique_ptr<std::uint8_t[]> bytes_;
  std::size_t length_ = 0;
};

}  // namespace skimjson
