#include "skimjson/structural_index.h"

#include <bit>
#include <cstring>

namespace skimjson {

namespace {

constexpr std::uint64_t kLowBytes = 0x0101010101010101ULL;
constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;
constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;
constexpr std::uint64_t kOddBits = ~kEvenBits;

// High bit of each byte set where the byte equals c. The (x|0x80)-1 form
// keeps each byte's subtraction from borrowing into its neighbour.
inline std::uint64_t eq_bytes(std::uint64_t word, std::uint8_t c) {
  const std::uint64_t x = word ^ (kLowBytes * c);
  return ~((x | kHighBits) - kLowBytes) & ~x & kHighBits;
}

// High bit of each byte set where the byte is < 0x20.
inline std::uint64_t lt20_bytes(std::uint64_t word) {
  return ~(((word & ~kHighBits) + (kLowBytes * 0x60)) | word) & kHighBits;
}

// Collapses the per-byte high bits of `r` into one bit per byte.
inline std::uint64_t movemask(std::uint64_t r) {
  return ((r >> 7) * 0x0102040810204080ULL) >> 56;
}

// Bit i of the result = XOR of input bits 0..i.
inline std::uint64_t prefix_xor(std::uint64_t x) {
  x ^= x << 1;
  x ^= x << 2;
  x ^= x << 4;
  x ^= x << 8;
  x ^= x << 16;
  x ^= x << 32;
  return x;
}

struct block_masks {
  std::uint64_t backslash;
  std::uint64_t quote;
  std::uint64_t whitespace;
  std::uint64_t op;
  std::uint64_t control;
};

inline block_masks scan_masks(const std::uint8_t* block) {
  block_masks m{0, 0, 0, 0, 0};
  for (int i = 0; i < 8; ++i) {
    std::uint64_t w;
    std::memcpy(&w, block + 8 * i, 8);
    const int shift = 8 * i;
    m.backslash |= movemask(eq_bytes(w, '\\')) << shift;
    m.quote |= movemask(eq_bytes(w, '"')) << shift;
    m.whitespace |= movemask(eq_bytes(w, ' ') | eq_bytes(w, '\t') |
                             eq_bytes(w, '\n') | eq_bytes(w, '\r'))
                    << shift;
    // Folding in 0x20 maps [ ] onto { } so four comparisons cover all six
    // structural characters. The false positives this introduces (0x1a,
    // 0x0c, ...) are control bytes, caught by the control mask.
    const std::uint64_t folded = w | (kLowBytes * 0x20);
    m.op |= movemask(eq_bytes(folded, '{') | eq_bytes(folded, '}') |
                     eq_bytes(folded, ':') | eq_bytes(folded, ','))
            << shift;
    m.control |= movemask(lt20_bytes(w)) << shift;
  }
  return m;
}

}  // namespace

block_classification classify_block(const std::uint8_t* block, block_carry& carry) {
  const block_masks m = scan_masks(block);

  // Escaped characters: positions preceded by an odd-length backslash run.
  const std::uint64_t bs = m.backslash;
  std::uint64_t escaped;
  if (bs == 0 && carry.odd_backslash == 0) {
    escaped = 0;
  } else {
    const std::uint64_t start_edges = bs & ~(bs << 1);
    const std::uint64_t even_start_mask = kEvenBits ^ carry.odd_backslash;
    const std::uint64_t even_starts = start_edges & even_start_mask;
    const std::uint64_t odd_starts = start_edges & ~even_start_mask;
    const std::uint64_t even_carries = bs + even_starts;
    std::uint64_t odd_carries;
    const bool ends_odd = __builtin_add_overflow(bs, odd_starts, &odd_carries);
    odd_carries |= carry.odd_backslash;
    carry.odd_backslash = ends_odd ? 1 : 0;
    const std::uint64_t even_carry_ends = even_carries & ~bs;
    const std::uint64_t odd_carry_ends = odd_carries & ~bs;
    escaped = (even_carry_ends & kOddBits) | (odd_carry_ends & kEvenBits);
  }

  // String interior: running parity of unescaped quotes. The mask covers
  // the opening quote but not the closing one.
  const std::uint64_t quote = m.quote & ~escaped;
  const std::uint64_t in_string = prefix_xor(quote) ^ carry.in_string;
  carry.in_string =
      static_cast<std::uint64_t>(static_cast<std::int64_t>(in_string) >> 63);

  std::uint64_t structurals = m.op & ~in_string;
  structurals |= quote;

  // A token starts at any non-whitespace byte outside strings whose
  // predecessor is whitespace, a structural character, or a quote.
  const std::uint64_t boundary = structurals | m.whitespace;
  const std::uint64_t shifted = (boundary << 1) | carry.follows_boundary;
  carry.follows_boundary = boundary >> 63;
  structurals |= shifted & ~m.whitespace & ~in_string;

  // Closing quotes served as predecessors above but are not tokens.
  structurals &= ~(quote & ~in_string);

  return block_classification{
      .structural_bits = structurals,
      .in_string_bits = in_string,
      .control_bits = m.control & ~m.whitespace & ~in_string,
  };
}

outcome<void> validate_utf8(std::string_view bytes) {
  const auto* s = reinterpret_cast<const std::uint8_t*>(bytes.data());
  const std::size_t len = bytes.size();
  std::size_t i = 0;
  while (i < len) {
    // Skip runs of ASCII eight bytes at a time.
    while (i + 8 <= len) {
      std::uint64_t w;
      std::memcpy(&w, s + i, 8);
      if (w & kHighBits) break;
      i += 8;
    }
    if (i >= len) break;
    const std::uint8_t b0 = s[i];
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    if (b0 < 0xC2) return error_code::UTF8_ERROR;  // continuation byte or overlong 2-byte
    if (b0 < 0xE0) {
      if (i + 1 >= len || (s[i + 1] & 0xC0) != 0x80) return error_code::UTF8_ERROR;
      i += 2;
    } else if (b0 < 0xF0) {
      if (i + 2 >= len) return error_code::UTF8_ERROR;
      const std::uint8_t b1 = s[i + 1];
      const std::uint8_t lo = (b0 == 0xE0) ? 0xA0 : 0x80;  // no overlong forms
      const std::uint8_t hi = (b0 == 0xED) ? 0x9F : 0xBF;  // no surrogates
      if (b1 < lo || b1 > hi || (s[i + 2] & 0xC0) != 0x80) return error_code::UTF8_ERROR;
      i += 3;
    } else if (b0 < 0xF5) {
      if (i + 3 >= len) return error_code::UTF8_ERROR;
      const std::uint8_t b1 = s[i + 1];
      const std::uint8_t lo = (b0 == 0xF0) ? 0x90 : 0x80;  // no overlong forms
      const std::uint8_t hi = (b0 == 0xF4) ? 0x8F : 0xBF;  // max U+10FFFF
      if (b1 < lo || b1 > hi || (s[i + 2] & 0xC0) != 0x80 ||
          (s[i + 3] & 0xC0) != 0x80) {
        return error_code::UTF8_ERROR;
      }
      i += 4;
    } else {
      return error_code::UTF8_ERROR;
    }
  }
  return {};
}

outcome<structural_index> build_index(const padded_document& doc,
                                      std::vector<std::uint32_t>& storage) {
  const std::size_t len = doc.size();
  // Worst case is one entry per byte (e.g. "[[[["), plus the sentinel and
  // slack for the unrolled writer.
  if (storage.size() < len + 8) storage.resize(len + 8);

  block_carry carry;
  std::uint64_t control_err = 0;
  std::uint32_t* out = storage.data();
  std::uint32_t n = 0;

  for (std::size_t i = 0; i < len; i += 64) {
    block_classification cls = classify_block(doc.data() + i, carry);
    std::uint64_t structurals = cls.structural_bits;
    std::uint64_t control = cls.control_bits;
    if (len - i < 64) {
      // Final partial block: the zero padding must produce neither tokens
      // nor control errors.
      const std::uint64_t valid = (std::uint64_t{1} << (len - i)) - 1;
      structurals &= valid;
      control &= valid;
    }
    control_err |= control;
    const auto base = static_cast<std::uint32_t>(i);
    while (structurals != 0) {
      out[n++] = base + static_cast<std::uint32_t>(std::countr_zero(structurals));
      structurals &= structurals - 1;
    }
  }

  if (auto utf8 = validate_utf8(doc.text()); !utf8.ok()) return utf8.error();
  if (control_err != 0) return error_code::UNESCAPED_CHARS;
  if (carry.in_string != 0) return error_code::UNCLOSED_STRING;
  if (n == 0) return error_code::EMPTY;

  out[n] = static_cast<std::uint32_t>(len);  // sentinel for token_end
  return structural_index{out, n, static_cast<std::uint32_t>(len)};
}

}  // namespace skimjson
