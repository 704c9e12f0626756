#include "support/reference_index.h"

namespace skimjson::testing {

namespace {

bool is_ws(std::uint8_t b) { return b == ' ' || b == '\t' || b == '\n' || b == '\r'; }

bool is_op(std::uint8_t b) {
  return b == '[' || b == ']' || b == '{' || b == '}' || b == ':' || b == ',';
}

// Well-formedness check equivalent to validate_utf8, written as a
// decode-and-check loop.
bool utf8_ok(std::string_view input) {
  std::size_t i = 0;
  const auto* s = reinterpret_cast<const std::uint8_t*>(input.data());
  while (i < input.size()) {
    const std::uint8_t b = s[i];
    std::size_t need;
    std::uint32_t cp;
    if (b < 0x80) {
      need = 0;
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      need = 1;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      need = 2;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      need = 3;
      cp = b & 0x07;
    } else {
      return false;
    }
    for (std::size_t k = 1; k <= need; ++k) {
      if (i + k >= input.size()) return false;
      if ((s[i + k] & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    static constexpr std::uint32_t min_cp[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < min_cp[need]) return false;                  // overlong
    if (cp >= 0xD800 && cp <= 0xDFFF) return false;       // surrogate
    if (cp > 0x10FFFF) return false;
    i += need + 1;
  }
  return true;
}

}  // namespace

reference_index_result reference_index(std::string_view input) {
  const auto* s = reinterpret_cast<const std::uint8_t*>(input.data());
  const std::size_t n = input.size();

  // Per-byte classification: inside-string membership (opening quote
  // included, closing excluded), unescaped-quote positions.
  std::vector<std::uint8_t> in_string(n, 0);
  std::vector<std::uint8_t> is_quote(n, 0);
  bool inside = false;
  bool escape_pending = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t b = s[i];
    if (escape_pending) {
      escape_pending = false;
      in_string[i] = inside;
      continue;
    }
    if (b == '\\') {
      escape_pending = true;
      in_string[i] = inside;
      continue;
    }
    if (b == '"') {
      is_quote[i] = 1;
      if (!inside) {
        inside = true;
        in_string[i] = 1;  // opening quote belongs to the string
      } else {
        inside = false;
        in_string[i] = 0;  // closing quote does not
      }
      continue;
    }
    in_string[i] = inside;
  }

  reference_index_result result;
  if (!utf8_ok(input)) {
    result.code = error_code::UTF8_ERROR;
    return result;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] < 0x20 && !is_ws(s[i]) && !in_string[i]) {
      result.code = error_code::UNESCAPED_CHARS;
      return result;
    }
  }
  if (inside) {
    result.code = error_code::UNCLOSED_STRING;
    return result;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t b = s[i];
    const bool opener = is_quote[i] && in_string[i];
    const bool closer = is_quote[i] && !in_string[i];
    const bool op_outside = is_op(b) && !in_string[i];
    bool boundary_before;
    if (i == 0) {
      boundary_before = true;
    } else {
      const std::uint8_t p = s[i - 1];
      boundary_before = is_ws(p) || (is_op(p) && !in_string[i - 1]) || is_quote[i - 1];
    }
    const bool pseudo = !is_ws(b) && !in_string[i] && boundary_before;
    if ((op_outside || opener || pseudo) && !closer) {
      result.offsets.push_back(static_cast<std::uint32_t>(i));
    }
  }
  if (result.offsets.empty()) result.code = error_code::EMPTY;
  return result;
}

}  // namespace skimjson::testing
