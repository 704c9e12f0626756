#include "skimjson/error.h"

namespace skimjson {

const char* error_message(error_code code) noexcept {
  switch (code) {
    case error_code::SUCCESS:
      return "SUCCESS: no error";
    case error_code::UTF8_ERROR:
      return "UTF8_ERROR: the input is not valid UTF-8";
    case error_code::UNESCAPED_CHARS:
      return "UNESCAPED_CHARS: control character outside a string";
    case error_code::UNCLOSED_STRING:
      return "UNCLOSED_STRING: string still open at end of input";
    case error_code::EMPTY:
      return "EMPTY: no JSON content found";
    case error_code::CAPACITY:
      return "CAPACITY: document exceeds configured limits";
    case error_code::TAPE_ERROR:
      return "TAPE_ERROR: malformed JSON structure";
    case error_code::INCORRECT_TYPE:
      return "INCORRECT_TYPE: value is of a different JSON type";
    case error_code::NUMBER_ERROR:
      return "NUMBER_ERROR: invalid number";
    case error_code::NUMBER_OUT_OF_RANGE:
      return "NUMBER_OUT_OF_RANGE: integer value out of range";
    case error_code::NO_SUCH_FIELD:
      return "NO_SUCH_FIELD: key not found in object";
    case error_code::DEPTH_ERROR:
      return "DEPTH_ERROR: nesting exceeds maximum depth";
    case error_code::STRING_ERROR:
      return "STRING_ERROR: invalid string";
    case error_code::ATOM_ERROR:
      return "ATOM_ERROR: invalid true/false/null token";
    case error_code::TRAILING_CONTENT:
      return "TRAILING_CONTENT: unexpected content after the root value";
    case error_code::USAGE_ERROR:
      return "USAGE_ERROR: API misuse";
  }
  return "unknown error";
}

}  // namespace skimjson
