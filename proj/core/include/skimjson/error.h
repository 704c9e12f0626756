#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace skimjson {

/// Every fallible operation in the library reports one of these codes.
/// The integer values are stable; they double as CLI exit codes and are
/// safe to expose over FFI.
enum class error_code : int {
  SUCCESS = 0,
  UTF8_ERROR = 1,           // input is not valid UTF-8
  UNESCAPED_CHARS = 2,      // control byte outside a string literal
  UNCLOSED_STRING = 3,      // string still open at end of input
  EMPTY = 4,                // no JSON content found
  CAPACITY = 5,             // document exceeds configured limits
  TAPE_ERROR = 6,           // structure malformed (brackets, separators, end of index)
  INCORRECT_TYPE = 7,       // value has a different JSON type than requested
  NUMBER_ERROR = 8,         // number token violates the JSON grammar or overflows binary64
  NUMBER_OUT_OF_RANGE = 9,  // integer does not fit the requested width
  NO_SUCH_FIELD = 10,       // key not present in object
  DEPTH_ERROR = 11,         // nesting exceeds the configured maximum depth
  STRING_ERROR = 12,        // bad escape sequence or control byte inside a string
  ATOM_ERROR = 13,          // token is not exactly true/false/null
  TRAILING_CONTENT = 14,    // bytes after the root value
  USAGE_ERROR = 15,         // API misuse (out-of-order access, bad range, double iterate)
};

const char* error_message(error_code code) noexcept;

/// Thrown by outcome<T>::value() when the operation failed.
class error_exception : public std::runtime_error {
 public:
  explicit error_exception(error_code code)
      : std::runtime_error(error_message(code)), code_(code) {}
  error_code code() const noexcept { return code_; }

 private:
  error_code code_;
};

/// A paired error code and value. The value is meaningful only when the
/// code is SUCCESS. value() escalates errors as exceptions; callers who
/// prefer explicit checks use error()/value_unsafe() or split().
template <typename T>
class [[nodiscard]] outcome {
 public:
  outcome() : code_(error_code::USAGE_ERROR), value_{} {}
  outcome(T value) : code_(error_code::SUCCESS), value_(std::move(value)) {}
  outcome(error_code code) : code_(code), value_{} {}
  outcome(error_code code, T value) : code_(code), value_(std::move(value)) {}

  error_code error() const noexcept { return code_; }
  bool ok() const noexcept { return code_ == error_code::SUCCESS; }
  explicit operator bool() const noexcept { return ok(); }

  T& value() & {
    if (!ok()) throw error_exception(code_);
    return value_;
  }
  T value() && {
    if (!ok()) throw error_exception(code_);
    return std::move(value_);
  }
  const T& value() const& {
    if (!ok()) throw error_exception(code_);
    return value_;
  }

  /// Access without the error check; caller must have verified ok().
  T& value_unsafe() & noexcept { return value_; }
  const T& value_unsafe() const& noexcept { return value_; }

  /// Non-escalating decomposition into (code, optional value).
  std::pair<error_code, std::optional<T>> split() const& {
    if (ok()) return {code_, value_};
    return {code_, std::nullopt};
  }
  std::pair<error_code, std::optional<T>> split() && {
    if (ok()) return {code_, std::move(value_)};
    return {code_, std::nullopt};
  }

 private:
  error_code code_;
  T value_;
};

template <>
class [[nodiscard]] outcome<void> {
 public:
  outcome() : code_(error_code::SUCCESS) {}
  outcome(error_code code) : code_(code) {}

  error_code error() const noexcept { return code_; }
  bool ok() const noexcept { return code_ == error_code::SUCCESS; }
  explicit operator bool() const noexcept { return ok(); }

  void value() const {
    if (!ok()) throw error_exception(code_);
  }

 private:
  error_code code_;
};

}  // namespace skimjson
