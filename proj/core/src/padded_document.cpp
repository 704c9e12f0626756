#include "skimjson/padded_document.h"

#include <cstring>
#include <fstream>

namespace skimjson {

outcome<padded_document> padded_document::from_bytes(std::string_view raw) {
  if (raw.size() > kMaxLength) return error_code::CAPACITY;
  auto bytes = std::make_unique<std::uint8_t[]>(raw.size() + kPadding);
  if (!raw.empty()) std::memcpy(bytes.get(), raw.data(), raw.size());
  std::memset(bytes.get() + raw.size(), 0, kPadding);
  return padded_document(std::move(bytes), raw.size());
}

outcome<padded_document> padded_document::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) return error_code::CAPACITY;
  const auto size = static_cast<std::size_t>(in.tellg());
  if (size > kMaxLength) return error_code::CAPACITY;
  in.seekg(0);
  auto bytes = std::make_unique<std::uint8_t[]>(size + kPadding);
  if (size != 0 && !in.read(reinterpret_cast<char*>(bytes.get()),
                            static_cast<std::streamsize>(size))) {
    return error_code::CAPACITY;
  }
  std::memset(bytes.get() + size, 0, kPadding);
  return padded_document(std::move(bytes), size);
}

outcome<std::string_view> padded_document::view(std::size_t start,
                                                std::size_t end) const {
  if (start > end || end > length_) return error_code::USAGE_ERROR;
  return std::string_view{reinterpret_cast<const char*>(bytes_.get()) + start,
                          end - start};
}

}  // namespace skimjson
