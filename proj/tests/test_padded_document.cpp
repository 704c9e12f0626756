#include <doctest.h>

#include <random>
#include <string>

#include "skimjson/padded_document.h"

using namespace skimjson;

TEST_CASE("from_bytes preserves content and guarantees padding") {
  auto doc = padded_document::from_bytes("{}").value();
  CHECK(doc.size() == 2);
  CHECK(doc.text() == "{}");
  for (std::size_t i = doc.size(); i < doc.size() + padded_document::kPadding; ++i) {
    CHECK(doc.data()[i] == 0);
  }
}

TEST_CASE("empty input is allowed") {
  auto doc = padded_document::from_bytes("").value();
  CHECK(doc.size() == 0);
  CHECK(doc.empty());
  for (std::size_t i = 0; i < padded_document::kPadding; ++i) {
    CHECK(doc.data()[i] == 0);
  }
}

TEST_CASE("large input round-trips bit-exactly") {
  std::mt19937_64 rng(7);
  std::string big(1 << 20, '\0');
  for (auto& c : big) c = static_cast<char>(rng());
  auto doc = padded_document::from_bytes(big).value();
  CHECK(doc.size() == big.size());
  CHECK(doc.text() == big);
}

TEST_CASE("view returns the requested byte range") {
  auto doc = padded_document::from_bytes(R"({"a":1})").value();
  CHECK(doc.view(1, 4).value() == "\"a\"");
  CHECK(doc.view(0, 0).value().empty());

  auto doc2 = padded_document::from_bytes(R"({"abc":2000})").value();
  CHECK(doc2.view(7, 11).value() == "2000");
}

TEST_CASE("view rejects out-of-range offsets") {
  auto doc = padded_document::from_bytes("{}").value();
  CHECK(doc.view(0, 3).error() == error_code::USAGE_ERROR);
  CHECK(doc.view(2, 1).error() == error_code::USAGE_ERROR);
  CHECK(doc.view(9, 9).error() == error_code::USAGE_ERROR);
}
