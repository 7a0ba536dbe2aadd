#include <openssl/evp.h>

#include <string>
#include <vector>

#include "doctest.h"
#include "pae/error.hpp"
#include "pae/util/base64.hpp"
#include "pae/util/sha256.hpp"
#include "pae/util/strings.hpp"

using namespace pae;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

std::string openssl_base64(const std::vector<std::uint8_t>& in) {
  std::string out(4 * ((in.size() + 2) / 3) + 1, '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), in.data(), static_cast<int>(in.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

}  // namespace

TEST_SUITE("util") {
  TEST_CASE("base64 of Man") {
    const auto man = bytes_of("Man");
    CHECK(util::base64_encode(man) == "TWFu");
    CHECK(util::base64_encode(man) == openssl_base64(man));
  }

  TEST_CASE("base64 padding agrees with OpenSSL") {
    for (std::string s : {"", "M", "Ma", "Man", "Many", "hello world", "\xff\xfe\x00\x01"}) {
      const auto b = bytes_of(s);
      CHECK(util::base64_encode(b) == openssl_base64(b));
      CHECK(util::base64_decode(util::base64_encode(b)) == b);
    }
  }

  TEST_CASE("base64 rejects junk") {
    CHECK_THROWS_AS(util::base64_decode("TW!u"), Error);
    CHECK_THROWS_AS(util::base64_decode("TWF"), Error);
  }

  TEST_CASE("sha256 of abc") {
    CHECK(util::to_hex(util::sha256(bytes_of("abc"))) ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(util::to_hex(util::sha256({})) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  }

  TEST_CASE("title case") {
    CHECK(util::title_case("women's v-neck") == "Women's V-Neck");
    CHECK(util::title_case("super-kid mohair") == "Super-Kid Mohair");
    CHECK(util::title_case("EARTHY greens") == "Earthy Greens");
    CHECK(util::title_case("a/w (knit)") == "A/W (Knit)");
  }

  TEST_CASE("string helpers") {
    CHECK(util::trim("  a b \n") == "a b");
    CHECK(util::collapse_whitespace(" a \t\n b  ") == "a b");
    CHECK(util::iequals("V-Neck", "v-neck"));
    CHECK(util::split("a,,b", ',') == std::vector<std::string>{"a", "", "b"});
    CHECK(util::join({"a", "b"}, ", ") == "a, b");
  }
}
