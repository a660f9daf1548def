#include <doctest.h>

#include <openssl/evp.h>

#include <random>
#include <string>

#include "zkec/errors.hpp"
#include "zkec/sha1.hpp"

namespace {

zkec::Digest openssl_sha1(std::span<const std::uint8_t> data) {
  zkec::Digest d{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), d.data(), &len, EVP_sha1(), nullptr);
  return d;
}

}  // namespace

TEST_CASE("sha1 reference vectors") {
  CHECK(zkec::to_hex(zkec::sha1("")) == "da39a3ee5e6b4b0d3255bfef95601890afd80709");
  CHECK(zkec::to_hex(zkec::sha1("abc")) == "a9993e364706816aba3e25717850c26c9cd0d89d");
  CHECK(zkec::to_hex(zkec::sha1("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq")) ==
        "84983e441c3bd26ebaae4aa1f95129e5e54670f1");
  CHECK(zkec::to_hex(zkec::sha1(std::string(1000000, 'a'))) ==
        "34aa973cd4c4daa4f61eeb2bdbad27316534016f");
}

TEST_CASE("sha1 agrees with OpenSSL on every length around block boundaries") {
  std::mt19937_64 gen(31);
  for (std::size_t len = 0; len <= 300; ++len) {
    std::vector<std::uint8_t> data(len);
    for (auto& b : data) b = static_cast<std::uint8_t>(gen());
    CHECK(zkec::sha1(data) == openssl_sha1(data));
  }
}

TEST_CASE("streaming sha1 equals one-shot for any split") {
  std::mt19937_64 gen(32);
  std::vector<std::uint8_t> data(250);
  for (auto& b : data) b = static_cast<std::uint8_t>(gen());
  const auto whole = zkec::sha1(data);
  CHECK(whole == openssl_sha1(data));
  for (std::size_t cut = 0; cut <= data.size(); cut += 7) {
    zkec::Sha1 h;
    h.update(std::span(data).first(cut));
    h.update(std::span(data).subspan(cut));
    CHECK(h.finish() == whole);
  }
  zkec::Sha1 h;
  h.update("ab");
  (void)h.finish();
  h.reset();
  h.update("abc");
  CHECK(zkec::to_hex(h.finish()) == "a9993e364706816aba3e25717850c26c9cd0d89d");
}

TEST_CASE("hex helpers") {
  const std::vector<std::uint8_t> v = {0x00, 0xab, 0xFF};
  CHECK(zkec::to_hex(v) == "00abff");
  CHECK(zkec::bytes_from_hex("00abff") == v);
  CHECK(zkec::bytes_from_hex("00ABFF") == v);
  CHECK_THROWS_AS(zkec::bytes_from_hex("abc"), zkec::DecodeError);
  CHECK_THROWS_AS(zkec::bytes_from_hex("zz"), zkec::DecodeError);
}
