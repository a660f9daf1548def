#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zkec {

using Digest = std::array<std::uint8_t, 20>;

/// Streaming SHA-1 (FIPS 180-4). Kept because the protocols were specified
/// with it; SHA-1 is not collision resistant.
class Sha1 {
 public:
  Sha1() { reset(); }

  void reset();
  void update(std::span<const std::uint8_t> data);
  void update(std::string_view text) {
    update(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
  Digest finish();

 private:
  void compress(const std::uint8_t* block);

  std::array<std::uint32_t, 5> h_{};
  std::array<std::uint8_t, 64> buf_{};
  std::size_t buf_len_ = 0;
  std::uint64_t total_ = 0;
};

Digest sha1(std::span<const std::uint8_t> data);
Digest sha1(std::string_view text);

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Inverse of to_hex; either case. Throws DecodeError on odd length or a
/// non-hex character.
std::vector<std::uint8_t> bytes_from_hex(std::string_view hex);

}  // namespace zkec
