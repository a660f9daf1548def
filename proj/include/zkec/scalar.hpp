#pragma once

// Integers modulo n, the order of the base point. Every protocol exponent
// (nonces, witnesses, challenges, responses) lives here.
//
// Not constant time.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zkec {

class Rng;

/// 256-bit unsigned integer, little-endian limbs. Raw multiplier for
/// scalar multiplication and the storage behind Scalar.
struct UInt256 {
  std::array<std::uint64_t, 4> limb{};

  static UInt256 from_u64(std::uint64_t v) { return UInt256{{v, 0, 0, 0}}; }
  static UInt256 from_hex(std::string_view hex);
  /// Big-endian bytes, at most 32.
  static UInt256 from_bytes(std::span<const std::uint8_t> bytes);

  bool is_zero() const { return (limb[0] | limb[1] | limb[2] | limb[3]) == 0; }
  bool bit(unsigned i) const { return (limb[i / 64] >> (i % 64)) & 1U; }
  /// Index of the highest set bit plus one; 0 for zero.
  unsigned bit_length() const;
  std::string to_hex() const;

  friend auto operator<=>(const UInt256& a, const UInt256& b) {
    for (std::size_t i = 4; i-- > 0;) {
      if (a.limb[i] != b.limb[i]) return a.limb[i] <=> b.limb[i];
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const UInt256&, const UInt256&) = default;
};

/// Z/nZ for an odd modulus n of at most 255 bits.
class ScalarRing {
 public:
  explicit ScalarRing(const UInt256& modulus);

  const UInt256& modulus() const { return n_; }
  unsigned bits() const { return bits_; }
  /// Canonical encoding length: ceil(bits/8). 21 for the default curve.
  std::size_t byte_length() const { return (bits_ + 7) / 8; }

  /// value mod n for an arbitrary-length big-endian byte string.
  UInt256 reduce_bytes(std::span<const std::uint8_t> bytes) const;

  friend bool operator==(const ScalarRing& a, const ScalarRing& b) { return a.n_ == b.n_; }

 private:
  UInt256 n_;
  unsigned bits_;
};

class Scalar {
 public:
  explicit Scalar(const ScalarRing& ring) : ring_(&ring) {}

  /// Reduces `v` mod n.
  static Scalar from_uint(const ScalarRing& ring, const UInt256& v);
  static Scalar from_u64(const ScalarRing& ring, std::uint64_t v) {
    return from_uint(ring, UInt256::from_u64(v));
  }
  /// Canonical form: exactly byte_length() big-endian bytes, value < n.
  static Scalar from_bytes(const ScalarRing& ring, std::span<const std::uint8_t> bytes);
  /// Any length; reduced mod n.
  static Scalar from_bytes_reduced(const ScalarRing& ring, std::span<const std::uint8_t> bytes);
  /// 20-byte SHA-1 digest read big-endian and reduced mod n. Throws
  /// ParameterError for other lengths.
  static Scalar from_digest(const ScalarRing& ring, std::span<const std::uint8_t> digest);
  /// Uniform in [1, n-1] by rejection sampling.
  static Scalar random(const ScalarRing& ring, Rng& rng);

  const ScalarRing& ring() const { return *ring_; }
  const UInt256& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  std::vector<std::uint8_t> to_bytes() const;
  void write_bytes(std::span<std::uint8_t> out) const;
  std::string to_hex() const;

  Scalar operator-() const;
  /// Multiplicative inverse by Fermat; requires n prime. Throws
  /// DivisionByZero for zero.
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.v_ == b.v_ && (a.ring_ == b.ring_ || *a.ring_ == *b.ring_);
  }

 private:
  void check_same_ring(const Scalar& o) const;

  const ScalarRing* ring_;
  UInt256 v_{};
};

}  // namespace zkec
