#include "zkec/scalar.hpp"

#include <bit>

#include "zkec/errors.hpp"
#include "zkec/rng.hpp"

namespace zkec {

namespace {

using Wide = std::array<std::uint64_t, 8>;
__extension__ using U128 = unsigned __int128;

std::uint64_t add_into(UInt256& a, const UInt256& b) {
  U128 carry = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    carry += static_cast<U128>(a.limb[i]) + b.limb[i];
    a.limb[i] = static_cast<std::uint64_t>(carry);
    carry >>= 64;
  }
  return static_cast<std::uint64_t>(carry);
}

std::uint64_t sub_from(UInt256& a, const UInt256& b) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::uint64_t bi = b.limb[i] + borrow;
    const std::uint64_t next = (bi < borrow) || (a.limb[i] < bi) ? 1 : 0;
    a.limb[i] -= bi;
    borrow = next;
  }
  return borrow;
}

// r <- 2r + bit, then reduce once. Requires r < n and n < 2^255.
inline void shift_in(UInt256& r, unsigned bit, const UInt256& n) {
  r.limb[3] = (r.limb[3] << 1) | (r.limb[2] >> 63);
  r.limb[2] = (r.limb[2] << 1) | (r.limb[1] >> 63);
  r.limb[1] = (r.limb[1] << 1) | (r.limb[0] >> 63);
  r.limb[0] = (r.limb[0] << 1) | bit;
  if (r >= n) sub_from(r, n);
}

UInt256 mod_wide(const Wide& x, const UInt256& n) {
  UInt256 r{};
  std::size_t top = 8;
  while (top > 0 && x[top - 1] == 0) --top;
  if (top == 0) return r;
  const unsigned top_bits = 64 - std::countl_zero(x[top - 1]);
  for (std::size_t i = top; i-- > 0;) {
    const unsigned start = (i + 1 == top) ? top_bits : 64;
    for (unsigned b = start; b-- > 0;) shift_in(r, (x[i] >> b) & 1U, n);
  }
  return r;
}

}  // namespace

unsigned UInt256::bit_length() const {
  for (std::size_t i = 4; i-- > 0;) {
    if (limb[i] != 0) return static_cast<unsigned>(64 * i + 64 - std::countl_zero(limb[i]));
  }
  return 0;
}

UInt256 UInt256::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  UInt256 v{};
  unsigned pos = 0;
  for (std::size_t i = hex.size(); i-- > 0;) {
    const char c = hex[i];
    int d = -1;
    if (c >= '0' && c <= '9') d = c - '0';
    if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    if (d < 0) throw ParameterError("invalid hex digit");
    if (d != 0) {
      if (pos >= 256) throw ParameterError("hex value exceeds 256 bits");
      v.limb[pos / 64] |= static_cast<std::uint64_t>(d) << (pos % 64);
    }
    pos += 4;
  }
  return v;
}

UInt256 UInt256::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() > 32) throw ParameterError("more than 32 bytes for a 256-bit integer");
  UInt256 v{};
  const std::size_t n = bytes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pos = 8 * (n - 1 - i);
    v.limb[pos / 64] |= static_cast<std::uint64_t>(bytes[i]) << (pos % 64);
  }
  return v;
}

std::string UInt256::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::size_t i = 64; i-- > 0;) s.push_back(kDigits[(limb[i / 16] >> (4 * (i % 16))) & 0xF]);
  const auto first = s.find_first_not_of('0');
  return first == std::string::npos ? "0" : s.substr(first);
}

ScalarRing::ScalarRing(const UInt256& modulus) : n_(modulus), bits_(modulus.bit_length()) {
  if (bits_ < 2 || bits_ > 255) throw ParameterError("scalar modulus must have 2..255 bits");
}

UInt256 ScalarRing::reduce_bytes(std::span<const std::uint8_t> bytes) const {
  UInt256 r{};
  for (std::uint8_t byte : bytes) {
    for (int b = 7; b >= 0; --b) shift_in(r, (byte >> b) & 1U, n_);
  }
  return r;
}

Scalar Scalar::from_uint(const ScalarRing& ring, const UInt256& v) {
  Scalar s(ring);
  if (v < ring.modulus()) {
    s.v_ = v;
  } else {
    Wide w{};
    std::copy(v.limb.begin(), v.limb.end(), w.begin());
    s.v_ = mod_wide(w, ring.modulus());
  }
  return s;
}

Scalar Scalar::from_bytes(const ScalarRing& ring, std::span<const std::uint8_t> bytes) {
  if (bytes.size() != ring.byte_length()) {
    throw DecodeError("scalar: expected " + std::to_string(ring.byte_length()) + " bytes, got " +
                      std::to_string(bytes.size()));
  }
  Scalar s(ring);
  s.v_ = UInt256::from_bytes(bytes);
  if (s.v_ >= ring.modulus()) throw DecodeError("scalar: value not below the modulus");
  return s;
}

Scalar Scalar::from_bytes_reduced(const ScalarRing& ring, std::span<const std::uint8_t> bytes) {
  Scalar s(ring);
  s.v_ = ring.reduce_bytes(bytes);
  return s;
}

Scalar Scalar::from_digest(const ScalarRing& ring, std::span<const std::uint8_t> digest) {
  if (digest.size() != 20) throw ParameterError("digest must be 20 bytes");
  return from_bytes_reduced(ring, digest);
}

Scalar Scalar::random(const ScalarRing& ring, Rng& rng) {
  std::array<std::uint8_t, 32> buf{};
  const std::size_t len = ring.byte_length();
  const unsigned excess = static_cast<unsigned>(8 * len - ring.bits());
  const std::uint8_t top_mask = static_cast<std::uint8_t>(0xFF >> excess);
  for (;;) {
    std::span<std::uint8_t> bytes(buf.data(), len);
    rng.fill(bytes);
    bytes[0] &= top_mask;
    UInt256 v = UInt256::from_bytes(bytes);
    if (!v.is_zero() && v < ring.modulus()) {
      Scalar s(ring);
      s.v_ = v;
      return s;
    }
  }
}

void Scalar::write_bytes(std::span<std::uint8_t> out) const {
  const std::size_t n = ring_->byte_length();
  if (out.size() != n) throw ParameterError("scalar: output span has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t pos = 8 * (n - 1 - i);
    out[i] = static_cast<std::uint8_t>(v_.limb[pos / 64] >> (pos % 64));
  }
}

std::vector<std::uint8_t> Scalar::to_bytes() const {
  std::vector<std::uint8_t> out(ring_->byte_length());
  write_bytes(out);
  return out;
}

std::string Scalar::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : to_bytes()) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

void Scalar::check_same_ring(const Scalar& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
    throw ParameterError("scalars belong to different rings");
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*ring_);
  if (!v_.is_zero()) {
    r.v_ = ring_->modulus();
    sub_from(r.v_, v_);
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_same_ring(b);
  Scalar r = a;
  add_into(r.v_, b.v_);
  if (r.v_ >= a.ring_->modulus()) sub_from(r.v_, a.ring_->modulus());
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  a.check_same_ring(b);
  Scalar r = a;
  if (sub_from(r.v_, b.v_) != 0) add_into(r.v_, a.ring_->modulus());
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same_ring(b);
  Wide w{};
  for (std::size_t i = 0; i < 4; ++i) {
    U128 carry = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      carry += static_cast<U128>(a.v_.limb[i]) * b.v_.limb[j] + w[i + j];
      w[i + j] = static_cast<std::uint64_t>(carry);
      carry >>= 64;
    }
    w[i + 4] = static_cast<std::uint64_t>(carry);
  }
  Scalar r(*a.ring_);
  r.v_ = mod_wide(w, a.ring_->modulus());
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  UInt256 e = ring_->modulus();
  sub_from(e, UInt256::from_u64(2));
  Scalar result = from_u64(*ring_, 1);
  for (unsigned i = e.bit_length(); i-- > 0;) {
    result = result * result;
    if (e.bit(i)) result = result * *this;
  }
  return result;
}

}  // namespace zkec
