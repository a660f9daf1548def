#pragma once

// Arithmetic in GF(2^m) = GF(2)[x] / f(x).
//
// NOTE: nothing here runs in constant time. Branches and table lookups
// depend on secret data. Do not use this code where timing side channels
// matter.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zkec {

inline constexpr std::size_t kMaxFieldLimbs = 4;
inline constexpr unsigned kMaxFieldDegree = 255;

using Limbs = std::array<std::uint64_t, kMaxFieldLimbs>;

/// Reduction polynomial for GF(2^m), given by the exponents of its set bits.
class FieldParams {
 public:
  /// `exponents` must contain m and 0; every other entry lies in (0, m).
  /// Throws ParameterError otherwise, or when m is outside [2, 255].
  FieldParams(unsigned m, std::vector<unsigned> exponents);

  /// x^163 + x^7 + x^6 + x^3 + 1
  static const FieldParams& b163();

  unsigned degree() const { return m_; }
  std::size_t limbs() const { return limbs_; }
  std::size_t byte_length() const { return (m_ + 7) / 8; }
  const std::vector<unsigned>& exponents() const { return exponents_; }

  /// Exponents strictly below m, used by reduction.
  const std::vector<unsigned>& tail() const { return tail_; }
  const Limbs& poly() const { return poly_; }

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.m_ == b.m_ && a.exponents_ == b.exponents_;
  }

 private:
  unsigned m_;
  std::size_t limbs_;
  std::vector<unsigned> exponents_;  // sorted descending
  std::vector<unsigned> tail_;
  Limbs poly_{};
};

/// Fully reduced element of GF(2^m). Bit i holds the coefficient of x^i.
///
/// Elements keep a pointer to their FieldParams; the params object must
/// outlive every element built from it. Combining elements of different
/// fields throws ParameterError.
class FieldElement {
 public:
  explicit FieldElement(const FieldParams& params) : params_(&params) {}

  static FieldElement zero(const FieldParams& params) { return FieldElement(params); }
  static FieldElement one(const FieldParams& params);

  /// Builds an element from the low bits of `bits` (must already be < 2^m).
  static FieldElement from_u64(const FieldParams& params, std::uint64_t bits);
  static FieldElement from_limbs(const FieldParams& params, const Limbs& limbs);

  /// Big-endian, exactly byte_length() bytes, pad bits zero.
  static FieldElement from_bytes(const FieldParams& params, std::span<const std::uint8_t> bytes);
  /// Hex string with optional 0x prefix; value must be < 2^m.
  static FieldElement from_hex(const FieldParams& params, std::string_view hex);

  std::vector<std::uint8_t> to_bytes() const;
  void write_bytes(std::span<std::uint8_t> out) const;
  std::string to_hex() const;

  const FieldParams& params() const { return *params_; }
  const Limbs& limbs() const { return v_; }

  bool is_zero() const;
  bool is_one() const;
  bool bit(unsigned i) const { return (v_[i / 64] >> (i % 64)) & 1U; }

  FieldElement square() const;
  /// Throws DivisionByZero for zero.
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same_field(const FieldElement& o) const;

  const FieldParams* params_;
  Limbs v_{};
};

namespace detail {

/// Carry-less 64x64 -> 128 multiply. Picks PCLMULQDQ when the CPU has it.
void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi);
/// Portable reference, kept for testing the hardware path.
void clmul64_portable(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi);

}  // namespace detail

}  // namespace zkec
