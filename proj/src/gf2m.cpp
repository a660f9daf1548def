#include "zkec/gf2m.hpp"

#include <algorithm>
#include <bit>

#include <immintrin.h>

#include "zkec/errors.hpp"

namespace zkec {

namespace {

using Wide = std::array<std::uint64_t, 2 * kMaxFieldLimbs>;

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// XOR `w` into `c` with bit 0 of `w` landing at position `pos`. Negative
// positions shift right; callers guarantee no set bit falls below zero.
template <std::size_t N>
inline void xor_at(std::array<std::uint64_t, N>& c, std::uint64_t w, long pos) {
  if (pos < 0) {
    c[0] ^= w >> static_cast<unsigned>(-pos);
    return;
  }
  const auto q = static_cast<std::size_t>(pos / 64);
  const auto r = static_cast<unsigned>(pos % 64);
  c[q] ^= w << r;
  if (r != 0 && q + 1 < N) c[q + 1] ^= w >> (64 - r);
}

void reduce(Wide& c, const FieldParams& p) {
  const unsigned m = p.degree();
  const std::size_t base = m / 64;
  const unsigned shift = m % 64;
  const std::uint64_t high_mask = shift == 0 ? ~0ULL : ~((1ULL << shift) - 1);
  for (std::size_t i = 2 * p.limbs(); i-- > base;) {
    for (;;) {
      std::uint64_t w = c[i];
      if (i == base) w &= high_mask;
      if (w == 0) break;
      c[i] ^= w;
      const long origin = static_cast<long>(64 * i) - static_cast<long>(m);
      for (unsigned e : p.tail()) xor_at(c, w, origin + static_cast<long>(e));
    }
  }
}

int degree_of(const Limbs& v) {
  for (std::size_t i = kMaxFieldLimbs; i-- > 0;) {
    if (v[i] != 0) return static_cast<int>(64 * i + 63 - std::countl_zero(v[i]));
  }
  return -1;
}

void xor_shifted(Limbs& dst, const Limbs& src, unsigned j) {
  const std::size_t q = j / 64;
  const unsigned r = j % 64;
  for (std::size_t i = kMaxFieldLimbs; i-- > q;) {
    std::uint64_t w = src[i - q] << r;
    if (r != 0 && i - q >= 1) w |= src[i - q - 1] >> (64 - r);
    dst[i] ^= w;
  }
}

__attribute__((target("pclmul,sse2"))) void clmul64_hw(std::uint64_t a, std::uint64_t b,
                                                         std::uint64_t& lo, std::uint64_t& hi) {
  const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
  const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
  const __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
  lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
  hi = static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)));
}

const bool kHavePclmul = __builtin_cpu_supports("pclmul");

// Spreads the 32 bits of `x` into the even bit positions of a 64-bit word.
inline std::uint64_t spread32(std::uint64_t x) {
  x &= 0xFFFFFFFFULL;
  x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
  x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
  x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  x = (x | (x << 2)) & 0x3333333333333333ULL;
  x = (x | (x << 1)) & 0x5555555555555555ULL;
  return x;
}

}  // namespace

namespace detail {

void clmul64_portable(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  __extension__ using U128 = unsigned __int128;
  U128 table[16];
  table[0] = 0;
  table[1] = a;
  for (int i = 2; i < 16; i += 2) {
    table[i] = table[i / 2] << 1;
    table[i + 1] = table[i] ^ a;
  }
  U128 acc = 0;
  for (int nib = 15; nib >= 0; --nib) {
    acc = (acc << 4) ^ table[(b >> (4 * nib)) & 0xF];
  }
  lo = static_cast<std::uint64_t>(acc);
  hi = static_cast<std::uint64_t>(acc >> 64);
}

void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  if (kHavePclmul) {
    clmul64_hw(a, b, lo, hi);
  } else {
    clmul64_portable(a, b, lo, hi);
  }
}

}  // namespace detail

FieldParams::FieldParams(unsigned m, std::vector<unsigned> exponents)
    : m_(m), limbs_((m + 63) / 64), exponents_(std::move(exponents)) {
  if (m_ < 2 || m_ > kMaxFieldDegree) {
    throw ParameterError("field degree must lie in [2, 255]");
  }
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
  if (std::adjacent_find(exponents_.begin(), exponents_.end()) != exponents_.end()) {
    throw ParameterError("duplicate exponent in reduction polynomial");
  }
  if (exponents_.empty() || exponents_.front() != m_ || exponents_.back() != 0) {
    throw ParameterError("reduction polynomial must have degree m and a constant term");
  }
  for (unsigned e : exponents_) {
    poly_[e / 64] |= 1ULL << (e % 64);
    if (e != m_) tail_.push_back(e);
  }
}

const FieldParams& FieldParams::b163() {
  static const FieldParams params(163, {163, 7, 6, 3, 0});
  return params;
}

FieldElement FieldElement::one(const FieldParams& params) { return from_u64(params, 1); }

FieldElement FieldElement::from_u64(const FieldParams& params, std::uint64_t bits) {
  Limbs l{};
  l[0] = bits;
  return from_limbs(params, l);
}

FieldElement FieldElement::from_limbs(const FieldParams& params, const Limbs& limbs) {
  if (degree_of(limbs) >= static_cast<int>(params.degree())) {
    throw ParameterError("value is not reduced below x^m");
  }
  FieldElement e(params);
  e.v_ = limbs;
  return e;
}

FieldElement FieldElement::from_bytes(const FieldParams& params,
                                      std::span<const std::uint8_t> bytes) {
  if (bytes.size() != params.byte_length()) {
    throw DecodeError("field element: expected " + std::to_string(params.byte_length()) +
                      " bytes, got " + std::to_string(bytes.size()));
  }
  Limbs l{};
  const std::size_t n = bytes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit_pos = 8 * (n - 1 - i);
    l[bit_pos / 64] |= static_cast<std::uint64_t>(bytes[i]) << (bit_pos % 64);
  }
  if (degree_of(l) >= static_cast<int>(params.degree())) {
    throw DecodeError("field element: nonzero pad bits");
  }
  FieldElement e(params);
  e.v_ = l;
  return e;
}

FieldElement FieldElement::from_hex(const FieldParams& params, std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  Limbs l{};
  std::size_t bit_pos = 0;
  for (std::size_t i = hex.size(); i-- > 0;) {
    const int v = hex_value(hex[i]);
    if (v < 0) throw ParameterError("invalid hex digit");
    if (v != 0) {
      if (bit_pos >= 64 * kMaxFieldLimbs) throw ParameterError("hex value too large");
      l[bit_pos / 64] |= static_cast<std::uint64_t>(v) << (bit_pos % 64);
    }
    bit_pos += 4;
  }
  return from_limbs(params, l);
}

void FieldElement::write_bytes(std::span<std::uint8_t> out) const {
  const std::size_t n = params_->byte_length();
  if (out.size() != n) throw ParameterError("field element: output span has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit_pos = 8 * (n - 1 - i);
    out[i] = static_cast<std::uint8_t>(v_[bit_pos / 64] >> (bit_pos % 64));
  }
}

std::vector<std::uint8_t> FieldElement::to_bytes() const {
  std::vector<std::uint8_t> out(params_->byte_length());
  write_bytes(out);
  return out;
}

std::string FieldElement::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : to_bytes()) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

bool FieldElement::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::uint64_t w) { return w == 0; });
}

bool FieldElement::is_one() const {
  return v_[0] == 1 && std::all_of(v_.begin() + 1, v_.end(), [](std::uint64_t w) { return w == 0; });
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (params_ != o.params_ && !(*params_ == *o.params_)) {
    throw ParameterError("field elements belong to different fields");
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < kMaxFieldLimbs; ++i) v_[i] ^= o.v_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const std::size_t n = params_->limbs();
  Wide c{};
  for (std::size_t i = 0; i < n; ++i) {
    if (v_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t lo = 0;
      std::uint64_t hi = 0;
      detail::clmul64(v_[i], o.v_[j], lo, hi);
      c[i + j] ^= lo;
      c[i + j + 1] ^= hi;
    }
  }
  reduce(c, *params_);
  std::copy_n(c.begin(), kMaxFieldLimbs, v_.begin());
  return *this;
}

FieldElement FieldElement::square() const {
  Wide c{};
  for (std::size_t i = 0; i < params_->limbs(); ++i) {
    c[2 * i] = spread32(v_[i]);
    c[2 * i + 1] = spread32(v_[i] >> 32);
  }
  reduce(c, *params_);
  FieldElement r(*params_);
  std::copy_n(c.begin(), kMaxFieldLimbs, r.v_.begin());
  return r;
}

// Binary polynomial extended Euclid: invariants a*g1 = u, a*g2 = v (mod f).
FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  Limbs u = v_;
  Limbs v = params_->poly();
  Limbs g1{};
  Limbs g2{};
  g1[0] = 1;
  int du = degree_of(u);
  int dv = degree_of(v);
  while (du != 0) {
    int j = du - dv;
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      std::swap(du, dv);
      j = -j;
    }
    xor_shifted(u, v, static_cast<unsigned>(j));
    xor_shifted(g1, g2, static_cast<unsigned>(j));
    du = degree_of(u);
    if (du < 0) throw ParameterError("element has no inverse: reduction polynomial is reducible");
  }
  FieldElement r(*params_);
  r.v_ = g1;
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.v_ == b.v_ && (a.params_ == b.params_ || *a.params_ == *b.params_);
}

}  // namespace zkec
