#pragma once

// Binary elliptic curves y^2 + xy = x^3 + a x^2 + b over GF(2^m), affine
// coordinates, double-and-add scalar multiplication.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zkec/gf2m.hpp"
#include "zkec/scalar.hpp"

namespace zkec {

class Rng;

/// Affine point or the point at infinity. Coordinates of the infinity
/// point are zero and carry no meaning.
class Point {
 public:
  static Point infinity(const FieldParams& field) {
    return Point(FieldElement::zero(field), FieldElement::zero(field), true);
  }
  static Point affine(FieldElement x, FieldElement y) {
    return Point(std::move(x), std::move(y), false);
  }

  bool is_infinity() const { return inf_; }
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  Point(FieldElement x, FieldElement y, bool inf) : x_(std::move(x)), y_(std::move(y)), inf_(inf) {}

  FieldElement x_;
  FieldElement y_;
  bool inf_;
};

struct KeyPair;

/// Curve parameters plus the group law. Instances are immutable and
/// non-movable: points, field elements and scalars keep pointers into them.
class Curve {
 public:
  struct Spec {
    std::string name;
    unsigned m;
    std::vector<unsigned> reduction;
    std::string a_hex;
    std::string b_hex;
    std::string gx_hex;
    std::string gy_hex;
    std::string order_hex;
  };

  /// Validates b != 0, G on the curve and order * G = O; throws
  /// ValidationError / ParameterError otherwise.
  static std::shared_ptr<const Curve> create(const Spec& spec);

  Curve(const Curve&) = delete;
  Curve& operator=(const Curve&) = delete;

  const std::string& name() const { return name_; }
  const FieldParams& field() const { return field_; }
  const ScalarRing& order() const { return order_; }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const Point& generator() const { return g_; }
  Point infinity() const { return Point::infinity(field_); }

  /// Length of an encoded point: two field elements.
  std::size_t point_bytes() const { return 2 * field_.byte_length(); }

  bool contains(const Point& p) const;

  Point negate(const Point& p) const;
  /// Validates both inputs.
  Point add(const Point& p, const Point& q) const;
  Point sub(const Point& p, const Point& q) const { return add(p, negate(q)); }
  Point twice(const Point& p) const;

  Point mul(const Scalar& k, const Point& p) const;
  /// Raw multiplier, not reduced mod the order.
  Point mul(const UInt256& k, const Point& p) const;

  Scalar scalar(std::uint64_t v) const { return Scalar::from_u64(order_, v); }

  /// x || y, big-endian. Infinity encodes as all-zero bytes; (0, 0) is
  /// never on a curve with b != 0, so the zero pattern is unambiguous.
  std::vector<std::uint8_t> encode(const Point& p) const;
  void encode_into(const Point& p, std::span<std::uint8_t> out) const;
  /// Throws DecodeError on wrong length, ValidationError when off-curve.
  Point decode(std::span<const std::uint8_t> bytes) const;

 private:
  Curve(const Spec& spec);

  Point add_unchecked(const Point& p, const Point& q) const;
  Point twice_unchecked(const Point& p) const;
  void require_on_curve(const Point& p) const;

  std::string name_;
  FieldParams field_;
  ScalarRing order_;
  FieldElement a_;
  FieldElement b_;
  Point g_;
};

struct KeyPair {
  Scalar sk;
  Point pk;
};

/// sk uniform in [1, n-1], pk = sk * G.
KeyPair keygen(const Curve& curve, Rng& rng);

/// Named curve registry. "paper-b163" is the default curve:
/// y^2 + xy = x^3 + x^2 + 1 over GF(2^163) mod x^163 + x^7 + x^6 + x^3 + 1.
/// Throws ParameterError for unknown names.
const Curve& curve_by_name(std::string_view name);
const Curve& default_curve();
std::vector<std::string> curve_names();

inline constexpr std::string_view kDefaultCurveName = "paper-b163";

}  // namespace zkec
