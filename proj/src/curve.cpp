#include "zkec/curve.hpp"

#include <algorithm>
#include <map>

#include "zkec/errors.hpp"
#include "zkec/rng.hpp"

namespace zkec {

namespace {

FieldElement parse_fe(const FieldParams& f, const std::string& hex) {
  return FieldElement::from_hex(f, hex);
}

const Curve::Spec& b163_spec() {
  static const Curve::Spec spec{
      std::string(kDefaultCurveName),
      163,
      {163, 7, 6, 3, 0},
      "1",
      "1",
      "2fe13c0537bbc11acaa07d793de4e6d5e5c94eee8",
      "289070fb05d38ff58321f2e800536d538ccdaa3d9",
      "04000000000000000000020108a2e0cc0d99f8a5ef",
  };
  return spec;
}

}  // namespace

Curve::Curve(const Spec& spec)
    : name_(spec.name),
      field_(spec.m, spec.reduction),
      order_(UInt256::from_hex(spec.order_hex)),
      a_(parse_fe(field_, spec.a_hex)),
      b_(parse_fe(field_, spec.b_hex)),
      g_(Point::affine(parse_fe(field_, spec.gx_hex), parse_fe(field_, spec.gy_hex))) {}

std::shared_ptr<const Curve> Curve::create(const Spec& spec) {
  std::shared_ptr<const Curve> curve(new Curve(spec));
  if (curve->b_.is_zero()) throw ParameterError("curve coefficient b must be nonzero");
  if (!curve->contains(curve->g_)) throw ValidationError("base point is not on the curve");
  if (!curve->mul(curve->order_.modulus(), curve->g_).is_infinity()) {
    throw ValidationError("order * G is not the point at infinity");
  }
  return curve;
}

bool Curve::contains(const Point& p) const {
  if (p.is_infinity()) return true;
  const FieldElement& x = p.x();
  const FieldElement& y = p.y();
  const FieldElement x2 = x.square();
  const FieldElement lhs = y.square() + x * y;
  const FieldElement rhs = x2 * x + a_ * x2 + b_;
  return lhs == rhs;
}

void Curve::require_on_curve(const Point& p) const {
  if (!contains(p)) throw ValidationError("point is not on the curve");
}

Point Curve::negate(const Point& p) const {
  if (p.is_infinity()) return p;
  return Point::affine(p.x(), p.x() + p.y());
}

Point Curve::twice_unchecked(const Point& p) const {
  if (p.is_infinity() || p.x().is_zero()) return infinity();
  const FieldElement& x1 = p.x();
  const FieldElement lambda = x1 + p.y() / x1;
  const FieldElement x3 = lambda.square() + lambda + a_;
  const FieldElement y3 = x1.square() + (lambda + FieldElement::one(field_)) * x3;
  return Point::affine(x3, y3);
}

Point Curve::add_unchecked(const Point& p, const Point& q) const {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.x() == q.x()) {
    if (p.y() == q.y()) return twice_unchecked(p);
    return infinity();  // q = -p
  }
  const FieldElement dx = p.x() + q.x();
  const FieldElement lambda = (p.y() + q.y()) / dx;
  const FieldElement x3 = lambda.square() + lambda + dx + a_;
  const FieldElement y3 = lambda * (p.x() + x3) + x3 + p.y();
  return Point::affine(x3, y3);
}

Point Curve::add(const Point& p, const Point& q) const {
  require_on_curve(p);
  require_on_curve(q);
  return add_unchecked(p, q);
}

Point Curve::twice(const Point& p) const {
  require_on_curve(p);
  return twice_unchecked(p);
}

Point Curve::mul(const UInt256& k, const Point& p) const {
  require_on_curve(p);
  Point acc = infinity();
  for (unsigned i = k.bit_length(); i-- > 0;) {
    acc = twice_unchecked(acc);
    if (k.bit(i)) acc = add_unchecked(acc, p);
  }
  return acc;
}

Point Curve::mul(const Scalar& k, const Point& p) const {
  if (!(k.ring() == order_)) throw ParameterError("scalar belongs to a different group order");
  return mul(k.value(), p);
}

void Curve::encode_into(const Point& p, std::span<std::uint8_t> out) const {
  const std::size_t half = field_.byte_length();
  if (out.size() != 2 * half) throw ParameterError("point: output span has wrong size");
  if (p.is_infinity()) {
    std::fill(out.begin(), out.end(), std::uint8_t{0});
    return;
  }
  p.x().write_bytes(out.first(half));
  p.y().write_bytes(out.subspan(half));
}

std::vector<std::uint8_t> Curve::encode(const Point& p) const {
  std::vector<std::uint8_t> out(point_bytes());
  encode_into(p, out);
  return out;
}

Point Curve::decode(std::span<const std::uint8_t> bytes) const {
  const std::size_t half = field_.byte_length();
  if (bytes.size() != 2 * half) {
    throw DecodeError("point: expected " + std::to_string(2 * half) + " bytes, got " +
                      std::to_string(bytes.size()));
  }
  if (std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; })) {
    return infinity();
  }
  Point p = Point::affine(FieldElement::from_bytes(field_, bytes.first(half)),
                          FieldElement::from_bytes(field_, bytes.subspan(half)));
  require_on_curve(p);
  return p;
}

KeyPair keygen(const Curve& curve, Rng& rng) {
  Scalar sk = Scalar::random(curve.order(), rng);
  Point pk = curve.mul(sk, curve.generator());
  return KeyPair{std::move(sk), std::move(pk)};
}

const Curve& curve_by_name(std::string_view name) {
  static const std::map<std::string, std::shared_ptr<const Curve>, std::less<>> registry = [] {
    std::map<std::string, std::shared_ptr<const Curve>, std::less<>> r;
    auto b163 = Curve::create(b163_spec());
    r.emplace(std::string(kDefaultCurveName), b163);
    return r;
  }();
  auto it = registry.find(name);
  if (it == registry.end()) throw ParameterError("unknown curve: " + std::string(name));
  return *it->second;
}

const Curve& default_curve() { return curve_by_name(kDefaultCurveName); }

std::vector<std::string> curve_names() { return {std::string(kDefaultCurveName)}; }

}  // namespace zkec
