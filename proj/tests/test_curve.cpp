#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "zkec/curve.hpp"
#include "zkec/errors.hpp"
#include "zkec/rng.hpp"

using zkec::Curve;
using zkec::FieldElement;
using zkec::Point;
using zkec::Scalar;
using zkec::UInt256;

namespace {

bool contains_point(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

}  // namespace

TEST_CASE("toy curve: enumeration and group axioms") {
  const auto curve = oracle::toy_curve();
  const Curve& c = *curve;
  const auto pts = oracle::enumerate_points(c);
  REQUIRE(pts.size() == oracle::kToyGroupSize);
  for (const auto& p : pts) CHECK(c.contains(p));

  for (const auto& p : pts) {
    CHECK(c.add(p, c.infinity()) == p);
    CHECK(c.add(c.infinity(), p) == p);
    const Point neg = p.is_infinity() ? p : Point::affine(p.x(), p.x() + p.y());
    CHECK(c.negate(p) == neg);
    CHECK(c.add(p, neg).is_infinity());
    CHECK(c.twice(p) == c.add(p, p));
    for (const auto& q : pts) {
      const Point s = c.add(p, q);
      CHECK(contains_point(pts, s));
      CHECK(s == c.add(q, p));
      for (const auto& r : pts) CHECK(c.add(s, r) == c.add(p, c.add(q, r)));
    }
  }
}

TEST_CASE("toy curve: scalar multiplication equals repeated addition") {
  const auto curve = oracle::toy_curve();
  const Curve& c = *curve;
  const auto pts = oracle::enumerate_points(c);
  for (const auto& p : pts) {
    Point acc = c.infinity();
    for (unsigned k = 0; k <= oracle::kToyGroupSize; ++k) {
      CHECK(c.mul(UInt256::from_u64(k), p) == acc);
      acc = c.add(acc, p);
    }
  }
  // ord(G) divides the point count.
  unsigned ord = 1;
  Point q = c.generator();
  while (!q.is_infinity()) {
    q = c.add(q, c.generator());
    ++ord;
  }
  CHECK(ord == 11);
  CHECK(oracle::kToyGroupSize % ord == 0);
  CHECK(c.mul(Scalar::from_u64(c.order(), 5), c.generator()) ==
        Point::affine(FieldElement::from_u64(c.field(), 10), FieldElement::from_u64(c.field(), 24)));
}

TEST_CASE("b163 curve parameters") {
  const Curve& c = zkec::default_curve();
  CHECK(c.name() == "paper-b163");
  CHECK(c.field().degree() == 163);
  CHECK(c.a().is_one());
  CHECK(c.b().is_one());
  const Point& g = c.generator();
  CHECK(g.x() == FieldElement::from_hex(c.field(), "2fe13c0537bbc11acaa07d793de4e6d5e5c94eee8"));
  CHECK(g.y() == FieldElement::from_hex(c.field(), "289070fb05d38ff58321f2e800536d538ccdaa3d9"));
  // y^2 + xy = x^3 + x^2 + 1 checked directly with the oracle multiply.
  const auto f = oracle::modulus_poly(c.field());
  const auto x = oracle::to_poly(g.x());
  const auto y = oracle::to_poly(g.y());
  auto lhs = oracle::mulmod(y, y, f);
  const auto xy = oracle::mulmod(x, y, f);
  const auto x2 = oracle::mulmod(x, x, f);
  auto rhs = oracle::mulmod(x2, x, f);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    lhs[i] ^= xy[i];
    rhs[i] ^= x2[i];
  }
  rhs[0] ^= 1;
  CHECK(lhs == rhs);

  CHECK(c.mul(c.order().modulus(), g).is_infinity());
  CHECK(c.mul(Scalar(c.order()), g).is_infinity());
  CHECK(c.mul(-c.scalar(1), g) == c.negate(g));
  CHECK(zkec::curve_by_name("paper-b163").generator() == g);
  CHECK_THROWS_AS(zkec::curve_by_name("nope"), zkec::ParameterError);
  CHECK(zkec::curve_names() == std::vector<std::string>{"paper-b163"});
}

TEST_CASE("b163 curve: k*G for small k equals repeated addition") {
  const Curve& c = zkec::default_curve();
  Point acc = c.infinity();
  for (unsigned k = 0; k <= 64; ++k) {
    CHECK(c.mul(c.scalar(k), c.generator()) == acc);
    acc = c.add(acc, c.generator());
  }
}

TEST_CASE("b163 curve: group properties on random points") {
  const Curve& c = zkec::default_curve();
  zkec::SeededRng rng(21);
  auto rand_scalar = [&] { return Scalar::random(c.order(), rng); };
  for (int i = 0; i < 200; ++i) {
    const Scalar j = rand_scalar(), k = rand_scalar(), l = rand_scalar();
    const Point p = c.mul(j, c.generator());
    const Point q = c.mul(k, c.generator());
    const Point r = c.mul(l, c.generator());
    CHECK(c.contains(p));
    CHECK(c.add(p, q) == c.add(q, p));
    CHECK(c.add(c.add(p, q), r) == c.add(p, c.add(q, r)));
    CHECK(c.mul(j + k, c.generator()) == c.add(p, q));
  }
}

TEST_CASE("off-curve inputs are rejected") {
  const Curve& c = zkec::default_curve();
  const Point bad = Point::affine(c.generator().x(), c.generator().x());
  REQUIRE_FALSE(c.contains(bad));
  CHECK_THROWS_AS(c.add(bad, c.generator()), zkec::ValidationError);
  CHECK_THROWS_AS(c.mul(c.scalar(3), bad), zkec::ValidationError);
}

TEST_CASE("keygen") {
  const Curve& c = zkec::default_curve();
  zkec::SeededRng rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto kp = zkec::keygen(c, rng);
    CHECK(c.contains(kp.pk));
    CHECK_FALSE(kp.pk.is_infinity());
    CHECK_FALSE(kp.sk.is_zero());
  }
  zkec::SeededRng r1(5), r2(5);
  CHECK(zkec::keygen(c, r1).pk == zkec::keygen(c, r2).pk);
  CHECK(c.mul(c.scalar(1), c.generator()) == c.generator());
}

TEST_CASE("point codec") {
  const Curve& c = zkec::default_curve();
  CHECK(c.point_bytes() == 42);
  CHECK(c.encode(c.generator()).size() == 42);
  CHECK(c.decode(std::vector<std::uint8_t>(42, 0)).is_infinity());
  CHECK(c.encode(c.infinity()) == std::vector<std::uint8_t>(42, 0));

  // (0, 1) lies on the curve (b = 1) and must not collide with O.
  const Point zero_one = Point::affine(FieldElement::zero(c.field()), FieldElement::one(c.field()));
  REQUIRE(c.contains(zero_one));
  CHECK(c.decode(c.encode(zero_one)) == zero_one);
  CHECK(c.twice(zero_one).is_infinity());

  zkec::SeededRng rng(23);
  for (int i = 0; i < 50; ++i) {
    const Point p = c.mul(Scalar::random(c.order(), rng), c.generator());
    CHECK(c.decode(c.encode(p)) == p);
  }
  auto bytes = c.encode(c.generator());
  bytes[41] ^= 1;
  CHECK_THROWS_AS(c.decode(bytes), zkec::ValidationError);
  CHECK_THROWS_AS(c.decode(std::span(bytes).first(41)), zkec::DecodeError);
}

TEST_CASE("curve construction is validated") {
  Curve::Spec spec{"toy", 5, {5, 2, 0}, "1", "1", "8", "17", "b"};
  CHECK_NOTHROW(Curve::create(spec));
  auto zero_b = spec;
  zero_b.b_hex = "0";
  CHECK_THROWS_AS(Curve::create(zero_b), zkec::ParameterError);
  auto off = spec;
  off.gy_hex = "1";
  CHECK_THROWS_AS(Curve::create(off), zkec::ValidationError);
  auto wrong_order = spec;
  wrong_order.order_hex = "d";
  CHECK_THROWS_AS(Curve::create(wrong_order), zkec::ValidationError);
}
