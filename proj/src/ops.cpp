#include "zkec/ops.hpp"

#include "zkec/challenge.hpp"
#include "zkec/rng.hpp"

namespace zkec {

Scalar MeteredOps::random(Rng& rng) {
  ledger_.add(OpKind::kKeygen);
  return Scalar::random(curve_.order(), rng);
}

Point MeteredOps::mul(const Scalar& k, const Point& p) {
  ledger_.add(OpKind::kPointMul);
  return curve_.mul(k, p);
}

Point MeteredOps::add(const Point& p, const Point& q) {
  ledger_.add(OpKind::kPointAdd);
  return curve_.add(p, q);
}

Point MeteredOps::sub(const Point& p, const Point& q) {
  ledger_.add(OpKind::kPointAdd);
  return curve_.sub(p, q);
}

Scalar MeteredOps::add(const Scalar& a, const Scalar& b) {
  ledger_.add(OpKind::kScalarAdd);
  return a + b;
}

Scalar MeteredOps::sub(const Scalar& a, const Scalar& b) {
  ledger_.add(OpKind::kScalarAdd);
  return a - b;
}

Scalar MeteredOps::mul(const Scalar& a, const Scalar& b) {
  ledger_.add(OpKind::kScalarMul);
  return a * b;
}

Scalar MeteredOps::hash(std::initializer_list<Point> points) {
  ledger_.add(OpKind::kHash);
  return challenge_from_points(curve_, points);
}

}  // namespace zkec
