#pragma once

#include <initializer_list>

#include "zkec/costmodel.hpp"
#include "zkec/curve.hpp"

namespace zkec {

class Rng;

/// Curve and scalar operations that tally themselves into a CostLedger,
/// so recorded counts always equal the work actually performed.
class MeteredOps {
 public:
  MeteredOps(const Curve& curve, CostLedger& ledger) : curve_(curve), ledger_(ledger) {}

  Scalar random(Rng& rng);
  Point mul(const Scalar& k, const Point& p);
  Point add(const Point& p, const Point& q);
  Point sub(const Point& p, const Point& q);
  Scalar add(const Scalar& a, const Scalar& b);
  Scalar sub(const Scalar& a, const Scalar& b);
  Scalar mul(const Scalar& a, const Scalar& b);
  Scalar hash(std::initializer_list<Point> points);

 private:
  const Curve& curve_;
  CostLedger& ledger_;
};

}  // namespace zkec
