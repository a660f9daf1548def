#include "zkec/simulator.hpp"

namespace zkec {

Transcript simulate_schnorr(const Curve& curve, const Statement& st, Rng& rng) {
  validate_statement(curve, Protocol::kSchnorr, st);
  const Scalar c = Scalar::random(curve.order(), rng);
  const Scalar m = Scalar::random(curve.order(), rng);
  const Point a = curve.sub(curve.mul(m, curve.generator()), curve.mul(c, st.b));
  Transcript t;
  t.add(Sender::kProver, PointMsg{a});
  t.add(Sender::kVerifier, ScalarMsg{c});
  t.add(Sender::kProver, ScalarMsg{m});
  t.add(Sender::kVerifier, FinalMsg{true});
  return t;
}

}  // namespace zkec
