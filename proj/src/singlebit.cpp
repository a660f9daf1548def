#include "zkec/singlebit.hpp"

#include <utility>

#include "zkec/errors.hpp"

namespace zkec {

SingleBitProver::SingleBitProver(const Curve& curve, const Statement& st, const Witness& w)
    : SingleBitProver(curve, st, w, true) {}

SingleBitProver::SingleBitProver(const Curve& curve, const Statement& st, const Witness& w,
                                 bool checked)
    : curve_(&curve), st_(st), w_(w) {
  if (checked) {
    check_witness(curve, Protocol::kSingleBit, st, w);
  } else {
    validate_statement(curve, Protocol::kSingleBit, st);
    if (w.sign != 1 && w.sign != -1) throw InvalidWitness("sign must be +1 or -1");
  }
}

SingleBitProver SingleBitProver::unchecked(const Curve& curve, const Statement& st,
                                           const Witness& w) {
  return SingleBitProver(curve, st, w, false);
}

TwoPointMsg SingleBitProver::commit(Rng& rng) {
  if (step_ != Step::kCommit) throw ProtocolOrderError("single bit: commit out of order");
  MeteredOps ops(*curve_, ledger_);
  Scalar s = ops.random(rng);
  Scalar d = ops.random(rng);
  Scalar w = ops.random(rng);
  return commit_impl(Nonces{std::move(s), std::move(d), std::move(w)});
}

TwoPointMsg SingleBitProver::commit_with(const Scalar& s, const Scalar& d, const Scalar& w) {
  if (step_ != Step::kCommit) throw ProtocolOrderError("single bit: commit out of order");
  return commit_impl(Nonces{s, d, w});
}

TwoPointMsg SingleBitProver::commit_impl(Nonces n) {
  MeteredOps ops(*curve_, ledger_);
  const Point& g = curve_->generator();
  const Point sim = w_.sign == 1 ? ops.add(st_.b, *st_.h) : ops.sub(st_.b, *st_.h);
  Point a = ops.sub(ops.mul(n.s, g), ops.mul(n.d, sim));
  Point c = ops.mul(n.w, g);
  nonces_ = std::move(n);
  step_ = Step::kRespond;
  if (w_.sign == -1) std::swap(a, c);
  return TwoPointMsg{std::move(a), std::move(c)};
}

QuadScalarMsg SingleBitProver::respond(const ScalarMsg& challenge) {
  if (step_ != Step::kRespond || !nonces_) {
    throw ProtocolOrderError("single bit: no outstanding commitment");
  }
  MeteredOps ops(*curve_, ledger_);
  Nonces n = std::move(*nonces_);
  nonces_.reset();
  Scalar e = ops.sub(challenge.v, n.d);
  Scalar t = ops.add(n.w, ops.mul(w_.x, e));
  step_ = Step::kAwaitVerdict;
  if (w_.sign == -1) return QuadScalarMsg{std::move(e), std::move(n.d), std::move(t), std::move(n.s)};
  return QuadScalarMsg{std::move(n.d), std::move(e), std::move(n.s), std::move(t)};
}

void SingleBitProver::on_verdict(const FinalMsg&) {
  if (step_ != Step::kAwaitVerdict) throw ProtocolOrderError("single bit: unexpected verdict");
  step_ = Step::kDone;
}

std::vector<Message> SingleBitProver::receive(const Message& msg, Rng&) {
  if (const auto* c = std::get_if<ScalarMsg>(&msg)) return {respond(*c)};
  if (const auto* f = std::get_if<FinalMsg>(&msg)) {
    on_verdict(*f);
    return {};
  }
  throw ProtocolOrderError("single bit prover cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

SingleBitVerifier::SingleBitVerifier(const Curve& curve, const Statement& st)
    : curve_(&curve), st_(st) {
  validate_statement(curve, Protocol::kSingleBit, st);
}

ScalarMsg SingleBitVerifier::challenge(const TwoPointMsg& commitment, Rng& rng) {
  require_pending();
  if (ac_) throw ProtocolOrderError("single bit: commitment already received");
  ac_ = commitment;
  if (auto s = scripted<ScalarMsg>()) {
    c_ = s->v;
  } else {
    c_ = MeteredOps(*curve_, ledger_).random(rng);
  }
  return ScalarMsg{*c_};
}

FinalMsg SingleBitVerifier::check(const QuadScalarMsg& r) {
  require_pending();
  if (!ac_ || !c_) throw ProtocolOrderError("single bit: check before challenge");
  MeteredOps ops(*curve_, ledger_);
  const Point& g = curve_->generator();
  if (ops.add(r.e, r.d) != *c_) return finish(false, RejectReason::kChallengeSplit);
  const Point plus = ops.add(st_.b, *st_.h);
  const Point minus = ops.sub(st_.b, *st_.h);
  if (ops.mul(r.s, g) != ops.add(ac_->first, ops.mul(r.d, plus))) {
    return finish(false, RejectReason::kPlusBranch);
  }
  if (ops.mul(r.t, g) != ops.add(ac_->second, ops.mul(r.e, minus))) {
    return finish(false, RejectReason::kMinusBranch);
  }
  return finish(true, RejectReason::kNone);
}

std::vector<Message> SingleBitVerifier::receive(const Message& msg, Rng& rng) {
  if (const auto* ac = std::get_if<TwoPointMsg>(&msg)) return {challenge(*ac, rng)};
  if (const auto* q = std::get_if<QuadScalarMsg>(&msg)) return {check(*q)};
  throw ProtocolOrderError("single bit verifier cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

}  // namespace zkec
