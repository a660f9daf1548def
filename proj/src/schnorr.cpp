#include "zkec/schnorr.hpp"

#include "zkec/errors.hpp"

namespace zkec {

SchnorrProver::SchnorrProver(const Curve& curve, const Statement& st, const Witness& w)
    : curve_(&curve), st_(st), w_(w) {
  check_witness(curve, Protocol::kSchnorr, st, w);
}

PointMsg SchnorrProver::commit(Rng& rng) {
  if (step_ != Step::kCommit) throw ProtocolOrderError("schnorr: commit out of order");
  return commit_impl(MeteredOps(*curve_, ledger_).random(rng));
}

PointMsg SchnorrProver::commit_with_nonce(const Scalar& r) {
  if (step_ != Step::kCommit) throw ProtocolOrderError("schnorr: commit out of order");
  return commit_impl(r);
}

PointMsg SchnorrProver::commit_impl(const Scalar& r) {
  Point a = MeteredOps(*curve_, ledger_).mul(r, curve_->generator());
  r_ = r;
  step_ = Step::kRespond;
  return PointMsg{std::move(a)};
}

ScalarMsg SchnorrProver::respond(const ScalarMsg& challenge) {
  if (step_ != Step::kRespond || !r_) throw ProtocolOrderError("schnorr: no outstanding commitment");
  MeteredOps ops(*curve_, ledger_);
  Scalar m = ops.add(*r_, ops.mul(challenge.v, w_.x));
  r_.reset();
  step_ = Step::kAwaitVerdict;
  return ScalarMsg{std::move(m)};
}

void SchnorrProver::on_verdict(const FinalMsg&) {
  if (step_ != Step::kAwaitVerdict) throw ProtocolOrderError("schnorr: unexpected verdict");
  step_ = Step::kDone;
}

std::vector<Message> SchnorrProver::receive(const Message& msg, Rng&) {
  if (const auto* c = std::get_if<ScalarMsg>(&msg)) return {respond(*c)};
  if (const auto* f = std::get_if<FinalMsg>(&msg)) {
    on_verdict(*f);
    return {};
  }
  throw ProtocolOrderError("schnorr prover cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

SchnorrVerifier::SchnorrVerifier(const Curve& curve, const Statement& st, ChallengeMode mode)
    : curve_(&curve), st_(st), mode_(mode) {
  validate_statement(curve, Protocol::kSchnorr, st);
}

ScalarMsg SchnorrVerifier::challenge(const PointMsg& commitment, Rng& rng) {
  require_pending();
  if (a_) throw ProtocolOrderError("schnorr: challenge already issued");
  MeteredOps ops(*curve_, ledger_);
  if (auto s = scripted<ScalarMsg>()) {
    c_ = s->v;
    scripted_ = true;
  } else if (mode_ == ChallengeMode::kHash) {
    c_ = ops.hash({curve_->generator(), st_.b, commitment.a});
  } else {
    c_ = ops.random(rng);
  }
  a_ = commitment.a;
  return ScalarMsg{*c_};
}

FinalMsg SchnorrVerifier::check(const ScalarMsg& response) {
  require_pending();
  if (!a_ || !c_) throw ProtocolOrderError("schnorr: check before challenge");
  MeteredOps ops(*curve_, ledger_);
  const Scalar c =
      (mode_ == ChallengeMode::kHash && !scripted_) ? ops.hash({curve_->generator(), st_.b, *a_}) : *c_;
  const Point p = ops.sub(ops.mul(response.v, curve_->generator()), ops.mul(c, st_.b));
  return finish(p == *a_, RejectReason::kSchnorrCheck);
}

std::vector<Message> SchnorrVerifier::receive(const Message& msg, Rng& rng) {
  if (const auto* p = std::get_if<PointMsg>(&msg)) return {challenge(*p, rng)};
  if (const auto* s = std::get_if<ScalarMsg>(&msg)) return {check(*s)};
  throw ProtocolOrderError("schnorr verifier cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

}  // namespace zkec
