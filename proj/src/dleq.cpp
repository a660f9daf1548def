#include "zkec/dleq.hpp"

#include "zkec/challenge.hpp"
#include "zkec/errors.hpp"

namespace zkec {

namespace {

Protocol id(bool ni) { return ni ? Protocol::kDleqNi : Protocol::kDleq; }

}  // namespace

Scalar dleq_challenge(const Curve& curve, const Statement& st, const TwoPointMsg& kl) {
  return challenge_from_points(curve, {st.b, curve.generator(), *st.c, *st.h, kl.first, kl.second});
}

DleqProver::DleqProver(const Curve& curve, const Statement& st, const Witness& w, bool ni)
    : curve_(&curve), st_(st), w_(w), ni_(ni) {
  check_witness(curve, id(ni), st, w);
}

TwoPointMsg DleqProver::commit(Rng& rng) {
  if (step_ != Step::kCommit) throw ProtocolOrderError("dleq: commit out of order");
  return commit_impl(MeteredOps(*curve_, ledger_).random(rng));
}

TwoPointMsg DleqProver::commit_with_nonce(const Scalar& r) {
  if (step_ != Step::kCommit) throw ProtocolOrderError("dleq: commit out of order");
  return commit_impl(r);
}

TwoPointMsg DleqProver::commit_impl(const Scalar& r) {
  MeteredOps ops(*curve_, ledger_);
  TwoPointMsg kl{ops.mul(r, curve_->generator()), ops.mul(r, *st_.h)};
  r_ = r;
  kl_ = kl;
  step_ = Step::kRespond;
  return kl;
}

ScalarMsg DleqProver::respond(const ScalarMsg& challenge) {
  if (ni_) throw ProtocolOrderError("dleq: non-interactive prover takes no challenge");
  return respond_impl(challenge.v);
}

ScalarMsg DleqProver::respond_to_hash() {
  if (!ni_) throw ProtocolOrderError("dleq: interactive prover waits for a challenge");
  if (step_ != Step::kRespond || !kl_) throw ProtocolOrderError("dleq: no outstanding commitment");
  ledger_.add(OpKind::kHash);
  return respond_impl(dleq_challenge(*curve_, st_, *kl_));
}

ScalarMsg DleqProver::respond_impl(const Scalar& c) {
  if (step_ != Step::kRespond || !r_) throw ProtocolOrderError("dleq: no outstanding commitment");
  MeteredOps ops(*curve_, ledger_);
  Scalar m = ops.add(*r_, ops.mul(c, w_.x));
  r_.reset();
  step_ = Step::kAwaitVerdict;
  return ScalarMsg{std::move(m)};
}

void DleqProver::on_verdict(const FinalMsg&) {
  if (step_ != Step::kAwaitVerdict) throw ProtocolOrderError("dleq: unexpected verdict");
  step_ = Step::kDone;
}

std::vector<Message> DleqProver::start(Rng& rng) {
  TwoPointMsg kl = commit(rng);
  if (!ni_) return {std::move(kl)};
  ScalarMsg m = respond_to_hash();
  return {std::move(kl), std::move(m)};
}

std::vector<Message> DleqProver::receive(const Message& msg, Rng&) {
  if (const auto* c = std::get_if<ScalarMsg>(&msg)) return {respond(*c)};
  if (const auto* f = std::get_if<FinalMsg>(&msg)) {
    on_verdict(*f);
    return {};
  }
  throw ProtocolOrderError("dleq prover cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

DleqVerifier::DleqVerifier(const Curve& curve, const Statement& st, bool ni)
    : curve_(&curve), st_(st), ni_(ni) {
  validate_statement(curve, id(ni), st);
}

std::optional<ScalarMsg> DleqVerifier::on_commit(const TwoPointMsg& kl, Rng& rng) {
  require_pending();
  if (kl_) throw ProtocolOrderError("dleq: commitment already received");
  kl_ = kl;
  if (ni_) {
    ledger_.add(OpKind::kHash);
    c_ = dleq_challenge(*curve_, st_, kl);
    return std::nullopt;
  }
  if (auto s = scripted<ScalarMsg>()) {
    c_ = s->v;
  } else {
    c_ = MeteredOps(*curve_, ledger_).random(rng);
  }
  return ScalarMsg{*c_};
}

FinalMsg DleqVerifier::check(const ScalarMsg& response) {
  require_pending();
  if (!kl_ || !c_) throw ProtocolOrderError("dleq: check before commitment");
  MeteredOps ops(*curve_, ledger_);
  const Scalar& c = *c_;
  if (ops.mul(response.v, curve_->generator()) != ops.add(kl_->first, ops.mul(c, st_.b))) {
    return finish(false, RejectReason::kDleqG);
  }
  if (ops.mul(response.v, *st_.h) != ops.add(kl_->second, ops.mul(c, *st_.c))) {
    return finish(false, RejectReason::kDleqH);
  }
  return finish(true, RejectReason::kNone);
}

std::vector<Message> DleqVerifier::receive(const Message& msg, Rng& rng) {
  if (const auto* kl = std::get_if<TwoPointMsg>(&msg)) {
    auto c = on_commit(*kl, rng);
    if (c) return {std::move(*c)};
    return {};
  }
  if (const auto* s = std::get_if<ScalarMsg>(&msg)) return {check(*s)};
  throw ProtocolOrderError("dleq verifier cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

}  // namespace zkec
