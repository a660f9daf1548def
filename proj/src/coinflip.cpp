#include "zkec/coinflip.hpp"

#include "zkec/errors.hpp"
#include "zkec/rng.hpp"

namespace zkec {

CoinFlipProver::CoinFlipProver(const Curve& curve, const Statement& st, const Witness& w,
                               unsigned rounds)
    : CoinFlipProver(curve, st, std::optional<Witness>(w), rounds) {
  check_witness(curve, Protocol::kCoinFlip, st, w);
}

CoinFlipProver::CoinFlipProver(const Curve& curve, const Statement& st, std::optional<Witness> w,
                               unsigned rounds)
    : curve_(&curve), st_(st), w_(std::move(w)), rounds_(rounds) {
  if (rounds == 0) throw ParameterError("coin flip needs at least one round");
  validate_statement(curve, Protocol::kCoinFlip, st);
}

CoinFlipProver CoinFlipProver::cheater(const Curve& curve, const Statement& st, unsigned rounds) {
  return CoinFlipProver(curve, st, std::nullopt, rounds);
}

PointMsg CoinFlipProver::commit(Rng& rng) {
  if (step_ != Step::kCommit) throw ProtocolOrderError("coin flip: commit out of order");
  return commit_impl(MeteredOps(*curve_, ledger_).random(rng));
}

PointMsg CoinFlipProver::commit_with_nonce(const Scalar& r) {
  if (step_ != Step::kCommit) throw ProtocolOrderError("coin flip: commit out of order");
  return commit_impl(r);
}

PointMsg CoinFlipProver::commit_impl(const Scalar& r) {
  MeteredOps ops(*curve_, ledger_);
  Point a = ops.mul(r, curve_->generator());
  if (!w_) a = ops.sub(a, st_.b);
  r_ = r;
  step_ = Step::kRespond;
  return PointMsg{std::move(a)};
}

ScalarMsg CoinFlipProver::respond(const CoinMsg& coin, Rng* rng) {
  if (step_ != Step::kRespond || !r_) throw ProtocolOrderError("coin flip: no outstanding commitment");
  MeteredOps ops(*curve_, ledger_);
  Scalar v = *r_;
  if (!w_) {
    if (!coin.tails) {
      if (rng == nullptr) throw ParameterError("cheating prover needs an rng to guess");
      v = ops.random(*rng);
    }
  } else if (coin.tails) {
    v = ops.add(w_->x, *r_);
  }
  r_.reset();
  step_ = Step::kAwaitVerdict;
  return ScalarMsg{std::move(v)};
}

void CoinFlipProver::on_verdict(const FinalMsg& f) {
  if (step_ != Step::kAwaitVerdict) throw ProtocolOrderError("coin flip: unexpected verdict");
  ++rounds_done_;
  step_ = (!f.accept || rounds_done_ == rounds_) ? Step::kDone : Step::kCommit;
}

std::vector<Message> CoinFlipProver::start(Rng& rng) { return {commit(rng)}; }

std::vector<Message> CoinFlipProver::receive(const Message& msg, Rng& rng) {
  if (const auto* coin = std::get_if<CoinMsg>(&msg)) return {respond(*coin, &rng)};
  if (const auto* f = std::get_if<FinalMsg>(&msg)) {
    on_verdict(*f);
    if (step_ == Step::kCommit) return {commit(rng)};
    return {};
  }
  throw ProtocolOrderError("coin flip prover cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

CoinFlipVerifier::CoinFlipVerifier(const Curve& curve, const Statement& st, unsigned rounds)
    : curve_(&curve), st_(st), rounds_(rounds) {
  if (rounds == 0) throw ParameterError("coin flip needs at least one round");
  validate_statement(curve, Protocol::kCoinFlip, st);
}

CoinMsg CoinFlipVerifier::flip(const PointMsg& commitment, Rng& rng) {
  require_pending();
  if (step_ != Step::kAwaitCommit) throw ProtocolOrderError("coin flip: flip out of order");
  const auto s = scripted<CoinMsg>();
  tails_ = s ? s->tails : rng.next_bit();
  if (tails_) ++tails_seen_;
  a_ = commitment.a;
  step_ = Step::kAwaitResponse;
  return CoinMsg{tails_};
}

FinalMsg CoinFlipVerifier::check(const ScalarMsg& response) {
  require_pending();
  if (step_ != Step::kAwaitResponse || !a_) throw ProtocolOrderError("coin flip: check out of order");
  MeteredOps ops(*curve_, ledger_);
  const Point lhs = ops.mul(response.v, curve_->generator());
  const Point rhs = tails_ ? ops.add(*a_, st_.b) : *a_;
  a_.reset();
  step_ = Step::kAwaitCommit;
  if (lhs != rhs) return finish(false, tails_ ? RejectReason::kTailsCheck : RejectReason::kHeadsCheck);
  ++rounds_accepted_;
  if (rounds_accepted_ == rounds_) return finish(true, RejectReason::kNone);
  return FinalMsg{true};
}

std::vector<Message> CoinFlipVerifier::receive(const Message& msg, Rng& rng) {
  if (const auto* p = std::get_if<PointMsg>(&msg)) return {flip(*p, rng)};
  if (const auto* s = std::get_if<ScalarMsg>(&msg)) return {check(*s)};
  throw ProtocolOrderError("coin flip verifier cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

}  // namespace zkec
