#include "zkec/signature.hpp"

#include "zkec/errors.hpp"

namespace zkec {

SignatureMsg schnorr_sign(const Curve& curve, const Statement& st, const Witness& w, Rng& rng,
                          CostLedger* ledger) {
  CostLedger scratch;
  CostLedger& l = ledger != nullptr ? *ledger : scratch;
  check_witness(curve, Protocol::kSignature, st, w);
  const Scalar r = MeteredOps(curve, l).random(rng);
  return schnorr_sign_with_nonce(curve, st, w, r, &l);
}

SignatureMsg schnorr_sign_with_nonce(const Curve& curve, const Statement& st, const Witness& w,
                                     const Scalar& r, CostLedger* ledger) {
  CostLedger scratch;
  MeteredOps ops(curve, ledger != nullptr ? *ledger : scratch);
  check_witness(curve, Protocol::kSignature, st, w);
  const Point& p = *st.p;
  Point xp = ops.mul(w.x, p);
  Point rp = ops.mul(r, p);
  Point rg = ops.mul(r, curve.generator());
  const Scalar c = ops.hash({xp, rp, rg});
  Scalar s = ops.add(r, ops.mul(c, w.x));
  return SignatureMsg{std::move(s), std::move(xp), std::move(rp), std::move(rg)};
}

Verdict schnorr_verify_signature(const Curve& curve, const Statement& st, const SignatureMsg& sig,
                                 CostLedger* ledger) {
  validate_statement(curve, Protocol::kSignature, st);
  for (const Point* q : {&sig.xp, &sig.rp, &sig.rg}) {
    if (!curve.contains(*q)) return Verdict{false, RejectReason::kMalformed};
  }
  CostLedger scratch;
  MeteredOps ops(curve, ledger != nullptr ? *ledger : scratch);
  const Scalar c = ops.hash({sig.xp, sig.rp, sig.rg});
  if (ops.mul(sig.s, curve.generator()) != ops.add(sig.rg, ops.mul(c, st.b))) {
    return Verdict{false, RejectReason::kSignatureG};
  }
  if (ops.mul(sig.s, *st.p) != ops.add(sig.rp, ops.mul(c, sig.xp))) {
    return Verdict{false, RejectReason::kSignatureP};
  }
  return Verdict{true, RejectReason::kNone};
}

Verdict schnorr_verify_signature(const Curve& curve, const Statement& st,
                                 std::span<const std::uint8_t> encoded) {
  try {
    const Message msg = decode(curve, encoded);
    const auto* sig = std::get_if<SignatureMsg>(&msg);
    if (sig == nullptr) return Verdict{false, RejectReason::kMalformed};
    return schnorr_verify_signature(curve, st, *sig);
  } catch (const DecodeError&) {
    return Verdict{false, RejectReason::kMalformed};
  } catch (const ValidationError&) {
    return Verdict{false, RejectReason::kMalformed};
  }
}

SignatureProver::SignatureProver(const Curve& curve, const Statement& st, const Witness& w)
    : curve_(&curve), st_(st), w_(w) {
  check_witness(curve, Protocol::kSignature, st, w);
}

std::vector<Message> SignatureProver::start(Rng& rng) {
  if (sent_) throw ProtocolOrderError("signature already sent");
  sent_ = true;
  return {schnorr_sign(*curve_, st_, w_, rng, &ledger_)};
}

std::vector<Message> SignatureProver::receive(const Message& msg, Rng&) {
  if (!sent_ || done_ || !std::holds_alternative<FinalMsg>(msg)) {
    throw ProtocolOrderError("signature prover cannot handle a " + std::string(message_name(msg)) +
                             " message now");
  }
  done_ = true;
  return {};
}

SignatureVerifier::SignatureVerifier(const Curve& curve, const Statement& st)
    : curve_(&curve), st_(st) {
  validate_statement(curve, Protocol::kSignature, st);
}

FinalMsg SignatureVerifier::check(const SignatureMsg& sig) {
  require_pending();
  const Verdict v = schnorr_verify_signature(*curve_, st_, sig, &ledger_);
  return finish(v.accept, v.reason);
}

std::vector<Message> SignatureVerifier::receive(const Message& msg, Rng&) {
  if (const auto* s = std::get_if<SignatureMsg>(&msg)) return {check(*s)};
  throw ProtocolOrderError("signature verifier cannot handle a " + std::string(message_name(msg)) +
                           " message");
}

}  // namespace zkec
