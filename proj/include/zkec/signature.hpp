#pragma once

// Non-interactive Schnorr proof bound to a message point P. The prover
// sends s || x*P || r*P || r*G with c = HASH(x*P, r*P, r*G) and
// s = r + c*x. The verifier checks s*G = r*G + c*B and
// s*P = r*P + c*(x*P).
//
// x*P travels in the clear, so anyone holding the discrete log of P
// learns B. The format is kept as is; pick P with unknown log.

#include <optional>
#include <span>

#include "zkec/protocol.hpp"

namespace zkec {

/// Throws InvalidWitness if B != x*G, ValidationError if P is missing or
/// off-curve. Operation counts go to `ledger` when given.
SignatureMsg schnorr_sign(const Curve& curve, const Statement& st, const Witness& w, Rng& rng,
                          CostLedger* ledger = nullptr);
SignatureMsg schnorr_sign_with_nonce(const Curve& curve, const Statement& st, const Witness& w,
                                     const Scalar& r, CostLedger* ledger = nullptr);

Verdict schnorr_verify_signature(const Curve& curve, const Statement& st, const SignatureMsg& sig,
                                 CostLedger* ledger = nullptr);
/// Decode failures and off-curve points reject with kMalformed.
Verdict schnorr_verify_signature(const Curve& curve, const Statement& st,
                                 std::span<const std::uint8_t> encoded);

class SignatureProver final : public Party {
 public:
  SignatureProver(const Curve& curve, const Statement& st, const Witness& w);

  Sender role() const override { return Sender::kProver; }
  std::vector<Message> start(Rng& rng) override;
  std::vector<Message> receive(const Message& msg, Rng& rng) override;
  bool done() const override { return done_; }

 private:
  const Curve* curve_;
  Statement st_;
  Witness w_;
  bool sent_ = false;
  bool done_ = false;
};

class SignatureVerifier final : public VerifierParty {
 public:
  SignatureVerifier(const Curve& curve, const Statement& st);

  FinalMsg check(const SignatureMsg& sig);

  std::vector<Message> start(Rng&) override { return {}; }
  std::vector<Message> receive(const Message& msg, Rng& rng) override;

 private:
  const Curve* curve_;
  Statement st_;
};

}  // namespace zkec
