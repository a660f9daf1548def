#pragma once

// Proof that log_G(B) = log_H(C) without revealing x.
//   P -> V  K = r*G, L = r*H
//   V -> P  c
//   P -> V  m = r + c*x
//   V -> P  Final: accept iff m*G = K + c*B and m*H = L + c*C
// Non-interactive mode replaces c by HASH(B, G, C, H, K, L); the prover
// then sends (K, L) and m back to back and the verifier answers Final.

#include <optional>
#include <utility>

#include "zkec/protocol.hpp"

namespace zkec {

/// HASH(B, G, C, H, K, L).
Scalar dleq_challenge(const Curve& curve, const Statement& st, const TwoPointMsg& commitment);

class DleqProver final : public Party {
 public:
  DleqProver(const Curve& curve, const Statement& st, const Witness& w, bool non_interactive = false);

  TwoPointMsg commit(Rng& rng);
  TwoPointMsg commit_with_nonce(const Scalar& r);
  ScalarMsg respond(const ScalarMsg& challenge);
  /// Non-interactive mode only: answers its own hashed challenge.
  ScalarMsg respond_to_hash();
  void on_verdict(const FinalMsg& f);

  Sender role() const override { return Sender::kProver; }
  std::vector<Message> start(Rng& rng) override;
  std::vector<Message> receive(const Message& msg, Rng& rng) override;
  bool done() const override { return step_ == Step::kDone; }

 private:
  enum class Step { kCommit, kRespond, kAwaitVerdict, kDone };
  TwoPointMsg commit_impl(const Scalar& r);
  ScalarMsg respond_impl(const Scalar& c);

  const Curve* curve_;
  Statement st_;
  Witness w_;
  bool ni_;
  Step step_ = Step::kCommit;
  std::optional<Scalar> r_;
  std::optional<TwoPointMsg> kl_;
};

class DleqVerifier final : public VerifierParty {
 public:
  DleqVerifier(const Curve& curve, const Statement& st, bool non_interactive = false);

  /// Interactive: returns the challenge. Non-interactive: derives it from
  /// the hash and returns nothing.
  std::optional<ScalarMsg> on_commit(const TwoPointMsg& commitment, Rng& rng);
  FinalMsg check(const ScalarMsg& response);

  std::vector<Message> start(Rng&) override { return {}; }
  std::vector<Message> receive(const Message& msg, Rng& rng) override;

 private:
  const Curve* curve_;
  Statement st_;
  bool ni_;
  std::optional<TwoPointMsg> kl_;
  std::optional<Scalar> c_;
};

}  // namespace zkec
