#pragma once

// Proof that B = x*G + h*H for h = +1 or -1 without revealing h (an OR
// proof). For h = +1 the prover simulates the B+H branch and proves the
// B-H branch for real:
//   A = s*G - d*(B+H), C = w*G;  on c: e = c - d, t = w + x*e
// For h = -1 it builds the same values with B-H in place of B+H, then
// swaps A <-> C and d <-> e, s <-> t before sending.
//   P -> V  (A, C)
//   V -> P  c
//   P -> V  (d, e, s, t)
//   V -> P  Final: e + d = c, s*G = A + d*(B+H), t*G = C + e*(B-H)
// The verifier binds the checks to the order in which points arrive.

#include <optional>

#include "zkec/protocol.hpp"

namespace zkec {

class SingleBitProver final : public Party {
 public:
  SingleBitProver(const Curve& curve, const Statement& st, const Witness& w);

  /// Skips the witness check so tests can run a prover on a false
  /// statement. The sign must still be +1 or -1.
  static SingleBitProver unchecked(const Curve& curve, const Statement& st, const Witness& w);

  TwoPointMsg commit(Rng& rng);
  TwoPointMsg commit_with(const Scalar& s, const Scalar& d, const Scalar& w);
  QuadScalarMsg respond(const ScalarMsg& challenge);
  void on_verdict(const FinalMsg& f);

  Sender role() const override { return Sender::kProver; }
  std::vector<Message> start(Rng& rng) override { return {commit(rng)}; }
  std::vector<Message> receive(const Message& msg, Rng& rng) override;
  bool done() const override { return step_ == Step::kDone; }

 private:
  enum class Step { kCommit, kRespond, kAwaitVerdict, kDone };
  struct Nonces {
    Scalar s;
    Scalar d;
    Scalar w;
  };

  SingleBitProver(const Curve& curve, const Statement& st, const Witness& w, bool checked);
  TwoPointMsg commit_impl(Nonces n);

  const Curve* curve_;
  Statement st_;
  Witness w_;
  Step step_ = Step::kCommit;
  std::optional<Nonces> nonces_;
};

class SingleBitVerifier final : public VerifierParty {
 public:
  SingleBitVerifier(const Curve& curve, const Statement& st);

  ScalarMsg challenge(const TwoPointMsg& commitment, Rng& rng);
  FinalMsg check(const QuadScalarMsg& response);

  std::vector<Message> start(Rng&) override { return {}; }
  std::vector<Message> receive(const Message& msg, Rng& rng) override;

 private:
  const Curve* curve_;
  Statement st_;
  std::optional<TwoPointMsg> ac_;
  std::optional<Scalar> c_;
};

}  // namespace zkec
