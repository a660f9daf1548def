#pragma once

// Schnorr identification, one round:
//   P -> V  A = r*G
//   V -> P  c
//   P -> V  m = r + c*x
//   V -> P  Final: accept iff m*G - c*B = A

#include <optional>

#include "zkec/protocol.hpp"

namespace zkec {

class SchnorrProver final : public Party {
 public:
  SchnorrProver(const Curve& curve, const Statement& st, const Witness& w);

  PointMsg commit(Rng& rng);
  PointMsg commit_with_nonce(const Scalar& r);
  ScalarMsg respond(const ScalarMsg& challenge);
  void on_verdict(const FinalMsg& f);

  Sender role() const override { return Sender::kProver; }
  std::vector<Message> start(Rng& rng) override { return {commit(rng)}; }
  std::vector<Message> receive(const Message& msg, Rng& rng) override;
  bool done() const override { return step_ == Step::kDone; }

 private:
  enum class Step { kCommit, kRespond, kAwaitVerdict, kDone };
  PointMsg commit_impl(const Scalar& r);

  const Curve* curve_;
  Statement st_;
  Witness w_;
  Step step_ = Step::kCommit;
  std::optional<Scalar> r_;
};

class SchnorrVerifier final : public VerifierParty {
 public:
  /// In hash mode c = HASH(G, B, A); the check recomputes it rather than
  /// keeping the issued value.
  SchnorrVerifier(const Curve& curve, const Statement& st,
                  ChallengeMode mode = ChallengeMode::kRandom);

  ScalarMsg challenge(const PointMsg& commitment, Rng& rng);
  FinalMsg check(const ScalarMsg& response);

  std::vector<Message> start(Rng&) override { return {}; }
  std::vector<Message> receive(const Message& msg, Rng& rng) override;

 private:
  const Curve* curve_;
  Statement st_;
  ChallengeMode mode_;
  std::optional<Point> a_;
  std::optional<Scalar> c_;
  bool scripted_ = false;
};

}  // namespace zkec
