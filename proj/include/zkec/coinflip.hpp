#pragma once

// Proof of knowledge of x with B = x*G by repeated coin flips. Each round:
//   P -> V  A = r*G
//   V -> P  coin
//   P -> V  heads: r, tails: m = x + r
//   V -> P  Final (round verdict)
// The verifier accepts after `rounds` accepted rounds and stops at the
// first failed one. A cheater without x passes each round with
// probability 1/2.

#include <optional>

#include "zkec/protocol.hpp"

namespace zkec {

class CoinFlipProver final : public Party {
 public:
  CoinFlipProver(const Curve& curve, const Statement& st, const Witness& w, unsigned rounds);

  /// Prover without a witness that prepares every round for tails:
  /// random m, A = m*G - B. On heads it can only guess.
  static CoinFlipProver cheater(const Curve& curve, const Statement& st, unsigned rounds);

  PointMsg commit(Rng& rng);
  PointMsg commit_with_nonce(const Scalar& r);
  /// On heads the cheater needs a guess and draws it from `rng`.
  ScalarMsg respond(const CoinMsg& coin, Rng* rng = nullptr);
  void on_verdict(const FinalMsg& f);

  unsigned rounds_done() const { return rounds_done_; }

  Sender role() const override { return Sender::kProver; }
  std::vector<Message> start(Rng& rng) override;
  std::vector<Message> receive(const Message& msg, Rng& rng) override;
  bool done() const override { return step_ == Step::kDone; }

 private:
  enum class Step { kCommit, kRespond, kAwaitVerdict, kDone };

  CoinFlipProver(const Curve& curve, const Statement& st, std::optional<Witness> w, unsigned rounds);
  PointMsg commit_impl(const Scalar& r);

  const Curve* curve_;
  Statement st_;
  std::optional<Witness> w_;
  unsigned rounds_;
  unsigned rounds_done_ = 0;
  Step step_ = Step::kCommit;
  std::optional<Scalar> r_;  // honest nonce, or the cheater's prepared m
};

class CoinFlipVerifier final : public VerifierParty {
 public:
  CoinFlipVerifier(const Curve& curve, const Statement& st, unsigned rounds);

  CoinMsg flip(const PointMsg& commitment, Rng& rng);
  FinalMsg check(const ScalarMsg& response);

  unsigned rounds_accepted() const { return rounds_accepted_; }
  unsigned tails_seen() const { return tails_seen_; }

  std::vector<Message> start(Rng&) override { return {}; }
  std::vector<Message> receive(const Message& msg, Rng& rng) override;

 private:
  enum class Step { kAwaitCommit, kAwaitResponse };

  const Curve* curve_;
  Statement st_;
  unsigned rounds_;
  unsigned rounds_accepted_ = 0;
  unsigned tails_seen_ = 0;
  Step step_ = Step::kAwaitCommit;
  std::optional<Point> a_;
  bool tails_ = false;
};

}  // namespace zkec
