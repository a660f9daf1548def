#pragma once

// Pieces shared by the five protocols: statements, witnesses, verdicts
// and the Party interface the session driver talks to.
//
// Each prover and verifier is a value-type state machine. Copying one
// forks the session, which is how the special-soundness tests rewind a
// prover after its commitment.

#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include "zkec/costmodel.hpp"
#include "zkec/curve.hpp"
#include "zkec/message.hpp"
#include "zkec/ops.hpp"
#include "zkec/transcript.hpp"

namespace zkec {

class Rng;

enum class Protocol {
  kCoinFlip,
  kSchnorr,
  kSignature,  // non-interactive Schnorr, "schnorr-ni"
  kDleq,
  kDleqNi,
  kSingleBit,
};

/// "coinflip", "schnorr", "schnorr-ni", "dleq", "dleq-ni", "singlebit".
std::string_view protocol_name(Protocol p);
/// Throws ParameterError for unknown names.
Protocol protocol_from_name(std::string_view name);
std::vector<Protocol> all_protocols();

/// Where an interactive Schnorr verifier gets c: fresh randomness, or
/// HASH(G, B, A).
enum class ChallengeMode { kRandom, kHash };
std::string_view challenge_mode_name(ChallengeMode m);
ChallengeMode challenge_mode_from_name(std::string_view name);

struct ProtocolOptions {
  unsigned rounds = 100;  // coin-flip iterations
  ChallengeMode challenge = ChallengeMode::kRandom;
};

/// Public input. Which fields are required depends on the protocol:
///   coinflip, schnorr: B = x*G
///   schnorr-ni:        B = x*G, message point P
///   dleq, dleq-ni:     B = x*G, C = x*H
///   singlebit:         B = x*G + h*H
struct Statement {
  Point b;
  std::optional<Point> h;
  std::optional<Point> c;
  std::optional<Point> p;
};

struct Witness {
  Scalar x;
  int sign = 1;  // h for the single-bit proof
};

/// Throws ValidationError for missing fields, off-curve points or H = O.
void validate_statement(const Curve& curve, Protocol protocol, const Statement& st);

/// Throws InvalidWitness unless the witness satisfies the statement.
void check_witness(const Curve& curve, Protocol protocol, const Statement& st, const Witness& w);

enum class RejectReason {
  kNone,
  kPending,
  kHeadsCheck,        // v*G != A
  kTailsCheck,        // m*G != A + B
  kSchnorrCheck,      // m*G - c*B != A
  kSignatureG,        // s*G != rG + c*B
  kSignatureP,        // s*P != rP + c*xP
  kDleqG,             // m*G != K + c*B
  kDleqH,             // m*H != L + c*C
  kChallengeSplit,    // d + e != c
  kPlusBranch,        // s*G != A + d*(B+H)
  kMinusBranch,       // t*G != C + e*(B-H)
  kMalformed,         // undecodable or off-curve message
  kIncomplete,        // transcript ended early
  kOutOfOrder,        // message the verifier did not expect
};
std::string_view reject_reason_name(RejectReason r);

struct Verdict {
  bool accept = false;
  RejectReason reason = RejectReason::kPending;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

class Party {
 public:
  virtual ~Party() = default;

  virtual Sender role() const = 0;
  /// Messages sent before anything has been received.
  virtual std::vector<Message> start(Rng& rng) = 0;
  /// Consumes one inbound message and returns the replies. Throws
  /// ProtocolOrderError when the current state does not expect it.
  virtual std::vector<Message> receive(const Message& msg, Rng& rng) = 0;
  virtual bool done() const = 0;

  const CostLedger& ledger() const { return ledger_; }
  CostLedger& ledger() { return ledger_; }

 protected:
  CostLedger ledger_;
};

class VerifierParty : public Party {
 public:
  Sender role() const override { return Sender::kVerifier; }
  bool done() const override { return verdict_.reason != RejectReason::kPending; }
  const Verdict& verdict() const { return verdict_; }

  /// Challenges (coins or scalars) are taken from `script` in order
  /// instead of being generated. Used by replay and by tests that need a
  /// particular challenge.
  void set_challenge_script(std::vector<Message> script);

 protected:
  /// Next scripted challenge of type T, or nullopt without a script.
  /// Throws ProtocolOrderError when the script is exhausted or has the
  /// wrong type.
  template <class T>
  std::optional<T> scripted() {
    if (!script_) return std::nullopt;
    if (script_->empty()) throw_script_exhausted();
    const auto* v = std::get_if<T>(&script_->front());
    if (v == nullptr) throw_script_mismatch();
    T out = *v;
    script_->pop_front();
    return out;
  }
  FinalMsg finish(bool accept, RejectReason reason);
  void require_pending() const;

  Verdict verdict_;

 private:
  [[noreturn]] static void throw_script_exhausted();
  [[noreturn]] static void throw_script_mismatch();
  std::optional<std::deque<Message>> script_;
};

/// A random true statement and matching witness.
struct Instance {
  Statement statement;
  Witness witness;
};
Instance make_instance(const Curve& curve, Protocol protocol, Rng& rng);

/// Special-soundness extractor: x = (m1 - m2) / (c1 - c2) from two
/// accepting responses to the same commitment. Throws DivisionByZero for
/// c1 = c2.
Scalar extract_witness(const Scalar& c1, const Scalar& m1, const Scalar& c2, const Scalar& m2);

}  // namespace zkec
