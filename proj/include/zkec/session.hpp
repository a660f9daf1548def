#pragma once

// Drives a prover and a verifier to completion over a transport, recording
// the transcript and each side's operation and traffic counts.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zkec/channel.hpp"
#include "zkec/frame.hpp"
#include "zkec/protocol.hpp"
#include "zkec/transcript.hpp"

namespace zkec {

/// Carries one encoded message from `from` to the other party.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::vector<std::uint8_t> carry(Sender from, std::span<const std::uint8_t> message) = 0;
  /// Payload bytes retransmitted so far in `from`'s direction.
  virtual std::uint64_t retransmitted_bytes(Sender) const { return 0; }
};

/// Hands bytes across unchanged.
class DirectTransport final : public Transport {
 public:
  std::vector<std::uint8_t> carry(Sender from, std::span<const std::uint8_t> message) override;
};

/// Fragments each message, pushes the frames through one LossyChannel per
/// direction (seeds derived from config.seed) and reassembles them.
class FramedTransport final : public Transport {
 public:
  explicit FramedTransport(const ChannelConfig& config);

  std::vector<std::uint8_t> carry(Sender from, std::span<const std::uint8_t> message) override;
  std::uint64_t retransmitted_bytes(Sender from) const override;

  const ChannelStats& stats(Sender from) const { return link(from).stats(); }
  std::uint64_t frames_sent(Sender from) const { return link(from).stats().frames; }

 private:
  LossyChannel& link(Sender from) { return from == Sender::kProver ? up_ : down_; }
  const LossyChannel& link(Sender from) const { return from == Sender::kProver ? up_ : down_; }

  LossyChannel up_;
  LossyChannel down_;
  std::uint8_t next_id_[2] = {0, 0};
};

struct SessionResult {
  Transcript transcript;
  Verdict verdict;
  CostLedger prover;
  CostLedger verifier;
};

/// Throws TransportError if the transport gives up and ProtocolOrderError
/// if the parties stall before a verdict. A reject is a normal result.
SessionResult run_session(const Curve& curve, Party& prover, VerifierParty& verifier,
                          Transport& transport, Rng& prover_rng, Rng& verifier_rng);

std::unique_ptr<Party> make_prover(const Curve& curve, Protocol protocol, const Statement& st,
                                   const Witness& w, const ProtocolOptions& opts);
/// Witness-less coin-flip prover; ParameterError for other protocols.
std::unique_ptr<Party> make_cheater(const Curve& curve, Protocol protocol, const Statement& st,
                                    const ProtocolOptions& opts);
std::unique_ptr<VerifierParty> make_verifier(const Curve& curve, Protocol protocol,
                                             const Statement& st, const ProtocolOptions& opts);

struct SessionConfig {
  ProtocolOptions options;
  ChannelConfig channel;
  bool framed = true;  // false: DirectTransport
  bool cheat = false;  // coin flip only
};

struct SessionRun {
  Protocol protocol;
  Instance instance;
  SessionResult result;
  std::optional<ChannelStats> uplink;
  std::optional<ChannelStats> downlink;
};

/// Fresh random instance plus one session, all randomness derived from
/// `seed`. The channel seed in `config` is replaced by a derived one.
SessionRun run_seeded_session(const Curve& curve, Protocol protocol, const SessionConfig& config,
                              std::uint64_t seed);
SessionRun run_seeded_session(const Curve& curve, Protocol protocol, const Instance& instance,
                              const SessionConfig& config, std::uint64_t seed);

/// Feeds the prover's recorded messages to a fresh verifier whose
/// challenges are taken from the transcript. Protocol-order violations
/// reject with kOutOfOrder; a transcript that ends early with kIncomplete.
Verdict replay_transcript(const Curve& curve, Protocol protocol, const Statement& st,
                          const Transcript& t, const ProtocolOptions& opts = {});

/// Operation counts of one honest session on the default options, with
/// the coin-flip coins alternating tails/heads so exactly ceil(k/2) rounds
/// take the tails branch. Schnorr uses hash-mode challenges.
SessionResult model_session(const Curve& curve, Protocol protocol, unsigned rounds);

/// `key = value` text: protocol, then B, H, C, P as hex point encodings.
std::string format_statement(const Curve& curve, Protocol protocol, const Statement& st);
/// Throws ParameterError / DecodeError / ValidationError.
std::pair<Protocol, Statement> parse_statement(const Curve& curve, std::string_view text);

}  // namespace zkec
