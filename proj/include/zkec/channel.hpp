#pragma once

// Simulated lossy radio link with stop-and-wait ARQ (alternating-bit
// sequence numbers, positive acks, retransmit on timeout). Fully
// deterministic for a fixed seed.

#include <cstdint>
#include <deque>

#include "zkec/frame.hpp"
#include "zkec/rng.hpp"

namespace zkec {

struct ChannelConfig {
  double loss_probability = 0.0;      // per data-frame attempt
  double ack_loss_probability = 0.0;  // per ack
  std::uint64_t seed = 0;
  unsigned max_retries = 10;
  std::uint64_t ack_timeout = 8;  // ticks charged per unanswered attempt
  double data_rate_bps = 250000;

  /// Throws ParameterError for probabilities outside [0, 1] or a
  /// non-positive data rate.
  void validate() const;
};

struct ChannelStats {
  std::uint64_t frames = 0;           // send() calls
  std::uint64_t attempts = 0;         // data frames put on air
  std::uint64_t retransmissions = 0;  // attempts - successful first tries
  std::uint64_t delivered = 0;        // frames handed to the receiver
  std::uint64_t duplicates = 0;       // dropped by the receiver's sequence check
  std::uint64_t bytes_attempted = 0;  // frame bytes over all attempts
  std::uint64_t payload_bytes_retx = 0;
  std::uint64_t ticks = 0;
};

/// One direction of a link. send() runs the ARQ exchange to completion;
/// delivered frames queue up for recv().
class LossyChannel {
 public:
  explicit LossyChannel(const ChannelConfig& config);

  /// Throws TransportError when max_retries retransmissions all fail.
  void send(const Frame& frame);
  /// Throws TransportError when nothing has been delivered.
  Frame recv();
  bool has_frame() const { return !inbox_.empty(); }

  const ChannelStats& stats() const { return stats_; }
  const ChannelConfig& config() const { return config_; }

 private:
  ChannelConfig config_;
  SeededRng rng_;
  ChannelStats stats_;
  std::deque<Frame> inbox_;
  bool send_seq_ = false;
  bool expect_seq_ = false;
};

}  // namespace zkec
