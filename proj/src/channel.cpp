#include "zkec/channel.hpp"

#include "zkec/errors.hpp"

namespace zkec {

void ChannelConfig::validate() const {
  if (!(loss_probability >= 0.0 && loss_probability <= 1.0)) {
    throw ParameterError("loss probability must lie in [0, 1]");
  }
  if (!(ack_loss_probability >= 0.0 && ack_loss_probability <= 1.0)) {
    throw ParameterError("ack loss probability must lie in [0, 1]");
  }
  if (!(data_rate_bps > 0)) throw ParameterError("data rate must be positive");
}

LossyChannel::LossyChannel(const ChannelConfig& config) : config_(config), rng_(config.seed) {
  config_.validate();
}

void LossyChannel::send(const Frame& frame) {
  ++stats_.frames;
  const bool seq = send_seq_;
  for (unsigned attempt = 0; attempt <= config_.max_retries; ++attempt) {
    ++stats_.attempts;
    stats_.bytes_attempted += frame.size();
    if (attempt > 0) {
      ++stats_.retransmissions;
      stats_.payload_bytes_retx += frame.payload.size();
    }
    // Draw both outcomes every attempt so the loss pattern depends only on
    // the attempt count.
    const bool data_lost = rng_.next_unit() < config_.loss_probability;
    const bool ack_lost = rng_.next_unit() < config_.ack_loss_probability;
    if (data_lost) {
      stats_.ticks += config_.ack_timeout;
      continue;
    }
    if (seq == expect_seq_) {
      inbox_.push_back(frame);
      ++stats_.delivered;
      expect_seq_ = !expect_seq_;
    } else {
      ++stats_.duplicates;
    }
    if (ack_lost) {
      stats_.ticks += config_.ack_timeout;
      continue;
    }
    stats_.ticks += 1;
    send_seq_ = !send_seq_;
    return;
  }
  throw TransportError("frame not acknowledged after " + std::to_string(config_.max_retries) +
                       " retransmissions");
}

Frame LossyChannel::recv() {
  if (inbox_.empty()) throw TransportError("no frame delivered");
  Frame f = std::move(inbox_.front());
  inbox_.pop_front();
  return f;
}

}  // namespace zkec
