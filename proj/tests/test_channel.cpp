#include <doctest.h>

#include "zkec/channel.hpp"
#include "zkec/errors.hpp"

using namespace zkec;

namespace {

Frame frame_of(std::uint8_t v) {
  Frame f;
  f.payload = {v, v, v};
  return f;
}

}  // namespace

TEST_CASE("lossless channel delivers every frame once") {
  LossyChannel ch(ChannelConfig{});
  for (int i = 0; i < 100; ++i) ch.send(frame_of(static_cast<std::uint8_t>(i)));
  CHECK(ch.stats().frames == 100);
  CHECK(ch.stats().delivered == 100);
  CHECK(ch.stats().retransmissions == 0);
  for (int i = 0; i < 100; ++i) CHECK(ch.recv().payload[0] == i);
  CHECK_FALSE(ch.has_frame());
  CHECK_THROWS_AS(ch.recv(), TransportError);
}

TEST_CASE("retransmissions follow the geometric expectation") {
  ChannelConfig cfg;
  cfg.loss_probability = 0.3;
  cfg.max_retries = 10;
  cfg.seed = 61;
  LossyChannel ch(cfg);
  for (int i = 0; i < 1000; ++i) ch.send(frame_of(1));
  CHECK(ch.stats().delivered == 1000);
  const double expected = 1000 * 0.3 / 0.7;
  CHECK(static_cast<double>(ch.stats().retransmissions) > 0.8 * expected);
  CHECK(static_cast<double>(ch.stats().retransmissions) < 1.2 * expected);
  CHECK(ch.stats().payload_bytes_retx == 3 * ch.stats().retransmissions);
}

TEST_CASE("lost acks cause duplicates that the receiver drops") {
  ChannelConfig cfg;
  cfg.ack_loss_probability = 0.4;
  cfg.seed = 62;
  LossyChannel ch(cfg);
  for (int i = 0; i < 500; ++i) ch.send(frame_of(static_cast<std::uint8_t>(i)));
  CHECK(ch.stats().delivered == 500);
  CHECK(ch.stats().duplicates > 0);
  CHECK(ch.stats().duplicates == ch.stats().retransmissions);
  for (int i = 0; i < 500; ++i) CHECK(ch.recv().payload[0] == static_cast<std::uint8_t>(i));
}

TEST_CASE("total loss exhausts retries") {
  ChannelConfig cfg;
  cfg.loss_probability = 1.0;
  cfg.max_retries = 4;
  LossyChannel ch(cfg);
  CHECK_THROWS_AS(ch.send(frame_of(1)), TransportError);
  CHECK(ch.stats().attempts == 5);
  CHECK(ch.stats().ticks == 5 * cfg.ack_timeout);
}

TEST_CASE("seeded channel is deterministic") {
  ChannelConfig cfg;
  cfg.loss_probability = 0.5;
  cfg.ack_loss_probability = 0.2;
  cfg.max_retries = 30;
  cfg.seed = 63;
  LossyChannel a(cfg), b(cfg);
  for (int i = 0; i < 200; ++i) {
    a.send(frame_of(1));
    b.send(frame_of(1));
  }
  CHECK(a.stats().attempts == b.stats().attempts);
  CHECK(a.stats().ticks == b.stats().ticks);
  CHECK(a.stats().duplicates == b.stats().duplicates);
}

TEST_CASE("channel config validation") {
  ChannelConfig cfg;
  cfg.loss_probability = 1.5;
  CHECK_THROWS_AS(LossyChannel{cfg}, ParameterError);
  cfg.loss_probability = -0.1;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
  cfg.loss_probability = 0;
  cfg.data_rate_bps = 0;
  CHECK_THROWS_AS(cfg.validate(), ParameterError);
}
