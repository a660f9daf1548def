#pragma once

// 802.15.4-sized framing. A frame is a 2-byte header plus at most 126
// payload bytes, so no frame exceeds the 128-byte radio payload.
//
//   byte 0: message id (bits 7..4) | fragment index (bits 3..2) |
//           fragment count - 1 (bits 1..0)
//   byte 1: XOR of byte 0 and every payload byte
//
// A message therefore spans 1..4 frames (at most 504 bytes).

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace zkec {

inline constexpr std::size_t kMaxFrameBytes = 128;
inline constexpr std::size_t kFrameHeaderBytes = 2;
inline constexpr std::size_t kMaxFramePayload = kMaxFrameBytes - kFrameHeaderBytes;
inline constexpr std::size_t kMaxFragments = 4;
inline constexpr std::size_t kMaxMessageBytes = kMaxFragments * kMaxFramePayload;

struct Frame {
  std::uint8_t message_id = 0;  // 0..15
  std::uint8_t index = 0;       // 0..3
  std::uint8_t count = 1;       // 1..4
  std::vector<std::uint8_t> payload;

  std::size_t size() const { return kFrameHeaderBytes + payload.size(); }

  std::vector<std::uint8_t> serialize() const;
  /// Throws DecodeError on short input, oversize, bad header or checksum.
  static Frame parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Splits `message` into ceil(size/126) frames (one empty frame for an
/// empty message). Throws ParameterError above kMaxMessageBytes or for an
/// id above 15.
std::vector<Frame> fragment(std::span<const std::uint8_t> message, std::uint8_t message_id);

/// Collects frames in any order. Duplicates are ignored.
class Reassembler {
 public:
  /// Returns the whole message once its last missing fragment arrives.
  /// Throws DecodeError when a frame conflicts with earlier fragments of
  /// the same message id.
  std::optional<std::vector<std::uint8_t>> accept(const Frame& frame);

  bool pending() const { return !partial_.empty(); }
  /// Drops incomplete state; throws TransportError if anything was pending.
  void expect_complete() const;

 private:
  struct Partial {
    std::uint8_t count = 0;
    std::array<std::optional<std::vector<std::uint8_t>>, kMaxFragments> parts;
  };
  std::map<std::uint8_t, Partial> partial_;
};

/// Whole-message convenience over Reassembler; throws TransportError if
/// fragments are missing.
std::vector<std::uint8_t> reassemble(std::span<const Frame> frames);

/// Seconds on air for `bytes` at `bits_per_second`: 8 * bytes / rate.
double airtime(std::size_t bytes, double bits_per_second);

}  // namespace zkec
