#pragma once

// Protocol messages and their byte layout.
//
// Every message starts with a tag byte:
//   bits 3..0  type (see MessageType)
//   bits 6..4  infinity flag for point slot 0, 1, 2
//   bit  7     reserved, zero
// followed by the fields in declaration order, each point as x || y and
// each scalar as a fixed-width big-endian integer. A point slot with its
// infinity flag set carries all-zero bytes. The final verdict is the bare
// tag: 0x00 reject, 0x01 accept. The signature carries s in 22 bytes: a
// zero pad byte, then the 21-byte scalar.
//
// Sizes on the default curve (21-byte field elements and scalars):
//   Final 1, Coin 2, Scalar 22, Point 43, TwoPoint 85, QuadScalar 85,
//   Signature 149.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "zkec/curve.hpp"

namespace zkec {

enum class MessageType : std::uint8_t {
  kFinalReject = 0x0,
  kFinalAccept = 0x1,
  kPoint = 0x2,
  kScalar = 0x3,
  kCoin = 0x4,
  kTwoPoint = 0x5,
  kSignature = 0x6,
  kQuadScalar = 0x7,
};

struct PointMsg {
  Point a;

  friend bool operator==(const PointMsg&, const PointMsg&) = default;
};

/// Challenges and responses alike.
struct ScalarMsg {
  Scalar v;

  friend bool operator==(const ScalarMsg&, const ScalarMsg&) = default;
};

struct CoinMsg {
  bool tails = false;

  friend bool operator==(const CoinMsg&, const CoinMsg&) = default;
};

struct FinalMsg {
  bool accept = false;

  friend bool operator==(const FinalMsg&, const FinalMsg&) = default;
};

struct TwoPointMsg {
  Point first;
  Point second;

  friend bool operator==(const TwoPointMsg&, const TwoPointMsg&) = default;
};

/// 0x00 || s || x*P || r*P || r*G
struct SignatureMsg {
  Scalar s;
  Point xp;
  Point rp;
  Point rg;

  friend bool operator==(const SignatureMsg&, const SignatureMsg&) = default;
};

struct QuadScalarMsg {
  Scalar d;
  Scalar e;
  Scalar s;
  Scalar t;

  friend bool operator==(const QuadScalarMsg&, const QuadScalarMsg&) = default;
};

using Message =
    std::variant<PointMsg, ScalarMsg, CoinMsg, FinalMsg, TwoPointMsg, SignatureMsg, QuadScalarMsg>;

MessageType message_type(const Message& msg);
std::string_view message_name(const Message& msg);

/// Encoded length of a message of type `type` on `curve`.
std::size_t encoded_size(const Curve& curve, MessageType type);

std::vector<std::uint8_t> encode(const Curve& curve, const Message& msg);
/// Throws DecodeError on unknown tag, length mismatch or malformed field,
/// ValidationError for an off-curve point.
Message decode(const Curve& curve, std::span<const std::uint8_t> bytes);

}  // namespace zkec
