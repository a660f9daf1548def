#include "zkec/message.hpp"

#include <algorithm>
#include <string>

#include "zkec/errors.hpp"
#include "zkec/sha1.hpp"

namespace zkec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Layout {
  std::size_t points = 0;
  std::size_t scalars = 0;
  std::size_t extra = 0;  // raw bytes: the coin byte, the signature pad
};

Layout layout_of(MessageType type) {
  switch (type) {
    case MessageType::kFinalReject:
    case MessageType::kFinalAccept:
      return {};
    case MessageType::kPoint:
      return {1, 0, 0};
    case MessageType::kScalar:
      return {0, 1, 0};
    case MessageType::kCoin:
      return {0, 0, 1};
    case MessageType::kTwoPoint:
      return {2, 0, 0};
    case MessageType::kSignature:
      return {3, 1, 1};
    case MessageType::kQuadScalar:
      return {0, 4, 0};
  }
  throw DecodeError("unknown message type");
}

class Writer {
 public:
  Writer(const Curve& curve, MessageType type) : curve_(curve) {
    out_.reserve(encoded_size(curve, type));
    out_.push_back(static_cast<std::uint8_t>(type));
  }

  void point(const Point& p) {
    if (p.is_infinity()) out_[0] |= static_cast<std::uint8_t>(1U << (4 + slot_));
    ++slot_;
    const std::size_t at = out_.size();
    out_.resize(at + curve_.point_bytes());
    curve_.encode_into(p, std::span(out_).subspan(at));
  }

  void scalar(const Scalar& s) {
    const std::size_t at = out_.size();
    out_.resize(at + curve_.order().byte_length());
    s.write_bytes(std::span(out_).subspan(at));
  }

  void byte(std::uint8_t b) { out_.push_back(b); }

  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  const Curve& curve_;
  std::vector<std::uint8_t> out_;
  unsigned slot_ = 0;
};

class Reader {
 public:
  Reader(const Curve& curve, std::span<const std::uint8_t> bytes)
      : curve_(curve), flags_(static_cast<std::uint8_t>(bytes[0] >> 4)), rest_(bytes.subspan(1)) {}

  Point point() {
    const auto body = take(curve_.point_bytes());
    const bool inf_flag = (flags_ >> slot_++) & 1U;
    const bool zeros = std::all_of(body.begin(), body.end(), [](std::uint8_t b) { return b == 0; });
    if (inf_flag != zeros) throw DecodeError("infinity flag disagrees with point body");
    return curve_.decode(body);
  }

  Scalar scalar() { return Scalar::from_bytes(curve_.order(), take(curve_.order().byte_length())); }

  std::uint8_t byte() { return take(1)[0]; }

  void finish(std::size_t point_slots) const {
    if ((flags_ >> point_slots) != 0) throw DecodeError("infinity flag set for a missing point slot");
  }

 private:
  std::span<const std::uint8_t> take(std::size_t n) {
    auto s = rest_.first(n);
    rest_ = rest_.subspan(n);
    return s;
  }

  const Curve& curve_;
  std::uint8_t flags_;
  std::span<const std::uint8_t> rest_;
  unsigned slot_ = 0;
};

}  // namespace

MessageType message_type(const Message& msg) {
  return std::visit(Overloaded{
                        [](const PointMsg&) { return MessageType::kPoint; },
                        [](const ScalarMsg&) { return MessageType::kScalar; },
                        [](const CoinMsg&) { return MessageType::kCoin; },
                        [](const FinalMsg& m) {
                          return m.accept ? MessageType::kFinalAccept : MessageType::kFinalReject;
                        },
                        [](const TwoPointMsg&) { return MessageType::kTwoPoint; },
                        [](const SignatureMsg&) { return MessageType::kSignature; },
                        [](const QuadScalarMsg&) { return MessageType::kQuadScalar; },
                    },
                    msg);
}

std::string_view message_name(const Message& msg) {
  switch (message_type(msg)) {
    case MessageType::kFinalReject:
    case MessageType::kFinalAccept:
      return "final";
    case MessageType::kPoint:
      return "point";
    case MessageType::kScalar:
      return "scalar";
    case MessageType::kCoin:
      return "coin";
    case MessageType::kTwoPoint:
      return "two-point";
    case MessageType::kSignature:
      return "signature";
    case MessageType::kQuadScalar:
      return "quad-scalar";
  }
  return "unknown";
}

std::size_t encoded_size(const Curve& curve, MessageType type) {
  const Layout l = layout_of(type);
  return 1 + l.points * curve.point_bytes() + l.scalars * curve.order().byte_length() + l.extra;
}

std::vector<std::uint8_t> encode(const Curve& curve, const Message& msg) {
  Writer w(curve, message_type(msg));
  std::visit(Overloaded{
                 [&](const PointMsg& m) { w.point(m.a); },
                 [&](const ScalarMsg& m) { w.scalar(m.v); },
                 [&](const CoinMsg& m) { w.byte(m.tails ? 1 : 0); },
                 [&](const FinalMsg&) {},
                 [&](const TwoPointMsg& m) {
                   w.point(m.first);
                   w.point(m.second);
                 },
                 [&](const SignatureMsg& m) {
                   w.byte(0);
                   w.scalar(m.s);
                   w.point(m.xp);
                   w.point(m.rp);
                   w.point(m.rg);
                 },
                 [&](const QuadScalarMsg& m) {
                   w.scalar(m.d);
                   w.scalar(m.e);
                   w.scalar(m.s);
                   w.scalar(m.t);
                 },
             },
             msg);
  return w.take();
}

Message decode(const Curve& curve, std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw DecodeError("empty message");
  const std::uint8_t tag = bytes[0];
  if (tag & 0x80) throw DecodeError("reserved tag bit set");
  const std::uint8_t code = tag & 0x0F;
  if (code > static_cast<std::uint8_t>(MessageType::kQuadScalar)) {
    throw DecodeError("unknown message tag 0x" + to_hex(std::span(&tag, 1)));
  }
  const auto type = static_cast<MessageType>(code);
  const std::size_t expected = encoded_size(curve, type);
  if (bytes.size() != expected) {
    throw DecodeError(std::string("message length ") + std::to_string(bytes.size()) +
                      " does not match " + std::to_string(expected) + " for its tag");
  }
  Reader r(curve, bytes);
  r.finish(layout_of(type).points);
  switch (type) {
    case MessageType::kFinalReject:
      return FinalMsg{false};
    case MessageType::kFinalAccept:
      return FinalMsg{true};
    case MessageType::kPoint:
      return PointMsg{r.point()};
    case MessageType::kScalar:
      return ScalarMsg{r.scalar()};
    case MessageType::kCoin: {
      const std::uint8_t b = r.byte();
      if (b > 1) throw DecodeError("coin byte must be 0 or 1");
      return CoinMsg{b == 1};
    }
    case MessageType::kTwoPoint: {
      Point first = r.point();
      Point second = r.point();
      return TwoPointMsg{std::move(first), std::move(second)};
    }
    case MessageType::kSignature: {
      if (r.byte() != 0) throw DecodeError("signature pad byte must be zero");
      Scalar s = r.scalar();
      Point xp = r.point();
      Point rp = r.point();
      Point rg = r.point();
      return SignatureMsg{std::move(s), std::move(xp), std::move(rp), std::move(rg)};
    }
    case MessageType::kQuadScalar: {
      Scalar d = r.scalar();
      Scalar e = r.scalar();
      Scalar s = r.scalar();
      Scalar t = r.scalar();
      return QuadScalarMsg{std::move(d), std::move(e), std::move(s), std::move(t)};
    }
  }
  throw DecodeError("unknown message type");
}

}  // namespace zkec
