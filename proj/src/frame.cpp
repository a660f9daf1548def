#include "zkec/frame.hpp"

#include <string>

#include "zkec/errors.hpp"

namespace zkec {

namespace {

std::uint8_t header_byte(const Frame& f) {
  return static_cast<std::uint8_t>((f.message_id << 4) | (f.index << 2) | (f.count - 1));
}

std::uint8_t checksum(std::uint8_t header, std::span<const std::uint8_t> payload) {
  std::uint8_t c = header;
  for (std::uint8_t b : payload) c ^= b;
  return c;
}

}  // namespace

std::vector<std::uint8_t> Frame::serialize() const {
  if (message_id > 15 || count < 1 || count > kMaxFragments || index >= count) {
    throw ParameterError("frame header out of range");
  }
  if (payload.size() > kMaxFramePayload) throw ParameterError("frame payload exceeds 126 bytes");
  std::vector<std::uint8_t> out;
  out.reserve(size());
  const std::uint8_t h = header_byte(*this);
  out.push_back(h);
  out.push_back(checksum(h, payload));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Frame Frame::parse(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kFrameHeaderBytes) throw DecodeError("frame shorter than its header");
  if (bytes.size() > kMaxFrameBytes) throw DecodeError("frame longer than 128 bytes");
  Frame f;
  const std::uint8_t h = bytes[0];
  f.message_id = static_cast<std::uint8_t>(h >> 4);
  f.index = static_cast<std::uint8_t>((h >> 2) & 0x3);
  f.count = static_cast<std::uint8_t>((h & 0x3) + 1);
  if (f.index >= f.count) throw DecodeError("fragment index beyond fragment count");
  const auto payload = bytes.subspan(kFrameHeaderBytes);
  if (checksum(h, payload) != bytes[1]) throw DecodeError("frame checksum mismatch");
  f.payload.assign(payload.begin(), payload.end());
  return f;
}

std::vector<Frame> fragment(std::span<const std::uint8_t> message, std::uint8_t message_id) {
  if (message.size() > kMaxMessageBytes) {
    throw ParameterError("message of " + std::to_string(message.size()) +
                         " bytes exceeds four fragments");
  }
  if (message_id > 15) throw ParameterError("message id must fit in 4 bits");
  const std::size_t count =
      message.empty() ? 1 : (message.size() + kMaxFramePayload - 1) / kMaxFramePayload;
  std::vector<Frame> frames;
  frames.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t begin = i * kMaxFramePayload;
    const std::size_t len = std::min(kMaxFramePayload, message.size() - begin);
    Frame f;
    f.message_id = message_id;
    f.index = static_cast<std::uint8_t>(i);
    f.count = static_cast<std::uint8_t>(count);
    f.payload.assign(message.begin() + static_cast<std::ptrdiff_t>(begin),
                     message.begin() + static_cast<std::ptrdiff_t>(begin + len));
    frames.push_back(std::move(f));
  }
  return frames;
}

std::optional<std::vector<std::uint8_t>> Reassembler::accept(const Frame& frame) {
  if (frame.count < 1 || frame.count > kMaxFragments || frame.index >= frame.count) {
    throw DecodeError("frame header out of range");
  }
  Partial& p = partial_[frame.message_id];
  if (p.count == 0) p.count = frame.count;
  if (p.count != frame.count) throw DecodeError("fragment count changed within a message");
  auto& slot = p.parts[frame.index];
  if (slot.has_value()) {
    if (*slot != frame.payload) throw DecodeError("conflicting duplicate fragment");
    return std::nullopt;
  }
  slot = frame.payload;
  for (std::size_t i = 0; i < p.count; ++i) {
    if (!p.parts[i].has_value()) return std::nullopt;
  }
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < p.count; ++i) out.insert(out.end(), p.parts[i]->begin(), p.parts[i]->end());
  partial_.erase(frame.message_id);
  return out;
}

void Reassembler::expect_complete() const {
  if (pending()) throw TransportError("reassembly timed out with fragments missing");
}

std::vector<std::uint8_t> reassemble(std::span<const Frame> frames) {
  Reassembler r;
  std::optional<std::vector<std::uint8_t>> out;
  for (const Frame& f : frames) {
    if (auto done = r.accept(f)) out = std::move(done);
  }
  if (!out) throw TransportError("reassembly timed out with fragments missing");
  return *out;
}

double airtime(std::size_t bytes, double bits_per_second) {
  if (!(bits_per_second > 0)) throw ParameterError("data rate must be positive");
  return 8.0 * static_cast<double>(bytes) / bits_per_second;
}

}  // namespace zkec
