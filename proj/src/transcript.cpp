#include "zkec/transcript.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "zkec/errors.hpp"

namespace zkec {

std::size_t Transcript::count(Sender from) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.from == from; }));
}

bool Transcript::accepted() const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->from != Sender::kVerifier) continue;
    if (const auto* f = std::get_if<FinalMsg>(&it->msg)) return f->accept;
  }
  return false;
}

std::vector<std::uint8_t> dump_transcript(const Curve& curve, const Transcript& t) {
  std::vector<std::uint8_t> out;
  for (const auto& e : t.entries) {
    const auto body = encode(curve, e.msg);
    out.push_back(static_cast<std::uint8_t>(e.from));
    out.push_back(static_cast<std::uint8_t>(body.size() >> 8));
    out.push_back(static_cast<std::uint8_t>(body.size() & 0xFF));
    out.insert(out.end(), body.begin(), body.end());
  }
  return out;
}

Transcript load_transcript(const Curve& curve, std::span<const std::uint8_t> bytes) {
  Transcript t;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    if (bytes.size() - pos < 3) throw DecodeError("truncated transcript record header");
    const std::uint8_t dir = bytes[pos];
    if (dir > 1) throw DecodeError("bad direction byte in transcript");
    const std::size_t len = (std::size_t{bytes[pos + 1]} << 8) | bytes[pos + 2];
    pos += 3;
    if (bytes.size() - pos < len) throw DecodeError("truncated transcript record");
    t.add(static_cast<Sender>(dir), decode(curve, bytes.subspan(pos, len)));
    pos += len;
  }
  return t;
}

void save_transcript_file(const Curve& curve, const Transcript& t,
                          const std::filesystem::path& path) {
  const auto bytes = dump_transcript(curve, t);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ParameterError("cannot write " + path.string());
}

Transcript load_transcript_file(const Curve& curve, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot read " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return load_transcript(curve, bytes);
}

}  // namespace zkec
