#pragma once

// Recorded sessions. File format: a plain concatenation of records
//   [direction: 1 byte, 0 = prover to verifier, 1 = verifier to prover]
//   [length: 2 bytes, big-endian]
//   [encoded message: length bytes]

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "zkec/message.hpp"

namespace zkec {

enum class Sender : std::uint8_t { kProver = 0, kVerifier = 1 };

struct TranscriptEntry {
  Sender from;
  Message msg;
  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct Transcript {
  std::vector<TranscriptEntry> entries;

  void add(Sender from, Message msg) { entries.push_back({from, std::move(msg)}); }
  std::size_t count(Sender from) const;
  /// The last Final message sent by the verifier; false if there is none.
  bool accepted() const;
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

std::vector<std::uint8_t> dump_transcript(const Curve& curve, const Transcript& t);
/// Throws DecodeError on a truncated record, bad direction byte or a
/// message that fails to decode.
Transcript load_transcript(const Curve& curve, std::span<const std::uint8_t> bytes);

void save_transcript_file(const Curve& curve, const Transcript& t, const std::filesystem::path& path);
/// Throws ParameterError when the file cannot be read.
Transcript load_transcript_file(const Curve& curve, const std::filesystem::path& path);

}  // namespace zkec
