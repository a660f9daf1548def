#pragma once

// Frame transport over a TCP stream for the two-process demo. Each frame
// goes on the wire as one length byte followed by the serialized frame.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zkec/protocol.hpp"
#include "zkec/transcript.hpp"

namespace zkec::cli {

class StreamLink {
 public:
  /// Blocks until one peer connects to `addr` ("host:port").
  static StreamLink listen(const std::string& addr, int timeout_s);
  /// Retries the connection for up to `timeout_s` seconds.
  static StreamLink connect(const std::string& addr, int timeout_s);

  StreamLink(StreamLink&& o) noexcept : fd_(o.fd_) { o.fd_ = -1; }
  StreamLink(const StreamLink&) = delete;
  StreamLink& operator=(const StreamLink&) = delete;
  ~StreamLink();

  void send_message(std::span<const std::uint8_t> msg);
  /// Throws TransportError on timeout or a closed peer, DecodeError on a
  /// corrupt frame.
  std::vector<std::uint8_t> recv_message();

  std::uint64_t frames_sent() const { return frames_sent_; }

 private:
  explicit StreamLink(int fd) : fd_(fd) {}
  void write_all(const std::uint8_t* p, std::size_t n);
  void read_all(std::uint8_t* p, std::size_t n);

  int fd_ = -1;
  std::uint8_t next_id_ = 0;
  std::uint64_t frames_sent_ = 0;
};

struct RemoteResult {
  Transcript transcript;
  bool accepted = false;
};

/// Runs one side of a session over `link` until that side is done.
RemoteResult run_remote(const Curve& curve, Party& self, Rng& rng, StreamLink& link);

}  // namespace zkec::cli
