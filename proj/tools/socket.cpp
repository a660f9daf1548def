#include "socket.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <thread>

#include "zkec/errors.hpp"
#include "zkec/frame.hpp"

namespace zkec::cli {

namespace {

std::pair<std::string, std::string> split_addr(const std::string& addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos || colon + 1 == addr.size()) {
    throw ParameterError("address must look like host:port, got " + addr);
  }
  return {addr.substr(0, colon), addr.substr(colon + 1)};
}

addrinfo* resolve(const std::string& addr, bool passive) {
  const auto [host, port] = split_addr(addr);
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  if (passive) hints.ai_flags = AI_PASSIVE;
  addrinfo* res = nullptr;
  if (getaddrinfo(host.empty() ? nullptr : host.c_str(), port.c_str(), &hints, &res) != 0) {
    throw ParameterError("cannot resolve " + addr);
  }
  return res;
}

void set_timeout(int fd, int seconds) {
  timeval tv{};
  tv.tv_sec = seconds;
  setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
}

}  // namespace

StreamLink StreamLink::listen(const std::string& addr, int timeout_s) {
  addrinfo* res = resolve(addr, true);
  const int srv = socket(res->ai_family, res->ai_socktype, res->ai_protocol);
  if (srv < 0) {
    freeaddrinfo(res);
    throw TransportError("socket: " + std::string(std::strerror(errno)));
  }
  const int one = 1;
  setsockopt(srv, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  const bool bound = ::bind(srv, res->ai_addr, res->ai_addrlen) == 0 && ::listen(srv, 1) == 0;
  freeaddrinfo(res);
  if (!bound) {
    const std::string why = std::strerror(errno);
    close(srv);
    throw TransportError("cannot listen on " + addr + ": " + why);
  }
  set_timeout(srv, timeout_s);
  const int fd = ::accept(srv, nullptr, nullptr);
  close(srv);
  if (fd < 0) throw TransportError("no peer connected to " + addr);
  set_timeout(fd, timeout_s);
  return StreamLink(fd);
}

StreamLink StreamLink::connect(const std::string& addr, int timeout_s) {
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_s);
  while (true) {
    addrinfo* res = resolve(addr, false);
    const int fd = socket(res->ai_family, res->ai_socktype, res->ai_protocol);
    const bool ok = fd >= 0 && ::connect(fd, res->ai_addr, res->ai_addrlen) == 0;
    freeaddrinfo(res);
    if (ok) {
      set_timeout(fd, timeout_s);
      return StreamLink(fd);
    }
    if (fd >= 0) close(fd);
    if (std::chrono::steady_clock::now() >= deadline) {
      throw TransportError("cannot connect to " + addr);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
}

StreamLink::~StreamLink() {
  if (fd_ >= 0) close(fd_);
}

void StreamLink::write_all(const std::uint8_t* p, std::size_t n) {
  while (n > 0) {
    const ssize_t w = ::send(fd_, p, n, MSG_NOSIGNAL);
    if (w <= 0) throw TransportError("peer closed the connection");
    p += w;
    n -= static_cast<std::size_t>(w);
  }
}

void StreamLink::read_all(std::uint8_t* p, std::size_t n) {
  while (n > 0) {
    const ssize_t r = ::recv(fd_, p, n, 0);
    if (r == 0) throw TransportError("peer closed the connection");
    if (r < 0) throw TransportError("receive timed out");
    p += r;
    n -= static_cast<std::size_t>(r);
  }
}

void StreamLink::send_message(std::span<const std::uint8_t> msg) {
  for (const Frame& f : fragment(msg, next_id_)) {
    const auto bytes = f.serialize();
    const auto len = static_cast<std::uint8_t>(bytes.size());
    write_all(&len, 1);
    write_all(bytes.data(), bytes.size());
    ++frames_sent_;
  }
  next_id_ = static_cast<std::uint8_t>((next_id_ + 1) & 0x0F);
}

std::vector<std::uint8_t> StreamLink::recv_message() {
  Reassembler r;
  while (true) {
    std::uint8_t len = 0;
    read_all(&len, 1);
    std::vector<std::uint8_t> buf(len);
    read_all(buf.data(), buf.size());
    if (auto whole = r.accept(Frame::parse(buf))) return std::move(*whole);
  }
}

RemoteResult run_remote(const Curve& curve, Party& self, Rng& rng, StreamLink& link) {
  RemoteResult out;
  const Sender me = self.role();
  const Sender peer = me == Sender::kProver ? Sender::kVerifier : Sender::kProver;
  auto send_all = [&](std::vector<Message> msgs) {
    for (auto& m : msgs) {
      const auto bytes = encode(curve, m);
      self.ledger().messages_tx += 1;
      self.ledger().bytes_tx += bytes.size();
      link.send_message(bytes);
      out.transcript.add(me, std::move(m));
    }
  };
  send_all(self.start(rng));
  while (!self.done()) {
    const auto bytes = link.recv_message();
    self.ledger().messages_rx += 1;
    self.ledger().bytes_rx += bytes.size();
    Message msg = decode(curve, bytes);
    out.transcript.add(peer, msg);
    send_all(self.receive(msg, rng));
  }
  out.accepted = out.transcript.accepted();
  return out;
}

}  // namespace zkec::cli
