#include "zkec/session.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "zkec/coinflip.hpp"
#include "zkec/dleq.hpp"
#include "zkec/errors.hpp"
#include "zkec/rng.hpp"
#include "zkec/schnorr.hpp"
#include "zkec/sha1.hpp"
#include "zkec/signature.hpp"
#include "zkec/singlebit.hpp"

namespace zkec {

namespace {

Sender other(Sender s) { return s == Sender::kProver ? Sender::kVerifier : Sender::kProver; }

ChannelConfig with_seed(ChannelConfig c, std::uint64_t seed) {
  c.seed = seed;
  return c;
}

// Stream indices for derive_seed.
constexpr std::uint64_t kProverStream = 1;
constexpr std::uint64_t kVerifierStream = 2;
constexpr std::uint64_t kInstanceStream = 3;
constexpr std::uint64_t kChannelStream = 4;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::uint8_t> DirectTransport::carry(Sender, std::span<const std::uint8_t> message) {
  return {message.begin(), message.end()};
}

FramedTransport::FramedTransport(const ChannelConfig& config)
    : up_(with_seed(config, derive_seed(config.seed, 1))),
      down_(with_seed(config, derive_seed(config.seed, 2))) {}

std::vector<std::uint8_t> FramedTransport::carry(Sender from, std::span<const std::uint8_t> message) {
  LossyChannel& ch = link(from);
  std::uint8_t& id = next_id_[static_cast<std::size_t>(from)];
  const auto frames = fragment(message, id);
  id = static_cast<std::uint8_t>((id + 1) & 0x0F);
  for (const Frame& f : frames) ch.send(f);
  Reassembler r;
  while (ch.has_frame()) {
    const Frame f = Frame::parse(ch.recv().serialize());
    if (auto whole = r.accept(f)) return std::move(*whole);
  }
  throw TransportError("message incomplete after delivery");
}

std::uint64_t FramedTransport::retransmitted_bytes(Sender from) const {
  return link(from).stats().payload_bytes_retx;
}

SessionResult run_session(const Curve& curve, Party& prover, VerifierParty& verifier,
                          Transport& transport, Rng& prover_rng, Rng& verifier_rng) {
  SessionResult out;
  std::deque<std::pair<Sender, Message>> queue;
  auto enqueue = [&](Sender from, std::vector<Message> msgs) {
    for (auto& m : msgs) queue.emplace_back(from, std::move(m));
  };
  auto party = [&](Sender s) -> Party& {
    return s == Sender::kProver ? prover : static_cast<Party&>(verifier);
  };
  auto rng = [&](Sender s) -> Rng& { return s == Sender::kProver ? prover_rng : verifier_rng; };

  enqueue(Sender::kProver, prover.start(prover_rng));
  enqueue(Sender::kVerifier, verifier.start(verifier_rng));
  while (!queue.empty()) {
    auto [from, msg] = std::move(queue.front());
    queue.pop_front();
    Party& src = party(from);
    Party& dst = party(other(from));

    const auto bytes = encode(curve, msg);
    src.ledger().messages_tx += 1;
    src.ledger().bytes_tx += bytes.size();
    const std::uint64_t retx_before = transport.retransmitted_bytes(from);
    const auto received = transport.carry(from, bytes);
    src.ledger().bytes_retx += transport.retransmitted_bytes(from) - retx_before;
    dst.ledger().messages_rx += 1;
    dst.ledger().bytes_rx += received.size();

    Message in = decode(curve, received);
    out.transcript.add(from, in);
    enqueue(other(from), dst.receive(in, rng(other(from))));
  }
  if (!verifier.done()) throw ProtocolOrderError("session stalled before a verdict");
  out.verdict = verifier.verdict();
  out.prover = prover.ledger();
  out.verifier = verifier.ledger();
  return out;
}

std::unique_ptr<Party> make_prover(const Curve& curve, Protocol protocol, const Statement& st,
                                   const Witness& w, const ProtocolOptions& opts) {
  switch (protocol) {
    case Protocol::kCoinFlip:
      return std::make_unique<CoinFlipProver>(curve, st, w, opts.rounds);
    case Protocol::kSchnorr:
      return std::make_unique<SchnorrProver>(curve, st, w);
    case Protocol::kSignature:
      return std::make_unique<SignatureProver>(curve, st, w);
    case Protocol::kDleq:
      return std::make_unique<DleqProver>(curve, st, w, false);
    case Protocol::kDleqNi:
      return std::make_unique<DleqProver>(curve, st, w, true);
    case Protocol::kSingleBit:
      return std::make_unique<SingleBitProver>(curve, st, w);
  }
  throw ParameterError("unknown protocol");
}

std::unique_ptr<Party> make_cheater(const Curve& curve, Protocol protocol, const Statement& st,
                                    const ProtocolOptions& opts) {
  if (protocol != Protocol::kCoinFlip) {
    throw ParameterError("a cheating prover exists only for coinflip");
  }
  return std::make_unique<CoinFlipProver>(CoinFlipProver::cheater(curve, st, opts.rounds));
}

std::unique_ptr<VerifierParty> make_verifier(const Curve& curve, Protocol protocol,
                                             const Statement& st, const ProtocolOptions& opts) {
  switch (protocol) {
    case Protocol::kCoinFlip:
      return std::make_unique<CoinFlipVerifier>(curve, st, opts.rounds);
    case Protocol::kSchnorr:
      return std::make_unique<SchnorrVerifier>(curve, st, opts.challenge);
    case Protocol::kSignature:
      return std::make_unique<SignatureVerifier>(curve, st);
    case Protocol::kDleq:
      return std::make_unique<DleqVerifier>(curve, st, false);
    case Protocol::kDleqNi:
      return std::make_unique<DleqVerifier>(curve, st, true);
    case Protocol::kSingleBit:
      return std::make_unique<SingleBitVerifier>(curve, st);
  }
  throw ParameterError("unknown protocol");
}

SessionRun run_seeded_session(const Curve& curve, Protocol protocol, const SessionConfig& config,
                              std::uint64_t seed) {
  SeededRng rng(derive_seed(seed, kInstanceStream));
  return run_seeded_session(curve, protocol, make_instance(curve, protocol, rng), config, seed);
}

SessionRun run_seeded_session(const Curve& curve, Protocol protocol, const Instance& instance,
                              const SessionConfig& config, std::uint64_t seed) {
  SeededRng prover_rng(derive_seed(seed, kProverStream));
  SeededRng verifier_rng(derive_seed(seed, kVerifierStream));
  auto prover = config.cheat ? make_cheater(curve, protocol, instance.statement, config.options)
                             : make_prover(curve, protocol, instance.statement, instance.witness,
                                           config.options);
  auto verifier = make_verifier(curve, protocol, instance.statement, config.options);
  SessionRun run{protocol, instance, {}, std::nullopt, std::nullopt};
  if (config.framed) {
    FramedTransport transport(with_seed(config.channel, derive_seed(seed, kChannelStream)));
    run.result = run_session(curve, *prover, *verifier, transport, prover_rng, verifier_rng);
    run.uplink = transport.stats(Sender::kProver);
    run.downlink = transport.stats(Sender::kVerifier);
  } else {
    DirectTransport transport;
    run.result = run_session(curve, *prover, *verifier, transport, prover_rng, verifier_rng);
  }
  return run;
}

Verdict replay_transcript(const Curve& curve, Protocol protocol, const Statement& st,
                          const Transcript& t, const ProtocolOptions& opts) {
  std::vector<Message> script;
  for (const auto& e : t.entries) {
    if (e.from == Sender::kVerifier && !std::holds_alternative<FinalMsg>(e.msg)) {
      script.push_back(e.msg);
    }
  }
  ProtocolOptions o = opts;
  if (protocol == Protocol::kCoinFlip) {
    o.rounds = static_cast<unsigned>(std::max<std::size_t>(1, script.size()));
  }
  auto verifier = make_verifier(curve, protocol, st, o);
  if (protocol != Protocol::kSignature && protocol != Protocol::kDleqNi) {
    verifier->set_challenge_script(script);
  }

  // Anything the verifier would have said must match what was recorded.
  SeededRng unused(0);
  std::deque<Message> expected;
  try {
    for (const auto& e : t.entries) {
      if (e.from == Sender::kVerifier) {
        if (expected.empty() || !(expected.front() == e.msg)) {
          return Verdict{false, RejectReason::kOutOfOrder};
        }
        expected.pop_front();
        continue;
      }
      if (verifier->done()) return Verdict{false, RejectReason::kOutOfOrder};
      for (auto& m : verifier->receive(e.msg, unused)) expected.push_back(std::move(m));
    }
  } catch (const ProtocolOrderError&) {
    return Verdict{false, RejectReason::kOutOfOrder};
  }
  // A reply the transcript never recorded (typically the final verdict).
  if (!verifier->done() || !expected.empty()) return Verdict{false, RejectReason::kIncomplete};
  return verifier->verdict();
}

SessionResult model_session(const Curve& curve, Protocol protocol, unsigned rounds) {
  SeededRng instance_rng(1);
  const Instance inst = make_instance(curve, protocol, instance_rng);
  ProtocolOptions opts;
  opts.rounds = rounds;
  opts.challenge = ChallengeMode::kHash;
  auto prover = make_prover(curve, protocol, inst.statement, inst.witness, opts);
  auto verifier = make_verifier(curve, protocol, inst.statement, opts);
  if (protocol == Protocol::kCoinFlip) {
    std::vector<Message> coins;
    for (unsigned i = 0; i < rounds; ++i) coins.emplace_back(CoinMsg{i % 2 == 0});
    verifier->set_challenge_script(std::move(coins));
  }
  SeededRng prover_rng(2);
  SeededRng verifier_rng(3);
  DirectTransport transport;
  return run_session(curve, *prover, *verifier, transport, prover_rng, verifier_rng);
}

std::string format_statement(const Curve& curve, Protocol protocol, const Statement& st) {
  std::ostringstream os;
  os << "protocol = " << protocol_name(protocol) << "\n";
  os << "curve = " << curve.name() << "\n";
  os << "b = " << to_hex(curve.encode(st.b)) << "\n";
  if (st.h) os << "h = " << to_hex(curve.encode(*st.h)) << "\n";
  if (st.c) os << "c = " << to_hex(curve.encode(*st.c)) << "\n";
  if (st.p) os << "p = " << to_hex(curve.encode(*st.p)) << "\n";
  return os.str();
}

std::pair<Protocol, Statement> parse_statement(const Curve& curve, std::string_view text) {
  std::optional<Protocol> protocol;
  std::optional<Point> b;
  Statement st{curve.infinity(), std::nullopt, std::nullopt, std::nullopt};
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParameterError("statement line without '=': " + raw);
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "protocol") {
      protocol = protocol_from_name(value);
    } else if (key == "curve") {
      if (value != curve.name()) {
        throw ParameterError("statement is for curve " + std::string(value) + ", not " + curve.name());
      }
    } else if (key == "b") {
      b = curve.decode(bytes_from_hex(value));
    } else if (key == "h") {
      st.h = curve.decode(bytes_from_hex(value));
    } else if (key == "c") {
      st.c = curve.decode(bytes_from_hex(value));
    } else if (key == "p") {
      st.p = curve.decode(bytes_from_hex(value));
    } else {
      throw ParameterError("unknown statement key: " + std::string(key));
    }
  }
  if (!protocol) throw ParameterError("statement has no protocol line");
  if (!b) throw ParameterError("statement has no b line");
  st.b = *b;
  validate_statement(curve, *protocol, st);
  return {*protocol, std::move(st)};
}

}  // namespace zkec
