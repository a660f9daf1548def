#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "socket.hpp"
#include "zkec/costmodel.hpp"
#include "zkec/errors.hpp"
#include "zkec/rng.hpp"
#include "zkec/session.hpp"
#include "zkec/sha1.hpp"

namespace zkec::cli {

namespace {

constexpr int kExitSoftware = 70;
constexpr int kSocketTimeout = 30;

const Curve& selected_curve() {
  const char* name = std::getenv("ZKEC_CURVE");
  return curve_by_name(name != nullptr && *name != '\0' ? name : kDefaultCurveName);
}

std::string party_label(Sender s) { return s == Sender::kProver ? "PRV" : "VER"; }

std::string statement_path(const std::string& transcript) { return transcript + ".stmt"; }

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw ParameterError("cannot write " + path);
}

struct RunOptions {
  std::string protocol;
  unsigned rounds = 100;
  std::string device = "isense-jn5139";
  double loss = 0.0;
  unsigned retries = 10;
  std::optional<std::uint64_t> seed;
  std::string transcript;
  std::string statement;
  std::string challenge_mode = "random";
  bool cheat = false;
  std::string listen;
  std::string connect;
};

void print_transcript_summary(std::ostream& out, const Curve& curve, const Transcript& t) {
  // Consecutive runs of the same (sender, type) collapse into one line.
  out << "transcript:\n";
  std::size_t i = 0;
  while (i < t.entries.size()) {
    const auto& e = t.entries[i];
    std::size_t j = i + 1;
    if (!std::holds_alternative<FinalMsg>(e.msg)) {
      while (j < t.entries.size() && t.entries[j].from == e.from &&
             message_type(t.entries[j].msg) == message_type(e.msg)) {
        ++j;
      }
    }
    out << "  " << party_label(e.from) << " " << message_name(e.msg);
    if (const auto* f = std::get_if<FinalMsg>(&e.msg)) out << (f->accept ? " accept" : " reject");
    out << " (" << encoded_size(curve, message_type(e.msg)) << " B)";
    if (j - i > 1) out << " x" << (j - i);
    out << "\n";
    i = j;
  }
  if (t.entries.size() > 8) {
    out << "  " << t.entries.size() << " messages in total\n";
  }
}

void print_costs(std::ostream& out, const CostLedger& prv, const CostLedger& ver,
                 const DeviceProfile& profile) {
  CostReport p = session_report(prv, profile);
  const CostReport v = session_report(ver, profile);
  out << render_table(p, "cost PRV on " + profile.name);
  out << render_table(v, "cost VER on " + profile.name);
  p += v;
  out << render_table(p, "cost PRV+VER on " + profile.name);
}

void print_traffic(std::ostream& out, Sender s, const CostLedger& l,
                   const std::optional<ChannelStats>& stats) {
  out << "  " << party_label(s) << ": " << l.messages_tx << " msgs sent, " << l.bytes_tx
      << " bytes";
  if (stats) {
    out << ", " << stats->frames << " frames, " << stats->retransmissions << " retransmissions";
  }
  out << "\n";
}

int finish_verdict(std::ostream& out, bool accept, RejectReason reason) {
  out << "verdict: " << (accept ? "ACCEPT" : "REJECT") << "\n";
  if (!accept && reason != RejectReason::kPending) {
    out << "reason: " << reject_reason_name(reason) << "\n";
  }
  return accept ? kExitAccept : kExitReject;
}

int cmd_keygen(std::ostream& out, std::optional<std::uint64_t> seed, const std::string& sk_hex) {
  const Curve& curve = selected_curve();
  std::optional<Scalar> sk;
  if (!sk_hex.empty()) {
    sk = Scalar::from_bytes(curve.order(), bytes_from_hex(sk_hex));
    if (sk->is_zero()) throw ParameterError("secret key must be nonzero");
  } else if (seed) {
    SeededRng rng(*seed);
    sk = Scalar::random(curve.order(), rng);
  } else {
    SystemRng rng;
    sk = Scalar::random(curve.order(), rng);
  }
  const Point pk = curve.mul(*sk, curve.generator());
  out << "sk = " << to_hex(sk->to_bytes()) << "\n";
  out << "pk = " << to_hex(curve.encode(pk)) << "\n";
  return kExitAccept;
}

int run_socket(std::ostream& out, const RunOptions& o, Protocol protocol, const Curve& curve,
               const ProtocolOptions& popts) {
  if (!o.seed && o.statement.empty()) {
    throw ParameterError("socket mode needs --seed (shared instance) or --statement");
  }
  const std::uint64_t seed = o.seed.value_or(0);
  SeededRng instance_rng(derive_seed(seed, 3));
  Instance inst = make_instance(curve, protocol, instance_rng);
  const bool is_verifier = !o.listen.empty();
  if (!o.statement.empty()) {
    if (!is_verifier) throw ParameterError("--statement is only for the verifier side");
    auto [p, st] = parse_statement(curve, read_text(o.statement));
    if (p != protocol) throw ParameterError("statement file is for another protocol");
    inst.statement = std::move(st);
  }

  std::unique_ptr<Party> party;
  if (is_verifier) {
    party = make_verifier(curve, protocol, inst.statement, popts);
  } else if (o.cheat) {
    party = make_cheater(curve, protocol, inst.statement, popts);
  } else {
    party = make_prover(curve, protocol, inst.statement, inst.witness, popts);
  }
  SeededRng rng(derive_seed(seed, is_verifier ? 2 : 1));
  StreamLink link = is_verifier ? StreamLink::listen(o.listen, kSocketTimeout)
                                : StreamLink::connect(o.connect, kSocketTimeout);
  const RemoteResult r = run_remote(curve, *party, rng, link);

  const Sender me = party->role();
  out << "protocol: " << protocol_name(protocol) << "\n";
  out << "role: " << party_label(me) << "\n";
  out << "messages:\n";
  out << "  " << party_label(me) << ": " << party->ledger().messages_tx << " msgs sent, "
      << party->ledger().bytes_tx << " bytes, " << link.frames_sent() << " frames\n";
  print_transcript_summary(out, curve, r.transcript);
  if (!o.transcript.empty() && is_verifier) {
    save_transcript_file(curve, r.transcript, o.transcript);
    write_text(statement_path(o.transcript), format_statement(curve, protocol, inst.statement));
  }
  RejectReason reason = RejectReason::kPending;
  if (const auto* v = dynamic_cast<const VerifierParty*>(party.get())) reason = v->verdict().reason;
  return finish_verdict(out, r.accepted, reason);
}

int cmd_run(std::ostream& out, const RunOptions& o) {
  const Curve& curve = selected_curve();
  const Protocol protocol = protocol_from_name(o.protocol);
  if (o.cheat && protocol != Protocol::kCoinFlip) {
    throw ParameterError("--cheat is only available for coinflip");
  }
  if (o.rounds == 0) throw ParameterError("--rounds must be at least 1");
  const DeviceProfile profile = resolve_profile(o.device);
  ProtocolOptions popts;
  popts.rounds = o.rounds;
  popts.challenge = challenge_mode_from_name(o.challenge_mode);

  if (!o.listen.empty() || !o.connect.empty()) return run_socket(out, o, protocol, curve, popts);

  std::uint64_t seed = 0;
  if (o.seed) {
    seed = *o.seed;
  } else {
    SystemRng sys;
    seed = sys.next_u64();
  }
  SessionConfig cfg;
  cfg.options = popts;
  cfg.channel.loss_probability = o.loss;
  cfg.channel.max_retries = o.retries;
  cfg.cheat = o.cheat;
  const SessionRun run = run_seeded_session(curve, protocol, cfg, seed);
  const SessionResult& r = run.result;

  out << "protocol: " << protocol_name(protocol) << "\n";
  out << "curve: " << curve.name() << "\n";
  out << "seed: " << seed << "\n";
  if (protocol == Protocol::kCoinFlip) out << "rounds: " << o.rounds << "\n";
  if (protocol == Protocol::kSchnorr) out << "challenge: " << o.challenge_mode << "\n";
  out << "messages:\n";
  print_traffic(out, Sender::kProver, r.prover, run.uplink);
  print_traffic(out, Sender::kVerifier, r.verifier, run.downlink);
  print_transcript_summary(out, curve, r.transcript);
  print_costs(out, r.prover, r.verifier, profile);
  if (!o.transcript.empty()) {
    save_transcript_file(curve, r.transcript, o.transcript);
    write_text(statement_path(o.transcript),
               format_statement(curve, protocol, run.instance.statement));
    out << "transcript: " << o.transcript << "\n";
  }
  return finish_verdict(out, r.verdict.accept, r.verdict.reason);
}

int cmd_replay(std::ostream& out, const std::string& transcript, std::string statement) {
  const Curve& curve = selected_curve();
  if (statement.empty()) statement = statement_path(transcript);
  const auto [protocol, st] = parse_statement(curve, read_text(statement));
  const Transcript t = load_transcript_file(curve, transcript);
  const Verdict v = replay_transcript(curve, protocol, st, t);
  out << "protocol: " << protocol_name(protocol) << "\n";
  out << "messages: " << t.entries.size() << "\n";
  out << "recorded verdict: " << (t.accepted() ? "ACCEPT" : "REJECT") << "\n";
  return finish_verdict(out, v.accept, v.reason);
}

int cmd_cost(std::ostream& out, const std::string& protocol_name_arg, const std::string& device,
             unsigned rounds, bool tsv) {
  const Curve& curve = selected_curve();
  const Protocol protocol = protocol_from_name(protocol_name_arg);
  const DeviceProfile profile = resolve_profile(device);
  if (rounds == 0) throw ParameterError("--rounds must be at least 1");
  const SessionResult r = model_session(curve, protocol, rounds);
  CostReport prv = session_report(r.prover, profile);
  const CostReport ver = session_report(r.verifier, profile);
  CostReport both = prv;
  both += ver;
  if (tsv) {
    out << render_tsv(prv, "prv.") << render_tsv(ver, "ver.") << render_tsv(both, "total.");
    return kExitAccept;
  }
  out << "protocol: " << protocol_name(protocol) << "\n";
  out << "device: " << profile.name << "\n";
  if (protocol == Protocol::kCoinFlip) out << "rounds: " << rounds << "\n";
  out << render_table(prv, "PRV") << render_table(ver, "VER") << render_table(both, "PRV+VER");
  std::ostringstream line;
  line << std::fixed << std::setprecision(3) << "total time: " << both.total_time
       << " s, total energy: " << both.total_energy << " J\n";
  out << line.str();
  return kExitAccept;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-knowledge proofs over a binary elliptic curve"};
  app.name("zkec");
  app.require_subcommand(1);

  std::optional<std::uint64_t> keygen_seed;
  std::string keygen_sk;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--seed", keygen_seed, "Deterministic seed");
  keygen->add_option("--sk", keygen_sk, "Use this secret key (hex) instead of a random one");

  RunOptions ro;
  auto* run = app.add_subcommand("run", "Run a protocol session");
  run->add_option("--protocol", ro.protocol, "coinflip, schnorr, schnorr-ni, dleq, dleq-ni, singlebit")
      ->required();
  run->add_option("--rounds", ro.rounds, "Coin-flip rounds")->capture_default_str();
  run->add_option("--device", ro.device, "Device profile name or file")->capture_default_str();
  run->add_option("--loss", ro.loss, "Frame loss probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  run->add_option("--retries", ro.retries, "Retransmissions per frame")->capture_default_str();
  run->add_option("--seed", ro.seed, "Deterministic seed");
  run->add_option("--transcript", ro.transcript, "Write the transcript here (plus <path>.stmt)");
  run->add_option("--statement", ro.statement, "Statement file (socket verifier only)");
  run->add_option("--challenge-mode", ro.challenge_mode, "Schnorr challenge: random or hash")
      ->check(CLI::IsMember({"random", "hash"}))
      ->capture_default_str();
  run->add_flag("--cheat", ro.cheat, "Coin flip without the witness");
  auto* listen = run->add_option("--listen", ro.listen, "Act as verifier on host:port");
  auto* connect = run->add_option("--connect", ro.connect, "Act as prover, connect to host:port");
  listen->excludes(connect);

  std::string replay_transcript_path;
  std::string replay_statement;
  auto* replay = app.add_subcommand("replay", "Re-verify a recorded transcript");
  replay->add_option("--transcript", replay_transcript_path, "Transcript file")->required();
  replay->add_option("--statement", replay_statement, "Statement file (default <transcript>.stmt)");

  std::string cost_protocol;
  std::string cost_device = "isense-jn5139";
  unsigned cost_rounds = 100;
  bool cost_tsv = false;
  auto* cost = app.add_subcommand("cost", "Model time and energy on a device");
  cost->add_option("--protocol", cost_protocol, "Protocol name")->required();
  cost->add_option("--device", cost_device, "Device profile name or file")->capture_default_str();
  cost->add_option("--rounds", cost_rounds, "Coin-flip rounds")->capture_default_str();
  cost->add_flag("--tsv", cost_tsv, "metric<TAB>value<TAB>unit output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAccept;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitAccept;
  } catch (const CLI::ParseError& e) {
    err << "zkec: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (keygen->parsed()) return cmd_keygen(out, keygen_seed, keygen_sk);
    if (run->parsed()) return cmd_run(out, ro);
    if (replay->parsed()) return cmd_replay(out, replay_transcript_path, replay_statement);
    if (cost->parsed()) return cmd_cost(out, cost_protocol, cost_device, cost_rounds, cost_tsv);
  } catch (const ParameterError& e) {
    err << "zkec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DecodeError& e) {
    err << "zkec: decode error: " << e.what() << "\n";
    return kExitDecode;
  } catch (const ValidationError& e) {
    err << "zkec: decode error: " << e.what() << "\n";
    return kExitDecode;
  } catch (const TransportError& e) {
    err << "zkec: transport failure: " << e.what() << "\n";
    return kExitTransport;
  } catch (const std::exception& e) {
    err << "zkec: " << e.what() << "\n";
    return kExitSoftware;
  }
  return kExitUsage;
}

}  // namespace zkec::cli
