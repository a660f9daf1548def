#include "zkec/protocol.hpp"

#include <array>
#include <string>
#include <utility>

#include "zkec/errors.hpp"
#include "zkec/rng.hpp"

namespace zkec {

namespace {

constexpr std::array<std::pair<Protocol, std::string_view>, 6> kProtocolNames = {{
    {Protocol::kCoinFlip, "coinflip"},
    {Protocol::kSchnorr, "schnorr"},
    {Protocol::kSignature, "schnorr-ni"},
    {Protocol::kDleq, "dleq"},
    {Protocol::kDleqNi, "dleq-ni"},
    {Protocol::kSingleBit, "singlebit"},
}};

const Point& require(const std::optional<Point>& p, const char* name) {
  if (!p) throw ValidationError(std::string("statement is missing ") + name);
  return *p;
}

void require_on_curve(const Curve& curve, const Point& p, const char* name) {
  if (!curve.contains(p)) throw ValidationError(std::string(name) + " is not on the curve");
}

}  // namespace

std::string_view protocol_name(Protocol p) {
  for (const auto& [id, name] : kProtocolNames) {
    if (id == p) return name;
  }
  return "unknown";
}

Protocol protocol_from_name(std::string_view name) {
  for (const auto& [id, n] : kProtocolNames) {
    if (n == name) return id;
  }
  throw ParameterError("unknown protocol: " + std::string(name));
}

std::vector<Protocol> all_protocols() {
  std::vector<Protocol> out;
  for (const auto& entry : kProtocolNames) out.push_back(entry.first);
  return out;
}

std::string_view challenge_mode_name(ChallengeMode m) {
  return m == ChallengeMode::kHash ? "hash" : "random";
}

ChallengeMode challenge_mode_from_name(std::string_view name) {
  if (name == "random") return ChallengeMode::kRandom;
  if (name == "hash") return ChallengeMode::kHash;
  throw ParameterError("unknown challenge mode: " + std::string(name));
}

void validate_statement(const Curve& curve, Protocol protocol, const Statement& st) {
  require_on_curve(curve, st.b, "B");
  switch (protocol) {
    case Protocol::kCoinFlip:
    case Protocol::kSchnorr:
      break;
    case Protocol::kSignature:
      require_on_curve(curve, require(st.p, "P"), "P");
      break;
    case Protocol::kDleq:
    case Protocol::kDleqNi:
      require_on_curve(curve, require(st.c, "C"), "C");
      [[fallthrough]];
    case Protocol::kSingleBit: {
      const Point& h = require(st.h, "H");
      require_on_curve(curve, h, "H");
      if (h.is_infinity()) throw ValidationError("H must not be the point at infinity");
      break;
    }
  }
}

void check_witness(const Curve& curve, Protocol protocol, const Statement& st, const Witness& w) {
  validate_statement(curve, protocol, st);
  const Point xg = curve.mul(w.x, curve.generator());
  switch (protocol) {
    case Protocol::kCoinFlip:
    case Protocol::kSchnorr:
    case Protocol::kSignature:
      if (xg != st.b) throw InvalidWitness("B != x*G");
      break;
    case Protocol::kDleq:
    case Protocol::kDleqNi:
      if (xg != st.b) throw InvalidWitness("B != x*G");
      if (curve.mul(w.x, *st.h) != *st.c) throw InvalidWitness("C != x*H");
      break;
    case Protocol::kSingleBit: {
      if (w.sign != 1 && w.sign != -1) throw InvalidWitness("sign must be +1 or -1");
      const Point hh = w.sign == 1 ? *st.h : curve.negate(*st.h);
      if (curve.add(xg, hh) != st.b) throw InvalidWitness("B != x*G + h*H");
      break;
    }
  }
}

std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::kNone: return "none";
    case RejectReason::kPending: return "pending";
    case RejectReason::kHeadsCheck: return "heads check failed: v*G != A";
    case RejectReason::kTailsCheck: return "tails check failed: m*G != A + B";
    case RejectReason::kSchnorrCheck: return "m*G - c*B != A";
    case RejectReason::kSignatureG: return "s*G != rG + c*B";
    case RejectReason::kSignatureP: return "s*P != rP + c*xP";
    case RejectReason::kDleqG: return "m*G != K + c*B";
    case RejectReason::kDleqH: return "m*H != L + c*C";
    case RejectReason::kChallengeSplit: return "d + e != c";
    case RejectReason::kPlusBranch: return "s*G != A + d*(B+H)";
    case RejectReason::kMinusBranch: return "t*G != C + e*(B-H)";
    case RejectReason::kMalformed: return "malformed message";
    case RejectReason::kIncomplete: return "transcript ended early";
    case RejectReason::kOutOfOrder: return "unexpected message";
  }
  return "unknown";
}

void VerifierParty::set_challenge_script(std::vector<Message> script) {
  script_.emplace(script.begin(), script.end());
}

FinalMsg VerifierParty::finish(bool accept, RejectReason reason) {
  verdict_ = Verdict{accept, accept ? RejectReason::kNone : reason};
  return FinalMsg{accept};
}

void VerifierParty::require_pending() const {
  if (done()) throw ProtocolOrderError("verifier already reached a verdict");
}

void VerifierParty::throw_script_exhausted() {
  throw ProtocolOrderError("challenge script exhausted");
}

void VerifierParty::throw_script_mismatch() {
  throw ProtocolOrderError("scripted challenge has the wrong message type");
}

Instance make_instance(const Curve& curve, Protocol protocol, Rng& rng) {
  const Point& g = curve.generator();
  Scalar x = Scalar::random(curve.order(), rng);
  Statement st{curve.mul(x, g), std::nullopt, std::nullopt, std::nullopt};
  Witness w{x, 1};
  switch (protocol) {
    case Protocol::kCoinFlip:
    case Protocol::kSchnorr:
      break;
    case Protocol::kSignature:
      st.p = curve.mul(Scalar::random(curve.order(), rng), g);
      break;
    case Protocol::kDleq:
    case Protocol::kDleqNi:
      st.h = curve.mul(Scalar::random(curve.order(), rng), g);
      st.c = curve.mul(x, *st.h);
      break;
    case Protocol::kSingleBit:
      st.h = curve.mul(Scalar::random(curve.order(), rng), g);
      w.sign = rng.next_bit() ? 1 : -1;
      st.b = w.sign == 1 ? curve.add(st.b, *st.h) : curve.sub(st.b, *st.h);
      break;
  }
  return Instance{std::move(st), std::move(w)};
}

Scalar extract_witness(const Scalar& c1, const Scalar& m1, const Scalar& c2, const Scalar& m2) {
  return (m1 - m2) * (c1 - c2).inverse();
}

}  // namespace zkec
