#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "zkec/challenge.hpp"
#include "zkec/coinflip.hpp"
#include "zkec/dleq.hpp"
#include "zkec/errors.hpp"
#include "zkec/rng.hpp"
#include "zkec/schnorr.hpp"
#include "zkec/signature.hpp"
#include "zkec/singlebit.hpp"

using namespace zkec;
using boost::multiprecision::cpp_int;

namespace {

cpp_int big(const Scalar& s) { return cpp_int("0x" + s.to_hex()); }
cpp_int big(const UInt256& v) { return cpp_int("0x" + v.to_hex()); }

Point repeated_add(const Curve& c, unsigned k, const Point& p) {
  Point acc = c.infinity();
  for (unsigned i = 0; i < k; ++i) acc = c.add(acc, p);
  return acc;
}

Instance instance(Protocol p, std::uint64_t seed) {
  SeededRng rng(seed);
  return make_instance(default_curve(), p, rng);
}

}  // namespace

TEST_CASE("instances satisfy their witnesses") {
  const Curve& c = default_curve();
  SeededRng rng(1);
  for (Protocol p : all_protocols()) {
    const auto inst = make_instance(c, p, rng);
    CHECK_NOTHROW(check_witness(c, p, inst.statement, inst.witness));
  }
  auto bad = make_instance(c, Protocol::kSchnorr, rng);
  bad.witness.x = bad.witness.x + c.scalar(1);
  CHECK_THROWS_AS(check_witness(c, Protocol::kSchnorr, bad.statement, bad.witness), InvalidWitness);
  CHECK_THROWS_AS(SchnorrProver(c, bad.statement, bad.witness), InvalidWitness);
  CHECK_THROWS_AS(validate_statement(c, Protocol::kDleq, bad.statement), ValidationError);
  Statement no_h = make_instance(c, Protocol::kSingleBit, rng).statement;
  no_h.h = c.infinity();
  CHECK_THROWS_AS(validate_statement(c, Protocol::kSingleBit, no_h), ValidationError);
}

TEST_CASE("protocol names") {
  for (Protocol p : all_protocols()) CHECK(protocol_from_name(protocol_name(p)) == p);
  CHECK(protocol_name(Protocol::kSignature) == "schnorr-ni");
  CHECK_THROWS_AS(protocol_from_name("zk"), ParameterError);
  CHECK(challenge_mode_from_name("hash") == ChallengeMode::kHash);
  CHECK_THROWS_AS(challenge_mode_from_name("oracle"), ParameterError);
}

TEST_CASE("coin flip round algebra") {
  const Curve& c = default_curve();
  const auto inst = instance(Protocol::kCoinFlip, 2);
  const auto& st = inst.statement;
  SeededRng rng(3);

  CoinFlipProver p(c, st, inst.witness, 2);
  const PointMsg a = p.commit_with_nonce(c.scalar(5));
  CHECK(a.a == repeated_add(c, 5, c.generator()));
  CoinFlipProver heads = p;
  CHECK(heads.respond(CoinMsg{false}).v == c.scalar(5));
  const ScalarMsg m = p.respond(CoinMsg{true});
  CHECK(c.mul(m.v, c.generator()) == c.add(a.a, st.b));

  // Same seed, same commitment.
  SeededRng r1(9), r2(9);
  CoinFlipProver q1(c, st, inst.witness, 1), q2(c, st, inst.witness, 1);
  CHECK(q1.commit(r1) == q2.commit(r2));

  // x = 0: B = O and the tails response is the nonce itself.
  const Statement zero{c.infinity(), {}, {}, {}};
  CoinFlipProver z(c, zero, Witness{c.scalar(0)}, 1);
  z.commit_with_nonce(c.scalar(77));
  CHECK(z.respond(CoinMsg{true}).v == c.scalar(77));
}

TEST_CASE("coin flip sessions") {
  const Curve& c = default_curve();
  const auto inst = instance(Protocol::kCoinFlip, 4);
  SeededRng prng(5), vrng(6);
  CoinFlipProver p(c, inst.statement, inst.witness, 10);
  CoinFlipVerifier v(c, inst.statement, 10);
  for (int round = 0; round < 10; ++round) {
    const auto a = p.commit(prng);
    const auto coin = v.flip(a, vrng);
    const auto f = v.check(p.respond(coin));
    CHECK(f.accept);
    p.on_verdict(f);
  }
  CHECK(v.done());
  CHECK(v.verdict() == Verdict{true, RejectReason::kNone});
  CHECK(v.rounds_accepted() == 10);
  CHECK(p.done());
  CHECK_THROWS_AS(v.flip(PointMsg{c.generator()}, vrng), ProtocolOrderError);
}

TEST_CASE("coin flips are fair and seeded") {
  const Curve& c = default_curve();
  const auto inst = instance(Protocol::kCoinFlip, 7);
  SeededRng vrng(8);
  CoinFlipVerifier v(c, inst.statement, 1000);
  int tails = 0;
  const PointMsg a{c.generator()};
  std::vector<bool> seen;
  for (int i = 0; i < 1000; ++i) {
    CoinFlipVerifier fresh = v;  // copy: every flip from the same state
    const bool t = fresh.flip(a, vrng).tails;
    seen.push_back(t);
    tails += t;
  }
  CHECK(tails >= 450);
  CHECK(tails <= 550);
  SeededRng again(8);
  for (int i = 0; i < 1000; ++i) {
    CoinFlipVerifier fresh = v;
    CHECK(fresh.flip(a, again).tails == seen[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("coin flip rejections") {
  const Curve& c = default_curve();
  const auto inst = instance(Protocol::kCoinFlip, 10);
  SeededRng rng(11);

  SUBCASE("cheater caught on heads") {
    auto cheat = CoinFlipProver::cheater(c, inst.statement, 1);
    CoinFlipVerifier v(c, inst.statement, 1);
    v.set_challenge_script({CoinMsg{false}});
    const auto coin = v.flip(cheat.commit(rng), rng);
    CHECK_FALSE(v.check(cheat.respond(coin, &rng)).accept);
    CHECK(v.verdict().reason == RejectReason::kHeadsCheck);
  }
  SUBCASE("cheater passes tails") {
    auto cheat = CoinFlipProver::cheater(c, inst.statement, 1);
    CoinFlipVerifier v(c, inst.statement, 1);
    v.set_challenge_script({CoinMsg{true}});
    const auto coin = v.flip(cheat.commit(rng), rng);
    CHECK(v.check(cheat.respond(coin, &rng)).accept);
  }
  SUBCASE("tampered response") {
    CoinFlipProver p(c, inst.statement, inst.witness, 3);
    CoinFlipVerifier v(c, inst.statement, 3);
    v.set_challenge_script({CoinMsg{true}});
    const auto coin = v.flip(p.commit(rng), rng);
    ScalarMsg m = p.respond(coin);
    m.v = m.v + c.scalar(1);
    CHECK_FALSE(v.check(m).accept);
    CHECK(v.verdict().reason == RejectReason::kTailsCheck);
    CHECK_THROWS_AS(v.flip(PointMsg{c.generator()}, rng), ProtocolOrderError);
  }
  SUBCASE("order and parameters") {
    CoinFlipProver p(c, inst.statement, inst.witness, 1);
    CHECK_THROWS_AS(p.respond(CoinMsg{true}), ProtocolOrderError);
    CHECK_THROWS_AS(p.on_verdict(FinalMsg{true}), ProtocolOrderError);
    CHECK_THROWS_AS(CoinFlipProver(c, inst.statement, inst.witness, 0), ParameterError);
    CoinFlipVerifier v(c, inst.statement, 1);
    CHECK_THROWS_AS(v.check(ScalarMsg{c.scalar(1)}), ProtocolOrderError);
    CHECK_THROWS_AS(v.receive(CoinMsg{true}, rng), ProtocolOrderError);
    v.set_challenge_script({ScalarMsg{c.scalar(1)}});
    CHECK_THROWS_AS(v.flip(PointMsg{c.generator()}, rng), ProtocolOrderError);
  }
}

TEST_CASE("schnorr completeness over random keys") {
  const Curve& c = default_curve();
  SeededRng rng(12);
  for (auto mode : {ChallengeMode::kRandom, ChallengeMode::kHash}) {
    for (int i = 0; i < 50; ++i) {
      const auto inst = make_instance(c, Protocol::kSchnorr, rng);
      SchnorrProver p(c, inst.statement, inst.witness);
      SchnorrVerifier v(c, inst.statement, mode);
      const auto a = p.commit(rng);
      const auto ch = v.challenge(a, rng);
      if (mode == ChallengeMode::kHash) {
        CHECK(ch.v == challenge_from_points(c, {c.generator(), inst.statement.b, a.a}));
      }
      const auto f = v.check(p.respond(ch));
      CHECK(f.accept);
      p.on_verdict(f);
      CHECK(p.done());
    }
  }
}

TEST_CASE("schnorr edge cases") {
  const Curve& c = default_curve();
  const auto inst = instance(Protocol::kSchnorr, 13);
  SeededRng rng(14);

  SUBCASE("zero challenge answers with the nonce") {
    SchnorrProver p(c, inst.statement, inst.witness);
    SchnorrVerifier v(c, inst.statement);
    v.set_challenge_script({ScalarMsg{c.scalar(0)}});
    const auto a = p.commit_with_nonce(c.scalar(31337));
    const auto m = p.respond(v.challenge(a, rng));
    CHECK(m.v == c.scalar(31337));
    CHECK(v.check(m).accept);
  }
  SUBCASE("extractor") {
    for (int i = 0; i < 10; ++i) {
      SchnorrProver p1(c, inst.statement, inst.witness);
      p1.commit(rng);
      SchnorrProver p2 = p1;
      const Scalar c1 = Scalar::random(c.order(), rng), c2 = Scalar::random(c.order(), rng);
      const auto m1 = p1.respond(ScalarMsg{c1});
      const auto m2 = p2.respond(ScalarMsg{c2});
      CHECK(extract_witness(c1, m1.v, c2, m2.v) == inst.witness.x);
    }
    CHECK_THROWS_AS(extract_witness(c.scalar(3), c.scalar(1), c.scalar(3), c.scalar(2)), DivisionByZero);
  }
  SUBCASE("tampered response or wrong key") {
    SchnorrProver p(c, inst.statement, inst.witness);
    SchnorrVerifier v(c, inst.statement);
    auto m = p.respond(v.challenge(p.commit(rng), rng));
    m.v = m.v + c.scalar(1);
    CHECK_FALSE(v.check(m).accept);
    CHECK(v.verdict().reason == RejectReason::kSchnorrCheck);

    const auto other = instance(Protocol::kSchnorr, 15);
    SchnorrProver p2(c, inst.statement, inst.witness);
    SchnorrVerifier v2(c, other.statement);
    CHECK_FALSE(v2.check(p2.respond(v2.challenge(p2.commit(rng), rng))).accept);
  }
  SUBCASE("order") {
    SchnorrProver p(c, inst.statement, inst.witness);
    CHECK_THROWS_AS(p.respond(ScalarMsg{c.scalar(1)}), ProtocolOrderError);
    p.commit(rng);
    CHECK_THROWS_AS(p.commit(rng), ProtocolOrderError);
    SchnorrVerifier v(c, inst.statement);
    CHECK_THROWS_AS(v.check(ScalarMsg{c.scalar(1)}), ProtocolOrderError);
    v.challenge(PointMsg{c.generator()}, rng);
    CHECK_THROWS_AS(v.challenge(PointMsg{c.generator()}, rng), ProtocolOrderError);
  }
}

TEST_CASE("signature: response matches a bignum oracle") {
  const Curve& c = default_curve();
  const cpp_int n = big(c.order().modulus());
  SeededRng rng(16);
  for (int i = 0; i < 20; ++i) {
    const auto inst = make_instance(c, Protocol::kSignature, rng);
    const Scalar r = Scalar::random(c.order(), rng);
    const auto sig = schnorr_sign_with_nonce(c, inst.statement, inst.witness, r);
    CHECK(sig.rg == c.mul(r, c.generator()));
    CHECK(sig.rp == c.mul(r, *inst.statement.p));
    CHECK(sig.xp == c.mul(inst.witness.x, *inst.statement.p));
    const Scalar ch = challenge_from_points(c, {sig.xp, sig.rp, sig.rg});
    CHECK(big(sig.s) == (big(r) + big(ch) * big(inst.witness.x)) % n);
    CHECK(schnorr_verify_signature(c, inst.statement, sig).accept);
  }
}

TEST_CASE("signature rejections") {
  const Curve& c = default_curve();
  SeededRng rng(17);
  const auto inst = make_instance(c, Protocol::kSignature, rng);
  const auto sig = schnorr_sign(c, inst.statement, inst.witness, rng);

  auto bumped = sig;
  bumped.s = bumped.s + c.scalar(1);
  CHECK(schnorr_verify_signature(c, inst.statement, bumped).reason == RejectReason::kSignatureG);

  // Flip one byte of x*P on the wire: decode fails or the check does.
  auto bytes = encode(c, sig);
  bytes[1 + 1 + 21 + 5] ^= 0x01;
  CHECK_FALSE(schnorr_verify_signature(c, inst.statement, bytes).accept);
  // Every single-byte flip after the tag is caught.
  const auto good = encode(c, sig);
  for (std::size_t i = 1; i < good.size(); i += 7) {
    auto b = good;
    b[i] ^= 0x80;
    CHECK_FALSE(schnorr_verify_signature(c, inst.statement, b).accept);
  }
  CHECK(schnorr_verify_signature(c, inst.statement, good).accept);
  CHECK(schnorr_verify_signature(c, inst.statement, std::vector<std::uint8_t>{0x06}).reason ==
        RejectReason::kMalformed);

  int rejected = 0;
  for (int i = 0; i < 10; ++i) {
    Statement other = inst.statement;
    other.p = c.mul(Scalar::random(c.order(), rng), c.generator());
    rejected += !schnorr_verify_signature(c, other, sig).accept;
  }
  CHECK(rejected == 10);

  CostLedger ledger;
  schnorr_verify_signature(c, inst.statement, sig, &ledger);
  CHECK(ledger.count(OpKind::kPointMul) == 4);
  CHECK(ledger.count(OpKind::kHash) == 1);
}

TEST_CASE("dleq") {
  const Curve& c = default_curve();
  SeededRng rng(18);

  SUBCASE("honest interactive and non-interactive") {
    for (int i = 0; i < 20; ++i) {
      const auto inst = make_instance(c, Protocol::kDleq, rng);
      DleqProver p(c, inst.statement, inst.witness);
      DleqVerifier v(c, inst.statement);
      const auto ch = v.on_commit(p.commit(rng), rng);
      REQUIRE(ch.has_value());
      CHECK(v.check(p.respond(*ch)).accept);

      DleqProver pn(c, inst.statement, inst.witness, true);
      DleqVerifier vn(c, inst.statement, true);
      const auto kl = pn.commit(rng);
      CHECK_FALSE(vn.on_commit(kl, rng).has_value());
      CHECK(vn.check(pn.respond_to_hash()).accept);
    }
  }
  SUBCASE("unequal exponents") {
    int rejected = 0;
    for (int i = 0; i < 10; ++i) {
      const auto inst = make_instance(c, Protocol::kDleq, rng);
      Statement lie = inst.statement;
      lie.c = c.mul(inst.witness.x + c.scalar(1), *lie.h);
      // A prover holding x answers for B; the C side cannot match.
      DleqProver p(c, inst.statement, inst.witness);
      DleqVerifier v(c, lie);
      const auto ch = v.on_commit(p.commit(rng), rng);
      const auto f = v.check(p.respond(*ch));
      rejected += !f.accept;
      CHECK(v.verdict().reason == RejectReason::kDleqH);
      CHECK_THROWS_AS(DleqProver(c, lie, inst.witness), InvalidWitness);
    }
    CHECK(rejected == 10);
  }
  SUBCASE("hash input order") {
    const auto inst = make_instance(c, Protocol::kDleq, rng);
    DleqProver p(c, inst.statement, inst.witness, true);
    const auto kl = p.commit(rng);
    const auto& st = inst.statement;
    CHECK(dleq_challenge(c, st, kl) ==
          challenge_from_points(c, {st.b, c.generator(), *st.c, *st.h, kl.first, kl.second}));
    CHECK_FALSE(dleq_challenge(c, st, kl) ==
                challenge_from_points(c, {c.generator(), st.b, *st.c, *st.h, kl.first, kl.second}));
  }
  SUBCASE("mode mismatch") {
    const auto inst = make_instance(c, Protocol::kDleq, rng);
    DleqProver ni(c, inst.statement, inst.witness, true);
    ni.commit(rng);
    CHECK_THROWS_AS(ni.respond(ScalarMsg{c.scalar(1)}), ProtocolOrderError);
    DleqProver inter(c, inst.statement, inst.witness);
    inter.commit(rng);
    CHECK_THROWS_AS(inter.respond_to_hash(), ProtocolOrderError);
  }
}

TEST_CASE("single bit commitment algebra") {
  const Curve& c = default_curve();
  SeededRng rng(19);
  const Point& g = c.generator();
  const Scalar s = c.scalar(11), d = c.scalar(22), w = c.scalar(33);

  auto plus = make_instance(c, Protocol::kSingleBit, rng);
  plus.witness.sign = 1;
  plus.statement.b = c.add(c.mul(plus.witness.x, g), *plus.statement.h);
  SingleBitProver pp(c, plus.statement, plus.witness);
  const auto ac = pp.commit_with(s, d, w);
  const Point bh = c.add(plus.statement.b, *plus.statement.h);
  CHECK(c.add(ac.first, c.mul(d, bh)) == c.mul(s, g));
  CHECK(ac.second == c.mul(w, g));

  // Same randomness, other sign: the two points trade places.
  Statement minus_st = plus.statement;
  minus_st.b = c.sub(c.mul(plus.witness.x, g), *plus.statement.h);
  SingleBitProver pm(c, minus_st, Witness{plus.witness.x, -1});
  const auto ac2 = pm.commit_with(s, d, w);
  CHECK(ac2.first == c.mul(w, g));
  const Point bmh = c.sub(minus_st.b, *minus_st.h);
  CHECK(c.add(ac2.second, c.mul(d, bmh)) == c.mul(s, g));

  const auto q = pp.respond(ScalarMsg{c.scalar(100)});
  CHECK(q.d + q.e == c.scalar(100));
  const auto q2 = pm.respond(ScalarMsg{c.scalar(100)});
  CHECK(q2.d + q2.e == c.scalar(100));
  CHECK(q2.e == d);
  CHECK(q2.t == s);
}

TEST_CASE("single bit completeness for both signs") {
  const Curve& c = default_curve();
  SeededRng rng(20);
  int per_sign[2] = {0, 0};
  while (per_sign[0] < 50 || per_sign[1] < 50) {
    const auto inst = make_instance(c, Protocol::kSingleBit, rng);
    const int idx = inst.witness.sign == 1 ? 0 : 1;
    if (per_sign[idx] >= 50) continue;
    ++per_sign[idx];
    SingleBitProver p(c, inst.statement, inst.witness);
    SingleBitVerifier v(c, inst.statement);
    const auto ac = p.commit(rng);
    const auto resp = p.respond(v.challenge(ac, rng));
    // Same shape on the wire whatever the sign.
    CHECK(encode(c, ac).size() == 85);
    CHECK(encode(c, resp).size() == 85);
    CHECK(v.check(resp).accept);
  }
}

TEST_CASE("single bit rejections") {
  const Curve& c = default_curve();
  SeededRng rng(21);

  // B = x*G + 2H satisfies neither branch.
  int rejected = 0;
  for (int i = 0; i < 10; ++i) {
    auto inst = make_instance(c, Protocol::kSingleBit, rng);
    inst.statement.b = c.add(c.mul(inst.witness.x, c.generator()), c.mul(c.scalar(2), *inst.statement.h));
    CHECK_THROWS_AS(SingleBitProver(c, inst.statement, inst.witness), InvalidWitness);
    auto p = SingleBitProver::unchecked(c, inst.statement, inst.witness);
    SingleBitVerifier v(c, inst.statement);
    const auto f = v.check(p.respond(v.challenge(p.commit(rng), rng)));
    rejected += !f.accept;
  }
  CHECK(rejected == 10);

  const auto inst = make_instance(c, Protocol::kSingleBit, rng);
  SingleBitProver p(c, inst.statement, inst.witness);
  SingleBitVerifier v(c, inst.statement);
  auto resp = p.respond(v.challenge(p.commit(rng), rng));
  SUBCASE("split") {
    resp.d = resp.d + c.scalar(1);
    CHECK_FALSE(v.check(resp).accept);
    CHECK(v.verdict().reason == RejectReason::kChallengeSplit);
  }
  SUBCASE("plus branch") {
    resp.s = resp.s + c.scalar(1);
    CHECK_FALSE(v.check(resp).accept);
    CHECK(v.verdict().reason == RejectReason::kPlusBranch);
  }
  SUBCASE("minus branch") {
    resp.t = resp.t + c.scalar(1);
    CHECK_FALSE(v.check(resp).accept);
    CHECK(v.verdict().reason == RejectReason::kMinusBranch);
  }
  SUBCASE("bad sign") {
    CHECK_THROWS_AS(SingleBitProver::unchecked(c, inst.statement, Witness{inst.witness.x, 0}),
                    InvalidWitness);
  }
}
