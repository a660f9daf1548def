#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "device_figures.hpp"
#include "zkec/costmodel.hpp"
#include "zkec/curve.hpp"
#include "zkec/errors.hpp"
#include "zkec/session.hpp"

using namespace zkec;

namespace {

// Direct V*I*t, written out without the library's helpers.
double vit_mj(double volts, double amps, double seconds) { return volts * amps * seconds * 1e3; }

const char* kProfileText = R"(# a made-up device
name = testmote
voltage = 3.3
mcu_current = 0.002   # A
tx_current = 0.02
rx_current = 0.025
data_rate = 125000
keygen = 0.5
point_mul = 40
point_add = 0.2
sha1_250B = 0.05
scalar_add = 0.01
scalar_mul = 0.03
)";

}  // namespace

TEST_CASE("operation energy is V*I*t on both built-in devices") {
  const auto& is = isense_jn5139();
  const auto& tb = telosb_msp430();
  CHECK(op_energy(is, OpKind::kPointMul) * 1e3 == doctest::Approx(vit_mj(3, 0.0127, 11.121)));
  CHECK(op_energy(tb, OpKind::kPointMul) * 1e3 == doctest::Approx(vit_mj(3, 0.0018, 58.02)));
  CHECK(op_energy(is, "keygen") * 1e3 == doctest::Approx(vit_mj(3, 0.0127, 0.087)));
  CHECK(op_energy(tb, "sha1_250B") * 1e3 == doctest::Approx(vit_mj(3, 0.0018, 0.031)));
  CHECK_THROWS_AS(op_energy(is, "fft"), ParameterError);
}

TEST_CASE("reference per-operation energies that agree with their inputs") {
  // Cells whose printed value is consistent with V*I*t to 1%.
  const auto& is = isense_jn5139();
  const auto& tb = telosb_msp430();
  CHECK(op_energy(is, OpKind::kKeygen) * 1e3 == doctest::Approx(3.31).epsilon(0.01));
  CHECK(op_energy(tb, OpKind::kKeygen) * 1e3 == doctest::Approx(1.62).epsilon(0.01));
  CHECK(op_energy(is, OpKind::kPointMul) * 1e3 == doctest::Approx(423.6).epsilon(0.01));
  CHECK(op_energy(tb, OpKind::kPointMul) * 1e3 == doctest::Approx(313.3).epsilon(0.01));
  CHECK(op_energy(tb, OpKind::kPointAdd) * 1e3 == doctest::Approx(1.56).epsilon(0.01));
  CHECK(op_energy(is, OpKind::kScalarAdd) * 1e3 == doctest::Approx(0.19).epsilon(0.01));
  CHECK(op_energy(is, OpKind::kScalarMul) * 1e3 == doctest::Approx(0.53).epsilon(0.01));
  CHECK(op_energy(is, OpKind::kHash) * 1e3 == doctest::Approx(0.76).epsilon(0.01));
}

TEST_CASE("message energy from airtime") {
  const auto& is = isense_jn5139();
  // 85 bytes at 250 kbit/s is 2.72 ms.
  CHECK(message_energy(is, 85, Direction::kTx) * 1e3 == doctest::Approx(vit_mj(3, 0.0399, 0.00272)));
  CHECK(message_energy(is, 85, Direction::kRx) * 1e3 == doctest::Approx(vit_mj(3, 0.0437, 0.00272)));
  CHECK(message_energy(is, 0, Direction::kTx) == 0.0);
  CHECK(message_energy(is, 85, Direction::kRx) * 1e3 == doctest::Approx(0.36).epsilon(0.05));
  CHECK(message_energy(telosb_msp430(), 149, Direction::kTx) * 1e3 == doctest::Approx(0.3).epsilon(0.05));
}

TEST_CASE("session report sums ops and radio") {
  const auto& tb = telosb_msp430();
  CostLedger l;
  l.add(OpKind::kPointMul, 2);
  l.add(OpKind::kHash);
  l.bytes_tx = 100;
  l.bytes_rx = 50;
  const auto r = session_report(l, tb);
  const double compute = 2 * 58.02 + 0.031;
  CHECK(r.compute_time == doctest::Approx(compute));
  CHECK(r.radio_time == doctest::Approx(800.0 / 250000));
  CHECK(r.total_time == doctest::Approx(compute + 800.0 / 250000));
  CHECK(r.compute_energy * 1e3 == doctest::Approx(vit_mj(3, 0.0018, compute)));
  CHECK(r.tx_energy * 1e3 == doctest::Approx(vit_mj(3, 0.021, 800.0 / 250000)));
  CHECK(r.rx_energy * 1e3 == doctest::Approx(vit_mj(3, 0.023, 400.0 / 250000)));
  CHECK(r.total_energy == doctest::Approx(r.compute_energy + r.tx_energy + r.rx_energy));
  REQUIRE(r.breakdown.size() == kOpKinds + 2);
  CHECK(r.breakdown[1].count == 2);

  // Retransmitted bytes cost transmit time and energy.
  CostLedger retx = l;
  retx.bytes_retx = 100;
  const auto r2 = session_report(retx, tb);
  CHECK(r2.radio_time == doctest::Approx(2 * r.radio_time));
  CHECK(r2.rx_energy == doctest::Approx(r.rx_energy));

  CostReport sum = r;
  sum += r;
  CHECK(sum.total_energy == doctest::Approx(2 * r.total_energy));
  CHECK(sum.breakdown[1].count == 4);
}

TEST_CASE("ledger arithmetic") {
  CostLedger a, b;
  a.add(OpKind::kKeygen);
  a.messages_tx = 2;
  b.add(OpKind::kKeygen, 3);
  b.bytes_rx = 7;
  const CostLedger c = a + b;
  CHECK(c.count(OpKind::kKeygen) == 4);
  CHECK(c.messages_tx == 2);
  CHECK(c.bytes_rx == 7);
  CHECK(op_from_name(op_name(OpKind::kScalarMul)) == OpKind::kScalarMul);
  CHECK_THROWS_AS(op_from_name("nope"), ParameterError);
}

TEST_CASE("modeled session counts") {
  const Curve& curve = default_curve();
  for (const auto& row : figures::kActions) {
    const auto s = model_session(curve, row.protocol, 1);
    CAPTURE(protocol_name(row.protocol));
    for (OpKind op : kAllOps) {
      CHECK(s.prover.count(op) == row.prover.ops[static_cast<std::size_t>(op)]);
      CHECK(s.verifier.count(op) == row.verifier.ops[static_cast<std::size_t>(op)]);
    }
    CHECK(s.prover.messages_tx == row.prover.messages);
    CHECK(s.verifier.messages_tx == row.verifier.messages);
    CHECK(s.verdict.accept);
  }
  const auto cf = model_session(curve, Protocol::kCoinFlip, 7);
  CHECK(cf.prover.count(OpKind::kScalarAdd) == 4);
  CHECK(cf.verifier.count(OpKind::kPointAdd) == 4);
  CHECK(cf.prover.count(OpKind::kPointMul) == 7);
  CHECK(cf.prover.messages_tx == 14);
}

TEST_CASE("modeled totals close to the reference ones") {
  const Curve& curve = default_curve();
  const auto s = model_session(curve, Protocol::kSchnorr, 1);
  const double t = session_report(s.prover + s.verifier, isense_jn5139()).total_time;
  CHECK(t == doctest::Approx(33.894).epsilon(0.05));
  // Same total, computed from the unit times: 3 muls, 1 add, 2 hashes,
  // keygen, scalar add and mul, plus 43 + 22 + 22 + 1 bytes on air.
  const double by_hand = 0.087 + 3 * 11.121 + 0.094 + 2 * 0.02 + 0.005 + 0.014 + 8.0 * 88 / 250000;
  CHECK(t == doctest::Approx(by_hand));
  const auto d = model_session(curve, Protocol::kDleq, 1);
  CHECK(session_report(d.prover + d.verifier, telosb_msp430()).total_time ==
        doctest::Approx(346.2).epsilon(0.05));
}

TEST_CASE("profile file format") {
  const auto p = parse_profile(kProfileText);
  CHECK(p.name == "testmote");
  CHECK(p.voltage == 3.3);
  CHECK(p.data_rate == 125000);
  CHECK(p.time_of(OpKind::kPointMul) == 40);
  CHECK(op_energy(p, OpKind::kPointMul) == doctest::Approx(3.3 * 0.002 * 40));

  const auto again = parse_profile(format_profile(p));
  CHECK(again.name == p.name);
  CHECK(again.op_time == p.op_time);
  CHECK(again.tx_current == p.tx_current);
  const auto builtin = parse_profile(format_profile(telosb_msp430()));
  CHECK(builtin.op_time == telosb_msp430().op_time);

  const auto dir = std::filesystem::temp_directory_path() / "zkec_profile_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "mote.conf";
  std::ofstream(path) << kProfileText;
  CHECK(resolve_profile(path.string()).name == "testmote");
  CHECK(load_profile(path).voltage == 3.3);
  CHECK(resolve_profile("isense-jn5139").name == "isense-jn5139");
  CHECK_THROWS_AS(resolve_profile("no-such-device"), ParameterError);
  CHECK_THROWS_AS(load_profile(dir / "missing.conf"), ParameterError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("profile errors") {
  std::string text = kProfileText;
  auto without = [&](const std::string& key) {
    std::istringstream in(text);
    std::string out, line;
    while (std::getline(in, line)) {
      if (line.rfind(key + " ", 0) != 0) out += line + "\n";
    }
    return out;
  };
  CHECK_THROWS_AS(parse_profile(without("name")), ParameterError);
  CHECK_THROWS_AS(parse_profile(without("voltage")), ParameterError);
  CHECK_THROWS_AS(parse_profile(without("point_mul")), ParameterError);
  CHECK(parse_profile(without("data_rate")).data_rate == 250000);
  CHECK_THROWS_AS(parse_profile(text + "bogus_op = 1\n"), ParameterError);
  CHECK_THROWS_AS(parse_profile(text + "voltage = -3\n"), ParameterError);
  CHECK_THROWS_AS(parse_profile(text + "voltage = 3V\n"), ParameterError);
  CHECK_THROWS_AS(parse_profile(text + "just words\n"), ParameterError);
}

TEST_CASE("rendered reports") {
  CostLedger l;
  l.add(OpKind::kPointMul);
  l.bytes_tx = 43;
  const auto r = session_report(l, isense_jn5139());
  const auto table = render_table(r, "prover");
  CHECK(table.rfind("prover\n", 0) == 0);
  CHECK(table.find("point multiplication") != std::string::npos);
  CHECK(table.find("total") != std::string::npos);
  const auto tsv = render_tsv(r, "prv.");
  std::istringstream in(tsv);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), '\t') == 2);
    CHECK(line.rfind("prv.", 0) == 0);
  }
  CHECK(n == 8);
  CHECK(tsv.find("prv.total_time\t11.12") != std::string::npos);
}

TEST_CASE("shipped profile file matches the built-in device") {
  const auto p = load_profile(std::filesystem::path(ZKEC_SOURCE_DIR) / "profiles" / "telosb-msp430.conf");
  const auto& b = telosb_msp430();
  CHECK(p.op_time == b.op_time);
  CHECK(p.voltage == b.voltage);
  CHECK(p.mcu_current == b.mcu_current);
  CHECK(p.tx_current == b.tx_current);
  CHECK(p.rx_current == b.rx_current);
  CHECK(p.data_rate == b.data_rate);
}
