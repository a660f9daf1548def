#include "zkec/costmodel.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zkec/errors.hpp"
#include "zkec/frame.hpp"

namespace zkec {

namespace {

constexpr std::array<std::string_view, kOpKinds> kOpNames = {
    "keygen", "point_mul", "point_add", "sha1_250B", "scalar_add", "scalar_mul"};

constexpr std::array<std::string_view, kOpKinds> kOpLabels = {
    "random scalar", "point multiplication", "point addition",
    "sha-1 (250 B)", "scalar addition",      "scalar multiplication"};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_positive(std::string_view key, std::string_view value) {
  double v = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError("profile: bad number for '" + std::string(key) + "'");
  }
  if (!(v > 0)) throw ParameterError("profile: '" + std::string(key) + "' must be positive");
  return v;
}

DeviceProfile make_profile(std::string name, double mcu, double tx, double rx,
                           std::array<double, kOpKinds> times) {
  DeviceProfile p;
  p.name = std::move(name);
  p.voltage = 3.0;
  p.mcu_current = mcu;
  p.tx_current = tx;
  p.rx_current = rx;
  p.data_rate = 250000;
  p.op_time = times;
  return p;
}

}  // namespace

std::string_view op_name(OpKind op) { return kOpNames[static_cast<std::size_t>(op)]; }

OpKind op_from_name(std::string_view name) {
  for (OpKind op : kAllOps) {
    if (op_name(op) == name) return op;
  }
  throw ParameterError("unknown operation: " + std::string(name));
}

CostLedger& CostLedger::operator+=(const CostLedger& o) {
  for (std::size_t i = 0; i < kOpKinds; ++i) ops[i] += o.ops[i];
  messages_tx += o.messages_tx;
  messages_rx += o.messages_rx;
  bytes_tx += o.bytes_tx;
  bytes_rx += o.bytes_rx;
  bytes_retx += o.bytes_retx;
  return *this;
}

// Op order: keygen, point_mul, point_add, sha1_250B, scalar_add, scalar_mul.
const DeviceProfile& isense_jn5139() {
  static const DeviceProfile p = make_profile("isense-jn5139", 12.7e-3, 39.9e-3, 43.7e-3,
                                              {0.087, 11.121, 0.094, 0.02, 0.005, 0.014});
  return p;
}

const DeviceProfile& telosb_msp430() {
  static const DeviceProfile p = make_profile("telosb-msp430", 1.8e-3, 21e-3, 23e-3,
                                              {0.3, 58.02, 0.29, 0.031, 0.012, 0.02});
  return p;
}

std::vector<std::string> builtin_profile_names() { return {"isense-jn5139", "telosb-msp430"}; }

DeviceProfile resolve_profile(std::string_view name_or_path) {
  if (name_or_path == "isense-jn5139") return isense_jn5139();
  if (name_or_path == "telosb-msp430") return telosb_msp430();
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::filesystem::path(name_or_path), ec)) {
    return load_profile(std::filesystem::path(name_or_path));
  }
  throw ParameterError("unknown device profile: " + std::string(name_or_path));
}

DeviceProfile parse_profile(std::string_view text) {
  DeviceProfile p;
  p.data_rate = 0;
  std::array<bool, kOpKinds> seen{};
  bool have_v = false, have_mcu = false, have_tx = false, have_rx = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("profile line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "name") {
      p.name = std::string(value);
    } else if (key == "voltage") {
      p.voltage = parse_positive(key, value);
      have_v = true;
    } else if (key == "mcu_current") {
      p.mcu_current = parse_positive(key, value);
      have_mcu = true;
    } else if (key == "tx_current") {
      p.tx_current = parse_positive(key, value);
      have_tx = true;
    } else if (key == "rx_current") {
      p.rx_current = parse_positive(key, value);
      have_rx = true;
    } else if (key == "data_rate") {
      p.data_rate = parse_positive(key, value);
    } else {
      const OpKind op = op_from_name(key);
      p.op_time[static_cast<std::size_t>(op)] = parse_positive(key, value);
      seen[static_cast<std::size_t>(op)] = true;
    }
  }
  if (p.name.empty()) throw ParameterError("profile: missing 'name'");
  if (!have_v || !have_mcu || !have_tx || !have_rx) {
    throw ParameterError("profile: voltage and all currents are required");
  }
  if (p.data_rate == 0) p.data_rate = 250000;
  for (OpKind op : kAllOps) {
    if (!seen[static_cast<std::size_t>(op)]) {
      throw ParameterError("profile: missing op time '" + std::string(op_name(op)) + "'");
    }
  }
  return p;
}

DeviceProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open profile: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_profile(ss.str());
}

std::string format_profile(const DeviceProfile& p) {
  std::ostringstream os;
  os.precision(17);
  os << "name = " << p.name << "\n";
  os << "voltage = " << p.voltage << "  # V\n";
  os << "mcu_current = " << p.mcu_current << "  # A\n";
  os << "tx_current = " << p.tx_current << "  # A\n";
  os << "rx_current = " << p.rx_current << "  # A\n";
  os << "data_rate = " << p.data_rate << "  # bit/s\n";
  for (OpKind op : kAllOps) os << op_name(op) << " = " << p.time_of(op) << "  # s\n";
  return os.str();
}

double op_energy(const DeviceProfile& profile, OpKind op) {
  return profile.voltage * profile.mcu_current * profile.time_of(op);
}

double op_energy(const DeviceProfile& profile, std::string_view op) {
  return op_energy(profile, op_from_name(op));
}

double message_energy(const DeviceProfile& profile, std::size_t bytes, Direction dir) {
  const double current = dir == Direction::kTx ? profile.tx_current : profile.rx_current;
  return profile.voltage * current * airtime(bytes, profile.data_rate);
}

CostReport& CostReport::operator+=(const CostReport& o) {
  compute_time += o.compute_time;
  radio_time += o.radio_time;
  total_time += o.total_time;
  compute_energy += o.compute_energy;
  tx_energy += o.tx_energy;
  rx_energy += o.rx_energy;
  radio_energy += o.radio_energy;
  total_energy += o.total_energy;
  if (breakdown.size() == o.breakdown.size()) {
    for (std::size_t i = 0; i < breakdown.size(); ++i) {
      breakdown[i].count += o.breakdown[i].count;
      breakdown[i].time += o.breakdown[i].time;
      breakdown[i].energy += o.breakdown[i].energy;
    }
  }
  return *this;
}

CostReport session_report(const CostLedger& ledger, const DeviceProfile& profile) {
  CostReport r;
  for (OpKind op : kAllOps) {
    const auto i = static_cast<std::size_t>(op);
    const double n = static_cast<double>(ledger.ops[i]);
    CostLine line{std::string(kOpLabels[i]), n, n * profile.time_of(op), n * op_energy(profile, op)};
    r.compute_time += line.time;
    r.compute_energy += line.energy;
    r.breakdown.push_back(std::move(line));
  }
  const std::size_t tx_bytes = ledger.bytes_tx + ledger.bytes_retx;
  const double tx_time = airtime(tx_bytes, profile.data_rate);
  r.tx_energy = message_energy(profile, tx_bytes, Direction::kTx);
  r.rx_energy = message_energy(profile, ledger.bytes_rx, Direction::kRx);
  r.breakdown.push_back({"radio tx", static_cast<double>(tx_bytes), tx_time, r.tx_energy});
  r.breakdown.push_back({"radio rx", static_cast<double>(ledger.bytes_rx), 0.0, r.rx_energy});
  r.radio_time = tx_time;
  r.radio_energy = r.tx_energy + r.rx_energy;
  r.total_time = r.compute_time + r.radio_time;
  r.total_energy = r.compute_energy + r.radio_energy;
  return r;
}

std::string render_table(const CostReport& report, std::string_view title) {
  std::ostringstream os;
  char buf[160];
  os << title << "\n";
  std::snprintf(buf, sizeof buf, "  %-24s %12s %14s %14s\n", "item", "count", "time [s]",
                "energy [mJ]");
  os << buf;
  for (const auto& line : report.breakdown) {
    std::snprintf(buf, sizeof buf, "  %-24s %12.0f %14.6f %14.6f\n", line.label.c_str(), line.count,
                  line.time, line.energy * 1e3);
    os << buf;
  }
  std::snprintf(buf, sizeof buf, "  %-24s %12s %14.6f %14.6f\n", "total", "", report.total_time,
                report.total_energy * 1e3);
  os << buf;
  return os.str();
}

std::string render_tsv(const CostReport& report, std::string_view prefix) {
  std::ostringstream os;
  os.precision(9);
  auto emit = [&](std::string_view metric, double value, std::string_view unit) {
    os << prefix << metric << '\t' << value << '\t' << unit << '\n';
  };
  emit("compute_time", report.compute_time, "s");
  emit("radio_time", report.radio_time, "s");
  emit("total_time", report.total_time, "s");
  emit("compute_energy", report.compute_energy, "J");
  emit("tx_energy", report.tx_energy, "J");
  emit("rx_energy", report.rx_energy, "J");
  emit("radio_energy", report.radio_energy, "J");
  emit("total_energy", report.total_energy, "J");
  return os.str();
}

}  // namespace zkec
