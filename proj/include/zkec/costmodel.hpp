#pragma once

// Energy and time accounting: E = V * I * t per operation and per radio
// message, summed over the operation counts a session records.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace zkec {

enum class OpKind : std::size_t {
  kKeygen = 0,    // random scalar generation
  kPointMul,      // scalar multiplication
  kPointAdd,      // point addition or subtraction
  kHash,          // one SHA-1 invocation, charged at the 250-byte figure
  kScalarAdd,     // addition or subtraction mod n
  kScalarMul,     // multiplication mod n
};

inline constexpr std::size_t kOpKinds = 6;
inline constexpr std::array<OpKind, kOpKinds> kAllOps = {
    OpKind::kKeygen, OpKind::kPointMul,  OpKind::kPointAdd,
    OpKind::kHash,   OpKind::kScalarAdd, OpKind::kScalarMul};

/// Config-file key for an op ("keygen", "point_mul", ..., "sha1_250B").
std::string_view op_name(OpKind op);
/// Throws ParameterError for unknown names.
OpKind op_from_name(std::string_view name);

enum class Direction { kTx, kRx };

/// Operation and traffic counts for one party (or a sum of parties).
struct CostLedger {
  std::array<std::uint64_t, kOpKinds> ops{};
  std::uint64_t messages_tx = 0;
  std::uint64_t messages_rx = 0;
  std::uint64_t bytes_tx = 0;
  std::uint64_t bytes_rx = 0;
  /// Payload bytes re-sent after a lost frame. Charged as transmit time.
  std::uint64_t bytes_retx = 0;

  std::uint64_t count(OpKind op) const { return ops[static_cast<std::size_t>(op)]; }
  void add(OpKind op, std::uint64_t n = 1) { ops[static_cast<std::size_t>(op)] += n; }

  CostLedger& operator+=(const CostLedger& o);
  friend CostLedger operator+(CostLedger a, const CostLedger& b) { return a += b; }
  friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

struct DeviceProfile {
  std::string name;
  double voltage = 0;      // V
  double mcu_current = 0;  // A, processor at full load
  double tx_current = 0;   // A
  double rx_current = 0;   // A
  double data_rate = 250000;  // bit/s
  std::array<double, kOpKinds> op_time{};  // s per operation

  double time_of(OpKind op) const { return op_time[static_cast<std::size_t>(op)]; }
};

/// Jennic JN5139 (iSense) and TI MSP430 (TelosB) at 3 V.
const DeviceProfile& isense_jn5139();
const DeviceProfile& telosb_msp430();
std::vector<std::string> builtin_profile_names();

/// Built-in name, or a path to a profile file. Throws ParameterError.
DeviceProfile resolve_profile(std::string_view name_or_path);

/// `key = value` lines; '#' starts a comment. Keys: name, voltage,
/// mcu_current, tx_current, rx_current, data_rate, and one per op name.
/// All numeric values must be positive. Throws ParameterError.
DeviceProfile parse_profile(std::string_view text);
DeviceProfile load_profile(const std::filesystem::path& path);
std::string format_profile(const DeviceProfile& profile);

double op_energy(const DeviceProfile& profile, OpKind op);
double op_energy(const DeviceProfile& profile, std::string_view op);
double message_energy(const DeviceProfile& profile, std::size_t bytes, Direction dir);

struct CostLine {
  std::string label;
  double count = 0;
  double time = 0;    // s
  double energy = 0;  // J
};

struct CostReport {
  double compute_time = 0;
  double radio_time = 0;
  double total_time = 0;
  double compute_energy = 0;
  double tx_energy = 0;
  double rx_energy = 0;
  double radio_energy = 0;
  double total_energy = 0;
  std::vector<CostLine> breakdown;

  CostReport& operator+=(const CostReport& o);
};

/// Time is op time plus transmit airtime (reception overlaps the peer's
/// transmission). Energy is compute plus Tx and Rx radio energy.
CostReport session_report(const CostLedger& ledger, const DeviceProfile& profile);

std::string render_table(const CostReport& report, std::string_view title);
/// One `metric<TAB>value<TAB>unit` line per metric; `prefix` is prepended
/// to each metric name.
std::string render_tsv(const CostReport& report, std::string_view prefix);

}  // namespace zkec
