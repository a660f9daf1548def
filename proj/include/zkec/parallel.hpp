#pragma once

// Batch kernels: many independent sessions, or many scalar multiplications
// of one base point. The OpenMP versions spread the work over threads;
// the serial versions are the reference they are tested against. Trial i
// always sees seed derive_seed(base, i), so results do not depend on the
// thread count or schedule.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "zkec/costmodel.hpp"
#include "zkec/curve.hpp"
#include "zkec/protocol.hpp"

namespace zkec {

struct TrialOutcome {
  bool accepted = false;
  RejectReason reason = RejectReason::kPending;
  CostLedger prover;
  CostLedger verifier;
  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

using TrialFn = std::function<TrialOutcome(std::uint64_t seed)>;

std::vector<TrialOutcome> run_trials_serial(std::size_t count, std::uint64_t base_seed,
                                            const TrialFn& trial);
/// The first exception thrown by any trial is rethrown after the loop.
std::vector<TrialOutcome> run_trials(std::size_t count, std::uint64_t base_seed,
                                     const TrialFn& trial);

std::size_t count_accepted(std::span<const TrialOutcome> outcomes);

std::vector<Point> batch_mul_serial(const Curve& curve, std::span<const Scalar> ks, const Point& p);
std::vector<Point> batch_mul(const Curve& curve, std::span<const Scalar> ks, const Point& p);

}  // namespace zkec
