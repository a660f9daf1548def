#include "zkec/parallel.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "zkec/rng.hpp"

namespace zkec {

std::vector<TrialOutcome> run_trials_serial(std::size_t count, std::uint64_t base_seed,
                                            const TrialFn& trial) {
  std::vector<TrialOutcome> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = trial(derive_seed(base_seed, i));
  return out;
}

std::vector<TrialOutcome> run_trials(std::size_t count, std::uint64_t base_seed,
                                     const TrialFn& trial) {
  std::vector<TrialOutcome> out(count);
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = trial(derive_seed(base_seed, static_cast<std::uint64_t>(i)));
    } catch (...) {
#pragma omp critical(zkec_trial_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::size_t count_accepted(std::span<const TrialOutcome> outcomes) {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.accepted; }));
}

std::vector<Point> batch_mul_serial(const Curve& curve, std::span<const Scalar> ks, const Point& p) {
  std::vector<Point> out;
  out.reserve(ks.size());
  for (const Scalar& k : ks) out.push_back(curve.mul(k, p));
  return out;
}

std::vector<Point> batch_mul(const Curve& curve, std::span<const Scalar> ks, const Point& p) {
  std::vector<Point> out(ks.size(), curve.infinity());
  const auto n = static_cast<std::int64_t>(ks.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = curve.mul(ks[static_cast<std::size_t>(i)], p);
  }
  return out;
}

}  // namespace zkec
