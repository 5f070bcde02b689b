#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quadlab/tolerances.hpp"

namespace quadlab {

/// Outcome of one seeded property sweep.
struct CheckResult {
  std::string name;
  std::size_t samples = 0;
  double max_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct SweepOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  Tolerances tolerances;
  unsigned threads = 0;  // 0 = sequential
};

/// Seed of sample `index` in a sweep started from `seed` (splitmix64 mix).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// QUADLAB_THREADS, or 0 when unset or malformed.
unsigned threads_from_env();

/// Maximum of f(i) over i in [0, n). Work is split into contiguous index
/// blocks across `threads` workers; the result does not depend on the split.
/// A NaN from any sample makes the result NaN.
double parallel_max(std::size_t n, unsigned threads, const std::function<double(std::size_t)>& f);

/// Sample floor on arcs used by all sweeps.
inline constexpr double kSweepMinArc = 0.05;

/// Brahmagupta, Heron, recut and morph invariance, and opposite-angle
/// perturbation over `samples` seeded quads each.
std::vector<CheckResult> verify_suite(const SweepOptions& opt);

/// perpendicular_check over quads with s1 + s3 = pi.
CheckResult perpendicular_sweep(const SweepOptions& opt);

/// perturb(P1P3) -> perturb(P2P4) -> morph reaching random nearby targets.
CheckResult reachability_sweep(const SweepOptions& opt);

}  // namespace quadlab
