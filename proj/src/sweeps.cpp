#include "quadlab/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <thread>

#include "quadlab/reduction.hpp"
#include "quadlab/transforms.hpp"

namespace quadlab {

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

unsigned threads_from_env() {
  const char* raw = std::getenv("QUADLAB_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v > 1024) return 0;
  return static_cast<unsigned>(v);
}

namespace {

// max that lets NaN win, so a broken sample cannot hide.
double nan_max(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
  return std::max(a, b);
}

constexpr double kInf = std::numeric_limits<double>::infinity();

double relative_gap(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

double ratio_c(const CircleQuad& q) {
  const QuadMetrics m = metrics(q);
  return m.ratio_c ? *m.ratio_c : std::numeric_limits<double>::quiet_NaN();
}

CheckResult finish(std::string name, std::size_t samples, double max_error, double threshold) {
  CheckResult r;
  r.name = std::move(name);
  r.samples = samples;
  r.max_error = max_error;
  r.threshold = threshold;
  r.pass = !std::isnan(max_error) && max_error <= threshold;
  return r;
}

}  // namespace

double parallel_max(std::size_t n, unsigned threads, const std::function<double(std::size_t)>& f) {
  auto run_block = [&f](std::size_t lo, std::size_t hi) {
    double m = 0.0;
    for (std::size_t i = lo; i < hi; ++i) m = nan_max(m, f(i));
    return m;
  };
  if (threads <= 1 || n < 2) return run_block(0, n);
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<double> partial(workers, 0.0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = n * w / workers;
    const std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] {
      try {
        partial[w] = run_block(lo, hi);
      } catch (...) {
        partial[w] = std::numeric_limits<double>::quiet_NaN();
      }
    });
  }
  for (auto& t : pool) t.join();
  double m = 0.0;
  for (double p : partial) m = nan_max(m, p);
  return m;
}

std::vector<CheckResult> verify_suite(const SweepOptions& opt) {
  const Tolerances& tl = opt.tolerances;
  const std::size_t n = opt.samples;
  std::vector<CheckResult> out;

  out.push_back(finish("brahmagupta_identity", n, parallel_max(n, opt.threads, [&](std::size_t i) {
    return std::abs(ratio_c(random_convex(sample_seed(opt.seed, i), kSweepMinArc)) - 1.0);
  }), tl.brahmagupta()));

  out.push_back(finish("heron_degeneration", n, parallel_max(n, opt.threads, [&](std::size_t i) {
    const QuadMetrics m = metrics(random_marked_triangle(sample_seed(opt.seed ^ 0x4845524fULL, i), kSweepMinArc));
    return relative_gap(m.area * m.area, m.brahmagupta_sq);
  }), tl.brahmagupta()));

  out.push_back(finish("recut_invariance", n, parallel_max(n, opt.threads, [&](std::size_t i) {
    const CircleQuad q = random_convex(sample_seed(opt.seed ^ 0x52454355ULL, i), kSweepMinArc);
    const double c0 = ratio_c(q);
    auto sorted_sides = [](const CircleQuad& x) {
      auto s = metrics(x).sides;
      std::sort(s.begin(), s.end());
      return s;
    };
    double worst = 0.0;
    for (DiagonalChoice d : {DiagonalChoice::D13, DiagonalChoice::D24}) {
      const CircleQuad r = recut(q, d);
      if (sorted_sides(r) != sorted_sides(q) || !(recut(r, d) == q)) return kInf;
      worst = nan_max(worst, std::abs(ratio_c(r) - c0));
    }
    return worst;
  }), tl.invariance()));

  out.push_back(finish("morph_invariance", n, parallel_max(n, opt.threads, [&](std::size_t i) {
    const std::uint64_t s = sample_seed(opt.seed ^ 0x4d4f5250ULL, i);
    const CircleQuad q = random_convex(s, kSweepMinArc);
    const auto angles = interior_angles(q);
    const double c0 = ratio_c(q);
    const auto [lo, hi] = morph_interval(q);
    std::mt19937_64 rng(s);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const CircleQuad m = morph(q, {lo + (hi - lo) * u(rng), 1.0});
      if (interior_angles(m) != angles) return kInf;
      worst = nan_max(worst, std::abs(ratio_c(m) - c0));
    }
    return worst;
  }), tl.brahmagupta()));

  out.push_back(finish("opposite_angle_perturbation", n, parallel_max(n, opt.threads, [&](std::size_t i) {
    const std::uint64_t s = sample_seed(opt.seed ^ 0x50455254ULL, i);
    const CircleQuad q = random_convex(s, kSweepMinArc);
    std::mt19937_64 rng(s);
    const AnglePair pair = (rng() & 1U) ? AnglePair::P2P4 : AnglePair::P1P3;
    const auto& a = q.arcs();
    // Feasible delta keeps every arc positive.
    const double lim = pair == AnglePair::P1P3 ? std::min(a[0], a[3]) : std::min(a[2], a[3]);
    const double neg = pair == AnglePair::P1P3 ? std::min(a[1], a[2]) : std::min(a[0], a[1]);
    std::uniform_real_distribution<double> u(-0.9 * neg, 0.9 * lim);
    const double delta = snap_to_arc_grid(u(rng));
    const auto before = interior_angles(q);
    const auto after = interior_angles(perturb_opposite_angles(q, pair, delta));
    std::array<double, 4> expect = before;
    if (pair == AnglePair::P1P3) {
      expect[0] += delta;
      expect[2] -= delta;
    } else {
      expect[3] += delta;
      expect[1] -= delta;
    }
    return after == expect ? 0.0 : kInf;
  }), 0.0));

  return out;
}

CheckResult perpendicular_sweep(const SweepOptions& opt) {
  const double tol = opt.tolerances.brahmagupta();
  const double err = parallel_max(opt.samples, opt.threads, [&](std::size_t i) {
    const PerpendicularCheck pc = perpendicular_check(random_perpendicular(sample_seed(opt.seed, i), kSweepMinArc),
                                                      opt.tolerances.perpendicular());
    return std::max(pc.residual, pc.half_product_gap);
  });
  return finish("perpendicular_diagonals", opt.samples, err, tol);
}

CheckResult reachability_sweep(const SweepOptions& opt) {
  const double err = parallel_max(opt.samples, opt.threads, [&](std::size_t i) {
    const std::uint64_t s = sample_seed(opt.seed, i);
    const CircleQuad q = random_convex(s, kSweepMinArc);
    std::mt19937_64 rng(s);
    std::uniform_real_distribution<double> small(-0.01, 0.01);
    std::uniform_real_distribution<double> size(0.9, 1.1);
    const double d1 = snap_to_arc_grid(small(rng));
    const double d2 = snap_to_arc_grid(small(rng));
    const double w = snap_to_arc_grid(small(rng));
    const double target_d = q.diameter() * size(rng);

    // Target arcs built directly from the prescribed angles; s1 is the free
    // morph coordinate of the fiber.
    const auto ang = interior_angles(q);
    const std::array<double, 4> want{ang[0] + d1, ang[1] + d2, ang[2] - d1, ang[3] - d2};
    const double t1 = q.arc(0) + w;
    const double t2 = 2.0 * want[3] - t1;
    const double t3 = 2.0 * want[0] - t2;
    const double t4 = 2.0 * want[1] - t3;

    const CircleQuad p1 = perturb_opposite_angles(q, AnglePair::P1P3, d1);
    const CircleQuad p2 = perturb_opposite_angles(p1, AnglePair::P2P4, -d2);
    const CircleQuad reached = morph(p2, {t1 - p2.arc(0), target_d / p2.diameter()});

    const auto& r = reached.arcs();
    double e = std::abs(reached.diameter() - target_d) / target_d;
    const std::array<double, 4> target{t1, t2, t3, t4};
    for (std::size_t k = 0; k < 4; ++k) e = std::max(e, std::abs(r[k] - target[k]));
    const auto got = interior_angles(reached);
    for (std::size_t k = 0; k < 4; ++k) e = std::max(e, std::abs(got[k] - want[k]));
    return e;
  });
  return finish("perturb_reachability", opt.samples, err, opt.tolerances.invariance());
}

}  // namespace quadlab
