#pragma once

// Wall-clock comparison of PPO identification against the cheirality
// baseline as a function of the number of correspondences.

#include <algorithm>
#include <chrono>
#include <ostream>
#include <span>
#include <vector>

#include "twoview/experiment.hpp"
#include "twoview/pipeline.hpp"

namespace twoview {

struct BenchOptions {
  std::vector<int> point_counts{100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
  int repetitions = 20;
  int warmup = 2;
  double noise_px = 0.5;
  std::uint64_t seed = 7;
};

struct BenchRow {
  int n_points = 0;
  int repetitions = 0;
  double method1_ns = 0.0;      // solve + PPO identification
  double method2_ns = 0.0;      // Method I + analytic reconstruction
  double traditional_ns = 0.0;  // solve + DLT cheirality
  double identify_only_ns = 0.0;
  double cheirality_only_ns = 0.0;
  double reconstruct_only_ns = 0.0;
  // Medians of the per-repetition times; insensitive to preemption spikes.
  double method1_median_ns = 0.0;
  double method2_median_ns = 0.0;
  double traditional_median_ns = 0.0;

  double traditional_over_method1() const { return traditional_ns / method1_ns; }
  double method2_over_method1() const { return method2_ns / method1_ns; }
  double median_traditional_over_method1() const {
    return traditional_median_ns / method1_median_ns;
  }
  double median_method2_over_method1() const {
    return method2_median_ns / method1_median_ns;
  }
};

inline constexpr const char* kBenchCsvSchema = "# schema: twoview-bench/1";
inline constexpr const char* kBenchCsvHeader =
    "n_points,repetitions,method1_ns,method2_ns,traditional_ns,ratio_trad_method1,"
    "ratio_method2_method1,identify_only_ns,cheirality_only_ns,reconstruct_only_ns,"
    "method1_median_ns,method2_median_ns,traditional_median_ns";

namespace detail {

// Keeps results observable so the optimizer cannot drop the timed work.
inline volatile double bench_sink = 0.0;

inline double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2 == 1) return *mid;
  return 0.5 * (*mid + *std::max_element(v.begin(), mid));
}

template <typename F>
double time_mean_ns(int warmup, int reps, F&& f) {
  for (int i = 0; i < warmup; ++i) bench_sink = bench_sink + f();
  const auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) bench_sink = bench_sink + f();
  const auto t1 = Clock::now();
  return elapsed_ns(t0, t1) / reps;
}

}  // namespace detail

inline BenchRow bench_point_count(int n_points, const BenchOptions& options) {
  if (n_points < static_cast<int>(kMinCorrespondences) || options.repetitions < 1 ||
      options.warmup < 0) {
    throw Error(ErrorCode::kConfigInvalid,
                "bench needs >= 8 points and >= 1 repetition");
  }
  ScenarioConfig cfg;
  cfg.n_pts = n_points;
  Rng rng(derive_seed(options.seed, {static_cast<std::uint64_t>(n_points)}));
  const Scene scene = generate_scene(cfg, 1.0, rng);
  const CorrespondenceSet corr =
      add_pixel_noise(scene.correspondences, options.noise_px, cfg.intrinsics, rng);

  BenchRow row;
  row.n_points = n_points;
  row.repetitions = options.repetitions;
  const int w = options.warmup;
  const int r = options.repetitions;

  // The three front-to-back methods are interleaved within each repetition so
  // that drift in machine load affects them equally.
  std::vector<double> t1s, t2s, t3s;
  t1s.reserve(static_cast<std::size_t>(r));
  t2s.reserve(static_cast<std::size_t>(r));
  t3s.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < w + r; ++i) {
    const auto t0 = detail::Clock::now();
    detail::bench_sink = detail::bench_sink + method_one(corr).chosen.t_dir.x();
    const auto t1 = detail::Clock::now();
    detail::bench_sink = detail::bench_sink + method_two(corr).points.front().depth_left;
    const auto t2 = detail::Clock::now();
    detail::bench_sink = detail::bench_sink + method_traditional(corr).chosen.t_dir.x();
    const auto t3 = detail::Clock::now();
    if (i < w) continue;
    t1s.push_back(detail::elapsed_ns(t0, t1));
    t2s.push_back(detail::elapsed_ns(t1, t2));
    t3s.push_back(detail::elapsed_ns(t2, t3));
  }
  auto mean = [r](const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / r;
  };
  row.method1_ns = mean(t1s);
  row.method2_ns = mean(t2s);
  row.traditional_ns = mean(t3s);
  row.method1_median_ns = detail::median_of(t1s);
  row.method2_median_ns = detail::median_of(t2s);
  row.traditional_median_ns = detail::median_of(t3s);

  const ConstraintMatrix a = build_constraint_matrix(corr);
  const EssentialEstimate est = solve_linear(corr, a);
  const PoseCandidateSet cands = decompose(est);
  const IdentificationResult id = identify(cands, est.Q, corr, a);
  row.identify_only_ns = detail::time_mean_ns(w, r, [&] {
    return identify(cands, est.Q, corr, a).chosen.t_dir.x();
  });
  row.cheirality_only_ns = detail::time_mean_ns(w, r, [&] {
    return cheirality_identify(cands, corr).chosen.t_dir.x();
  });
  row.reconstruct_only_ns = detail::time_mean_ns(w, r, [&] {
    return analytic_depths(id.chosen.R, id.chosen.t_dir, corr).points.front().depth_left;
  });
  return row;
}

inline std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (int n : options.point_counts) rows.push_back(bench_point_count(n, options));
  return rows;
}

inline void write_bench_csv(std::ostream& os, std::span<const BenchRow> rows) {
  os << kBenchCsvSchema << '\n' << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n_points << ',' << r.repetitions << ',' << format_number(r.method1_ns) << ','
       << format_number(r.method2_ns) << ',' << format_number(r.traditional_ns) << ','
       << format_number(r.traditional_over_method1()) << ','
       << format_number(r.method2_over_method1()) << ','
       << format_number(r.identify_only_ns) << ',' << format_number(r.cheirality_only_ns)
       << ',' << format_number(r.reconstruct_only_ns) << ','
       << format_number(r.method1_median_ns) << ',' << format_number(r.method2_median_ns)
       << ',' << format_number(r.traditional_median_ns) << '\n';
  }
}

}  // namespace twoview
