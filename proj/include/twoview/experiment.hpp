#pragma once

// Synthetic two-view scenes and the Monte Carlo sweep over parallax factor
// (alpha) and pixel noise.
//
// Scene layout: points uniform in the box centered at (0, 0, d) with extents
// (30, 30, d); the right camera's Euler angles are N(0, diag(5^2, 5^2, 20^2))
// degrees (Z-Y-X order); the translation direction is uniform on the unit
// circle of the OXY plane and ||t|| = alpha * t_max.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "twoview/camera.hpp"
#include "twoview/decompose.hpp"
#include "twoview/essential.hpp"
#include "twoview/identify.hpp"
#include "twoview/motion.hpp"
#include "twoview/pipeline.hpp"
#include "twoview/reconstruct.hpp"

namespace twoview {

using Rng = std::mt19937_64;

inline constexpr double kDegPerRad = 180.0 / std::numbers::pi;

struct ScenarioConfig {
  double d = 30.0;
  int n_pts = 50;
  int n_scenes = 20;
  int n_mc = 10;
  double alpha_min = 1e-3;
  double alpha_max = 1.0;
  int alpha_steps = 10;
  double noise_min = 0.1;
  double noise_max = 5.0;
  int noise_steps = 10;
  double t_max = 4.2;
  std::uint64_t seed = 1;
  std::array<double, 3> euler_std_deg{5.0, 5.0, 20.0};
  CameraIntrinsics intrinsics;
  double delta_pri = kDefaultPriThreshold;
  int threads = 1;
  bool measure_timing = false;

  void validate() const {
    auto fail = [](const std::string& what) {
      throw Error(ErrorCode::kConfigInvalid, what);
    };
    if (n_pts < 1 || n_scenes < 1 || n_mc < 1 || alpha_steps < 1 ||
        noise_steps < 1 || threads < 1) {
      fail("counts must be >= 1");
    }
    if (!(d > 0.0)) fail("d must be positive");
    if (!(t_max >= 0.0)) fail("t_max must be non-negative");
    if (!(alpha_min >= 1e-3 && alpha_max <= 1.0 && alpha_min <= alpha_max)) {
      fail("alpha grid must lie within [1e-3, 1]");
    }
    if (!(noise_min >= 0.0 && noise_max >= noise_min)) {
      fail("noise grid must be non-negative and ordered");
    }
    if (!intrinsics.valid()) fail("focal lengths must be positive");
    if (!(delta_pri >= 0.0)) fail("delta_pri must be non-negative");
  }

  std::vector<double> alpha_grid() const {
    std::vector<double> out;
    for (int i = 0; i < alpha_steps; ++i) {
      if (alpha_steps == 1) {
        out.push_back(alpha_min);
        break;
      }
      const double f = static_cast<double>(i) / (alpha_steps - 1);
      out.push_back(std::exp(std::log(alpha_min) +
                             f * (std::log(alpha_max) - std::log(alpha_min))));
    }
    return out;
  }

  std::vector<double> noise_grid() const {
    std::vector<double> out;
    for (int i = 0; i < noise_steps; ++i) {
      if (noise_steps == 1) {
        out.push_back(noise_min);
        break;
      }
      out.push_back(noise_min + (noise_max - noise_min) * i / (noise_steps - 1));
    }
    return out;
  }
};

struct ExperimentRecord {
  double alpha = 0.0;
  double noise_std = 0.0;
  double rot_rmse_deg = 0.0;
  double trans_rmse_new_deg = 0.0;
  double trans_rmse_trad_deg = 0.0;
  double trans_diff_deg = 0.0;
  double ratio3d = 0.0;
  double pri_mean = 0.0;
  double m3_mean = 0.0;
  double t_identify_ns = 0.0;
  double t_cheirality_ns = 0.0;
};

inline constexpr const char* kGridCsvSchema = "# schema: twoview-grid/1";
inline constexpr const char* kGridCsvHeader =
    "alpha,noise_std,rot_rmse_deg,trans_rmse_new_deg,trans_rmse_trad_deg,"
    "trans_diff_deg,ratio3d,pri_mean,m3_mean,t_identify_ns,t_cheirality_ns";

// ---------------------------------------------------------------------------
// Rotations

inline Mat3 rotation_z(double rad) {
  Mat3 r;
  r << std::cos(rad), -std::sin(rad), 0, std::sin(rad), std::cos(rad), 0, 0, 0, 1;
  return r;
}
inline Mat3 rotation_y(double rad) {
  Mat3 r;
  r << std::cos(rad), 0, std::sin(rad), 0, 1, 0, -std::sin(rad), 0, std::cos(rad);
  return r;
}
inline Mat3 rotation_x(double rad) {
  Mat3 r;
  r << 1, 0, 0, 0, std::cos(rad), -std::sin(rad), 0, std::sin(rad), std::cos(rad);
  return r;
}

// R = Rz(a0) Ry(a1) Rx(a2), angles in degrees.
inline Mat3 euler_zyx_to_rotation(const Vec3& deg) {
  return rotation_z(deg(0) / kDegPerRad) * rotation_y(deg(1) / kDegPerRad) *
         rotation_x(deg(2) / kDegPerRad);
}

// Inverse of euler_zyx_to_rotation, degrees.
inline Vec3 rotation_to_euler_zyx(const Mat3& r) {
  const double pitch = std::asin(std::clamp(-r(2, 0), -1.0, 1.0));
  const double yaw = std::atan2(r(1, 0), r(0, 0));
  const double roll = std::atan2(r(2, 1), r(2, 2));
  return Vec3(yaw, pitch, roll) * kDegPerRad;
}

inline double rotation_discrepancy(const Mat3& r_true, const Mat3& r_est) {
  return rotation_to_euler_zyx(r_true.transpose() * r_est).cwiseAbs().sum() / 3.0;
}

inline double translation_discrepancy(const Vec3& t_true, const Vec3& t_est) {
  const double n = t_true.norm() * t_est.norm();
  if (!(n > 0.0)) {
    throw Error(ErrorCode::kZeroVector, "translation discrepancy of a zero vector");
  }
  // Same angle as acos(a.b / |a||b|), without its loss of precision near 0 and 180.
  return std::atan2(cross(t_true, t_est).norm(), t_true.dot(t_est)) * kDegPerRad;
}

// ---------------------------------------------------------------------------
// Seeds

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (const auto p : path) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

// ---------------------------------------------------------------------------
// Scenes

struct SceneBase {
  std::vector<Vec3> points;  // left camera frame
  Mat3 R = Mat3::Identity();
  Vec3 t_dir = Vec3::UnitX();
};

struct Scene {
  std::vector<Vec3> points;
  Pose pose;
  Vec3 t_dir = Vec3::UnitX();  // direction even when ||t|| = 0
  CorrespondenceSet correspondences;
};

inline SceneBase draw_scene_base(const ScenarioConfig& cfg, Rng& rng) {
  SceneBase base;
  std::normal_distribution<double> n01(0.0, 1.0);
  const Vec3 angles(cfg.euler_std_deg[0] * n01(rng), cfg.euler_std_deg[1] * n01(rng),
                    cfg.euler_std_deg[2] * n01(rng));
  base.R = euler_zyx_to_rotation(angles);
  std::uniform_real_distribution<double> heading(0.0, 2.0 * std::numbers::pi);
  const double h = heading(rng);
  base.t_dir = Vec3(std::cos(h), std::sin(h), 0.0);

  std::uniform_real_distribution<double> ux(-15.0, 15.0);
  std::uniform_real_distribution<double> uz(cfg.d / 2.0, 1.5 * cfg.d);
  base.points.reserve(static_cast<std::size_t>(cfg.n_pts));
  // Right-view depth does not depend on alpha because t has no z component.
  constexpr double kMinDepth = 1e-3;
  int attempts = 0;
  while (static_cast<int>(base.points.size()) < cfg.n_pts) {
    if (++attempts > 1000 * cfg.n_pts) {
      throw Error(ErrorCode::kConfigInvalid, "could not place projectable points");
    }
    const double x = ux(rng);
    const double y = ux(rng);
    const double z = uz(rng);
    const Vec3 p(x, y, z);
    if ((base.R * p).z() > kMinDepth) base.points.push_back(p);
  }
  return base;
}

inline Scene instantiate_scene(const SceneBase& base, double alpha,
                               const ScenarioConfig& cfg) {
  Scene scene;
  scene.points = base.points;
  scene.pose.R = base.R;
  scene.t_dir = base.t_dir;
  scene.pose.t = alpha * cfg.t_max * base.t_dir;
  scene.correspondences.reserve(base.points.size());
  for (const auto& p : base.points) {
    scene.correspondences.push_back(
        make_correspondence(project_pair(p, scene.pose, cfg.intrinsics)));
  }
  return scene;
}

inline Scene generate_scene(const ScenarioConfig& cfg, double alpha, Rng& rng) {
  if (!(alpha >= 0.0) || cfg.n_pts < 1 || !(cfg.d > 0.0) || !cfg.intrinsics.valid()) {
    throw Error(ErrorCode::kConfigInvalid, "invalid scene configuration");
  }
  return instantiate_scene(draw_scene_base(cfg, rng), alpha, cfg);
}

// Gaussian noise on pixel coordinates of both views, re-normalized through K.
inline CorrespondenceSet add_pixel_noise(std::span<const Correspondence> corr,
                                         double std_px, const CameraIntrinsics& k,
                                         Rng& rng) {
  if (!(std_px >= 0.0)) {
    throw Error(ErrorCode::kConfigInvalid, "noise std must be non-negative");
  }
  CorrespondenceSet out(corr.begin(), corr.end());
  if (std_px == 0.0) return out;
  std::normal_distribution<double> noise(0.0, std_px);
  for (auto& c : out) {
    Vec2 l = c.left_px.value_or(normalized_to_pixel(c.left, k));
    Vec2 r = c.right_px.value_or(normalized_to_pixel(c.right, k));
    l += Vec2(noise(rng), noise(rng));
    r += Vec2(noise(rng), noise(rng));
    c = correspondence_from_pixels(l, r, k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trials

struct TrialResult {
  bool ok = false;
  double rot_err_deg = 0.0;
  double trans_err_new_deg = 0.0;
  double trans_err_trad_deg = 0.0;
  double err3d_analytic = std::numeric_limits<double>::quiet_NaN();
  double err3d_dlt = std::numeric_limits<double>::quiet_NaN();
  double pri = 0.0;
  double m3 = 0.0;
  int chosen_index = -1;
  int chosen_index_trad = -1;
  int true_index = -1;  // candidate closest to the true pose
  double identify_ns = 0.0;
  double cheirality_ns = 0.0;
};

// Candidate nearest to the true pose: rotation by angle, translation by sign.
inline int closest_candidate(const PoseCandidateSet& cands, const Pose& truth,
                             const Vec3& t_dir) {
  int best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 4; ++k) {
    const auto& c = cands.candidates[k];
    const double cost = (c.R - truth.R).norm() + (c.t_dir - t_dir).norm();
    if (cost < best_cost) {
      best_cost = cost;
      best = k;
    }
  }
  return best;
}

inline TrialResult run_trial(const Scene& scene,
                             std::span<const Correspondence> corr,
                             const ScenarioConfig& cfg) {
  using detail::Clock;
  TrialResult out;
  EssentialEstimate est;
  PoseCandidateSet cands;
  ConstraintMatrix a;
  const auto t0 = Clock::now();
  try {
    a = build_constraint_matrix(corr);
    est = solve_linear(corr, a);
    cands = decompose(est);
  } catch (const Error&) {
    return out;
  }
  const auto t1 = Clock::now();
  const IdentificationResult id = identify(cands, est.Q, corr, a);
  const auto t2 = Clock::now();
  const IdentificationResult trad = cheirality_identify(cands, corr);
  const auto t3 = Clock::now();
  if (cfg.measure_timing) {
    const double front = detail::elapsed_ns(t0, t1);
    out.identify_ns = front + detail::elapsed_ns(t1, t2);
    out.cheirality_ns = front + detail::elapsed_ns(t2, t3);
  }

  out.ok = true;
  out.chosen_index = id.chosen_index;
  out.chosen_index_trad = trad.chosen_index;
  out.true_index = closest_candidate(cands, scene.pose, scene.t_dir);
  out.rot_err_deg = rotation_discrepancy(scene.pose.R, id.chosen.R);
  out.trans_err_new_deg = translation_discrepancy(scene.t_dir, id.chosen.t_dir);
  out.trans_err_trad_deg = translation_discrepancy(scene.t_dir, trad.chosen.t_dir);
  out.pri = compute_pri(id.chosen.R, id.chosen.t_dir, corr);
  out.m3 = compute_m3(id.chosen.R, corr);

  const double scale = scene.pose.t.norm();
  if (scale > 0.0) {
    const auto analytic = analytic_depths(id.chosen.R, id.chosen.t_dir, corr);
    const auto dlt = dlt_triangulate(id.chosen.R, id.chosen.t_dir, corr);
    double sum_a = 0.0;
    double sum_d = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < corr.size(); ++i) {
      const auto& pa = analytic.points[i];
      const auto& pd = dlt.points[i];
      if (!pa.valid || !pd.valid) continue;
      sum_a += (scale * pa.point - scene.points[i]).norm();
      sum_d += (scale * pd.point - scene.points[i]).norm();
      ++n;
    }
    if (n > 0) {
      out.err3d_analytic = sum_a / n;
      out.err3d_dlt = sum_d / n;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grid

struct GridCell {
  double alpha = 0.0;
  double noise_std = 0.0;
};

struct GridRun {
  ScenarioConfig config;
  std::vector<GridCell> cells;  // noise-major: cell = noise_idx * n_alpha + alpha_idx
  // trials[cell][scene * n_mc + mc]
  std::vector<std::vector<TrialResult>> trials;
  std::vector<ExperimentRecord> records;
};

namespace detail {

inline double mean_of(const std::vector<double>& v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double rms_of(const std::vector<double>& v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s / static_cast<double>(v.size()));
}

// Root-mean-square across Monte Carlo runs per scene, then mean across scenes.
template <typename Get>
double rmse_then_mean(const std::vector<TrialResult>& trials, int n_scenes,
                      int n_mc, Get get) {
  std::vector<double> per_scene;
  for (int s = 0; s < n_scenes; ++s) {
    std::vector<double> vals;
    for (int j = 0; j < n_mc; ++j) {
      const auto& t = trials[static_cast<std::size_t>(s * n_mc + j)];
      if (!t.ok) continue;
      const double v = get(t);
      if (std::isfinite(v)) vals.push_back(v);
    }
    if (!vals.empty()) per_scene.push_back(rms_of(vals));
  }
  return mean_of(per_scene);
}

}  // namespace detail

inline ExperimentRecord aggregate_cell(const GridCell& cell,
                                       const std::vector<TrialResult>& trials,
                                       const ScenarioConfig& cfg) {
  ExperimentRecord rec;
  rec.alpha = cell.alpha;
  rec.noise_std = cell.noise_std;
  const int ns = cfg.n_scenes;
  const int nm = cfg.n_mc;
  rec.rot_rmse_deg = detail::rmse_then_mean(trials, ns, nm,
                                            [](const TrialResult& t) { return t.rot_err_deg; });
  rec.trans_rmse_new_deg = detail::rmse_then_mean(
      trials, ns, nm, [](const TrialResult& t) { return t.trans_err_new_deg; });
  rec.trans_rmse_trad_deg = detail::rmse_then_mean(
      trials, ns, nm, [](const TrialResult& t) { return t.trans_err_trad_deg; });
  rec.trans_diff_deg = rec.trans_rmse_trad_deg - rec.trans_rmse_new_deg;
  const double e_anal = detail::rmse_then_mean(
      trials, ns, nm, [](const TrialResult& t) { return t.err3d_analytic; });
  const double e_dlt = detail::rmse_then_mean(
      trials, ns, nm, [](const TrialResult& t) { return t.err3d_dlt; });
  rec.ratio3d = e_anal / e_dlt;
  std::vector<double> pri, m3, tid, tch;
  for (const auto& t : trials) {
    if (!t.ok) continue;
    pri.push_back(t.pri);
    m3.push_back(t.m3);
    tid.push_back(t.identify_ns);
    tch.push_back(t.cheirality_ns);
  }
  rec.pri_mean = detail::mean_of(pri);
  rec.m3_mean = detail::mean_of(m3);
  rec.t_identify_ns = cfg.measure_timing ? detail::mean_of(tid) : 0.0;
  rec.t_cheirality_ns = cfg.measure_timing ? detail::mean_of(tch) : 0.0;
  return rec;
}

// Runs every (alpha, noise) cell over cells x scenes x Monte Carlo trials.
// Each trial draws from its own seed stream and writes to its own slot, so
// the output does not depend on the worker count.
inline GridRun run_grid_detailed(const ScenarioConfig& cfg,
                                 std::span<const GridCell> cells) {
  cfg.validate();
  GridRun run;
  run.config = cfg;
  run.cells.assign(cells.begin(), cells.end());

  std::vector<SceneBase> bases;
  bases.reserve(static_cast<std::size_t>(cfg.n_scenes));
  for (int s = 0; s < cfg.n_scenes; ++s) {
    Rng rng(derive_seed(cfg.seed, {1, static_cast<std::uint64_t>(s)}));
    bases.push_back(draw_scene_base(cfg, rng));
  }

  const std::size_t per_cell = static_cast<std::size_t>(cfg.n_scenes * cfg.n_mc);
  run.trials.assign(run.cells.size(), std::vector<TrialResult>(per_cell));
  const std::size_t total = run.cells.size() * per_cell;

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t job = next.fetch_add(1); job < total; job = next.fetch_add(1)) {
      const std::size_t c = job / per_cell;
      const std::size_t k = job % per_cell;
      const int s = static_cast<int>(k) / cfg.n_mc;
      const GridCell& cell = run.cells[c];
      const Scene scene = instantiate_scene(bases[static_cast<std::size_t>(s)],
                                            cell.alpha, cfg);
      Rng rng(derive_seed(cfg.seed, {2, c, k}));
      const CorrespondenceSet noisy = add_pixel_noise(
          scene.correspondences, cell.noise_std, cfg.intrinsics, rng);
      run.trials[c][k] = run_trial(scene, noisy, cfg);
    }
  };
  const int n_threads = std::max(1, cfg.threads);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  run.records.reserve(run.cells.size());
  for (std::size_t c = 0; c < run.cells.size(); ++c) {
    run.records.push_back(aggregate_cell(run.cells[c], run.trials[c], cfg));
  }
  return run;
}

inline std::vector<GridCell> default_cells(const ScenarioConfig& cfg) {
  std::vector<GridCell> cells;
  for (double noise : cfg.noise_grid()) {
    for (double alpha : cfg.alpha_grid()) cells.push_back({alpha, noise});
  }
  return cells;
}

inline GridRun run_grid_detailed(const ScenarioConfig& cfg) {
  cfg.validate();
  const auto cells = default_cells(cfg);
  return run_grid_detailed(cfg, cells);
}

inline std::vector<ExperimentRecord> run_grid(const ScenarioConfig& cfg) {
  return run_grid_detailed(cfg).records;
}

// ---------------------------------------------------------------------------
// CSV and config files

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

inline void write_grid_csv(std::ostream& os, std::span<const ExperimentRecord> records) {
  os << kGridCsvSchema << '\n' << kGridCsvHeader << '\n';
  for (const auto& r : records) {
    os << format_number(r.alpha) << ',' << format_number(r.noise_std) << ','
       << format_number(r.rot_rmse_deg) << ',' << format_number(r.trans_rmse_new_deg)
       << ',' << format_number(r.trans_rmse_trad_deg) << ','
       << format_number(r.trans_diff_deg) << ',' << format_number(r.ratio3d) << ','
       << format_number(r.pri_mean) << ',' << format_number(r.m3_mean) << ','
       << format_number(r.t_identify_ns) << ',' << format_number(r.t_cheirality_ns)
       << '\n';
  }
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != value.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kConfigInvalid, "bad number for " + key + ": " + value);
  }
  return v;
}

inline int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw Error(ErrorCode::kConfigInvalid, "bad integer for " + key + ": " + value);
  }
  return static_cast<int>(v);
}

}  // namespace detail

// Applies one key=value setting. Keys use '_' or '-' interchangeably.
inline void apply_config_entry(ScenarioConfig& cfg, std::string key,
                               const std::string& value) {
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "d") cfg.d = detail::parse_double(key, value);
  else if (key == "n_pts") cfg.n_pts = detail::parse_int(key, value);
  else if (key == "n_scenes") cfg.n_scenes = detail::parse_int(key, value);
  else if (key == "n_mc") cfg.n_mc = detail::parse_int(key, value);
  else if (key == "alpha_min") cfg.alpha_min = detail::parse_double(key, value);
  else if (key == "alpha_max") cfg.alpha_max = detail::parse_double(key, value);
  else if (key == "alpha_steps") cfg.alpha_steps = detail::parse_int(key, value);
  else if (key == "noise_min") cfg.noise_min = detail::parse_double(key, value);
  else if (key == "noise_max") cfg.noise_max = detail::parse_double(key, value);
  else if (key == "noise_steps") cfg.noise_steps = detail::parse_int(key, value);
  else if (key == "t_max") cfg.t_max = detail::parse_double(key, value);
  else if (key == "delta_pri") cfg.delta_pri = detail::parse_double(key, value);
  else if (key == "threads") cfg.threads = detail::parse_int(key, value);
  else if (key == "timing") cfg.measure_timing = detail::parse_int(key, value) != 0;
  else if (key == "seed") {
    try {
      std::size_t pos = 0;
      cfg.seed = std::stoull(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kConfigInvalid, "bad seed: " + value);
    }
  } else if (key == "fx") cfg.intrinsics.fx = detail::parse_double(key, value);
  else if (key == "fy") cfg.intrinsics.fy = detail::parse_double(key, value);
  else if (key == "cx") cfg.intrinsics.cx = detail::parse_double(key, value);
  else if (key == "cy") cfg.intrinsics.cy = detail::parse_double(key, value);
  else throw Error(ErrorCode::kConfigInvalid, "unknown config key: " + key);
}

inline ScenarioConfig parse_config(std::istream& is, ScenarioConfig cfg = {}) {
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kConfigInvalid,
                  "line " + std::to_string(lineno) + ": expected key=value");
    }
    apply_config_entry(cfg, detail::trim(line.substr(0, eq)),
                       detail::trim(line.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace twoview
