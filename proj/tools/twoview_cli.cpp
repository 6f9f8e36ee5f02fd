// twoview: relative pose from two calibrated views.
//
//   twoview estimate CORR [--intrinsics K] [--normalized] [--csv] [--output F]
//   twoview classify CORR [--intrinsics K] [--normalized] [--delta-pri X]
//   twoview simulate [--seed N] [--alpha-min ...] [--output F] [--config F]
//   twoview bench [--counts 100,200] [--reps N] [--output F]
//
// Exit codes: 0 ok, 2 bad input or configuration, 3 estimation failure
// (too few points, degenerate configuration).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoview/twoview.hpp"

namespace {

using namespace twoview;

constexpr int kExitInput = 2;
constexpr int kExitEstimation = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooFewPoints:
    case ErrorCode::kDegenerateConfiguration:
    case ErrorCode::kRankDeficientEssential:
    case ErrorCode::kZeroVector:
      return kExitEstimation;
    default:
      return kExitInput;
  }
}

// Output sink: a file when a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::kConfigInvalid, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::kParse, "cannot read " + path);
  return is;
}

struct EstimateArgs {
  std::string corr_path;
  std::string intrinsics_path;
  std::string output;
  bool normalized = false;
  bool csv = false;
  bool timing = false;
  double delta_pri = kDefaultPriThreshold;
  std::optional<double> delta_theta;
};

CorrespondenceSet load_correspondences(const EstimateArgs& args) {
  CameraIntrinsics k;
  if (!args.intrinsics_path.empty()) {
    auto is = open_input(args.intrinsics_path);
    k = parse_intrinsics(is);
  }
  auto is = open_input(args.corr_path);
  return parse_correspondences(is, args.normalized, k);
}

PipelineResult run(const EstimateArgs& args) {
  PipelineOptions options;
  options.classify.delta_pri = args.delta_pri;
  options.classify.delta_theta = args.delta_theta;
  if (!(args.delta_pri >= 0.0)) {
    throw Error(ErrorCode::kConfigInvalid, "--delta-pri must be non-negative");
  }
  return run_pipeline(load_correspondences(args), options);
}

// Library errors from estimate/classify become a JSON document on the output
// plus a message on stderr.
template <typename F>
int guarded(const std::string& output, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << "twoview: " << e.what() << '\n';
    try {
      Output out(output);
      out.stream() << error_report(e.code(), e.what()).dump(2) << '\n';
    } catch (const Error&) {
    }
    return exit_code_for(e.code());
  }
}

int cmd_estimate(const EstimateArgs& args) {
  return guarded(args.output, [&] {
    const PipelineResult res = run(args);
    EstimateReport rep = make_report(res);
    if (!args.timing) rep.solve_ns = rep.identify_ns = rep.reconstruct_ns = 0.0;
    Output out(args.output);
    if (args.csv) {
      write_points_csv(out.stream(), rep);
    } else {
      out.stream() << nlohmann::json(rep).dump(2) << '\n';
    }
    return 0;
  });
}

int cmd_classify(const EstimateArgs& args) {
  return guarded(args.output, [&] {
    const PipelineResult res = run(args);
    nlohmann::json j{{"schema", "twoview-classify/1"},
                     {"n_points", res.reconstruction.points.size()},
                     {"label", motion_label_name(res.motion.label)},
                     {"pri", res.motion.pri},
                     {"m3", res.motion.m3},
                     {"delta_pri", res.motion.delta_pri}};
    if (res.motion.m3_says_pure_rotation) {
      j["delta_theta"] = *res.motion.delta_theta;
      j["m3_label"] = motion_label_name(*res.motion.m3_says_pure_rotation
                                            ? MotionLabel::kPureRotation
                                            : MotionLabel::kGeneralMotion);
    }
    Output out(args.output);
    out.stream() << j.dump(2) << '\n';
    return 0;
  });
}

void add_estimate_options(CLI::App* cmd, EstimateArgs& args) {
  cmd->add_option("correspondences", args.corr_path,
                  "text file, one 'x1 y1 x2 y2' pair per line")
      ->required();
  cmd->add_option("--intrinsics", args.intrinsics_path,
                  "key=value file with fx, fy, cx, cy (default 800/800/512/512)");
  cmd->add_flag("--normalized", args.normalized,
                "input is already in calibrated coordinates");
  cmd->add_option("--output,-o", args.output, "write here instead of stdout");
  cmd->add_option("--delta-pri", args.delta_pri, "pure-rotation threshold on PRI")
      ->capture_default_str();
  cmd->add_option("--delta-theta", args.delta_theta,
                  "optional threshold on M3, reported alongside the PRI label");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-view relative pose with pose-only identification"};
  app.require_subcommand(1);

  EstimateArgs est_args;
  auto* estimate = app.add_subcommand("estimate", "estimate pose, motion label and depths");
  add_estimate_options(estimate, est_args);
  estimate->add_flag("--csv", est_args.csv, "per-point rows instead of the JSON report");
  estimate->add_flag("--timing", est_args.timing, "include stage timings in the report");

  EstimateArgs cls_args;
  auto* classify_cmd = app.add_subcommand("classify", "pure rotation vs general motion");
  add_estimate_options(classify_cmd, cls_args);

  ScenarioConfig sim;
  std::string sim_output;
  std::string sim_config;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo sweep over alpha and noise");
  simulate->add_option("--config", sim_config,
                       "key=value file; explicit flags override it");
  simulate->add_option("--seed", sim.seed)->capture_default_str();
  simulate->add_option("--alpha-min", sim.alpha_min)->capture_default_str();
  simulate->add_option("--alpha-max", sim.alpha_max)->capture_default_str();
  simulate->add_option("--alpha-steps", sim.alpha_steps)->capture_default_str();
  simulate->add_option("--noise-min", sim.noise_min, "pixels")->capture_default_str();
  simulate->add_option("--noise-max", sim.noise_max, "pixels")->capture_default_str();
  simulate->add_option("--noise-steps", sim.noise_steps)->capture_default_str();
  simulate->add_option("--d", sim.d, "scene depth scale")->capture_default_str();
  simulate->add_option("--n-pts", sim.n_pts)->capture_default_str();
  simulate->add_option("--n-scenes", sim.n_scenes)->capture_default_str();
  simulate->add_option("--n-mc", sim.n_mc)->capture_default_str();
  simulate->add_option("--t-max", sim.t_max)->capture_default_str();
  simulate->add_option("--delta-pri", sim.delta_pri)->capture_default_str();
  simulate->add_option("--threads", sim.threads)->capture_default_str();
  simulate->add_flag("--timing", sim.measure_timing, "record per-trial timings");
  simulate->add_option("--output,-o", sim_output, "CSV path (default stdout)");

  BenchOptions bench_opts;
  std::string bench_output;
  auto* bench = app.add_subcommand("bench", "time Method I, Method II and the cheirality baseline");
  bench->add_option("--counts", bench_opts.point_counts, "point counts")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--reps", bench_opts.repetitions)->capture_default_str();
  bench->add_option("--warmup", bench_opts.warmup)->capture_default_str();
  bench->add_option("--noise", bench_opts.noise_px, "pixels")->capture_default_str();
  bench->add_option("--seed", bench_opts.seed)->capture_default_str();
  bench->add_option("--output,-o", bench_output, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*estimate) return cmd_estimate(est_args);
  if (*classify_cmd) return cmd_classify(cls_args);

  try {
    if (*simulate) {
      ScenarioConfig cfg = sim;
      if (!sim_config.empty()) {
        // Re-apply explicit flags on top of the file.
        auto is = open_input(sim_config);
        cfg = parse_config(is);
        for (const CLI::Option* opt : simulate->get_options()) {
          if (opt->count() == 0 || opt->get_name() == "--config" ||
              opt->get_name() == "--output" || opt->get_name() == "--help") {
            continue;
          }
          std::string key = opt->get_name().substr(2);
          if (key == "timing") {
            cfg.measure_timing = true;
          } else {
            apply_config_entry(cfg, key, opt->as<std::string>());
          }
        }
      }
      const auto records = run_grid(cfg);
      Output out(sim_output);
      write_grid_csv(out.stream(), records);
      std::cerr << "twoview: wrote " << records.size() << " rows\n";
      return 0;
    }
    if (*bench) {
      const auto rows = run_bench(bench_opts);
      Output out(bench_output);
      write_bench_csv(out.stream(), rows);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "twoview: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitInput;
}
