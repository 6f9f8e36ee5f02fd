#pragma once

// Text formats used by the command-line tool.
//
//   correspondences: one pair per line, "x1 y1 x2 y2", '#' starts a comment.
//                    Pixels by default; calibrated coordinates when
//                    `normalized` is set.
//   intrinsics:      key=value lines with fx, fy, cx, cy.
//   report:          JSON document (EstimateReport).

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twoview/camera.hpp"
#include "twoview/error.hpp"
#include "twoview/experiment.hpp"
#include "twoview/pipeline.hpp"

namespace twoview {

inline CorrespondenceSet parse_correspondences(std::istream& is, bool normalized,
                                               const CameraIntrinsics& k = {}) {
  CorrespondenceSet out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (detail::trim(line).empty()) continue;
    std::istringstream ls(line);
    std::array<double, 4> v{};
    for (auto& x : v) {
      if (!(ls >> x) || !std::isfinite(x)) {
        throw Error(ErrorCode::kParse,
                    "line " + std::to_string(lineno) + ": expected x1 y1 x2 y2");
      }
    }
    std::string extra;
    if (ls >> extra) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (normalized) {
      Correspondence c;
      c.left = Vec3(v[0], v[1], 1.0);
      c.right = Vec3(v[2], v[3], 1.0);
      out.push_back(c);
    } else {
      out.push_back(correspondence_from_pixels(Vec2(v[0], v[1]), Vec2(v[2], v[3]), k));
    }
  }
  return out;
}

inline CameraIntrinsics parse_intrinsics(std::istream& is) {
  std::map<std::string, double> values;
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
      throw Error(ErrorCode::kParse,
                  "intrinsics line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key != "fx" && key != "fy" && key != "cx" && key != "cy") {
      throw Error(ErrorCode::kParse, "unknown intrinsics key: " + key);
    }
    try {
      values[key] = detail::parse_double(key, value);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
  }
  for (const char* key : {"fx", "fy", "cx", "cy"}) {
    if (!values.count(key)) {
      throw Error(ErrorCode::kParse, std::string("missing intrinsics key: ") + key);
    }
  }
  CameraIntrinsics k{values["fx"], values["fy"], values["cx"], values["cy"]};
  if (!k.valid()) throw Error(ErrorCode::kParse, "focal lengths must be positive");
  return k;
}

inline void write_correspondences(std::ostream& os, std::span<const Correspondence> corr,
                                  bool normalized) {
  os << "# x1 y1 x2 y2 (" << (normalized ? "normalized" : "pixels") << ")\n";
  for (const auto& c : corr) {
    if (normalized) {
      os << format_number(c.left.x()) << ' ' << format_number(c.left.y()) << ' '
         << format_number(c.right.x()) << ' ' << format_number(c.right.y()) << '\n';
    } else {
      os << format_number(c.left_px->x()) << ' ' << format_number(c.left_px->y()) << ' '
         << format_number(c.right_px->x()) << ' ' << format_number(c.right_px->y())
         << '\n';
    }
  }
}

inline constexpr const char* kReportSchema = "twoview-estimate/1";

struct PointReport {
  double depth_left = 0.0;
  double depth_right = 0.0;
  std::array<double, 3> point{};
  bool valid = false;
};

struct EstimateReport {
  std::size_t n_points = 0;
  std::array<double, 9> rotation{};  // row-major
  std::array<double, 3> translation{};
  std::array<int, 2> s1{};
  std::array<int, 2> s2{};
  std::array<double, 2> m1_margin{};
  std::array<double, 2> m2_margin{};
  int rotation_index = 0;
  int translation_index = 0;
  double pri = 0.0;
  double m3 = 0.0;
  double delta_pri = kDefaultPriThreshold;
  std::string label;
  std::vector<PointReport> points;
  double solve_ns = 0.0;
  double identify_ns = 0.0;
  double reconstruct_ns = 0.0;

  Mat3 rotation_matrix() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) r(i, j) = rotation[static_cast<std::size_t>(3 * i + j)];
    }
    return r;
  }
};

inline EstimateReport make_report(const PipelineResult& res) {
  EstimateReport rep;
  const auto& id = res.identification;
  rep.n_points = res.reconstruction.points.size();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      rep.rotation[static_cast<std::size_t>(3 * i + j)] = id.chosen.R(i, j);
    }
    rep.translation[static_cast<std::size_t>(i)] = id.chosen.t_dir(i);
  }
  rep.s1 = id.s1;
  rep.s2 = id.s2;
  rep.m1_margin = id.m1_margin;
  rep.m2_margin = id.m2_margin;
  rep.rotation_index = id.rotation_index;
  rep.translation_index = id.translation_index;
  rep.pri = res.motion.pri;
  rep.m3 = res.motion.m3;
  rep.delta_pri = res.motion.delta_pri;
  rep.label = motion_label_name(res.motion.label);
  for (const auto& p : res.reconstruction.points) {
    rep.points.push_back({p.depth_left, p.depth_right,
                          {p.point.x(), p.point.y(), p.point.z()}, p.valid});
  }
  rep.solve_ns = res.timings.solve_ns;
  rep.identify_ns = res.timings.identify_ns;
  rep.reconstruct_ns = res.timings.reconstruct_ns;
  return rep;
}

inline void to_json(nlohmann::json& j, const PointReport& p) {
  j = nlohmann::json{{"depth_left", p.depth_left},
                     {"depth_right", p.depth_right},
                     {"point", p.point},
                     {"valid", p.valid}};
}

inline void from_json(const nlohmann::json& j, PointReport& p) {
  j.at("depth_left").get_to(p.depth_left);
  j.at("depth_right").get_to(p.depth_right);
  j.at("point").get_to(p.point);
  j.at("valid").get_to(p.valid);
}

inline void to_json(nlohmann::json& j, const EstimateReport& r) {
  j = nlohmann::json{
      {"schema", kReportSchema},
      {"n_points", r.n_points},
      {"pose", {{"rotation", r.rotation}, {"translation", r.translation}}},
      {"votes",
       {{"s1", r.s1},
        {"s2", r.s2},
        {"m1_margin", r.m1_margin},
        {"m2_margin", r.m2_margin},
        {"rotation_index", r.rotation_index},
        {"translation_index", r.translation_index}}},
      {"motion",
       {{"label", r.label}, {"pri", r.pri}, {"m3", r.m3}, {"delta_pri", r.delta_pri}}},
      {"points", r.points},
      {"timings_ns",
       {{"solve", r.solve_ns}, {"identify", r.identify_ns}, {"reconstruct", r.reconstruct_ns}}},
  };
}

inline void from_json(const nlohmann::json& j, EstimateReport& r) {
  if (j.value("schema", std::string()) != kReportSchema) {
    throw Error(ErrorCode::kParse, "unexpected report schema");
  }
  j.at("n_points").get_to(r.n_points);
  j.at("pose").at("rotation").get_to(r.rotation);
  j.at("pose").at("translation").get_to(r.translation);
  const auto& v = j.at("votes");
  v.at("s1").get_to(r.s1);
  v.at("s2").get_to(r.s2);
  v.at("m1_margin").get_to(r.m1_margin);
  v.at("m2_margin").get_to(r.m2_margin);
  v.at("rotation_index").get_to(r.rotation_index);
  v.at("translation_index").get_to(r.translation_index);
  const auto& m = j.at("motion");
  m.at("label").get_to(r.label);
  m.at("pri").get_to(r.pri);
  m.at("m3").get_to(r.m3);
  m.at("delta_pri").get_to(r.delta_pri);
  j.at("points").get_to(r.points);
  const auto& t = j.at("timings_ns");
  t.at("solve").get_to(r.solve_ns);
  t.at("identify").get_to(r.identify_ns);
  t.at("reconstruct").get_to(r.reconstruct_ns);
}

inline nlohmann::json error_report(ErrorCode code, const std::string& message) {
  return nlohmann::json{{"schema", kReportSchema},
                        {"error", std::string(error_name(code))},
                        {"message", message}};
}

inline void write_points_csv(std::ostream& os, const EstimateReport& r) {
  os << "# schema: twoview-points/1\n";
  os << "index,depth_left,depth_right,x,y,z,valid\n";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    os << i << ',' << format_number(p.depth_left) << ',' << format_number(p.depth_right)
       << ',' << format_number(p.point[0]) << ',' << format_number(p.point[1]) << ','
       << format_number(p.point[2]) << ',' << (p.valid ? 1 : 0) << '\n';
  }
}

}  // namespace twoview
