#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pitchforge/camera.hpp"
#include "pitchforge/error.hpp"
#include "pitchforge/homography.hpp"
#include "pitchforge/pitch.hpp"

namespace pitchforge {

struct PlayerGroundTruth {
  PitchPoint pitch;
  ImagePoint foot;
};

// Per-image ground truth. keypoints_norm interleaves (u/width, v/height) in
// keypoint index order; that 52-value layout is the regression target.
struct AnnotationRecord {
  int64_t id = 0;
  std::string image_path;
  std::vector<ImagePoint> keypoints_px;   // 26, frame-unbounded
  std::vector<double> keypoints_norm;     // 52 interleaved
  std::vector<bool> visibility;           // 26
  CameraModel camera;
  Homography homography_gt;               // pitch -> image
  std::vector<PlayerGroundTruth> players_gt;
  std::string scenario;
};

namespace detail {

// All annotation reals go through this: 9 significant digits.
inline std::string real9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

} // namespace detail

// One JSON object per line, keys in fixed order, reals at 9 significant
// digits. Assembled by hand so the field order and number format are part of
// the contract rather than a library default.
inline std::string annotation_to_json_line(const AnnotationRecord &r) {
  using detail::real9;
  std::string s;
  s.reserve(2048);
  s += "{\"id\":" + std::to_string(r.id);
  s += ",\"image_path\":" + nlohmann::json(r.image_path).dump();
  s += ",\"keypoints_px\":[";
  for (size_t i = 0; i < r.keypoints_px.size(); ++i) {
    if (i) s += ",";
    s += "[" + real9(r.keypoints_px[i].u) + "," + real9(r.keypoints_px[i].v) + "]";
  }
  s += "],\"keypoints_norm\":[";
  for (size_t i = 0; i < r.keypoints_norm.size(); ++i) {
    if (i) s += ",";
    s += real9(r.keypoints_norm[i]);
  }
  s += "],\"visibility\":[";
  for (size_t i = 0; i < r.visibility.size(); ++i) {
    if (i) s += ",";
    s += r.visibility[i] ? "true" : "false";
  }
  s += "],\"camera\":{\"intrinsics\":{\"focal_px\":" + real9(r.camera.intrinsics.focal_px);
  s += ",\"principal_point\":[" + real9(r.camera.intrinsics.principal_point.x) + "," +
       real9(r.camera.intrinsics.principal_point.y) + "]";
  s += ",\"image_size\":[" + std::to_string(r.camera.intrinsics.width) + "," +
       std::to_string(r.camera.intrinsics.height) + "]}";
  s += ",\"pose\":{\"position\":[" + real9(r.camera.pose.position.x) + "," +
       real9(r.camera.pose.position.y) + "," + real9(r.camera.pose.position.z) + "]";
  s += ",\"yaw\":" + real9(r.camera.pose.yaw);
  s += ",\"pitch\":" + real9(r.camera.pose.pitch_down);
  s += ",\"roll\":" + real9(r.camera.pose.roll) + "}}";
  s += ",\"homography_gt\":[";
  for (int i = 0; i < 9; ++i) {
    if (i) s += ",";
    s += real9(r.homography_gt.h.m[size_t(i)]);
  }
  s += "],\"players_gt\":[";
  for (size_t i = 0; i < r.players_gt.size(); ++i) {
    if (i) s += ",";
    s += "{\"pitch\":[" + real9(r.players_gt[i].pitch.x) + "," +
         real9(r.players_gt[i].pitch.y) + "]";
    s += ",\"foot\":[" + real9(r.players_gt[i].foot.u) + "," +
         real9(r.players_gt[i].foot.v) + "]}";
  }
  s += "],\"scenario\":" + nlohmann::json(r.scenario).dump() + "}";
  return s;
}

inline AnnotationRecord annotation_from_json(const nlohmann::json &j) {
  AnnotationRecord r;
  try {
    r.id = j.at("id").get<int64_t>();
    r.image_path = j.at("image_path").get<std::string>();
    for (const auto &kp : j.at("keypoints_px"))
      r.keypoints_px.push_back({kp.at(0).get<double>(), kp.at(1).get<double>()});
    r.keypoints_norm = j.at("keypoints_norm").get<std::vector<double>>();
    r.visibility = j.at("visibility").get<std::vector<bool>>();
    const auto &ji = j.at("camera").at("intrinsics");
    r.camera.intrinsics.focal_px = ji.at("focal_px").get<double>();
    r.camera.intrinsics.principal_point = {ji.at("principal_point").at(0).get<double>(),
                                           ji.at("principal_point").at(1).get<double>()};
    r.camera.intrinsics.width = ji.at("image_size").at(0).get<int>();
    r.camera.intrinsics.height = ji.at("image_size").at(1).get<int>();
    const auto &jp = j.at("camera").at("pose");
    r.camera.pose.position = {jp.at("position").at(0).get<double>(),
                              jp.at("position").at(1).get<double>(),
                              jp.at("position").at(2).get<double>()};
    r.camera.pose.yaw = jp.at("yaw").get<double>();
    r.camera.pose.pitch_down = jp.at("pitch").get<double>();
    r.camera.pose.roll = jp.at("roll").get<double>();
    const auto &jh = j.at("homography_gt");
    for (int i = 0; i < 9; ++i) r.homography_gt.h.m[size_t(i)] = jh.at(size_t(i)).get<double>();
    for (const auto &pl : j.at("players_gt")) {
      PlayerGroundTruth g;
      g.pitch = {pl.at("pitch").at(0).get<double>(), pl.at("pitch").at(1).get<double>()};
      g.foot = {pl.at("foot").at(0).get<double>(), pl.at("foot").at(1).get<double>()};
      r.players_gt.push_back(g);
    }
    r.scenario = j.at("scenario").get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw IntegrityError(std::string("annotation record malformed: ") + e.what());
  }
  if (r.keypoints_px.size() != kKeypointCount ||
      r.keypoints_norm.size() != 2 * kKeypointCount ||
      r.visibility.size() != kKeypointCount)
    throw IntegrityError("annotation record has wrong keypoint arity");
  return r;
}

inline AnnotationRecord annotation_from_json_line(const std::string &line) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded()) throw IntegrityError("annotation line is not valid JSON");
  return annotation_from_json(j);
}

} // namespace pitchforge
