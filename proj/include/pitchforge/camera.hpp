#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "pitchforge/error.hpp"
#include "pitchforge/geom.hpp"
#include "pitchforge/homography.hpp"
#include "pitchforge/pitch.hpp"
#include "pitchforge/rng.hpp"

namespace pitchforge {

// Square pixels, zero skew, zero distortion: the ground truth stays exactly
// homographic.
struct CameraIntrinsics {
  double focal_px = 0.0;
  Vec2 principal_point;    // (u0, v0)
  int width = 0;
  int height = 0;
};

// z-up world. Yaw about +z from the +x axis, pitch tilts the view down, roll
// about the optical axis. Image v grows downward.
struct CameraPose {
  Vec3 position;           // z > 0
  double yaw = 0.0;
  double pitch_down = 0.0;
  double roll = 0.0;

  // World -> camera rotation; camera axes are (right, image-down, forward).
  // Built by composing yaw about world z, pitch about the camera right axis
  // and roll about the optical axis, so the straight-down pose stays
  // well-defined.
  Mat3 rotation() const {
    const double cy = std::cos(yaw), sy = std::sin(yaw);
    const double cp = std::cos(pitch_down), sp = std::sin(pitch_down);
    Vec3 forward{cp * cy, cp * sy, -sp};
    Vec3 right{sy, -cy, 0.0};
    Vec3 down{-cy * sp, -sy * sp, -cp};
    const double cr = std::cos(roll), sr = std::sin(roll);
    Vec3 right_r = right * cr + down * sr;
    Vec3 down_r = down * cr - right * sr;
    Mat3 R;
    R.m = {right_r.x, right_r.y, right_r.z,
           down_r.x,  down_r.y,  down_r.z,
           forward.x, forward.y, forward.z};
    return R;
  }
};

struct CameraModel {
  CameraIntrinsics intrinsics;
  CameraPose pose;
};

struct Projection {
  ImagePoint point;
  double depth = 0.0; // camera-frame forward coordinate, meters
  bool in_front = false;
};

inline Mat3 intrinsic_matrix(const CameraIntrinsics &k) {
  Mat3 K = Mat3::identity();
  K(0, 0) = k.focal_px;
  K(1, 1) = k.focal_px;
  K(0, 2) = k.principal_point.x;
  K(1, 2) = k.principal_point.y;
  return K;
}

namespace detail {
// K * [r1 r2 t]. project() and ground_homography() both evaluate through this
// matrix so the two routes agree bit for bit.
inline Mat3 ground_map(const CameraModel &c) {
  Mat3 R = c.pose.rotation();
  Vec3 t = R * (c.pose.position * -1.0);
  Mat3 rt;
  for (int i = 0; i < 3; ++i) {
    rt(i, 0) = R(i, 0);
    rt(i, 1) = R(i, 1);
    rt(i, 2) = i == 0 ? t.x : (i == 1 ? t.y : t.z);
  }
  return intrinsic_matrix(c.intrinsics) * rt;
}
} // namespace detail

inline Projection project(const CameraModel &c, PitchPoint p) {
  Vec3 q = detail::ground_map(c) * Vec3{p.x, p.y, 1.0};
  Projection out;
  out.depth = q.z; // K's last row is (0,0,1), so w equals the forward coordinate
  out.in_front = q.z > 0.0;
  if (out.in_front) {
    out.point.u = q.x / q.z;
    out.point.v = q.y / q.z;
  }
  return out;
}

// Exact pitch-plane -> image homography: for any ground point with positive
// depth, project() equals the dehomogenized H * (x, y, 1).
inline Homography ground_homography(const CameraModel &c) {
  if (!(std::abs(c.pose.position.z) > 1e-12))
    throw SingularError("ground_homography: camera center lies in the ground plane");
  Homography H;
  H.h = detail::ground_map(c);
  return H;
}

inline bool visible(const CameraModel &c, PitchPoint p) {
  Projection pr = project(c, p);
  return pr.in_front && pr.point.u >= 0.0 && pr.point.u < double(c.intrinsics.width) &&
         pr.point.v >= 0.0 && pr.point.v < double(c.intrinsics.height);
}

// Sampling ranges for dataset randomization. Defaults give broadcast-like
// viewpoints: elevated side positions aimed at a random pitch target.
struct CameraRange {
  double x_min = -60.0, x_max = 60.0;
  double y_min = 20.0, y_max = 60.0;   // magnitude of the side offset
  bool mirror_sides = true;            // pick y sign at random
  double z_min = 8.0, z_max = 35.0;
  double pitch_down_min_deg = 10.0, pitch_down_max_deg = 45.0;
  double roll_min_deg = -3.0, roll_max_deg = 3.0;
  double hfov_min_deg = 20.0, hfov_max_deg = 70.0;
  int image_width = 256;
  int image_height = 256;
};

namespace detail {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
}

// Uniform sample from cfg, rejecting views where the pitch center does not
// project inside the central 80% of the frame. Deterministic in rng.
inline CameraModel sample_camera(RandomStream &rng, const CameraRange &cfg) {
  if (!(cfg.x_max >= cfg.x_min) || !(cfg.y_max >= cfg.y_min) ||
      !(cfg.z_max >= cfg.z_min) || cfg.image_width <= 0 || cfg.image_height <= 0)
    throw DomainError("sample_camera: empty range");

  const double half_l = 52.5, half_w = 34.0;
  int rejected = 0;
  while (true) {
    CameraModel c;
    c.intrinsics.width = cfg.image_width;
    c.intrinsics.height = cfg.image_height;
    c.intrinsics.principal_point = {cfg.image_width / 2.0, cfg.image_height / 2.0};
    double hfov = rng.uniform(cfg.hfov_min_deg, cfg.hfov_max_deg) * detail::kDegToRad;
    c.intrinsics.focal_px = (cfg.image_width / 2.0) / std::tan(hfov / 2.0);

    double side = cfg.mirror_sides ? (rng.bernoulli(0.5) ? 1.0 : -1.0) : -1.0;
    c.pose.position.x = rng.uniform(cfg.x_min, cfg.x_max);
    c.pose.position.y = side * rng.uniform(cfg.y_min, cfg.y_max);
    c.pose.position.z = rng.uniform(cfg.z_min, cfg.z_max);

    PitchPoint target{rng.uniform(-half_l, half_l), rng.uniform(-half_w, half_w)};
    c.pose.yaw = std::atan2(target.y - c.pose.position.y, target.x - c.pose.position.x);
    c.pose.pitch_down =
        rng.uniform(cfg.pitch_down_min_deg, cfg.pitch_down_max_deg) * detail::kDegToRad;
    c.pose.roll = rng.uniform(cfg.roll_min_deg, cfg.roll_max_deg) * detail::kDegToRad;

    Projection center = project(c, PitchPoint{0, 0});
    double mu = cfg.image_width * 0.1, mv = cfg.image_height * 0.1;
    if (center.in_front && center.point.u >= mu &&
        center.point.u <= cfg.image_width - mu && center.point.v >= mv &&
        center.point.v <= cfg.image_height - mv)
      return c;
    if (++rejected >= 1000)
      throw UnsatisfiableRangeError(
          "sample_camera: 1000 rejected samples, range cannot satisfy the framing rule");
  }
}

} // namespace pitchforge
