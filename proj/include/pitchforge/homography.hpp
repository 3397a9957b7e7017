#pragma once

#include <cmath>

#include "pitchforge/error.hpp"
#include "pitchforge/geom.hpp"

namespace pitchforge {

// Image-plane point; u rightward, v downward, both in pixels. May lie outside
// the frame (off-frame keypoints are kept as regression targets).
struct ImagePoint {
  double u = 0.0;
  double v = 0.0;
};

// 3x3 projective map between the pitch plane (z = 0) and the image plane.
// Defined only up to scale; every operation here is scale-invariant.
struct Homography {
  Mat3 h = Mat3::identity();

  // Rescales to unit Frobenius norm with h22 >= 0 when it is decisive.
  Homography normalized() const {
    Homography out = *this;
    double n = h.frobenius_norm();
    if (!(n > 0.0)) throw SingularError("homography: zero matrix");
    double s = 1.0 / n;
    if (h(2, 2) < -1e-12 * n) s = -s;
    for (auto &v : out.h.m) v *= s;
    return out;
  }
};

constexpr double kHorizonDenomTol = 1e-12;

// Dehomogenized projective map. Throws when the point sits on the horizon
// (homogeneous denominator vanishes relative to the matrix scale).
inline Vec2 apply_homography(const Homography &H, Vec2 p) {
  Vec3 q = H.h * Vec3{p.x, p.y, 1.0};
  double scale = H.h.frobenius_norm();
  if (std::abs(q.z) <= kHorizonDenomTol * scale)
    throw SingularError("apply_homography: point at infinity");
  return {q.x / q.z, q.y / q.z};
}

inline ImagePoint apply_homography(const Homography &H, ImagePoint p) {
  Vec2 r = apply_homography(H, Vec2{p.u, p.v});
  return {r.x, r.y};
}

inline Homography invert_homography(const Homography &H) {
  Homography unit = H.normalized();
  if (std::abs(unit.h.det()) <= 1e-12)
    throw SingularError("invert_homography: singular matrix");
  Homography inv;
  inv.h = unit.h.inverse();
  return inv.normalized();
}

} // namespace pitchforge
