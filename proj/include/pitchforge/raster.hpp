#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "pitchforge/annotation.hpp"
#include "pitchforge/camera.hpp"
#include "pitchforge/error.hpp"
#include "pitchforge/image.hpp"
#include "pitchforge/pitch.hpp"
#include "pitchforge/rng.hpp"
#include "pitchforge/texture.hpp"

namespace pitchforge {

enum class SceneVariant { flat, background, lighting, players, stadium, artifacts };

inline const char *to_string(SceneVariant v) {
  switch (v) {
    case SceneVariant::flat: return "flat";
    case SceneVariant::background: return "background";
    case SceneVariant::lighting: return "lighting";
    case SceneVariant::players: return "players";
    case SceneVariant::stadium: return "stadium";
    case SceneVariant::artifacts: return "artifacts";
  }
  return "?";
}

struct Rgb {
  float r = 0, g = 0, b = 0;
};

struct LightConfig {
  double ambient = 1.0;              // [0, 1]
  double directional = 0.0;          // [0, 2]
  Vec3 direction{0.3, 0.2, 0.93};    // unit, toward the light
};

struct PlayerSprite {
  PitchPoint position;
  Rgb color;
  double height_m = 1.8;
};

// Fully concrete description of one scene. Randomized fields (lighting,
// player placement, background choice) are sampled by the caller before
// rendering; render() itself only draws.
struct SceneConfig {
  SceneVariant variant = SceneVariant::flat;
  std::variant<Rgb, std::shared_ptr<const ImageBuffer>> background = Rgb{0.10f, 0.11f, 0.12f};
  LightConfig light;
  std::vector<PlayerSprite> players;
  bool crowd_enabled = false;
  int supersample = 2;
};

struct SceneSample {
  ImageBuffer image;
  AnnotationRecord annotation;
};

namespace detail {

constexpr double kDepthEps = 0.01; // ground clipped at this camera depth

// Uniform grid over the pitch plane holding, per cell, the marking segments
// (arcs flattened to 64-piece polylines) within reach. Pixel shading then
// tests at most a handful of segments.
class MarkingGrid {
public:
  // Segments are indexed into cells out to kReach meters so coverage() can
  // resolve lines thinner than a pixel footprint.
  static constexpr double kReach = 1.0;

  MarkingGrid(const PitchTemplate &t, int arc_pieces = 64)
      : half_line_(t.line_width_m / 2.0) {
    for (const auto &[a, b] : t.segments)
      segments_.push_back({{a.x, a.y}, {b.x, b.y}});
    for (const auto &arc : t.arcs) {
      double prev_x = arc.center.x + arc.radius_m * std::cos(arc.start_angle_rad);
      double prev_y = arc.center.y + arc.radius_m * std::sin(arc.start_angle_rad);
      for (int i = 1; i <= arc_pieces; ++i) {
        double ang = arc.start_angle_rad +
                     (arc.end_angle_rad - arc.start_angle_rad) * double(i) / arc_pieces;
        double x = arc.center.x + arc.radius_m * std::cos(ang);
        double y = arc.center.y + arc.radius_m * std::sin(ang);
        segments_.push_back({{prev_x, prev_y}, {x, y}});
        prev_x = x;
        prev_y = y;
      }
    }

    x0_ = -(t.apron_half_length() + 1.0);
    y0_ = -(t.apron_half_width() + 1.0);
    nx_ = int(std::ceil((-x0_ * 2.0) / kCell));
    ny_ = int(std::ceil((-y0_ * 2.0) / kCell));
    cells_.resize(size_t(nx_) * size_t(ny_));
    for (size_t si = 0; si < segments_.size(); ++si) {
      const auto &[a, b] = segments_[si];
      double lox = std::min(a.x, b.x) - kReach, hix = std::max(a.x, b.x) + kReach;
      double loy = std::min(a.y, b.y) - kReach, hiy = std::max(a.y, b.y) + kReach;
      int cx0 = std::max(0, int((lox - x0_) / kCell));
      int cx1 = std::min(nx_ - 1, int((hix - x0_) / kCell));
      int cy0 = std::max(0, int((loy - y0_) / kCell));
      int cy1 = std::min(ny_ - 1, int((hiy - y0_) / kCell));
      for (int cy = cy0; cy <= cy1; ++cy)
        for (int cx = cx0; cx <= cx1; ++cx) {
          // keep only cells whose box actually comes near the segment
          Vec2 cc{x0_ + (cx + 0.5) * kCell, y0_ + (cy + 0.5) * kCell};
          double d = dist_point_segment(cc, a, b);
          if (d <= kReach + kCell * 0.7072)
            cells_[size_t(cy) * size_t(nx_) + size_t(cx)].push_back(uint16_t(si));
        }
    }
  }

  double distance(double x, double y) const {
    int cx = int((x - x0_) / kCell);
    int cy = int((y - y0_) / kCell);
    if (cx < 0 || cx >= nx_ || cy < 0 || cy >= ny_) return kReach;
    double best = kReach;
    for (uint16_t si : cells_[size_t(cy) * size_t(nx_) + size_t(cx)]) {
      const auto &[a, b] = segments_[si];
      best = std::min(best, dist_point_segment({x, y}, a, b));
    }
    return best;
  }

  // Fraction of a pixel footprint (footprint_m across) covered by the line
  // band at the given ground point. Keeps sub-pixel-wide lines visible.
  double coverage(double x, double y, double footprint_m) const {
    double d = distance(x, y);
    double h = std::max(footprint_m, 1e-6);
    double c = ((half_line_ + h * 0.5) - d) / h;
    return std::clamp(c, 0.0, 1.0);
  }

private:
  static constexpr double kCell = 0.5;
  double half_line_;
  double x0_ = 0, y0_ = 0;
  int nx_ = 0, ny_ = 0;
  std::vector<std::pair<Vec2, Vec2>> segments_;
  std::vector<std::vector<uint16_t>> cells_;
};

struct GroundMapping {
  Mat3 h;        // pitch -> image (ground_map)
  Mat3 h_inv;
  bool valid(double w) const { return std::abs(w) > 1e-14; }
};

inline float light_factor(const LightConfig &l, Vec3 n) {
  double lam = std::max(0.0, n.dot(l.direction));
  return float(l.ambient + l.directional * lam);
}

inline Rgb grass_albedo(uint64_t seed, double x, double y) {
  // 5 m mowing stripes across the length plus value noise
  int64_t stripe = int64_t(std::floor(x / 5.0));
  float tone = (stripe & 1) ? 1.06f : 0.94f;
  float n = float(0.92 + 0.16 * value_noise(seed, x * 1.35, y * 1.35));
  return {0.20f * tone * n, 0.46f * tone * n, 0.18f * tone * n};
}

inline Rgb stand_albedo(uint64_t seed, bool crowd, double along_m, double height_m) {
  if (!crowd) {
    float shade = float(0.40 + 0.08 * value_noise(seed, along_m * 0.4, height_m * 0.4));
    return {shade, shade, shade * 0.97f};
  }
  // crowd speckle: one pseudo-random color per ~0.4 m cell
  int64_t cx = int64_t(std::floor(along_m / 0.4));
  int64_t cy = int64_t(std::floor(height_m / 0.4));
  float r = float(cell_hash01(seed ^ 0x1, cx, cy));
  float g = float(cell_hash01(seed ^ 0x2, cx, cy));
  float b = float(cell_hash01(seed ^ 0x3, cx, cy));
  return {0.15f + 0.7f * r, 0.15f + 0.7f * g, 0.15f + 0.7f * b};
}

inline Rgb sky_color(double elevation01) {
  float t = float(std::clamp(elevation01, 0.0, 1.0));
  return {0.55f + 0.20f * t, 0.66f + 0.19f * t, 0.80f + 0.15f * t};
}

struct StadiumWalls {
  // four vertical rectangles enclosing the pitch, beyond the camera range
  static constexpr double kX = 68.0, kY = 66.0, kHeight = 22.0;

  // Returns hit distance along dir (world units) or a negative value.
  static double hit(Vec3 origin, Vec3 dir, double *along, double *height,
                    Vec3 *normal) {
    double best = -1.0;
    auto consider = [&](double t, double a, double h, Vec3 n) {
      if (t <= kDepthEps || h < 0.0 || h > kHeight) return;
      if (best > 0.0 && t >= best) return;
      best = t;
      *along = a;
      *height = h;
      *normal = n;
    };
    if (std::abs(dir.x) > 1e-12) {
      for (double sx : {kX, -kX}) {
        double t = (sx - origin.x) / dir.x;
        double y = origin.y + t * dir.y;
        if (t > 0 && std::abs(y) <= kY)
          consider(t, y, origin.z + t * dir.z, {sx > 0 ? -1.0 : 1.0, 0, 0});
      }
    }
    if (std::abs(dir.y) > 1e-12) {
      for (double sy : {kY, -kY}) {
        double t = (sy - origin.y) / dir.y;
        double x = origin.x + t * dir.x;
        if (t > 0 && std::abs(x) <= kX)
          consider(t, x, origin.z + t * dir.z, {0, sy > 0 ? -1.0 : 1.0, 0});
      }
    }
    return best;
  }
};

inline void validate_scene(const PitchTemplate &t, const SceneConfig &s) {
  if (s.supersample < 1) throw DomainError("render: supersample must be >= 1");
  if (!(s.light.ambient + s.light.directional > 0.05))
    throw DomainError("render: scene would be pitch-black");
  for (const auto &p : s.players)
    if (std::abs(p.position.x) > t.length_m / 2.0 ||
        std::abs(p.position.y) > t.width_m / 2.0)
      throw DomainError("render: player outside pitch bounds");
}

// Image-space capsule for one player billboard; silhouette spans exactly
// foot..head so the blob bottom sits on the foot projection.
struct PlayerCapsule {
  Vec2 a, b;       // axis endpoints, supersampled pixel coords
  double radius;   // supersampled pixels
  Rgb color;
  double depth;
  bool valid = false;
};

inline PlayerCapsule make_capsule(const CameraModel &c, const PlayerSprite &p,
                                  int ss) {
  PlayerCapsule cap;
  Projection foot = project(c, p.position);
  if (!foot.in_front || foot.depth <= kDepthEps) return cap;
  Mat3 R = c.pose.rotation();
  Vec3 head_w = Vec3{p.position.x, p.position.y, p.height_m};
  Vec3 cam_head = R * (head_w - c.pose.position);
  if (cam_head.z <= kDepthEps) return cap;
  double u_h = c.intrinsics.focal_px * cam_head.x / cam_head.z +
               c.intrinsics.principal_point.x;
  double v_h = c.intrinsics.focal_px * cam_head.y / cam_head.z +
               c.intrinsics.principal_point.y;
  double radius_w = p.height_m * 0.14;
  double r_px = c.intrinsics.focal_px * radius_w / foot.depth;
  Vec2 f{foot.point.u * ss, foot.point.v * ss};
  Vec2 h{u_h * ss, v_h * ss};
  double r_ss = r_px * ss;
  Vec2 axis = h - f;
  double len = axis.norm();
  if (len > 2.0 * r_ss) {
    Vec2 unit = axis * (1.0 / len);
    cap.a = f + unit * r_ss;
    cap.b = h - unit * r_ss;
  } else {
    cap.a = cap.b = (f + h) * 0.5;
  }
  // distant players must not vanish between sample points
  cap.radius = std::max(r_ss, 0.75);
  cap.color = p.color;
  cap.depth = foot.depth;
  cap.valid = true;
  return cap;
}

} // namespace detail

// Ground-truth annotation for a scene (no pixels involved).
inline AnnotationRecord annotate(const PitchTemplate &t, const CameraModel &c,
                                 const SceneConfig &s);

// Deterministic software render of one scene. Consumes exactly one value from
// rng (the texture seed); everything else is fixed by the arguments.
inline SceneSample render(const PitchTemplate &t, const CameraModel &c,
                          const SceneConfig &s, RandomStream rng) {
  detail::validate_scene(t, s);
  const int ss = s.supersample;
  const int W = c.intrinsics.width, H = c.intrinsics.height;
  const uint64_t tex_seed = rng.next_u64();

  detail::MarkingGrid grid(t);
  Mat3 ground = detail::ground_map(c);
  Mat3 ground_inv = ground.inverse();
  Mat3 R = c.pose.rotation();
  Mat3 Rt = R.transposed();
  const double inv_f = 1.0 / c.intrinsics.focal_px;
  const bool stadium = s.variant == SceneVariant::stadium;
  const double apron_x = t.apron_half_length(), apron_y = t.apron_half_width();
  const float ground_light = detail::light_factor(s.light, {0, 0, 1});

  const ImageBuffer *bg_img = nullptr;
  Rgb bg_solid{0.10f, 0.11f, 0.12f};
  if (std::holds_alternative<Rgb>(s.background))
    bg_solid = std::get<Rgb>(s.background);
  else if (auto &ptr = std::get<std::shared_ptr<const ImageBuffer>>(s.background))
    bg_img = ptr.get();

  std::vector<detail::PlayerCapsule> capsules;
  for (const auto &p : s.players) {
    auto cap = detail::make_capsule(c, p, ss);
    if (cap.valid) capsules.push_back(cap);
  }
  std::sort(capsules.begin(), capsules.end(),
            [](const auto &a, const auto &b) { return a.depth > b.depth; });

  const int sw = W * ss, sh = H * ss;
  ImageBuffer hi(sw, sh);
  for (int py = 0; py < sh; ++py) {
    double v = (py + 0.5) / ss;
    for (int px = 0; px < sw; ++px) {
      double u = (px + 0.5) / ss;
      Rgb out;
      bool shaded = false;

      Vec3 g = ground_inv * Vec3{u, v, 1.0};
      if (std::abs(g.z) > 1e-14) {
        double gx = g.x / g.z, gy = g.y / g.z;
        double depth = ground.m[6] * gx + ground.m[7] * gy + ground.m[8];
        if (depth > detail::kDepthEps && std::abs(gx) <= apron_x &&
            std::abs(gy) <= apron_y) {
          Rgb albedo = detail::grass_albedo(tex_seed, gx, gy);
          double footprint = depth * inv_f / ss; // ground meters per subpixel
          double cov = grid.coverage(gx, gy, footprint);
          if (cov > 0.0) {
            float w = float(cov), lw = 0.95f;
            albedo = {albedo.r + (lw - albedo.r) * w, albedo.g + (lw - albedo.g) * w,
                      albedo.b + (lw - albedo.b) * w};
          }
          out = {albedo.r * ground_light, albedo.g * ground_light,
                 albedo.b * ground_light};
          shaded = true;
        }
      }

      if (!shaded && stadium) {
        Vec3 dir_cam{(u - c.intrinsics.principal_point.x) * inv_f,
                     (v - c.intrinsics.principal_point.y) * inv_f, 1.0};
        Vec3 dir = Rt * dir_cam;
        double along = 0, height = 0;
        Vec3 normal;
        double thit = detail::StadiumWalls::hit(c.pose.position, dir, &along,
                                                &height, &normal);
        if (thit > 0.0) {
          Rgb albedo = detail::stand_albedo(tex_seed, s.crowd_enabled, along, height);
          float lf = detail::light_factor(s.light, normal);
          out = {albedo.r * lf, albedo.g * lf, albedo.b * lf};
        } else {
          double elev = dir.z / (std::abs(dir.x) + std::abs(dir.y) + std::abs(dir.z));
          Rgb sky = detail::sky_color(elev * 2.0);
          float lf = float(std::min(1.0, 0.35 + 0.65 * (s.light.ambient +
                                                        0.25 * s.light.directional)));
          out = {sky.r * lf, sky.g * lf, sky.b * lf};
        }
        shaded = true;
      }

      if (!shaded) {
        if (bg_img && bg_img->width > 0) {
          int bx = std::clamp(int(u / W * bg_img->width), 0, bg_img->width - 1);
          int by = std::clamp(int(v / H * bg_img->height), 0, bg_img->height - 1);
          out = {bg_img->at(bx, by, 0), bg_img->at(bx, by, 1), bg_img->at(bx, by, 2)};
        } else {
          out = bg_solid;
        }
      }
      hi.set_rgb(px, py, out.r, out.g, out.b);
    }
  }

  // players on top, far to near; billboards face the camera
  const float player_light =
      detail::light_factor(s.light, Vec3{-R.m[6], -R.m[7], -R.m[8]});
  for (const auto &cap : capsules) {
    int x0 = std::max(0, int(std::floor(std::min(cap.a.x, cap.b.x) - cap.radius)));
    int x1 = std::min(sw - 1, int(std::ceil(std::max(cap.a.x, cap.b.x) + cap.radius)));
    int y0 = std::max(0, int(std::floor(std::min(cap.a.y, cap.b.y) - cap.radius)));
    int y1 = std::min(sh - 1, int(std::ceil(std::max(cap.a.y, cap.b.y) + cap.radius)));
    for (int py = y0; py <= y1; ++py)
      for (int px = x0; px <= x1; ++px) {
        Vec2 p{px + 0.5, py + 0.5};
        if (dist_point_segment(p, cap.a, cap.b) <= cap.radius)
          hi.set_rgb(px, py, cap.color.r * player_light, cap.color.g * player_light,
                     cap.color.b * player_light);
      }
  }

  // supersample box filter
  ImageBuffer img(W, H);
  const float inv_area = 1.0f / float(ss * ss);
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x)
      for (int ch = 0; ch < 3; ++ch) {
        float acc = 0;
        for (int sy = 0; sy < ss; ++sy)
          for (int sx = 0; sx < ss; ++sx) acc += hi.at(x * ss + sx, y * ss + sy, ch);
        img.at(x, y, ch) = acc * inv_area;
      }
  img.clamp01();

  SceneSample sample;
  sample.image = std::move(img);
  sample.annotation = annotate(t, c, s);
  return sample;
}

// White where player billboards cover pixels, black elsewhere.
inline ImageBuffer render_players_only_mask(const PitchTemplate &t,
                                            const CameraModel &c,
                                            const SceneConfig &s) {
  detail::validate_scene(t, s);
  const int ss = s.supersample;
  const int W = c.intrinsics.width, H = c.intrinsics.height;
  std::vector<detail::PlayerCapsule> capsules;
  for (const auto &p : s.players) {
    auto cap = detail::make_capsule(c, p, ss);
    if (cap.valid) capsules.push_back(cap);
  }
  const int sw = W * ss, sh = H * ss;
  std::vector<uint8_t> hi(size_t(sw) * size_t(sh), 0);
  for (const auto &cap : capsules) {
    int x0 = std::max(0, int(std::floor(std::min(cap.a.x, cap.b.x) - cap.radius)));
    int x1 = std::min(sw - 1, int(std::ceil(std::max(cap.a.x, cap.b.x) + cap.radius)));
    int y0 = std::max(0, int(std::floor(std::min(cap.a.y, cap.b.y) - cap.radius)));
    int y1 = std::min(sh - 1, int(std::ceil(std::max(cap.a.y, cap.b.y) + cap.radius)));
    for (int py = y0; py <= y1; ++py)
      for (int px = x0; px <= x1; ++px)
        if (dist_point_segment({px + 0.5, py + 0.5}, cap.a, cap.b) <= cap.radius)
          hi[size_t(py) * size_t(sw) + size_t(px)] = 1;
  }
  ImageBuffer img(W, H);
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x) {
      int acc = 0;
      for (int sy = 0; sy < ss; ++sy)
        for (int sx = 0; sx < ss; ++sx)
          acc += hi[size_t(y * ss + sy) * size_t(sw) + size_t(x * ss + sx)];
      float v = acc > 0 ? 1.0f : 0.0f;
      img.set_rgb(x, y, v, v, v);
    }
  return img;
}

inline AnnotationRecord annotate(const PitchTemplate &t, const CameraModel &c,
                                 const SceneConfig &s) {
  AnnotationRecord a;
  a.camera = c;
  a.homography_gt = ground_homography(c);
  a.keypoints_px.reserve(t.keypoints.size());
  a.keypoints_norm.reserve(t.keypoints.size() * 2);
  a.visibility.reserve(t.keypoints.size());
  const double W = c.intrinsics.width, H = c.intrinsics.height;
  for (const auto &kp : t.keypoints) {
    Vec3 q = a.homography_gt.h * Vec3{kp.x, kp.y, 1.0};
    // keep behind-camera / near-horizon targets finite
    double w = q.z;
    const double min_w = 1e-9;
    if (std::abs(w) < min_w) w = w < 0 ? -min_w : min_w;
    ImagePoint p{q.x / w, q.y / w};
    a.keypoints_px.push_back(p);
    a.keypoints_norm.push_back(p.u / W);
    a.keypoints_norm.push_back(p.v / H);
    a.visibility.push_back(visible(c, kp));
  }
  for (const auto &pl : s.players) {
    Projection foot = project(c, pl.position);
    if (!foot.in_front) continue;
    a.players_gt.push_back({pl.position, foot.point});
  }
  return a;
}

} // namespace pitchforge
