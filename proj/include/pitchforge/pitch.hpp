#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pitchforge/error.hpp"
#include "pitchforge/geom.hpp"

namespace pitchforge {

// Point on the pitch plane (z = 0). x runs along the pitch length, positive
// toward the right goal; y along the width, positive toward the top touchline.
struct PitchPoint {
  double x = 0.0;
  double y = 0.0;
};

struct PitchArc {
  PitchPoint center;
  double radius_m = 0.0;
  double start_angle_rad = 0.0; // measured from +x, counter-clockwise
  double end_angle_rad = 0.0;   // end > start
};

constexpr int kKeypointCount = 26;

// Canonical pitch: dimensions, the 26 keypoints, 17 line segments and 3 arcs.
// Immutable after construction; safe to share across threads.
struct PitchTemplate {
  double length_m = 0.0;
  double width_m = 0.0;
  double line_width_m = 0.0;
  std::vector<PitchPoint> keypoints;
  std::vector<std::pair<PitchPoint, PitchPoint>> segments;
  std::vector<PitchArc> arcs;

  double apron_half_length() const { return length_m / 2.0 + 5.0; }
  double apron_half_width() const { return width_m / 2.0 + 5.0; }
};

// The standard 105 x 68 m pitch with IFAB marking dimensions.
//
// Keypoint order is a frozen contract (annotations serialize by index):
//   0-3  pitch corners (BL, TL, TR, BR)
//   4,5  halfway x touchline (top, bottom)
//   6    center spot
//   7    center circle top tangent
//   8,9  penalty marks (left, right)
//   10-13 left penalty area (corner points, clockwise from top goal line)
//   14-17 left goal area
//   18-21 right penalty area
//   22-25 right goal area
inline const PitchTemplate &standard_template() {
  static const PitchTemplate t = [] {
    PitchTemplate p;
    p.length_m = 105.0;
    p.width_m = 68.0;
    p.line_width_m = 0.12;

    const double hx = 52.5;        // goal line
    const double hy = 34.0;        // touchline
    const double pa_x = 36.0;      // penalty area front (52.5 - 16.5)
    const double pa_y = 20.16;     // penalty area half width
    const double ga_x = 47.0;      // goal area front (52.5 - 5.5)
    const double ga_y = 9.16;      // goal area half width
    const double spot_x = 41.5;    // penalty mark (52.5 - 11)
    const double r = 9.15;         // circle / arc radius

    p.keypoints = {
        {-hx, -hy}, {-hx, hy}, {hx, hy}, {hx, -hy},          // 0-3
        {0, hy},    {0, -hy},                                 // 4,5
        {0, 0},     {0, r},                                   // 6,7
        {-spot_x, 0}, {spot_x, 0},                            // 8,9
        {-hx, pa_y}, {-pa_x, pa_y}, {-pa_x, -pa_y}, {-hx, -pa_y}, // 10-13
        {-hx, ga_y}, {-ga_x, ga_y}, {-ga_x, -ga_y}, {-hx, -ga_y}, // 14-17
        {hx, pa_y}, {pa_x, pa_y}, {pa_x, -pa_y}, {hx, -pa_y},     // 18-21
        {hx, ga_y}, {ga_x, ga_y}, {ga_x, -ga_y}, {hx, -ga_y},     // 22-25
    };

    auto seg = [&](double x0, double y0, double x1, double y1) {
      p.segments.push_back({{x0, y0}, {x1, y1}});
    };
    seg(-hx, hy, hx, hy);      // top touchline
    seg(-hx, -hy, hx, -hy);    // bottom touchline
    seg(-hx, -hy, -hx, hy);    // left goal line
    seg(hx, -hy, hx, hy);      // right goal line
    seg(0, -hy, 0, hy);        // halfway line
    seg(-pa_x, -pa_y, -pa_x, pa_y);  // left penalty area front
    seg(-hx, pa_y, -pa_x, pa_y);     // left penalty area top side
    seg(-hx, -pa_y, -pa_x, -pa_y);   // left penalty area bottom side
    seg(-ga_x, -ga_y, -ga_x, ga_y);  // left goal area front
    seg(-hx, ga_y, -ga_x, ga_y);     // left goal area top side
    seg(-hx, -ga_y, -ga_x, -ga_y);   // left goal area bottom side
    seg(pa_x, -pa_y, pa_x, pa_y);    // right penalty area front
    seg(hx, pa_y, pa_x, pa_y);       // right penalty area top side
    seg(hx, -pa_y, pa_x, -pa_y);     // right penalty area bottom side
    seg(ga_x, -ga_y, ga_x, ga_y);    // right goal area front
    seg(hx, ga_y, ga_x, ga_y);       // right goal area top side
    seg(hx, -ga_y, ga_x, -ga_y);     // right goal area bottom side

    // Penalty arcs are the circle parts outside the penalty area front line,
    // i.e. +-acos(5.5 / 9.15) about the direction facing midfield.
    const double alpha = std::acos(5.5 / r);
    const double pi = 3.14159265358979323846;
    p.arcs.push_back({{0, 0}, r, 0.0, 2.0 * pi});                        // center circle
    p.arcs.push_back({{-spot_x, 0}, r, -alpha, alpha});                  // left penalty arc
    p.arcs.push_back({{spot_x, 0}, r, pi - alpha, pi + alpha});          // right penalty arc
    return p;
  }();
  return t;
}

inline PitchPoint keypoint_position(const PitchTemplate &t, int index) {
  if (index < 0 || index >= int(t.keypoints.size()))
    throw DomainError("keypoint index out of range: " + std::to_string(index));
  return t.keypoints[size_t(index)];
}

// Points along every segment and arc at <= spacing_m intervals, endpoints
// included. Render/test support.
inline std::vector<PitchPoint> sample_markings(const PitchTemplate &t, double spacing_m) {
  if (!(spacing_m > 0.0))
    throw DomainError("sample_markings: spacing must be positive");
  std::vector<PitchPoint> pts;
  for (const auto &[a, b] : t.segments) {
    double len = std::hypot(b.x - a.x, b.y - a.y);
    int n = std::max(1, int(std::ceil(len / spacing_m)));
    for (int i = 0; i <= n; ++i) {
      double s = double(i) / n;
      pts.push_back({a.x + (b.x - a.x) * s, a.y + (b.y - a.y) * s});
    }
  }
  for (const auto &arc : t.arcs) {
    double arc_len = arc.radius_m * (arc.end_angle_rad - arc.start_angle_rad);
    int n = std::max(1, int(std::ceil(arc_len / spacing_m)));
    for (int i = 0; i <= n; ++i) {
      double a = arc.start_angle_rad +
                 (arc.end_angle_rad - arc.start_angle_rad) * double(i) / n;
      pts.push_back({arc.center.x + arc.radius_m * std::cos(a),
                     arc.center.y + arc.radius_m * std::sin(a)});
    }
  }
  return pts;
}

} // namespace pitchforge
