#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "pitchforge/pitch.hpp"

using namespace pitchforge;

namespace {

bool contains_point(const std::vector<PitchPoint> &pts, double x, double y,
                    double tol = 1e-9) {
  return std::any_of(pts.begin(), pts.end(), [&](const PitchPoint &p) {
    return std::abs(p.x - x) < tol && std::abs(p.y - y) < tol;
  });
}

double dist_to_template(const PitchTemplate &t, PitchPoint p) {
  double best = 1e30;
  for (const auto &[a, b] : t.segments)
    best = std::min(best, dist_point_segment({p.x, p.y}, {a.x, a.y}, {b.x, b.y}));
  for (const auto &arc : t.arcs) {
    double ang = std::atan2(p.y - arc.center.y, p.x - arc.center.x);
    // accept any point at radius distance whose angle lies in range (mod 2pi)
    double r = std::hypot(p.x - arc.center.x, p.y - arc.center.y);
    double radial = std::abs(r - arc.radius_m);
    for (double shift : {-2 * 3.14159265358979323846, 0.0, 2 * 3.14159265358979323846}) {
      double a = ang + shift;
      if (a >= arc.start_angle_rad - 1e-12 && a <= arc.end_angle_rad + 1e-12)
        best = std::min(best, radial);
    }
  }
  return best;
}

} // namespace

TEST_CASE("standard template has the fixed counts") {
  const auto &t = standard_template();
  CHECK(t.keypoints.size() == 26);
  CHECK(t.segments.size() == 17);
  CHECK(t.arcs.size() == 3);
  CHECK(t.length_m == 105.0);
  CHECK(t.width_m == 68.0);
  CHECK(t.line_width_m == 0.12);
}

TEST_CASE("keypoint table matches the frozen index order") {
  const auto &t = standard_template();
  const double expected[26][2] = {
      {-52.5, -34}, {-52.5, 34}, {52.5, 34}, {52.5, -34}, {0, 34},    {0, -34},
      {0, 0},       {0, 9.15},   {-41.5, 0}, {41.5, 0},   {-52.5, 20.16},
      {-36, 20.16}, {-36, -20.16}, {-52.5, -20.16}, {-52.5, 9.16}, {-47, 9.16},
      {-47, -9.16}, {-52.5, -9.16}, {52.5, 20.16}, {36, 20.16}, {36, -20.16},
      {52.5, -20.16}, {52.5, 9.16}, {47, 9.16}, {47, -9.16}, {52.5, -9.16}};
  for (int i = 0; i < 26; ++i) {
    PitchPoint p = keypoint_position(t, i);
    CHECK(p.x == Catch::Approx(expected[i][0]).margin(1e-12));
    CHECK(p.y == Catch::Approx(expected[i][1]).margin(1e-12));
  }
  CHECK(keypoint_position(t, 6).x == 0.0);
  CHECK(keypoint_position(t, 6).y == 0.0);
  CHECK(keypoint_position(t, 8).x == Catch::Approx(-41.5));
  CHECK_THROWS_AS(keypoint_position(t, 26), DomainError);
  CHECK_THROWS_AS(keypoint_position(t, -1), DomainError);
}

TEST_CASE("keypoints stay within the apron bounds") {
  const auto &t = standard_template();
  for (const auto &p : t.keypoints) {
    CHECK(std::abs(p.x) <= 57.5);
    CHECK(std::abs(p.y) <= 39.0);
  }
}

TEST_CASE("keypoint set mirror symmetry") {
  const auto &t = standard_template();
  for (const auto &p : t.keypoints)
    CHECK(contains_point(t.keypoints, -p.x, p.y));
  // The y-mirror holds for every keypoint except the single circle tangent
  // point (0, 9.15): a 26-entry table cannot carry both tangents.
  for (const auto &p : t.keypoints) {
    if (std::abs(p.x) < 1e-12 && std::abs(p.y - 9.15) < 1e-12) continue;
    CHECK(contains_point(t.keypoints, p.x, -p.y));
  }
}

TEST_CASE("box-corner segment endpoints coincide with keypoints") {
  const auto &t = standard_template();
  const std::set<double> xs{36.0, 47.0, 52.5};
  const std::set<double> ys{9.16, 20.16, 34.0};
  auto near_any = [](const std::set<double> &s, double v) {
    return std::any_of(s.begin(), s.end(),
                       [&](double x) { return std::abs(std::abs(v) - x) < 1e-9; });
  };
  for (const auto &[a, b] : t.segments)
    for (const PitchPoint &e : {a, b})
      if (near_any(xs, e.x) && near_any(ys, e.y))
        CHECK(contains_point(t.keypoints, e.x, e.y));
}

TEST_CASE("penalty arc endpoints lie on the penalty area front line") {
  const auto &t = standard_template();
  for (size_t i = 1; i < 3; ++i) {
    const auto &arc = t.arcs[i];
    for (double ang : {arc.start_angle_rad, arc.end_angle_rad}) {
      double x = arc.center.x + arc.radius_m * std::cos(ang);
      CHECK(std::abs(std::abs(x) - 36.0) < 1e-9);
    }
  }
}

TEST_CASE("segment total length matches the analytic sum") {
  const auto &t = standard_template();
  double total = 0;
  for (const auto &[a, b] : t.segments) total += std::hypot(b.x - a.x, b.y - a.y);
  double expected = 2 * 105.0 + 2 * 68.0 + 68.0 + 2 * (40.32 + 2 * 16.5) +
                    2 * (18.32 + 2 * 5.5);
  CHECK(total == Catch::Approx(expected).margin(1e-9));
}

TEST_CASE("sample_markings endpoints-only at large spacing") {
  const auto &t = standard_template();
  auto pts = sample_markings(t, 1000.0);
  CHECK(pts.size() == 17 * 2 + 3 * 2);
}

TEST_CASE("sample_markings points lie on the markings") {
  const auto &t = standard_template();
  for (const auto &p : sample_markings(t, 1.0))
    CHECK(dist_to_template(t, p) < 1e-9);
}

TEST_CASE("halving the spacing at least doubles interior points per segment") {
  const auto &t = standard_template();
  auto interior_count = [](double len, double spacing) {
    return std::max(1, int(std::ceil(len / spacing))) - 1;
  };
  for (const auto &[a, b] : t.segments) {
    double len = std::hypot(b.x - a.x, b.y - a.y);
    CHECK(interior_count(len, 0.5) >= 2 * interior_count(len, 1.0));
  }
  // and the full set grows accordingly
  CHECK(sample_markings(t, 0.5).size() >= sample_markings(t, 1.0).size());
}

TEST_CASE("sample_markings rejects non-positive spacing") {
  CHECK_THROWS_AS(sample_markings(standard_template(), 0.0), DomainError);
  CHECK_THROWS_AS(sample_markings(standard_template(), -1.0), DomainError);
}
