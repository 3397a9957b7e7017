#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pitchforge/raster.hpp"

using namespace pitchforge;

namespace {

// Wide straight-down view covering the whole pitch in a 256 frame.
CameraModel overhead_camera() {
  CameraModel c;
  c.intrinsics.width = 256;
  c.intrinsics.height = 256;
  c.intrinsics.principal_point = {128, 128};
  c.pose.position = {0, 0, 60};
  c.pose.pitch_down = 3.14159265358979323846 / 2.0;
  // 115 m of ground must fit in 256 px: f * 57.5 / 60 <= 128
  c.intrinsics.focal_px = 120.0;
  return c;
}

} // namespace

TEST_CASE("flat render: marking pixels are brighter than plain grass") {
  const auto &t = standard_template();
  CameraModel c = overhead_camera();
  SceneConfig s;
  SceneSample sample = render(t, c, s, RandomStream(1));

  // midpoint of the halfway line projects onto a marking
  Projection on_line = project(c, {0.0, 10.0});
  // a point well inside the left half, far from all markings
  Projection on_grass = project(c, {-20.0, 10.0});
  REQUIRE(on_line.in_front);
  REQUIRE(on_grass.in_front);
  float line_luma = sample.image.luma(int(on_line.point.u), int(on_line.point.v));
  float grass_luma = sample.image.luma(int(on_grass.point.u), int(on_grass.point.v));
  CHECK(line_luma > grass_luma);
}

TEST_CASE("render is bit-deterministic") {
  const auto &t = standard_template();
  CameraModel c = overhead_camera();
  SceneConfig s;
  s.variant = SceneVariant::stadium;
  s.crowd_enabled = true;
  s.players.push_back({{5, 5}, {0.8f, 0.1f, 0.1f}, 1.8});
  SceneSample a = render(t, c, s, RandomStream(7));
  SceneSample b = render(t, c, s, RandomStream(7));
  CHECK(a.image.pixels == b.image.pixels);
}

TEST_CASE("different texture streams change pixels but not annotations") {
  const auto &t = standard_template();
  CameraModel c = overhead_camera();
  SceneConfig s;
  SceneSample a = render(t, c, s, RandomStream(1));
  SceneSample b = render(t, c, s, RandomStream(2));
  CHECK(a.image.pixels != b.image.pixels);
  REQUIRE(a.annotation.keypoints_px.size() == b.annotation.keypoints_px.size());
  for (size_t i = 0; i < a.annotation.keypoints_px.size(); ++i) {
    CHECK(a.annotation.keypoints_px[i].u == b.annotation.keypoints_px[i].u);
    CHECK(a.annotation.keypoints_px[i].v == b.annotation.keypoints_px[i].v);
  }
}

TEST_CASE("lighting intensity changes pixels, never labels") {
  const auto &t = standard_template();
  CameraModel c = overhead_camera();
  SceneConfig s0, s1;
  s0.variant = s1.variant = SceneVariant::lighting;
  s0.light.ambient = s1.light.ambient = 0.4;
  s0.light.directional = 0.0;
  s1.light.directional = 1.0;
  SceneSample a = render(t, c, s0, RandomStream(3));
  SceneSample b = render(t, c, s1, RandomStream(3));
  CHECK(a.image.pixels != b.image.pixels);
  for (size_t i = 0; i < a.annotation.keypoints_norm.size(); ++i)
    CHECK(a.annotation.keypoints_norm[i] == b.annotation.keypoints_norm[i]);
}

TEST_CASE("annotations match projections exactly for every variant") {
  const auto &t = standard_template();
  RandomStream rng(23);
  CameraRange range;
  for (SceneVariant v : {SceneVariant::flat, SceneVariant::background,
                         SceneVariant::lighting, SceneVariant::players,
                         SceneVariant::stadium, SceneVariant::artifacts}) {
    CameraModel c = sample_camera(rng, range);
    SceneConfig s;
    s.variant = v;
    AnnotationRecord a = annotate(t, c, s);
    REQUIRE(a.keypoints_px.size() == 26);
    REQUIRE(a.keypoints_norm.size() == 52);
    for (int i = 0; i < 26; ++i) {
      Projection p = project(c, t.keypoints[size_t(i)]);
      if (!p.in_front) continue;
      CHECK(std::abs(a.keypoints_px[size_t(i)].u - p.point.u) < 1e-6);
      CHECK(std::abs(a.keypoints_px[size_t(i)].v - p.point.v) < 1e-6);
      CHECK(a.keypoints_norm[size_t(i) * 2] ==
            Catch::Approx(p.point.u / 256.0).margin(1e-9));
      CHECK(a.visibility[size_t(i)] == visible(c, t.keypoints[size_t(i)]));
    }
  }
}

TEST_CASE("player mask: empty players give an all-black mask") {
  const auto &t = standard_template();
  CameraModel c = overhead_camera();
  SceneConfig s;
  ImageBuffer mask = render_players_only_mask(t, c, s);
  for (float v : mask.pixels) CHECK(v == 0.0f);
}

TEST_CASE("player mask blob sits on the center spot projection") {
  const auto &t = standard_template();
  CameraModel c = overhead_camera();
  SceneConfig s;
  s.variant = SceneVariant::players;
  s.players.push_back({{0, 0}, {0.9f, 0.1f, 0.1f}, 1.8});
  ImageBuffer mask = render_players_only_mask(t, c, s);

  Projection center = project(c, {0, 0});
  int cu = int(center.point.u), cv = int(center.point.v);
  bool found = false;
  for (int dy = -2; dy <= 2 && !found; ++dy)
    for (int dx = -2; dx <= 2 && !found; ++dx)
      if (mask.contains(cu + dx, cv + dy) && mask.at(cu + dx, cv + dy, 0) > 0.5f)
        found = true;
  CHECK(found);

  // bottom-center of the blob matches the foot projection within 2 px
  int bottom = -1;
  double mean_u = 0;
  for (int y = mask.height - 1; y >= 0 && bottom < 0; --y) {
    double sum = 0;
    int count = 0;
    for (int x = 0; x < mask.width; ++x)
      if (mask.at(x, y, 0) > 0.5f) {
        sum += x + 0.5;
        count++;
      }
    if (count > 0) {
      bottom = y;
      mean_u = sum / count;
    }
  }
  REQUIRE(bottom >= 0);
  CHECK(std::abs(mean_u - center.point.u) <= 2.0);
  CHECK(std::abs((bottom + 0.5) - center.point.v) <= 2.0);
}

TEST_CASE("stadium variant draws stands above the apron line") {
  const auto &t = standard_template();
  CameraModel c;
  c.intrinsics.width = 256;
  c.intrinsics.height = 256;
  c.intrinsics.principal_point = {128, 128};
  c.intrinsics.focal_px = 300;
  c.pose.position = {0, -45, 12};
  c.pose.yaw = 3.14159265358979323846 / 2.0; // looking across the pitch
  c.pose.pitch_down = 0.12;
  SceneConfig flat, stad;
  stad.variant = SceneVariant::stadium;
  SceneSample a = render(t, c, flat, RandomStream(5));
  SceneSample b = render(t, c, stad, RandomStream(5));
  CHECK(a.image.pixels != b.image.pixels);
}

TEST_CASE("scene validation rejects bad configs") {
  const auto &t = standard_template();
  CameraModel c = overhead_camera();
  SceneConfig s;
  s.players.push_back({{80, 0}, {1, 0, 0}, 1.8});
  CHECK_THROWS_AS(render(t, c, s, RandomStream(1)), DomainError);
  SceneConfig dark;
  dark.light.ambient = 0.0;
  dark.light.directional = 0.0;
  CHECK_THROWS_AS(render(t, c, dark, RandomStream(1)), DomainError);
  SceneConfig ss0;
  ss0.supersample = 0;
  CHECK_THROWS_AS(render(t, c, ss0, RandomStream(1)), DomainError);
}

TEST_CASE("background image variant samples the supplied picture") {
  const auto &t = standard_template();
  CameraModel c;
  c.intrinsics.width = 256;
  c.intrinsics.height = 256;
  c.intrinsics.principal_point = {128, 128};
  c.intrinsics.focal_px = 400;
  c.pose.position = {0, -45, 10};
  c.pose.yaw = 3.14159265358979323846 / 2.0;
  c.pose.pitch_down = 0.05; // horizon well inside the frame
  auto bg = std::make_shared<ImageBuffer>(64, 64);
  for (auto &v : bg->pixels) v = 1.0f; // white backdrop
  SceneConfig s;
  s.variant = SceneVariant::background;
  s.background = std::shared_ptr<const ImageBuffer>(bg);
  SceneSample sample = render(t, c, s, RandomStream(9));
  // top rows are sky/backdrop: must be pure white
  CHECK(sample.image.at(128, 2, 0) == 1.0f);
  CHECK(sample.image.at(128, 2, 1) == 1.0f);
}
