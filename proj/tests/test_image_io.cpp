#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "pitchforge/image.hpp"
#include "pitchforge/png_io.hpp"
#include "pitchforge/rng.hpp"
#include "pitchforge/sha256.hpp"

using namespace pitchforge;

TEST_CASE("sha256 matches known vectors") {
  CHECK(sha256_hex("", 0) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  const char *abc = "abc";
  CHECK(sha256_hex(abc, 3) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  // exercise the two-block padding path
  std::string s(56, 'a');
  CHECK(sha256_hex(s.data(), s.size()) ==
        "b35439a4ac6f0948b6d6f9e3c6af0f5f590ce20f1bde7090ef7970686ec6738a");
}

TEST_CASE("png round-trips random pixels exactly") {
  RandomStream rng(99);
  ImageBuffer img(37, 23);
  for (auto &v : img.pixels) v = float(rng.uniform());
  auto rgb = to_rgb8(img);
  auto file = png::encode_rgb8(rgb, img.width, img.height);
  auto decoded = png::decode_rgb8(file);
  REQUIRE(decoded.width == img.width);
  REQUIRE(decoded.height == img.height);
  CHECK(decoded.rgb == rgb);
}

TEST_CASE("png decode rejects corrupted bytes") {
  ImageBuffer img(16, 16, 0.5f);
  auto file = png::encode_rgb8(to_rgb8(img), 16, 16);
  SECTION("flipped payload byte breaks the chunk CRC") {
    file[40] ^= 0xff;
    CHECK_THROWS_AS(png::decode_rgb8(file), IntegrityError);
  }
  SECTION("bad magic") {
    file[0] = 0;
    CHECK_THROWS_AS(png::decode_rgb8(file), IntegrityError);
  }
  SECTION("truncated file") {
    file.resize(file.size() / 2);
    CHECK_THROWS_AS(png::decode_rgb8(file), IntegrityError);
  }
}

TEST_CASE("png file save/load round-trip") {
  auto dir = std::filesystem::temp_directory_path() / "pitchforge_test_png";
  std::filesystem::create_directories(dir);
  ImageBuffer img(64, 32);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      img.set_rgb(x, y, float(x) / 64.0f, float(y) / 32.0f, 0.25f);
  auto path = dir / "t.png";
  png::save_image(path, img);
  ImageBuffer back = png::load_image(path);
  REQUIRE(back.width == img.width);
  REQUIRE(back.height == img.height);
  CHECK(to_rgb8(back) == to_rgb8(img));
  std::filesystem::remove_all(dir);
}

TEST_CASE("rgb8 quantization is stable under re-quantization") {
  RandomStream rng(3);
  ImageBuffer img(8, 8);
  for (auto &v : img.pixels) v = float(rng.uniform());
  auto once = to_rgb8(img);
  auto again = to_rgb8(from_rgb8(once, 8, 8));
  CHECK(once == again);
}
