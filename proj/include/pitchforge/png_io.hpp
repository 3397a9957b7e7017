#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <zlib.h>

#include "pitchforge/error.hpp"
#include "pitchforge/image.hpp"

namespace pitchforge {
namespace png {

namespace detail {

inline void put_u32(std::vector<uint8_t> &out, uint32_t v) {
  out.push_back(uint8_t(v >> 24));
  out.push_back(uint8_t(v >> 16));
  out.push_back(uint8_t(v >> 8));
  out.push_back(uint8_t(v));
}

inline uint32_t get_u32(const uint8_t *p) {
  return (uint32_t(p[0]) << 24) | (uint32_t(p[1]) << 16) | (uint32_t(p[2]) << 8) |
         uint32_t(p[3]);
}

inline void write_chunk(std::vector<uint8_t> &out, const char type[4],
                        const uint8_t *data, size_t len) {
  put_u32(out, uint32_t(len));
  size_t start = out.size();
  out.insert(out.end(), type, type + 4);
  if (len) out.insert(out.end(), data, data + len);
  uint32_t crc = uint32_t(::crc32(0, out.data() + start, uInt(4 + len)));
  put_u32(out, crc);
}

} // namespace detail

// Encodes 8-bit RGB pixels as a PNG byte stream (color type 2, filter 0 rows).
inline std::vector<uint8_t> encode_rgb8(const std::vector<uint8_t> &rgb, int width,
                                        int height) {
  if (rgb.size() != size_t(width) * size_t(height) * 3)
    throw DomainError("png encode: pixel count does not match dimensions");

  std::vector<uint8_t> raw;
  raw.reserve(size_t(height) * (size_t(width) * 3 + 1));
  for (int y = 0; y < height; ++y) {
    raw.push_back(0); // filter type: none
    const uint8_t *row = rgb.data() + size_t(y) * size_t(width) * 3;
    raw.insert(raw.end(), row, row + size_t(width) * 3);
  }

  uLongf bound = ::compressBound(uLong(raw.size()));
  std::vector<uint8_t> compressed(bound);
  if (::compress2(compressed.data(), &bound, raw.data(), uLong(raw.size()), 6) != Z_OK)
    throw IoError("png encode: deflate failed");
  compressed.resize(bound);

  std::vector<uint8_t> out{0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  uint8_t ihdr[13];
  ihdr[0] = uint8_t(uint32_t(width) >> 24);
  ihdr[1] = uint8_t(uint32_t(width) >> 16);
  ihdr[2] = uint8_t(uint32_t(width) >> 8);
  ihdr[3] = uint8_t(width);
  ihdr[4] = uint8_t(uint32_t(height) >> 24);
  ihdr[5] = uint8_t(uint32_t(height) >> 16);
  ihdr[6] = uint8_t(uint32_t(height) >> 8);
  ihdr[7] = uint8_t(height);
  ihdr[8] = 8;  // bit depth
  ihdr[9] = 2;  // color type: truecolor
  ihdr[10] = 0; // compression
  ihdr[11] = 0; // filter method
  ihdr[12] = 0; // no interlace
  detail::write_chunk(out, "IHDR", ihdr, sizeof ihdr);
  detail::write_chunk(out, "IDAT", compressed.data(), compressed.size());
  detail::write_chunk(out, "IEND", nullptr, 0);
  return out;
}

struct DecodedPng {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> rgb; // always 3 channels
};

// Decodes 8-bit RGB / RGBA / grayscale PNGs (no palette, no interlace) to RGB.
inline DecodedPng decode_rgb8(const std::vector<uint8_t> &file) {
  static const uint8_t magic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (file.size() < 8 || std::memcmp(file.data(), magic, 8) != 0)
    throw IntegrityError("png decode: not a PNG file");

  int width = 0, height = 0, bit_depth = 0, color_type = 0, interlace = 0;
  std::vector<uint8_t> idat;
  size_t pos = 8;
  bool seen_iend = false;
  while (pos + 12 <= file.size()) {
    uint32_t len = detail::get_u32(file.data() + pos);
    if (pos + 12 + len > file.size())
      throw IntegrityError("png decode: truncated chunk");
    const char *type = reinterpret_cast<const char *>(file.data() + pos + 4);
    const uint8_t *data = file.data() + pos + 8;
    uint32_t crc_stored = detail::get_u32(file.data() + pos + 8 + len);
    uint32_t crc_calc = uint32_t(::crc32(0, file.data() + pos + 4, uInt(4 + len)));
    if (crc_stored != crc_calc) throw IntegrityError("png decode: chunk CRC mismatch");
    if (std::memcmp(type, "IHDR", 4) == 0) {
      if (len != 13) throw IntegrityError("png decode: bad IHDR");
      width = int(detail::get_u32(data));
      height = int(detail::get_u32(data + 4));
      bit_depth = data[8];
      color_type = data[9];
      interlace = data[12];
    } else if (std::memcmp(type, "IDAT", 4) == 0) {
      idat.insert(idat.end(), data, data + len);
    } else if (std::memcmp(type, "IEND", 4) == 0) {
      seen_iend = true;
      break;
    }
    pos += 12 + len;
  }
  if (!seen_iend || width <= 0 || height <= 0)
    throw IntegrityError("png decode: missing IHDR/IEND");
  if (bit_depth != 8 || interlace != 0 ||
      (color_type != 2 && color_type != 6 && color_type != 0))
    throw IntegrityError("png decode: unsupported format (need 8-bit RGB/RGBA/gray)");

  int nch = color_type == 2 ? 3 : (color_type == 6 ? 4 : 1);
  size_t stride = size_t(width) * size_t(nch);
  size_t raw_size = (stride + 1) * size_t(height);
  std::vector<uint8_t> raw(raw_size);
  uLongf out_len = uLongf(raw_size);
  int zrc = ::uncompress(raw.data(), &out_len, idat.data(), uLong(idat.size()));
  if (zrc != Z_OK || out_len != raw_size)
    throw IntegrityError("png decode: inflate failed");

  // Undo per-row filters in place.
  std::vector<uint8_t> img(stride * size_t(height));
  for (int y = 0; y < height; ++y) {
    uint8_t filter = raw[size_t(y) * (stride + 1)];
    const uint8_t *src = raw.data() + size_t(y) * (stride + 1) + 1;
    uint8_t *dst = img.data() + size_t(y) * stride;
    const uint8_t *prev = y > 0 ? img.data() + size_t(y - 1) * stride : nullptr;
    for (size_t i = 0; i < stride; ++i) {
      int a = i >= size_t(nch) ? dst[i - size_t(nch)] : 0;
      int b = prev ? prev[i] : 0;
      int c = (prev && i >= size_t(nch)) ? prev[i - size_t(nch)] : 0;
      int x = src[i];
      switch (filter) {
        case 0: dst[i] = uint8_t(x); break;
        case 1: dst[i] = uint8_t(x + a); break;
        case 2: dst[i] = uint8_t(x + b); break;
        case 3: dst[i] = uint8_t(x + (a + b) / 2); break;
        case 4: {
          int p = a + b - c;
          int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
          int pred = (pa <= pb && pa <= pc) ? a : (pb <= pc ? b : c);
          dst[i] = uint8_t(x + pred);
          break;
        }
        default: throw IntegrityError("png decode: unknown filter type");
      }
    }
  }

  DecodedPng out;
  out.width = width;
  out.height = height;
  out.rgb.resize(size_t(width) * size_t(height) * 3);
  for (size_t p = 0; p < size_t(width) * size_t(height); ++p) {
    if (nch == 3) {
      out.rgb[p * 3 + 0] = img[p * 3 + 0];
      out.rgb[p * 3 + 1] = img[p * 3 + 1];
      out.rgb[p * 3 + 2] = img[p * 3 + 2];
    } else if (nch == 4) {
      out.rgb[p * 3 + 0] = img[p * 4 + 0];
      out.rgb[p * 3 + 1] = img[p * 4 + 1];
      out.rgb[p * 3 + 2] = img[p * 4 + 2];
    } else {
      out.rgb[p * 3 + 0] = out.rgb[p * 3 + 1] = out.rgb[p * 3 + 2] = img[p];
    }
  }
  return out;
}

inline void write_file(const std::filesystem::path &path,
                       const std::vector<uint8_t> &bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f.write(reinterpret_cast<const char *>(bytes.data()),
          std::streamsize(bytes.size()));
  if (!f) throw IoError("write failed: " + path.string());
}

inline std::vector<uint8_t> read_file(const std::filesystem::path &path) {
  std::ifstream f(path, std::ios::binary | std::ios::ate);
  if (!f) throw IoError("cannot open: " + path.string());
  auto size = f.tellg();
  f.seekg(0);
  std::vector<uint8_t> bytes(static_cast<size_t>(size));
  f.read(reinterpret_cast<char *>(bytes.data()), size);
  if (!f) throw IoError("read failed: " + path.string());
  return bytes;
}

inline void save_image(const std::filesystem::path &path, const ImageBuffer &img) {
  write_file(path, encode_rgb8(to_rgb8(img), img.width, img.height));
}

inline ImageBuffer load_image(const std::filesystem::path &path) {
  DecodedPng d = decode_rgb8(read_file(path));
  return from_rgb8(d.rgb, d.width, d.height);
}

} // namespace png
} // namespace pitchforge
