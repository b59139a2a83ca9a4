#include "offside/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

namespace offside {

namespace {

std::string lower_ext(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

float from_byte(std::uint8_t v) { return static_cast<float>(v) / 255.0f; }

std::uint8_t to_byte(float v) {
  const float scaled = std::round(std::clamp(v, 0.0f, 1.0f) * 255.0f);
  return static_cast<std::uint8_t>(scaled);
}

Raster load_png(const std::string& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    raise(Errc::IoError, "cannot read PNG " + path + ": " + image.message);
  }
  const bool gray = (image.format & PNG_FORMAT_FLAG_COLOR) == 0;
  image.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  const int channels = gray ? 1 : 3;
  std::vector<std::uint8_t> bytes(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, bytes.data(), 0, nullptr)) {
    png_image_free(&image);
    raise(Errc::IoError, "cannot decode PNG " + path + ": " + image.message);
  }
  Raster out = Raster::make(static_cast<int>(image.width), static_cast<int>(image.height), channels);
  for (std::size_t i = 0; i < bytes.size(); ++i) out.data[i] = from_byte(bytes[i]);
  return out;
}

void save_png(const std::string& path, const Raster& img) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  image.format = img.channels == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  std::vector<std::uint8_t> bytes(img.data.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] = to_byte(img.data[i]);
  if (!png_image_write_to_file(&image, path.c_str(), 0, bytes.data(), 0, nullptr)) {
    raise(Errc::IoError, "cannot write PNG " + path + ": " + image.message);
  }
}

Raster load_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::IoError, "cannot open " + path);
  std::string magic;
  in >> magic;
  if (magic != "P6") raise(Errc::IoError, path + ": not a binary PPM (P6)");
  // Header tokens may be separated by whitespace and '#' comment lines.
  auto next_int = [&in, &path]() {
    int c = in.get();
    while (c != EOF && (std::isspace(c) || c == '#')) {
      if (c == '#') {
        while (c != EOF && c != '\n') c = in.get();
      }
      c = in.get();
    }
    long value = -1;
    while (c != EOF && std::isdigit(c)) {
      if (value < 0) value = 0;
      value = value * 10 + (c - '0');
      c = in.get();
    }
    if (value < 0) raise(Errc::IoError, path + ": truncated PPM header");
    return value;
  };
  const long w = next_int();
  const long h = next_int();
  const long maxval = next_int();
  if (w <= 0 || h <= 0) raise(Errc::IoError, path + ": bad PPM dimensions");
  if (maxval != 255) raise(Errc::IoError, path + ": only maxval 255 PPM supported");
  // next_int consumed the single whitespace byte after maxval already.
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(w) * h * 3);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
    raise(Errc::IoError, path + ": truncated PPM pixel data");
  }
  Raster out = Raster::make(static_cast<int>(w), static_cast<int>(h), 3);
  for (std::size_t i = 0; i < bytes.size(); ++i) out.data[i] = from_byte(bytes[i]);
  return out;
}

void save_ppm(const std::string& path, const Raster& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot open " + path + " for writing");
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  std::vector<std::uint8_t> bytes;
  bytes.reserve(img.pixel_count() * 3);
  if (img.channels == 3) {
    for (float v : img.data) bytes.push_back(to_byte(v));
  } else {
    for (float v : img.data) {
      const std::uint8_t b = to_byte(v);
      bytes.push_back(b);
      bytes.push_back(b);
      bytes.push_back(b);
    }
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) raise(Errc::IoError, "write failed for " + path);
}

}  // namespace

Raster load_image(const std::string& path) {
  const std::string ext = lower_ext(path);
  if (ext == "png") return load_png(path);
  if (ext == "ppm") return load_ppm(path);
  raise(Errc::IoError, path + ": unsupported image extension (use .png or .ppm)");
}

void save_image(const std::string& path, const Raster& img) {
  if (img.channels != 1 && img.channels != 3) {
    raise(Errc::ChannelMismatch, "save_image supports 1 or 3 channels");
  }
  const std::string ext = lower_ext(path);
  if (ext == "png") return save_png(path, img);
  if (ext == "ppm") return save_ppm(path, img);
  raise(Errc::IoError, path + ": unsupported image extension (use .png or .ppm)");
}

}  // namespace offside
