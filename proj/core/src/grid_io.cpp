// Copyright 2026 The qsonus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsonus/grid_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qsonus/csv.hpp"
#include "qsonus/errors.hpp"

namespace qsonus {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::optional<ImageFormat> parse_image_format(std::string_view name) {
  if (name == "ppm") return ImageFormat::Ppm;
  if (name == "pgm") return ImageFormat::Pgm;
  if (name == "csv") return ImageFormat::Csv;
  return std::nullopt;
}

namespace {

unsigned char level(double value, double max_value) {
  if (!(max_value > 0.0)) return 0;
  const double t = std::clamp(value / max_value, 0.0, 1.0);
  return static_cast<unsigned char>(std::lround(255.0 * t));
}

std::filesystem::path with_suffix(const std::filesystem::path& base, const char* suffix) {
  return std::filesystem::path(base.string() + suffix);
}

}  // namespace

Rgb palette_color(double value, double max_value) {
  const unsigned char r = level(value, max_value);
  return {r, 0, static_cast<unsigned char>(255 - r)};
}

void write_grid_csv(const CoarseGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << "row";
  for (std::size_t c = 0; c < grid.cols; ++c) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < grid.rows; ++r) {
    out << r;
    for (std::size_t c = 0; c < grid.cols; ++c) out << ',' << format_double(grid.at(r, c));
    out << '\n';
  }
}

CoarseGrid read_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw FormatError(path.string() + ": missing header row");
  CoarseGrid grid;
  grid.cols = static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cell;
    std::getline(fields, cell, ',');  // row label
    std::size_t n = 0;
    while (std::getline(fields, cell, ',')) {
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (res.ec != std::errc{}) throw FormatError(path.string() + ": bad number '" + cell + "'");
      grid.values.push_back(v);
      ++n;
    }
    if (n != grid.cols) throw FormatError(path.string() + ": ragged row");
    ++grid.rows;
  }
  return grid;
}

namespace {

struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Rgb> pixels;

  Rgb& at(std::size_t x, std::size_t y) { return pixels[y * width + x]; }
};

void write_image(const Image& image, const std::filesystem::path& path, bool color) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << (color ? "P6" : "P5") << '\n' << image.width << ' ' << image.height << "\n255\n";
  for (const Rgb& px : image.pixels) {
    // gray level of the palette is its red channel
    if (color) {
      out.put(static_cast<char>(px.r)).put(static_cast<char>(px.g)).put(static_cast<char>(px.b));
    } else {
      out.put(static_cast<char>(px.r));
    }
  }
}

void check_nonempty(const CoarseGrid& grid) {
  if (grid.rows == 0 || grid.cols == 0 || grid.values.size() != grid.rows * grid.cols) {
    throw ArgumentError("cannot render an empty grid");
  }
}

void paint(Image& image, const CoarseGrid& grid, std::size_t x0, std::size_t y0,
           std::size_t cell_pixels, bool color) {
  const double max_value = *std::max_element(grid.values.begin(), grid.values.end());
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) {
      Rgb px = palette_color(grid.at(r, c), max_value);
      if (!color) px = {px.r, px.r, px.r};
      for (std::size_t dy = 0; dy < cell_pixels; ++dy) {
        for (std::size_t dx = 0; dx < cell_pixels; ++dx) {
          image.at(x0 + c * cell_pixels + dx, y0 + r * cell_pixels + dy) = px;
        }
      }
    }
  }
}

}  // namespace

void render_grid(const CoarseGrid& grid, const std::filesystem::path& base, ImageFormat format) {
  check_nonempty(grid);
  write_grid_csv(grid, with_suffix(base, ".csv"));
  if (format == ImageFormat::Csv) return;

  const bool color = format == ImageFormat::Ppm;
  Image image{grid.cols, grid.rows, std::vector<Rgb>(grid.cols * grid.rows)};
  paint(image, grid, 0, 0, 1, color);
  write_image(image, with_suffix(base, color ? ".ppm" : ".pgm"), color);
}

void render_panels(std::span<const CoarseGrid> panels, std::size_t per_row,
                   std::size_t cell_pixels, const std::filesystem::path& base,
                   ImageFormat format) {
  if (panels.empty() || per_row == 0 || cell_pixels == 0) {
    throw ArgumentError("panel layout needs at least one panel, column and pixel");
  }
  for (const auto& p : panels) {
    check_nonempty(p);
    if (p.rows != panels[0].rows || p.cols != panels[0].cols) {
      throw ArgumentError("panels must share one shape");
    }
  }
  if (format == ImageFormat::Csv) return;

  constexpr std::size_t gap = 2;
  const std::size_t pw = panels[0].cols * cell_pixels;
  const std::size_t ph = panels[0].rows * cell_pixels;
  const std::size_t across = std::min(per_row, panels.size());
  const std::size_t down = (panels.size() + per_row - 1) / per_row;
  Image image{across * pw + (across - 1) * gap, down * ph + (down - 1) * gap, {}};
  image.pixels.assign(image.width * image.height, Rgb{255, 255, 255});
  const bool color = format == ImageFormat::Ppm;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    paint(image, panels[i], (i % per_row) * (pw + gap), (i / per_row) * (ph + gap), cell_pixels,
          color);
  }
  write_image(image, with_suffix(base, color ? ".ppm" : ".pgm"), color);
}

}  // namespace qsonus
