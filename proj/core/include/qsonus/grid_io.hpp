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

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string_view>

#include "qsonus/measurement.hpp"

namespace qsonus {

enum class ImageFormat { Ppm, Pgm, Csv };

std::optional<ImageFormat> parse_image_format(std::string_view name);

/// Blue (zero) to red (grid maximum) linear palette.
struct Rgb {
  unsigned char r, g, b;
};
Rgb palette_color(double value, double max_value);

/// Writes the grid as binary PPM (P6) or PGM (P5) next to a CSV of the raw
/// values. `base` gets ".ppm"/".pgm" and ".csv" appended. With
/// ImageFormat::Csv only the CSV is written. Row 0 is the top image row.
/// Throws ArgumentError for an empty grid.
void render_grid(const CoarseGrid& grid, const std::filesystem::path& base, ImageFormat format);

/// Lays equally shaped grids out left to right, `per_row` per image row,
/// each cell drawn as a cell_pixels square and each panel scaled by its own
/// maximum. Writes base + ".ppm"/".pgm"; nothing for ImageFormat::Csv.
void render_panels(std::span<const CoarseGrid> panels, std::size_t per_row,
                   std::size_t cell_pixels, const std::filesystem::path& base,
                   ImageFormat format);

void write_grid_csv(const CoarseGrid& grid, const std::filesystem::path& path);

/// Values only; row/col qubit labels are not stored in the CSV.
CoarseGrid read_grid_csv(const std::filesystem::path& path);

}  // namespace qsonus
