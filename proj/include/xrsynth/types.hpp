/*
 * Copyright 2026 The xrsynth authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xrsynth {

inline constexpr std::int16_t kHuMin = -1024;
inline constexpr std::int16_t kHuMax = 3071;
inline constexpr std::int16_t kHuAir = -1000;

/// Error categories. The CLI maps these onto exit codes: usage/input
/// problems exit 2, data-integrity problems exit 3.
enum class Errc {
  missing_file,
  malformed,
  size_mismatch,
  bad_magic,
  truncated,
  out_of_bounds,
  invalid_rating,
  dim_mismatch,
  degenerate_range,
  empty_mask,
  zero_variance,
  invalid_argument,
  degenerate_labels,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

/// Interpretation of GrayImage pixel values.
///   raw_drr      exponentiated projection output, >= 1 for nonnegative maps
///   unit         values in [0,1]
///   zero_mean    affinely normalized values, unbounded
///   raw_internal intermediate linear quantities (attenuation maps)
enum class RangeTag : std::uint8_t {
  raw_drr = 0,
  unit = 1,
  zero_mean = 2,
  raw_internal = 3,
};

const char* range_tag_name(RangeTag t);

/// 2D scalar image, row-major with x fastest. For projections width = nx
/// and height = nz.
struct GrayImage {
  int width = 0;
  int height = 0;
  RangeTag tag = RangeTag::unit;
  std::vector<float> pixels;

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width + x;
  }
  float at(int x, int y) const { return pixels[index(x, y)]; }
  float& at(int x, int y) { return pixels[index(x, y)]; }
  std::size_t size() const { return pixels.size(); }
};

GrayImage make_image(int width, int height, RangeTag tag, float fill = 0.0f);

/// CT volume of Hounsfield units, row-major with x fastest:
/// index = x + nx*(y + ny*z).
/// Axes: x left-right, y posterior-anterior (the projection axis),
/// z inferior-superior (axial slices are fixed-z planes).
struct CtVolume {
  int nx = 0;
  int ny = 0;
  int nz = 0;
  std::array<double, 3> spacing_mm{1.0, 1.0, 1.0};
  std::vector<std::int16_t> voxels;

  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(z) * ny + y) * nx + x;
  }
  std::int16_t at(int x, int y, int z) const { return voxels[index(x, y, z)]; }
  std::int16_t& at(int x, int y, int z) { return voxels[index(x, y, z)]; }
  std::size_t size() const { return voxels.size(); }
};

CtVolume make_volume(int nx, int ny, int nz,
                     std::array<double, 3> spacing_mm = {1.0, 1.0, 1.0},
                     std::int16_t fill = kHuAir);

/// Binary occupancy grid sharing dims and axes with its parent volume.
struct Mask3D {
  int nx = 0;
  int ny = 0;
  int nz = 0;
  std::vector<std::uint8_t> bits;

  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(z) * ny + y) * nx + x;
  }
  std::uint8_t at(int x, int y, int z) const { return bits[index(x, y, z)]; }
  std::uint8_t& at(int x, int y, int z) { return bits[index(x, y, z)]; }
  std::size_t size() const { return bits.size(); }
};

Mask3D make_mask3d(int nx, int ny, int nz, std::uint8_t fill = 0);

/// Binary 2D mask with dims (nx, nz) in projected space.
struct Mask2D {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width + x;
  }
  std::uint8_t at(int x, int y) const { return bits[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return bits[index(x, y)]; }
  std::size_t size() const { return bits.size(); }
};

Mask2D make_mask2d(int width, int height, std::uint8_t fill = 0);

struct NoduleRating {
  int texture = 0;   // 1-5
  int subtlety = 0;  // 1-5
};

struct NoduleAnnotation {
  std::string id;
  std::vector<std::array<int, 3>> voxels;  // (x, y, z) inside parent volume
  std::vector<NoduleRating> ratings;       // one record per radiologist
};

struct ManifestRecord {
  std::string case_id;
  std::string source_path;
  std::string target_path;
  std::string lung_mask_path;
  std::string nodule_mask_path;
  int nodule_count = 0;
  std::string normalization = "unit";
  std::string error;  // empty on success
};

struct DatasetManifest {
  std::vector<ManifestRecord> records;
};

// Invariant checks. Throw Error on violation.
void check_volume(const CtVolume& vol);
void check_image(const GrayImage& img);
void check_mask_dims(const CtVolume& vol, const Mask3D& mask);
void check_same_dims(const GrayImage& a, const GrayImage& b);
void check_same_dims(const GrayImage& a, const Mask2D& b);

}  // namespace xrsynth
