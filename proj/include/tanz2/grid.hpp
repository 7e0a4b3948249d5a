#pragma once

#include "tanz2/complex.hpp"

#include <cstdint>
#include <vector>

namespace tanz2 {

inline constexpr int class_origin = 0;
inline constexpr int class_escape = 254;
inline constexpr int class_undetermined = 255;

struct Cell {
  std::int32_t class_id = class_undetermined;
  std::int32_t period = 0;
  std::int32_t steps = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct GridSpec {
  Complex<double> center;
  double width = 6;
  double height = 6;
  int cols = 512;
  int rows = 512;

  void validate() const;
  // pixel centres; row 0 is the top (largest imaginary part)
  double x_of(int col) const { return center.re + (2.0 * col + 1 - cols) * (width / (2.0 * cols)); }
  double y_of(int row) const { return center.im - (2.0 * row + 1 - rows) * (height / (2.0 * rows)); }
  Complex<double> at(int col, int row) const { return {x_of(col), y_of(row)}; }
  // pixel containing z, clamped to the raster
  std::pair<int, int> pixel_of(Complex<double> z) const;

  static GridSpec from_corners(double x0, double y0, double x1, double y1, int cols, int rows);
};

struct ClassifiedGrid {
  GridSpec spec;
  std::vector<Cell> cells;

  const Cell& at(int col, int row) const { return cells[static_cast<size_t>(row) * spec.cols + col]; }
  Cell& at(int col, int row) { return cells[static_cast<size_t>(row) * spec.cols + col]; }
  friend bool operator==(const ClassifiedGrid& a, const ClassifiedGrid& b) {
    return a.spec.center == b.spec.center && a.spec.width == b.spec.width && a.spec.height == b.spec.height &&
           a.spec.cols == b.spec.cols && a.spec.rows == b.spec.rows && a.cells == b.cells;
  }
};

}  // namespace tanz2
