// src/warp-math.cc

// Copyright 2026  fsaug authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "warp-math.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "common.h"

namespace fsaug {

namespace {

constexpr double kPivotTolerance = 1e-12;
constexpr double kRidgeFallback = 1e-10;

// Gaussian elimination with partial pivoting, multiple right-hand sides.
// a is n x n row-major, b is n x m row-major; b is overwritten with the
// solution.  Returns false if a pivot falls below tolerance.
bool SolveDense(std::vector<double> a, std::vector<double> &b, int n, int m) {
  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    double pivot_mag = std::abs(a[static_cast<size_t>(col) * n + col]);
    for (int r = col + 1; r < n; ++r) {
      double mag = std::abs(a[static_cast<size_t>(r) * n + col]);
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (pivot_mag < kPivotTolerance) return false;
    if (pivot_row != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(col) * n + j],
                  a[static_cast<size_t>(pivot_row) * n + j]);
      for (int j = 0; j < m; ++j)
        std::swap(b[static_cast<size_t>(col) * m + j],
                  b[static_cast<size_t>(pivot_row) * m + j]);
    }
    double inv_pivot = 1.0 / a[static_cast<size_t>(col) * n + col];
    for (int r = col + 1; r < n; ++r) {
      double factor = a[static_cast<size_t>(r) * n + col] * inv_pivot;
      if (factor == 0.0) continue;
      for (int j = col; j < n; ++j)
        a[static_cast<size_t>(r) * n + j] -=
            factor * a[static_cast<size_t>(col) * n + j];
      for (int j = 0; j < m; ++j)
        b[static_cast<size_t>(r) * m + j] -=
            factor * b[static_cast<size_t>(col) * m + j];
    }
  }
  for (int row = n - 1; row >= 0; --row) {
    double inv_pivot = 1.0 / a[static_cast<size_t>(row) * n + row];
    for (int j = 0; j < m; ++j) {
      double acc = b[static_cast<size_t>(row) * m + j];
      for (int k = row + 1; k < n; ++k)
        acc -= a[static_cast<size_t>(row) * n + k] *
               b[static_cast<size_t>(k) * m + j];
      b[static_cast<size_t>(row) * m + j] = acc * inv_pivot;
    }
  }
  return true;
}

std::vector<double> BuildSystem(const std::vector<Point2> &centers,
                                double lambda) {
  const int k = static_cast<int>(centers.size());
  const int n = k + 3;
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double dr = centers[i].row - centers[j].row;
      double dc = centers[i].col - centers[j].col;
      a[static_cast<size_t>(i) * n + j] = KernelPhi(std::hypot(dr, dc));
    }
    a[static_cast<size_t>(i) * n + i] += lambda;
    a[static_cast<size_t>(i) * n + k] = 1.0;
    a[static_cast<size_t>(i) * n + k + 1] = centers[i].row;
    a[static_cast<size_t>(i) * n + k + 2] = centers[i].col;
    a[static_cast<size_t>(k) * n + i] = 1.0;
    a[static_cast<size_t>(k + 1) * n + i] = centers[i].row;
    a[static_cast<size_t>(k + 2) * n + i] = centers[i].col;
  }
  return a;
}

}  // namespace

double KernelPhi(double r) {
  if (r < 0.0) throw NumericError("KernelPhi: negative radius");
  if (r == 0.0) return 0.0;
  return r * r * std::log(r);
}

Spline FitSpline(const std::vector<Point2> &centers,
                 const std::vector<std::array<double, 2>> &values,
                 double regularization) {
  const int k = static_cast<int>(centers.size());
  if (k < 3) throw NumericError("FitSpline: need at least 3 control points");
  if (values.size() != centers.size())
    throw NumericError("FitSpline: centers/values length mismatch");
  const int n = k + 3;

  std::vector<double> rhs(static_cast<size_t>(n) * 2, 0.0);
  for (int i = 0; i < k; ++i) {
    rhs[static_cast<size_t>(i) * 2 + 0] = values[i][0];
    rhs[static_cast<size_t>(i) * 2 + 1] = values[i][1];
  }

  double lambda = regularization;
  std::vector<double> solution = rhs;
  if (!SolveDense(BuildSystem(centers, lambda), solution, n, 2)) {
    // Near-singular (collinear or duplicate centers): one ridge retry.
    lambda = std::max(lambda, kRidgeFallback);
    solution = rhs;
    if (!SolveDense(BuildSystem(centers, lambda), solution, n, 2))
      throw NumericError(
          "FitSpline: singular interpolation system after ridge fallback");
  }

  Spline spline;
  spline.centers = centers;
  spline.regularization = lambda;
  spline.kernel_weights.resize(k);
  for (int i = 0; i < k; ++i) {
    spline.kernel_weights[i][0] = solution[static_cast<size_t>(i) * 2 + 0];
    spline.kernel_weights[i][1] = solution[static_cast<size_t>(i) * 2 + 1];
  }
  for (int j = 0; j < 3; ++j) {
    spline.affine[j][0] = solution[static_cast<size_t>(k + j) * 2 + 0];
    spline.affine[j][1] = solution[static_cast<size_t>(k + j) * 2 + 1];
  }
  return spline;
}

std::array<double, 2> EvalSplineAt(const Spline &spline, const Point2 &query) {
  std::array<double, 2> out = {
      spline.affine[0][0] + spline.affine[1][0] * query.row +
          spline.affine[2][0] * query.col,
      spline.affine[0][1] + spline.affine[1][1] * query.row +
          spline.affine[2][1] * query.col};
  for (size_t i = 0; i < spline.centers.size(); ++i) {
    double dr = query.row - spline.centers[i].row;
    double dc = query.col - spline.centers[i].col;
    double phi = KernelPhi(std::hypot(dr, dc));
    out[0] += spline.kernel_weights[i][0] * phi;
    out[1] += spline.kernel_weights[i][1] * phi;
  }
  return out;
}

std::vector<std::array<double, 2>> EvalSpline(
    const Spline &spline, const std::vector<Point2> &queries) {
  std::vector<std::array<double, 2>> out(queries.size());
  for (size_t i = 0; i < queries.size(); ++i)
    out[i] = EvalSplineAt(spline, queries[i]);
  return out;
}

FlowField DenseFlow(const std::vector<Point2> &source_pts,
                    const std::vector<Point2> &dest_pts, int rows, int cols,
                    double regularization) {
  if (source_pts.size() != dest_pts.size())
    throw NumericError("DenseFlow: point list length mismatch");
  std::vector<std::array<double, 2>> displacements(dest_pts.size());
  for (size_t i = 0; i < dest_pts.size(); ++i) {
    displacements[i][0] = dest_pts[i].row - source_pts[i].row;
    displacements[i][1] = dest_pts[i].col - source_pts[i].col;
  }
  Spline spline = FitSpline(dest_pts, displacements, regularization);
  FlowField field;
  field.rows = rows;
  field.cols = cols;
  field.flow.resize(static_cast<size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      field.At(r, c) = EvalSplineAt(
          spline, Point2{static_cast<double>(r), static_cast<double>(c)});
  return field;
}

Image BilinearSample(const Image &image,
                     const std::vector<std::array<double, 2>> &coords) {
  if (coords.size() != static_cast<size_t>(image.rows) * image.cols)
    throw NumericError("BilinearSample: coordinate grid shape mismatch");
  Image out(image.rows, image.cols, image.channels);
  const double max_row = image.rows - 1;
  const double max_col = image.cols - 1;
  for (int r = 0; r < image.rows; ++r) {
    for (int c = 0; c < image.cols; ++c) {
      const auto &coord = coords[static_cast<size_t>(r) * image.cols + c];
      if (!std::isfinite(coord[0]) || !std::isfinite(coord[1]))
        throw NumericError("BilinearSample: non-finite sample coordinate");
      double row = std::clamp(coord[0], 0.0, max_row);
      double col = std::clamp(coord[1], 0.0, max_col);
      int r0 = static_cast<int>(std::floor(row));
      int c0 = static_cast<int>(std::floor(col));
      int r1 = std::min(r0 + 1, image.rows - 1);
      int c1 = std::min(c0 + 1, image.cols - 1);
      double fr = row - r0;
      double fc = col - c0;
      for (int ch = 0; ch < image.channels; ++ch) {
        double top = image.At(r0, c0, ch) * (1.0 - fc) + image.At(r0, c1, ch) * fc;
        double bot = image.At(r1, c0, ch) * (1.0 - fc) + image.At(r1, c1, ch) * fc;
        out.At(r, c, ch) = top * (1.0 - fr) + bot * fr;
      }
    }
  }
  return out;
}

Image SparseImageWarp(const Image &image, const std::vector<Point2> &source_pts,
                      const std::vector<Point2> &dest_pts,
                      double regularization) {
  FlowField field =
      DenseFlow(source_pts, dest_pts, image.rows, image.cols, regularization);
  std::vector<std::array<double, 2>> coords(field.flow.size());
  for (int r = 0; r < image.rows; ++r) {
    for (int c = 0; c < image.cols; ++c) {
      const auto &flow = field.At(r, c);
      coords[static_cast<size_t>(r) * image.cols + c] = {r - flow[0],
                                                         c - flow[1]};
    }
  }
  return BilinearSample(image, coords);
}

}  // namespace fsaug
