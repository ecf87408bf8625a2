// src/warp-math.h

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

#ifndef FSAUG_WARP_MATH_H_
#define FSAUG_WARP_MATH_H_

#include <array>
#include <cstdint>
#include <vector>

namespace fsaug {

struct Point2 {
  double row = 0.0;
  double col = 0.0;
};

/// Order-2 polyharmonic (thin-plate) interpolant: kernel part plus an
/// affine term, per output component.
struct Spline {
  std::vector<Point2> centers;
  std::vector<std::array<double, 2>> kernel_weights;  // k rows
  // affine[0] = constant, affine[1] = row coeff, affine[2] = col coeff.
  std::array<std::array<double, 2>, 3> affine{};
  double regularization = 0.0;
};

/// Dense per-pixel displacement grid (row component, col component).
struct FlowField {
  int rows = 0;
  int cols = 0;
  std::vector<std::array<double, 2>> flow;  // row-major, rows*cols

  std::array<double, 2> &At(int r, int c) {
    return flow[static_cast<size_t>(r) * cols + c];
  }
  const std::array<double, 2> &At(int r, int c) const {
    return flow[static_cast<size_t>(r) * cols + c];
  }
};

/// Multi-channel image with double storage; warping math stays in 64-bit.
struct Image {
  int rows = 0;
  int cols = 0;
  int channels = 1;
  std::vector<double> data;  // [r][c][ch]

  Image() = default;
  Image(int r, int c, int ch)
      : rows(r), cols(c), channels(ch),
        data(static_cast<size_t>(r) * c * ch, 0.0) {}

  double &At(int r, int c, int ch) {
    return data[(static_cast<size_t>(r) * cols + c) * channels + ch];
  }
  double At(int r, int c, int ch) const {
    return data[(static_cast<size_t>(r) * cols + c) * channels + ch];
  }
};

// phi(r) = r^2 ln r, with phi(0) = 0.  Throws on negative r.
double KernelPhi(double r);

// Solves the (k+3)x(k+3) system [A + lambda*I, P; P^T, 0] [w; v] = [values; 0]
// with A_ij = phi(|c_i - c_j|) and P row i = (1, row_i, col_i), in 64-bit.
// Retries once with ridge lambda = 1e-10 if the solve is near-singular.
Spline FitSpline(const std::vector<Point2> &centers,
                 const std::vector<std::array<double, 2>> &values,
                 double regularization);

// f(q) = sum_i w_i phi(|q - c_i|) + v0 + vr*row(q) + vc*col(q).
std::vector<std::array<double, 2>> EvalSpline(
    const Spline &spline, const std::vector<Point2> &queries);
std::array<double, 2> EvalSplineAt(const Spline &spline, const Point2 &query);

// Fits a spline at dest_pts with data (dest - source) and evaluates it over
// the R x C integer grid.  Inverse-mapping convention: an output pixel q
// pulls from the input at q - flow[q].
FlowField DenseFlow(const std::vector<Point2> &source_pts,
                    const std::vector<Point2> &dest_pts, int rows, int cols,
                    double regularization);

// Per-channel bilinear interpolation; coords clamp to the image border.
// coords has rows*cols entries of (row, col).
Image BilinearSample(const Image &image,
                     const std::vector<std::array<double, 2>> &coords);

// DenseFlow + BilinearSample; exact at integer destination control points.
Image SparseImageWarp(const Image &image, const std::vector<Point2> &source_pts,
                      const std::vector<Point2> &dest_pts,
                      double regularization);

}  // namespace fsaug

#endif  // FSAUG_WARP_MATH_H_
