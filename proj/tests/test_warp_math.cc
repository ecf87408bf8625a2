// tests/test_warp_math.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "common.h"
#include "warp-math.h"

using namespace fsaug;

namespace {

// Independent oracle: the same interpolation problem assembled and solved
// with Eigen, and the interpolant evaluated by direct summation.  Shares no
// code with the implementation under test.
struct OracleSpline {
  std::vector<Point2> centers;
  Eigen::MatrixXd solution;  // (k+3) x 2
};

double OraclePhi(double r) { return r > 0.0 ? r * r * std::log(r) : 0.0; }

OracleSpline OracleFit(const std::vector<Point2> &centers,
                       const std::vector<std::array<double, 2>> &values,
                       double lambda) {
  const int k = static_cast<int>(centers.size());
  const int n = k + 3;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, 2);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double d = std::hypot(centers[i].row - centers[j].row,
                            centers[i].col - centers[j].col);
      a(i, j) = OraclePhi(d);
    }
    a(i, i) += lambda;
    a(i, k) = a(k, i) = 1.0;
    a(i, k + 1) = a(k + 1, i) = centers[i].row;
    a(i, k + 2) = a(k + 2, i) = centers[i].col;
    rhs(i, 0) = values[i][0];
    rhs(i, 1) = values[i][1];
  }
  return {centers, a.fullPivLu().solve(rhs)};
}

std::array<double, 2> OracleEval(const OracleSpline &s, const Point2 &q) {
  const int k = static_cast<int>(s.centers.size());
  std::array<double, 2> out{};
  for (int comp = 0; comp < 2; ++comp) {
    double acc = s.solution(k, comp) + s.solution(k + 1, comp) * q.row +
                 s.solution(k + 2, comp) * q.col;
    for (int i = 0; i < k; ++i)
      acc += s.solution(i, comp) *
             OraclePhi(std::hypot(q.row - s.centers[i].row,
                                  q.col - s.centers[i].col));
    out[comp] = acc;
  }
  return out;
}

std::vector<Point2> RandomCenters(std::mt19937 &rng, int k) {
  std::uniform_real_distribution<double> unit(0.0, 10.0);
  std::vector<Point2> centers(k);
  // Anchor three non-collinear points so the affine part is determined.
  centers[0] = {0.0, 0.0};
  centers[1] = {10.0, 0.0};
  centers[2] = {0.0, 10.0};
  for (int i = 3; i < k; ++i) centers[i] = {unit(rng), unit(rng)};
  return centers;
}

}  // namespace

TEST_CASE("kernel values") {
  CHECK(KernelPhi(0.0) == 0.0);
  CHECK(KernelPhi(1.0) == 0.0);
  CHECK(KernelPhi(M_E) == doctest::Approx(M_E * M_E).epsilon(1e-12));
  CHECK_THROWS_AS(KernelPhi(-1.0), NumericError);
}

TEST_CASE("zero values give the zero spline") {
  std::vector<Point2> centers = {{0, 0}, {1, 0}, {0, 1}, {2, 3}};
  std::vector<std::array<double, 2>> values(4, {0.0, 0.0});
  Spline s = FitSpline(centers, values, 0.0);
  for (const auto &w : s.kernel_weights) {
    CHECK(std::abs(w[0]) < 1e-12);
    CHECK(std::abs(w[1]) < 1e-12);
  }
  auto out = EvalSplineAt(s, {0.37, 4.2});
  CHECK(std::abs(out[0]) < 1e-12);
  CHECK(std::abs(out[1]) < 1e-12);
}

TEST_CASE("affine data is reproduced exactly by the affine term") {
  std::vector<Point2> centers = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  auto affine = [](const Point2 &p) {
    return std::array<double, 2>{2.0 + 3.0 * p.row - 1.5 * p.col,
                                 -1.0 + 0.25 * p.row + 4.0 * p.col};
  };
  std::vector<std::array<double, 2>> values;
  for (const Point2 &c : centers) values.push_back(affine(c));
  Spline s = FitSpline(centers, values, 0.0);
  for (const auto &w : s.kernel_weights) {
    CHECK(std::abs(w[0]) < 1e-8);
    CHECK(std::abs(w[1]) < 1e-8);
  }
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    Point2 q{unit(rng), unit(rng)};
    auto expected = affine(q);
    auto got = EvalSplineAt(s, q);
    CHECK(std::abs(got[0] - expected[0]) < 1e-8);
    CHECK(std::abs(got[1] - expected[1]) < 1e-8);
  }
}

TEST_CASE("interpolation exactness and side conditions at random centers") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    auto centers = RandomCenters(rng, 6);
    std::vector<std::array<double, 2>> values;
    for (int i = 0; i < 6; ++i)
      values.push_back({unit(rng), unit(rng)});
    Spline s = FitSpline(centers, values, 0.0);

    auto at_centers = EvalSpline(s, centers);
    for (int i = 0; i < 6; ++i) {
      CHECK(std::abs(at_centers[i][0] - values[i][0]) < 1e-8);
      CHECK(std::abs(at_centers[i][1] - values[i][1]) < 1e-8);
    }

    // Orthogonality side conditions on the kernel weights.
    double s0 = 0, sr = 0, sc = 0;
    for (size_t i = 0; i < centers.size(); ++i) {
      s0 += s.kernel_weights[i][0];
      sr += s.kernel_weights[i][0] * centers[i].row;
      sc += s.kernel_weights[i][0] * centers[i].col;
    }
    CHECK(std::abs(s0) < 1e-8);
    CHECK(std::abs(sr) < 1e-8);
    CHECK(std::abs(sc) < 1e-8);
  }
}

TEST_CASE("spline agrees with the Eigen brute-force oracle") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> unit(-4.0, 4.0);
  std::uniform_int_distribution<int> ksize(3, 8);
  for (int trial = 0; trial < 50; ++trial) {
    int k = ksize(rng);
    auto centers = RandomCenters(rng, k);
    std::vector<std::array<double, 2>> values;
    for (int i = 0; i < k; ++i) values.push_back({unit(rng), unit(rng)});
    Spline s = FitSpline(centers, values, 0.0);
    OracleSpline oracle = OracleFit(centers, values, 0.0);
    for (int q = 0; q < 20; ++q) {
      Point2 query{unit(rng) + 4.0, unit(rng) + 4.0};
      auto got = EvalSplineAt(s, query);
      auto expected = OracleEval(oracle, query);
      CHECK(std::abs(got[0] - expected[0]) < 1e-8);
      CHECK(std::abs(got[1] - expected[1]) < 1e-8);
    }
  }
}

TEST_CASE("degenerate control sets fall back to ridge or fail cleanly") {
  // Fewer than 3 points is rejected outright.
  CHECK_THROWS_AS(FitSpline({{0, 0}, {1, 1}}, {{{0, 0}}, {{0, 0}}}, 0.0),
                  NumericError);
  // Duplicate centers with consistent values survive via the ridge retry.
  std::vector<Point2> dup = {{0, 0}, {0, 0}, {1, 0}, {0, 1}};
  std::vector<std::array<double, 2>> values = {
      {1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}};
  Spline s = FitSpline(dup, values, 0.0);
  CHECK(s.regularization > 0.0);
}

TEST_CASE("dense flow: identity, constant shift, and control exactness") {
  std::vector<Point2> pts = {{0, 0}, {4, 0}, {0, 4}, {4, 4}};
  FlowField zero = DenseFlow(pts, pts, 5, 5, 0.0);
  for (const auto &f : zero.flow) {
    CHECK(std::abs(f[0]) < 1e-9);
    CHECK(std::abs(f[1]) < 1e-9);
  }

  std::vector<Point2> shifted;
  for (const Point2 &p : pts) shifted.push_back({p.row + 2.0, p.col - 1.0});
  FlowField constant = DenseFlow(pts, shifted, 5, 5, 0.0);
  for (const auto &f : constant.flow) {
    CHECK(std::abs(f[0] - 2.0) < 1e-6);
    CHECK(std::abs(f[1] + 1.0) < 1e-6);
  }

  // f-SpecAugment-style control set on a tau x 2 grid with w = 3.
  const int tau = 41, w0 = 10, w = 3, center = tau / 2;
  std::vector<Point2> src = {{w0, 0}, {w0, 1}, {center, 0}, {center, 1}};
  std::vector<Point2> dst = {{w0 + w, 0}, {w0 + w, 1}, {center, 0}, {center, 1}};
  FlowField flow = DenseFlow(src, dst, tau, 2, 0.0);
  for (int c = 0; c < 2; ++c) {
    CHECK(std::abs(flow.At(w0 + w, c)[0] - w) < 1e-6);
    CHECK(std::abs(flow.At(center, c)[0]) < 1e-6);
  }
}

TEST_CASE("zero column displacements give zero column flow everywhere") {
  std::vector<Point2> src = {{5, 0}, {5, 1}, {20, 0}, {20, 1}};
  std::vector<Point2> dst = {{8, 0}, {8, 1}, {20, 0}, {20, 1}};
  FlowField flow = DenseFlow(src, dst, 41, 2, 0.0);
  for (const auto &f : flow.flow) CHECK(std::abs(f[1]) < 1e-8);
}

TEST_CASE("bilinear identity grid reproduces the image") {
  Image img(4, 5, 2);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (double &v : img.data) v = unit(rng);
  std::vector<std::array<double, 2>> coords;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 5; ++c)
      coords.push_back({static_cast<double>(r), static_cast<double>(c)});
  Image out = BilinearSample(img, coords);
  for (size_t i = 0; i < img.data.size(); ++i)
    CHECK(out.data[i] == doctest::Approx(img.data[i]).epsilon(1e-12));
}

TEST_CASE("bilinear center of a 2x2 image") {
  Image img(2, 2, 1);
  img.At(0, 0, 0) = 0;
  img.At(0, 1, 0) = 1;
  img.At(1, 0, 0) = 2;
  img.At(1, 1, 0) = 3;
  std::vector<std::array<double, 2>> coords(4, {0.5, 0.5});
  Image out = BilinearSample(img, coords);
  CHECK(out.At(0, 0, 0) == doctest::Approx(1.5));
}

TEST_CASE("bilinear matches the four-corner brute force on random cases") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> pix(-2.0, 2.0);
  std::uniform_real_distribution<double> row_coord(-1.0, 5.0);  // includes out-of-range
  std::uniform_real_distribution<double> col_coord(-1.0, 7.0);
  for (int trial = 0; trial < 100; ++trial) {
    Image img(5, 7, 1);
    for (double &v : img.data) v = pix(rng);
    std::vector<std::array<double, 2>> coords;
    for (int i = 0; i < 35; ++i) coords.push_back({row_coord(rng), col_coord(rng)});
    Image out = BilinearSample(img, coords);
    for (int i = 0; i < 35; ++i) {
      double r = std::clamp(coords[i][0], 0.0, 4.0);
      double c = std::clamp(coords[i][1], 0.0, 6.0);
      int r0 = std::min(static_cast<int>(std::floor(r)), 3);
      int c0 = std::min(static_cast<int>(std::floor(c)), 5);
      double fr = r - r0, fc = c - c0;
      double expected = img.At(r0, c0, 0) * (1 - fr) * (1 - fc) +
                        img.At(r0, c0 + 1, 0) * (1 - fr) * fc +
                        img.At(r0 + 1, c0, 0) * fr * (1 - fc) +
                        img.At(r0 + 1, c0 + 1, 0) * fr * fc;
      CHECK(std::abs(out.data[i] - expected) < 1e-6);
    }
  }
}

TEST_CASE("bilinear rejects non-finite coordinates") {
  Image img(2, 2, 1);
  std::vector<std::array<double, 2>> coords(4, {0.0, 0.0});
  coords[1][0] = std::nan("");
  CHECK_THROWS_AS(BilinearSample(img, coords), NumericError);
}

TEST_CASE("sparse warp: identity, delta spike, constant image") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Image img(20, 2, 3);
  for (double &v : img.data) v = unit(rng);

  std::vector<Point2> pts = {{3, 0}, {3, 1}, {10, 0}, {10, 1}};
  Image same = SparseImageWarp(img, pts, pts, 0.0);
  for (size_t i = 0; i < img.data.size(); ++i)
    CHECK(std::abs(same.data[i] - img.data[i]) < 1e-6);

  // Unit spike at row 5 moves to row 8.
  Image spike(20, 2, 1);
  spike.At(5, 0, 0) = 1.0;
  spike.At(5, 1, 0) = 1.0;
  std::vector<Point2> src = {{5, 0}, {5, 1}, {15, 0}, {15, 1}};
  std::vector<Point2> dst = {{8, 0}, {8, 1}, {15, 0}, {15, 1}};
  Image moved = SparseImageWarp(spike, src, dst, 0.0);
  CHECK(moved.At(8, 0, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(moved.At(8, 1, 0) == doctest::Approx(1.0).epsilon(1e-6));

  Image flat(20, 2, 2);
  for (double &v : flat.data) v = 2.5;
  Image warped_flat = SparseImageWarp(flat, src, dst, 0.0);
  for (double v : warped_flat.data) CHECK(std::abs(v - 2.5) < 1e-6);
}
