// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rng.hpp
 * @brief Deterministic random draws (hand-rolled Box-Muller so byte-stable
 *        output does not depend on the standard library's distributions).
 */

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "fermicc/multilinear.hpp"

namespace fermicc {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return double(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  /// Complex standard normal (unit variance overall).
  cplx cgauss() {
    const double re = gauss();
    const double im = gauss();
    return cplx(re, im) / std::sqrt(2.0);
  }

  Vec3 gauss_vec3() { return Vec3(cgauss(), cgauss(), cgauss()); }

  Mat3 gauss_mat3() {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = cgauss();
    return m;
  }

  Eigen::MatrixXcd gauss_matrix(int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cgauss();
    return m;
  }

  /// Random Haar-ish unitary from the QR of a Gaussian matrix.
  Eigen::MatrixXcd unitary(int dim) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gauss_matrix(dim, dim));
    return qr.householderQ();
  }

  /// Well-conditioned invertible matrix: U1 * diag(d) * U2 with singular
  /// values in [1/s, s]; keeps condition numbers small enough that degree-7
  /// polynomial covariance checks stay near machine precision.
  SloccMatrix gl(int dim, double s = 2.0) {
    Eigen::MatrixXcd u1 = unitary(dim);
    Eigen::MatrixXcd u2 = unitary(dim);
    Eigen::VectorXcd d(dim);
    for (int i = 0; i < dim; ++i) {
      const double mag = std::exp(uniform(-std::log(s), std::log(s)));
      const double ph = 2.0 * std::numbers::pi * uniform();
      d(i) = mag * cplx(std::cos(ph), std::sin(ph));
    }
    return SloccMatrix(u1 * d.asDiagonal() * u2);
  }

  /// As gl(), rescaled to determinant one (principal root).
  SloccMatrix sl(int dim) {
    SloccMatrix s = gl(dim);
    const cplx root = std::pow(s.det(), 1.0 / double(dim));
    return SloccMatrix(s.matrix() / root);
  }

  /// Random tensor with unit-scale complex Gaussian canonical amplitudes.
  AntisymTensor tensor(int fermions, int modes) {
    AntisymTensor t(fermions, modes);
    for (int k = 0; k < t.component_count(); ++k) t.set(t.tuple(k), cgauss());
    return t;
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fermicc
