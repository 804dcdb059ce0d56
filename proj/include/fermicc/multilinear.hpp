// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file multilinear.hpp
 * @brief Dense complex multilinear primitives: antisymmetric amplitude
 *        tensors, permutation signs, 3x3 adjugate calculus, Pfaffians and
 *        the invertible mode-space group action.
 */

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace fermicc {

using cplx = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;
using Mat6 = Eigen::Matrix<cplx, 6, 6>;
using Mat7 = Eigen::Matrix<cplx, 7, 7>;
using Vec7 = Eigen::Matrix<cplx, 7, 1>;

/// Default relative tolerance for all numeric comparisons.
inline constexpr double default_tol = 1e-9;

/// Occupied/virtual partition of the global mode labels: modes 1..fermions
/// are occupied, the rest virtual.
struct ModeSplit {
  int fermions;
  int modes;

  constexpr bool is_occupied(int mode) const {
    return mode >= 1 && mode <= fermions;
  }

  static constexpr ModeSplit six() { return {3, 6}; }
  static constexpr ModeSplit seven() { return {3, 7}; }
  static constexpr ModeSplit four_eight() { return {4, 8}; }
};

/// Sign of the permutation that sorts `idx` ascending; 0 if any index repeats.
int levi_civita(std::span<const int> idx);

inline int levi_civita(std::initializer_list<int> idx) {
  return levi_civita(std::span<const int>(idx.begin(), idx.size()));
}

/// Transpose cofactor matrix: m * adjugate(m) = det(m) * I, also for singular m.
template <typename Derived>
Mat3 adjugate(const Eigen::MatrixBase<Derived>& m_in) {
  Mat3 m = m_in;
  Mat3 a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

/// Symmetric bilinear polarization of the adjugate:
/// cross(a, b) = (adjugate(a + b) - adjugate(a) - adjugate(b)) / 2.
template <typename DA, typename DB>
Mat3 cross(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return 0.5 * (adjugate(a + b) - adjugate(a) - adjugate(b));
}

/// |det(a+b) - det a - tr(a# b) - tr(a b#) - det b|, a polynomial identity
/// that must vanish; exposed as a numeric self-test.
double det_sum_identity_residual(const Mat3& a, const Mat3& b);

/// 3x3 antisymmetric matrix stored through its axial vector, m_ij = eps_ijk v^k.
struct AntisymMat3 {
  Vec3 v = Vec3::Zero();

  Mat3 matrix() const {
    Mat3 m;
    m << 0, v(2), -v(1), -v(2), 0, v(0), v(1), -v(0), 0;
    return m;
  }

  static AntisymMat3 zero() { return AntisymMat3{}; }
  static AntisymMat3 from_vector(const Vec3& v) { return AntisymMat3{v}; }
  /// Throws std::invalid_argument unless m is antisymmetric within tol*scale.
  static AntisymMat3 from_matrix(const Mat3& m, double tol = default_tol);
};

/// Pfaffian of a 6x6 antisymmetric matrix, summed over the 15 perfect
/// matchings; Pf(w)^2 = det(w). Rejects non-antisymmetric input.
cplx pfaffian6(const Mat6& w, double tol = default_tol);

/**
 * Totally antisymmetric amplitude tensor for n fermions over N modes.
 *
 * Only strictly increasing index tuples are stored (C(N,n) components); the
 * accessor applies the permutation sign and reads repeated indices as zero.
 * Indices are 1-based, matching the mode labels used throughout.
 */
class AntisymTensor {
 public:
  AntisymTensor(int fermions, int modes);

  /// The reference determinant p^{1..n}|0>: amplitude 1 on modes 1..n.
  static AntisymTensor reference(int fermions, int modes);

  int fermions() const { return n_; }
  int modes() const { return modes_; }
  int component_count() const { return static_cast<int>(amp_.size()); }

  cplx get(std::span<const int> idx) const;
  cplx get(int a, int b, int c) const {
    const std::array<int, 3> i{a, b, c};
    return get(std::span<const int>(i));
  }
  cplx get(int a, int b, int c, int d) const {
    const std::array<int, 4> i{a, b, c, d};
    return get(std::span<const int>(i));
  }

  /// Stores sign(idx) * value at the canonical tuple. Repeated indices or a
  /// non-finite value are rejected.
  void set(std::span<const int> idx, cplx value);
  void set(int a, int b, int c, cplx value) {
    const std::array<int, 3> i{a, b, c};
    set(std::span<const int>(i), value);
  }
  void set(int a, int b, int c, int d, cplx value) {
    const std::array<int, 4> i{a, b, c, d};
    set(std::span<const int>(i), value);
  }
  void add(std::span<const int> idx, cplx value);

  /// Canonical amplitudes in combinadic order.
  std::span<const cplx> amplitudes() const { return amp_; }
  /// k-th canonical tuple (ascending, 1-based), length fermions().
  std::span<const int> tuple(int k) const {
    return std::span<const int>(tuples_[static_cast<size_t>(k)].data(),
                                static_cast<size_t>(n_));
  }

  double max_abs() const;
  double norm() const;
  bool is_finite() const;

  AntisymTensor& operator+=(const AntisymTensor& rhs);
  AntisymTensor& operator-=(const AntisymTensor& rhs);
  AntisymTensor& operator*=(cplx s);

  friend AntisymTensor operator+(AntisymTensor a, const AntisymTensor& b) {
    a += b;
    return a;
  }
  friend AntisymTensor operator-(AntisymTensor a, const AntisymTensor& b) {
    a -= b;
    return a;
  }
  friend AntisymTensor operator*(cplx s, AntisymTensor t) {
    t *= s;
    return t;
  }

 private:
  int index_of_sorted(const int* sorted) const;

  int n_;
  int modes_;
  std::vector<cplx> amp_;
  std::vector<std::array<int, 4>> tuples_;
};

/// Largest absolute difference between canonical amplitudes.
double max_abs_diff(const AntisymTensor& a, const AntisymTensor& b);

/// Wedge product of n one-particle vectors; amplitudes are the n x n minors.
AntisymTensor wedge(std::span<const Eigen::VectorXcd> vectors);

/**
 * Invertible N x N mode transformation. Construction rejects matrices with
 * |det| <= tol * (max |entry|)^N.
 */
class SloccMatrix {
 public:
  explicit SloccMatrix(Eigen::MatrixXcd m, double tol = 1e-12);

  static SloccMatrix identity(int dim);

  const Eigen::MatrixXcd& matrix() const { return m_; }
  cplx det() const { return det_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Eigen::MatrixXcd m_;
  cplx det_;
};

/// psi'_{m1..mn} = S_{m1}^{k1} ... S_{mn}^{kn} psi_{k1..kn}; equivalently the
/// compound-matrix action psi'_J = sum_I det(S[J, I]) psi_I over canonical
/// tuples. Composition satisfies apply(apply(t, S1), S2) = apply(t, S2 * S1).
AntisymTensor slocc_apply(const AntisymTensor& t, const SloccMatrix& s);

}  // namespace fermicc
