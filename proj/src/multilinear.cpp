// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/multilinear.hpp"

#include <algorithm>
#include <cmath>

namespace fermicc {

namespace {

// Binomials up to C(8,4); index [n][k].
constexpr int kChoose[9][5] = {
    {1, 0, 0, 0, 0},  {1, 1, 0, 0, 0},  {1, 2, 1, 0, 0},
    {1, 3, 3, 1, 0},  {1, 4, 6, 4, 1},  {1, 5, 10, 10, 5},
    {1, 6, 15, 20, 15}, {1, 7, 21, 35, 35}, {1, 8, 28, 56, 70},
};

int choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return kChoose[n][k];
}

}  // namespace

int levi_civita(std::span<const int> idx) {
  std::array<int, 8> buf{};
  const int n = static_cast<int>(idx.size());
  std::copy(idx.begin(), idx.end(), buf.begin());
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (buf[i] == buf[j]) return 0;
      if (buf[i] > buf[j]) {
        std::swap(buf[i], buf[j]);
        sign = -sign;
      }
    }
  }
  return sign;
}

double det_sum_identity_residual(const Mat3& a, const Mat3& b) {
  const cplx lhs = (a + b).determinant();
  const cplx rhs = a.determinant() + (adjugate(a) * b).trace() +
                   (a * adjugate(b)).trace() + b.determinant();
  return std::abs(lhs - rhs);
}

AntisymMat3 AntisymMat3::from_matrix(const Mat3& m, double tol) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m + m.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw std::invalid_argument("AntisymMat3: matrix is not antisymmetric");
  }
  return AntisymMat3{Vec3(m(1, 2), m(2, 0), m(0, 1))};
}

namespace {

// Recursive perfect-matching expansion: pair the first live index with each
// later one; the sign is (-1)^(number of live indices skipped).
cplx pfaffian_rec(const Mat6& w, unsigned live) {
  if (live == 0) return cplx(1.0);
  int first = -1;
  for (int i = 0; i < 6; ++i) {
    if (live & (1u << i)) {
      first = i;
      break;
    }
  }
  cplx sum(0.0);
  double sign = 1.0;
  for (int j = first + 1; j < 6; ++j) {
    if (!(live & (1u << j))) continue;
    const unsigned rest = live & ~(1u << first) & ~(1u << j);
    sum += sign * w(first, j) * pfaffian_rec(w, rest);
    sign = -sign;
  }
  return sum;
}

}  // namespace

cplx pfaffian6(const Mat6& w, double tol) {
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  if ((w + w.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw std::invalid_argument("pfaffian6: matrix is not antisymmetric");
  }
  return pfaffian_rec(w, 0x3fu);
}

AntisymTensor::AntisymTensor(int fermions, int modes)
    : n_(fermions), modes_(modes) {
  if ((fermions != 3 && fermions != 4) || modes < fermions || modes > 8) {
    throw std::invalid_argument("AntisymTensor: unsupported (n, N)");
  }
  amp_.assign(static_cast<size_t>(choose(modes, fermions)), cplx(0.0));
  tuples_.resize(amp_.size());
  std::array<int, 4> t{};
  // canonical storage order is the combinadic rank of the ascending tuple
  for (int i = 0; i < n_; ++i) t[static_cast<size_t>(i)] = i + 1;
  while (true) {
    tuples_[static_cast<size_t>(index_of_sorted(t.data()))] = t;
    int k = n_ - 1;
    while (k >= 0 && t[static_cast<size_t>(k)] == modes_ - (n_ - 1 - k)) --k;
    if (k < 0) break;
    ++t[static_cast<size_t>(k)];
    for (int j = k + 1; j < n_; ++j)
      t[static_cast<size_t>(j)] = t[static_cast<size_t>(j - 1)] + 1;
  }
}

AntisymTensor AntisymTensor::reference(int fermions, int modes) {
  AntisymTensor t(fermions, modes);
  t.amp_[0] = cplx(1.0);
  return t;
}

int AntisymTensor::index_of_sorted(const int* sorted) const {
  int r = 0;
  for (int k = 0; k < n_; ++k) r += choose(sorted[k] - 1, k + 1);
  return r;
}

cplx AntisymTensor::get(std::span<const int> idx) const {
  std::array<int, 4> buf{};
  std::copy(idx.begin(), idx.end(), buf.begin());
  int sign = 1;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (buf[i] == buf[j]) return cplx(0.0);
      if (buf[i] > buf[j]) {
        std::swap(buf[i], buf[j]);
        sign = -sign;
      }
    }
  }
  if (buf[0] < 1 || buf[static_cast<size_t>(n_ - 1)] > modes_) {
    throw std::out_of_range("AntisymTensor: mode index out of range");
  }
  return double(sign) * amp_[static_cast<size_t>(index_of_sorted(buf.data()))];
}

void AntisymTensor::set(std::span<const int> idx, cplx value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::invalid_argument("AntisymTensor: non-finite amplitude");
  }
  std::array<int, 4> buf{};
  std::copy(idx.begin(), idx.end(), buf.begin());
  int sign = 1;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (buf[i] == buf[j]) {
        throw std::invalid_argument("AntisymTensor: repeated index in set()");
      }
      if (buf[i] > buf[j]) {
        std::swap(buf[i], buf[j]);
        sign = -sign;
      }
    }
  }
  if (buf[0] < 1 || buf[static_cast<size_t>(n_ - 1)] > modes_) {
    throw std::out_of_range("AntisymTensor: mode index out of range");
  }
  amp_[static_cast<size_t>(index_of_sorted(buf.data()))] = double(sign) * value;
}

void AntisymTensor::add(std::span<const int> idx, cplx value) {
  cplx cur = get(idx);
  set(idx, cur + value);
}

double AntisymTensor::max_abs() const {
  double m = 0.0;
  for (const cplx& a : amp_) m = std::max(m, std::abs(a));
  return m;
}

double AntisymTensor::norm() const {
  double s = 0.0;
  for (const cplx& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

bool AntisymTensor::is_finite() const {
  for (const cplx& a : amp_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  }
  return true;
}

AntisymTensor& AntisymTensor::operator+=(const AntisymTensor& rhs) {
  if (rhs.n_ != n_ || rhs.modes_ != modes_) {
    throw std::invalid_argument("AntisymTensor: shape mismatch");
  }
  for (size_t i = 0; i < amp_.size(); ++i) amp_[i] += rhs.amp_[i];
  return *this;
}

AntisymTensor& AntisymTensor::operator-=(const AntisymTensor& rhs) {
  if (rhs.n_ != n_ || rhs.modes_ != modes_) {
    throw std::invalid_argument("AntisymTensor: shape mismatch");
  }
  for (size_t i = 0; i < amp_.size(); ++i) amp_[i] -= rhs.amp_[i];
  return *this;
}

AntisymTensor& AntisymTensor::operator*=(cplx s) {
  for (cplx& a : amp_) a *= s;
  return *this;
}

double max_abs_diff(const AntisymTensor& a, const AntisymTensor& b) {
  if (a.fermions() != b.fermions() || a.modes() != b.modes()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (int k = 0; k < a.component_count(); ++k) {
    m = std::max(m, std::abs(a.amplitudes()[static_cast<size_t>(k)] -
                             b.amplitudes()[static_cast<size_t>(k)]));
  }
  return m;
}

AntisymTensor wedge(std::span<const Eigen::VectorXcd> vectors) {
  const int n = static_cast<int>(vectors.size());
  if (n < 3 || n > 4) throw std::invalid_argument("wedge: need 3 or 4 vectors");
  const int modes = static_cast<int>(vectors[0].size());
  AntisymTensor t(n, modes);
  Eigen::MatrixXcd minor(n, n);
  for (int k = 0; k < t.component_count(); ++k) {
    const auto tup = t.tuple(k);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        minor(r, c) = vectors[static_cast<size_t>(r)](tup[static_cast<size_t>(c)] - 1);
      }
    }
    t.set(tup, minor.determinant());
  }
  return t;
}

SloccMatrix::SloccMatrix(Eigen::MatrixXcd m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw std::invalid_argument("SloccMatrix: matrix must be square");
  }
  det_ = m_.determinant();
  const double entry_scale = m_.cwiseAbs().maxCoeff();
  const double floor = tol * std::pow(entry_scale, double(m_.rows()));
  if (!(std::abs(det_) > floor)) {
    throw std::invalid_argument("SloccMatrix: matrix is numerically singular");
  }
}

SloccMatrix SloccMatrix::identity(int dim) {
  return SloccMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

AntisymTensor slocc_apply(const AntisymTensor& t, const SloccMatrix& s) {
  if (s.dim() != t.modes()) {
    throw std::invalid_argument("slocc_apply: dimension mismatch");
  }
  const int n = t.fermions();
  AntisymTensor out(n, t.modes());
  Eigen::MatrixXcd minor(n, n);
  for (int j = 0; j < out.component_count(); ++j) {
    const auto out_tup = out.tuple(j);
    cplx acc(0.0);
    for (int i = 0; i < t.component_count(); ++i) {
      const cplx amp = t.amplitudes()[static_cast<size_t>(i)];
      if (amp == cplx(0.0)) continue;
      const auto in_tup = t.tuple(i);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          minor(r, c) = s.matrix()(out_tup[static_cast<size_t>(r)] - 1,
                                   in_tup[static_cast<size_t>(c)] - 1);
        }
      }
      acc += minor.determinant() * amp;
    }
    out.set(out_tup, acc);
  }
  return out;
}

}  // namespace fermicc
