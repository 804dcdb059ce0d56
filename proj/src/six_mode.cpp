// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/six_mode.hpp"

#include <algorithm>
#include <cmath>

namespace fermicc {

namespace {

// Permutations of {1..6} with one value removed, cached with the sign of the
// full 6-tuple (removed value prepended).
struct Perm5 {
  std::array<int, 5> rest;
  int sign;
};

const std::vector<Perm5>& perms_without(int mu) {
  static std::array<std::vector<Perm5>, 7> cache;
  auto& slot = cache[size_t(mu)];
  if (!slot.empty()) return slot;
  std::array<int, 5> rest{};
  int k = 0;
  for (int v = 1; v <= 6; ++v) {
    if (v != mu) rest[size_t(k++)] = v;
  }
  std::sort(rest.begin(), rest.end());
  do {
    std::array<int, 6> full{};
    full[0] = mu;
    std::copy(rest.begin(), rest.end(), full.begin() + 1);
    slot.push_back({rest, levi_civita(std::span<const int>(full))});
  } while (std::next_permutation(rest.begin(), rest.end()));
  return slot;
}

}  // namespace

Mat6 covariant_K(const AntisymTensor& t) {
  if (t.fermions() != 3 || t.modes() != 6) {
    throw std::invalid_argument("covariant_K: need a (3,6) tensor");
  }
  Mat6 k = Mat6::Zero();
  for (int mu = 1; mu <= 6; ++mu) {
    const auto& perms = perms_without(mu);
    for (int nu = 1; nu <= 6; ++nu) {
      cplx acc(0.0);
      for (const Perm5& p : perms) {
        acc += double(p.sign) * t.get(nu, p.rest[0], p.rest[1]) *
               t.get(p.rest[2], p.rest[3], p.rest[4]);
      }
      k(mu - 1, nu - 1) = acc / 12.0;
    }
  }
  return k;
}

Mat6 transform_covariant_K(const Mat6& k, const SloccMatrix& s) {
  if (s.dim() != 6) {
    throw std::invalid_argument("transform_covariant_K: need a 6x6 matrix");
  }
  const Eigen::MatrixXcd inv = s.matrix().inverse();
  return s.det() * (inv.transpose() * k * s.matrix().transpose());
}

cplx quartic_D(const AntisymTensor& t) {
  const Mat6 k = covariant_K(t);
  return (k * k).trace() / 6.0;
}

cplx quartic_D(const SixModeCI& ci) {
  const cplx kappa = 0.5 * (ci.alpha * ci.beta - (ci.A * ci.B).trace());
  return 4.0 * (kappa * kappa - (adjugate(ci.A) * adjugate(ci.B)).trace() +
                ci.alpha * ci.A.determinant() + ci.beta * ci.B.determinant());
}

cplx quartic_D(const SixModeCC& cc) {
  return cc.xi * cc.xi + 4.0 * cc.X.determinant();
}

DualStateCoords dual_state(const SixModeCI& ci) {
  const cplx kappa = 0.5 * (ci.alpha * ci.beta - (ci.A * ci.B).trace());
  const Mat3 a_sharp = adjugate(ci.A);
  const Mat3 b_sharp = adjugate(ci.B);
  DualStateCoords dual;
  dual.alpha = 2.0 * ci.alpha * kappa + 2.0 * ci.B.determinant();
  dual.A = 2.0 * (ci.beta * b_sharp - 2.0 * cross(ci.B, a_sharp)) - 2.0 * kappa * ci.A;
  dual.beta = -2.0 * ci.beta * kappa - 2.0 * ci.A.determinant();
  dual.B = -2.0 * (ci.alpha * a_sharp - 2.0 * cross(ci.A, b_sharp)) + 2.0 * kappa * ci.B;
  return dual;
}

std::array<Mat3, 3> q_polynomials(const SixModeCI& ci) {
  return {Mat3(ci.alpha * ci.beta * Mat3::Identity() - ci.A * ci.B),
          Mat3(adjugate(ci.A) - ci.beta * ci.B),
          Mat3(adjugate(ci.B) - ci.alpha * ci.A)};
}

std::string_view to_string(SixClass c) {
  switch (c) {
    case SixClass::null_state: return "NULL";
    case SixClass::separable: return "SEP";
    case SixClass::biseparable: return "BISEP";
    case SixClass::w: return "W";
    case SixClass::ghz: return "GHZ";
  }
  return "?";
}

SixClassReport classify6(const AntisymTensor& t, double tol) {
  SixClassReport r;
  r.tol = tol;
  r.scale = t.max_abs();

  const SixModeCI ci = ci6_from_tensor(t);
  r.D = quartic_D(ci);
  const DualStateCoords dual = dual_state(ci);
  r.dual_norm = tensor_from_ci6(dual).max_abs();
  const Mat6 k = covariant_K(t);
  r.k_norm = k.cwiseAbs().maxCoeff();
  const auto q = q_polynomials(ci);
  for (int i = 0; i < 3; ++i) {
    r.q_norms[size_t(i)] = q[size_t(i)].cwiseAbs().maxCoeff();
  }

  const double s = r.scale;
  if (s == 0.0) {
    r.cls = SixClass::null_state;
  } else if (std::abs(r.D) > tol * std::pow(s, 4)) {
    r.cls = SixClass::ghz;
  } else if (r.dual_norm > tol * std::pow(s, 3)) {
    r.cls = SixClass::w;
  } else if (r.k_norm > tol * s * s) {
    r.cls = SixClass::biseparable;
  } else {
    r.cls = SixClass::separable;
  }
  return r;
}

namespace {

AntisymTensor state_from_terms(
    std::initializer_list<std::pair<std::array<int, 3>, cplx>> terms) {
  AntisymTensor t(3, 6);
  for (const auto& [idx, v] : terms) {
    t.add(std::span<const int>(idx.data(), 3), v);
  }
  return t;
}

}  // namespace

AntisymTensor ghz6() {
  return state_from_terms(
      {{{1, 2, 3}, 1.0}, {{1, 5, 6}, 1.0}, {{4, 2, 6}, 1.0}, {{4, 5, 3}, 1.0}});
}

AntisymTensor w6() {
  return state_from_terms({{{1, 2, 3}, 1.0}, {{1, 5, 6}, 1.0}, {{4, 2, 6}, 1.0}});
}

AntisymTensor bisep6() {
  return state_from_terms({{{1, 2, 3}, 1.0}, {{1, 5, 6}, 1.0}});
}

AntisymTensor sep6() { return state_from_terms({{{1, 2, 3}, 1.0}}); }

}  // namespace fermicc
