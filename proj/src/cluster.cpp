// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/cluster.hpp"

#include <cmath>

namespace fermicc {

namespace {

constexpr int kVirt = 3;  // global index of virtual mode a is a + kVirt

void check_shape(const AntisymTensor& t, int modes, const char* who) {
  if (t.fermions() != 3 || t.modes() != modes) {
    throw std::invalid_argument(std::string(who) + ": wrong tensor shape");
  }
}

cplx reference_amplitude_checked(const AntisymTensor& t, double tol,
                                 const char* who) {
  std::array<int, 4> ref{1, 2, 3, 4};
  const auto span = std::span<const int>(ref.data(), size_t(t.fermions()));
  const cplx alpha = t.get(span);
  if (std::abs(alpha) <= tol * t.max_abs()) {
    const auto hint = suggest_reference_modes(t);
    std::string msg = std::string(who) +
                      ": vanishing reference amplitude psi_{1..n}; largest "
                      "amplitude sits on modes (";
    for (int k = 0; k < t.fermions(); ++k) {
      if (k > 0) msg += ", ";
      msg += std::to_string(hint[size_t(k)]);
    }
    msg += ") - relabel those as occupied";
    throw reference_deficient_error(msg);
  }
  return alpha;
}

}  // namespace

SixModeCI ci6_from_tensor(const AntisymTensor& t) {
  check_shape(t, 6, "ci6_from_tensor");
  SixModeCI ci;
  ci.alpha = t.get(1, 2, 3);
  ci.beta = t.get(4, 5, 6);
  for (int i = 1; i <= 3; ++i) {
    for (int a = 1; a <= 3; ++a) {
      // B^i_a = (1/2) eps^{ijk} psi_{jka}: (i j k) cyclic picks one term twice
      const int j = i % 3 + 1;
      const int k = j % 3 + 1;
      ci.B(i - 1, a - 1) = t.get(j, k, a + kVirt);
      const int b = a % 3 + 1;
      const int c = b % 3 + 1;
      ci.A(a - 1, i - 1) = t.get(b + kVirt, c + kVirt, i);
    }
  }
  return ci;
}

AntisymTensor tensor_from_ci6(const SixModeCI& ci) {
  AntisymTensor t(3, 6);
  t.set(1, 2, 3, ci.alpha);
  t.set(4, 5, 6, ci.beta);
  for (int i = 1; i <= 3; ++i) {
    const int j = i % 3 + 1;
    const int k = j % 3 + 1;
    for (int a = 1; a <= 3; ++a) {
      t.set(j, k, a + kVirt, ci.B(i - 1, a - 1));
      const int b = a % 3 + 1;
      const int c = b % 3 + 1;
      t.set(b + kVirt, c + kVirt, i, ci.A(a - 1, i - 1));
    }
  }
  return t;
}

SevenModeCI ci7_from_tensor(const AntisymTensor& t) {
  check_shape(t, 7, "ci7_from_tensor");
  SevenModeCI ci;
  ci.alpha = t.get(1, 2, 3);
  ci.beta = t.get(4, 5, 6);
  for (int i = 1; i <= 3; ++i) {
    const int j = i % 3 + 1;
    const int k = j % 3 + 1;
    for (int a = 1; a <= 3; ++a) {
      ci.B(i - 1, a - 1) = t.get(j, k, a + kVirt);
      const int b = a % 3 + 1;
      const int c = b % 3 + 1;
      ci.A(a - 1, i - 1) = t.get(b + kVirt, c + kVirt, i);
      ci.D(i - 1, a - 1) = t.get(i, a + kVirt, 7);
    }
  }
  Mat3 e = Mat3::Zero();
  Mat3 f = Mat3::Zero();
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      if (p == q) continue;
      e(p - 1, q - 1) = t.get(p, q, 7);
      f(p - 1, q - 1) = t.get(p + kVirt, q + kVirt, 7);
    }
  }
  ci.E = AntisymMat3::from_matrix(e);
  ci.F = AntisymMat3::from_matrix(f);
  return ci;
}

AntisymTensor tensor_from_ci7(const SevenModeCI& ci) {
  AntisymTensor t(3, 7);
  t.set(1, 2, 3, ci.alpha);
  t.set(4, 5, 6, ci.beta);
  const Mat3 e = ci.E.matrix();
  const Mat3 f = ci.F.matrix();
  for (int i = 1; i <= 3; ++i) {
    const int j = i % 3 + 1;
    const int k = j % 3 + 1;
    for (int a = 1; a <= 3; ++a) {
      t.set(j, k, a + kVirt, ci.B(i - 1, a - 1));
      const int b = a % 3 + 1;
      const int c = b % 3 + 1;
      t.set(b + kVirt, c + kVirt, i, ci.A(a - 1, i - 1));
      t.set(i, a + kVirt, 7, ci.D(i - 1, a - 1));
    }
  }
  for (int p = 1; p <= 3; ++p) {
    for (int q = p + 1; q <= 3; ++q) {
      t.set(p, q, 7, e(p - 1, q - 1));
      t.set(p + kVirt, q + kVirt, 7, f(p - 1, q - 1));
    }
  }
  return t;
}

SixModeCI ci6_from_tensor_normalized(const AntisymTensor& t, double tol) {
  const cplx alpha =
      reference_amplitude_checked(t, tol, "ci6_from_tensor_normalized");
  SixModeCI ci = ci6_from_tensor(t);
  ci.alpha = cplx(1.0);
  ci.A /= alpha;
  ci.B /= alpha;
  ci.beta /= alpha;
  return ci;
}

SevenModeCI ci7_from_tensor_normalized(const AntisymTensor& t, double tol) {
  const cplx alpha =
      reference_amplitude_checked(t, tol, "ci7_from_tensor_normalized");
  SevenModeCI ci = ci7_from_tensor(t);
  ci.alpha = cplx(1.0);
  ci.A /= alpha;
  ci.B /= alpha;
  ci.D /= alpha;
  ci.E.v /= alpha;
  ci.F.v /= alpha;
  ci.beta /= alpha;
  return ci;
}

std::array<int, 4> suggest_reference_modes(const AntisymTensor& t) {
  int best = 0;
  double best_abs = -1.0;
  for (int k = 0; k < t.component_count(); ++k) {
    const double a = std::abs(t.amplitudes()[size_t(k)]);
    if (a > best_abs) {
      best_abs = a;
      best = k;
    }
  }
  std::array<int, 4> out{};
  const auto tup = t.tuple(best);
  std::copy(tup.begin(), tup.end(), out.begin());
  return out;
}

namespace {

void check_normalized(cplx alpha, double tol, const char* who) {
  if (std::abs(alpha - cplx(1.0)) > tol) {
    throw std::invalid_argument(
        std::string(who) +
        ": dictionary requires intermediate normalization alpha = 1");
  }
}

}  // namespace

SixModeCC cc6_from_ci6(const SixModeCI& ci, double tol) {
  check_normalized(ci.alpha, tol * std::max(1.0, std::abs(ci.alpha)),
                   "cc6_from_ci6");
  SixModeCC cc;
  cc.Y = ci.B;
  cc.X = ci.A - adjugate(ci.B);
  cc.xi = ci.beta - ci.B.determinant() - (cc.X * cc.Y).trace();
  return cc;
}

SixModeCI ci6_from_cc6(const SixModeCC& cc) {
  SixModeCI ci;
  ci.B = cc.Y;
  ci.A = adjugate(cc.Y) + cc.X;
  ci.beta = cc.Y.determinant() + (cc.X * cc.Y).trace() + cc.xi;
  return ci;
}

SevenModeCC cc7_from_ci7(const SevenModeCI& ci, double tol) {
  check_normalized(ci.alpha, tol * std::max(1.0, std::abs(ci.alpha)),
                   "cc7_from_ci7");
  SevenModeCC cc;
  cc.Y = ci.B;
  cc.V = ci.E;
  cc.X = ci.A - adjugate(ci.B);
  cc.xi = ci.beta - ci.B.determinant() - (cc.X * cc.Y).trace();
  cc.Z = ci.D - ci.E.matrix() * ci.B;
  const Mat3 yz_cross = cc.Y.transpose() * cc.Z - cc.Z.transpose() * cc.Y;
  const Vec3 av = ci.A * cc.V.v;  // A = X + Y#
  cc.U = AntisymMat3::from_matrix(ci.F.matrix() - yz_cross -
                                  AntisymMat3::from_vector(av).matrix());
  return cc;
}

SevenModeCI ci7_from_cc7(const SevenModeCC& cc) {
  SevenModeCI ci;
  ci.B = cc.Y;
  ci.E = cc.V;
  ci.A = cc.X + adjugate(cc.Y);
  ci.beta = cc.xi + (cc.X * cc.Y).trace() + cc.Y.determinant();
  ci.D = cc.Z + cc.V.matrix() * cc.Y;
  const Mat3 yz_cross = cc.Y.transpose() * cc.Z - cc.Z.transpose() * cc.Y;
  const Vec3 av = ci.A * cc.V.v;
  ci.F = AntisymMat3::from_matrix(cc.U.matrix() + yz_cross +
                                  AntisymMat3::from_vector(av).matrix());
  return ci;
}

// ===== cluster operator builders =====

namespace {

using oracle::ClusterMonomial;
using oracle::ClusterOperator;
using oracle::make_monomial;
using oracle::ModeOp;

void push_term(ClusterOperator& op, cplx coef,
               std::initializer_list<std::pair<ModeOp, int>> seq) {
  if (coef == cplx(0.0)) return;
  op.terms.push_back(make_monomial(
      coef, std::span<const std::pair<ModeOp, int>>(seq.begin(), seq.size())));
}

// T1 = Y^i_a p^a n_i (+ v^i p^{4bar} n_i for seven modes)
ClusterOperator singles_impl(const Mat3& y, const Vec3* v) {
  ClusterOperator op;
  for (int i = 1; i <= 3; ++i) {
    for (int a = 1; a <= 3; ++a) {
      push_term(op, y(i - 1, a - 1),
                {{ModeOp::create, a + kVirt}, {ModeOp::annihilate, i}});
    }
    if (v != nullptr) {
      push_term(op, (*v)(i - 1),
                {{ModeOp::create, 7}, {ModeOp::annihilate, i}});
    }
  }
  return op;
}

// T2 = (1/4) T_{ab}^{ij} p^a n_i p^b n_j with T_{bc}^{jk} = eps_{abc} eps^{ijk}
// X^a_i and, when z is given, T_{a 4bar}^{ij} = eps^{ijk} Z_{ka}. The (1/4)
// sum over ordered pairs collapses to one literal term per unordered pair.
ClusterOperator doubles_impl(const Mat3& x, const Mat3* z) {
  ClusterOperator op;
  for (int a = 1; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
          cplx t_ab_ij(0.0);
          for (int c = 1; c <= 3; ++c) {
            for (int k = 1; k <= 3; ++k) {
              const int ea = levi_civita({c, a, b});
              const int ei = levi_civita({k, i, j});
              if (ea == 0 || ei == 0) continue;
              t_ab_ij += double(ea * ei) * x(c - 1, k - 1);
            }
          }
          push_term(op, t_ab_ij,
                    {{ModeOp::create, a + kVirt},
                     {ModeOp::annihilate, i},
                     {ModeOp::create, b + kVirt},
                     {ModeOp::annihilate, j}});
        }
      }
    }
  }
  if (z != nullptr) {
    for (int a = 1; a <= 3; ++a) {
      for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
          cplx t(0.0);
          for (int k = 1; k <= 3; ++k) {
            const int ei = levi_civita({i, j, k});
            if (ei == 0) continue;
            t += double(ei) * (*z)(k - 1, a - 1);
          }
          push_term(op, t,
                    {{ModeOp::create, a + kVirt},
                     {ModeOp::annihilate, i},
                     {ModeOp::create, 7},
                     {ModeOp::annihilate, j}});
        }
      }
    }
  }
  return op;
}

// T3 = (1/3!) T_{abc}^{123} p^a n_1 p^b n_2 p^c n_3; the totally antisymmetric
// triples array has components (1bar 2bar 3bar) = xi and (a b 4bar) = U_ab,
// and the ordered sum collapses to one term per unordered virtual triple.
ClusterOperator triples_impl(cplx xi, const Vec3* u) {
  ClusterOperator op;
  push_term(op, xi,
            {{ModeOp::create, 4},
             {ModeOp::annihilate, 1},
             {ModeOp::create, 5},
             {ModeOp::annihilate, 2},
             {ModeOp::create, 6},
             {ModeOp::annihilate, 3}});
  if (u != nullptr) {
    const Mat3 um = AntisymMat3::from_vector(*u).matrix();
    for (int a = 1; a <= 3; ++a) {
      for (int b = a + 1; b <= 3; ++b) {
        push_term(op, um(a - 1, b - 1),
                  {{ModeOp::create, a + kVirt},
                   {ModeOp::annihilate, 1},
                   {ModeOp::create, b + kVirt},
                   {ModeOp::annihilate, 2},
                   {ModeOp::create, 7},
                   {ModeOp::annihilate, 3}});
      }
    }
  }
  return op;
}

}  // namespace

oracle::ClusterOperator singles_operator6(const Mat3& y) {
  return singles_impl(y, nullptr);
}
oracle::ClusterOperator doubles_operator6(const Mat3& x) {
  return doubles_impl(x, nullptr);
}
oracle::ClusterOperator triples_operator6(cplx xi) {
  return triples_impl(xi, nullptr);
}
oracle::ClusterOperator singles_operator7(const Mat3& y, const Vec3& v) {
  return singles_impl(y, &v);
}
oracle::ClusterOperator doubles_operator7(const Mat3& x, const Mat3& z) {
  return doubles_impl(x, &z);
}
oracle::ClusterOperator triples_operator7(cplx xi, const Vec3& u) {
  return triples_impl(xi, &u);
}

namespace {

AntisymTensor exp_state(const oracle::ClusterOperator& t, const ModeSplit& split) {
  oracle::FockVector hf = oracle::fock_from_tensor(
      AntisymTensor::reference(split.fermions, split.modes));
  return oracle::tensor_from_fock(oracle::exp_cluster(hf, t, split),
                                  split.fermions);
}

oracle::ClusterOperator concat(oracle::ClusterOperator a,
                               const oracle::ClusterOperator& b,
                               const oracle::ClusterOperator& c) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  a.terms.insert(a.terms.end(), c.terms.begin(), c.terms.end());
  return a;
}

}  // namespace

AntisymTensor cc_exponential_state(const SixModeCC& cc) {
  return exp_state(concat(singles_operator6(cc.Y), doubles_operator6(cc.X),
                          triples_operator6(cc.xi)),
                   ModeSplit::six());
}

AntisymTensor cc_exponential_state(const SevenModeCC& cc) {
  return exp_state(concat(singles_operator7(cc.Y, cc.V.v),
                          doubles_operator7(cc.X, cc.Z),
                          triples_operator7(cc.xi, cc.U.v)),
                   ModeSplit::seven());
}

AntisymTensor brueckner_state(const Mat3& y) {
  std::array<Eigen::VectorXcd, 3> rows;
  for (int i = 0; i < 3; ++i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(6);
    v(i) = cplx(1.0);
    for (int a = 0; a < 3; ++a) v(kVirt + a) = y(i, a);
    rows[size_t(i)] = v;
  }
  return wedge(std::span<const Eigen::VectorXcd>(rows.data(), rows.size()));
}

std::pair<AntisymTensor, SloccMatrix> remove_singles(const AntisymTensor& t,
                                                     double tol) {
  const int modes = t.modes();
  if (t.fermions() != 3 || (modes != 6 && modes != 7)) {
    throw std::invalid_argument("remove_singles: need a (3,6) or (3,7) tensor");
  }
  const cplx alpha = reference_amplitude_checked(t, tol, "remove_singles");

  Mat3 y;
  Vec3 v = Vec3::Zero();
  if (modes == 6) {
    y = ci6_from_tensor(t).B / alpha;
  } else {
    const SevenModeCI ci = ci7_from_tensor(t);
    y = ci.B / alpha;
    v = ci.E.v / alpha;
  }

  // exp(-T1) maps p^i -> p^i - Y^i_a p^a - v^i p^7; on amplitudes this is the
  // unit-determinant matrix with S(a, i) = -Y^i_a and S(7, i) = -v^i.
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(modes, modes);
  for (int i = 1; i <= 3; ++i) {
    for (int a = 1; a <= 3; ++a) s(a + kVirt - 1, i - 1) = -y(i - 1, a - 1);
    if (modes == 7) s(6, i - 1) = -v(i - 1);
  }
  SloccMatrix slocc(std::move(s));
  return {slocc_apply(t, slocc), std::move(slocc)};
}

}  // namespace fermicc
