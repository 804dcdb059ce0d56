// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/four_eight.hpp"

#include <cmath>

namespace fermicc {

namespace {

constexpr int kVirt = 4;  // virtual mode a (1..4) is global a + 4

// rank of an ordered pair p < q drawn from 1..4
int pair_rank(int p, int q) {
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[p - 1][q - 1];
}

}  // namespace

cplx DoublesAmplitudes48::get(int a, int b, int i, int j) const {
  if (a == b || i == j) return cplx(0.0);
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  return sign * tab_[size_t(pair_rank(a, b))][size_t(pair_rank(i, j))];
}

void DoublesAmplitudes48::set(int a, int b, int i, int j, cplx value) {
  if (a == b || i == j) {
    throw std::invalid_argument("DoublesAmplitudes48: repeated pair index");
  }
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  tab_[size_t(pair_rank(a, b))][size_t(pair_rank(i, j))] = sign * value;
}

DoublesAmplitudes48 closed_orbit_doubles(const ClosedOrbitParams& p) {
  DoublesAmplitudes48 t;
  t.set(1, 2, 1, 2, p.a);
  t.set(3, 4, 3, 4, p.a);
  t.set(1, 2, 3, 4, p.b);
  t.set(3, 4, 1, 2, p.b);
  t.set(1, 3, 1, 3, p.c);
  t.set(2, 4, 2, 4, p.c);
  t.set(2, 4, 1, 3, p.d);
  t.set(1, 3, 2, 4, p.d);
  t.set(1, 4, 1, 4, p.e);
  t.set(2, 3, 2, 3, p.e);
  t.set(2, 3, 1, 4, p.f);
  t.set(1, 4, 2, 3, p.f);
  return t;
}

namespace {

oracle::ClusterOperator doubles_operator48(const DoublesAmplitudes48& t2) {
  using oracle::ModeOp;
  oracle::ClusterOperator op;
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
          const cplx coef = t2.get(a, b, i, j);
          if (coef == cplx(0.0)) continue;
          const std::array<std::pair<ModeOp, int>, 4> seq{
              std::pair{ModeOp::create, a + kVirt},
              std::pair{ModeOp::annihilate, i},
              std::pair{ModeOp::create, b + kVirt},
              std::pair{ModeOp::annihilate, j}};
          op.terms.push_back(oracle::make_monomial(
              coef, std::span<const std::pair<ModeOp, int>>(seq)));
        }
      }
    }
  }
  return op;
}

}  // namespace

AntisymTensor t2_state_48(const DoublesAmplitudes48& t2) {
  const oracle::FockVector ref =
      oracle::fock_from_tensor(AntisymTensor::reference(4, 8));
  return oracle::tensor_from_fock(
      oracle::exp_cluster(ref, doubles_operator48(t2), ModeSplit::four_eight()),
      4);
}

AntisymTensor t2_state_48_expanded(const DoublesAmplitudes48& t2) {
  AntisymTensor t(4, 8);
  t.set(1, 2, 3, 4, cplx(1.0));

  // T2|ref>: (1/2)(T^{12} p^{34} + T^{34} p^{12} - T^{13} p^{24}
  //   - T^{24} p^{13} + T^{14} p^{23} + T^{23} p^{14}) p^{ab}
  struct Pattern {
    int i, j;    // occupied pair written in p^{ij}
    int si, sj;  // superscript pair of T
    double sign;
  };
  static constexpr Pattern patterns[] = {
      {3, 4, 1, 2, +1.0}, {1, 2, 3, 4, +1.0}, {2, 4, 1, 3, -1.0},
      {1, 3, 2, 4, -1.0}, {2, 3, 1, 4, +1.0}, {1, 4, 2, 3, +1.0}};
  for (const Pattern& p : patterns) {
    for (int a = 1; a <= 4; ++a) {
      for (int b = a + 1; b <= 4; ++b) {
        const cplx coef = p.sign * t2.get(a, b, p.si, p.sj);
        if (coef == cplx(0.0)) continue;
        const std::array<int, 4> idx{p.i, p.j, a + kVirt, b + kVirt};
        t.add(std::span<const int>(idx), coef);
      }
    }
  }

  // (1/2) T2^2 |ref>: quadruple coefficient
  // (1/4)(T_{ab}^{12} T_{cd}^{34} - T_{ab}^{13} T_{cd}^{24}
  //   + T_{ab}^{14} T_{cd}^{23}) eps^{abcd} on p^{1bar 2bar 3bar 4bar}.
  cplx quad(0.0);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      for (int c = 1; c <= 4; ++c) {
        for (int d = 1; d <= 4; ++d) {
          const int eps = levi_civita({a, b, c, d});
          if (eps == 0) continue;
          quad += 0.25 * double(eps) *
                  (t2.get(a, b, 1, 2) * t2.get(c, d, 3, 4) -
                   t2.get(a, b, 1, 3) * t2.get(c, d, 2, 4) +
                   t2.get(a, b, 1, 4) * t2.get(c, d, 2, 3));
        }
      }
    }
  }
  t.set(5, 6, 7, 8, quad);
  return t;
}

cplx quadruple_coefficient(const ClosedOrbitParams& p) {
  const AntisymTensor t = t2_state_48(closed_orbit_doubles(p));
  return t.get(5, 6, 7, 8);
}

std::array<AntisymTensor, 7> p_basis() {
  const auto make = [](std::initializer_list<std::pair<std::array<int, 4>, double>>
                           terms) {
    AntisymTensor t(4, 8);
    for (const auto& [idx, v] : terms) {
      t.set(std::span<const int>(idx.data(), 4), cplx(v));
    }
    return t;
  };
  return {
      make({{{1, 2, 3, 4}, 1.0}, {{5, 6, 7, 8}, 1.0}}),   // ref + quadruple
      make({{{1, 3, 5, 7}, 1.0}, {{2, 4, 6, 8}, 1.0}}),   // 13 1b3b + 24 2b4b
      make({{{1, 2, 5, 6}, 1.0}, {{3, 4, 7, 8}, 1.0}}),   // 12 1b2b + 34 3b4b
      make({{{1, 3, 6, 8}, 1.0}, {{2, 4, 5, 7}, 1.0}}),   // 13 2b4b + 24 1b3b
      make({{{1, 4, 5, 8}, 1.0}, {{2, 3, 6, 7}, 1.0}}),   // 14 1b4b + 23 2b3b
      make({{{1, 4, 6, 7}, -1.0}, {{2, 3, 5, 8}, -1.0}}), // -(14 2b3b) - (23 1b4b)
      make({{{1, 2, 7, 8}, -1.0}, {{3, 4, 5, 6}, -1.0}}), // -(12 3b4b) - (34 1b2b)
  };
}

MembershipReport subspace_membership(const AntisymTensor& t) {
  if (t.fermions() != 4 || t.modes() != 8) {
    throw std::invalid_argument("subspace_membership: need a (4,8) tensor");
  }
  const double tnorm = t.norm();
  if (tnorm == 0.0) {
    throw std::invalid_argument("subspace_membership: zero state");
  }
  const auto basis = p_basis();
  const int dim = t.component_count();
  Eigen::MatrixXcd a(dim, 7);
  Eigen::VectorXcd rhs(dim);
  for (int k = 0; k < dim; ++k) {
    rhs(k) = t.amplitudes()[size_t(k)];
    for (int c = 0; c < 7; ++c) {
      a(k, c) = basis[size_t(c)].amplitudes()[size_t(k)];
    }
  }
  MembershipReport rep;
  rep.coords = a.colPivHouseholderQr().solve(rhs);
  rep.residual = (a * rep.coords - rhs).norm() / tnorm;
  return rep;
}

}  // namespace fermicc
