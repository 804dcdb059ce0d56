// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermicc/cluster.hpp"
#include "fermicc/oracle.hpp"
#include "fermicc/rng.hpp"

using namespace fermicc;
using namespace fermicc::oracle;

namespace {

FockVector basis_state(int modes, std::initializer_list<int> occupied) {
  FockVector v = FockVector::vacuum(modes);
  for (auto it = std::rbegin(occupied); it != std::rend(occupied); ++it) {
    v = apply_mode_op(v, ModeOp::create, *it);
  }
  return v;
}

double diff(const FockVector& a, const FockVector& b) {
  double m = 0.0;
  for (std::uint32_t mask = 0; mask < a.dim(); ++mask) {
    m = std::max(m, std::abs(a[mask] - b[mask]));
  }
  return m;
}

}  // namespace

TEST_CASE("creation and annihilation basics") {
  FockVector vac = FockVector::vacuum(6);

  // {p^1, n_1} = 1 on the vacuum
  FockVector v = apply_mode_op(vac, ModeOp::create, 1);
  v = apply_mode_op(v, ModeOp::annihilate, 1);
  CHECK(diff(v, vac) == 0.0);

  // (p^1)^2 = 0
  FockVector w = apply_mode_op(vac, ModeOp::create, 1);
  w = apply_mode_op(w, ModeOp::create, 1);
  CHECK(w.is_zero());

  // p^2 p^1 |0> = -p^1 p^2 |0>  (rightmost operator acts first)
  FockVector ab = basis_state(6, {1, 2});
  FockVector ba = apply_mode_op(apply_mode_op(vac, ModeOp::create, 1),
                                ModeOp::create, 2);
  ba *= cplx(-1.0);
  CHECK(diff(ab, ba) == 0.0);
}

TEST_CASE("anticommutators as operator identities on the full basis") {
  const int modes = 6;
  for (int mu = 1; mu <= modes; ++mu) {
    for (int nu = 1; nu <= modes; ++nu) {
      for (std::uint32_t mask = 0; mask < (1u << modes); ++mask) {
        FockVector e(modes);
        e[mask] = cplx(1.0);
        // {p^mu, n_nu} = delta^mu_nu
        FockVector pn = apply_mode_op(apply_mode_op(e, ModeOp::annihilate, nu),
                                      ModeOp::create, mu);
        FockVector np = apply_mode_op(apply_mode_op(e, ModeOp::create, mu),
                                      ModeOp::annihilate, nu);
        pn += np;
        FockVector expect(modes);
        if (mu == nu) expect[mask] = cplx(1.0);
        CHECK(diff(pn, expect) == 0.0);
      }
    }
  }
}

TEST_CASE("exponential of cluster operators") {
  const FockVector hf = fock_from_tensor(AntisymTensor::reference(3, 6));

  SUBCASE("zero operator is the identity") {
    ClusterOperator t;
    CHECK(diff(exp_cluster(hf, t, ModeSplit::six()), hf) == 0.0);
  }

  SUBCASE("pure triples adds one amplitude") {
    const cplx xi(0.7, -0.3);
    FockVector v = exp_cluster(hf, triples_operator6(xi), ModeSplit::six());
    AntisymTensor t = tensor_from_fock(v, 3);
    CHECK(t.get(1, 2, 3) == cplx(1.0));
    CHECK(std::abs(t.get(4, 5, 6) - xi) < 1e-15);
    CHECK(t.norm() == doctest::Approx(std::sqrt(1.0 + std::norm(xi))));
  }

  SUBCASE("cubed singles produce det Y on the top amplitude") {
    Rng rng(21);
    const Mat3 y = rng.gauss_mat3();
    AntisymTensor t =
        tensor_from_fock(exp_cluster(hf, singles_operator6(y), ModeSplit::six()), 3);
    CHECK(std::abs(t.get(4, 5, 6) - y.determinant()) < 1e-14);
  }

  SUBCASE("singles-doubles cross term produces tr(XY)") {
    Rng rng(22);
    const Mat3 y = rng.gauss_mat3();
    const Mat3 x = rng.gauss_mat3();
    ClusterOperator t = singles_operator6(y);
    const ClusterOperator d = doubles_operator6(x);
    t.terms.insert(t.terms.end(), d.terms.begin(), d.terms.end());
    AntisymTensor out = tensor_from_fock(exp_cluster(hf, t, ModeSplit::six()), 3);
    const cplx expect = y.determinant() + (x * y).trace();
    CHECK(std::abs(out.get(4, 5, 6) - expect) < 1e-14);
  }

  SUBCASE("commuting factors: exp(T1+T2+T3) = exp(T1) exp(T2) exp(T3)") {
    Rng rng(23);
    const Mat3 y = rng.gauss_mat3();
    const Mat3 x = rng.gauss_mat3();
    const cplx xi = rng.cgauss();
    const ClusterOperator s = singles_operator6(y);
    const ClusterOperator d = doubles_operator6(x);
    const ClusterOperator tr = triples_operator6(xi);
    ClusterOperator sum = s;
    sum.terms.insert(sum.terms.end(), d.terms.begin(), d.terms.end());
    sum.terms.insert(sum.terms.end(), tr.terms.begin(), tr.terms.end());
    FockVector lhs = exp_cluster(hf, sum, ModeSplit::six());
    FockVector rhs = exp_cluster(exp_cluster(exp_cluster(hf, tr, ModeSplit::six()), d, ModeSplit::six()), s, ModeSplit::six());
    CHECK(diff(lhs, rhs) < 1e-14);
  }

  SUBCASE("non-excitation operators rejected") {
    ClusterOperator bad;
    const std::array<std::pair<ModeOp, int>, 2> seq{
        std::pair{ModeOp::create, 2}, std::pair{ModeOp::annihilate, 1}};
    bad.terms.push_back(
        make_monomial(cplx(1.0), std::span<const std::pair<ModeOp, int>>(seq)));
    CHECK_THROWS_AS((void)exp_cluster(hf, bad, ModeSplit::six()), std::invalid_argument);
  }
}

TEST_CASE("brute covariants on fixed states") {
  SUBCASE("zero tensor") {
    AntisymTensor z(3, 6);
    CHECK(brute_covariant_K(z).cwiseAbs().maxCoeff() == 0.0);
    AntisymTensor z7(3, 7);
    CHECK(brute_covariant_N(z7).cwiseAbs().maxCoeff() == 0.0);
    CHECK(brute_covariant_L(z7).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("doubles-generated dense-orbit state has N = -6 I") {
    // p^{123} - p^{1 2b 3b} - p^{2 3b 1b} - p^{3 1b 2b}
    // + p^{1 1b 4b} + p^{2 2b 4b} + p^{3 3b 4b}
    AntisymTensor t(3, 7);
    t.set(1, 2, 3, cplx(1.0));
    t.set(1, 5, 6, cplx(-1.0));
    t.set(2, 6, 4, cplx(-1.0));
    t.set(3, 4, 5, cplx(-1.0));
    t.set(1, 4, 7, cplx(1.0));
    t.set(2, 5, 7, cplx(1.0));
    t.set(3, 6, 7, cplx(1.0));
    const Mat7 n = brute_covariant_N(t);
    CHECK((n + 6.0 * Mat7::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    const Mat7 l = brute_covariant_L(t);
    CHECK((l + 24.0 * Mat7::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs((n * l).trace() / 1008.0 - cplx(1.0)) < 1e-12);
  }
}
