// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fermicc/perturbation.hpp"
#include "fermicc/rng.hpp"

using namespace fermicc;

namespace {

TriplesPerturbation random_complex_p(Rng& rng, double size = 1.0) {
  TriplesPerturbation p;
  p.xi = size * rng.cgauss();
  p.u = size * rng.gauss_vec3();
  return p;
}

double spectrum_diff(const Vec7& a, const Vec7& b) {
  double m = 0.0;
  for (int i = 0; i < 7; ++i) m = std::max(m, std::abs(a(i) - b(i)));
  return m;
}

}  // namespace

TEST_CASE("base states") {
  SUBCASE("invariant values") {
    CHECK(std::abs(invariant_J(psi_minus()) - cplx(1.0)) < 1e-12);
    CHECK(std::abs(invariant_J(psi_plus()) + cplx(1.0)) < 1e-12);
  }

  SUBCASE("coordinates") {
    const SevenModeCI ci = ci7_from_tensor(psi_minus());
    CHECK(std::abs(ci.alpha - cplx(1.0)) == 0.0);
    CHECK((ci.A + Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((ci.D - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(ci.B.cwiseAbs().maxCoeff() == 0.0);
    CHECK(ci.E.v.cwiseAbs().maxCoeff() == 0.0);
    CHECK(ci.F.v.cwiseAbs().maxCoeff() == 0.0);
    CHECK(ci.beta == cplx(0.0));
    // with Y = V = 0 the CC labels coincide with the CI ones
    const SevenModeCC cc = cc7_from_ci7(ci);
    CHECK((cc.X + Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((cc.Z - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);

    const SevenModeCI cip = ci7_from_tensor(psi_plus());
    CHECK((cip.A - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((cip.D - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("B matrix of the unperturbed state is the identity") {
    CHECK((b_matrix(GhzBase::minus, TriplesPerturbation{}) - Mat7::Identity())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    const auto [n, l] = cc_covariants_NL(perturbed_cc(GhzBase::minus, {}));
    CHECK((-n / 6.0 - Mat7::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("perturbed states") {
  SUBCASE("zero perturbation is the base") {
    CHECK(max_abs_diff(perturb(GhzBase::minus, {}), psi_minus()) == 0.0);
    CHECK(max_abs_diff(perturb(GhzBase::plus, {}), psi_plus()) == 0.0);
  }

  SUBCASE("perturbation equals the triples of the CC coordinates") {
    Rng rng(91);
    for (int k = 0; k < 10; ++k) {
      const TriplesPerturbation p = random_complex_p(rng);
      for (GhzBase base : {GhzBase::minus, GhzBase::plus}) {
        CHECK(max_abs_diff(perturb(base, p),
                           cc_exponential_state(perturbed_cc(base, p))) <
              1e-14);
      }
    }
  }

  SUBCASE("J along the minus family: 1 - Q^2/4 by three routes") {
    Rng rng(92);
    for (int k = 0; k < 25; ++k) {
      const TriplesPerturbation p = random_complex_p(rng);
      const cplx expect = cplx(1.0) - 0.25 * q_squared(p);
      const cplx via_cc = invariant_J_cc(perturbed_cc(GhzBase::minus, p));
      const cplx via_tensor = invariant_J(perturb(GhzBase::minus, p));
      CHECK(std::abs(via_cc - expect) < 1e-10 * std::max(1.0, std::abs(expect)));
      CHECK(std::abs(via_tensor - expect) <
            1e-10 * std::max(1.0, std::abs(expect)));
    }
  }

  SUBCASE("J along the plus family: -(1 + Q^2/4)") {
    Rng rng(93);
    for (int k = 0; k < 25; ++k) {
      const TriplesPerturbation p = random_complex_p(rng);
      const cplx expect = -(cplx(1.0) + 0.25 * q_squared(p));
      CHECK(std::abs(invariant_J_cc(perturbed_cc(GhzBase::plus, p)) - expect) <
            1e-10 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("B matrix and its spectrum") {
  SUBCASE("closed block form equals -N/6 of the full tensor") {
    Rng rng(94);
    for (int k = 0; k < 20; ++k) {
      const TriplesPerturbation p = random_complex_p(rng);
      for (GhzBase base : {GhzBase::minus, GhzBase::plus}) {
        const Mat7 b = b_matrix(base, p);
        const Mat7 n = covariants7(perturb(base, p)).N;
        CHECK((b + n / 6.0).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }

  SUBCASE("spectrum formulas at 200 random complex points") {
    Rng rng(95);
    for (int k = 0; k < 200; ++k) {
      const TriplesPerturbation p = random_complex_p(rng);
      for (GhzBase base : {GhzBase::minus, GhzBase::plus}) {
        CHECK(spectrum_diff(b_spectrum(base, p),
                            b_spectrum_predicted(base, p)) < 1e-8);
      }
    }
  }

  SUBCASE("real transition point: spectrum {0 x3, 2 x3, 1} and rank 4") {
    TriplesPerturbation p;
    p.xi = cplx(2.0);
    const Vec7 s = b_spectrum(GhzBase::minus, p);
    Vec7 expect;
    expect << 0.0, 0.0, 0.0, 1.0, 2.0, 2.0, 2.0;
    CHECK(spectrum_diff(s, expect) < 1e-12);
    const auto recs = sweep(GhzBase::minus, std::array{p});
    CHECK(recs[0].rank_N == 4);
    CHECK(recs[0].cls == "IX");
  }

  SUBCASE("complex probe on the plus family drops the rank to 4") {
    TriplesPerturbation p;
    p.xi = cplx(0.0, 2.0);
    const auto recs = sweep(GhzBase::plus, std::array{p});
    CHECK(recs[0].rank_N == 4);
    CHECK(recs[0].cls == "IX");
    CHECK(std::abs(recs[0].J) < 1e-12);
  }

  SUBCASE("explicit congruence diagonalizes away from Q = 0") {
    Rng rng(96);
    int used = 0;
    while (used < 50) {
      const TriplesPerturbation p = random_complex_p(rng);
      if (std::abs(std::sqrt(q_squared(p))) < 0.3) continue;
      ++used;
      CHECK(b_congruence_offdiag(p) < 1e-10);
    }
  }
}

TEST_CASE("conifold residual") {
  CHECK(conifold_residual(TriplesPerturbation{}, 0.0) == cplx(0.0));
  TriplesPerturbation p;
  p.xi = cplx(2.0);
  CHECK(conifold_residual(p, 2.0) == cplx(0.0));

  // random complex points on the Q0 = 2 locus leave the dense orbit into IX
  Rng rng(97);
  for (int k = 0; k < 25; ++k) {
    TriplesPerturbation q;
    q.u = rng.gauss_vec3();
    const cplx uu = q.u(0) * q.u(0) + q.u(1) * q.u(1) + q.u(2) * q.u(2);
    q.xi = std::sqrt(cplx(4.0) - uu);
    REQUIRE(std::abs(conifold_residual(q, 2.0)) < 1e-12);
    const auto recs = sweep(GhzBase::minus, std::array{q});
    CHECK(recs[0].rank_N == 4);
    CHECK(recs[0].cls == "IX");
  }
}

TEST_CASE("sweeps") {
  SUBCASE("real ray on the minus family transitions exactly at 2") {
    std::vector<TriplesPerturbation> path;
    for (int k = 0; k <= 30; ++k) {
      TriplesPerturbation p;
      p.xi = cplx(0.1 * k);
      path.push_back(p);
    }
    const auto recs = sweep(GhzBase::minus, path);
    for (int k = 0; k <= 30; ++k) {
      // three-way agreement of J at every sweep point
      const cplx formula = cplx(1.0) - 0.25 * recs[size_t(k)].q2;
      CHECK(std::abs(recs[size_t(k)].J - formula) < 1e-10);
      CHECK(std::abs(invariant_J(perturb(GhzBase::minus, path[size_t(k)])) -
                     formula) < 1e-10 * std::max(1.0, std::abs(formula)));
      if (k == 20) {
        CHECK(recs[size_t(k)].cls == "IX");
        CHECK(recs[size_t(k)].rank_N == 4);
      } else {
        CHECK(recs[size_t(k)].cls == "X");
      }
      // ladder consistency: class X exactly when J clears the tolerance
      const double scale = std::max(1.0, std::abs(recs[size_t(k)].p.xi));
      CHECK((recs[size_t(k)].cls == "X") ==
            (std::abs(recs[size_t(k)].J) > 1e-9 * std::pow(scale, 7)));
      // the family only ever shows full rank or the rank-4 collapse
      CHECK((recs[size_t(k)].rank_N == 7 || recs[size_t(k)].rank_N == 4));
      // classifier agreement on the full tensor
      const SevenClassReport full = classify7(perturb(GhzBase::minus, path[size_t(k)]));
      CHECK(std::string(to_string(full.cls)) == recs[size_t(k)].cls);
    }
  }

  SUBCASE("same ray on the plus family never leaves the dense orbit") {
    std::vector<TriplesPerturbation> path;
    for (int k = 0; k <= 30; ++k) {
      TriplesPerturbation p;
      p.xi = cplx(0.1 * k);
      path.push_back(p);
    }
    for (const auto& rec : sweep(GhzBase::plus, path)) {
      CHECK(rec.cls == "X");
      CHECK(std::abs(rec.J + (cplx(1.0) + 0.25 * rec.q2)) < 1e-10);
    }
  }

  SUBCASE("empty path gives an empty table with a header") {
    const auto recs = sweep(GhzBase::minus, std::span<const TriplesPerturbation>{});
    CHECK(recs.empty());
    std::ostringstream os;
    write_sweep_csv(os, recs);
    CHECK(os.str() ==
          "re_xi,im_xi,re_u1,im_u1,re_u2,im_u2,re_u3,im_u3,"
          "re_q2,im_q2,re_J,im_J,rank_N,class\n");
  }
}

TEST_CASE("sphere sampling") {
  const auto a = sphere_samples(2.0, 25, 7);
  const auto b = sphere_samples(2.0, 25, 7);
  REQUIRE(a.size() == 25);
  for (size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].xi == b[k].xi);
    CHECK(a[k].u == b[k].u);
    CHECK(std::abs(q_squared(a[k]) - cplx(4.0)) < 1e-12);
    CHECK(a[k].xi.imag() == 0.0);
  }
  // points on the radius-2 sphere leave the dense orbit
  for (const auto& rec : sweep(GhzBase::minus, a)) {
    CHECK(rec.cls == "IX");
    CHECK(rec.rank_N == 4);
  }
}
