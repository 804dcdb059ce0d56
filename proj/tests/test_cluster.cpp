// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fermicc/cluster.hpp"
#include "fermicc/rng.hpp"
#include "fermicc/six_mode.hpp"

using namespace fermicc;

namespace {

SixModeCC random_cc6(Rng& rng) {
  SixModeCC cc;
  cc.X = rng.gauss_mat3();
  cc.Y = rng.gauss_mat3();
  cc.xi = rng.cgauss();
  return cc;
}

SevenModeCC random_cc7(Rng& rng, bool with_singles = true) {
  SevenModeCC cc;
  cc.X = rng.gauss_mat3();
  cc.Z = rng.gauss_mat3();
  cc.xi = rng.cgauss();
  cc.U = AntisymMat3::from_vector(rng.gauss_vec3());
  if (with_singles) {
    cc.Y = rng.gauss_mat3();
    cc.V = AntisymMat3::from_vector(rng.gauss_vec3());
  }
  return cc;
}

double cc_diff(const SixModeCC& a, const SixModeCC& b) {
  return std::max({(a.X - b.X).cwiseAbs().maxCoeff(),
                   (a.Y - b.Y).cwiseAbs().maxCoeff(), std::abs(a.xi - b.xi)});
}

double cc_diff(const SevenModeCC& a, const SevenModeCC& b) {
  return std::max({(a.X - b.X).cwiseAbs().maxCoeff(),
                   (a.Y - b.Y).cwiseAbs().maxCoeff(),
                   (a.Z - b.Z).cwiseAbs().maxCoeff(),
                   (a.V.v - b.V.v).cwiseAbs().maxCoeff(),
                   (a.U.v - b.U.v).cwiseAbs().maxCoeff(), std::abs(a.xi - b.xi)});
}

}  // namespace

TEST_CASE("six-mode split") {
  SUBCASE("reference determinant") {
    const SixModeCI ci = ci6_from_tensor(AntisymTensor::reference(3, 6));
    CHECK(ci.alpha == cplx(1.0));
    CHECK(ci.A.cwiseAbs().maxCoeff() == 0.0);
    CHECK(ci.B.cwiseAbs().maxCoeff() == 0.0);
    CHECK(ci.beta == cplx(0.0));
  }

  SUBCASE("reference plus top amplitude") {
    AntisymTensor t = AntisymTensor::reference(3, 6);
    t.set(4, 5, 6, cplx(1.0));
    const SixModeCI ci = ci6_from_tensor(t);
    CHECK(ci.alpha == cplx(1.0));
    CHECK(ci.beta == cplx(1.0));
    CHECK(ci.A.cwiseAbs().maxCoeff() == 0.0);
    CHECK(ci.B.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("split is a bijection") {
    Rng rng(31);
    for (int k = 0; k < 50; ++k) {
      const AntisymTensor t = rng.tensor(3, 6);
      CHECK(max_abs_diff(tensor_from_ci6(ci6_from_tensor(t)), t) == 0.0);
    }
  }
}

TEST_CASE("seven-mode split is a bijection") {
  Rng rng(32);
  for (int k = 0; k < 50; ++k) {
    const AntisymTensor t = rng.tensor(3, 7);
    CHECK(max_abs_diff(tensor_from_ci7(ci7_from_tensor(t)), t) < 1e-15);
  }
}

TEST_CASE("six-mode dictionary") {
  SUBCASE("trivial and Y = 0 cases") {
    const SixModeCC cc = cc6_from_ci6(SixModeCI{});
    CHECK(cc.X.cwiseAbs().maxCoeff() == 0.0);
    CHECK(cc.Y.cwiseAbs().maxCoeff() == 0.0);
    CHECK(cc.xi == cplx(0.0));

    Rng rng(33);
    SixModeCI ci;
    ci.A = rng.gauss_mat3();
    ci.beta = rng.cgauss();
    const SixModeCC reduced = cc6_from_ci6(ci);
    CHECK((reduced.X - ci.A).cwiseAbs().maxCoeff() == 0.0);
    CHECK(reduced.Y.cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(reduced.xi - ci.beta) < 1e-15);
  }

  SUBCASE("round trips are algebraically exact") {
    Rng rng(34);
    for (int k = 0; k < 500; ++k) {
      const SixModeCC cc = random_cc6(rng);
      CHECK(cc_diff(cc6_from_ci6(ci6_from_cc6(cc)), cc) < 1e-12);
    }
  }

  SUBCASE("alpha != 1 rejected") {
    SixModeCI ci;
    ci.alpha = cplx(2.0);
    CHECK_THROWS_AS((void)cc6_from_ci6(ci), std::invalid_argument);
  }
}

TEST_CASE("seven-mode dictionary") {
  SUBCASE("Y = V = 0 collapses the two coordinate sets") {
    Rng rng(35);
    const SevenModeCC cc = random_cc7(rng, false);
    const SevenModeCI ci = ci7_from_cc7(cc);
    CHECK((ci.A - cc.X).cwiseAbs().maxCoeff() == 0.0);
    CHECK((ci.D - cc.Z).cwiseAbs().maxCoeff() == 0.0);
    CHECK((ci.F.v - cc.U.v).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(ci.beta - cc.xi) < 1e-15);
  }

  SUBCASE("round trips") {
    Rng rng(36);
    for (int k = 0; k < 500; ++k) {
      const SevenModeCC cc = random_cc7(rng);
      CHECK(cc_diff(cc7_from_ci7(ci7_from_cc7(cc)), cc) < 1e-12);
    }
  }
}

TEST_CASE("exponential state matches the dictionaries") {
  SUBCASE("all operators zero gives the reference") {
    CHECK(max_abs_diff(cc_exponential_state(SixModeCC{}),
                       AntisymTensor::reference(3, 6)) == 0.0);
    CHECK(max_abs_diff(cc_exponential_state(SevenModeCC{}),
                       AntisymTensor::reference(3, 7)) == 0.0);
  }

  SUBCASE("six modes: Fock engine against the algebraic dictionary") {
    Rng rng(37);
    for (int k = 0; k < 500; ++k) {
      const SixModeCC cc = random_cc6(rng);
      const AntisymTensor t = cc_exponential_state(cc);
      const SixModeCC back = cc6_from_ci6(ci6_from_tensor(t));
      CHECK(cc_diff(back, cc) < 1e-10);
    }
  }

  SUBCASE("seven modes: Fock engine against the algebraic dictionary") {
    Rng rng(38);
    for (int k = 0; k < 500; ++k) {
      const SevenModeCC cc = random_cc7(rng);
      const AntisymTensor t = cc_exponential_state(cc);
      const SevenModeCC back = cc7_from_ci7(ci7_from_tensor(t));
      CHECK(cc_diff(back, cc) < 1e-10);
    }
  }
}

TEST_CASE("CI-operator combinations invert the exponential") {
  // T2 = C2 - C1^2/2 and T3 = C3 - C1 C2 + C1^3/3 as coordinate identities:
  // apply the right-hand sides to the reference and read off X and xi.
  Rng rng(39);
  using namespace fermicc::oracle;
  for (int k = 0; k < 20; ++k) {
    SixModeCI ci;
    ci.A = rng.gauss_mat3();
    ci.B = rng.gauss_mat3();
    ci.beta = rng.cgauss();
    const SixModeCC cc = cc6_from_ci6(ci);

    const ClusterOperator c1 = singles_operator6(ci.B);
    const ClusterOperator c2 = doubles_operator6(ci.A);
    const ClusterOperator c3 = triples_operator6(ci.beta);
    const FockVector hf = fock_from_tensor(AntisymTensor::reference(3, 6));

    // doubles block of (C2 - C1^2/2)|ref>
    FockVector d = apply_cluster(hf, c2);
    FockVector c1c1 = apply_cluster(apply_cluster(hf, c1), c1);
    c1c1 *= cplx(-0.5);
    d += c1c1;
    AntisymTensor td = tensor_from_fock(d, 3);
    const Mat3 x_direct = ci6_from_tensor(td).A;
    CHECK((x_direct - cc.X).cwiseAbs().maxCoeff() < 1e-13);

    // top amplitude of (C3 - C1 C2 + C1^3/3)|ref>
    FockVector tr = apply_cluster(hf, c3);
    FockVector c1c2 = apply_cluster(apply_cluster(hf, c2), c1);
    c1c2 *= cplx(-1.0);
    tr += c1c2;
    FockVector c13 = apply_cluster(apply_cluster(apply_cluster(hf, c1), c1), c1);
    c13 *= cplx(1.0 / 3.0);
    tr += c13;
    AntisymTensor tt = tensor_from_fock(tr, 3);
    CHECK(std::abs(tt.get(4, 5, 6) - cc.xi) < 1e-13);
  }
}

TEST_CASE("Brueckner state") {
  SUBCASE("Y = 0 is the reference") {
    CHECK(max_abs_diff(brueckner_state(Mat3::Zero()),
                       AntisymTensor::reference(3, 6)) == 0.0);
  }

  SUBCASE("agrees with exp(T1)|ref> from the Fock engine") {
    Rng rng(40);
    for (int k = 0; k < 20; ++k) {
      const Mat3 y = rng.gauss_mat3();
      SixModeCC cc;
      cc.Y = y;
      CHECK(max_abs_diff(brueckner_state(y), cc_exponential_state(cc)) < 1e-14);
    }
  }

  SUBCASE("classified as separable") {
    Rng rng(41);
    for (int k = 0; k < 20; ++k) {
      CHECK(classify6(brueckner_state(rng.gauss_mat3())).cls ==
            SixClass::separable);
    }
  }
}

TEST_CASE("singles removal") {
  SUBCASE("no singles: identity transformation") {
    Rng rng(42);
    SixModeCC cc = random_cc6(rng);
    cc.Y = Mat3::Zero();
    const AntisymTensor t = cc_exponential_state(cc);
    const auto [tp, s] = remove_singles(t);
    CHECK((s.matrix() - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() ==
          0.0);
    CHECK(max_abs_diff(tp, t) == 0.0);
  }

  SUBCASE("Brueckner state reduces to the reference") {
    Rng rng(43);
    const Mat3 y = rng.gauss_mat3();
    const auto [tp, s] = remove_singles(brueckner_state(y));
    CHECK(max_abs_diff(tp, AntisymTensor::reference(3, 6)) < 1e-12);
    CHECK(std::abs(s.det() - cplx(1.0)) < 1e-14);
  }

  SUBCASE("six modes: kills Y, preserves X, xi and D") {
    Rng rng(44);
    for (int k = 0; k < 50; ++k) {
      const SixModeCC cc = random_cc6(rng);
      const AntisymTensor t = cc_exponential_state(cc);
      const auto [tp, s] = remove_singles(t);
      CHECK(std::abs(s.det() - cplx(1.0)) < 1e-14);
      const SixModeCC reduced = cc6_from_ci6(ci6_from_tensor(tp));
      CHECK(reduced.Y.cwiseAbs().maxCoeff() < 1e-11 * std::max(1.0, tp.max_abs()));
      CHECK((reduced.X - cc.X).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(std::abs(reduced.xi - cc.xi) < 1e-10);
      CHECK(std::abs(quartic_D(ci6_from_tensor(tp)) - quartic_D(ci6_from_tensor(t))) <
            1e-10 * std::max(1.0, std::abs(quartic_D(ci6_from_tensor(t)))));
    }
  }

  SUBCASE("seven modes: kills Y and V, preserves the rest") {
    Rng rng(45);
    for (int k = 0; k < 50; ++k) {
      const SevenModeCC cc = random_cc7(rng);
      const AntisymTensor t = cc_exponential_state(cc);
      const auto [tp, s] = remove_singles(t);
      CHECK(std::abs(s.det() - cplx(1.0)) < 1e-13);
      const SevenModeCC reduced = cc7_from_ci7(ci7_from_tensor(tp));
      const double scale = std::max(1.0, tp.max_abs());
      CHECK(reduced.Y.cwiseAbs().maxCoeff() < 1e-10 * scale);
      CHECK(reduced.V.v.cwiseAbs().maxCoeff() < 1e-10 * scale);
      CHECK((reduced.X - cc.X).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((reduced.Z - cc.Z).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((reduced.U.v - cc.U.v).cwiseAbs().maxCoeff() < 1e-9);
      CHECK(std::abs(reduced.xi - cc.xi) < 1e-9);
    }
  }

  SUBCASE("reference-deficient states are refused with a hint") {
    AntisymTensor t(3, 6);
    t.set(4, 5, 6, cplx(1.0));
    CHECK_THROWS_AS((void)remove_singles(t), reference_deficient_error);
    const auto modes = suggest_reference_modes(t);
    CHECK(modes[0] == 4);
    CHECK(modes[1] == 5);
    CHECK(modes[2] == 6);
  }
}
