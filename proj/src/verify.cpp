// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/verify.hpp"

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fermicc/cluster.hpp"
#include "fermicc/four_eight.hpp"
#include "fermicc/oracle.hpp"
#include "fermicc/perturbation.hpp"
#include "fermicc/rng.hpp"
#include "fermicc/seven_mode.hpp"
#include "fermicc/six_mode.hpp"

namespace fermicc::verify {

namespace {

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

SevenModeCC random_reduced_cc(Rng& rng) {
  SevenModeCC cc;
  cc.X = rng.gauss_mat3();
  cc.Z = rng.gauss_mat3();
  cc.xi = rng.cgauss();
  cc.U = AntisymMat3::from_vector(rng.gauss_vec3());
  return cc;
}

// --- criterion 1: the dense-orbit doubles state has J = 1 three ways -------

CheckResult criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const AntisymTensor psi = psi_minus();

  const Mat7 n_brute = oracle::brute_covariant_N(psi);
  const Mat7 l_brute = oracle::brute_covariant_L(psi);
  const cplx j_brute = (n_brute * l_brute).trace() / 1008.0;
  const double e1 = std::abs(j_brute - cplx(1.0));

  const Mat7 b = (-1.0 / 6.0) * n_brute;
  const double e2 = std::abs(cplx(1.0) - b.determinant());  // J^3 = det B at J = 1

  const cplx j_cc = invariant_J_cc(perturbed_cc(GhzBase::minus, {}));
  const double e3 = std::abs(j_cc - cplx(1.0));

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const bool pass = e1 < 1e-10 && e2 < 1e-10 && e3 < 1e-10 && seconds < 5.0;
  return {1, "J = 1 on the doubles-generated dense-orbit state, three routes",
          pass,
          fmt("|J_contraction-1|=%.2e |detB-1|=%.2e |J_cc-1|=%.2e t=%.2fs", e1,
              e2, e3, seconds)};
}

// --- criterion 2: canonical-class table -------------------------------------

CheckResult criterion_2() {
  const std::array<int, 10> expected_rank{0, 0, 0, 0, 0, 1, 1, 2, 4, 7};
  bool pass = true;
  double min_gap = 1e300;
  std::string bad;
  for (int cls = 1; cls <= 10; ++cls) {
    const SevenClassReport r = classify7(canonical7(cls));
    if (r.rank_N != expected_rank[size_t(cls - 1)]) {
      pass = false;
      bad += fmt(" class %d rank %d", cls, r.rank_N);
    }
    const bool j_big =
        std::abs(r.J) > 1e-9 * std::pow(std::max(1.0, r.scale), 7);
    if (j_big != (cls == 10)) {
      pass = false;
      bad += fmt(" class %d |J|=%.2e", cls, std::abs(r.J));
    }
    if (r.rank_N > 0 && r.rank_N < 7) {
      // exact zeros below the cut are reported as a gap of 1e16
      const double kept = r.singular_values(r.rank_N - 1);
      const double gap =
          kept / std::max(r.singular_values(r.rank_N), 1e-16 * kept);
      min_gap = std::min(min_gap, gap);
    }
  }
  pass = pass && min_gap >= 1e6;
  return {2, "canonical-class table: ranks (0,0,0,0,0,1,1,2,4,7), J only on X",
          pass, fmt("min singular-value gap at rank cut %.1e%s", min_gap,
                    bad.c_str())};
}

// --- criterion 3: six-mode ladder with orbit invariance ---------------------

CheckResult criterion_3() {
  Rng rng(301);
  const std::array<std::pair<AntisymTensor, SixClass>, 4> reps{
      std::pair{ghz6(), SixClass::ghz}, std::pair{w6(), SixClass::w},
      std::pair{bisep6(), SixClass::biseparable},
      std::pair{sep6(), SixClass::separable}};
  int mismatches = 0;
  int total = 0;
  for (const auto& [state, expect] : reps) {
    if (classify6(state, 1e-9).cls != expect) ++mismatches;
    for (int k = 0; k < 50; ++k) {
      ++total;
      if (classify6(slocc_apply(state, rng.gl(6)), 1e-9).cls != expect) {
        ++mismatches;
      }
    }
  }
  return {3, "six-mode ladder on canonical states and 200 random orbits",
          mismatches == 0,
          fmt("%d classifications, %d mismatches", total + 4, mismatches)};
}

// --- criterion 4: transition of the minus family at Q = 2 -------------------

CheckResult criterion_4() {
  Rng rng(401);
  bool pass = true;
  std::string bad;

  // off the sphere: stay in the dense orbit
  int off_checked = 0;
  while (off_checked < 100) {
    const double radius = rng.uniform(0.0, 3.0);
    if (std::abs(radius - 2.0) < 0.05) continue;
    auto pts = sphere_samples(radius, 1, 4000 + off_checked);
    const auto recs = sweep(GhzBase::minus, pts);
    if (recs[0].cls != "X") {
      pass = false;
      bad += fmt(" offQ=%.3f->%s", radius, recs[0].cls.c_str());
    }
    ++off_checked;
  }

  // on the sphere: class IX with rank 4
  const auto on_pts = sphere_samples(2.0, 100, 402);
  for (const auto& rec : sweep(GhzBase::minus, on_pts)) {
    if (rec.cls != "IX" || rec.rank_N != 4) {
      pass = false;
      bad += fmt(" onQ2->%s/r%d", rec.cls.c_str(), rec.rank_N);
    }
  }

  // spectrum law at 200 random complex points
  double max_spec = 0.0;
  for (int k = 0; k < 200; ++k) {
    TriplesPerturbation p;
    p.xi = rng.cgauss();
    p.u = rng.gauss_vec3();
    const Vec7 got = b_spectrum(GhzBase::minus, p);
    const Vec7 want = b_spectrum_predicted(GhzBase::minus, p);
    for (int i = 0; i < 7; ++i) {
      max_spec = std::max(max_spec, std::abs(got(i) - want(i)));
    }
  }
  pass = pass && max_spec < 1e-8;
  return {4, "minus family: dense orbit off the Q=2 sphere, rank-4 drop on it",
          pass,
          fmt("100 off + 100 on sphere, spectrum err %.2e%s", max_spec,
              bad.c_str())};
}

// --- criterion 5: protection of the plus family under real triples ----------

CheckResult criterion_5() {
  Rng rng(501);
  std::vector<TriplesPerturbation> pts;
  pts.reserve(10000);
  for (int k = 0; k < 10000; ++k) {
    TriplesPerturbation p;
    p.xi = cplx(rng.uniform(-3.0, 3.0));
    p.u = Vec3(cplx(rng.uniform(-3.0, 3.0)), cplx(rng.uniform(-3.0, 3.0)),
               cplx(rng.uniform(-3.0, 3.0)));
    pts.push_back(p);
  }
  int leaves = 0;
  double max_err = 0.0;
  for (const auto& rec : sweep(GhzBase::plus, pts)) {
    if (rec.cls != "X") ++leaves;
    max_err = std::max(
        max_err, std::abs(rec.J + (cplx(1.0) + 0.25 * rec.q2)));
  }
  TriplesPerturbation probe;
  probe.xi = cplx(0.0, 2.0);
  const int probe_rank = sweep(GhzBase::plus, std::array{probe})[0].rank_N;
  const bool pass = leaves == 0 && max_err < 1e-10 && probe_rank == 4;
  return {5, "plus family: 10^4 real draws never leave the dense orbit", pass,
          fmt("departures %d, max |J+(1+Q^2/4)| %.2e, probe(2i) rank %d",
              leaves, max_err, probe_rank)};
}

// --- criterion 6: relative invariance weights -------------------------------

CheckResult criterion_6() {
  Rng rng(601);
  double max_d = 0.0;
  for (int k = 0; k < 100; ++k) {
    const AntisymTensor t = rng.tensor(3, 6);
    const SloccMatrix s = rng.gl(6);
    const cplx want = s.det() * s.det() * quartic_D(ci6_from_tensor(t));
    max_d = std::max(max_d, rel_err(quartic_D(ci6_from_tensor(slocc_apply(t, s))), want));
  }
  double max_j = 0.0;
  for (int k = 0; k < 100; ++k) {
    const AntisymTensor t = rng.tensor(3, 7);
    const SloccMatrix s = rng.gl(7);
    const cplx want = s.det() * s.det() * s.det() * invariant_J(t);
    max_j = std::max(max_j, rel_err(invariant_J(slocc_apply(t, s)), want));
  }
  const bool pass = max_d < 1e-8 && max_j < 1e-8;
  return {6, "invariants scale with det^2 (six modes) and det^3 (seven)", pass,
          fmt("100+100 GL transforms, rel err D %.2e, J %.2e", max_d, max_j)};
}

// --- criterion 7: dictionary fidelity and singles removal -------------------

CheckResult criterion_7() {
  Rng rng(701);
  double max6 = 0.0;
  for (int k = 0; k < 500; ++k) {
    SixModeCC cc;
    cc.X = rng.gauss_mat3();
    cc.Y = rng.gauss_mat3();
    cc.xi = rng.cgauss();
    const SixModeCC back =
        cc6_from_ci6(ci6_from_tensor(cc_exponential_state(cc)));
    max6 = std::max({max6, (back.X - cc.X).cwiseAbs().maxCoeff(),
                     (back.Y - cc.Y).cwiseAbs().maxCoeff(),
                     std::abs(back.xi - cc.xi)});
  }
  double max7 = 0.0;
  for (int k = 0; k < 500; ++k) {
    SevenModeCC cc = random_reduced_cc(rng);
    cc.Y = rng.gauss_mat3();
    cc.V = AntisymMat3::from_vector(rng.gauss_vec3());
    const SevenModeCC back =
        cc7_from_ci7(ci7_from_tensor(cc_exponential_state(cc)));
    max7 = std::max({max7, (back.X - cc.X).cwiseAbs().maxCoeff(),
                     (back.Y - cc.Y).cwiseAbs().maxCoeff(),
                     (back.Z - cc.Z).cwiseAbs().maxCoeff(),
                     (back.V.v - cc.V.v).cwiseAbs().maxCoeff(),
                     (back.U.v - cc.U.v).cwiseAbs().maxCoeff(),
                     std::abs(back.xi - cc.xi)});
  }

  // singles removal: structural unit determinant, invariants untouched
  bool det_exact = true;
  double max_d = 0.0, max_j = 0.0;
  for (int k = 0; k < 50; ++k) {
    {
      SixModeCC cc;
      cc.X = rng.gauss_mat3();
      cc.Y = rng.gauss_mat3();
      cc.xi = rng.cgauss();
      const AntisymTensor t = cc_exponential_state(cc);
      const auto [tp, s] = remove_singles(t);
      for (int i = 0; i < 6; ++i) {
        if (s.matrix()(i, i) != cplx(1.0)) det_exact = false;
        for (int jj = 0; jj < 6; ++jj) {
          const bool upper_right = i < 3 && jj >= 3;
          if (i != jj && !(jj < 3 && i >= 3) && !upper_right &&
              s.matrix()(i, jj) != cplx(0.0)) {
            det_exact = false;
          }
          if (upper_right && s.matrix()(i, jj) != cplx(0.0)) det_exact = false;
        }
      }
      max_d = std::max(max_d, rel_err(quartic_D(ci6_from_tensor(tp)),
                                      quartic_D(ci6_from_tensor(t))));
    }
    {
      SevenModeCC cc = random_reduced_cc(rng);
      cc.Y = rng.gauss_mat3();
      cc.V = AntisymMat3::from_vector(rng.gauss_vec3());
      const AntisymTensor t = cc_exponential_state(cc);
      const auto [tp, s] = remove_singles(t);
      max_j = std::max(max_j, rel_err(invariant_J(tp), invariant_J(t)));
    }
  }
  const bool pass = max6 < 1e-10 && max7 < 1e-10 && det_exact &&
                    max_d < 1e-10 && max_j < 1e-10;
  return {7, "dictionary round-trips and invariant-preserving singles removal",
          pass,
          fmt("round-trip err 6:%.2e 7:%.2e; detS structural:%s; D:%.2e J:%.2e",
              max6, max7, det_exact ? "unit" : "BROKEN", max_d, max_j)};
}

// --- criterion 8: Pfaffian factorization and compatibility ------------------

CheckResult criterion_8() {
  Rng rng(801);
  double max_fact = 0.0;
  bool compat_ok = true;
  for (int k = 0; k < 200; ++k) {
    SevenModeCC cc;
    cc.Z = rng.gauss_mat3();
    Mat3 sym = rng.gauss_mat3();
    sym = 0.5 * (sym + sym.transpose()).eval();
    cc.X = cc.Z.inverse() * sym;
    cc.xi = rng.cgauss();
    const FactorizationReport rep = factorization_check(cc);
    if (!rep.preconditions_met || !rep.annihilates) compat_ok = false;
    const cplx j = invariant_J_cc(cc);
    max_fact = std::max(
        max_fact, rep.factorization_residual / std::max(1.0, std::abs(j)));
  }
  // violating states must fail the predicate both ways
  for (int k = 0; k < 50; ++k) {
    SevenModeCC cc = random_reduced_cc(rng);
    const Mat3 zx = cc.Z * cc.X;
    const bool sym_and_u0 =
        (zx - zx.transpose()).cwiseAbs().maxCoeff() < 1e-9 &&
        cc.U.v.cwiseAbs().maxCoeff() < 1e-9;
    if (sym_and_u0) continue;  // overwhelmingly improbable
    const FactorizationReport rep = factorization_check(cc);
    if (rep.annihilates || rep.expected_annihilate) compat_ok = false;
  }
  const bool pass = max_fact < 1e-9 && compat_ok;
  return {8, "J factors through the Pfaffian exactly on compatible states",
          pass,
          fmt("200 compatible draws, max rel residual %.2e; predicate %s",
              max_fact, compat_ok ? "two-sided" : "BROKEN")};
}

// --- criterion 9: closed-form N and L blocks --------------------------------

CheckResult criterion_9() {
  Rng rng(901);
  double max_n = 0.0, max_l = 0.0, max_l77 = 0.0;
  for (int k = 0; k < 200; ++k) {
    const SevenModeCC cc = random_reduced_cc(rng);
    const auto [n, l] = cc_covariants_NL(cc);
    const Covariants7 cov = covariants7(cc_exponential_state(cc));
    max_n = std::max(max_n, (n - cov.N).cwiseAbs().maxCoeff() /
                                std::max(1.0, cov.N.cwiseAbs().maxCoeff()));
    max_l = std::max(max_l, (l - cov.L).cwiseAbs().maxCoeff() /
                                std::max(1.0, cov.L.cwiseAbs().maxCoeff()));
    const cplx d6 = cc.xi * cc.xi + 4.0 * cc.X.determinant();
    max_l77 = std::max(max_l77, std::abs(l(6, 6) - 6.0 * d6));
  }
  const bool pass = max_n < 1e-9 && max_l < 1e-9 && max_l77 < 1e-9;
  return {9, "closed-form N/L blocks match the contraction entrywise", pass,
          fmt("200 draws, rel err N %.2e, L %.2e, |L77 - 6 D6| %.2e", max_n,
              max_l, max_l77)};
}

// --- criterion 10: closed-orbit subspace of four fermions, eight modes ------

CheckResult criterion_10() {
  Rng rng(1001);
  double max_res = 0.0;
  double max_quad_err = 0.0;
  bool alternating_fails_somewhere = false;
  int used = 0;
  while (used < 100) {
    ClosedOrbitParams p{rng.cgauss(), rng.cgauss(), rng.cgauss(),
                        rng.cgauss(), rng.cgauss(), rng.cgauss()};
    const cplx plain = p.a * p.a + p.b * p.b + p.c * p.c + p.d * p.d +
                       p.e * p.e + p.f * p.f;
    if (std::abs(plain) < 0.1) continue;
    ++used;
    // the Fock engine pins the quadruple coefficient to the plain sum
    max_quad_err =
        std::max(max_quad_err, std::abs(quadruple_coefficient(p) - plain));
    const cplx alternating = p.a * p.a + p.b * p.b - p.c * p.c - p.d * p.d +
                             p.e * p.e + p.f * p.f;
    if (std::abs(quadruple_coefficient(p) - alternating) > 1e-6) {
      alternating_fails_somewhere = true;
    }
    const cplx root = std::sqrt(plain);
    p.a /= root; p.b /= root; p.c /= root;
    p.d /= root; p.e /= root; p.f /= root;
    const AntisymTensor t = t2_state_48(closed_orbit_doubles(p));
    max_res = std::max(max_res, subspace_membership(t).residual);
  }
  const bool pass = max_res < 1e-10 && max_quad_err < 1e-12;
  return {10,
          "closed-orbit family sits in span(P1..P7) under the engine-"
          "determined constraint",
          pass,
          fmt("oracle constraint: plain sum of squares = 1 "
              "(alternating-sign variant disagrees: %s); residual %.2e, "
              "quadruple err %.2e",
              alternating_fails_somewhere ? "confirmed" : "not observed",
              max_res, max_quad_err)};
}

}  // namespace

std::vector<CheckResult> run_criterion(int k) {
  switch (k) {
    case 1: return {criterion_1()};
    case 2: return {criterion_2()};
    case 3: return {criterion_3()};
    case 4: return {criterion_4()};
    case 5: return {criterion_5()};
    case 6: return {criterion_6()};
    case 7: return {criterion_7()};
    case 8: return {criterion_8()};
    case 9: return {criterion_9()};
    case 10: return {criterion_10()};
    default: throw std::invalid_argument("criterion out of range");
  }
}

std::vector<CheckResult> run_criteria(std::span<const int> ks) {
  std::vector<CheckResult> out;
  for (int k : ks) {
    auto r = run_criterion(k);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

std::vector<CheckResult> run_all() {
  const std::vector<int> ks{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  return run_criteria(ks);
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  if (suite == "six") return {3, 6, 7};
  if (suite == "seven") return {1, 2, 6, 7, 8, 9};
  if (suite == "perturb") return {4, 5};
  if (suite == "four8") return {10};
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace fermicc::verify
