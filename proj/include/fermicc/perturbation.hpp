// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file perturbation.hpp
 * @brief Triples perturbations of the two doubles-generated dense-orbit
 *        states on seven modes: the deformed-conifold transition locus, the
 *        closed-form B = -N/6 matrix and its spectrum, and batched sweeps.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fermicc/multilinear.hpp"
#include "fermicc/seven_mode.hpp"

namespace fermicc {

/// Triples amplitudes added on top of a doubles-generated base state:
/// xi p^{1bar 2bar 3bar} + u^1 p^{2bar 3bar 4bar} + u^2 p^{3bar 1bar 4bar}
/// + u^3 p^{1bar 2bar 4bar}.
struct TriplesPerturbation {
  cplx xi{0.0};
  Vec3 u = Vec3::Zero();
};

enum class GhzBase { minus, plus };

/// The two doubles-generated representatives of the dense orbit; they differ
/// only by X -> -X in CC coordinates and are related by a complex (but no
/// real) mode transformation. J(psi_minus) = 1, J(psi_plus) = -1.
AntisymTensor psi_minus();
AntisymTensor psi_plus();

AntisymTensor perturb(GhzBase base, const TriplesPerturbation& p);

/// CC coordinates of the perturbed state: (xi, X = -/+ I, Y = 0, Z = I,
/// V = 0, U = [u]).
SevenModeCC perturbed_cc(GhzBase base, const TriplesPerturbation& p);

/// Q^2 = xi^2 + u.u (complex); stored squared so no square-root branch is
/// chosen outside eigenvalue formulas.
cplx q_squared(const TriplesPerturbation& p);

/// xi^2 + u.u - Q0^2: zero on the deformed conifold of deformation Q0. The
/// class transition locus of the minus family is Q0 = 2.
cplx conifold_residual(const TriplesPerturbation& p, double q0);

/// B = -N/6 of the perturbed state in closed block form.
Mat7 b_matrix(GhzBase base, const TriplesPerturbation& p);

/// Eigenvalues from a general complex eigensolver, sorted by (re, im).
Vec7 b_spectrum(GhzBase base, const TriplesPerturbation& p);

/// The analytic spectrum: minus family {1 - Q/2 (x3), 1 + Q/2 (x3), 1},
/// plus family {-sqrt(1 + Q^2/4) (x3), +sqrt(1 + Q^2/4) (x3), 1}; principal
/// square roots, sorted like b_spectrum.
Vec7 b_spectrum_predicted(GhzBase base, const TriplesPerturbation& p);

/// For |Q| bounded away from zero, the congruence S^T B S with the explicit
/// complex-orthogonal S built from (xi, u); returns the maximum off-diagonal
/// magnitude, a diagonalization self-check (minus family).
double b_congruence_offdiag(const TriplesPerturbation& p);

struct SweepRecord {
  TriplesPerturbation p;
  cplx q2{0.0};
  cplx J{0.0};
  int rank_N = 0;
  std::string cls;
  Vec7 b_eigenvalues = Vec7::Zero();
};

/// One record per point. J from the closed CC form, rank from the singular
/// values of the closed-form N, class from the same ladder as classify7
/// (so record.cls == "X" exactly when |J| clears the tolerance).
std::vector<SweepRecord> sweep(GhzBase base,
                               std::span<const TriplesPerturbation> path,
                               double tol = default_tol);

/// CSV columns: re_xi, im_xi, re_u1, im_u1, re_u2, im_u2, re_u3, im_u3,
/// re_q2, im_q2, re_J, im_J, rank_N, class.
void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records);

/// Real points uniform on the 3-sphere of the given radius in (xi, u) space,
/// via normalized 4-dimensional Gaussian draws; deterministic in the seed.
std::vector<TriplesPerturbation> sphere_samples(double radius, int count,
                                                std::uint64_t seed);

}  // namespace fermicc
