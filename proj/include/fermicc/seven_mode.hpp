// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file seven_mode.hpp
 * @brief Entanglement classification of three fermions with seven modes:
 *        covariants M, N, L, the degree-seven relative invariant J (tensor
 *        contraction and two closed CC-coordinate forms), the closed-form
 *        N/L blocks in CC coordinates, the Pfaffian factorization of J over
 *        compatible states, and the ten-class ladder.
 */

#pragma once

#include <array>
#include <string_view>

#include "fermicc/cluster.hpp"
#include "fermicc/multilinear.hpp"
#include "fermicc/six_mode.hpp"

namespace fermicc {

struct Covariants7 {
  std::array<Mat7, 7> M;  // (M^I)^J_K with I the array index, (J,K) the matrix
  Mat7 N;                 // symmetric, both indices cogredient
  Mat7 L;                 // symmetric, both indices contragredient
};

/// (M^I)^J_K = (1/12) eps^{I J A1..A5} psi_{K A1 A2} psi_{A3 A4 A5}
/// N_IJ     = (1/24) eps^{A1..A7} psi_{I A1 A2} psi_{J A3 A4} psi_{A5 A6 A7}
/// L^IJ     = (M^I)^A_B (M^J)^B_A
Covariants7 covariants7(const AntisymTensor& t);

// Covariance patterns under psi -> S psi (checked against recomputation):
Mat7 transform_covariant_N(const Mat7& n, const SloccMatrix& s);  // detS S N S^T
Mat7 transform_covariant_L(const Mat7& l, const SloccMatrix& s);  // detS^2 S^-T L S^-1
std::array<Mat7, 7> transform_covariant_M(const std::array<Mat7, 7>& m,
                                          const SloccMatrix& s);

/// J = tr(N L) / (2^4 * 3^2 * 7); relative invariant, J -> det(S)^3 J.
cplx invariant_J(const AntisymTensor& t);
cplx invariant_J(const Covariants7& cov);

/// |J^3 - det(-N/6)|: the cube identity tested as a residual on cubes so no
/// complex cube-root branch is ever chosen.
double j_cube_residual(const AntisymTensor& t);

/// Closed CC form, valid once singles are removed (Y = V = 0):
///   J = -det G - (1/(4 xi)) det(U X + xi Z^T),  G = (Z X + (Z X)^T) / 2,
/// evaluated as the regularized polynomial
///   J = -det G - [tr((UX)# Z^T) + xi tr(UX (Z^T)#) + xi^2 det Z] / 4,
/// which is exact at xi = 0 because det(UX) = 0 for antisymmetric U.
cplx invariant_J_cc(const SevenModeCC& cc, double tol = default_tol);

/// The literal 1/(4 xi) form; only meaningful away from xi = 0 and used as a
/// cross-check for |xi| > 0.1.
cplx invariant_J_cc_pole_form(const SevenModeCC& cc, double tol = default_tol);

/// Independent rearrangement through the axial vector w of the antisymmetric
/// part of Z X:
///   J = w^T G w - u^T H u / 4 - det Z (xi^2 + 4 det X) / 4
///       - xi tr(U X (Z^T)#) / 4,   H = (Z^T X# + (X#)^T Z) / 2.
cplx invariant_J_alt(const SevenModeCC& cc, double tol = default_tol);

/// N and L assembled block-by-block from CC coordinates (Y = V = 0); agrees
/// entrywise with covariants7 of the reconstructed tensor. In particular
/// L^{77} = 6 (xi^2 + 4 det X): the six-mode quartic invariant reappears.
std::pair<Mat7, Mat7> cc_covariants_NL(const SevenModeCC& cc,
                                       double tol = default_tol);

/// The antisymmetric 6x6 pairing of the mode-7 amplitude block,
/// omega = [[E, D], [-D^T, F]]; for Y = V = 0 CC coordinates D = Z, E = 0,
/// F = U, and det Z = -Pf(omega) when U = 0.
Mat6 omega_matrix(const Mat3& d, const AntisymMat3& e, const AntisymMat3& f);

/**
 * Factorization probe over Y = V = 0 coordinates.
 *
 * When additionally U = 0 and Z X is symmetric, J factors as
 * J = Pf(omega) * (xi^2 + 4 det X) / 4, with both sides evaluated through
 * independent routes (tensor contraction vs Pfaffian times the six-mode
 * invariant). The annihilation predicate omega_hat |psi> = 0 holds exactly
 * when Z X is symmetric and U = 0; it is evaluated by direct application of
 * omega_hat in the Fock engine, never assumed.
 */
struct FactorizationReport {
  bool preconditions_met = false;    // U = 0 and Z X symmetric (within tol)
  double factorization_residual = 0; // |J - Pf * D / 4|, NaN if preconditions fail
  double omega_apply_norm = 0;       // ||omega_hat |psi>|| / max(1, ||psi||)
  double zx_asymmetry = 0;           // max |Z X - (Z X)^T|
  double u_norm = 0;                 // max |U|
  bool annihilates = false;          // omega_apply_norm below tolerance
  bool expected_annihilate = false;  // Z X symmetric and U = 0
};
FactorizationReport factorization_check(const SevenModeCC& cc,
                                        double tol = default_tol);

enum class SevenClass {
  c_i,
  c_ii,
  c_iii,
  c_iv,
  c_v,
  c_vi_or_vii,
  c_viii,
  c_ix,
  c_x,
  c_i_to_v,        // rank 0 but no coordinate-aligned six-mode subspace found
  c_indeterminate  // rank of N outside the expected set
};
std::string_view to_string(SevenClass c);

struct SevenClassReport {
  SevenClass cls = SevenClass::c_i;
  cplx J{0.0};
  int rank_N = 0;
  Eigen::Matrix<double, 7, 1> singular_values =
      Eigen::Matrix<double, 7, 1>::Zero();
  bool ambiguous = false;  // VI-or-VII, delegated I-V, or indeterminate
  /// Six-mode ladder result when the state occupies a coordinate-aligned
  /// six-mode subspace (rank 0 branch only).
  SixClass six_mode_class = SixClass::null_state;
  bool six_mode_delegated = false;
  double scale = 0.0;
  double tol = default_tol;
  double rank_tol = 1e-9;
};

/// Numerical rank of N: zero when the largest singular value sits below the
/// degree-3 noise floor tol * scale^3, otherwise the count of singular values
/// above rank_tol times the largest.
int rank_of_N(const Mat7& n, double scale, double tol = default_tol,
              double rank_tol = 1e-9);

/// Ladder: |J| > tol * scale^7 -> class X; otherwise the rank of N separates
/// IX (4), VIII (2) and the VI/VII pair (1, left unresolved by design); at
/// rank 0 the state is classified on a coordinate-aligned six-mode subspace
/// when one exists (a mode all of whose amplitudes vanish) and reported as
/// delegated otherwise.
SevenClassReport classify7(const AntisymTensor& t, double tol = default_tol,
                           double rank_tol = 1e-9);

/// Canonical representative of class k = 1..10, built from the complex
/// combinations E^{1,2,3} = p^{1,2,3} + i p^{1bar,2bar,3bar},
/// E^{1bar,2bar,3bar} = p^{1,2,3} - i p^{1bar,2bar,3bar}, E^{4bar} = i p^{4bar}.
AntisymTensor canonical7(int cls);

}  // namespace fermicc
