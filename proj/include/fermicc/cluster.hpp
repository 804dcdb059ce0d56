// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cluster.hpp
 * @brief CI and CC coordinate systems for three fermions with six or seven
 *        modes, the dictionaries between them, singles removal as a unit-
 *        determinant mode transformation, and exact exponential-ansatz state
 *        construction through the Fock engine.
 *
 * Mode labelling: global indices 1..N with {1,2,3} occupied; virtual modes
 * 1bar,2bar,3bar are globals 4,5,6 and (seven modes) 4bar is global 7.
 *
 * Matrix index conventions (row, column):
 *   B, Y  : (occupied, virtual)   singles blocks
 *   A, X  : (virtual, occupied)   doubles blocks
 *   D, Z  : (occupied, virtual)   doubles involving mode 4bar
 *   E, V  : antisymmetric on occupied pairs (singles into 4bar)
 *   F, U  : antisymmetric on virtual pairs  (triples involving 4bar)
 */

#pragma once

#include <utility>

#include "fermicc/multilinear.hpp"
#include "fermicc/oracle.hpp"

namespace fermicc {

/// Raised when an operation needs a nonzero reference amplitude psi_{1..n}.
class reference_deficient_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ===== coordinate sets (1 + 9 + 9 + 1 and the seven-mode extension) =====

struct SixModeCI {
  cplx alpha{1.0};
  Mat3 A = Mat3::Zero();
  Mat3 B = Mat3::Zero();
  cplx beta{0.0};
};

struct SixModeCC {
  cplx eta{1.0};
  Mat3 X = Mat3::Zero();
  Mat3 Y = Mat3::Zero();
  cplx xi{0.0};
};

struct SevenModeCI {
  cplx alpha{1.0};
  cplx beta{0.0};
  Mat3 A = Mat3::Zero();
  Mat3 B = Mat3::Zero();
  Mat3 D = Mat3::Zero();
  AntisymMat3 E;
  AntisymMat3 F;
};

struct SevenModeCC {
  cplx eta{1.0};
  cplx xi{0.0};
  Mat3 X = Mat3::Zero();
  Mat3 Y = Mat3::Zero();
  Mat3 Z = Mat3::Zero();
  AntisymMat3 V;
  AntisymMat3 U;
};

// ===== tensor <-> CI splits =====
//
// The split is a plain reindexing: alpha = psi_123, beta = psi_{1bar 2bar
// 3bar}, B^i_a = (1/2) eps^{ijk} psi_{jka}, A^a_i = (1/2) eps^{abc} psi_{bci},
// and for seven modes additionally E_ij = psi_{ij7}, D_ia = psi_{ia7},
// F_ab = psi_{ab7}. No normalization is applied; alpha carries psi_123.

SixModeCI ci6_from_tensor(const AntisymTensor& t);
SevenModeCI ci7_from_tensor(const AntisymTensor& t);
AntisymTensor tensor_from_ci6(const SixModeCI& ci);
AntisymTensor tensor_from_ci7(const SevenModeCI& ci);

/// As above but rescaled to alpha = 1. Throws reference_deficient_error when
/// |psi_123| <= tol * max |amplitude|.
SixModeCI ci6_from_tensor_normalized(const AntisymTensor& t,
                                     double tol = default_tol);
SevenModeCI ci7_from_tensor_normalized(const AntisymTensor& t,
                                       double tol = default_tol);

/// Canonical tuple with the largest amplitude; candidate occupied set for a
/// reference-deficient state.
std::array<int, 4> suggest_reference_modes(const AntisymTensor& t);

// ===== CI <-> CC dictionaries (intermediate normalization alpha = eta = 1) =====

/// B = Y, A = Y# + X, beta = det Y + tr(XY) + xi. Rejects alpha != 1.
SixModeCC cc6_from_ci6(const SixModeCI& ci, double tol = default_tol);
SixModeCI ci6_from_cc6(const SixModeCC& cc);

/// Six-mode dictionary extended by D = Z + VY, E = V,
/// F = U + (Y^T Z - Z^T Y) + [(X + Y#) v]. Rejects alpha != 1.
SevenModeCC cc7_from_ci7(const SevenModeCI& ci, double tol = default_tol);
SevenModeCI ci7_from_cc7(const SevenModeCC& cc);

// ===== cluster operators and exponential states =====

oracle::ClusterOperator singles_operator6(const Mat3& y);
oracle::ClusterOperator doubles_operator6(const Mat3& x);
oracle::ClusterOperator triples_operator6(cplx xi);
oracle::ClusterOperator singles_operator7(const Mat3& y, const Vec3& v);
oracle::ClusterOperator doubles_operator7(const Mat3& x, const Mat3& z);
oracle::ClusterOperator triples_operator7(cplx xi, const Vec3& u);

/// exp(T1 + T2 + T3) |psi0> evaluated exactly in the Fock engine.
AntisymTensor cc_exponential_state(const SixModeCC& cc);
AntisymTensor cc_exponential_state(const SevenModeCC& cc);

/// exp(T1)|psi0> = (p^1 + Y^1_a p^a)(p^2 + Y^2_b p^b)(p^3 + Y^3_c p^c)|0>,
/// a single Slater determinant in a transformed basis.
AntisymTensor brueckner_state(const Mat3& y);

// ===== singles removal =====

/// Unit-determinant block-triangular mode transformation that cancels the
/// singles amplitudes (Y, and V for seven modes): returns (t', S) with
/// t' = slocc_apply(t, S). det S = 1 exactly, so every relative invariant of
/// t' equals that of t. Throws reference_deficient_error when psi_{1..n} is
/// numerically zero.
std::pair<AntisymTensor, SloccMatrix> remove_singles(const AntisymTensor& t,
                                                     double tol = default_tol);

}  // namespace fermicc
