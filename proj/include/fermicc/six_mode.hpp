// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file six_mode.hpp
 * @brief Entanglement classification of three fermions with six modes: the
 *        quadratic covariant K, the quartic invariant D in three equivalent
 *        forms, the cubic dual state, the quadratic Q-polynomials and the
 *        four-class orbit ladder (GHZ / W / biseparable / separable).
 */

#pragma once

#include <array>
#include <string_view>

#include "fermicc/cluster.hpp"
#include "fermicc/multilinear.hpp"

namespace fermicc {

/// K^mu_nu = (1/12) eps^{mu r1..r5} psi_{nu r1 r2} psi_{r3 r4 r5}.
Mat6 covariant_K(const AntisymTensor& t);

/// Under psi -> S psi: K -> det(S) S^{-T} K S^T (upper index contragredient,
/// lower index cogredient).
Mat6 transform_covariant_K(const Mat6& k, const SloccMatrix& s);

/// Quartic relative invariant, D -> det(S)^2 D. Three equivalent routes:
cplx quartic_D(const AntisymTensor& t);   // (1/6) tr K^2
cplx quartic_D(const SixModeCI& ci);      // 4[k^2 - tr(A# B#) + a detA + b detB]
cplx quartic_D(const SixModeCC& cc);      // xi^2 + 4 det X

/// Coordinates of the cubic dual state (same 1+9+9+1 layout as the input).
/// The dual transforms like a state with one extra determinant weight:
/// dual(S psi) = det(S) * S dual(psi).
using DualStateCoords = SixModeCI;
DualStateCoords dual_state(const SixModeCI& ci);

/// Q1 = ab I - AB, Q2 = A# - b B, Q3 = B# - a A; all three vanish exactly
/// when the covariant K vanishes.
std::array<Mat3, 3> q_polynomials(const SixModeCI& ci);

enum class SixClass { null_state, separable, biseparable, w, ghz };
std::string_view to_string(SixClass c);

struct SixClassReport {
  SixClass cls = SixClass::null_state;
  cplx D{0.0};
  double dual_norm = 0.0;
  double k_norm = 0.0;
  std::array<double, 3> q_norms{0.0, 0.0, 0.0};
  double scale = 0.0;  // max |amplitude|
  double tol = default_tol;
};

/// Orbit ladder on witness magnitudes, each compared against
/// tol * scale^degree (degree 4 for D, 3 for the dual, 2 for K):
/// |D| big -> ghz; dual nonzero -> w; K nonzero -> biseparable;
/// any amplitude -> separable; otherwise the zero state.
SixClassReport classify6(const AntisymTensor& t, double tol = default_tol);

// Canonical orbit representatives.
AntisymTensor ghz6();    // p^{123} + p^{1 2bar 3bar} + p^{1bar 2 3bar} + p^{1bar 2bar 3}
AntisymTensor w6();      // first three terms of ghz6
AntisymTensor bisep6();  // p^{123} + p^{1 2bar 3bar}
AntisymTensor sep6();    // p^{123}

}  // namespace fermicc
