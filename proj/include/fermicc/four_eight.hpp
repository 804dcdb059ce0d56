// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file four_eight.hpp
 * @brief Doubles-only states for four fermions with eight modes and the
 *        membership test for the seven-dimensional closed-orbit subspace.
 */

#pragma once

#include <array>

#include "fermicc/multilinear.hpp"
#include "fermicc/oracle.hpp"

namespace fermicc {

/**
 * Doubles amplitudes T_{ab}^{ij}, antisymmetric separately in the virtual
 * pair (a,b) and the occupied pair (i,j); 36 independent complex entries.
 * Local indices are 1..4 on both sides (virtual a is global mode a + 4).
 */
class DoublesAmplitudes48 {
 public:
  cplx get(int a, int b, int i, int j) const;
  void set(int a, int b, int i, int j, cplx value);

 private:
  // pair_rank (a<b in 1..4) -> 0..5; storage [virtual pair][occupied pair]
  std::array<std::array<cplx, 6>, 6> tab_{};
};

/// Parameters of the family that meets the closed-orbit subspace:
/// T^{12}_{1b2b} = T^{34}_{3b4b} = a, T^{34}_{1b2b} = T^{12}_{3b4b} = b,
/// T^{13}_{1b3b} = T^{24}_{2b4b} = c, T^{13}_{2b4b} = T^{24}_{1b3b} = d,
/// T^{14}_{1b4b} = T^{23}_{2b3b} = e, T^{14}_{2b3b} = T^{23}_{1b4b} = f.
struct ClosedOrbitParams {
  cplx a{0.0}, b{0.0}, c{0.0}, d{0.0}, e{0.0}, f{0.0};
};

DoublesAmplitudes48 closed_orbit_doubles(const ClosedOrbitParams& p);

/// exp(T2) |1234> = (1 + T2 + T2^2/2) |1234>, evaluated in the Fock engine.
AntisymTensor t2_state_48(const DoublesAmplitudes48& t2);

/// Same state assembled from the expanded doubles/quadruples formulas
/// (T2|ref> written out term by term plus the epsilon-contracted quadruple
/// coefficient); kept as an independent cross-check of t2_state_48.
AntisymTensor t2_state_48_expanded(const DoublesAmplitudes48& t2);

/// Coefficient of p^{1bar 2bar 3bar 4bar} in exp(T2)|1234> for the closed-
/// orbit family, computed through the Fock engine. Membership in the closed-
/// orbit subspace requires this to equal the reference coefficient 1.
cplx quadruple_coefficient(const ClosedOrbitParams& p);

/// The seven spanning states of the closed-orbit subspace.
std::array<AntisymTensor, 7> p_basis();

struct MembershipReport {
  double residual = 0.0;  // ||t - projection|| / ||t||
  Eigen::Matrix<cplx, 7, 1> coords = Eigen::Matrix<cplx, 7, 1>::Zero();
};

/// Least-squares projection onto span(p_basis()). Rejects the zero state.
MembershipReport subspace_membership(const AntisymTensor& t);

}  // namespace fermicc
