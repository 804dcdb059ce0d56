// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Independent ground truth: a second-quantized Fock engine on
 *        occupation bitstrings plus definition-level Levi-Civita contraction
 *        of every covariant. Deliberately unoptimized; every closed form in
 *        the library is tested against this layer.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "fermicc/multilinear.hpp"

namespace fermicc::oracle {

/**
 * State in the 2^N-dimensional fermionic Fock space. Basis kets are ordered
 * products p^{m1} p^{m2} ... |0> with m1 < m2 < ..., stored by occupation
 * bitmask (mode m <-> bit m-1).
 */
class FockVector {
 public:
  explicit FockVector(int modes);

  static FockVector vacuum(int modes);

  int modes() const { return modes_; }
  std::uint32_t dim() const { return std::uint32_t(amp_.size()); }

  cplx& operator[](std::uint32_t mask) { return amp_[mask]; }
  const cplx& operator[](std::uint32_t mask) const { return amp_[mask]; }

  double max_abs() const;
  bool is_zero() const;

  FockVector& operator+=(const FockVector& rhs);
  FockVector& operator*=(cplx s);

 private:
  int modes_;
  std::vector<cplx> amp_;
};

enum class ModeOp { create, annihilate };

/// Jordan-Wigner action of a single creation/annihilation operator:
/// sign (-1)^(occupied modes below `mode`); creating an occupied mode or
/// annihilating an empty one contributes zero. Modes are 1-based.
FockVector apply_mode_op(const FockVector& v, ModeOp kind, int mode);

/**
 * One normal-ordered monomial coef * p^{c1}..p^{ck} n_{a1}..n_{ak} of a
 * cluster operator. Use make_monomial() to normal-order an operator string
 * written in any order; the anticommutation sign is folded into coef.
 */
struct ClusterMonomial {
  cplx coef;
  std::vector<int> creates;      // applied left of all annihilators
  std::vector<int> annihilates;  // applied first, rightmost first
};

struct ClusterOperator {
  std::vector<ClusterMonomial> terms;
};

/// Normal-orders an operator string of (kind, mode) factors. All creations
/// must act on modes distinct from all annihilated ones (the excitation
/// case), so reordering is pure anticommutation.
ClusterMonomial make_monomial(cplx coef,
                              std::span<const std::pair<ModeOp, int>> ops);

FockVector apply_monomial(const FockVector& v, const ClusterMonomial& m);
FockVector apply_cluster(const FockVector& v, const ClusterOperator& t);

/// Power series exp(T) v. Excitation operators on a finite Fock space are
/// nilpotent, so the series terminates exactly. Monomials that create inside
/// the occupied block or annihilate outside it are rejected.
FockVector exp_cluster(const FockVector& v, const ClusterOperator& t,
                       const ModeSplit& split);

/// Particle-number-sector bridge to the canonical amplitude tensor. Throws
/// if v has support outside the n-particle sector (beyond tol * scale).
AntisymTensor tensor_from_fock(const FockVector& v, int fermions,
                               double tol = 1e-12);
FockVector fock_from_tensor(const AntisymTensor& t);

// ===== Definition-level covariant contractions =====
//
// Plain nested index loops over every assignment, pruned only by skipping
// repeated indices (where the epsilon symbol vanishes).

/// K^mu_nu = (1/12) eps^{mu r1..r5} psi_{nu r1 r2} psi_{r3 r4 r5}, (3,6) states.
Mat6 brute_covariant_K(const AntisymTensor& t);

/// (M^I)^J_K = (1/12) eps^{I J A1..A5} psi_{K A1 A2} psi_{A3 A4 A5}, (3,7).
std::array<Mat7, 7> brute_covariant_M(const AntisymTensor& t);

/// N_IJ = (1/24) eps^{A1..A7} psi_{I A1 A2} psi_{J A3 A4} psi_{A5 A6 A7}, (3,7).
Mat7 brute_covariant_N(const AntisymTensor& t);

/// L^IJ = (M^I)^A_B (M^J)^B_A, assembled from brute_covariant_M.
Mat7 brute_covariant_L(const AntisymTensor& t);

}  // namespace fermicc::oracle
