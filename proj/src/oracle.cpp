// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fermicc::oracle {

FockVector::FockVector(int modes) : modes_(modes) {
  if (modes < 1 || modes > 10) {
    throw std::invalid_argument("FockVector: unsupported mode count");
  }
  amp_.assign(size_t(1) << modes, cplx(0.0));
}

FockVector FockVector::vacuum(int modes) {
  FockVector v(modes);
  v.amp_[0] = cplx(1.0);
  return v;
}

double FockVector::max_abs() const {
  double m = 0.0;
  for (const cplx& a : amp_) m = std::max(m, std::abs(a));
  return m;
}

bool FockVector::is_zero() const {
  for (const cplx& a : amp_) {
    if (a != cplx(0.0)) return false;
  }
  return true;
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  if (rhs.modes_ != modes_) {
    throw std::invalid_argument("FockVector: mode count mismatch");
  }
  for (size_t i = 0; i < amp_.size(); ++i) amp_[i] += rhs.amp_[i];
  return *this;
}

FockVector& FockVector::operator*=(cplx s) {
  for (cplx& a : amp_) a *= s;
  return *this;
}

namespace {

inline double jordan_wigner_sign(std::uint32_t mask, int mode) {
  const std::uint32_t below = mask & ((1u << (mode - 1)) - 1u);
  return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

}  // namespace

FockVector apply_mode_op(const FockVector& v, ModeOp kind, int mode) {
  if (mode < 1 || mode > v.modes()) {
    throw std::out_of_range("apply_mode_op: mode out of range");
  }
  FockVector out(v.modes());
  const std::uint32_t bit = 1u << (mode - 1);
  for (std::uint32_t mask = 0; mask < v.dim(); ++mask) {
    const cplx a = v[mask];
    if (a == cplx(0.0)) continue;
    if (kind == ModeOp::create) {
      if (mask & bit) continue;  // p^m p^m = 0
      out[mask | bit] += jordan_wigner_sign(mask, mode) * a;
    } else {
      if (!(mask & bit)) continue;  // n_m |0_m> = 0
      out[mask & ~bit] += jordan_wigner_sign(mask, mode) * a;
    }
  }
  return out;
}

ClusterMonomial make_monomial(cplx coef,
                              std::span<const std::pair<ModeOp, int>> ops) {
  ClusterMonomial m;
  m.creates.reserve(ops.size() / 2);
  m.annihilates.reserve(ops.size() / 2);
  // Stable-partition creations to the front; each (annihilator, creation)
  // inversion crossed is one anticommutation. Valid because excitation
  // monomials never pair p^m with n_m for the same m.
  int crossings = 0;
  int annihilators_seen = 0;
  for (const auto& [kind, mode] : ops) {
    if (kind == ModeOp::create) {
      for (int c : m.creates) {
        if (c == mode) {
          throw std::invalid_argument("make_monomial: repeated creation");
        }
      }
      for (int a : m.annihilates) {
        if (a == mode) {
          throw std::invalid_argument(
              "make_monomial: creation paired with same-mode annihilation");
        }
      }
      crossings += annihilators_seen;
      m.creates.push_back(mode);
    } else {
      for (int a : m.annihilates) {
        if (a == mode) {
          throw std::invalid_argument("make_monomial: repeated annihilation");
        }
      }
      ++annihilators_seen;
      m.annihilates.push_back(mode);
    }
  }
  m.coef = (crossings & 1) ? -coef : coef;
  return m;
}

FockVector apply_monomial(const FockVector& v, const ClusterMonomial& m) {
  FockVector cur = v;
  for (auto it = m.annihilates.rbegin(); it != m.annihilates.rend(); ++it) {
    cur = apply_mode_op(cur, ModeOp::annihilate, *it);
  }
  for (auto it = m.creates.rbegin(); it != m.creates.rend(); ++it) {
    cur = apply_mode_op(cur, ModeOp::create, *it);
  }
  cur *= m.coef;
  return cur;
}

FockVector apply_cluster(const FockVector& v, const ClusterOperator& t) {
  FockVector out(v.modes());
  for (const ClusterMonomial& m : t.terms) {
    if (m.coef == cplx(0.0)) continue;
    out += apply_monomial(v, m);
  }
  return out;
}

FockVector exp_cluster(const FockVector& v, const ClusterOperator& t,
                       const ModeSplit& split) {
  for (const ClusterMonomial& m : t.terms) {
    for (int c : m.creates) {
      if (split.is_occupied(c)) {
        throw std::invalid_argument(
            "exp_cluster: operator creates inside the occupied block");
      }
    }
    for (int a : m.annihilates) {
      if (!split.is_occupied(a)) {
        throw std::invalid_argument(
            "exp_cluster: operator annihilates outside the occupied block");
      }
    }
  }
  FockVector acc = v;
  FockVector term = v;
  // Every monomial empties at least one occupied mode, so at most fermions
  // applications survive; the guard is a hard failure, not a truncation.
  for (int k = 1; k <= split.fermions + 1; ++k) {
    term = apply_cluster(term, t);
    term *= cplx(1.0 / double(k));
    if (term.is_zero()) return acc;
    acc += term;
  }
  throw std::logic_error("exp_cluster: series failed to terminate");
}

AntisymTensor tensor_from_fock(const FockVector& v, int fermions, double tol) {
  AntisymTensor t(fermions, v.modes());
  const double scale = std::max(1.0, v.max_abs());
  std::array<int, 4> tup{};
  for (std::uint32_t mask = 0; mask < v.dim(); ++mask) {
    const cplx a = v[mask];
    if (a == cplx(0.0)) continue;
    if (std::popcount(mask) != fermions) {
      if (std::abs(a) > tol * scale) {
        throw std::invalid_argument(
            "tensor_from_fock: support outside the n-particle sector");
      }
      continue;
    }
    int k = 0;
    for (int mode = 1; mode <= v.modes(); ++mode) {
      if (mask & (1u << (mode - 1))) tup[size_t(k++)] = mode;
    }
    t.set(std::span<const int>(tup.data(), size_t(fermions)), a);
  }
  return t;
}

FockVector fock_from_tensor(const AntisymTensor& t) {
  FockVector v(t.modes());
  for (int k = 0; k < t.component_count(); ++k) {
    const auto tup = t.tuple(k);
    std::uint32_t mask = 0;
    for (int m : tup) mask |= 1u << (m - 1);
    v[mask] = t.amplitudes()[size_t(k)];
  }
  return v;
}

// ===== brute-force covariants =====

Mat6 brute_covariant_K(const AntisymTensor& t) {
  if (t.fermions() != 3 || t.modes() != 6) {
    throw std::invalid_argument("brute_covariant_K: need a (3,6) tensor");
  }
  Mat6 k = Mat6::Zero();
  int idx[6];
  for (int mu = 1; mu <= 6; ++mu) {
    idx[0] = mu;
    for (int nu = 1; nu <= 6; ++nu) {
      cplx acc(0.0);
      for (idx[1] = 1; idx[1] <= 6; ++idx[1]) {
        if (idx[1] == mu) continue;
        for (idx[2] = 1; idx[2] <= 6; ++idx[2]) {
          if (idx[2] == mu || idx[2] == idx[1]) continue;
          for (idx[3] = 1; idx[3] <= 6; ++idx[3]) {
            if (idx[3] == mu || idx[3] == idx[1] || idx[3] == idx[2]) continue;
            for (idx[4] = 1; idx[4] <= 6; ++idx[4]) {
              if (idx[4] == mu || idx[4] == idx[1] || idx[4] == idx[2] ||
                  idx[4] == idx[3])
                continue;
              for (idx[5] = 1; idx[5] <= 6; ++idx[5]) {
                if (idx[5] == mu || idx[5] == idx[1] || idx[5] == idx[2] ||
                    idx[5] == idx[3] || idx[5] == idx[4])
                  continue;
                const int sign = levi_civita(std::span<const int>(idx, 6));
                acc += double(sign) * t.get(nu, idx[1], idx[2]) *
                       t.get(idx[3], idx[4], idx[5]);
              }
            }
          }
        }
      }
      k(mu - 1, nu - 1) = acc / 12.0;
    }
  }
  return k;
}

std::array<Mat7, 7> brute_covariant_M(const AntisymTensor& t) {
  if (t.fermions() != 3 || t.modes() != 7) {
    throw std::invalid_argument("brute_covariant_M: need a (3,7) tensor");
  }
  std::array<Mat7, 7> m;
  for (auto& mi : m) mi = Mat7::Zero();
  int idx[7];
  for (int bi = 1; bi <= 7; ++bi) {
    idx[0] = bi;
    for (int bj = 1; bj <= 7; ++bj) {
      if (bj == bi) continue;  // eps vanishes
      idx[1] = bj;
      for (int bk = 1; bk <= 7; ++bk) {
        cplx acc(0.0);
        for (idx[2] = 1; idx[2] <= 7; ++idx[2]) {
          if (idx[2] == bi || idx[2] == bj) continue;
          for (idx[3] = 1; idx[3] <= 7; ++idx[3]) {
            if (idx[3] == bi || idx[3] == bj || idx[3] == idx[2]) continue;
            for (idx[4] = 1; idx[4] <= 7; ++idx[4]) {
              if (idx[4] == bi || idx[4] == bj || idx[4] == idx[2] ||
                  idx[4] == idx[3])
                continue;
              for (idx[5] = 1; idx[5] <= 7; ++idx[5]) {
                if (idx[5] == bi || idx[5] == bj || idx[5] == idx[2] ||
                    idx[5] == idx[3] || idx[5] == idx[4])
                  continue;
                for (idx[6] = 1; idx[6] <= 7; ++idx[6]) {
                  if (idx[6] == bi || idx[6] == bj || idx[6] == idx[2] ||
                      idx[6] == idx[3] || idx[6] == idx[4] || idx[6] == idx[5])
                    continue;
                  const int sign = levi_civita(std::span<const int>(idx, 7));
                  acc += double(sign) * t.get(bk, idx[2], idx[3]) *
                         t.get(idx[4], idx[5], idx[6]);
                }
              }
            }
          }
        }
        m[size_t(bi - 1)](bj - 1, bk - 1) = acc / 12.0;
      }
    }
  }
  return m;
}

Mat7 brute_covariant_N(const AntisymTensor& t) {
  if (t.fermions() != 3 || t.modes() != 7) {
    throw std::invalid_argument("brute_covariant_N: need a (3,7) tensor");
  }
  Mat7 n = Mat7::Zero();
  int idx[7];
  for (int bi = 1; bi <= 7; ++bi) {
    for (int bj = bi; bj <= 7; ++bj) {
      cplx acc(0.0);
      for (idx[0] = 1; idx[0] <= 7; ++idx[0]) {
        for (idx[1] = 1; idx[1] <= 7; ++idx[1]) {
          if (idx[1] == idx[0]) continue;
          for (idx[2] = 1; idx[2] <= 7; ++idx[2]) {
            if (idx[2] == idx[0] || idx[2] == idx[1]) continue;
            for (idx[3] = 1; idx[3] <= 7; ++idx[3]) {
              if (idx[3] == idx[0] || idx[3] == idx[1] || idx[3] == idx[2])
                continue;
              for (idx[4] = 1; idx[4] <= 7; ++idx[4]) {
                if (idx[4] == idx[0] || idx[4] == idx[1] || idx[4] == idx[2] ||
                    idx[4] == idx[3])
                  continue;
                for (idx[5] = 1; idx[5] <= 7; ++idx[5]) {
                  if (idx[5] == idx[0] || idx[5] == idx[1] ||
                      idx[5] == idx[2] || idx[5] == idx[3] || idx[5] == idx[4])
                    continue;
                  for (idx[6] = 1; idx[6] <= 7; ++idx[6]) {
                    if (idx[6] == idx[0] || idx[6] == idx[1] ||
                        idx[6] == idx[2] || idx[6] == idx[3] ||
                        idx[6] == idx[4] || idx[6] == idx[5])
                      continue;
                    const int sign = levi_civita(std::span<const int>(idx, 7));
                    acc += double(sign) * t.get(bi, idx[0], idx[1]) *
                           t.get(bj, idx[2], idx[3]) *
                           t.get(idx[4], idx[5], idx[6]);
                  }
                }
              }
            }
          }
        }
      }
      n(bi - 1, bj - 1) = acc / 24.0;
      n(bj - 1, bi - 1) = acc / 24.0;
    }
  }
  return n;
}

Mat7 brute_covariant_L(const AntisymTensor& t) {
  const std::array<Mat7, 7> m = brute_covariant_M(t);
  Mat7 l = Mat7::Zero();
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      cplx acc(0.0);
      for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
          acc += m[size_t(i)](a, b) * m[size_t(j)](b, a);
        }
      }
      l(i, j) = acc;
    }
  }
  return l;
}

}  // namespace fermicc::oracle
