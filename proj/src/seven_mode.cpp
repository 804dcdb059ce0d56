// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/seven_mode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fermicc {

namespace {

constexpr double kJNorm = 1008.0;  // 2^4 * 3^2 * 7

struct SignedPerm7 {
  std::array<int, 7> p;
  int sign;
};

const std::vector<SignedPerm7>& perms7() {
  static const std::vector<SignedPerm7> table = [] {
    std::vector<SignedPerm7> out;
    out.reserve(5040);
    std::array<int, 7> p{1, 2, 3, 4, 5, 6, 7};
    do {
      out.push_back({p, levi_civita(std::span<const int>(p))});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return table;
}

void check_seven(const AntisymTensor& t, const char* who) {
  if (t.fermions() != 3 || t.modes() != 7) {
    throw std::invalid_argument(std::string(who) + ": need a (3,7) tensor");
  }
}

void check_singles_removed(const SevenModeCC& cc, double tol, const char* who) {
  const double scale =
      std::max({1.0, cc.X.cwiseAbs().maxCoeff(), cc.Z.cwiseAbs().maxCoeff(),
                std::abs(cc.xi), cc.U.v.cwiseAbs().maxCoeff()});
  if (cc.Y.cwiseAbs().maxCoeff() > tol * scale ||
      cc.V.v.cwiseAbs().maxCoeff() > tol * scale) {
    throw std::invalid_argument(std::string(who) +
                                ": requires Y = V = 0 (remove singles first)");
  }
}

}  // namespace

Covariants7 covariants7(const AntisymTensor& t) {
  check_seven(t, "covariants7");
  Covariants7 cov;
  cov.N = Mat7::Zero();
  cov.L = Mat7::Zero();
  for (auto& mi : cov.M) mi = Mat7::Zero();

  // dense signed amplitude cache, amp[i][j][k] = psi_{ijk} (0-based)
  cplx amp[7][7][7] = {};
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k)
        if (i != j && j != k && i != k) amp[i - 1][j - 1][k - 1] = t.get(i, j, k);

  // N: one pass over the signed permutations of (1..7) per index pair.
  for (int bi = 1; bi <= 7; ++bi) {
    for (int bj = bi; bj <= 7; ++bj) {
      cplx acc(0.0);
      for (const SignedPerm7& sp : perms7()) {
        acc += double(sp.sign) * amp[bi - 1][sp.p[0] - 1][sp.p[1] - 1] *
               amp[bj - 1][sp.p[2] - 1][sp.p[3] - 1] *
               amp[sp.p[4] - 1][sp.p[5] - 1][sp.p[6] - 1];
      }
      cov.N(bi - 1, bj - 1) = acc / 24.0;
      cov.N(bj - 1, bi - 1) = acc / 24.0;
    }
  }

  // M: permutations of the five-element complement of {I, J}.
  std::array<int, 5> rest{};
  std::array<int, 7> full{};
  for (int bi = 1; bi <= 7; ++bi) {
    for (int bj = 1; bj <= 7; ++bj) {
      if (bj == bi) continue;
      int k = 0;
      for (int v = 1; v <= 7; ++v) {
        if (v != bi && v != bj) rest[size_t(k++)] = v;
      }
      std::sort(rest.begin(), rest.end());
      full[0] = bi;
      full[1] = bj;
      do {
        std::copy(rest.begin(), rest.end(), full.begin() + 2);
        const int sign = levi_civita(std::span<const int>(full));
        const cplx pair = double(sign) / 12.0 *
                          amp[rest[2] - 1][rest[3] - 1][rest[4] - 1];
        for (int bk = 1; bk <= 7; ++bk) {
          cov.M[size_t(bi - 1)](bj - 1, bk - 1) +=
              pair * amp[bk - 1][rest[0] - 1][rest[1] - 1];
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }

  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      cplx acc(0.0);
      for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
          acc += cov.M[size_t(i)](a, b) * cov.M[size_t(j)](b, a);
        }
      }
      cov.L(i, j) = acc;
    }
  }
  return cov;
}

Mat7 transform_covariant_N(const Mat7& n, const SloccMatrix& s) {
  return s.det() * (s.matrix() * n * s.matrix().transpose());
}

Mat7 transform_covariant_L(const Mat7& l, const SloccMatrix& s) {
  const Eigen::MatrixXcd inv = s.matrix().inverse();
  return s.det() * s.det() * (inv.transpose() * l * inv);
}

std::array<Mat7, 7> transform_covariant_M(const std::array<Mat7, 7>& m,
                                          const SloccMatrix& s) {
  const Eigen::MatrixXcd inv = s.matrix().inverse();
  std::array<Mat7, 7> out;
  for (auto& mi : out) mi = Mat7::Zero();
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      for (int k = 0; k < 7; ++k) {
        cplx acc(0.0);
        for (int ip = 0; ip < 7; ++ip) {
          for (int jp = 0; jp < 7; ++jp) {
            for (int kp = 0; kp < 7; ++kp) {
              acc += inv(ip, i) * inv(jp, j) * s.matrix()(k, kp) *
                     m[size_t(ip)](jp, kp);
            }
          }
        }
        out[size_t(i)](j, k) = s.det() * acc;
      }
    }
  }
  return out;
}

cplx invariant_J(const Covariants7& cov) {
  return (cov.N * cov.L).trace() / kJNorm;
}

cplx invariant_J(const AntisymTensor& t) { return invariant_J(covariants7(t)); }

double j_cube_residual(const AntisymTensor& t) {
  const Covariants7 cov = covariants7(t);
  const cplx j = invariant_J(cov);
  const Mat7 b = (-1.0 / 6.0) * cov.N;
  return std::abs(j * j * j - b.determinant());
}

cplx invariant_J_cc(const SevenModeCC& cc, double tol) {
  check_singles_removed(cc, tol, "invariant_J_cc");
  const Mat3 zx = cc.Z * cc.X;
  const Mat3 g = 0.5 * (zx + zx.transpose());
  const Mat3 ux = cc.U.matrix() * cc.X;
  const Mat3 zt = cc.Z.transpose();
  const cplx pole_series = (adjugate(ux) * zt).trace() +
                           cc.xi * (ux * adjugate(zt)).trace() +
                           cc.xi * cc.xi * zt.determinant();
  return -g.determinant() - 0.25 * pole_series;
}

cplx invariant_J_cc_pole_form(const SevenModeCC& cc, double tol) {
  check_singles_removed(cc, tol, "invariant_J_cc_pole_form");
  if (cc.xi == cplx(0.0)) {
    throw std::invalid_argument("invariant_J_cc_pole_form: xi must be nonzero");
  }
  const Mat3 zx = cc.Z * cc.X;
  const Mat3 g = 0.5 * (zx + zx.transpose());
  const Mat3 arg = cc.U.matrix() * cc.X + cc.xi * cc.Z.transpose();
  return -g.determinant() - arg.determinant() / (4.0 * cc.xi);
}

cplx invariant_J_alt(const SevenModeCC& cc, double tol) {
  check_singles_removed(cc, tol, "invariant_J_alt");
  const Mat3 zx = cc.Z * cc.X;
  const Mat3 g = 0.5 * (zx + zx.transpose());
  const Mat3 w_mat = 0.5 * (zx - zx.transpose());
  const Vec3 w = AntisymMat3::from_matrix(w_mat).v;
  const Mat3 x_sharp = adjugate(cc.X);
  const Mat3 h =
      0.5 * (cc.Z.transpose() * x_sharp + x_sharp.transpose() * cc.Z);
  const Vec3 u = cc.U.v;
  const cplx six_mode_d = cc.xi * cc.xi + 4.0 * cc.X.determinant();
  const cplx trace_term =
      (cc.U.matrix() * cc.X * adjugate(cc.Z.transpose())).trace();
  return (w.transpose() * g * w).value() -
         0.25 * (u.transpose() * h * u).value() -
         0.25 * cc.Z.determinant() * six_mode_d - 0.25 * cc.xi * trace_term;
}

std::pair<Mat7, Mat7> cc_covariants_NL(const SevenModeCC& cc, double tol) {
  check_singles_removed(cc, tol, "cc_covariants_NL");
  const Mat3 x = cc.X;
  const Mat3 z = cc.Z;
  const cplx xi = cc.xi;
  const Vec3 u = cc.U.v;
  const Mat3 umat = cc.U.matrix();

  const Mat3 zx = z * x;
  const Mat3 x_sharp = adjugate(x);
  const Mat3 z_sharp = adjugate(z);
  const Mat3 zt_sharp = adjugate(z.transpose());
  const Mat3 zt_xsharp = z.transpose() * x_sharp;  // virtual-virtual
  const Mat3 x_ztsharp = x * zt_sharp;             // virtual-virtual
  const Vec3 zu = z * u;

  Mat7 n = Mat7::Zero();
  n.block<3, 3>(0, 0) = 3.0 * (zx + zx.transpose());
  n.block<3, 3>(3, 3) = -3.0 * (zt_xsharp + zt_xsharp.transpose());
  n(6, 6) = -6.0 * z.determinant();
  const Mat3 n_ai = 3.0 * (umat * x + xi * z.transpose());
  n.block<3, 3>(3, 0) = n_ai;
  n.block<3, 3>(0, 3) = n_ai.transpose();
  for (int i = 0; i < 3; ++i) {
    n(i, 6) = 3.0 * zu(i);
    n(6, i) = n(i, 6);
  }
  for (int a = 0; a < 3; ++a) {
    cplx acc(0.0);
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const int e = levi_civita({a + 1, b + 1, c + 1});
        if (e != 0) acc += double(e) * x_ztsharp(b, c);
      }
    }
    n(a + 3, 6) = -3.0 * acc;
    n(6, a + 3) = n(a + 3, 6);
  }

  Mat7 l = Mat7::Zero();
  const Mat3 zx_sharp = adjugate(zx);
  Mat3 l_ij = -6.0 * (zx_sharp + adjugate(zx.transpose()));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      cplx acc(0.0);
      for (int k = 0; k < 3; ++k) {
        for (int lidx = 0; lidx < 3; ++lidx) {
          const int ei = levi_civita({i + 1, k + 1, lidx + 1});
          if (ei == 0) continue;
          for (int m = 0; m < 3; ++m) {
            for (int nn = 0; nn < 3; ++nn) {
              const int ej = levi_civita({j + 1, m + 1, nn + 1});
              if (ej == 0) continue;
              acc += double(ei * ej) *
                     (zx(k, m) * zx(nn, lidx) + zx(m, k) * zx(lidx, nn));
            }
          }
        }
      }
      l_ij(i, j) -= 3.0 * acc;
    }
  }
  l.block<3, 3>(0, 0) = l_ij;
  l.block<3, 3>(3, 3) =
      12.0 * (x_ztsharp + x_ztsharp.transpose()) + 6.0 * (u * u.transpose());
  l(6, 6) = 6.0 * (xi * xi + 4.0 * x.determinant());

  Mat3 l_ai = Mat3::Zero();  // rows virtual, columns occupied
  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < 3; ++i) {
      cplx acc(0.0);
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          const int e = levi_civita({i + 1, j + 1, k + 1});
          if (e == 0) continue;
          acc += double(e) * (12.0 * x(a, j) * zu(k) + 6.0 * u(a) * zx(j, k));
        }
      }
      l_ai(a, i) = acc - 12.0 * xi * z_sharp(a, i);
    }
  }
  l.block<3, 3>(3, 0) = l_ai;
  l.block<3, 3>(0, 3) = l_ai.transpose();

  for (int i = 0; i < 3; ++i) {
    cplx acc(0.0);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const int e = levi_civita({i + 1, j + 1, k + 1});
        if (e == 0) continue;
        acc += double(e) * (6.0 * xi * zx(j, k));
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) {
            acc -= double(e) * 6.0 * umat(a, b) * x(a, j) * x(b, k);
          }
        }
      }
    }
    l(i, 6) = acc;
    l(6, i) = acc;
  }
  for (int a = 0; a < 3; ++a) {
    cplx acc = -6.0 * xi * u(a);
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const int e = levi_civita({a + 1, b + 1, c + 1});
        if (e == 0) continue;
        acc += double(e) * 12.0 * zt_xsharp(b, c);
      }
    }
    l(a + 3, 6) = acc;
    l(6, a + 3) = acc;
  }

  return {n, l};
}

Mat6 omega_matrix(const Mat3& d, const AntisymMat3& e, const AntisymMat3& f) {
  Mat6 w = Mat6::Zero();
  w.block<3, 3>(0, 0) = e.matrix();
  w.block<3, 3>(0, 3) = d;
  w.block<3, 3>(3, 0) = -d.transpose();
  w.block<3, 3>(3, 3) = f.matrix();
  return w;
}

FactorizationReport factorization_check(const SevenModeCC& cc, double tol) {
  check_singles_removed(cc, tol, "factorization_check");
  FactorizationReport rep;

  const Mat3 zx = cc.Z * cc.X;
  rep.zx_asymmetry = (zx - zx.transpose()).cwiseAbs().maxCoeff();
  rep.u_norm = cc.U.matrix().cwiseAbs().maxCoeff();
  const double coord_scale =
      std::max({1.0, cc.X.cwiseAbs().maxCoeff(), cc.Z.cwiseAbs().maxCoeff(),
                std::abs(cc.xi)});
  rep.expected_annihilate = rep.zx_asymmetry <= tol * coord_scale * coord_scale &&
                            rep.u_norm <= tol * coord_scale;
  rep.preconditions_met = rep.expected_annihilate;

  // omega_hat |psi>: the six-mode doubles/triples state, embedded in seven
  // modes, hit by (1/2) omega_{mu nu} p^mu p^nu p^7.
  SixModeCC six{cplx(1.0), cc.X, Mat3::Zero(), cc.xi};
  const AntisymTensor psi6 = cc_exponential_state(six);
  oracle::FockVector psi(7);
  for (int k = 0; k < psi6.component_count(); ++k) {
    const auto tup = psi6.tuple(k);
    std::uint32_t mask = 0;
    for (int m : tup) mask |= 1u << (m - 1);
    psi[mask] = psi6.amplitudes()[size_t(k)];
  }
  const Mat6 w = omega_matrix(cc.Z, AntisymMat3::zero(), cc.U);
  oracle::FockVector applied(7);
  for (int mu = 1; mu <= 6; ++mu) {
    for (int nu = mu + 1; nu <= 6; ++nu) {
      const cplx c = w(mu - 1, nu - 1);
      if (c == cplx(0.0)) continue;
      oracle::FockVector term = oracle::apply_mode_op(psi, oracle::ModeOp::create, 7);
      term = oracle::apply_mode_op(term, oracle::ModeOp::create, nu);
      term = oracle::apply_mode_op(term, oracle::ModeOp::create, mu);
      term *= c;
      applied += term;
    }
  }
  rep.omega_apply_norm = applied.max_abs() / std::max(1.0, psi.max_abs());
  rep.annihilates = rep.omega_apply_norm <= tol * coord_scale * coord_scale;

  if (rep.preconditions_met) {
    const cplx pf = pfaffian6(w);
    const cplx d6 = cc.xi * cc.xi + 4.0 * cc.X.determinant();
    const cplx j = invariant_J(cc_exponential_state(cc));
    rep.factorization_residual = std::abs(j - 0.25 * pf * d6);
  } else {
    rep.factorization_residual = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

int rank_of_N(const Mat7& n, double scale, double tol, double rank_tol) {
  Eigen::JacobiSVD<Mat7> svd(n);
  const double smax = svd.singularValues()(0);
  if (smax <= tol * std::pow(scale, 3)) return 0;
  int rank = 0;
  for (int i = 0; i < 7; ++i) {
    if (svd.singularValues()(i) > rank_tol * smax) ++rank;
  }
  return rank;
}

std::string_view to_string(SevenClass c) {
  switch (c) {
    case SevenClass::c_i: return "I";
    case SevenClass::c_ii: return "II";
    case SevenClass::c_iii: return "III";
    case SevenClass::c_iv: return "IV";
    case SevenClass::c_v: return "V";
    case SevenClass::c_vi_or_vii: return "VI-or-VII";
    case SevenClass::c_viii: return "VIII";
    case SevenClass::c_ix: return "IX";
    case SevenClass::c_x: return "X";
    case SevenClass::c_i_to_v: return "I-V (delegated)";
    case SevenClass::c_indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

/// Restriction to the six modes left after deleting `drop` (ascending relabel).
AntisymTensor restrict_to_six(const AntisymTensor& t, int drop) {
  std::array<int, 6> keep{};
  int k = 0;
  for (int m = 1; m <= 7; ++m) {
    if (m != drop) keep[size_t(k++)] = m;
  }
  AntisymTensor out(3, 6);
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      for (int c = b + 1; c <= 6; ++c) {
        out.set(a, b, c,
                t.get(keep[size_t(a - 1)], keep[size_t(b - 1)],
                      keep[size_t(c - 1)]));
      }
    }
  }
  return out;
}

}  // namespace

SevenClassReport classify7(const AntisymTensor& t, double tol, double rank_tol) {
  check_seven(t, "classify7");
  SevenClassReport r;
  r.tol = tol;
  r.rank_tol = rank_tol;
  r.scale = t.max_abs();
  if (r.scale == 0.0) {
    r.cls = SevenClass::c_i;
    return r;
  }

  const Covariants7 cov = covariants7(t);
  r.J = invariant_J(cov);

  Eigen::JacobiSVD<Mat7> svd(cov.N);
  r.singular_values = svd.singularValues();
  r.rank_N = rank_of_N(cov.N, r.scale, tol, rank_tol);

  if (std::abs(r.J) > tol * std::pow(r.scale, 7)) {
    r.cls = SevenClass::c_x;
    return r;
  }

  switch (r.rank_N) {
    case 4:
      r.cls = SevenClass::c_ix;
      return r;
    case 2:
      r.cls = SevenClass::c_viii;
      return r;
    case 1:
      r.cls = SevenClass::c_vi_or_vii;
      r.ambiguous = true;
      return r;
    case 0:
      break;
    default:
      r.cls = SevenClass::c_indeterminate;
      r.ambiguous = true;
      return r;
  }

  // rank 0: the unpaired classes. Classify on a six-mode subspace when one
  // is visible in this basis (a mode absent from every amplitude).
  for (int drop = 7; drop >= 1; --drop) {
    double involved = 0.0;
    for (int k = 0; k < t.component_count(); ++k) {
      const auto tup = t.tuple(k);
      if (tup[0] == drop || tup[1] == drop || tup[2] == drop) {
        involved = std::max(involved, std::abs(t.amplitudes()[size_t(k)]));
      }
    }
    if (involved <= tol * r.scale) {
      const SixClassReport six = classify6(restrict_to_six(t, drop), tol);
      r.six_mode_class = six.cls;
      r.six_mode_delegated = true;
      switch (six.cls) {
        case SixClass::null_state: r.cls = SevenClass::c_i; break;
        case SixClass::separable: r.cls = SevenClass::c_ii; break;
        case SixClass::biseparable: r.cls = SevenClass::c_iii; break;
        case SixClass::w: r.cls = SevenClass::c_iv; break;
        case SixClass::ghz: r.cls = SevenClass::c_v; break;
      }
      return r;
    }
  }
  r.cls = SevenClass::c_i_to_v;
  r.ambiguous = true;
  return r;
}

namespace {

Vec7 basis_e(int cls) {
  // cls 1..3: E^i = p^i + i p^{ibar}; 4..6: E^{ibar} = p^i - i p^{ibar};
  // 7: E^{4bar} = i p^{4bar}
  Vec7 v = Vec7::Zero();
  const cplx iu(0.0, 1.0);
  if (cls <= 3) {
    v(cls - 1) = 1.0;
    v(cls + 2) = iu;
  } else if (cls <= 6) {
    v(cls - 4) = 1.0;
    v(cls - 1) = -iu;
  } else {
    v(6) = iu;
  }
  return v;
}

AntisymTensor wedge7(int a, int b, int c) {
  std::array<Eigen::VectorXcd, 3> vs{basis_e(a), basis_e(b), basis_e(c)};
  return wedge(std::span<const Eigen::VectorXcd>(vs.data(), vs.size()));
}

// (E^{1 1bar} + E^{2 2bar} + E^{3 3bar}) E^{4bar}
AntisymTensor symplectic_part() {
  AntisymTensor t = wedge7(1, 4, 7);
  t += wedge7(2, 5, 7);
  t += wedge7(3, 6, 7);
  return t;
}

}  // namespace

AntisymTensor canonical7(int cls) {
  switch (cls) {
    case 1:
      return AntisymTensor(3, 7);
    case 2:
      return wedge7(1, 2, 3);
    case 3:
      return wedge7(1, 2, 3) + wedge7(1, 5, 6);
    case 4:
      return wedge7(1, 2, 6) + wedge7(1, 5, 3) + wedge7(4, 2, 3);
    case 5:
      return wedge7(1, 2, 3) + wedge7(4, 5, 6);
    case 6:
      return symplectic_part();
    case 7:
      return symplectic_part() + wedge7(1, 2, 3);
    case 8: {
      AntisymTensor t = symplectic_part();
      t += wedge7(1, 2, 3);
      t += wedge7(1, 5, 6);
      return t;
    }
    case 9: {
      AntisymTensor t = symplectic_part();
      t += wedge7(1, 2, 6);
      t += wedge7(1, 5, 3);
      t += wedge7(4, 2, 3);
      return t;
    }
    case 10: {
      AntisymTensor t = symplectic_part();
      t += wedge7(1, 2, 3);
      t += wedge7(4, 5, 6);
      return t;
    }
    default:
      throw std::invalid_argument("canonical7: class index must be 1..10");
  }
}

}  // namespace fermicc
