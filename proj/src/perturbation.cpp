// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "fermicc/rng.hpp"

namespace fermicc {

namespace {

AntisymTensor ghz_like(double sign_x) {
  // p^{123} -/+ (p^{1 2bar 3bar} + p^{2 3bar 1bar} + p^{3 1bar 2bar})
  // + p^{1 1bar 4bar} + p^{2 2bar 4bar} + p^{3 3bar 4bar}; the first three
  // signs follow the sign of X in CC coordinates.
  AntisymTensor t(3, 7);
  t.set(1, 2, 3, cplx(1.0));
  t.set(1, 5, 6, cplx(sign_x));
  t.set(2, 6, 4, cplx(sign_x));
  t.set(3, 4, 5, cplx(sign_x));
  t.set(1, 4, 7, cplx(1.0));
  t.set(2, 5, 7, cplx(1.0));
  t.set(3, 6, 7, cplx(1.0));
  return t;
}

Vec7 sorted_by_re_im(Vec7 v) {
  std::array<cplx, 7> a;
  for (int i = 0; i < 7; ++i) a[size_t(i)] = v(i);
  std::sort(a.begin(), a.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  for (int i = 0; i < 7; ++i) v(i) = a[size_t(i)];
  return v;
}

}  // namespace

AntisymTensor psi_minus() { return ghz_like(-1.0); }
AntisymTensor psi_plus() { return ghz_like(+1.0); }

AntisymTensor perturb(GhzBase base, const TriplesPerturbation& p) {
  AntisymTensor t = base == GhzBase::minus ? psi_minus() : psi_plus();
  t.add(std::array<int, 3>{4, 5, 6}, p.xi);
  t.add(std::array<int, 3>{5, 6, 7}, p.u(0));
  t.add(std::array<int, 3>{6, 4, 7}, p.u(1));
  t.add(std::array<int, 3>{4, 5, 7}, p.u(2));
  return t;
}

SevenModeCC perturbed_cc(GhzBase base, const TriplesPerturbation& p) {
  SevenModeCC cc;
  cc.X = (base == GhzBase::minus ? -1.0 : 1.0) * Mat3::Identity();
  cc.Z = Mat3::Identity();
  cc.xi = p.xi;
  cc.U = AntisymMat3::from_vector(p.u);
  return cc;
}

cplx q_squared(const TriplesPerturbation& p) {
  return p.xi * p.xi + p.u(0) * p.u(0) + p.u(1) * p.u(1) + p.u(2) * p.u(2);
}

cplx conifold_residual(const TriplesPerturbation& p, double q0) {
  return q_squared(p) - cplx(q0 * q0);
}

Mat7 b_matrix(GhzBase base, const TriplesPerturbation& p) {
  const Mat3 u = AntisymMat3::from_vector(p.u).matrix();
  const Mat3 id = Mat3::Identity();
  Mat7 b = Mat7::Zero();
  if (base == GhzBase::minus) {
    b.block<3, 3>(0, 0) = id;
    b.block<3, 3>(0, 3) = -0.5 * (p.xi * id + u);
    b.block<3, 3>(3, 0) = -0.5 * (p.xi * id - u);
  } else {
    b.block<3, 3>(0, 0) = -id;
    b.block<3, 3>(0, 3) = -0.5 * (p.xi * id - u);
    b.block<3, 3>(3, 0) = -0.5 * (p.xi * id + u);
  }
  b.block<3, 3>(3, 3) = id;
  b(6, 6) = cplx(1.0);
  for (int i = 0; i < 3; ++i) {
    b(i, 6) = -0.5 * p.u(i);
    b(6, i) = -0.5 * p.u(i);
  }
  return b;
}

Vec7 b_spectrum(GhzBase base, const TriplesPerturbation& p) {
  Eigen::ComplexEigenSolver<Mat7> es(b_matrix(base, p), false);
  return sorted_by_re_im(es.eigenvalues());
}

Vec7 b_spectrum_predicted(GhzBase base, const TriplesPerturbation& p) {
  const cplx q2 = q_squared(p);
  Vec7 v;
  if (base == GhzBase::minus) {
    const cplx q = std::sqrt(q2);
    for (int i = 0; i < 3; ++i) {
      v(i) = cplx(1.0) - 0.5 * q;
      v(i + 3) = cplx(1.0) + 0.5 * q;
    }
  } else {
    const cplx lam = std::sqrt(cplx(1.0) + 0.25 * q2);
    for (int i = 0; i < 3; ++i) {
      v(i) = -lam;
      v(i + 3) = lam;
    }
  }
  v(6) = cplx(1.0);
  return sorted_by_re_im(v);
}

double b_congruence_offdiag(const TriplesPerturbation& p) {
  const cplx q = std::sqrt(q_squared(p));
  if (std::abs(q) < 0.1) {
    throw std::invalid_argument("b_congruence_offdiag: needs |Q| away from 0");
  }
  const Mat3 u = AntisymMat3::from_vector(p.u).matrix();
  const Mat3 id = Mat3::Identity();
  Mat7 s = Mat7::Zero();
  s.block<3, 3>(0, 0) = q * id;
  s.block<3, 3>(0, 3) = q * id;
  s.block<3, 3>(3, 0) = p.xi * id - u;
  s.block<3, 3>(3, 3) = u - p.xi * id;
  for (int i = 0; i < 3; ++i) {
    s(3 + i, 6) = std::sqrt(2.0) * p.u(i);
    s(6, i) = p.u(i);
    s(6, 3 + i) = -p.u(i);
  }
  s(6, 6) = -std::sqrt(2.0) * p.xi;
  s /= std::sqrt(2.0) * q;
  const Mat7 diag = s.transpose() * b_matrix(GhzBase::minus, p) * s;
  double off = 0.0;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      if (i != j) off = std::max(off, std::abs(diag(i, j)));
    }
  }
  return off;
}

std::vector<SweepRecord> sweep(GhzBase base,
                               std::span<const TriplesPerturbation> path,
                               double tol) {
  std::vector<SweepRecord> out;
  out.reserve(path.size());
  for (const TriplesPerturbation& p : path) {
    SweepRecord rec;
    rec.p = p;
    rec.q2 = q_squared(p);
    const SevenModeCC cc = perturbed_cc(base, p);
    rec.J = invariant_J_cc(cc);
    const auto [n, l] = cc_covariants_NL(cc);
    const double scale =
        std::max({1.0, std::abs(p.xi), p.u.cwiseAbs().maxCoeff()});
    rec.rank_N = rank_of_N(n, scale, tol);
    rec.b_eigenvalues = b_spectrum(base, p);
    if (std::abs(rec.J) > tol * std::pow(scale, 7)) {
      rec.cls = "X";
    } else {
      switch (rec.rank_N) {
        case 4: rec.cls = "IX"; break;
        case 2: rec.cls = "VIII"; break;
        case 1: rec.cls = "VI-or-VII"; break;
        case 0: rec.cls = "I-V (delegated)"; break;
        default: rec.cls = "indeterminate"; break;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records) {
  os << "re_xi,im_xi,re_u1,im_u1,re_u2,im_u2,re_u3,im_u3,"
        "re_q2,im_q2,re_J,im_J,rank_N,class\n";
  char buf[64];
  const auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g%c", v, sep);
    os << buf;
  };
  for (const SweepRecord& r : records) {
    put(r.p.xi.real(), ',');
    put(r.p.xi.imag(), ',');
    for (int i = 0; i < 3; ++i) {
      put(r.p.u(i).real(), ',');
      put(r.p.u(i).imag(), ',');
    }
    put(r.q2.real(), ',');
    put(r.q2.imag(), ',');
    put(r.J.real(), ',');
    put(r.J.imag(), ',');
    os << r.rank_N << ',' << r.cls << '\n';
  }
}

std::vector<TriplesPerturbation> sphere_samples(double radius, int count,
                                                std::uint64_t seed) {
  Rng rng(seed);
  std::vector<TriplesPerturbation> out;
  out.reserve(size_t(count));
  while (static_cast<int>(out.size()) < count) {
    Eigen::Vector4d g;
    for (int i = 0; i < 4; ++i) g(i) = rng.gauss();
    const double nrm = g.norm();
    if (nrm < 1e-12) continue;
    g *= radius / nrm;
    TriplesPerturbation p;
    p.xi = cplx(g(0));
    p.u = Vec3(cplx(g(1)), cplx(g(2)), cplx(g(3)));
    out.push_back(p);
  }
  return out;
}

}  // namespace fermicc
