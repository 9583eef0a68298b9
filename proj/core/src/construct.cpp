// Copyright 2026 The lsakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsakit/construct.hpp"

#include <string>
#include <vector>

#include "lsakit/check.hpp"
#include "lsakit/error.hpp"

namespace lsakit {

RepTensor dual_of(const RepTensor& rho) {
  RepTensor out(rho.source_dim(), rho.module_dim());
  for (std::size_t i = 0; i < rho.source_dim(); ++i) {
    for (std::size_t j = 0; j < rho.module_dim(); ++j) {
      for (std::size_t k = 0; k < rho.module_dim(); ++k) out.t(i, k, j) = -rho.t(i, j, k);
    }
  }
  return out;
}

RepTensor dual_left_action(const StructureTensor& op) { return dual_of(left_rep(op)); }

RepTensor dual_right_action(const StructureTensor& op) { return dual_of(right_rep(op)); }

RepTensor coadjoint(const StructureTensor& br) { return dual_of(left_rep(br)); }

StructureTensor semidirect_lie(const StructureTensor& br, const RepTensor& rho) {
  require_same_dim(br.dim(), rho.source_dim(), "semidirect_lie");
  if (!check_jacobi(br).passed() || !check_representation(br, rho).passed()) {
    throw Error(ErrorCode::kNotARepresentation, "semidirect_lie needs a Lie bracket and a representation");
  }
  const std::size_t n = br.dim();
  const std::size_t m = rho.module_dim();
  StructureTensor out(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = br(i, j, k);
    }
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        out(i, n + j, n + k) = rho.t(i, k, j);
        out(n + j, i, n + k) = -rho.t(i, k, j);
      }
    }
  }
  return out;
}

Form pairing_metric(std::size_t n) {
  Form g(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.m(i, n + i) = 1;
    g.m(n + i, i) = 1;
  }
  return g;
}

Form symplectic_pairing(std::size_t n) {
  Form w(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    w.m(i, n + i) = -1;
    w.m(n + i, i) = 1;
  }
  return w;
}

namespace {

void require_special_symplectic(const SpecialSymplecticData& s) {
  const CheckReport rep = check_special_symplectic(s);
  if (!rep.passed()) {
    throw Error(ErrorCode::kInvalidInput,
                "input is not special symplectic (" + rep.violations.front().where + ")");
  }
}

// Connection (x,a) acting on (y,b) as (conn_x y, act(x) b).
StructureTensor doubled_connection(const StructureTensor& conn, const RepTensor& act) {
  const std::size_t n = conn.dim();
  StructureTensor out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out(i, j, k) = conn(i, j, k);
        out(i, n + j, n + k) = act.t(i, k, j);
      }
    }
  }
  return out;
}

DoubleData cotangent_from(const StructureTensor& br, const StructureTensor& conn) {
  const RepTensor dual = dual_left_action(conn);
  DoubleData d;
  d.base_dim = conn.dim();
  d.bracket = semidirect_lie(br, dual);
  d.conn = doubled_connection(conn, dual);
  d.metric = pairing_metric(conn.dim());
  d.omega_p = symplectic_pairing(conn.dim());
  return d;
}

Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  const std::size_t n = a.rows();
  Matrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i, n + j) = b(i, j);
      out(n + i, j) = c(i, j);
      out(n + i, n + j) = d(i, j);
    }
  }
  return out;
}

}  // namespace

DoubleData tangent_double(const SpecialSymplecticData& s) {
  require_special_symplectic(s);
  const std::size_t n = s.conn.dim();
  const RepTensor rho = left_rep(s.conn);
  DoubleData d;
  d.base_dim = n;
  d.bracket = semidirect_lie(s.bracket, rho);
  d.conn = doubled_connection(s.conn, rho);
  d.metric = Form(block(Matrix(n, n), s.omega.m, s.omega.m.transpose(), Matrix(n, n)));
  return d;
}

DoubleData cotangent_double(const SpecialSymplecticData& s) {
  require_special_symplectic(s);
  return cotangent_from(s.bracket, s.conn);
}

DoubleData cotangent_double(const StructureTensor& lsa) {
  if (!check_left_symmetric(lsa).passed()) {
    throw Error(ErrorCode::kNotAnLSA, "cotangent_double needs a left-symmetric product");
  }
  return cotangent_from(sub_adjacent(lsa), lsa);
}

Endo phi_from_omega(const Form& w) {
  if (!check_nondegenerate(w).passed()) {
    throw Error(ErrorCode::kDegenerateForm, "phi_from_omega needs a nondegenerate form");
  }
  return Endo(w.m.transpose());
}

Endo build_N(const Rational& l1, const Rational& l2, const Rational& l3, const Rational& l4,
             const Endo& f) {
  const std::size_t n = f.dim();
  const Matrix id = Matrix::identity(n);
  const Matrix finv = mat_inverse(f.m);
  return Endo(block(l2 * id, l1 * finv, l3 * f.m, l4 * id));
}

void validate_params(const FamilyParams& p) {
  if (p.sign != 1 && p.sign != -1) throw Error(ErrorCode::kBadParams, "sign must be +1 or -1");
  if (p.lambda.is_zero()) throw Error(ErrorCode::kBadParams, "lambda must be nonzero");
  if (p.family == Family::kF2 && p.mu.is_zero()) {
    throw Error(ErrorCode::kBadParams, "F2 needs mu != 0");
  }
  if (p.family == Family::kF3) {
    if (p.k.is_zero()) throw Error(ErrorCode::kBadParams, "F3 needs k != 0");
    const Rational k2 = p.k * p.k;
    const Rational l2 = p.lambda * p.lambda;
    if (k2 > l2) throw Error(ErrorCode::kBadParams, "F3 needs k^2 <= lambda^2");
    const Rational m2 = p.mu * p.mu;
    if ((m2 + 1) * (m2 + 1) * k2 == Rational(4) * m2 * l2) {
      throw Error(ErrorCode::kBadParams, "F3 needs (mu^2+1)^2 k^2 != 4 mu^2 lambda^2");
    }
    Rational root;
    if (!(Rational(1) - k2 / l2).try_sqrt(root)) {
      throw Error(ErrorCode::kIrrationalSquareRoot,
                  "1 - k^2/lambda^2 = " + (Rational(1) - k2 / l2).str() + " is not a rational square");
    }
  }
}

ComplexProduct family_JE(const FamilyParams& p, const Endo& f) {
  validate_params(p);
  const Rational& lam = p.lambda;
  const Rational& mu = p.mu;
  const Rational sgn(p.sign);
  ComplexProduct cp;
  cp.j = build_N(lam, mu, (Rational(-1) - mu * mu) / lam, -mu, f);
  switch (p.family) {
    case Family::kF1:
      cp.e = Endo(sgn * build_N(0, 1, Rational(-2) * mu / lam, -1, f).m);
      break;
    case Family::kF2: {
      const Rational khat = Rational(2) * mu * lam / (Rational(1) + mu * mu);
      cp.e = Endo(sgn * build_N(khat, 1, 0, -1, f).m);
      break;
    }
    case Family::kF3: {
      Rational root;
      (Rational(1) - p.k * p.k / (lam * lam)).try_sqrt(root);
      const Rational k2 = p.k * mu / lam + sgn * root;
      cp.e = build_N(p.k, k2, (Rational(1) - k2 * k2) / p.k, -k2, f);
      break;
    }
  }
  const std::size_t n = cp.j.dim();
  const Matrix id = Matrix::identity(n);
  if (!(cp.j.m * cp.j.m == -id) || !(cp.e.m * cp.e.m == id) ||
      !(cp.j.m * cp.e.m == -(cp.e.m * cp.j.m))) {
    throw Error(ErrorCode::kInternalMismatch, "family operators fail J^2=-1, E^2=1 or JE=-EJ");
  }
  return cp;
}

HypersymplecticPackage hypersymplectic_from_tangent(const SpecialSymplecticData& s,
                                                    const FamilyParams& p) {
  validate_params(p);
  HypersymplecticPackage pkg;
  pkg.dbl = tangent_double(s);
  const ComplexProduct cp = family_JE(p, Endo::identity(s.conn.dim()));
  pkg.j = cp.j;
  pkg.e = cp.e;
  pkg.g = pkg.dbl.metric;
  pkg.report = check_hypersymplectic(pkg.dbl.bracket, pkg.j, pkg.e, pkg.g);
  return pkg;
}

HypersymplecticPackage hypersymplectic_from_cotangent(const SpecialSymplecticData& s,
                                                      const FamilyParams& p) {
  validate_params(p);
  HypersymplecticPackage pkg;
  pkg.dbl = cotangent_double(s);
  const ComplexProduct cp = family_JE(p, phi_from_omega(s.omega));
  pkg.j = cp.j;
  pkg.e = cp.e;
  pkg.g = pkg.dbl.metric;
  pkg.report = check_hypersymplectic(pkg.dbl.bracket, pkg.j, pkg.e, pkg.g);
  return pkg;
}

StructureTensor lsa_from_symplectic(const StructureTensor& br, const Form& w) {
  require_same_dim(br.dim(), w.dim(), "lsa_from_symplectic");
  if (!check_nondegenerate(w).passed()) {
    throw Error(ErrorCode::kDegenerateForm, "lsa_from_symplectic needs a nondegenerate form");
  }
  if (!check_jacobi(br).passed() || !check_skew(w).passed() || !check_closed(br, w).passed()) {
    throw Error(ErrorCode::kInvalidInput, "lsa_from_symplectic needs a symplectic Lie algebra");
  }
  const std::size_t n = br.dim();
  // For fixed x, z: sum_k c_k w(e_y, e_k) = -w([e_x, e_y], e_z) for every y.
  const Matrix winv = mat_inverse(w.m);
  StructureTensor conn(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      Vector rhs(n);
      for (std::size_t y = 0; y < n; ++y) {
        rhs[y] = -dot(br.basis_product(x, y), w.m.column(z));
      }
      const Vector c = winv.apply(rhs);
      for (std::size_t k = 0; k < n; ++k) conn(x, z, k) = c[k];
    }
  }
  return conn;
}

Plsa plsa_from_special_symplectic(const SpecialSymplecticData& s) {
  require_special_symplectic(s);
  const std::size_t n = s.conn.dim();
  // w(u, e_z) = (w^T u)_z, so u = (w^T)^-1 rhs.
  const Matrix wt_inv = mat_inverse(s.omega.m.transpose());
  Plsa p{StructureTensor(n), StructureTensor(n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Vector rp(n), rs(n);
      for (std::size_t z = 0; z < n; ++z) {
        rp[z] = -dot(s.omega.m.row(y), s.conn.basis_product(z, x));
        rs[z] = dot(s.omega.m.row(y), s.bracket.basis_product(z, x));
      }
      const Vector up = wt_inv.apply(rp);
      const Vector us = wt_inv.apply(rs);
      for (std::size_t k = 0; k < n; ++k) {
        p.prec(x, y, k) = up[k];
        p.succ(x, y, k) = us[k];
      }
    }
  }
  return p;
}

StructureTensor affine_product(const CotangentExtensionData& d) {
  const std::size_t n = d.base.dim();
  require_same_dim(d.l.source_dim(), n, "extension l");
  require_same_dim(d.r.source_dim(), n, "extension r");
  require_same_dim(d.l.module_dim(), n, "extension l");
  require_same_dim(d.r.module_dim(), n, "extension r");
  require_same_dim(d.phi.d1(), n, "extension phi");
  require_same_dim(d.phi.d2(), n, "extension phi");
  require_same_dim(d.phi.d3(), n, "extension phi");
  StructureTensor out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out(i, j, k) = d.base(i, j, k);
        out(i, j, n + k) = d.phi(i, j, k);
        out(i, n + j, n + k) = d.l.t(i, k, j);
        out(n + i, j, n + k) = d.r.t(j, k, i);
      }
    }
  }
  return out;
}

ExtensionResult affine_cotangent_extension(const CotangentExtensionData& d) {
  if (!check_left_symmetric(d.base).passed()) {
    throw Error(ErrorCode::kNotAnLSA, "extension base must be left-symmetric");
  }
  const std::size_t n = d.base.dim();
  ExtensionResult res;
  res.product = affine_product(d);
  res.report = CheckReport("affine-extension");

  const RepTensor ldual = dual_left_action(d.base);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix diff = d.l.at(i) - ldual.at(i);
    if (!diff.is_zero()) res.report.add("l-is-dual", {i}, flatten(diff));
  }

  // <x prec y, a> = -<r(x)a, y>
  res.derived.prec = StructureTensor(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t a = 0; a < n; ++a) res.derived.prec(x, y, a) = -d.r.t(x, y, a);
    }
  }
  res.derived.succ = d.base - res.derived.prec;
  res.report.merge(check_plsa(res.derived));

  auto phi_of = [&](std::span<const Rational> u, std::span<const Rational> v) {
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j].is_zero()) continue;
        const Rational s = u[i] * v[j];
        for (std::size_t k = 0; k < n; ++k) out[k].add_product(s, d.phi(i, j, k));
      }
    }
    return out;
  };
  std::vector<Vector> e;
  std::vector<Matrix> lm, rm;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(basis_vector(n, i));
    lm.push_back(d.l.at(i));
    rm.push_back(d.r.at(i));
  }
  auto side = [&](std::size_t x, std::size_t y, std::size_t z) {
    return rm[z].apply(phi_of(e[x], e[y])) + phi_of(d.base.basis_product(x, y), e[z]) -
           lm[x].apply(phi_of(e[y], e[z])) - phi_of(e[x], d.base.basis_product(y, z));
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Vector s = side(x, y, z) - side(y, x, z);
        if (!is_zero(s)) res.report.add("phi-cocycle", {x, y, z}, std::move(s));
        Rational t = d.phi(x, y, z) - d.phi(x, z, y);
        if (!t.is_zero()) res.report.add("phi-symmetry", {x, y, z}, {t});
      }
    }
  }
  return res;
}

CheckReport post_affine_check(const StructureTensor& nabla, const StructureTensor& nabla_tilde,
                              const StructureTensor& br) {
  require_same_dim(nabla.dim(), nabla_tilde.dim(), "post_affine_check");
  require_same_dim(nabla.dim(), br.dim(), "post_affine_check");
  CheckReport rep("post-affine");
  CheckReport f1 = check_flat(br, nabla), t1 = check_torsion_free(br, nabla);
  CheckReport f2 = check_flat(br, nabla_tilde), t2 = check_torsion_free(br, nabla_tilde);
  f2.check = "flat-tilde";
  t2.check = "torsion-free-tilde";
  rep.merge(f1);
  rep.merge(t1);
  rep.merge(f2);
  rep.merge(t2);

  const std::size_t n = br.dim();
  const StructureTensor diff = nabla_tilde - nabla;
  std::vector<Matrix> ln, ld;
  for (std::size_t i = 0; i < n; ++i) {
    ln.push_back(nabla.left_basis(i));
    ld.push_back(diff.left_basis(i));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Vector s = ln[x].apply(diff.basis_product(y, z)) -
                   ld[z].apply(nabla_tilde.basis_product(x, y)) -
                   ld[y].apply(nabla_tilde.basis_product(x, z));
        if (!is_zero(s)) rep.add("compatibility", {x, y, z}, std::move(s));
      }
    }
  }

  // (prec, succ) = (nabla_tilde - nabla, nabla) must be a post-left-symmetric
  // algebra whose succ is torsion free for br.
  const bool plsa_route =
      check_plsa(Plsa{diff, nabla}).passed() && t1.passed();
  if (plsa_route != rep.passed()) {
    rep.alarms.push_back("post-affine identity and post-left-symmetric route disagree");
  }
  return rep;
}

}  // namespace lsakit
