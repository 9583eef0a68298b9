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

#include "lsakit/check.hpp"

#include <vector>

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

std::vector<Matrix> lefts(const StructureTensor& op) {
  std::vector<Matrix> out;
  out.reserve(op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i) out.push_back(op.left_basis(i));
  return out;
}

std::vector<Matrix> rights(const StructureTensor& op) {
  std::vector<Matrix> out;
  out.reserve(op.dim());
  for (std::size_t i = 0; i < op.dim(); ++i) out.push_back(op.right_basis(i));
  return out;
}

// Residual columns of a square matrix that should vanish.
void add_nonzero_columns(CheckReport& rep, const char* where, const Matrix& m) {
  for (std::size_t i = 0; i < m.cols(); ++i) {
    Vector col = m.column(i);
    if (!is_zero(col)) rep.add(where, {i}, std::move(col));
  }
}

}  // namespace

Vector flatten(const Matrix& m) {
  auto e = m.entries();
  return Vector(e.begin(), e.end());
}

CheckReport check_skew(const Form& b) {
  CheckReport rep("skew");
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational s = b.m(i, j) + b.m(j, i);
      if (!s.is_zero()) rep.add("skew", {i, j}, {s});
    }
  }
  return rep;
}

CheckReport check_symmetric(const Form& b) {
  CheckReport rep("symmetric");
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = b.m(i, j) - b.m(j, i);
      if (!s.is_zero()) rep.add("symmetric", {i, j}, {s});
    }
  }
  return rep;
}

CheckReport check_nondegenerate(const Form& b) {
  CheckReport rep("nondegenerate");
  const std::size_t r = mat_rank(b.m);
  if (r != b.dim()) rep.add("rank", {}, {Rational(static_cast<long>(r))});
  return rep;
}

CheckReport check_jacobi(const StructureTensor& br) {
  CheckReport rep("jacobi");
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector s = br.basis_product(i, j) + br.basis_product(j, i);
      if (!is_zero(s)) rep.add("antisymmetry", {i, j}, std::move(s));
    }
  }
  const auto r = rights(br);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector s = r[k].apply(br.basis_product(i, j)) + r[i].apply(br.basis_product(j, k)) +
                   r[j].apply(br.basis_product(k, i));
        if (!is_zero(s)) rep.add("jacobi", {i, j, k}, std::move(s));
      }
    }
  }
  return rep;
}

CheckReport check_left_symmetric(const StructureTensor& op) {
  CheckReport rep("left-symmetric");
  const std::size_t n = op.dim();
  const auto l = lefts(op);
  const auto r = rights(op);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector a = r[k].apply(op.basis_product(i, j)) - l[i].apply(op.basis_product(j, k));
        Vector b = r[k].apply(op.basis_product(j, i)) - l[j].apply(op.basis_product(i, k));
        Vector s = a - b;
        if (!is_zero(s)) rep.add("associator", {i, j, k}, std::move(s));
      }
    }
  }
  return rep;
}

CheckReport check_commutative(const StructureTensor& op) {
  CheckReport rep("commutative");
  const std::size_t n = op.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector s = op.basis_product(i, j) - op.basis_product(j, i);
      if (!is_zero(s)) rep.add("commutative", {i, j}, std::move(s));
    }
  }
  return rep;
}

CheckReport check_plsa(const Plsa& p) {
  require_same_dim(p.prec.dim(), p.succ.dim(), "check_plsa");
  CheckReport rep("plsa");
  const std::size_t n = p.dim();
  const StructureTensor dot = p.dot();
  const CheckReport comm = check_commutative(p.prec);
  CheckReport succ_ls = check_left_symmetric(p.succ);
  succ_ls.check = "succ";
  rep.merge(comm);
  rep.merge(succ_ls);

  const auto succ_l = lefts(p.succ);
  const auto prec_r = rights(p.prec);
  const auto prec_l = lefts(p.prec);
  std::size_t compat_failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector s = succ_l[i].apply(p.prec.basis_product(j, k)) -
                   prec_r[k].apply(dot.basis_product(i, j)) -
                   prec_l[j].apply(dot.basis_product(i, k));
        if (!is_zero(s)) {
          rep.add("compatible", {i, j, k}, std::move(s));
          ++compat_failures;
        }
      }
    }
  }
  if (comm.passed() && compat_failures == 0) {
    const bool dot_ls = check_left_symmetric(dot).passed();
    if (dot_ls != succ_ls.passed()) {
      rep.alarms.push_back("succ and prec+succ disagree on left-symmetry");
    }
  }
  return rep;
}

CheckReport check_torsion_free(const StructureTensor& br, const StructureTensor& conn) {
  require_same_dim(br.dim(), conn.dim(), "check_torsion_free");
  CheckReport rep("torsion-free");
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector s = conn.basis_product(i, j) - conn.basis_product(j, i) - br.basis_product(i, j);
      if (!is_zero(s)) rep.add("torsion", {i, j}, std::move(s));
    }
  }
  return rep;
}

CheckReport check_flat(const StructureTensor& br, const StructureTensor& conn) {
  require_same_dim(br.dim(), conn.dim(), "check_flat");
  CheckReport rep("flat");
  const std::size_t n = br.dim();
  const auto l = lefts(conn);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix curv = l[i] * l[j] - l[j] * l[i] - conn.left(br.basis_product(i, j));
      if (!curv.is_zero()) rep.add("curvature", {i, j}, flatten(curv));
    }
  }
  return rep;
}

CheckReport check_closed(const StructureTensor& br, const Form& w) {
  require_same_dim(br.dim(), w.dim(), "check_closed");
  CheckReport rep("closed");
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = dot(w.m.row(i), br.basis_product(j, k)) +
                     dot(w.m.row(j), br.basis_product(k, i)) +
                     dot(w.m.row(k), br.basis_product(i, j));
        if (!s.is_zero()) rep.add("d-omega", {i, j, k}, {s});
      }
    }
  }
  return rep;
}

CheckReport check_parallel_form(const StructureTensor& conn, const Form& w) {
  require_same_dim(conn.dim(), w.dim(), "check_parallel_form");
  CheckReport rep("parallel");
  const std::size_t n = conn.dim();
  const Matrix wt = w.m.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    // a[j][k] = w(conn_i e_j, e_k)
    std::vector<Vector> a;
    for (std::size_t j = 0; j < n; ++j) a.push_back(wt.apply(conn.basis_product(i, j)));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = a[j][k] - a[k][j];
        if (!s.is_zero()) rep.add("parallel", {i, j, k}, {s});
      }
    }
  }
  return rep;
}

CheckReport check_special_symplectic(const StructureTensor& br, const StructureTensor& conn,
                                     const Form& w) {
  require_same_dim(br.dim(), conn.dim(), "check_special_symplectic");
  require_same_dim(br.dim(), w.dim(), "check_special_symplectic");
  CheckReport rep("special-symplectic");
  const CheckReport tf = check_torsion_free(br, conn);
  const CheckReport par = check_parallel_form(conn, w);
  const CheckReport closed = check_closed(br, w);
  rep.merge(check_jacobi(br));
  rep.merge(tf);
  rep.merge(check_flat(br, conn));
  rep.merge(check_skew(w));
  rep.merge(check_nondegenerate(w));
  rep.merge(par);
  rep.merge(closed);
  if (tf.passed() && par.passed() && !closed.passed()) {
    rep.alarms.push_back("form is parallel for a torsion-free connection but not closed");
  }
  return rep;
}

CheckReport check_special_symplectic(const SpecialSymplecticData& s) {
  return check_special_symplectic(s.bracket, s.conn, s.omega);
}

StructureTensor nijenhuis_torsion(const StructureTensor& br, const Endo& n) {
  require_same_dim(br.dim(), n.dim(), "nijenhuis_torsion");
  const std::size_t d = br.dim();
  const Matrix n2 = n.m * n.m;
  StructureTensor t(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Vector ni = n.m.column(i);
    for (std::size_t j = 0; j < d; ++j) {
      const Vector nj = n.m.column(j);
      Vector v = br.apply(ni, nj) + n2.apply(br.basis_product(i, j)) -
                 n.m.apply(br.apply(ni, basis_vector(d, j)) + br.apply(basis_vector(d, i), nj));
      for (std::size_t k = 0; k < d; ++k) t(i, j, k) = v[k];
    }
  }
  return t;
}

CheckReport check_paracomplex(const StructureTensor& br, const Endo& e) {
  require_same_dim(br.dim(), e.dim(), "check_paracomplex");
  CheckReport rep("paracomplex");
  const std::size_t n = e.dim();
  const Matrix id = Matrix::identity(n);
  add_nonzero_columns(rep, "E-squared", e.m * e.m - id);
  if (e.m == id) rep.add("E-is-identity", {}, {});
  if (e.m == -id) rep.add("E-is-minus-identity", {}, {});
  const std::size_t plus = n - mat_rank(e.m - id);
  const std::size_t minus = n - mat_rank(e.m + id);
  if (plus != minus) {
    rep.add("eigenspaces", {},
            {Rational(static_cast<long>(plus)), Rational(static_cast<long>(minus))});
  }
  const StructureTensor te = nijenhuis_torsion(br, e);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = te.basis_product(i, j);
      if (!is_zero(v)) rep.add("torsion-E", {i, j}, std::move(v));
    }
  }
  return rep;
}

CheckReport check_complex_product(const StructureTensor& br, const Endo& j, const Endo& e) {
  require_same_dim(br.dim(), j.dim(), "check_complex_product");
  require_same_dim(br.dim(), e.dim(), "check_complex_product");
  CheckReport rep("complex-product");
  const std::size_t n = j.dim();
  add_nonzero_columns(rep, "J-squared", j.m * j.m + Matrix::identity(n));
  add_nonzero_columns(rep, "anticommute", j.m * e.m + e.m * j.m);
  const StructureTensor tj = nijenhuis_torsion(br, j);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = tj.basis_product(a, b);
      if (!is_zero(v)) rep.add("torsion-J", {a, b}, std::move(v));
    }
  }
  const CheckReport pc = check_paracomplex(br, e);
  for (const auto& v : pc.violations) rep.violations.push_back(v);
  return rep;
}

CheckReport check_metric_compatible(const Form& g, const Endo& j, const Endo& e) {
  require_same_dim(g.dim(), j.dim(), "check_metric_compatible");
  require_same_dim(g.dim(), e.dim(), "check_metric_compatible");
  CheckReport rep("metric");
  rep.merge(check_symmetric(g));
  rep.merge(check_nondegenerate(g));
  const Matrix gj = j.m.transpose() * g.m * j.m - g.m;
  const Matrix ge = e.m.transpose() * g.m * e.m + g.m;
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!gj(a, b).is_zero()) rep.add("J-compatible", {a, b}, {gj(a, b)});
      if (!ge(a, b).is_zero()) rep.add("E-compatible", {a, b}, {ge(a, b)});
    }
  }
  return rep;
}

CheckReport check_hypersymplectic(const StructureTensor& br, const Endo& j, const Endo& e,
                                  const Form& g) {
  CheckReport rep("hypersymplectic");
  rep.merge(check_jacobi(br));
  rep.merge(check_complex_product(br, j, e));
  rep.merge(check_metric_compatible(g, j, e));
  CheckReport c1 = check_closed(br, twist_form(g, j));
  CheckReport c2 = check_closed(br, twist_form(g, e));
  CheckReport c3 = check_closed(br, twist_form(g, Endo(j.m * e.m)));
  c1.check = "omega1";
  c2.check = "omega2";
  c3.check = "omega3";
  rep.merge(c1);
  rep.merge(c2);
  rep.merge(c3);
  if (c1.passed() && (!c2.passed() || !c3.passed())) {
    rep.alarms.push_back("omega1 closed but omega2 or omega3 not closed");
  }
  return rep;
}

CheckReport check_representation(const StructureTensor& br, const RepTensor& rho) {
  require_same_dim(br.dim(), rho.source_dim(), "check_representation");
  CheckReport rep("representation");
  const std::size_t n = br.dim();
  std::vector<Matrix> r;
  for (std::size_t i = 0; i < n; ++i) r.push_back(rho.at(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix s = rho.of(br.basis_product(i, j)) - (r[i] * r[j] - r[j] * r[i]);
      if (!s.is_zero()) rep.add("homomorphism", {i, j}, flatten(s));
    }
  }
  return rep;
}

CheckReport check_bimodule(const StructureTensor& lsa, const RepTensor& l, const RepTensor& r) {
  require_same_dim(lsa.dim(), l.source_dim(), "check_bimodule");
  require_same_dim(lsa.dim(), r.source_dim(), "check_bimodule");
  require_same_dim(l.module_dim(), r.module_dim(), "check_bimodule");
  CheckReport rep("bimodule");
  const std::size_t n = lsa.dim();
  std::vector<Matrix> lm, rm;
  for (std::size_t i = 0; i < n; ++i) {
    lm.push_back(l.at(i));
    rm.push_back(r.at(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xy = lsa.basis_product(i, j);
      const Vector yx = lsa.basis_product(j, i);
      Matrix s1 = lm[i] * lm[j] - l.of(xy) - lm[j] * lm[i] + l.of(yx);
      if (!s1.is_zero()) rep.add("left", {i, j}, flatten(s1));
      Matrix s2 = lm[i] * rm[j] - rm[j] * lm[i] - r.of(xy) + rm[j] * rm[i];
      if (!s2.is_zero()) rep.add("right", {i, j}, flatten(s2));
    }
  }
  return rep;
}

}  // namespace lsakit
