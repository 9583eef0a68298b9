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

#include "oracle.hpp"

#include <utility>

namespace lsakit::oracle {

namespace {

using Tensor = Tensor3;

bool zero(const Vector& v) {
  for (const auto& q : v) {
    if (!q.is_zero()) return false;
  }
  return true;
}

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Matrix identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool same(const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

Matrix scaled(const Matrix& a, const Rational& s) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  }
  return out;
}

// y -> x o y as a matrix.
Matrix lmat(const StructureTensor& c, const Vector& x) {
  const std::size_t n = c.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector col = mul(c, x, e(n, i));
    for (std::size_t p = 0; p < n; ++p) m(p, i) = col[p];
  }
  return m;
}

// y -> y o x as a matrix.
Matrix rmat(const StructureTensor& c, const Vector& x) {
  const std::size_t n = c.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector col = mul(c, e(n, i), x);
    for (std::size_t p = 0; p < n; ++p) m(p, i) = col[p];
  }
  return m;
}

// (f (x) id) t
Matrix on_first(const Matrix& f, const Matrix& t) {
  Matrix out(t.rows(), t.cols());
  for (std::size_t p = 0; p < f.rows(); ++p) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      for (std::size_t i = 0; i < t.rows(); ++i) out(p, j) += f(p, i) * t(i, j);
    }
  }
  return out;
}

// (id (x) f) t
Matrix on_second(const Matrix& f, const Matrix& t) {
  Matrix out(t.rows(), t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t q = 0; q < f.rows(); ++q) {
      for (std::size_t j = 0; j < t.cols(); ++j) out(i, q) += f(q, j) * t(i, j);
    }
  }
  return out;
}

Matrix swap(const Matrix& t) {
  Matrix out(t.cols(), t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) out(j, i) = t(i, j);
  }
  return out;
}

Matrix plus(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

Matrix minus(const Matrix& a, const Matrix& b) { return plus(a, scaled(b, -1)); }

// (alpha (x) id) t
Tensor co_first(const Tensor& alpha, const Matrix& t) {
  const std::size_t n = alpha.d1();
  Tensor out(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) out(p, q, j) += t(i, j) * alpha(i, p, q);
      }
    }
  }
  return out;
}

// (id (x) alpha) t
Tensor co_second(const Tensor& alpha, const Matrix& t) {
  const std::size_t n = alpha.d1();
  Tensor out(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) out(i, p, q) += t(i, j) * alpha(j, p, q);
      }
    }
  }
  return out;
}

Tensor swap12(const Tensor& t) {
  Tensor out(t.d2(), t.d1(), t.d3());
  for (std::size_t i = 0; i < t.d1(); ++i) {
    for (std::size_t j = 0; j < t.d2(); ++j) {
      for (std::size_t k = 0; k < t.d3(); ++k) out(j, i, k) = t(i, j, k);
    }
  }
  return out;
}

Tensor tsum(const Tensor& a, const Tensor& b, const Rational& s) {
  Tensor out = a;
  for (std::size_t i = 0; i < a.d1(); ++i) {
    for (std::size_t j = 0; j < a.d2(); ++j) {
      for (std::size_t k = 0; k < a.d3(); ++k) out(i, j, k) += s * b(i, j, k);
    }
  }
  return out;
}

bool tzero(const Tensor& t) {
  for (std::size_t i = 0; i < t.d1(); ++i) {
    for (std::size_t j = 0; j < t.d2(); ++j) {
      for (std::size_t k = 0; k < t.d3(); ++k) {
        if (!t(i, j, k).is_zero()) return false;
      }
    }
  }
  return true;
}

bool mzero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

Tensor add3(const Tensor& a, const Tensor& b) { return tsum(a, b, 1); }

}  // namespace

Vector e(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

Vector mul(const StructureTensor& c, const Vector& x, const Vector& y) {
  const std::size_t n = c.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c(i, j, k);
    }
  }
  return out;
}

Vector act(const RepTensor& rho, const Vector& x, const Vector& v) {
  const std::size_t m = rho.module_dim();
  Vector out(m);
  for (std::size_t i = 0; i < rho.source_dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) out[j] += x[i] * rho.t(i, j, k) * v[k];
    }
  }
  return out;
}

Vector apply(const Matrix& m, const Vector& v) {
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

Rational pair(const Vector& a, const Vector& x) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

Rational eval(const Matrix& form, const Vector& x, const Vector& y) {
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * form(i, j) * y[j];
  }
  return s;
}

Matrix compose(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational f = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

StructureTensor commutator(const StructureTensor& c) {
  const std::size_t n = c.dim();
  StructureTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = c(i, j, k) - c(j, i, k);
    }
  }
  return out;
}

bool is_skew(const Matrix& w) {
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      if (w(i, j) != -w(j, i)) return false;
    }
  }
  return true;
}

bool is_symmetric(const Matrix& w) { return same(w, swap(w)); }

bool is_left_symmetric(const StructureTensor& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        const Vector lhs = sub(mul(c, mul(c, x, y), z), mul(c, x, mul(c, y, z)));
        const Vector rhs = sub(mul(c, mul(c, y, x), z), mul(c, y, mul(c, x, z)));
        if (!zero(sub(lhs, rhs))) return false;
      }
    }
  }
  return true;
}

bool is_jacobi(const StructureTensor& br) {
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!zero(add(mul(br, e(n, i), e(n, j)), mul(br, e(n, j), e(n, i))))) return false;
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        const Vector s = add(add(mul(br, mul(br, x, y), z), mul(br, mul(br, y, z), x)),
                             mul(br, mul(br, z, x), y));
        if (!zero(s)) return false;
      }
    }
  }
  return true;
}

bool is_commutative(const StructureTensor& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!zero(sub(mul(c, e(n, i), e(n, j)), mul(c, e(n, j), e(n, i))))) return false;
    }
  }
  return true;
}

bool is_plsa(const StructureTensor& prec, const StructureTensor& succ) {
  if (!is_commutative(prec) || !is_left_symmetric(succ)) return false;
  const std::size_t n = prec.dim();
  const StructureTensor dot = prec + succ;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        const Vector lhs = mul(succ, x, mul(prec, y, z));
        const Vector rhs = add(mul(prec, mul(dot, x, y), z), mul(prec, y, mul(dot, x, z)));
        if (!zero(sub(lhs, rhs))) return false;
      }
    }
  }
  return true;
}

bool is_torsion_free(const StructureTensor& br, const StructureTensor& conn) {
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = e(n, i), y = e(n, j);
      if (!zero(sub(sub(mul(conn, x, y), mul(conn, y, x)), mul(br, x, y)))) return false;
    }
  }
  return true;
}

bool is_flat(const StructureTensor& br, const StructureTensor& conn) {
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        const Vector s = sub(sub(mul(conn, x, mul(conn, y, z)), mul(conn, y, mul(conn, x, z))),
                             mul(conn, mul(br, x, y), z));
        if (!zero(s)) return false;
      }
    }
  }
  return true;
}

bool is_closed(const StructureTensor& br, const Matrix& w) {
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        const Rational s = eval(w, x, mul(br, y, z)) + eval(w, y, mul(br, z, x)) +
                           eval(w, z, mul(br, x, y));
        if (!s.is_zero()) return false;
      }
    }
  }
  return true;
}

bool is_parallel(const StructureTensor& conn, const Matrix& w) {
  const std::size_t n = conn.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = e(n, i), y = e(n, j), z = e(n, k);
        if (eval(w, mul(conn, x, y), z) != eval(w, mul(conn, x, z), y)) return false;
      }
    }
  }
  return true;
}

bool is_special_symplectic(const StructureTensor& br, const StructureTensor& conn,
                           const Matrix& w) {
  return is_jacobi(br) && is_torsion_free(br, conn) && is_flat(br, conn) && is_skew(w) &&
         rank(w) == w.rows() && is_parallel(conn, w);
}

bool nijenhuis_vanishes(const StructureTensor& br, const Matrix& nn) {
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = e(n, i), y = e(n, j);
      const Vector nx = oracle::apply(nn, x), ny = oracle::apply(nn, y);
      Vector t = add(mul(br, nx, ny), oracle::apply(nn, oracle::apply(nn, mul(br, x, y))));
      t = sub(t, oracle::apply(nn, add(mul(br, nx, y), mul(br, x, ny))));
      if (!zero(t)) return false;
    }
  }
  return true;
}

bool is_complex_product(const StructureTensor& br, const Matrix& j, const Matrix& e) {
  const std::size_t n = br.dim();
  const Matrix id = identity(n);
  if (!same(compose(j, j), scaled(id, -1))) return false;
  if (!same(compose(e, e), id)) return false;
  if (same(e, id) || same(e, scaled(id, -1))) return false;
  if (!same(compose(j, e), scaled(compose(e, j), -1))) return false;
  if (!nijenhuis_vanishes(br, j) || !nijenhuis_vanishes(br, e)) return false;
  return rank(minus(e, id)) == rank(plus(e, id));
}

bool is_metric_compatible(const Matrix& g, const Matrix& j, const Matrix& e) {
  const std::size_t n = g.rows();
  if (!is_symmetric(g) || rank(g) != n) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Vector x = oracle::e(n, a), y = oracle::e(n, b);
      if (eval(g, oracle::apply(j, x), oracle::apply(j, y)) != eval(g, x, y)) return false;
      if (eval(g, oracle::apply(e, x), oracle::apply(e, y)) != -eval(g, x, y)) return false;
    }
  }
  return true;
}

ClosedForms closed_forms(const StructureTensor& br, const Matrix& j, const Matrix& e,
                         const Matrix& g) {
  const std::size_t n = g.rows();
  const Matrix je = compose(j, e);
  Matrix w1(n, n), w2(n, n), w3(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Vector x = oracle::e(n, a), y = oracle::e(n, b);
      w1(a, b) = eval(g, oracle::apply(j, x), y);
      w2(a, b) = eval(g, oracle::apply(e, x), y);
      w3(a, b) = eval(g, oracle::apply(je, x), y);
    }
  }
  return {is_closed(br, w1), is_closed(br, w2), is_closed(br, w3)};
}

bool is_hypersymplectic(const StructureTensor& br, const Matrix& j, const Matrix& e,
                        const Matrix& g) {
  if (!is_jacobi(br) || !is_complex_product(br, j, e) || !is_metric_compatible(g, j, e)) {
    return false;
  }
  const ClosedForms c = closed_forms(br, j, e, g);
  return c.w1 && c.w2 && c.w3;
}

RepTensor dual_left(const StructureTensor& c) {
  const std::size_t n = c.dim();
  RepTensor rho(n, n);
  // Entry (j,k) of rho(e_i) is <rho(e_i) e_k*, e_j> = -<e_k*, e_i o e_j>.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        rho.t(i, j, k) = -pair(e(n, k), mul(c, e(n, i), e(n, j)));
      }
    }
  }
  return rho;
}

RepTensor dual_right(const StructureTensor& c) {
  const std::size_t n = c.dim();
  RepTensor rho(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        rho.t(i, j, k) = -pair(e(n, k), mul(c, e(n, j), e(n, i)));
      }
    }
  }
  return rho;
}

RepTensor coadjoint(const StructureTensor& br) { return dual_left(br); }

RepTensor left(const StructureTensor& c) {
  const std::size_t n = c.dim();
  RepTensor rho(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Vector col = mul(c, e(n, i), e(n, k));
      for (std::size_t j = 0; j < n; ++j) rho.t(i, j, k) = col[j];
    }
  }
  return rho;
}

bool is_representation(const StructureTensor& br, const RepTensor& rho) {
  const std::size_t n = br.dim(), m = rho.module_dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Vector x = e(n, i), y = e(n, j), v = e(m, k);
        const Vector lhs = act(rho, mul(br, x, y), v);
        const Vector rhs = sub(act(rho, x, act(rho, y, v)), act(rho, y, act(rho, x, v)));
        if (!zero(sub(lhs, rhs))) return false;
      }
    }
  }
  return true;
}

bool is_bimodule(const StructureTensor& a, const RepTensor& l, const RepTensor& r) {
  const std::size_t n = a.dim(), m = l.module_dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Vector x = e(n, i), y = e(n, j), v = e(m, k);
        const Vector b1 = sub(sub(act(l, x, act(l, y, v)), act(l, mul(a, x, y), v)),
                              sub(act(l, y, act(l, x, v)), act(l, mul(a, y, x), v)));
        const Vector b2 = sub(sub(act(l, x, act(r, y, v)), act(r, y, act(l, x, v))),
                              sub(act(r, mul(a, x, y), v), act(r, y, act(r, x, v))));
        if (!zero(b1) || !zero(b2)) return false;
      }
    }
  }
  return true;
}

bool is_matched_pair(const StructureTensor& a1, const StructureTensor& a2, const RepTensor& l1,
                     const RepTensor& r1, const RepTensor& l2, const RepTensor& r2) {
  if (!is_left_symmetric(a1) || !is_left_symmetric(a2)) return false;
  if (!is_bimodule(a1, l1, r1) || !is_bimodule(a2, l2, r2)) return false;
  const std::size_t n = a1.dim(), m = a2.dim();
  const StructureTensor b1 = commutator(a1), b2 = commutator(a2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Vector x = e(n, i), y = e(n, j), a = e(m, k);
        Vector s = act(r2, a, mul(b1, x, y));
        s = sub(s, act(r2, act(l1, y, a), x));
        s = add(s, act(r2, act(l1, x, a), y));
        s = sub(s, mul(a1, x, act(r2, a, y)));
        s = add(s, mul(a1, y, act(r2, a, x)));
        if (!zero(s)) return false;
        Vector t = act(l2, a, mul(a1, x, y));
        t = add(t, act(l2, sub(act(l1, x, a), act(r1, x, a)), y));
        t = sub(t, mul(a1, sub(act(l2, a, x), act(r2, a, x)), y));
        t = sub(t, act(r2, act(r1, y, a), x));
        t = sub(t, mul(a1, x, act(l2, a, y)));
        if (!zero(t)) return false;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        const Vector x = e(n, i), a = e(m, j), b = e(m, k);
        Vector s = act(r1, x, mul(b2, a, b));
        s = sub(s, act(r1, act(l2, b, x), a));
        s = add(s, act(r1, act(l2, a, x), b));
        s = sub(s, mul(a2, a, act(r1, x, b)));
        s = add(s, mul(a2, b, act(r1, x, a)));
        if (!zero(s)) return false;
        Vector t = act(l1, x, mul(a2, a, b));
        t = add(t, act(l1, sub(act(l2, a, x), act(r2, a, x)), b));
        t = sub(t, mul(a2, sub(act(l1, x, a), act(r1, x, a)), b));
        t = sub(t, act(r1, act(r2, b, x), a));
        t = sub(t, mul(a2, a, act(l1, x, b)));
        if (!zero(t)) return false;
      }
    }
  }
  return true;
}

StructureTensor affine_product(const StructureTensor& base, const RepTensor& l,
                               const RepTensor& r, const Tensor3& phi) {
  const std::size_t n = base.dim();
  StructureTensor out(2 * n);
  for (std::size_t p = 0; p < 2 * n; ++p) {
    for (std::size_t q = 0; q < 2 * n; ++q) {
      Vector x(n), a(n), y(n), b(n);
      (p < n ? x[p] : a[p - n]) = 1;
      (q < n ? y[q] : b[q - n]) = 1;
      const Vector top = mul(base, x, y);
      Vector bottom = add(act(l, x, b), act(r, y, a));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) bottom[k] += x[i] * y[j] * phi(i, j, k);
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        out(p, q, k) = top[k];
        out(p, q, n + k) = bottom[k];
      }
    }
  }
  return out;
}

Matrix omega_p(std::size_t n) {
  Matrix w(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, n + i) = -1;
    w(n + i, i) = 1;
  }
  return w;
}

Matrix co(const Tensor3& alpha, const Vector& x) {
  const std::size_t n = alpha.d1();
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) += x[k] * alpha(k, i, j);
    }
  }
  return m;
}

Matrix r1_at(const Tensor3& alpha, std::size_t x) {
  const Matrix a = co(alpha, e(alpha.d1(), x));
  return minus(a, swap(a));
}

Tensor3 r2_at(const Tensor3& alpha, const Tensor3& beta, std::size_t x) {
  const Vector v = e(alpha.d1(), x);
  const Tensor3 ab = add3(alpha, beta);
  const Matrix ax = co(alpha, v);
  Tensor3 t = co_second(alpha, co(beta, v));
  t = tsum(t, co_first(ab, ax), -1);
  return tsum(t, swap12(co_second(ab, ax)), -1);
}

Tensor3 r3_at(const Tensor3& beta, std::size_t x) {
  const Matrix bx = co(beta, e(beta.d1(), x));
  const Tensor3 first = co_first(beta, bx);
  const Tensor3 second = co_second(beta, bx);
  Tensor3 t = tsum(first, swap12(first), -1);
  t = tsum(t, second, -1);
  return add3(t, swap12(second));
}

bool is_plsca(const Tensor3& alpha, const Tensor3& beta) {
  for (std::size_t x = 0; x < alpha.d1(); ++x) {
    if (!mzero(r1_at(alpha, x)) || !tzero(r2_at(alpha, beta, x)) || !tzero(r3_at(beta, x))) {
      return false;
    }
  }
  return true;
}

bool colsa_holds(const StructureTensor& prec, const StructureTensor& succ, const Tensor3& alpha,
                 const Tensor3& beta) {
  const std::size_t n = prec.dim();
  const StructureTensor dot = prec + succ;
  const Tensor3 ab = add3(alpha, beta);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = e(n, i), y = e(n, j);
      const Matrix lx = lmat(dot, x), ly = lmat(dot, y);
      const Matrix sx = lmat(succ, x);
      const Matrix ry = rmat(dot, y);
      const Matrix px = lmat(prec, x), py = lmat(prec, y), qy = rmat(prec, y);
      const Vector xy = mul(dot, x, y);
      const Vector br = sub(xy, mul(dot, y, x));

      const Matrix ay = co(alpha, y), ax = co(alpha, x);
      const Matrix e1 = minus(co(alpha, br), minus(plus(on_second(lx, ay), on_first(lx, ay)),
                                                   plus(on_second(ly, ax), on_first(ly, ax))));
      if (!mzero(e1)) return false;

      const Matrix aby = co(ab, y), abx = co(ab, x);
      const Matrix common =
          plus(plus(on_first(sx, aby), on_second(lx, aby)), on_second(ry, co(beta, x)));
      const Matrix e2 = minus(co(ab, xy), minus(common, on_first(py, ax)));
      if (!mzero(e2)) return false;
      const Matrix e4 = minus(co(ab, xy), minus(common, on_first(qy, swap(ax))));
      if (!mzero(e4)) return false;

      const Matrix pxy = co(ab, mul(prec, x, y));
      Matrix rhs3 = scaled(on_first(qy, swap(abx)), -1);
      rhs3 = plus(rhs3, on_second(qy, abx));
      rhs3 = plus(rhs3, on_second(px, aby));
      rhs3 = minus(rhs3, on_first(px, swap(aby)));
      if (!mzero(minus(minus(pxy, swap(pxy)), rhs3))) return false;
    }
  }
  return true;
}

std::pair<Tensor3, Tensor3> coboundary(const StructureTensor& prec, const StructureTensor& succ,
                                       const Matrix& r) {
  const std::size_t n = prec.dim();
  const StructureTensor dot = prec + succ;
  Tensor3 alpha(n, n, n), beta(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = e(n, i);
    const Matrix lx = lmat(dot, x);
    const Matrix ad = minus(lx, rmat(dot, x));
    const Matrix a = plus(on_second(lx, r), on_first(lx, r));
    const Matrix b = scaled(plus(on_second(ad, r), on_first(lmat(succ, x), r)), -1);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        alpha(i, p, q) = a(p, q);
        beta(i, p, q) = b(p, q);
      }
    }
  }
  return {alpha, beta};
}

StructureTensor dual_product(const Tensor3& alpha) {
  const std::size_t n = alpha.d1();
  StructureTensor out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j, x) = pair(e(n, i), oracle::apply(co(alpha, e(n, x)), e(n, j)));
      }
    }
  }
  return out;
}

bool spelsba_holds(const StructureTensor& lsa, const Tensor3& alpha) {
  const std::size_t n = lsa.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = e(n, i), y = e(n, j);
      const Matrix lx = lmat(lsa, x);
      const Matrix ay = co(alpha, y);
      Matrix rhs = plus(on_first(lx, ay), on_second(lx, ay));
      rhs = plus(rhs, on_second(rmat(lsa, y), co(alpha, x)));
      if (!mzero(minus(co(alpha, mul(lsa, x, y)), rhs))) return false;
    }
  }
  return true;
}

bool lsca_holds(const Tensor3& alpha) {
  for (std::size_t x = 0; x < alpha.d1(); ++x) {
    const Matrix ax = co(alpha, e(alpha.d1(), x));
    const Tensor3 first = co_first(alpha, ax);
    const Tensor3 second = co_second(alpha, ax);
    Tensor3 t = tsum(first, swap12(first), -1);
    t = tsum(t, second, -1);
    if (!tzero(add3(t, swap12(second)))) return false;
  }
  return true;
}

}  // namespace lsakit::oracle
