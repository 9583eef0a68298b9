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

#include "lsakit/bialgebra.hpp"

#include <string>

#include "lsakit/check.hpp"
#include "lsakit/construct.hpp"
#include "lsakit/error.hpp"
#include "lsakit/matched.hpp"
#include "lsakit/tensor_legs.hpp"

namespace lsakit {

namespace {

Vector flat(const Tensor3& t) { return Vector(t.entries().begin(), t.entries().end()); }

/// X T + T X^T, the action of X on both legs.
Matrix both_legs(const Matrix& x, const Matrix& t) { return x * t + t * x.transpose(); }

/// sum_{p,q} r(p,q) m[p] (x) v[q].
Tensor3 spread(const Matrix& r, const std::vector<Matrix>& m, const std::vector<Vector>& v) {
  const std::size_t n = r.rows();
  const std::size_t d = v.empty() ? 0 : v.front().size();
  Tensor3 out(m.front().rows(), m.front().cols(), d);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (r(p, q).is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k) {
        if (v[q][k].is_zero()) continue;
        const Rational w = r(p, q) * v[q][k];
        for (std::size_t i = 0; i < m[p].rows(); ++i) {
          for (std::size_t j = 0; j < m[p].cols(); ++j) out(i, j, k).add_product(w, m[p](i, j));
        }
      }
    }
  }
  return out;
}

Tensor3 to_coproduct(const std::vector<Matrix>& per_basis) {
  const std::size_t n = per_basis.size();
  Tensor3 out(n, n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out(x, i, j) = per_basis[x](i, j);
    }
  }
  return out;
}

void require_cubic(const Tensor3& t, const char* what) {
  require_same_dim(t.d2(), t.d1(), what);
  require_same_dim(t.d3(), t.d1(), what);
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
  require_same_dim(m.rows(), n, what);
  require_same_dim(m.cols(), n, what);
}

void add_matrix_violation(CheckReport& rep, const char* where, std::vector<std::size_t> idx,
                          const Matrix& m) {
  if (!m.is_zero()) rep.add(where, std::move(idx), flatten(m));
}

void add_tensor_violation(CheckReport& rep, const char* where, std::vector<std::size_t> idx,
                          const Tensor3& t) {
  if (!t.is_zero()) rep.add(where, std::move(idx), flat(t));
}

/// Pass/fail agreement of two labelled checks; records an alarm otherwise.
void compare_verdicts(CheckReport& rep, bool lhs, bool rhs, const std::string& what) {
  if (lhs != rhs) rep.alarms.push_back(what + ": routes disagree");
}

StructureTensor dual_product(const Tensor3& alpha) {
  const std::size_t n = alpha.d1();
  StructureTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = alpha(k, i, j);
    }
  }
  return out;
}

Tensor3 coproduct_of(const StructureTensor& op) {
  const std::size_t n = op.dim();
  Tensor3 out(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(k, i, j) = op(i, j, k);
    }
  }
  return out;
}

/// The left-symmetric coalgebra obstruction computed directly.
Tensor3 t_alpha(const Tensor3& alpha, std::size_t x) {
  const Matrix a = coproduct_basis(alpha, x);
  const Tensor3 first = coproduct_first(alpha, a);
  const Tensor3 second = coproduct_second(alpha, a);
  return first - flip12(first) - second + flip12(second);
}

}  // namespace

Plsa dualize_coproducts(const CoproductPair& cp) {
  require_cubic(cp.alpha, "alpha");
  require_cubic(cp.beta, "beta");
  require_same_dim(cp.alpha.d1(), cp.beta.d1(), "coproduct pair");
  return Plsa{dual_product(cp.alpha), dual_product(cp.beta)};
}

CoproductPair coproducts_from_plsa(const Plsa& p) {
  return CoproductPair(coproduct_of(p.prec), coproduct_of(p.succ));
}

bool RTriple::is_zero() const {
  for (const auto& m : r1) {
    if (!m.is_zero()) return false;
  }
  for (const auto& t : r2) {
    if (!t.is_zero()) return false;
  }
  for (const auto& t : r3) {
    if (!t.is_zero()) return false;
  }
  return true;
}

RTriple coalgebra_obstructions(const CoproductPair& cp) {
  require_cubic(cp.alpha, "alpha");
  require_cubic(cp.beta, "beta");
  const std::size_t n = cp.dim();
  const Tensor3 sum = cp.alpha + cp.beta;
  RTriple out;
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix a = coproduct_basis(cp.alpha, x);
    const Matrix b = coproduct_basis(cp.beta, x);
    out.r1.push_back(a - a.transpose());
    out.r2.push_back(coproduct_second(cp.alpha, b) - coproduct_first(sum, a) -
                     flip12(coproduct_second(sum, a)));
    const Tensor3 bb1 = coproduct_first(cp.beta, b);
    const Tensor3 bb2 = coproduct_second(cp.beta, b);
    out.r3.push_back(bb1 - flip12(bb1) - bb2 + flip12(bb2));
  }
  return out;
}

CheckReport plsca_check(const CoproductPair& cp, Mode mode) {
  CheckReport rep("plsca");
  const RTriple rt = coalgebra_obstructions(cp);
  for (std::size_t x = 0; x < cp.dim(); ++x) {
    add_matrix_violation(rep, "R1", {x}, rt.r1[x]);
    add_tensor_violation(rep, "R2", {x}, rt.r2[x]);
    add_tensor_violation(rep, "R3", {x}, rt.r3[x]);
  }
  if (mode == Mode::kCrossCheck) {
    compare_verdicts(rep, rep.passed(), check_plsa(dualize_coproducts(cp)).passed(),
                     "plsca vs dual post-left-symmetric algebra");
  }
  return rep;
}

CheckReport plsba_check(const Plsa& p, const CoproductPair& cp, Mode mode) {
  const std::size_t n = p.dim();
  require_same_dim(cp.dim(), n, "plsba_check");
  CheckReport rep("plsba");
  rep.merge(check_plsa(p));
  const CheckReport co = plsca_check(cp, mode);
  rep.merge(co);

  const StructureTensor dot = p.dot();
  std::vector<Matrix> a(n), s(n), l_dot(n), r_dot(n), l_succ(n), l_prec(n), r_prec(n);
  const Tensor3 sum = cp.alpha + cp.beta;
  for (std::size_t x = 0; x < n; ++x) {
    a[x] = coproduct_basis(cp.alpha, x);
    s[x] = coproduct_basis(sum, x);
    l_dot[x] = dot.left_basis(x);
    r_dot[x] = dot.right_basis(x);
    l_succ[x] = p.succ.left_basis(x);
    l_prec[x] = p.prec.left_basis(x);
    r_prec[x] = p.prec.right_basis(x);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vector xy = dot.basis_product(x, y);
      const Vector yx = dot.basis_product(y, x);
      const Matrix b_x = coproduct_basis(cp.beta, x);

      Matrix e1 = coproduct_at(cp.alpha, xy - yx) - both_legs(l_dot[x], a[y]) +
                  both_legs(l_dot[y], a[x]);
      add_matrix_violation(rep, "1colsa1", {x, y}, e1);

      const Matrix common = coproduct_at(sum, xy) - l_succ[x] * s[y] -
                            s[y] * l_dot[x].transpose() - b_x * r_dot[y].transpose();
      add_matrix_violation(rep, "1colsa2", {x, y}, common + l_prec[y] * a[x]);
      add_matrix_violation(rep, "1colsa4", {x, y}, common + r_prec[y] * a[x].transpose());

      const Vector xpy = p.prec.basis_product(x, y);
      const Matrix s_xpy = coproduct_at(sum, xpy);
      Matrix e3 = s_xpy - s_xpy.transpose() + r_prec[y] * s[x].transpose() -
                  s[x] * r_prec[y].transpose() - s[y] * l_prec[x].transpose() +
                  l_prec[x] * s[y].transpose();
      add_matrix_violation(rep, "1colsa3", {x, y}, e3);
    }
  }

  if (mode == Mode::kCrossCheck && co.passed()) {
    const CheckReport mp = check_matched_pair(dual_matched_pair(p, dualize_coproducts(cp)));
    for (int k = 1; k <= 4; ++k) {
      const std::string tensor_eq = "1colsa" + std::to_string(k);
      const std::string action_eq = "lsabi" + std::to_string(k);
      compare_verdicts(rep, rep.passed(tensor_eq), mp.passed(action_eq),
                       tensor_eq + " vs " + action_eq);
    }
  }
  return rep;
}

CoproductPair coboundary_coproducts(const Plsa& p, const RMatrix& r) {
  const std::size_t n = p.dim();
  require_square(r.r, n, "coboundary r");
  const StructureTensor dot = p.dot();
  const StructureTensor br = sub_adjacent(dot);
  std::vector<Matrix> a(n), b(n);
  for (std::size_t x = 0; x < n; ++x) {
    a[x] = both_legs(dot.left_basis(x), r.r);
    b[x] = -(r.r * br.left_basis(x).transpose()) - p.succ.left_basis(x) * r.r;
  }
  return CoproductPair(to_coproduct(a), to_coproduct(b));
}

CheckReport coboundary_conditions(const Plsa& p, const RMatrix& r) {
  const std::size_t n = p.dim();
  require_square(r.r, n, "coboundary r");
  CheckReport rep("coboundary");
  const StructureTensor dot = p.dot();
  const Matrix d = r.r - r.r.transpose();
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix lx = p.prec.left_basis(x);
    const Matrix both = both_legs(dot.left_basis(x), d);
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix ly = p.prec.left_basis(y);
      const Matrix lxy = p.prec.left(p.prec.basis_product(x, y));
      const Matrix e1 = both_legs(lxy, d) - ly * d * lx.transpose() - lx * d * ly.transpose();
      add_matrix_violation(rep, "lecolsa1", {x, y}, e1);
      add_matrix_violation(rep, "lecolsa2", {x, y}, p.prec.right_basis(y) * both);
    }
  }
  return rep;
}

std::pair<Tensor3, Tensor3> rr_brackets(const Plsa& p, const RMatrix& r) {
  require_square(r.r, p.dim(), "rr_brackets r");
  const StructureTensor dot = p.dot();
  const StructureTensor br = sub_adjacent(dot);
  Tensor3 one = r_product(dot, r.r, Legs::k13_23) + r_product(dot, r.r, Legs::k12_23) +
                r_product(p.prec, r.r, Legs::k12_13);
  Tensor3 two = r_product(p.succ, r.r, Legs::k12_13) - r_product(p.succ, r.r, Legs::k12_23) -
                r_product(br, r.r, Legs::k13_23);
  return {std::move(one), std::move(two)};
}

RTriple R_operators(const Plsa& p, const RMatrix& r, Mode mode) {
  const std::size_t n = p.dim();
  require_square(r.r, n, "R_operators r");
  const StructureTensor dot = p.dot();
  const StructureTensor br = sub_adjacent(dot);
  const Matrix d = r.r - r.r.transpose();
  const auto [rr1, rr2] = rr_brackets(p, r);

  std::vector<Matrix> l_dot(n), l_succ(n), ad(n);
  std::vector<Vector> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    l_dot[i] = dot.left_basis(i);
    l_succ[i] = p.succ.left_basis(i);
    ad[i] = br.left_basis(i);
    basis[i] = basis_vector(n, i);
  }
  auto s_op = [&](std::size_t y) { return ad[y] * d + d * l_succ[y].transpose(); };

  RTriple out;
  for (std::size_t x = 0; x < n; ++x) {
    out.r1.push_back(both_legs(l_dot[x], d));

    const Tensor3 q1 = apply_leg(rr1, l_succ[x], 0) + apply_leg(rr1, l_dot[x], 1) +
                       apply_leg(rr1, l_dot[x], 2);
    std::vector<Matrix> p1(n);
    for (std::size_t y = 0; y < n; ++y) p1[y] = p.prec.right_basis(y) * both_legs(l_dot[x], d);
    out.r2.push_back(spread(r.r, p1, basis) - q1);

    const Tensor3 q2 = apply_leg(rr2, l_succ[x], 0) + apply_leg(rr2, l_succ[x], 1) +
                       apply_leg(rr2, ad[x], 2);
    std::vector<Matrix> p2(n), s(n);
    std::vector<Vector> ad_x(n);
    for (std::size_t y = 0; y < n; ++y) {
      const Vector xy = p.succ.basis_product(x, y);
      p2[y] = br.left(xy) * d + d * p.succ.left(xy).transpose() -
              p.succ.right_basis(y) * (ad[x] * d + d * l_succ[x].transpose());
      s[y] = s_op(y);
      ad_x[y] = br.basis_product(x, y);
    }
    out.r3.push_back(q2 + spread(r.r, p2, basis) + spread(r.r, s, ad_x));
  }

  if (mode == Mode::kCrossCheck) {
    const RTriple direct = coalgebra_obstructions(coboundary_coproducts(p, r));
    if (!(direct == out)) {
      throw Error(ErrorCode::kInternalMismatch,
                  "closed-form R operators disagree with direct evaluation");
    }
  }
  return out;
}

RMatrix canonical_r(std::size_t n) {
  RMatrix r(2 * n);
  for (std::size_t i = 0; i < n; ++i) r.r(i, n + i) = 1;
  return r;
}

DrinfeldDouble drinfeld_double(const Plsa& p, const CoproductPair& cp, Mode mode) {
  const CheckReport input = plsba_check(p, cp, mode);
  if (!input.passed()) {
    throw Error(ErrorCode::kNotAPLSBA,
                "input is not a post-left-symmetric bialgebra (" + input.violations.front().where +
                    ")");
  }
  const std::size_t n = p.dim();
  DrinfeldDouble dd;
  dd.plsa = mixed_products(p, dualize_coproducts(cp));
  dd.r = canonical_r(n);
  dd.cp = coboundary_coproducts(dd.plsa, dd.r);
  dd.report = CheckReport("drinfeld-double");

  const auto [rr1, rr2] = rr_brackets(dd.plsa, dd.r);
  add_tensor_violation(dd.report, "rr1", {}, rr1);
  add_tensor_violation(dd.report, "rr2", {}, rr2);

  const StructureTensor dot = dd.plsa.dot();
  const StructureTensor br = sub_adjacent(dot);
  const Matrix d = dd.r.r - dd.r.r.transpose();
  for (std::size_t u = 0; u < 2 * n; ++u) {
    add_matrix_violation(dd.report, "prodoubl1", {u}, both_legs(dot.left_basis(u), d));
    const Matrix lu = dd.plsa.prec.left_basis(u);
    for (std::size_t v = 0; v < 2 * n; ++v) {
      const Matrix lv = dd.plsa.prec.left_basis(v);
      const Matrix luv = dd.plsa.prec.left(dd.plsa.prec.basis_product(u, v));
      add_matrix_violation(dd.report, "prodoubl2", {u, v},
                           both_legs(luv, d) - lu * d * lv.transpose() - lv * d * lu.transpose());
    }
    add_matrix_violation(dd.report, "prodoubl3", {u},
                         br.left_basis(u) * d + d * dd.plsa.succ.left_basis(u).transpose());
  }
  dd.report.merge(check_plsa(dd.plsa));
  dd.report.merge(plsba_check(dd.plsa, dd.cp, mode));
  return dd;
}

Endo split_involution(std::size_t n) {
  Endo e = Endo::identity(2 * n);
  for (std::size_t i = n; i < 2 * n; ++i) e.m(i, i) = -1;
  return e;
}

CheckReport check_parakahler(const ParaKahlerData& pk) {
  const std::size_t n = pk.bracket.dim();
  require_same_dim(pk.omega.dim(), n, "para-Kahler form");
  require_same_dim(pk.e.dim(), n, "para-Kahler E");
  CheckReport rep("para-kahler");
  rep.merge(check_jacobi(pk.bracket));
  rep.merge(check_skew(pk.omega));
  rep.merge(check_nondegenerate(pk.omega));
  rep.merge(check_closed(pk.bracket, pk.omega));
  rep.merge(check_paracomplex(pk.bracket, pk.e));
  const Matrix twisted = pk.e.m.transpose() * pk.omega.m * pk.e.m + pk.omega.m;
  add_matrix_violation(rep, "compatible", {}, twisted);

  if (pk.conn) {
    const StructureTensor& conn = *pk.conn;
    require_same_dim(conn.dim(), n, "para-Kahler connection");
    rep.merge(check_flat(pk.bracket, conn));
    rep.merge(check_torsion_free(pk.bracket, conn));
    rep.merge(check_parallel_form(conn, pk.omega));
    std::vector<Matrix> nabla_e(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Matrix l = conn.left_basis(x);
      nabla_e[x] = l * pk.e.m - pk.e.m * l;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        Vector s = nabla_e[x].column(y) - nabla_e[y].column(x);
        if (!is_zero(s)) rep.add("nabla-E-symmetric", {x, y}, std::move(s));
      }
    }
  }
  return rep;
}

CheckReport slsba_check(const StructureTensor& lsa, const Tensor3& alpha, Mode mode) {
  const std::size_t n = lsa.dim();
  require_cubic(alpha, "alpha");
  require_same_dim(alpha.d1(), n, "slsba_check");
  CheckReport rep("slsba");
  rep.merge(check_left_symmetric(lsa));
  for (std::size_t x = 0; x < n; ++x) add_tensor_violation(rep, "lsca", {x}, t_alpha(alpha, x));
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix lx = lsa.left_basis(x);
    const Matrix ax = coproduct_basis(alpha, x);
    for (std::size_t y = 0; y < n; ++y) {
      const Matrix e = coproduct_at(alpha, lsa.basis_product(x, y)) -
                       both_legs(lx, coproduct_basis(alpha, y)) -
                       ax * lsa.right_basis(y).transpose();
      add_matrix_violation(rep, "spelsba", {x, y}, e);
    }
  }
  if (mode == Mode::kCrossCheck) {
    const StructureTensor dual = dual_product(alpha);
    MatchedPairData mp{lsa, dual, dual_left_action(lsa), RepTensor(n, n), dual_left_action(dual),
                       RepTensor(n, n)};
    compare_verdicts(rep, rep.passed(), check_matched_pair(mp).passed(),
                     "slsba vs matched pair");
  }
  return rep;
}

SlsbaCoboundary slsba_coboundary(const StructureTensor& lsa, const RMatrix& r, Mode mode) {
  const std::size_t n = lsa.dim();
  require_square(r.r, n, "slsba r");
  std::vector<Matrix> a(n);
  for (std::size_t x = 0; x < n; ++x) a[x] = r.r * lsa.right_basis(x).transpose();
  SlsbaCoboundary out{to_coproduct(a), CheckReport("slsba-coboundary")};

  for (std::size_t x = 0; x < n; ++x) {
    const Matrix both = both_legs(lsa.left_basis(x), r.r);
    for (std::size_t y = 0; y < n; ++y) {
      add_matrix_violation(out.report, "specialco", {x, y},
                           both * lsa.right_basis(y).transpose());
    }
  }
  const Tensor3 expr = r_product(lsa, r.r, Legs::k12_23) - r_product(lsa, r.r, Legs::k21_13) +
                       r_product(sub_adjacent(lsa), r.r, Legs::k13_23);
  for (std::size_t x = 0; x < n; ++x) {
    const Tensor3 t = apply_leg(expr, lsa.right_basis(x), 2);
    add_tensor_violation(out.report, "specit", {x}, t);
    if (mode == Mode::kCrossCheck && !(t == t_alpha(out.alpha, x))) {
      throw Error(ErrorCode::kInternalMismatch, "closed-form T_alpha disagrees with direct evaluation");
    }
  }
  return out;
}

SlsbaDouble slsba_double(const StructureTensor& lsa, const Tensor3& alpha, Mode mode) {
  const CheckReport input = slsba_check(lsa, alpha, mode);
  if (!input.passed()) {
    throw Error(ErrorCode::kNotAnSLSBA,
                "input is not a special left-symmetric bialgebra (" +
                    input.violations.front().where + ")");
  }
  const std::size_t n = lsa.dim();
  const StructureTensor dual = dual_product(alpha);
  const MatchedPairData mp{lsa, dual, dual_left_action(lsa), RepTensor(n, n),
                           dual_left_action(dual), RepTensor(n, n)};
  SlsbaDouble sd;
  sd.lsa = bowtie_product(mp);
  sd.r = canonical_r(n);
  SlsbaCoboundary cob = slsba_coboundary(sd.lsa, sd.r, mode);
  sd.alpha = std::move(cob.alpha);
  sd.report = CheckReport("slsba-double");
  sd.report.merge(cob.report);
  sd.report.merge(slsba_check(sd.lsa, sd.alpha, mode));
  sd.report.merge(check_parakahler(ParaKahlerData{sub_adjacent(sd.lsa), symplectic_pairing(n),
                                                  split_involution(n), sd.lsa}));
  return sd;
}

}  // namespace lsakit
