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

#include "lsakit/matched.hpp"

#include <set>
#include <string>
#include <vector>

#include "lsakit/check.hpp"
#include "lsakit/construct.hpp"
#include "lsakit/error.hpp"

namespace lsakit {

namespace {

std::vector<Matrix> mats(const RepTensor& rho) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < rho.source_dim(); ++i) out.push_back(rho.at(i));
  return out;
}

std::vector<Matrix> lefts(const StructureTensor& op) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < op.dim(); ++i) out.push_back(op.left_basis(i));
  return out;
}

void require_shapes(const MatchedPairData& mp) {
  const std::size_t n = mp.a1.dim();
  const std::size_t m = mp.a2.dim();
  require_same_dim(mp.l1.source_dim(), n, "l1 source");
  require_same_dim(mp.r1.source_dim(), n, "r1 source");
  require_same_dim(mp.l1.module_dim(), m, "l1 module");
  require_same_dim(mp.r1.module_dim(), m, "r1 module");
  require_same_dim(mp.l2.source_dim(), m, "l2 source");
  require_same_dim(mp.r2.source_dim(), m, "r2 source");
  require_same_dim(mp.l2.module_dim(), n, "l2 module");
  require_same_dim(mp.r2.module_dim(), n, "r2 module");
}

StructureTensor restrict(const StructureTensor& op, std::size_t offset, std::size_t n) {
  StructureTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = op(offset + i, offset + j, offset + k);
    }
  }
  return out;
}

}  // namespace

CheckReport check_matched_pair(const MatchedPairData& mp) {
  require_shapes(mp);
  CheckReport rep("matched-pair");
  CheckReport ls1 = check_left_symmetric(mp.a1), ls2 = check_left_symmetric(mp.a2);
  ls1.check = "A1";
  ls2.check = "A2";
  CheckReport b1 = check_bimodule(mp.a1, mp.l1, mp.r1), b2 = check_bimodule(mp.a2, mp.l2, mp.r2);
  b1.check = "bimodule1";
  b2.check = "bimodule2";
  rep.merge(ls1);
  rep.merge(ls2);
  rep.merge(b1);
  rep.merge(b2);

  const std::size_t n = mp.a1.dim();
  const std::size_t m = mp.a2.dim();
  const auto l1 = mats(mp.l1), r1 = mats(mp.r1), l2 = mats(mp.l2), r2 = mats(mp.r2);
  const auto la1 = lefts(mp.a1), la2 = lefts(mp.a2);

  // Identities with x, y in A1 and a in A2.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ey = basis_vector(n, y);
      const Vector br_xy = mp.a1.basis_product(x, y) - mp.a1.basis_product(y, x);
      const Vector dot_xy = mp.a1.basis_product(x, y);
      for (std::size_t a = 0; a < m; ++a) {
        const Vector ea = basis_vector(m, a);
        const Vector ex = basis_vector(n, x);
        Vector s1 = r2[a].apply(br_xy) - mp.r2.of(l1[y].apply(ea)).apply(ex) +
             mp.r2.of(l1[x].apply(ea)).apply(ey) - la1[x].apply(r2[a].apply(ey)) +
             la1[y].apply(r2[a].apply(ex));
        if (!is_zero(s1)) rep.add("lsabi1", {x, y, a}, std::move(s1));

        Vector s2 = l2[a].apply(dot_xy) +
                    mp.l2.of(l1[x].apply(ea) - r1[x].apply(ea)).apply(ey) -
                    mp.a1.apply(l2[a].apply(ex) - r2[a].apply(ex), ey) -
                    mp.r2.of(r1[y].apply(ea)).apply(ex) - la1[x].apply(l2[a].apply(ey));
        if (!is_zero(s2)) rep.add("lsabi2", {x, y, a}, std::move(s2));
      }
    }
  }

  // Identities with x in A1 and a, b in A2.
  for (std::size_t x = 0; x < n; ++x) {
    const Vector ex = basis_vector(n, x);
    for (std::size_t a = 0; a < m; ++a) {
      const Vector ea = basis_vector(m, a);
      for (std::size_t b = 0; b < m; ++b) {
        const Vector eb = basis_vector(m, b);
        const Vector br_ab = mp.a2.basis_product(a, b) - mp.a2.basis_product(b, a);
        const Vector dot_ab = mp.a2.basis_product(a, b);
        Vector s3 = r1[x].apply(br_ab) - mp.r1.of(l2[b].apply(ex)).apply(ea) +
                    mp.r1.of(l2[a].apply(ex)).apply(eb) - la2[a].apply(r1[x].apply(eb)) +
                    la2[b].apply(r1[x].apply(ea));
        if (!is_zero(s3)) rep.add("lsabi3", {x, a, b}, std::move(s3));

        Vector s4 = l1[x].apply(dot_ab) +
                    mp.l1.of(l2[a].apply(ex) - r2[a].apply(ex)).apply(eb) -
                    mp.a2.apply(l1[x].apply(ea) - r1[x].apply(ea), eb) -
                    mp.r1.of(r2[b].apply(ex)).apply(ea) - la2[a].apply(l1[x].apply(eb));
        if (!is_zero(s4)) rep.add("lsabi4", {x, a, b}, std::move(s4));
      }
    }
  }
  return rep;
}

StructureTensor bowtie_product(const MatchedPairData& mp) {
  require_shapes(mp);
  const std::size_t n = mp.a1.dim();
  const std::size_t m = mp.a2.dim();
  StructureTensor out(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = mp.a1(i, j, k);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < m; ++k) out(n + a, n + b, n + k) = mp.a2(a, b, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t k = 0; k < n; ++k) {
        out(i, n + a, k) = mp.r2.t(a, k, i);
        out(n + a, i, k) = mp.l2.t(a, k, i);
      }
      for (std::size_t k = 0; k < m; ++k) {
        out(i, n + a, n + k) = mp.l1.t(i, k, a);
        out(n + a, i, n + k) = mp.r1.t(i, k, a);
      }
    }
  }
  return out;
}

StructureTensor bowtie_lsa(const MatchedPairData& mp) {
  const CheckReport rep = check_matched_pair(mp);
  if (!rep.passed()) {
    throw Error(ErrorCode::kNotMatched, "not a matched pair (" + rep.violations.front().where + ")");
  }
  return bowtie_product(mp);
}

MatchedPairData dual_matched_pair(const Plsa& a, const Plsa& astar) {
  require_same_dim(a.dim(), astar.dim(), "dual_matched_pair");
  MatchedPairData mp;
  mp.a1 = a.dot();
  mp.a2 = astar.dot();
  mp.l1 = dual_left_action(mp.a1);
  mp.r1 = dual_left_action(a.prec);
  mp.l2 = dual_left_action(mp.a2);
  mp.r2 = dual_left_action(astar.prec);
  return mp;
}

CheckReport check_double_extension(const Plsa& a, const Plsa& astar) {
  return check_matched_pair(dual_matched_pair(a, astar));
}

DoubleExtension double_extension(const Plsa& a, const Plsa& astar) {
  if (!check_plsa(a).passed() || !check_plsa(astar).passed()) {
    throw Error(ErrorCode::kInvalidInput, "double_extension needs two post-left-symmetric algebras");
  }
  const MatchedPairData mp = dual_matched_pair(a, astar);
  CheckReport mrep = check_matched_pair(mp);
  if (!mrep.passed()) {
    std::set<std::string> failing;
    for (const auto& v : mrep.violations) failing.insert(v.where.substr(0, v.where.find('/')));
    std::string list;
    for (const auto& f : failing) list += (list.empty() ? "" : ", ") + f;
    throw Error(ErrorCode::kNotMatched, "matched-pair identities fail: " + list);
  }
  const std::size_t n = a.dim();
  DoubleExtension de;
  de.data.plsa_a = a;
  de.data.plsa_astar = astar;
  de.data.glued = bowtie_product(mp);
  de.data.omega_p = symplectic_pairing(n);
  de.report = CheckReport("double-extension");
  de.report.merge(mrep);
  de.report.merge(check_special_symplectic(sub_adjacent(de.data.glued), de.data.glued,
                                           de.data.omega_p));
  const StructureTensor mixed = mixed_products(a, astar).dot();
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < 2 * n; ++j) {
      Vector s = mixed.basis_product(i, j) - de.data.glued.basis_product(i, j);
      if (!is_zero(s)) de.report.add("mixed-vs-glued", {i, j}, std::move(s));
    }
  }
  return de;
}

Plsa mixed_products(const Plsa& a, const Plsa& astar) {
  require_same_dim(a.dim(), astar.dim(), "mixed_products");
  const std::size_t n = a.dim();
  const StructureTensor dot_a = a.dot();
  const StructureTensor dot_s = astar.dot();
  const RepTensor rdot_a = dual_right_action(dot_a);
  const RepTensor rdot_s = dual_right_action(dot_s);
  const RepTensor rsucc_a = dual_right_action(a.succ);
  const RepTensor rsucc_s = dual_right_action(astar.succ);
  const RepTensor ad_a = coadjoint(sub_adjacent(dot_a));
  const RepTensor ad_s = coadjoint(sub_adjacent(dot_s));

  Plsa d{StructureTensor(2 * n), StructureTensor(2 * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        d.prec(i, j, k) = a.prec(i, j, k);
        d.succ(i, j, k) = a.succ(i, j, k);
        d.prec(n + i, n + j, n + k) = astar.prec(i, j, k);
        d.succ(n + i, n + j, n + k) = astar.succ(i, j, k);
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        // x prec b* and b* prec x
        d.prec(x, n + b, n + k) = rdot_a.t(x, k, b);
        d.prec(x, n + b, k) = rdot_s.t(b, k, x);
        d.prec(n + b, x, k) = rdot_s.t(b, k, x);
        d.prec(n + b, x, n + k) = rdot_a.t(x, k, b);
        // x succ b* and b* succ x
        d.succ(x, n + b, n + k) = ad_a.t(x, k, b);
        d.succ(x, n + b, k) = -rsucc_s.t(b, k, x);
        d.succ(n + b, x, k) = ad_s.t(b, k, x);
        d.succ(n + b, x, n + k) = -rsucc_a.t(x, k, b);
      }
    }
  }
  return d;
}

CheckReport check_split_actions(const StructureTensor& glued, std::size_t n) {
  require_same_dim(glued.dim(), 2 * n, "check_split_actions");
  CheckReport rep("split-actions");
  MatchedPairData got;
  got.a1 = restrict(glued, 0, n);
  got.a2 = restrict(glued, n, n);
  got.l1 = RepTensor(n, n);
  got.r1 = RepTensor(n, n);
  got.l2 = RepTensor(n, n);
  got.r2 = RepTensor(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!glued(i, j, n + k).is_zero()) rep.add("A-subalgebra", {i, j, k}, {glued(i, j, n + k)});
        if (!glued(n + i, n + j, k).is_zero()) {
          rep.add("Astar-subalgebra", {i, j, k}, {glued(n + i, n + j, k)});
        }
        got.r2.t(j, k, i) = glued(i, n + j, k);
        got.l2.t(i, k, j) = glued(n + i, j, k);
        got.l1.t(i, k, j) = glued(i, n + j, n + k);
        got.r1.t(j, k, i) = glued(n + i, j, n + k);
      }
    }
  }
  const Plsa whole = plsa_from_special_symplectic(
      SpecialSymplecticData{sub_adjacent(glued), glued, symplectic_pairing(n)});
  const Plsa on_a{restrict(whole.prec, 0, n), restrict(whole.succ, 0, n)};
  const Plsa on_s{restrict(whole.prec, n, n), restrict(whole.succ, n, n)};
  const MatchedPairData want = dual_matched_pair(on_a, on_s);
  auto compare = [&](const char* what, const Tensor3& x, const Tensor3& y) {
    for (std::size_t i = 0; i < x.d1(); ++i) {
      for (std::size_t j = 0; j < x.d2(); ++j) {
        for (std::size_t k = 0; k < x.d3(); ++k) {
          if (x(i, j, k) != y(i, j, k)) rep.add(what, {i, j, k}, {x(i, j, k) - y(i, j, k)});
        }
      }
    }
  };
  compare("a1", got.a1.c, want.a1.c);
  compare("a2", got.a2.c, want.a2.c);
  compare("l1", got.l1.t, want.l1.t);
  compare("r1", got.r1.t, want.r1.t);
  compare("l2", got.l2.t, want.l2.t);
  compare("r2", got.r2.t, want.r2.t);
  return rep;
}

}  // namespace lsakit
