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

#ifndef LSAKIT_BIALGEBRA_HPP_
#define LSAKIT_BIALGEBRA_HPP_

// Coproducts are stored as alpha(x, i, j): alpha(e_x) = sum alpha(x,i,j) e_i (x) e_j.
// Elements of A(x)A are matrices and elements of A(x)A(x)A are Tensor3, read
// as in tensor_legs.hpp.

#include <optional>
#include <utility>
#include <vector>

#include "lsakit/algebra.hpp"

namespace lsakit {

/// The products on A* given by <a* prec b*, x> = <a* (x) b*, alpha(x)>, and beta for succ.
Plsa dualize_coproducts(const CoproductPair& cp);
/// Inverse of dualize_coproducts.
CoproductPair coproducts_from_plsa(const Plsa& p);

/// R1(e_x), R2(e_x), R3(e_x) for every basis vector.
struct RTriple {
  std::vector<Matrix> r1;
  std::vector<Tensor3> r2;
  std::vector<Tensor3> r3;

  bool is_zero() const;
  friend bool operator==(const RTriple& a, const RTriple& b) = default;
};

/// Direct evaluation of the coalgebra obstructions.
RTriple coalgebra_obstructions(const CoproductPair& cp);

CheckReport plsca_check(const CoproductPair& cp, Mode mode = Mode::kProduction);
CheckReport plsba_check(const Plsa& p, const CoproductPair& cp, Mode mode = Mode::kProduction);

/// alpha(x) = (id (x) L(x) + L(x) (x) id) r and beta(x) = (-id (x) ad(x) - L_succ(x) (x) id) r.
CoproductPair coboundary_coproducts(const Plsa& p, const RMatrix& r);
CheckReport coboundary_conditions(const Plsa& p, const RMatrix& r);

/// ([[r,r]]_1, [[r,r]]_2).
std::pair<Tensor3, Tensor3> rr_brackets(const Plsa& p, const RMatrix& r);

/// Closed forms of R1, R2, R3 for the coboundary coproducts of r. In
/// cross-check mode the direct evaluation is compared and a mismatch throws
/// InternalMismatch.
RTriple R_operators(const Plsa& p, const RMatrix& r, Mode mode = Mode::kProduction);

/// sum_i e_i (x) e_i* on A + A*.
RMatrix canonical_r(std::size_t n);

struct DrinfeldDouble {
  Plsa plsa;
  RMatrix r;
  CoproductPair cp;
  CheckReport report;
};

/// Throws NotAPLSBA when (p, cp) is not a bialgebra.
DrinfeldDouble drinfeld_double(const Plsa& p, const CoproductPair& cp,
                               Mode mode = Mode::kProduction);

struct ParaKahlerData {
  StructureTensor bracket;
  Form omega;
  Endo e;
  std::optional<StructureTensor> conn;
};

CheckReport check_parakahler(const ParaKahlerData& pk);

/// x + a* -> x - a* on A + A*.
Endo split_involution(std::size_t n);

CheckReport slsba_check(const StructureTensor& lsa, const Tensor3& alpha,
                        Mode mode = Mode::kProduction);

struct SlsbaCoboundary {
  Tensor3 alpha;
  CheckReport report;
};

/// alpha(x) = (id (x) R(x)) r.
SlsbaCoboundary slsba_coboundary(const StructureTensor& lsa, const RMatrix& r,
                                 Mode mode = Mode::kProduction);

struct SlsbaDouble {
  StructureTensor lsa;
  Tensor3 alpha;
  RMatrix r;
  CheckReport report;
};

/// Throws NotAnSLSBA when (lsa, alpha) fails slsba_check.
SlsbaDouble slsba_double(const StructureTensor& lsa, const Tensor3& alpha,
                         Mode mode = Mode::kProduction);

}  // namespace lsakit

#endif  // LSAKIT_BIALGEBRA_HPP_
