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

#ifndef LSAKIT_MATCHED_HPP_
#define LSAKIT_MATCHED_HPP_

#include "lsakit/algebra.hpp"

namespace lsakit {

/// Two left-symmetric algebras with mutual actions: l1, r1 let A1 act on A2,
/// l2, r2 let A2 act on A1.
struct MatchedPairData {
  StructureTensor a1;
  StructureTensor a2;
  RepTensor l1;
  RepTensor r1;
  RepTensor l2;
  RepTensor r2;
};

/// Both algebras left-symmetric, both bimodule conditions and the four
/// gluing identities (labelled lsabi1..lsabi4).
CheckReport check_matched_pair(const MatchedPairData& mp);

/// (x+a).(y+b) = (x.y + l2(a)y + r2(b)x) + (a.b + l1(x)b + r1(y)a), unchecked.
StructureTensor bowtie_product(const MatchedPairData& mp);
/// Throws NotMatched when check_matched_pair fails.
StructureTensor bowtie_lsa(const MatchedPairData& mp);

/// (l(A), l(A*), L.*, Lprec*, L.*, Lprec*) for post-left-symmetric algebras on A and A*.
MatchedPairData dual_matched_pair(const Plsa& a, const Plsa& astar);

struct DoubleExtensionData {
  Plsa plsa_a;
  Plsa plsa_astar;
  StructureTensor glued;
  Form omega_p;
};

struct DoubleExtension {
  DoubleExtensionData data;
  CheckReport report;
};

/// Matched-pair report for the pair that a double extension needs.
CheckReport check_double_extension(const Plsa& a, const Plsa& astar);
/// Throws NotMatched naming the failing identities.
DoubleExtension double_extension(const Plsa& a, const Plsa& astar);

/// The post-left-symmetric structure on A + A* with the cross products
///   x prec a = R.*(x)a + R.*(a)x,   x succ a = ad*(x)a - Rsucc*(a)x
/// and their mirror images.
Plsa mixed_products(const Plsa& a, const Plsa& astar);

/// Converse diagnostic: reads the six actions off a left-symmetric product on
/// A + A* (first n indices = A) and compares them with the dual actions of the
/// post-left-symmetric pair extracted with the symplectic pairing.
CheckReport check_split_actions(const StructureTensor& glued, std::size_t n);

}  // namespace lsakit

#endif  // LSAKIT_MATCHED_HPP_
