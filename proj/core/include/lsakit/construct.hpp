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

#ifndef LSAKIT_CONSTRUCT_HPP_
#define LSAKIT_CONSTRUCT_HPP_

#include <optional>

#include "lsakit/algebra.hpp"

namespace lsakit {

// Dual actions on V*, in dual-basis coordinates:
//   <L*(x)a, y> = -<a, x o y>,  <R*(x)a, y> = -<a, y o x>.
// Each is the negative transpose of the corresponding action on V.

/// x -> -rho(x)^T. Every dual action in the library goes through this.
RepTensor dual_of(const RepTensor& rho);
RepTensor dual_left_action(const StructureTensor& op);
RepTensor dual_right_action(const StructureTensor& op);
RepTensor coadjoint(const StructureTensor& br);

/// Bracket on g + V: [(x,u),(y,v)] = ([x,y], rho(x)v - rho(y)u).
StructureTensor semidirect_lie(const StructureTensor& br, const RepTensor& rho);

/// Data on g + g' with the first base_dim indices carrying g.
struct DoubleData {
  StructureTensor bracket;
  StructureTensor conn;
  Form metric;
  std::optional<Form> omega_p;
  std::size_t base_dim = 0;
};

/// <x,b> + <a,y> on g + g*.
Form pairing_metric(std::size_t n);
/// -<x,b> + <a,y> on g + g*.
Form symplectic_pairing(std::size_t n);

DoubleData tangent_double(const SpecialSymplecticData& s);
DoubleData cotangent_double(const SpecialSymplecticData& s);
/// Needs only a left-symmetric product; the bracket is its commutator.
DoubleData cotangent_double(const StructureTensor& lsa);

/// w(x,y) = <phi(x), y>.
Endo phi_from_omega(const Form& w);

/// [[l2 I, l1 f^-1], [l3 f, l4 I]] on V1 + V2.
Endo build_N(const Rational& l1, const Rational& l2, const Rational& l3, const Rational& l4,
             const Endo& f);

enum class Family { kF1, kF2, kF3 };

struct FamilyParams {
  Family family = Family::kF1;
  Rational lambda = 1;
  Rational mu = 0;
  Rational k = 0;  // F3 only
  int sign = 1;
};

/// Throws BadParams or IrrationalSquareRoot.
void validate_params(const FamilyParams& p);

struct ComplexProduct {
  Endo j;
  Endo e;
};

ComplexProduct family_JE(const FamilyParams& p, const Endo& f);

struct HypersymplecticPackage {
  DoubleData dbl;
  Endo j;
  Endo e;
  Form g;
  CheckReport report;
};

HypersymplecticPackage hypersymplectic_from_tangent(const SpecialSymplecticData& s,
                                                    const FamilyParams& p);
HypersymplecticPackage hypersymplectic_from_cotangent(const SpecialSymplecticData& s,
                                                      const FamilyParams& p);

/// The connection with w([x,y],z) = -w(y, conn_x z).
StructureTensor lsa_from_symplectic(const StructureTensor& br, const Form& w);

/// w(x prec y, z) = -w(y, z.x) and w(x succ y, z) = w(y, [z,x]).
Plsa plsa_from_special_symplectic(const SpecialSymplecticData& s);

/// phi(e_x, e_y) has dual coordinates phi(x, y, .).
struct CotangentExtensionData {
  StructureTensor base;
  RepTensor l;
  RepTensor r;
  Tensor3 phi;
};

/// (x,a)o(y,b) = (x.y, l(x)b + r(y)a + phi(x,y)) on g + g*.
StructureTensor affine_product(const CotangentExtensionData& d);

struct ExtensionResult {
  StructureTensor product;
  Plsa derived;
  CheckReport report;
};

/// Builds the product and checks: l = L*, the pair derived from r is a
/// post-left-symmetric algebra, and phi satisfies the cocycle and symmetry conditions.
ExtensionResult affine_cotangent_extension(const CotangentExtensionData& d);

/// Both connections flat and torsion free for br, plus
/// nabla_x(nt_y z - nabla_y z) = (nt_z - nabla_z) nt_x y + (nt_y - nabla_y) nt_x z.
CheckReport post_affine_check(const StructureTensor& nabla, const StructureTensor& nabla_tilde,
                              const StructureTensor& br);

}  // namespace lsakit

#endif  // LSAKIT_CONSTRUCT_HPP_
