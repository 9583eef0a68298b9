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

#ifndef LSAKIT_CHECK_HPP_
#define LSAKIT_CHECK_HPP_

#include "lsakit/algebra.hpp"

namespace lsakit {

// Every verifier is exact and reports each failing basis tuple together with
// its residual. Indices in reports are 0-based.

CheckReport check_skew(const Form& b);
CheckReport check_symmetric(const Form& b);
CheckReport check_nondegenerate(const Form& b);

CheckReport check_jacobi(const StructureTensor& br);
CheckReport check_left_symmetric(const StructureTensor& op);
CheckReport check_commutative(const StructureTensor& op);
/// prec commutative, succ left-symmetric, x succ (y prec z) = (x.y) prec z + y prec (x.z).
CheckReport check_plsa(const Plsa& p);

CheckReport check_torsion_free(const StructureTensor& br, const StructureTensor& conn);
CheckReport check_flat(const StructureTensor& br, const StructureTensor& conn);
/// d w(x,y,z) = w(x,[y,z]) + w(y,[z,x]) + w(z,[x,y]).
CheckReport check_closed(const StructureTensor& br, const Form& w);
/// w(conn_x y, z) = w(conn_x z, y).
CheckReport check_parallel_form(const StructureTensor& conn, const Form& w);
CheckReport check_special_symplectic(const StructureTensor& br, const StructureTensor& conn,
                                     const Form& w);
CheckReport check_special_symplectic(const SpecialSymplecticData& s);

/// T(N)(x,y) = [Nx,Ny] + N^2[x,y] - N([Nx,y] + [x,Ny]).
StructureTensor nijenhuis_torsion(const StructureTensor& br, const Endo& n);

/// E^2 = id with E != +-id, T(E) = 0 and equal-dimensional +-1 eigenspaces.
CheckReport check_paracomplex(const StructureTensor& br, const Endo& e);
CheckReport check_complex_product(const StructureTensor& br, const Endo& j, const Endo& e);
CheckReport check_metric_compatible(const Form& g, const Endo& j, const Endo& e);
/// Also raises an alarm when w1 is closed while w2 or w3 is not.
CheckReport check_hypersymplectic(const StructureTensor& br, const Endo& j, const Endo& e,
                                  const Form& g);

CheckReport check_representation(const StructureTensor& br, const RepTensor& rho);
CheckReport check_bimodule(const StructureTensor& lsa, const RepTensor& l, const RepTensor& r);

/// Matrix entries in row-major order, for residual reporting.
Vector flatten(const Matrix& m);

}  // namespace lsakit

#endif  // LSAKIT_CHECK_HPP_
