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

#ifndef LSAKIT_TENSOR_LEGS_HPP_
#define LSAKIT_TENSOR_LEGS_HPP_

// Leg conventions for A(x)A and A(x)A(x)A.
//
// An element of A(x)A is an n x n matrix T with T(i,j) the coefficient of
// e_i (x) e_j; an element of A(x)A(x)A is a Tensor3 with the same reading.
// For r = sum_i a_i (x) b_i:
//   r12 o r13 = sum a_i o a_j (x) b_i (x) b_j
//   r13 o r23 = sum a_i (x) a_j (x) b_i o b_j
//   r12 o r23 = sum a_i (x) b_i o a_j (x) b_j
//   r21 o r13 = sum b_i o a_j (x) a_i (x) b_j

#include <cstddef>
#include <span>

#include "lsakit/algebra.hpp"

namespace lsakit {

/// sigma(T): swaps the two legs.
Matrix flip(const Matrix& t);
/// (X (x) Y) T.
Matrix apply_legs(const Matrix& x, const Matrix& y, const Matrix& t);
/// (X (x) id) T.
Matrix apply_first(const Matrix& x, const Matrix& t);
/// (id (x) Y) T.
Matrix apply_second(const Matrix& y, const Matrix& t);

/// Applies m to leg 0, 1 or 2 of t.
Tensor3 apply_leg(const Tensor3& t, const Matrix& m, std::size_t leg);
/// (sigma (x) id) T.
Tensor3 flip12(const Tensor3& t);
/// T (x) v.
Tensor3 tensor_with(const Matrix& t, std::span<const Rational> v);

/// alpha(x) for a coproduct stored as alpha(x,i,j).
Matrix coproduct_at(const Tensor3& alpha, std::span<const Rational> x);
Matrix coproduct_basis(const Tensor3& alpha, std::size_t x);
/// (alpha (x) id) T.
Tensor3 coproduct_first(const Tensor3& alpha, const Matrix& t);
/// (id (x) alpha) T.
Tensor3 coproduct_second(const Tensor3& alpha, const Matrix& t);

enum class Legs { k12_13, k13_23, k12_23, k21_13 };

/// Placement product of r with itself under `op`, see the header comment.
Tensor3 r_product(const StructureTensor& op, const Matrix& r, Legs legs);

}  // namespace lsakit

#endif  // LSAKIT_TENSOR_LEGS_HPP_
