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

// Literal tables for hand-written fixtures, 1-based like the file format.

#ifndef LSAKIT_TESTS_SUPPORT_TABLES_HPP_
#define LSAKIT_TESTS_SUPPORT_TABLES_HPP_

#include <initializer_list>
#include <vector>

#include "lsakit/algebra.hpp"

namespace lsakit::tables {

struct Entry {
  std::size_t i;
  std::size_t j;
  std::vector<Rational> value;
};

/// e_i o e_j = value for each listed pair, zero elsewhere.
inline StructureTensor op(std::size_t n, std::initializer_list<Entry> entries) {
  StructureTensor t(n);
  for (const auto& e : entries) {
    for (std::size_t k = 0; k < e.value.size(); ++k) t(e.i - 1, e.j - 1, k) = e.value[k];
  }
  return t;
}

/// Row-major square matrix.
inline Matrix mat(std::size_t n, std::initializer_list<Rational> entries) {
  Matrix m(n, n);
  std::size_t k = 0;
  for (const auto& v : entries) {
    m(k / n, k % n) = v;
    ++k;
  }
  return m;
}

/// e1 ^ e2 on a 2-dim space.
inline Form area() { return Form(mat(2, {0, 1, -1, 0})); }

inline RepTensor rep(std::initializer_list<Matrix> mats) {
  const std::size_t n = mats.size();
  const std::size_t m = mats.begin()->rows();
  RepTensor r(n, m);
  std::size_t i = 0;
  for (const auto& a : mats) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) r.t(i, j, k) = a(j, k);
    }
    ++i;
  }
  return r;
}

}  // namespace lsakit::tables

#endif  // LSAKIT_TESTS_SUPPORT_TABLES_HPP_
