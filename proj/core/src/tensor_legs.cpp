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

#include "lsakit/tensor_legs.hpp"

#include "lsakit/error.hpp"

namespace lsakit {

Matrix flip(const Matrix& t) { return t.transpose(); }

Matrix apply_legs(const Matrix& x, const Matrix& y, const Matrix& t) {
  return x * t * y.transpose();
}

Matrix apply_first(const Matrix& x, const Matrix& t) { return x * t; }

Matrix apply_second(const Matrix& y, const Matrix& t) { return t * y.transpose(); }

Tensor3 apply_leg(const Tensor3& t, const Matrix& m, std::size_t leg) {
  const std::size_t d1 = t.d1(), d2 = t.d2(), d3 = t.d3();
  Tensor3 out(d1, d2, d3);
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t j = 0; j < d2; ++j) {
      for (std::size_t k = 0; k < d3; ++k) {
        const Rational& v = t(i, j, k);
        if (v.is_zero()) continue;
        switch (leg) {
          case 0:
            for (std::size_t a = 0; a < d1; ++a) out(a, j, k).add_product(m(a, i), v);
            break;
          case 1:
            for (std::size_t a = 0; a < d2; ++a) out(i, a, k).add_product(m(a, j), v);
            break;
          case 2:
            for (std::size_t a = 0; a < d3; ++a) out(i, j, a).add_product(m(a, k), v);
            break;
          default:
            throw Error(ErrorCode::kIndexOutOfRange, "tensor leg must be 0, 1 or 2");
        }
      }
    }
  }
  return out;
}

Tensor3 flip12(const Tensor3& t) {
  Tensor3 out(t.d2(), t.d1(), t.d3());
  for (std::size_t i = 0; i < t.d1(); ++i) {
    for (std::size_t j = 0; j < t.d2(); ++j) {
      for (std::size_t k = 0; k < t.d3(); ++k) out(j, i, k) = t(i, j, k);
    }
  }
  return out;
}

Tensor3 tensor_with(const Matrix& t, std::span<const Rational> v) {
  Tensor3 out(t.rows(), t.cols(), v.size());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (t(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k) out(i, j, k) = t(i, j) * v[k];
    }
  }
  return out;
}

Matrix coproduct_at(const Tensor3& alpha, std::span<const Rational> x) {
  return tensor_contract(alpha, x, Slot::kFirst).transpose();
}

Matrix coproduct_basis(const Tensor3& alpha, std::size_t x) {
  Matrix out(alpha.d2(), alpha.d3());
  for (std::size_t i = 0; i < alpha.d2(); ++i) {
    for (std::size_t j = 0; j < alpha.d3(); ++j) out(i, j) = alpha(x, i, j);
  }
  return out;
}

Tensor3 coproduct_first(const Tensor3& alpha, const Matrix& t) {
  const std::size_t n = alpha.d2();
  Tensor3 out(n, n, t.cols());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const Rational& v = t(i, j);
      if (v.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) out(p, q, j).add_product(v, alpha(i, p, q));
      }
    }
  }
  return out;
}

Tensor3 coproduct_second(const Tensor3& alpha, const Matrix& t) {
  const std::size_t n = alpha.d2();
  Tensor3 out(t.rows(), n, n);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const Rational& v = t(i, j);
      if (v.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) out(i, p, q).add_product(v, alpha(j, p, q));
      }
    }
  }
  return out;
}

Tensor3 r_product(const StructureTensor& op, const Matrix& r, Legs legs) {
  const std::size_t n = op.dim();
  require_same_dim(r.rows(), n, "r_product");
  Tensor3 out(n, n, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Rational& u = r(p, q);
      if (u.is_zero()) continue;
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t s = 0; s < n; ++s) {
          const Rational& w = r(t, s);
          if (w.is_zero()) continue;
          const Rational uw = u * w;
          for (std::size_t k = 0; k < n; ++k) {
            switch (legs) {
              case Legs::k12_13: out(k, q, s).add_product(uw, op(p, t, k)); break;
              case Legs::k13_23: out(p, t, k).add_product(uw, op(q, s, k)); break;
              case Legs::k12_23: out(p, k, s).add_product(uw, op(q, t, k)); break;
              case Legs::k21_13: out(k, p, s).add_product(uw, op(q, t, k)); break;
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace lsakit
