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

#include "lsakit/linalg.hpp"

#include <string>
#include <utility>

#include "lsakit/error.hpp"

namespace lsakit {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "vector sum");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "vector difference");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "dot product");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector product");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].add_product((*this)(i, j), v[j]);
  }
  return out;
}

bool Matrix::is_zero() const { return lsakit::is_zero(a_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix difference");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j).add_product(aik, b(k, j));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Tensor3

bool Tensor3::is_zero() const { return lsakit::is_zero(a_); }

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_) {
    throw Error(ErrorCode::kDimensionMismatch, "tensor sum");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_) {
    throw Error(ErrorCode::kDimensionMismatch, "tensor difference");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row of `m` by the lcm of its denominators. Row scaling does not
// change rank; callers that need the scale factors get them back.
IntMatrix to_integer_rows(const Matrix& m, std::vector<mpz_class>* scales) {
  IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scales) scales->assign(m.rows(), mpz_class(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).raw();
      out[i][j] = q.get_num() * (l / q.get_den());
    }
    if (scales) (*scales)[i] = l;
  }
  return out;
}

void exact_div(mpz_class& x, const mpz_class& d) {
  if (d == 1) return;
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw Error(ErrorCode::kInternalMismatch, "inexact Bareiss division");
  x = std::move(q);
}

}  // namespace

std::size_t mat_rank(const Matrix& m) {
  IntMatrix a = to_integer_rows(m, nullptr);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        exact_div(a[i][j], prev);
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

Matrix mat_inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<mpz_class> scales;
  IntMatrix a = to_integer_rows(m, &scales);
  // Augment with diag(scales): (S m) X = S has solution X = m^{-1}.
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n);
    a[i][n + i] = scales[i];
  }
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw Error(ErrorCode::kSingularMatrix, "matrix is not invertible");
    std::swap(a[p], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        exact_div(a[i][j], prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  // Left block is now det * I.
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = Rational(mpq_class(a[i][n + j], a[i][i]));
  }
  return inv;
}

Vector mat_solve(const Matrix& m, std::span<const Rational> b) {
  return mat_inverse(m).apply(b);
}

Matrix tensor_contract(const Tensor3& t, std::span<const Rational> v, Slot slot) {
  switch (slot) {
    case Slot::kFirst: {
      if (v.size() != t.d1()) throw Error(ErrorCode::kDimensionMismatch, "contract slot 1");
      Matrix m(t.d3(), t.d2());
      for (std::size_t i = 0; i < t.d1(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < t.d2(); ++j) {
          for (std::size_t k = 0; k < t.d3(); ++k) m(k, j).add_product(v[i], t(i, j, k));
        }
      }
      return m;
    }
    case Slot::kSecond: {
      if (v.size() != t.d2()) throw Error(ErrorCode::kDimensionMismatch, "contract slot 2");
      Matrix m(t.d3(), t.d1());
      for (std::size_t i = 0; i < t.d1(); ++i) {
        for (std::size_t j = 0; j < t.d2(); ++j) {
          if (v[j].is_zero()) continue;
          for (std::size_t k = 0; k < t.d3(); ++k) m(k, i).add_product(v[j], t(i, j, k));
        }
      }
      return m;
    }
    case Slot::kThird: {
      if (v.size() != t.d3()) throw Error(ErrorCode::kDimensionMismatch, "contract slot 3");
      Matrix m(t.d1(), t.d2());
      for (std::size_t i = 0; i < t.d1(); ++i) {
        for (std::size_t j = 0; j < t.d2(); ++j) m(i, j) = dot(t.fiber(i, j), v);
      }
      return m;
    }
  }
  return {};
}

}  // namespace lsakit
