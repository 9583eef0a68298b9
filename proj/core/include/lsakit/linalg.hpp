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

#ifndef LSAKIT_LINALG_HPP_
#define LSAKIT_LINALG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "lsakit/rational.hpp"

namespace lsakit {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
/// Plain coordinate dot product (the dual pairing in a basis/dual-basis pair).
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;
  std::span<const Rational> entries() const { return a_; }

  Matrix transpose() const;
  Vector apply(std::span<const Rational> v) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Box-shaped rank-3 array of exact rationals, index order (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3)
      : d1_(d1), d2_(d2), d3_(d3), a_(d1 * d2 * d3) {}

  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  std::size_t d3() const { return d3_; }

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return a_[(i * d2_ + j) * d3_ + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * d2_ + j) * d3_ + k];
  }
  /// Contiguous fiber t(i, j, .).
  std::span<const Rational> fiber(std::size_t i, std::size_t j) const {
    return {a_.data() + (i * d2_ + j) * d3_, d3_};
  }
  std::span<const Rational> entries() const { return a_; }

  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Rational& s);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Rational& s, Tensor3 a) { return a *= s; }
  friend Tensor3 operator-(Tensor3 a) { return a *= Rational(-1); }
  friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

 private:
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  std::size_t d3_ = 0;
  std::vector<Rational> a_;
};

/// Rank over Q, via fraction-free (Bareiss) elimination on a row-scaled
/// integer copy of `m`.
std::size_t mat_rank(const Matrix& m);

/// Exact inverse. Throws Error(kSingularMatrix) when `m` is not invertible
/// and Error(kDimensionMismatch) when it is not square.
Matrix mat_inverse(const Matrix& m);

/// Exact solve of m * x = b for square invertible m.
Vector mat_solve(const Matrix& m, std::span<const Rational> b);

enum class Slot { kFirst, kSecond, kThird };

/// Contracts `v` into one slot of `t` and returns the resulting linear map as
/// a matrix acting on column coordinates:
///   kFirst:  M(k, j) = sum_i v_i t(i, j, k)   (left multiplication by v)
///   kSecond: M(k, i) = sum_j v_j t(i, j, k)   (right multiplication by v)
///   kThird:  M(i, j) = sum_k v_k t(i, j, k)   (bilinear form <v, t(., .)>)
Matrix tensor_contract(const Tensor3& t, std::span<const Rational> v, Slot slot);

}  // namespace lsakit

#endif  // LSAKIT_LINALG_HPP_
