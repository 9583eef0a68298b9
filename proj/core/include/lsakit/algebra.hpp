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

#ifndef LSAKIT_ALGEBRA_HPP_
#define LSAKIT_ALGEBRA_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsakit/linalg.hpp"

namespace lsakit {

/// A bilinear operation on an n-dimensional space: e_i o e_j = sum_k c(i,j,k) e_k.
struct StructureTensor {
  Tensor3 c;

  StructureTensor() = default;
  explicit StructureTensor(std::size_t n) : c(n, n, n) {}
  explicit StructureTensor(Tensor3 t);

  std::size_t dim() const { return c.d1(); }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c(i, j, k); }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c(i, j, k);
  }

  Vector apply(std::span<const Rational> x, std::span<const Rational> y) const;
  /// e_i o e_j as a coordinate vector.
  Vector basis_product(std::size_t i, std::size_t j) const;
  /// Matrix of y -> x o y.
  Matrix left(std::span<const Rational> x) const;
  /// Matrix of y -> y o x.
  Matrix right(std::span<const Rational> x) const;
  Matrix left_basis(std::size_t i) const;
  Matrix right_basis(std::size_t i) const;
  bool is_zero() const { return c.is_zero(); }

  friend StructureTensor operator+(const StructureTensor& a, const StructureTensor& b);
  friend StructureTensor operator-(const StructureTensor& a, const StructureTensor& b);
  friend StructureTensor operator*(const Rational& s, const StructureTensor& a);
  friend bool operator==(const StructureTensor& a, const StructureTensor& b) = default;
};

/// Commutator x o y - y o x.
StructureTensor sub_adjacent(const StructureTensor& op);

/// Bilinear form B(e_i, e_j) = m(i, j).
struct Form {
  Matrix m;

  Form() = default;
  explicit Form(std::size_t n) : m(n, n) {}
  explicit Form(Matrix mat) : m(std::move(mat)) {}

  std::size_t dim() const { return m.rows(); }
  Rational eval(std::span<const Rational> x, std::span<const Rational> y) const;
  friend bool operator==(const Form& a, const Form& b) = default;
};

/// Linear endomorphism acting on column coordinates.
struct Endo {
  Matrix m;

  Endo() = default;
  explicit Endo(std::size_t n) : m(n, n) {}
  explicit Endo(Matrix mat) : m(std::move(mat)) {}

  static Endo identity(std::size_t n) { return Endo(Matrix::identity(n)); }
  std::size_t dim() const { return m.rows(); }
  Vector apply(std::span<const Rational> x) const { return m.apply(x); }
  friend bool operator==(const Endo& a, const Endo& b) = default;
};

/// B(N x, y), the form obtained by feeding N into the first slot.
Form twist_form(const Form& g, const Endo& n);

/// Linear map rho from an n-dimensional algebra into gl(m): rho(e_i) has entry (j,k) = t(i,j,k).
struct RepTensor {
  Tensor3 t;

  RepTensor() = default;
  RepTensor(std::size_t n, std::size_t m) : t(n, m, m) {}
  explicit RepTensor(Tensor3 tt) : t(std::move(tt)) {}

  std::size_t source_dim() const { return t.d1(); }
  std::size_t module_dim() const { return t.d2(); }
  Matrix at(std::size_t i) const;
  Matrix of(std::span<const Rational> x) const;
  bool is_zero() const { return t.is_zero(); }
  friend bool operator==(const RepTensor& a, const RepTensor& b) = default;
};

/// The representation x -> L(x) (left multiplication).
RepTensor left_rep(const StructureTensor& op);
/// The representation x -> R(x) (right multiplication).
RepTensor right_rep(const StructureTensor& op);

/// r = sum_ij r(i,j) e_i (x) e_j.
struct RMatrix {
  Matrix r;

  RMatrix() = default;
  explicit RMatrix(std::size_t n) : r(n, n) {}
  explicit RMatrix(Matrix m) : r(std::move(m)) {}
  std::size_t dim() const { return r.rows(); }
  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;
};

/// alpha(e_x) = sum_ij alpha(x,i,j) e_i (x) e_j, same layout for beta.
struct CoproductPair {
  Tensor3 alpha;
  Tensor3 beta;

  CoproductPair() = default;
  explicit CoproductPair(std::size_t n) : alpha(n, n, n), beta(n, n, n) {}
  CoproductPair(Tensor3 a, Tensor3 b) : alpha(std::move(a)), beta(std::move(b)) {}
  std::size_t dim() const { return alpha.d1(); }
  friend bool operator==(const CoproductPair& a, const CoproductPair& b) = default;
};

/// Post-left-symmetric pair (prec, succ).
struct Plsa {
  StructureTensor prec;
  StructureTensor succ;

  std::size_t dim() const { return prec.dim(); }
  /// The associated product x.y = x prec y + x succ y.
  StructureTensor dot() const { return prec + succ; }
  friend bool operator==(const Plsa& a, const Plsa& b) = default;
};

struct SpecialSymplecticData {
  StructureTensor bracket;
  StructureTensor conn;
  Form omega;
};

struct Violation {
  std::string where;
  std::vector<std::size_t> indices;  // 0-based
  Vector residual;
};

struct CheckReport {
  std::string check;
  std::vector<Violation> violations;
  /// Internal-consistency alarms; these never change the verdict.
  std::vector<std::string> alarms;

  CheckReport() = default;
  explicit CheckReport(std::string name) : check(std::move(name)) {}

  bool passed() const { return violations.empty(); }
  void add(std::string where, std::vector<std::size_t> indices, Vector residual);
  /// Appends the violations and alarms of `sub`, prefixing their labels.
  void merge(const CheckReport& sub);
  /// Number of violations whose label starts with `prefix`.
  std::size_t count(std::string_view prefix) const;
  bool passed(std::string_view prefix) const { return count(prefix) == 0; }
};

/// Production evaluates one route; CrossCheck also evaluates the
/// alternative route where one exists and compares.
enum class Mode { kProduction, kCrossCheck };

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace lsakit

#endif  // LSAKIT_ALGEBRA_HPP_
