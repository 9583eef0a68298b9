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

#include "lsakit/algebra.hpp"

#include <string>
#include <utility>

#include "lsakit/error.hpp"

namespace lsakit {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

StructureTensor::StructureTensor(Tensor3 t) : c(std::move(t)) {
  if (c.d1() != c.d2() || c.d2() != c.d3()) {
    throw Error(ErrorCode::kDimensionMismatch, "structure tensor must be cubic");
  }
}

Vector StructureTensor::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  require_same_dim(x.size(), n, "product operand");
  require_same_dim(y.size(), n, "product operand");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k].add_product(s, c(i, j, k));
    }
  }
  return out;
}

Vector StructureTensor::basis_product(std::size_t i, std::size_t j) const {
  auto f = c.fiber(i, j);
  return Vector(f.begin(), f.end());
}

Matrix StructureTensor::left(std::span<const Rational> x) const {
  return tensor_contract(c, x, Slot::kFirst);
}

Matrix StructureTensor::right(std::span<const Rational> x) const {
  return tensor_contract(c, x, Slot::kSecond);
}

Matrix StructureTensor::left_basis(std::size_t i) const {
  return left(basis_vector(dim(), i));
}

Matrix StructureTensor::right_basis(std::size_t i) const {
  return right(basis_vector(dim(), i));
}

StructureTensor operator+(const StructureTensor& a, const StructureTensor& b) {
  return StructureTensor(a.c + b.c);
}

StructureTensor operator-(const StructureTensor& a, const StructureTensor& b) {
  return StructureTensor(a.c - b.c);
}

StructureTensor operator*(const Rational& s, const StructureTensor& a) {
  return StructureTensor(s * a.c);
}

StructureTensor sub_adjacent(const StructureTensor& op) {
  const std::size_t n = op.dim();
  StructureTensor br(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) br(i, j, k) = op(i, j, k) - op(j, i, k);
    }
  }
  return br;
}

Rational Form::eval(std::span<const Rational> x, std::span<const Rational> y) const {
  return dot(x, m.apply(y));
}

Form twist_form(const Form& g, const Endo& n) {
  require_same_dim(g.dim(), n.dim(), "twist_form");
  return Form(n.m.transpose() * g.m);
}

Matrix RepTensor::at(std::size_t i) const {
  const std::size_t m = module_dim();
  Matrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) out(j, k) = t(i, j, k);
  }
  return out;
}

Matrix RepTensor::of(std::span<const Rational> x) const {
  require_same_dim(x.size(), source_dim(), "representation argument");
  const std::size_t m = module_dim();
  Matrix out(m, m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) out(j, k).add_product(x[i], t(i, j, k));
    }
  }
  return out;
}

RepTensor left_rep(const StructureTensor& op) {
  const std::size_t n = op.dim();
  RepTensor rho(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) rho.t(i, k, j) = op(i, j, k);
    }
  }
  return rho;
}

RepTensor right_rep(const StructureTensor& op) {
  const std::size_t n = op.dim();
  RepTensor rho(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) rho.t(i, k, j) = op(j, i, k);
    }
  }
  return rho;
}

void CheckReport::add(std::string where, std::vector<std::size_t> indices, Vector residual) {
  violations.push_back({std::move(where), std::move(indices), std::move(residual)});
}

void CheckReport::merge(const CheckReport& sub) {
  for (const auto& v : sub.violations) {
    violations.push_back({sub.check + "/" + v.where, v.indices, v.residual});
  }
  for (const auto& a : sub.alarms) alarms.push_back(sub.check + ": " + a);
}

std::size_t CheckReport::count(std::string_view prefix) const {
  std::size_t n = 0;
  for (const auto& v : violations) {
    if (std::string_view(v.where).starts_with(prefix)) ++n;
  }
  return n;
}

}  // namespace lsakit
