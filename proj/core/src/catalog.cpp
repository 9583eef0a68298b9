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

#include "lsakit/catalog.hpp"

#include <initializer_list>

#include "lsakit/check.hpp"
#include "lsakit/error.hpp"

namespace lsakit {

namespace {

struct Product {
  std::size_t i;
  std::size_t j;
  std::vector<Rational> value;  // coefficients of e_1, e_2, ...
};

/// Builds a tensor from 1-based products.
StructureTensor table(std::size_t n, std::initializer_list<Product> products) {
  StructureTensor t(n);
  for (const auto& p : products) {
    std::size_t k = 0;
    for (const Rational& q : p.value) t(p.i - 1, p.j - 1, k++) = q;
  }
  return t;
}

Form area_form() {
  Form w(2);
  w.m(0, 1) = 1;
  w.m(1, 0) = -1;
  return w;
}

const Rational kHalf(1, 2);

CatalogEntry ssla(std::string name, std::string provenance, std::string notes,
                  StructureTensor bracket, StructureTensor conn) {
  CatalogEntry e{std::move(name), EntryKind::kSsla, std::move(provenance), std::move(notes), {}};
  e.data.name = e.name;
  e.data.dim = 2;
  e.data.ops.emplace("bracket", std::move(bracket));
  e.data.ops.emplace("conn", std::move(conn));
  e.data.forms.emplace("omega", area_form());
  return e;
}

CatalogEntry plsa(std::string name, std::string provenance, std::string notes,
                  StructureTensor prec, StructureTensor succ) {
  CatalogEntry e{std::move(name), EntryKind::kPlsa, std::move(provenance), std::move(notes), {}};
  e.data.name = e.name;
  e.data.dim = prec.dim();
  e.data.ops.emplace("prec", std::move(prec));
  e.data.ops.emplace("succ", std::move(succ));
  return e;
}

void validate(const CatalogEntry& e) {
  CheckReport rep;
  switch (e.kind) {
    case EntryKind::kSsla: rep = check_special_symplectic(special_symplectic_of(e)); break;
    case EntryKind::kPlsa: rep = check_plsa(plsa_of(e)); break;
    case EntryKind::kLsa: rep = check_left_symmetric(lsa_of(e)); break;
  }
  if (!rep.passed()) {
    throw Error(ErrorCode::kInternalMismatch, "catalog entry " + e.name + " fails " + rep.check);
  }
}

std::vector<CatalogEntry> build() {
  const StructureTensor abelian(2);
  const StructureTensor affine = table(2, {{1, 2, {1, 0}}, {2, 1, {-1, 0}}});
  const std::string nonabelian_note =
      "bracket is the commutator of the connection, [e1,e2] = e1; a bracket of e2 would not "
      "make the connection torsion free";

  std::vector<CatalogEntry> out;
  out.push_back(ssla("ssla-2d-1", "2-dim special symplectic, abelian, flat connection", "",
                     abelian, StructureTensor(2)));
  out.push_back(ssla("ssla-2d-2", "2-dim special symplectic, abelian, nabla_e1 e1 = e2", "",
                     abelian, table(2, {{1, 1, {0, 1}}})));
  out.push_back(ssla("ssla-2d-3", "2-dim special symplectic, non-abelian", nonabelian_note,
                     affine, table(2, {{2, 1, {-1, 0}}, {2, 2, {0, 1}}})));
  out.push_back(ssla("ssla-2d-4", "2-dim special symplectic, non-abelian", nonabelian_note,
                     affine,
                     table(2, {{1, 2, {kHalf, 0}}, {2, 1, {-kHalf, 0}}, {2, 2, {1, kHalf}}})));

  const std::string succ_note = "e2 succ e1 = 0 (the table leaves this product implicit)";
  out.push_back(plsa("plsa-2d-I", "post-left-symmetric algebra of ssla-2d-1", "",
                     StructureTensor(2), StructureTensor(2)));
  out.push_back(plsa("plsa-2d-II", "post-left-symmetric algebra of ssla-2d-2", "",
                     table(2, {{1, 1, {0, 1}}}), StructureTensor(2)));
  out.push_back(plsa("plsa-2d-III", "post-left-symmetric algebra of ssla-2d-3", succ_note,
                     table(2, {{1, 2, {-1, 0}}, {2, 1, {-1, 0}}}),
                     table(2, {{1, 2, {1, 0}}, {2, 2, {0, 1}}})));
  out.push_back(plsa("plsa-2d-IV", "post-left-symmetric algebra of ssla-2d-4", succ_note,
                     table(2, {{1, 2, {-kHalf, 0}}, {2, 1, {-kHalf, 0}}, {2, 2, {1, -kHalf}}}),
                     table(2, {{1, 2, {1, 0}}, {2, 2, {0, 1}}})));

  CatalogEntry unit{"lsa-1d-unit", EntryKind::kLsa, "1-dim left-symmetric algebra e1.e1 = e1", "",
                    {}};
  unit.data.name = unit.name;
  unit.data.dim = 1;
  unit.data.ops.emplace("conn", table(1, {{1, 1, {1}}}));
  out.push_back(std::move(unit));

  for (const auto& e : out) validate(e);
  return out;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = build();
  return all;
}

void require_kind(const CatalogEntry& e, EntryKind kind) {
  if (e.kind != kind) {
    throw Error(ErrorCode::kInvalidInput, e.name + " is a " + std::string(entry_kind_name(e.kind)) +
                                              " entry, not " + std::string(entry_kind_name(kind)));
  }
}

}  // namespace

std::string_view entry_kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::kSsla: return "ssla";
    case EntryKind::kPlsa: return "plsa";
    case EntryKind::kLsa: return "lsa";
  }
  return "?";
}

std::vector<CatalogListing> catalog_list() {
  std::vector<CatalogListing> out;
  for (const auto& e : entries()) out.push_back({e.name, e.kind, e.provenance});
  return out;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::kUnknownEntry, "no catalog entry named '" + name + "'");
}

SpecialSymplecticData special_symplectic_of(const CatalogEntry& e) {
  require_kind(e, EntryKind::kSsla);
  return {e.data.op("bracket"), e.data.op("conn"), e.data.form("omega")};
}

Plsa plsa_of(const CatalogEntry& e) {
  require_kind(e, EntryKind::kPlsa);
  return {e.data.op("prec"), e.data.op("succ")};
}

StructureTensor lsa_of(const CatalogEntry& e) {
  require_kind(e, EntryKind::kLsa);
  return e.data.op("conn");
}

}  // namespace lsakit
