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

#ifndef LSAKIT_CATALOG_HPP_
#define LSAKIT_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "lsakit/algebra.hpp"
#include "lsakit/algebra_file.hpp"

namespace lsakit {

enum class EntryKind { kSsla, kPlsa, kLsa };

std::string_view entry_kind_name(EntryKind kind);

/// Label conventions of the payload:
///   ssla: ops "bracket", "conn"; form "omega"
///   plsa: ops "prec", "succ"
///   lsa:  op "conn"
struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::kLsa;
  std::string provenance;
  std::string notes;
  AlgebraFile data;
};

struct CatalogListing {
  std::string name;
  EntryKind kind;
  std::string provenance;
};

std::vector<CatalogListing> catalog_list();
/// Throws UnknownEntry.
const CatalogEntry& catalog_get(const std::string& name);

/// Throw InvalidInput when the entry has a different kind.
SpecialSymplecticData special_symplectic_of(const CatalogEntry& e);
Plsa plsa_of(const CatalogEntry& e);
StructureTensor lsa_of(const CatalogEntry& e);

}  // namespace lsakit

#endif  // LSAKIT_CATALOG_HPP_
