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

#ifndef LSAKIT_ALGEBRA_FILE_HPP_
#define LSAKIT_ALGEBRA_FILE_HPP_

// Line-oriented text format; basis indices are 1-based in files.
//
//   algebra NAME
//   dim N
//   op LABEL i j = q1*ek1 + q2*ek2     e_i o e_j
//   form LABEL i j = q
//   map LABEL i = q1*ek1 + ...         image of e_i
//   tensor2 LABEL i j = q              coefficient of e_i (x) e_j
//   rep LABEL i j k = q                entry (j,k) of rho(e_i)
//
// '#' starts a comment. Omitted entries are zero.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lsakit/algebra.hpp"

namespace lsakit {

struct AlgebraFile {
  std::string name;
  std::size_t dim = 0;
  std::map<std::string, StructureTensor> ops;
  std::map<std::string, Form> forms;
  std::map<std::string, Endo> maps;
  std::map<std::string, RMatrix> tensor2s;
  std::map<std::string, RepTensor> reps;
  /// Lint messages from parsing; never part of the emitted text.
  std::vector<std::string> warnings;

  /// Throws InvalidInput naming the missing label.
  const StructureTensor& op(const std::string& label) const;
  const Form& form(const std::string& label) const;
  const Endo& map(const std::string& label) const;
  const RMatrix& tensor2(const std::string& label) const;
  const RepTensor& rep(const std::string& label) const;
  bool has_op(const std::string& label) const { return ops.count(label) != 0; }

  /// The "bracket" op, or the commutator of "conn" when no bracket is given.
  StructureTensor bracket() const;

  friend bool operator==(const AlgebraFile& a, const AlgebraFile& b) {
    return a.name == b.name && a.dim == b.dim && a.ops == b.ops && a.forms == b.forms &&
           a.maps == b.maps && a.tensor2s == b.tensor2s && a.reps == b.reps;
  }
};

AlgebraFile parse_algebra_file(std::string_view text);
/// Canonical text: labels sorted, entries in index order, zeros omitted.
std::string emit_algebra_file(const AlgebraFile& file);

AlgebraFile read_algebra_file(const std::string& path);
void write_algebra_file(const std::string& path, const AlgebraFile& file);

}  // namespace lsakit

#endif  // LSAKIT_ALGEBRA_FILE_HPP_
