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

#include "lsakit/algebra_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

class LineError {
 public:
  explicit LineError(std::size_t line) : line_(line) {}
  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    throw Error(code, "line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::size_t line_;
};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_ws(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t dim, const LineError& at) {
  if (tok.empty() || tok.size() > 9 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    at.fail(ErrorCode::kParseError, "expected a basis index, got '" + tok + "'");
  }
  const std::size_t v = std::stoul(tok);
  if (v < 1 || v > dim) {
    at.fail(ErrorCode::kIndexOutOfRange,
            "index " + tok + " outside 1.." + std::to_string(dim));
  }
  return v - 1;
}

Rational parse_scalar(const std::string& tok, const LineError& at) {
  try {
    return Rational::parse(tok);
  } catch (const Error& e) {
    at.fail(ErrorCode::kParseError, "bad coefficient '" + tok + "'");
  }
}

/// Parses "q1*ek1 + q2*ek2 ..." into a coordinate vector.
Vector parse_terms(std::string_view text, std::size_t dim, const LineError& at) {
  const std::string s = strip_ws(text);
  if (s.empty()) at.fail(ErrorCode::kParseError, "missing right-hand side");
  Vector out = zero_vector(dim);
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    std::size_t signs = 0;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negative ^= s[pos] == '-';
      ++pos;
      ++signs;
    }
    if (!first && signs == 0) at.fail(ErrorCode::kParseError, "expected '+' or '-' between terms");
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string body = s.substr(pos, end - pos);
    if (body.empty()) at.fail(ErrorCode::kParseError, "empty term");
    pos = end;
    first = false;

    std::string coeff = "1";
    std::string basis;
    const auto star = body.find('*');
    if (star != std::string::npos) {
      coeff = body.substr(0, star);
      basis = body.substr(star + 1);
      if (basis.empty() || basis[0] != 'e') {
        at.fail(ErrorCode::kParseError, "expected e<k> after '*' in '" + body + "'");
      }
    } else if (body[0] == 'e') {
      basis = body;
    } else {
      coeff = body;
    }
    Rational q = parse_scalar(coeff, at);
    if (negative) q = -q;
    if (basis.empty()) {
      if (!q.is_zero()) at.fail(ErrorCode::kParseError, "term '" + body + "' has no basis vector");
      continue;
    }
    const std::size_t k = parse_index(basis.substr(1), dim, at);
    out[k] += q;
  }
  return out;
}

void expect_arity(const std::vector<std::string>& lhs, std::size_t n, const LineError& at) {
  if (lhs.size() != n) {
    at.fail(ErrorCode::kParseError, "'" + lhs[0] + "' expects a label and " +
                                        std::to_string(n - 2) + " indices");
  }
}

std::string format_terms(std::span<const Rational> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += v[k].str() + "*e" + std::to_string(k + 1);
  }
  return out;
}

template <typename Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& label, const char* kind) {
  const auto it = m.find(label);
  if (it == m.end()) {
    throw Error(ErrorCode::kInvalidInput, std::string("file has no ") + kind + " '" + label + "'");
  }
  return it->second;
}

}  // namespace

const StructureTensor& AlgebraFile::op(const std::string& label) const {
  return lookup(ops, label, "op");
}
const Form& AlgebraFile::form(const std::string& label) const {
  return lookup(forms, label, "form");
}
const Endo& AlgebraFile::map(const std::string& label) const {
  return lookup(maps, label, "map");
}
const RMatrix& AlgebraFile::tensor2(const std::string& label) const {
  return lookup(tensor2s, label, "tensor2");
}
const RepTensor& AlgebraFile::rep(const std::string& label) const {
  return lookup(reps, label, "rep");
}

StructureTensor AlgebraFile::bracket() const {
  if (has_op("bracket")) return op("bracket");
  if (has_op("conn")) return sub_adjacent(op("conn"));
  throw Error(ErrorCode::kInvalidInput, "file has neither 'bracket' nor 'conn'");
}

AlgebraFile parse_algebra_file(std::string_view text) {
  AlgebraFile file;
  std::set<std::string> seen;
  bool have_dim = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  // Locations of one-sided form entries, checked once the whole file is read.
  std::map<std::pair<std::string, std::pair<std::size_t, std::size_t>>, std::size_t> form_lines;

  while (std::getline(in, raw)) {
    ++line_no;
    const LineError at(line_no);
    const std::string_view line = std::string_view(raw).substr(0, raw.find('#'));
    const auto eq = line.find('=');
    const std::vector<std::string> lhs = split_ws(line.substr(0, eq));
    if (lhs.empty()) {
      if (eq != std::string_view::npos) at.fail(ErrorCode::kParseError, "missing keyword");
      continue;
    }
    const std::string& kw = lhs[0];

    if (kw == "algebra" || kw == "dim") {
      if (eq != std::string_view::npos || lhs.size() != 2) {
        at.fail(ErrorCode::kParseError, "expected '" + kw + " <value>'");
      }
      if (kw == "algebra") {
        if (!file.name.empty()) at.fail(ErrorCode::kDuplicateAssignment, "algebra name given twice");
        file.name = lhs[1];
        continue;
      }
      if (have_dim) at.fail(ErrorCode::kDuplicateAssignment, "dim given twice");
      const std::string& d = lhs[1];
      if (d.empty() || d.size() > 6 ||
          !std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
          std::stoul(d) == 0) {
        at.fail(ErrorCode::kParseError, "dim must be a positive integer");
      }
      file.dim = std::stoul(d);
      have_dim = true;
      continue;
    }

    if (kw != "op" && kw != "form" && kw != "map" && kw != "tensor2" && kw != "rep") {
      at.fail(ErrorCode::kParseError, "unknown keyword '" + kw + "'");
    }
    if (!have_dim) at.fail(ErrorCode::kParseError, "'dim' must precede entries");
    if (eq == std::string_view::npos) at.fail(ErrorCode::kParseError, "missing '='");
    if (lhs.size() < 2) at.fail(ErrorCode::kParseError, "missing label");
    const std::string& label = lhs[1];
    const std::string_view rhs = line.substr(eq + 1);
    const std::size_t n = file.dim;

    std::string key = kw + " " + label;
    for (std::size_t i = 2; i < lhs.size(); ++i) key += " " + lhs[i];

    std::vector<std::size_t> idx;
    if (kw == "op") {
      expect_arity(lhs, 4, at);
    } else if (kw == "form" || kw == "tensor2") {
      expect_arity(lhs, 4, at);
    } else if (kw == "map") {
      expect_arity(lhs, 3, at);
    } else {
      expect_arity(lhs, 5, at);
    }
    for (std::size_t i = 2; i < lhs.size(); ++i) idx.push_back(parse_index(lhs[i], n, at));
    std::string canon = kw + " " + label;
    for (std::size_t i : idx) canon += " " + std::to_string(i);
    if (!seen.insert(canon).second) {
      at.fail(ErrorCode::kDuplicateAssignment, "'" + key + "' assigned twice");
    }

    if (kw == "op") {
      const Vector v = parse_terms(rhs, n, at);
      auto& t = file.ops.try_emplace(label, StructureTensor(n)).first->second;
      for (std::size_t k = 0; k < n; ++k) t(idx[0], idx[1], k) = v[k];
    } else if (kw == "map") {
      const Vector v = parse_terms(rhs, n, at);
      auto& m = file.maps.try_emplace(label, Endo(n)).first->second;
      for (std::size_t k = 0; k < n; ++k) m.m(k, idx[0]) = v[k];
    } else {
      const std::string s = strip_ws(rhs);
      if (s.empty()) at.fail(ErrorCode::kParseError, "missing value");
      const Rational q = parse_scalar(s, at);
      if (kw == "form") {
        file.forms.try_emplace(label, Form(n)).first->second.m(idx[0], idx[1]) = q;
        form_lines[{label, {idx[0], idx[1]}}] = line_no;
      } else if (kw == "tensor2") {
        file.tensor2s.try_emplace(label, RMatrix(n)).first->second.r(idx[0], idx[1]) = q;
      } else {
        file.reps.try_emplace(label, RepTensor(n, n)).first->second.t(idx[0], idx[1], idx[2]) = q;
      }
    }
  }
  if (!have_dim) throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": missing 'dim'");

  for (const auto& [where, line] : form_lines) {
    const auto& [label, ij] = where;
    const auto [i, j] = ij;
    if (i == j) continue;
    const Form& f = file.forms.at(label);
    if (!f.m(i, j).is_zero() && f.m(j, i).is_zero()) {
      file.warnings.push_back("line " + std::to_string(line) + ": form " + label + " sets (" +
                              std::to_string(i + 1) + "," + std::to_string(j + 1) + ") but not (" +
                              std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
    }
  }
  return file;
}

std::string emit_algebra_file(const AlgebraFile& file) {
  std::ostringstream out;
  if (!file.name.empty()) out << "algebra " << file.name << "\n";
  out << "dim " << file.dim << "\n";
  const std::size_t n = file.dim;
  auto idx = [](std::size_t i) { return std::to_string(i + 1); };
  // An all-zero entry still declares its label.
  for (const auto& [label, t] : file.ops) {
    if (t.is_zero()) out << "op " << label << " 1 1 = 0\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::string terms = format_terms(t.c.fiber(i, j));
        if (!terms.empty()) out << "op " << label << " " << idx(i) << " " << idx(j) << " = " << terms << "\n";
      }
    }
  }
  for (const auto& [label, f] : file.forms) {
    if (f.m.is_zero()) out << "form " << label << " 1 1 = 0\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!f.m(i, j).is_zero()) out << "form " << label << " " << idx(i) << " " << idx(j) << " = " << f.m(i, j) << "\n";
      }
    }
  }
  for (const auto& [label, e] : file.maps) {
    if (e.m.is_zero()) out << "map " << label << " 1 = 0\n";
    for (std::size_t i = 0; i < n; ++i) {
      const std::string terms = format_terms(e.m.column(i));
      if (!terms.empty()) out << "map " << label << " " << idx(i) << " = " << terms << "\n";
    }
  }
  for (const auto& [label, r] : file.tensor2s) {
    if (r.r.is_zero()) out << "tensor2 " << label << " 1 1 = 0\n";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!r.r(i, j).is_zero()) out << "tensor2 " << label << " " << idx(i) << " " << idx(j) << " = " << r.r(i, j) << "\n";
      }
    }
  }
  for (const auto& [label, rho] : file.reps) {
    if (rho.is_zero()) out << "rep " << label << " 1 1 1 = 0\n";
    for (std::size_t i = 0; i < rho.t.d1(); ++i) {
      for (std::size_t j = 0; j < rho.t.d2(); ++j) {
        for (std::size_t k = 0; k < rho.t.d3(); ++k) {
          if (!rho.t(i, j, k).is_zero()) {
            out << "rep " << label << " " << idx(i) << " " << idx(j) << " " << idx(k) << " = " << rho.t(i, j, k) << "\n";
          }
        }
      }
    }
  }
  return out.str();
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

void write_algebra_file(const std::string& path, const AlgebraFile& file) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write '" + path + "'");
  out << emit_algebra_file(file);
}

}  // namespace lsakit
