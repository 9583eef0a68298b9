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

#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "lsakit/bialgebra.hpp"
#include "lsakit/catalog.hpp"
#include "lsakit/check.hpp"
#include "lsakit/construct.hpp"
#include "lsakit/error.hpp"
#include "lsakit/matched.hpp"

namespace lsakit::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxListed = 20;

Plsa plsa_in(const AlgebraFile& f) { return Plsa{f.op("prec"), f.op("succ")}; }

/// Coproducts stored as their dual products; missing labels mean zero.
CoproductPair coproducts_in(const AlgebraFile& f) {
  const StructureTensor zero(f.dim);
  const Plsa star{f.has_op("prec_star") ? f.op("prec_star") : zero,
                  f.has_op("succ_star") ? f.op("succ_star") : zero};
  return coproducts_from_plsa(star);
}

Tensor3 alpha_in(const AlgebraFile& f) {
  const StructureTensor star = f.has_op("conn_star") ? f.op("conn_star") : StructureTensor(f.dim);
  return coproducts_from_plsa(Plsa{star, star}).alpha;
}

MatchedPairData matched_in(const AlgebraFile& f) {
  return {f.op("A1"), f.op("A2"), f.rep("l1"), f.rep("r1"), f.rep("l2"), f.rep("r2")};
}

CheckReport torsion_free_in(const AlgebraFile& f) {
  return check_torsion_free(f.bracket(), f.op("conn"));
}

CheckReport metric_in(const AlgebraFile& f) {
  CheckReport rep("metric");
  rep.merge(check_symmetric(f.form("g")));
  rep.merge(check_nondegenerate(f.form("g")));
  return rep;
}

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s + ")";
}

std::string vector_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

void print_report(const CheckReport& rep, std::ostream& out) {
  out << "check " << rep.check << ": " << (rep.passed() ? "PASS" : "FAIL");
  if (!rep.passed()) out << " (" << rep.violations.size() << " violations)";
  out << "\n";
  for (std::size_t i = 0; i < rep.violations.size() && i < kMaxListed; ++i) {
    const Violation& v = rep.violations[i];
    out << "  " << v.where << " " << index_list(v.indices) << ": " << vector_text(v.residual)
        << "\n";
  }
  if (rep.violations.size() > kMaxListed) {
    out << "  ... " << rep.violations.size() - kMaxListed << " more\n";
  }
  for (const auto& a : rep.alarms) out << "  alarm: " << a << "\n";
}

json report_json(const CheckReport& rep) {
  json violations = json::array();
  for (const Violation& v : rep.violations) {
    json idx = json::array();
    for (std::size_t i : v.indices) idx.push_back(i + 1);
    json residual;
    if (v.residual.size() == 1) {
      residual = v.residual[0].str();
    } else {
      residual = json::array();
      for (const Rational& q : v.residual) residual.push_back(q.str());
    }
    violations.push_back({{"where", v.where}, {"indices", idx}, {"residual", residual}});
  }
  return {{"check", rep.check},
          {"verdict", rep.passed() ? "pass" : "fail"},
          {"violations", violations},
          {"alarms", rep.alarms}};
}

Rational rational_option(const std::string& text, const char* name) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw Error(ErrorCode::kBadParams, std::string("--") + name + " expects a rational, got '" +
                                           text + "'");
  }
}

/// "i j q; i j q" with 1-based indices.
RMatrix parse_r(const std::string& text, std::size_t n) {
  RMatrix r(n);
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    std::istringstream in(item);
    std::string si, sj, sq, extra;
    if (!(in >> si)) continue;
    if (!(in >> sj >> sq) || (in >> extra)) {
      throw Error(ErrorCode::kParseError, "--r entries are 'i j q', got '" + item + "'");
    }
    std::size_t i = 0, j = 0;
    try {
      i = std::stoul(si);
      j = std::stoul(sj);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "--r indices must be integers in '" + item + "'");
    }
    if (i < 1 || i > n || j < 1 || j > n) {
      throw Error(ErrorCode::kIndexOutOfRange, "--r index outside 1.." + std::to_string(n));
    }
    r.r(i - 1, j - 1) = Rational::parse(sq);
  }
  return r;
}

struct ConstructOptions {
  std::string recipe;
  std::vector<std::string> inputs;
  std::string lambda = "1";
  std::string mu = "0";
  std::string k = "0";
  int sign = 1;
  std::string bundle = "tangent";
  std::string r;
  std::string output;
  bool cross_check = false;
};

struct Recipe {
  std::size_t min_inputs;
  std::size_t max_inputs;
  std::function<AlgebraFile(const std::vector<AlgebraFile>&, const ConstructOptions&)> build;
  std::function<std::vector<CheckReport>(const AlgebraFile&, Mode)> verify;
};

AlgebraFile blank(const AlgebraFile& from, const std::string& recipe, std::size_t dim) {
  AlgebraFile f;
  f.name = (from.name.empty() ? std::string("input") : from.name) + "-" + recipe;
  f.dim = dim;
  return f;
}

SpecialSymplecticData ssla_in(const AlgebraFile& f) {
  return {f.bracket(), f.op("conn"), f.form("omega")};
}

AlgebraFile from_double(const AlgebraFile& in, const std::string& recipe, const DoubleData& d) {
  AlgebraFile f = blank(in, recipe, d.bracket.dim());
  f.ops.emplace("bracket", d.bracket);
  f.ops.emplace("conn", d.conn);
  f.forms.emplace("g", d.metric);
  if (d.omega_p) f.forms.emplace("omega", *d.omega_p);
  return f;
}

FamilyParams family_params(Family fam, const ConstructOptions& o) {
  FamilyParams p;
  p.family = fam;
  p.lambda = rational_option(o.lambda, "lambda");
  p.mu = rational_option(o.mu, "mu");
  p.k = rational_option(o.k, "k");
  p.sign = o.sign;
  return p;
}

Recipe hypersymplectic_recipe(Family fam, const char* name) {
  return {1, 1,
          [fam, name](const std::vector<AlgebraFile>& in, const ConstructOptions& o) {
            const FamilyParams p = family_params(fam, o);
            const SpecialSymplecticData s = ssla_in(in[0]);
            HypersymplecticPackage pkg;
            if (o.bundle == "tangent") {
              pkg = hypersymplectic_from_tangent(s, p);
            } else if (o.bundle == "cotangent") {
              pkg = hypersymplectic_from_cotangent(s, p);
            } else {
              throw Error(ErrorCode::kBadParams, "--bundle must be tangent or cotangent");
            }
            AlgebraFile f = blank(in[0], name, pkg.dbl.bracket.dim());
            f.ops.emplace("bracket", pkg.dbl.bracket);
            f.ops.emplace("conn", pkg.dbl.conn);
            f.forms.emplace("g", pkg.g);
            f.maps.emplace("J", pkg.j);
            f.maps.emplace("E", pkg.e);
            return f;
          },
          [](const AlgebraFile& f, Mode m) {
            return std::vector<CheckReport>{run_check("hypersymplectic", f, m),
                                            run_check("lsa", f, m), torsion_free_in(f)};
          }};
}

AlgebraFile plsba_file(const AlgebraFile& like, const std::string& recipe, const Plsa& p,
                       const CoproductPair& cp, const RMatrix& r) {
  AlgebraFile f = blank(like, recipe, p.dim());
  const Plsa star = dualize_coproducts(cp);
  f.ops.emplace("prec", p.prec);
  f.ops.emplace("succ", p.succ);
  f.ops.emplace("prec_star", star.prec);
  f.ops.emplace("succ_star", star.succ);
  f.tensor2s.emplace("r", r);
  return f;
}

const std::map<std::string, Recipe>& recipes() {
  static const std::map<std::string, Recipe> all = [] {
    std::map<std::string, Recipe> m;
    auto checks = [](std::vector<std::string> names) {
      return [names](const AlgebraFile& f, Mode mode) {
        std::vector<CheckReport> out;
        for (const auto& n : names) out.push_back(run_check(n, f, mode));
        return out;
      };
    };

    m["sub-adjacent"] = {1, 1,
                         [](const std::vector<AlgebraFile>& in, const ConstructOptions&) {
                           AlgebraFile f = blank(in[0], "sub-adjacent", in[0].dim);
                           f.ops.emplace("conn", in[0].op("conn"));
                           f.ops.emplace("bracket", sub_adjacent(in[0].op("conn")));
                           return f;
                         },
                         checks({"lie"})};
    m["lsa-from-symplectic"] = {
        1, 1,
        [](const std::vector<AlgebraFile>& in, const ConstructOptions&) {
          AlgebraFile f = blank(in[0], "lsa-from-symplectic", in[0].dim);
          const StructureTensor br = in[0].bracket();
          f.ops.emplace("bracket", br);
          f.ops.emplace("conn", lsa_from_symplectic(br, in[0].form("omega")));
          f.forms.emplace("omega", in[0].form("omega"));
          return f;
        },
        [](const AlgebraFile& f, Mode m) {
          return std::vector<CheckReport>{run_check("lsa", f, m), torsion_free_in(f)};
        }};
    m["plsa-extract"] = {1, 1,
                         [](const std::vector<AlgebraFile>& in, const ConstructOptions&) {
                           AlgebraFile f = blank(in[0], "plsa", in[0].dim);
                           const Plsa p = plsa_from_special_symplectic(ssla_in(in[0]));
                           f.ops.emplace("prec", p.prec);
                           f.ops.emplace("succ", p.succ);
                           return f;
                         },
                         checks({"plsa"})};
    m["tangent-double"] = {
        1, 1,
        [](const std::vector<AlgebraFile>& in, const ConstructOptions&) {
          return from_double(in[0], "tangent-double", tangent_double(ssla_in(in[0])));
        },
        [](const AlgebraFile& f, Mode m) {
          return std::vector<CheckReport>{run_check("lie", f, m), run_check("lsa", f, m),
                                          torsion_free_in(f), check_flat(f.bracket(), f.op("conn")),
                                          metric_in(f)};
        }};
    m["cotangent-double"] = {
        1, 1,
        [](const std::vector<AlgebraFile>& in, const ConstructOptions&) {
          const AlgebraFile& a = in[0];
          const DoubleData d = a.forms.count("omega") ? cotangent_double(ssla_in(a))
                                                      : cotangent_double(a.op("conn"));
          return from_double(a, "cotangent-double", d);
        },
        [](const AlgebraFile& f, Mode m) {
          return std::vector<CheckReport>{run_check("special-symplectic", f, m), metric_in(f)};
        }};
    m["hypersymplectic-f1"] = hypersymplectic_recipe(Family::kF1, "hypersymplectic-f1");
    m["hypersymplectic-f2"] = hypersymplectic_recipe(Family::kF2, "hypersymplectic-f2");
    m["hypersymplectic-f3"] = hypersymplectic_recipe(Family::kF3, "hypersymplectic-f3");
    m["semidirect"] = {1, 1,
                       [](const std::vector<AlgebraFile>& in, const ConstructOptions&) {
                         const StructureTensor br = semidirect_lie(in[0].bracket(), in[0].rep("rho"));
                         AlgebraFile f = blank(in[0], "semidirect", br.dim());
                         f.ops.emplace("bracket", br);
                         return f;
                       },
                       checks({"lie"})};
    m["bowtie"] = {1, 1,
                   [](const std::vector<AlgebraFile>& in, const ConstructOptions&) {
                     const StructureTensor glued = bowtie_lsa(matched_in(in[0]));
                     AlgebraFile f = blank(in[0], "bowtie", glued.dim());
                     f.ops.emplace("conn", glued);
                     f.ops.emplace("bracket", sub_adjacent(glued));
                     return f;
                   },
                   checks({"lsa", "lie"})};
    m["double-extension"] = {
        1, 2,
        [](const std::vector<AlgebraFile>& in, const ConstructOptions&) {
          const Plsa a = plsa_in(in[0]);
          Plsa astar;
          if (in.size() == 2) {
            astar = plsa_in(in[1]);
          } else {
            astar = dualize_coproducts(coproducts_in(in[0]));
          }
          const DoubleExtension de = double_extension(a, astar);
          AlgebraFile f = blank(in[0], "double-extension", 2 * a.dim());
          f.ops.emplace("conn", de.data.glued);
          f.ops.emplace("bracket", sub_adjacent(de.data.glued));
          f.forms.emplace("omega", de.data.omega_p);
          return f;
        },
        checks({"special-symplectic"})};
    m["drinfeld-double"] = {1, 1,
                            [](const std::vector<AlgebraFile>& in, const ConstructOptions& o) {
                              const Mode mode = o.cross_check ? Mode::kCrossCheck
                                                              : Mode::kProduction;
                              const DrinfeldDouble dd =
                                  drinfeld_double(plsa_in(in[0]), coproducts_in(in[0]), mode);
                              return plsba_file(in[0], "drinfeld-double", dd.plsa, dd.cp, dd.r);
                            },
                            checks({"plsba"})};
    m["slsba-double"] = {
        1, 1,
        [](const std::vector<AlgebraFile>& in, const ConstructOptions& o) {
          const Mode mode = o.cross_check ? Mode::kCrossCheck : Mode::kProduction;
          const SlsbaDouble sd = slsba_double(in[0].op("conn"), alpha_in(in[0]), mode);
          const std::size_t n = in[0].dim;
          AlgebraFile f = blank(in[0], "slsba-double", 2 * n);
          f.ops.emplace("conn", sd.lsa);
          f.ops.emplace("conn_star", dualize_coproducts(CoproductPair(sd.alpha, sd.alpha)).prec);
          f.ops.emplace("bracket", sub_adjacent(sd.lsa));
          f.forms.emplace("omega", symplectic_pairing(n));
          f.maps.emplace("E", split_involution(n));
          f.tensor2s.emplace("r", sd.r);
          return f;
        },
        checks({"slsba", "para-kahler"})};
    m["coboundary"] = {1, 1,
                       [](const std::vector<AlgebraFile>& in, const ConstructOptions& o) {
                         const Plsa p = plsa_in(in[0]);
                         RMatrix r;
                         if (!o.r.empty()) {
                           r = parse_r(o.r, p.dim());
                         } else if (in[0].tensor2s.count("r")) {
                           r = in[0].tensor2("r");
                         } else {
                           throw Error(ErrorCode::kInvalidInput,
                                       "coboundary needs --r or a tensor2 'r' in the input");
                         }
                         return plsba_file(in[0], "coboundary", p, coboundary_coproducts(p, r), r);
                       },
                       checks({"plsba"})};
    return m;
  }();
  return all;
}

int cmd_verify(const std::string& path, const std::vector<std::string>& names, bool as_json,
               bool cross_check, std::ostream& out, std::ostream& err) {
  const AlgebraFile file = load_input(path);
  for (const auto& w : file.warnings) err << "warning: " << w << "\n";
  const Mode mode = cross_check ? Mode::kCrossCheck : Mode::kProduction;
  for (const auto& n : names) {
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end()) {
      throw Error(ErrorCode::kUnknownCheck, "unknown check '" + n + "'");
    }
  }
  std::vector<CheckReport> reports;
  for (const auto& n : names) reports.push_back(run_check(n, file, mode));
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << json{{"verdict", all_pass ? "pass" : "fail"}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(r, out);
  }
  return all_pass ? kExitPass : kExitFail;
}

int cmd_construct(const ConstructOptions& o, std::ostream& out, std::ostream& err) {
  const auto it = recipes().find(o.recipe);
  if (it == recipes().end()) {
    throw Error(ErrorCode::kInvalidInput, "unknown recipe '" + o.recipe + "'");
  }
  const Recipe& recipe = it->second;
  if (o.inputs.size() < recipe.min_inputs || o.inputs.size() > recipe.max_inputs) {
    throw Error(ErrorCode::kInvalidInput,
                o.recipe + " takes " + std::to_string(recipe.min_inputs) +
                    (recipe.max_inputs > recipe.min_inputs
                         ? " or " + std::to_string(recipe.max_inputs)
                         : std::string()) +
                    " input(s)");
  }
  std::vector<AlgebraFile> inputs;
  for (const auto& p : o.inputs) {
    inputs.push_back(load_input(p));
    for (const auto& w : inputs.back().warnings) err << "warning: " << w << "\n";
  }
  const AlgebraFile built = recipe.build(inputs, o);
  const std::string text = emit_algebra_file(built);
  const AlgebraFile reread = parse_algebra_file(text);
  const Mode mode = o.cross_check ? Mode::kCrossCheck : Mode::kProduction;
  bool ok = true;
  for (const auto& rep : recipe.verify(reread, mode)) {
    if (!rep.passed()) {
      ok = false;
      print_report(rep, err);
    }
  }
  if (!ok) {
    err << "error: " << o.recipe << " output failed verification; nothing written\n";
    return kExitFail;
  }
  if (o.output.empty()) {
    out << text;
  } else {
    write_algebra_file(o.output, reread);
    out << "wrote " << o.output << " (dim " << reread.dim << ")\n";
  }
  return kExitPass;
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& e : catalog_list()) {
    out << e.name << "\t" << entry_kind_name(e.kind) << "\t" << e.provenance << "\n";
  }
  return kExitPass;
}

int cmd_catalog_show(const std::string& name, bool export_only, const std::string& output,
                     std::ostream& out) {
  const CatalogEntry& e = catalog_get(name);
  const std::string text = emit_algebra_file(e.data);
  if (!output.empty()) {
    write_algebra_file(output, e.data);
    out << "wrote " << output << "\n";
    return kExitPass;
  }
  if (!export_only) {
    out << "# name: " << e.name << "\n# kind: " << entry_kind_name(e.kind)
        << "\n# provenance: " << e.provenance << "\n";
    if (!e.notes.empty()) out << "# notes: " << e.notes << "\n";
  }
  out << text;
  return kExitPass;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "lie",         "lsa",   "plsa",  "special-symplectic", "hypersymplectic",
      "matched-pair", "plsba", "slsba", "para-kahler",        "post-affine"};
  return names;
}

CheckReport run_check(const std::string& name, const AlgebraFile& f, Mode mode) {
  if (name == "lie") return check_jacobi(f.bracket());
  if (name == "lsa") return check_left_symmetric(f.op("conn"));
  if (name == "plsa") return check_plsa(plsa_in(f));
  if (name == "special-symplectic") {
    return check_special_symplectic(f.bracket(), f.op("conn"), f.form("omega"));
  }
  if (name == "hypersymplectic") {
    return check_hypersymplectic(f.bracket(), f.map("J"), f.map("E"), f.form("g"));
  }
  if (name == "matched-pair") return check_matched_pair(matched_in(f));
  if (name == "plsba") return plsba_check(plsa_in(f), coproducts_in(f), mode);
  if (name == "slsba") return slsba_check(f.op("conn"), alpha_in(f), mode);
  if (name == "para-kahler") {
    std::optional<StructureTensor> conn;
    if (f.has_op("conn")) conn = f.op("conn");
    return check_parakahler(ParaKahlerData{f.bracket(), f.form("omega"), f.map("E"), conn});
  }
  if (name == "post-affine") return post_affine_check(f.op("conn"), f.op("conn_tilde"), f.bracket());
  throw Error(ErrorCode::kUnknownCheck, "unknown check '" + name + "'");
}

AlgebraFile load_input(const std::string& path_or_entry) {
  if (std::filesystem::exists(path_or_entry)) return read_algebra_file(path_or_entry);
  try {
    return catalog_get(path_or_entry).data;
  } catch (const Error&) {
    throw Error(ErrorCode::kInvalidInput,
                "'" + path_or_entry + "' is neither a file nor a catalog entry");
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and construction of left-symmetric structures", "lsakit"};
  app.require_subcommand(1);

  std::string verify_file;
  std::vector<std::string> verify_checks;
  bool verify_json = false;
  bool verify_cross = false;
  CLI::App* verify = app.add_subcommand("verify", "Run named checks against an algebra file");
  verify->add_option("file", verify_file, "Algebra file or catalog entry")->required();
  verify->add_option("--check", verify_checks, "Check name (repeatable)")->required();
  verify->add_flag("--json", verify_json, "Emit a JSON report");
  verify->add_flag("--cross-check", verify_cross, "Also run the independent routes");

  ConstructOptions copts;
  CLI::App* construct = app.add_subcommand("construct", "Build an algebra from inputs");
  construct->add_option("recipe", copts.recipe, "Recipe name")->required();
  construct->add_option("inputs", copts.inputs, "Input files or catalog entries")->required();
  construct->add_option("--lambda", copts.lambda, "Family parameter lambda");
  construct->add_option("--mu", copts.mu, "Family parameter mu");
  construct->add_option("--k", copts.k, "Family parameter k");
  construct->add_option("--sign", copts.sign, "Sign choice for the third family")
      ->check(CLI::IsMember({-1, 1}));
  construct->add_option("--bundle", copts.bundle, "tangent or cotangent")
      ->check(CLI::IsMember({"tangent", "cotangent"}));
  construct->add_option("--r", copts.r, "Element r as 'i j q; i j q; ...'");
  construct->add_option("-o,--output", copts.output, "Output path (default stdout)");
  construct->add_flag("--cross-check", copts.cross_check, "Also run the independent routes");

  CLI::App* catalog = app.add_subcommand("catalog", "Built-in examples");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List entries");
  std::string show_name;
  std::string show_output;
  bool show_export = false;
  CLI::App* show = catalog->add_subcommand("show", "Print an entry");
  show->add_option("name", show_name, "Entry name")->required();
  show->add_flag("--export", show_export, "Print only the algebra file");
  show->add_option("-o,--output", show_output, "Write the algebra file to a path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(verify_file, verify_checks, verify_json, verify_cross, out, err);
    }
    if (construct->parsed()) return cmd_construct(copts, out, err);
    if (show->parsed()) return cmd_catalog_show(show_name, show_export, show_output, out);
    return cmd_catalog_list(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lsakit::cli
