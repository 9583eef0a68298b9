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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "generators.hpp"
#include "lsakit/algebra_file.hpp"
#include "lsakit/catalog.hpp"
#include "lsakit/check.hpp"
#include "lsakit/construct.hpp"
#include "lsakit/error.hpp"
#include "lsakit/matched.hpp"
#include "tables.hpp"

namespace lsakit {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lsakit-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string save(const std::string& name, const AlgebraFile& f) const {
    write_algebra_file(path(name), f);
    return path(name);
  }
  std::string save_text(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

 private:
  fs::path dir_;
};

ErrorCode parse_code(const std::string& text, std::string* message = nullptr) {
  try {
    parse_algebra_file(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "parsed without error";
  return ErrorCode::kInternalMismatch;
}

TEST(ParseAlgebraFile, Examples) {
  const AlgebraFile f = parse_algebra_file("algebra t\ndim 2\nop succ 2 2 = 1*e2\n");
  EXPECT_EQ(f.name, "t");
  EXPECT_EQ(f.op("succ")(1, 1, 1), Rational(1));
  EXPECT_EQ(f.op("succ")(1, 1, 0), Rational(0));
  EXPECT_EQ(f.op("succ")(0, 0, 0), Rational(0));

  const AlgebraFile z = parse_algebra_file("dim 3\nop conn 1 1 = 0\n");
  EXPECT_TRUE(z.op("conn").is_zero());
  EXPECT_EQ(z.op("conn").dim(), 3u);

  const AlgebraFile w = parse_algebra_file("dim 2\nform w 1 2 = 1\n");
  EXPECT_EQ(w.warnings.size(), 1u);
  EXPECT_EQ(w.form("w").m(1, 0), Rational(0));
  EXPECT_FALSE(check_skew(w.form("w")).passed());
}

TEST(ParseAlgebraFile, Grammar) {
  const AlgebraFile f = parse_algebra_file(
      "# comment\n\nalgebra g  # trailing\ndim 2\n"
      "op conn 1 2 = 1/2*e1 + -3*e2\n"
      "form omega 1 2 = -2/4\nform omega 2 1 = 1/2\n"
      "map E 1 = 1*e1\nmap E 2 = -1*e2\n"
      "tensor2 r 2 1 = 7\n"
      "rep rho 1 2 1 = 5\n");
  EXPECT_EQ(f.op("conn")(0, 1, 0), Rational(1, 2));
  EXPECT_EQ(f.op("conn")(0, 1, 1), Rational(-3));
  EXPECT_EQ(f.form("omega").m(0, 1), Rational(-1, 2));
  EXPECT_EQ(f.map("E").m, tables::mat(2, {1, 0, 0, -1}));
  EXPECT_EQ(f.tensor2("r").r(1, 0), Rational(7));
  EXPECT_EQ(f.rep("rho").t(0, 1, 0), Rational(5));
  EXPECT_TRUE(f.warnings.empty());
  EXPECT_THROW(f.op("missing"), Error);
}

TEST(ParseAlgebraFile, Errors) {
  std::string message;
  EXPECT_EQ(parse_code("dim 2\nop conn 1 2 = 1*e1\nop conn 1 2 = 1*e2\n", &message),
            ErrorCode::kDuplicateAssignment);
  EXPECT_NE(message.find("line 3"), std::string::npos);
  EXPECT_EQ(parse_code("dim 2\nop conn 1 3 = 1*e1\n"), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(parse_code("dim 2\nop conn 1 1 = 1*e3\n"), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(parse_code("dim 2\nop conn 1 1 = x*e1\n", &message), ErrorCode::kParseError);
  EXPECT_NE(message.find("line 2"), std::string::npos);
  EXPECT_EQ(parse_code("op conn 1 1 = 1*e1\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("dim 2\nwidget a 1 1 = 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("dim 2\ndim 3\n"), ErrorCode::kDuplicateAssignment);
  EXPECT_EQ(parse_code("dim 2\nform w 1 = 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code("dim 2\nform w 1 2 = 1/0\n"), ErrorCode::kParseError);
  EXPECT_EQ(parse_code(""), ErrorCode::kParseError);
}

TEST(EmitAlgebraFile, RoundTripsAndIsIdempotent) {
  gen::Rng rng(60);
  for (int t = 0; t < 40; ++t) {
    const AlgebraFile f = gen::random_file(rng, t);
    const std::string text = emit_algebra_file(f);
    const AlgebraFile back = parse_algebra_file(text);
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(emit_algebra_file(back), text);
  }
}

TEST(EmitAlgebraFile, CanonicalFormOfHandWrittenText) {
  const std::string messy = "dim 2\nop b 2 1 = 2/4*e2 + 0*e1\nop b 1 2 = -1*e1\n";
  const std::string canon = emit_algebra_file(parse_algebra_file(messy));
  EXPECT_EQ(canon, "dim 2\nop b 1 2 = -1*e1\nop b 2 1 = 1/2*e2\n");
  EXPECT_EQ(emit_algebra_file(parse_algebra_file(canon)), canon);
}

TEST_F(CliFiles, ReadWrite) {
  const AlgebraFile& f = catalog_get("ssla-2d-4").data;
  EXPECT_EQ(read_algebra_file(save("a.alg", f)), f);
  EXPECT_THROW(read_algebra_file(path("absent.alg")), Error);
}

TEST(CliCatalog, Commands) {
  const CliRun list = run({"catalog", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_GE(std::count(list.out.begin(), list.out.end(), '\n'), 8);

  const CliRun show = run({"catalog", "show", "plsa-2d-II", "--export"});
  EXPECT_EQ(show.code, 0);
  EXPECT_NE(show.out.find("op prec 1 1 = 1*e2\n"), std::string::npos);
  EXPECT_EQ(show.out.find('#'), std::string::npos);
  EXPECT_EQ(parse_algebra_file(show.out), catalog_get("plsa-2d-II").data);

  EXPECT_EQ(run({"catalog", "show", "nope"}).code, 2);
}

TEST_F(CliFiles, Verify) {
  EXPECT_EQ(run({"verify", "ssla-2d-3", "--check", "special-symplectic"}).code, 0);
  const std::string exported = path("s3.alg");
  EXPECT_EQ(run({"catalog", "show", "ssla-2d-3", "-o", exported}).code, 0);
  EXPECT_EQ(run({"verify", exported, "--check", "special-symplectic", "--check", "lie"}).code, 0);

  AlgebraFile broken = catalog_get("ssla-2d-3").data;
  broken.ops["conn"](0, 0, 0) = 1;
  const CliRun bad = run({"verify", save("broken.alg", broken), "--check", "lsa"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_NE(bad.out.find("associator (1,2,1): [1, 0]"), std::string::npos);

  EXPECT_EQ(run({"verify", "ssla-2d-3", "--check", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", path("absent.alg"), "--check", "lie"}).code, 2);
  EXPECT_EQ(run({"verify", save_text("junk.alg", "dim two\n"), "--check", "lie"}).code, 2);
  EXPECT_EQ(run({"verify", "ssla-2d-3"}).code, 2);

  const CliRun warn = run({"verify", save_text("w.alg", "dim 2\nform omega 1 2 = 1\nop conn 1 1 = 0\n"),
                        "--check", "special-symplectic"});
  EXPECT_EQ(warn.code, 1);
  EXPECT_NE(warn.err.find("warning"), std::string::npos);
}

TEST_F(CliFiles, VerifyJson) {
  AlgebraFile broken = catalog_get("plsa-2d-III").data;
  broken.ops.emplace("conn", plsa_of(catalog_get("plsa-2d-III")).dot());
  broken.ops["prec"](0, 1, 1) = 1;
  const CliRun r = run({"verify", save("b.alg", broken), "--check", "plsa", "--check", "lie", "--json"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "fail");
  ASSERT_EQ(j["reports"].size(), 2u);
  const auto& plsa = j["reports"][0];
  EXPECT_EQ(plsa["check"], "plsa");
  EXPECT_EQ(plsa["verdict"], "fail");
  ASSERT_FALSE(plsa["violations"].empty());
  for (const auto& v : plsa["violations"]) {
    EXPECT_TRUE(v["indices"].is_array());
    EXPECT_TRUE(v["residual"].is_string() || v["residual"].is_array());
  }
  EXPECT_EQ(j["reports"][1]["verdict"], "pass");
}

TEST_F(CliFiles, ConstructExamples) {
  const std::string out = path("t.alg");
  EXPECT_EQ(run({"construct", "tangent-double", "ssla-2d-3", "-o", out}).code, 0);
  const AlgebraFile t = read_algebra_file(out);
  EXPECT_EQ(t.dim, 4u);
  EXPECT_TRUE(check_flat(t.bracket(), t.op("conn")).passed());
  EXPECT_EQ(run({"verify", out, "--check", "lie", "--check", "lsa"}).code, 0);

  const CliRun f3 = run({"construct", "hypersymplectic-f3", "--lambda", "5", "--mu", "0", "--k", "3",
                      "ssla-2d-1"});
  EXPECT_EQ(f3.code, 0);
  const AlgebraFile h = parse_algebra_file(f3.out);
  EXPECT_TRUE(check_hypersymplectic(h.bracket(), h.map("J"), h.map("E"), h.form("g")).passed());

  const CliRun irr = run({"construct", "hypersymplectic-f3", "--lambda", "2", "--mu", "0", "--k", "1",
                       "ssla-2d-1"});
  EXPECT_EQ(irr.code, 2);
  EXPECT_NE(irr.err.find("IrrationalSquareRoot"), std::string::npos);

  EXPECT_EQ(run({"construct", "hypersymplectic-f1", "--lambda", "0", "ssla-2d-1"}).code, 2);
  EXPECT_EQ(run({"construct", "hypersymplectic-f1", "--lambda", "x", "ssla-2d-1"}).code, 2);
  EXPECT_EQ(run({"construct", "hypersymplectic-f1", "--bundle", "sideways", "ssla-2d-1"}).code, 2);
  EXPECT_EQ(run({"construct", "no-such-recipe", "ssla-2d-1"}).code, 2);
  EXPECT_EQ(run({"construct", "tangent-double", "ssla-2d-1", "ssla-2d-2"}).code, 2);

  // The output fails its own verification, so nothing is written.
  const std::string refused = path("refused.alg");
  EXPECT_EQ(run({"construct", "coboundary", "plsa-2d-II", "--r", "1 1 1", "-o", refused}).code, 1);
  EXPECT_FALSE(fs::exists(refused));
  EXPECT_EQ(run({"construct", "coboundary", "plsa-2d-II", "--r", "1 3 1"}).code, 2);
}

struct RecipeCase {
  std::vector<std::string> args;
  std::vector<std::string> checks;
};

TEST_F(CliFiles, EveryRecipeReverifies) {
  AlgebraFile with_rep = catalog_get("ssla-2d-3").data;
  with_rep.reps.emplace("rho", left_rep(with_rep.op("conn")));
  const std::string semidirect_in = save("rho.alg", with_rep);

  const Plsa three = plsa_of(catalog_get("plsa-2d-III"));
  const MatchedPairData mp = dual_matched_pair(three, Plsa{StructureTensor(2), StructureTensor(2)});
  AlgebraFile pair;
  pair.name = "pair";
  pair.dim = 2;
  pair.ops.emplace("A1", mp.a1);
  pair.ops.emplace("A2", mp.a2);
  pair.reps.emplace("l1", mp.l1);
  pair.reps.emplace("r1", mp.r1);
  pair.reps.emplace("l2", mp.l2);
  pair.reps.emplace("r2", mp.r2);
  const std::string bowtie_in = save("pair.alg", pair);
  EXPECT_EQ(run({"verify", bowtie_in, "--check", "matched-pair"}).code, 0);

  AlgebraFile post;
  post.dim = 2;
  post.ops.emplace("conn", three.succ);
  post.ops.emplace("conn_tilde", three.dot());
  post.ops.emplace("bracket", sub_adjacent(three.succ));
  EXPECT_EQ(run({"verify", save("post.alg", post), "--check", "post-affine"}).code, 0);

  const std::vector<RecipeCase> cases = {
      {{"sub-adjacent", "ssla-2d-4"}, {"lie"}},
      {{"lsa-from-symplectic", "ssla-2d-3"}, {"lsa"}},
      {{"plsa-extract", "ssla-2d-4"}, {"plsa"}},
      {{"tangent-double", "ssla-2d-2"}, {"lie", "lsa"}},
      {{"cotangent-double", "ssla-2d-4"}, {"special-symplectic"}},
      {{"cotangent-double", "lsa-1d-unit"}, {"special-symplectic"}},
      {{"hypersymplectic-f1", "--lambda", "2", "--mu", "-1", "ssla-2d-3"}, {"hypersymplectic", "lsa"}},
      {{"hypersymplectic-f2", "--mu", "1", "--bundle", "cotangent", "ssla-2d-2"}, {"hypersymplectic"}},
      {{"hypersymplectic-f3", "--lambda", "5", "--mu", "1", "--k", "4", "--sign", "-1", "ssla-2d-4"},
       {"hypersymplectic"}},
      {{"semidirect", semidirect_in}, {"lie"}},
      {{"bowtie", bowtie_in}, {"lsa", "lie"}},
      {{"double-extension", "plsa-2d-II"}, {"special-symplectic"}},
      {{"double-extension", "plsa-2d-I", "plsa-2d-III"}, {"special-symplectic"}},
      {{"drinfeld-double", "plsa-2d-II", "--cross-check"}, {"plsba", "plsa"}},
      {{"slsba-double", "lsa-1d-unit"}, {"slsba", "para-kahler"}},
      {{"coboundary", "plsa-2d-III", "--r", "1 1 1"}, {"plsba"}},
  };
  int serial = 0;
  for (const auto& c : cases) {
    const std::string out = path("out" + std::to_string(serial++) + ".alg");
    std::vector<std::string> args{"construct"};
    args.insert(args.end(), c.args.begin(), c.args.end());
    args.insert(args.end(), {"-o", out});
    const CliRun built = run(args);
    ASSERT_EQ(built.code, 0) << c.args[0] << ": " << built.err;
    std::vector<std::string> verify{"verify", out, "--cross-check"};
    for (const auto& name : c.checks) verify.insert(verify.end(), {"--check", name});
    const CliRun again = run(verify);
    EXPECT_EQ(again.code, 0) << c.args[0] << ": " << again.out;
  }
  EXPECT_EQ(run({"construct", "drinfeld-double", path("out13.alg"), "-o", path("d8.alg")}).code, 0);
  EXPECT_EQ(read_algebra_file(path("d8.alg")).dim, 8u);
}

TEST(CliChecks, NamesAreStable) {
  EXPECT_EQ(cli::check_names().size(), 10u);
  EXPECT_THROW(cli::run_check("bogus", catalog_get("ssla-2d-1").data, Mode::kProduction), Error);
  EXPECT_THROW(cli::load_input("no-such-entry-or-file"), Error);
}

}  // namespace
}  // namespace lsakit
