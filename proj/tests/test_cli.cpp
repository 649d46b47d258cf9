#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cliffilt/bifiltration.hpp"
#include "cliffilt/deformation.hpp"
#include "cliffilt/io.hpp"

namespace cliffilt {
namespace {

using io::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  [[nodiscard]] json doc() const { return io::parse(out); }
};

Outcome cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "cliffilt");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& name) {
  const Outcome o = cli({"example", name});
  EXPECT_EQ(o.code, 0) << o.err;
  return o.out;
}

TEST(Cli, ExamplesReparseAndValidate) {
  for (const char* name : {"exterior4-degree", "exterior4-hodge", "cl5-irreducible", "cl1-trivial", "exterior2-degree",
                           "cl3-irreducible"}) {
    const Outcome o = cli({"check"}, example(name));
    EXPECT_EQ(o.code, 0) << name << o.out;
    EXPECT_EQ(o.doc()["pass"], true);
    EXPECT_TRUE(check_filtration(io::filtration_from_json(io::parse(example(name)))));
  }
  EXPECT_EQ(cli({"example", "no-such-thing"}).code, cli::kExitBadInput);
}

TEST(Cli, HodgeInvariants) {
  const Outcome o = cli({"invariants"}, example("exterior4-hodge"));
  ASSERT_EQ(o.code, 0) << o.err;
  const json d = o.doc();
  EXPECT_EQ(d["type"], "invariants");
  EXPECT_EQ(d["schema"], "cliffilt/1");
  EXPECT_EQ(d["gr_dims"], json({1, 4, 6, 4, 1}));
  EXPECT_EQ(d["source_dims"], json({1, 0, 3, 0, 0}));
  EXPECT_EQ(d["summands"].size(), 2u);
}

TEST(Cli, RoundTripPasses) {
  for (const char* name : {"exterior4-degree", "exterior4-hodge", "cl5-irreducible"}) {
    const Outcome o = cli({"roundtrip"}, example(name));
    EXPECT_EQ(o.code, 0) << name;
    EXPECT_EQ(o.doc()["pass"], true);
    EXPECT_TRUE(o.doc().contains("even"));
  }
}

TEST(Cli, CorruptedInputFailsWithWitness) {
  json f = io::parse(example("exterior4-degree"));
  f["module"]["gamma_eo"][0]["entries"][0][0] = "2";
  Outcome o = cli({"check"}, f.dump());
  EXPECT_EQ(o.code, cli::kExitCheckFailed);
  EXPECT_EQ(o.doc()["pass"], false);
  EXPECT_EQ(o.doc()["check"], "clifford_relations");
  EXPECT_TRUE(o.doc()["witness"].contains("defect"));
  // Flags that break gamma compatibility.
  json g = io::parse(example("exterior4-degree"));
  g["levels"][1] = g["levels"][0];
  g["levels"][1]["entries"] = json::array();
  g["levels"][1]["rows"] = 0;
  g["levels"][1]["cols"] = 8;
  o = cli({"check"}, g.dump());
  EXPECT_EQ(o.code, cli::kExitCheckFailed);
  EXPECT_EQ(o.doc()["witness"]["condition"], "gamma_compatibility");
  // Commands needing a valid filtration refuse it with the same certificate.
  o = cli({"invariants"}, g.dump());
  EXPECT_EQ(o.code, cli::kExitCheckFailed);
  EXPECT_EQ(o.doc()["type"], "certificate");
}

TEST(Cli, MalformedInputExitsTwo) {
  EXPECT_EQ(cli({"check"}, "{ nope").code, cli::kExitBadInput);
  EXPECT_EQ(cli({"check"}, "[]").code, cli::kExitBadInput);
  EXPECT_EQ(cli({"check"}, R"({"schema":"cliffilt/1","type":"module"})").code, cli::kExitBadInput);
  EXPECT_EQ(cli({"invariants"}, io::to_json(Certificate::ok("x")).dump()).code, cli::kExitBadInput);
  EXPECT_EQ(cli({"check", "/nonexistent/file.json"}).code, cli::kExitBadInput);
  EXPECT_EQ(cli({}).code, cli::kExitBadInput);
  EXPECT_EQ(cli({"frobnicate"}).code, cli::kExitBadInput);
  EXPECT_EQ(cli({"search"}, example("cl1-trivial")).code, cli::kExitBadInput);
  EXPECT_EQ(cli({"--help"}).code, cli::kExitOk);
}

TEST(Cli, DeformQuotientPipeline) {
  const Outcome d = cli({"deform"}, example("exterior4-hodge"));
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.doc()["type"], "offshell");
  EXPECT_EQ(cli({"check"}, d.out).code, 0);
  const Outcome g = cli({"quotient", "--k", "0"}, d.out);
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.doc()["type"], "graded");
  EXPECT_EQ(g.doc()["dims"], json({1, 4, 6, 4, 1}));
  const Outcome q = cli({"quotient", "--k", "5/2"}, d.out);
  ASSERT_EQ(q.code, 0) << q.err;
  const SuperFiltration f = io::filtration_from_json(q.doc());
  EXPECT_EQ(f.module().algebra().gram(), Matrix::scalar(4, Rational(5, 2)));
  EXPECT_TRUE(check_filtration(f));
  EXPECT_EQ(cli({"quotient", "--k", "-1"}, d.out).code, cli::kExitBadInput);
  EXPECT_EQ(cli({"quotient", "--k", "x"}, d.out).code, cli::kExitBadInput);
  const Outcome back = cli({"roundtrip"}, cli({"quotient"}, d.out).out);
  EXPECT_EQ(back.code, 0);
}

TEST(Cli, Decompose) {
  const Outcome o = cli({"decompose"}, example("exterior4-hodge"));
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.doc()["summands"].size(), 2u);
  EXPECT_EQ(o.doc()["certificate"]["pass"], true);
  EXPECT_EQ(cli({"decompose"}, example("exterior4-degree")).doc()["summands"].size(), 1u);
}

TEST(Cli, SearchIsDeterministic) {
  const std::string m = example("cl5-irreducible");
  const Outcome a = cli({"search", "--target", "2,8,6", "--budget", "200", "--seed", "3"}, m);
  const Outcome b = cli({"search", "--target", "2,8,6", "--budget", "200", "--seed", "3"}, m);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json d = a.doc();
  EXPECT_EQ(d["attempts"], 200);
  for (const auto& hit : d["found"]) {
    EXPECT_EQ(hit["source_dims"][0], 2);
    EXPECT_TRUE(check_filtration(io::filtration_from_json(hit["filtration"])));
  }
  EXPECT_EQ(cli({"search", "--target", "2,8,7"}, m).code, cli::kExitBadInput);
  EXPECT_EQ(cli({"search", "--target", "2,a"}, m).code, cli::kExitBadInput);
}

TEST(Cli, TwoDimensionalPipeline) {
  const Outcome t = cli({"tensor", "--p", "2", "--q", "2"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.doc()["type"], "bifiltration");
  EXPECT_EQ(cli({"check"}, t.out).code, 0);
  const Outcome r = cli({"bideform"}, t.out);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(cli({"verify2d"}, r.out).code, 0);
  const Outcome q = cli({"biquotient"}, r.out);
  ASSERT_EQ(q.code, 0);
  const Bifiltration back = io::bifiltration_from_json(q.doc());
  EXPECT_TRUE(check_bifiltration(back));
  EXPECT_EQ(back.dims(), io::bifiltration_from_json(t.doc()).dims());
  const Outcome rnd = cli({"tensor", "--p", "1", "--q", "2", "--random", "--seed", "9"});
  EXPECT_EQ(rnd.out, cli({"tensor", "--p", "1", "--q", "2", "--random", "--seed", "9"}).out);
  EXPECT_EQ(cli({"check"}, rnd.out).code, 0);
  EXPECT_EQ(cli({"tensor", "--p", "0"}).code, cli::kExitBadInput);
}

TEST(Cli, GraphExport) {
  const Outcome dot = cli({"export-dot"}, example("cl1-trivial"));
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph adinkra {", 0), 0u);
  const Outcome j = cli({"export-dot", "--json"}, example("exterior4-degree"));
  EXPECT_EQ(j.doc()["type"], "graph");
  EXPECT_EQ(j.doc()["edges"].size(), 32u);
  const Outcome bad = cli({"export-dot"}, example("exterior4-hodge"));
  EXPECT_EQ(bad.code, cli::kExitCheckFailed);
  EXPECT_EQ(bad.doc()["check"], "adapted_basis");
  const Outcome h = cli({"heights"}, example("cl1-trivial"));
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(h.doc()["count"], 2);
  EXPECT_EQ(h.doc()["budget_exhausted"], false);
}

TEST(Cli, ExplicitBasisAndOutputFile) {
  const auto dir = std::filesystem::temp_directory_path() / "cliffilt_cli_test";
  std::filesystem::create_directories(dir);
  const std::string ex = (dir / "ex.json").string(), basis = (dir / "basis.json").string(),
                    dot = (dir / "g.dot").string();
  ASSERT_EQ(cli({"example", "cl1-trivial", "-o", ex}).code, 0);
  {
    std::ofstream b(basis);
    b << io::document("basis", {{"even", io::to_json(Matrix{{-1}})}, {"odd", io::to_json(Matrix{{1}})}}).dump();
  }
  const Outcome o = cli({"export-dot", ex, "--basis", basis, "-o", dot});
  ASSERT_EQ(o.code, 0) << o.err;
  std::ifstream in(dot);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("style=dashed"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Envelope) {
  const Outcome o = cli({"envelope", "--n", "2", "--degree", "4", "--samples", "10"});
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.doc()["pass"], true);
  EXPECT_EQ(cli({"envelope", "--n", "9"}).code, cli::kExitBadInput);
}

}  // namespace
}  // namespace cliffilt
