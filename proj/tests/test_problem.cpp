#include "rbop/problem.hpp"

#include "rbop/cli.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rbop;
using rbtest::dual2;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "rbop_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream f(path);
  f << text;
  return path;
}

std::filesystem::path write_fixture(const std::string& name) {
  return write_temp(name + ".json", to_json(fixture(name)).dump(2));
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = rbop::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fixtures parse, serialize and round-trip") {
  for (const std::string& name : fixture_names()) {
    const ProblemFile p = fixture(name);
    CHECK(validate_algebra(p.algebra).empty());
    const nlohmann::json j = to_json(p);
    const ProblemFile reparsed = parse_problem(j);
    CHECK(to_json(reparsed) == j);
  }
  CHECK_THROWS_AS(fixture("nope"), ParseError);
}

TEST_CASE("parse errors carry the offending path") {
  SUBCASE("missing algebra") {
    CHECK_THROWS_WITH_AS(parse_problem(nlohmann::json::object()), "algebra: missing section", ParseError);
  }
  SUBCASE("bad rational") {
    nlohmann::json j = to_json(fixture("dual2"));
    j["algebra"]["mu"][0][0][0] = "x";
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("operator shape mismatch") {
    nlohmann::json j = to_json(fixture("dual2"));
    j["operator"]["matrix"] = {{"1"}};
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
  SUBCASE("unknown bimodule kind") {
    nlohmann::json j = to_json(fixture("dual2"));
    j["bimodule"]["kind"] = "sideways";
    CHECK_THROWS_AS(parse_problem(j), ParseError);
  }
}

TEST_CASE("explicit bimodules and sections round-trip") {
  ProblemFile p = fixture("dual2");
  const Bimodule left = one_sided_bimodule(p.algebra, Side::left);
  BimoduleSpec spec;
  spec.kind = BimoduleSpec::Kind::explicit_tensors;
  spec.dim = 2;
  spec.left = left.left_tensor();
  spec.right = left.right_tensor();
  p.bimodule = spec;
  p.op = rbtest::dual2_projection();
  p.rmatrix = {{0, 1, Rat(1, 2)}};
  p.morphism = MorphismSpec{Mat::Identity(2, 2), Mat::Identity(2, 2)};
  p.equivalence = EquivalenceSpec{Vec::Zero(2), {Mat::Zero(2, 2)}, {Mat::Zero(2, 2)}};
  p.deformation = DeformationSpec{{Mat::Zero(2, 2)}};
  p.task.nijenhuis_candidates = {{"one", p.algebra.basis(0)}};
  const nlohmann::json j = to_json(p);
  CHECK(to_json(parse_problem(j)) == j);
  const Bimodule realized = realize_bimodule(p.algebra, parse_problem(j).bimodule);
  CHECK(realized == left);
}

TEST_CASE("cli: check-op on the catalog fixtures") {
  SUBCASE("poly3_R passes with a spot-check line") {
    const auto path = write_fixture("poly3_R");
    const CliResult res = run_cli({"check-op", path.string()});
    CHECK(res.code == 0);
    CHECK(res.out.find("defect = 0") != std::string::npos);
    CHECK(res.out.find("spot-check: ok") != std::string::npos);
  }
  SUBCASE("poly3_D fails with the (x, x) witness") {
    const auto path = write_fixture("poly3_D");
    const CliResult res = run_cli({"check-op", path.string()});
    CHECK(res.code == 1);
    CHECK(res.out.find("witness (m1, m1)") != std::string::npos);
    CHECK(res.out.find("1*1") != std::string::npos);  // lhs = 1
    CHECK(res.out.find("2*1") != std::string::npos);  // rhs = 2
  }
  SUBCASE("proj2_averaging is a left averaging operator") {
    const auto path = write_fixture("proj2_averaging");
    CHECK(run_cli({"check-op", path.string(), "--kind", "left-averaging"}).code == 0);
    CHECK(run_cli({"check-op", path.string()}).code == 0);  // O-operator over the left bimodule
  }
  SUBCASE("rota-baxter kind with weights") {
    const auto path = write_fixture("poly3_R");
    CHECK(run_cli({"check-op", path.string(), "--kind", "rota-baxter"}).code == 0);
    CHECK(run_cli({"check-op", path.string(), "--kind", "rota-baxter", "--weight", "1"}).code == 1);
  }
}

TEST_CASE("cli: cohomology") {
  const auto path = write_fixture("poly3_R");
  const CliResult res = run_cli({"cohomology", path.string(), "--degree", "0"});
  CHECK(res.code == 0);
  CHECK(res.out.find("dim H = 3") != std::string::npos);
  const CliResult json_res = run_cli({"cohomology", path.string(), "--degree", "0", "--json"});
  CHECK(json_res.code == 0);
  CHECK(nlohmann::json::parse(json_res.out)["dim_cohomology"] == 3);
  CHECK(run_cli({"cohomology", path.string(), "--degree", "7"}).code == 2);
}

TEST_CASE("cli: nijenhuis") {
  const auto path = write_fixture("poly3_R");
  CHECK(run_cli({"nijenhuis", path.string(), "--element", "1,0,0"}).code == 0);
  CHECK(run_cli({"nijenhuis", path.string(), "--element", "1,0"}).code == 2);
  // named candidate
  ProblemFile p = fixture("ut2");
  BimoduleSpec adjoint_spec;
  adjoint_spec.kind = BimoduleSpec::Kind::adjoint;
  p.bimodule = adjoint_spec;
  p.op = rbtest::ut2_shift();
  p.task.nijenhuis_candidates = {{"bad", p.algebra.basis(0)}};
  const auto path2 = write_temp("ut2_shift.json", to_json(p).dump(2));
  CHECK(run_cli({"nijenhuis", path2.string(), "--element", "bad"}).code == 1);
  CHECK(run_cli({"nijenhuis", path2.string(), "--element", "1,0,1"}).code == 0);
}

TEST_CASE("cli: deform subcommands") {
  ProblemFile p = fixture("poly3_R");
  p.deformation = DeformationSpec{{*p.op}};
  const auto path = write_temp("poly3_R_deform.json", to_json(p).dump(2));
  CHECK(run_cli({"deform", "check", path.string()}).code == 0);
  const CliResult ext = run_cli({"deform", "extend", path.string(), "--json"});
  CHECK(ext.code == 0);
  CHECK(nlohmann::json::parse(ext.out)["class_trivial"] == true);

  // obstructed case: zero base with the derivative as linear term
  ProblemFile q = fixture("poly3_D");
  q.deformation = DeformationSpec{{*q.op}};
  q.op = Mat::Zero(3, 3);
  const auto path2 = write_temp("poly3_obstructed.json", to_json(q).dump(2));
  CHECK(run_cli({"deform", "check", path2.string()}).code == 0);
  const CliResult ext2 = run_cli({"deform", "extend", path2.string()});
  CHECK(ext2.code == 1);
  CHECK(ext2.out.find("class nontrivial") != std::string::npos);

  // equivalence of (1 + t) R with itself via a = 0
  ProblemFile e = fixture("poly3_R");
  e.deformation = DeformationSpec{{*e.op}};
  e.second_deformation = DeformationSpec{{*e.op}};
  e.equivalence = EquivalenceSpec{Vec::Zero(3), {}, {}};
  const auto path3 = write_temp("poly3_equiv.json", to_json(e).dump(2));
  CHECK(run_cli({"deform", "equiv", path3.string()}).code == 0);
  e.second_deformation = DeformationSpec{{}};
  const auto path4 = write_temp("poly3_equiv_bad.json", to_json(e).dump(2));
  CHECK(run_cli({"deform", "equiv", path4.string()}).code == 1);
}

TEST_CASE("cli: deformation order cap") {
  ProblemFile p = fixture("poly3_R");
  const Mat zero = Mat::Zero(3, 3);
  p.deformation = DeformationSpec{{zero, zero, zero, zero, zero}};
  const auto path = write_temp("poly3_R_deep.json", to_json(p).dump(2));
  CHECK(run_cli({"deform", "check", path.string()}).code == 2);
  CHECK(run_cli({"deform", "check", path.string(), "--order", "5"}).code == 0);
}

TEST_CASE("cli: rmatrix subcommands") {
  ProblemFile ab = fixture("abelian2");
  ab.rmatrix = {{0, 1, Rat(1)}};
  const auto path = write_temp("abelian2_r.json", to_json(ab).dump(2));
  CHECK(run_cli({"rmatrix", "check", path.string()}).code == 0);
  // inline entries make "emit then check with any r" a one-liner
  const auto plain = write_fixture("abelian2");
  CHECK(run_cli({"rmatrix", "check", plain.string(), "--entries", "0,1,1"}).code == 0);
  const auto d2path = write_fixture("dual2");
  CHECK(run_cli({"rmatrix", "check", d2path.string(), "--entries", "0,1,1"}).code == 1);
  CHECK(run_cli({"rmatrix", "check", d2path.string(), "--entries", "garbage"}).code == 2);

  ProblemFile d2 = fixture("dual2");
  d2.rmatrix = {{0, 1, Rat(1)}};
  const auto path2 = write_temp("dual2_r.json", to_json(d2).dump(2));
  const CliResult res = run_cli({"rmatrix", "check", path2.string()});
  CHECK(res.code == 1);
  CHECK(res.out.find("witness") != std::string::npos);

  ProblemFile u = fixture("ut2");
  u.rmatrix = {{1, 2, Rat(1)}};
  const auto path3 = write_temp("ut2_r.json", to_json(u).dump(2));
  CHECK(run_cli({"rmatrix", "check", path3.string()}).code == 0);
  const CliResult cop = run_cli({"rmatrix", "coproduct", path3.string(), "--json"});
  CHECK(cop.code == 0);
  CHECK(nlohmann::json::parse(cop.out)["bialgebra"] == true);

  u.second_rmatrix = {{1, 2, Rat(1)}};
  u.morphism = MorphismSpec{Mat::Identity(3, 3), Mat::Identity(3, 3)};
  const auto path4 = write_temp("ut2_weak.json", to_json(u).dump(2));
  CHECK(run_cli({"rmatrix", "weak-morphism", path4.string()}).code == 0);
}

TEST_CASE("cli: emit-fixture and exit codes") {
  SUBCASE("emit then consume") {
    const auto dir = std::filesystem::temp_directory_path() / "rbop_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / "emitted.json";
    CHECK(run_cli({"emit-fixture", "poly3_R", "-o", path.string()}).code == 0);
    CHECK(run_cli({"check-op", path.string()}).code == 0);
  }
  SUBCASE("emit to stdout parses") {
    const CliResult res = run_cli({"emit-fixture", "abelian2"});
    CHECK(res.code == 0);
    CHECK_NOTHROW(parse_problem(nlohmann::json::parse(res.out)));
  }
  SUBCASE("unknown fixture") {
    CHECK(run_cli({"emit-fixture", "nope"}).code == 2);
  }
  SUBCASE("missing file") {
    CHECK(run_cli({"validate", "/no/such/file.json"}).code == 2);
  }
  SUBCASE("malformed json") {
    const auto path = write_temp("broken.json", "{ not json");
    CHECK(run_cli({"validate", path.string()}).code == 2);
  }
  SUBCASE("missing operator section") {
    const auto path = write_fixture("dual2");
    CHECK(run_cli({"check-op", path.string()}).code == 2);
  }
  SUBCASE("validate reports corrupted structure constants") {
    nlohmann::json j = to_json(fixture("poly3_R"));
    j["algebra"]["mu"][2][2][0] = "1";  // breaks associativity
    const auto path = write_temp("poly3_bad.json", j.dump(2));
    const CliResult res = run_cli({"validate", path.string()});
    CHECK(res.code == 1);
    CHECK(res.out.find("NOT associative") != std::string::npos);
  }
  SUBCASE("validate passes the catalog") {
    for (const std::string& name : fixture_names()) {
      const auto path = write_fixture(name);
      CHECK(run_cli({"validate", path.string()}).code == 0);
    }
  }
  SUBCASE("validate reports broken explicit bimodules") {
    ProblemFile p = fixture("poly3_R");
    const Bimodule adj = adjoint_bimodule(p.algebra);
    BimoduleSpec spec;
    spec.kind = BimoduleSpec::Kind::explicit_tensors;
    spec.dim = 3;
    spec.left = adj.left_tensor();
    spec.left(1, 1, 0) += Rat(1);  // violates the first axiom
    spec.right = adj.right_tensor();
    p.bimodule = spec;
    const auto path = write_temp("poly3_broken_bimodule.json", to_json(p).dump(2));
    const CliResult res = run_cli({"validate", path.string()});
    CHECK(res.code == 1);
    CHECK(res.out.find("NOT valid") != std::string::npos);
  }
}
