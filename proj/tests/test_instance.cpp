#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filtralab/errors.hpp"
#include "filtralab/instance.hpp"
#include "filtralab/runner.hpp"

using namespace filtralab;

namespace {

const char* kSample = R"(
# a small instance
ring R = poly(x, y);
ideal I = [x^2, x*y, y^2];
ideal J = [x^2, y^2];
filtration F = adic(I);
filtration G = normal(J);
filtration B = rr(F);
filtration M = product(F, adic(J));
candidates C = [J];
task coeffs F expect [4, 1, 0];
task postulation F expect -1;
task rr I n=1;
task verify huneke-ooishi F with C expect verified;
task verify northcott F;
)";

} // namespace

TEST_CASE("parsing the reference text") {
  InstanceFile f = parse_instance(kSample);
  CHECK(f.rings.size() == 1);
  CHECK(f.ideals.size() == 2);
  CHECK(f.filtrations.size() == 4);
  CHECK(f.tasks.size() == 5);
  const MonomialIdeal* I = f.find_ideal("I");
  REQUIRE(I);
  CHECK(I->generators() ==
        std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(f.tasks[0].expect.kind == Expectation::Kind::ints);
  CHECK(f.tasks[1].expect.integer == -1);
}

TEST_CASE("variable ranges and quotients") {
  InstanceFile f = parse_instance(
      "ring Q = poly(x1..x4) / [x4^3] cm;\n"
      "ideal I = [x1, x2^2, x3^2, x2*x4, x3*x4];\n");
  REQUIRE(f.rings.size() == 1);
  const auto& ring = *f.rings[0].second;
  CHECK(ring.variable_count() == 4);
  CHECK(ring.dimension() == 3);
  CHECK(ring.asserted_cohen_macaulay());
  CHECK(f.find_ideal("I")->generators().size() == 5);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_instance("ring R = poly(x); ideal I = [z];"),
                  parse_error);
  try {
    parse_instance("ring R = poly(x);\nideal I = [z^2];\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("undeclared variable") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance("task coeffs F;"), parse_error);
  CHECK_THROWS_AS(
      parse_instance("ring R = poly(x, y);\nideal I = [x]; ideal I = [y];"),
      parse_error);
}

TEST_CASE("canonical print round trip") {
  InstanceFile f = parse_instance(kSample);
  std::string printed = f.to_text();
  InstanceFile g = parse_instance(printed);
  CHECK(g.to_text() == printed); // idempotent
  CHECK(g.tasks.size() == f.tasks.size());
  CHECK(g.find_ideal("I")->generators() == f.find_ideal("I")->generators());
}

TEST_CASE("running the reference instance end to end") {
  InstanceFile f = parse_instance(kSample);
  RunConfig cfg;
  ReportDocument doc = run_instance(f, "sample", fnv1a_digest(kSample), cfg);
  REQUIRE(doc.tasks.size() == 5);
  for (const auto& t : doc.tasks) CHECK_FALSE(t.expectation_failed);
  CHECK(doc.tasks[0].payload["e"][0] == "4");
  CHECK(doc.tasks[2].payload["generators"].size() == 3); // m^2 is RR-closed
  CHECK(doc.tasks[3].verdict.value() == "verified");

  // determinism: identical runs produce identical bytes
  ReportDocument doc2 = run_instance(f, "sample", fnv1a_digest(kSample), cfg);
  CHECK(emit(doc, EmitFormat::json, false) ==
        emit(doc2, EmitFormat::json, false));
}

TEST_CASE("expectation mismatches are surfaced") {
  InstanceFile f = parse_instance(
      "ring R = poly(x, y);\n"
      "ideal I = [x^2, x*y, y^2];\n"
      "task coeffs I expect [4, 2, 0];\n");
  RunConfig cfg;
  ReportDocument doc = run_instance(f, "bad", "d", cfg);
  CHECK(doc.tasks[0].expectation_failed);
  CHECK(doc.tasks[0].status == "expectation-mismatch");
}

TEST_CASE("inapplicable tasks do not hard-fail") {
  InstanceFile f = parse_instance(
      "ring R = poly(x, y, z);\n"
      "ideal I = [x, y, z];\n"
      "task cohomology I;\n"); // dimension 3: unsupported table
  RunConfig cfg;
  ReportDocument doc = run_instance(f, "c", "d", cfg);
  CHECK(doc.tasks[0].status == "inapplicable");
}

TEST_CASE("csv and text emission stay in shape") {
  InstanceFile f = parse_instance(
      "ring R = poly(x, y);\n"
      "ideal I = [x^2, x*y, y^2];\n"
      "filtration F = adic(I);\n"
      "task defect F window=3;\n"
      "task coeffs F;\n");
  RunConfig cfg;
  ReportDocument doc = run_instance(f, "emit", "d", cfg);
  std::string csv = emit(doc, EmitFormat::csv, false);
  CHECK(csv.find("n,chi") != std::string::npos);
  CHECK(csv.find("i,e_i") != std::string::npos);
  std::string text = emit(doc, EmitFormat::text, false);
  CHECK(text.find("task 0") != std::string::npos);
}

TEST_CASE("duplicate variable names are rejected") {
  CHECK_THROWS_AS(parse_instance("ring R = poly(x, x);"), input_error);
}
