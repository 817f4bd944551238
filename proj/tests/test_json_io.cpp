#include <doctest.h>

#include "test_util.hpp"

using namespace latcusp;
using namespace latcusp::testutil;

TEST_CASE("lattice specs round-trip") {
  json spec = json::parse(R"({"summands":[{"type":"U"},{"type":"E8","sign":-1},
                              {"type":"diag","entries":[-8]},
                              {"type":"gram","matrix":[[2,1],[1,2]]}]})");
  Lattice l = lattice_from_json(spec);
  CHECK(l.rank() == 13);
  json back = lattice_to_json(l);
  Lattice l2 = lattice_from_json(back);
  CHECK(l.gram == l2.gram);
  CHECK(lattice_to_json(l2) == back);
}

TEST_CASE("E8 without a sign is rejected") {
  json spec = json::parse(R"({"summands":[{"type":"U"},{"type":"E8"}]})");
  CHECK_THROWS_AS(lattice_from_json(spec), SpecError);
}

TEST_CASE("group specs round-trip") {
  json stable = json::parse(R"({"kind":"stable"})");
  CHECK(group_from_json(stable).kind == GroupSpec::Kind::Stable);

  json pattern = json::parse(
      R"({"kind":"pattern","blocks":[{"summands":[0,1,2],"condition":"pm_id"},
          {"summands":[3],"condition":"id"}],"det":"any"})");
  GroupSpec g = group_from_json(pattern);
  REQUIRE(g.blocks.size() == 2);
  CHECK(g.blocks[0].cond == GroupSpec::Cond::PlusMinusId);
  CHECK(g.blocks[1].cond == GroupSpec::Cond::Id);
  json back = group_to_json(g);
  GroupSpec g2 = group_from_json(back);
  CHECK(group_to_json(g2) == back);

  json bad = json::parse(R"({"kind":"pattern","blocks":[{"summands":[0],"condition":"spin"}]})");
  CHECK_THROWS_AS(group_from_json(bad), SpecError);
}

TEST_CASE("rationals travel as p/q strings") {
  RatVec v{frac(1, 2), Rat(-3), frac(7, -4)};
  json j = rat_vec_to_json(v);
  CHECK(j[0] == "1/2");
  CHECK(j[1] == "-3");
  CHECK(j[2] == "-7/4");
  CHECK(rat_vec_from_json(j) == v);
}

TEST_CASE("support files round-trip") {
  json spec = json::parse(R"({"index_lattice_gram":[[0,1],[1,0]],
                              "terms":[{"l":["1","2"]},{"l":["1/2","3"],"active":false}],
                              "k":11,"chi_sign":-1})");
  FourierSupport f = support_from_json(spec);
  CHECK(f.weight == 11);
  CHECK(f.chi_sign == -1);
  REQUIRE(f.terms.size() == 2);
  CHECK_FALSE(f.terms[1].active);
  json back = support_to_json(f);
  FourierSupport f2 = support_from_json(back);
  CHECK(support_to_json(f2) == back);
}

TEST_CASE("verdict reports are deterministic and re-parse") {
  Lattice l = lattice_from_shorthand("2U+diag:-8");
  IsotropicLine line = make_isotropic_line(l, {2, 2, 0, 0, 1});
  CuspVerdict v1 = irregular_0dim(l, GroupSpec::stable(), line);
  CuspVerdict v2 = irregular_0dim(l, GroupSpec::stable(), line);
  std::string s1 = verdict_to_json(v1).dump(2);
  std::string s2 = verdict_to_json(v2).dump(2);
  CHECK(s1 == s2);  // byte-identical across runs
  json parsed = json::parse(s1);
  CHECK(parsed["schema"] == "1");
  CHECK(parsed["status"] == "irregular");
  // witness re-parses into vectors
  RatVec w = rat_vec_from_json(parsed["witness"]);
  CHECK(w.size() == 3);
}

TEST_CASE("family reports carry verdicts, expectations and witnesses") {
  FamilyRequest req;
  req.family = Family::K3;
  req.m = 0;
  req.d_range = {3, 5};
  FamilyReport rep = replicate_table(req);
  json j = family_report_to_json(rep);
  CHECK(j["schema"] == "1");
  CHECK(j["family"] == "K3");
  CHECK(j["match"] == true);
  REQUIRE(j["points"].size() == 3);
  CHECK(j["points"][1]["d"] == 4);
  CHECK(j["points"][1]["verdict"] == "irregular");
  CHECK(j["points"][1].contains("witness"));
  CHECK_FALSE(j["points"][0].contains("millis"));
  // deterministic serialization
  CHECK(family_report_to_json(replicate_table(req)).dump() == j.dump());
}

TEST_CASE("shorthand parser") {
  CHECK(lattice_from_shorthand("2U+E8(-1)+diag:-8").rank() == 13);
  CHECK(lattice_from_shorthand("U").rank() == 2);
  CHECK(lattice_from_shorthand("A2(-1)").rank() == 2);
  CHECK_THROWS_AS(lattice_from_shorthand("E8"), SpecError);
  CHECK_THROWS_AS(lattice_from_shorthand("diag:"), SpecError);
  CHECK_THROWS_AS(lattice_from_shorthand("X9"), SpecError);
}

TEST_CASE("csv vector parsing") {
  CHECK(int_vec_from_csv("2, 2, 1") == IntVec{2, 2, 1});
  CHECK(rat_vec_from_csv("1/2,-1/2,0") == RatVec{frac(1, 2), frac(-1, 2), Rat(0)});
  CHECK_THROWS_AS(int_vec_from_csv("1,,2"), SpecError);
  CHECK_THROWS_AS(int_vec_from_csv("1/2"), SpecError);
}
