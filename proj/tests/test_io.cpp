#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "torsionlab/json_io.hpp"

using namespace torsionlab;

static bool same_tables(const FiniteRing& a, const FiniteRing& b) {
  return a.n == b.n && a.add == b.add && a.mul == b.mul && a.zero == b.zero &&
         a.one == b.one;
}

TEST_CASE("shipped ring files reproduce the reference tables") {
  struct Row {
    const char* file;
    RingPtr ref;
  };
  std::vector<Row> rows = {{"z4.json", oracles::make_zn(4, "z4")},
                           {"z6.json", oracles::make_zn(6, "z6")},
                           {"z2xz2.json", oracles::make_z2xz2()},
                           {"f4.json", oracles::make_f4()},
                           {"dual.json", oracles::make_dual()},
                           {"t2f2.json", oracles::make_t2f2()},
                           {"m2f2.json", oracles::make_m2f2()}};
  for (const auto& row : rows) {
    CAPTURE(row.file);
    auto R = load_ring(oracles::data_path(row.file));
    CHECK(same_tables(*R, *row.ref));
  }
}

TEST_CASE("shipped derivation files hold real derivations") {
  auto dual = oracles::make_dual();
  auto eps = load_derivation(oracles::data_path("dual_eps.json"), 4);
  CHECK(eps.table == std::vector<int>{0, 0, 1, 1});
  CHECK(is_ring_derivation(*dual, eps));

  auto t2 = oracles::make_t2f2();
  auto ad = load_derivation(oracles::data_path("t2f2_ad_e11.json"), 8);
  CHECK(ad == inner_derivation(*t2, 1));

  CHECK(load_derivation(oracles::data_path("zero.json"), 6).table ==
        std::vector<int>(6, 0));
}

TEST_CASE("module files load against their ring") {
  auto z6 = load_ring(oracles::data_path("z6.json"));
  auto M = load_module(oracles::data_path("z6_mod3.json"), z6);
  CHECK(M.size == 3);
  CHECK(M.has_right());
  CHECK(M.has_left());
  CHECK_NOTHROW(validate_module(M));
  CHECK(M.ar(1, 2) == 2);  // 1 * 2 mod 3
  CHECK(M.ar(1, 3) == 0);
}

TEST_CASE("ring specs fail loudly with the offending location") {
  Json j = Json::parse(R"({"size": 3,
    "add": [[0,1,2],[1,2],[2,0,1]],
    "mul": [[0,0,0],[0,1,2],[0,2,1]],
    "zero": 0, "one": 1})");
  try {
    ring_from_json(j);
    FAIL("expected a shape error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedSpec);
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }

  Json missing = Json::parse(R"({"size": 2})");
  CHECK_THROWS_AS(ring_from_json(missing), Error);

  CHECK_THROWS_AS(load_json_file(oracles::data_path("no_such_file.json")),
                  Error);
}

TEST_CASE("derivation specs check their length") {
  CHECK(derivation_from_json(Json::parse("[0, 0, 1, 1]"), 4).table ==
        std::vector<int>{0, 0, 1, 1});
  CHECK(derivation_from_json(
            Json::parse(R"({"name": "d", "table": [0, 0]})"), 2)
            .table == std::vector<int>{0, 0});
  CHECK_THROWS_AS(derivation_from_json(Json::parse("[0, 0, 1]"), 4), Error);
  CHECK_THROWS_AS(derivation_from_json(Json::parse("[0, 9]"), 2), Error);
}

TEST_CASE("filter specs cover names, seeds, and exact member lists") {
  auto z6 = oracles::make_zn(6, "z6");
  CHECK(filter_from_spec(z6, Side::Right, "lambek").members ==
        lambek_filter(z6, Side::Right).members);
  CHECK(filter_from_spec(z6, Side::Right, "trivial").members ==
        trivial_filter(z6, Side::Right).members);

  auto F = filter_from_spec(z6, Side::Right, R"({"ideals": [[0, 2, 4]]})");
  CHECK(F.members == filter_closure(z6, Side::Right, {{0, 2, 4}}).members);

  auto FE = filter_from_spec(
      z6, Side::Right,
      R"({"exact": true, "ideals": [[0, 2, 4], [0, 1, 2, 3, 4, 5]]})");
  CHECK(FE.members.size() == 2);

  // declared side must match the operation side
  CHECK_THROWS_AS(filter_from_spec(z6, Side::Right,
                                   R"({"side": "left", "ideals": [[0]]})"),
                  Error);
  // an exact list that misses closure is rejected, not repaired
  CHECK_THROWS_AS(
      filter_from_spec(z6, Side::Right,
                       R"({"exact": true, "ideals": [[0, 2, 4]]})"),
      Error);
  CHECK_THROWS_AS(filter_from_spec(z6, Side::Right, "nonsense"), Error);
}

TEST_CASE("pair filter specs") {
  auto ctx = make_symmetric_context(oracles::make_zn(6, "z6"));
  auto SF = symmetric_filter_from_spec(ctx, "sym-lambek");
  CHECK(SF.label == "sym-lambek");
  auto SJ = symmetric_filter_from_spec(
      ctx, R"({"left": {"ideals": [[0, 2, 4]]}, "right": "trivial"})");
  CHECK(SJ.left.min_ideal == Subset{0, 2, 4});
  CHECK(SJ.right.members == trivial_filter(ctx->R, Side::Right).members);
}

TEST_CASE("report emitters keep their field order") {
  auto z6 = oracles::make_zn(6, "z6");
  auto F = filter_from_spec(z6, Side::Right, R"({"ideals": [[0, 2, 4]]})");
  auto QM = module_of_quotients(F, ring_as_right_module(z6));
  auto j = quotient_report_json(QM, std::nullopt);
  std::string s = j.dump(2);
  CHECK(s.find("\"filter\"") != std::string::npos);
  CHECK(s.find("\"carrier_size\": 3") != std::string::npos);
  CHECK(s.find("\"filter\"") < s.find("\"min_ideal\""));
  CHECK(s.find("\"min_ideal\"") < s.find("\"carrier_size\""));
  CHECK(s.find("\"carrier_size\"") < s.find("\"q_kernel\""));

  auto QR = ring_of_quotients(F);
  auto jr = ring_quotient_report_json(QR);
  CHECK(jr["carrier_size"] == 3);
  CHECK(jr["ring_iso_hint"] == "Z/3");

  auto E = extend_derivation(QM, zero_derivation(6), zero_derivation(6),
                             ExtensionStrategy::Auto);
  auto je = extension_report_json(E);
  std::string se = je.dump(2);
  CHECK(se.find("\"method\"") < se.find("\"unique\""));
  CHECK(se.find("\"unique\"") < se.find("\"commutes\""));
  CHECK(se.find("\"commutes\"") < se.find("\"table\""));
  CHECK(je["unique"] == true);
}

TEST_CASE("analysis report carries the ring inventory") {
  auto z6 = oracles::make_zn(6, "z6");
  auto j = analysis_json(z6);
  CHECK(j["size"] == 6);
  CHECK(j["iso_hint"] == "Z/6");
  CHECK(j["ideals"]["right"].size() == 4);
  CHECK(j["derivations"].size() == 1);
  CHECK(j["filters_right"].size() == 5);  // the five named theories
  CHECK(j["filters_left"].size() == 5);
}

TEST_CASE("suite reports serialize their tallies") {
  SuiteReport rep;
  rep.suite = "demo";
  rep.anchor = "something checkable";
  rep.instances = 3;
  rep.pass = 2;
  rep.fail = 1;
  rep.witnesses = {"w"};
  rep.wall_ms = 12;
  auto j = suite_report_json(rep, false);
  CHECK(j["suite"] == "demo");
  CHECK(j["fail"] == 1);
  CHECK(!j.contains("wall_ms"));
  auto jt = suite_report_json(rep, true);
  CHECK(jt["wall_ms"] == 12);
}

TEST_CASE("verify driver reports every suite green on the cyclic ring") {
  auto z6 = oracles::make_zn(6, "z6");
  RunOptions opt;
  auto reps = run_verify(z6, opt, {"ring-axioms", "torsion-radical"});
  REQUIRE(reps.size() == 2);
  for (const auto& r : reps) {
    CAPTURE(r.suite);
    CHECK(r.instances > 0);
    CHECK(r.fail == 0);
    CHECK(r.pass == r.instances);
  }
}

TEST_CASE("census covers every filter crossed with every derivation") {
  auto z6 = oracles::make_zn(6, "z6");
  auto C = run_census(z6);
  CHECK(C.derivations.size() == 1);
  CHECK(C.rows.size() == 8);  // 4 filters per side
  for (const auto& row : C.rows) {
    CHECK(row.differential);
    CHECK(row.extends_derivation.size() == C.derivations.size());
    for (bool b : row.extends_derivation) CHECK(b);
  }
  auto j = census_json(C);
  CHECK(j["filters"].size() == 8);
}
