#include "doctest.h"

#include <random>

#include "fan_generators.hpp"
#include "snc/error.hpp"
#include "snc/fixtures.hpp"
#include "snc/json_io.hpp"

using namespace snc;

namespace {

IntMatrix hilbert_m() { return IntMatrix::from_rows<int>({{2, 1}, {1, 1}}); }

void check_code(const std::function<void()>& f, ErrorCode code) {
  try {
    f();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("fan systems round-trip") {
  std::vector<FanSystem> fans{hilbert_cusp_window(hilbert_m(), 3), hilbert_cusp_window(hilbert_m(), 3, 3),
                              smooth_subdivide(two_division_subdivide(hilbert_cusp_window(hilbert_m(), 3)))};
  std::mt19937 rng(5);
  for (int t = 0; t < 6; ++t) {
    fans.push_back(gen::hilbert_chain(rng, 2, 1 + rng() % 3));
    fans.push_back(gen::suspended_chain(rng, 3));
    fans.push_back(gen::random_star_fan(rng, rng() % 4));
  }
  for (const auto& fs : fans) {
    const Json j = to_json(fs);
    const FanSystem back = fan_system_from_json(j);
    CHECK(back == fs);
    CHECK(to_json(back) == j);
    CHECK(dump(parse_json(dump(j))) == dump(j));
  }
  CHECK(fans[2].projectivity_unchecked());
  CHECK(to_json(fans[2]).value("projectivity_unchecked", false));
}

TEST_CASE("fan parsing canonicalizes") {
  const char* text = R"({
    "cusps": [{"name": "F", "rank": 2}],
    "cones": [{"cusp": "F", "rays": [[2, 4], [1, 0]]}],
    "identifications": []
  })";
  const FanSystem fs = fan_system_from_json(parse_json(text));
  const Json j = to_json(fs);
  CHECK(j["cones"][0]["rays"] == Json::parse("[[1,0],[1,2]]"));
  CHECK(j["cusps"][0]["embeddings"] == Json::array());
  CHECK(fan_system_from_json(j) == fs);
}

TEST_CASE("embeddings and big integers survive") {
  const char* text = R"({
    "cusps": [{"name": "A", "rank": 1}, {"name": "B", "rank": 2, "embeddings": [{"parent": "A", "matrix": [[1], [0]]}]}],
    "cones": [{"cusp": "A", "rays": [[1]]}, {"cusp": "B", "rays": [[1, 0], ["123456789012345678901234567890", 1]]}],
    "identifications": []
  })";
  const FanSystem fs = fan_system_from_json(parse_json(text));
  const Json j = to_json(fs);
  CHECK(j["cones"][1]["rays"][1][0] == "123456789012345678901234567890");
  CHECK(j["cusps"][1]["embeddings"][0]["parent"] == "A");
  CHECK(fan_system_from_json(j) == fs);
}

TEST_CASE("malformed fan documents") {
  check_code([] { parse_json("{\"cusps\": ["); }, ErrorCode::ParseError);
  check_code([] { fan_system_from_json(parse_json("{}")); }, ErrorCode::ParseError);
  check_code([] { fan_system_from_json(parse_json(R"({"cusps": [{"name": "F", "rank": "two"}], "cones": []})")); },
             ErrorCode::ParseError);
  check_code([] { fan_system_from_json(parse_json(R"({"cusps": [{"name": "F", "rank": 2}], "cones": [{"cusp": "F", "rays": [[1, "x"]]}]})")); },
             ErrorCode::ParseError);
  check_code([] { fan_system_from_json(parse_json(R"({"cusps": [{"name": "F", "rank": 2}], "cones": [{"cusp": "F", "rays": [[1, 0], [-2, 0]]}]})")); },
             ErrorCode::InvalidInput);
}

TEST_CASE("SNC report JSON") {
  const FanSystem fs = hilbert_cusp_window(hilbert_m(), 3);
  const Json j = to_json(check_snc_condition(fs), fs);
  CHECK_FALSE(j["ok"].get<bool>());
  REQUIRE(j["violations"].size() == 3);
  CHECK(j["violations"][0]["pair"] == Json::parse("[[1,0],[2,1]]"));
}

TEST_CASE("pure Hodge structures") {
  PureHS hs(2);
  hs.add(2, 0, 1);
  hs.add(1, 1, 3);
  const Json j = to_json(hs);
  CHECK(j == Json::parse(R"({"weight": 2, "h": {"1,1": 3, "2,0": 1}})"));
  CHECK(pure_hs_from_json(j) == hs);
  check_code([] { pure_hs_from_json(Json::parse(R"({"weight": 2, "h": {"1,2": 1}})")); }, ErrorCode::ParseError);
  check_code([] { pure_hs_from_json(Json::parse(R"({"weight": 2, "h": {"1;1": 1}})")); }, ErrorCode::ParseError);
  check_code([] { pure_hs_from_json(Json::parse(R"({"weight": 2, "h": {"1,1": -1}})")); }, ErrorCode::ParseError);
}

TEST_CASE("strata complexes round-trip") {
  const FanSystem sub = smooth_subdivide(two_division_subdivide(hilbert_cusp_window(hilbert_m(), 3)));
  std::vector<StrataComplex> all{cstar_fixture(), p1xp1_fixture(),
                                 annotate_from_fans(hilbert_cusp_window(hilbert_m(), 3, 3), {std::nullopt, {{"F", 2}}}),
                                 annotate_from_fans(sub, {std::nullopt, {{"F", 3}}})};
  for (const auto& sc : all) {
    const Json j = to_json(sc);
    const StrataComplex back = strata_complex_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(weight_graded_cohomology(back, 1).dim() == weight_graded_cohomology(sc, 1).dim());
  }
  CHECK(to_json(all[2]).contains("annotations"));
}

TEST_CASE("rational Gysin entries") {
  StrataComplex sc = cstar_fixture();
  sc.gysin[0].blocks[0].matrix(0, 0) = Rational(-3, 4);
  const Json j = to_json(sc);
  CHECK(j["gysin"][0]["blocks"][0]["matrix"][0][0] == "-3/4");
  CHECK(strata_complex_from_json(j).gysin[0].blocks[0].matrix(0, 0) == Rational(-3, 4));
  Json broken = j;
  broken["gysin"][0]["blocks"][0]["rows"] = 2;
  check_code([&] { strata_complex_from_json(broken); }, ErrorCode::ParseError);
  broken = j;
  broken["gysin"][0]["blocks"][0]["matrix"][0][0] = "1/0";
  check_code([&] { strata_complex_from_json(broken); }, ErrorCode::ParseError);
}

TEST_CASE("stratum shape errors keep their codes") {
  Json j = to_json(cstar_fixture());
  j["strata"][1]["index"] = Json::array({5});
  check_code([&] { strata_complex_from_json(j); }, ErrorCode::InvalidInput);
}

TEST_CASE("corank inputs round-trip") {
  const CorankData cd = preset_sp(3);
  CHECK(corank_data_from_json(to_json(cd)).n_seq == cd.n_seq);
  check_code([] { corank_data_from_json(Json::parse(R"({"n": 3, "n_seq": [2, 1], "c": 1})")); }, ErrorCode::InvalidParams);

  const char* text = R"({
    "cusps": [{"label": "P", "corank": 2, "dim_S_cat": 1, "dim_U": 3},
              {"label": "Q", "corank": 1, "dim_S_cat": 2, "dim_U": 1}],
    "dim_M_can": 4, "neat": false, "n1": {"gr": 1, "sum_h0k": 2, "h_n1": 1, "fn_w": 0}
  })";
  const CuspInventory inv = cusp_inventory_from_json(parse_json(text));
  CHECK(inv.by_corank.at(2).size() == 1);
  CHECK(inv.by_corank.at(1)[0].label == "Q");
  CHECK(*inv.dim_M_can == 4);
  CHECK_FALSE(inv.dim_S_can.has_value());
  CHECK_FALSE(inv.neat);
  const Json j = to_json(inv);
  CHECK(j["cusps"][0]["label"] == "Q");
  CHECK(to_json(cusp_inventory_from_json(j)) == j);
  CHECK(exact_sequence_check_n1(inv) == 0);
  check_code([] { cusp_inventory_from_json(Json::parse(R"({"cusps": [{"label": "P", "corank": 1, "dim_S_cat": -1, "dim_U": 1}]})")); },
             ErrorCode::ParseError);
}

TEST_CASE("region and report JSON are deterministic") {
  const Region rg = admissible_region(preset_sp(2), 3);
  const Json j = to_json(rg);
  CHECK(j["admissible"].size() == 8);
  CHECK(j["trace"].size() == 16);
  CHECK(dump(j) == dump(to_json(admissible_region(preset_sp(2), 3))));

  CuspInventory inv;
  inv.by_corank[2] = {{"a", 1, 3}, {"b", 1, 3}};
  const Json r = to_json(corank_report(preset_sp(2), inv));
  CHECK(r["consistent"].get<bool>());
  CHECK(r["flags"][1]["flag"] == "Surjective");
  CHECK(dump(r) == dump(to_json(corank_report(preset_sp(2), inv))));
}

TEST_CASE("homology and spectral reports") {
  const FanSystem fs = hilbert_cusp_window(hilbert_m(), 3, 3);
  const DeltaComplex dc = quotient_delta_complex(fs, 0);
  const Json d = to_json(dc);
  CHECK(d["simplices"][1].size() == 3);
  const Json h = to_json(pseudomanifold_report(dc));
  CHECK(h["betti"] == Json::parse("[1,1]"));
  CHECK(h["closed"].get<bool>());
  CHECK(h["fundamental_class"].size() == 3);

  const StrataComplex sc = p1xp1_fixture();
  const Json s = to_json(d1(sc, e1_page(sc, 2)));
  CHECK(s["k"] == 2);
  const Json e2 = to_json(weight_graded_cohomology(sc, 2));
  CHECK(e2["graded"].size() == 1);
  CHECK(e2["graded"][0]["weight"] == 4);
  const Json f = to_json(weight_filtration_on_FnHn(annotate_from_fans(fs, {std::nullopt, {{"F", 2}}})));
  CHECK(f["graded"][2] == 2);
  for (const auto& r : f["residues"]) CHECK(r["invertible"].get<bool>());
}
