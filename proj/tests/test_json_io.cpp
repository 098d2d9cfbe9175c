/**
 * @file test_json_io.cpp
 * @brief JSON schemas: exact rationals as strings, round trips, schema errors.
 */
#include "ramlab/json_io.hpp"
#include "ramlab/random.hpp"

#include <gtest/gtest.h>

namespace ramlab::io {
namespace {

Rat r(std::int64_t a, std::int64_t b = 1) { return make_rat(a, b); }

TEST(JsonRat, StringForm) {
  EXPECT_EQ(to_json(r(-3, 6)), Json("-1/2"));
  EXPECT_EQ(to_json(r(4)), Json("4"));
  EXPECT_EQ(rat_from_json(Json("10/4")), r(5, 2));
  EXPECT_EQ(rat_from_json(Json(7)), r(7));
}

TEST(JsonRat, RejectsFloatsAndGarbage) {
  EXPECT_THROW(rat_from_json(Json(0.5)), SchemaError);
  EXPECT_THROW(rat_from_json(Json("1/0")), SchemaError);
  EXPECT_THROW(rat_from_json(Json("x")), SchemaError);
  EXPECT_THROW(rat_from_json(Json::array()), SchemaError);
}

TEST(JsonGamma, Form) {
  EXPECT_EQ(to_json(GammaVal(r(1, 2), r(-1))).dump(), R"({"flat":"1/2","eps":"-1"})");
  EXPECT_EQ(to_json(GammaOrInf::infinity()), Json("inf"));
  EXPECT_THROW(gamma_from_json(Json{{"flat", "1"}}), SchemaError);
}

TEST(JsonLaurent, RoundTripAndErrors) {
  const LaurentVal f{{-2, r(1, 3)}, {0, r(2)}, {5, r(-1)}};
  EXPECT_EQ(laurent_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(f).dump(), R"({"terms":{"-2":"1/3","0":"2","5":"-1"}})");
  EXPECT_THROW(laurent_from_json(Json::parse(R"({"terms":{"a":"1"}})")), SchemaError);
  EXPECT_THROW(laurent_from_json(Json::parse(R"({"terms":[1]})")), SchemaError);
  EXPECT_THROW(laurent_from_json(Json::parse(R"({})")), SchemaError);
}

TEST(JsonSide, Parse) {
  EXPECT_EQ(side_from_json(Json("Inner")), Side::Inner);
  EXPECT_EQ(side_from_json(Json("outer")), Side::Outer);
  EXPECT_THROW(side_from_json(Json("left")), SchemaError);
}

TEST(JsonPLFun, RoundTrip) {
  const PLFun f(r(1, 2), {{r(1), r(0)}, {r(5, 2), r(2)}}, r(7));
  EXPECT_EQ(plfun_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(PLFun::hinge(r(1), r(1, 2))).dump(),
            R"({"at0":"0","pieces":[{"until":"1/2","slope":"0"}],"final_slope":"1"})");
}

TEST(JsonRamPoint, RoundTrip) {
  const auto rp = ram_from_kummer(6, 3, r(1, 2));
  const auto back = rampoint_from_json(to_json(rp));
  EXPECT_EQ(*back.group, *rp.group);
  EXPECT_EQ(back.i_map, rp.i_map);
  EXPECT_EQ(back.gamma0, rp.gamma0);
  EXPECT_EQ(back.p, rp.p);
  EXPECT_EQ(back.rho, rp.rho);
}

TEST(JsonRamPoint, SchemaErrors) {
  auto j = to_json(ram_from_kummer(3, 3, r(0)));
  auto missing = j;
  missing["i_map"].erase("2");
  EXPECT_THROW(rampoint_from_json(missing), SchemaError);
  auto bad_order = j;
  bad_order["order"] = 4;
  EXPECT_THROW(rampoint_from_json(bad_order), SchemaError);
  auto not_normal = j;
  not_normal["i_map"]["1"] = Json{{"flat", "1"}, {"eps", "1/3"}};
  EXPECT_THROW(rampoint_from_json(not_normal), std::invalid_argument);
}

TEST(JsonClassFun, OrderedByMinimalElement) {
  const auto a = artin_flat(ram_from_kummer(3, 3, r(0)));
  EXPECT_EQ(to_json(a).dump(), R"({"classes":[[0],[1],[2]],"values":["3","-3/2","-3/2"]})");
}

TEST(JsonFilteredRep, RoundTrip) {
  gen::Rng rng(61);
  for (int t = 0; t < 10; ++t) {
    const auto rep = gen::cyclic_rep(rng, 4, 2, FinRing(3, 2));
    const auto back = filtered_rep_from_json(to_json(rep));
    EXPECT_EQ(back.actions(), rep.actions());
    EXPECT_EQ(back.chain(), rep.chain());
    EXPECT_EQ(back.ring(), rep.ring());
    EXPECT_EQ(to_json(back), to_json(rep));
  }
}

TEST(JsonFilteredRep, SchemaErrors) {
  auto j = Json::parse(R"({"ell":3,"n":1,"group":{"order":2,"table":[[0,1],[1,0]]},
                           "chain":[[0,1],[0]],"action":{"0":[[1]],"1":[[2]]}})");
  EXPECT_NO_THROW(filtered_rep_from_json(j));
  auto missing = j;
  missing["action"].erase("1");
  EXPECT_THROW(filtered_rep_from_json(missing), SchemaError);
  auto bad_rows = j;
  bad_rows["action"]["1"] = "x";
  EXPECT_THROW(filtered_rep_from_json(bad_rows), SchemaError);
  auto bad_hom = j;
  bad_hom["action"]["1"] = Json::parse("[[1]]");
  bad_hom["action"]["0"] = Json::parse("[[2]]");
  EXPECT_THROW(filtered_rep_from_json(bad_hom), std::invalid_argument);
}

TEST(JsonProfile, RoundTrip) {
  gen::Rng rng(62);
  for (int t = 0; t < 50; ++t) {
    const auto pr = gen::profile(rng);
    EXPECT_EQ(profile_from_json(to_json(pr)), pr);
  }
  const auto flagged = tensor_profile_bound(profile_LQ(1, 1, 3, 1), profile_LQ(1, 1, 3, 1));
  EXPECT_EQ(profile_from_json(to_json(flagged)), flagged);
}

TEST(JsonNewtonBreak, RoundTrip) {
  const NewtonBreak b{r(1), r(-1, 2), 1};
  EXPECT_EQ(to_json(b).dump(), R"({"q":"1","c":"-1/2","mu":1})");
  EXPECT_EQ(newton_break_from_json(to_json(b)), b);
}

TEST(JsonReport, Form) {
  CheckReport rep;
  rep.add("a", true);
  rep.add("b", false, "why");
  EXPECT_EQ(to_json(rep).dump(),
            R"({"pass":false,"checks":[{"name":"a","pass":true},{"name":"b","pass":false,"detail":"why"}]})");
}

TEST(JsonFields, IntegerFieldTypeChecked) {
  EXPECT_THROW(int_field(Json{{"n", "3"}}, "n"), SchemaError);
  EXPECT_THROW(int_field(Json{{"m", 3}}, "n"), SchemaError);
  EXPECT_EQ(int_field(Json{{"n", 3}}, "n"), 3);
}

}  // namespace
}  // namespace ramlab::io
