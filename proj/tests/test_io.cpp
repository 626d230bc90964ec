#include <gtest/gtest.h>

#include "hh1/io.hpp"

using namespace hh1;

TEST(Json, AlgebraRoundTripIsByteIdentical) {
  for (const Algebra& a : {smash_product(3, 1, 2).algebra, truncated_polynomial(5, {1, 1}),
                           quiver_algebra(3, trivial_extension_kronecker_quiver(3)), u0_borel(3, 1)}) {
    const std::string once = to_json(a).dump();
    const Algebra back = algebra_from_json(json::parse(once));
    EXPECT_EQ(to_json(back).dump(), once) << a.name();
    EXPECT_EQ(back.dim(), a.dim());
  }
}

TEST(Json, LieRoundTripIsByteIdentical) {
  for (const RestrictedLie& L : {gl2(3), witt(5, 1), from_hh1(first_cohomology_smash(smash_product(3, 2, 1)))}) {
    const std::string once = to_json(L).dump();
    EXPECT_EQ(to_json(lie_from_json(json::parse(once))).dump(), once);
  }
}

TEST(Json, RejectsInvalidAlgebras) {
  json good = to_json(truncated_polynomial(3, {1}));
  EXPECT_NO_THROW(algebra_from_json(good));
  auto broken = [&](const std::function<void(json&)>& f) {
    json j = good;
    f(j);
    return j;
  };
  EXPECT_THROW(algebra_from_json(broken([](json& j) { j["p"] = 2; })), InputError);
  EXPECT_THROW(algebra_from_json(broken([](json& j) { j["p"] = 9; })), InputError);
  EXPECT_THROW(algebra_from_json(broken([](json& j) { j.erase("unit"); })), InputError);
  EXPECT_THROW(algebra_from_json(broken([](json& j) { j["mult"].push_back(j["mult"][0]); })), InputError);
  EXPECT_THROW(algebra_from_json(broken([](json& j) { j["mult"][0][3] = 7; })), InputError);
  EXPECT_THROW(algebra_from_json(broken([](json& j) { j["mult"][0][0] = 3; })), InputError);
  EXPECT_THROW(algebra_from_json(broken([](json& j) { j["mult"].push_back({1, 2, 0, 1}); })), InputError);
  EXPECT_THROW(algebra_from_json(json::array()), InputError);
}

TEST(Json, RejectsInvalidLie) {
  json good = to_json(sl2(3));
  json j = good;
  j["bracket"].push_back({0, 0, 1, 1});
  EXPECT_THROW(lie_from_json(j), InputError);
  j = good;
  j["pmap"].erase(0);
  EXPECT_THROW(lie_from_json(j), InputError);
}

TEST(Json, ReportsCarryCertificates) {
  const json t = to_json(greedy_maximal_torus(gl2(3)));
  EXPECT_EQ(t["dim"], 2);
  EXPECT_EQ(t["maximality_status"], "exhaustively-certified");
  EXPECT_EQ(t["certificates"].size(), 2u);
  const json f = to_json(fingerprint(gl2(3)));
  EXPECT_EQ(f["center_dim"], 1);
  EXPECT_EQ(f["mu_exhaustive"], 2);
}
