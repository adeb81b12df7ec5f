#include <doctest.h>

#include "finmod/classify.hpp"

using namespace finmod;

namespace {

bool verdict_of(const PropertyReport& r, const std::string& name) {
  for (const auto& [k, v] : r.verdicts)
    if (k == name) return v;
  FAIL("missing verdict ", name);
  return false;
}

bool has_verdict(const PropertyReport& r, const std::string& name) {
  for (const auto& [k, v] : r.verdicts)
    if (k == name) return true;
  return false;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("the integer-backend Z4 example") {
  auto r = classify(zbackend_module({4}), "z4", true);
  CHECK(verdict_of(r, "goldie_rickart"));
  CHECK_FALSE(verdict_of(r, "rickart"));
  CHECK(verdict_of(r, "singular"));
  CHECK(verdict_of(r, "z2_torsion"));
  CHECK(verdict_of(r, "duo"));
  CHECK(verdict_of(r, "indecomposable"));
  // the recorded witness is the doubling endomorphism with kernel {0,2}
  REQUIRE(r.witnesses.count("rickart") == 1);
  const Witness& w = r.witnesses.at("rickart");
  REQUIRE(w.endos.size() == 1);
  CHECK(w.endos[0] == std::vector<int>{0, 2, 0, 2});
  REQUIRE(w.submodules.size() >= 1);
  CHECK(w.submodules[0] == std::vector<int>{0, 2});
  // integer backend: no injectivity/projectivity verdicts
  CHECK_FALSE(has_verdict(r, "injective"));
  CHECK_FALSE(has_verdict(r, "projective"));
}

TEST_CASE("zero module verdicts") {
  auto r = classify(zbackend_module({}), "zero", false);
  for (const auto& [name, v] : r.verdicts) {
    if (name == "indecomposable") {
      CHECK_FALSE(v);  // by convention the zero module is not indecomposable
    } else {
      CHECK(v);
    }
  }
}

TEST_CASE("the plane over F2") {
  auto f2 = regular_module(BaseRing::finite(make_zmod(2)));
  auto r = classify(direct_sum(f2, f2).sum, "f2^2", false);
  CHECK(verdict_of(r, "rickart"));
  CHECK(verdict_of(r, "goldie_rickart"));
  CHECK(verdict_of(r, "semisimple"));
  CHECK(verdict_of(r, "nonsingular"));
  CHECK_FALSE(verdict_of(r, "duo"));     // a swap moves a line
  CHECK_FALSE(verdict_of(r, "abelian"));  // End = M2(F2)
  CHECK(verdict_of(r, "extending"));
  CHECK(verdict_of(r, "injective"));
  CHECK(verdict_of(r, "projective"));
}

TEST_CASE("the regular module of Z4") {
  auto m = regular_module(BaseRing::finite(make_zmod(4)));
  auto r = classify(m, "z4 regular", false);
  CHECK(verdict_of(r, "goldie_rickart"));  // Z2 = M
  CHECK(verdict_of(r, "z2_torsion"));
  CHECK_FALSE(verdict_of(r, "rickart"));  // doubling has kernel {0,2}
  CHECK(verdict_of(r, "t_baer"));
  CHECK(verdict_of(r, "t_extending"));
  CHECK(verdict_of(r, "projective"));
}

TEST_CASE("ring-level predicates") {
  RingPredicates z4 = ring_predicates(make_zmod(4));
  CHECK(z4.right_goldie_rickart);
  CHECK_FALSE(z4.right_rickart);
  CHECK(z4.left_goldie_rickart == z4.right_goldie_rickart);  // commutative
  CHECK(z4.left_rickart == z4.right_rickart);

  RingPredicates z6 = ring_predicates(make_zmod(6));
  CHECK(z6.right_goldie_rickart);
  CHECK(z6.right_rickart);
  CHECK(z6.left_goldie_rickart);
  CHECK(z6.left_rickart);
}

TEST_CASE("relative predicates") {
  Analysis z4(zbackend_module({4}));
  Analysis zero(zbackend_module({}));
  CHECK(is_relative_goldie_rickart(z4, zero));
  // M is Goldie Rickart iff M-Goldie-Rickart
  for (auto m : {zbackend_module({4}), zbackend_module({2, 2}),
                 zbackend_module({2, 4})}) {
    Analysis a(m), b(m);
    CHECK(is_goldie_rickart(a) == is_relative_goldie_rickart(a, b));
  }
  Analysis k(zbackend_module({2, 2}));
  CHECK(is_relative_c2(k, zero));
}

TEST_CASE("C2 and SIP") {
  auto f2 = regular_module(BaseRing::finite(make_zmod(2)));
  Analysis plane(direct_sum(f2, f2).sum);
  CHECK(has_c2(plane));
  CHECK(has_sip_over_z2(plane));
  CHECK(has_ssip_over_z2(plane));
  Analysis z4(zbackend_module({4}));
  CHECK(has_c2(z4));
}

TEST_CASE("false universal verdicts carry witnesses") {
  auto r = classify(zbackend_module({4}), "z4", true);
  for (const auto& [name, v] : r.verdicts) {
    if (v) continue;
    if (name == "semisimple" || name == "nonsingular") continue;  // derived
    CHECK_MESSAGE(r.witnesses.count(name) == 1, "no witness for ", name);
  }
}

TEST_CASE("t-Baer and extending on small instances") {
  Analysis z4(zbackend_module({4}));
  CHECK(is_t_baer(z4));      // torsion: all preimages are M
  CHECK(is_t_extending(z4));
  Analysis z24(zbackend_module({2, 4}));
  CHECK(is_t_baer(z24));
  // Goldie Rickart follows from t-Baer
  CHECK(is_goldie_rickart(z24));
}

}  // TEST_SUITE
