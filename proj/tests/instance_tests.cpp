#include <doctest.h>

#include "finmod/instance.hpp"

using namespace finmod;

TEST_SUITE("instance") {

TEST_CASE("ring specs") {
  auto z4 = parse_spec("ring zmod 4");
  REQUIRE(z4.ring);
  CHECK(z4.ring->table().order == 4);
  CHECK(z4.canonical == "ring zmod 4");

  auto t = parse_spec("ring triangular upper 2 (ring zmod 2)");
  CHECK(t.ring->table().order == 8);
  auto m = parse_spec("ring matrix 2 (ring zmod 2)");
  CHECK(m.ring->table().order == 16);
  auto p = parse_spec("ring product (ring zmod 2) (ring zmod 3)");
  CHECK(rings_isomorphic(p.ring->table(), make_zmod(6)));
  auto g = parse_spec("ring gf4");
  CHECK(g.ring->table().order == 4);
  auto o = parse_spec("ring opposite (ring triangular upper 2 (ring zmod 2))");
  CHECK(o.ring->table().order == 8);
}

TEST_CASE("module specs") {
  auto z4 = parse_spec("module zabelian 4");
  REQUIRE(z4.module);
  CHECK(z4.module->order == 4);
  CHECK(z4.module->base->is_integers());

  auto reg = parse_spec("module regular (ring triangular upper 2 (ring zmod 2))");
  CHECK(reg.module->order == 8);

  auto s = parse_spec("module sum (module zabelian 2) (module zabelian 4)");
  CHECK(s.module->order == 8);

  auto q = parse_spec("module quotient (module regular (ring zmod 4)) gens 2");
  CHECK(q.module->order == 2);

  auto sub = parse_spec("module sub (module regular (ring zmod 4)) gens 2");
  CHECK(sub.module->order == 2);
}

TEST_CASE("canonical form round-trips") {
  for (const char* text :
       {"ring zmod 6", "ring gf4",
        "ring product (ring zmod 2) (ring zmod 2)",
        "ring triangular lower 2 (ring zmod 2)",
        "module zabelian 2 4",
        "module regular (ring zmod 8)",
        "module sum (module zabelian 2) (module zabelian 2)",
        "module quotient (module regular (ring zmod 6)) gens 3",
        "module sub (module zabelian 2 4) gens 2"}) {
    auto first = parse_spec(text);
    auto second = parse_spec(first.canonical);
    CHECK(second.canonical == first.canonical);
    if (first.module) {
      CHECK(second.module->order == first.module->order);
      CHECK(second.module->add == first.module->add);
      CHECK(second.module->act == first.module->act);
    } else {
      CHECK(second.ring->table().mul == first.ring->table().mul);
    }
  }
}

TEST_CASE("whitespace and newline tolerance") {
  auto a = parse_spec("  module   sum\n  (module zabelian 2)\r\n"
                      "  (module zabelian 2)  ");
  CHECK(a.module->order == 4);
  CHECK(a.canonical ==
        "module sum (module zabelian 2) (module zabelian 2)");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("ring bogus 4"), ParseError);
  CHECK_THROWS_AS(parse_spec("module regular (ring zmod)"), ParseError);
  CHECK_THROWS_AS(parse_spec("ring zmod 4 extra"), ParseError);
  // parentheses are optional for a trailing sub-expression; the canonical
  // form restores them
  CHECK(parse_spec("module regular ring zmod 4").canonical ==
        "module regular (ring zmod 4)");
  try {
    parse_spec("module sum (module zabelian 2)\n(module wrong 2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("validation errors from construction") {
  // mixing a finite base with the integer backend is rejected
  CHECK_THROWS_AS(parse_spec("module sum (module zabelian 4) "
                             "(module regular (ring zmod 4))"),
                  ArgumentError);
  // generators out of range (reported with position)
  CHECK_THROWS_AS(parse_spec("module sub (module zabelian 4) gens 9"),
                  ParseError);
  // order cap
  CHECK_THROWS_AS(parse_spec("ring zmod 99"), SizeLimitError);
}

}  // TEST_SUITE
