#include <doctest.h>

#include <regex>
#include <set>

#include "belyi/blocks.hpp"
#include "belyi/families.hpp"
#include "belyi/passport.hpp"
#include "belyi/ratfunc.hpp"
#include "gen.hpp"

using namespace belyi;

namespace {

Dessin star(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Dessin(Perm::identity(n), Perm(img));
}

Rational eval_at(std::string expr, FamilyParams p) {
  expr = std::regex_replace(expr, std::regex("k"), "(" + std::to_string(p.k) + ")");
  expr = std::regex_replace(expr, std::regex("l"), "(" + std::to_string(p.l) + ")");
  RatFunc r = parse_ratfunc(expr);
  REQUIRE(r.is_constant());
  Rational q(r.num().coeffs().empty() ? mpz_class(0) : r.num()[0], r.den()[0]);
  q.canonicalize();
  return q;
}

// The tables derive_tables gives for the family's exponent line, or nullopt
// when the line is not of the plain "kind n = ..., target" shape.
std::optional<std::set<Passport>> tables_for(const FamilyInfo& f, FamilyParams p) {
  static const std::regex one(R"(^(lame|gen2) n = (.+), (\w+)$)");
  static const std::regex two(R"(^(gen3) n0 = (.+), n1 = (.+), (\w+)$)");
  std::smatch m;
  std::optional<Rational> n0, n1;
  std::string target;
  if (std::regex_match(f.exponents, m, one)) {
    (m[1] == "gen2" ? n1 : n0) = eval_at(m[2], p);
    target = m[3];
  } else if (std::regex_match(f.exponents, m, two)) {
    n0 = eval_at(m[2], p);
    n1 = eval_at(m[3], p);
    target = m[4];
  } else {
    return std::nullopt;
  }
  if (target == "G12" || target == "G13") target = "S4";
  if (target == "G22") target = "A5";
  std::set<Passport> out;
  for (const auto& t : derive_tables(exponent_profile(parse_kind(std::string(m[1])), n0, n1), SchwarzTarget::parse(target)))
    out.insert(t.passport());
  return out;
}

}  // namespace

TEST_CASE("gluing two white corners of a star") {
  Dessin d = star(4);
  Dessin g = glue_face_corners(d, 0, 2);
  CHECK(genus(g) == 0);
  CHECK(g.sigma0().cycle_count() == 3);
  CHECK(passport_of(g).str() == "[1^2 2^1, 4^1, 2^2]");
  CHECK(glue_white_at(d, {0, 2}) == Dessin(Perm::parse("(1 3)", 4), d.sigma1()));
}

TEST_CASE("glue errors") {
  Dessin d = star(4);
  CHECK_THROWS_AS(glue_white(d, {0, 0}, {0, 0}), GlueError);
  CHECK_THROWS_AS(glue_white(d, {0, 1}, {1, 0}), GlueError);
  CHECK_THROWS_AS(glue_white_at(d, {0, 9}), GlueError);
  CHECK_THROWS_AS(glue_face_corners(d, 0, 3), GlueError);
  CHECK_THROWS_AS(glue_face_corners(d, 0, std::vector<int>{0, 7}), GlueError);
  CHECK_THROWS_AS(require_planar(Dessin(Perm::identity(2), Perm::identity(2)), "x"), GlueError);
}

TEST_CASE("triality") {
  gen::Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    Dessin d = gen::random_transitive(rng, gen::uniform(rng, 1, 20));
    Passport p = passport_of(d);
    CHECK(passport_of(swap_0_1(d)) == Passport{{p.cols[1], p.cols[0], p.cols[2]}});
    CHECK(passport_of(swap_1_inf(d)) == Passport{{p.cols[0], p.cols[2], p.cols[1]}});
    CHECK(passport_of(swap_0_inf(d)) == Passport{{p.cols[2], p.cols[1], p.cols[0]}});
    CHECK(is_equivalent(swap_1_inf(swap_1_inf(d)), d));
    CHECK(genus(swap_0_inf(d)) == genus(d));
  }
}

TEST_CASE("reroute moves an edge around its vertices") {
  Dessin d = star(4);
  Dessin r = reroute_edge(d, 0, 0, 2);
  CHECK(r.sigma1().str() == "(1 4 2 3)");
  CHECK(genus(r) == 0);
  CHECK_THROWS_AS(reroute_edge(d, 0, 1, 2), GlueError);
}

TEST_CASE("plane builder") {
  PlaneBuilder g;
  int a = g.black(0, 0), b = g.black(2, 0);
  g.link(a, b);
  g.link(a, b, 0.5);
  g.stub(a, 180);
  Dessin d = g.build();
  CHECK(d.degree() == 5);
  CHECK(genus(d) == 0);
  // a lens of two links and an outer face with the stub
  CHECK(passport_of(d).str() == "[1^1 2^2, 2^1 3^1, 2^1 3^1]");
  CHECK(g.anchor(a, 170) == 4);
  CHECK_THROWS_AS(g.link(a, a), GlueError);
  PlaneBuilder empty;
  CHECK_THROWS_AS(empty.build(), GlueError);
}

TEST_CASE("repeating a one-edge motif makes a star") {
  Motif e{one_edge_dessin(), {0}, {0}};
  for (int k = 0; k < 6; ++k) {
    Motif r = repeat_block(e, k);
    CHECK(is_equivalent(r.body, star(k + 1)));
  }
  CHECK_THROWS_AS(repeat_block(e, -1), GlueError);
  CHECK_THROWS_AS(chain(e, Motif{one_edge_dessin(), {0, 0}, {}}), GlueError);
}

TEST_CASE("property: chain is associative and repeat_block composes") {
  Motif m = a5_strip_motif();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      Motif left = chain(chain(repeat_block(m, j), m), repeat_block(m, k));
      Motif right = chain(repeat_block(m, j), chain(m, repeat_block(m, k)));
      CHECK(left.body == right.body);
      CHECK(left.out == right.out);
      CHECK(repeat_block(m, j + k + 2).body == left.body);
    }
  for (int k = 0; k < 4; ++k) {
    Dessin d = repeat_block(m, k).body;
    CHECK(d.degree() == 60 + 60 * k);
    CHECK(is_transitive(d));
    CHECK(genus(d) == 0);
  }
}

TEST_CASE("property: gluing evenly spaced corners keeps genus 0") {
  gen::Rng rng(72);
  for (int t = 0; t < 60; ++t) {
    int n = gen::uniform(rng, 2, 24);
    Dessin d = star(n);
    std::vector<int> divs;
    for (int s = 1; s <= n; ++s)
      if (n % s == 0) divs.push_back(s);
    int step = divs[gen::uniform(rng, 0, static_cast<int>(divs.size()) - 1)];
    Dessin g = glue_face_corners(d, gen::uniform(rng, 0, n - 1), step, gen::uniform(rng, 0, step - 1));
    CHECK(genus(g) == 0);
    CHECK(g.sigma0().cycle_count() == n - n / step + 1);
  }
}

TEST_CASE("registry") {
  const auto& reg = family_registry();
  CHECK(reg.size() >= 30);
  std::set<std::string> ids;
  for (const auto& f : reg) CHECK(ids.insert(f.id).second);
  CHECK_THROWS_AS(family_info("nope"), FamilyError);
  CHECK_THROWS_AS(family("BM2.case1", 0), FamilyError);
  CHECK_THROWS_AS(family("M3.case4", FamilyParams{1, 3}), FamilyError);
  CHECK(eval_passport_formula("[1^3 (2k+1)^1 2^{5k}, 3^{4k+2}, 2^1 4^{3k+1}]", {1, 0}) ==
        Passport::parse("[1^3 3^1 2^5, 3^6, 2^1 4^4]"));
}

TEST_CASE("families: first members against formula, genus and derived tables") {
  for (const auto& f : family_registry()) {
    for (auto p : first_parameters(f, 3)) {
      CAPTURE(f.id);
      CAPTURE(p.k);
      CAPTURE(p.l);
      Dessin d = family(f.id, p);
      CHECK(passport_of(d) == eval_passport_formula(f.formula, p));
      CHECK(is_transitive(d));
      CHECK(genus(d) == 0);
      CHECK(family(f.id, p) == d);
      if (f.primitive) CHECK(is_primitive(d).primitive);
      if (auto tabs = tables_for(f, p)) CHECK(tabs->count(passport_of(d)) == 1);
    }
  }
}
