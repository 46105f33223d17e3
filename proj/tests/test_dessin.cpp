#include <doctest.h>

#include "belyi/dessin.hpp"
#include "belyi/passport.hpp"
#include "gen.hpp"

using namespace belyi;

namespace {

Dessin s30() { return dessin_from_json(gen::load_fixture("s30.json")); }

}  // namespace

TEST_CASE("passport parse and print") {
  Passport p = Passport::parse("[1^2 2^14, 9^1 3^7, 2^1 4^7]");
  CHECK(p.str() == "[1^2 2^14, 3^7 9^1, 2^1 4^7]");
  CHECK(p.degree() == 30);
  CHECK(p.balanced());
  CHECK(Passport::parse("[1 1 2, 4, 2 2]") == Passport::parse("[1^2 2^1, 4^1, 2^2]"));
  CHECK_THROWS_AS(Passport::parse("1^2, 2, 2"), DessinError);
  CHECK_THROWS_AS(Passport::parse("[1^2, 2]"), DessinError);
  CHECK_THROWS_AS(Passport::parse("[0^2, 2, 2]"), DessinError);
  CHECK_FALSE(Passport::parse("[1^2, 2^1, 3^1]").balanced());
}

TEST_CASE("S30 fixture") {
  Dessin d = s30();
  CHECK(d.degree() == 30);
  CHECK(is_transitive(d));
  CHECK(genus(d) == 0);
  CHECK(passport_of(d) == Passport::parse("[1^2 2^14, 9^1 3^7, 2^1 4^7]"));
  // the listed sigma_inf has the same cycle sets but three reversed cycles
  Perm listed = perm_from_json(gen::load_fixture("s30.json")["sigma_inf_as_listed"], 30);
  CHECK(d.sigma_inf().cycle_type() == listed.cycle_type());
  CHECK(d.sigma_inf() != listed);
  CHECK(d.sigma_inf().str() == "(1 2 3 4)(5 6 7 8)(9 10 11 12)(13 14 15 16)(17 20 19 18)(21 24 23 22)(25 28 27 26)(29 30)");
  CHECK(compose(compose(d.sigma0(), d.sigma1()), d.sigma_inf()).is_identity());
}

TEST_CASE("json round trip and corrupt input") {
  Dessin d = s30();
  CHECK(dessin_from_json(to_json(d)) == d);
  nlohmann::json j = to_json(d);
  j["degree"] = 29;
  CHECK_THROWS(dessin_from_json(j));
  CHECK_THROWS_AS(dessin_from_json(nlohmann::json{{"degree", 3}}), DessinError);
  CHECK_THROWS_AS(dessin_from_json(nlohmann::json{{"degree", 2000000}, {"sigma0", {}}, {"sigma1", {}}}), DessinError);
  CHECK_THROWS_AS(Dessin(Perm::identity(2), Perm::identity(3)), DessinError);
}

TEST_CASE("disconnected dessins") {
  Dessin d(Perm::identity(2), Perm::identity(2));
  CHECK_FALSE(is_transitive(d));
  CHECK_THROWS_AS(genus(d), DessinError);
  CHECK_THROWS_AS(canonical_form(d), DessinError);
}

TEST_CASE("one edge") {
  Dessin d = one_edge_dessin();
  CHECK(genus(d) == 0);
  CHECK(passport_of(d).str() == "[1^1, 1^1, 1^1]");
}

TEST_CASE("dot export is deterministic and mentions every edge") {
  Dessin d = s30();
  std::string dot = to_dot(d);
  CHECK(dot == to_dot(d));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(to_dot(relabel(d, Perm::identity(30))) == dot);
}

TEST_CASE("property: Riemann-Hurwitz on random transitive triples") {
  gen::Rng rng(21);
  for (int t = 0; t < 1000; ++t) {
    int n = gen::uniform(rng, 1, 30);
    Dessin d = gen::random_transitive(rng, n);
    int c = d.sigma0().cycle_count() + d.sigma1().cycle_count() + d.sigma_inf().cycle_count();
    int g = genus(d);
    CHECK(g >= 0);
    CHECK(c == n + 2 - 2 * g);
    CHECK(hurwitz_defect(passport_of(d)) == -2 * g);
  }
}

TEST_CASE("property: canonical form is a relabeling invariant") {
  gen::Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    int n = gen::uniform(rng, 1, 20);
    Dessin d = gen::random_transitive(rng, n);
    Dessin e = relabel(d, gen::random_perm(rng, n));
    CHECK(canonical_form(d) == canonical_form(e));
    CHECK(is_equivalent(d, e));
    CHECK(is_equivalent(canonical_form(d), d));
    CHECK(passport_of(e) == passport_of(d));
  }
}

TEST_CASE("property: inequivalent dessins have different canonical forms") {
  // small degrees, so equivalence can be decided over all relabelings
  gen::Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    int n = gen::uniform(rng, 2, 6);
    Dessin a = gen::random_transitive(rng, n), b = gen::random_transitive(rng, n);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    bool conj = false;
    do {
      if (relabel(a, Perm(img)) == b) conj = true;
    } while (!conj && std::next_permutation(img.begin(), img.end()));
    CHECK(is_equivalent(a, b) == conj);
  }
}
