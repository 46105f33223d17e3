#include <doctest.h>

#include "belyi/perm.hpp"
#include "gen.hpp"

using namespace belyi;

TEST_CASE("parse and print round trip") {
  Perm p = Perm::parse("(1 17)(3 18)", 20);
  CHECK(p.degree() == 20);
  CHECK(p(0) == 16);
  CHECK(p(16) == 0);
  CHECK(p(1) == 1);
  CHECK(p.str() == "(1 17)(3 18)");
  CHECK(Perm::parse(p.str(), 20) == p);
  CHECK(Perm::identity(4).str() == "()");
  CHECK(Perm::parse("(2 3 1)").str() == "(1 2 3)");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Perm::parse("(1 2"), PermError);
  CHECK_THROWS_AS(Perm::parse("(1 2)(2 3)"), PermError);
  CHECK_THROWS_AS(Perm::parse("(0 1)"), PermError);
  CHECK_THROWS_AS(Perm::parse("1 2"), PermError);
  CHECK_THROWS_AS(Perm::parse("(1 5)", 3), PermError);
  CHECK_THROWS_AS(Perm::parse("(1 2000000)"), PermError);
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0}), PermError);
}

TEST_CASE("composition applies the left factor first") {
  Perm p = Perm::parse("(1 2)", 3), q = Perm::parse("(2 3)", 3);
  // 1 -> 2 -> 3
  CHECK(compose(p, q)(0) == 2);
  CHECK(compose(p, q).str() == "(1 3 2)");
  CHECK(compose(q, p).str() == "(1 2 3)");
}

TEST_CASE("cycles and cycle type") {
  Perm p = Perm::parse("(4 5)(1 3 2)", 6);
  CHECK(p.cycles() == std::vector<std::vector<int>>{{0, 2, 1}, {3, 4}, {5}});
  CHECK(p.cycle_type() == std::vector<int>{1, 2, 3});
  CHECK(p.cycle_count() == 3);
}

TEST_CASE("conjugation relabels points") {
  Perm p = Perm::parse("(1 2 3)", 4), g = Perm::parse("(1 4)", 4);
  CHECK(conjugate(p, g).str() == "(2 3 4)");
}

TEST_CASE("property: group laws on random permutations") {
  gen::Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    int n = gen::uniform(rng, 1, 25);
    Perm a = gen::random_perm(rng, n), b = gen::random_perm(rng, n), c = gen::random_perm(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()).is_identity());
    CHECK(a.inverse().inverse() == a);
    CHECK(Perm::parse(a.str(), n) == a);
    CHECK(partition_sum(a.cycle_type()) == n);
    CHECK(conjugate(a, b).cycle_type() == a.cycle_type());
  }
}

TEST_CASE("property: union-find orbits agree with BFS orbits") {
  gen::Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    int n = gen::uniform(rng, 1, 30);
    // sparse generators so orbits are often nontrivial
    Perm gens[2] = {gen::with_cycle_type(rng, gen::random_partition(rng, n)),
                    Perm::identity(n)};
    if (n > 2 && t % 2) gens[1] = Perm::parse("(1 2)", n);
    CHECK(orbits(gens, n) == orbits_bfs(gens, n));
    CHECK(is_transitive(gens, n) == (orbits_bfs(gens, n).size() == 1));
  }
}
