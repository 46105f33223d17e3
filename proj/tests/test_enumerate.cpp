#include <doctest.h>

#include "belyi/enumerate.hpp"
#include "belyi/passport.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace belyi;

TEST_CASE("canonical sigma0") {
  CHECK(canonical_sigma0(make_partition({2, 1, 3})).str() == "(2 3)(4 5 6)");
}

TEST_CASE("n = 5/6: three classes, matching the fixture") {
  auto fx = gen::load_fixture("n5_6.json");
  Passport p = Passport::parse(fx["passport"].get<std::string>());
  auto r = enumerate_dessins(p);
  CHECK(r.status == EnumStatus::found);
  CHECK(r.defect == 0);
  REQUIRE(r.dessins.size() == 3);
  std::vector<Dessin> stored;
  for (const auto& j : fx["dessins"]) stored.push_back(canonical_form(dessin_from_json(j)));
  std::sort(stored.begin(), stored.end());
  CHECK(stored == r.dessins);
  for (const auto& d : r.dessins) {
    CHECK(passport_of(d) == p);
    CHECK(genus(d) == 0);
  }
}

TEST_CASE("infeasible and none found are different") {
  auto bad = enumerate_dessins(Passport::parse("[2^2, 2^2, 4^1]"));
  CHECK(bad.status == EnumStatus::infeasible);
  CHECK(bad.defect != 0);
  CHECK(bad.nodes == 0);
  auto none = enumerate_dessins(Passport::parse("[1^1 2^7, 3^5, 2^3 9^1]"));
  CHECK(none.defect == 0);
  CHECK(none.status == EnumStatus::none_found);
  CHECK(none.dessins.empty());
}

TEST_CASE("degree bound") {
  CHECK_THROWS_AS(enumerate_dessins(Passport::parse("[2^25, 2^1 3^16, 50^1]")), BoundExceeded);
  EnumerateOptions opt;
  opt.degree_bound = 6;
  CHECK_THROWS_AS(enumerate_dessins(Passport::parse("[1^2 2^4, 3^2 4^1, 2^1 4^2]"), opt), BoundExceeded);
}

TEST_CASE("limit returns a prefix") {
  Passport p = Passport::parse("[1^2 2^4, 3^2 4^1, 2^1 4^2]");
  EnumerateOptions opt;
  opt.limit = 1;
  auto r = enumerate_dessins(p, opt);
  CHECK(r.dessins.size() == 1);
  CHECK(r.truncated);
  CHECK(count_dessins(p) == 3);
}

TEST_CASE("serial and parallel searches agree") {
  EnumerateOptions serial;
  serial.parallel = false;
  for (const char* s : {"[1^2 2^4, 3^2 4^1, 2^1 4^2]", "[2^6, 3^4, 1^1 2^1 3^3]", "[1^2 2^10, 3^5 7^1, 2^1 4^5]"}) {
    Passport p = Passport::parse(s);
    auto a = enumerate_dessins(p), b = enumerate_dessins(p, serial);
    CHECK(a.dessins == b.dessins);
    CHECK(a.status == b.status);
  }
}

TEST_CASE("property: enumerator matches the naive oracle up to degree 7") {
  gen::Rng rng(41);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 60; ++t) {
    int n = gen::uniform(rng, 1, 7);
    // half from random partitions, half read off random triples
    Passport p = t % 2 ? passport_of(gen::random_transitive(rng, n))
                       : Passport{{gen::random_partition(rng, n), gen::random_partition(rng, n), gen::random_partition(rng, n)}};
    auto r = enumerate_dessins(p);
    if (hurwitz_defect(p) != 0) {
      CHECK(r.status == EnumStatus::infeasible);
      continue;
    }
    ++checked;
    CAPTURE(p.str());
    CHECK(r.dessins == oracle::all_dessins(p));
  }
  CHECK(checked > 10);
}
