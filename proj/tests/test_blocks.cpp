#include <doctest.h>

#include <set>

#include "belyi/blocks.hpp"
#include "belyi/families.hpp"
#include "gen.hpp"

using namespace belyi;

namespace {

// Block systems by brute force: a set B containing 0 is a block when its
// images under the group form a partition. Returns the sizes found.
std::set<int> oracle_block_sizes(const Dessin& d) {
  const int n = d.degree();
  std::set<int> sizes;
  const Perm gens[] = {d.sigma0(), d.sigma1()};
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {
    int size = __builtin_popcount(mask);
    if (size == 1 || size == n || n % size) continue;
    std::set<unsigned> orbit{mask};
    std::vector<unsigned> todo{mask};
    bool ok = true;
    while (!todo.empty() && ok) {
      unsigned b = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        unsigned img = 0;
        for (int x = 0; x < n; ++x)
          if (b >> x & 1) img |= 1u << g(x);
        for (unsigned o : orbit)
          if ((o & img) && o != img) ok = false;
        if (orbit.insert(img).second) todo.push_back(img);
      }
    }
    if (ok) sizes.insert(size);
  }
  return sizes;
}

Dessin s30() { return dessin_from_json(gen::load_fixture("s30.json")); }

}  // namespace

TEST_CASE("S30 is imprimitive with three blocks of ten") {
  Dessin d = s30();
  auto r = is_primitive(d);
  REQUIRE_FALSE(r.primitive);
  REQUIRE(r.witness);
  CHECK(r.witness->block_count() == 3);
  CHECK(r.witness->block_size() == 10);
  CHECK(is_block_system(d, *r.witness));
  auto fx = gen::load_fixture("s30.json");
  std::set<std::vector<int>> listed;
  for (const auto& b : fx["partition"]) {
    std::vector<int> v;
    for (int x : b) v.push_back(x - 1);
    listed.insert(v);
  }
  CHECK(std::set<std::vector<int>>(r.witness->blocks.begin(), r.witness->blocks.end()) == listed);
  CHECK(r.witness->block_of(0) == std::vector<int>{0, 2, 5, 7, 12, 14, 20, 22, 25, 27});

  QuotientTriple q = quotient_triple(d, *r.witness);
  Dessin qd(q.sigma0, q.sigma1);
  Dessin want(Perm::parse("(2 3)", 3), Perm::parse("(1 2 3)", 3));
  CHECK(is_equivalent(qd, want));
  CHECK(compose(compose(q.sigma0, q.sigma1), q.sigma_inf).is_identity());
}

TEST_CASE("seeded block systems") {
  Dessin d = s30();
  auto b = minimal_blocks(d, 0, 2);
  REQUIRE(b);
  CHECK(b->block_of(0) == std::vector<int>{0, 2, 5, 7, 12, 14, 20, 22, 25, 27});
  CHECK_THROWS_AS(minimal_blocks(d, 3, 3), DessinError);
  CHECK_THROWS_AS(minimal_blocks(Dessin(Perm::identity(2), Perm::identity(2)), 0, 1), DessinError);
}

TEST_CASE("certificate json") {
  auto j = certificate_json(s30(), is_primitive(s30()));
  CHECK(j["primitive"] == false);
  CHECK(j["blocks"][0] == nlohmann::json{1, 3, 6, 8, 13, 15, 21, 23, 26, 28});
  CHECK(j["quotient"]["degree"] == 3);
}

TEST_CASE("pendant-cycles dessin is imprimitive, BM2.case1 is primitive") {
  for (int k = 0; k < 4; ++k) CHECK_FALSE(is_primitive(family("BM2.case1.pendant", k)).primitive);
  for (int k = 1; k <= 4; ++k) CHECK(is_primitive(family("BM2.case1", k)).primitive);
}

TEST_CASE("property: primitivity matches the brute-force oracle") {
  gen::Rng rng(51);
  for (int t = 0; t < 150; ++t) {
    int n = gen::uniform(rng, 2, 12);
    // products of a small block action and a fibre action are often imprimitive
    Dessin d = gen::random_transitive(rng, n);
    if (t % 3 == 0 && n % 2 == 0) {
      std::vector<int> a(n), b(n);
      Perm p = gen::random_perm(rng, n / 2), q = gen::random_perm(rng, n / 2);
      for (int x = 0; x < n; ++x) {
        a[x] = 2 * p(x / 2) + x % 2;
        b[x] = 2 * q(x / 2) + (x % 2 ^ (x / 2 == 0));
      }
      Dessin e{Perm(a), Perm(b)};
      if (is_transitive(e)) d = e;
    }
    auto sizes = oracle_block_sizes(d);
    auto r = is_primitive(d);
    CAPTURE(d.sigma0().str());
    CAPTURE(d.sigma1().str());
    CHECK(r.primitive == sizes.empty());
    if (!r.primitive) {
      CHECK(is_block_system(d, *r.witness));
      CHECK(sizes.count(r.witness->block_size()) == 1);
    }
  }
}

TEST_CASE("property: serial and parallel scans agree") {
  gen::Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    Dessin d = gen::random_transitive(rng, gen::uniform(rng, 2, 40));
    auto a = is_primitive(d), b = is_primitive_serial(d);
    CHECK(a.primitive == b.primitive);
    CHECK(a.witness_point == b.witness_point);
  }
  auto a = is_primitive(s30()), b = is_primitive_serial(s30());
  CHECK(a.witness->blocks == b.witness->blocks);
}

TEST_CASE("property: minimal blocks are block systems containing the seed") {
  gen::Rng rng(53);
  for (int t = 0; t < 100; ++t) {
    int n = gen::uniform(rng, 2, 24);
    Dessin d = gen::random_transitive(rng, n);
    int a = gen::uniform(rng, 0, n - 1), b = gen::uniform(rng, 0, n - 1);
    if (a == b) continue;
    auto s = minimal_blocks(d, a, b);
    if (!s) continue;
    CHECK(is_block_system(d, *s));
    const auto& blk = s->block_of(a);
    CHECK(std::find(blk.begin(), blk.end(), b) != blk.end());
    CHECK(s->block_count() * s->block_size() == n);
  }
}
