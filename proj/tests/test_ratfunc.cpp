#include <doctest.h>

#include "belyi/ratfunc.hpp"
#include "gen.hpp"

using namespace belyi;

namespace {

std::string fx(const char* key) { return gen::load_fixture("ratfunc.json")[key].get<std::string>(); }

Poly random_poly(gen::Rng& rng, int deg) {
  std::vector<mpz_class> c;
  for (int i = 0; i <= deg; ++i) c.push_back(gen::uniform(rng, -9, 9));
  if (c.back() == 0) c.back() = 1;
  return Poly(c);
}

}  // namespace

TEST_CASE("parsing") {
  RatFunc f = parse_ratfunc("x(x^2+190x-1215)^2/(5x+27)^4");
  CHECK(f.degree() == 5);
  CHECK(parse_ratfunc("2x^2 - 3") == parse_ratfunc("2*x*x-3"));
  CHECK(parse_ratfunc("(x+1)^-1") == parse_ratfunc("1/(x+1)"));
  CHECK(parse_ratfunc("6x/4") == parse_ratfunc("3x/2"));
  CHECK_THROWS_AS(parse_ratfunc("x +"), RatFuncError);
  CHECK_THROWS_AS(parse_ratfunc("1/(x-x)"), RatFuncError);
  CHECK_THROWS_AS(parse_ratfunc("y"), RatFuncError);
  CHECK_THROWS_AS(parse_ratfunc("(x+1"), RatFuncError);
}

TEST_CASE("normal form prints factored") {
  CHECK(parse_ratfunc(fx("F")).str() == "-1/27 * x * (2x^2 - 20x + 45)^2 / (5x - 32)");
}

TEST_CASE("corrected F is Belyi with the displayed profile") {
  RatFunc f = parse_ratfunc(fx("F"));
  CHECK(ramification_profile(f) == Passport::parse(fx("F_profile")));
  CHECK(is_belyi(f).belyi);
  CHECK(verify_against_passport(f, Passport::parse("[1^1 2^2, 2^1 3^1, 1^1 4^1]")));
  CHECK_FALSE(verify_against_passport(f, Passport::parse("[1^1 2^2, 1^1 4^1, 2^1 3^1]")));
}

TEST_CASE("F with a leading 2 is not Belyi") {
  RatFunc f = parse_ratfunc(fx("F_not_belyi"));
  auto r = is_belyi(f);
  CHECK_FALSE(r.belyi);
  CHECK(r.ramification_excess < 0);
  CHECK(ramification_profile(f).cols[1] == std::vector<int>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(verify_against_passport(f, Passport::parse("[1^1 2^2, 2^1 3^1, 1^1 4^1]")), RatFuncError);
}

TEST_CASE("F1 is F after a Moebius change and pulls back to the n = 5/6 passport") {
  RatFunc f = parse_ratfunc(fx("F")), f1 = parse_ratfunc(fx("F1"));
  CHECK(compose(f, parse_ratfunc(fx("F1_from_F"))) == f1);
  RatFunc g = compose(f1, parse_ratfunc(fx("inner")));
  CHECK(g.degree() == 10);
  CHECK(ramification_profile(g) == Passport::parse(fx("composed_profile")));
  CHECK(is_belyi(g).belyi);
  // with the order 4 pole at infinity the pullback doubles it instead
  CHECK(ramification_profile(compose(f, parse_ratfunc("x^2+1"))) == Passport::parse("[1^2 2^4, 3^2 4^1, 1^2 8^1]"));
}

TEST_CASE("non-Belyi critical values") {
  auto r = is_belyi(parse_ratfunc("x^3 - 3x"));
  CHECK_FALSE(r.belyi);
  REQUIRE(r.critical_value);
  // critical values are -2 and 2
  CHECK((*r.critical_value == 2 || *r.critical_value == -2));
  CHECK_THROWS_AS(ramification_profile(RatFunc::constant(3)), RatFuncError);
}

TEST_CASE("property: powers of x") {
  for (int m = 1; m <= 12; ++m) {
    RatFunc f = RatFunc::x().pow(m);
    Passport p = ramification_profile(f);
    CHECK(p.cols[0] == std::vector<int>{m});
    CHECK(p.cols[1] == std::vector<int>(m, 1));
    CHECK(p.cols[2] == std::vector<int>{m});
    CHECK(is_belyi(f).belyi);
  }
}

TEST_CASE("property: Moebius changes keep the profile") {
  gen::Rng rng(61);
  RatFunc f = parse_ratfunc(fx("F"));
  Passport want = ramification_profile(f);
  for (int t = 0; t < 40; ++t) {
    int a = gen::uniform(rng, -5, 5), b = gen::uniform(rng, -5, 5), c = gen::uniform(rng, -5, 5), d = gen::uniform(rng, -5, 5);
    if (a * d - b * c == 0) continue;
    RatFunc m(Poly({b, a}), Poly({d, c}));
    RatFunc g = compose(f, m);
    CHECK(ramification_profile(g) == want);
    CHECK(is_belyi(g).belyi);
  }
}

TEST_CASE("property: squarefree decomposition and gcd") {
  gen::Rng rng(62);
  for (int t = 0; t < 150; ++t) {
    Poly a = random_poly(rng, gen::uniform(rng, 1, 3)), b = random_poly(rng, gen::uniform(rng, 1, 3));
    Poly c = random_poly(rng, gen::uniform(rng, 0, 2));
    Poly p = a.pow(gen::uniform(rng, 1, 3)) * b * c.pow(2);
    Poly prod = Poly::constant(1);
    for (const auto& [f, m] : squarefree_decomposition(p)) {
      CHECK(gcd(f, f.derivative()).degree() == 0);
      prod = prod * f.pow(m);
    }
    CHECK(prod == p.primitive());
    Poly g = gcd(a * c, b * c);
    CHECK(divexact(a * c, g) * g == a * c);
    CHECK(gcd(a * c, b * c).degree() >= c.degree());
  }
}

TEST_CASE("property: composition is associative") {
  gen::Rng rng(63);
  for (int t = 0; t < 30; ++t) {
    RatFunc f(random_poly(rng, 2), random_poly(rng, 1)), g(random_poly(rng, 2), Poly::constant(1)),
        h(random_poly(rng, 1), random_poly(rng, 1));
    if (f.is_constant() || g.is_constant() || h.is_constant()) continue;
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(f, g).degree() == f.degree() * g.degree());
  }
}
