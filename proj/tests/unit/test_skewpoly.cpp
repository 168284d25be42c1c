#include <doctest.h>

#include <random>

#include "semiloop/error.hpp"
#include "semiloop/skewpoly.hpp"

using namespace semiloop;
using gf::Elem;

namespace {

SkewPoly random_poly(const gf::Tower& tw, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<std::uint64_t> pick(0, tw.field().order() - 1);
  std::vector<Elem> c(deg + 1);
  for (auto& e : c) e = Elem{pick(rng)};
  if (c.back().is_zero()) c.back() = tw.field().one();
  return SkewPoly(c);
}

}  // namespace

TEST_SUITE("skewpoly") {
  TEST_CASE("t a = sigma(a) t") {
    const auto tw = gf::make_tower(3, 1, 2);
    const SkewPoly t = SkewPoly::monomial(tw.field().one(), 1);
    for (std::uint64_t v = 0; v < 9; ++v) {
      const Elem a{v};
      CHECK(skew::mul(tw, t, SkewPoly::constant(a)) == SkewPoly::monomial(tw.sigma(a), 1));
    }
  }

  TEST_CASE("t x = (x + 1) t and t (t x) = x t^2 in F_4[t; sigma]") {
    const auto tw = gf::make_tower(2, 1, 2);
    const auto& K = tw.field();
    const SkewPoly t = SkewPoly::monomial(K.one(), 1);
    const SkewPoly tx = skew::mul(tw, t, SkewPoly::constant(K.basis(1)));
    CHECK(tx == SkewPoly::monomial(K.parse("[1,1]"), 1));
    CHECK(skew::mul(tw, t, tx) == SkewPoly::monomial(K.basis(1), 2));
    CHECK(skew::mul(tw, tx, SkewPoly::constant(K.one())) == tx);
  }

  TEST_CASE("t^3 = t (t^2 - x) + (x + 1) t") {
    const auto tw = gf::make_tower(2, 1, 2);
    const auto& K = tw.field();
    const SkewPoly f = skew::parse(tw, "t^2 - [0,1]");
    const auto d = skew::right_divmod(tw, SkewPoly::monomial(K.one(), 3), f);
    CHECK(d.quotient == SkewPoly::monomial(K.one(), 1));
    CHECK(d.remainder == SkewPoly::monomial(K.parse("[1,1]"), 1));
    const auto self = skew::right_divmod(tw, f, f);
    CHECK(self.quotient == SkewPoly::constant(K.one()));
    CHECK(self.remainder.is_zero());
    const SkewPoly small = skew::parse(tw, "[1,1]*t + 1");
    CHECK(skew::right_divmod(tw, small, f).quotient.is_zero());
    CHECK(skew::right_divmod(tw, small, f).remainder == small);
    CHECK_THROWS_AS(skew::right_divmod(tw, f, SkewPoly()), Error);
  }

  TEST_CASE("degree additivity, associativity and division reconstruction") {
    for (auto [p, r, n] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {3, 1, 4}}) {
      const auto tw = gf::make_tower(p, r, n);
      std::mt19937_64 rng(p + 10 * n);
      for (int i = 0; i < 200; ++i) {
        const auto f = random_poly(tw, rng, i % 4);
        const auto g = random_poly(tw, rng, (i / 4) % 4);
        const auto h = random_poly(tw, rng, 2);
        const auto fg = skew::mul(tw, f, g);
        REQUIRE(fg.degree() == f.degree() + g.degree());
        REQUIRE(skew::mul(tw, fg, h) == skew::mul(tw, f, skew::mul(tw, g, h)));
        const auto d = skew::right_divmod(tw, skew::add(tw, fg, h), f);
        REQUIRE(d.remainder.degree() < f.degree());
        REQUIRE(skew::add(tw, skew::mul(tw, d.quotient, f), d.remainder) == skew::add(tw, fg, h));
      }
    }
  }

  TEST_CASE("t^2 - x is irreducible over F_4, t^2 - 1 is not") {
    const auto tw = gf::make_tower(2, 1, 2);
    CHECK(skew::is_irreducible(tw, skew::parse(tw, "t^2 - [0,1]")));
    CHECK(skew::is_irreducible_quadratic(tw, skew::parse(tw, "t^2 - [0,1]")));
    CHECK_FALSE(skew::is_irreducible(tw, skew::parse(tw, "t^2 - 1")));
    CHECK_FALSE(skew::is_irreducible_quadratic(tw, skew::parse(tw, "t^2 - 1")));
  }

  TEST_CASE("the quadratic criterion agrees with divisor search up to F_25") {
    for (auto [p, r, n] : std::vector<std::tuple<std::uint32_t, unsigned, unsigned>>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {5, 1, 2}}) {
      const auto tw = gf::make_tower(p, r, n);
      std::size_t checked = 0;
      skew::for_each_monic(tw, 2, [&](const SkewPoly& f) {
        REQUIRE(skew::is_irreducible(tw, f) == skew::is_irreducible_quadratic(tw, f));
        ++checked;
        return true;
      });
      CHECK(checked == tw.field().order() * tw.field().order());
    }
  }

  TEST_CASE("right-invariance") {
    const auto tw = gf::make_tower(2, 1, 2);
    CHECK(skew::is_right_invariant(tw, skew::parse(tw, "t^2 - 1")));
    CHECK_FALSE(skew::is_right_invariant(tw, skew::parse(tw, "t^2 - [0,1]")));
    // Any coefficient outside F rules out right-invariance.
    const auto tw9 = gf::make_tower(3, 1, 2);
    skew::for_each_monic(tw9, 2, [&](const SkewPoly& f) {
      if (!skew::in_fixed_ring(tw9, f)) REQUIRE_FALSE(skew::is_right_invariant(tw9, f));
      return true;
    });
    // f in F[t] of degree below n.
    const auto tw3 = gf::make_tower(2, 1, 3);
    CHECK_FALSE(skew::is_right_invariant(tw3, skew::parse(tw3, "t^2 + t + 1")));
    // t^n is two-sided for every n.
    CHECK(skew::is_right_invariant(tw3, skew::parse(tw3, "t^3 - 1")));
  }

  TEST_CASE("admissible quadratics over F_4 and F_9") {
    const auto tw = gf::make_tower(2, 1, 2);
    std::size_t scanned = 0;
    skew::for_each_monic(tw, 2, [&](const SkewPoly&) { return ++scanned, true; });
    CHECK(scanned == 16);
    const auto adm = skew::enumerate_admissible(tw, 2);
    for (const auto& f : adm) {
      CHECK(skew::is_irreducible(tw, f));
      CHECK_FALSE(skew::is_right_invariant(tw, f));
    }
    CHECK(std::find(adm.begin(), adm.end(), skew::parse(tw, "t^2 - [0,1]")) != adm.end());
    CHECK(adm.size() == 5);

    gf::Field::Options o;
    o.modulus = std::vector<std::uint32_t>{1, 0, 1};
    const auto tw9 = gf::make_tower(3, 1, 2, o);
    const auto adm9 = skew::enumerate_admissible(tw9, 2);
    CHECK(std::find(adm9.begin(), adm9.end(), skew::parse(tw9, "t^2 - [0,1]")) != adm9.end());
    CHECK(std::find(adm9.begin(), adm9.end(), skew::parse(tw9, "t^2 - [1,1]")) != adm9.end());
  }

  TEST_CASE("literal syntax") {
    const auto tw = gf::make_tower(3, 1, 2);
    const auto& K = tw.field();
    const SkewPoly f = skew::parse(tw, "t^2 - g^5*t - [1,0]");
    CHECK(f.degree() == 2);
    CHECK(f.coeff(1) == K.neg(K.exp(5)));
    CHECK(f.coeff(0) == K.neg(K.one()));
    CHECK(skew::parse(tw, skew::format(tw, f)) == f);
    CHECK(skew::parse(tw, "2*t^3 + t") == SkewPoly({K.zero(), K.one(), K.zero(), K.from_int(2)}));
    CHECK_THROWS_AS(skew::parse(tw, "t^^2"), Error);
  }
}
