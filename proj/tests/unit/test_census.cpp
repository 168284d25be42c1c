#include <doctest.h>

#include <numeric>

#include "semiloop/census.hpp"
#include "semiloop/error.hpp"

using namespace semiloop;
using gf::Elem;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("theta counts elements of proper subfields") {
    CHECK(census::theta(2, 6) == 10);  // 8 + 4 - 2
    CHECK(census::theta(3, 4) == 9);
    CHECK(census::theta(5, 2) == 5);
    CHECK(census::theta(7, 3) == 7);
    CHECK(census::theta(2, 12) == 64 + 16 - 4);
    CHECK(census::theta(2, 1) == 0);
  }

  TEST_CASE("irreducible counts") {
    const std::uint64_t expect2[] = {0, 2, 1, 2, 3, 6, 9, 18, 30};
    for (unsigned m = 2; m <= 8; ++m) {
      const auto c = census::count_central_irreducible(2, m);
      CHECK(c.mobius == expect2[m]);
      CHECK(c.via_theta == expect2[m]);
      REQUIRE(c.enumerated);
      CHECK(*c.enumerated == expect2[m]);
    }
    CHECK(census::count_central_irreducible(3, 2).mobius == 3);
    CHECK(census::count_central_irreducible(4, 2).mobius == 6);
    CHECK(census::count_central_irreducible(5, 3).mobius == 40);
    const auto big = census::count_central_irreducible(16, 8);
    CHECK_FALSE(big.enumerated);
    CHECK(big.mobius == (std::uint64_t{1} << 32) / 8 - (std::uint64_t{1} << 16) / 8);
    CHECK(code_of([] { census::count_central_irreducible(6, 2); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("central irreducibles are listed in packed order") {
    const auto cubic = census::central_irreducibles(2, 3);
    REQUIRE(cubic.size() == 2);
    CHECK(cubic[0] == std::vector<Elem>{Elem{1}, Elem{1}, Elem{0}});  // y^3 + y + 1
    CHECK(cubic[1] == std::vector<Elem>{Elem{1}, Elem{0}, Elem{1}});  // y^3 + y^2 + 1
    CHECK(code_of([] { census::central_irreducibles(2, 17); }) == ErrorCode::TooLarge);
  }

  TEST_CASE("GammaL(1,q) orbits on quadratics") {
    const std::uint64_t expect[] = {1, 2, 1, 3};
    for (std::uint64_t q = 2; q <= 5; ++q) {
      const auto o = census::gammaL_orbit_count(q, 2);
      CHECK(o.orbits == expect[q - 2]);
      CHECK(o.sandwich_ok);
      CHECK(o.representatives.size() == o.orbits);
      CHECK(o.irreducibles == census::count_central_irreducible(q, 2).mobius);
    }
    for (std::uint64_t q : {7, 8, 9}) {
      const auto o = census::gammaL_orbit_count(q, 3);
      CHECK(o.sandwich_ok);
      CHECK(static_cast<double>(o.orbits) >= o.lower);
    }
  }

  TEST_CASE("numb bound formulas") {
    auto b = census::numb_bound(2, 2);
    REQUIRE(b);
    CHECK(b->kind == "i");
    CHECK(b->value == 1);
    b = census::numb_bound(4, 2);
    REQUIRE(b);
    CHECK(b->value == 2);  // (16 - 4) / 6
    b = census::numb_bound(3, 2);
    REQUIRE(b);
    CHECK(b->kind == "ii");
    CHECK(b->value == 2);  // 1 + (9 - 3 - 2) / 4
    b = census::numb_bound(5, 2);
    REQUIRE(b);
    CHECK(b->value == 3);  // 1 + (25 - 5 - 4) / 8
    CHECK_FALSE(census::numb_bound(9, 4));
  }

  TEST_CASE("nonassociative cyclic algebra classes") {
    struct Case {
      std::uint32_t p;
      unsigned r, m;
      std::size_t classes;
    };
    for (const Case c : {Case{2, 1, 2, 1}, Case{3, 1, 2, 2}, Case{2, 2, 2, 2}, Case{5, 1, 2, 3}, Case{2, 1, 3, 2},
                         Case{3, 1, 3, 4}, Case{2, 1, 4, 3}}) {
      CAPTURE(c.p);
      CAPTURE(c.m);
      const auto tw = gf::make_tower(c.p, c.r, c.m);
      const auto cc = census::cyclic_algebra_classes(tw, c.m);
      CHECK(cc.representatives.size() == c.classes);
      CHECK(cc.subfield_criterion_agrees);
      CHECK(cc.within_bound);
      // Candidates are exactly the elements of K outside every proper subfield.
      const std::uint64_t q = tw.q();
      CHECK(cc.candidates.size() == nt::checked_pow(q, c.m) - census::theta(q, c.m));
      CHECK(std::accumulate(cc.class_sizes.begin(), cc.class_sizes.end(), std::uint64_t{0}) ==
            cc.candidates.size());
    }
    const auto tw = gf::make_tower(2, 1, 3);
    CHECK(code_of([&] { census::cyclic_algebra_classes(tw, 2); }) == ErrorCode::PreconditionViolated);
  }

  TEST_CASE("similarity witnesses") {
    const auto tw = gf::make_tower(2, 1, 2);
    const SkewPoly f = skew::parse(tw, "t^2 - g");
    const auto self = census::similarity_witness(tw, f, f);
    REQUIRE(self);
    CHECK(skew::right_mod(tw, skew::mul(tw, f, *self), f).is_zero());

    std::vector<SkewPoly> fs = skew::enumerate_admissible(tw, 2);
    const auto part = census::similarity_classes(tw, 2, fs);
    CHECK(part.reflexive);
    CHECK(part.symmetric);
    std::size_t total = 0;
    for (const auto& cls : part.classes) total += cls.size();
    CHECK(total == fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j) {
        const auto u = census::similarity_witness(tw, fs[i], fs[j]);
        if (!u) continue;
        CHECK(u->degree() < 2);
        CHECK(skew::right_mod(tw, skew::mul(tw, fs[j], *u), fs[i]).is_zero());
      }
    CHECK(code_of([&] { census::similarity_witness(tw, f, skew::parse(tw, "t^3 - g")); }) ==
          ErrorCode::InvalidArgument);
  }

  TEST_CASE("Sandler existence criterion") {
    const auto s = census::sandler_exists(11, 1, 2, 5);
    CHECK(s.criterion_gcd == 50);
    CHECK(s.exists);
    CHECK(s.g == 5);
    CHECK(s.period == 120);
    CHECK(census::sandler_admissible(s, 12));
    CHECK_FALSE(census::sandler_admissible(s, 15));

    // gcd((2^2 - 1)/(2 - 1), 2^3 - 1) = gcd(3, 7) = 1: no t^2 - a over F_8 / F_2.
    const auto none = census::sandler_exists(2, 1, 3, 2);
    CHECK_FALSE(none.exists);
    CHECK(none.g == 1);

    struct Case {
      std::uint32_t p;
      unsigned r, l, m;
    };
    for (const Case c : {Case{2, 1, 2, 2}, Case{2, 1, 3, 2}, Case{2, 1, 4, 2}, Case{2, 1, 2, 3}, Case{2, 1, 3, 3},
                         Case{3, 1, 2, 2}, Case{3, 1, 3, 2}, Case{3, 1, 2, 3}, Case{5, 1, 2, 2}, Case{2, 2, 4, 2},
                         Case{2, 2, 4, 3}, Case{5, 1, 2, 3}, Case{7, 1, 2, 2}}) {
      CAPTURE(c.p);
      CAPTURE(c.l);
      CAPTURE(c.m);
      const auto d = census::sandler_direct(c.p, c.r, c.l, c.m);
      CHECK(d.agrees);
      CHECK(d.exists == census::sandler_exists(c.p, c.r, c.l, c.m).exists);
    }
    CHECK(code_of([] { census::sandler_exists(2, 2, 3, 2); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { census::sandler_exists(2, 1, 2, 5); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { census::sandler_exists(4, 1, 2, 2); }) == ErrorCode::PreconditionViolated);
  }

  TEST_CASE("bounds reports hold on small parameters") {
    for (auto [q, n, m] : {std::tuple{2ull, 2u, 2u}, std::tuple{3ull, 2u, 2u}, std::tuple{2ull, 3u, 2u},
                           std::tuple{2ull, 2u, 3u}, std::tuple{4ull, 2u, 2u}}) {
      CAPTURE(q);
      CAPTURE(n);
      CAPTURE(m);
      const auto rep = census::bounds_report(q, n, m);
      CHECK(rep.all_hold());
      CHECK(rep.expected_signature.center == q);
      CHECK(rep.expected_signature.right == nt::checked_pow(q, m));
      CHECK(rep.isotopy_lower.has_value());
      CHECK(rep.kantor > rep.order);
    }
    CHECK(code_of([] { census::bounds_report(2, 1, 2); }) == ErrorCode::InvalidArgument);
  }
}
