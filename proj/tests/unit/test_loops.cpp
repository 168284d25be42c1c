#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semiloop/error.hpp"
#include "semiloop/loops.hpp"
#include "semiloop/numtheory.hpp"
#include "semiloop/semifield.hpp"

using namespace semiloop;
using Pt = Loop::Pt;

namespace {

gf::Tower quadratic(std::uint32_t p, std::vector<std::uint32_t> mod) {
  gf::Field::Options o;
  if (!mod.empty()) o.modulus = std::move(mod);
  return gf::make_tower(p, 1, 2, o);
}

Semifield order15() {
  const auto tw = quadratic(2, {});
  return Semifield(tw, skew::parse(tw, "t^2 - g"));
}

std::vector<Pt> embedded_units(const Semifield& s) {
  std::vector<Pt> out;
  for (std::uint64_t v = 1; v < s.field().order(); ++v) out.push_back(Loop::point_of(s.embed(gf::Elem{v})));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("loops") {
  TEST_CASE("loop sizes and the identity point") {
    const auto tw3 = quadratic(3, {1, 0, 1});
    const auto tw5 = quadratic(5, {3, 0, 1});
    CHECK(Loop::from_semifield(order15()).size() == 15);
    CHECK(Loop::from_semifield(Semifield(tw3, skew::parse(tw3, "t^2 - [0,1]"))).size() == 80);
    CHECK(Loop::from_semifield(Semifield(tw5, skew::parse(tw5, "t^2 - [0,1]"))).size() == 624);

    const Loop L = Loop::from_semifield(order15());
    CHECK(Loop::point_of(1) == 0);
    CHECK(Loop::element_of(0) == 1);
    for (Pt x = 0; x < L.size(); ++x) {
      CHECK(L.mul(0, x) == x);
      CHECK(L.mul(x, 0) == x);
      for (Pt y = 0; y < L.size(); ++y) {
        CHECK(L.mul(x, L.left_div(x, y)) == y);
        CHECK(L.mul(L.right_div(y, x), x) == y);
      }
    }
  }

  TEST_CASE("the multiplication matches the semifield") {
    const Semifield s = order15();
    const Loop L = Loop::from_semifield(s);
    for (SfIndex a = 1; a < s.size(); ++a)
      for (SfIndex b = 1; b < s.size(); ++b)
        CHECK(Loop::element_of(L.mul(Loop::point_of(a), Loop::point_of(b))) == s.mul(a, b));
  }

  TEST_CASE("translations") {
    const Loop L = Loop::from_semifield(order15());
    for (Pt a = 0; a < L.size(); ++a) {
      const auto la = L.left(a), ra = L.right(a);
      for (Pt x = 0; x < L.size(); ++x) {
        CHECK(la(x) == L.mul(a, x));
        CHECK(ra(x) == L.mul(x, a));
      }
    }
    CHECK(L.left(0).is_identity());
  }

  TEST_CASE("Mlt and Inn of the order-15 loop") {
    const Loop L = Loop::from_semifield(order15());
    const auto G = mlt_group(L);
    CHECK(G.order() == 20160);  // GL(4,2)
    CHECK(G.is_transitive());
    CHECK(G.stabilizer_order(0) == 1344);
    CHECK(G.order() == G.stabilizer_order(0) * 15);
    for (Pt a = 0; a < L.size(); ++a) {
      CHECK(G.contains(L.left(a)));
      CHECK(G.contains(L.right(a)));
    }
    // GL(4,2) is simple, so it contains no odd permutation of the 15 points.
    std::vector<std::uint32_t> img(15);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[3], img[7]);
    CHECK_FALSE(G.contains(perm::Perm::from_images(img)));

    const auto inn = inn_group(L, G);
    CHECK(inn.order == 1344);
    CHECK(inn.samples_in_inn);
    REQUIRE(inn.generated_order);
    CHECK(*inn.generated_order == 1344);
  }

  TEST_CASE("the Mlt order does not depend on the seed") {
    const Loop L = Loop::from_semifield(order15());
    for (std::uint64_t seed : {2, 17, 12345}) {
      MltOptions o;
      o.seed = seed;
      CHECK(mlt_group(L, o).order() == 20160);
    }
  }

  TEST_CASE("Mlt of an order-80 loop lies in GL(4,3)") {
    const auto tw = quadratic(3, {1, 0, 1});
    const Loop L = Loop::from_semifield(Semifield(tw, skew::parse(tw, "t^2 - [0,1]")));
    const auto G = mlt_group(L);
    const BigInt gl = nt::gl_order(4, 3);
    CHECK(gl % G.order() == 0);
    CHECK(G.order() % 80 == 0);
    CHECK(G.order() == G.stabilizer_order(0) * 80);
  }

  TEST_CASE("inner mappings") {
    const Semifield s = order15();
    const Loop L = Loop::from_semifield(s);
    CHECK(inner_mapping(L, InnerKind::T, 0).is_identity());
    for (Pt x = 0; x < L.size(); ++x) {
      const auto T = inner_mapping(L, InnerKind::T, x);
      CHECK(T(0) == 0);
      // T_x sends x y to y x after cancelling x: x T_x(y) = y x.
      for (Pt y = 0; y < L.size(); ++y) CHECK(L.mul(x, T(y)) == L.mul(y, x));
    }
    // K lies in the left nucleus, so L_{x,y} is trivial for x, y in K.
    const auto units = embedded_units(s);
    for (Pt x : units)
      for (Pt y : units) CHECK(inner_mapping(L, InnerKind::L, x, y).is_identity());
    const Pt t = Loop::point_of(s.t());
    CHECK_FALSE(inner_mapping(L, InnerKind::L, t, t).is_identity());
  }

  TEST_CASE("cyclicity") {
    const Loop L = Loop::from_semifield(order15());
    const auto c = cyclicity(L);
    CHECK(c.right_cyclic);
    REQUIRE(c.right_witness);
    // Walk the right powers of the witness by hand.
    std::vector<bool> seen(L.size(), false);
    Pt x = *c.right_witness;
    Pt power = x;
    for (std::size_t i = 0; i < L.size(); ++i) {
      seen[power] = true;
      power = L.mul(x, power);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));

    // The cyclic group of order 15 is both left and right cyclic.
    std::vector<Pt> table(15 * 15);
    for (Pt a = 0; a < 15; ++a)
      for (Pt b = 0; b < 15; ++b) table[a * 15 + b] = static_cast<Pt>((a + b) % 15);
    const auto cg = cyclicity(Loop::from_table(15, table));
    CHECK(cg.left_cyclic);
    CHECK(cg.right_cyclic);
  }

  TEST_CASE("subloops and Lagrange") {
    const Semifield s = order15();
    const Loop L = Loop::from_semifield(s);
    const auto rep = subloops_and_lagrange(L);
    const auto units = embedded_units(s);
    CHECK(std::find(rep.subloops.begin(), rep.subloops.end(), units) != rep.subloops.end());
    CHECK(rep.subloops.front() == std::vector<Pt>{0});
    CHECK(rep.subloops.back().size() == 15);
    const bool divides = std::all_of(rep.orders.begin(), rep.orders.end(), [](std::size_t k) { return 15 % k == 0; });
    CHECK(rep.weak == divides);
    for (const auto& sub : rep.subloops) {
      for (Pt a : sub)
        for (Pt b : sub) CHECK(std::binary_search(sub.begin(), sub.end(), L.mul(a, b)));
    }

    const auto tw = quadratic(3, {1, 0, 1});
    const Semifield s3(tw, skew::parse(tw, "t^2 - [0,1]"));
    const auto closure = loop_closure(Loop::from_semifield(s3), embedded_units(s3), 80);
    REQUIRE(closure);
    CHECK(closure->size() == 8);
  }

  TEST_CASE("loop nuclei match the algebra nuclei") {
    const auto tw = quadratic(3, {1, 0, 1});
    for (const char* f : {"t^2 - g", "t^2 - [0,1]", "t^2 - [1,1]"}) {
      const Semifield s(tw, skew::parse(tw, f));
      const auto nuc = s.nuclei();
      const auto ln = loop_nuclei(Loop::from_semifield(s));
      CHECK(ln.left.size() == nuc.left.size - 1);
      CHECK(ln.middle.size() == nuc.middle.size - 1);
      CHECK(ln.right.size() == nuc.right.size - 1);
    }
  }

  TEST_CASE("isomorphism search") {
    const Loop L = Loop::from_semifield(order15());
    const auto self = loop_isomorphic(L, L);
    REQUIRE(self.map);
    const auto& phi = *self.map;
    for (Pt a = 0; a < L.size(); ++a)
      for (Pt b = 0; b < L.size(); ++b) CHECK(phi[L.mul(a, b)] == L.mul(phi[a], phi[b]));

    std::vector<Pt> table(15 * 15);
    for (Pt a = 0; a < 15; ++a)
      for (Pt b = 0; b < 15; ++b) table[a * 15 + b] = static_cast<Pt>((a + b) % 15);
    const auto cyc = loop_isomorphic(L, Loop::from_table(15, table));
    CHECK_FALSE(cyc.map);

    // An isomorphic copy under a relabelling is recognised.
    std::vector<Pt> relabel(15);
    for (Pt i = 0; i < 15; ++i) relabel[i] = i == 0 ? 0 : static_cast<Pt>(15 - i);
    std::vector<Pt> moved(15 * 15);
    for (Pt a = 0; a < 15; ++a)
      for (Pt b = 0; b < 15; ++b) moved[relabel[a] * 15 + relabel[b]] = relabel[L.mul(a, b)];
    CHECK(loop_isomorphic(L, Loop::from_table(15, moved)).map.has_value());
  }

  TEST_CASE("automorphism count is a multiple of the semifield automorphisms") {
    const Loop L = Loop::from_semifield(order15());
    const auto n = loop_automorphism_count(L);
    CHECK(n >= 3);
    CHECK(n % 3 == 0);
  }

  TEST_CASE("Latin square CSV round trip") {
    const Semifield s = order15();
    const Loop L = Loop::from_semifield(s);
    std::vector<std::string> legend;
    for (Pt p = 0; p < L.size(); ++p) legend.push_back(s.format(Loop::element_of(p)));
    std::stringstream ss;
    write_latin_csv(ss, L, legend);
    CHECK(ss.str().rfind("# N=15", 0) == 0);
    const Loop back = read_latin_csv(ss);
    CHECK(back == L);

    std::stringstream bad("# N=2\n0,1\n1,1\n");
    CHECK_THROWS_AS(read_latin_csv(bad), Error);
  }

  TEST_CASE("table validation") {
    CHECK_THROWS_AS(Loop::from_table(2, {0, 1, 1, 1}), Error);
    CHECK_THROWS_AS(Loop::from_table(2, {1, 0, 0, 1}), Error);  // no identity at point 0
  }
}
