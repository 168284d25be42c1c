#include "verify.hpp"

#include "semiloop/autgroup.hpp"
#include "semiloop/census.hpp"
#include "semiloop/error.hpp"
#include "semiloop/loops.hpp"
#include "semiloop/semifield.hpp"

namespace semiloop::tool {

namespace {

gf::Tower quadratic_tower(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  gf::Field::Options o;
  if (!modulus.empty()) o.modulus = std::move(modulus);
  return gf::make_tower(p, 1, 2, o);
}

void add(std::vector<VerifyLine>& out, int tier, std::string name, const std::string& expected,
         const std::string& got) {
  out.push_back({tier, std::move(name), expected, got, expected == got});
}

void loop_orders(std::vector<VerifyLine>& out, int tier, const std::string& label, const Semifield& s,
                 const std::string& mlt, const std::string& inn, std::uint64_t seed) {
  const Loop L = Loop::from_semifield(s);
  MltOptions o;
  o.seed = seed;
  const auto G = mlt_group(L, o);
  add(out, tier, label + " |L|", std::to_string(s.size() - 1), std::to_string(L.size()));
  add(out, tier, label + " |Mlt|", mlt, nt::to_string(G.order()));
  add(out, tier, label + " |Inn|", inn, nt::to_string(G.stabilizer_order(0)));
}

}  // namespace

std::vector<VerifyLine> run_verify(int tier, std::uint64_t seed) {
  std::vector<VerifyLine> out;

  {
    const auto tw = quadratic_tower(2, {});
    const Semifield s(tw, skew::parse(tw, "t^2 - g"));
    const auto nuc = s.nuclei();
    add(out, 1, "F_4 t^2-g nuclei l/m/r", "4/4/4",
        std::to_string(nuc.left.size) + "/" + std::to_string(nuc.middle.size) + "/" + std::to_string(nuc.right.size));
    add(out, 1, "F_4 t^2-g center", "2", std::to_string(nuc.center.size));
    loop_orders(out, 1, "F_4 t^2-g", s, "20160", "1344", seed);
    const auto inner = aut::inner_automorphisms(s, seed);
    add(out, 1, "F_4 t^2-g inner automorphisms", "Z/3", inner.structure ? inner.structure->tag() : "?");
    add(out, 1, "F_4 t^2-g right cyclic", "yes", cyclicity(Loop::from_semifield(s)).right_cyclic ? "yes" : "no");
    const auto classes = census::cyclic_algebra_classes(tw, 2);
    add(out, 1, "classes (q,m)=(2,2)", "1", std::to_string(classes.representatives.size()));
  }
  {
    bool agree = true;
    for (std::uint64_t q = 2; q <= 16; ++q) {
      if (nt::prime_power(q).first == 0) continue;
      for (unsigned m = 2; m <= 8; ++m) {
        try {
          census::count_central_irreducible(q, m);
        } catch (const Error&) {
          agree = false;
        }
      }
    }
    add(out, 1, "N(q,m) formulas, q<=16 m<=8", "agree", agree ? "agree" : "mismatch");
    add(out, 1, "theta(2,6)", "10", std::to_string(census::theta(2, 6)));
  }
  if (tier < 2) return out;

  {
    std::string got;
    for (std::uint64_t q : {2, 3, 4, 5}) got += (got.empty() ? "" : ",") + std::to_string(census::gammaL_orbit_count(q, 2).orbits);
    add(out, 2, "M(q,2) q=2..5", "1,2,1,3", got);
  }
  {
    const auto tw = quadratic_tower(3, {1, 0, 1});
    const Semifield a1(tw, skew::parse(tw, "t^2 - [0,1]"));
    const Semifield a2(tw, skew::parse(tw, "t^2 - [1,1]"));
    loop_orders(out, 2, "F_9 A_1", a1, "12130560", "151632", seed);
    loop_orders(out, 2, "F_9 A_2", a2, "12130560", "151632", seed);
    add(out, 2, "F_9 Aut A_1 (a = x)", "Z/4", aut::aut_group_structure(a1, aut::solve_aut_conditions(a1)).id.tag());
    add(out, 2, "F_9 Aut A_2 (a = x+1)", "Dic_2", aut::aut_group_structure(a2, aut::solve_aut_conditions(a2)).id.tag());
    add(out, 2, "classes (q,m)=(3,2)", "2", std::to_string(census::cyclic_algebra_classes(tw, 2).representatives.size()));
  }
  {
    const auto tw = quadratic_tower(5, {3, 0, 1});
    const Semifield b1(tw, skew::parse(tw, "t^2 - [0,1]"));
    const Semifield b2(tw, skew::parse(tw, "t^2 - [1,2]"));
    loop_orders(out, 2, "F_25 sqrt2", b1, "29016000000", "46500000", seed);
    loop_orders(out, 2, "F_25 1+2sqrt2", b2, "29016000000", "46500000", seed);
    add(out, 2, "F_25 H count sqrt2 >= 12", "yes", aut::solve_aut_conditions(b1).size() >= 12 ? "yes" : "no");
    add(out, 2, "F_25 H count 1+2sqrt2 >= 6", "yes", aut::solve_aut_conditions(b2).size() >= 6 ? "yes" : "no");
  }
  return out;
}

}  // namespace semiloop::tool
