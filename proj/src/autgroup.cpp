#include "semiloop/autgroup.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "semiloop/error.hpp"
#include "semiloop/numtheory.hpp"

namespace semiloop::aut {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 625;
constexpr std::uint64_t kInnerLimit = 1ULL << 16;

gf::Elem tau_of(const Semifield& s, const AutHK& h, gf::Elem x) {
  return h.tau == 0 ? x : s.field().frobenius(x, h.tau);
}

/// prefix[i] = prod_{l<i} sigma^l(k) for i = 0..m.
std::vector<gf::Elem> prefix_products(const Semifield& s, gf::Elem k) {
  const auto& K = s.field();
  std::vector<gf::Elem> out(s.m() + 1, K.one());
  for (unsigned i = 0; i < s.m(); ++i) out[i + 1] = K.mul(out[i], s.tower().sigma(k, i));
  return out;
}

SfIndex apply_with(const Semifield& s, const AutHK& h, const std::vector<gf::Elem>& prefix, SfIndex x) {
  const auto& K = s.field();
  const std::uint64_t ks = K.order();
  SfIndex out = 0, place = 1;
  for (unsigned i = 0; i < s.m(); ++i) {
    const gf::Elem c{x % ks};
    x /= ks;
    if (!c.is_zero()) out += K.mul(tau_of(s, h, c), prefix[i]).value * place;
    place *= ks;
  }
  return out;
}

/// Table of a finite set of maps on {0..N-1} closed under composition;
/// table[i][j] is the index of maps[i] o maps[j].
perm::Cayley cayley_of_maps(const std::vector<std::vector<SfIndex>>& maps) {
  std::map<std::vector<SfIndex>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < maps.size(); ++i) index.emplace(maps[i], i);
  perm::Cayley c;
  bool have_identity = false;
  for (std::uint32_t i = 0; i < maps.size(); ++i) {
    bool id = true;
    for (std::size_t x = 0; x < maps[i].size() && id; ++x) id = maps[i][x] == x;
    if (id) {
      c.identity = i;
      have_identity = true;
    }
  }
  if (!have_identity) throw Error(ErrorCode::NotClosed, "map set lacks the identity");
  c.table.assign(maps.size(), std::vector<std::uint32_t>(maps.size()));
  std::vector<SfIndex> comp;
  for (std::uint32_t i = 0; i < maps.size(); ++i) {
    for (std::uint32_t j = 0; j < maps.size(); ++j) {
      comp.resize(maps[j].size());
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = maps[i][maps[j][x]];
      auto it = index.find(comp);
      if (it == index.end()) throw Error(ErrorCode::NotClosed, "maps are not closed under composition");
      c.table[i][j] = it->second;
    }
  }
  return c;
}

}  // namespace

bool satisfies_conditions(const Semifield& s, const AutHK& h) {
  const auto& K = s.field();
  if (h.k.is_zero()) return false;
  const unsigned m = s.m();
  // suffix = prod_{l=i}^{m-1} sigma^l(k), built from the top down.
  gf::Elem suffix = K.one();
  for (unsigned i = m; i-- > 0;) {
    suffix = K.mul(suffix, s.tower().sigma(h.k, i));
    const gf::Elem a = s.f().coeff(i);
    if (a.is_zero()) continue;
    if (tau_of(s, h, a) != K.mul(suffix, a)) return false;
  }
  return true;
}

std::vector<AutHK> solve_aut_conditions(const Semifield& s) {
  const auto& K = s.field();
  std::vector<AutHK> out;
  for (unsigned j = 0; j < K.degree(); ++j) {
    for (std::uint64_t v = 1; v < K.order(); ++v) {
      const AutHK h{j, gf::Elem{v}};
      if (satisfies_conditions(s, h)) out.push_back(h);
    }
  }
  return out;
}

bool solutions_are_full_group(const Semifield& s) { return s.tower().n() + 1 >= s.m(); }

SfIndex apply_aut(const Semifield& s, const AutHK& h, SfIndex x) {
  return apply_with(s, h, prefix_products(s, h.k), x);
}

MultiplicativityCheck verify_multiplicative(const Semifield& s, const AutHK& h, std::uint64_t seed,
                                            std::uint64_t samples) {
  const auto prefix = prefix_products(s, h.k);
  const std::uint64_t N = s.size();
  MultiplicativityCheck r;
  r.ok = true;
  auto check = [&](SfIndex x, SfIndex y) {
    ++r.pairs;
    return apply_with(s, h, prefix, s.mul(x, y)) ==
           s.mul(apply_with(s, h, prefix, x), apply_with(s, h, prefix, y));
  };
  if (N <= kExhaustiveLimit) {
    r.exhaustive = true;
    for (SfIndex x = 0; x < N && r.ok; ++x)
      for (SfIndex y = 0; y < N && r.ok; ++y) r.ok = check(x, y);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<SfIndex> pick(0, N - 1);
    for (std::uint64_t i = 0; i < samples && r.ok; ++i) {
      const SfIndex x = pick(rng);
      r.ok = check(x, pick(rng));
    }
  }
  return r;
}

AutHK compose(const Semifield& s, const AutHK& a, const AutHK& b) {
  const auto& K = s.field();
  return AutHK{(a.tau + b.tau) % K.degree(), K.mul(tau_of(s, a, b.k), a.k)};
}

bool scales_f(const Semifield& s, const AutHK& h) {
  const auto& tw = s.tower();
  const auto prefix = prefix_products(s, h.k);
  std::vector<gf::Elem> image(s.m() + 1);
  for (unsigned i = 0; i <= s.m(); ++i) image[i] = s.field().mul(tau_of(s, h, s.f().coeff(i)), prefix[i]);
  return SkewPoly(image) == skew::scale(tw, prefix[s.m()], s.f());
}

AutGroupReport aut_group_structure(const Semifield& s, const std::vector<AutHK>& auts) {
  std::map<AutHK, std::uint32_t> index;
  for (std::uint32_t i = 0; i < auts.size(); ++i) index.emplace(auts[i], i);
  AutGroupReport r;
  r.table.table.assign(auts.size(), std::vector<std::uint32_t>(auts.size()));
  bool have_identity = false;
  for (std::uint32_t i = 0; i < auts.size(); ++i) {
    if (auts[i] == AutHK{0, s.field().one()}) {
      r.table.identity = i;
      have_identity = true;
    }
    for (std::uint32_t j = 0; j < auts.size(); ++j) {
      auto it = index.find(compose(s, auts[i], auts[j]));
      if (it == index.end()) throw Error(ErrorCode::NotClosed, "automorphism parameters are not closed");
      r.table.table[i][j] = it->second;
    }
  }
  if (!have_identity) throw Error(ErrorCode::NotClosed, "automorphism parameters lack the identity");

  // Pointwise comparison on every element for small S_f, otherwise on a fixed
  // spread of indices.
  std::vector<SfIndex> points;
  if (s.size() <= kExhaustiveLimit) {
    for (SfIndex x = 0; x < s.size(); ++x) points.push_back(x);
  } else {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<SfIndex> pick(0, s.size() - 1);
    points = {s.one(), s.t()};
    while (points.size() < 64) points.push_back(pick(rng));
  }
  r.law_points = points.size();
  r.law_matches_maps = true;
  for (std::uint32_t i = 0; i < auts.size() && r.law_matches_maps; ++i) {
    for (std::uint32_t j = 0; j < auts.size() && r.law_matches_maps; ++j) {
      const AutHK& c = auts[r.table.table[i][j]];
      for (SfIndex x : points) {
        if (apply_aut(s, c, x) != apply_aut(s, auts[i], apply_aut(s, auts[j], x))) {
          r.law_matches_maps = false;
          break;
        }
      }
    }
  }
  r.id = perm::identify_small_group(r.table);
  return r;
}

InnerReport inner_automorphisms(const Semifield& s, std::uint64_t seed) {
  if (s.size() > kInnerLimit) throw Error(ErrorCode::SizeCapExceeded, "inner automorphisms need |S_f| <= 65536");
  const auto& K = s.field();
  const auto& tw = s.tower();
  const std::uint32_t p = K.characteristic();
  const auto nuc = s.nuclei().nucleus;

  InnerReport r;
  r.nucleus_size = nuc.size;
  r.norm_kernel_order = tw.norm_kernel().order;

  // Enumerate the nucleus from its basis.
  const auto& basis = nuc.space.basis();
  std::vector<std::uint32_t> digits(basis.size(), 0);
  std::vector<std::uint32_t> v(s.dim_prime());
  std::map<std::vector<SfIndex>, std::size_t> seen;
  for (std::uint64_t count = 0; count < nuc.size; ++count) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + digits[b] * basis[b][j]) % p;
    }
    const SfIndex c = s.from_prime_coords(v);
    for (std::size_t b = 0; b < digits.size(); ++b) {
      if (++digits[b] < p) break;
      digits[b] = 0;
    }
    if (c == 0) continue;
    const SfIndex cl = s.inverses(c).first;
    std::vector<SfIndex> images(s.size());
    for (SfIndex x = 0; x < s.size(); ++x) images[x] = s.mul(s.mul(cl, x), c);
    if (seen.contains(images)) continue;
    seen.emplace(images, r.maps.size());
    r.maps.push_back(InnerAut{c, cl, std::move(images), std::nullopt});
  }

  const std::uint64_t q = tw.q();
  if (nuc.closed && (nuc.size - 1) % (q - 1) == 0) r.expected_count = (nuc.size - 1) / (q - 1);
  r.count_matches = r.expected_count && *r.expected_count == r.maps.size();

  // Multiplicativity of each realized map.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<SfIndex> pick(0, s.size() - 1);
  r.all_multiplicative = true;
  for (const auto& g : r.maps) {
    auto check = [&](SfIndex x, SfIndex y) { return g.images[s.mul(x, y)] == s.mul(g.images[x], g.images[y]); };
    if (s.size() <= kExhaustiveLimit) {
      for (SfIndex x = 0; x < s.size() && r.all_multiplicative; ++x)
        for (SfIndex y = 0; y < s.size() && r.all_multiplicative; ++y) r.all_multiplicative = check(x, y);
    } else {
      for (int i = 0; i < 10000 && r.all_multiplicative; ++i) {
        const SfIndex x = pick(rng);
        r.all_multiplicative = check(x, pick(rng));
      }
    }
    if (!r.all_multiplicative) break;
  }

  // Nuc = K 1 exactly when it has |K| elements and contains every embedded constant.
  r.nucleus_is_K = nuc.size == K.order();
  if (r.nucleus_is_K) {
    for (unsigned j = 0; j < K.degree() && r.nucleus_is_K; ++j) {
      r.nucleus_is_K = nuc.space.contains(s.prime_coords(s.embed(K.basis(j))));
    }
  }
  if (r.nucleus_is_K) {
    r.all_match_norm_one = true;
    for (auto& g : r.maps) {
      // G_c(t) = (sigma(c)/c) t, which pins down the candidate k.
      const gf::Elem k = s.coeff(g.images[s.t()], 1);
      const AutHK h{0, k};
      bool same = !k.is_zero() && tw.norm(k) == K.one();
      for (SfIndex x = 0; x < s.size() && same; ++x) same = apply_aut(s, h, x) == g.images[x];
      if (same) g.as_hk = h;
      r.all_match_norm_one = r.all_match_norm_one && same;
    }
  }

  if (r.maps.size() <= 512) {
    std::vector<std::vector<SfIndex>> maps;
    for (const auto& g : r.maps) maps.push_back(g.images);
    r.structure = perm::identify_small_group(cayley_of_maps(maps));
    r.cyclic = r.structure->kind == perm::GroupId::Kind::Cyclic || r.structure->kind == perm::GroupId::Kind::Trivial;
  }
  return r;
}

std::uint64_t s_gcd_count(std::uint32_t p, unsigned r, unsigned m, unsigned l) {
  if (r == 0 || l % r != 0) throw Error(ErrorCode::InvalidArgument, "r must divide l");
  const std::uint64_t pr = nt::checked_pow(p, r);
  const std::uint64_t prm = nt::checked_pow(p, r * m);
  const std::uint64_t pl = nt::checked_pow(p, l);
  return nt::gcd((prm - 1) / (pr - 1), pl - 1);
}

SubgroupComparison subgroup_comparison(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g) {
  auto build = [&](const SkewPoly& h, const char* name) {
    try {
      return Semifield(tw, h);
    } catch (const Error& e) {
      throw Error(ErrorCode::InadmissiblePolynomial, std::string(name) + " is not admissible: " + e.what());
    }
  };
  const Semifield sf = build(f, "f");
  const Semifield sg = build(g, "g");
  if (sf.m() != sg.m()) throw Error(ErrorCode::InvalidArgument, "f and g must have the same degree");
  for (unsigned i = 0; i < sf.m(); ++i) {
    const gf::Elem a = sf.f().coeff(i);
    if (!a.is_zero() && a != sg.f().coeff(i)) {
      throw Error(ErrorCode::InvalidArgument, "f is not obtained from g by zeroing coefficients");
    }
  }
  SubgroupComparison r;
  r.sol_f = solve_aut_conditions(sf);
  r.sol_g = solve_aut_conditions(sg);
  r.included = std::includes(r.sol_f.begin(), r.sol_f.end(), r.sol_g.begin(), r.sol_g.end());
  r.equal = r.sol_f == r.sol_g;
  return r;
}

}  // namespace semiloop::aut
