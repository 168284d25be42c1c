#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semiloop/permgroup.hpp"
#include "semiloop/semifield.hpp"

namespace semiloop::aut {

/// H_{tau,k}: x_i t^i -> tau(x_i) (prod_{l<i} sigma^l(k)) t^i, where tau is
/// the Frobenius power x -> x^(p^tau) of K.
struct AutHK {
  unsigned tau = 0;
  gf::Elem k{1};

  friend bool operator==(const AutHK&, const AutHK&) = default;
  friend auto operator<=>(const AutHK&, const AutHK&) = default;
};

/// tau(a_i) = (prod_{l=i}^{m-1} sigma^l(k)) a_i for every nonzero coefficient.
bool satisfies_conditions(const Semifield& s, const AutHK& h);

/// Every (tau, k) in Aut(K) x K^x satisfying the conditions, sorted by
/// (tau, k).
std::vector<AutHK> solve_aut_conditions(const Semifield& s);

/// True when the solutions are known to be all ring automorphisms (n >= m - 1).
bool solutions_are_full_group(const Semifield& s);

SfIndex apply_aut(const Semifield& s, const AutHK& h, SfIndex x);

struct MultiplicativityCheck {
  bool ok = false;
  bool exhaustive = false;
  std::uint64_t pairs = 0;
};

/// H(xy) = H(x)H(y): every pair when |S_f| <= 625, otherwise `samples` random
/// pairs drawn from `seed`.
MultiplicativityCheck verify_multiplicative(const Semifield& s, const AutHK& h, std::uint64_t seed = 1,
                                            std::uint64_t samples = 10000);

/// Parameters of H_a o H_b, i.e. (tau tau', tau(k') k).
AutHK compose(const Semifield& s, const AutHK& a, const AutHK& b);

/// The extension of H to K[t; sigma] sends f to (prod_{l<m} sigma^l(k)) f.
bool scales_f(const Semifield& s, const AutHK& h);

struct AutGroupReport {
  perm::Cayley table;
  perm::GroupId id;
  /// Parameter law agrees with composing realized maps pointwise.
  bool law_matches_maps = false;
  /// Number of elements on which the pointwise comparison ran per pair.
  std::uint64_t law_points = 0;
};

/// Multiplication table over the parameter pairs. Error: NotClosed.
AutGroupReport aut_group_structure(const Semifield& s, const std::vector<AutHK>& auts);

struct InnerAut {
  SfIndex c = 0;
  /// Left inverse c_l of c.
  SfIndex c_inv = 0;
  /// images[x] = (c_l x) c for every element index x.
  std::vector<SfIndex> images;
  /// H_{id,k} with the same images, when one was found.
  std::optional<AutHK> as_hk;
};

struct InnerReport {
  std::vector<InnerAut> maps;
  std::uint64_t nucleus_size = 0;
  /// (|Nuc| - 1) / (q - 1) when Nuc is a field containing F.
  std::optional<std::uint64_t> expected_count;
  bool count_matches = false;
  bool all_multiplicative = false;
  bool nucleus_is_K = false;
  /// Every G_c equals some H_{id,k} with N(k) = 1 (only meaningful when Nuc = K).
  bool all_match_norm_one = false;
  /// |ker N_{K/F}| = (q^n - 1) / (q - 1).
  std::uint64_t norm_kernel_order = 0;
  std::optional<perm::GroupId> structure;
  bool cyclic = false;
};

/// G_c for every invertible c in the computed nucleus, deduplicated by images.
/// Error: SizeCapExceeded when |S_f| is above 2^16.
InnerReport inner_automorphisms(const Semifield& s, std::uint64_t seed = 1);

/// S(r,m,l) = gcd((p^{rm} - 1) / (p^r - 1), p^l - 1). Errors: InvalidArgument
/// when r does not divide l, TooLarge on 64-bit overflow.
std::uint64_t s_gcd_count(std::uint32_t p, unsigned r, unsigned m, unsigned l);

struct SubgroupComparison {
  std::vector<AutHK> sol_f, sol_g;
  /// Every solution for g also solves f.
  bool included = false;
  bool equal = false;
};

/// f must arise from g by zeroing coefficients. Errors: InadmissiblePolynomial
/// when either is not admissible, InvalidArgument when f is not a zeroing of g.
SubgroupComparison subgroup_comparison(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g);

}  // namespace semiloop::aut
