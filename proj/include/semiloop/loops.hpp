#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "semiloop/permgroup.hpp"
#include "semiloop/semifield.hpp"

namespace semiloop {

/// A finite loop on points {0, ..., N-1} with identity 0, stored as its
/// multiplication table. For loops of a semifield, point i is the element
/// with index i + 1, so the identity 1 of S_f is point 0.
class Loop {
 public:
  using Pt = std::uint16_t;
  static constexpr std::size_t kTableCap = 5000;

  /// Error: SizeCapExceeded when |S_f| - 1 is above kTableCap.
  static Loop from_semifield(const Semifield& s);
  /// Validates the normalized Latin square property. Error: InvalidArgument.
  static Loop from_table(std::size_t n, std::vector<Pt> table);

  std::size_t size() const { return n_; }
  Pt mul(Pt a, Pt b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  /// x with a x = b.
  Pt left_div(Pt a, Pt b) const { return ldiv_[static_cast<std::size_t>(a) * n_ + b]; }
  /// x with x a = b.
  Pt right_div(Pt b, Pt a) const { return rdiv_[static_cast<std::size_t>(a) * n_ + b]; }
  const std::vector<Pt>& table() const { return table_; }

  /// L_a : x -> a x.
  perm::Perm left(Pt a) const;
  /// R_a : x -> x a.
  perm::Perm right(Pt a) const;

  /// Points singled out as cheap Mlt seeds (t and the primitive element).
  const std::vector<Pt>& seed_points() const { return seeds_; }

  static Pt point_of(SfIndex x);
  static SfIndex element_of(Pt p) { return static_cast<SfIndex>(p) + 1; }

  bool operator==(const Loop& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  static Loop finish(std::size_t n, std::vector<Pt> table, std::vector<Pt> seeds);

  std::size_t n_ = 0;
  std::vector<Pt> table_, ldiv_, rdiv_;
  std::vector<Pt> seeds_;
};

struct MltOptions {
  std::uint64_t seed = 1;
  std::size_t extra_random = 8;
  std::size_t degree_cap = perm::Bsgs::kDegreeCap;
};

/// Exact Mlt(L) with the identity point first in the base. Errors:
/// DegreeCapExceeded, NotTransitive.
perm::Bsgs mlt_group(const Loop& L, const MltOptions& opts = {});

enum class InnerKind { T, L, R };

/// T_x = L_x^-1 R_x, L_{x,y} = L_{yx}^-1 L_y L_x, R_{x,y} = R_{xy}^-1 R_y R_x,
/// read as maps applied right to left.
perm::Perm inner_mapping(const Loop& L, InnerKind kind, Loop::Pt x, Loop::Pt y = 0);

struct InnReport {
  BigInt order;
  std::vector<perm::Perm> generators;
  std::size_t sampled = 0;
  /// Every sampled T_x, L_{x,y}, R_{x,y} fixes 0 and lies in Mlt.
  bool samples_in_inn = false;
  /// Order of the group generated by all T/L/R maps (only for N <= 80).
  std::optional<BigInt> generated_order;
};

/// Error: NotTransitive.
InnReport inn_group(const Loop& L, const perm::Bsgs& mlt, std::uint64_t seed = 1, std::size_t samples = 200);

struct Cyclicity {
  bool left_cyclic = false;
  bool right_cyclic = false;
  std::optional<Loop::Pt> left_witness, right_witness;
  std::size_t left_generators = 0, right_generators = 0;
};

/// Left principal powers a, a a, (a a) a, ...; right ones a, a a, a (a a), ...
Cyclicity cyclicity(const Loop& L);

struct LagrangeReport {
  /// All subloops as sorted point sets, ordered by size then content.
  std::vector<std::vector<Loop::Pt>> subloops;
  std::vector<std::size_t> orders;
  bool weak = false;
  bool strong = false;
};

/// Error: SizeCapExceeded above N = 700.
LagrangeReport subloops_and_lagrange(const Loop& L, std::size_t cap = 700);

/// Closure of a point set, or nothing once it exceeds `limit` points.
std::optional<std::vector<Loop::Pt>> loop_closure(const Loop& L, const std::vector<Loop::Pt>& gens, std::size_t limit);

struct LoopNuclei {
  std::vector<Loop::Pt> left, middle, right;
};
LoopNuclei loop_nuclei(const Loop& L);

struct IsoResult {
  std::optional<std::vector<Loop::Pt>> map;
  /// Decided by comparing invariant multisets, without search.
  bool separated_by_invariants = false;
};

/// Backtracking isomorphism search for N <= 255. Error: SizeCapExceeded.
IsoResult loop_isomorphic(const Loop& a, const Loop& b);

/// Number of automorphisms of L by exhaustive backtracking, N <= 80.
/// Error: SizeCapExceeded.
std::uint64_t loop_automorphism_count(const Loop& L);

/// CSV with a `# N=<n>` header, optional `# <i>=<label>` legend lines, then
/// N rows of comma separated point indices.
void write_latin_csv(std::ostream& os, const Loop& L, const std::vector<std::string>& legend);
Loop read_latin_csv(std::istream& is);

}  // namespace semiloop
