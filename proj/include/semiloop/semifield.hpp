#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiloop/gf.hpp"
#include "semiloop/linalg.hpp"
#include "semiloop/skewpoly.hpp"

namespace semiloop {

/// Elements of S_f are packed as sum_i c_i |K|^i, with c_i the packed value
/// of the coefficient of t^i. Index 0 is zero and index 1 is the identity.
using SfIndex = std::uint64_t;

struct NucleusInfo {
  linalg::Subspace space;
  /// p^dim as a decimal-free integer.
  std::uint64_t size = 0;
  /// "F_<size>" when the subspace is closed under multiplication, else empty.
  std::string tag;
  bool closed = false;
};

struct NucleiReport {
  NucleusInfo left, middle, right, nucleus, center;
  /// Right nucleus computed as {g : f g in Rf}; must match `right`.
  NucleusInfo right_by_membership;
  bool right_formula_agrees = false;
};

struct TPowerReport {
  /// f t in Rf.
  bool ft_in_rf = false;
  /// (t^{m-1} t) t == t (t^{m-1} t); equivalent to ft_in_rf.
  bool t_cross_check = false;
  /// Every bracketing of t^{m+1} gives the same element.
  bool power_associative_m1 = false;
  /// The right powers t, t t, (t t) t, ... form a multiplicatively closed set.
  bool powers_closed = false;
  /// Closed and associative, i.e. the powers form a cyclic group. Left empty
  /// when the power set is too large for the cubic associativity scan.
  std::optional<bool> powers_form_group;
  std::uint64_t powers_count = 0;
  /// Size of the subloop generated by t, when below the closure cap.
  std::optional<std::uint64_t> generated_order;
  bool f_in_fixed_ring = false;
};

/// The semifield S_f = K[t; sigma] / K[t; sigma] f. Immutable once built.
class Semifield {
 public:
  /// Normalizes f to be monic. Errors: DegreeZero, InvalidArgument (degree 1),
  /// ReducibleF, RightInvariantF, TooLarge.
  Semifield(gf::Tower tower, const SkewPoly& f);

  const gf::Tower& tower() const { return tower_; }
  const gf::Field& field() const { return tower_.field(); }
  const SkewPoly& f() const { return f_; }
  unsigned m() const { return m_; }
  /// |S_f| = q^{nm}.
  std::uint64_t size() const { return size_; }
  /// Dimension over the prime field, l * m.
  unsigned dim_prime() const { return dim_; }

  SfIndex one() const { return 1; }
  SfIndex t() const { return m_ > 1 ? k_size_ : 0; }
  SfIndex embed(gf::Elem k) const { return k.value; }
  SfIndex index(const SkewPoly& g) const;
  SkewPoly element(SfIndex x) const;
  gf::Elem coeff(SfIndex x, unsigned i) const;

  SfIndex add(SfIndex x, SfIndex y) const;
  SfIndex sub(SfIndex x, SfIndex y) const;
  SfIndex mul(SfIndex x, SfIndex y) const;
  /// [x, y, z] = (x y) z - x (y z).
  SfIndex associator(SfIndex x, SfIndex y, SfIndex z) const;

  std::vector<std::uint32_t> prime_coords(SfIndex x) const;
  SfIndex from_prime_coords(std::span<const std::uint32_t> v) const;
  /// Unit vector e_k of the prime-field basis (x^j t^i with k = i l + j).
  SfIndex basis(unsigned k) const;

  /// (x_l, x_r) with x_l x = 1 = x x_r. Error: ZeroElement.
  std::pair<SfIndex, SfIndex> inverses(SfIndex x) const;

  NucleiReport nuclei() const;
  TPowerReport t_power_diagnostics(std::uint64_t closure_cap = 20000) const;

  /// Closure of `gens` under multiplication, sorted. Returns nothing once the
  /// closure grows past `cap`.
  std::optional<std::vector<SfIndex>> generated_subloop(const std::vector<SfIndex>& gens,
                                                        std::uint64_t cap) const;

  std::string format(SfIndex x) const;

 private:
  gf::Elem sig(gf::Elem x, unsigned j) const;
  NucleusInfo describe(const std::vector<linalg::Row>& basis) const;

  gf::Tower tower_;
  SkewPoly f_;
  unsigned m_;
  unsigned dim_;
  std::uint64_t k_size_;
  std::uint64_t size_;
  // sigma_[j * |K| + v] = sigma^j(v) for small K.
  std::vector<std::uint32_t> sigma_;
  // fshift_[s][i] = sigma^s(f_i).
  std::vector<std::vector<gf::Elem>> fshift_;
};

/// Nuclei by scanning all associators; only for tiny semifields (|S_f| <= 81
/// is the intended range). Returns the element sets of Nuc_l, Nuc_m, Nuc_r.
struct ScannedNuclei {
  std::vector<SfIndex> left, middle, right;
};
ScannedNuclei scan_nuclei(const Semifield& s);

}  // namespace semiloop
