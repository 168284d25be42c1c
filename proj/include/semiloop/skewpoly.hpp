#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "semiloop/gf.hpp"

namespace semiloop {

/// Element of the twisted polynomial ring K[t; sigma]; coefficient i belongs
/// to t^i. Canonical form has a nonzero leading coefficient, the zero
/// polynomial is the empty sequence and has degree -1.
class SkewPoly {
 public:
  SkewPoly() = default;
  explicit SkewPoly(std::vector<gf::Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static SkewPoly constant(gf::Elem a) { return SkewPoly(std::vector<gf::Elem>{a}); }
  /// a * t^i.
  static SkewPoly monomial(gf::Elem a, unsigned i);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  gf::Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : gf::Elem{0}; }
  gf::Elem leading() const { return c_.empty() ? gf::Elem{0} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == gf::Elem{1}; }
  const std::vector<gf::Elem>& coeffs() const { return c_; }

  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<gf::Elem> c_;
};

namespace skew {

SkewPoly add(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g);
SkewPoly sub(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g);
/// a * f (left scalar multiplication).
SkewPoly scale(const gf::Tower& tw, gf::Elem a, const SkewPoly& f);
/// Product under (a t^i)(b t^j) = a sigma^i(b) t^(i+j).
SkewPoly mul(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g);

struct DivMod {
  SkewPoly quotient;
  SkewPoly remainder;
};

/// g = quotient * f + remainder with deg(remainder) < deg(f).
DivMod right_divmod(const gf::Tower& tw, const SkewPoly& g, const SkewPoly& f);
SkewPoly right_mod(const gf::Tower& tw, const SkewPoly& g, const SkewPoly& f);

/// a^{-1} f for the leading coefficient a.
SkewPoly make_monic(const gf::Tower& tw, const SkewPoly& f);

/// Number of monic right-divisor candidates scanned by is_irreducible.
double irreducibility_cost(const gf::Tower& tw, unsigned degree);

/// Brute-force right-divisor search over all monic candidates of degree 1..deg-1.
bool is_irreducible(const gf::Tower& tw, const SkewPoly& f);

/// Degree-2 test: t^2 - a1 t - a0 is irreducible iff z sigma(z) + a1 z - a0 = 0
/// has no solution z in K.
bool is_irreducible_quadratic(const gf::Tower& tw, const SkewPoly& f);

/// True iff Rf is two-sided, checked through f*t and f*z for z the primitive
/// element of K.
bool is_right_invariant(const gf::Tower& tw, const SkewPoly& f);

/// True when every coefficient lies in Fix(sigma).
bool in_fixed_ring(const gf::Tower& tw, const SkewPoly& f);

/// Calls `visit` with every monic degree-m polynomial, low-degree coefficient
/// compared first; stops early when `visit` returns false.
void for_each_monic(const gf::Tower& tw, unsigned m, const std::function<bool(const SkewPoly&)>& visit);

/// Monic degree-m polynomials that are irreducible and not right-invariant.
std::vector<SkewPoly> enumerate_admissible(const gf::Tower& tw, unsigned m);

/// Literal like `t^2 - g^5*t - [1,0]`; coefficients use the field element syntax.
SkewPoly parse(const gf::Tower& tw, std::string_view text);
std::string format(const gf::Tower& tw, const SkewPoly& f);

}  // namespace skew
}  // namespace semiloop
