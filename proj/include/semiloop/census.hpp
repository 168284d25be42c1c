#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiloop/gf.hpp"
#include "semiloop/numtheory.hpp"
#include "semiloop/skewpoly.hpp"

namespace semiloop::census {

/// Number of elements of F_{q^m} lying in a proper subfield F_{q^e}, e | m, e < m.
std::uint64_t theta(std::uint64_t q, unsigned m);

struct IrreducibleCount {
  std::uint64_t mobius = 0;     // (1/m) sum_{d|m} mu(d) q^{m/d}
  std::uint64_t via_theta = 0;  // (q^m - theta) / m
  /// Explicit enumeration, present when q^m <= 2^16.
  std::optional<std::uint64_t> enumerated;
};

/// N(q,m), the number of monic irreducible degree-m polynomials over F_q.
/// Error: FormulaMismatch when the computations disagree.
IrreducibleCount count_central_irreducible(std::uint64_t q, unsigned m);

/// Monic irreducible degree-m polynomials over F_q, each as its m lower
/// coefficients (constant term first), in increasing packed order.
/// Error: TooLarge above q^m = 2^16.
std::vector<std::vector<gf::Elem>> central_irreducibles(std::uint64_t q, unsigned m);

struct OrbitCount {
  std::uint64_t orbits = 0;
  std::uint64_t irreducibles = 0;
  /// (q^m - theta) / (m r (q-1)) as a real number, and (q^m - theta) / m.
  double lower = 0;
  std::uint64_t upper = 0;
  bool sandwich_ok = false;
  /// Smallest member of each orbit (packed constant-term-first, base q).
  std::vector<std::uint64_t> representatives;
};

/// M(q,m): orbits of GammaL(1,q) on the central irreducibles under
/// f -> lambda^{-m} f^rho(lambda y). Error: TooLarge above q^m = 2^16.
OrbitCount gammaL_orbit_count(std::uint64_t q, unsigned m);

struct NumbBound {
  /// "i" when m does not divide q - 1, "ii" when m is a prime dividing q - 1.
  std::string kind;
  std::uint64_t value = 0;
};

/// The upper bound on isomorphism classes of nonassociative cyclic algebras,
/// when one of the two formulas applies.
std::optional<NumbBound> numb_bound(std::uint64_t q, unsigned m);

struct CyclicClasses {
  /// Values a giving an admissible t^m - a, in increasing order.
  std::vector<gf::Elem> candidates;
  /// Candidates agree with the elements lying in no proper subfield of K/F.
  bool subfield_criterion_agrees = false;
  /// Smallest a of each class, increasing.
  std::vector<gf::Elem> representatives;
  std::vector<std::uint64_t> class_sizes;
  std::optional<NumbBound> bound;
  bool within_bound = true;
};

/// Classes of (K/F, sigma, a) under sigma^i(a) = k b, k in F^x.
/// Error: PreconditionViolated unless n = m and q^m <= 2^16.
CyclicClasses cyclic_algebra_classes(const gf::Tower& tw, unsigned m);

/// u != 0 with deg u < m and g u = 0 mod_r f, or nothing. Error: TooLarge
/// above |K|^m = 2^16.
std::optional<SkewPoly> similarity_witness(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g);

struct SimilarityPartition {
  /// Indices into the input, each class increasing, classes by first member.
  std::vector<std::vector<std::size_t>> classes;
  /// The relation came out symmetric on every tested pair.
  bool symmetric = false;
  bool reflexive = false;
};

/// Error: TooLarge above |K|^m = 2^16.
SimilarityPartition similarity_classes(const gf::Tower& tw, unsigned m, const std::vector<SkewPoly>& fs);

struct SandlerResult {
  bool exists = false;
  /// gcd((p^l - 1)(p^r - 1), p^{mr} - 1), compared against p^r - 1.
  BigInt criterion_gcd;
  /// g = gcd((p^{mr} - 1)/(p^r - 1), p^l - 1); a = alpha^u is admissible iff g does not divide u.
  std::uint64_t g = 0;
  std::uint64_t period = 0;  // p^l - 1
};

/// Integer-only existence test for t^m - a. Error: PreconditionViolated unless
/// r | l, r < l, and m is 2, 3 or a prime dividing p^r - 1.
SandlerResult sandler_exists(std::uint32_t p, unsigned r, unsigned l, unsigned m);
bool sandler_admissible(const SandlerResult& s, std::uint64_t u);

struct SandlerDirect {
  /// Exponents u in [0, p^l - 1) with t^m - alpha^u admissible by brute force.
  std::vector<std::uint64_t> admissible;
  bool exists = false;
  /// Both the existence verdict and the exponent set match the gcd criterion.
  bool agrees = false;
};

/// Brute-force counterpart of sandler_exists; needs p^{lm} <= 2^16.
/// Errors: as sandler_exists, TooLarge.
SandlerDirect sandler_direct(std::uint32_t p, unsigned r, unsigned l, unsigned m);

struct Signature {
  std::uint64_t center = 0, left = 0, middle = 0, right = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct BoundCheck {
  std::string name;
  bool holds = false;
};

struct CensusReport {
  std::uint64_t q = 0;
  unsigned n = 0, m = 0, r = 0;
  std::uint64_t theta = 0;
  IrreducibleCount N;
  std::optional<std::uint64_t> M;
  double M_lower = 0;
  std::uint64_t M_upper = 0;
  std::optional<NumbBound> numb;
  /// q^{nm} and q^{nm} sqrt(log2 q^{nm}).
  double order = 0;
  double kantor = 0;
  /// Admissible f of degree m in K[t; sigma], when |K|^m <= 4096.
  std::optional<std::uint64_t> admissible_f;
  /// Isomorphism classes of nonassociative cyclic algebras (n = m).
  std::optional<std::uint64_t> observed_classes;
  Signature expected_signature;
  /// Distinct invariant tuples among admissible f with the expected signature;
  /// a lower bound on the number of isotopy classes counted by A(q,n,m).
  std::optional<std::uint64_t> isotopy_lower;
  std::vector<BoundCheck> checks;

  bool all_hold() const;
};

/// Error: InvalidArgument for q not a prime power, n < 2 or m < 2.
CensusReport bounds_report(std::uint64_t q, unsigned n, unsigned m);

}  // namespace semiloop::census
