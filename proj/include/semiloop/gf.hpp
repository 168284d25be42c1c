#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semiloop::gf {

/// Element of F_{p^l}: coordinates w.r.t. the power basis of the modulus root,
/// packed base p with coordinate i as digit i.
struct Elem {
  std::uint64_t value = 0;

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// The finite field F_{p^l} = Z/p[x]/(modulus).
///
/// Immutable after construction. Discrete-log and Zech tables are built for
/// fields with at most 2^20 elements; larger fields fall back to coordinate
/// arithmetic. Copies share the tables.
class Field {
 public:
  struct Options {
    /// Monic modulus, low-degree coefficient first (length l + 1).
    std::optional<std::vector<std::uint32_t>> modulus;
    bool build_tables = true;
    /// Reject a caller-supplied modulus whose root does not generate K^x.
    bool require_primitive_root = false;
  };

  static constexpr std::uint64_t kTableLimit = 1ULL << 20;
  static constexpr std::uint64_t kSizeLimit = 1ULL << 32;

  Field(std::uint32_t p, unsigned degree, Options opts);
  Field(std::uint32_t p, unsigned degree) : Field(p, degree, Options{}) {}

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return l_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Fixed generator of the multiplicative group.
  Elem primitive() const { return primitive_; }
  bool has_tables() const { return tables_ != nullptr; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t v) const;
  Elem from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Elem x) const;
  /// Unit vector x^j of the power basis.
  Elem basis(unsigned j) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  /// x^(p^j).
  Elem frobenius(Elem x, std::int64_t j) const;

  /// primitive()^k, k taken modulo |K| - 1.
  Elem exp(std::int64_t k) const;
  /// Discrete log to base primitive(); requires a nonzero argument.
  std::uint64_t log(Elem x) const;
  std::uint64_t multiplicative_order(Elem x) const;

  /// Accepts `0`, `g^k`, `g`, `[c0,c1,...]` or a bare integer (prime-field element).
  Elem parse(std::string_view text) const;
  /// `0` for zero, otherwise the coordinate vector `[c0,...,c_{l-1}]`.
  std::string format(Elem x) const;
  /// `p^l` descriptor.
  std::string descriptor() const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && l_ == other.l_ && modulus_ == other.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;   // log[value], log[0] unused
    std::vector<std::uint64_t> exp;   // exp[k] for k in [0, 2(q-1))
    std::vector<std::int64_t> zech;   // log(1 + g^d) or -1 when 1 + g^d = 0
    std::vector<std::uint64_t> frob;  // p^j mod (q-1)
  };

  Elem mul_slow(Elem a, Elem b) const;
  Elem pow_slow(Elem a, std::uint64_t e) const;
  Elem add_digits(Elem a, Elem b, bool negate_b) const;
  bool is_generator_slow(Elem g) const;

  std::uint32_t p_;
  unsigned l_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_;
  std::vector<std::uint64_t> order_prime_divisors_;
  std::shared_ptr<const Tables> tables_;
};

/// True when the monic polynomial (low-degree first) is irreducible over Z/p.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Lexicographically smallest (low-degree coefficient compared first) monic
/// irreducible degree-l polynomial over Z/p whose root is primitive.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned l);

struct FieldAutomorphism {
  unsigned exponent;  // x -> x^(p^exponent)
  bool fixes_base;    // pointwise identity on Fix(sigma)
};

struct NormKernel {
  Elem generator;
  std::uint64_t order;
};

/// K = F_{p^l} over F = F_{p^r} with sigma(x) = x^(p^r) of order n = l / r.
class Tower {
 public:
  Tower(Field field, unsigned r);

  const Field& field() const { return field_; }
  unsigned r() const { return r_; }
  unsigned n() const { return n_; }
  /// q = p^r = |F|.
  std::uint64_t q() const { return q_; }

  /// sigma^i(x); i is reduced modulo n and may be negative.
  Elem sigma(Elem x, std::int64_t i = 1) const;
  Elem norm(Elem x) const;
  bool in_fixed_field(Elem x) const;
  NormKernel norm_kernel() const;
  std::vector<FieldAutomorphism> automorphisms() const;

 private:
  Field field_;
  unsigned r_;
  unsigned n_;
  std::uint64_t q_;
};

/// Builds K = F_{p^(n r)} with sigma = Frob^r. Errors: NotPrime,
/// ReducibleModulus, NonPrimitiveModulusRoot, InvalidArgument.
Tower make_tower(std::uint32_t p, unsigned r, unsigned n, Field::Options opts = {});

/// Parses `p^l` (optionally followed by ` mod=[c0,...]`).
struct FieldDescriptor {
  std::uint32_t p = 0;
  unsigned l = 0;
  std::optional<std::vector<std::uint32_t>> modulus;
};
FieldDescriptor parse_field_descriptor(std::string_view text);

}  // namespace semiloop::gf
