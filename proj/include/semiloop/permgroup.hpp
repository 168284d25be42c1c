#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semiloop/numtheory.hpp"

namespace semiloop::perm {

using Point = std::uint16_t;

/// Permutation of {0, ..., N-1}; images[i] is the image of point i.
/// Products read left to right: (a * b)(x) = b(a(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images) : img_(std::move(images)) {}
  static Perm identity(std::size_t n);
  /// Checks that `images` is a bijection; throws InvalidArgument otherwise.
  static Perm from_images(const std::vector<std::uint32_t>& images);

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }
  bool is_identity() const;
  Perm inverse() const;
  /// Order as an integer (lcm of cycle lengths).
  BigInt order() const;
  bool is_odd() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> img_;
};

/// Base and strong generating set.
class Bsgs {
 public:
  static constexpr std::size_t kDegreeCap = 5000;

  struct Options {
    std::uint64_t seed = 1;
    /// Points placed first in the base, in this order.
    std::vector<Point> base_prefix;
    /// Consecutive trivially-sifting random elements that end the random phase.
    unsigned random_streak = 40;
    std::size_t degree_cap = kDegreeCap;
  };

  /// Builds an exact BSGS of <gens>. Errors: DegreeMismatch, DegreeCapExceeded.
  static Bsgs build(std::size_t degree, const std::vector<Perm>& gens, const Options& opts);
  static Bsgs build(std::size_t degree, const std::vector<Perm>& gens) { return build(degree, gens, Options{}); }

  std::size_t degree() const { return degree_; }
  BigInt order() const;
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  const std::vector<Perm>& strong_generators() const { return strong_; }

  /// Membership by sifting. Error: DegreeMismatch.
  bool contains(const Perm& g) const;
  /// Extends the group by g when g is not already a member; returns true when
  /// the group grew. The result is again an exact BSGS.
  bool extend(const Perm& g);

  /// Orbit of a point under the whole group.
  std::vector<Point> orbit(Point x) const;
  bool is_transitive() const;

  /// |G| / N for a transitive group. Error: NotTransitive.
  BigInt stabilizer_order(Point x) const;
  /// Generators of the stabilizer of the first base point.
  std::vector<Perm> stabilizer_generators() const;

 private:
  struct Level {
    Point base_point;
    std::vector<std::size_t> gens;           // indices into strong_
    std::vector<std::int32_t> slot;          // point -> index in orbit, or -1
    std::vector<Point> orbit;
    std::vector<Perm> u, u_inv;              // u[k] maps base_point to orbit[k]
  };

  struct SiftResult {
    Perm residue;
    std::size_t level;  // first level where sifting stopped
  };

  SiftResult sift(Perm g, std::size_t from_level = 0) const;
  void add_strong(Perm g, std::size_t level);
  void extend_orbit(std::size_t level);
  Point first_moved(const Perm& g) const;
  bool verify_and_complete();

  std::size_t degree_ = 0;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

/// Cayley table of a finite group: table[i][j] = index of e_i * e_j.
struct Cayley {
  std::vector<std::vector<std::uint32_t>> table;
  std::uint32_t identity = 0;

  std::size_t order() const { return table.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a][b]; }
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint32_t power(std::uint32_t a, std::uint64_t k) const;
  std::uint64_t element_order(std::uint32_t a) const;
};

/// Table of a set of permutations closed under composition. Error: NotClosed.
Cayley cayley_from_perms(const std::vector<Perm>& elements);

struct GroupId {
  enum class Kind { Trivial, Cyclic, Dicyclic, Semidirect, Abelian, Unknown };
  Kind kind = Kind::Unknown;
  std::uint64_t order = 0;
  /// Cyclic: a = order. Dicyclic: a = k (order 4k). Semidirect: Z/a x|_q Z/b.
  std::uint64_t a = 0, b = 0, q = 0;
  /// Element indices realizing the presentation (generator, or x then y).
  std::vector<std::uint32_t> witness;
  /// element order -> number of elements of that order.
  std::map<std::uint64_t, std::uint64_t> spectrum;

  std::string tag() const;
};

/// Witness-based identification for |G| <= 512. Error: TooLarge.
GroupId identify_small_group(const Cayley& g);

/// Searches x of order 2k and y with y^2 = x^k, y x y^-1 = x^-1.
std::optional<GroupId> find_dicyclic(const Cayley& g, std::uint64_t k);
/// Searches x of order a and y of order b with <x> and <y> meeting trivially
/// and y x y^-1 = x^q.
std::optional<GroupId> find_semidirect(const Cayley& g, std::uint64_t a, std::uint64_t b, std::uint64_t q);

}  // namespace semiloop::perm
