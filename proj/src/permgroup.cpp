#include "semiloop/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "semiloop/error.hpp"

namespace semiloop::perm {

Perm Perm::identity(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return Perm(std::move(v));
}

Perm Perm::from_images(const std::vector<std::uint32_t>& images) {
  std::vector<bool> hit(images.size(), false);
  std::vector<Point> v(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || hit[images[i]]) {
      throw Error(ErrorCode::InvalidArgument, "image list is not a permutation");
    }
    hit[images[i]] = true;
    v[i] = static_cast<Point>(images[i]);
  }
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> v(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<Point>(i);
  return Perm(std::move(v));
}

BigInt Perm::order() const {
  BigInt r = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    r = r / boost::multiprecision::gcd(r, BigInt(len)) * len;
  }
  return r;
}

bool Perm::is_odd() const {
  std::size_t cycles = 0;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = img_[j]) seen[j] = true;
  }
  return (img_.size() - cycles) % 2 == 1;
}

Perm operator*(const Perm& a, const Perm& b) {
  std::vector<Point> v(a.img_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.img_[a.img_[i]];
  return Perm(std::move(v));
}

// ---------------------------------------------------------------------------

Bsgs::SiftResult Bsgs::sift(Perm g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const std::int32_t s = lv.slot[g(lv.base_point)];
    if (s < 0) return {std::move(g), l};
    g = g * lv.u_inv[static_cast<std::size_t>(s)];
  }
  return {std::move(g), levels_.size()};
}

Point Bsgs::first_moved(const Perm& g) const {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g(static_cast<Point>(i)) != i) return static_cast<Point>(i);
  }
  throw Error(ErrorCode::InvariantViolation, "identity has no moved point");
}

void Bsgs::extend_orbit(std::size_t l) {
  Level& lv = levels_[l];
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (std::size_t gi : lv.gens) {
      const Perm& s = strong_[gi];
      const Point y = s(lv.orbit[k]);
      if (lv.slot[y] >= 0) continue;
      lv.slot[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(y);
      Perm uy = lv.u[k] * s;
      lv.u_inv.push_back(uy.inverse());
      lv.u.push_back(std::move(uy));
    }
  }
}

void Bsgs::add_strong(Perm g, std::size_t level) {
  if (level == levels_.size()) {
    Level lv;
    lv.base_point = first_moved(g);
    lv.slot.assign(degree_, -1);
    lv.slot[lv.base_point] = 0;
    lv.orbit.push_back(lv.base_point);
    lv.u.push_back(Perm::identity(degree_));
    lv.u_inv.push_back(Perm::identity(degree_));
    levels_.push_back(std::move(lv));
  }
  strong_.push_back(std::move(g));
  const std::size_t idx = strong_.size() - 1;
  for (std::size_t l = 0; l <= level; ++l) {
    levels_[l].gens.push_back(idx);
    extend_orbit(l);
  }
}

bool Bsgs::verify_and_complete() {
  bool grew = false;
  std::size_t l = levels_.size();
  while (l-- > 0) {
    bool restart = false;
    const Level& lv = levels_[l];
    for (std::size_t k = 0; !restart && k < lv.orbit.size(); ++k) {
      for (std::size_t gi : lv.gens) {
        const Perm& s = strong_[gi];
        const Point y = s(lv.orbit[k]);
        Perm sch = lv.u[k] * s * lv.u_inv[static_cast<std::size_t>(lv.slot[y])];
        SiftResult r = sift(std::move(sch), l + 1);
        if (r.residue.is_identity()) continue;
        add_strong(std::move(r.residue), r.level);
        grew = true;
        // Levels l..r.level received a new generator; recheck from the deepest.
        l = r.level + 1;
        restart = true;
        break;
      }
    }
  }
  return grew;
}

Bsgs Bsgs::build(std::size_t degree, const std::vector<Perm>& gens, const Options& opts) {
  if (degree > opts.degree_cap) {
    throw Error(ErrorCode::DegreeCapExceeded,
                "permutation degree " + std::to_string(degree) + " above cap " + std::to_string(opts.degree_cap));
  }
  for (const auto& g : gens) {
    if (g.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "generator degree differs from group degree");
  }
  Bsgs G;
  G.degree_ = degree;
  for (Point b : opts.base_prefix) {
    Level lv;
    lv.base_point = b;
    lv.slot.assign(degree, -1);
    lv.slot[b] = 0;
    lv.orbit.push_back(b);
    lv.u.push_back(Perm::identity(degree));
    lv.u_inv.push_back(Perm::identity(degree));
    G.levels_.push_back(std::move(lv));
  }
  std::vector<Perm> nontrivial;
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    nontrivial.push_back(g);
    SiftResult r = G.sift(g);
    if (!r.residue.is_identity()) G.add_strong(std::move(r.residue), r.level);
  }

  if (!nontrivial.empty()) {
    // Product replacement random elements.
    std::mt19937_64 rng(opts.seed);
    std::vector<Perm> state;
    while (state.size() < std::max<std::size_t>(10, nontrivial.size())) {
      state.push_back(nontrivial[state.size() % nontrivial.size()]);
    }
    Perm acc = Perm::identity(degree);
    std::uniform_int_distribution<std::size_t> pick(0, state.size() - 1);
    auto step = [&]() {
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      const bool flip = rng() & 1;
      const Perm& rhs = (rng() & 1) ? state[j] : state[j].inverse();
      state[i] = flip ? rhs * state[i] : state[i] * rhs;
      acc = acc * state[i];
      return acc;
    };
    for (int w = 0; w < 50; ++w) step();
    unsigned streak = 0;
    while (streak < opts.random_streak) {
      SiftResult r = G.sift(step());
      if (r.residue.is_identity()) {
        ++streak;
      } else {
        G.add_strong(std::move(r.residue), r.level);
        streak = 0;
      }
    }
  }
  G.verify_and_complete();
  return G;
}

BigInt Bsgs::order() const {
  BigInt r = 1;
  for (const auto& lv : levels_) r *= lv.orbit.size();
  return r;
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> Bsgs::orbit_lengths() const {
  std::vector<std::size_t> o;
  for (const auto& lv : levels_) o.push_back(lv.orbit.size());
  return o;
}

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "permutation degree differs from group degree");
  return sift(g).residue.is_identity();
}

bool Bsgs::extend(const Perm& g) {
  if (g.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "permutation degree differs from group degree");
  SiftResult r = sift(g);
  if (r.residue.is_identity()) return false;
  add_strong(std::move(r.residue), r.level);
  verify_and_complete();
  return true;
}

std::vector<Point> Bsgs::orbit(Point x) const {
  std::vector<Point> out{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : strong_) {
      const Point y = s(out[k]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

bool Bsgs::is_transitive() const { return degree_ <= 1 || orbit(0).size() == degree_; }

BigInt Bsgs::stabilizer_order(Point x) const {
  if (x >= degree_ && degree_ > 0) throw Error(ErrorCode::InvalidArgument, "point outside the permutation domain");
  if (!is_transitive()) throw Error(ErrorCode::NotTransitive, "group is not transitive");
  return order() / degree_;
}

std::vector<Perm> Bsgs::stabilizer_generators() const {
  std::vector<Perm> out;
  if (levels_.size() < 2) return out;
  for (std::size_t gi : levels_[1].gens) out.push_back(strong_[gi]);
  return out;
}

// ---------------------------------------------------------------------------

std::uint32_t Cayley::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order(); ++b) {
    if (table[a][b] == identity) return b;
  }
  throw Error(ErrorCode::InvariantViolation, "element without inverse in Cayley table");
}

std::uint32_t Cayley::power(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = identity;
  for (std::uint64_t i = 0; i < k; ++i) r = table[r][a];
  return r;
}

std::uint64_t Cayley::element_order(std::uint32_t a) const {
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != identity; x = table[x][a]) ++k;
  return k;
}

Cayley cayley_from_perms(const std::vector<Perm>& elements) {
  std::map<Perm, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  Cayley c;
  bool have_identity = false;
  for (std::uint32_t i = 0; i < elements.size(); ++i) {
    if (elements[i].is_identity()) {
      c.identity = i;
      have_identity = true;
    }
  }
  if (!have_identity) throw Error(ErrorCode::NotClosed, "element set lacks the identity");
  c.table.assign(elements.size(), std::vector<std::uint32_t>(elements.size()));
  for (std::uint32_t i = 0; i < elements.size(); ++i) {
    for (std::uint32_t j = 0; j < elements.size(); ++j) {
      auto it = index.find(elements[i] * elements[j]);
      if (it == index.end()) throw Error(ErrorCode::NotClosed, "element set is not closed under composition");
      c.table[i][j] = it->second;
    }
  }
  return c;
}

std::string GroupId::tag() const {
  switch (kind) {
    case Kind::Trivial: return "1";
    case Kind::Cyclic: return "Z/" + std::to_string(a);
    case Kind::Dicyclic: return "Dic_" + std::to_string(a);
    case Kind::Semidirect:
      return "Z/" + std::to_string(a) + " x|_" + std::to_string(q) + " Z/" + std::to_string(b);
    case Kind::Abelian: return "abelian";
    case Kind::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::vector<std::uint64_t> orders_of(const Cayley& g) {
  std::vector<std::uint64_t> o(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) o[i] = g.element_order(i);
  return o;
}

}  // namespace

std::optional<GroupId> find_dicyclic(const Cayley& g, std::uint64_t k) {
  if (k < 2) return std::nullopt;
  const auto ord = orders_of(g);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (ord[x] != 2 * k) continue;
    const std::uint32_t xk = g.power(x, k);
    const std::uint32_t xinv = g.inverse(x);
    for (std::uint32_t y = 0; y < g.order(); ++y) {
      if (g.mul(y, y) != xk) continue;
      if (g.mul(g.mul(y, x), g.inverse(y)) != xinv) continue;
      GroupId id;
      id.kind = GroupId::Kind::Dicyclic;
      id.order = 4 * k;
      id.a = k;
      id.witness = {x, y};
      return id;
    }
  }
  return std::nullopt;
}

std::optional<GroupId> find_semidirect(const Cayley& g, std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  if (a == 0 || b == 0) return std::nullopt;
  const auto ord = orders_of(g);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (ord[x] != a) continue;
    std::vector<bool> in_x(g.order(), false);
    for (std::uint32_t p = g.identity, i = 0; i < a; ++i, p = g.mul(p, x)) in_x[p] = true;
    const std::uint32_t target = g.power(x, q % a);
    for (std::uint32_t y = 0; y < g.order(); ++y) {
      if (ord[y] != b) continue;
      if (g.mul(g.mul(y, x), g.inverse(y)) != target) continue;
      bool trivial_meet = true;
      for (std::uint32_t p = y, i = 1; i < b && trivial_meet; ++i, p = g.mul(p, y)) trivial_meet = !in_x[p];
      if (!trivial_meet) continue;
      GroupId id;
      id.kind = GroupId::Kind::Semidirect;
      id.order = a * b;
      id.a = a;
      id.b = b;
      id.q = q % a;
      id.witness = {x, y};
      return id;
    }
  }
  return std::nullopt;
}

GroupId identify_small_group(const Cayley& g) {
  const std::uint64_t n = g.order();
  if (n > 512) throw Error(ErrorCode::TooLarge, "group identification is limited to order 512");
  GroupId id;
  id.order = n;
  const auto ord = orders_of(g);
  for (auto o : ord) ++id.spectrum[o];
  if (n == 1) {
    id.kind = GroupId::Kind::Trivial;
    return id;
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (ord[x] == n) {
      id.kind = GroupId::Kind::Cyclic;
      id.a = n;
      id.witness = {x};
      return id;
    }
  }
  bool abelian = true;
  for (std::uint32_t x = 0; x < n && abelian; ++x) {
    for (std::uint32_t y = x + 1; y < n && abelian; ++y) abelian = g.mul(x, y) == g.mul(y, x);
  }
  if (abelian) {
    id.kind = GroupId::Kind::Abelian;
    return id;
  }
  if (n % 4 == 0) {
    if (auto d = find_dicyclic(g, n / 4)) {
      d->spectrum = id.spectrum;
      return *d;
    }
  }
  // Non-abelian split extensions of a cyclic normal subgroup by a cyclic one,
  // largest normal factor first.
  auto divs = nt::divisors(n);
  std::reverse(divs.begin(), divs.end());
  for (std::uint64_t a : divs) {
    if (a == 1 || a == n) continue;
    for (std::uint64_t q = 2; q < a; ++q) {
      if (nt::gcd(q, a) != 1) continue;
      if (auto s = find_semidirect(g, a, n / a, q)) {
        s->spectrum = id.spectrum;
        return *s;
      }
    }
  }
  return id;
}

}  // namespace semiloop::perm
