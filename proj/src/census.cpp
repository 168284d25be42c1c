#include "semiloop/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "semiloop/error.hpp"
#include "semiloop/loops.hpp"
#include "semiloop/semifield.hpp"

namespace semiloop::census {

namespace {

constexpr std::uint64_t kEnumLimit = 1ULL << 16;

std::pair<std::uint32_t, unsigned> split_q(std::uint64_t q) {
  const auto [p, r] = nt::prime_power(q);
  if (p == 0 || p > UINT32_MAX) throw Error(ErrorCode::InvalidArgument, "q must be a prime power");
  return {static_cast<std::uint32_t>(p), r};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller index becomes the root, so roots are class minima.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

SkewPoly binomial(const gf::Tower& tw, unsigned m, gf::Elem a) {
  std::vector<gf::Elem> c(m + 1, tw.field().zero());
  c[0] = tw.field().neg(a);
  c[m] = tw.field().one();
  return SkewPoly(c);
}

bool admissible(const gf::Tower& tw, const SkewPoly& f) {
  if (f.coeff(0).is_zero()) return false;
  if (skew::is_right_invariant(tw, f)) return false;
  return f.degree() == 2 ? skew::is_irreducible_quadratic(tw, f) : skew::is_irreducible(tw, f);
}

}  // namespace

std::uint64_t theta(std::uint64_t q, unsigned m) {
  split_q(q);
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  const auto primes = nt::prime_divisors(m);
  std::int64_t total = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << primes.size()); ++mask) {
    std::uint64_t prod = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1) {
        prod *= primes[i];
        ++bits;
      }
    }
    const auto term = static_cast<std::int64_t>(nt::checked_pow(q, static_cast<unsigned>(m / prod)));
    total += bits % 2 == 1 ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

std::vector<std::vector<gf::Elem>> central_irreducibles(std::uint64_t q, unsigned m) {
  const auto [p, r] = split_q(q);
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  const std::uint64_t total = nt::checked_pow(q, m);
  if (total > kEnumLimit) throw Error(ErrorCode::TooLarge, "enumeration needs q^m <= 2^16");
  const gf::Field F(p, r);

  std::vector<std::uint32_t> add(q * q), mul(q * q);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      add[a * q + b] = static_cast<std::uint32_t>(F.add(gf::Elem{a}, gf::Elem{b}).value);
      mul[a * q + b] = static_cast<std::uint32_t>(F.mul(gf::Elem{a}, gf::Elem{b}).value);
    }
  }
  auto digits = [&](std::uint64_t idx, unsigned d) {
    std::vector<std::uint32_t> c(d + 1);
    for (unsigned i = 0; i < d; ++i, idx /= q) c[i] = static_cast<std::uint32_t>(idx % q);
    c[d] = 1;
    return c;
  };

  // Sieve: mark every product of two monic factors of positive degree.
  std::vector<bool> reducible(total, false);
  std::vector<std::uint32_t> prod(m + 1);
  for (unsigned d = 1; d <= m / 2; ++d) {
    const std::uint64_t ng = nt::checked_pow(q, d), nh = nt::checked_pow(q, m - d);
    for (std::uint64_t gi = 0; gi < ng; ++gi) {
      const auto g = digits(gi, d);
      for (std::uint64_t hi = 0; hi < nh; ++hi) {
        const auto h = digits(hi, m - d);
        std::fill(prod.begin(), prod.end(), 0);
        for (unsigned i = 0; i <= d; ++i) {
          if (g[i] == 0) continue;
          for (unsigned j = 0; j <= m - d; ++j) {
            prod[i + j] = add[prod[i + j] * q + mul[g[i] * q + h[j]]];
          }
        }
        std::uint64_t idx = 0;
        for (unsigned i = m; i-- > 0;) idx = idx * q + prod[i];
        reducible[idx] = true;
      }
    }
  }
  std::vector<std::vector<gf::Elem>> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (reducible[idx]) continue;
    std::vector<gf::Elem> c(m);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < m; ++i, v /= q) c[i] = gf::Elem{v % q};
    out.push_back(std::move(c));
  }
  return out;
}

IrreducibleCount count_central_irreducible(std::uint64_t q, unsigned m) {
  split_q(q);
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  IrreducibleCount c;
  std::int64_t sum = 0;
  for (std::uint64_t d : nt::divisors(m)) {
    sum += nt::mobius(d) * static_cast<std::int64_t>(nt::checked_pow(q, static_cast<unsigned>(m / d)));
  }
  c.mobius = static_cast<std::uint64_t>(sum) / m;
  c.via_theta = (nt::checked_pow(q, m) - theta(q, m)) / m;
  if (nt::checked_pow(q, m) <= kEnumLimit) c.enumerated = central_irreducibles(q, m).size();
  if (c.mobius != c.via_theta || (c.enumerated && *c.enumerated != c.mobius)) {
    throw Error(ErrorCode::FormulaMismatch, "N(" + std::to_string(q) + "," + std::to_string(m) +
                                                "): " + std::to_string(c.mobius) + " vs " +
                                                std::to_string(c.via_theta));
  }
  return c;
}

OrbitCount gammaL_orbit_count(std::uint64_t q, unsigned m) {
  const auto [p, r] = split_q(q);
  const std::uint64_t total = nt::checked_pow(q, m);
  if (total > kEnumLimit) throw Error(ErrorCode::TooLarge, "orbit enumeration needs q^m <= 2^16");
  const gf::Field F(p, r);
  const auto irr = central_irreducibles(q, m);

  auto pack = [&](const std::vector<gf::Elem>& c) {
    std::uint64_t idx = 0;
    for (unsigned i = m; i-- > 0;) idx = idx * q + c[i].value;
    return idx;
  };
  std::vector<std::int64_t> pos(total, -1);
  for (std::size_t i = 0; i < irr.size(); ++i) pos[pack(irr[i])] = static_cast<std::int64_t>(i);

  UnionFind uf(irr.size());
  std::vector<gf::Elem> img(m);
  for (std::uint64_t lv = 1; lv < q; ++lv) {
    const gf::Elem lambda{lv};
    for (unsigned j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < irr.size(); ++i) {
        // Coefficient i of lambda^{-m} f^rho(lambda y) is rho(c_i) lambda^{i-m}.
        for (unsigned k = 0; k < m; ++k) {
          img[k] = F.mul(F.frobenius(irr[i][k], j), F.pow(lambda, static_cast<std::int64_t>(k) - m));
        }
        const auto target = pos[pack(img)];
        if (target < 0) throw Error(ErrorCode::InvariantViolation, "GammaL image is not irreducible");
        uf.unite(i, static_cast<std::size_t>(target));
      }
    }
  }
  OrbitCount o;
  o.irreducibles = irr.size();
  for (std::size_t i = 0; i < irr.size(); ++i) {
    if (uf.find(i) == i) o.representatives.push_back(pack(irr[i]));
  }
  o.orbits = o.representatives.size();
  const double num = static_cast<double>(total - theta(q, m));
  o.lower = num / (static_cast<double>(m) * r * static_cast<double>(q - 1));
  o.upper = (total - theta(q, m)) / m;
  o.sandwich_ok = o.lower <= static_cast<double>(o.orbits) + 1e-9 && o.orbits <= o.upper;
  return o;
}

std::optional<NumbBound> numb_bound(std::uint64_t q, unsigned m) {
  const std::uint64_t qm = nt::checked_pow(q, m);
  const std::uint64_t den = static_cast<std::uint64_t>(m) * (q - 1);
  if ((q - 1) % m != 0) return NumbBound{"i", (qm - q) / den};
  if (nt::is_prime(m)) return NumbBound{"ii", m - 1 + (qm - q - (q - 1) * (m - 1)) / den};
  return std::nullopt;
}

CyclicClasses cyclic_algebra_classes(const gf::Tower& tw, unsigned m) {
  if (tw.n() != m) throw Error(ErrorCode::PreconditionViolated, "cyclic algebras need [K:F] = m");
  const auto& K = tw.field();
  if (K.order() > kEnumLimit) throw Error(ErrorCode::PreconditionViolated, "classification needs q^m <= 2^16");

  CyclicClasses c;
  std::vector<bool> is_candidate(K.order(), false);
  bool agrees = true;
  for (std::uint64_t v = 1; v < K.order(); ++v) {
    const gf::Elem a{v};
    const bool ok = admissible(tw, binomial(tw, m, a));
    bool in_subfield = false;
    for (std::uint64_t e : nt::divisors(m)) {
      if (e < m && tw.sigma(a, static_cast<std::int64_t>(e)) == a) in_subfield = true;
    }
    agrees = agrees && ok == !in_subfield;
    if (ok) {
      is_candidate[v] = true;
      c.candidates.push_back(a);
    }
  }
  c.subfield_criterion_agrees = agrees;

  std::vector<gf::Elem> base;
  for (std::uint64_t v = 1; v < K.order(); ++v) {
    if (tw.in_fixed_field(gf::Elem{v})) base.push_back(gf::Elem{v});
  }
  UnionFind uf(K.order());
  for (gf::Elem a : c.candidates) {
    for (unsigned i = 0; i < m; ++i) {
      const gf::Elem s = tw.sigma(a, i);
      for (gf::Elem k : base) {
        const gf::Elem b = K.div(s, k);
        if (!is_candidate[b.value]) throw Error(ErrorCode::InvariantViolation, "class left the admissible set");
        uf.unite(a.value, b.value);
      }
    }
  }
  std::map<std::uint64_t, std::uint64_t> sizes;
  for (gf::Elem a : c.candidates) ++sizes[uf.find(a.value)];
  for (const auto& [root, size] : sizes) {
    c.representatives.push_back(gf::Elem{root});
    c.class_sizes.push_back(size);
  }
  c.bound = numb_bound(tw.q(), m);
  c.within_bound = !c.bound || c.representatives.size() <= c.bound->value;
  return c;
}

std::optional<SkewPoly> similarity_witness(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g) {
  const auto& K = tw.field();
  const unsigned m = static_cast<unsigned>(f.degree());
  if (f.degree() < 1 || g.degree() != f.degree()) {
    throw Error(ErrorCode::InvalidArgument, "similarity needs f and g of the same positive degree");
  }
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) {
    total *= K.order();
    if (total > kEnumLimit) throw Error(ErrorCode::TooLarge, "similarity scan needs |K|^m <= 2^16");
  }
  std::vector<gf::Elem> c(m);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < m; ++i, v /= K.order()) c[i] = gf::Elem{v % K.order()};
    const SkewPoly u(c);
    if (skew::right_mod(tw, skew::mul(tw, g, u), f).is_zero()) return u;
  }
  return std::nullopt;
}

SimilarityPartition similarity_classes(const gf::Tower& tw, unsigned m, const std::vector<SkewPoly>& fs) {
  for (const auto& f : fs) {
    if (f.degree() != static_cast<int>(m)) throw Error(ErrorCode::InvalidArgument, "every f must have degree m");
  }
  const std::size_t n = fs.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = similarity_witness(tw, fs[i], fs[j]).has_value();

  SimilarityPartition out;
  out.reflexive = out.symmetric = true;
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.reflexive = out.reflexive && rel[i][i];
    for (std::size_t j = 0; j < n; ++j) {
      out.symmetric = out.symmetric && rel[i][j] == rel[j][i];
      if (rel[i][j]) uf.unite(i, j);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
  for (auto& [root, members] : groups) out.classes.push_back(std::move(members));
  return out;
}

SandlerResult sandler_exists(std::uint32_t p, unsigned r, unsigned l, unsigned m) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::PreconditionViolated, "p must be prime");
  if (r == 0 || l % r != 0 || r >= l) throw Error(ErrorCode::PreconditionViolated, "need r | l and r < l");
  const std::uint64_t pr = nt::checked_pow(p, r);
  const bool m_ok = m == 2 || m == 3 || (nt::is_prime(m) && (pr - 1) % m == 0);
  if (!m_ok) throw Error(ErrorCode::PreconditionViolated, "m must be 2, 3 or a prime dividing p^r - 1");

  using boost::multiprecision::gcd;
  const BigInt pl1 = nt::big_pow(p, l) - 1;
  const BigInt pr1 = nt::big_pow(p, r) - 1;
  const BigInt pmr1 = nt::big_pow(p, r * m) - 1;
  SandlerResult s;
  s.criterion_gcd = gcd(BigInt(pl1 * pr1), pmr1);
  s.exists = s.criterion_gcd > pr1;
  s.g = static_cast<std::uint64_t>(gcd(BigInt(pmr1 / pr1), pl1));
  s.period = static_cast<std::uint64_t>(pl1);
  return s;
}

bool sandler_admissible(const SandlerResult& s, std::uint64_t u) { return u % s.g != 0; }

SandlerDirect sandler_direct(std::uint32_t p, unsigned r, unsigned l, unsigned m) {
  const SandlerResult pred = sandler_exists(p, r, l, m);
  if (nt::checked_pow(p, l * m) > kEnumLimit) throw Error(ErrorCode::TooLarge, "direct check needs p^{lm} <= 2^16");
  const gf::Tower tw = gf::make_tower(p, r, l / r);
  const auto& K = tw.field();
  SandlerDirect d;
  bool same_set = true;
  for (std::uint64_t u = 0; u < pred.period; ++u) {
    const SkewPoly f = binomial(tw, m, K.exp(static_cast<std::int64_t>(u)));
    const bool ok = !skew::is_right_invariant(tw, f) && skew::is_irreducible(tw, f);
    if (ok) d.admissible.push_back(u);
    same_set = same_set && ok == sandler_admissible(pred, u);
  }
  d.exists = !d.admissible.empty();
  d.agrees = same_set && d.exists == pred.exists;
  return d;
}

bool CensusReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

CensusReport bounds_report(std::uint64_t q, unsigned n, unsigned m) {
  const auto [p, r] = split_q(q);
  if (n < 2 || m < 2) throw Error(ErrorCode::InvalidArgument, "n and m must be at least 2");
  CensusReport rep;
  rep.q = q;
  rep.n = n;
  rep.m = m;
  rep.r = r;
  rep.theta = theta(q, m);
  rep.N = count_central_irreducible(q, m);
  const std::uint64_t qm = nt::checked_pow(q, m);
  rep.M_upper = (qm - rep.theta) / m;
  rep.M_lower = static_cast<double>(qm - rep.theta) / (static_cast<double>(m) * r * static_cast<double>(q - 1));
  if (qm <= kEnumLimit) rep.M = gammaL_orbit_count(q, m).orbits;
  if (n == m) rep.numb = numb_bound(q, m);
  rep.order = std::pow(static_cast<double>(q), static_cast<double>(n) * m);
  rep.kantor = rep.order * std::sqrt(std::log2(rep.order));
  rep.expected_signature = {q, nt::checked_pow(q, n), nt::checked_pow(q, n), qm};

  const double size = rep.order;
  if (size <= 4096.0) {
    const gf::Tower tw = gf::make_tower(p, r, n);
    const auto fs = skew::enumerate_admissible(tw, m);
    rep.admissible_f = fs.size();
    // Invariant tuple: signature plus |Mlt| when the loop is small enough.
    std::set<std::pair<Signature, std::string>> seen;
    for (const auto& f : fs) {
      const Semifield s(tw, f);
      const auto nuc = s.nuclei();
      const Signature sig{nuc.center.size, nuc.left.size, nuc.middle.size, nuc.right.size};
      if (sig != rep.expected_signature) continue;
      std::string mlt;
      if (s.size() - 1 <= 80) mlt = nt::to_string(mlt_group(Loop::from_semifield(s)).order());
      seen.emplace(sig, mlt);
    }
    rep.isotopy_lower = seen.size();
  }
  if (n == m && nt::checked_pow(q, m) <= kEnumLimit) {
    rep.observed_classes = cyclic_algebra_classes(gf::make_tower(p, r, n), m).representatives.size();
  }

  const bool n_agree = rep.N.mobius == rep.N.via_theta && (!rep.N.enumerated || *rep.N.enumerated == rep.N.mobius);
  rep.checks.push_back({"N formulas agree", n_agree});
  if (rep.M) {
    rep.checks.push_back({"M lower sandwich", rep.M_lower <= static_cast<double>(*rep.M) + 1e-9});
    rep.checks.push_back({"M upper sandwich", *rep.M <= rep.M_upper});
  }
  if (rep.observed_classes && rep.numb) {
    rep.checks.push_back({"observed classes <= numb bound", *rep.observed_classes <= rep.numb->value});
  }
  if (rep.isotopy_lower) {
    rep.checks.push_back({"isotopy lower bound <= N", *rep.isotopy_lower <= rep.N.mobius});
    if (rep.M) rep.checks.push_back({"isotopy lower bound <= M", *rep.isotopy_lower <= *rep.M});
    rep.checks.push_back({"isotopy lower bound <= Kantor", static_cast<double>(*rep.isotopy_lower) < rep.kantor});
  }
  return rep;
}

}  // namespace semiloop::census
