#include "semiloop/loops.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "semiloop/error.hpp"

namespace semiloop {

namespace {

using Pt = Loop::Pt;

}  // namespace

Loop::Pt Loop::point_of(SfIndex x) {
  if (x == 0) throw Error(ErrorCode::ZeroElement, "zero is not a loop element");
  return static_cast<Pt>(x - 1);
}

Loop Loop::from_semifield(const Semifield& s) {
  const std::uint64_t n = s.size() - 1;
  if (n > kTableCap) {
    throw Error(ErrorCode::SizeCapExceeded,
                "loop of order " + std::to_string(n) + " above table cap " + std::to_string(kTableCap));
  }
  std::vector<Pt> table(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) table[a * n + b] = point_of(s.mul(a + 1, b + 1));
  }
  std::vector<Pt> seeds{point_of(s.t()), point_of(s.embed(s.field().primitive()))};
  return finish(n, std::move(table), std::move(seeds));
}

Loop Loop::from_table(std::size_t n, std::vector<Pt> table) {
  if (table.size() != n * n) throw Error(ErrorCode::InvalidArgument, "table size is not N*N");
  return finish(n, std::move(table), {});
}

Loop Loop::finish(std::size_t n, std::vector<Pt> table, std::vector<Pt> seeds) {
  if (n == 0 || n > 65535) throw Error(ErrorCode::InvalidArgument, "loop order must be in 1..65535");
  std::vector<Pt> ldiv(n * n), rdiv(n * n);
  std::vector<std::uint8_t> row(n), col(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(row.begin(), row.end(), 0);
    std::fill(col.begin(), col.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      const Pt ab = table[a * n + b];
      const Pt ba = table[b * n + a];
      if (ab >= n || ba >= n || row[ab] || col[ba]) {
        throw Error(ErrorCode::InvalidArgument, "table is not a Latin square");
      }
      row[ab] = col[ba] = 1;
      ldiv[a * n + ab] = static_cast<Pt>(b);
      rdiv[a * n + ba] = static_cast<Pt>(b);
    }
    if (table[a] != a || table[a * n] != a) throw Error(ErrorCode::InvalidArgument, "point 0 is not the identity");
  }
  Loop L;
  L.n_ = n;
  L.table_ = std::move(table);
  L.ldiv_ = std::move(ldiv);
  L.rdiv_ = std::move(rdiv);
  L.seeds_ = std::move(seeds);
  return L;
}

perm::Perm Loop::left(Pt a) const {
  std::vector<Pt> v(table_.begin() + static_cast<std::ptrdiff_t>(a * n_),
                    table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_));
  return perm::Perm(std::move(v));
}

perm::Perm Loop::right(Pt a) const {
  std::vector<Pt> v(n_);
  for (std::size_t x = 0; x < n_; ++x) v[x] = table_[x * n_ + a];
  return perm::Perm(std::move(v));
}

perm::Bsgs mlt_group(const Loop& L, const MltOptions& opts) {
  const std::size_t n = L.size();
  if (n > opts.degree_cap) {
    throw Error(ErrorCode::DegreeCapExceeded,
                "Mlt degree " + std::to_string(n) + " above cap " + std::to_string(opts.degree_cap));
  }
  std::vector<perm::Perm> gens;
  for (Pt s : L.seed_points()) {
    gens.push_back(L.left(s));
    gens.push_back(L.right(s));
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < opts.extra_random && n > 1; ++i) {
    const Pt a = static_cast<Pt>(pick(rng));
    gens.push_back(L.left(a));
    gens.push_back(L.right(a));
  }
  perm::Bsgs::Options bo;
  bo.seed = opts.seed;
  bo.base_prefix = {0};
  bo.degree_cap = opts.degree_cap;
  perm::Bsgs G = perm::Bsgs::build(n, gens, bo);
  // Stream every translation through the chain; extend on any sift failure.
  for (std::size_t a = 0; a < n; ++a) {
    G.extend(L.left(static_cast<Pt>(a)));
    G.extend(L.right(static_cast<Pt>(a)));
  }
  if (!G.is_transitive()) throw Error(ErrorCode::NotTransitive, "Mlt is not transitive");
  return G;
}

perm::Perm inner_mapping(const Loop& L, InnerKind kind, Pt x, Pt y) {
  const std::size_t n = L.size();
  std::vector<Pt> v(n);
  for (std::size_t zi = 0; zi < n; ++zi) {
    const Pt z = static_cast<Pt>(zi);
    switch (kind) {
      case InnerKind::T: v[z] = L.left_div(x, L.mul(z, x)); break;
      case InnerKind::L: v[z] = L.left_div(L.mul(y, x), L.mul(y, L.mul(x, z))); break;
      case InnerKind::R: v[z] = L.right_div(L.mul(L.mul(z, x), y), L.mul(x, y)); break;
    }
  }
  return perm::Perm(std::move(v));
}

InnReport inn_group(const Loop& L, const perm::Bsgs& mlt, std::uint64_t seed, std::size_t samples) {
  const std::size_t n = L.size();
  InnReport rep;
  rep.order = mlt.stabilizer_order(0);
  if (!mlt.base().empty() && mlt.base().front() != 0) {
    throw Error(ErrorCode::PreconditionViolated, "Mlt base must start at the identity point");
  }
  rep.generators = mlt.stabilizer_generators();

  auto ok = [&](const perm::Perm& g) { return g(0) == 0 && mlt.contains(g); };
  rep.samples_in_inn = true;
  for (std::size_t x = 0; x < n; ++x) {
    rep.samples_in_inn = rep.samples_in_inn && ok(inner_mapping(L, InnerKind::T, static_cast<Pt>(x)));
    ++rep.sampled;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const Pt x = static_cast<Pt>(pick(rng)), y = static_cast<Pt>(pick(rng));
    rep.samples_in_inn = rep.samples_in_inn && ok(inner_mapping(L, InnerKind::L, x, y)) &&
                         ok(inner_mapping(L, InnerKind::R, x, y));
    rep.sampled += 2;
  }

  if (n <= 80) {
    std::vector<perm::Perm> gens;
    for (std::size_t x = 0; x < n; ++x) {
      gens.push_back(inner_mapping(L, InnerKind::T, static_cast<Pt>(x)));
      for (std::size_t y = 0; y < n; ++y) {
        gens.push_back(inner_mapping(L, InnerKind::L, static_cast<Pt>(x), static_cast<Pt>(y)));
        gens.push_back(inner_mapping(L, InnerKind::R, static_cast<Pt>(x), static_cast<Pt>(y)));
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    perm::Bsgs::Options bo;
    bo.seed = seed;
    rep.generated_order = perm::Bsgs::build(n, gens, bo).order();
  }
  return rep;
}

Cyclicity cyclicity(const Loop& L) {
  const std::size_t n = L.size();
  Cyclicity c;
  for (std::size_t ai = 0; ai < n; ++ai) {
    const Pt a = static_cast<Pt>(ai);
    std::size_t left_len = 1, right_len = 1;
    for (Pt x = L.mul(a, a); x != a && left_len <= n; x = L.mul(x, a)) ++left_len;
    for (Pt x = L.mul(a, a); x != a && right_len <= n; x = L.mul(a, x)) ++right_len;
    if (left_len == n) {
      ++c.left_generators;
      if (!c.left_witness) c.left_witness = a;
    }
    if (right_len == n) {
      ++c.right_generators;
      if (!c.right_witness) c.right_witness = a;
    }
  }
  c.left_cyclic = c.left_generators > 0;
  c.right_cyclic = c.right_generators > 0;
  return c;
}

std::optional<std::vector<Pt>> loop_closure(const Loop& L, const std::vector<Pt>& gens, std::size_t limit) {
  std::vector<std::uint8_t> seen(L.size(), 0);
  std::vector<Pt> elems{0};
  seen[0] = 1;
  auto push = [&](Pt x) {
    if (!seen[x]) {
      seen[x] = 1;
      elems.push_back(x);
    }
  };
  for (Pt g : gens) push(g);
  for (std::size_t done = 0; done < elems.size(); ++done) {
    if (elems.size() > limit) return std::nullopt;
    const Pt a = elems[done];
    for (std::size_t j = 0; j <= done; ++j) {
      push(L.mul(a, elems[j]));
      push(L.mul(elems[j], a));
    }
  }
  if (elems.size() > limit) return std::nullopt;
  std::sort(elems.begin(), elems.end());
  return elems;
}

LagrangeReport subloops_and_lagrange(const Loop& L, std::size_t cap) {
  const std::size_t n = L.size();
  if (n > cap) throw Error(ErrorCode::SizeCapExceeded, "subloop lattice limited to order " + std::to_string(cap));
  // A proper subloop H satisfies a H disjoint from H for a outside H, so
  // |H| <= n / 2; closures beyond that are the whole loop.
  const std::size_t limit = n / 2;
  std::set<std::vector<Pt>> known;
  std::vector<std::vector<Pt>> subs;
  auto record = [&](std::optional<std::vector<Pt>> s) {
    if (s && known.insert(*s).second) subs.push_back(std::move(*s));
  };
  for (std::size_t x = 0; x < n; ++x) record(loop_closure(L, {static_cast<Pt>(x)}, limit));

  auto contains = [](const std::vector<Pt>& big, const std::vector<Pt>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (std::size_t k = 0; k < subs.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& a = subs[j];
      const auto& b = subs[k];
      if (contains(a, b) || contains(b, a)) continue;
      std::vector<Pt> gens;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(gens));
      record(loop_closure(L, gens, limit));
    }
  }
  std::vector<Pt> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Pt>(i);
  if (known.insert(all).second) subs.push_back(all);

  std::sort(subs.begin(), subs.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(x.size(), std::cref(x)) < std::make_tuple(y.size(), std::cref(y));
  });
  LagrangeReport rep;
  rep.subloops = subs;
  for (const auto& s : subs) rep.orders.push_back(s.size());
  rep.weak = std::all_of(subs.begin(), subs.end(), [&](const auto& s) { return n % s.size() == 0; });
  rep.strong = true;
  for (std::size_t i = 0; i < subs.size() && rep.strong; ++i) {
    for (std::size_t j = 0; j < i && rep.strong; ++j) {
      if (contains(subs[i], subs[j]) && subs[i].size() % subs[j].size() != 0) rep.strong = false;
    }
  }
  return rep;
}

LoopNuclei loop_nuclei(const Loop& L) {
  const std::size_t n = L.size();
  LoopNuclei out;
  auto assoc = [&](Pt x, Pt y, Pt z) { return L.mul(L.mul(x, y), z) == L.mul(x, L.mul(y, z)); };
  for (std::size_t xi = 0; xi < n; ++xi) {
    const Pt x = static_cast<Pt>(xi);
    bool l = true, m = true, r = true;
    for (std::size_t y = 0; y < n && (l || m || r); ++y) {
      for (std::size_t z = 0; z < n && (l || m || r); ++z) {
        const Pt yy = static_cast<Pt>(y), zz = static_cast<Pt>(z);
        l = l && assoc(x, yy, zz);
        m = m && assoc(yy, x, zz);
        r = r && assoc(yy, zz, x);
      }
    }
    if (l) out.left.push_back(x);
    if (m) out.middle.push_back(x);
    if (r) out.right.push_back(x);
  }
  return out;
}

namespace {

// Per-point isomorphism invariants.
using Signature = std::tuple<std::size_t, std::size_t, std::size_t, bool, bool, bool>;

std::vector<Signature> signatures(const Loop& L) {
  const std::size_t n = L.size();
  const LoopNuclei nuc = loop_nuclei(L);
  std::vector<std::uint8_t> in_l(n, 0), in_m(n, 0), in_r(n, 0);
  for (Pt x : nuc.left) in_l[x] = 1;
  for (Pt x : nuc.middle) in_m[x] = 1;
  for (Pt x : nuc.right) in_r[x] = 1;
  std::vector<Signature> sig(n);
  for (std::size_t ai = 0; ai < n; ++ai) {
    const Pt a = static_cast<Pt>(ai);
    std::size_t lp = 1, rp = 1, comm = 0;
    for (Pt x = a; x != 0; x = L.mul(x, a)) ++lp;
    for (Pt x = a; x != 0; x = L.mul(a, x)) ++rp;
    for (std::size_t y = 0; y < n; ++y) comm += L.mul(a, static_cast<Pt>(y)) == L.mul(static_cast<Pt>(y), a);
    sig[a] = {lp, rp, comm, in_l[a] != 0, in_m[a] != 0, in_r[a] != 0};
  }
  return sig;
}

struct Op {
  Pt a, b, c;
};

class IsoSearch {
 public:
  IsoSearch(const Loop& a, const Loop& b, bool count_all)
      : A_(a), B_(b), count_all_(count_all), sa_(signatures(a)), sb_(signatures(b)) {}

  bool signatures_match() const {
    auto x = sa_, y = sb_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  void run() {
    choose_generators();
    img_.assign(A_.size(), 0);
    search(0);
  }

  std::uint64_t found() const { return found_; }
  const std::optional<std::vector<Pt>>& witness() const { return witness_; }

 private:
  void choose_generators() {
    const std::size_t n = A_.size();
    std::map<Signature, std::size_t> freq;
    for (const auto& s : sb_) ++freq[s];
    std::vector<Pt> cur{0};
    while (cur.size() < n) {
      std::vector<std::uint8_t> in(n, 0);
      for (Pt x : cur) in[x] = 1;
      std::optional<Pt> best;
      std::size_t best_freq = SIZE_MAX;
      for (std::size_t x = 0; x < n; ++x) {
        if (in[x]) continue;
        const std::size_t f = freq[sa_[x]];
        if (f < best_freq) {
          best_freq = f;
          best = static_cast<Pt>(x);
        }
      }
      gens_.push_back(*best);
      ops_.push_back(closure_ops(gens_));
      cur = *loop_closure(A_, gens_, n);
    }
  }

  // Products visited while closing the generator set; replaying them on
  // candidate images both extends and checks the map.
  std::vector<Op> closure_ops(const std::vector<Pt>& gens) const {
    const std::size_t n = A_.size();
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Pt> elems{0};
    seen[0] = 1;
    for (Pt g : gens) {
      if (!seen[g]) {
        seen[g] = 1;
        elems.push_back(g);
      }
    }
    std::vector<Op> ops;
    for (std::size_t done = 0; done < elems.size(); ++done) {
      const Pt a = elems[done];
      for (std::size_t j = 0; j <= done; ++j) {
        const Pt b = elems[j];
        for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          const Pt c = A_.mul(x, y);
          ops.push_back({x, y, c});
          if (!seen[c]) {
            seen[c] = 1;
            elems.push_back(c);
          }
        }
      }
    }
    return ops;
  }

  bool replay(std::size_t level) {
    const std::size_t n = A_.size();
    std::vector<std::uint8_t> set(n, 0), used(n, 0);
    std::vector<Pt> img(n, 0);
    set[0] = used[0] = 1;
    for (std::size_t k = 0; k <= level; ++k) {
      const Pt g = gens_[k], h = chosen_[k];
      if (set[g] || used[h]) return false;
      set[g] = used[h] = 1;
      img[g] = h;
    }
    for (const Op& op : ops_[level]) {
      const Pt v = B_.mul(img[op.a], img[op.b]);
      if (set[op.c]) {
        if (img[op.c] != v) return false;
        continue;
      }
      if (used[v] || sa_[op.c] != sb_[v]) return false;
      set[op.c] = used[v] = 1;
      img[op.c] = v;
    }
    img_ = img;
    return true;
  }

  void search(std::size_t level) {
    if (!count_all_ && found_ > 0) return;
    if (level == gens_.size()) {
      ++found_;
      if (!witness_) witness_ = img_;
      return;
    }
    for (std::size_t y = 1; y < B_.size(); ++y) {
      if (sb_[y] != sa_[gens_[level]]) continue;
      chosen_.resize(level + 1);
      chosen_[level] = static_cast<Pt>(y);
      if (replay(level)) search(level + 1);
      if (!count_all_ && found_ > 0) return;
    }
  }

  const Loop& A_;
  const Loop& B_;
  bool count_all_;
  std::vector<Signature> sa_, sb_;
  std::vector<Pt> gens_;
  std::vector<std::vector<Op>> ops_;
  std::vector<Pt> chosen_;
  std::vector<Pt> img_;
  std::uint64_t found_ = 0;
  std::optional<std::vector<Pt>> witness_;
};

}  // namespace

IsoResult loop_isomorphic(const Loop& a, const Loop& b) {
  if (a.size() > 255 || b.size() > 255) throw Error(ErrorCode::SizeCapExceeded, "isomorphism search limited to order 255");
  IsoResult r;
  if (a.size() != b.size()) {
    r.separated_by_invariants = true;
    return r;
  }
  IsoSearch s(a, b, false);
  if (!s.signatures_match()) {
    r.separated_by_invariants = true;
    return r;
  }
  s.run();
  r.map = s.witness();
  return r;
}

std::uint64_t loop_automorphism_count(const Loop& L) {
  if (L.size() > 80) throw Error(ErrorCode::SizeCapExceeded, "automorphism search limited to order 80");
  IsoSearch s(L, L, true);
  s.run();
  return s.found();
}

void write_latin_csv(std::ostream& os, const Loop& L, const std::vector<std::string>& legend) {
  const std::size_t n = L.size();
  os << "# N=" << n << '\n';
  for (std::size_t i = 0; i < legend.size(); ++i) os << "# " << i << '=' << legend[i] << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b) os << ',';
      os << L.mul(static_cast<Pt>(a), static_cast<Pt>(b));
    }
    os << '\n';
  }
}

Loop read_latin_csv(std::istream& is) {
  std::string line;
  std::size_t n = 0;
  std::vector<Pt> table;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# N=", 0) == 0) n = std::stoul(line.substr(4));
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const unsigned long v = std::stoul(cell);
      if (v > 65535) throw Error(ErrorCode::ParseError, "entry out of range in Latin square");
      table.push_back(static_cast<Pt>(v));
    }
  }
  if (n == 0) throw Error(ErrorCode::ParseError, "missing '# N=' header");
  return Loop::from_table(n, std::move(table));
}

}  // namespace semiloop
