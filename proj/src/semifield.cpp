#include "semiloop/semifield.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

#include "semiloop/error.hpp"
#include "semiloop/numtheory.hpp"

namespace semiloop {

namespace {

constexpr unsigned kMaxDegree = 16;

bool is_zero_row(const linalg::Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace

Semifield::Semifield(gf::Tower tower, const SkewPoly& f) : tower_(std::move(tower)) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "f must have positive degree");
  f_ = skew::make_monic(tower_, f);
  m_ = static_cast<unsigned>(f_.degree());
  if (m_ < 2) throw Error(ErrorCode::InvalidArgument, "f must have degree at least 2");
  if (m_ > kMaxDegree) throw Error(ErrorCode::TooLarge, "degree of f above 16");
  k_size_ = field().order();
  size_ = 1;
  for (unsigned i = 0; i < m_; ++i) {
    if (size_ > (1ULL << 62) / k_size_) throw Error(ErrorCode::TooLarge, "|S_f| exceeds 2^62");
    size_ *= k_size_;
  }
  dim_ = field().degree() * m_;

  const bool reducible =
      m_ == 2 ? !skew::is_irreducible_quadratic(tower_, f_) : !skew::is_irreducible(tower_, f_);
  if (reducible) throw Error(ErrorCode::ReducibleF, "f has a proper right divisor: " + skew::format(tower_, f_));
  if (skew::is_right_invariant(tower_, f_)) {
    throw Error(ErrorCode::RightInvariantF, "Rf is two-sided, S_f would be associative");
  }

  if (k_size_ <= (1U << 16)) {
    const unsigned n = tower_.n();
    sigma_.resize(static_cast<std::size_t>(n) * k_size_);
    for (unsigned j = 0; j < n; ++j) {
      for (std::uint64_t v = 0; v < k_size_; ++v) {
        sigma_[j * k_size_ + v] = static_cast<std::uint32_t>(tower_.sigma(gf::Elem{v}, j).value);
      }
    }
  }
  fshift_.assign(m_, std::vector<gf::Elem>(m_));
  for (unsigned s = 0; s < m_; ++s) {
    for (unsigned i = 0; i < m_; ++i) fshift_[s][i] = tower_.sigma(f_.coeff(i), s);
  }
}

gf::Elem Semifield::sig(gf::Elem x, unsigned j) const {
  j %= tower_.n();
  if (!sigma_.empty()) return gf::Elem{sigma_[j * k_size_ + x.value]};
  return tower_.sigma(x, j);
}

gf::Elem Semifield::coeff(SfIndex x, unsigned i) const {
  for (unsigned k = 0; k < i; ++k) x /= k_size_;
  return gf::Elem{x % k_size_};
}

SfIndex Semifield::index(const SkewPoly& g) const {
  if (g.degree() >= static_cast<int>(m_)) throw Error(ErrorCode::InvalidArgument, "element degree must be below m");
  SfIndex x = 0;
  for (int i = g.degree(); i >= 0; --i) x = x * k_size_ + g.coeff(static_cast<std::size_t>(i)).value;
  return x;
}

SkewPoly Semifield::element(SfIndex x) const {
  std::vector<gf::Elem> c(m_);
  for (unsigned i = 0; i < m_; ++i, x /= k_size_) c[i] = gf::Elem{x % k_size_};
  return SkewPoly(std::move(c));
}

SfIndex Semifield::add(SfIndex x, SfIndex y) const {
  SfIndex out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i, x /= k_size_, y /= k_size_, scale *= k_size_) {
    out += field().add(gf::Elem{x % k_size_}, gf::Elem{y % k_size_}).value * scale;
  }
  return out;
}

SfIndex Semifield::sub(SfIndex x, SfIndex y) const {
  SfIndex out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i, x /= k_size_, y /= k_size_, scale *= k_size_) {
    out += field().sub(gf::Elem{x % k_size_}, gf::Elem{y % k_size_}).value * scale;
  }
  return out;
}

SfIndex Semifield::mul(SfIndex x, SfIndex y) const {
  const gf::Field& F = field();
  std::array<gf::Elem, kMaxDegree> xs{}, ys{};
  std::array<gf::Elem, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < m_; ++i, x /= k_size_, y /= k_size_) {
    xs[i] = gf::Elem{x % k_size_};
    ys[i] = gf::Elem{y % k_size_};
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (xs[i].is_zero()) continue;
    for (unsigned j = 0; j < m_; ++j) {
      if (ys[j].is_zero()) continue;
      prod[i + j] = F.add(prod[i + j], F.mul(xs[i], sig(ys[j], i)));
    }
  }
  // Right reduction by the monic f.
  for (unsigned e = 2 * m_ - 2; e >= m_; --e) {
    const gf::Elem c = prod[e];
    if (c.is_zero()) continue;
    const unsigned s = e - m_;
    for (unsigned k = 0; k < m_; ++k) {
      if (!fshift_[s][k].is_zero()) prod[k + s] = F.sub(prod[k + s], F.mul(c, fshift_[s][k]));
    }
  }
  SfIndex out = 0;
  for (unsigned i = m_; i-- > 0;) out = out * k_size_ + prod[i].value;
  return out;
}

SfIndex Semifield::associator(SfIndex x, SfIndex y, SfIndex z) const {
  return sub(mul(mul(x, y), z), mul(x, mul(y, z)));
}

std::vector<std::uint32_t> Semifield::prime_coords(SfIndex x) const {
  std::vector<std::uint32_t> v;
  v.reserve(dim_);
  for (unsigned i = 0; i < m_; ++i, x /= k_size_) {
    const auto c = field().coords(gf::Elem{x % k_size_});
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

SfIndex Semifield::from_prime_coords(std::span<const std::uint32_t> v) const {
  const unsigned l = field().degree();
  SfIndex out = 0;
  for (unsigned i = m_; i-- > 0;) out = out * k_size_ + field().from_coords(v.subspan(i * l, l)).value;
  return out;
}

SfIndex Semifield::basis(unsigned k) const {
  const unsigned l = field().degree();
  SfIndex scale = 1;
  for (unsigned i = 0; i < k / l; ++i) scale *= k_size_;
  return field().basis(k % l).value * scale;
}

std::pair<SfIndex, SfIndex> Semifield::inverses(SfIndex x) const {
  if (x == 0) throw Error(ErrorCode::ZeroElement, "zero has no inverse");
  const std::uint32_t p = field().characteristic();
  std::vector<linalg::Row> rcols, lcols;
  for (unsigned k = 0; k < dim_; ++k) {
    rcols.push_back(prime_coords(mul(basis(k), x)));
    lcols.push_back(prime_coords(mul(x, basis(k))));
  }
  const auto target = prime_coords(one());
  const auto xl = linalg::solve_columns(rcols, target, p);
  const auto xr = linalg::solve_columns(lcols, target, p);
  if (!xl || !xr) throw Error(ErrorCode::InvariantViolation, "translation map is singular");
  return {from_prime_coords(*xl), from_prime_coords(*xr)};
}

NucleusInfo Semifield::describe(const std::vector<linalg::Row>& basis_rows) const {
  const std::uint32_t p = field().characteristic();
  NucleusInfo info{linalg::Subspace(dim_, p, basis_rows), 0, "", false};
  info.size = nt::checked_pow(p, static_cast<unsigned>(info.space.dimension()));
  bool closed = true;
  bool commutative = true;
  const auto& b = info.space.basis();
  for (std::size_t i = 0; i < b.size() && closed; ++i) {
    for (std::size_t j = 0; j < b.size() && closed; ++j) {
      const SfIndex u = from_prime_coords(b[i]);
      const SfIndex v = from_prime_coords(b[j]);
      const SfIndex uv = mul(u, v);
      closed = info.space.contains(prime_coords(uv));
      commutative = commutative && uv == mul(v, u);
    }
  }
  info.closed = closed;
  if (closed && commutative && !b.empty()) info.tag = "F_" + std::to_string(info.size);
  return info;
}

NucleiReport Semifield::nuclei() const {
  const std::uint32_t p = field().characteristic();
  linalg::Echelon el(dim_, p), em(dim_, p), er(dim_, p), ecomm(dim_, p), emember(dim_, p);

  std::vector<SfIndex> e(dim_);
  for (unsigned k = 0; k < dim_; ++k) e[k] = basis(k);

  // For each pair of basis elements, the linear map x -> [x, bi, bj] (and the
  // other two slots) contributes one equation per output coordinate.
  auto feed = [&](linalg::Echelon& ech, auto&& image) {
    for (unsigned i = 0; i < dim_ && ech.rank() < dim_; ++i) {
      for (unsigned j = 0; j < dim_ && ech.rank() < dim_; ++j) {
        std::vector<linalg::Row> cols(dim_);
        bool any = false;
        for (unsigned k = 0; k < dim_; ++k) {
          cols[k] = prime_coords(image(e[k], e[i], e[j]));
          any = any || !is_zero_row(cols[k]);
        }
        if (!any) continue;
        for (unsigned c = 0; c < dim_; ++c) {
          linalg::Row row(dim_);
          for (unsigned k = 0; k < dim_; ++k) row[k] = cols[k][c];
          ech.add(std::move(row));
        }
      }
    }
  };
  feed(el, [&](SfIndex x, SfIndex a, SfIndex b) { return associator(x, a, b); });
  feed(em, [&](SfIndex x, SfIndex a, SfIndex b) { return associator(a, x, b); });
  feed(er, [&](SfIndex x, SfIndex a, SfIndex b) { return associator(a, b, x); });

  for (unsigned i = 0; i < dim_; ++i) {
    std::vector<linalg::Row> cols(dim_);
    for (unsigned k = 0; k < dim_; ++k) cols[k] = prime_coords(sub(mul(e[k], e[i]), mul(e[i], e[k])));
    for (unsigned c = 0; c < dim_; ++c) {
      linalg::Row row(dim_);
      for (unsigned k = 0; k < dim_; ++k) row[k] = cols[k][c];
      ecomm.add(std::move(row));
    }
  }

  // Right nucleus via g -> f g mod_r f.
  {
    std::vector<linalg::Row> cols(dim_);
    for (unsigned k = 0; k < dim_; ++k) {
      const SkewPoly rem = skew::right_mod(tower_, skew::mul(tower_, f_, element(e[k])), f_);
      cols[k] = prime_coords(index(rem));
    }
    for (unsigned c = 0; c < dim_; ++c) {
      linalg::Row row(dim_);
      for (unsigned k = 0; k < dim_; ++k) row[k] = cols[k][c];
      emember.add(std::move(row));
    }
  }

  linalg::Echelon enuc(dim_, p);
  for (const auto* ech : {&el, &em, &er}) {
    for (const auto& r : ech->rows()) enuc.add(r);
  }
  linalg::Echelon ecenter = enuc;
  for (const auto& r : ecomm.rows()) ecenter.add(r);

  NucleiReport rep{describe(el.nullspace()), describe(em.nullspace()), describe(er.nullspace()),
                   describe(enuc.nullspace()), describe(ecenter.nullspace()),
                   describe(emember.nullspace()), false};
  rep.right_formula_agrees = rep.right.space == rep.right_by_membership.space;
  return rep;
}

TPowerReport Semifield::t_power_diagnostics(std::uint64_t closure_cap) const {
  TPowerReport rep;
  const SkewPoly tpoly = SkewPoly::monomial(field().one(), 1);
  rep.ft_in_rf = skew::right_mod(tower_, skew::mul(tower_, f_, tpoly), f_).is_zero();
  rep.f_in_fixed_ring = skew::in_fixed_ring(tower_, f_);

  const SfIndex tt = t();
  const SfIndex tm = mul(index(SkewPoly::monomial(field().one(), m_ - 1)), tt);
  rep.t_cross_check = mul(tm, tt) == mul(tt, tm);

  // All bracketings of a product of k copies of t.
  std::vector<std::set<SfIndex>> br(m_ + 2);
  br[1] = {tt};
  for (unsigned k = 2; k <= m_ + 1; ++k) {
    for (unsigned a = 1; a < k; ++a) {
      for (SfIndex x : br[a]) {
        for (SfIndex y : br[k - a]) br[k].insert(mul(x, y));
      }
    }
  }
  rep.power_associative_m1 = br[m_ + 1].size() == 1;

  std::vector<SfIndex> powers{one()};
  std::unordered_set<SfIndex> seen{one()};
  for (SfIndex x = tt; x != one(); x = mul(x, tt)) {
    powers.push_back(x);
    seen.insert(x);
  }
  rep.powers_count = powers.size();
  rep.powers_closed = true;
  for (std::size_t i = 0; i < powers.size() && rep.powers_closed; ++i) {
    for (std::size_t j = 0; j < powers.size() && rep.powers_closed; ++j) {
      rep.powers_closed = seen.count(mul(powers[i], powers[j])) > 0;
    }
  }
  if (!rep.powers_closed) {
    rep.powers_form_group = false;
  } else if (powers.size() <= 256) {
    bool assoc = true;
    for (SfIndex a : powers) {
      for (SfIndex b : powers) {
        for (SfIndex c : powers) assoc = assoc && associator(a, b, c) == 0;
      }
    }
    rep.powers_form_group = assoc;
  }
  if (auto sub = generated_subloop({tt}, closure_cap)) rep.generated_order = sub->size();
  return rep;
}

std::optional<std::vector<SfIndex>> Semifield::generated_subloop(const std::vector<SfIndex>& gens,
                                                                 std::uint64_t cap) const {
  std::vector<SfIndex> elems{one()};
  std::unordered_set<SfIndex> seen{one()};
  std::size_t done = 0;
  auto push = [&](SfIndex x) {
    if (x == 0) throw Error(ErrorCode::InvariantViolation, "zero divisor found in S_f");
    if (seen.insert(x).second) elems.push_back(x);
  };
  for (SfIndex g : gens) push(g);
  // Each new element is multiplied on both sides by everything seen so far.
  while (done < elems.size()) {
    if (elems.size() > cap) return std::nullopt;
    const SfIndex a = elems[done];
    for (std::size_t j = 0; j <= done; ++j) {
      const SfIndex b = elems[j];
      push(mul(a, b));
      push(mul(b, a));
      if (elems.size() > cap) return std::nullopt;
    }
    ++done;
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::string Semifield::format(SfIndex x) const { return skew::format(tower_, element(x)); }

ScannedNuclei scan_nuclei(const Semifield& s) {
  ScannedNuclei out;
  const std::uint64_t n = s.size();
  for (SfIndex x = 0; x < n; ++x) {
    bool l = true, m = true, r = true;
    for (SfIndex y = 1; y < n && (l || m || r); ++y) {
      for (SfIndex z = 1; z < n && (l || m || r); ++z) {
        l = l && s.associator(x, y, z) == 0;
        m = m && s.associator(y, x, z) == 0;
        r = r && s.associator(y, z, x) == 0;
      }
    }
    if (l) out.left.push_back(x);
    if (m) out.middle.push_back(x);
    if (r) out.right.push_back(x);
  }
  return out;
}

}  // namespace semiloop
