#include "semiloop/skewpoly.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "semiloop/error.hpp"

namespace semiloop {

SkewPoly SkewPoly::monomial(gf::Elem a, unsigned i) {
  std::vector<gf::Elem> c(i + 1, gf::Elem{0});
  c[i] = a;
  return SkewPoly(std::move(c));
}

namespace skew {

SkewPoly add(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g) {
  const auto& F = tw.field();
  std::vector<gf::Elem> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(f.coeff(i), g.coeff(i));
  return SkewPoly(std::move(c));
}

SkewPoly sub(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g) {
  const auto& F = tw.field();
  std::vector<gf::Elem> c(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(f.coeff(i), g.coeff(i));
  return SkewPoly(std::move(c));
}

SkewPoly scale(const gf::Tower& tw, gf::Elem a, const SkewPoly& f) {
  std::vector<gf::Elem> c(f.coeffs());
  for (auto& x : c) x = tw.field().mul(a, x);
  return SkewPoly(std::move(c));
}

SkewPoly mul(const gf::Tower& tw, const SkewPoly& f, const SkewPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto& F = tw.field();
  std::vector<gf::Elem> c(f.coeffs().size() + g.coeffs().size() - 1);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const gf::Elem a = f.coeffs()[i];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      const gf::Elem b = g.coeffs()[j];
      if (b.is_zero()) continue;
      c[i + j] = F.add(c[i + j], F.mul(a, tw.sigma(b, static_cast<std::int64_t>(i))));
    }
  }
  return SkewPoly(std::move(c));
}

DivMod right_divmod(const gf::Tower& tw, const SkewPoly& g, const SkewPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "right division by the zero polynomial");
  const auto& F = tw.field();
  const int m = f.degree();
  std::vector<gf::Elem> r(g.coeffs());
  std::vector<gf::Elem> q(g.degree() >= m ? static_cast<std::size_t>(g.degree() - m + 1) : 0);
  for (int e = g.degree(); e >= m; --e) {
    const gf::Elem c = r[static_cast<std::size_t>(e)];
    if (c.is_zero()) continue;
    const int shift = e - m;
    // (c' t^shift) f has leading coefficient c' sigma^shift(lead f).
    const gf::Elem cq = F.div(c, tw.sigma(f.leading(), shift));
    q[static_cast<std::size_t>(shift)] = cq;
    for (int i = 0; i <= m; ++i) {
      const gf::Elem fi = f.coeff(static_cast<std::size_t>(i));
      if (fi.is_zero()) continue;
      auto& slot = r[static_cast<std::size_t>(i + shift)];
      slot = F.sub(slot, F.mul(cq, tw.sigma(fi, shift)));
    }
  }
  if (r.size() > static_cast<std::size_t>(m)) r.resize(static_cast<std::size_t>(m));
  return {SkewPoly(std::move(q)), SkewPoly(std::move(r))};
}

SkewPoly right_mod(const gf::Tower& tw, const SkewPoly& g, const SkewPoly& f) {
  return right_divmod(tw, g, f).remainder;
}

SkewPoly make_monic(const gf::Tower& tw, const SkewPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::DegreeZero, "zero polynomial cannot be made monic");
  return scale(tw, tw.field().inv(f.leading()), f);
}

double irreducibility_cost(const gf::Tower& tw, unsigned degree) {
  double total = 0;
  for (unsigned d = 1; d < degree; ++d) total += std::pow(static_cast<double>(tw.field().order()), d);
  return total;
}

void for_each_monic(const gf::Tower& tw, unsigned m, const std::function<bool(const SkewPoly&)>& visit) {
  const std::uint64_t Q = tw.field().order();
  std::vector<gf::Elem> c(m + 1, gf::Elem{0});
  c[m] = gf::Elem{1};
  while (true) {
    if (!visit(SkewPoly(c))) return;
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)].value == Q - 1) c[static_cast<std::size_t>(i--)] = gf::Elem{0};
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)].value;
  }
}

namespace {

void require_monic(const SkewPoly& f) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "polynomial must have degree >= 1");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "polynomial must be monic");
}

}  // namespace

bool is_irreducible(const gf::Tower& tw, const SkewPoly& f) {
  require_monic(f);
  const unsigned m = static_cast<unsigned>(f.degree());
  for (unsigned d = 1; d < m; ++d) {
    bool found = false;
    for_each_monic(tw, d, [&](const SkewPoly& h) {
      if (right_mod(tw, f, h).is_zero()) found = true;
      return !found;
    });
    if (found) return false;
  }
  return true;
}

bool is_irreducible_quadratic(const gf::Tower& tw, const SkewPoly& f) {
  require_monic(f);
  if (f.degree() != 2) throw Error(ErrorCode::InvalidArgument, "quadratic test needs degree 2");
  const auto& F = tw.field();
  // f = t^2 - a1 t - a0.
  const gf::Elem a1 = F.neg(f.coeff(1));
  const gf::Elem a0 = F.neg(f.coeff(0));
  for (std::uint64_t v = 0; v < F.order(); ++v) {
    const gf::Elem z{v};
    const gf::Elem lhs = F.sub(F.add(F.mul(z, tw.sigma(z)), F.mul(a1, z)), a0);
    if (lhs.is_zero()) return false;
  }
  return true;
}

bool is_right_invariant(const gf::Tower& tw, const SkewPoly& f) {
  require_monic(f);
  const SkewPoly t = SkewPoly::monomial(tw.field().one(), 1);
  const SkewPoly z = SkewPoly::constant(tw.field().primitive());
  return right_mod(tw, mul(tw, f, t), f).is_zero() && right_mod(tw, mul(tw, f, z), f).is_zero();
}

bool in_fixed_ring(const gf::Tower& tw, const SkewPoly& f) {
  for (auto c : f.coeffs()) {
    if (!tw.in_fixed_field(c)) return false;
  }
  return true;
}

std::vector<SkewPoly> enumerate_admissible(const gf::Tower& tw, unsigned m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "degree must be at least 2");
  std::vector<SkewPoly> out;
  for_each_monic(tw, m, [&](const SkewPoly& f) {
    if (f.coeff(0).is_zero()) return true;  // t is a right factor
    if (!is_right_invariant(tw, f) && is_irreducible(tw, f)) out.push_back(f);
    return true;
  });
  return out;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Term {
  bool negative = false;
  std::string_view text;
};

std::vector<Term> split_terms(std::string_view s) {
  std::vector<Term> terms;
  int depth = 0;
  bool negative = false;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    const std::string_view piece = strip(s.substr(start, end - start));
    if (!piece.empty()) terms.push_back({negative, piece});
    else if (end != 0 && end < s.size()) throw Error(ErrorCode::ParseError, "empty term in polynomial");
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      // A sign directly after '^' belongs to an exponent.
      std::size_t j = i;
      while (j > start && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
      if (j > 0 && s[j - 1] == '^') continue;
      const std::string_view before = strip(s.substr(start, i - start));
      if (!before.empty()) terms.push_back({negative, before});
      negative = (ch == '-');
      start = i + 1;
    }
  }
  flush(s.size());
  return terms;
}

}  // namespace

SkewPoly parse(const gf::Tower& tw, std::string_view text) {
  const auto& F = tw.field();
  const std::string_view s = strip(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  std::vector<gf::Elem> c;
  for (const Term& term : split_terms(s)) {
    std::string_view body = term.text;
    // Locate a `t` outside brackets.
    int depth = 0;
    std::size_t tpos = std::string_view::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '[' || body[i] == '(') ++depth;
      if (body[i] == ']' || body[i] == ')') --depth;
      if (depth == 0 && body[i] == 't') tpos = i;
    }
    gf::Elem coef = F.one();
    unsigned power = 0;
    if (tpos == std::string_view::npos) {
      coef = F.parse(body);
    } else {
      std::string_view head = strip(body.substr(0, tpos));
      if (!head.empty() && head.back() == '*') head = strip(head.substr(0, head.size() - 1));
      if (!head.empty()) coef = F.parse(head);
      std::string_view tail = strip(body.substr(tpos + 1));
      power = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw Error(ErrorCode::ParseError, "bad term '" + std::string(body) + "'");
        tail = strip(tail.substr(1));
        unsigned e = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), e);
        if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
          throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(body) + "'");
        }
        power = e;
      }
    }
    if (term.negative) coef = F.neg(coef);
    if (c.size() <= power) c.resize(power + 1, gf::Elem{0});
    c[power] = F.add(c[power], coef);
  }
  return SkewPoly(std::move(c));
}

std::string format(const gf::Tower& tw, const SkewPoly& f) {
  if (f.is_zero()) return "0";
  const auto& F = tw.field();
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const gf::Elem c = f.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << F.format(c);
      continue;
    }
    if (c != F.one()) os << F.format(c) << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace skew
}  // namespace semiloop
