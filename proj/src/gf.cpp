#include "semiloop/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "semiloop/error.hpp"
#include "semiloop/numtheory.hpp"

namespace semiloop::gf {
namespace {

using ZpPoly = std::vector<std::uint64_t>;

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) { return nt::powmod(a, p - 2, p); }

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

ZpPoly zp_sub(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint64_t p) {
  ZpPoly r = zp_mod(ZpPoly{1}, m, p);
  base = zp_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = zp_mod(zp_mul(r, base, p), m, p);
    base = zp_mod(zp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

ZpPoly to_zp(const std::vector<std::uint32_t>& v) { return ZpPoly(v.begin(), v.end()); }

bool root_is_primitive(const ZpPoly& m, std::uint64_t p, std::uint64_t q) {
  for (std::uint64_t ell : nt::prime_divisors(q - 1)) {
    if (zp_powmod(ZpPoly{0, 1}, (q - 1) / ell, m, p) == ZpPoly{1}) return false;
  }
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  s = strip(s);
  if (s.empty()) return false;
  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
    s = strip(s);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return false;
  out = neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
  return true;
}

std::vector<std::uint32_t> parse_coeff_list(std::string_view s, std::uint32_t p) {
  s = strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error(ErrorCode::ParseError, "expected [c0,c1,...], got '" + std::string(s) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<std::uint32_t> out;
  while (true) {
    const auto comma = s.find(',');
    std::int64_t v = 0;
    if (!parse_int(s.substr(0, comma), v)) {
      throw Error(ErrorCode::ParseError, "bad coefficient in '" + std::string(s) + "'");
    }
    const std::int64_t pp = static_cast<std::int64_t>(p);
    out.push_back(static_cast<std::uint32_t>(((v % pp) + pp) % pp));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  ZpPoly f = to_zp(poly);
  trim(f);
  if (f.size() < 2) return false;
  const unsigned l = static_cast<unsigned>(f.size() - 1);
  if (l == 1) return true;
  // Rabin: x^(p^l) = x mod f and gcd(x^(p^(l/ell)) - x, f) = 1 for primes ell | l.
  auto x_pow = [&](unsigned k) {
    ZpPoly r = zp_mod(ZpPoly{0, 1}, f, p);
    for (unsigned i = 0; i < k; ++i) r = zp_powmod(r, p, f, p);
    return r;
  };
  if (zp_sub(x_pow(l), ZpPoly{0, 1}, p) != ZpPoly{}) return false;
  for (std::uint64_t ell : nt::prime_divisors(l)) {
    ZpPoly g = zp_gcd(f, zp_sub(x_pow(static_cast<unsigned>(l / ell)), ZpPoly{0, 1}, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned l) {
  const std::uint64_t q = nt::checked_pow(p, l);
  std::vector<std::uint32_t> c(l + 1, 0);
  c[l] = 1;
  // Odometer with c[0] most significant: low-degree-first lexicographic order.
  while (true) {
    if (c[0] != 0 && is_irreducible_mod_p(c, p) && root_is_primitive(to_zp(c), p, q)) return c;
    int i = static_cast<int>(l) - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  throw Error(ErrorCode::InvariantViolation, "no primitive modulus found");
}

Field::Field(std::uint32_t p, unsigned degree, Options opts) : p_(p), l_(degree) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "field degree must be positive");
  q_ = nt::checked_pow(p, degree);
  if (q_ > kSizeLimit) {
    throw Error(ErrorCode::TooLarge, "field order " + std::to_string(q_) + " exceeds 2^32");
  }
  if (opts.modulus) {
    modulus_ = *opts.modulus;
    for (auto& c : modulus_) c %= p;
    while (!modulus_.empty() && modulus_.back() == 0) modulus_.pop_back();
    if (modulus_.size() != degree + 1 || modulus_.back() != 1) {
      throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(degree));
    }
    if (!is_irreducible_mod_p(modulus_, p)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over Z/" + std::to_string(p));
    }
  } else {
    modulus_ = default_modulus(p, degree);
  }
  order_prime_divisors_ = nt::prime_divisors(q_ - 1);

  const Elem root = basis(degree == 1 ? 0 : 1);
  if (degree > 1 && is_generator_slow(root)) {
    primitive_ = root;
  } else if (degree > 1 && opts.modulus && opts.require_primitive_root) {
    throw Error(ErrorCode::NonPrimitiveModulusRoot, "modulus root does not generate K^x");
  } else {
    // Smallest generator by packed value.
    primitive_ = Elem{0};
    for (std::uint64_t v = 1; v < q_; ++v) {
      if (is_generator_slow(Elem{v})) {
        primitive_ = Elem{v};
        break;
      }
    }
  }

  if (opts.build_tables && q_ <= kTableLimit) {
    auto t = std::make_shared<Tables>();
    const std::uint64_t ord = q_ - 1;
    t->log.assign(q_, 0);
    t->exp.assign(2 * ord, 0);
    Elem cur = one();
    for (std::uint64_t k = 0; k < ord; ++k) {
      t->exp[k] = cur.value;
      t->exp[k + ord] = cur.value;
      t->log[cur.value] = static_cast<std::uint32_t>(k);
      cur = mul_slow(cur, primitive_);
    }
    t->zech.assign(ord, -1);
    for (std::uint64_t d = 0; d < ord; ++d) {
      const Elem s = add_digits(one(), Elem{t->exp[d]}, false);
      t->zech[d] = s.is_zero() ? -1 : static_cast<std::int64_t>(t->log[s.value]);
    }
    for (unsigned j = 0; j < l_; ++j) t->frob.push_back(nt::powmod(p_, j, ord));
    tables_ = std::move(t);
  }
}

Elem Field::from_int(std::int64_t v) const {
  const std::int64_t pp = static_cast<std::int64_t>(p_);
  return Elem{static_cast<std::uint64_t>(((v % pp) + pp) % pp)};
}

Elem Field::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > l_) throw Error(ErrorCode::InvalidArgument, "too many coordinates");
  std::uint64_t v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) v = v * p_ + coords[i] % p_;
  return Elem{v};
}

std::vector<std::uint32_t> Field::coords(Elem x) const {
  std::vector<std::uint32_t> out(l_, 0);
  std::uint64_t v = x.value;
  for (unsigned i = 0; i < l_; ++i) {
    out[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return out;
}

Elem Field::basis(unsigned j) const { return Elem{nt::checked_pow(p_, j)}; }

Elem Field::add_digits(Elem a, Elem b, bool negate_b) const {
  if (p_ == 2) return Elem{a.value ^ b.value};
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  std::uint64_t x = a.value;
  std::uint64_t y = b.value;
  for (unsigned i = 0; i < l_; ++i) {
    const std::uint64_t da = x % p_;
    const std::uint64_t db = y % p_;
    const std::uint64_t d = negate_b ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem Field::add(Elem a, Elem b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (p_ == 2 || !tables_) return add_digits(a, b, false);
  const std::uint64_t ord = q_ - 1;
  const std::uint64_t la = tables_->log[a.value];
  const std::uint64_t lb = tables_->log[b.value];
  const std::uint64_t d = lb >= la ? lb - la : lb + ord - la;
  const std::int64_t z = tables_->zech[d];
  if (z < 0) return Elem{0};
  return Elem{tables_->exp[la + static_cast<std::uint64_t>(z)]};
}

Elem Field::neg(Elem a) const {
  if (a.is_zero() || p_ == 2) return a;
  if (tables_) {
    const std::uint64_t ord = q_ - 1;
    return Elem{tables_->exp[tables_->log[a.value] + ord / 2]};
  }
  return add_digits(Elem{0}, a, true);
}

Elem Field::sub(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.value ^ b.value};
  return add(a, neg(b));
}

Elem Field::mul_slow(Elem a, Elem b) const {
  if (a.is_zero() || b.is_zero()) return Elem{0};
  const auto ca = coords(a);
  const auto cb = coords(b);
  std::vector<std::uint64_t> prod(2 * l_ - 1, 0);
  for (unsigned i = 0; i < l_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < l_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
  }
  for (std::size_t d = prod.size(); d-- > l_;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    const std::size_t shift = d - l_;
    for (unsigned i = 0; i <= l_; ++i) {
      prod[shift + i] = (prod[shift + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::uint64_t v = 0;
  for (unsigned i = l_; i-- > 0;) v = v * p_ + prod[i];
  return Elem{v};
}

Elem Field::pow_slow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    e >>= 1;
  }
  return r;
}

bool Field::is_generator_slow(Elem g) const {
  if (g.is_zero()) return false;
  if (q_ == 2) return g == one();
  for (std::uint64_t ell : order_prime_divisors_) {
    if (pow_slow(g, (q_ - 1) / ell) == one()) return false;
  }
  return true;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a.is_zero() || b.is_zero()) return Elem{0};
  if (!tables_) return mul_slow(a, b);
  return Elem{tables_->exp[tables_->log[a.value] + tables_->log[b.value]]};
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  if (!tables_) return pow_slow(a, q_ - 2);
  const std::uint64_t ord = q_ - 1;
  const std::uint64_t la = tables_->log[a.value];
  return Elem{tables_->exp[la == 0 ? 0 : ord - la]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
  const std::uint64_t ord = q_ - 1;
  if (a.is_zero()) {
    if (e < 0) throw Error(ErrorCode::ZeroElement, "negative power of zero");
    return e == 0 ? one() : a;
  }
  const std::int64_t so = static_cast<std::int64_t>(ord);
  const std::uint64_t ee = static_cast<std::uint64_t>(((e % so) + so) % so);
  if (!tables_) return pow_slow(a, ee);
  const unsigned __int128 k = static_cast<unsigned __int128>(tables_->log[a.value]) * ee % ord;
  return Elem{tables_->exp[static_cast<std::uint64_t>(k)]};
}

Elem Field::frobenius(Elem x, std::int64_t j) const {
  const std::int64_t ll = static_cast<std::int64_t>(l_);
  const unsigned jj = static_cast<unsigned>(((j % ll) + ll) % ll);
  if (jj == 0 || x.is_zero()) return x;
  if (tables_) {
    const std::uint64_t ord = q_ - 1;
    const std::uint64_t pj = tables_->frob[jj];
    const unsigned __int128 k = static_cast<unsigned __int128>(tables_->log[x.value]) * pj % ord;
    return Elem{tables_->exp[static_cast<std::uint64_t>(k)]};
  }
  for (unsigned i = 0; i < jj; ++i) x = pow_slow(x, p_);
  return x;
}

Elem Field::exp(std::int64_t k) const {
  const std::int64_t ord = static_cast<std::int64_t>(q_ - 1);
  const std::uint64_t kk = static_cast<std::uint64_t>(((k % ord) + ord) % ord);
  if (tables_) return Elem{tables_->exp[kk]};
  return pow_slow(primitive_, kk);
}

std::uint64_t Field::log(Elem x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "log of zero");
  if (tables_) return tables_->log[x.value];
  // Baby-step giant-step for the table-less path.
  const std::uint64_t ord = q_ - 1;
  std::uint64_t m = 1;
  while (m * m < ord) ++m;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> baby;
  baby.reserve(m);
  Elem cur = one();
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace_back(cur.value, j);
    cur = mul_slow(cur, primitive_);
  }
  std::sort(baby.begin(), baby.end());
  const Elem giant = inv(pow_slow(primitive_, m));
  Elem gamma = x;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = std::lower_bound(baby.begin(), baby.end(), std::make_pair(gamma.value, std::uint64_t{0}));
    if (it != baby.end() && it->first == gamma.value) return (i * m + it->second) % ord;
    gamma = mul_slow(gamma, giant);
  }
  throw Error(ErrorCode::InvariantViolation, "discrete log not found");
}

std::uint64_t Field::multiplicative_order(Elem x) const {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "order of zero");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t ell : order_prime_divisors_) {
    while (ord % ell == 0 && pow(x, static_cast<std::int64_t>(ord / ell)) == one()) ord /= ell;
  }
  return ord;
}

Elem Field::parse(std::string_view text) const {
  std::string_view s = strip(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty field element");
  if (s.front() == '[') return from_coords(parse_coeff_list(s, p_));
  if (s.front() == 'g') {
    s.remove_prefix(1);
    s = strip(s);
    if (s.empty()) return primitive_;
    if (s.front() != '^') throw Error(ErrorCode::ParseError, "expected g^k, got '" + std::string(text) + "'");
    s.remove_prefix(1);
    std::int64_t k = 0;
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (!parse_int(s, k)) throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
    return exp(k);
  }
  std::int64_t v = 0;
  if (!parse_int(s, v)) throw Error(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
  return from_int(v);
}

std::string Field::format(Elem x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  os << '[';
  const auto c = coords(x);
  for (unsigned i = 0; i < l_; ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::string Field::descriptor() const { return std::to_string(p_) + "^" + std::to_string(l_); }

Tower::Tower(Field field, unsigned r) : field_(std::move(field)), r_(r) {
  const unsigned l = field_.degree();
  if (r == 0 || l % r != 0) {
    throw Error(ErrorCode::InvalidArgument, "r must divide the field degree");
  }
  n_ = l / r;
  q_ = nt::checked_pow(field_.characteristic(), r);
  if (n_ < 2) throw Error(ErrorCode::InvalidArgument, "sigma must have order n >= 2");
  if (field_.order() <= Field::kTableLimit) {
    std::uint64_t fixed = 0;
    for (std::uint64_t v = 0; v < field_.order(); ++v) {
      if (sigma(Elem{v}) == Elem{v}) ++fixed;
    }
    if (fixed != q_) throw Error(ErrorCode::InvariantViolation, "Fix(sigma) has wrong size");
  }
}

Elem Tower::sigma(Elem x, std::int64_t i) const {
  const std::int64_t nn = static_cast<std::int64_t>(n_);
  const std::int64_t ii = ((i % nn) + nn) % nn;
  return field_.frobenius(x, ii * static_cast<std::int64_t>(r_));
}

Elem Tower::norm(Elem x) const {
  Elem acc = field_.one();
  for (unsigned i = 0; i < n_; ++i) acc = field_.mul(acc, sigma(x, i));
  return acc;
}

bool Tower::in_fixed_field(Elem x) const { return sigma(x) == x; }

NormKernel Tower::norm_kernel() const {
  const Elem g = field_.primitive();
  const Elem gen = field_.div(sigma(g), g);
  const std::uint64_t s = (field_.order() - 1) / (q_ - 1);
  const std::uint64_t ord = field_.multiplicative_order(gen);
  if (ord != s || norm(gen) != field_.one()) {
    throw Error(ErrorCode::InvariantViolation, "norm kernel generator has wrong order");
  }
  return {gen, s};
}

std::vector<FieldAutomorphism> Tower::automorphisms() const {
  std::vector<FieldAutomorphism> out;
  for (unsigned j = 0; j < field_.degree(); ++j) out.push_back({j, j % r_ == 0});
  return out;
}

Tower make_tower(std::uint32_t p, unsigned r, unsigned n, Field::Options opts) {
  if (!nt::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "r must be positive");
  return Tower(Field(p, n * r, std::move(opts)), r);
}

FieldDescriptor parse_field_descriptor(std::string_view text) {
  std::string_view s = strip(text);
  FieldDescriptor d;
  const auto mod_pos = s.find("mod=");
  std::string_view head = strip(mod_pos == std::string_view::npos ? s : s.substr(0, mod_pos));
  if (!head.empty() && (head.back() == ',' || head.back() == ';')) head = strip(head.substr(0, head.size() - 1));
  const auto caret = head.find('^');
  std::int64_t p = 0;
  std::int64_t l = 1;
  if (caret == std::string_view::npos) {
    if (!parse_int(head, p)) throw Error(ErrorCode::ParseError, "bad field descriptor '" + std::string(text) + "'");
  } else if (!parse_int(head.substr(0, caret), p) || !parse_int(head.substr(caret + 1), l)) {
    throw Error(ErrorCode::ParseError, "bad field descriptor '" + std::string(text) + "'");
  }
  if (p < 2 || l < 1) throw Error(ErrorCode::ParseError, "bad field descriptor '" + std::string(text) + "'");
  d.p = static_cast<std::uint32_t>(p);
  d.l = static_cast<unsigned>(l);
  if (mod_pos != std::string_view::npos) d.modulus = parse_coeff_list(s.substr(mod_pos + 4), d.p);
  return d;
}

}  // namespace semiloop::gf
