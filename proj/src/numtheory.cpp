#include "semiloop/numtheory.hpp"

#include <algorithm>

#include "semiloop/error.hpp"

namespace semiloop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NonPrimitiveModulusRoot: return "NonPrimitiveModulusRoot";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::ReducibleF: return "ReducibleF";
    case ErrorCode::RightInvariantF: return "RightInvariantF";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::InadmissiblePolynomial: return "InadmissiblePolynomial";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) {
      throw Error(ErrorCode::TooLarge, "integer power exceeds 64 bits");
    }
    r *= base;
  }
  return r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 r = 1 % mod;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

BigInt big_pow(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt gl_order(unsigned d, std::uint64_t q) {
  const BigInt qd = big_pow(q, d);
  BigInt r = 1;
  BigInt qi = 1;
  for (unsigned i = 0; i < d; ++i) {
    r *= qd - qi;
    qi *= q;
  }
  return r;
}

BigInt sl_order(unsigned d, std::uint64_t q) { return gl_order(d, q) / (q - 1); }

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  const auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return {f[0].first, f[0].second};
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace nt
}  // namespace semiloop
