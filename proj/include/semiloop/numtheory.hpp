#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace semiloop {

using BigInt = boost::multiprecision::cpp_int;

namespace nt {

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, ascending primes with multiplicities.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// base^exp, throwing TooLarge on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

BigInt big_pow(std::uint64_t base, unsigned exp);

/// |GL(d, q)| = prod_{i=0}^{d-1} (q^d - q^i).
BigInt gl_order(unsigned d, std::uint64_t q);

/// |SL(d, q)| = |GL(d, q)| / (q - 1).
BigInt sl_order(unsigned d, std::uint64_t q);

/// Decomposes q = p^r; returns {0, 0} when q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

std::string to_string(const BigInt& v);

}  // namespace nt
}  // namespace semiloop
