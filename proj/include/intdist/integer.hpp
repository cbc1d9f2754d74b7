#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace intdist {

using i128 = __int128;

bool is_prime(std::uint64_t n);

// Returns (p, s) with n = p^s, or nullopt when n is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n);

// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

i128 ipow(i128 base, unsigned exp);

// 2-adic valuation; l2(0) is +infinity, reported as the sentinel below.
inline constexpr unsigned kL2Infinity = std::numeric_limits<unsigned>::max();
unsigned l2(std::uint64_t n);

// Exact quotient; throws InexactDivision when den does not divide num.
std::int64_t exact_div(i128 num, i128 den);

std::int64_t ceil_div(std::int64_t num, std::int64_t den);

std::uint64_t binomial(unsigned n, unsigned k);

// All prime powers q with lo <= q <= hi.
std::vector<unsigned> prime_powers(unsigned lo, unsigned hi);

}  // namespace intdist
