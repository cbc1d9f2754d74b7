#include "intdist/integer.hpp"

#include <string>

#include "intdist/error.hpp"

namespace intdist {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::OddCharacteristic: return "OddCharacteristic";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotInternalNucleus: return "NotInternalNucleus";
    case ErrorKind::IncompleteData: return "IncompleteData";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::FamilyInapplicable: return "FamilyInapplicable";
    case ErrorKind::NotMaximalArc: return "NotMaximalArc";
    case ErrorKind::NoSuchConfiguration: return "NoSuchConfiguration";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto factors = prime_factors(n);
  if (factors.size() != 1) return std::nullopt;
  unsigned s = 0;
  while (n > 1) {
    n /= factors[0];
    ++s;
  }
  return std::pair{static_cast<unsigned>(factors[0]), s};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

i128 ipow(i128 base, unsigned exp) {
  i128 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

unsigned l2(std::uint64_t n) {
  if (n == 0) return kL2Infinity;
  unsigned k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return k;
}

std::int64_t exact_div(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "exact_div by zero");
  if (num % den != 0) {
    throw Error(ErrorKind::InexactDivision,
                std::to_string(static_cast<long long>(num)) + " / " +
                    std::to_string(static_cast<long long>(den)));
  }
  return static_cast<std::int64_t>(num / den);
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n - k < k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<unsigned> prime_powers(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned n = lo < 2 ? 2 : lo; n <= hi; ++n) {
    if (prime_power(n)) out.push_back(n);
  }
  return out;
}

}  // namespace intdist
