#include "intdist/gf.hpp"

#include <algorithm>
#include <string>

#include "intdist/error.hpp"
#include "intdist/integer.hpp"

namespace intdist {

namespace {

constexpr unsigned kAddTableMaxOrder = 512;
constexpr unsigned kLogTableMaxOrder = 1u << 16;

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, std::span<const std::uint32_t> m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t k = 0; k <= dm; ++k) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[k] % p;
      a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint32_t index, unsigned p, unsigned s) {
  Poly d(s);
  for (unsigned k = 0; k < s; ++k) {
    d[k] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t index_of(const Poly& d, unsigned p) {
  std::uint32_t idx = 0;
  for (std::size_t k = d.size(); k-- > 0;) idx = idx * p + d[k];
  return idx;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, unsigned p) {
  if (poly.size() < 2 || poly.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "is_irreducible expects a monic polynomial of degree >= 1");
  }
  const unsigned s = static_cast<unsigned>(poly.size() - 1);
  for (unsigned d = 1; d <= s / 2; ++d) {
    // Every monic polynomial of degree d: p^d choices of lower coefficients.
    const std::uint64_t count = static_cast<std::uint64_t>(ipow(p, d));
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      Poly divisor = digits_of(static_cast<std::uint32_t>(lower), p, d);
      divisor.push_back(1);
      Poly rem = poly_mod(Poly(poly.begin(), poly.end()), divisor, p);
      if (rem.empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(unsigned p, unsigned s) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const std::uint64_t count = static_cast<std::uint64_t>(ipow(p, s));
  for (std::uint64_t key = 0; key < count; ++key) {
    // The constant coefficient is the most significant digit of key.
    Poly poly(s + 1);
    std::uint64_t rest = key;
    for (unsigned k = s; k-- > 0;) {
      poly[k] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    poly[s] = 1;
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

GaloisField GaloisField::of_order(std::uint64_t q, const FieldOptions& options) {
  auto pp = prime_power(q);
  if (!pp) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
  return create(pp->first, pp->second, options);
}

GaloisField GaloisField::create(unsigned p, unsigned s, const FieldOptions& options) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const i128 q128 = ipow(p, s);
  if (q128 > static_cast<i128>(options.max_order)) {
    throw Error(ErrorKind::CapExceeded, std::to_string(p) + "^" + std::to_string(s) + " exceeds the field cap");
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->s = s;
  impl->q = static_cast<unsigned>(q128);
  impl->modulus = smallest_irreducible(p, s);
  const unsigned q = impl->q;

  impl->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly d = digits_of(a, p, s);
    for (auto& c : d) c = (p - c) % p;
    impl->neg[a] = index_of(d, p);
  }
  GaloisField partial(impl);
  if (q <= kAddTableMaxOrder) {
    impl->add_table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        impl->add_table[static_cast<std::size_t>(a) * q + b] = partial.add_digits({a}, {b}).index;
      }
    }
  }

  // Primitive element: order exactly q - 1.
  const auto factors = prime_factors(q - 1);
  auto slow_pow = [&](FieldElem a, std::uint64_t e) {
    FieldElem r{1};
    while (e > 0) {
      if (e & 1) r = partial.mul_slow(r, a);
      a = partial.mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  unsigned rank = options.generator_rank;
  bool found = false;
  for (std::uint32_t g = 1; g < q && !found; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow({g}, (q - 1) / r).index == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    if (rank == 0) {
      impl->generator = {g};
      found = true;
    } else {
      --rank;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "generator rank out of range");

  if (q <= kLogTableMaxOrder) {
    impl->log_table.assign(q, 0);
    impl->exp_table.resize(2 * static_cast<std::size_t>(q - 1));
    FieldElem x{1};
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      impl->exp_table[k] = x.index;
      impl->exp_table[k + q - 1] = x.index;
      impl->log_table[x.index] = k;
      x = partial.mul_slow(x, impl->generator);
    }
  }
  return GaloisField(std::move(impl));
}

FieldElem GaloisField::elem(std::uint64_t index) const {
  if (index >= impl_->q) {
    throw Error(ErrorKind::InvalidArgument,
                "element index " + std::to_string(index) + " out of range for q=" + std::to_string(impl_->q));
  }
  return {static_cast<std::uint32_t>(index)};
}

FieldElem GaloisField::from_integer(std::int64_t n) const {
  const std::int64_t p = impl_->p;
  return {static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElem GaloisField::add_digits(FieldElem a, FieldElem b) const {
  const unsigned p = impl_->p;
  if (p == 2) return {a.index ^ b.index};
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  std::uint32_t x = a.index;
  std::uint32_t y = b.index;
  for (unsigned k = 0; k < impl_->s; ++k) {
    out += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return {out};
}

FieldElem GaloisField::add(FieldElem a, FieldElem b) const {
  if (!impl_->add_table.empty()) {
    return {impl_->add_table[static_cast<std::size_t>(a.index) * impl_->q + b.index]};
  }
  return add_digits(a, b);
}

FieldElem GaloisField::mul_slow(FieldElem a, FieldElem b) const {
  const unsigned p = impl_->p;
  const unsigned s = impl_->s;
  Poly da = digits_of(a.index, p, s);
  Poly db = digits_of(b.index, p, s);
  Poly prod(2 * s - 1, 0);
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned j = 0; j < s; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    }
  }
  Poly rem = poly_mod(std::move(prod), impl_->modulus, p);
  rem.resize(s, 0);
  return {index_of(rem, p)};
}

FieldElem GaloisField::mul(FieldElem a, FieldElem b) const {
  if (a.index == 0 || b.index == 0) return {0};
  if (!impl_->log_table.empty()) {
    return {impl_->exp_table[impl_->log_table[a.index] + impl_->log_table[b.index]]};
  }
  return mul_slow(a, b);
}

FieldElem GaloisField::inv(FieldElem a) const {
  if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const unsigned n = impl_->q - 1;
  if (!impl_->log_table.empty()) {
    return {impl_->exp_table[(n - impl_->log_table[a.index]) % n]};
  }
  return pow(a, static_cast<std::int64_t>(n) - 1);
}

FieldElem GaloisField::pow(FieldElem a, std::int64_t e) const {
  if (a.index == 0) {
    if (e == 0) return {1};
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return {0};
  }
  const std::int64_t n = impl_->q - 1;
  const std::int64_t r = ((e % n) + n) % n;
  if (!impl_->log_table.empty()) {
    return {impl_->exp_table[static_cast<std::size_t>(
        (static_cast<std::int64_t>(impl_->log_table[a.index]) * r) % n)]};
  }
  FieldElem acc{1};
  FieldElem base = a;
  std::uint64_t k = static_cast<std::uint64_t>(r);
  while (k > 0) {
    if (k & 1) acc = mul_slow(acc, base);
    base = mul_slow(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint32_t GaloisField::log(FieldElem a) const {
  if (a.index == 0) throw Error(ErrorKind::DivisionByZero, "logarithm of zero");
  if (!impl_->log_table.empty()) return impl_->log_table[a.index];
  FieldElem x{1};
  for (std::uint32_t k = 0; k < impl_->q - 1; ++k) {
    if (x == a) return k;
    x = mul_slow(x, impl_->generator);
  }
  throw Error(ErrorKind::InvalidArgument, "logarithm not found");
}

FieldElem GaloisField::exp(std::int64_t e) const { return pow(impl_->generator, e); }

bool GaloisField::is_nonzero_square(FieldElem a) const {
  if (a.index == 0) return false;
  if (impl_->p == 2) return true;
  return pow(a, (impl_->q - 1) / 2).index == 1;
}

// ---- cyclotomy -----------------------------------------------------------

namespace {

void require_odd(const GaloisField& field, const char* what) {
  if (!field.is_odd()) throw Error(ErrorKind::EvenCharacteristic, std::string(what) + " requires q odd");
}

}  // namespace

bool in_cyclotomic_class(const GaloisField& field, std::uint64_t n, std::int64_t i, FieldElem x) {
  if (x.index == 0) return false;
  const std::uint64_t m = field.order() - 1;
  n = gcd(n == 0 ? m : n, m);
  const auto r = static_cast<std::int64_t>(n);
  const std::int64_t want = ((i % r) + r) % r;
  return static_cast<std::int64_t>(field.log(x) % n) == want;
}

std::vector<FieldElem> cyclotomic_class(const GaloisField& field, std::uint64_t n, std::int64_t i,
                                        std::uint64_t* effective_n) {
  const std::uint64_t m = field.order() - 1;
  const std::uint64_t eff = gcd(n == 0 ? m : n, m);
  if (effective_n != nullptr) *effective_n = eff;
  std::vector<FieldElem> out;
  out.reserve(m / eff);
  for (std::uint32_t x = 1; x < field.order(); ++x) {
    if (in_cyclotomic_class(field, eff, i, {x})) out.push_back({x});
  }
  return out;
}

std::int64_t cyclotomic_number2(const GaloisField& field, int i, int j) {
  require_odd(field, "cyclotomic_number2");
  std::int64_t count = 0;
  for (std::uint32_t x = 1; x < field.order(); ++x) {
    if (!in_cyclotomic_class(field, 2, i, {x})) continue;
    if (in_cyclotomic_class(field, 2, j, field.add(field.one(), {x}))) ++count;
  }
  return count;
}

std::int64_t cyclotomic_number2_closed(std::uint64_t q, int i, int j) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenCharacteristic, "cyclotomic numbers need q odd");
  const auto qq = static_cast<std::int64_t>(q);
  if (q % 4 == 1) {
    return (i == 0 && j == 0) ? (qq - 5) / 4 : (qq - 1) / 4;
  }
  return (i == 0 && j == 1) ? (qq + 1) / 4 : (qq - 3) / 4;
}

std::optional<CijIndex> cij_membership(const GaloisField& field, FieldElem c) {
  require_odd(field, "cij_membership");
  if (c.index == 0) return std::nullopt;
  const FieldElem minus = field.sub(field.one(), c);
  const FieldElem plus = field.add(field.one(), c);
  if (minus.index == 0 || plus.index == 0) return std::nullopt;
  return CijIndex{field.is_nonzero_square(minus) ? 0 : 1, field.is_nonzero_square(plus) ? 0 : 1};
}

std::vector<FieldElem> cij_set(const GaloisField& field, int i, int j) {
  require_odd(field, "cij_set");
  std::vector<FieldElem> out;
  for (std::uint32_t x = 1; x < field.order(); ++x) {
    auto m = cij_membership(field, {x});
    if (m && m->i == i && m->j == j) out.push_back({x});
  }
  return out;
}

std::int64_t cij_size_closed(std::uint64_t q, int delta, int i, int j) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenCharacteristic, "C_{i,j} needs q odd");
  const auto qq = static_cast<std::int64_t>(q);
  const std::int64_t base = (q % 4 == 1) ? (qq - 5) / 4 : (qq - 3) / 4;
  if (i == 0 && j == 0) return base - delta;
  if (i == 1 && j == 1) return base + delta;
  return (q % 4 == 1) ? (qq - 1) / 4 : (qq - 3) / 4;
}

int delta_ps(const GaloisField& field) {
  require_odd(field, "delta_ps");
  return field.is_nonzero_square(field.from_integer(2)) ? 1 : 0;
}

}  // namespace intdist
