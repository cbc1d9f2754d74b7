#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace intdist {

// An element of GF(p^s), encoded as the base-p integer of its coefficient
// vector (constant coefficient is the least significant digit).
struct FieldElem {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

struct FieldOptions {
  // Upper bound on q accepted by GaloisField::create.
  std::uint64_t max_order = 1u << 20;
  // Which primitive element to use, counted in increasing index order.
  unsigned generator_rank = 0;
};

// Immutable arithmetic context for GF(p^s). Copies share the same tables.
class GaloisField {
 public:
  static GaloisField create(unsigned p, unsigned s, const FieldOptions& options = {});
  static GaloisField of_order(std::uint64_t q, const FieldOptions& options = {});

  unsigned characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->s; }
  unsigned order() const { return impl_->q; }
  bool is_odd() const { return impl_->p != 2; }

  // Monic irreducible modulus over GF(p), coefficients low degree first,
  // including the leading 1.
  std::span<const std::uint32_t> modulus() const { return impl_->modulus; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem elem(std::uint64_t index) const;
  // The element of the prime subfield represented by n mod p.
  FieldElem from_integer(std::int64_t n) const;
  FieldElem generator() const { return impl_->generator; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem neg(FieldElem a) const { return {impl_->neg[a.index]}; }
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  // pow(0, 0) == 1; negative exponents require a nonzero base.
  FieldElem pow(FieldElem a, std::int64_t e) const;

  // Discrete logarithm to the chosen generator; a must be nonzero.
  std::uint32_t log(FieldElem a) const;
  FieldElem exp(std::int64_t e) const;

  bool is_nonzero_square(FieldElem a) const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.impl_ == b.impl_ ||
           (a.order() == b.order() && a.impl_->generator == b.impl_->generator);
  }

 private:
  struct Impl {
    unsigned p = 0;
    unsigned s = 0;
    unsigned q = 0;
    std::vector<std::uint32_t> modulus;
    FieldElem generator;
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> add_table;  // q*q, only for small q
    std::vector<std::uint32_t> log_table;  // q entries, log_table[0] unused
    std::vector<std::uint32_t> exp_table;  // 2(q-1) entries
  };

  explicit GaloisField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  FieldElem mul_slow(FieldElem a, FieldElem b) const;
  FieldElem add_digits(FieldElem a, FieldElem b) const;

  std::shared_ptr<const Impl> impl_;
};

// Smallest monic irreducible polynomial of degree s over GF(p), ordering
// coefficient vectors lexicographically from the constant term upward.
std::vector<std::uint32_t> smallest_irreducible(unsigned p, unsigned s);

// Trial factorization against every monic polynomial of degree <= s/2.
bool is_irreducible(std::span<const std::uint32_t> poly, unsigned p);

// ---- cyclotomy -----------------------------------------------------------

// C_i^(N,q) = g^i * {nonzero N-th powers}. N is replaced by gcd(N, q-1);
// the effective N is written to *effective_n when given.
std::vector<FieldElem> cyclotomic_class(const GaloisField& field, std::uint64_t n, std::int64_t i,
                                        std::uint64_t* effective_n = nullptr);

bool in_cyclotomic_class(const GaloisField& field, std::uint64_t n, std::int64_t i, FieldElem x);

// (i,j)_q = |(1 + C_i^(2,q)) ∩ C_j^(2,q)|, counted directly. q odd.
std::int64_t cyclotomic_number2(const GaloisField& field, int i, int j);

// Closed form of the order-2 cyclotomic numbers.
std::int64_t cyclotomic_number2_closed(std::uint64_t q, int i, int j);

// C_{i,j} = { x != 0 : 1 - x in C_i^(2,q), 1 + x in C_j^(2,q) }. q odd.
std::vector<FieldElem> cij_set(const GaloisField& field, int i, int j);

std::int64_t cij_size_closed(std::uint64_t q, int delta, int i, int j);

// 1 when 2 is a nonzero square in GF(q), else 0. q odd.
int delta_ps(const GaloisField& field);

// Which of C_{0,0}, C_{0,1}, C_{1,0}, C_{1,1} contains c, if any.
struct CijIndex {
  int i;
  int j;
};
std::optional<CijIndex> cij_membership(const GaloisField& field, FieldElem c);

}  // namespace intdist
