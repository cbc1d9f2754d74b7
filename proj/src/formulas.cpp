#include "intdist/formulas.hpp"

#include <array>

#include "intdist/error.hpp"
#include "intdist/integer.hpp"
#include "intdist/poly.hpp"

namespace intdist {

namespace {

// Exact rational used to add up table entries whose terms are not
// individually integral.
struct Frac {
  i128 num;
  i128 den;
};

Frac fr(i128 num, i128 den = 1) { return {num, den}; }
Frac operator+(Frac a, Frac b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }

struct Params {
  i128 p = 0;
  i128 q = 0;
  unsigned s = 0;
  unsigned h = 0;

  i128 pw(int k) const {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative power of p");
    return ipow(p, static_cast<unsigned>(k));
  }
  i128 ph() const { return pw(static_cast<int>(h)); }
  // p^(a*s + b*h)
  i128 ps(int a, int b) const { return pw(a * static_cast<int>(s) + b * static_cast<int>(h)); }
};

Params params_of(const PowerFamily& family, const GaloisField& field) {
  Params k;
  k.p = field.characteristic();
  k.q = field.order();
  k.s = field.degree();
  k.h = family_h(family, field);
  return k;
}

// Builds a distribution from (index, value) pairs, checking integrality.
class Builder {
 public:
  explicit Builder(std::int64_t mass) : dist_(mass) {}

  void put(i128 index, i128 num, i128 den = 1) { put(index, fr(num, den)); }
  void put(i128 index, Frac value) {
    if (index < 0) throw Error(ErrorKind::InvalidArgument, "negative distribution index");
    dist_.add(static_cast<std::size_t>(index), exact_div(value.num, value.den));
  }

  Distribution take() { return std::move(dist_); }

 private:
  Distribution dist_;
};

void require_applicable(const PowerFamily& family, const GaloisField& field) {
  if (!family_applicable(family, field)) {
    throw Error(ErrorKind::FamilyInapplicable,
                family_name(family) + " over GF(" + std::to_string(field.order()) + ")");
  }
}

// Top-level split of the x^(p^i + 1) closed forms.
enum class PlusOneCase { LowValuation, EvenHigh, OddHigh };

PlusOneCase plus_one_case(const Params& k) {
  if (l2(k.h) < l2(k.s)) return PlusOneCase::LowValuation;
  return k.p == 2 ? PlusOneCase::EvenHigh : PlusOneCase::OddHigh;
}

std::string_view plus_one_label(PlusOneCase c) {
  switch (c) {
    case PlusOneCase::LowValuation: return "l2(h) < l2(s)";
    case PlusOneCase::EvenHigh: return "p = 2, l2(h) >= l2(s)";
    case PlusOneCase::OddHigh: return "p odd, l2(h) >= l2(s)";
  }
  return "";
}

std::string case_label(const PowerFamily& family, const GaloisField& field, Branch b) {
  std::string out;
  const std::int64_t q = field.order();
  switch (family.tag) {
    case FamilyTag::FrobeniusPlusOne:
      out = std::string(plus_one_label(plus_one_case(params_of(family, field)))) + "; ";
      break;
    case FamilyTag::HalfMinus:
    case FamilyTag::HalfPlus:
      out = q % 4 == 1 ? "q = 1 mod 4; " : "q = 3 mod 4; ";
      break;
    case FamilyTag::QMinusTwo:
      out = q % 2 == 0 ? "q even; " : (q % 4 == 1 ? "q = 1 mod 4; " : "q = 3 mod 4; ");
      break;
    default:
      break;
  }
  return out + std::string(branch_label(b));
}

}  // namespace

// ---- families -------------------------------------------------------------

std::string_view tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Frobenius: return "p^i";
    case FamilyTag::FrobeniusPlusOne: return "p^i+1";
    case FamilyTag::HalfMinus: return "(q-1)/2";
    case FamilyTag::HalfPlus: return "(q+1)/2";
    case FamilyTag::QMinusTwo: return "q-2";
    case FamilyTag::QMinusOne: return "q-1";
  }
  return "";
}

std::string family_name(const PowerFamily& family) {
  std::string out(tag_name(family.tag));
  if (has_index(family.tag)) out += " (i=" + std::to_string(family.i) + ")";
  return out;
}

std::optional<FamilyTag> parse_family_tag(std::string_view text) {
  struct Alias {
    std::string_view name;
    FamilyTag tag;
  };
  static constexpr std::array<Alias, 12> kAliases{{
      {"p^i", FamilyTag::Frobenius},
      {"pi", FamilyTag::Frobenius},
      {"p^i+1", FamilyTag::FrobeniusPlusOne},
      {"pi+1", FamilyTag::FrobeniusPlusOne},
      {"(q-1)/2", FamilyTag::HalfMinus},
      {"qm1h", FamilyTag::HalfMinus},
      {"(q+1)/2", FamilyTag::HalfPlus},
      {"qp1h", FamilyTag::HalfPlus},
      {"q-2", FamilyTag::QMinusTwo},
      {"qm2", FamilyTag::QMinusTwo},
      {"q-1", FamilyTag::QMinusOne},
      {"qm1", FamilyTag::QMinusOne},
  }};
  for (const auto& a : kAliases) {
    if (a.name == text) return a.tag;
  }
  return std::nullopt;
}

bool has_index(FamilyTag tag) { return tag == FamilyTag::Frobenius || tag == FamilyTag::FrobeniusPlusOne; }

bool family_applicable(const PowerFamily& family, const GaloisField& field) {
  switch (family.tag) {
    case FamilyTag::Frobenius:
    case FamilyTag::FrobeniusPlusOne:
      return family.i < field.degree();
    case FamilyTag::HalfMinus:
    case FamilyTag::HalfPlus:
      return field.is_odd();
    case FamilyTag::QMinusTwo:
      // x^0 is constant, outside the family.
      return field.order() >= 3;
    case FamilyTag::QMinusOne:
      return true;
  }
  return false;
}

unsigned family_h(const PowerFamily& family, const GaloisField& field) {
  if (!has_index(family.tag)) return 0;
  return static_cast<unsigned>(gcd(family.i, field.degree()));
}

std::uint64_t family_exponent(const PowerFamily& family, const GaloisField& field) {
  require_applicable(family, field);
  const std::uint64_t q = field.order();
  std::uint64_t d = 0;
  switch (family.tag) {
    case FamilyTag::Frobenius: d = static_cast<std::uint64_t>(ipow(field.characteristic(), family.i)); break;
    case FamilyTag::FrobeniusPlusOne: d = static_cast<std::uint64_t>(ipow(field.characteristic(), family.i)) + 1; break;
    case FamilyTag::HalfMinus: d = (q - 1) / 2; break;
    case FamilyTag::HalfPlus: d = (q + 1) / 2; break;
    case FamilyTag::QMinusTwo: d = q - 2; break;
    case FamilyTag::QMinusOne: d = q - 1; break;
  }
  if (d >= q) d = (d - 1) % (q - 1) + 1;
  return d;
}

std::vector<PowerFamily> applicable_families(const GaloisField& field, FamilyTag tag) {
  std::vector<PowerFamily> out;
  if (has_index(tag)) {
    for (unsigned i = 0; i < field.degree(); ++i) out.push_back({tag, i});
  } else if (family_applicable({tag, 0}, field)) {
    out.push_back({tag, 0});
  }
  return out;
}

std::vector<PowerFamily> applicable_families(const GaloisField& field) {
  std::vector<PowerFamily> out;
  for (FamilyTag tag : {FamilyTag::Frobenius, FamilyTag::FrobeniusPlusOne, FamilyTag::HalfMinus,
                        FamilyTag::HalfPlus, FamilyTag::QMinusTwo, FamilyTag::QMinusOne}) {
    for (const auto& f : applicable_families(field, tag)) out.push_back(f);
  }
  return out;
}

std::set<std::uint64_t> family_exponents(const GaloisField& field) {
  std::set<std::uint64_t> out;
  for (const auto& f : applicable_families(field)) out.insert(family_exponent(f, field));
  return out;
}

// ---- branch dispatch --------------------------------------------------------

std::string_view branch_label(Branch b) {
  switch (b) {
    case Branch::Zero: return "c = 0";
    case Branch::NonZero: return "c != 0";
    case Branch::InPowerClass: return "c in C_0^(p^h-1,q)";
    case Branch::NotInPowerClass: return "c not in C_0^(p^h-1,q)";
    case Branch::Square: return "c in C_0^(2,q)";
    case Branch::NonSquare: return "c in C_1^(2,q)";
    case Branch::PlusMinusOne: return "c = +-1";
    case Branch::CijZeroDiagonal: return "c in {0} u C_00 u C_11";
    case Branch::CijOffDiagonal: return "c in C_01 u C_10";
  }
  return "";
}

Branch classify(const PowerFamily& family, const GaloisField& field, FieldElem c) {
  require_applicable(family, field);
  const bool zero = c.index == 0;
  const std::uint64_t q = field.order();
  switch (family.tag) {
    case FamilyTag::Frobenius: {
      // 0 is never in a cyclotomic class, so c = 0 falls in the second branch.
      const auto n = static_cast<std::uint64_t>(ipow(field.characteristic(), family_h(family, field))) - 1;
      return in_cyclotomic_class(field, n, 0, c) ? Branch::InPowerClass : Branch::NotInPowerClass;
    }
    case FamilyTag::FrobeniusPlusOne:
    case FamilyTag::QMinusOne:
      return zero ? Branch::Zero : Branch::NonZero;
    case FamilyTag::HalfMinus:
      if (zero) return Branch::Zero;
      if (q % 4 == 1) return Branch::NonZero;
      return field.is_nonzero_square(c) ? Branch::Square : Branch::NonSquare;
    case FamilyTag::HalfPlus: {
      // 1 - c or 1 + c vanishes for c = +-1, so these c lie in no C_{i,j}.
      if (c == field.one() || c == field.neg(field.one())) return Branch::PlusMinusOne;
      const auto m = cij_membership(field, c);
      const bool diagonal = zero || (m && m->i == m->j);
      return diagonal ? Branch::CijZeroDiagonal : Branch::CijOffDiagonal;
    }
    case FamilyTag::QMinusTwo:
      if (zero) return Branch::Zero;
      if (!field.is_odd()) return Branch::NonZero;
      return field.is_nonzero_square(c) ? Branch::Square : Branch::NonSquare;
  }
  return Branch::Zero;
}

// ---- multiplicity rows -----------------------------------------------------

PredictedDistribution predict_multiplicity(const PowerFamily& family, const GaloisField& field, FieldElem c) {
  const Branch b = classify(family, field, c);
  const Params k = params_of(family, field);
  const i128 q = k.q;
  const int s = static_cast<int>(k.s);
  const int h = static_cast<int>(k.h);
  const i128 ph = k.ph();
  Builder m(static_cast<std::int64_t>(q));

  switch (family.tag) {
    case FamilyTag::Frobenius:
      if (b == Branch::InPowerClass) {
        m.put(0, q - k.pw(s - h));
        m.put(ph, k.pw(s - h));
      } else {
        m.put(1, q);
      }
      break;

    case FamilyTag::FrobeniusPlusOne:
      switch (plus_one_case(k)) {
        case PlusOneCase::LowValuation:
          if (b == Branch::Zero) {
            m.put(0, ph * (q - 1), ph + 1);
            m.put(1, 1);
            m.put(ph + 1, q - 1, ph + 1);
          } else {
            m.put(0, k.ps(1, 1) - ph, 2 * (ph + 1));
            m.put(1, k.pw(s - h));
            m.put(2, k.ps(1, 1) - 2 * q + ph, 2 * (ph - 1));
            m.put(ph + 1, k.pw(s - h) - ph, ph * ph - 1);
          }
          break;
        case PlusOneCase::EvenHigh:
          if (b == Branch::Zero) {
            m.put(1, q);
          } else {
            m.put(0, k.ps(1, 1) + ph, 2 * (ph + 1));
            m.put(1, k.pw(s - h) - 1);
            m.put(2, k.ps(1, 1) - 2 * q + ph, 2 * (ph - 1));
            m.put(ph + 1, k.pw(s - h) - 1, ph * ph - 1);
          }
          break;
        case PlusOneCase::OddHigh:
          if (b == Branch::Zero) {
            m.put(0, q - 1, 2);
            m.put(1, 1);
            m.put(2, q - 1, 2);
          } else {
            m.put(0, k.ps(1, 1) - 1, 2 * (ph + 1));
            m.put(1, k.pw(s - h));
            m.put(2, k.ps(1, 1) - 2 * q + 1, 2 * (ph - 1));
            m.put(ph + 1, k.pw(s - h) - 1, ph * ph - 1);
          }
          break;
      }
      break;

    case FamilyTag::HalfMinus: {
      const i128 d = (q - 1) / 2;
      if (b == Branch::Zero) {
        m.put(0, q - 3);
        m.put(1, 1);
        m.put(d, 2);
      } else if (q % 4 == 1) {
        m.put(0, q + 3, 4);
        m.put(1, q - 3, 2);
        m.put(2, q + 3, 4);
      } else {
        const i128 delta = delta_ps(field);
        if (b == Branch::Square) {
          m.put(0, q + 5 - 4 * delta, 4);
          m.put(1, fr(q - 3, 2) + fr(2 * delta));
          m.put(2, q - 3 - 4 * delta, 4);
          m.put(3, 1);
        } else {
          m.put(0, q - 3 + 4 * delta, 4);
          m.put(1, fr(q + 3, 2) + fr(-2 * delta));
          m.put(2, q - 3 + 4 * delta, 4);
        }
      }
      break;
    }

    case FamilyTag::HalfPlus: {
      const i128 d = (q + 1) / 2;
      const bool permutes =
          (q % 4 == 1) ? b == Branch::CijZeroDiagonal : b == Branch::CijOffDiagonal;
      if (b == Branch::PlusMinusOne) {
        m.put(0, q - 1, 2);
        m.put(1, q - 1, 2);
        m.put(d, 1);
      } else if (permutes) {
        m.put(1, q);
      } else {
        m.put(0, q - 1, 2);
        m.put(1, 1);
        m.put(2, q - 1, 2);
      }
      break;
    }

    case FamilyTag::QMinusTwo:
      if (b == Branch::Zero) {
        m.put(1, q);
      } else if (q % 2 == 0) {
        m.put(0, q, 2);
        m.put(2, q, 2);
      } else if (q % 4 == 1) {
        if (b == Branch::Square) {
          m.put(0, q - 1, 2);
          m.put(1, 2);
          m.put(2, q - 5, 2);
          m.put(3, 1);
        } else {
          m.put(0, q - 1, 2);
          m.put(1, 1);
          m.put(2, q - 1, 2);
        }
      } else {
        if (b == Branch::Square) {
          m.put(0, q + 1, 2);
          m.put(2, q - 3, 2);
          m.put(3, 1);
        } else {
          m.put(0, q - 3, 2);
          m.put(1, 3);
          m.put(2, q - 3, 2);
        }
      }
      break;

    case FamilyTag::QMinusOne:
      if (b == Branch::Zero) {
        m.put(0, q - 2);
        m.put(1, 1);
        m.put(q - 1, 1);
      } else {
        m.put(0, 1);
        m.put(1, q - 2);
        m.put(2, 1);
      }
      break;
  }
  return {PredictionKind::MultiplicityAtC, case_label(family, field, b), m.take(), std::nullopt};
}

// ---- intersection distributions v(x^d) ------------------------------------

PredictedDistribution predict_intersection(const PowerFamily& family, const GaloisField& field) {
  require_applicable(family, field);
  const Params k = params_of(family, field);
  const i128 q = k.q;
  const int s = static_cast<int>(k.s);
  const int h = static_cast<int>(k.h);
  const i128 ph = k.ph();
  Builder v(static_cast<std::int64_t>(q * q));
  std::string label;

  switch (family.tag) {
    case FamilyTag::Frobenius:
      v.put(0, k.pw(s - h) * (q - 1));
      v.put(1, q * (k.ps(1, 1) - 2 * q + 1), ph - 1);
      v.put(ph, k.pw(s - h) * (q - 1), ph - 1);
      break;
    case FamilyTag::FrobeniusPlusOne:
      v.put(0, ph * (q * q - 1), 2 * (ph + 1));
      v.put(1, k.ps(2, -1) - k.pw(s - h) + 1);
      v.put(2, ph * (q - 2 * k.pw(s - h) + 1) * (q - 1), 2 * (ph - 1));
      v.put(ph + 1, (k.pw(s - h) - 1) * (q - 1), ph * ph - 1);
      break;
    case FamilyTag::HalfMinus:
      if (q % 4 == 1) {
        label = "q = 1 mod 4";
        v.put(0, q * q + 6 * q - 15, 4);
        v.put(1, q * q - 4 * q + 5, 2);
        v.put(2, q * q + 2 * q - 3, 4);
      } else {
        label = "q = 3 mod 4";
        v.put(0, q * q + 4 * q - 13, 4);
        v.put(1, q * q - q + 2, 2);
        v.put(2, q * q - 4 * q + 3, 4);
        v.put(3, q - 1, 2);
      }
      v.put((q - 1) / 2, 2);
      break;
    case FamilyTag::HalfPlus:
      v.put(0, q * q + 2 * q - 3, 4);
      v.put(1, q * q - 3, 2);
      v.put(2, (q - 1) * (q - 1), 4);
      v.put((q + 1) / 2, 2);
      break;
    case FamilyTag::QMinusTwo:
      if (q % 2 == 0) {
        label = "q even";
        v.put(0, q * (q - 1), 2);
        v.put(1, q);
        v.put(2, q * (q - 1), 2);
      } else {
        label = "q odd";
        v.put(0, (q - 1) * (q - 1), 2);
        v.put(1, 5 * q - 3, 2);
        v.put(2, (q - 1) * (q - 3), 2);
        v.put(3, q - 1, 2);
      }
      break;
    case FamilyTag::QMinusOne:
      v.put(0, 2 * q - 3);
      v.put(1, q * q - 3 * q + 3);
      v.put(2, q - 1);
      v.put(q - 1, 1);
      break;
  }
  return {PredictionKind::Intersection, label, v.take(), std::nullopt};
}

// ---- dual Kakeya distributions ------------------------------------------

PredictedDistribution predict_dk(const PowerFamily& family, const GaloisField& field, FieldElem c) {
  const Branch b = classify(family, field, c);
  const Params k = params_of(family, field);
  const i128 q = k.q;
  const int s = static_cast<int>(k.s);
  const int h = static_cast<int>(k.h);
  const i128 ph = k.ph();
  const i128 psh = k.pw(s - h);
  Builder u(static_cast<std::int64_t>(q * q + q + 1));
  std::optional<Frac> size;  // set only where the table's |K| is not q^2 - u_0
  Frac u0 = fr(0);

  auto put0 = [&](Frac value) {
    u0 = value;
    u.put(0, value);
  };

  switch (family.tag) {
    case FamilyTag::Frobenius:
      if (b == Branch::InPowerClass) {
        put0(fr(q * (psh - 1)));
        u.put(1, psh * (k.ps(1, 2) - 2 * k.ps(1, 1) + ph * ph - ph + 1), ph - 1);
        u.put(2, q + 1);
        u.put(ph, q * (psh - 1), ph - 1);
        u.put(ph + 1, psh);
        size = fr(q * q - k.ps(2, -1) + q);
      } else {
        put0(fr(psh * (q - 1)));
        u.put(1, q * (q - 1) * (ph - 2), ph - 1);
        u.put(2, 2 * q + 1);
        u.put(ph, psh * (q - 1), ph - 1);
        size = fr(q * q - k.ps(2, -1) + psh);
      }
      break;

    case FamilyTag::FrobeniusPlusOne:
      switch (plus_one_case(k)) {
        case PlusOneCase::LowValuation:
          if (b == Branch::Zero) {
            put0(fr(ph * (q - 1) * (q - 1), 2 * (ph + 1)));
            u.put(1, (q + psh + ph) * (q - 1), ph + 1);
            u.put(2, k.ps(2, 1) - 2 * q * q + 2 * k.ps(1, 1) + 3 * ph - 4, 2 * (ph - 1));
            u.put(ph + 1, (psh - ph) * (q - 1), ph * ph - 1);
            u.put(ph + 2, q - 1, ph + 1);
          } else {
            put0(fr(k.ps(1, 1) * (q - 1), 2 * (ph + 1)));
            u.put(1, fr(ph * (q - 1), 2 * (ph + 1)) + fr(k.ps(2, -1) - 2 * psh + 1));
            u.put(2, fr((ph - 2) * (q - 1) * (q - 2), 2 * (ph - 1)) + fr(2 * q + psh - 1));
            u.put(3, k.ps(1, 1) - 2 * q + ph, 2 * (ph - 1));
            u.put(ph + 1, k.ps(2, -1) - q - 2 * psh + ph + 1, ph * ph - 1);
            u.put(ph + 2, psh - ph, ph * ph - 1);
          }
          break;
        case PlusOneCase::EvenHigh:
          if (b == Branch::Zero) {
            put0(fr(ph * (q * q - 1), 2 * (ph + 1)));
            u.put(1, (psh - 1) * (q - 1));
            u.put(2, fr((ph - 2) * (q - 1) * (q - 1), 2 * (ph - 1)) + fr(3 * q));
            u.put(ph + 1, (psh - 1) * (q - 1), ph * ph - 1);
          } else {
            put0(fr(ph * (q + 1) * (q - 2), 2 * (ph + 1)));
            u.put(1, fr(ph * (q + 1), 2 * (ph + 1)) + fr(k.ps(2, -1) - 2 * psh + 2));
            u.put(2, fr((ph - 2) * (q - 1) * (q - 2), 2 * (ph - 1)) + fr(2 * q + psh - 2));
            u.put(3, k.ps(1, 1) - 2 * q + ph, 2 * (ph - 1));
            u.put(ph + 1, (psh - 1) * (q - 2), ph * ph - 1);
            u.put(ph + 2, psh - 1, ph * ph - 1);
          }
          break;
        case PlusOneCase::OddHigh:
          if (b == Branch::Zero) {
            put0(fr((k.ps(1, 1) - 1) * (q - 1), 2 * (ph + 1)));
            u.put(1, (2 * psh + 1) * (q - 1), 2);
            u.put(2, k.ps(2, 1) - 2 * q * q + k.ps(1, 1) + q + 4 * ph - 5, 2 * (ph - 1));
            u.put(3, q - 1, 2);
            u.put(ph + 1, (psh - 1) * (q - 1), ph * ph - 1);
          } else {
            put0(fr(k.ps(2, 1) - k.ps(1, 1) - ph + 1, 2 * (ph + 1)));
            u.put(1, fr(k.ps(1, 1) - 1, 2 * (ph + 1)) + fr(k.ps(2, -1) - 2 * psh + 1));
            u.put(2, k.ps(2, 1) - 2 * q * q + k.ps(1, 1) + 4 * q - 2 * psh + ph - 3, 2 * (ph - 1));
            u.put(3, k.ps(1, 1) - 2 * q + 1, 2 * (ph - 1));
            u.put(ph + 1, (psh - 1) * (q - 2), ph * ph - 1);
            u.put(ph + 2, psh - 1, ph * ph - 1);
          }
          break;
      }
      break;

    case FamilyTag::HalfMinus: {
      const i128 d = (q - 1) / 2;
      if (q % 4 == 1) {
        if (b == Branch::Zero) {
          put0(fr(q * q + 2 * q - 3, 4));
          u.put(1, q * q - 2 * q - 3, 2);
          u.put(2, q * q + 6 * q + 5, 4);
          u.put((q + 1) / 2, 2);
          size = fr(3 * q * q - 2 * q + 3, 4);
        } else {
          put0(fr(q * q + 5 * q - 18, 4));
          u.put(1, 2 * q * q - 9 * q + 19, 4);
          u.put(2, q * q + 7 * q - 8, 4);
          u.put(3, q + 3, 4);
          u.put(d, 2);
          size = fr(3 * q * q - 5 * q + 18, 4);
        }
      } else if (b == Branch::Zero) {
        put0(fr(q * q - 1, 4));
        u.put(1, q * q + q - 6, 2);
        u.put(2, q * q + 11, 4);
        u.put(3, q - 1, 2);
        u.put((q + 1) / 2, 2);
        size = fr(3 * q * q + 1, 4);
      } else if (q % 8 == 3) {
        if (b == Branch::Square) {
          put0(fr(q * q + 3 * q - 18, 4));
          u.put(1, 2 * q * q - 3 * q + 15, 4);
          u.put(2, q * q + q + 4, 4);
          u.put(3, 3 * q - 9, 4);
          u.put(4, 1);
          u.put(d, 2);
          size = fr(3 * q * q - 3 * q + 18, 4);
        } else {
          put0(fr(q * q + 3 * q - 10, 4));
          u.put(1, 2 * q * q - 3 * q - 5, 4);
          u.put(2, q * q + q + 16, 4);
          u.put(3, 3 * q - 5, 4);
          u.put(d, 2);
          size = fr(3 * q * q - 3 * q + 10, 4);
        }
      } else {
        if (b == Branch::Square) {
          put0(fr(q * q + 3 * q - 14, 4));
          u.put(1, 2 * q * q - 3 * q + 3, 4);
          u.put(2, q * q + q + 16, 4);
          u.put(3, 3 * q - 13, 4);
          u.put(4, 1);
          u.put(d, 2);
        } else {
          put0(fr(q * q + 3 * q - 14, 4));
          u.put(1, 2 * q * q - 3 * q + 7, 4);
          u.put(2, q * q + q + 4, 4);
          u.put(3, 3 * q - 1, 4);
          u.put(d, 2);
        }
        size = fr(3 * q * q - 3 * q + 14, 4);
      }
      break;
    }

    case FamilyTag::HalfPlus: {
      const i128 d = (q + 1) / 2;
      const bool permutes = (q % 4 == 1) ? b == Branch::CijZeroDiagonal : b == Branch::CijOffDiagonal;
      if (b == Branch::PlusMinusOne) {
        put0(fr(q * q - 1, 4));
        u.put(1, q * q - 3, 2);
        u.put(2, q * q + 4 * q + 3, 4);
        u.put(d, 1);
        u.put(d + 1, 1);
        size = fr(3 * q * q + 1, 4);
      } else if (permutes) {
        put0(fr(q * q + 2 * q - 3, 4));
        u.put(1, q * q - 2 * q - 3, 2);
        u.put(2, q * q + 6 * q + 5, 4);
        u.put(d, 2);
        size = fr(3 * q * q - 2 * q + 3, 4);
      } else {
        put0(fr(q * q - 1, 4));
        u.put(1, q * q + q - 6, 2);
        u.put(2, q * q + 11, 4);
        u.put(3, q - 1, 2);
        u.put(d, 2);
        size = fr(3 * q * q + 1, 4);
      }
      break;
    }

    case FamilyTag::QMinusTwo:
      if (q % 2 == 0) {
        if (b == Branch::Zero) {
          put0(fr(q * (q - 1), 2));
          u.put(2, (q + 1) * (q + 2), 2);
          size = fr(q * (q + 1), 2);
        } else {
          put0(fr(q * (q - 2), 2));
          u.put(1, 3 * q, 2);
          u.put(2, q * q + 2, 2);
          u.put(3, q, 2);
          size = fr(q * (q + 2), 2);
        }
      } else if (b == Branch::Zero) {
        put0(fr((q - 1) * (q - 1), 2));
        u.put(1, 3 * (q - 1), 2);
        u.put(2, q * q + 5, 2);
        u.put(3, q - 1, 2);
        size = fr(q * q + 2 * q - 1, 2);
      } else if (q % 4 == 1) {
        if (b == Branch::Square) {
          put0(fr((q - 1) * (q - 2), 2));
          u.put(1, 3 * q - 4);
          u.put(2, q * q - 3 * q + 14, 2);
          u.put(3, q - 4);
          u.put(4, 1);
        } else {
          put0(fr((q - 1) * (q - 2), 2));
          u.put(1, 3 * q - 3);
          u.put(2, q * q - 3 * q + 8, 2);
          u.put(3, q - 1);
        }
        size = fr(q * q + 3 * q - 2, 2);
      } else {
        if (b == Branch::Square) {
          put0(fr(q * q - 3 * q, 2));
          u.put(1, 3 * q - 1);
          u.put(2, q * q - 3 * q + 8, 2);
          u.put(3, q - 3);
          u.put(4, 1);
          size = fr(q * q + 3 * q, 2);
        } else {
          put0(fr(q * q - 3 * q + 4, 2));
          u.put(1, 3 * q - 6);
          u.put(2, q * q - 3 * q + 14, 2);
          u.put(3, q - 2);
          size = fr(q * q + 3 * q - 4, 2);
        }
      }
      break;

    case FamilyTag::QMinusOne:
      if (b == Branch::Zero) {
        put0(fr(q - 1));
        u.put(1, q * q - 2 * q);
        u.put(2, 2 * q + 1);
        u.put(q, 1);
        size = fr(q * q - q + 1);
      } else {
        put0(fr(2 * q - 4));
        u.put(1, q * q - 4 * q + 6);
        u.put(2, 3 * q - 3);
        u.put(3, 1);
        u.put(q - 1, 1);
        size = fr(q * q - 2 * q + 4);
      }
      break;
  }

  const std::int64_t kakeya = size ? exact_div(size->num, size->den)
                                    : static_cast<std::int64_t>(q * q) - exact_div(u0.num, u0.den);
  return {PredictionKind::DualKakeya, case_label(family, field, b), u.take(),
          kakeya};
}

// ---- verification ---------------------------------------------------------

VerificationReport verify_prediction(const GaloisField& field, std::uint64_t exponent, std::string label,
                                     const RowPredictor& predict_row, const Distribution& predicted_v,
                                     const ExecPolicy& policy) {
  VerificationReport report;
  report.family = std::move(label);
  report.q = field.order();
  report.exponent = exponent;
  const PolyProfile profile = poly_profile(FieldPoly::monomial(field, exponent), policy);
  for (const auto& row : profile.rows) {
    const PredictedDistribution predicted = predict_row(row.c);
    ++report.rows_checked;
    if (!(predicted.dist == row.dist)) {
      report.mismatches.push_back({"row", row.c, predicted.case_label, predicted.dist, row.dist});
    }
  }
  if (!(predicted_v == profile.v)) {
    report.mismatches.push_back({"v", std::nullopt, "", predicted_v, profile.v});
  }
  return report;
}

VerificationReport verify_family(const PowerFamily& family, const GaloisField& field, const ExecPolicy& policy) {
  const std::uint64_t d = family_exponent(family, field);
  return verify_prediction(
      field, d, family_name(family),
      [&](FieldElem c) { return predict_multiplicity(family, field, c); },
      predict_intersection(family, field).dist, policy);
}

}  // namespace intdist
