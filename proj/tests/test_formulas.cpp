#include "doctest.h"

#include "intdist/error.hpp"
#include "intdist/formulas.hpp"
#include "intdist/integer.hpp"
#include "intdist/kakeya.hpp"
#include "support.hpp"

using namespace intdist;

namespace {

FieldElem first_in_class(const GaloisField& f, std::uint64_t n, int i) {
  for (std::uint32_t x = 1; x < f.order(); ++x)
    if (in_cyclotomic_class(f, n, i, FieldElem{x})) return FieldElem{x};
  return f.zero();
}

}  // namespace

TEST_CASE("family names and parsing") {
  CHECK(parse_family_tag("q-2") == FamilyTag::QMinusTwo);
  CHECK(parse_family_tag("qm1h") == FamilyTag::HalfMinus);
  CHECK(parse_family_tag("(q+1)/2") == FamilyTag::HalfPlus);
  CHECK(parse_family_tag("p^i+1") == FamilyTag::FrobeniusPlusOne);
  CHECK(parse_family_tag("pi") == FamilyTag::Frobenius);
  CHECK(parse_family_tag("q+7") == std::nullopt);
  CHECK(family_name({FamilyTag::Frobenius, 1}) == "p^i (i=1)");
}

TEST_CASE("applicability and exponents") {
  const auto f2 = GaloisField::of_order(2);
  CHECK_FALSE(family_applicable({FamilyTag::QMinusTwo, 0}, f2));
  CHECK(family_applicable({FamilyTag::QMinusOne, 0}, f2));
  const auto f8 = GaloisField::of_order(8);
  CHECK_FALSE(family_applicable({FamilyTag::HalfMinus, 0}, f8));
  CHECK_THROWS_AS(family_exponent({FamilyTag::HalfMinus, 0}, f8), Error);
  CHECK_THROWS_AS(predict_intersection({FamilyTag::HalfPlus, 0}, f8), Error);
  CHECK_FALSE(family_applicable({FamilyTag::Frobenius, 3}, f8));
  CHECK(family_exponent({FamilyTag::Frobenius, 2}, f8) == 4);
  CHECK(family_exponent({FamilyTag::FrobeniusPlusOne, 1}, f8) == 3);
  // p^0 + 1 = 2, and for q = 2 the exponent folds into [1, q-1]
  CHECK(family_exponent({FamilyTag::FrobeniusPlusOne, 0}, f2) == 1);
  CHECK(family_h({FamilyTag::Frobenius, 0}, f8) == 3);
  CHECK(family_h({FamilyTag::Frobenius, 2}, GaloisField::of_order(16)) == 2);
  CHECK(family_exponents(GaloisField::of_order(9)) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 7, 8});
}

TEST_CASE("zero is in no cyclotomic class for the Frobenius rows") {
  for (unsigned q : {4u, 8u, 9u, 16u, 27u}) {
    const auto f = GaloisField::of_order(q);
    for (const auto& fam : applicable_families(f, FamilyTag::Frobenius)) {
      CHECK(classify(fam, f, f.zero()) == Branch::NotInPowerClass);
      const auto pred = predict_multiplicity(fam, f, f.zero());
      const auto o = support::oracle_field(f);
      const auto fv = oracle::monomial_values(o, family_exponent(fam, f));
      CHECK(pred.dist == support::to_dist(oracle::m_counts(o, fv, 0), q));
    }
  }
}

TEST_CASE("closed-form multiplicity rows") {
  const auto f7 = GaloisField::of_order(7);
  const auto sq = first_in_class(f7, 2, 0);
  CHECK(predict_multiplicity({FamilyTag::QMinusTwo, 0}, f7, sq).dist.to_string() == "0:4 2:2 3:1");

  const auto f9 = GaloisField::of_order(9);
  const auto c9 = first_in_class(f9, 2, 0);
  CHECK(predict_multiplicity({FamilyTag::Frobenius, 1}, f9, c9).dist.to_string() == "0:6 3:3");

  const auto f5 = GaloisField::of_order(5);
  const auto r = predict_multiplicity({FamilyTag::HalfPlus, 0}, f5, f5.one());
  CHECK(r.dist.to_string() == "0:2 1:2 3:1");
  CHECK(classify({FamilyTag::HalfPlus, 0}, f5, f5.one()) == Branch::PlusMinusOne);
  CHECK(classify({FamilyTag::HalfPlus, 0}, f5, f5.neg(f5.one())) == Branch::PlusMinusOne);
}

TEST_CASE("closed-form intersection distributions") {
  CHECK(predict_intersection({FamilyTag::QMinusOne, 0}, GaloisField::of_order(5)).dist.to_string() == "0:7 1:13 2:4 4:1");
  CHECK(predict_intersection({FamilyTag::Frobenius, 1}, GaloisField::of_order(8)).dist[0] == 28);
  CHECK(predict_intersection({FamilyTag::QMinusTwo, 0}, GaloisField::of_order(4)).dist.to_string() == "0:6 1:4 2:6");
  // d = 2 = p^0 + 1 over GF(9)
  CHECK(predict_intersection({FamilyTag::FrobeniusPlusOne, 0}, GaloisField::of_order(9)).dist.to_string() == "0:36 1:9 2:36");
}

TEST_CASE("closed-form dual Kakeya rows") {
  const auto f8 = GaloisField::of_order(8);
  CHECK(predict_dk({FamilyTag::Frobenius, 1}, f8, f8.one()).kakeya_size == 40);
  const auto f13 = GaloisField::of_order(13);
  CHECK(predict_dk({FamilyTag::HalfMinus, 0}, f13, f13.zero()).kakeya_size == 121);
  const auto f7 = GaloisField::of_order(7);
  CHECK(predict_dk({FamilyTag::QMinusTwo, 0}, f7, first_in_class(f7, 2, 1)).kakeya_size == 33);
  for (unsigned q : {4u, 8u, 16u}) {
    const auto f = GaloisField::of_order(q);
    const auto p = predict_dk({FamilyTag::QMinusTwo, 0}, f, f.zero());
    const std::int64_t Q = q;
    CHECK(p.dist.to_string() == "0:" + std::to_string(Q * (Q - 1) / 2) + " 2:" + std::to_string((Q + 1) * (Q + 2) / 2));
    CHECK(p.kakeya_size == Q * (Q + 1) / 2);
  }
  for (unsigned q : {5u, 7u, 9u, 16u}) {
    const auto f = GaloisField::of_order(q);
    const std::int64_t Q = q;
    const auto p = predict_dk({FamilyTag::QMinusOne, 0}, f, f.one());
    CHECK(p.dist[0] == 2 * Q - 4);
    CHECK(p.dist[3] == 1);
    CHECK(p.dist[Q - 1] == 1);
    CHECK(p.kakeya_size == Q * Q - 2 * Q + 4);
  }
}

TEST_CASE("verification harness") {
  for (unsigned q : prime_powers(2, 64)) {
    const auto f = GaloisField::of_order(q);
    for (const auto& fam : applicable_families(f, FamilyTag::FrobeniusPlusOne)) {
      const auto r = verify_family(fam, f);
      CHECK_MESSAGE(r.ok(), "q=", q, " ", r.family);
    }
  }
  const auto f9 = GaloisField::of_order(9);
  CHECK(verify_family({FamilyTag::QMinusTwo, 0}, f9).ok());

  const PowerFamily fam{FamilyTag::QMinusTwo, 0};
  auto v = predict_intersection(fam, f9).dist;
  v.add(0, 1);
  v.add(1, -1);
  const auto bad = verify_prediction(
      f9, 7, "corrupted", [&](FieldElem c) { return predict_multiplicity(fam, f9, c); }, v);
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0].what == "v");
  CHECK(bad.rows_checked == 9);
}

TEST_CASE("dual Kakeya closed forms three ways") {
  // closed form, transfer of the closed-form rows, and transfer of brute-force rows
  for (unsigned q : prime_powers(2, 32)) {
    const auto f = GaloisField::of_order(q);
    for (const auto& fam : applicable_families(f)) {
      const auto d = family_exponent(fam, f);
      const auto v_pred = predict_intersection(fam, f).dist;
      const auto prof = poly_profile(FieldPoly::monomial(f, d));
      for (std::uint32_t c = 0; c < q; ++c) {
        const auto dk = predict_dk(fam, f, FieldElem{c});
        const auto via_rows = dk_transfer(v_pred, predict_multiplicity(fam, f, FieldElem{c}).dist, q);
        const auto brute = dk_transfer(prof.v, prof.rows[c].dist, q);
        REQUIRE_MESSAGE(dk.dist == via_rows, "q=", q, " ", family_name(fam), " c=", c, " ", dk.case_label);
        REQUIRE_MESSAGE(dk.dist == brute, "q=", q, " ", family_name(fam), " c=", c, " ", dk.case_label);
        REQUIRE(dk.kakeya_size);
        REQUIRE_MESSAGE(*dk.kakeya_size == static_cast<std::int64_t>(q) * q - brute[0], "q=", q, " ",
                        family_name(fam), " c=", c, " ", dk.case_label);
      }
    }
  }
}
