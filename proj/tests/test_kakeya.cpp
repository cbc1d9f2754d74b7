#include "doctest.h"

#include "intdist/error.hpp"
#include "intdist/integer.hpp"
#include "intdist/kakeya.hpp"
#include "support.hpp"

using namespace intdist;

TEST_CASE("dual Kakeya set points") {
  const auto plane5 = ProjectivePlane::create(GaloisField::of_order(5));
  const auto& f5 = plane5->field();
  const auto dk = dual_kakeya(FieldPoly::monomial(f5, 2), f5.zero(), plane5);
  CHECK(dk.points.size() == 7);
  CHECK(dk.points.contains(plane5->make_point(f5.one(), f5.zero(), f5.zero())));
  CHECK(dk.points.contains(plane5->make_point(f5.zero(), f5.one(), f5.zero())));
  for (std::uint32_t x = 0; x < 5; ++x) {
    CHECK(dk.points.contains(plane5->make_point(FieldElem{x}, f5.mul(FieldElem{x}, FieldElem{x}), f5.one())));
  }
  const auto plane4 = ProjectivePlane::create(GaloisField::of_order(4));
  CHECK(dual_kakeya(FieldPoly::monomial(plane4->field(), 2), FieldElem{0}, plane4).points.size() == 6);
  CHECK_THROWS_AS(dual_kakeya(FieldPoly::monomial(f5, 2), f5.zero(), plane4), Error);
}

TEST_CASE("Kakeya sizes") {
  const auto f5 = GaloisField::of_order(5);
  CHECK(dk_distribution_transfer(FieldPoly::monomial(f5, 2), f5.zero())[0] == 8);
  CHECK(kakeya_size(FieldPoly::monomial(f5, 2), f5.zero()) == 17);
  const auto f4 = GaloisField::of_order(4);
  CHECK(kakeya_size(FieldPoly::monomial(f4, 2), f4.zero()) == 10);
  const auto f3 = GaloisField::of_order(3);
  CHECK(kakeya_size(FieldPoly::monomial(f3, 1), f3.zero()) == 7);
}

TEST_CASE("transfer, sweep and oracle agree") {
  std::mt19937_64 rng(support::kSeed + 5);
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    const auto plane = ProjectivePlane::create(GaloisField::of_order(q));
    const auto& f = plane->field();
    const auto o = support::oracle_field(f);
    const auto lines = oracle::projective_triples(o);
    const std::int64_t n = static_cast<std::int64_t>(plane->size());
    for (int t = 0; t < 15; ++t) {
      const auto poly = support::random_poly(f, rng, q);
      const auto c = support::random_elem(f, rng);
      const auto report = kakeya_report(poly, c, plane, ExecPolicy{1});
      const auto direct = dk_distribution_direct(report.dk, ExecPolicy{2});
      auto pts = oracle::graph_points(o, support::value_indices(poly));
      pts.push_back({1, c.index, 0});
      const auto brute = support::to_dist(oracle::u_counts(o, pts, lines), n);
      REQUIRE(report.u == direct);
      REQUIRE(report.u == brute);
      REQUIRE(report.size == static_cast<std::int64_t>(q) * q - brute[0]);
    }
  }
  // f = x, c = 0 over GF(3)
  const auto plane3 = ProjectivePlane::create(GaloisField::of_order(3));
  const auto lin = FieldPoly::monomial(plane3->field(), 1);
  CHECK(dk_distribution_transfer(lin, FieldElem{0}) ==
        dk_distribution_direct(dual_kakeya(lin, FieldElem{0}, plane3)));
}

TEST_CASE("monomial census") {
  const auto census2 = monomial_census(GaloisField::of_order(2));
  CHECK(census2.entries == std::vector<CensusEntry>{{3, {1}}, {4, {1}}});
  const auto census4 = monomial_census(GaloisField::of_order(4));
  CHECK(census4.entries == std::vector<CensusEntry>{{10, {2}}, {12, {2, 3}}, {13, {1, 3}}, {16, {1}}});
  const auto census5 = monomial_census(GaloisField::of_order(5), ExecPolicy{1});
  for (const auto& e : census5.entries) CHECK(e.size != 18);
  CHECK(monomial_census(GaloisField::of_order(9), ExecPolicy{1}) == monomial_census(GaloisField::of_order(9), ExecPolicy{4}));
  CHECK_THROWS_AS(monomial_census(GaloisField::of_order(17)), Error);
  CHECK_NOTHROW(monomial_census(GaloisField::of_order(17), {}, 17));
}

TEST_CASE("census sizes lie among the attainable sizes") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto known = attainable_kakeya_sizes(q);
    REQUIRE_FALSE(known.empty());
    for (const auto& e : monomial_census(GaloisField::of_order(q)).entries) {
      CHECK(std::find(known.begin(), known.end(), e.size) != known.end());
    }
    // q^2 is always attained (the Kakeya set of the full plane)
    CHECK(known.back() == static_cast<std::int64_t>(q) * q);
  }
  CHECK(attainable_kakeya_sizes(11).empty());
}
