#include "doctest.h"

#include "intdist/error.hpp"
#include "intdist/integer.hpp"
#include "intdist/kernels.hpp"
#include "intdist/plane.hpp"
#include "intdist/poly.hpp"
#include "support.hpp"

using namespace intdist;

TEST_CASE("plane counts and incidence") {
  for (unsigned q : prime_powers(2, 9)) {
    const auto plane = ProjectivePlane::create(GaloisField::of_order(q));
    const auto o = support::oracle_field(plane->field());
    const std::size_t n = static_cast<std::size_t>(q) * q + q + 1;
    REQUIRE(plane->size() == n);
    REQUIRE(plane->enumerate_points().size() == n);
    for (LineId l = 0; l < n; ++l) {
      const auto ln = plane->line(l);
      const oracle::Triple lt{ln.coeffs[0].index, ln.coeffs[1].index, ln.coeffs[2].index};
      std::size_t on = 0;
      for (PointId p = 0; p < n; ++p) {
        const auto pt = plane->point(p);
        const bool inc = oracle::incident(o, {pt.coords[0].index, pt.coords[1].index, pt.coords[2].index}, lt);
        REQUIRE(plane->incident(pt, ln) == inc);
        on += inc;
      }
      REQUIRE(on == q + 1);
      for (PointId p : plane->points_on(l)) REQUIRE(plane->incident(plane->point(p), ln));
    }
    for (PointId p = 0; p < n; ++p) {
      for (LineId l : plane->lines_through(p)) REQUIRE(plane->incident(plane->point(p), plane->line(l)));
    }
  }
}

TEST_CASE("ids round trip and follow lexicographic order") {
  const auto plane = ProjectivePlane::create(GaloisField::of_order(4));
  const auto pts = plane->enumerate_points();
  for (PointId i = 0; i < pts.size(); ++i) {
    CHECK(plane->id(pts[i]) == i);
    if (i > 0) CHECK(pts[i - 1] < pts[i]);
  }
  CHECK(plane->point(0).coords == std::array<FieldElem, 3>{FieldElem{0}, FieldElem{0}, FieldElem{1}});
}

TEST_CASE("join and meet") {
  const auto plane = ProjectivePlane::create(GaloisField::of_order(7));
  std::mt19937_64 rng(support::kSeed);
  std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(plane->size() - 1));
  for (int t = 0; t < 500; ++t) {
    const PointId a = pick(rng), b = pick(rng);
    if (a == b) {
      CHECK_THROWS_AS(plane->join(a, b), Error);
      continue;
    }
    const LineId l = plane->join(a, b);
    CHECK(plane->incident(plane->point(a), plane->line(l)));
    CHECK(plane->incident(plane->point(b), plane->line(l)));
    const PointId m = plane->meet(a, b);
    CHECK(plane->incident(plane->point(m), plane->line(a)));
    CHECK(plane->incident(plane->point(m), plane->line(b)));
  }
}

TEST_CASE("plane errors") {
  CHECK_THROWS_AS(ProjectivePlane::create(GaloisField::of_order(131)), Error);
  CHECK_NOTHROW(ProjectivePlane::create(GaloisField::of_order(128)));
  const auto f = GaloisField::of_order(5);
  CHECK_THROWS_AS(canonical_triple(f, {f.zero(), f.zero(), f.zero()}), Error);
  const auto plane = ProjectivePlane::create(f);
  CHECK_THROWS_AS(PointSet(plane, {1, 2, 2}), Error);
  CHECK_THROWS_AS(PointSet(plane, {1, 2, 31}), Error);
  CHECK_THROWS_AS(nuclei(PointSet(plane, {1, 2, 3})), Error);
}

TEST_CASE("canonical triples") {
  const auto f = GaloisField::of_order(9);
  const auto t = canonical_triple(f, {f.zero(), f.elem(5), f.elem(7)});
  CHECK(t[0] == f.zero());
  CHECK(t[1] == f.one());
  CHECK(t[2] == f.div(f.elem(7), f.elem(5)));
}

TEST_CASE("point set editing") {
  const auto plane = ProjectivePlane::create(GaloisField::of_order(3));
  const PointSet s(plane, {5, 1, 9});
  CHECK(std::vector<PointId>(s.members().begin(), s.members().end()) == std::vector<PointId>{1, 5, 9});
  CHECK(s.with(0).size() == 4);
  CHECK(s.without(5).size() == 2);
  CHECK(s.contains(9));
  CHECK_FALSE(s.without(9).contains(9));
  const auto m = s.membership();
  CHECK(m.size() == plane->size());
  CHECK(m[5] == 1);
  CHECK(m[4] == 0);
  CHECK(PointSet::from_points(plane, s.points()) == s);
}

TEST_CASE("intersection distribution matches line-by-line counting") {
  std::mt19937_64 rng(support::kSeed);
  for (unsigned q : prime_powers(2, 9)) {
    const auto plane = ProjectivePlane::create(GaloisField::of_order(q));
    const auto o = support::oracle_field(plane->field());
    const auto lines = oracle::projective_triples(o);
    const std::int64_t n = static_cast<std::int64_t>(plane->size());
    for (int t = 0; t < 25; ++t) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 2 * q + 2)(rng);
      const PointSet s = support::random_set(plane, k, rng);
      const auto expected = support::to_dist(oracle::u_counts(o, support::triples(s), lines), n);
      REQUIRE(intersection_distribution(s, ExecPolicy{1}) == expected);
      REQUIRE(intersection_distribution(s, ExecPolicy{4}) == expected);
      REQUIRE(non_hitting_index(s) == expected[0]);
    }
  }
}

TEST_CASE("arcs, nuclei and internal nuclei of a conic") {
  for (unsigned q : prime_powers(2, 16)) {
    const auto plane = ProjectivePlane::create(GaloisField::of_order(q));
    const auto& f = plane->field();
    const PointSet conic = graph_set(FieldPoly::monomial(f, 2), plane);
    CHECK(is_arc(conic));
    CHECK(internal_nuclei(conic).size() == q + 1);
    const auto nuc = nuclei(conic);
    if (q % 2 == 0) {
      REQUIRE(nuc.size() == 1);
      CHECK(is_arc(conic.with(plane->id(nuc[0]))));
    } else {
      CHECK(nuc.empty());
    }
    CHECK(set_degree(conic) == 2);
  }
}

TEST_CASE("internal nuclei match the oracle on random sets") {
  std::mt19937_64 rng(support::kSeed + 1);
  for (unsigned q : {3u, 4u, 5u}) {
    const auto plane = ProjectivePlane::create(GaloisField::of_order(q));
    const auto o = support::oracle_field(plane->field());
    for (int t = 0; t < 30; ++t) {
      const PointSet s = support::random_set(plane, q + 1, rng);
      std::vector<oracle::Triple> got;
      for (const auto& p : internal_nuclei(s)) got.push_back({p.coords[0].index, p.coords[1].index, p.coords[2].index});
      std::sort(got.begin(), got.end());
      CHECK(got == oracle::internal_nuclei(o, support::triples(s)));
      CHECK(is_arc(s) == oracle::is_arc(o, support::triples(s)));
    }
  }
}

TEST_CASE("set degree") {
  const auto plane = ProjectivePlane::create(GaloisField::of_order(5));
  const auto line = plane->points_on(0);
  const PointSet on_line(plane, {line.begin(), line.end()});
  CHECK(set_degree(on_line) == 6);
  CHECK(set_degree(PointSet(plane, {0})) == std::nullopt);
}

TEST_CASE("serial and parallel line counts agree") {
  std::mt19937_64 rng(support::kSeed + 2);
  for (unsigned q : {16u, 27u, 64u}) {
    const auto plane = ProjectivePlane::create(GaloisField::of_order(q));
    for (int t = 0; t < 5; ++t) {
      const auto m = support::random_set(plane, 3 * q, rng).membership();
      CHECK(kernels::line_counts_serial(*plane, m) == kernels::line_counts_parallel(*plane, m, ExecPolicy{4}));
    }
  }
}
