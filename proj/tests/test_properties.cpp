// Randomized property suites; each runs at least 1000 instances with a fixed seed.

#include "doctest.h"

#include "intdist/extremal.hpp"
#include "intdist/formulas.hpp"
#include "intdist/integer.hpp"
#include "intdist/kakeya.hpp"
#include "support.hpp"

using namespace intdist;

namespace {

constexpr int kInstances = 1000;

const std::vector<unsigned>& small_qs() {
  static const std::vector<unsigned> qs = prime_powers(2, 16);
  return qs;
}

struct Planes {
  std::map<unsigned, PlaneRef> by_q;
  const PlaneRef& operator()(unsigned q) {
    auto it = by_q.find(q);
    if (it == by_q.end()) it = by_q.emplace(q, ProjectivePlane::create(GaloisField::of_order(q))).first;
    return it->second;
  }
};

unsigned pick_q(std::mt19937_64& rng) {
  return small_qs()[std::uniform_int_distribution<std::size_t>(0, small_qs().size() - 1)(rng)];
}

}  // namespace

TEST_CASE("counting identities of (q+1)-sets") {
  std::mt19937_64 rng(support::kSeed + 10);
  Planes planes;
  for (int t = 0; t < kInstances; ++t) {
    const unsigned q = pick_q(rng);
    const auto s = support::random_set(planes(q), q + 1, rng);
    const auto u = intersection_distribution(s);
    const std::int64_t Q = q;
    REQUIRE(u.sum() == Q * Q + Q + 1);
    REQUIRE(u.first_moment() == (Q + 1) * (Q + 1));
    REQUIRE(u.second_factorial_moment() == Q * (Q + 1));
    std::int64_t excess = 0;
    for (const auto& [i, n] : u.nonzero())
      if (i >= 3) excess += static_cast<std::int64_t>((i - 1) * (i - 2) / 2) * n;
    REQUIRE(u[0] == Q * (Q - 1) / 2 - excess);
    REQUIRE(u[0] <= Q * (Q - 1) / 2);
    REQUIRE((u[0] == Q * (Q - 1) / 2) == (set_degree(s) == 2u));
  }
}

TEST_CASE("arc bound equality is exhaustive for q <= 3") {
  for (unsigned q : {2u, 3u}) {
    const auto plane = ProjectivePlane::create(GaloisField::of_order(q));
    const std::size_t n = plane->size(), k = q + 1;
    std::vector<PointId> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<PointId>(i);
    while (true) {
      const PointSet s(plane, idx);
      const auto u0 = non_hitting_index(s);
      REQUIRE((u0 == static_cast<std::int64_t>(q * (q - 1) / 2)) == is_arc(s));
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t t = pos; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
}

TEST_CASE("bounds hold on random (q+1)-sets") {
  std::mt19937_64 rng(support::kSeed + 11);
  Planes planes;
  for (int t = 0; t < kInstances; ++t) {
    const unsigned q = pick_q(rng);
    const auto s = support::random_set(planes(q), q + 1, rng);
    const auto r = check_bounds(s);
    for (const auto& c : r.checks) REQUIRE_MESSAGE(c.passed, "q=", q, " ", c.name, ": ", c.statement);
  }
}

TEST_CASE("bounds hold on perturbed arcs") {
  // one or two swaps away from the conic, where the upper bounds are tight
  std::mt19937_64 rng(support::kSeed + 12);
  Planes planes;
  for (int t = 0; t < kInstances; ++t) {
    const unsigned q = pick_q(rng);
    if (q == 2) continue;
    const auto& plane = planes(q);
    PointSet s = construct_example(ExampleKind::Arc, plane);
    const int swaps = 1 + t % 2;
    for (int k = 0; k < swaps; ++k) {
      const PointId out = s.members()[std::uniform_int_distribution<std::size_t>(0, q)(rng)];
      PointId in = 0;
      do in = std::uniform_int_distribution<PointId>(0, static_cast<PointId>(plane->size() - 1))(rng);
      while (s.contains(in));
      s = s.without(out).with(in);
    }
    const auto r = check_bounds(s);
    for (const auto& c : r.checks) REQUIRE_MESSAGE(c.passed, "q=", q, " ", c.name, ": ", c.statement);
  }
}

TEST_CASE("no (q+1)-set in the even gap below q(q-1)/2") {
  std::mt19937_64 rng(support::kSeed + 13);
  for (unsigned q : {8u, 16u}) {
    const auto plane = ProjectivePlane::create(GaloisField::of_order(q));
    const std::int64_t top = q * (q - 1) / 2;
    PointSet s = construct_example(ExampleKind::Arc, plane);
    for (int t = 0; t < kInstances; ++t) {
      const PointId out = s.members()[std::uniform_int_distribution<std::size_t>(0, q)(rng)];
      PointId in = 0;
      do in = std::uniform_int_distribution<PointId>(0, static_cast<PointId>(plane->size() - 1))(rng);
      while (s.contains(in));
      const PointSet next = s.without(out).with(in);
      const auto u0 = non_hitting_index(next);
      REQUIRE_FALSE((top - static_cast<std::int64_t>(q) / 2 + 1 < u0 && u0 < top));
      // restart from the conic whenever the walk drifts far down
      s = u0 + static_cast<std::int64_t>(q) < top ? construct_example(ExampleKind::Arc, plane) : next;
    }
  }
}

TEST_CASE("polynomial and set distributions are bridged by the graph") {
  std::mt19937_64 rng(support::kSeed + 14);
  Planes planes;
  for (int t = 0; t < kInstances; ++t) {
    const unsigned q = pick_q(rng);
    const auto& plane = planes(q);
    const auto f = support::random_poly(plane->field(), rng, q);
    const auto v = intersection_distribution_poly(f);
    const auto u = intersection_distribution(graph_set(f, plane));
    REQUIRE(v[0] == u[0]);
    REQUIRE(v[1] == u[1] - 1);
    REQUIRE(v[2] == u[2] - static_cast<std::int64_t>(q));
    for (std::size_t i = 3; i <= q; ++i) REQUIRE(v[i] == u[i]);
    REQUIRE(u[q + 1] == 0);
    REQUIRE(v[0] >= static_cast<std::int64_t>(q) - 1);
    REQUIRE(v[0] <= static_cast<std::int64_t>(q) * (q - 1) / 2);
    // nuclei of S_f lie on the line z = 0
    for (const auto& n : nuclei(graph_set(f, plane))) REQUIRE(n.coords[2] == FieldElem{0});
  }
}

TEST_CASE("v_0 = q - 1 exactly for affine polynomials of degree <= 2") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = GaloisField::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          const FieldPoly p(f, {FieldElem{a}, FieldElem{b}, FieldElem{c}});
          const auto v0 = intersection_distribution_poly(p)[0];
          REQUIRE(v0 >= static_cast<std::int64_t>(q) - 1);
          REQUIRE((v0 == static_cast<std::int64_t>(q) - 1) == p.is_affine());
        }
  }
}

TEST_CASE("multiplicity rows conserve mass") {
  std::mt19937_64 rng(support::kSeed + 15);
  for (int t = 0; t < kInstances; ++t) {
    const auto f = GaloisField::of_order(pick_q(rng));
    const auto row = multiplicity_distribution(support::random_poly(f, rng, f.order()), support::random_elem(f, rng)).dist;
    REQUIRE(row.sum() == f.order());
    REQUIRE(row.first_moment() == f.order());
  }
}

TEST_CASE("degree bounds on v_0") {
  std::mt19937_64 rng(support::kSeed + 16);
  int checked = 0;
  while (checked < kInstances) {
    const auto f = GaloisField::of_order(pick_q(rng));
    const unsigned q = f.order();
    if (q < 3) continue;
    const auto p = support::random_poly(f, rng, q);
    const auto d = p.degree();
    if (d < 2 || d > q - 1) continue;
    ++checked;
    const auto v0 = intersection_distribution_poly(p)[0];
    const auto b = degree_bounds(p);
    REQUIRE(b.lower <= v0);
    REQUIRE(v0 <= b.upper);
    REQUIRE(b.degree_lower <= v0);
    if (b.divisor_lower) {
      REQUIRE((q - 1) % d == 0);
      REQUIRE(*b.divisor_lower <= v0);
      REQUIRE(v0 <= *b.divisor_upper);
    }
  }
}

TEST_CASE("adding a linear function keeps the intersection distribution") {
  std::mt19937_64 rng(support::kSeed + 17);
  for (int t = 0; t < kInstances; ++t) {
    const auto f = GaloisField::of_order(pick_q(rng));
    const auto p = support::random_poly(f, rng, f.order());
    const auto l = FieldPoly::linear(f, support::random_elem(f, rng), support::random_elem(f, rng));
    REQUIRE(intersection_distribution_poly(p) == intersection_distribution_poly(p + l));
  }
}

TEST_CASE("x^d and x^(d^-1) have the same rows up to order") {
  std::mt19937_64 rng(support::kSeed + 18);
  int checked = 0;
  while (checked < kInstances) {
    const auto f = GaloisField::of_order(pick_q(rng));
    const unsigned q = f.order();
    if (q < 3) continue;
    const std::uint64_t d = std::uniform_int_distribution<std::uint64_t>(1, q - 2)(rng);
    if (gcd(d, q - 1) != 1) continue;
    std::uint64_t inv = 1;
    while ((inv * d) % (q - 1) != 1) ++inv;
    ++checked;
    auto rows = [&](std::uint64_t e) {
      std::vector<std::string> out;
      for (const auto& r : poly_profile(FieldPoly::monomial(f, e)).rows) out.push_back(r.dist.to_string());
      std::sort(out.begin(), out.end());
      return out;
    };
    REQUIRE(rows(d) == rows(inv));
  }
}

TEST_CASE("dual Kakeya transfer equals the line sweep") {
  std::mt19937_64 rng(support::kSeed + 19);
  Planes planes;
  for (int t = 0; t < kInstances; ++t) {
    const unsigned q = pick_q(rng);
    const auto& plane = planes(q);
    const auto f = support::random_poly(plane->field(), rng, q);
    const auto c = support::random_elem(plane->field(), rng);
    const auto u = dk_distribution_transfer(f, c);
    REQUIRE(u == dk_distribution_direct(dual_kakeya(f, c, plane)));
    const std::int64_t Q = q;
    REQUIRE(u.first_moment() == (Q + 2) * (Q + 1));
    REQUIRE(u.second_factorial_moment() == (Q + 2) * (Q + 1));
    if (q % 2 == 0) REQUIRE(Q * Q - u[0] >= Q * (Q + 1) / 2);
  }
}

TEST_CASE("predicted dual Kakeya rows satisfy the (q+2)-set identities") {
  for (unsigned q : prime_powers(2, 128)) {
    const auto f = GaloisField::of_order(q);
    const std::int64_t Q = q;
    for (const auto& fam : applicable_families(f)) {
      for (std::uint32_t c = 0; c < q; ++c) {
        const auto u = predict_dk(fam, f, FieldElem{c}).dist;
        REQUIRE(u.sum() == Q * Q + Q + 1);
        REQUIRE(u.first_moment() == (Q + 2) * (Q + 1));
        REQUIRE(u.second_factorial_moment() == (Q + 2) * (Q + 1));
      }
    }
  }
}

TEST_CASE("census does not depend on the generator") {
  for (unsigned q : {5u, 7u, 8u, 9u, 13u, 16u}) {
    FieldOptions other;
    other.generator_rank = 1;
    CHECK(monomial_census(GaloisField::of_order(q)) == monomial_census(GaloisField::of_order(q, other)));
  }
}

TEST_CASE("every branch assignment is total and matches membership") {
  for (unsigned q : prime_powers(3, 49)) {
    if (q % 2 == 0) continue;
    const auto f = GaloisField::of_order(q);
    const PowerFamily half{FamilyTag::HalfPlus, 0};
    for (std::uint32_t x = 0; x < q; ++x) {
      const FieldElem c{x};
      const Branch b = classify(half, f, c);
      if (c == f.one() || c == f.neg(f.one())) {
        REQUIRE(b == Branch::PlusMinusOne);
        continue;
      }
      const auto m = cij_membership(f, c);
      if (x == 0 || (m && m->i == m->j)) REQUIRE(b == Branch::CijZeroDiagonal);
      else REQUIRE(b == Branch::CijOffDiagonal);
    }
  }
}
