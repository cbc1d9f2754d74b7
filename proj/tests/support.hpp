#pragma once

// Conversions between library types and the oracle representation.

#include <random>
#include <vector>

#include "intdist/distribution.hpp"
#include "intdist/gf.hpp"
#include "intdist/plane.hpp"
#include "intdist/poly.hpp"
#include "oracles.hpp"

namespace support {

inline constexpr std::uint64_t kSeed = 20240611;

inline oracle::Field oracle_field(const intdist::GaloisField& f) {
  return oracle::Field(f.characteristic(), f.degree(), {f.modulus().begin(), f.modulus().end()});
}

inline intdist::Distribution to_dist(const oracle::Counts& c, std::int64_t total) {
  intdist::Distribution d(total);
  for (std::size_t i = 0; i < c.size(); ++i) d.add(i, c[i]);
  return d;
}

inline std::vector<oracle::Triple> triples(const intdist::PointSet& s) {
  std::vector<oracle::Triple> out;
  for (const auto& p : s.points()) out.push_back({p.coords[0].index, p.coords[1].index, p.coords[2].index});
  return out;
}

inline std::vector<oracle::u32> coeff_indices(const intdist::FieldPoly& f) {
  std::vector<oracle::u32> out;
  for (auto c : f.coeffs()) out.push_back(c.index);
  return out;
}

inline std::vector<oracle::u32> value_indices(const intdist::FieldPoly& f) {
  std::vector<oracle::u32> out;
  for (auto v : f.values()) out.push_back(v.index);
  return out;
}

// Random polynomial of degree < max_terms with uniformly random coefficients.
inline intdist::FieldPoly random_poly(const intdist::GaloisField& field, std::mt19937_64& rng, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> len(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> coef(0, field.order() - 1);
  std::vector<intdist::FieldElem> c(len(rng));
  for (auto& x : c) x = intdist::FieldElem{coef(rng)};
  return intdist::FieldPoly(field, c);
}

inline intdist::FieldElem random_elem(const intdist::GaloisField& field, std::mt19937_64& rng) {
  return intdist::FieldElem{std::uniform_int_distribution<std::uint32_t>(0, field.order() - 1)(rng)};
}

inline intdist::PointSet random_set(const intdist::PlaneRef& plane, std::size_t k, std::mt19937_64& rng) {
  std::vector<intdist::PointId> all(plane->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<intdist::PointId>(i);
  std::vector<intdist::PointId> pick;
  std::sample(all.begin(), all.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(k), rng);
  return intdist::PointSet(plane, pick);
}

}  // namespace support
