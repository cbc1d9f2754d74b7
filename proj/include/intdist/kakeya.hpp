#pragma once

#include <cstdint>
#include <vector>

#include "intdist/distribution.hpp"
#include "intdist/gf.hpp"
#include "intdist/plane.hpp"
#include "intdist/poly.hpp"

namespace intdist {

// DK(f, c) = S_f ∪ { <(1, c, 0)> }, a (q+2)-set with internal nucleus <(0,1,0)>.
struct DualKakeyaSet {
  FieldPoly base;
  FieldElem c;
  PointSet points;
};

DualKakeyaSet dual_kakeya(const FieldPoly& f, FieldElem c, const PlaneRef& plane);

// u(DK(f,c)) from v(f) and the row M(f,c):
//   u_0 = v_0 - M_0, u_1 = v_1 - M_1 + M_0, u_2 = v_2 - M_2 + M_1 + q + 1,
//   u_i = v_i - M_i + M_{i-1} (3 <= i <= q), u_{q+1} = M_q.
Distribution dk_transfer(const Distribution& v, const Distribution& m, unsigned q);
Distribution dk_distribution_transfer(const FieldPoly& f, FieldElem c, const ExecPolicy& policy = {});

// u(DK(f,c)) by sweeping every line of the plane.
Distribution dk_distribution_direct(const DualKakeyaSet& dk, const ExecPolicy& policy = {});

struct KakeyaReport {
  DualKakeyaSet dk;
  Distribution u;
  std::int64_t size = 0;  // |K| = q^2 - u_0
};

KakeyaReport kakeya_report(const FieldPoly& f, FieldElem c, const PlaneRef& plane, const ExecPolicy& policy = {});

std::int64_t kakeya_size(const FieldPoly& f, FieldElem c, const ExecPolicy& policy = {});

struct CensusEntry {
  std::int64_t size = 0;
  std::vector<std::uint64_t> exponents;  // increasing

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct Census {
  unsigned q = 0;
  std::vector<CensusEntry> entries;  // increasing size

  friend bool operator==(const Census&, const Census&) = default;
};

inline constexpr unsigned kCensusDefaultCap = 16;

// Sizes |K| attained by DK(d, c) over all 1 <= d <= q-1 and all c, grouped by size.
Census monomial_census(const GaloisField& field, const ExecPolicy& policy = {}, unsigned cap = kCensusDefaultCap);

// Every size of a Kakeya set in PG(2,q) known to be attainable, for q <= 9
// (from an exhaustive search in the literature). Empty for other q.
std::vector<std::int64_t> attainable_kakeya_sizes(unsigned q);

}  // namespace intdist
