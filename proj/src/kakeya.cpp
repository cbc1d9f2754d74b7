#include "intdist/kakeya.hpp"

#include <algorithm>
#include <map>

#include "intdist/error.hpp"
#include "intdist/kernels.hpp"

namespace intdist {

DualKakeyaSet dual_kakeya(const FieldPoly& f, FieldElem c, const PlaneRef& plane) {
  const auto& field = f.field();
  if (plane->q() != field.order()) throw Error(ErrorKind::SizeMismatch, "plane and polynomial fields differ");
  PointSet graph = graph_set(f, plane);
  return {f, c, graph.with(plane->id(plane->make_point(field.one(), c, field.zero())))};
}

Distribution dk_transfer(const Distribution& v, const Distribution& m, unsigned q) {
  Distribution u(static_cast<std::int64_t>(q) * q + q + 1);
  u.add(0, v[0] - m[0]);
  u.add(1, v[1] - m[1] + m[0]);
  u.add(2, v[2] - m[2] + m[1] + q + 1);
  for (std::size_t i = 3; i <= q; ++i) u.add(i, v[i] - m[i] + m[i - 1]);
  u.add(q + 1, m[q]);
  return u;
}

Distribution dk_distribution_transfer(const FieldPoly& f, FieldElem c, const ExecPolicy& policy) {
  const PolyProfile profile = poly_profile(f, policy);
  return dk_transfer(profile.v, profile.rows[c.index].dist, f.field().order());
}

Distribution dk_distribution_direct(const DualKakeyaSet& dk, const ExecPolicy& policy) {
  return intersection_distribution(dk.points, policy);
}

KakeyaReport kakeya_report(const FieldPoly& f, FieldElem c, const PlaneRef& plane, const ExecPolicy& policy) {
  DualKakeyaSet dk = dual_kakeya(f, c, plane);
  Distribution u = dk_distribution_transfer(f, c, policy);
  const auto q = static_cast<std::int64_t>(f.field().order());
  const std::int64_t size = q * q - u[0];
  return {std::move(dk), std::move(u), size};
}

std::int64_t kakeya_size(const FieldPoly& f, FieldElem c, const ExecPolicy& policy) {
  const auto q = static_cast<std::int64_t>(f.field().order());
  return q * q - dk_distribution_transfer(f, c, policy)[0];
}

namespace {

// |K(DK(d, c))| for every c, from one pass over the rows of x^d.
std::vector<std::int64_t> sizes_for_exponent(const GaloisField& field, std::uint64_t d) {
  const auto q = static_cast<std::int64_t>(field.order());
  const auto values = FieldPoly::monomial(field, d).values();
  const auto rows = kernels::multiplicity_rows_serial(field, values);
  std::int64_t v0 = 0;
  for (const auto& row : rows) v0 += row[0];
  std::vector<std::int64_t> out;
  out.reserve(rows.size());
  // u_0(DK) = v_0 - M_0(c)
  for (const auto& row : rows) out.push_back(q * q - (v0 - row[0]));
  return out;
}

}  // namespace

Census monomial_census(const GaloisField& field, const ExecPolicy& policy, unsigned cap) {
  const unsigned q = field.order();
  if (q > cap) throw Error(ErrorKind::CapExceeded, "census limited to q <= " + std::to_string(cap));
  std::vector<std::vector<std::int64_t>> per_d(q);
  if (policy.serial()) {
    for (unsigned d = 1; d < q; ++d) per_d[d] = sizes_for_exponent(field, d);
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_count(policy))
    for (int d = 1; d < static_cast<int>(q); ++d) per_d[d] = sizes_for_exponent(field, d);
  }
  std::map<std::int64_t, std::vector<std::uint64_t>> by_size;
  for (unsigned d = 1; d < q; ++d) {
    for (auto size : per_d[d]) {
      auto& ds = by_size[size];
      if (ds.empty() || ds.back() != d) ds.push_back(d);
    }
  }
  Census census{q, {}};
  for (auto& [size, ds] : by_size) census.entries.push_back({size, std::move(ds)});
  return census;
}

std::vector<std::int64_t> attainable_kakeya_sizes(unsigned q) {
  switch (q) {
    case 2: return {3, 4};
    case 3: return {7, 9};
    case 4: return {10, 12, 13, 16};
    case 5: return {17, 18, 19, 21, 25};
    case 7: return {31, 32, 33, 34, 35, 36, 37, 39, 43, 49};
    case 8: return {36, 40, 42, 43, 44, 45, 46, 47, 48, 49, 52, 57, 64};
    case 9: return {49, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 67, 73, 81};
    default: return {};
  }
}

}  // namespace intdist
