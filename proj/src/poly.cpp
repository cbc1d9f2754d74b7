#include "intdist/poly.hpp"

#include <algorithm>
#include <string>

#include "intdist/error.hpp"
#include "intdist/integer.hpp"
#include "intdist/kernels.hpp"

namespace intdist {

FieldPoly::FieldPoly(GaloisField field, const std::vector<FieldElem>& coeffs) : field_(std::move(field)) {
  const std::uint64_t q = field_.order();
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e].index == 0) continue;
    const std::uint64_t folded = e < q ? e : ((e - 1) % (q - 1)) + 1;
    if (coeffs_.size() <= folded) coeffs_.resize(folded + 1, field_.zero());
    coeffs_[folded] = field_.add(coeffs_[folded], coeffs[e]);
  }
  while (!coeffs_.empty() && coeffs_.back().index == 0) coeffs_.pop_back();
}

FieldPoly FieldPoly::monomial(const GaloisField& field, std::uint64_t d, FieldElem coeff) {
  const std::uint64_t q = field.order();
  const std::uint64_t folded = d < q ? d : ((d - 1) % (q - 1)) + 1;
  std::vector<FieldElem> c(folded + 1, field.zero());
  c[folded] = coeff;
  return FieldPoly(field, c);
}

FieldPoly FieldPoly::linear(const GaloisField& field, FieldElem a, FieldElem b) {
  return FieldPoly(field, {b, a});
}

FieldElem FieldPoly::operator()(FieldElem x) const {
  FieldElem acc = field_.zero();
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[k]);
  return acc;
}

std::vector<FieldElem> FieldPoly::values() const {
  std::vector<FieldElem> out(field_.order());
  for (std::uint32_t x = 0; x < field_.order(); ++x) out[x] = (*this)(FieldElem{x});
  return out;
}

FieldPoly FieldPoly::operator+(const FieldPoly& other) const {
  std::vector<FieldElem> c(std::max(coeffs_.size(), other.coeffs_.size()), field_.zero());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = field_.add(coeff(k), other.coeff(k));
  return FieldPoly(field_, c);
}

FieldElem evaluate(const FieldPoly& f, FieldElem x) { return f(x); }

PointSet graph_set(const FieldPoly& f, const PlaneRef& plane) {
  const auto& field = f.field();
  std::vector<PointId> ids;
  ids.reserve(field.order() + 1);
  for (std::uint32_t x = 0; x < field.order(); ++x) {
    ids.push_back(plane->id(plane->make_point(FieldElem{x}, f(FieldElem{x}), field.one())));
  }
  ids.push_back(plane->id(plane->make_point(field.zero(), field.one(), field.zero())));
  return PointSet(plane, std::move(ids));
}

MultiplicityRow multiplicity_distribution(const FieldPoly& f, FieldElem c) {
  const auto& field = f.field();
  const unsigned q = field.order();
  std::vector<std::uint32_t> tally(q, 0);
  for (std::uint32_t x = 0; x < q; ++x) ++tally[field.sub(f(FieldElem{x}), field.mul(c, FieldElem{x})).index];
  Distribution d(q);
  for (auto t : tally) d.add(t);
  return {c, d};
}

PolyProfile poly_profile(const FieldPoly& f, const ExecPolicy& policy) {
  const auto& field = f.field();
  const unsigned q = field.order();
  const auto values = f.values();
  auto dists = policy.serial() ? kernels::multiplicity_rows_serial(field, values)
                               : kernels::multiplicity_rows_parallel(field, values, policy);
  PolyProfile prof{f, {}, Distribution(static_cast<std::int64_t>(q) * q), {}, {}};
  prof.rows.reserve(q);
  for (std::uint32_t c = 0; c < q; ++c) {
    for (auto [i, n] : dists[c].nonzero()) prof.v.add(i, n);
    prof.rows.push_back({FieldElem{c}, std::move(dists[c])});
  }
  prof.value_set_plus_sizes.resize(q);
  for (std::uint32_t c = 0; c < q; ++c) {
    // f(x) + c x = f(x) - (-c) x
    const auto& row = prof.rows[field.neg(FieldElem{c}).index].dist;
    prof.value_set_plus_sizes[c] = static_cast<std::int64_t>(q) - row[0];
    if (prof.value_set_plus_sizes[c] == q) prof.permutation_directions.push_back(FieldElem{c});
  }
  return prof;
}

Distribution intersection_distribution_poly(const FieldPoly& f, const ExecPolicy& policy) {
  return poly_profile(f, policy).v;
}

std::set<FieldElem> value_set_plus(const FieldPoly& f, FieldElem c) {
  const auto& field = f.field();
  std::set<FieldElem> out;
  for (std::uint32_t x = 0; x < field.order(); ++x) out.insert(field.add(f(FieldElem{x}), field.mul(c, FieldElem{x})));
  return out;
}

std::set<FieldElem> value_set_minus(const FieldPoly& f, FieldElem c) {
  return value_set_plus(f, f.field().neg(c));
}

std::vector<FieldElem> permutation_directions(const FieldPoly& f) {
  std::vector<FieldElem> out;
  for (std::uint32_t c = 0; c < f.field().order(); ++c) {
    if (value_set_plus(f, FieldElem{c}).size() == f.field().order()) out.push_back(FieldElem{c});
  }
  return out;
}

bool is_permutation(const FieldPoly& f) { return value_set_plus(f, f.field().zero()).size() == f.field().order(); }

bool o_polynomial_test(const FieldPoly& f) {
  const auto& field = f.field();
  if (field.is_odd()) throw Error(ErrorKind::OddCharacteristic, "o-polynomials exist only for q even");
  if (!is_permutation(f)) return false;
  const unsigned q = field.order();
  std::vector<std::uint32_t> fiber(q);
  for (std::uint32_t c = 1; c < q; ++c) {
    std::fill(fiber.begin(), fiber.end(), 0);
    for (std::uint32_t x = 0; x < q; ++x) ++fiber[field.add(f(FieldElem{x}), field.mul(FieldElem{c}, FieldElem{x})).index];
    if (std::any_of(fiber.begin(), fiber.end(), [](std::uint32_t n) { return n != 0 && n != 2; })) return false;
  }
  return true;
}

FieldPoly interpolate(const GaloisField& field, const std::map<FieldElem, FieldElem>& points) {
  const unsigned q = field.order();
  if (points.size() != q) {
    throw Error(ErrorKind::IncompleteData, "need values at all " + std::to_string(q) + " points, got " +
                                                std::to_string(points.size()));
  }
  // f_0 = f(0); f_k = -sum_a f(a) a^(q-1-k) for 1 <= k <= q-1.
  std::vector<FieldElem> coeffs(q, field.zero());
  coeffs[0] = points.at(field.zero());
  for (unsigned k = 1; k < q; ++k) {
    FieldElem acc = field.zero();
    for (const auto& [a, y] : points) acc = field.add(acc, field.mul(y, field.pow(a, q - 1 - k)));
    coeffs[k] = field.neg(acc);
  }
  return FieldPoly(field, coeffs);
}

namespace {

FieldElem dot(const GaloisField& field, const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) {
  FieldElem acc = field.zero();
  for (std::size_t k = 0; k < 3; ++k) acc = field.add(acc, field.mul(a[k], b[k]));
  return acc;
}

std::array<FieldElem, 3> apply_raw(const GaloisField& field, const Matrix3& m, const std::array<FieldElem, 3>& v) {
  return {dot(field, m[0], v), dot(field, m[1], v), dot(field, m[2], v)};
}

}  // namespace

ProjPoint apply_frame(const ProjectivePlane& plane, const Matrix3& frame, const ProjPoint& p) {
  return {canonical_triple(plane.field(), apply_raw(plane.field(), frame, p.coords))};
}

Coordinatization coordinatize(const PointSet& s, const ProjPoint& nucleus) {
  const auto& plane = s.plane();
  const auto& field = plane.field();
  const unsigned q = plane.q();
  if (s.size() != q + 1) throw Error(ErrorKind::SizeMismatch, "coordinatize needs a (q+1)-set");
  const auto nuclei = internal_nuclei(s);
  if (std::find(nuclei.begin(), nuclei.end(), nucleus) == nuclei.end()) {
    throw Error(ErrorKind::NotInternalNucleus, "given point is not an internal nucleus of S");
  }
  const auto counts = line_intersection_counts(s);
  const PointId o = plane.id(nucleus);
  std::optional<LineId> tangent;
  for (LineId l : plane.lines_through(o)) {
    if (counts[l] == 1) tangent = l;
  }
  const ProjLine t = plane.line(*tangent);

  // Rows: r1 and r3 = t vanish on the nucleus, r2 does not. Smallest
  // canonical choices in point order.
  Matrix3 frame{};
  frame[2] = t.coeffs;
  bool have_r1 = false;
  bool have_r2 = false;
  for (PointId id = 0; id < plane.size() && !(have_r1 && have_r2); ++id) {
    const auto v = plane.point(id).coords;
    const bool vanishes = dot(field, v, nucleus.coords).index == 0;
    if (vanishes && !have_r1 && v != t.coeffs) {
      frame[0] = v;
      have_r1 = true;
    } else if (!vanishes && !have_r2) {
      frame[1] = v;
      have_r2 = true;
    }
  }

  std::map<FieldElem, FieldElem> samples;
  for (PointId id : s.members()) {
    if (id == o) continue;
    const auto w = apply_raw(field, frame, plane.point(id).coords);
    const FieldElem zinv = field.inv(w[2]);
    samples.emplace(field.mul(w[0], zinv), field.mul(w[1], zinv));
  }
  return {interpolate(field, samples), nucleus, t, frame};
}

DegreeBounds degree_bounds(std::uint64_t q, std::uint64_t d, std::uint64_t n_f_size) {
  if (d < 2 || d + 1 > q) {
    throw Error(ErrorKind::DegreeOutOfRange, "degree bounds need 2 <= d <= q-1, got d=" + std::to_string(d));
  }
  const auto qq = static_cast<std::int64_t>(q);
  const auto dd = static_cast<std::int64_t>(d);
  const auto nf = static_cast<std::int64_t>(n_f_size);
  DegreeBounds b{};
  b.lower = ceil_div(qq - 1, dd) * (qq - nf);
  b.upper = (qq - ceil_div(qq, dd)) * (qq - nf);
  b.degree_lower = ceil_div(qq - 1, dd) * std::max(ceil_div(qq - 1, dd - 1), dd + 1);
  if ((q - 1) % d == 0) {
    b.divisor_lower = qq * (qq - 1) / dd;
    b.divisor_upper = (dd - 1) * qq * (qq - 1) / dd;
  }
  return b;
}

DegreeBounds degree_bounds(const FieldPoly& f) {
  return degree_bounds(f.field().order(), f.degree(), permutation_directions(f).size());
}

}  // namespace intdist
