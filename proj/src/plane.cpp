#include "intdist/plane.hpp"

#include <algorithm>
#include <string>

#include "intdist/error.hpp"
#include "intdist/kernels.hpp"

namespace intdist {

std::array<FieldElem, 3> canonical_triple(const GaloisField& field, std::array<FieldElem, 3> v) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (v[k].index == 0) continue;
    if (v[k].index == 1) return v;
    const FieldElem scale = field.inv(v[k]);
    for (auto& x : v) x = field.mul(x, scale);
    return v;
  }
  throw Error(ErrorKind::InvalidArgument, "homogeneous triple is all zero");
}

std::shared_ptr<const ProjectivePlane> ProjectivePlane::create(const GaloisField& field) {
  return std::make_shared<const ProjectivePlane>(field);
}

ProjectivePlane::ProjectivePlane(const GaloisField& field) : field_(field) {
  const unsigned q = field.order();
  if (q > kMaxOrder) {
    throw Error(ErrorKind::CapExceeded, "PG(2," + std::to_string(q) + ") exceeds plane cap " +
                                            std::to_string(kMaxOrder));
  }
  size_ = static_cast<std::size_t>(q) * q + q + 1;
  points_on_.resize(size_ * (q + 1));
  lines_through_.resize(size_ * (q + 1));

  const FieldElem zero = field.zero();
  const FieldElem one = field.one();
  for (LineId l = 0; l < size_; ++l) {
    const auto [a, b, c] = decode(l);
    // Two independent solutions u, v of ax + by + cz = 0.
    std::array<FieldElem, 3> u;
    std::array<FieldElem, 3> v;
    if (a == one) {
      u = {field.neg(b), one, zero};
      v = {field.neg(c), zero, one};
    } else if (b == one) {
      u = {one, zero, zero};
      v = {zero, field.neg(c), one};
    } else {
      u = {one, zero, zero};
      v = {zero, one, zero};
    }
    PointId* out = points_on_.data() + l * (q + 1);
    out[0] = encode(v);
    for (std::uint32_t t = 0; t < q; ++t) {
      const FieldElem s{t};
      std::array<FieldElem, 3> w;
      for (std::size_t k = 0; k < 3; ++k) w[k] = field.add(u[k], field.mul(s, v[k]));
      out[t + 1] = encode(w);
    }
    std::sort(out, out + q + 1);
  }
  std::vector<std::uint32_t> fill(size_, 0);
  for (LineId l = 0; l < size_; ++l) {
    for (PointId p : points_on(l)) {
      lines_through_[static_cast<std::size_t>(p) * (q + 1) + fill[p]++] = l;
    }
  }
  for (PointId p = 0; p < size_; ++p) {
    if (fill[p] != q + 1) throw Error(ErrorKind::InvalidArgument, "incidence construction failed");
  }
}

std::uint32_t ProjectivePlane::encode(const std::array<FieldElem, 3>& raw) const {
  const auto v = canonical_triple(field_, raw);
  const std::uint32_t q = field_.order();
  if (v[0].index == 1) return 1 + q + v[1].index * q + v[2].index;
  if (v[1].index == 1) return 1 + v[2].index;
  return 0;
}

std::array<FieldElem, 3> ProjectivePlane::decode(std::uint32_t id) const {
  const std::uint32_t q = field_.order();
  if (id >= size_) throw Error(ErrorKind::InvalidArgument, "point/line id out of range");
  if (id == 0) return {FieldElem{0}, FieldElem{0}, FieldElem{1}};
  if (id <= q) return {FieldElem{0}, FieldElem{1}, FieldElem{id - 1}};
  const std::uint32_t k = id - 1 - q;
  return {FieldElem{1}, FieldElem{k / q}, FieldElem{k % q}};
}

ProjPoint ProjectivePlane::make_point(FieldElem x, FieldElem y, FieldElem z) const {
  return {canonical_triple(field_, {x, y, z})};
}

ProjLine ProjectivePlane::make_line(FieldElem a, FieldElem b, FieldElem c) const {
  return {canonical_triple(field_, {a, b, c})};
}

bool ProjectivePlane::incident(const ProjPoint& p, const ProjLine& l) const {
  FieldElem acc = field_.zero();
  for (std::size_t k = 0; k < 3; ++k) acc = field_.add(acc, field_.mul(p.coords[k], l.coeffs[k]));
  return acc.index == 0;
}

std::array<FieldElem, 3> ProjectivePlane::cross(const std::array<FieldElem, 3>& a,
                                                const std::array<FieldElem, 3>& b) const {
  const auto& f = field_;
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

LineId ProjectivePlane::join(PointId a, PointId b) const {
  if (a == b) throw Error(ErrorKind::InvalidArgument, "join of a point with itself");
  return encode(cross(decode(a), decode(b)));
}

PointId ProjectivePlane::meet(LineId a, LineId b) const {
  if (a == b) throw Error(ErrorKind::InvalidArgument, "meet of a line with itself");
  return encode(cross(decode(a), decode(b)));
}

std::vector<ProjPoint> ProjectivePlane::enumerate_points() const {
  std::vector<ProjPoint> out;
  out.reserve(size_);
  for (PointId p = 0; p < size_; ++p) out.push_back(point(p));
  return out;
}

std::vector<ProjLine> ProjectivePlane::enumerate_lines() const {
  std::vector<ProjLine> out;
  out.reserve(size_);
  for (LineId l = 0; l < size_; ++l) out.push_back(line(l));
  return out;
}

// ---- PointSet ------------------------------------------------------------

PointSet::PointSet(PlaneRef plane, std::vector<PointId> members) : plane_(std::move(plane)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorKind::InvalidArgument, "point set members must be distinct");
  }
  if (!members_.empty() && members_.back() >= plane_->size()) {
    throw Error(ErrorKind::InvalidArgument, "point id out of range");
  }
}

PointSet PointSet::from_points(PlaneRef plane, const std::vector<ProjPoint>& points) {
  std::vector<PointId> ids;
  ids.reserve(points.size());
  for (const auto& p : points) ids.push_back(plane->id(p));
  return PointSet(std::move(plane), std::move(ids));
}

bool PointSet::contains(PointId p) const { return std::binary_search(members_.begin(), members_.end(), p); }

std::vector<ProjPoint> PointSet::points() const {
  std::vector<ProjPoint> out;
  out.reserve(members_.size());
  for (PointId p : members_) out.push_back(plane_->point(p));
  return out;
}

std::vector<std::uint8_t> PointSet::membership() const {
  std::vector<std::uint8_t> m(plane_->size(), 0);
  for (PointId p : members_) m[p] = 1;
  return m;
}

PointSet PointSet::with(PointId p) const {
  auto m = members_;
  m.push_back(p);
  return PointSet(plane_, std::move(m));
}

PointSet PointSet::without(PointId p) const {
  auto m = members_;
  m.erase(std::remove(m.begin(), m.end(), p), m.end());
  return PointSet(plane_, std::move(m));
}

// ---- distributions -------------------------------------------------------

std::vector<std::uint32_t> line_intersection_counts(const PointSet& s, const ExecPolicy& policy) {
  const auto member = s.membership();
  if (policy.serial()) return kernels::line_counts_serial(s.plane(), member);
  return kernels::line_counts_parallel(s.plane(), member, policy);
}

Distribution intersection_distribution(const PointSet& s, const ExecPolicy& policy) {
  const auto counts = line_intersection_counts(s, policy);
  const auto total = static_cast<std::int64_t>(s.plane().size());
  if (policy.serial()) return kernels::histogram_serial(counts, total);
  return kernels::histogram_parallel(counts, total, policy);
}

std::int64_t non_hitting_index(const PointSet& s) { return intersection_distribution(s)[0]; }

std::optional<std::size_t> set_degree(const Distribution& u, std::size_t set_size) {
  if (set_size <= 1) return std::nullopt;
  return static_cast<std::size_t>(u.max_index());
}

std::optional<std::size_t> set_degree(const PointSet& s) {
  return set_degree(intersection_distribution(s), s.size());
}

std::vector<ProjPoint> internal_nuclei(const PointSet& s) {
  std::vector<ProjPoint> out;
  if (s.size() < 2) return out;
  const auto counts = line_intersection_counts(s);
  for (PointId p : s.members()) {
    const auto lines = s.plane().lines_through(p);
    if (std::all_of(lines.begin(), lines.end(), [&](LineId l) { return counts[l] <= 2; })) {
      out.push_back(s.plane().point(p));
    }
  }
  return out;
}

std::vector<ProjPoint> nuclei(const PointSet& s) {
  const unsigned q = s.plane().q();
  if (s.size() != q + 1) {
    throw Error(ErrorKind::SizeMismatch, "nuclei needs a (q+1)-set, got " + std::to_string(s.size()) + " points");
  }
  const auto counts = line_intersection_counts(s);
  std::vector<ProjPoint> out;
  for (PointId p = 0; p < s.plane().size(); ++p) {
    if (s.contains(p)) continue;
    const auto lines = s.plane().lines_through(p);
    if (std::all_of(lines.begin(), lines.end(), [&](LineId l) { return counts[l] == 1; })) {
      out.push_back(s.plane().point(p));
    }
  }
  return out;
}

bool is_arc(const PointSet& s) {
  const auto counts = line_intersection_counts(s);
  return std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c <= 2; });
}

}  // namespace intdist
