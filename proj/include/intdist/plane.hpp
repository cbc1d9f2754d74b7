#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "intdist/distribution.hpp"
#include "intdist/gf.hpp"

namespace intdist {

// Point <(x, y, z)> of PG(2,q) in canonical form: the first nonzero
// coordinate is 1.
struct ProjPoint {
  std::array<FieldElem, 3> coords;

  friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

// Line <(a, b, c)^T> = { <(x,y,z)> : ax + by + cz = 0 }, same canonical form.
struct ProjLine {
  std::array<FieldElem, 3> coeffs;

  friend constexpr auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

using PointId = std::uint32_t;
using LineId = std::uint32_t;

struct ExecPolicy {
  // 1 selects the serial reference kernels; 0 lets OpenMP decide.
  int jobs = 0;

  bool serial() const { return jobs == 1; }
};

// Scales a nonzero triple so its first nonzero entry is 1.
std::array<FieldElem, 3> canonical_triple(const GaloisField& field, std::array<FieldElem, 3> v);

// PG(2,q) with precomputed incidence lists. Points and lines are numbered in
// lexicographic order of their canonical coordinate indices.
class ProjectivePlane {
 public:
  static constexpr unsigned kMaxOrder = 128;

  static std::shared_ptr<const ProjectivePlane> create(const GaloisField& field);

  explicit ProjectivePlane(const GaloisField& field);

  const GaloisField& field() const { return field_; }
  unsigned q() const { return field_.order(); }
  std::size_t size() const { return size_; }

  PointId id(const ProjPoint& p) const { return encode(p.coords); }
  LineId id(const ProjLine& l) const { return encode(l.coeffs); }
  ProjPoint point(PointId id) const { return {decode(id)}; }
  ProjLine line(LineId id) const { return {decode(id)}; }

  ProjPoint make_point(FieldElem x, FieldElem y, FieldElem z) const;
  ProjLine make_line(FieldElem a, FieldElem b, FieldElem c) const;

  bool incident(const ProjPoint& p, const ProjLine& l) const;

  std::span<const PointId> points_on(LineId l) const {
    return {points_on_.data() + static_cast<std::size_t>(l) * (q() + 1), q() + 1};
  }
  std::span<const LineId> lines_through(PointId p) const {
    return {lines_through_.data() + static_cast<std::size_t>(p) * (q() + 1), q() + 1};
  }

  LineId join(PointId a, PointId b) const;
  PointId meet(LineId a, LineId b) const;

  std::vector<ProjPoint> enumerate_points() const;
  std::vector<ProjLine> enumerate_lines() const;

 private:
  std::uint32_t encode(const std::array<FieldElem, 3>& v) const;
  std::array<FieldElem, 3> decode(std::uint32_t id) const;
  std::array<FieldElem, 3> cross(const std::array<FieldElem, 3>& a, const std::array<FieldElem, 3>& b) const;

  GaloisField field_;
  std::size_t size_ = 0;
  std::vector<PointId> points_on_;
  std::vector<LineId> lines_through_;
};

using PlaneRef = std::shared_ptr<const ProjectivePlane>;

class PointSet {
 public:
  explicit PointSet(PlaneRef plane) : plane_(std::move(plane)) {}
  PointSet(PlaneRef plane, std::vector<PointId> members);

  static PointSet from_points(PlaneRef plane, const std::vector<ProjPoint>& points);

  const ProjectivePlane& plane() const { return *plane_; }
  const PlaneRef& plane_ref() const { return plane_; }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(PointId p) const;
  bool contains(const ProjPoint& p) const { return contains(plane_->id(p)); }

  std::span<const PointId> members() const { return members_; }
  std::vector<ProjPoint> points() const;
  std::vector<std::uint8_t> membership() const;

  PointSet with(PointId p) const;
  PointSet without(PointId p) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.members_ == b.members_; }

 private:
  PlaneRef plane_;
  std::vector<PointId> members_;  // sorted, distinct
};

// counts[l] = |line l ∩ S| for every line.
std::vector<std::uint32_t> line_intersection_counts(const PointSet& s, const ExecPolicy& policy = {});

// u_i(S): number of lines meeting S in exactly i points. total_mass = q^2+q+1.
Distribution intersection_distribution(const PointSet& s, const ExecPolicy& policy = {});

std::int64_t non_hitting_index(const PointSet& s);

// max{ i >= 2 : u_i > 0 }; undefined for |S| <= 1.
std::optional<std::size_t> set_degree(const PointSet& s);
std::optional<std::size_t> set_degree(const Distribution& u, std::size_t set_size);

// Points P of S such that every line through P meets S \ {P} in at most one point.
std::vector<ProjPoint> internal_nuclei(const PointSet& s);

// Points P outside a (q+1)-set S such that every line through P meets S exactly once.
std::vector<ProjPoint> nuclei(const PointSet& s);

bool is_arc(const PointSet& s);

}  // namespace intdist
