#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "intdist/distribution.hpp"
#include "intdist/gf.hpp"
#include "intdist/plane.hpp"

namespace intdist {

// Polynomial over GF(q) reduced modulo x^q - x, so its degree is at most
// q - 1 and it is determined by its value map.
class FieldPoly {
 public:
  explicit FieldPoly(GaloisField field) : field_(std::move(field)) {}
  // Coefficients constant term first; exponents >= q are folded back.
  FieldPoly(GaloisField field, const std::vector<FieldElem>& coeffs);

  static FieldPoly monomial(const GaloisField& field, std::uint64_t d, FieldElem coeff);
  static FieldPoly monomial(const GaloisField& field, std::uint64_t d) { return monomial(field, d, field.one()); }
  // f(x) = a x + b
  static FieldPoly linear(const GaloisField& field, FieldElem a, FieldElem b);

  const GaloisField& field() const { return field_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  FieldElem coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

  // Degree; the zero polynomial has degree 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_affine() const { return coeffs_.size() <= 2; }

  FieldElem operator()(FieldElem x) const;
  // values()[x] = f(x) for every element index x.
  std::vector<FieldElem> values() const;

  FieldPoly operator+(const FieldPoly& other) const;

  friend bool operator==(const FieldPoly& a, const FieldPoly& b) {
    return a.field_.order() == b.field_.order() && a.coeffs_ == b.coeffs_;
  }

 private:
  GaloisField field_;
  std::vector<FieldElem> coeffs_;
};

FieldElem evaluate(const FieldPoly& f, FieldElem x);

// S_f = { <(x, f(x), 1)> } ∪ { <(0,1,0)> }.
PointSet graph_set(const FieldPoly& f, const PlaneRef& plane);

// M_i(f, c): elements occurring exactly i times in { f(x) - c x }.
struct MultiplicityRow {
  FieldElem c;
  Distribution dist;  // total_mass q
};

MultiplicityRow multiplicity_distribution(const FieldPoly& f, FieldElem c);

struct PolyProfile {
  FieldPoly f;
  std::vector<MultiplicityRow> rows;                   // indexed by c
  Distribution v;                                      // total_mass q^2
  std::vector<std::int64_t> value_set_plus_sizes;      // |V_{f,c}| indexed by c
  std::vector<FieldElem> permutation_directions;       // N_f
};

PolyProfile poly_profile(const FieldPoly& f, const ExecPolicy& policy = {});

// v_i(f) = sum over c of M_i(f, c).
Distribution intersection_distribution_poly(const FieldPoly& f, const ExecPolicy& policy = {});

// V_{f,c} = { f(x) + c x }.
std::set<FieldElem> value_set_plus(const FieldPoly& f, FieldElem c);

// The multiset { f(x) - c x } as a value set (the sign used by M_i).
std::set<FieldElem> value_set_minus(const FieldPoly& f, FieldElem c);

// N_f = { c : f(x) + c x is a permutation of GF(q) }.
std::vector<FieldElem> permutation_directions(const FieldPoly& f);

bool is_permutation(const FieldPoly& f);

// q even only: f is a permutation and f(x) + c x is 2-to-1 for every c != 0.
bool o_polynomial_test(const FieldPoly& f);

// Unique polynomial of degree <= q - 1 through all q given points.
FieldPoly interpolate(const GaloisField& field, const std::map<FieldElem, FieldElem>& points);

using Matrix3 = std::array<std::array<FieldElem, 3>, 3>;

struct Coordinatization {
  FieldPoly f;
  ProjPoint nucleus;
  ProjLine tangent;  // the line through the nucleus meeting S only there
  Matrix3 frame;     // rows; new coordinates = frame * old coordinates
};

// Applies frame to a point (column vector) and canonicalizes.
ProjPoint apply_frame(const ProjectivePlane& plane, const Matrix3& frame, const ProjPoint& p);

// Chooses coordinates with nucleus -> <(0,1,0)> and its tangent line ->
// <(0,0,1)^T>, then reads S off as the graph of a polynomial.
Coordinatization coordinatize(const PointSet& s, const ProjPoint& nucleus);

// Degree bounds on v_0. d = deg f must satisfy 2 <= d <= q-1.
struct DegreeBounds {
  std::int64_t lower;          // ceil((q-1)/d) (q - |N_f|)
  std::int64_t upper;          // (q - ceil(q/d)) (q - |N_f|)
  std::int64_t degree_lower;   // ceil((q-1)/d) max{ceil((q-1)/(d-1)), d+1}
  std::optional<std::int64_t> divisor_lower;  // q(q-1)/d when d | q-1
  std::optional<std::int64_t> divisor_upper;  // (d-1) q(q-1)/d when d | q-1
};

DegreeBounds degree_bounds(std::uint64_t q, std::uint64_t d, std::uint64_t n_f_size);
DegreeBounds degree_bounds(const FieldPoly& f);

}  // namespace intdist
