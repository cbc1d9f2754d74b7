#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intdist/distribution.hpp"
#include "intdist/gf.hpp"
#include "intdist/plane.hpp"

namespace intdist {

// ---- arcs -----------------------------------------------------------------

enum class ArcMode { Greedy, All };

inline constexpr std::size_t kMaxArcEnumerationSize = 24;

// Arcs A ⊆ S that no point of S \ A extends. Greedy adds members of S in id
// order whenever the result is still an arc; All enumerates every such arc
// (|S| <= kMaxArcEnumerationSize).
std::vector<PointSet> s_maximal_arcs(const PointSet& s, ArcMode mode);

bool is_s_maximal_arc(const PointSet& s, const PointSet& a);

struct ArcAnalysis {
  PointSet s;
  PointSet a;
  std::size_t k = 0;
  std::vector<PointId> pro_arc_points;  // points of S \ A on exactly one 2-secant of A
  PointSet b;                           // one pro-arc point per occupied 2-secant
  std::size_t l = 0;
  std::map<PointId, std::size_t> tangent_counts;     // P in S \ A -> tangents to A through P
  std::map<PointId, std::size_t> two_secant_counts;  // P in S \ A -> 2-secants of A through P
  std::size_t lambda = 0;                            // max tangent count, 0 when S = A
  // Every point of A lies on at most one 2-secant of A that meets B.
  bool b_secants_disjoint_at_a = false;
};

// Throws NotMaximalArc unless A is an S-maximal arc. B takes the smallest
// pro-arc point (by id) on each 2-secant that contains one.
ArcAnalysis pro_arc_analysis(const PointSet& s, const PointSet& a);

// ---- bounds ----------------------------------------------------------------

struct BoundCheck {
  std::string name;
  std::string statement;  // human-readable inequality with values filled in
  bool passed = true;
};

struct BoundReport {
  Distribution u;
  std::size_t k = 0;  // size of the greedy S-maximal arc used
  std::size_t l = 0;
  std::vector<BoundCheck> checks;  // applicable bounds only

  bool all_passed() const;
};

// Evaluates every applicable bound on a (q+1)-set; throws SizeMismatch otherwise.
BoundReport check_bounds(const PointSet& s, const ExecPolicy& policy = {});

// ---- constructions ------------------------------------------------------------

enum class ExampleKind {
  Arc,                    // qplus1_arc: conic / graph of x^2
  EvenOffTangent,         // even_2_2_case1: q-arc of a hyperoval plus Q off the removed point's tangent
  EvenOnTangent,          // even_2_2_case2: Q on that tangent
  OddTwoTangentsOffLine,  // odd_2_3_case1: Q on two tangents of the conic, neither the removed point's
  OddOnLineOrNoTangent,   // odd_2_3_case2: Q on the removed point's tangent
  Line,                   // thm210_line
  LinePlusPoint,          // thm210_line_plus_point: q points of a line and one point off it
  ThreeSecantJoin,        // thm210_3a: q-1 collinear points, the other two join on a 3-secant
  TwoSecantJoin,          // thm210_3b: q-1 collinear points, the other two join on a 2-secant
};

std::string_view example_kind_name(ExampleKind kind);
std::optional<ExampleKind> parse_example_kind(std::string_view text);
const std::vector<ExampleKind>& all_example_kinds();

// Whether the construction exists for this q.
bool example_admissible(ExampleKind kind, unsigned q);

// Deterministic construction; candidate points are scanned in id order.
// Throws InvalidArgument for inadmissible q and NoSuchConfiguration when the
// scan finds nothing.
PointSet construct_example(ExampleKind kind, const PlaneRef& plane);

// The intersection distribution the construction is known to have.
Distribution example_distribution(ExampleKind kind, unsigned q);

// ---- non-hitting spectrum -----------------------------------------------------

enum class SpectrumMethod { Exhaustive, Partial };

struct SpectrumOptions {
  SpectrumMethod method = SpectrumMethod::Exhaustive;
  // Exhaustive: maximum number of (q+1)-subsets. Partial: number of random samples.
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 1;
};

struct SpectrumResult {
  unsigned q = 0;
  std::vector<std::int64_t> attained;           // increasing
  SpectrumMethod method = SpectrumMethod::Exhaustive;
  std::map<std::int64_t, std::string> evidence;  // partial: how each value was reached
  std::map<std::int64_t, std::vector<PointId>> witnesses;  // partial: first set reaching each value
  std::uint64_t sets_examined = 0;
  std::uint64_t identity_failures = 0;
};

std::string_view spectrum_method_name(SpectrumMethod m);

// Exhaustive mode throws BudgetExceeded when C(q^2+q+1, q+1) > budget.
SpectrumResult spectrum(const PlaneRef& plane, const SpectrumOptions& options = {}, const ExecPolicy& policy = {});

}  // namespace intdist
