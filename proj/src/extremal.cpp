#include "intdist/extremal.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>

#include "intdist/error.hpp"
#include "intdist/integer.hpp"
#include "intdist/kernels.hpp"
#include "intdist/poly.hpp"

namespace intdist {

namespace {

std::vector<std::uint32_t> counts_of(const ProjectivePlane& plane, const std::vector<PointId>& pts) {
  std::vector<std::uint32_t> counts(plane.size(), 0);
  for (PointId p : pts) {
    for (LineId l : plane.lines_through(p)) ++counts[l];
  }
  return counts;
}

// A ∪ {p} is still an arc.
bool extends_arc(const ProjectivePlane& plane, const std::vector<std::uint32_t>& arc_counts, PointId p) {
  const auto lines = plane.lines_through(p);
  return std::all_of(lines.begin(), lines.end(), [&](LineId l) { return arc_counts[l] <= 1; });
}

bool subset_of(const PointSet& a, const PointSet& s) {
  const auto m = a.members();
  return std::all_of(m.begin(), m.end(), [&](PointId p) { return s.contains(p); });
}

struct ArcEnumerator {
  const ProjectivePlane& plane;
  std::vector<PointId> members;
  std::vector<std::uint32_t> counts;
  std::vector<PointId> chosen;
  std::vector<std::vector<PointId>> found;

  void run(std::size_t index) {
    if (index == members.size()) {
      for (PointId p : members) {
        if (std::find(chosen.begin(), chosen.end(), p) == chosen.end() && extends_arc(plane, counts, p)) return;
      }
      found.push_back(chosen);
      return;
    }
    const PointId p = members[index];
    if (extends_arc(plane, counts, p)) {
      for (LineId l : plane.lines_through(p)) ++counts[l];
      chosen.push_back(p);
      run(index + 1);
      chosen.pop_back();
      for (LineId l : plane.lines_through(p)) --counts[l];
    }
    run(index + 1);
  }
};

}  // namespace

// ---- arcs -----------------------------------------------------------------

std::vector<PointSet> s_maximal_arcs(const PointSet& s, ArcMode mode) {
  const auto& plane = s.plane();
  std::vector<PointSet> out;
  if (mode == ArcMode::Greedy) {
    std::vector<std::uint32_t> counts(plane.size(), 0);
    std::vector<PointId> chosen;
    for (PointId p : s.members()) {
      if (!extends_arc(plane, counts, p)) continue;
      chosen.push_back(p);
      for (LineId l : plane.lines_through(p)) ++counts[l];
    }
    out.emplace_back(s.plane_ref(), std::move(chosen));
    return out;
  }
  if (s.size() > kMaxArcEnumerationSize) {
    throw Error(ErrorKind::CapExceeded, "arc enumeration limited to " + std::to_string(kMaxArcEnumerationSize) + " points");
  }
  ArcEnumerator e{plane, {s.members().begin(), s.members().end()}, std::vector<std::uint32_t>(plane.size(), 0), {}, {}};
  e.run(0);
  for (auto& pts : e.found) out.emplace_back(s.plane_ref(), std::move(pts));
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    return std::lexicographical_compare(a.members().begin(), a.members().end(), b.members().begin(), b.members().end());
  });
  return out;
}

bool is_s_maximal_arc(const PointSet& s, const PointSet& a) {
  if (!subset_of(a, s) || !is_arc(a)) return false;
  const auto counts = counts_of(s.plane(), {a.members().begin(), a.members().end()});
  for (PointId p : s.members()) {
    if (!a.contains(p) && extends_arc(s.plane(), counts, p)) return false;
  }
  return true;
}

ArcAnalysis pro_arc_analysis(const PointSet& s, const PointSet& a) {
  if (!is_s_maximal_arc(s, a)) throw Error(ErrorKind::NotMaximalArc, "A is not an S-maximal arc");
  const auto& plane = s.plane();
  const auto counts = counts_of(plane, {a.members().begin(), a.members().end()});
  ArcAnalysis out{s, a, a.size(), {}, PointSet(s.plane_ref()), 0, {}, {}, 0, false};

  std::map<LineId, PointId> chosen;  // occupied 2-secant -> smallest pro-arc point on it
  for (PointId p : s.members()) {
    if (a.contains(p)) continue;
    std::size_t tangents = 0;
    std::size_t secants = 0;
    LineId secant = 0;
    for (LineId l : plane.lines_through(p)) {
      if (counts[l] == 1) ++tangents;
      if (counts[l] == 2) {
        ++secants;
        secant = l;
      }
    }
    out.tangent_counts[p] = tangents;
    out.two_secant_counts[p] = secants;
    out.lambda = std::max(out.lambda, tangents);
    if (secants == 1) {
      out.pro_arc_points.push_back(p);
      chosen.try_emplace(secant, p);
    }
  }
  std::vector<PointId> b;
  for (const auto& [line, p] : chosen) b.push_back(p);
  out.b = PointSet(s.plane_ref(), b);
  out.l = out.b.size();

  // How many 2-secants meeting B pass through each point of A.
  std::map<PointId, std::size_t> per_a;
  for (const auto& [line, p] : chosen) {
    for (PointId x : plane.points_on(line)) {
      if (a.contains(x)) ++per_a[x];
    }
  }
  out.b_secants_disjoint_at_a =
      std::all_of(per_a.begin(), per_a.end(), [](const auto& kv) { return kv.second <= 1; });
  return out;
}

// ---- bounds ----------------------------------------------------------------

bool BoundReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed; });
}

namespace {

class Checker {
 public:
  explicit Checker(std::vector<BoundCheck>& out) : out_(out) {}

  // Compares lhs against rhs / den without dividing.
  void le(std::string name, std::string lhs_text, i128 lhs, i128 rhs, std::int64_t den = 1) {
    add(std::move(name), lhs_text + " <= " + frac_text(rhs, den), lhs * den <= rhs);
  }
  void lt(std::string name, std::string lhs_text, i128 lhs, i128 rhs, std::int64_t den = 1) {
    add(std::move(name), lhs_text + " < " + frac_text(rhs, den), lhs * den < rhs);
  }
  void ge(std::string name, std::string lhs_text, i128 lhs, i128 rhs) {
    add(std::move(name), lhs_text + " >= " + num(rhs), lhs >= rhs);
  }
  void eq(std::string name, std::string lhs_text, i128 lhs, i128 rhs) {
    add(std::move(name), lhs_text + " == " + num(rhs), lhs == rhs);
  }
  void holds(std::string name, std::string statement, bool ok) { add(std::move(name), std::move(statement), ok); }

  static std::string num(i128 v) { return std::to_string(static_cast<long long>(v)); }

 private:
  static std::string frac_text(i128 v, std::int64_t den) {
    return den == 1 ? num(v) : num(v) + "/" + std::to_string(den);
  }
  void add(std::string name, std::string statement, bool ok) { out_.push_back({std::move(name), std::move(statement), ok}); }

  std::vector<BoundCheck>& out_;
};

}  // namespace

BoundReport check_bounds(const PointSet& s, const ExecPolicy& policy) {
  const auto& plane = s.plane();
  const i128 q = plane.q();
  if (s.size() != static_cast<std::size_t>(q + 1)) {
    throw Error(ErrorKind::SizeMismatch, "bounds apply to (q+1)-sets, got " + std::to_string(s.size()) + " points");
  }
  BoundReport report;
  report.u = intersection_distribution(s, policy);
  const Distribution& u = report.u;
  const i128 u0 = u[0];
  const std::string u0t = "u0=" + Checker::num(u0);
  const i128 top = q * (q - 1) / 2;
  Checker c(report.checks);

  c.eq("line_count", "sum u_i", u.sum(), q * q + q + 1);
  c.eq("incidence_count", "sum i u_i", u.first_moment(), (q + 1) * (q + 1));
  c.eq("pair_count", "sum i(i-1) u_i", u.second_factorial_moment(), q * (q + 1));
  i128 excess = 0;
  for (const auto& [i, n] : u.nonzero()) {
    if (i >= 3) excess += static_cast<i128>(i - 1) * static_cast<i128>(i - 2) / 2 * n;
  }
  c.eq("u0_from_secants", u0t, u0, top - excess);

  const bool arc = is_arc(s);
  c.le("arc_upper", u0t, u0, top);
  c.holds("arc_equality", std::string("u0 == q(q-1)/2 iff arc: ") + (arc ? "arc" : "not an arc"), (u0 == top) == arc);

  const PointSet a = s_maximal_arcs(s, ArcMode::Greedy).front();
  const ArcAnalysis an = pro_arc_analysis(s, a);
  const i128 k = static_cast<i128>(an.k);
  const i128 l = static_cast<i128>(an.l);
  report.k = an.k;
  report.l = an.l;

  // 2 u0 <= q(q-1) - (q+1-k)(k-lambda)
  c.le("tangent_upper", u0t, u0, q * (q - 1) - (q + 1 - k) * (k - static_cast<i128>(an.lambda)), 2);
  c.le("pro_arc_upper", u0t, u0, top - 2 * (q + 1) + 2 * k + l);

  if (k < q + 1) {
    for (const auto& [p, t] : an.tangent_counts) {
      const std::string tt = "tangents(" + Checker::num(p) + ")=" + Checker::num(static_cast<i128>(t));
      const auto tv = static_cast<i128>(t);
      c.le("tangents_at_most_k_minus_2", tt, tv, k - 2);
      if (q % 2 == 0 && 2 * k > q + 2) c.le("tangents_even_large_arc", tt, tv, q + 2 - k);
      if (q % 2 == 1 && 3 * k > 2 * q + 4) c.le("tangents_odd_large_arc", tt, tv, 2 * (q + 2 - k));
    }
  }
  if (an.b_secants_disjoint_at_a) c.le("pro_arc_set_size", "l=" + Checker::num(l), l, k / 2);

  if (2 <= k && k <= q) {
    if (q % 2 == 0) {
      if (2 * k < q + 4) {
        c.le("max_arc_upper", u0t, u0, top - (q + 1 - k));
      } else {
        c.le("max_arc_upper", u0t, u0, q * (q - 1) - (q + 1 - k) * (2 * k - q - 2), 2);
      }
    } else if (3 * k < 2 * q + 6) {
      c.le("max_arc_upper", u0t, u0, top - (q + 1 - k));
    } else {
      c.le("max_arc_upper", u0t, u0, q * (q - 1) - (q + 1 - k) * (3 * k - 2 * q - 4), 2);
    }
  }

  if (!arc) {
    if (q % 2 == 0) {
      c.le("even_non_arc_upper", u0t, u0, top - q / 2 + 1);
    } else {
      if (q % 3 == 0 && q >= 9) c.le("odd_non_arc_upper", u0t, u0, top - (q - 3) / 3);
      if (q % 3 == 1 && q >= 13) c.le("odd_non_arc_upper", u0t, u0, top - (q - 1) / 3);
      if (q % 3 == 2 && q >= 11) c.le("odd_non_arc_upper", u0t, u0, top - (q - 2) / 3);
      const bool has_nucleus = !nuclei(s).empty();
      const bool has_internal = !internal_nuclei(s).empty();
      if (has_nucleus && has_internal) c.le("nucleus_upper", u0t, u0, top - (q - 1) / 2);
      if (has_nucleus && !has_internal) c.lt("nucleus_strict_upper", u0t, u0, top - (q - 1) / 2);
    }
  }

  const auto n = static_cast<i128>(u.max_index());
  if (n >= 3) {
    c.ge("degree_lower", u0t, u0, n * (q + 2 - n) - (q + 1));
    c.holds("line_iff", "u0 == 0 iff degree q+1", (u0 == 0) == (n == q + 1));
    c.holds("line_plus_point_iff", "u0 == q-1 iff degree q", (u0 == q - 1) == (n == q));
    if (n <= q - 1) c.ge("small_degree_lower", u0t, u0, 2 * q - 4);
  }
  return report;
}

// ---- constructions ------------------------------------------------------------

namespace {

struct KindName {
  ExampleKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 9> kKindNames{{
    {ExampleKind::Arc, "qplus1_arc"},
    {ExampleKind::EvenOffTangent, "even_2_2_case1"},
    {ExampleKind::EvenOnTangent, "even_2_2_case2"},
    {ExampleKind::OddTwoTangentsOffLine, "odd_2_3_case1"},
    {ExampleKind::OddOnLineOrNoTangent, "odd_2_3_case2"},
    {ExampleKind::Line, "thm210_line"},
    {ExampleKind::LinePlusPoint, "thm210_line_plus_point"},
    {ExampleKind::ThreeSecantJoin, "thm210_3a"},
    {ExampleKind::TwoSecantJoin, "thm210_3b"},
}};

PointSet conic(const PlaneRef& plane) {
  const FieldPoly sq = FieldPoly::monomial(plane->field(), 2);
  if (!plane->field().is_odd() && !o_polynomial_test(sq)) {
    throw Error(ErrorKind::NoSuchConfiguration, "x^2 failed the o-polynomial test");
  }
  return graph_set(sq, plane);
}

// The unique line through p meeting t only in p.
LineId tangent_at(const PointSet& t, PointId p, const std::vector<std::uint32_t>& counts) {
  for (LineId l : t.plane().lines_through(p)) {
    if (counts[l] == 1) return l;
  }
  throw Error(ErrorKind::NoSuchConfiguration, "no tangent at point");
}

std::vector<PointId> sorted_points_on(const ProjectivePlane& plane, LineId l) {
  const auto span = plane.points_on(l);
  std::vector<PointId> pts(span.begin(), span.end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool on_line(const ProjectivePlane& plane, PointId p, LineId l) {
  const auto lines = plane.lines_through(p);
  return std::find(lines.begin(), lines.end(), l) != lines.end();
}

// Replaces the first point P of the (q+1)-arc T by the first Q accepted by pick.
template <class Pick>
PointSet swap_first_point(const PointSet& t, Pick pick) {
  const auto& plane = t.plane();
  const auto counts = line_intersection_counts(t);
  const PointId p = t.members().front();
  const LineId ell = tangent_at(t, p, counts);
  for (PointId qid = 0; qid < plane.size(); ++qid) {
    if (t.contains(qid)) continue;
    std::size_t tangents = 0;
    bool ell_is_tangent = false;
    for (LineId l : plane.lines_through(qid)) {
      if (counts[l] == 1) {
        ++tangents;
        if (l == ell) ell_is_tangent = true;
      }
    }
    if (pick(qid, tangents, ell_is_tangent)) return t.without(p).with(qid);
  }
  throw Error(ErrorKind::NoSuchConfiguration, "no admissible replacement point");
}

}  // namespace

std::string_view example_kind_name(ExampleKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "";
}

std::optional<ExampleKind> parse_example_kind(std::string_view text) {
  for (const auto& kn : kKindNames) {
    if (kn.name == text) return kn.kind;
  }
  return std::nullopt;
}

const std::vector<ExampleKind>& all_example_kinds() {
  static const std::vector<ExampleKind> kinds = [] {
    std::vector<ExampleKind> v;
    for (const auto& kn : kKindNames) v.push_back(kn.kind);
    return v;
  }();
  return kinds;
}

bool example_admissible(ExampleKind kind, unsigned q) {
  if (!prime_power(q)) return false;
  switch (kind) {
    case ExampleKind::Arc:
    case ExampleKind::Line:
    case ExampleKind::LinePlusPoint:
      return true;
    case ExampleKind::EvenOffTangent: return q % 2 == 0 && q >= 4;
    case ExampleKind::EvenOnTangent: return q % 2 == 0;
    case ExampleKind::OddTwoTangentsOffLine: return q % 2 == 1 && q >= 5;
    case ExampleKind::OddOnLineOrNoTangent: return q % 2 == 1;
    case ExampleKind::ThreeSecantJoin:
    case ExampleKind::TwoSecantJoin:
      return q >= 4;
  }
  return false;
}

PointSet construct_example(ExampleKind kind, const PlaneRef& plane) {
  const unsigned q = plane->q();
  if (!example_admissible(kind, q)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(example_kind_name(kind)) + " is not defined for q = " + std::to_string(q));
  }
  const LineId ell = 0;
  switch (kind) {
    case ExampleKind::Arc:
      return conic(plane);

    case ExampleKind::EvenOffTangent:
    case ExampleKind::EvenOnTangent: {
      const PointSet t = conic(plane);
      const auto nuc = nuclei(t);
      if (nuc.size() != 1) throw Error(ErrorKind::NoSuchConfiguration, "expected one nucleus");
      const PointId o = plane->id(nuc.front());
      const bool want_on = kind == ExampleKind::EvenOnTangent;
      // Every point off T other than the nucleus lies on exactly one tangent.
      return swap_first_point(t, [&](PointId qid, std::size_t, bool ell_is_tangent) {
        return qid != o && ell_is_tangent == want_on;
      });
    }

    case ExampleKind::OddTwoTangentsOffLine:
      return swap_first_point(conic(plane), [](PointId, std::size_t tangents, bool ell_is_tangent) {
        return tangents == 2 && !ell_is_tangent;
      });

    case ExampleKind::OddOnLineOrNoTangent:
      return swap_first_point(conic(plane), [](PointId, std::size_t tangents, bool ell_is_tangent) {
        return tangents == 2 && ell_is_tangent;
      });

    case ExampleKind::Line:
      return PointSet(plane, sorted_points_on(*plane, ell));

    case ExampleKind::LinePlusPoint: {
      auto pts = sorted_points_on(*plane, ell);
      pts.pop_back();
      for (PointId p = 0; p < plane->size(); ++p) {
        if (!on_line(*plane, p, ell)) {
          pts.push_back(p);
          break;
        }
      }
      return PointSet(plane, pts);
    }

    case ExampleKind::ThreeSecantJoin:
    case ExampleKind::TwoSecantJoin: {
      std::vector<PointId> off;
      for (PointId p = 0; p < plane->size() && off.size() < 2; ++p) {
        if (!on_line(*plane, p, ell)) off.push_back(p);
      }
      const PointId m = plane->meet(plane->join(off[0], off[1]), ell);
      std::vector<PointId> line_pts = sorted_points_on(*plane, ell);
      std::vector<PointId> drop;
      if (kind == ExampleKind::TwoSecantJoin) drop.push_back(m);
      for (PointId p : line_pts) {
        if (drop.size() == 2) break;
        if (p != m) drop.push_back(p);
      }
      std::vector<PointId> pts = off;
      for (PointId p : line_pts) {
        if (std::find(drop.begin(), drop.end(), p) == drop.end()) pts.push_back(p);
      }
      return PointSet(plane, pts);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown example kind");
}

Distribution example_distribution(ExampleKind kind, unsigned q_in) {
  if (!example_admissible(kind, q_in)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(example_kind_name(kind)) + " is not defined for q = " + std::to_string(q_in));
  }
  const auto q = static_cast<std::int64_t>(q_in);
  const std::int64_t top = q * (q - 1) / 2;
  Distribution u(q * q + q + 1);
  switch (kind) {
    case ExampleKind::Arc:
      u.add(0, top);
      u.add(1, q + 1);
      u.add(2, q * (q + 1) / 2);
      break;
    case ExampleKind::EvenOffTangent:
      u.add(0, top - q / 2 + 1);
      u.add(1, 5 * q / 2 - 2);
      u.add(2, q * (q - 2) / 2 + 3);
      u.add(3, q / 2 - 1);
      break;
    case ExampleKind::EvenOnTangent:
      u.add(0, top - q / 2);
      u.add(1, 5 * q / 2 + 1);
      u.add(2, q * (q - 2) / 2);
      u.add(3, q / 2);
      break;
    case ExampleKind::OddTwoTangentsOffLine:
      u.add(0, top - (q - 3) / 2);
      u.add(1, (5 * q - 7) / 2);
      u.add(2, (q * q - 2 * q + 9) / 2);
      u.add(3, (q - 3) / 2);
      break;
    case ExampleKind::OddOnLineOrNoTangent:
      u.add(0, top - (q - 1) / 2);
      u.add(1, (5 * q - 1) / 2);
      u.add(2, (q * q - 2 * q + 3) / 2);
      u.add(3, (q - 1) / 2);
      break;
    case ExampleKind::Line:
      u.add(1, q * q + q);
      u.add(static_cast<std::size_t>(q + 1), 1);
      break;
    case ExampleKind::LinePlusPoint:
      u.add(0, q - 1);
      u.add(1, q * q - q + 1);
      u.add(2, q);
      u.add(static_cast<std::size_t>(q), 1);
      break;
    case ExampleKind::ThreeSecantJoin:
      u.add(0, 2 * q - 4);
      u.add(1, q * q - 3 * q + 7);
      u.add(2, 2 * q - 4);
      u.add(3, 1);
      u.add(static_cast<std::size_t>(q - 1), 1);
      break;
    case ExampleKind::TwoSecantJoin:
      u.add(0, 2 * q - 3);
      u.add(1, q * q - 3 * q + 4);
      u.add(2, 2 * q - 1);
      u.add(static_cast<std::size_t>(q - 1), 1);
      break;
  }
  return u;
}

// ---- non-hitting spectrum -----------------------------------------------------

std::string_view spectrum_method_name(SpectrumMethod m) {
  return m == SpectrumMethod::Exhaustive ? "exhaustive" : "partial";
}

namespace {

// C(n, k), saturating at the uint64 maximum.
std::uint64_t subset_count(std::uint64_t n, std::uint64_t k) {
  i128 r = 1;
  const i128 cap = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * static_cast<i128>(n - k + i) / static_cast<i128>(i);
    if (r > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

bool identities_hold(const Distribution& u, std::int64_t q) {
  return u.sum() == q * q + q + 1 && u.first_moment() == (q + 1) * (q + 1) &&
         u.second_factorial_moment() == q * (q + 1);
}

SpectrumResult partial_spectrum(const PlaneRef& plane, const SpectrumOptions& options) {
  const auto q = static_cast<std::int64_t>(plane->q());
  SpectrumResult out;
  out.q = plane->q();
  out.method = SpectrumMethod::Partial;
  std::map<std::int64_t, std::string>& ev = out.evidence;

  auto record = [&](const PointSet& s, auto&& describe) {
    const Distribution u = intersection_distribution(s, ExecPolicy{1});
    ++out.sets_examined;
    if (!identities_hold(u, q)) ++out.identity_failures;
    if (!ev.contains(u[0])) {
      ev.emplace(u[0], describe());
      out.witnesses.emplace(u[0], std::vector<PointId>(s.members().begin(), s.members().end()));
    }
  };

  for (ExampleKind kind : all_example_kinds()) {
    if (example_admissible(kind, plane->q())) {
      record(construct_example(kind, plane), [&] { return "construction " + std::string(example_kind_name(kind)); });
    }
  }

  std::mt19937_64 rng(options.seed);
  const std::string seed_note = " (seed " + std::to_string(options.seed) + ")";
  const std::size_t n = plane->size();
  const std::size_t k = plane->q() + 1;
  std::vector<PointId> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<PointId>(i);

  // Half the budget on uniform subsets, half on a random walk of single-point
  // swaps starting from the conic, which stays near the top of the range.
  const std::uint64_t uniform = options.budget / 2;
  for (std::uint64_t i = 0; i < uniform; ++i) {
    std::vector<PointId> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(k), rng);
    record(PointSet(plane, pick), [&] { return "uniform sample " + std::to_string(i) + seed_note; });
  }
  PointSet walk = construct_example(ExampleKind::Arc, plane);
  std::uniform_int_distribution<std::size_t> pick_member(0, k - 1);
  std::uniform_int_distribution<std::size_t> pick_point(0, n - 1);
  for (std::uint64_t i = uniform; i < options.budget; ++i) {
    const PointId out_p = walk.members()[pick_member(rng)];
    PointId in_p = static_cast<PointId>(pick_point(rng));
    while (walk.contains(in_p)) in_p = static_cast<PointId>(pick_point(rng));
    walk = walk.without(out_p).with(in_p);
    record(walk, [&] { return "swap walk step " + std::to_string(i - uniform) + seed_note; });
  }
  for (const auto& [u0, how] : ev) out.attained.push_back(u0);
  return out;
}

}  // namespace

SpectrumResult spectrum(const PlaneRef& plane, const SpectrumOptions& options, const ExecPolicy& policy) {
  if (options.method == SpectrumMethod::Partial) return partial_spectrum(plane, options);
  const std::uint64_t total = subset_count(plane->size(), plane->q() + 1);
  if (total > options.budget) {
    throw Error(ErrorKind::BudgetExceeded, "exhaustive search needs " + std::to_string(total) +
                                               " subsets, budget is " + std::to_string(options.budget));
  }
  const kernels::SpectrumScan scan = policy.serial() ? kernels::spectrum_scan_serial(*plane)
                                                     : kernels::spectrum_scan_parallel(*plane, policy);
  SpectrumResult out;
  out.q = plane->q();
  out.method = SpectrumMethod::Exhaustive;
  out.sets_examined = scan.subsets;
  out.identity_failures = scan.identity_failures;
  for (std::size_t i = 0; i < scan.attained.size(); ++i) {
    if (scan.attained[i]) out.attained.push_back(static_cast<std::int64_t>(i));
  }
  return out;
}

}  // namespace intdist
