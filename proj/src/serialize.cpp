#include "intdist/serialize.hpp"

#include <sstream>

#include "intdist/error.hpp"

namespace intdist {

json to_json(const Distribution& d, unsigned q) {
  json counts = json::object();
  for (const auto& [i, n] : d.nonzero()) counts[std::to_string(i)] = n;
  return {{"q", q}, {"total", d.total_mass()}, {"counts", counts}};
}

Distribution distribution_from_json(const json& j) {
  Distribution d(j.at("total").get<std::int64_t>());
  for (const auto& [key, value] : j.at("counts").items()) {
    d.add(std::stoull(key), value.get<std::int64_t>());
  }
  return d;
}

json to_json(const PolyProfile& profile) {
  const unsigned q = profile.f.field().order();
  json f = json::array();
  for (const auto& c : profile.f.coeffs()) f.push_back(c.index);
  json rows = json::array();
  for (const auto& row : profile.rows) rows.push_back({{"c", row.c.index}, {"M", to_json(row.dist, q).at("counts")}});
  json nf = json::array();
  for (const auto& c : profile.permutation_directions) nf.push_back(c.index);
  return {{"q", q}, {"f", f}, {"v", to_json(profile.v, q)}, {"rows", rows}, {"N_f", nf}};
}

json to_json(const VerificationReport& report) {
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    json item = {{"what", m.what},
                 {"case", m.case_label},
                 {"predicted", to_json(m.predicted, report.q)},
                 {"observed", to_json(m.observed, report.q)}};
    item["c"] = m.c ? json(m.c->index) : json(nullptr);
    mismatches.push_back(item);
  }
  return {{"family", report.family},
          {"q", report.q},
          {"d", report.exponent},
          {"rows_checked", report.rows_checked},
          {"ok", report.ok()},
          {"mismatches", mismatches}};
}

json to_json(const PredictedDistribution& p, unsigned q) {
  static constexpr const char* kKinds[] = {"multiplicity", "intersection", "dual_kakeya"};
  json j = {{"kind", kKinds[static_cast<int>(p.kind)]}, {"case", p.case_label}, {"dist", to_json(p.dist, q)}};
  if (p.kakeya_size) j["kakeya_size"] = *p.kakeya_size;
  return j;
}

json to_json(const Census& census) {
  json entries = json::array();
  for (const auto& e : census.entries) entries.push_back({{"size", e.size}, {"exponents", e.exponents}});
  return {{"q", census.q}, {"entries", entries}};
}

Census census_from_json(const json& j) {
  Census c;
  c.q = j.at("q").get<unsigned>();
  for (const auto& e : j.at("entries")) {
    c.entries.push_back({e.at("size").get<std::int64_t>(), e.at("exponents").get<std::vector<std::uint64_t>>()});
  }
  return c;
}

json to_json(const PointSet& s) {
  json pts = json::array();
  for (const auto& p : s.points()) pts.push_back({p.coords[0].index, p.coords[1].index, p.coords[2].index});
  return pts;
}

json to_json(const KakeyaReport& report) {
  const unsigned q = report.dk.base.field().order();
  json f = json::array();
  for (const auto& c : report.dk.base.coeffs()) f.push_back(c.index);
  return {{"q", q},
          {"f", f},
          {"c", report.dk.c.index},
          {"points", to_json(report.dk.points)},
          {"u", to_json(report.u, q)},
          {"size", report.size}};
}

json to_json(const BoundReport& report, unsigned q) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"statement", c.statement}, {"passed", c.passed}});
  }
  return {{"u", to_json(report.u, q)}, {"k", report.k}, {"l", report.l}, {"all_passed", report.all_passed()},
          {"checks", checks}};
}

json to_json(const SpectrumResult& result) {
  json j = {{"q", result.q},
            {"method", spectrum_method_name(result.method)},
            {"attained", result.attained},
            {"sets_examined", result.sets_examined},
            {"identity_failures", result.identity_failures}};
  if (!result.evidence.empty()) {
    json ev = json::object();
    for (const auto& [u0, how] : result.evidence) ev[std::to_string(u0)] = how;
    j["evidence"] = ev;
  }
  if (!result.witnesses.empty()) {
    json w = json::object();
    for (const auto& [u0, ids] : result.witnesses) w[std::to_string(u0)] = ids;
    j["witnesses"] = w;
  }
  return j;
}

std::string to_csv(const Distribution& d) {
  std::ostringstream out;
  out << "i,count\n";
  for (const auto& [i, n] : d.nonzero()) out << i << ',' << n << '\n';
  return out.str();
}

std::string rows_csv(const PolyProfile& profile) {
  std::ostringstream out;
  out << "c,i,count\n";
  for (const auto& row : profile.rows) {
    for (const auto& [i, n] : row.dist.nonzero()) out << row.c.index << ',' << i << ',' << n << '\n';
  }
  return out.str();
}

std::string to_csv(const Census& census) {
  std::ostringstream out;
  out << "size,exponents\n";
  for (const auto& e : census.entries) {
    out << e.size << ',';
    for (std::size_t i = 0; i < e.exponents.size(); ++i) out << (i ? ";" : "") << e.exponents[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace intdist
