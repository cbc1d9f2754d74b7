#include "intdist/tables.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "intdist/error.hpp"
#include "intdist/formulas.hpp"
#include "intdist/integer.hpp"
#include "intdist/kakeya.hpp"
#include "intdist/poly.hpp"

namespace intdist {

namespace {

std::string join_set(const std::vector<std::uint64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

std::uint64_t inverse_mod(std::uint64_t d, std::uint64_t m) {
  for (std::uint64_t e = 1; e < m; ++e) {
    if (d * e % m == 1) return e;
  }
  return d;
}

}  // namespace

NonHittingRow compute_nonhitting_row(const GaloisField& field, const ExecPolicy& policy) {
  const std::uint64_t q = field.order();
  NonHittingRow row{field.order(), {}};
  const auto families = family_exponents(field);
  std::vector<bool> done(q, false);
  for (std::uint64_t d = 1; d < q; ++d) {
    if (done[d]) continue;
    NonHittingEntry e;
    e.exponents.push_back(d);
    if (gcd(d, q - 1) == 1) {
      const std::uint64_t inv = inverse_mod(d, q - 1);
      if (inv != d) e.exponents.push_back(inv);
    }
    for (auto x : e.exponents) done[x] = true;
    std::sort(e.exponents.begin(), e.exponents.end());
    e.v0 = intersection_distribution_poly(FieldPoly::monomial(field, d), policy)[0];
    e.starred = std::none_of(e.exponents.begin(), e.exponents.end(), [&](std::uint64_t x) { return families.contains(x); });
    row.entries.push_back(std::move(e));
  }
  return row;
}

std::string render_nonhitting_row(const NonHittingRow& row) {
  std::string out;
  for (std::size_t i = 0; i < row.entries.size(); ++i) {
    const auto& e = row.entries[i];
    if (i) out += ", ";
    out += "(";
    out += e.exponents.size() == 1 ? std::to_string(e.exponents[0]) : join_set(e.exponents);
    out += "," + std::to_string(e.v0) + ")";
    if (e.starred) out += "*";
  }
  return out;
}

KakeyaSizeRow compute_kakeya_row(const GaloisField& field, const ExecPolicy& policy) {
  const Census census = monomial_census(field, policy, std::max(kCensusDefaultCap, field.order()));
  std::map<std::int64_t, std::vector<std::uint64_t>> sizes;
  for (auto s : attainable_kakeya_sizes(field.order())) sizes[s];
  for (const auto& e : census.entries) sizes[e.size] = e.exponents;
  KakeyaSizeRow row{field.order(), {}};
  for (auto& [size, ds] : sizes) row.entries.push_back({size, ds});
  return row;
}

std::string render_kakeya_row(const KakeyaSizeRow& row) {
  std::string out;
  for (std::size_t i = 0; i < row.entries.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(row.entries[i].size) + "," + join_set(row.entries[i].exponents) + ")";
  }
  return out;
}

std::string render_intersection_table(const GaloisField& field, std::optional<std::uint64_t> d) {
  std::ostringstream out;
  for (const auto& family : applicable_families(field)) {
    const auto e = family_exponent(family, field);
    if (d && *d != e) continue;
    const auto p = predict_intersection(family, field);
    out << "q=" << field.order() << " d=" << e << " " << family_name(family);
    if (!p.case_label.empty()) out << " [" << p.case_label << "]";
    out << ": " << p.dist.to_string() << "\n";
  }
  return out.str();
}

std::string render_dual_kakeya_table(const GaloisField& field, std::optional<std::uint64_t> d) {
  std::ostringstream out;
  for (const auto& family : applicable_families(field)) {
    const auto e = family_exponent(family, field);
    if (d && *d != e) continue;
    std::set<std::string> seen;
    for (std::uint32_t c = 0; c < field.order(); ++c) {
      const auto p = predict_dk(family, field, FieldElem{c});
      if (!seen.insert(p.case_label).second) continue;
      out << "q=" << field.order() << " d=" << e << " " << family_name(family) << " [" << p.case_label
          << "] (c=" << c << "): " << p.dist.to_string() << " |K|=" << *p.kakeya_size << "\n";
    }
  }
  return out.str();
}

std::map<unsigned, std::string> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open golden file " + path);
  std::map<unsigned, std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find(" | ");
    if (bar == std::string::npos) throw Error(ErrorKind::InvalidArgument, "malformed golden line: " + line);
    rows[static_cast<unsigned>(std::stoul(line.substr(0, bar)))] = line.substr(bar + 3);
  }
  return rows;
}

std::string golden_path(int which) {
  return std::string(INTDIST_GOLDEN_DIR) + "/table" + std::to_string(which) + ".txt";
}

}  // namespace intdist
