#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "intdist/error.hpp"
#include "intdist/extremal.hpp"
#include "intdist/formulas.hpp"
#include "intdist/gf.hpp"
#include "intdist/integer.hpp"
#include "intdist/kakeya.hpp"
#include "intdist/plane.hpp"
#include "intdist/poly.hpp"
#include "intdist/serialize.hpp"
#include "intdist/tables.hpp"

namespace {

using namespace intdist;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

enum class Format { Text, Json, Csv };

struct Common {
  bool json = false;
  bool csv = false;
  std::string out;
  std::uint64_t seed = 1;
  int jobs = 0;
  unsigned q = 0;
  unsigned p = 0;
  unsigned s = 0;

  Format format() const { return json ? Format::Json : (csv ? Format::Csv : Format::Text); }
  ExecPolicy policy() const { return ExecPolicy{jobs}; }
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GaloisField field_from(const Common& c) {
  if (c.q != 0) {
    if (!prime_power(c.q)) throw Usage("--q " + std::to_string(c.q) + " is not a prime power");
    return GaloisField::of_order(c.q);
  }
  if (c.p != 0) return GaloisField::create(c.p, c.s == 0 ? 1 : c.s);
  throw Usage("one of --q or --p/--s is required");
}

std::vector<unsigned> q_range(const Common& c, unsigned qmax, unsigned default_max) {
  if (c.q != 0 || c.p != 0) return {field_from(c).order()};
  return prime_powers(2, qmax != 0 ? qmax : default_max);
}

FieldPoly parse_poly(const GaloisField& field, const std::string& text) {
  std::vector<FieldElem> coeffs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw Usage("bad coefficient '" + item + "' in --poly");
    }
    if (used != item.size() || v >= field.order()) throw Usage("bad coefficient '" + item + "' in --poly");
    coeffs.push_back(FieldElem{static_cast<std::uint32_t>(v)});
  }
  if (coeffs.empty()) throw Usage("--poly needs at least one coefficient");
  return FieldPoly(field, coeffs);
}

FieldElem parse_elem(const GaloisField& field, std::int64_t c) {
  if (c < 0 || static_cast<std::uint64_t>(c) >= field.order()) throw Usage("--c must be an element index below q");
  return FieldElem{static_cast<std::uint32_t>(c)};
}

void require_text_or_json(const Common& c, const char* what) {
  if (c.csv) throw Usage(std::string("--csv is not supported by ") + what);
}

std::string set_text(const std::vector<std::int64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "}";
}

// ---- field ----------------------------------------------------------------

int run_field(const Common& c, std::ostream& out) {
  require_text_or_json(c, "field");
  const GaloisField f = field_from(c);
  json j = {{"p", f.characteristic()}, {"s", f.degree()}, {"q", f.order()}, {"generator", f.generator().index}};
  std::vector<std::uint32_t> mod(f.modulus().begin(), f.modulus().end());
  j["modulus"] = mod;
  if (f.is_odd()) {
    j["delta"] = delta_ps(f);
    json cyc = json::object();
    json cij = json::object();
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const std::string key = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        cyc[key] = cyclotomic_number2(f, a, b);
        cij[key] = cij_set(f, a, b).size();
      }
    }
    j["cyclotomic_numbers"] = cyc;
    j["cij_sizes"] = cij;
  }
  if (c.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "GF(" << f.order() << ") p=" << f.characteristic() << " s=" << f.degree() << "\n";
  out << "modulus (constant first):";
  for (auto m : mod) out << " " << m;
  out << "\ngenerator: " << f.generator().index << "\n";
  if (f.is_odd()) {
    out << "delta: " << j["delta"] << "\n";
    for (const auto& [k, v] : j["cyclotomic_numbers"].items()) out << "cyclotomic " << k << ": " << v << "\n";
    for (const auto& [k, v] : j["cij_sizes"].items()) out << "|C_" << k << "|: " << v << "\n";
  }
  return kExitOk;
}

// ---- dist -----------------------------------------------------------------

struct DistArgs {
  std::string poly;
  std::optional<std::int64_t> c;
  bool all_c = false;
};

int run_dist(const Common& c, const DistArgs& a, std::ostream& out) {
  const GaloisField field = field_from(c);
  const FieldPoly f = parse_poly(field, a.poly);
  const unsigned q = field.order();
  if (a.c) {
    const auto row = multiplicity_distribution(f, parse_elem(field, *a.c));
    switch (c.format()) {
      case Format::Json: out << json{{"q", q}, {"c", row.c.index}, {"M", to_json(row.dist, q)}}.dump(2) << "\n"; break;
      case Format::Csv: out << to_csv(row.dist); break;
      case Format::Text: out << "M(f," << row.c.index << "): " << row.dist.to_string() << "\n"; break;
    }
    return kExitOk;
  }
  const PolyProfile profile = poly_profile(f, c.policy());
  switch (c.format()) {
    case Format::Json: {
      json j = to_json(profile);
      if (!a.all_c) j.erase("rows");
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << (a.all_c ? rows_csv(profile) : to_csv(profile.v));
      break;
    case Format::Text:
      if (a.all_c) {
        for (const auto& row : profile.rows) out << "M(f," << row.c.index << "): " << row.dist.to_string() << "\n";
      }
      out << "v: " << profile.v.to_string() << "\n";
      out << "v_0 = " << profile.v[0] << "\n";
      out << "|N_f| = " << profile.permutation_directions.size() << "\n";
      break;
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string family;
  unsigned qmax = 0;
  std::optional<unsigned> i;
};

int run_verify(const Common& c, const VerifyArgs& a, std::ostream& out) {
  require_text_or_json(c, "verify");
  std::vector<FamilyTag> tags;
  if (a.family == "all") {
    tags = {FamilyTag::Frobenius, FamilyTag::FrobeniusPlusOne, FamilyTag::HalfMinus,
            FamilyTag::HalfPlus,  FamilyTag::QMinusTwo,        FamilyTag::QMinusOne};
  } else if (auto t = parse_family_tag(a.family)) {
    tags = {*t};
  } else {
    throw Usage("unknown family '" + a.family + "'");
  }
  bool any_mismatch = false;
  std::size_t checked = 0;
  json reports = json::array();
  for (unsigned q : q_range(c, a.qmax, 16)) {
    const GaloisField field = GaloisField::of_order(q);
    for (FamilyTag tag : tags) {
      for (const auto& family : applicable_families(field, tag)) {
        if (a.i && has_index(tag) && family.i != *a.i) continue;
        const VerificationReport r = verify_family(family, field, c.policy());
        ++checked;
        any_mismatch = any_mismatch || !r.ok();
        if (c.json) {
          reports.push_back(to_json(r));
          continue;
        }
        out << "q=" << q << " d=" << r.exponent << " " << r.family << ": "
            << (r.ok() ? "ok" : "MISMATCH") << " (" << r.rows_checked << " rows)\n";
        for (const auto& m : r.mismatches) {
          out << "  " << m.what;
          if (m.c) out << " c=" << m.c->index;
          if (!m.case_label.empty()) out << " [" << m.case_label << "]";
          out << " predicted " << m.predicted.to_string() << " observed " << m.observed.to_string() << "\n";
        }
      }
    }
  }
  if (c.json) out << reports.dump(2) << "\n";
  if (checked == 0) std::cerr << "no applicable family instance in range\n";
  return any_mismatch ? kExitMismatch : kExitOk;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
  int which = 0;
  unsigned qmax = 0;
  std::optional<std::uint64_t> d;
  bool check = false;
  std::string golden;
};

int run_table(const Common& c, const TableArgs& a, std::ostream& out) {
  if (a.which == 1 || a.which == 3) {
    require_text_or_json(c, "table 1/3");
    if (a.check) throw Usage("--check applies to tables 2 and 4");
    json rows = json::array();
    for (unsigned q : q_range(c, a.qmax, 16)) {
      const GaloisField field = GaloisField::of_order(q);
      if (!c.json) {
        out << (a.which == 1 ? render_intersection_table(field, a.d) : render_dual_kakeya_table(field, a.d));
        continue;
      }
      for (const auto& family : applicable_families(field)) {
        const auto e = family_exponent(family, field);
        if (a.d && *a.d != e) continue;
        if (a.which == 1) {
          json j = to_json(predict_intersection(family, field), q);
          j["q"] = q;
          j["d"] = e;
          j["family"] = family_name(family);
          rows.push_back(j);
          continue;
        }
        for (std::uint32_t x = 0; x < q; ++x) {
          json j = to_json(predict_dk(family, field, FieldElem{x}), q);
          j["q"] = q;
          j["d"] = e;
          j["c"] = x;
          j["family"] = family_name(family);
          rows.push_back(j);
        }
      }
    }
    if (c.json) out << rows.dump(2) << "\n";
    return kExitOk;
  }
  if (a.which != 2 && a.which != 4) throw Usage("table must be 1, 2, 3 or 4");
  if (a.d) throw Usage("--d applies to tables 1 and 3");

  const unsigned default_max = a.which == 2 ? 16 : 9;
  std::map<unsigned, std::string> rendered;
  json rows = json::array();
  std::ostringstream csv;
  csv << (a.which == 2 ? "q,exponents,v0,starred\n" : "q,size,exponents\n");
  for (unsigned q : q_range(c, a.qmax, default_max)) {
    const GaloisField field = GaloisField::of_order(q);
    if (a.which == 2) {
      const NonHittingRow row = compute_nonhitting_row(field, c.policy());
      rendered[q] = render_nonhitting_row(row);
      json entries = json::array();
      for (const auto& e : row.entries) {
        entries.push_back({{"exponents", e.exponents}, {"v0", e.v0}, {"starred", e.starred}});
        csv << q << ',';
        for (std::size_t i = 0; i < e.exponents.size(); ++i) csv << (i ? ";" : "") << e.exponents[i];
        csv << ',' << e.v0 << ',' << (e.starred ? 1 : 0) << '\n';
      }
      rows.push_back({{"q", q}, {"entries", entries}});
    } else {
      const KakeyaSizeRow row = compute_kakeya_row(field, c.policy());
      rendered[q] = render_kakeya_row(row);
      json entries = json::array();
      for (const auto& e : row.entries) {
        entries.push_back({{"size", e.size}, {"exponents", e.exponents}});
        csv << q << ',' << e.size << ',';
        for (std::size_t i = 0; i < e.exponents.size(); ++i) csv << (i ? ";" : "") << e.exponents[i];
        csv << '\n';
      }
      rows.push_back({{"q", q}, {"entries", entries}});
    }
  }
  switch (c.format()) {
    case Format::Json: out << rows.dump(2) << "\n"; break;
    case Format::Csv: out << csv.str(); break;
    case Format::Text:
      for (const auto& [q, text] : rendered) out << q << " | " << text << "\n";
      if (a.which == 2) out << "# * : no exponent in the group belongs to a closed-form family\n";
      else out << "# {} : size not realized by any DK(d,c)\n";
      break;
  }
  if (!a.check) return kExitOk;

  const auto golden = load_golden(a.golden.empty() ? golden_path(a.which) : a.golden);
  bool mismatch = false;
  for (const auto& [q, text] : rendered) {
    const auto it = golden.find(q);
    if (it == golden.end()) {
      std::cerr << "q=" << q << ": no golden row\n";
      mismatch = true;
    } else if (it->second != text) {
      std::cerr << "q=" << q << " mismatch\n  golden:   " << it->second << "\n  computed: " << text << "\n";
      mismatch = true;
    }
  }
  if (!mismatch) std::cerr << "golden table " << a.which << ": " << rendered.size() << " rows match\n";
  return mismatch ? kExitMismatch : kExitOk;
}

// ---- kakeya ---------------------------------------------------------------

struct KakeyaArgs {
  std::optional<std::uint64_t> d;
  std::string poly;
  std::int64_t c = 0;
  bool direct = false;
};

int run_census(const Common& c, std::ostream& out) {
  const GaloisField field = field_from(c);
  const Census census = monomial_census(field, c.policy(), std::max(kCensusDefaultCap, 0u));
  switch (c.format()) {
    case Format::Json: out << to_json(census).dump(2) << "\n"; break;
    case Format::Csv: out << to_csv(census); break;
    case Format::Text:
      for (const auto& e : census.entries) {
        out << e.size << " {";
        for (std::size_t i = 0; i < e.exponents.size(); ++i) out << (i ? "," : "") << e.exponents[i];
        out << "}\n";
      }
      break;
  }
  return kExitOk;
}

int run_kakeya_size(const Common& c, const KakeyaArgs& a, std::ostream& out) {
  const GaloisField field = field_from(c);
  if (a.d.has_value() == !a.poly.empty()) throw Usage("give exactly one of --d or --poly");
  const FieldPoly f = a.d ? FieldPoly::monomial(field, *a.d) : parse_poly(field, a.poly);
  const FieldElem ce = parse_elem(field, a.c);
  if (!a.direct) {
    // The transfer formula needs no plane, so large q stays cheap.
    const Distribution u = dk_distribution_transfer(f, ce, c.policy());
    const auto q = static_cast<std::int64_t>(field.order());
    switch (c.format()) {
      case Format::Json:
        out << json{{"q", q}, {"c", ce.index}, {"u", to_json(u, field.order())}, {"size", q * q - u[0]}}.dump(2) << "\n";
        break;
      case Format::Csv: out << to_csv(u); break;
      case Format::Text: out << "u: " << u.to_string() << "\n|K| = " << q * q - u[0] << "\n"; break;
    }
    return kExitOk;
  }
  const PlaneRef plane = ProjectivePlane::create(field);
  const KakeyaReport report = kakeya_report(f, ce, plane, c.policy());
  const Distribution geometric = dk_distribution_direct(report.dk, c.policy());
  const bool agree = geometric == report.u;
  switch (c.format()) {
    case Format::Json: {
      json j = to_json(report);
      j["direct"] = to_json(geometric, field.order());
      j["agree"] = agree;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: out << to_csv(report.u); break;
    case Format::Text:
      out << "u (transfer): " << report.u.to_string() << "\nu (direct):   " << geometric.to_string()
          << "\n|K| = " << report.size << "\n";
      break;
  }
  if (!agree) std::cerr << "transfer and direct distributions differ\n";
  return agree ? kExitOk : kExitMismatch;
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  bool exhaustive = false;
  bool partial = false;
  std::uint64_t budget = 0;
};

int run_spectrum(const Common& c, const SpectrumArgs& a, std::ostream& out) {
  require_text_or_json(c, "spectrum");
  const GaloisField field = field_from(c);
  const PlaneRef plane = ProjectivePlane::create(field);
  SpectrumOptions opts;
  opts.method = a.partial ? SpectrumMethod::Partial : SpectrumMethod::Exhaustive;
  opts.seed = c.seed;
  if (a.budget != 0) opts.budget = a.budget;
  else if (a.partial) opts.budget = 20000;
  const SpectrumResult r = spectrum(plane, opts, c.policy());
  if (c.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << set_text(r.attained) << "\n";
    for (const auto& [u0, how] : r.evidence) out << "  " << u0 << ": " << how << "\n";
  }
  if (r.identity_failures != 0) {
    std::cerr << r.identity_failures << " sets violated the counting identities\n";
    return kExitMismatch;
  }
  return kExitOk;
}

// ---- example --------------------------------------------------------------

struct ExampleArgs {
  std::string kind;
  bool emit_distribution = false;
  bool bounds = false;
};

int run_example(const Common& c, const ExampleArgs& a, std::ostream& out) {
  require_text_or_json(c, "example");
  const auto kind = parse_example_kind(a.kind);
  if (!kind) throw Usage("unknown example kind '" + a.kind + "'");
  const GaloisField field = field_from(c);
  const PlaneRef plane = ProjectivePlane::create(field);
  const PointSet s = construct_example(*kind, plane);
  const Distribution u = intersection_distribution(s, c.policy());
  const Distribution expected = example_distribution(*kind, field.order());
  const bool agree = u == expected;
  if (c.json) {
    json j = {{"kind", a.kind}, {"q", field.order()}, {"points", to_json(s)}};
    if (a.emit_distribution) {
      j["u"] = to_json(u, field.order());
      j["expected"] = to_json(expected, field.order());
    }
    if (a.bounds) j["bounds"] = to_json(check_bounds(s, c.policy()), field.order());
    out << j.dump(2) << "\n";
  } else {
    out << "points:";
    for (const auto& p : s.points()) {
      out << " (" << p.coords[0].index << "," << p.coords[1].index << "," << p.coords[2].index << ")";
    }
    out << "\n";
    if (a.emit_distribution) out << "u: " << u.to_string() << "\nexpected: " << expected.to_string() << "\n";
    if (a.bounds) {
      for (const auto& chk : check_bounds(s, c.policy()).checks) {
        out << (chk.passed ? "pass " : "FAIL ") << chk.name << ": " << chk.statement << "\n";
      }
    }
  }
  if (!agree) std::cerr << "distribution differs from the expected one\n";
  return agree ? kExitOk : kExitMismatch;
}

void add_common(CLI::App* sub, Common& c, bool field_flags) {
  auto* json_flag = sub->add_flag("--json", c.json, "JSON output");
  auto* csv_flag = sub->add_flag("--csv", c.csv, "CSV output");
  json_flag->excludes(csv_flag);
  sub->add_option("--out", c.out, "write output to this file instead of stdout");
  sub->add_option("--seed", c.seed, "seed for randomized searches");
  sub->add_option("--jobs", c.jobs, "worker threads (1 = serial reference kernels)")->check(CLI::NonNegativeNumber);
  if (field_flags) {
    sub->add_option("--q", c.q, "field order (prime power)");
    sub->add_option("--p", c.p, "characteristic");
    sub->add_option("--s", c.s, "extension degree");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection distributions, non-hitting indices and Kakeya set sizes over GF(q) and PG(2,q)"};
  app.require_subcommand(1);
  Common common;

  auto* field_cmd = app.add_subcommand("field", "field parameters, cyclotomic numbers and C_{i,j} sizes");
  add_common(field_cmd, common, true);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "intersection and multiplicity distributions of a polynomial");
  add_common(dist_cmd, common, true);
  dist_cmd->add_option("--poly", dist.poly, "coefficient element indices, constant term first")->required();
  auto* c_opt = dist_cmd->add_option("--c", dist.c, "print only the multiplicity row at this element index");
  dist_cmd->add_flag("--all-c", dist.all_c, "print every multiplicity row")->excludes(c_opt);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "compare closed-form rows against brute force");
  add_common(verify_cmd, common, true);
  verify_cmd->add_option("--family", verify.family, "p^i, p^i+1, (q-1)/2, (q+1)/2, q-2, q-1 or all")->required();
  verify_cmd->add_option("--qmax", verify.qmax, "check every prime power up to this bound");
  verify_cmd->add_option("--i", verify.i, "only this i for the indexed families");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "reproduce tables 1-4");
  add_common(table_cmd, common, true);
  table_cmd->add_option("which", table.which, "1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));
  table_cmd->add_option("--qmax", table.qmax, "largest q");
  table_cmd->add_option("--d", table.d, "only this exponent (tables 1 and 3)");
  table_cmd->add_flag("--check", table.check, "compare with the golden file; exit 2 on mismatch");
  table_cmd->add_option("--golden", table.golden, "golden file to compare with");

  KakeyaArgs kak;
  auto* kakeya_cmd = app.add_subcommand("kakeya", "dual Kakeya sets and Kakeya set sizes");
  kakeya_cmd->require_subcommand(1);
  auto* census_cmd = kakeya_cmd->add_subcommand("census", "sizes realized by DK(d,c) over all d and c");
  add_common(census_cmd, common, true);
  auto* size_cmd = kakeya_cmd->add_subcommand("size", "|K| for one DK(f,c)");
  add_common(size_cmd, common, true);
  size_cmd->add_option("--d", kak.d, "monomial exponent");
  size_cmd->add_option("--poly", kak.poly, "coefficient element indices, constant term first");
  size_cmd->add_option("--c", kak.c, "element index of c");
  size_cmd->add_flag("--direct", kak.direct, "also sweep the plane and compare");

  SpectrumArgs spec;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "attained non-hitting indices of (q+1)-sets");
  add_common(spectrum_cmd, common, true);
  auto* ex = spectrum_cmd->add_flag("--exhaustive", spec.exhaustive, "enumerate every (q+1)-set (default)");
  spectrum_cmd->add_flag("--partial", spec.partial, "constructions plus random search")->excludes(ex);
  spectrum_cmd->add_option("--budget", spec.budget, "subset limit (exhaustive) or sample count (partial)");

  ExampleArgs example;
  auto* example_cmd = app.add_subcommand("example", "extremal (q+1)-set constructions");
  add_common(example_cmd, common, true);
  example_cmd->add_option("--kind", example.kind, "construction name")->required();
  example_cmd->add_flag("--emit-distribution", example.emit_distribution, "print the intersection distribution");
  example_cmd->add_flag("--bounds", example.bounds, "evaluate every applicable bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream out;
  int code = kExitOk;
  try {
    if (field_cmd->parsed()) code = run_field(common, out);
    else if (dist_cmd->parsed()) code = run_dist(common, dist, out);
    else if (verify_cmd->parsed()) code = run_verify(common, verify, out);
    else if (table_cmd->parsed()) code = run_table(common, table, out);
    else if (census_cmd->parsed()) code = run_census(common, out);
    else if (size_cmd->parsed()) code = run_kakeya_size(common, kak, out);
    else if (spectrum_cmd->parsed()) code = run_spectrum(common, spec, out);
    else if (example_cmd->parsed()) code = run_example(common, example, out);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (common.out.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(common.out);
    if (!file) {
      std::cerr << "error: cannot write " << common.out << "\n";
      return kExitUsage;
    }
    file << out.str();
  }
  return code;
}
