#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "intdist/gf.hpp"
#include "intdist/plane.hpp"

namespace intdist {

// Non-hitting index of every monomial x^d, 1 <= d <= q-1.
struct NonHittingEntry {
  std::vector<std::uint64_t> exponents;  // {d} or {d, d^-1 mod q-1}
  std::int64_t v0 = 0;
  bool starred = false;  // no exponent in the group belongs to a closed-form family
};

struct NonHittingRow {
  unsigned q = 0;
  std::vector<NonHittingEntry> entries;
};

NonHittingRow compute_nonhitting_row(const GaloisField& field, const ExecPolicy& policy = {});
std::string render_nonhitting_row(const NonHittingRow& row);

// Kakeya sizes: every attainable size with the exponents realizing it.
struct KakeyaSizeEntry {
  std::int64_t size = 0;
  std::vector<std::uint64_t> exponents;  // empty: no monomial dual Kakeya set realizes it
};

struct KakeyaSizeRow {
  unsigned q = 0;
  std::vector<KakeyaSizeEntry> entries;
};

// Census sizes merged with the known attainable sizes (when listed for q).
KakeyaSizeRow compute_kakeya_row(const GaloisField& field, const ExecPolicy& policy = {});
std::string render_kakeya_row(const KakeyaSizeRow& row);

// Closed-form v(x^d) for every applicable family (optionally only exponent d).
std::string render_intersection_table(const GaloisField& field, std::optional<std::uint64_t> d = std::nullopt);
// Closed-form u(DK(d,c)) and |K| per family and case (optionally only exponent d).
std::string render_dual_kakeya_table(const GaloisField& field, std::optional<std::uint64_t> d = std::nullopt);

// Golden table file: "q | entries" lines, '#' comments. Maps q to the entry text.
std::map<unsigned, std::string> load_golden(const std::string& path);
// Path of the checked-in golden file for table 2 or 4.
std::string golden_path(int which);

}  // namespace intdist
