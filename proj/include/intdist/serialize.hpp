#pragma once

#include <string>

#include "json.hpp"

#include "intdist/distribution.hpp"
#include "intdist/extremal.hpp"
#include "intdist/formulas.hpp"
#include "intdist/kakeya.hpp"
#include "intdist/poly.hpp"

namespace intdist {

using nlohmann::json;

// {"q": q, "total": mass, "counts": {"i": n, ...}} with nonzero entries only.
json to_json(const Distribution& d, unsigned q);
Distribution distribution_from_json(const json& j);

// {"q", "f": [coefficient indices, constant first], "v", "rows": [{"c", "M"}], "N_f": [...]}
json to_json(const PolyProfile& profile);

json to_json(const VerificationReport& report);
json to_json(const PredictedDistribution& p, unsigned q);

// {"q": q, "entries": [{"size": k, "exponents": [d, ...]}]}
json to_json(const Census& census);
Census census_from_json(const json& j);

json to_json(const KakeyaReport& report);
json to_json(const BoundReport& report, unsigned q);
json to_json(const SpectrumResult& result);
json to_json(const PointSet& s);

// "i,count" rows after a header line.
std::string to_csv(const Distribution& d);
// "c,i,count" rows, one per nonzero multiplicity entry.
std::string rows_csv(const PolyProfile& profile);
// "size,exponents" rows; exponents separated by ';'.
std::string to_csv(const Census& census);

}  // namespace intdist
