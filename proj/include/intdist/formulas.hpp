#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "intdist/distribution.hpp"
#include "intdist/gf.hpp"
#include "intdist/plane.hpp"

namespace intdist {

// The six power-mapping families x^d with known multiplicity distributions.
enum class FamilyTag {
  Frobenius,         // d = p^i
  FrobeniusPlusOne,  // d = p^i + 1
  HalfMinus,         // d = (q-1)/2, q odd
  HalfPlus,          // d = (q+1)/2, q odd
  QMinusTwo,         // d = q-2
  QMinusOne,         // d = q-1
};

struct PowerFamily {
  FamilyTag tag = FamilyTag::QMinusOne;
  unsigned i = 0;  // only for Frobenius / FrobeniusPlusOne, 0 <= i <= s-1

  friend bool operator==(const PowerFamily&, const PowerFamily&) = default;
};

std::string_view tag_name(FamilyTag tag);
std::string family_name(const PowerFamily& family);
// Accepts "p^i", "p^i+1", "(q-1)/2", "(q+1)/2", "q-2", "q-1" and the short
// aliases "pi", "pi+1", "qm1h", "qp1h".
std::optional<FamilyTag> parse_family_tag(std::string_view text);
bool has_index(FamilyTag tag);

bool family_applicable(const PowerFamily& family, const GaloisField& field);
// Exponent reduced into [1, q-1]; throws FamilyInapplicable.
std::uint64_t family_exponent(const PowerFamily& family, const GaloisField& field);
// h = gcd(i, s) for the indexed families (gcd(0, s) = s).
unsigned family_h(const PowerFamily& family, const GaloisField& field);

// Every applicable (tag, i) instance for this field.
std::vector<PowerFamily> applicable_families(const GaloisField& field);
std::vector<PowerFamily> applicable_families(const GaloisField& field, FamilyTag tag);
// All exponents in [1, q-1] covered by some applicable family.
std::set<std::uint64_t> family_exponents(const GaloisField& field);

// Which branch of the closed forms governs c. Branches are checked in the
// order listed; c = +-1 precedes the C_{i,j} branches for (q+1)/2.
enum class Branch {
  Zero,
  NonZero,
  InPowerClass,      // c in C_0^(p^h - 1, q)
  NotInPowerClass,
  Square,            // c in C_0^(2,q)
  NonSquare,         // c in C_1^(2,q)
  PlusMinusOne,
  CijZeroDiagonal,   // c in {0} ∪ C_{0,0} ∪ C_{1,1}
  CijOffDiagonal,    // c in C_{0,1} ∪ C_{1,0}
};

std::string_view branch_label(Branch b);
Branch classify(const PowerFamily& family, const GaloisField& field, FieldElem c);

enum class PredictionKind { MultiplicityAtC, Intersection, DualKakeya };

struct PredictedDistribution {
  PredictionKind kind = PredictionKind::Intersection;
  std::string case_label;
  Distribution dist;
  std::optional<std::int64_t> kakeya_size;  // DualKakeya only
};

// Closed-form M(x^d, c).
PredictedDistribution predict_multiplicity(const PowerFamily& family, const GaloisField& field, FieldElem c);
// Closed-form v(x^d).
PredictedDistribution predict_intersection(const PowerFamily& family, const GaloisField& field);
// Closed-form u(DK(d, c)) and |K|.
PredictedDistribution predict_dk(const PowerFamily& family, const GaloisField& field, FieldElem c);

struct Mismatch {
  std::string what;               // "row" or "v"
  std::optional<FieldElem> c;
  std::string case_label;
  Distribution predicted;
  Distribution observed;
};

struct VerificationReport {
  std::string family;
  unsigned q = 0;
  std::uint64_t exponent = 0;
  std::size_t rows_checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

using RowPredictor = std::function<PredictedDistribution(FieldElem c)>;

// Compares predicted rows and v against brute force for x^exponent.
VerificationReport verify_prediction(const GaloisField& field, std::uint64_t exponent, std::string label,
                                     const RowPredictor& predict_row, const Distribution& predicted_v,
                                     const ExecPolicy& policy = {});

VerificationReport verify_family(const PowerFamily& family, const GaloisField& field, const ExecPolicy& policy = {});

}  // namespace intdist
