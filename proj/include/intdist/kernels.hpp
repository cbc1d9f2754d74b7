#pragma once

// Hot loops of the library. Each kernel has an OpenMP version and a serial
// reference version with identical results; the public entry points
// dispatch on ExecPolicy.

#include <cstdint>
#include <span>
#include <vector>

#include "intdist/distribution.hpp"
#include "intdist/gf.hpp"
#include "intdist/plane.hpp"

namespace intdist::kernels {

// Worker count for a policy (jobs, or the OpenMP default when jobs == 0).
int thread_count(const ExecPolicy& policy);

// Per-line intersection counts for a membership bitmap over point ids.
std::vector<std::uint32_t> line_counts_serial(const ProjectivePlane& plane, std::span<const std::uint8_t> member);
std::vector<std::uint32_t> line_counts_parallel(const ProjectivePlane& plane, std::span<const std::uint8_t> member,
                                                const ExecPolicy& policy = {});

Distribution histogram_serial(std::span<const std::uint32_t> counts, std::int64_t total_mass);
Distribution histogram_parallel(std::span<const std::uint32_t> counts, std::int64_t total_mass,
                                const ExecPolicy& policy = {});

// Multiplicity rows M(f, c) for every c, given the value table f(x) indexed by x.
std::vector<Distribution> multiplicity_rows_serial(const GaloisField& field, std::span<const FieldElem> values);
std::vector<Distribution> multiplicity_rows_parallel(const GaloisField& field, std::span<const FieldElem> values,
                                                     const ExecPolicy& policy = {});

// Attained non-hitting indices over all (q+1)-subsets of PG(2,q). Every
// enumerated subset is checked against the three counting identities of a
// (q+1)-set; identity_failures counts violations (always 0 for a correct plane).
struct SpectrumScan {
  std::vector<std::uint8_t> attained;  // attained[u0] != 0
  std::uint64_t subsets = 0;
  std::uint64_t identity_failures = 0;
};

// Reference: plain combination enumeration with a full line sweep per subset.
SpectrumScan spectrum_scan_serial(const ProjectivePlane& plane);
// Depth-first search with incremental line counts, split by leading point.
SpectrumScan spectrum_scan_parallel(const ProjectivePlane& plane, const ExecPolicy& policy = {});

}  // namespace intdist::kernels
