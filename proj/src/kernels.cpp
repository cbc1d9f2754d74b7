#include "intdist/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace intdist::kernels {

int thread_count(const ExecPolicy& policy) { return policy.jobs > 0 ? policy.jobs : omp_get_max_threads(); }

std::vector<std::uint32_t> line_counts_serial(const ProjectivePlane& plane, std::span<const std::uint8_t> member) {
  std::vector<std::uint32_t> counts(plane.size(), 0);
  for (LineId l = 0; l < plane.size(); ++l) {
    std::uint32_t c = 0;
    for (PointId p : plane.points_on(l)) c += member[p];
    counts[l] = c;
  }
  return counts;
}

std::vector<std::uint32_t> line_counts_parallel(const ProjectivePlane& plane, std::span<const std::uint8_t> member,
                                                const ExecPolicy& policy) {
  const auto n = static_cast<std::int64_t>(plane.size());
  std::vector<std::uint32_t> counts(plane.size(), 0);
#pragma omp parallel for schedule(static) num_threads(thread_count(policy))
  for (std::int64_t l = 0; l < n; ++l) {
    std::uint32_t c = 0;
    for (PointId p : plane.points_on(static_cast<LineId>(l))) c += member[p];
    counts[l] = c;
  }
  return counts;
}

Distribution histogram_serial(std::span<const std::uint32_t> counts, std::int64_t total_mass) {
  Distribution d(total_mass);
  for (auto c : counts) d.add(c);
  return d;
}

Distribution histogram_parallel(std::span<const std::uint32_t> counts, std::int64_t total_mass,
                                const ExecPolicy& policy) {
  const auto n = static_cast<std::int64_t>(counts.size());
  const std::uint32_t top = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  std::vector<std::int64_t> merged(top + 1, 0);
#pragma omp parallel num_threads(thread_count(policy))
  {
    std::vector<std::int64_t> local(top + 1, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t k = 0; k < n; ++k) ++local[counts[k]];
#pragma omp critical(intdist_histogram_merge)
    for (std::size_t i = 0; i <= top; ++i) merged[i] += local[i];
  }
  Distribution d(total_mass);
  for (std::size_t i = 0; i <= top; ++i) d.add(i, merged[i]);
  return d;
}

namespace {

Distribution row_for(const GaloisField& field, std::span<const FieldElem> values, FieldElem c,
                     std::vector<std::uint32_t>& tally) {
  const unsigned q = field.order();
  std::fill(tally.begin(), tally.end(), 0);
  for (std::uint32_t x = 0; x < q; ++x) {
    ++tally[field.sub(values[x], field.mul(c, FieldElem{x})).index];
  }
  std::vector<std::int64_t> hist(q + 1, 0);
  for (auto t : tally) ++hist[t];
  Distribution d(q);
  for (std::size_t i = 0; i <= q; ++i) d.add(i, hist[i]);
  return d;
}

}  // namespace

std::vector<Distribution> multiplicity_rows_serial(const GaloisField& field, std::span<const FieldElem> values) {
  const unsigned q = field.order();
  std::vector<Distribution> rows(q);
  std::vector<std::uint32_t> tally(q);
  for (std::uint32_t c = 0; c < q; ++c) rows[c] = row_for(field, values, FieldElem{c}, tally);
  return rows;
}

std::vector<Distribution> multiplicity_rows_parallel(const GaloisField& field, std::span<const FieldElem> values,
                                                     const ExecPolicy& policy) {
  const auto q = static_cast<std::int64_t>(field.order());
  std::vector<Distribution> rows(field.order());
#pragma omp parallel num_threads(thread_count(policy))
  {
    std::vector<std::uint32_t> tally(field.order());
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < q; ++c) {
      rows[c] = row_for(field, values, FieldElem{static_cast<std::uint32_t>(c)}, tally);
    }
  }
  return rows;
}

namespace {

bool identities_hold(std::span<const std::int64_t> hist, std::int64_t q, std::int64_t total) {
  std::int64_t sum = 0;
  std::int64_t first = 0;
  std::int64_t second = 0;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i);
    sum += hist[i];
    first += k * hist[i];
    second += k * (k - 1) * hist[i];
  }
  return sum == total && first == (q + 1) * (q + 1) && second == q * (q + 1);
}

}  // namespace

SpectrumScan spectrum_scan_serial(const ProjectivePlane& plane) {
  const std::size_t n = plane.size();
  const std::size_t k = plane.q() + 1;
  const auto q = static_cast<std::int64_t>(plane.q());
  SpectrumScan out;
  out.attained.assign(n + 1, 0);
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<std::uint8_t> member(n, 0);
  while (true) {
    std::fill(member.begin(), member.end(), 0);
    for (auto p : pick) member[p] = 1;
    const auto counts = line_counts_serial(plane, member);
    std::vector<std::int64_t> hist(k + 1, 0);
    for (auto c : counts) ++hist[c];
    ++out.subsets;
    if (!identities_hold(hist, q, static_cast<std::int64_t>(n))) ++out.identity_failures;
    out.attained[hist[0]] = 1;
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

namespace {

struct DfsState {
  const ProjectivePlane& plane;
  std::size_t target;
  std::int64_t q;
  std::vector<std::uint32_t> count;  // per line
  std::vector<std::int64_t> hist;    // hist[i] = lines with count i
  std::vector<std::uint8_t> attained;
  std::uint64_t subsets = 0;
  std::uint64_t failures = 0;

  void push(PointId p) {
    for (LineId l : plane.lines_through(p)) {
      --hist[count[l]];
      ++hist[++count[l]];
    }
  }
  void pop(PointId p) {
    for (LineId l : plane.lines_through(p)) {
      --hist[count[l]];
      ++hist[--count[l]];
    }
  }

  void descend(PointId next, std::size_t depth) {
    if (depth == target) {
      ++subsets;
      if (!identities_hold(hist, q, static_cast<std::int64_t>(plane.size()))) ++failures;
      attained[hist[0]] = 1;
      return;
    }
    const std::size_t n = plane.size();
    for (PointId p = next; p + (target - depth) <= n; ++p) {
      push(p);
      descend(p + 1, depth + 1);
      pop(p);
    }
  }
};

}  // namespace

SpectrumScan spectrum_scan_parallel(const ProjectivePlane& plane, const ExecPolicy& policy) {
  const std::size_t n = plane.size();
  const std::size_t k = plane.q() + 1;
  SpectrumScan out;
  out.attained.assign(n + 1, 0);
  const auto leading = static_cast<std::int64_t>(n - k + 1);
  std::uint64_t subsets = 0;
  std::uint64_t failures = 0;
#pragma omp parallel num_threads(thread_count(policy)) reduction(+ : subsets, failures)
  {
    DfsState st{plane, k, static_cast<std::int64_t>(plane.q()), std::vector<std::uint32_t>(n, 0),
                std::vector<std::int64_t>(k + 2, 0), std::vector<std::uint8_t>(n + 1, 0)};
    st.hist[0] = static_cast<std::int64_t>(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t first = 0; first < leading; ++first) {
      const auto p = static_cast<PointId>(first);
      st.push(p);
      st.descend(p + 1, 1);
      st.pop(p);
    }
    subsets += st.subsets;
    failures += st.failures;
#pragma omp critical(intdist_spectrum_merge)
    for (std::size_t i = 0; i <= n; ++i) out.attained[i] |= st.attained[i];
  }
  out.subsets = subsets;
  out.identity_failures = failures;
  return out;
}

}  // namespace intdist::kernels
