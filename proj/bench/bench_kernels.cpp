// Serial reference kernels against their OpenMP versions.
// Usage: bench_kernels [jobs]   (0 = OpenMP default)

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "intdist/gf.hpp"
#include "intdist/kernels.hpp"
#include "intdist/plane.hpp"
#include "intdist/poly.hpp"

using namespace intdist;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    fn();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

void report(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-34s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name.c_str(), serial, parallel,
              serial / parallel, same ? "equal" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const ExecPolicy policy{argc > 1 ? std::atoi(argv[1]) : 0};
  std::printf("threads: %d\n", kernels::thread_count(policy));
  bool all_same = true;

  for (unsigned q : {256u, 1024u, 4096u}) {
    const GaloisField field = GaloisField::of_order(q);
    const auto values = FieldPoly::monomial(field, q - 2).values();
    std::vector<Distribution> a, b;
    const double ts = best_of(3, [&] { a = kernels::multiplicity_rows_serial(field, values); });
    const double tp = best_of(3, [&] { b = kernels::multiplicity_rows_parallel(field, values, policy); });
    all_same = all_same && a == b;
    report("multiplicity rows x^(q-2), q=" + std::to_string(q), ts, tp, a == b);
  }

  for (unsigned q : {64u, 128u}) {
    const PlaneRef plane = ProjectivePlane::create(GaloisField::of_order(q));
    const PointSet s = graph_set(FieldPoly::monomial(plane->field(), 3), plane);
    const auto member = s.membership();
    std::vector<std::uint32_t> a, b;
    const double ts = best_of(20, [&] { a = kernels::line_counts_serial(*plane, member); });
    const double tp = best_of(20, [&] { b = kernels::line_counts_parallel(*plane, member, policy); });
    all_same = all_same && a == b;
    report("line counts, q=" + std::to_string(q), ts, tp, a == b);
  }

  for (unsigned q : {3u, 4u}) {
    const PlaneRef plane = ProjectivePlane::create(GaloisField::of_order(q));
    kernels::SpectrumScan a, b;
    const double ts = best_of(1, [&] { a = kernels::spectrum_scan_serial(*plane); });
    const double tp = best_of(1, [&] { b = kernels::spectrum_scan_parallel(*plane, policy); });
    const bool same = a.attained == b.attained && a.subsets == b.subsets;
    all_same = all_same && same;
    report("spectrum scan, q=" + std::to_string(q), ts, tp, same);
  }
  return all_same ? 0 : 1;
}
