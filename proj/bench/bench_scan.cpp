// Serial vs OpenMP induction kernel over every subgroup class of a group.
// usage: bench_scan [group|factor:p ...]   default: S4 SL(2,3) D10:2 S3:2
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "wreathcheck/catalog.hpp"
#include "wreathcheck/induction_scan.hpp"
#include "wreathcheck/wreath.hpp"

using namespace wreathcheck;

namespace {

GroupPtr build(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return catalog(spec);
  return wreath_product(catalog(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))).group;
}

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_env();
  std::vector<std::string> specs(argv + 1, argv + argc);
  if (specs.empty()) specs = {"S4", "SL(2,3)", "D10:2", "S3:2"};

  std::printf("%-10s %6s %8s %10s %10s %8s %s\n", "group", "order", "classes", "serial_s", "omp_s", "speedup",
              "threads");
  for (const auto& spec : specs) {
    GroupPtr g = build(spec);
    CharacterTable table = character_table(g);
    auto classes = subgroup_classes(g);
    std::vector<const SubgroupClass*> ptrs;
    for (const auto& c : classes) ptrs.push_back(&c);

    std::vector<ScanEntry> serial(ptrs.size()), parallel(ptrs.size());
    const double ts = seconds([&] { kernels::induced_decompositions_serial(table, ptrs, serial); });
    const double tp = seconds([&] { kernels::induced_decompositions_parallel(table, ptrs, parallel); });

    bool same = true;
    for (std::size_t i = 0; i < ptrs.size(); ++i) same = same && serial[i].decompositions == parallel[i].decompositions;
    std::printf("%-10s %6zu %8zu %10.3f %10.3f %8.2f %d%s\n", spec.c_str(), g->order(), classes.size(), ts, tp,
                ts / tp, worker_count(), same ? "" : "  MISMATCH");
    if (!same) return 1;
  }
  return 0;
}
