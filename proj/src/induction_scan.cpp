#include "wreathcheck/induction_scan.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>

namespace wreathcheck {

namespace {

ScanEntry compute_entry(const CharacterTable& table, const SubgroupClass& cls) {
  ScanEntry entry;
  entry.cls = &cls;
  auto embedding = std::make_shared<SubgroupEmbedding>(cls.representative);
  entry.linear = linear_characters(embedding->group);
  entry.decompositions.reserve(entry.linear.size());
  for (const auto& lambda : entry.linear)
    entry.decompositions.push_back(decompose(induce(lambda, *embedding), table));
  entry.embedding = std::move(embedding);
  return entry;
}

}  // namespace

namespace kernels {

void induced_decompositions_serial(const CharacterTable& table,
                                   std::span<const SubgroupClass* const> classes,
                                   std::span<ScanEntry> out) {
  for (std::size_t i = 0; i < classes.size(); ++i) out[i] = compute_entry(table, *classes[i]);
}

void induced_decompositions_parallel(const CharacterTable& table,
                                     std::span<const SubgroupClass* const> classes,
                                     std::span<ScanEntry> out) {
  std::exception_ptr failure;
  const auto n = static_cast<long>(classes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = compute_entry(table, *classes[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(wreathcheck_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace kernels

InductionScan::InductionScan(const CharacterTable& table, std::vector<SubgroupClass> classes,
                             Execution execution)
    : table_(table), classes_(std::move(classes)), execution_(execution) {
  order_.reserve(classes_.size());
  for (const auto& cls : classes_) order_.push_back(&cls);
  std::stable_sort(order_.begin(), order_.end(), [](const SubgroupClass* a, const SubgroupClass* b) {
    if (a->order != b->order) return a->order > b->order;
    return a->canonical_key < b->canonical_key;
  });
  entries_.resize(order_.size());
}

const ScanEntry& InductionScan::entry(std::size_t k) {
  if (k >= computed_) compute_through(k);
  return entries_[k];
}

void InductionScan::compute_through(std::size_t k) {
  while (computed_ <= k) {
    std::size_t chunk = 1;
    if (execution_ == Execution::kParallel) chunk = 2 * static_cast<std::size_t>(worker_count());
    const std::size_t end = std::min(order_.size(), std::max(k + 1, computed_ + chunk));
    std::span<const SubgroupClass* const> classes(order_.data() + computed_, end - computed_);
    std::span<ScanEntry> out(entries_.data() + computed_, end - computed_);
    if (execution_ == Execution::kParallel)
      kernels::induced_decompositions_parallel(table_, classes, out);
    else
      kernels::induced_decompositions_serial(table_, classes, out);
    computed_ = end;
  }
}

int worker_count() { return omp_get_max_threads(); }

void apply_thread_env() {
  if (const char* env = std::getenv("WREATHCHECK_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
}

}  // namespace wreathcheck
