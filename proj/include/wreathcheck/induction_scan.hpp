#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "wreathcheck/chartab.hpp"
#include "wreathcheck/subgroup_lattice.hpp"

namespace wreathcheck {

enum class Execution { kSerial, kParallel };

/// Lin(H) for one subgroup class and the decomposition of every lambda^G.
struct ScanEntry {
  const SubgroupClass* cls = nullptr;
  std::shared_ptr<const SubgroupEmbedding> embedding;
  std::vector<ClassFunction> linear;                  // on embedding->group
  std::vector<std::vector<long long>> decompositions;  // [linear index][irreducible]
};

namespace kernels {

/// Reference implementation: one subgroup after the other.
void induced_decompositions_serial(const CharacterTable& table,
                                   std::span<const SubgroupClass* const> classes,
                                   std::span<ScanEntry> out);

/// Same results, subgroups distributed over OpenMP threads.
void induced_decompositions_parallel(const CharacterTable& table,
                                     std::span<const SubgroupClass* const> classes,
                                     std::span<ScanEntry> out);

}  // namespace kernels

/**
 * The search space (H, lambda) of every monomiality notion, in the fixed scan
 * order: subgroup classes by descending order (ties by canonical key), then
 * linear character index. Entries are computed lazily in chunks so searches
 * that finish early never touch the small subgroups.
 */
class InductionScan {
 public:
  InductionScan(const CharacterTable& table, std::vector<SubgroupClass> classes,
                Execution execution = Execution::kParallel);
  InductionScan(const InductionScan&) = delete;
  InductionScan& operator=(const InductionScan&) = delete;
  InductionScan(InductionScan&&) = default;
  InductionScan& operator=(InductionScan&&) = default;

  const GroupPtr& group() const noexcept { return table_.group; }
  const CharacterTable& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return order_.size(); }
  /// k-th subgroup class in scan order.
  const SubgroupClass& subgroup(std::size_t k) const noexcept { return *order_[k]; }
  const ScanEntry& entry(std::size_t k);
  const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }

 private:
  void compute_through(std::size_t k);

  CharacterTable table_;
  std::vector<SubgroupClass> classes_;
  std::vector<const SubgroupClass*> order_;
  std::vector<ScanEntry> entries_;
  std::size_t computed_ = 0;
  Execution execution_;
};

/// Number of OpenMP workers, honouring WREATHCHECK_THREADS when set.
int worker_count();
void apply_thread_env();

}  // namespace wreathcheck
