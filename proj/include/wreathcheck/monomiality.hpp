#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreathcheck/chartab.hpp"
#include "wreathcheck/induction_scan.hpp"
#include "wreathcheck/subgroup_lattice.hpp"
#include "wreathcheck/wreath.hpp"

namespace wreathcheck {

struct SearchConfig {
  std::size_t subgroup_limit = kDefaultSubgroupLimit;
  std::size_t order_limit = kDefaultOrderLimit;
  Execution execution = Execution::kParallel;
};

/// Identifies (H, lambda): H by the canonical key of its class, lambda by its
/// index in linear_characters(H) for the canonical representative H.
struct InducedFrom {
  std::size_t scan_index = 0;
  std::vector<ElementId> subgroup_key;
  std::size_t subgroup_order = 0;
  std::size_t linear_index = 0;
};

/// lambda^G = d * chi.
struct MonomialWitness {
  std::size_t chi = 0;
  InducedFrom source;
  long long d = 1;
};

/// chi_i is a constituent of lambda^G and chi_j is not.
struct SeparationWitness {
  std::pair<std::size_t, std::size_t> pair;
  InducedFrom source;
};

enum class MonomialMode { kStrict, kQuasi };

/// Builds the scan over all subgroup classes of the table's group.
InductionScan make_scan(const CharacterTable& table, const SearchConfig& config = {});

/// First (H, lambda) in scan order with lambda^G = d chi (d = 1 in strict mode).
std::optional<MonomialWitness> monomial_witness(std::size_t chi, InductionScan& scan,
                                                MonomialMode mode);

/**
 * First separating (H, lambda) in scan order for each requested ordered pair;
 * with `normal_only`, H ranges over normal subgroups. Missing entries mean
 * the whole scan was exhausted.
 */
std::vector<std::optional<SeparationWitness>> separation_witnesses(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, InductionScan& scan,
    bool normal_only = false);

/// Re-derives H and lambda from the witness and checks it with induce/inner_product.
bool replay(const MonomialWitness& w, const CharacterTable& table);
bool replay(const SeparationWitness& w, const CharacterTable& table);

struct GroupClassification {
  std::string name;
  std::size_t order = 0;
  std::size_t irreducibles = 0;
  std::size_t subgroup_classes = 0;
  std::size_t normal_subgroups = 0;
  bool solvable = false;
  bool monomial = false;
  bool quasi_monomial = false;
  bool almost_monomial = false;
  bool normally_almost_monomial = false;
  std::vector<std::optional<MonomialWitness>> monomial_witnesses;        // per irreducible
  std::vector<std::optional<MonomialWitness>> quasi_monomial_witnesses;  // per irreducible
  std::vector<std::optional<SeparationWitness>> separation;              // per ordered pair
  std::vector<std::optional<SeparationWitness>> normal_separation;       // per ordered pair
};

/// All ordered pairs (i, j), i != j, of an r-element table in row-major order.
std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(std::size_t r);

GroupClassification classify_group(const GroupPtr& group, const SearchConfig& config = {});
GroupClassification classify_group(InductionScan& scan, const std::string& name = {});

/// Only the almost-monomial flag (cheaper: no monomial or normal scans).
bool is_almost_monomial(const GroupPtr& group, const SearchConfig& config = {});

struct HypothesisCase {
  std::size_t chi = 0;     // Case II irreducible of W
  std::size_t phi = 0;     // its diagonal factor in Irr(A)
  std::size_t beta = 0;    // main: nontrivial outer linear index
  std::size_t target = 0;  // main: index of beta * chi
  std::optional<MonomialWitness> monomial;     // bobo: phi monomial in A
  std::optional<SeparationWitness> separation;  // main: chi vs beta * chi in W
  bool satisfied() const { return monomial.has_value() || separation.has_value(); }
};

struct HypothesisReport {
  enum class Kind { kBobo, kMain };
  Kind kind = Kind::kBobo;
  std::vector<HypothesisCase> cases;
  bool overall = false;
  /// Filled when the hypothesis holds: whether A has the premise property
  /// (quasi / almost monomial) and, if so, whether W has the conclusion.
  std::optional<bool> factor_premise;
  std::optional<bool> conclusion;
  bool consistent() const { return !(overall && factor_premise == true && conclusion == false); }
};

HypothesisReport check_bobo_hypothesis(const WreathCharacters& wc, const SearchConfig& config = {});
HypothesisReport check_main_hypothesis(const WreathCharacters& wc, const SearchConfig& config = {});
/// Same, reusing a scan of W built from wc.table.
HypothesisReport check_main_hypothesis(const WreathCharacters& wc, InductionScan& w_scan,
                                       const SearchConfig& config = {});

/// One (A, p) in a counterexample survey.
struct SurveyEntry {
  std::string factor;
  int p = 0;
  std::size_t order = 0;
  enum class Status { kChecked, kFactorNotAlmostMonomial, kOrderLimit, kBudget };
  Status status = Status::kChecked;
  bool wreath_almost_monomial = false;
  bool hypothesis = false;
  bool counterexample = false;  // A almost monomial, W not
  bool divergence = false;      // hypothesis holds but W not almost monomial
  std::string note;
};

struct SurveyReport {
  std::vector<SurveyEntry> entries;
  bool counterexample_found = false;
};

SurveyReport counterexample_search(const std::vector<std::pair<std::string, GroupPtr>>& catalog,
                                   const std::vector<int>& primes, const SearchConfig& config = {});

/// (lambda_1 x lambda_2)^(G1 x G2) from two quasi-monomial witnesses.
struct ComposedWitness {
  Subgroup subgroup;          // H1 x H2 inside G1 x G2
  ClassFunction linear;       // lambda_1 x lambda_2 on the subgroup's own group
  ClassFunction induced;      // its induced character on G1 x G2
  ClassFunction target;       // chi_1 x chi_2
  long long d = 1;            // d_1 d_2
};
ComposedWitness compose_product_witness(const MonomialWitness& w1, const CharacterTable& t1,
                                        const MonomialWitness& w2, const CharacterTable& t2,
                                        const DirectProduct& product);

}  // namespace wreathcheck
