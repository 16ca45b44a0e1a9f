#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "php/bridges.hpp"
#include "php/core.hpp"
#include "php/jumps.hpp"

namespace php {

struct SearchBudget {
  double wall_secs = 600.0;
  uint64_t node_limit = UINT64_MAX;
};

enum class SearchStatus { kExact, kBoundsMatched, kBracketed, kBudgetExhausted };
std::string to_string(SearchStatus s);

struct FamilySearchOutcome {
  SearchStatus status = SearchStatus::kExact;
  int value = 0;
  std::optional<FunctionFamily> witness;
  uint64_t nodes = 0;
};

enum class Decision { kYes, kNo, kBudgetExhausted };
std::string to_string(Decision d);

/// Number of canonical colorings on a shape (restricted-growth strings
/// with at most n distinct values): sum of Stirling numbers S(m, j).
uint64_t canonical_coloring_count(Shape s);

/// One representative per color-relabeling class, in lexicographic
/// order of the color sequence. Refuses when the count exceeds `limit`.
std::vector<ColorFunction> enumerate_colorings(Shape s, uint64_t limit = 1 << 20);

/// Maximum pairwise-disjoint family by backtracking over canonical
/// colorings. When the best constructive lower witness already meets
/// the counting bound and `allow_bounds_shortcut` holds, exhaustion is
/// skipped and the status is kBoundsMatched.
FamilySearchOutcome max_disjoint_family(Shape s, const SearchBudget& budget,
                                        bool allow_bounds_shortcut = true);

struct IdkOutcome {
  Decision decision = Decision::kNo;
  std::optional<FunctionFamily> witness;
  uint64_t nodes = 0;
};

/// Decision for id_k <= RPHP(m,n). With `use_counting_bound` false the
/// counting-lemma cutoff is skipped and a "no" is established purely by
/// exhaustive backtracking.
IdkOutcome decide_id_k(Shape s, int k, const SearchBudget& budget,
                       bool use_counting_bound = true);

struct ReductionOutcome {
  Decision decision = Decision::kNo;
  std::optional<ReductionWitness> witness;
  uint64_t nodes = 0;
};

/// Decides P <= Q over explicit tables by searching total backward maps
/// with per-instance candidate propagation and most-constrained
/// branching. `root_seed`, when nonnull, restricts the very first
/// assignment to the listed (Q-solution, P-solution) pairs; callers use
/// it to break problem symmetries (soundness is the caller's claim).
ReductionOutcome decide_reduction(const FiniteProblem& p, const FiniteProblem& q,
                                  const SearchBudget& budget,
                                  const std::vector<std::pair<uint64_t, uint64_t>>*
                                      root_seed = nullptr);

/// The symmetry seed for php-to-php decisions: both point groups act
/// transitively on pairs, so the least Q-solution code may be pinned to
/// the least P-solution code.
std::vector<std::pair<uint64_t, uint64_t>> php_reduction_seed();

struct AucSearchOutcome {
  Decision decision = Decision::kNo;
  std::optional<AucWitness> witness;
  uint64_t nodes = 0;
};

/// Backtracking search over canonical g and a nondecreasing canonical
/// f-list for the AUC triple condition.
AucSearchOutcome search_auc_witness(Shape s, int k, const SearchBudget& budget);

}  // namespace php
