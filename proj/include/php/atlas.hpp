#pragma once

#include <string>
#include <vector>

#include "php/core.hpp"
#include "php/search.hpp"

namespace php {

struct AtlasEntry {
  Shape shape;
  int max_k = 0;
  SearchStatus status = SearchStatus::kExact;
  std::string lower;  // witness source, e.g. "builtin:nine-4-6"
  std::string upper;  // "counting-lemma" | "exhaustion" | "pigeonhole"
};

struct RelationEdge {
  Shape from, to;  // from -> to means RPHP(to) <= RPHP(from)
  std::string kind;  // "restriction" | "padding" | "id-level-derived"
  bool strict = false;  // true when the reverse reduction is refuted
  std::string certificate;
};

struct Atlas {
  int max_n = 0;
  int max_m = 0;  // 0 means the per-n default cap n^2+1
  std::vector<AtlasEntry> entries;
  std::vector<RelationEdge> edges;
};

/// Builds entries for 2 <= n <= N and n < m <= min(M, n^2+1) (M <= 0
/// uses the per-n cap). Lower bounds come from the constructive
/// catalogue; entries where the catalogue meets the counting bound are
/// bounds-matched, m > n^2 entries are pinned to maxK = 1 by the
/// pigeonhole argument, and the rest escalate to exhaustive search when
/// the canonical coloring count is small enough.
Atlas atlas_build(int M, int N, const SearchBudget& budget);

const AtlasEntry* atlas_find(const Atlas& atlas, Shape s);

/// Deterministic Graphviz text. Entries with the same id-level share a
/// rank. In figure-2 mode each node is annotated with the strongest
/// constructively verified AUC level and the weakest verified ACC level.
std::string emit_dot(const Atlas& atlas, bool figure2 = false, bool strict_only = false);

/// Cache serialization (byte-stable for a fixed atlas).
std::string emit_json(const Atlas& atlas);
Atlas atlas_from_json(const std::string& text);

/// Constructive jump-witness levels used by figure-2 annotations:
/// the largest k with a product-construction AUC_k witness on (m,n),
/// and the smallest k >= 2 with a digit-family ACC_k witness.
int constructive_auc_level(Shape s);
int constructive_acc_level(Shape s);

}  // namespace php
