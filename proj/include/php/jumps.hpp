#pragma once

#include <map>
#include <optional>
#include <vector>

#include "php/core.hpp"

namespace php {

/// Finite witness for AUC_k reducibility: a guard function g plus k
/// functions such that no two of them share a solution with g.
struct AucWitness {
  Shape shape;
  ColorFunction g;
  std::vector<ColorFunction> f_list;
};

struct TripleVerdict {
  bool ok = true;
  int first = -1;
  int second = -1;
  Pair witness;
};

/// True iff for all l != l': solutions(g) and solutions(f_l) and
/// solutions(f_l') have empty intersection.
TripleVerdict check_auc_witness(const AucWitness& w);

/// True iff the k+1 functions have no solution in common. k >= 2.
struct AccVerdict {
  bool ok = true;
  Pair witness;  // a common solution, when ok is false
};
AccVerdict check_acc_witness(Shape shape, const std::vector<ColorFunction>& functions);

/// Injection from a proper initial segment of {0..k-1} into {0..k-1},
/// encoded as its value sequence. Values distinct, all < k, length < k.
using Injection = std::vector<int>;

std::vector<Injection> all_injections(int k);

/// Labelled tree of color functions indexed by injections; the map must
/// be total on all injections of length < k.
struct CkTree {
  int k = 0;
  Shape shape;
  std::map<Injection, ColorFunction> nodes;
};

struct CkVerdict {
  bool ok = true;
  Pair pair;       // violating pair, when ok is false
  Injection node;  // violating injection
};

/// The finite choice condition: for every pair {i,j} and every node
/// sigma whose function solves {i,j}, some l < k avoids the range of
/// every extension tau of sigma (tau = sigma included when reflexive)
/// whose function also solves {i,j}.
CkVerdict check_ck_tree(const CkTree& t, bool reflexive = true);

/// For a pair solved by f_sigma, the set of l < k usable at sigma.
std::vector<int> ck_admissible_labels(const CkTree& t, Pair p, const Injection& sigma,
                                      bool reflexive = true);

enum class ScanResult { kImpossible, kWitnessFound };

struct AucScanOutcome {
  ScanResult result = ScanResult::kImpossible;
  std::optional<AucWitness> witness;
  uint64_t candidates = 0;
};

/// Exhaustive scan on (n^2+1, n) for an AUC witness with k functions.
/// Only n = 2 is within budget; the default k is C(n+1,2)+1, where no
/// witness exists.
AucScanOutcome auc_impossibility_scan(int n, int k = -1);

/// Exhaustive scan on (m, n): do k+1 functions with no common solution
/// exist? Used at (n^{k+1}+1, n) where the answer is no.
struct AccScanOutcome {
  ScanResult result = ScanResult::kImpossible;
  std::optional<FunctionFamily> witness;
  uint64_t candidates = 0;
};
AccScanOutcome acc_witness_scan(Shape shape, int k);

/// The stored choice tree on (8,2) with root (0123)(4567).
CkTree builtin_c3_tree();

}  // namespace php
