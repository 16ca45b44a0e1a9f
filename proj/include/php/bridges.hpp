#pragma once

#include <string>
#include <vector>

#include "php/core.hpp"
#include "php/designs.hpp"
#include "php/jumps.hpp"

namespace php {

enum class BuiltinFamilyId { kWarmup423, kNine46, kSeven510 };

/// String ids: warmup-4-2-3, nine-4-6, seven-5-10.
BuiltinFamilyId builtin_family_id(const std::string& name);
std::string to_string(BuiltinFamilyId id);
FunctionFamily builtin_family(BuiltinFamilyId id);

/// Row function, column function, and one function per square, on
/// (n^2, n). With an empty square list pass the order explicitly.
FunctionFamily mols_to_family(const std::vector<LatinSquare>& squares, int order = -1);

/// Inverse bridge: the first two members must jointly be a bijection
/// n^2 -> n x n; each further member becomes one Latin square.
std::vector<LatinSquare> family_to_mols(const FunctionFamily& family);

/// One function per parallel class (point -> index of its block, blocks
/// ordered by minimum element), on (v, v/blockSize) colors... the color
/// count is the number of blocks per class.
FunctionFamily rbibd_to_family(const ResolvableDesign& d);

/// Fiber partitions of a disjoint family of size (qn-1)/(q-1) on (qn,n)
/// as the parallel classes of an RBIBD(qn, q, 1).
ResolvableDesign family_to_rbibd(const FunctionFamily& family, int q);

/// The matching-packing count alpha(m,n) for 2n+1 >= m > n >= 2,
/// with the (5,2) exception where the closed form overshoots (no
/// 2-function disjoint family exists on (5,2); checked exhaustively).
int graph_decomp_alpha(int m, int n);

/// max of alpha(m',n) over m' in [m, 2n+1].
int graph_decomp_k(int m, int n);

/// Disjoint family of size graph_decomp_k(m,n) built from matchings
/// extracted from one-factorizations / Hamiltonian decompositions /
/// near-one-factorizations, restricted down to m points.
FunctionFamily graph_decomp_family(int m, int n);

/// The l base-n digit functions on (n^l, n); their joint common
/// solution set is empty (pairwise disjointness is not claimed).
/// Requires l >= 2 so that n^l > n.
FunctionFamily digit_family(int n, int l);

/// C(n+1,2) functions on (n+1, n), one per pair {i,j}, each with
/// solution set exactly {{i,j}}.
FunctionFamily pair_family(int n);

/// Product construction: g(x) = floor(x/m), f_l(x) = h_l(x mod m) on
/// (mn, n). Output passes check_auc_witness. Requires m <= n^2.
AucWitness product_family(const FunctionFamily& h_family);

/// Witness for php(m,n) <= php(mq+r, nq+r): forward pads f to
/// g(x) = floor(x/m)*n + f(x mod m) on the first mq points plus r fresh
/// colors; backward maps {i,j} to the residue pair.
ReductionWitness padding_witness(int m, int n, int q, int r);

/// Witness for php(m',n') <= php(m,n) with m' >= m > n >= n' >= 2:
/// forward restricts to the first m points, backward is the identity
/// on pair indices.
ReductionWitness restriction_witness(int m_big, int n_small, int m, int n);

/// Best known constructive disjoint family at a shape, assembled from
/// builtins, graph decompositions, MOLS, one-factorizations and Kirkman
/// systems, transferred by domain restriction (a family on (m0,n0)
/// works at (m,n) whenever m0 >= m and n0 <= n).
struct ConstructiveFamily {
  FunctionFamily family;
  std::string source;  // e.g. "builtin:nine-4-6", "mols:4", "kirkman:15"
};
ConstructiveFamily best_constructive_family(Shape s);

}  // namespace php
