#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "php/core.hpp"

namespace php {

/// Finite field GF(p^e) for p^e <= 16, as explicit addition and
/// multiplication tables over element indices 0..q-1 (0 and 1 are the
/// additive and multiplicative identities).
struct FieldTable {
  int q = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;

  int plus(int a, int b) const { return add[a][b]; }
  int times(int a, int b) const { return mul[a][b]; }
};

/// Builds GF(p^e) from a fixed irreducible polynomial per (p,e):
/// x^2+x+1, x^3+x+1, x^4+x+1 over GF(2); x^2+1 over GF(3).
FieldTable gf_build(int p, int e);

/// Exhaustive check of the field axioms on the tables.
bool gf_verify(const FieldTable& f, std::string* why = nullptr);

struct LatinSquare {
  int order = 0;
  std::vector<std::vector<int>> grid;

  int at(int row, int col) const { return grid[row][col]; }
};

/// The q-1 squares L_a(x,y) = a*x + y for a != 0; pairwise orthogonal.
std::vector<LatinSquare> mols_from_field(const FieldTable& f);

struct MolsVerdict {
  bool ok = true;
  // On failure: indices of the violating square(s) and the offending cell.
  int first = -1;
  int second = -1;  // -1 when a single square fails the Latin property
  int row = -1;
  int col = -1;
  std::string reason;
};

/// True iff each square is Latin and each pair is orthogonal.
/// Vacuously true on the empty sequence. Throws on mixed orders.
MolsVerdict verify_mols(const std::vector<LatinSquare>& squares);

/// Points, blocks and parallel classes of a resolvable design.
/// Maps onto RBIBD(v, blockSize, lambda): within each class the blocks
/// partition the points, and every point pair lies in exactly lambda
/// blocks overall.
struct ResolvableDesign {
  int v = 0;
  int block_size = 0;
  int lambda = 0;
  std::vector<std::vector<std::vector<int>>> classes;
};

struct DesignVerdict {
  bool ok = true;
  std::string reason;
};

DesignVerdict verify_design(const ResolvableDesign& d);

enum class DecompositionKind { kOneFactorization, kNearOneFactorization, kHamiltonian };

/// Partition of the edges of K_m into classes of a given shape
/// (perfect matchings, near-perfect matchings, or Hamiltonian cycles).
struct EdgeDecomposition {
  int m = 0;
  DecompositionKind kind = DecompositionKind::kOneFactorization;
  std::vector<std::vector<Pair>> classes;
};

/// Circle method: 2n-1 perfect matchings of K_{2n} (vertex 2n-1 fixed,
/// the chord pattern rotated).
EdgeDecomposition one_factorization(int two_n);

/// m classes, each a matching missing exactly one vertex, obtained from
/// the one-factorization of K_{m+1} by deleting the added vertex.
EdgeDecomposition near_one_factorization(int m);

/// Walecki-style zigzag rotation: (m-1)/2 edge-disjoint Hamiltonian
/// cycles covering K_m. Classes list each cycle's edges in cycle order.
EdgeDecomposition hamiltonian_decomposition(int m);

struct DecompositionVerdict {
  bool ok = true;
  std::string reason;
};

/// Classes pairwise edge-disjoint, union all of K_m, kind-specific shape.
DecompositionVerdict verify_decomposition(const EdgeDecomposition& d);

/// View a one-factorization as an RBIBD(2n,2,1).
ResolvableDesign decomposition_as_design(const EdgeDecomposition& d);

/// RBIBD(n^2, n, 1) with n+1 parallel classes, assembled from rows,
/// columns, and the n-1 MOLS. Supported n: 2,3,4,5,7,8,9.
ResolvableDesign affine_plane(int n);

/// Certified Kirkman triple systems: v=9 (from the affine plane of
/// order 3) and v=15 (a stored classical solution). Other v are refused.
ResolvableDesign kirkman_system(int v);

}  // namespace php
