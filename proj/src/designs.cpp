#include "php/designs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace php {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomial coefficients over GF(p), least significant first.
std::vector<int> poly_from_index(int idx, int p, int len) {
  std::vector<int> c(len, 0);
  for (int i = 0; i < len && idx; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

int poly_to_index(const std::vector<int>& c, int p) {
  int idx = 0;
  for (size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

// Reduction polynomials, fixed per (p,e). Coefficients low-first,
// degree e monic leading term included.
std::vector<int> reduction_poly(int p, int e) {
  if (p == 2 && e == 2) return {1, 1, 1};        // x^2 + x + 1
  if (p == 2 && e == 3) return {1, 1, 0, 1};     // x^3 + x + 1
  if (p == 2 && e == 4) return {1, 1, 0, 0, 1};  // x^4 + x + 1
  if (p == 3 && e == 2) return {1, 0, 1};        // x^2 + 1
  throw std::invalid_argument("no reduction polynomial stored for this (p,e)");
}

}  // namespace

FieldTable gf_build(int p, int e) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (e < 1) throw std::invalid_argument("e must be >= 1");
  int q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 16) throw std::invalid_argument("field order must be <= 16");
  }

  FieldTable f;
  f.q = q;
  f.add.assign(q, std::vector<int>(q));
  f.mul.assign(q, std::vector<int>(q));

  if (e == 1) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add[a][b] = (a + b) % p;
        f.mul[a][b] = (a * b) % p;
      }
    return f;
  }

  std::vector<int> red = reduction_poly(p, e);
  for (int a = 0; a < q; ++a) {
    auto pa = poly_from_index(a, p, e);
    for (int b = 0; b < q; ++b) {
      auto pb = poly_from_index(b, p, e);
      std::vector<int> sum(e);
      for (int i = 0; i < e; ++i) sum[i] = (pa[i] + pb[i]) % p;
      f.add[a][b] = poly_to_index(sum, p);

      std::vector<int> prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      // Reduce modulo the fixed polynomial.
      for (int d = 2 * e - 2; d >= e; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < e; ++i)
          prod[d - e + i] = ((prod[d - e + i] - c * red[i]) % p + p * p) % p;
      }
      prod.resize(e);
      f.mul[a][b] = poly_to_index(prod, p);
    }
  }
  return f;
}

bool gf_verify(const FieldTable& f, std::string* why) {
  int q = f.q;
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int a = 0; a < q; ++a) {
    if (f.plus(a, 0) != a) return fail("additive identity");
    if (f.times(a, 1) != a) return fail("multiplicative identity");
    bool has_neg = false, has_inv = (a == 0);
    for (int b = 0; b < q; ++b) {
      if (f.plus(a, b) == 0) has_neg = true;
      if (a != 0 && f.times(a, b) == 1) has_inv = true;
      if (f.plus(a, b) != f.plus(b, a)) return fail("addition commutativity");
      if (f.times(a, b) != f.times(b, a)) return fail("multiplication commutativity");
      for (int c = 0; c < q; ++c) {
        if (f.plus(f.plus(a, b), c) != f.plus(a, f.plus(b, c)))
          return fail("addition associativity");
        if (f.times(f.times(a, b), c) != f.times(a, f.times(b, c)))
          return fail("multiplication associativity");
        if (f.times(a, f.plus(b, c)) != f.plus(f.times(a, b), f.times(a, c)))
          return fail("distributivity");
      }
    }
    if (!has_neg) return fail("missing additive inverse");
    if (!has_inv) return fail("missing multiplicative inverse");
  }
  return true;
}

std::vector<LatinSquare> mols_from_field(const FieldTable& f) {
  std::vector<LatinSquare> out;
  for (int a = 1; a < f.q; ++a) {
    LatinSquare sq;
    sq.order = f.q;
    sq.grid.assign(f.q, std::vector<int>(f.q));
    for (int x = 0; x < f.q; ++x)
      for (int y = 0; y < f.q; ++y) sq.grid[x][y] = f.plus(f.times(a, x), y);
    out.push_back(std::move(sq));
  }
  return out;
}

MolsVerdict verify_mols(const std::vector<LatinSquare>& squares) {
  if (squares.empty()) return {};
  int n = squares[0].order;
  for (const auto& sq : squares)
    if (sq.order != n) throw std::invalid_argument("mixed Latin square orders");

  for (size_t s = 0; s < squares.size(); ++s) {
    const auto& g = squares[s].grid;
    if (static_cast<int>(g.size()) != n)
      return {false, static_cast<int>(s), -1, -1, -1, "bad grid shape"};
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(g[r].size()) != n)
        return {false, static_cast<int>(s), -1, r, -1, "bad grid shape"};
      std::vector<bool> seen(n, false);
      for (int c = 0; c < n; ++c) {
        int v = g[r][c];
        if (v < 0 || v >= n || seen[v])
          return {false, static_cast<int>(s), -1, r, c, "row repeats a symbol"};
        seen[v] = true;
      }
    }
    for (int c = 0; c < n; ++c) {
      std::vector<bool> seen(n, false);
      for (int r = 0; r < n; ++r) {
        int v = g[r][c];
        if (seen[v])
          return {false, static_cast<int>(s), -1, r, c, "column repeats a symbol"};
        seen[v] = true;
      }
    }
  }

  for (size_t a = 0; a < squares.size(); ++a)
    for (size_t b = a + 1; b < squares.size(); ++b) {
      std::vector<int> seen(n * n, 0);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          int key = squares[a].grid[r][c] * n + squares[b].grid[r][c];
          if (seen[key]++)
            return {false, static_cast<int>(a), static_cast<int>(b), r, c,
                    "ordered symbol pair repeats"};
        }
    }
  return {};
}

DesignVerdict verify_design(const ResolvableDesign& d) {
  if (d.v < 2 || d.block_size < 2 || d.lambda < 1)
    return {false, "degenerate parameters"};
  std::vector<int> pair_hits(pair_count(d.v), 0);
  for (const auto& cls : d.classes) {
    std::vector<bool> covered(d.v, false);
    for (const auto& block : cls) {
      if (static_cast<int>(block.size()) != d.block_size)
        return {false, "block size mismatch"};
      for (int pt : block) {
        if (pt < 0 || pt >= d.v) return {false, "point out of range"};
        if (covered[pt]) return {false, "point repeated within a parallel class"};
        covered[pt] = true;
      }
      for (size_t a = 0; a < block.size(); ++a)
        for (size_t b = a + 1; b < block.size(); ++b) {
          int i = std::min(block[a], block[b]), j = std::max(block[a], block[b]);
          ++pair_hits[pair_index(i, j)];
        }
    }
    for (int pt = 0; pt < d.v; ++pt)
      if (!covered[pt]) return {false, "parallel class does not cover all points"};
  }
  for (int idx = 0; idx < pair_count(d.v); ++idx)
    if (pair_hits[idx] != d.lambda) return {false, "pair multiplicity violated"};
  return {};
}

EdgeDecomposition one_factorization(int two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("one_factorization requires an even vertex count");
  if (two_n < 4) throw std::invalid_argument("one_factorization requires at least 4 vertices");
  int c = two_n - 1;  // circle size; vertex two_n-1 sits at the center
  EdgeDecomposition d;
  d.m = two_n;
  d.kind = DecompositionKind::kOneFactorization;
  for (int round = 0; round < c; ++round) {
    std::vector<Pair> matching;
    matching.emplace_back(std::min(round, c), std::max(round, c));
    for (int k = 1; k <= (two_n - 2) / 2; ++k) {
      int a = (round + k) % c, b = (round - k % c + c) % c;
      matching.emplace_back(std::min(a, b), std::max(a, b));
    }
    d.classes.push_back(std::move(matching));
  }
  return d;
}

EdgeDecomposition near_one_factorization(int m) {
  if (m % 2 == 0) throw std::invalid_argument("near_one_factorization requires odd m");
  if (m < 3) throw std::invalid_argument("near_one_factorization requires m >= 3");
  EdgeDecomposition full = one_factorization(m + 1);
  EdgeDecomposition d;
  d.m = m;
  d.kind = DecompositionKind::kNearOneFactorization;
  for (auto& cls : full.classes) {
    std::vector<Pair> kept;
    for (const Pair& p : cls)
      if (p.j != m) kept.push_back(p);  // drop edges at the added vertex
    d.classes.push_back(std::move(kept));
  }
  return d;
}

EdgeDecomposition hamiltonian_decomposition(int m) {
  if (m % 2 == 0) throw std::invalid_argument("hamiltonian_decomposition requires odd m");
  if (m < 3) throw std::invalid_argument("hamiltonian_decomposition requires m >= 3");
  int rim = m - 1;  // vertices 0..m-2 rotate; vertex m-1 is fixed
  EdgeDecomposition d;
  d.m = m;
  d.kind = DecompositionKind::kHamiltonian;
  for (int i = 0; i < (m - 1) / 2; ++i) {
    // Zigzag i, i+1, i-1, i+2, i-2, ... closed through the fixed vertex.
    std::vector<int> route{m - 1, i};
    for (int s = 1; s < rim; ++s) {
      int off = (s + 1) / 2 * (s % 2 == 1 ? 1 : -1);
      route.push_back(((i + off) % rim + rim) % rim);
    }
    std::vector<Pair> cycle;
    for (size_t k = 0; k < route.size(); ++k) {
      int a = route[k], b = route[(k + 1) % route.size()];
      cycle.emplace_back(std::min(a, b), std::max(a, b));
    }
    d.classes.push_back(std::move(cycle));
  }
  return d;
}

DecompositionVerdict verify_decomposition(const EdgeDecomposition& d) {
  std::vector<bool> used(pair_count(d.m), false);
  for (const auto& cls : d.classes)
    for (const Pair& p : cls) {
      if (p.j >= d.m) return {false, "edge endpoint out of range"};
      if (used[p.index()]) return {false, "edge appears in two classes"};
      used[p.index()] = true;
    }
  for (bool u : used)
    if (!u) return {false, "classes do not cover all edges"};

  for (const auto& cls : d.classes) {
    std::vector<int> degree(d.m, 0);
    for (const Pair& p : cls) {
      ++degree[p.i];
      ++degree[p.j];
    }
    switch (d.kind) {
      case DecompositionKind::kOneFactorization:
        if (static_cast<int>(cls.size()) != d.m / 2) return {false, "matching size wrong"};
        for (int v = 0; v < d.m; ++v)
          if (degree[v] != 1) return {false, "class is not a perfect matching"};
        break;
      case DecompositionKind::kNearOneFactorization: {
        if (static_cast<int>(cls.size()) != (d.m - 1) / 2)
          return {false, "near-matching size wrong"};
        int missed = 0;
        for (int v = 0; v < d.m; ++v) {
          if (degree[v] == 0) ++missed;
          else if (degree[v] != 1) return {false, "class is not a matching"};
        }
        if (missed != 1) return {false, "near-matching must miss exactly one vertex"};
        break;
      }
      case DecompositionKind::kHamiltonian: {
        if (static_cast<int>(cls.size()) != d.m) return {false, "cycle length wrong"};
        for (int v = 0; v < d.m; ++v)
          if (degree[v] != 2) return {false, "class is not a 2-regular graph"};
        // Connectivity: a single cycle reaches every vertex.
        std::vector<std::vector<int>> adj(d.m);
        for (const Pair& p : cls) {
          adj[p.i].push_back(p.j);
          adj[p.j].push_back(p.i);
        }
        std::vector<bool> seen(d.m, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (int w : adj[v])
            if (!seen[w]) {
              seen[w] = true;
              ++reached;
              stack.push_back(w);
            }
        }
        if (reached != d.m) return {false, "class is not a single cycle"};
        break;
      }
    }
  }
  return {};
}

ResolvableDesign decomposition_as_design(const EdgeDecomposition& d) {
  if (d.kind != DecompositionKind::kOneFactorization)
    throw std::invalid_argument("only one-factorizations map to designs directly");
  ResolvableDesign out;
  out.v = d.m;
  out.block_size = 2;
  out.lambda = 1;
  for (const auto& cls : d.classes) {
    std::vector<std::vector<int>> blocks;
    for (const Pair& p : cls) blocks.push_back({p.i, p.j});
    std::sort(blocks.begin(), blocks.end());
    out.classes.push_back(std::move(blocks));
  }
  return out;
}

ResolvableDesign affine_plane(int n) {
  static const std::set<int> supported{2, 3, 4, 5, 7, 8, 9};
  if (!supported.count(n)) throw std::invalid_argument("unsupported affine plane order");

  int p = n, e = 1;
  if (n == 4) p = 2, e = 2;
  if (n == 8) p = 2, e = 3;
  if (n == 9) p = 3, e = 2;
  auto squares = mols_from_field(gf_build(p, e));

  // Point x = row*n + col of the n x n grid.
  ResolvableDesign d;
  d.v = n * n;
  d.block_size = n;
  d.lambda = 1;

  std::vector<std::vector<int>> rows(n), cols(n);
  for (int x = 0; x < n * n; ++x) {
    rows[x / n].push_back(x);
    cols[x % n].push_back(x);
  }
  d.classes.push_back(rows);
  d.classes.push_back(cols);
  for (const auto& sq : squares) {
    std::vector<std::vector<int>> cls(n);
    for (int x = 0; x < n * n; ++x) cls[sq.at(x / n, x % n)].push_back(x);
    d.classes.push_back(std::move(cls));
  }
  return d;
}

ResolvableDesign kirkman_system(int v) {
  if (v == 9) {
    ResolvableDesign d = affine_plane(3);
    return d;
  }
  if (v == 15) {
    // A classical resolution of the schoolgirl problem, 0-indexed.
    static const int days[7][5][3] = {
        {{0, 1, 2}, {3, 7, 11}, {4, 9, 14}, {5, 10, 12}, {6, 8, 13}},
        {{0, 3, 4}, {1, 7, 9}, {2, 12, 13}, {5, 8, 14}, {6, 10, 11}},
        {{0, 5, 6}, {1, 8, 10}, {2, 11, 14}, {3, 9, 13}, {4, 7, 12}},
        {{0, 7, 8}, {1, 11, 13}, {2, 4, 5}, {3, 10, 14}, {6, 9, 12}},
        {{0, 9, 10}, {1, 12, 14}, {2, 3, 6}, {4, 8, 11}, {5, 7, 13}},
        {{0, 11, 12}, {1, 3, 5}, {2, 8, 9}, {4, 10, 13}, {6, 7, 14}},
        {{0, 13, 14}, {1, 4, 6}, {2, 7, 10}, {3, 8, 12}, {5, 9, 11}},
    };
    ResolvableDesign d;
    d.v = 15;
    d.block_size = 3;
    d.lambda = 1;
    for (const auto& day : days) {
      std::vector<std::vector<int>> cls;
      for (const auto& triple : day) cls.push_back({triple[0], triple[1], triple[2]});
      d.classes.push_back(std::move(cls));
    }
    return d;
  }
  throw std::invalid_argument(
      "Kirkman system not constructed for this order; supply one via import");
}

}  // namespace php
