#include "php/bridges.hpp"

#include <algorithm>
#include <cmath>

namespace php {

namespace {

FunctionFamily make_family(Shape s, const std::vector<std::vector<uint8_t>>& color_lists) {
  std::vector<ColorFunction> fns;
  fns.reserve(color_lists.size());
  for (const auto& c : color_lists) fns.emplace_back(s, c);
  return FunctionFamily(s, std::move(fns));
}

/// Domain restriction to the first m points, recolored over n colors.
FunctionFamily restrict_family(const FunctionFamily& family, int m, int n) {
  if (m > family.shape.m || n < family.shape.n)
    throw std::invalid_argument("restriction requires m <= m0 and n >= n0");
  Shape s(m, n);
  std::vector<ColorFunction> fns;
  for (const auto& f : family.functions)
    fns.emplace_back(s, std::vector<uint8_t>(f.colors.begin(), f.colors.begin() + m));
  return FunctionFamily(s, std::move(fns));
}

}  // namespace

BuiltinFamilyId builtin_family_id(const std::string& name) {
  if (name == "warmup-4-2-3") return BuiltinFamilyId::kWarmup423;
  if (name == "nine-4-6") return BuiltinFamilyId::kNine46;
  if (name == "seven-5-10") return BuiltinFamilyId::kSeven510;
  throw std::invalid_argument("unknown builtin family: " + name);
}

std::string to_string(BuiltinFamilyId id) {
  switch (id) {
    case BuiltinFamilyId::kWarmup423: return "warmup-4-2-3";
    case BuiltinFamilyId::kNine46: return "nine-4-6";
    case BuiltinFamilyId::kSeven510: return "seven-5-10";
  }
  return "unknown";
}

FunctionFamily builtin_family(BuiltinFamilyId id) {
  switch (id) {
    case BuiltinFamilyId::kWarmup423:
      // (01)(23), (02)(13), (03)(12)
      return make_family(Shape(4, 2), {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});
    case BuiltinFamilyId::kNine46:
      // (012)(38)(46)(57) and its five companions
      return make_family(Shape(9, 4), {
                                          {0, 0, 0, 1, 2, 3, 2, 3, 1},
                                          {3, 1, 2, 0, 0, 0, 2, 3, 1},
                                          {3, 1, 2, 1, 2, 3, 0, 0, 0},
                                          {0, 1, 2, 0, 3, 1, 0, 2, 3},
                                          {3, 0, 2, 2, 0, 1, 1, 0, 3},
                                          {3, 1, 0, 2, 3, 0, 1, 2, 0},
                                      });
    case BuiltinFamilyId::kSeven510:
      // (01)(45)... : ten near-injections on seven points
      return make_family(Shape(7, 5), {
                                          {0, 0, 2, 3, 1, 1, 4},
                                          {0, 1, 0, 2, 3, 4, 1},
                                          {0, 1, 1, 0, 2, 3, 4},
                                          {0, 1, 2, 1, 0, 3, 4},
                                          {0, 1, 2, 3, 1, 0, 4},
                                          {0, 1, 2, 3, 4, 1, 0},
                                          {2, 3, 0, 0, 1, 4, 1},
                                          {2, 3, 0, 1, 0, 4, 1},
                                          {2, 3, 0, 1, 1, 0, 4},
                                          {2, 3, 0, 1, 4, 1, 0},
                                      });
  }
  throw std::invalid_argument("unknown builtin family id");
}

FunctionFamily mols_to_family(const std::vector<LatinSquare>& squares, int order) {
  int n = squares.empty() ? order : squares[0].order;
  if (n < 2) throw std::invalid_argument("mols_to_family needs order >= 2");
  MolsVerdict mv = verify_mols(squares);
  if (!mv.ok) throw std::invalid_argument("mols_to_family: " + mv.reason);

  Shape s(n * n, n);
  std::vector<std::vector<uint8_t>> lists;
  std::vector<uint8_t> row(s.m), col(s.m);
  for (int x = 0; x < s.m; ++x) {
    row[x] = static_cast<uint8_t>(x / n);
    col[x] = static_cast<uint8_t>(x % n);
  }
  lists.push_back(row);
  lists.push_back(col);
  for (const auto& sq : squares) {
    std::vector<uint8_t> c(s.m);
    for (int x = 0; x < s.m; ++x) c[x] = static_cast<uint8_t>(sq.at(x / n, x % n));
    lists.push_back(std::move(c));
  }
  return make_family(s, lists);
}

std::vector<LatinSquare> family_to_mols(const FunctionFamily& family) {
  int n = family.shape.n;
  if (family.shape.m != n * n)
    throw std::invalid_argument("family_to_mols requires shape (n^2, n)");
  if (family.size() < 2) throw std::invalid_argument("family_to_mols requires >= 2 members");
  DisjointVerdict dv = is_disjoint_family(family);
  if (!dv.ok) throw std::invalid_argument("family_to_mols requires a disjoint family");

  const auto& f1 = family.functions[0];
  const auto& f2 = family.functions[1];
  std::vector<int> inverse(n * n, -1);
  for (int x = 0; x < n * n; ++x) {
    int cell = f1(x) * n + f2(x);
    if (inverse[cell] != -1)
      throw std::invalid_argument("first two members are not jointly injective");
    inverse[cell] = x;
  }

  std::vector<LatinSquare> out;
  for (size_t l = 2; l < family.size(); ++l) {
    LatinSquare sq;
    sq.order = n;
    sq.grid.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sq.grid[i][j] = family.functions[l](inverse[i * n + j]);
    out.push_back(std::move(sq));
  }
  return out;
}

namespace {

std::vector<std::vector<int>> blocks_by_min(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace

FunctionFamily rbibd_to_family(const ResolvableDesign& d) {
  DesignVerdict dv = verify_design(d);
  if (!dv.ok) throw std::invalid_argument("rbibd_to_family: " + dv.reason);
  if (d.lambda != 1) throw std::invalid_argument("rbibd_to_family requires lambda = 1");
  int n = d.v / d.block_size;
  if (n < 2 || d.block_size < 2)
    throw std::invalid_argument("rbibd_to_family requires 2 <= blockSize and >= 2 blocks per class");

  Shape s(d.v, n);
  std::vector<std::vector<uint8_t>> lists;
  for (const auto& cls : d.classes) {
    if (static_cast<int>(cls.size()) != n)
      throw std::invalid_argument("class with unexpected block count");
    auto blocks = blocks_by_min(cls);
    std::vector<uint8_t> colors(d.v);
    for (int b = 0; b < n; ++b)
      for (int pt : blocks[b]) colors[pt] = static_cast<uint8_t>(b);
    lists.push_back(std::move(colors));
  }
  return make_family(s, lists);
}

ResolvableDesign family_to_rbibd(const FunctionFamily& family, int q) {
  int m = family.shape.m, n = family.shape.n;
  if (q < 2 || m != q * n)
    throw std::invalid_argument("family_to_rbibd requires m = q*n with q >= 2");
  if ((q * n - 1) % (q - 1) != 0 ||
      static_cast<int>(family.size()) != (q * n - 1) / (q - 1))
    throw std::invalid_argument("family size must equal (qn-1)/(q-1)");
  DisjointVerdict dv = is_disjoint_family(family);
  if (!dv.ok) throw std::invalid_argument("family_to_rbibd requires a disjoint family");

  ResolvableDesign d;
  d.v = m;
  d.block_size = q;
  d.lambda = 1;
  for (const auto& f : family.functions) {
    std::vector<std::vector<int>> fibers(n);
    for (int x = 0; x < m; ++x) fibers[f(x)].push_back(x);
    for (const auto& fib : fibers)
      if (static_cast<int>(fib.size()) != q)
        throw std::invalid_argument("fiber of size != q; not a resolvable structure");
    d.classes.push_back(blocks_by_min(fibers));
  }
  return d;
}

int graph_decomp_alpha(int m, int n) {
  if (!(2 * n + 1 >= m && m > n && n >= 2))
    throw std::invalid_argument("alpha requires 2n+1 >= m > n >= 2");
  // The closed form claims alpha(5,2) = 2, but no two functions 5 -> 2
  // have disjoint solution sets (exhaustive check); see the tests.
  if (m == 5 && n == 2) return 1;
  int r = m - n;
  if (m % 2 == 0) return (m - 1) * (m / 2 / r);
  return std::max((m - 1) / 2 * (m / r), m * ((m - 1) / 2 / r));
}

int graph_decomp_k(int m, int n) {
  int best = 0;
  for (int mp = m; mp <= 2 * n + 1; ++mp) best = std::max(best, graph_decomp_alpha(mp, n));
  return best;
}

namespace {

/// Function m -> n from an r-matching: edge t gets color t, leftover
/// vertices get fresh colors in increasing order.
std::vector<uint8_t> matching_function(int m, int n, const std::vector<Pair>& matching) {
  int r = static_cast<int>(matching.size());
  std::vector<uint8_t> colors(m, 255);
  for (int t = 0; t < r; ++t) {
    colors[matching[t].i] = static_cast<uint8_t>(t);
    colors[matching[t].j] = static_cast<uint8_t>(t);
  }
  int next = r;
  for (int v = 0; v < m; ++v)
    if (colors[v] == 255) colors[v] = static_cast<uint8_t>(next++);
  if (next != n) throw std::logic_error("matching does not induce n colors");
  return colors;
}

/// Split one matching class into disjoint r-matchings (edges sorted).
void chunk_matching_class(int m, int n, int r, std::vector<Pair> edges,
                          std::vector<std::vector<uint8_t>>* out) {
  std::sort(edges.begin(), edges.end());
  int chunks = static_cast<int>(edges.size()) / r;
  for (int c = 0; c < chunks; ++c)
    out->push_back(matching_function(
        m, n, std::vector<Pair>(edges.begin() + c * r, edges.begin() + (c + 1) * r)));
}

/// Vertex order v_0, ..., v_{m-1} of a cycle given its edges in cycle
/// order (edge t joins v_t and v_{t+1}).
std::vector<int> cycle_vertices(const std::vector<Pair>& edges) {
  int m = static_cast<int>(edges.size());
  auto shares = [](Pair a, int v) { return a.i == v || a.j == v; };
  const Pair& first = edges[0];
  const Pair& last = edges[m - 1];
  int v0 = shares(last, first.i) ? first.i : first.j;
  std::vector<int> verts{v0};
  for (int t = 0; t < m - 1; ++t) {
    int cur = verts.back();
    verts.push_back(edges[t].i == cur ? edges[t].j : edges[t].i);
  }
  return verts;
}

/// The m = 2n+1 case: one function per Hamiltonian cycle, built from
/// alternate edges with a doubled vertex; per-cycle phases are chosen
/// by backtracking so the solution sets stay pairwise disjoint.
std::vector<std::vector<uint8_t>> alternate_edge_family(int m, int n) {
  EdgeDecomposition ham = hamiltonian_decomposition(m);
  std::vector<std::vector<int>> verts;
  for (const auto& cls : ham.classes) verts.push_back(cycle_vertices(cls));
  int cycles = static_cast<int>(ham.classes.size());

  auto phase_function = [&](int c, int p) {
    // Path v_{p-1}, v_p, v_{p+1} shares color 0; the remaining n-1
    // alternate edges get one color each.
    const auto& v = verts[c];
    std::vector<uint8_t> colors(m, 255);
    colors[v[((p - 1) % m + m) % m]] = 0;
    colors[v[p % m]] = 0;
    colors[v[(p + 1) % m]] = 0;
    for (int t = 1; t < n; ++t) {
      colors[v[(p + 2 * t) % m]] = static_cast<uint8_t>(t);
      colors[v[(p + 2 * t + 1) % m]] = static_cast<uint8_t>(t);
    }
    return colors;
  };

  std::vector<std::vector<uint8_t>> chosen;
  std::vector<SolutionSet> chosen_sols;
  Shape s(m, n);
  auto rec = [&](auto&& self, int c) -> bool {
    if (c == cycles) return true;
    for (int p = 0; p < m; ++p) {
      auto colors = phase_function(c, p);
      SolutionSet sol = solutions(ColorFunction(s, colors));
      bool ok = true;
      for (const auto& prev : chosen_sols)
        if (!prev.disjoint_with(sol)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(std::move(colors));
      chosen_sols.push_back(std::move(sol));
      if (self(self, c + 1)) return true;
      chosen.pop_back();
      chosen_sols.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::logic_error("no disjoint phase assignment found");
  return chosen;
}

std::vector<std::vector<uint8_t>> decomp_family_exact(int m, int n) {
  int r = m - n;
  std::vector<std::vector<uint8_t>> lists;
  if (m % 2 == 0) {
    EdgeDecomposition of = one_factorization(m);
    for (const auto& cls : of.classes) chunk_matching_class(m, n, r, cls, &lists);
    return lists;
  }
  if (m == 2 * n + 1) return alternate_edge_family(m, n);
  int ham_total = (m - 1) / 2 * (m / r);
  int near_total = m * ((m - 1) / 2 / r);
  if (ham_total >= near_total) {
    EdgeDecomposition ham = hamiltonian_decomposition(m);
    int stride = m / r;
    for (const auto& cls : ham.classes)
      for (int p = 0; p < stride; ++p) {
        std::vector<Pair> matching;
        for (int t = 0; t < r; ++t) matching.push_back(cls[(p + t * stride) % m]);
        lists.push_back(matching_function(m, n, matching));
      }
    return lists;
  }
  EdgeDecomposition near = near_one_factorization(m);
  for (const auto& cls : near.classes) chunk_matching_class(m, n, r, cls, &lists);
  return lists;
}

}  // namespace

FunctionFamily graph_decomp_family(int m, int n) {
  if (!(2 * n + 1 >= m && m > n && n >= 2))
    throw std::invalid_argument("graph_decomp_family requires 2n+1 >= m > n >= 2");
  if (m == 5 && n == 2)
    return make_family(Shape(5, 2), {{0, 0, 0, 1, 1}});
  int best = graph_decomp_k(m, n);
  int m_prime = m;
  while (graph_decomp_alpha(m_prime, n) != best) ++m_prime;
  FunctionFamily full = make_family(Shape(m_prime, n), decomp_family_exact(m_prime, n));
  return restrict_family(full, m, n);
}

FunctionFamily digit_family(int n, int l) {
  if (n < 2 || l < 2)
    throw std::invalid_argument("digit_family requires n >= 2 and l >= 2");
  long double total = std::pow(static_cast<long double>(n), l);
  if (total > static_cast<long double>(kDefaultTableLimit))
    throw BudgetError("digit_family: n^l exceeds enumeration limit");
  int m = 1;
  for (int i = 0; i < l; ++i) m *= n;
  Shape s(m, n);
  std::vector<std::vector<uint8_t>> lists(l, std::vector<uint8_t>(m));
  for (int x = 0; x < m; ++x) {
    int v = x;
    for (int k = 0; k < l; ++k) {
      lists[k][x] = static_cast<uint8_t>(v % n);
      v /= n;
    }
  }
  return make_family(s, lists);
}

FunctionFamily pair_family(int n) {
  if (n < 2) throw std::invalid_argument("pair_family requires n >= 2");
  Shape s(n + 1, n);
  std::vector<std::vector<uint8_t>> lists;
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) {
      std::vector<uint8_t> colors(n + 1, 255);
      colors[i] = 0;
      colors[j] = 0;
      int next = 1;
      for (int v = 0; v <= n; ++v)
        if (colors[v] == 255) colors[v] = static_cast<uint8_t>(next++);
      lists.push_back(std::move(colors));
    }
  return make_family(s, lists);
}

AucWitness product_family(const FunctionFamily& h_family) {
  DisjointVerdict dv = is_disjoint_family(h_family);
  if (!dv.ok) throw std::invalid_argument("product_family requires a disjoint family");
  int m = h_family.shape.m, n = h_family.shape.n;
  if (m > n * n) throw std::invalid_argument("product_family requires m <= n^2");

  AucWitness w;
  w.shape = Shape(m * n, n);
  std::vector<uint8_t> g(m * n);
  for (int x = 0; x < m * n; ++x) g[x] = static_cast<uint8_t>(x / m);
  w.g = ColorFunction(w.shape, std::move(g));
  for (const auto& h : h_family.functions) {
    std::vector<uint8_t> f(m * n);
    for (int x = 0; x < m * n; ++x) f[x] = h(x % m);
    w.f_list.emplace_back(w.shape, std::move(f));
  }
  return w;
}

namespace {

uint64_t checked_code(Shape s, const std::vector<uint8_t>& colors) {
  if (s.m * std::log2(static_cast<double>(s.n)) > 62)
    throw BudgetError("instance code does not fit in 64 bits");
  return ColorFunction(s, colors).code();
}

}  // namespace

ReductionWitness padding_witness(int m, int n, int q, int r) {
  if (n < 2 || m <= n || q < 1 || r < 0 || r >= m || n >= m)
    throw std::invalid_argument("padding_witness requires m > n >= 2, q >= 1, 0 <= r < m");
  Shape from(m, n);
  Shape to(m * q + r, n * q + r);
  long double total = std::pow(static_cast<long double>(n), m);
  if (total > static_cast<long double>(kDefaultTableLimit))
    throw BudgetError("padding_witness: n^m exceeds enumeration limit");
  uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= n;

  ReductionWitness w;
  for (uint64_t code = 0; code < count; ++code) {
    ColorFunction f = ColorFunction::from_code(from, code);
    std::vector<uint8_t> g(to.m);
    for (int x = 0; x < m * q; ++x)
      g[x] = static_cast<uint8_t>((x / m) * n + f(x % m));
    for (int t = 0; t < r; ++t) g[m * q + t] = static_cast<uint8_t>(n * q + t);
    w.forward[code] = checked_code(to, g);
  }
  // Only pairs inside the padded blocks with distinct residues are
  // reachable; map them to the residue pair.
  for (int j = 1; j < m * q; ++j)
    for (int i = 0; i < j; ++i)
      if (i % m != j % m)
        w.backward[pair_index(i, j)] =
            pair_index(std::min(i % m, j % m), std::max(i % m, j % m));
  return w;
}

ReductionWitness restriction_witness(int m_big, int n_small, int m, int n) {
  if (!(m_big >= m && m > n && n >= n_small && n_small >= 2 && m_big > n_small))
    throw std::invalid_argument("restriction_witness requires m' >= m > n >= n' >= 2");
  Shape from(m_big, n_small);
  Shape to(m, n);
  long double total = std::pow(static_cast<long double>(n_small), m_big);
  if (total > static_cast<long double>(kDefaultTableLimit))
    throw BudgetError("restriction_witness: table exceeds enumeration limit");
  uint64_t count = 1;
  for (int i = 0; i < m_big; ++i) count *= n_small;

  ReductionWitness w;
  for (uint64_t code = 0; code < count; ++code) {
    ColorFunction f = ColorFunction::from_code(from, code);
    std::vector<uint8_t> g(f.colors.begin(), f.colors.begin() + m);
    w.forward[code] = checked_code(to, g);
  }
  for (int idx = 0; idx < pair_count(m); ++idx) w.backward[idx] = idx;
  return w;
}

ConstructiveFamily best_constructive_family(Shape s) {
  int m = s.m, n = s.n;
  ConstructiveFamily best;
  best.family = make_family(s, {std::vector<uint8_t>(m, 0)});
  best.source = "trivial";

  auto consider = [&](FunctionFamily f, const std::string& source) {
    if (f.size() > best.family.size()) {
      best.family = std::move(f);
      best.source = source;
    }
  };

  if (m == n + 1) consider(pair_family(n), "pairs:" + std::to_string(n));

  struct Builtin {
    BuiltinFamilyId id;
    int m0, n0;
  };
  for (const Builtin& b : {Builtin{BuiltinFamilyId::kWarmup423, 4, 2},
                           Builtin{BuiltinFamilyId::kNine46, 9, 4},
                           Builtin{BuiltinFamilyId::kSeven510, 7, 5}})
    if (m <= b.m0 && n >= b.n0)
      consider(restrict_family(builtin_family(b.id), m, n), "builtin:" + to_string(b.id));

  if (m <= 2 * n + 1) consider(graph_decomp_family(m, n), "graph-decomposition");

  struct FieldParams {
    int q, p, e;
  };
  for (const FieldParams& fp : {FieldParams{2, 2, 1}, FieldParams{3, 3, 1},
                                FieldParams{4, 2, 2}, FieldParams{5, 5, 1},
                                FieldParams{7, 7, 1}, FieldParams{8, 2, 3},
                                FieldParams{9, 3, 2}})
    if (fp.q <= n && m <= fp.q * fp.q)
      consider(restrict_family(mols_to_family(mols_from_field(gf_build(fp.p, fp.e))), m, n),
               "mols:" + std::to_string(fp.q));

  for (int t = 2; t <= 8; ++t)
    if (t <= n && m <= 2 * t)
      consider(
          restrict_family(rbibd_to_family(decomposition_as_design(one_factorization(2 * t))),
                          m, n),
          "one-factorization:" + std::to_string(2 * t));

  for (int v : {9, 15})
    if (v / 3 <= n && m <= v)
      consider(restrict_family(rbibd_to_family(kirkman_system(v)), m, n),
               "kirkman:" + std::to_string(v));

  return best;
}

}  // namespace php
