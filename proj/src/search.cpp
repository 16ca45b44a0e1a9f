#include "php/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace php {

namespace {

using Clock = std::chrono::steady_clock;

struct Ticker {
  const SearchBudget& budget;
  Clock::time_point start = Clock::now();
  uint64_t nodes = 0;

  explicit Ticker(const SearchBudget& b) : budget(b) {}

  /// Returns true when a limit has been hit.
  bool tick() {
    ++nodes;
    if (nodes > budget.node_limit) return true;
    if ((nodes & 1023) == 0) {
      double secs = std::chrono::duration<double>(Clock::now() - start).count();
      if (secs > budget.wall_secs) return true;
    }
    return false;
  }
};

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kExact: return "exact";
    case SearchStatus::kBoundsMatched: return "bounds-matched";
    case SearchStatus::kBracketed: return "bracketed";
    case SearchStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::kYes: return "yes";
    case Decision::kNo: return "no";
    case Decision::kBudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

uint64_t canonical_coloring_count(Shape s) {
  // stirling[j] = S(i, j) rolling over i.
  std::vector<uint64_t> stirling(s.n + 1, 0);
  stirling[1] = 1;
  for (int i = 2; i <= s.m; ++i)
    for (int j = std::min(i, s.n); j >= 1; --j)
      stirling[j] = stirling[j] * j + (j > 1 ? stirling[j - 1] : 0);
  uint64_t total = 0;
  for (int j = 1; j <= s.n; ++j) total += stirling[j];
  return total;
}

std::vector<ColorFunction> enumerate_colorings(Shape s, uint64_t limit) {
  if (canonical_coloring_count(s) > limit)
    throw BudgetError("enumerate_colorings: partition count exceeds limit");
  std::vector<ColorFunction> out;
  std::vector<uint8_t> colors(s.m, 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == s.m) {
      out.emplace_back(s, colors);
      return;
    }
    int cap = std::min(used + 1, s.n);
    for (int c = 0; c < cap; ++c) {
      colors[pos] = static_cast<uint8_t>(c);
      self(self, pos + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 1, 1);
  return out;
}

namespace {

/// Block colorings 0^{a_0} 1^{a_1} ... with non-increasing part sizes:
/// the canonical representatives of functions up to vertex relabeling.
/// Any family can be conjugated by a point permutation that turns one
/// chosen member into such a function, so roots range over these only.
std::vector<ColorFunction> block_colorings(Shape s) {
  std::vector<ColorFunction> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      if (static_cast<int>(parts.size()) <= s.n) {
        std::vector<uint8_t> colors;
        for (size_t c = 0; c < parts.size(); ++c)
          colors.insert(colors.end(), parts[c], static_cast<uint8_t>(c));
        out.emplace_back(s, std::move(colors));
      }
      return;
    }
    if (static_cast<int>(parts.size()) == s.n) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, s.m, s.m);
  return out;
}

struct PackingContext {
  Shape shape;
  std::vector<ColorFunction> canon;
  std::vector<SolutionSet> sols;
  int64_t min_sol = 0;
  int total_edges = 0;

  explicit PackingContext(Shape s) : shape(s) {
    canon = enumerate_colorings(s);
    sols.reserve(canon.size());
    for (const auto& f : canon) sols.push_back(solutions(f));
    min_sol = min_solution_count(s);
    total_edges = pair_count(s.m);
  }
};

/// Backtracking packer. Stops early when a family of size `target` is
/// found (target < 0 means "maximize"). Returns false iff interrupted
/// by the budget.
struct Packer {
  const PackingContext& ctx;
  Ticker ticker;
  int target;
  int best_size = 0;
  std::vector<ColorFunction> best;
  std::vector<ColorFunction> current;
  bool found_target = false;

  Packer(const PackingContext& c, const SearchBudget& b, int tgt)
      : ctx(c), ticker(b), target(tgt) {}

  bool run() {
    for (const ColorFunction& root : block_colorings(ctx.shape)) {
      current.assign(1, root);
      record();
      if (found_target) return true;
      SolutionSet used = solutions(root);
      if (!extend(used, 0, static_cast<int>(used.count()))) return false;
      if (found_target) return true;
    }
    return true;
  }

  void record() {
    if (static_cast<int>(current.size()) > best_size) {
      best_size = static_cast<int>(current.size());
      best = current;
      if (target >= 0 && best_size >= target) found_target = true;
    }
  }

  bool extend(const SolutionSet& used, size_t from, int used_edges) {
    if (ticker.tick()) return false;
    int free_edges = ctx.total_edges - used_edges;
    int potential = static_cast<int>(current.size()) +
                    static_cast<int>(free_edges / ctx.min_sol);
    int goal = target >= 0 ? target : best_size + 1;
    if (potential < goal) return true;
    for (size_t i = from; i < ctx.canon.size(); ++i) {
      if (ctx.canon[i] == current[0]) continue;
      const SolutionSet& s = ctx.sols[i];
      if (!used.disjoint_with(s)) continue;
      current.push_back(ctx.canon[i]);
      record();
      if (found_target) return true;
      SolutionSet next = used;
      int added = 0;
      for (int idx = 0; idx < s.capacity(); ++idx)
        if (s.contains_index(idx)) {
          next.insert_index(idx);
          ++added;
        }
      if (!extend(next, i + 1, used_edges + added)) return false;
      if (found_target) return true;
      current.pop_back();
    }
    return true;
  }
};

}  // namespace

FamilySearchOutcome max_disjoint_family(Shape s, const SearchBudget& budget,
                                        bool allow_bounds_shortcut) {
  FamilySearchOutcome out;
  int64_t bound = max_k_upper_bound(s);
  ConstructiveFamily lower = best_constructive_family(s);
  if (allow_bounds_shortcut && static_cast<int64_t>(lower.family.size()) == bound) {
    out.status = SearchStatus::kBoundsMatched;
    out.value = static_cast<int>(lower.family.size());
    out.witness = lower.family;
    return out;
  }

  PackingContext ctx(s);
  Packer packer(ctx, budget, -1);
  packer.best_size = static_cast<int>(lower.family.size());
  packer.best = lower.family.functions;
  bool complete = packer.run();
  out.nodes = packer.ticker.nodes;
  out.value = packer.best_size;
  out.witness = FunctionFamily(s, packer.best);
  out.status = complete ? SearchStatus::kExact : SearchStatus::kBudgetExhausted;
  return out;
}

IdkOutcome decide_id_k(Shape s, int k, const SearchBudget& budget,
                       bool use_counting_bound) {
  if (k < 1) throw std::invalid_argument("decide_id_k requires k >= 1");
  IdkOutcome out;
  if (use_counting_bound && k > max_k_upper_bound(s)) {
    out.decision = Decision::kNo;
    return out;
  }
  ConstructiveFamily lower = best_constructive_family(s);
  if (static_cast<int>(lower.family.size()) >= k) {
    out.decision = Decision::kYes;
    out.witness = FunctionFamily(
        s, std::vector<ColorFunction>(lower.family.functions.begin(),
                                      lower.family.functions.begin() + k));
    return out;
  }

  PackingContext ctx(s);
  Packer packer(ctx, budget, k);
  bool complete = packer.run();
  out.nodes = packer.ticker.nodes;
  if (packer.found_target) {
    out.decision = Decision::kYes;
    out.witness = FunctionFamily(s, packer.best);
  } else {
    out.decision = complete ? Decision::kNo : Decision::kBudgetExhausted;
  }
  return out;
}

namespace {

struct ReductionCsp {
  std::vector<uint64_t> ys;  // distinct Q-solution codes, sorted
  std::vector<uint64_t> vs;  // distinct P-solution codes, sorted
  int nx = 0, ng = 0, ny = 0, nv = 0;
  int gw = 0;  // words per g-bitmask
  std::vector<std::vector<bool>> x_has_v;
  std::vector<std::vector<int>> g_ys;
  std::vector<uint64_t> g_ymask;            // per g: bitmask over y-indices
  std::vector<std::vector<uint64_t>> y_gmask;  // per y: bitmask over g
  std::vector<uint64_t> p_codes, q_codes;

  bool fits = true;

  ReductionCsp(const FiniteProblem& p, const FiniteProblem& q) {
    std::set<uint64_t> yset, vset;
    for (const auto& [g, sols] : q.solutions) yset.insert(sols.begin(), sols.end());
    for (const auto& [x, sols] : p.solutions) vset.insert(sols.begin(), sols.end());
    ys.assign(yset.begin(), yset.end());
    vs.assign(vset.begin(), vset.end());
    p_codes = p.instances;
    q_codes = q.instances;
    nx = static_cast<int>(p_codes.size());
    ng = static_cast<int>(q_codes.size());
    ny = static_cast<int>(ys.size());
    nv = static_cast<int>(vs.size());
    gw = (ng + 63) / 64;
    if (ny > 64 || static_cast<int64_t>(nx) * gw > (int64_t{1} << 22)) {
      fits = false;
      return;
    }
    auto yindex = [&](uint64_t y) {
      return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
    };
    auto vindex = [&](uint64_t v) {
      return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    x_has_v.assign(nx, std::vector<bool>(nv, false));
    for (int x = 0; x < nx; ++x)
      for (uint64_t v : p.solutions_of(p_codes[x])) x_has_v[x][vindex(v)] = true;
    g_ys.resize(ng);
    g_ymask.assign(ng, 0);
    y_gmask.assign(ny, std::vector<uint64_t>(gw, 0));
    for (int g = 0; g < ng; ++g)
      for (uint64_t y : q.solutions_of(q_codes[g])) {
        int yi = yindex(y);
        g_ys[g].push_back(yi);
        g_ymask[g] |= uint64_t{1} << yi;
        y_gmask[yi][g / 64] |= uint64_t{1} << (g % 64);
      }
  }
};

struct ReductionSearch {
  const ReductionCsp& csp;
  Ticker ticker;
  std::vector<int> assign;     // y-index -> v-index or -1
  uint64_t assigned_mask = 0;  // over y-indices
  std::vector<uint64_t> alive;  // nx * gw words, bitmask over g per x
  bool interrupted = false;

  ReductionSearch(const ReductionCsp& c, const SearchBudget& b) : csp(c), ticker(b) {
    assign.assign(csp.ny, -1);
    alive.assign(static_cast<size_t>(csp.nx) * csp.gw, ~uint64_t{0});
    int tail = csp.ng % 64;
    if (tail)
      for (int x = 0; x < csp.nx; ++x)
        alive[static_cast<size_t>(x) * csp.gw + csp.gw - 1] = (uint64_t{1} << tail) - 1;
  }

  /// Scans x's alive candidates; pred(g) -> stop and report true.
  template <typename Pred>
  bool any_alive(int x, Pred&& pred) const {
    const uint64_t* row = &alive[static_cast<size_t>(x) * csp.gw];
    for (int w = 0; w < csp.gw; ++w) {
      uint64_t mask = row[w];
      while (mask) {
        int g = w * 64 + __builtin_ctzll(mask);
        mask &= mask - 1;
        if (pred(g)) return true;
      }
    }
    return false;
  }

  bool fully_assigned(int g) const { return (csp.g_ymask[g] & ~assigned_mask) == 0; }

  bool satisfied() const {
    for (int x = 0; x < csp.nx; ++x)
      if (!any_alive(x, [&](int g) { return fully_assigned(g); })) return false;
    return true;
  }

  int alive_count(int x) const {
    const uint64_t* row = &alive[static_cast<size_t>(x) * csp.gw];
    int c = 0;
    for (int w = 0; w < csp.gw; ++w) c += __builtin_popcountll(row[w]);
    return c;
  }

  int pick_variable() const {
    // Most-constrained instance first, then its most shared y.
    int best_x = -1, best_alive = 1 << 30;
    for (int x = 0; x < csp.nx; ++x) {
      if (any_alive(x, [&](int g) { return fully_assigned(g); })) continue;
      int cnt = alive_count(x);
      if (cnt < best_alive) {
        best_alive = cnt;
        best_x = x;
      }
    }
    if (best_x < 0) {
      for (int y = 0; y < csp.ny; ++y)
        if (assign[y] < 0) return y;
      return -1;
    }
    std::vector<int> freq(csp.ny, 0);
    any_alive(best_x, [&](int g) {
      for (int y : csp.g_ys[g])
        if (assign[y] < 0) ++freq[y];
      return false;
    });
    int best_y = -1;
    for (int y = 0; y < csp.ny; ++y)
      if (assign[y] < 0 && (best_y < 0 || freq[y] > freq[best_y])) best_y = y;
    return best_y;
  }

  bool try_value(int y, int v) {
    std::vector<uint64_t> saved = alive;
    assign[y] = v;
    assigned_mask |= uint64_t{1} << y;
    bool dead = false;
    for (int x = 0; x < csp.nx && !dead; ++x) {
      uint64_t* row = &alive[static_cast<size_t>(x) * csp.gw];
      if (!csp.x_has_v[x][v]) {
        uint64_t any = 0;
        for (int w = 0; w < csp.gw; ++w) {
          row[w] &= ~csp.y_gmask[y][w];
          any |= row[w];
        }
        if (!any) dead = true;
      }
    }
    if (!dead && dfs()) return true;
    alive = std::move(saved);
    assign[y] = -1;
    assigned_mask &= ~(uint64_t{1} << y);
    return false;
  }

  bool dfs() {
    if (ticker.tick()) {
      interrupted = true;
      return false;
    }
    if (satisfied()) return true;
    int y = pick_variable();
    if (y < 0) return false;
    for (int v = 0; v < csp.nv; ++v) {
      if (try_value(y, v)) return true;
      if (interrupted) return false;
    }
    return false;
  }

  bool root(const std::vector<std::pair<int, int>>& pairs) {
    for (const auto& [y, v] : pairs) {
      if (try_value(y, v)) return true;
      if (interrupted) return false;
    }
    return false;
  }
};

}  // namespace

std::vector<std::pair<uint64_t, uint64_t>> php_reduction_seed() { return {{0, 0}}; }

ReductionOutcome decide_reduction(const FiniteProblem& p, const FiniteProblem& q,
                                  const SearchBudget& budget,
                                  const std::vector<std::pair<uint64_t, uint64_t>>*
                                      root_seed) {
  ReductionCsp csp(p, q);
  if (!csp.fits)
    throw BudgetError("decide_reduction: solution alphabet or instance count too large");

  ReductionSearch search(csp, budget);
  bool found;
  if (root_seed && !root_seed->empty()) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [y, v] : *root_seed) {
      int yi = static_cast<int>(
          std::lower_bound(csp.ys.begin(), csp.ys.end(), y) - csp.ys.begin());
      int vi = static_cast<int>(
          std::lower_bound(csp.vs.begin(), csp.vs.end(), v) - csp.vs.begin());
      if (yi >= csp.ny || csp.ys[yi] != y || vi >= csp.nv || csp.vs[vi] != v)
        throw std::invalid_argument("root seed refers to unknown solution codes");
      pairs.push_back({yi, vi});
    }
    found = search.root(pairs);
  } else {
    found = search.dfs();
  }

  ReductionOutcome out;
  out.nodes = search.ticker.nodes;
  if (found) {
    ReductionWitness w;
    for (int y = 0; y < csp.ny; ++y)
      w.backward[csp.ys[y]] = csp.vs[search.assign[y] < 0 ? 0 : search.assign[y]];
    for (int x = 0; x < csp.nx; ++x) {
      int pick = -1;
      search.any_alive(x, [&](int g) {
        if (!search.fully_assigned(g)) return false;
        pick = g;
        return true;
      });
      w.forward[csp.p_codes[x]] = csp.q_codes[pick];
    }
    out.decision = Decision::kYes;
    out.witness = std::move(w);
  } else {
    out.decision = search.interrupted ? Decision::kBudgetExhausted : Decision::kNo;
  }
  return out;
}

AucSearchOutcome search_auc_witness(Shape s, int k, const SearchBudget& budget) {
  if (k < 2) throw std::invalid_argument("search_auc_witness requires k >= 2");
  AucSearchOutcome out;
  std::vector<ColorFunction> canon = enumerate_colorings(s);
  std::vector<SolutionSet> sols;
  for (const auto& f : canon) sols.push_back(solutions(f));

  Ticker ticker(budget);
  for (size_t gi = 0; gi < canon.size(); ++gi) {
    std::vector<SolutionSet> guarded;
    for (const auto& fs : sols) guarded.push_back(fs.intersect(sols[gi]));
    std::vector<size_t> pick;
    bool interrupted = false;
    auto rec = [&](auto&& self, size_t from) -> bool {
      if (static_cast<int>(pick.size()) == k) return true;
      for (size_t fi = from; fi < canon.size(); ++fi) {
        if (ticker.tick()) {
          interrupted = true;
          return false;
        }
        bool ok = true;
        for (size_t c : pick)
          if (!guarded[c].disjoint_with(guarded[fi])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        pick.push_back(fi);
        if (self(self, fi)) return true;
        if (interrupted) return false;
        pick.pop_back();
      }
      return false;
    };
    if (rec(rec, 0)) {
      AucWitness w;
      w.shape = s;
      w.g = canon[gi];
      for (size_t fi : pick) w.f_list.push_back(canon[fi]);
      out.decision = Decision::kYes;
      out.witness = std::move(w);
      out.nodes = ticker.nodes;
      return out;
    }
    if (interrupted) {
      out.decision = Decision::kBudgetExhausted;
      out.nodes = ticker.nodes;
      return out;
    }
  }
  out.decision = Decision::kNo;
  out.nodes = ticker.nodes;
  return out;
}

}  // namespace php
