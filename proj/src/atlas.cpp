#include "php/atlas.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace php {

namespace {

int id_threshold(int n) { return static_cast<int>(php_le_idk_threshold(n)); }

constexpr uint64_t kEscalationLimit = 50000;

AtlasEntry build_entry(Shape s, const SearchBudget& budget) {
  AtlasEntry e;
  e.shape = s;
  if (s.m > s.n * s.n) {
    // id_2 is not reducible to RPHP(m,n) once m >= n^2+1: any two
    // functions share a solution, so no disjoint family beats size 1.
    e.max_k = 1;
    e.status = SearchStatus::kExact;
    e.upper = "pigeonhole";
    e.lower = "trivial";
    return e;
  }
  ConstructiveFamily lower = best_constructive_family(s);
  int64_t bound = max_k_upper_bound(s);
  e.lower = lower.source;
  if (static_cast<int64_t>(lower.family.size()) == bound) {
    e.max_k = static_cast<int>(bound);
    e.status = SearchStatus::kBoundsMatched;
    e.upper = "counting-lemma";
    return e;
  }
  if (canonical_coloring_count(s) <= kEscalationLimit) {
    FamilySearchOutcome res = max_disjoint_family(s, budget, /*allow_bounds_shortcut=*/false);
    e.max_k = res.value;
    e.status = res.status;
    e.upper = res.status == SearchStatus::kExact ? "exhaustion" : "counting-lemma";
    return e;
  }
  e.max_k = static_cast<int>(lower.family.size());
  e.status = SearchStatus::kBracketed;
  e.upper = "counting-lemma";
  return e;
}

bool entry_value_certain(const AtlasEntry& e) {
  return e.status == SearchStatus::kExact || e.status == SearchStatus::kBoundsMatched;
}

}  // namespace

const AtlasEntry* atlas_find(const Atlas& atlas, Shape s) {
  for (const auto& e : atlas.entries)
    if (e.shape == s) return &e;
  return nullptr;
}

Atlas atlas_build(int M, int N, const SearchBudget& budget) {
  if (N < 2 || N > 8) throw std::invalid_argument("atlas_build supports 2 <= N <= 8");
  Atlas atlas;
  atlas.max_n = N;
  atlas.max_m = M > 0 ? M : 0;
  for (int n = 2; n <= N; ++n) {
    int cap = n * n + 1;
    if (M > 0) cap = std::min(cap, M);
    for (int m = n + 1; m <= cap; ++m)
      atlas.entries.push_back(build_entry(Shape(m, n), budget));
  }

  auto add_edge = [&](const AtlasEntry& x, const AtlasEntry& y, const std::string& kind,
                      const std::string& cert) {
    for (const auto& e : atlas.edges)
      if (e.from == x.shape && e.to == y.shape) return;  // first rule wins
    RelationEdge e;
    e.from = x.shape;
    e.to = y.shape;
    e.kind = kind;
    e.certificate = cert;
    e.strict = entry_value_certain(x) && entry_value_certain(y) && x.max_k > y.max_k;
    atlas.edges.push_back(std::move(e));
  };

  for (const auto& x : atlas.entries)
    for (const auto& y : atlas.entries) {
      if (x.shape == y.shape) continue;
      // Restriction: RPHP(m',n') <= RPHP(m,n) when m' >= m and n' <= n.
      if (y.shape.m >= x.shape.m && y.shape.n <= x.shape.n) {
        add_edge(x, y, "restriction",
                 "restrict " + std::to_string(y.shape.m) + "," +
                     std::to_string(y.shape.n) + " to " + std::to_string(x.shape.m) +
                     "," + std::to_string(x.shape.n));
        continue;
      }
      // Padding: RPHP(m,n) <= RPHP(mq+r, nq+r).
      int gap = x.shape.m - x.shape.n;   // = q * (m - n)
      int span = y.shape.m - y.shape.n;  // = m - n
      if (gap % span == 0) {
        int q = gap / span;
        int r = x.shape.m - y.shape.m * q;
        if (q >= 1 && r >= 0 && r < y.shape.m && x.shape.n == y.shape.n * q + r) {
          add_edge(x, y, "padding",
                   "pad q=" + std::to_string(q) + " r=" + std::to_string(r));
          continue;
        }
      }
      // Through the id-levels: RPHP(m,n) <= id_k iff k >= C(n+1,2), and
      // id_k <= RPHP(m',n') iff k <= maxK(m',n').
      if (entry_value_certain(x) && x.max_k >= id_threshold(y.shape.n))
        add_edge(x, y, "id-level-derived",
                 "id_" + std::to_string(id_threshold(y.shape.n)));
    }

  std::sort(atlas.edges.begin(), atlas.edges.end(), [](const RelationEdge& a,
                                                       const RelationEdge& b) {
    auto key = [](const RelationEdge& e) {
      return std::tuple(e.from.n, e.from.m, e.to.n, e.to.m);
    };
    return key(a) < key(b);
  });
  return atlas;
}

int constructive_auc_level(Shape s) {
  int best = 0;
  int lo = std::max(s.n + 1, (s.m + s.n - 1) / s.n);
  for (int m0 = lo; m0 <= s.n * s.n; ++m0) {
    ConstructiveFamily f = best_constructive_family(Shape(m0, s.n));
    best = std::max(best, static_cast<int>(f.family.size()));
  }
  return best;
}

int constructive_acc_level(Shape s) {
  int k = 2;
  int64_t power = static_cast<int64_t>(s.n) * s.n * s.n;  // n^(k+1) at k=2
  while (power < s.m) {
    ++k;
    power *= s.n;
  }
  return k;
}

std::string emit_dot(const Atlas& atlas, bool figure2, bool strict_only) {
  std::ostringstream out;
  out << "digraph atlas {\n  rankdir=BT;\n  node [shape=box];\n";
  auto node_name = [](Shape s) {
    return "n" + std::to_string(s.m) + "_" + std::to_string(s.n);
  };
  std::vector<AtlasEntry> entries = atlas.entries;
  std::sort(entries.begin(), entries.end(), [](const AtlasEntry& a, const AtlasEntry& b) {
    return std::tuple(a.shape.n, a.shape.m) < std::tuple(b.shape.n, b.shape.m);
  });
  for (const auto& e : entries) {
    out << "  " << node_name(e.shape) << " [label=\"(" << e.shape.m << ","
        << e.shape.n << ")\\nid_" << e.max_k;
    if (figure2)
      out << "\\nAUC<=" << constructive_auc_level(e.shape)
          << " ACC>=" << constructive_acc_level(e.shape);
    out << "\"];\n";
  }
  // id-level bands: entries proven to sit at the same id-level share a rank.
  std::vector<int> levels;
  for (const auto& e : entries)
    if (std::find(levels.begin(), levels.end(), e.max_k) == levels.end())
      levels.push_back(e.max_k);
  std::sort(levels.begin(), levels.end());
  for (int level : levels) {
    out << "  { rank=same;";
    for (const auto& e : entries)
      if (e.max_k == level) out << " " << node_name(e.shape) << ";";
    out << " }\n";
  }
  for (const auto& e : atlas.edges) {
    if (strict_only && !e.strict) continue;
    out << "  " << node_name(e.from) << " -> " << node_name(e.to) << " [label=\""
        << e.kind << "\"";
    if (e.strict) out << " style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_json(const Atlas& atlas) {
  nlohmann::ordered_json j;
  j["maxN"] = atlas.max_n;
  j["maxM"] = atlas.max_m;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : atlas.entries) {
    nlohmann::ordered_json je;
    je["m"] = e.shape.m;
    je["n"] = e.shape.n;
    je["maxK"] = e.max_k;
    je["status"] = to_string(e.status);
    je["lower"] = e.lower;
    je["upper"] = e.upper;
    j["entries"].push_back(std::move(je));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : atlas.edges) {
    nlohmann::ordered_json je;
    je["fromM"] = e.from.m;
    je["fromN"] = e.from.n;
    je["toM"] = e.to.m;
    je["toN"] = e.to.n;
    je["kind"] = e.kind;
    je["strict"] = e.strict;
    je["certificate"] = e.certificate;
    j["edges"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

Atlas atlas_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Atlas atlas;
  atlas.max_n = j.at("maxN").get<int>();
  atlas.max_m = j.at("maxM").get<int>();
  for (const auto& je : j.at("entries")) {
    AtlasEntry e;
    e.shape = Shape(je.at("m").get<int>(), je.at("n").get<int>());
    e.max_k = je.at("maxK").get<int>();
    std::string st = je.at("status").get<std::string>();
    if (st == "exact") e.status = SearchStatus::kExact;
    else if (st == "bounds-matched") e.status = SearchStatus::kBoundsMatched;
    else if (st == "bracketed") e.status = SearchStatus::kBracketed;
    else if (st == "budget-exhausted") e.status = SearchStatus::kBudgetExhausted;
    else throw std::invalid_argument("unknown atlas status: " + st);
    e.lower = je.at("lower").get<std::string>();
    e.upper = je.at("upper").get<std::string>();
    if (e.max_k > max_k_upper_bound(e.shape))
      throw std::invalid_argument("cached maxK exceeds the counting bound");
    atlas.entries.push_back(std::move(e));
  }
  for (const auto& je : j.at("edges")) {
    RelationEdge e;
    e.from = Shape(je.at("fromM").get<int>(), je.at("fromN").get<int>());
    e.to = Shape(je.at("toM").get<int>(), je.at("toN").get<int>());
    e.kind = je.at("kind").get<std::string>();
    e.strict = je.at("strict").get<bool>();
    e.certificate = je.at("certificate").get<std::string>();
    atlas.edges.push_back(std::move(e));
  }
  return atlas;
}

}  // namespace php
