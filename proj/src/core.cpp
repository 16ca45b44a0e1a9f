#include "php/core.hpp"

#include <algorithm>
#include <cmath>

namespace php {

int pair_index(int i, int j) {
  if (i < 0 || i >= j) throw std::invalid_argument("pair_index requires 0 <= i < j");
  return j * (j - 1) / 2 + i;
}

Pair pair_from_index(int index) {
  if (index < 0) throw std::invalid_argument("pair index must be nonnegative");
  // j is the largest integer with j(j-1)/2 <= index.
  int j = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * index)) / 2.0);
  while (j * (j - 1) / 2 > index) --j;
  while ((j + 1) * j / 2 <= index) ++j;
  return Pair(index - j * (j - 1) / 2, j);
}

ColorFunction::ColorFunction(Shape s, std::vector<uint8_t> c)
    : shape(s), colors(std::move(c)) {
  if (static_cast<int>(colors.size()) != shape.m)
    throw std::invalid_argument("color sequence length must equal m");
  for (uint8_t v : colors)
    if (v >= shape.n) throw std::invalid_argument("color out of range");
}

ColorFunction ColorFunction::canonical() const {
  std::vector<int> relabel(shape.n, -1);
  int next = 0;
  std::vector<uint8_t> out(colors.size());
  for (size_t x = 0; x < colors.size(); ++x) {
    int& r = relabel[colors[x]];
    if (r < 0) r = next++;
    out[x] = static_cast<uint8_t>(r);
  }
  return ColorFunction(shape, std::move(out));
}

bool ColorFunction::is_canonical() const {
  int seen = 0;
  for (uint8_t v : colors) {
    if (v > seen) return false;
    if (v == seen) ++seen;
  }
  return true;
}

uint64_t ColorFunction::code() const {
  uint64_t c = 0;
  for (size_t x = colors.size(); x-- > 0;) c = c * shape.n + colors[x];
  return c;
}

ColorFunction ColorFunction::from_code(Shape s, uint64_t code) {
  std::vector<uint8_t> colors(s.m);
  for (int x = 0; x < s.m; ++x) {
    colors[x] = static_cast<uint8_t>(code % s.n);
    code /= s.n;
  }
  if (code != 0) throw std::invalid_argument("code out of range for shape");
  return ColorFunction(s, std::move(colors));
}

SolutionSet::SolutionSet(Shape s)
    : shape_(s), words_((pair_count(s.m) + 63) / 64, 0) {}

void SolutionSet::insert_index(int index) {
  if (index < 0 || index >= capacity()) throw std::invalid_argument("pair index out of range");
  words_[index / 64] |= uint64_t{1} << (index % 64);
}

bool SolutionSet::contains_index(int index) const {
  if (index < 0 || index >= capacity()) return false;
  return (words_[index / 64] >> (index % 64)) & 1;
}

int SolutionSet::count() const {
  int c = 0;
  for (uint64_t w : words_) c += __builtin_popcountll(w);
  return c;
}

bool SolutionSet::empty() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

bool SolutionSet::disjoint_with(const SolutionSet& other) const {
  size_t k = std::min(words_.size(), other.words_.size());
  for (size_t i = 0; i < k; ++i)
    if (words_[i] & other.words_[i]) return false;
  return true;
}

SolutionSet SolutionSet::intersect(const SolutionSet& other) const {
  SolutionSet out(shape_);
  size_t k = std::min(words_.size(), other.words_.size());
  for (size_t i = 0; i < k; ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

int SolutionSet::first_index() const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
  return -1;
}

std::vector<Pair> SolutionSet::members() const {
  std::vector<Pair> out;
  for (int idx = 0; idx < capacity(); ++idx)
    if (contains_index(idx)) out.push_back(pair_from_index(idx));
  return out;
}

FunctionFamily::FunctionFamily(Shape s, std::vector<ColorFunction> f)
    : shape(s), functions(std::move(f)) {
  for (const auto& fn : functions)
    if (!(fn.shape == shape)) throw std::invalid_argument("family members must share shape");
}

SolutionSet solutions(const ColorFunction& f) {
  SolutionSet out(f.shape);
  for (int j = 1; j < f.shape.m; ++j)
    for (int i = 0; i < j; ++i)
      if (f.colors[i] == f.colors[j]) out.insert_index(j * (j - 1) / 2 + i);
  return out;
}

SolutionSet common_solutions(const FunctionFamily& family) {
  if (family.functions.empty()) throw std::invalid_argument("family must be nonempty");
  SolutionSet acc = solutions(family.functions[0]);
  for (size_t i = 1; i < family.functions.size(); ++i)
    acc = acc.intersect(solutions(family.functions[i]));
  return acc;
}

DisjointVerdict is_disjoint_family(const FunctionFamily& family) {
  if (family.functions.empty()) throw std::invalid_argument("family must be nonempty");
  std::vector<SolutionSet> sols;
  sols.reserve(family.size());
  for (const auto& f : family.functions) sols.push_back(solutions(f));
  for (size_t a = 0; a < sols.size(); ++a)
    for (size_t b = a + 1; b < sols.size(); ++b)
      if (!sols[a].disjoint_with(sols[b])) {
        SolutionSet shared = sols[a].intersect(sols[b]);
        return {false, static_cast<int>(a), static_cast<int>(b),
                pair_from_index(shared.first_index())};
      }
  return {};
}

int64_t min_solution_count(Shape s) {
  int64_t q = s.quotient(), r = s.remainder();
  return q * (s.m - s.n + r) / 2;
}

int64_t max_k_upper_bound(Shape s) {
  int64_t q = s.quotient(), r = s.remainder();
  return int64_t{s.m} * (s.m - 1) / (q * (s.m - s.n + r));
}

int64_t php_le_idk_threshold(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return int64_t{n + 1} * n / 2;
}

const std::vector<uint64_t>& FiniteProblem::solutions_of(uint64_t instance) const {
  auto it = solutions.find(instance);
  if (it == solutions.end()) throw std::invalid_argument("unknown instance code");
  return it->second;
}

FiniteProblem php_problem(Shape s, uint64_t table_limit) {
  long double total = std::pow(static_cast<long double>(s.n), s.m);
  if (total > static_cast<long double>(table_limit))
    throw BudgetError("php_problem: n^m exceeds enumeration limit");
  uint64_t count = 1;
  for (int i = 0; i < s.m; ++i) count *= s.n;

  FiniteProblem out;
  out.instances.reserve(count);
  for (uint64_t code = 0; code < count; ++code) {
    ColorFunction f = ColorFunction::from_code(s, code);
    std::vector<uint64_t> sols;
    for (int j = 1; j < s.m; ++j)
      for (int i = 0; i < j; ++i)
        if (f.colors[i] == f.colors[j]) sols.push_back(pair_index(i, j));
    out.instances.push_back(code);
    out.solutions.emplace(code, std::move(sols));
  }
  return out;
}

FiniteProblem id_problem(int k) {
  if (k < 1) throw std::invalid_argument("id_problem requires k >= 1");
  FiniteProblem out;
  for (int j = 1; j <= k; ++j) {
    out.instances.push_back(j);
    out.solutions.emplace(j, std::vector<uint64_t>{static_cast<uint64_t>(j)});
  }
  return out;
}

WitnessVerdict verify_reduction_witness(const FiniteProblem& p,
                                        const FiniteProblem& q,
                                        const ReductionWitness& w) {
  for (uint64_t x : p.instances) {
    auto fwd = w.forward.find(x);
    if (fwd == w.forward.end())
      return {false, WitnessFailure::kForwardMissing, x, 0};
    auto qs = q.solutions.find(fwd->second);
    if (qs == q.solutions.end())
      return {false, WitnessFailure::kForwardNotInstance, x, fwd->second};
    const auto& px = p.solutions_of(x);
    for (uint64_t y : qs->second) {
      auto bwd = w.backward.find(y);
      if (bwd == w.backward.end())
        return {false, WitnessFailure::kBackwardUndefined, x, y};
      if (std::find(px.begin(), px.end(), bwd->second) == px.end())
        return {false, WitnessFailure::kBackwardWrong, x, y};
    }
  }
  return {};
}

ReductionWitness family_to_id_witness(const FunctionFamily& family) {
  ReductionWitness w;
  std::vector<SolutionSet> sols;
  for (const auto& f : family.functions) sols.push_back(solutions(f));
  for (size_t l = 0; l < family.size(); ++l) {
    w.forward[l + 1] = family.functions[l].code();
    for (int idx = 0; idx < sols[l].capacity(); ++idx)
      if (sols[l].contains_index(idx)) w.backward[idx] = l + 1;
  }
  return w;
}

std::string to_string(WitnessFailure f) {
  switch (f) {
    case WitnessFailure::kNone: return "none";
    case WitnessFailure::kForwardMissing: return "forward-missing";
    case WitnessFailure::kForwardNotInstance: return "forward-not-instance";
    case WitnessFailure::kBackwardUndefined: return "backward-undefined";
    case WitnessFailure::kBackwardWrong: return "backward-wrong";
  }
  return "unknown";
}

}  // namespace php
