#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace php {

/// Thrown when an operation would exceed a configured enumeration or
/// search budget (table too large, node limit hit, unsupported regime).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Domain/color shape of a pigeonhole problem: functions m -> n with m > n.
/// q and r are the quotient and remainder of m by n, so m = q*n + r.
struct Shape {
  int m = 0;
  int n = 0;

  Shape() = default;
  Shape(int m_, int n_) : m(m_), n(n_) {
    if (n < 2 || m <= n) throw std::invalid_argument("Shape requires m > n >= 2");
  }

  int quotient() const { return m / n; }
  int remainder() const { return m % n; }

  bool operator==(const Shape&) const = default;
};

/// Unordered pair {i, j} with i < j, indexed colexicographically:
/// index = j(j-1)/2 + i, a bijection onto {0, ..., C(m,2)-1}.
struct Pair {
  int i = 0;
  int j = 1;

  Pair() = default;
  Pair(int i_, int j_) : i(i_), j(j_) {
    if (i < 0 || i >= j) throw std::invalid_argument("Pair requires 0 <= i < j");
  }

  int index() const { return j * (j - 1) / 2 + i; }
  bool operator==(const Pair&) const = default;
  bool operator<(const Pair& o) const { return index() < o.index(); }
};

int pair_index(int i, int j);
Pair pair_from_index(int index);

inline int pair_count(int m) { return m * (m - 1) / 2; }

/// A total coloring m -> n. Surjectivity is not required.
struct ColorFunction {
  Shape shape;
  std::vector<uint8_t> colors;  // colors.size() == shape.m, entries < shape.n

  ColorFunction() = default;
  ColorFunction(Shape s, std::vector<uint8_t> c);

  uint8_t operator()(int x) const { return colors[x]; }

  /// Restricted-growth relabeling: first occurrences of colors appear in
  /// increasing order 0,1,2,... Solution sets are invariant under this.
  ColorFunction canonical() const;
  bool is_canonical() const;

  /// Base-n code with colors[0] as the least significant digit.
  uint64_t code() const;
  static ColorFunction from_code(Shape s, uint64_t code);

  bool operator==(const ColorFunction&) const = default;
};

/// Set of pair indices over the C(m,2) edge slots of K_m, as a bitset.
class SolutionSet {
 public:
  SolutionSet() = default;
  explicit SolutionSet(Shape s);

  Shape shape() const { return shape_; }
  int capacity() const { return pair_count(shape_.m); }

  void insert(Pair p) { insert_index(p.index()); }
  void insert_index(int index);
  bool contains(Pair p) const { return contains_index(p.index()); }
  bool contains_index(int index) const;

  int count() const;
  bool empty() const;
  bool disjoint_with(const SolutionSet& other) const;
  SolutionSet intersect(const SolutionSet& other) const;

  /// Lowest member index, or -1 when empty.
  int first_index() const;
  std::vector<Pair> members() const;

  bool operator==(const SolutionSet&) const = default;

 private:
  Shape shape_;
  std::vector<uint64_t> words_;
};

/// Ordered list of color functions on a common shape.
struct FunctionFamily {
  Shape shape;
  std::vector<ColorFunction> functions;

  FunctionFamily() = default;
  FunctionFamily(Shape s, std::vector<ColorFunction> f);

  size_t size() const { return functions.size(); }
};

/// All monochromatic pairs of f.
SolutionSet solutions(const ColorFunction& f);

/// Intersection of all members' solution sets. Family must be nonempty.
SolutionSet common_solutions(const FunctionFamily& family);

struct DisjointVerdict {
  bool ok = true;
  // On failure: indices of the clashing members and the shared pair.
  int first = -1;
  int second = -1;
  Pair witness;
};

/// True iff every two distinct members have disjoint solution sets.
DisjointVerdict is_disjoint_family(const FunctionFamily& family);

/// Minimum possible |solutions(f)| over all f on this shape: q(m-n+r)/2.
int64_t min_solution_count(Shape s);

/// Counting upper bound: any disjoint family on (m,n) has size at most
/// floor(m(m-1) / (q(m-n+r))).
int64_t max_k_upper_bound(Shape s);

/// RPHP(m,n) <= id_k holds exactly when k >= C(n+1,2).
int64_t php_le_idk_threshold(int n);

/// Explicit instance/solution tables. Instance and solution codes are
/// opaque unsigned integers under each problem's fixed encoding.
struct FiniteProblem {
  std::vector<uint64_t> instances;
  std::map<uint64_t, std::vector<uint64_t>> solutions;

  const std::vector<uint64_t>& solutions_of(uint64_t instance) const;
};

inline constexpr uint64_t kDefaultTableLimit = uint64_t{1} << 24;

/// Table of all n^m colorings; instance code is the base-n color code,
/// solution codes are pair indices.
FiniteProblem php_problem(Shape s, uint64_t table_limit = kDefaultTableLimit);

/// k instances 1..k, each with itself as unique solution.
FiniteProblem id_problem(int k);

/// Forward map on instances plus an instance-oblivious partial backward
/// map on solution codes.
struct ReductionWitness {
  std::map<uint64_t, uint64_t> forward;
  std::map<uint64_t, uint64_t> backward;
};

enum class WitnessFailure {
  kNone,
  kForwardMissing,      // forward undefined on a P-instance
  kForwardNotInstance,  // forward image is not a Q-instance
  kBackwardUndefined,   // backward undefined on a reachable Q-solution
  kBackwardWrong,       // backward image is not a solution of the P-instance
};

struct WitnessVerdict {
  bool ok = true;
  WitnessFailure failure = WitnessFailure::kNone;
  uint64_t instance = 0;  // offending P-instance
  uint64_t solution = 0;  // offending Q-solution code (when applicable)
};

WitnessVerdict verify_reduction_witness(const FiniteProblem& p,
                                        const FiniteProblem& q,
                                        const ReductionWitness& w);

/// Witness for id_{|F|} <= RPHP(m,n) induced by a disjoint family:
/// forward l -> f_l, backward pair -> the unique l whose solutions contain it.
ReductionWitness family_to_id_witness(const FunctionFamily& family);

std::string to_string(WitnessFailure f);

}  // namespace php
