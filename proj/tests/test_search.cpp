#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "php/search.hpp"

using namespace php;

namespace {

const SearchBudget kDefault{};

ReductionOutcome decide_php(Shape a, Shape b) {
  auto seed = php_reduction_seed();
  return decide_reduction(php_problem(a), php_problem(b), kDefault, &seed);
}

}  // namespace

TEST_CASE("canonical coloring enumeration") {
  CHECK(canonical_coloring_count(Shape(3, 2)) == 4);
  CHECK(canonical_coloring_count(Shape(4, 2)) == 8);
  CHECK(canonical_coloring_count(Shape(4, 3)) == 14);

  auto colorings = enumerate_colorings(Shape(3, 2));
  REQUIRE(colorings.size() == 4);
  CHECK(colorings[0].colors == std::vector<uint8_t>{0, 0, 0});
  CHECK(colorings[1].colors == std::vector<uint8_t>{0, 0, 1});
  CHECK(colorings[2].colors == std::vector<uint8_t>{0, 1, 0});
  CHECK(colorings[3].colors == std::vector<uint8_t>{0, 1, 1});

  for (Shape s : {Shape(4, 2), Shape(5, 3), Shape(6, 4)}) {
    auto all = enumerate_colorings(s);
    CHECK(all.size() == canonical_coloring_count(s));
    for (const auto& f : all) CHECK(f.is_canonical());
  }

  CHECK_THROWS_AS(enumerate_colorings(Shape(40, 20)), BudgetError);
}

TEST_CASE("maximum disjoint families by exhaustion") {
  FamilySearchOutcome f42 = max_disjoint_family(Shape(4, 2), kDefault, false);
  CHECK(f42.status == SearchStatus::kExact);
  CHECK(f42.value == 3);

  FamilySearchOutcome f75 = max_disjoint_family(Shape(7, 5), kDefault, false);
  CHECK(f75.status == SearchStatus::kExact);
  CHECK(f75.value == 10);
  REQUIRE(f75.witness.has_value());
  CHECK(is_disjoint_family(*f75.witness).ok);

  // no two functions 5 -> 2 have disjoint solution sets; this justifies
  // the alpha(5,2) exception in the graph-decomposition bridge
  FamilySearchOutcome f52 = max_disjoint_family(Shape(5, 2), kDefault, false);
  CHECK(f52.status == SearchStatus::kExact);
  CHECK(f52.value == 1);

  // with the shortcut enabled a bounds-matched shape skips exhaustion
  FamilySearchOutcome quick = max_disjoint_family(Shape(9, 4), kDefault, true);
  CHECK(quick.status == SearchStatus::kBoundsMatched);
  CHECK(quick.value == 6);
}

TEST_CASE("budget exhaustion is reported, not silently wrong") {
  SearchBudget tiny;
  tiny.node_limit = 3;
  FamilySearchOutcome out = max_disjoint_family(Shape(7, 5), tiny, false);
  CHECK(out.status == SearchStatus::kBudgetExhausted);
  CHECK(out.value >= 1);

  ReductionOutcome r = decide_reduction(php_problem(Shape(5, 2)),
                                        php_problem(Shape(6, 2)), tiny);
  CHECK(r.decision == Decision::kBudgetExhausted);
}

TEST_CASE("decide_id_k") {
  IdkOutcome no52 = decide_id_k(Shape(5, 2), 2, kDefault, false);
  CHECK(no52.decision == Decision::kNo);

  IdkOutcome yes63 = decide_id_k(Shape(6, 3), 5, kDefault);
  CHECK(yes63.decision == Decision::kYes);
  REQUIRE(yes63.witness.has_value());
  CHECK(yes63.witness->size() == 5);
  CHECK(is_disjoint_family(*yes63.witness).ok);

  CHECK(decide_id_k(Shape(6, 3), 6, kDefault).decision == Decision::kNo);
  // same verdict without the counting-lemma cutoff
  CHECK(decide_id_k(Shape(6, 3), 6, kDefault, false).decision == Decision::kNo);
}

TEST_CASE("reduction decisions among small pigeonhole problems") {
  CHECK(decide_php(Shape(3, 2), Shape(4, 2)).decision == Decision::kYes);
  CHECK(decide_php(Shape(4, 2), Shape(3, 2)).decision == Decision::kYes);
  CHECK(decide_php(Shape(5, 2), Shape(6, 2)).decision == Decision::kNo);
  CHECK(decide_php(Shape(6, 2), Shape(5, 2)).decision == Decision::kYes);

  ReductionOutcome id32 = decide_reduction(id_problem(3), id_problem(2), kDefault);
  CHECK(id32.decision == Decision::kNo);
  CHECK(decide_reduction(id_problem(2), id_problem(3), kDefault).decision ==
        Decision::kYes);
}

TEST_CASE("reduction decisions agree with known id-levels") {
  // id_k <= RPHP(4,3) holds exactly up to the maximum family size 6
  FiniteProblem q = php_problem(Shape(4, 3));
  CHECK(decide_reduction(id_problem(6), q, kDefault).decision == Decision::kYes);
  CHECK(decide_reduction(id_problem(7), q, kDefault).decision == Decision::kNo);
}

TEST_CASE("found reductions verify and agree with the level ordering") {
  std::vector<Shape> shapes{Shape(3, 2), Shape(4, 2), Shape(5, 2)};
  std::map<int, FiniteProblem> tables;
  for (size_t i = 0; i < shapes.size(); ++i) tables.emplace(i, php_problem(shapes[i]));
  // levels: maxK(3,2) = maxK(4,2) = 3, maxK(5,2) = 1
  int level[3] = {3, 3, 1};
  for (size_t a = 0; a < shapes.size(); ++a)
    for (size_t b = 0; b < shapes.size(); ++b) {
      ReductionOutcome out = decide_php(shapes[a], shapes[b]);
      bool expected = level[a] <= level[b];
      CHECK(out.decision == (expected ? Decision::kYes : Decision::kNo));
      if (out.decision == Decision::kYes) {
        REQUIRE(out.witness.has_value());
        CHECK(verify_reduction_witness(tables.at(a), tables.at(b), *out.witness).ok);
      }
    }
}

TEST_CASE("bracketing and monotonicity of exhaustive maxima") {
  std::map<std::pair<int, int>, int> value;
  for (int n = 2; n <= 3; ++n)
    for (int m = n + 1; m <= 7; ++m) {
      Shape s(m, n);
      FamilySearchOutcome out = max_disjoint_family(s, kDefault, false);
      REQUIRE(out.status == SearchStatus::kExact);
      value[{m, n}] = out.value;

      int lower = static_cast<int>(best_constructive_family(s).family.size());
      CHECK(lower <= out.value);
      CHECK(out.value <= max_k_upper_bound(s));
      REQUIRE(out.witness.has_value());
      CHECK(is_disjoint_family(*out.witness).ok);
      CHECK(static_cast<int>(out.witness->size()) == out.value);

      // the decision procedure brackets the same value
      CHECK(decide_id_k(s, out.value, kDefault, false).decision == Decision::kYes);
      CHECK(decide_id_k(s, out.value + 1, kDefault, false).decision == Decision::kNo);
    }

  for (const auto& [mn, v] : value) {
    auto [m, n] = mn;
    // adding a point never helps; adding a color never hurts
    if (value.count({m + 1, n})) CHECK(value.at({m + 1, n}) <= v);
    if (value.count({m, n + 1})) CHECK(v <= value.at({m, n + 1}));
  }
}

TEST_CASE("AUC witness search") {
  AucSearchOutcome yes = search_auc_witness(Shape(8, 2), 3, kDefault);
  CHECK(yes.decision == Decision::kYes);
  REQUIRE(yes.witness.has_value());
  CHECK(check_auc_witness(*yes.witness).ok);

  AucSearchOutcome no = search_auc_witness(Shape(5, 2), 4, kDefault);
  CHECK(no.decision == Decision::kNo);
}
