#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "php/bridges.hpp"
#include "php/jumps.hpp"

using namespace php;

TEST_CASE("AUC witness checker") {
  AucWitness good = product_family(builtin_family(BuiltinFamilyId::kWarmup423));
  CHECK(check_auc_witness(good).ok);

  // non-rainbow g repeated as every member: the triple condition fails
  Shape s(5, 2);
  AucWitness bad;
  bad.shape = s;
  bad.g = ColorFunction(s, {0, 0, 1, 1, 0});
  bad.f_list = {bad.g, bad.g};
  TripleVerdict v = check_auc_witness(bad);
  CHECK_FALSE(v.ok);
  CHECK(solutions(bad.g).contains(v.witness));

  CHECK_THROWS_AS(check_auc_witness(AucWitness{s, bad.g, {bad.g}}),
                  std::invalid_argument);
}

TEST_CASE("ACC witness checker on digit families") {
  // every (n, l) with n^l <= 512 and l = k+1 >= 3
  for (int n = 2; n <= 8; ++n) {
    int64_t power = static_cast<int64_t>(n) * n * n;
    for (int l = 3; power <= 512; ++l, power *= n) {
      FunctionFamily fam = digit_family(n, l);
      AccVerdict v = check_acc_witness(fam.shape, fam.functions);
      CHECK_MESSAGE(v.ok, "digit family failed at n=" << n << " l=" << l);
    }
  }

  Shape s(5, 2);
  ColorFunction c(s, {0, 0, 0, 0, 0});
  AccVerdict v = check_acc_witness(s, {c, c, c});
  CHECK_FALSE(v.ok);
  CHECK(solutions(c).contains(v.witness));
}

TEST_CASE("injection enumeration") {
  auto inj3 = all_injections(3);
  CHECK(inj3.size() == 10);  // 1 + 3 + 6
  for (const auto& sigma : inj3) {
    CHECK(static_cast<int>(sigma.size()) < 3);
    for (int v : sigma) {
      CHECK(v >= 0);
      CHECK(v < 3);
      CHECK(std::count(sigma.begin(), sigma.end(), v) == 1);
    }
  }
  CHECK(std::is_sorted(inj3.begin(), inj3.end()));
  CHECK(all_injections(2).size() == 3);
}

TEST_CASE("stored choice tree passes under both extension readings") {
  CkTree t = builtin_c3_tree();
  CHECK(t.k == 3);
  CHECK(t.shape == Shape(8, 2));
  CHECK(t.nodes.size() == all_injections(3).size());
  CHECK(t.nodes.at({}).colors == std::vector<uint8_t>{0, 0, 0, 0, 1, 1, 1, 1});

  CHECK(check_ck_tree(t, /*reflexive=*/true).ok);
  CHECK(check_ck_tree(t, /*reflexive=*/false).ok);
}

TEST_CASE("admissible labels at a probed node") {
  CkTree t = builtin_c3_tree();
  // {0,6} solves f_(1); label 2 must be usable there
  Pair p(0, 6);
  CHECK(solutions(t.nodes.at({1})).contains(p));
  auto labels = ck_admissible_labels(t, p, {1});
  CHECK(std::find(labels.begin(), labels.end(), 2) != labels.end());
}

TEST_CASE("corrupted choice tree is rejected with a located violation") {
  CkTree t = builtin_c3_tree();
  t.nodes[{1, 2}] = ColorFunction(t.shape, std::vector<uint8_t>(8, 0));
  CkVerdict v = check_ck_tree(t);
  CHECK_FALSE(v.ok);
  CHECK(solutions(t.nodes.at(v.node)).contains(v.pair));
  CHECK(ck_admissible_labels(t, v.pair, v.node).empty());

  CkTree incomplete = builtin_c3_tree();
  incomplete.nodes.erase({2, 0});
  CHECK_THROWS_AS(check_ck_tree(incomplete), std::invalid_argument);
}

TEST_CASE("AUC impossibility scan on (5,2)") {
  AucScanOutcome out = auc_impossibility_scan(2);  // k defaults to C(3,2)+1 = 4
  CHECK(out.result == ScanResult::kImpossible);

  AucScanOutcome k3 = auc_impossibility_scan(2, 3);
  if (k3.result == ScanResult::kWitnessFound) {
    REQUIRE(k3.witness.has_value());
    CHECK(k3.witness->shape == Shape(5, 2));
    CHECK(k3.witness->f_list.size() == 3);
    CHECK(check_auc_witness(*k3.witness).ok);
  }

  CHECK_THROWS_AS(auc_impossibility_scan(3), BudgetError);
}

TEST_CASE("ACC witness scan") {
  // no 3 functions on (9,2) avoid a common solution: 2^3 < 9
  AccScanOutcome out = acc_witness_scan(Shape(9, 2), 2);
  CHECK(out.result == ScanResult::kImpossible);

  // on (8,2) the digit family shows a witness exists
  AccScanOutcome ok = acc_witness_scan(Shape(8, 2), 2);
  CHECK(ok.result == ScanResult::kWitnessFound);
  REQUIRE(ok.witness.has_value());
  CHECK(check_acc_witness(ok.witness->shape, ok.witness->functions).ok);

  CHECK_THROWS_AS(acc_witness_scan(Shape(20, 2), 2), BudgetError);
}
