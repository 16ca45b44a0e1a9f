#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "php/designs.hpp"

using namespace php;

TEST_CASE("finite fields verify") {
  struct Params {
    int p, e;
  };
  for (Params pe : {Params{2, 1}, Params{3, 1}, Params{5, 1}, Params{7, 1},
                    Params{11, 1}, Params{13, 1}, Params{2, 2}, Params{2, 3},
                    Params{2, 4}, Params{3, 2}}) {
    FieldTable f = gf_build(pe.p, pe.e);
    std::string why;
    CHECK_MESSAGE(gf_verify(f, &why), why);
  }

  FieldTable gf2 = gf_build(2, 1);
  CHECK(gf2.plus(1, 1) == 0);
  FieldTable gf3 = gf_build(3, 1);
  CHECK(gf3.times(2, 2) == 1);
  // In GF(4) the two non-identity units satisfy x*x = x+1.
  FieldTable gf4 = gf_build(2, 2);
  for (int x = 2; x < 4; ++x) CHECK(gf4.times(x, x) == gf4.plus(x, 1));

  CHECK_THROWS_AS(gf_build(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(gf_build(2, 5), std::invalid_argument);
}

TEST_CASE("MOLS from fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    int p = q, e = 1;
    if (q == 4) p = 2, e = 2;
    if (q == 8) p = 2, e = 3;
    if (q == 9) p = 3, e = 2;
    if (q == 16) p = 2, e = 4;
    auto squares = mols_from_field(gf_build(p, e));
    CHECK(static_cast<int>(squares.size()) == q - 1);
    CHECK(verify_mols(squares).ok);
  }
}

TEST_CASE("verify_mols rejections") {
  auto squares = mols_from_field(gf_build(5, 1));
  CHECK(verify_mols({}).ok);
  CHECK(verify_mols(squares).ok);

  MolsVerdict dup = verify_mols({squares[0], squares[0]});
  CHECK_FALSE(dup.ok);
  CHECK(dup.reason == "ordered symbol pair repeats");

  LatinSquare broken = squares[0];
  broken.grid[0][0] = broken.grid[0][1];
  CHECK_FALSE(verify_mols({broken}).ok);
}

TEST_CASE("one-factorizations") {
  for (int two_n = 4; two_n <= 16; two_n += 2) {
    EdgeDecomposition d = one_factorization(two_n);
    CHECK(static_cast<int>(d.classes.size()) == two_n - 1);
    DecompositionVerdict v = verify_decomposition(d);
    CHECK_MESSAGE(v.ok, v.reason);
  }
  CHECK_THROWS_AS(one_factorization(2), std::invalid_argument);
  CHECK_THROWS_AS(one_factorization(5), std::invalid_argument);
}

TEST_CASE("near-one-factorizations") {
  for (int m = 3; m <= 15; m += 2) {
    EdgeDecomposition d = near_one_factorization(m);
    CHECK(static_cast<int>(d.classes.size()) == m);
    for (const auto& cls : d.classes)
      CHECK(static_cast<int>(cls.size()) == (m - 1) / 2);
    DecompositionVerdict v = verify_decomposition(d);
    CHECK_MESSAGE(v.ok, v.reason);
  }
}

TEST_CASE("Hamiltonian decompositions") {
  for (int m = 3; m <= 15; m += 2) {
    EdgeDecomposition d = hamiltonian_decomposition(m);
    CHECK(static_cast<int>(d.classes.size()) == (m - 1) / 2);
    DecompositionVerdict v = verify_decomposition(d);
    CHECK_MESSAGE(v.ok, v.reason);
    // edges arrive in cycle order
    for (const auto& cls : d.classes)
      for (size_t t = 0; t + 1 < cls.size(); ++t) {
        bool adjacent = cls[t].i == cls[t + 1].i || cls[t].i == cls[t + 1].j ||
                        cls[t].j == cls[t + 1].i || cls[t].j == cls[t + 1].j;
        CHECK(adjacent);
      }
  }
  CHECK_THROWS_AS(hamiltonian_decomposition(4), std::invalid_argument);
}

TEST_CASE("affine planes") {
  for (int n : {2, 3, 4, 5, 7, 8, 9}) {
    ResolvableDesign d = affine_plane(n);
    CHECK(d.v == n * n);
    CHECK(d.block_size == n);
    CHECK(d.lambda == 1);
    CHECK(static_cast<int>(d.classes.size()) == n + 1);
    DesignVerdict v = verify_design(d);
    CHECK_MESSAGE(v.ok, v.reason);
  }
  CHECK_THROWS_AS(affine_plane(6), std::invalid_argument);
}

TEST_CASE("corrupted design is rejected") {
  ResolvableDesign d = affine_plane(3);
  d.classes[0].pop_back();
  DesignVerdict v = verify_design(d);
  CHECK_FALSE(v.ok);
  CHECK(v.reason == "parallel class does not cover all points");

  ResolvableDesign e = affine_plane(3);
  std::swap(e.classes[0][0][0], e.classes[0][1][0]);
  CHECK_FALSE(verify_design(e).ok);
}

TEST_CASE("one-factorization as RBIBD(2n,2,1)") {
  ResolvableDesign d = decomposition_as_design(one_factorization(6));
  CHECK(d.v == 6);
  CHECK(d.block_size == 2);
  CHECK(d.lambda == 1);
  DesignVerdict v = verify_design(d);
  CHECK_MESSAGE(v.ok, v.reason);
  CHECK_THROWS_AS(decomposition_as_design(hamiltonian_decomposition(5)),
                  std::invalid_argument);
}

TEST_CASE("Kirkman systems") {
  ResolvableDesign k9 = kirkman_system(9);
  CHECK(k9.v == 9);
  CHECK(static_cast<int>(k9.classes.size()) == 4);
  for (const auto& cls : k9.classes) CHECK(cls.size() == 3);
  CHECK(verify_design(k9).ok);

  ResolvableDesign k15 = kirkman_system(15);
  CHECK(k15.v == 15);
  CHECK(k15.block_size == 3);
  CHECK(static_cast<int>(k15.classes.size()) == 7);
  for (const auto& cls : k15.classes) CHECK(cls.size() == 5);
  DesignVerdict v = verify_design(k15);
  CHECK_MESSAGE(v.ok, v.reason);

  CHECK_THROWS_AS(kirkman_system(21), std::invalid_argument);
}
