#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "diffdim/linalg.hpp"

using namespace diffdim;

namespace {

DiffTerm term(int var, std::vector<int> e) { return DiffTerm(var, ShiftMonomial(std::move(e))); }

SliceVector vec(std::initializer_list<std::pair<DiffTerm, Rat>> entries) {
  SliceVector v;
  for (const auto& [t, c] : entries) v.add_term(t, c);
  return v;
}

SliceVector unit(int var, std::vector<int> e) { return SliceVector::unit(term(var, std::move(e))); }

}  // namespace

TEST_CASE("echelonize basics") {
  SliceVector v = vec({{term(1, {1, 0}), 2}, {term(1, {0, 1}), 1}});
  SliceVector two_v = v;
  two_v.scale(2);
  CHECK(echelonize({v, two_v}).dim() == 1);

  CHECK(echelonize({}).dim() == 0);

  SliceVector e1 = unit(1, {1, 0});
  SliceVector e2 = unit(1, {0, 1});
  SliceBasis b = echelonize({e1 + e2, e2});
  REQUIRE(b.dim() == 2);
  CHECK(b.rows()[0] == e1);  // reduced: e1's row lost its e2 part
  CHECK(b.rows()[1] == e2);

  CHECK_THROWS_AS(echelonize({unit(1, {1, 0}), unit(1, {1})}), InputError);
}

TEST_CASE("subspace operations") {
  SliceVector e1 = unit(1, {1, 0});
  SliceVector e2 = unit(1, {0, 1});
  SliceBasis b1 = echelonize({e1});
  SliceBasis b2 = echelonize({e2});

  CHECK_FALSE(subspace_contains(b1, e1 + e2));
  CHECK(subspace_contains(b1, e1));
  CHECK(subspace_dim(subspace_sum(b1, b2)) == 2);
  CHECK(subspace_dim(echelonize({e1, e1})) == 1);

  CHECK(subspace_sum(b1, b2) == subspace_sum(b2, b1));
  CHECK(subspace_sum(b1, b1) == b1);
}

TEST_CASE("restrict_to_order filters by pivot order") {
  // single generator whose high-order part cannot be cancelled
  SliceVector g = vec({{term(1, {0, 4}), 1}, {term(1, {2, 1}), 1}});
  SliceBasis b = echelonize({g});
  CHECK(restrict_to_order(b, 3).dim() == 0);
  CHECK(restrict_to_order(b, b.ambient_level()) == b);

  SliceVector low = unit(1, {1, 0});
  SliceVector high = unit(1, {0, 3});
  SliceBasis mixed = echelonize({low, high});
  SliceBasis r = restrict_to_order(mixed, 1);
  REQUIRE(r.dim() == 1);
  CHECK(r.rows()[0] == low);

  CHECK_THROWS_AS(restrict_to_order(mixed, 99), InputError);
}

TEST_CASE("restricted rows stay inside the span and level") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    std::vector<SliceVector> vs;
    for (int r = 0; r < 5; ++r) {
      SliceVector v;
      for (int k = 0; k < 3; ++k) {
        std::vector<int> e(n);
        for (int& x : e) x = static_cast<int>(rng() % 4);
        v.add_term(DiffTerm(1 + static_cast<int>(rng() % 2), ShiftMonomial(e)),
                   Rat(static_cast<long>(rng() % 7) - 3));
      }
      vs.push_back(v);
    }
    SliceBasis b = echelonize(vs);
    int level = static_cast<int>(rng() % (b.ambient_level() + 1));
    SliceBasis r = restrict_to_order(b, level);
    for (const SliceVector& row : r.rows()) {
      CHECK(row.order() <= level);
      CHECK(subspace_contains(b, row));
    }
  }
}

TEST_CASE("fraction-free rank equals echelon rank") {
  SliceVector v = vec({{term(1, {1, 0}), 2}, {term(1, {0, 1}), 1}});
  SliceVector two_v = v;
  two_v.scale(2);
  CHECK(fraction_free_rank({v, two_v}) == 1);
  CHECK(fraction_free_rank({}) == 0);
  CHECK(fraction_free_rank({unit(1, {1, 0}) + unit(1, {0, 1}), unit(1, {0, 1})}) == 2);

  SliceVector rational = vec({{term(1, {0, 0}), Rat(1, 2)}});
  CHECK_THROWS_AS(fraction_free_rank({rational}), InputError);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 30);
    int cols = 1 + static_cast<int>(rng() % 30);
    std::vector<SliceVector> vs;
    for (int r = 0; r < rows; ++r) {
      SliceVector v;
      for (int c = 0; c < cols; ++c) {
        long val = static_cast<long>(rng() % 11) - 5;
        if (val != 0) v.add_term(term(1, {c}), Rat(val));
      }
      vs.push_back(v);
    }
    CHECK(fraction_free_rank(vs) == subspace_dim(echelonize(vs)));
  }
}
