#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "diffdim/numpoly.hpp"

using namespace diffdim;

TEST_CASE("evaluate in the binomial basis") {
  // 4t - 2 = 4*C(t+1,1) - 6*C(t,0)
  NumericalPolynomial p({Int(-6), Int(4)});
  CHECK(p.evaluate(4) == 14);
  CHECK(p.evaluate(0) == -2);

  CHECK(NumericalPolynomial::zero().evaluate(17) == 0);

  NumericalPolynomial simplex({Int(0), Int(0), Int(1)});  // C(t+2,2)
  CHECK(simplex.evaluate(4) == 15);
}

TEST_CASE("fit recovers the canonical form") {
  NumericalPolynomial p = fit({Int(14), Int(18), Int(22), Int(26), Int(30)}, 4, 2);
  CHECK(p == NumericalPolynomial({Int(-6), Int(4)}));
  CHECK(to_expanded_string(p) == "4t - 2");
  CHECK(to_binomial_string(p) == "4*C(t+1,1) - 6*C(t,0)");

  CHECK(fit({Int(7), Int(7), Int(7)}, 0, 1) == NumericalPolynomial::constant(7));

  NumericalPolynomial simplex = fit({Int(1), Int(3), Int(6), Int(10), Int(15)}, 0, 2);
  CHECK(simplex == NumericalPolynomial({Int(0), Int(0), Int(1)}));
}

TEST_CASE("fit rejects windows with surviving high differences") {
  // values of t^3 cannot fit with degree bound 2
  CHECK_THROWS_WITH(fit({Int(0), Int(1), Int(8), Int(27), Int(64)}, 0, 2),
                    "not eventually polynomial at this window");
  CHECK_THROWS_AS(fit({Int(1), Int(2)}, 0, 1), InputError);
}

TEST_CASE("from_power_coeffs flags non integer-valued data") {
  // t/2 is not integer-valued
  CHECK_THROWS_WITH(from_power_coeffs({Rat(0), Rat(1, 2)}), "non-integer basis coefficient");
  // t(t+1)/2 is fine: equals C(t+1,1)... check via evaluation instead
  NumericalPolynomial p = from_power_coeffs({Rat(0), Rat(1, 2), Rat(1, 2)});
  for (long long t = 0; t <= 6; ++t) CHECK(p.evaluate(t) == t * (t + 1) / 2);
}

TEST_CASE("sum_transform is exact prefix summation") {
  NumericalPolynomial p({Int(0), Int(1)});  // C(t+1,1) = t+1
  NumericalPolynomial q = sum_transform(p, 0);
  CHECK(q.degree() == p.degree() + 1);
  for (long long i = 0; i <= 20; ++i) {
    Int direct = 0;
    for (long long t = 0; t <= i; ++t) direct += p.evaluate(t);
    CHECK(q.evaluate(i) == direct);
  }

  CHECK(sum_transform(NumericalPolynomial::zero(), 0).is_zero());

  NumericalPolynomial c = sum_transform(NumericalPolynomial::constant(5), 0);
  CHECK(c == NumericalPolynomial({Int(0), Int(5)}));  // 5*(t+1)

  NumericalPolynomial shifted = sum_transform(p, 3);
  for (long long i = 3; i <= 20; ++i) {
    Int direct = 0;
    for (long long t = 3; t <= i; ++t) direct += p.evaluate(t);
    CHECK(shifted.evaluate(i) == direct);
  }
}

TEST_CASE("invariants of a dimension polynomial") {
  NumericalPolynomial p({Int(-6), Int(4)});  // 4t - 2
  PolyInvariants a = invariants(p, 2);
  CHECK(a.sigma_type == 1);
  CHECK(a.typical_sigma_dim == 4);
  CHECK(a.sigma_dim == 0);

  PolyInvariants b = invariants(NumericalPolynomial::scaled_basis(1, 2), 2);
  CHECK(b.sigma_type == 2);
  CHECK(b.typical_sigma_dim == 1);
  CHECK(b.sigma_dim == 1);

  PolyInvariants z = invariants(NumericalPolynomial::zero(), 2);
  CHECK(z.sigma_type == 0);
  CHECK(z.typical_sigma_dim == 0);
  CHECK(z.sigma_dim == 0);

  CHECK_THROWS_AS(invariants(NumericalPolynomial({Int(0), Int(0), Int(1)}), 1), InputError);
}

TEST_CASE("fit/evaluate round trip on random coefficient lists") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int d = static_cast<int>(rng() % 5);
    std::vector<Int> coeffs(d + 1);
    for (Int& c : coeffs) c = static_cast<long>(rng() % 19) - 9;
    if (coeffs.back() == 0) coeffs.back() = 1;
    NumericalPolynomial p(coeffs);
    long long start = static_cast<long long>(rng() % 5);
    std::vector<Int> values;
    for (long long t = start; t < start + d + 3; ++t) values.push_back(p.evaluate(t));
    CHECK(fit(values, start, d) == p);
  }
}

TEST_CASE("every constructed polynomial is integer-valued on [0, 50]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    int d = static_cast<int>(rng() % 4);
    std::vector<Int> coeffs(d + 1);
    for (Int& c : coeffs) c = static_cast<long>(rng() % 9) - 4;
    NumericalPolynomial p(coeffs);
    std::vector<Rat> power = p.power_coeffs();
    for (long long t = 0; t <= 50; ++t) {
      Rat direct = 0;
      Rat tp = 1;
      for (std::size_t k = 0; k < power.size(); ++k) {
        direct += power[k] * tp;
        tp *= t;
      }
      CHECK(is_integer(direct));
      CHECK(to_integer(direct) == p.evaluate(t));
    }
  }
}
