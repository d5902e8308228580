#include <catch2/catch_amalgamated.hpp>

#include "diffdim/oracle.hpp"
#include "diffdim/parser.hpp"

using namespace diffdim;

namespace {

GroupDescriptor running_group() {
  GroupDescriptor d;
  d.family = Family::Multiplicative;
  d.n = 2;
  d.variables = {"x"};
  d.generators = {parse_generator("s1^2 s2(x) * s2^4(x) - 1", d.family, 2, d.variables)};
  return d;
}

}  // namespace

TEST_CASE("brute_slice_rank on the running generator") {
  auto gens = running_group().generators;
  CHECK(brute_slice_rank(gens, 4) == 1);
  CHECK(brute_slice_rank(gens, 3) == 0);
  CHECK(brute_slice_rank({}, 7) == 0);
}

TEST_CASE("profile is monotone and bounded by the ambient dimension") {
  auto gens = running_group().generators;
  std::vector<int> prof = brute_slice_profile(gens, 2, 9);
  for (std::size_t i = 1; i < prof.size(); ++i) CHECK(prof[i - 1] <= prof[i]);
  for (std::size_t i = 0; i < prof.size(); ++i)
    CHECK(Int(prof[i]) <= count_shifts(2, static_cast<int>(i), ShiftRange::UpTo));
}

TEST_CASE("the reported rank is deterministic and stable in the start bound") {
  auto gens = running_group().generators;
  OracleConfig high;
  high.shift_bound_start = 9;
  for (int i = 0; i <= 6; ++i) {
    int base = brute_slice_rank(gens, i);
    CHECK(base == brute_slice_rank(gens, i));
    CHECK(base == brute_slice_rank(gens, i, high));
  }
}

TEST_CASE("escalation ceiling reports an inconclusive oracle") {
  OracleConfig cfg;
  cfg.window = 100;  // stability this long cannot fit under the ceiling
  CHECK_THROWS_AS(brute_slice_rank(running_group().generators, 2, cfg), ComputationGuard);
  CHECK_THROWS_WITH(brute_slice_rank(running_group().generators, 2, cfg),
                    Catch::Matchers::StartsWith("oracle inconclusive"));
}

TEST_CASE("brute_dim_poly over stable windows") {
  GroupDescriptor d = running_group();
  NumericalPolynomial p = brute_dim_poly(d, 4, 9);
  CHECK(p == NumericalPolynomial({Int(-6), Int(4)}));  // 4t - 2

  GroupDescriptor free2;
  free2.family = Family::Additive;
  free2.n = 2;
  free2.variables = {"x"};
  CHECK(brute_dim_poly(free2, 0, 4) == NumericalPolynomial::scaled_basis(1, 2));
}

TEST_CASE("brute_dim_poly windows straddling the pre-stable range") {
  GroupDescriptor d = running_group();
  // dims at 1..5 are 3,6,10,14,18: the third difference survives, so the
  // window is rejected
  CHECK_THROWS_WITH(brute_dim_poly(d, 1, 5), "not eventually polynomial at this window");
  // dims at 2..5 are 6,10,14,18, which happen to sit on 4t - 2 exactly: the
  // fit succeeds and returns the true polynomial (the closed form is already
  // exact from its threshold of 2)
  CHECK(brute_dim_poly(d, 2, 5) == NumericalPolynomial({Int(-6), Int(4)}));
}

TEST_CASE("window shorter than n + 2 is rejected") {
  GroupDescriptor d = running_group();
  CHECK_THROWS_AS(brute_dim_poly(d, 4, 6), InputError);
}
