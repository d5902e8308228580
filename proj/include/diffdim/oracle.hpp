#pragma once

#include <vector>

#include "descriptor.hpp"
#include "linalg.hpp"
#include "numpoly.hpp"

namespace diffdim {

/// Escalation parameters for the brute-force verification path.
/// shift_bound_start = 0 picks the automatic start max(level, generator
/// order). The escalation stops once the whole slice profile up to the query
/// level is unchanged across `window` consecutive escalations; watching the
/// full profile rather than a single count is what keeps the heuristic from
/// stopping on a stale plateau.
struct OracleConfig {
  int shift_bound_start = 0;
  int window = 3;
};

namespace oracle_detail {

inline int max_generator_order(const std::vector<SliceVector>& gens) {
  int m = 0;
  for (const SliceVector& g : gens) m = std::max(m, g.order());
  return m;
}

}  // namespace oracle_detail

/// Dimensions of the order-<= i slices for every i up to max_level, computed
/// with no staircase reasoning: enumerate shifted generators up to an
/// escalating bound, eliminate with high-order coordinates pivoted first, and
/// read the counts off the echelon pivots. The only trusted primitive is
/// exact elimination.
inline std::vector<int> brute_slice_profile(const std::vector<SliceVector>& gens, int n,
                                            int max_level, const OracleConfig& cfg = {}) {
  if (n < 1) throw InputError("the number of endomorphisms must be at least 1");
  if (max_level < 0) throw InputError("negative level");
  if (cfg.window < 2) throw InputError("oracle window must be at least 2");
  int max_ord = oracle_detail::max_generator_order(gens);
  int ceiling = max_level + 3 * max_ord + 10;
  int bound = std::max({max_level, max_ord, cfg.shift_bound_start});

  SliceBasis basis;
  auto insert_layer = [&](int b, bool everything) {
    for (const SliceVector& g : gens) {
      if (g.is_zero()) continue;
      int room = b - g.order();
      if (room < 0) continue;
      auto layer = enumerate_shifts(n, room, everything ? ShiftRange::UpTo : ShiftRange::Exactly);
      for (const ShiftMonomial& m : layer) {
        SliceVector row;
        row.axpy_shifted(Rat(1), m, g);
        basis.insert(std::move(row));
      }
    }
  };
  auto profile = [&]() {
    std::vector<int> prof(max_level + 1, 0);
    for (const SliceVector& row : basis.rows()) {
      int o = row.order();
      if (o <= max_level) ++prof[o];
    }
    for (int i = 1; i <= max_level; ++i) prof[i] += prof[i - 1];
    return prof;
  };

  insert_layer(bound, true);
  std::vector<int> current = profile();
  int stable = 0;
  while (stable < cfg.window) {
    ++bound;
    if (bound > ceiling)
      throw ComputationGuard("oracle inconclusive: escalation ceiling " +
                             std::to_string(ceiling) + " reached");
    insert_layer(bound, false);
    std::vector<int> next = profile();
    stable = (next == current) ? stable + 1 : 0;
    current = std::move(next);
  }
  return current;
}

/// Dimension of the order-<= i slice of the module spanned by the shifted
/// generators.
inline int brute_slice_rank(const std::vector<SliceVector>& gens, int i,
                            const OracleConfig& cfg = {}) {
  int n = 0;
  for (const SliceVector& g : gens)
    if (!g.is_zero()) n = g.shift_width();
  if (n == 0) return 0;  // no generators, every slice is zero
  return brute_slice_profile(gens, n, i, cfg).back();
}

/// Fits a dimension polynomial to brute closure dimensions over the window
/// [lo, hi]; degree bound is the number of endomorphisms.
inline NumericalPolynomial brute_dim_poly(const GroupDescriptor& desc, int lo, int hi,
                                          const OracleConfig& cfg = {}) {
  require_family(desc);
  if (lo < 0 || hi < lo) throw InputError("bad fit window");
  if (hi - lo + 1 < desc.n + 2)
    throw InputError("fit window must contain at least n + 2 points");
  std::vector<int> ranks = brute_slice_profile(desc.generators, desc.n, hi, cfg);
  std::vector<Int> dims;
  for (int i = lo; i <= hi; ++i)
    dims.push_back(Int(desc.s()) * count_shifts(desc.n, i, ShiftRange::UpTo) - ranks[i]);
  return fit(dims, lo, desc.n);
}

}  // namespace diffdim
