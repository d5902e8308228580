#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "linalg.hpp"
#include "numpoly.hpp"

namespace diffdim {

/// Reduced basis of the submodule generated over the shift polynomial ring by
/// the input vectors. Elements are monic, pairwise reduced, sorted by leading
/// term descending. max_elem_order bounds the stabilization argument.
struct GroebnerBasis {
  std::vector<SliceVector> elements;
  int max_elem_order = 0;

  bool empty() const { return elements.empty(); }
};

/// Leading terms of a reduced basis; an antichain under divisibility within
/// each component. Its divisibility cone counts slice dimensions.
struct Staircase {
  std::vector<DiffTerm> terms;
};

inline Staircase staircase_of(const GroebnerBasis& gb) {
  Staircase st;
  for (const SliceVector& g : gb.elements) st.terms.push_back(g.leading_term());
  return st;
}

namespace groebner_detail {

/// Full reduction: strips every term divisible by a basis leading term.
inline SliceVector reduce_full(SliceVector v, const std::vector<SliceVector>& basis) {
  bool changed = true;
  while (changed && !v.is_zero()) {
    changed = false;
    for (const auto& [t, c] : v.terms()) {
      for (const SliceVector& g : basis) {
        if (g.is_zero()) continue;
        if (term_divides(g.leading_term(), t)) {
          ShiftMonomial q = *shift_divide(t.shift, g.leading_term().shift);
          v.axpy_shifted(-c / g.leading_coeff(), q, g);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return v;
}

inline bool single_component(const SliceVector& v) {
  int var = -1;
  for (const auto& [t, c] : v.terms()) {
    if (var == -1) var = t.var;
    if (t.var != var) return false;
  }
  return true;
}

inline bool coprime_shifts(const ShiftMonomial& a, const ShiftMonomial& b) {
  for (int i = 0; i < a.n(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

}  // namespace groebner_detail

/// Buchberger's algorithm, normal pair selection (lowest lcm degree first).
/// The product criterion is applied only when both elements live in a single
/// component, where the classical syzygy argument goes through unchanged.
inline GroebnerBasis buchberger(const std::vector<SliceVector>& generators) {
  std::vector<SliceVector> basis;
  for (const SliceVector& g : generators) {
    if (g.is_zero()) continue;
    SliceVector v = groebner_detail::reduce_full(g, basis);
    if (v.is_zero()) continue;
    v.make_monic();
    basis.push_back(std::move(v));
  }

  // pending pairs keyed by (lcm degree, i, j) for determinism
  using Key = std::tuple<int, int, int>;
  std::map<Key, std::pair<int, int>> pairs;
  auto queue_pair = [&](int i, int j) {
    const DiffTerm& a = basis[i].leading_term();
    const DiffTerm& b = basis[j].leading_term();
    if (a.var != b.var) return;
    if (groebner_detail::single_component(basis[i]) &&
        groebner_detail::single_component(basis[j]) &&
        groebner_detail::coprime_shifts(a.shift, b.shift))
      return;  // S-vector reduces to zero
    int deg = shift_lcm(a.shift, b.shift).order();
    pairs.emplace(Key(deg, i, j), std::make_pair(i, j));
  };
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(basis.size()); ++j) queue_pair(i, j);

  while (!pairs.empty()) {
    auto it = pairs.begin();
    auto [i, j] = it->second;
    pairs.erase(it);
    const SliceVector& f = basis[i];
    const SliceVector& g = basis[j];
    ShiftMonomial l = shift_lcm(f.leading_term().shift, g.leading_term().shift);
    SliceVector s;
    s.axpy_shifted(Rat(1) / f.leading_coeff(), *shift_divide(l, f.leading_term().shift), f);
    s.axpy_shifted(Rat(-1) / g.leading_coeff(), *shift_divide(l, g.leading_term().shift), g);
    s = groebner_detail::reduce_full(std::move(s), basis);
    if (s.is_zero()) continue;
    s.make_monic();
    basis.push_back(std::move(s));
    int k = static_cast<int>(basis.size()) - 1;
    for (int p = 0; p < k; ++p) queue_pair(p, k);
  }

  // interreduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      SliceVector v = basis[i];
      std::vector<SliceVector> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      SliceVector r = groebner_detail::reduce_full(v, others);
      if (r != v) {
        changed = true;
        if (r.is_zero()) {
          basis.erase(basis.begin() + i);
          break;
        }
        r.make_monic();
        basis[i] = std::move(r);
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [](const SliceVector& a, const SliceVector& b) {
    return term_less(b.leading_term(), a.leading_term());
  });

  GroebnerBasis gb;
  for (SliceVector& v : basis) {
    // degree compatibility of the order, asserted rather than assumed
    if (v.order() != v.leading_term().order())
      throw InternalError("leading term does not attain the element order");
    gb.max_elem_order = std::max(gb.max_elem_order, v.order());
    gb.elements.push_back(std::move(v));
  }
  return gb;
}

/// Remainder of v: no term divisible by the staircase, v - nf in the module.
inline SliceVector normal_form(const SliceVector& v, const GroebnerBasis& gb) {
  return groebner_detail::reduce_full(v, gb.elements);
}

namespace groebner_detail {

/// Inclusion-exclusion support: per component, the multiset of lcm orders of
/// nonempty staircase subsets with their signs accumulated, duplicates
/// merged. Counting a slice is then one clamped-binomial sum.
struct StaircaseCounts {
  std::map<int, Int> coeff_by_order;  // order d -> sum of (-1)^{|S|+1}
  int max_order = 0;
};

inline StaircaseCounts staircase_counts(const Staircase& st, int subset_guard) {
  // group by component
  std::map<int, std::vector<ShiftMonomial>> per_var;
  for (const DiffTerm& t : st.terms) per_var[t.var].push_back(t.shift);
  StaircaseCounts out;
  for (auto& [var, mons] : per_var) {
    int r = static_cast<int>(mons.size());
    if (r > subset_guard)
      throw ComputationGuard("staircase has " + std::to_string(r) + " generators in component " +
                             std::to_string(var) + ", above the subset guard of " +
                             std::to_string(subset_guard));
    // iterate nonempty subsets, folding lcms incrementally
    std::vector<ShiftMonomial> lcm_stack(r + 1);
    std::vector<int> chosen;
    std::function<void(int)> walk = [&](int from) {
      for (int k = from; k < r; ++k) {
        chosen.push_back(k);
        int depth = static_cast<int>(chosen.size());
        lcm_stack[depth] =
            depth == 1 ? mons[k] : shift_lcm(lcm_stack[depth - 1], mons[k]);
        int d = lcm_stack[depth].order();
        out.coeff_by_order[d] += (depth % 2 == 1) ? 1 : -1;
        walk(k + 1);
        chosen.pop_back();
      }
    };
    walk(0);
  }
  for (auto it = out.coeff_by_order.begin(); it != out.coeff_by_order.end();) {
    if (it->second == 0) {
      it = out.coeff_by_order.erase(it);
    } else {
      out.max_order = std::max(out.max_order, it->first);
      ++it;
    }
  }
  return out;
}

}  // namespace groebner_detail

inline constexpr int kDefaultSubsetGuard = 20;

/// HF(i) = number of coordinates of order <= i divisible by some staircase
/// term; equals the dimension of the module's order-<= i slice. Exact at
/// every i through the clamped binomial convention.
inline Int hilbert_function(const Staircase& st, int n, int s, int i,
                            int subset_guard = kDefaultSubsetGuard) {
  (void)s;
  if (i < 0) return 0;
  auto counts = groebner_detail::staircase_counts(st, subset_guard);
  Int total = 0;
  for (const auto& [d, c] : counts.coeff_by_order) total += c * binomial(Int(i) - d + n, n);
  return total;
}

struct HilbertPolynomial {
  NumericalPolynomial poly;
  int threshold = 0;  // poly(i) = hilbert_function(i) for every i >= threshold
};

/// Closed form of HF by inclusion-exclusion over staircase subset lcms:
/// sum of +-C(t - d + n, n) grouped by lcm order d. Each unclamped binomial
/// agrees with its clamped count from d - n on, so the polynomial is exact
/// from max(d) - n, clamped at zero.
inline HilbertPolynomial hilbert_polynomial(const Staircase& st, int n, int s,
                                            int subset_guard = kDefaultSubsetGuard) {
  (void)s;
  auto counts = groebner_detail::staircase_counts(st, subset_guard);
  std::vector<Rat> power;
  for (const auto& [d, c] : counts.coeff_by_order) {
    // expand C(t - d + n, n) = (t-d+1)(t-d+2)...(t-d+n)/n!
    std::vector<Rat> p{Rat(1)};
    for (int k = 1; k <= n; ++k) {
      std::vector<Rat> q(p.size() + 1, Rat(0));
      Rat shift = Rat(k - d);
      for (std::size_t e = 0; e < p.size(); ++e) {
        q[e] += p[e] * shift;
        q[e + 1] += p[e];
      }
      p = std::move(q);
    }
    Rat scale = Rat(c) / Rat(factorial(n));
    if (power.size() < p.size()) power.resize(p.size(), Rat(0));
    for (std::size_t e = 0; e < p.size(); ++e) power[e] += scale * p[e];
  }
  HilbertPolynomial out;
  out.poly = from_power_coeffs(std::move(power));
  out.threshold = std::max(0, counts.max_order - n);
  return out;
}

/// Basis of the order-<= i slice of the module: spans of all shifts x^b g
/// with order(x^b g) <= i, echelonized. Degree compatibility guarantees this
/// exhausts the slice, and the dimension is cross-checked against the
/// staircase count.
inline SliceBasis slice_basis(const GroebnerBasis& gb, int n, int s, int i) {
  if (i < 0) return SliceBasis(0);
  std::vector<SliceVector> rows;
  for (const SliceVector& g : gb.elements) {
    int room = i - g.order();
    if (room < 0) continue;
    for (const ShiftMonomial& m : enumerate_shifts(n, room, ShiftRange::UpTo)) {
      SliceVector row;
      row.axpy_shifted(Rat(1), m, g);
      rows.push_back(std::move(row));
    }
  }
  SliceBasis b = echelonize(rows);
  b.set_ambient_level(std::max(i, b.ambient_level()));
  if (Int(b.dim()) != hilbert_function(staircase_of(gb), n, s, i))
    throw InternalError("slice dimension disagrees with the staircase count");
  return b;
}

}  // namespace diffdim
