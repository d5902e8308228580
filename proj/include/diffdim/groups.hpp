#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "oracle.hpp"

namespace diffdim {

/// How the chain of defining ideals grows with the level.
///   zariski  - level i carries every combination of order <= i
///   delay(d) - level i carries the order <= i-d 'slice', introduced late
///   explicit - listed vectors per level, then the tail rule
///              I[i] = (I[i-1], s_1 I[i-1], ..., s_n I[i-1]) from tail_from on
struct Schedule {
  enum class Kind { Zariski, Delay, Explicit };
  Kind kind = Kind::Zariski;
  int delay = 0;
  // Explicit: levels[i] lists (generator index, shift) pairs; levels.size()
  // must equal tail_from.
  std::vector<std::vector<std::pair<int, ShiftMonomial>>> levels;
  int tail_from = 0;

  static Schedule zariski() { return Schedule{}; }
  static Schedule delayed(int d) {
    Schedule s;
    s.kind = Kind::Delay;
    s.delay = d;
    return s;
  }
};

struct GeneralizedGroupSpec {
  GroupDescriptor base;
  Schedule schedule;
};

struct AxiomReport {
  struct Entry {
    int level = 0;
    bool chain_ok = true;   // I[i-1] inside I[i]
    bool shifts_ok = true;  // s_j(I[i-1]) inside I[i] for every j
  };
  std::vector<Entry> entries;
  bool ok = true;
};

// ---------------------------------------------------------------------------
// Zariski closures of a descriptor
// ---------------------------------------------------------------------------

/// dim(G_i) = s*C(i+n,n) - HF(i) for i = 0..max_level.
inline std::vector<Int> zariski_dims(const GroupDescriptor& desc, int max_level) {
  require_family(desc);
  if (max_level < 0) throw InputError("negative level");
  GroebnerBasis gb = buchberger(desc.generators);
  Staircase st = staircase_of(gb);
  std::vector<Int> dims;
  for (int i = 0; i <= max_level; ++i) {
    Int ambient = Int(desc.s()) * count_shifts(desc.n, i, ShiftRange::UpTo);
    Int d = ambient - hilbert_function(st, desc.n, desc.s(), i);
    if (d < 0 || d > ambient) throw InternalError("closure dimension out of range");
    dims.push_back(d);
  }
  return dims;
}

struct DimensionPolynomial {
  NumericalPolynomial poly;
  int threshold = 0;
};

/// Exact closed form s*C(t+n,n) - HF-polynomial; degree <= n.
inline DimensionPolynomial dimension_polynomial(const GroupDescriptor& desc) {
  require_family(desc);
  GroebnerBasis gb = buchberger(desc.generators);
  auto hp = hilbert_polynomial(staircase_of(gb), desc.n, desc.s());
  NumericalPolynomial phi = NumericalPolynomial::scaled_basis(desc.s(), desc.n) - hp.poly;
  if (phi.degree() > desc.n) throw InternalError("dimension polynomial degree exceeds n");
  return {phi, hp.threshold};
}

inline PolyInvariants group_invariants(const GroupDescriptor& desc) {
  return invariants(dimension_polynomial(desc).poly, desc.n);
}

// ---------------------------------------------------------------------------
// Chain slices for a schedule
// ---------------------------------------------------------------------------

namespace groups_detail {

inline SliceBasis with_level(SliceBasis b, int level) {
  b.set_ambient_level(std::max(level, b.ambient_level()));
  return b;
}

/// Truncation slices for every level at once, grown incrementally: level i
/// adds exactly the shifts x^b g of order i. Dimensions are cross-checked
/// against the staircase count.
inline std::vector<SliceBasis> zariski_slice_chain(const GroebnerBasis& gb, int n, int s,
                                                   int up_to) {
  Staircase st = staircase_of(gb);
  std::vector<SliceBasis> out;
  SliceBasis cur;
  for (int i = 0; i <= up_to; ++i) {
    for (const SliceVector& g : gb.elements) {
      int room = i - g.order();
      if (room < 0) continue;
      for (const ShiftMonomial& m : enumerate_shifts(n, room, ShiftRange::Exactly)) {
        SliceVector row;
        row.axpy_shifted(Rat(1), m, g);
        cur.insert(std::move(row));
      }
    }
    if (Int(cur.dim()) != hilbert_function(st, n, s, i))
      throw InternalError("slice dimension disagrees with the staircase count");
    out.push_back(with_level(cur, i));
  }
  return out;
}

/// Per-level spans of the defining ideals, from level 0 through up_to.
inline std::vector<SliceBasis> chain_slices(const GeneralizedGroupSpec& spec, int up_to) {
  const GroupDescriptor& d = spec.base;
  require_family(d);
  std::vector<SliceBasis> chain;
  switch (spec.schedule.kind) {
    case Schedule::Kind::Zariski:
    case Schedule::Kind::Delay: {
      int delay = spec.schedule.kind == Schedule::Kind::Delay ? spec.schedule.delay : 0;
      if (delay < 0) throw InputError("negative schedule delay");
      GroebnerBasis gb = buchberger(d.generators);
      auto zariski = zariski_slice_chain(gb, d.n, d.s(), std::max(up_to - delay, 0));
      for (int i = 0; i <= up_to; ++i) {
        int cut = i - delay;  // clamped below zero to the empty ideal
        SliceBasis b = cut < 0 ? SliceBasis(0) : zariski[cut];
        chain.push_back(with_level(std::move(b), i));
      }
      break;
    }
    case Schedule::Kind::Explicit: {
      const Schedule& sch = spec.schedule;
      if (sch.tail_from < 1) throw InputError("explicit schedules need tail_from >= 1");
      if (static_cast<int>(sch.levels.size()) != sch.tail_from)
        throw InputError("explicit schedules list exactly the levels before tail_from");
      for (int i = 0; i <= up_to; ++i) {
        if (i < sch.tail_from) {
          std::vector<SliceVector> rows;
          for (const auto& [gen_index, shift] : sch.levels[i]) {
            if (gen_index < 0 || gen_index >= static_cast<int>(d.generators.size()))
              throw InputError("explicit schedule references generator " +
                               std::to_string(gen_index) + " which does not exist");
            if (shift.n() != d.n)
              throw InputError("explicit schedule shift over the wrong number of endomorphisms");
            SliceVector row;
            row.axpy_shifted(Rat(1), shift, d.generators[gen_index]);
            if (row.order() > i)
              throw FamilyViolation("explicit schedule places a vector of order " +
                                    std::to_string(row.order()) + " at level " +
                                    std::to_string(i));
            rows.push_back(std::move(row));
          }
          chain.push_back(with_level(echelonize(rows), i));
        } else {
          // tail rule: previous level plus all its shifts
          SliceBasis next = chain.back();
          for (int j = 0; j < d.n; ++j)
            for (const SliceVector& row : chain.back().rows())
              next.insert(apply_shift(row, ShiftMonomial::unit(d.n, j)));
          chain.push_back(with_level(std::move(next), i));
        }
      }
      break;
    }
  }
  return chain;
}

/// Chain containments I[i-1] in I[i] and s_j(I[i-1]) in I[i] at every level;
/// explicit schedules are user input and fail softly, computed schedules
/// failing is a bug.
inline AxiomReport validate_axioms(const GeneralizedGroupSpec& spec,
                                   const std::vector<SliceBasis>& chain) {
  AxiomReport report;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    AxiomReport::Entry e;
    e.level = static_cast<int>(i);
    e.chain_ok = subspace_leq(chain[i - 1], chain[i]);
    for (int j = 0; j < spec.base.n && e.shifts_ok; ++j)
      for (const SliceVector& row : chain[i - 1].rows())
        if (!chain[i].contains(apply_shift(row, ShiftMonomial::unit(spec.base.n, j)))) {
          e.shifts_ok = false;
          break;
        }
    if (!e.chain_ok || !e.shifts_ok) {
      report.ok = false;
      std::string what = !e.chain_ok ? "the chain containment I[i-1] in I[i]"
                                     : "a shift containment s_j(I[i-1]) in I[i]";
      std::string msg = "generalized group axiom fails at level " + std::to_string(i) +
                        ": " + what + " does not hold";
      if (spec.schedule.kind == Schedule::Kind::Explicit) throw FamilyViolation(msg);
      throw InternalError(msg);
    }
    report.entries.push_back(e);
  }
  return report;
}

inline Int ambient_dim(const GroupDescriptor& d, int i) {
  return Int(d.s()) * count_shifts(d.n, i, ShiftRange::UpTo);
}

/// Generators whose difference ideal is the union of the chain: the
/// descriptor's own for zariski/delay, the last explicit level otherwise.
inline std::vector<SliceVector> union_generators(const GeneralizedGroupSpec& spec) {
  if (spec.schedule.kind != Schedule::Kind::Explicit) return spec.base.generators;
  GeneralizedGroupSpec probe = spec;
  auto chain = chain_slices(probe, std::max(0, spec.schedule.tail_from - 1));
  return chain.back().rows();
}

}  // namespace groups_detail

struct GeneralizedDims {
  std::vector<Int> dims;
  AxiomReport axioms;
};

/// dim(G[i]) for each level from the schedule's slice spans, with the chain
/// axioms checked rather than assumed.
inline GeneralizedDims generalized_dims(const GeneralizedGroupSpec& spec, int max_level) {
  auto chain = groups_detail::chain_slices(spec, max_level);
  GeneralizedDims out;
  out.axioms = groups_detail::validate_axioms(spec, chain);
  for (int i = 0; i <= max_level; ++i)
    out.dims.push_back(groups_detail::ambient_dim(spec.base, i) - chain[i].dim());
  return out;
}

// ---------------------------------------------------------------------------
// Stabilization and finite generation
// ---------------------------------------------------------------------------

struct StabilizationReport {
  int m = 0;                 // least index from which the generation property holds
  int guaranteed_bound = 0;  // property holds for every i >= this by structure
  struct Row {
    int level;
    Int lhs_dim;  // dim of the level i+1 span
    Int rhs_dim;  // dim of span(L_i, s_1 L_i, ..., s_n L_i)
    bool equal;
  };
  std::vector<Row> table;
};

/// Checks I[i+1] = (I[i], s_1(I[i]), ..., s_n(I[i])) at slice level for every
/// i up to the structural bound; beyond it the property holds by the degree
/// argument (every spanning combination of order i+1 > bound carries a
/// nontrivial shift), so m plus the bound certify all levels.
inline StabilizationReport stabilization_index(const GeneralizedGroupSpec& spec) {
  const GroupDescriptor& d = spec.base;
  require_family(d);
  int bound = 0;
  switch (spec.schedule.kind) {
    case Schedule::Kind::Zariski:
      bound = buchberger(d.generators).max_elem_order;
      break;
    case Schedule::Kind::Delay:
      bound = buchberger(d.generators).max_elem_order + spec.schedule.delay;
      break;
    case Schedule::Kind::Explicit:
      bound = std::max(0, spec.schedule.tail_from - 1);
      break;
  }
  auto chain = groups_detail::chain_slices(spec, bound + 1);
  groups_detail::validate_axioms(spec, chain);

  StabilizationReport report;
  report.guaranteed_bound = bound;
  for (int i = 0; i <= bound; ++i) {
    SliceBasis rhs = chain[i];
    for (int j = 0; j < d.n; ++j)
      for (const SliceVector& row : chain[i].rows())
        rhs.insert(apply_shift(row, ShiftMonomial::unit(d.n, j)));
    bool equal = rhs.dim() == chain[i + 1].dim();  // rhs is contained by the axioms
    report.table.push_back({i, Int(chain[i + 1].dim()), Int(rhs.dim()), equal});
  }
  if (!report.table.empty() && !report.table.back().equal &&
      spec.schedule.kind != Schedule::Kind::Explicit)
    throw InternalError("generation equality fails at the guaranteed bound");
  int m = bound + 1;
  while (m >= 1 && report.table[m - 1].equal) --m;
  report.m = m;
  return report;
}

inline StabilizationReport stabilization_index(const GroupDescriptor& desc) {
  return stabilization_index(GeneralizedGroupSpec{desc, Schedule::zariski()});
}

struct GenerationCertificate {
  int level = 0;                  // the ideal is difference-generated by its
  std::vector<SliceVector> rows;  // order <= level slice, spanned by these
};

/// Basis of the order <= m slice, with the certificate property re-checked:
/// expanding the rows by shifts reproduces every slice up to a horizon past
/// the structural bound.
inline GenerationCertificate finite_generation_certificate(const GroupDescriptor& desc) {
  require_family(desc);
  StabilizationReport st = stabilization_index(desc);
  GroebnerBasis gb = buchberger(desc.generators);
  Staircase stc = staircase_of(gb);
  GenerationCertificate cert;
  cert.level = st.m;
  cert.rows = slice_basis(gb, desc.n, desc.s(), st.m).rows();

  int horizon = st.guaranteed_bound + 3;
  SliceBasis span = echelonize(cert.rows);
  for (int i = st.m; i <= horizon; ++i) {
    if (Int(span.dim()) != hilbert_function(stc, desc.n, desc.s(), i))
      throw InternalError("certificate fails to reproduce the slice at level " +
                          std::to_string(i));
    SliceBasis next = span;
    for (int j = 0; j < desc.n; ++j)
      for (const SliceVector& row : span.rows())
        next.insert(apply_shift(row, ShiftMonomial::unit(desc.n, j)));
    span = std::move(next);
  }
  return cert;
}

/// Reinterprets a slice at a higher level: rows unchanged, ambient raised.
inline SliceBasis extend_ideal_slice(const SliceBasis& b, int to_level) {
  if (to_level < b.ambient_level()) throw InputError("extension cannot lower the level");
  SliceBasis out = b;
  out.set_ambient_level(to_level);
  return out;
}

// ---------------------------------------------------------------------------
// Indicators, projections, kernels
// ---------------------------------------------------------------------------

struct IndicatorReport {
  std::vector<int> values;     // j_i (or f_i for projections)
  std::vector<bool> resolved;  // false when the search exhausted the horizon
  bool all_resolved = true;
};

namespace groups_detail {

/// Smallest j >= i whose chain member contains the i-th Zariski slice,
/// searched through the horizon. The truncations grow with i, so the
/// indicators are nondecreasing and the search resumes where it left off.
inline IndicatorReport indicator_search(const std::vector<SliceBasis>& zariski,
                                        const std::vector<SliceBasis>& chain, int max_level) {
  IndicatorReport out;
  int horizon = static_cast<int>(chain.size()) - 1;
  int from = 0;
  for (int i = 0; i <= max_level; ++i) {
    int found = -1;
    for (int j = std::max(i, from); j <= horizon; ++j) {
      if (subspace_leq(zariski[i], chain[j])) {
        found = j;
        break;
      }
    }
    out.values.push_back(found);
    out.resolved.push_back(found >= 0);
    if (found < 0)
      out.all_resolved = false;
    else
      from = found;
  }
  return out;
}

}  // namespace groups_detail

/// Zariski indicators j_i = max(i, least j with I(G_i) in I(G[j])). For delay
/// schedules j_i <= i + d holds structurally; explicit schedules are searched
/// up to the horizon and unresolved entries are reported as such.
inline IndicatorReport zariski_indicators(const GeneralizedGroupSpec& spec, int max_level,
                                          int horizon) {
  if (horizon < max_level) throw InputError("horizon must reach max_level");
  int chain_to = horizon;
  if (spec.schedule.kind != Schedule::Kind::Explicit)
    chain_to = std::max(horizon, max_level + spec.schedule.delay);
  auto chain = groups_detail::chain_slices(spec, chain_to);
  groups_detail::validate_axioms(spec, chain);

  GroebnerBasis gbz = buchberger(groups_detail::union_generators(spec));
  auto zariski = groups_detail::zariski_slice_chain(gbz, spec.base.n, spec.base.s(), max_level);

  IndicatorReport out = groups_detail::indicator_search(zariski, chain, max_level);
  if (spec.schedule.kind != Schedule::Kind::Explicit && !out.all_resolved)
    throw InternalError("indicator unresolved despite a structural bound");
  return out;
}

struct ProjectionReport {
  std::vector<SliceBasis> slices;  // I(F[i]) = I(G[i+1]) restricted to order i
  std::vector<Int> dims;           // dim F[i]
  IndicatorReport indicators;      // f_i
  IndicatorReport chain_indicators;  // j_i of the original chain, for the bound
  bool lemma_bound_ok = true;        // f_i <= j_i - 1 whenever j_i > i
};

/// Projections of the chain under the one-step truncation map, their
/// dimensions and indicators, with the f_i <= j_i - 1 bound validated.
inline ProjectionReport projections(const GeneralizedGroupSpec& spec, int max_level,
                                    int horizon) {
  if (horizon < max_level) throw InputError("horizon must reach max_level");
  int chain_to = std::max(horizon + 1, max_level + 1 + spec.schedule.delay);
  auto chain = groups_detail::chain_slices(spec, chain_to);
  groups_detail::validate_axioms(spec, chain);

  std::vector<SliceBasis> projected;
  for (int i = 0; i + 1 < static_cast<int>(chain.size()); ++i)
    projected.push_back(restrict_to_order(chain[i + 1], i));

  GroebnerBasis gbz = buchberger(groups_detail::union_generators(spec));
  auto zariski = groups_detail::zariski_slice_chain(gbz, spec.base.n, spec.base.s(), max_level);

  ProjectionReport out;
  out.indicators = groups_detail::indicator_search(zariski, projected, max_level);
  out.chain_indicators = groups_detail::indicator_search(zariski, chain, max_level);
  for (int i = 0; i <= max_level; ++i) {
    out.slices.push_back(projected[i]);
    out.dims.push_back(groups_detail::ambient_dim(spec.base, i) - projected[i].dim());
    if (out.chain_indicators.resolved[i] && out.indicators.resolved[i] &&
        out.chain_indicators.values[i] > i &&
        out.indicators.values[i] > out.chain_indicators.values[i] - 1)
      out.lemma_bound_ok = false;
  }
  if (!out.lemma_bound_ok)
    throw InternalError("projection indicator exceeds the chain indicator bound");
  return out;
}

struct KernelReport {
  std::vector<Int> dims;               // dim H[i]
  std::vector<SliceBasis> top_slices;  // image of I(G[i]) in the top-order quotient
};

/// Kernels of the truncation maps: dim H[0] = dim G[0] and for i >= 1
/// dim H[i] = s*C(i+n,n) - dim(I-slice(i) + everything of order < i). The
/// top-order images are returned as exact-order bases.
inline KernelReport kernels(const GeneralizedGroupSpec& spec, int max_level) {
  auto chain = groups_detail::chain_slices(spec, max_level);
  groups_detail::validate_axioms(spec, chain);
  const GroupDescriptor& d = spec.base;
  KernelReport out;
  for (int i = 0; i <= max_level; ++i) {
    std::vector<SliceVector> tops;
    for (const SliceVector& row : chain[i].rows()) {
      SliceVector top;
      for (const auto& [t, c] : row.terms())
        if (t.order() == i) top.add_term(t, c);
      if (!top.is_zero()) tops.push_back(std::move(top));
    }
    SliceBasis top_basis = groups_detail::with_level(echelonize(tops), i);
    Int dim_h;
    if (i == 0) {
      dim_h = groups_detail::ambient_dim(d, 0) - chain[0].dim();
    } else {
      Int low = groups_detail::ambient_dim(d, i - 1);
      dim_h = groups_detail::ambient_dim(d, i) - (low + top_basis.dim());
    }
    if (dim_h < 0) throw InternalError("negative kernel dimension");
    out.dims.push_back(dim_h);
    out.top_slices.push_back(std::move(top_basis));
  }
  return out;
}

struct TwistedKernelReport {
  int n_prime = 1;
  std::vector<SliceBasis> slices;  // defining slices of H'[i] over n-1 shifts
  std::vector<Int> kernel_dims;    // dim H[i]
  std::vector<Int> dims;           // dim H'[i], equal levelwise
  AxiomReport axioms;              // chain axioms over the n-1 twisted shifts
  NumericalPolynomial fitted;      // degree <= n-1 polynomial for the tail
  int fit_from = 0;
};

/// Re-coordinatizes the kernels on the top-order slice as a chain over n-1
/// endomorphisms; validates the chain axioms, the levelwise dimension
/// equality with the kernels, and the degree drop of the fitted polynomial.
inline TwistedKernelReport twisted_kernels(const GeneralizedGroupSpec& spec, int max_level) {
  const GroupDescriptor& d = spec.base;
  if (d.n < 2) throw InputError("twisted kernels need at least two endomorphisms");
  KernelReport ker = kernels(spec, max_level);

  TwistedKernelReport out;
  out.n_prime = d.n - 1;
  out.kernel_dims = ker.dims;
  for (int i = 0; i <= max_level; ++i) {
    std::vector<SliceVector> rows;
    for (const SliceVector& row : ker.top_slices[i].rows()) rows.push_back(twist_slice(row, i));
    SliceBasis b = groups_detail::with_level(echelonize(rows), i);
    if (b.dim() != ker.top_slices[i].dim())
      throw InternalError("twist changed the rank of a top slice");
    Int dim_h = Int(d.s()) * count_shifts(out.n_prime, i, ShiftRange::UpTo) - b.dim();
    if (dim_h != ker.dims[i])
      throw InternalError("twisted kernel dimension disagrees with the kernel at level " +
                          std::to_string(i));
    out.dims.push_back(dim_h);
    out.slices.push_back(std::move(b));
  }

  // chain axioms in the twisted coordinates
  for (int i = 1; i <= max_level; ++i) {
    AxiomReport::Entry e;
    e.level = i;
    e.chain_ok = subspace_leq(out.slices[i - 1], out.slices[i]);
    for (int j = 0; j < out.n_prime && e.shifts_ok; ++j)
      for (const SliceVector& row : out.slices[i - 1].rows())
        if (!out.slices[i].contains(apply_shift(row, ShiftMonomial::unit(out.n_prime, j)))) {
          e.shifts_ok = false;
          break;
        }
    if (!e.chain_ok || !e.shifts_ok)
      throw InternalError("twisted kernels break the chain axioms at level " +
                          std::to_string(i));
    out.axioms.entries.push_back(e);
  }

  // degree drop: the kernel dims fit a polynomial of degree <= n-1
  int window = d.n + 2;
  if (max_level + 1 < window + 1)
    throw InputError("max_level too small to fit the kernel polynomial");
  out.fit_from = max_level - window + 1;
  std::vector<Int> tail(out.dims.begin() + out.fit_from, out.dims.end());
  try {
    out.fitted = fit(tail, out.fit_from, d.n - 1);
  } catch (const InputError&) {
    throw InputError("kernel dimensions have not stabilized by level " +
                     std::to_string(max_level) + "; raise max_level");
  }
  while (out.fit_from > 0 && out.fitted.evaluate(out.fit_from - 1) == out.dims[out.fit_from - 1])
    --out.fit_from;
  return out;
}

// ---------------------------------------------------------------------------
// Assembled closure report
// ---------------------------------------------------------------------------

struct ClosureReport {
  std::vector<Int> dims;
  int stabilization_index = 0;
  int guaranteed_bound = 0;
  NumericalPolynomial poly;
  int poly_threshold = 0;
  PolyInvariants inv;
};

namespace groups_detail {

/// p(t - d) expanded exactly.
inline NumericalPolynomial compose_shift(const NumericalPolynomial& p, int d) {
  std::vector<Rat> coeffs = p.power_coeffs();
  std::vector<Rat> result;  // Horner on (t - d)
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    std::vector<Rat> next(result.size() + 1, Rat(0));
    for (std::size_t e = 0; e < result.size(); ++e) {
      next[e] += result[e] * Rat(-d);
      next[e + 1] += result[e];
    }
    if (next.empty()) next.push_back(Rat(0));
    next[0] += coeffs[k];
    result = std::move(next);
  }
  return from_power_coeffs(std::move(result));
}

}  // namespace groups_detail

/// The dimension polynomial of the chain itself. Zariski and delay schedules
/// have exact closed forms; explicit schedules fit the computed tail and
/// report the verified threshold within the computed range.
inline DimensionPolynomial chain_dimension_polynomial(const GeneralizedGroupSpec& spec,
                                                      const std::vector<Int>& dims) {
  const GroupDescriptor& d = spec.base;
  switch (spec.schedule.kind) {
    case Schedule::Kind::Zariski:
      return dimension_polynomial(d);
    case Schedule::Kind::Delay: {
      DimensionPolynomial z = dimension_polynomial(d);
      GroebnerBasis gb = buchberger(d.generators);
      auto hp = hilbert_polynomial(staircase_of(gb), d.n, d.s());
      NumericalPolynomial shifted = groups_detail::compose_shift(hp.poly, spec.schedule.delay);
      NumericalPolynomial phi = NumericalPolynomial::scaled_basis(d.s(), d.n) - shifted;
      return {phi, hp.threshold + spec.schedule.delay};
    }
    case Schedule::Kind::Explicit: {
      int window = d.n + 2;
      int max_level = static_cast<int>(dims.size()) - 1;
      if (max_level + 1 < window)
        throw InputError("max_level too small to fit the dimension polynomial");
      int from = max_level - window + 1;
      std::vector<Int> tail(dims.begin() + from, dims.end());
      NumericalPolynomial p;
      try {
        p = fit(tail, from, d.n);
      } catch (const InputError&) {
        throw InputError("chain dimensions have not stabilized by level " +
                         std::to_string(max_level) + "; raise max_level");
      }
      while (from > 0 && p.evaluate(from - 1) == dims[from - 1]) --from;
      return {p, from};
    }
  }
  throw InternalError("unhandled schedule kind");
}

/// Everything about one chain in one pass: dimensions, stabilization,
/// polynomial, invariants.
inline ClosureReport closure_report(const GeneralizedGroupSpec& spec, int max_level) {
  ClosureReport out;
  GeneralizedDims gd = generalized_dims(spec, max_level);
  out.dims = gd.dims;
  StabilizationReport st = stabilization_index(spec);
  out.stabilization_index = st.m;
  out.guaranteed_bound = st.guaranteed_bound;
  DimensionPolynomial dp = chain_dimension_polynomial(spec, out.dims);
  out.poly = dp.poly;
  out.poly_threshold = dp.threshold;
  out.inv = invariants(out.poly, spec.base.n);
  for (int i = dp.threshold; i <= max_level; ++i)
    if (out.poly.evaluate(i) != out.dims[i])
      throw InternalError("dimension polynomial misses a computed dimension at level " +
                          std::to_string(i));
  return out;
}

/// Default level window: wide enough to contain the exactness threshold of
/// the main path.
inline int default_max_level(const GroupDescriptor& desc) {
  int max_ord = 0;
  for (const SliceVector& g : desc.generators) max_ord = std::max(max_ord, g.order());
  return 2 * max_ord + desc.n + 4;
}

inline int default_max_level(const GeneralizedGroupSpec& spec) {
  int base = default_max_level(spec.base);
  if (spec.schedule.kind == Schedule::Kind::Delay) base += spec.schedule.delay;
  if (spec.schedule.kind == Schedule::Kind::Explicit) base += spec.schedule.tail_from;
  return base;
}

}  // namespace diffdim
