#pragma once

#include "monoid.hpp"

namespace diffdim {

/// One coordinate of the ambient product: variable y_{var} shifted by a
/// monomial. var is 1-based.
struct DiffTerm {
  int var = 1;
  ShiftMonomial shift;

  DiffTerm() = default;
  DiffTerm(int v, ShiftMonomial m) : var(v), shift(std::move(m)) {}

  int order() const { return shift.order(); }

  bool operator==(const DiffTerm& o) const { return var == o.var && shift == o.shift; }
  bool operator!=(const DiffTerm& o) const { return !(*this == o); }
};

/// The canonical term order: term-over-position with graded grevlex on the
/// shifts, components tied by var index ascending (y_1 beats y_2). Degree
/// compatible by construction: the grade decides first.
inline bool term_less(const DiffTerm& a, const DiffTerm& b) {
  if (a.shift != b.shift) return grevlex_less(a.shift, b.shift);
  return a.var > b.var;
}

struct TermGreater {
  bool operator()(const DiffTerm& a, const DiffTerm& b) const { return term_less(b, a); }
};

/// Divisibility within the module: same component, shift divides shift.
inline bool term_divides(const DiffTerm& d, const DiffTerm& t) {
  return d.var == t.var && shift_divides(d.shift, t.shift);
}

}  // namespace diffdim
