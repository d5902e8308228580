#pragma once

#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "term.hpp"

namespace diffdim {

/// Sparse vector over the coordinates DiffTerm -> Q. Depending on the family
/// of the enclosing descriptor it is read as a homogeneous linear expression
/// (coefficients) or as the exponent vector of a monomial (integers). Both
/// readings share every computation in the engine.
///
/// Terms are stored leading-first; no zero coefficient is ever kept.
class SliceVector {
public:
  using Map = std::map<DiffTerm, Rat, TermGreater>;

  SliceVector() = default;

  static SliceVector unit(const DiffTerm& t) {
    SliceVector v;
    v.terms_.emplace(t, Rat(1));
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }

  /// Max order over the support; -1 for the zero vector.
  int order() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.order();  // leading term attains the order
  }

  const DiffTerm& leading_term() const {
    if (terms_.empty()) throw InternalError("leading term of the zero vector");
    return terms_.begin()->first;
  }

  const Rat& leading_coeff() const {
    if (terms_.empty()) throw InternalError("leading coefficient of the zero vector");
    return terms_.begin()->second;
  }

  Rat coeff(const DiffTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void drop_leading() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
  }

  void add_term(const DiffTerm& t, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void scale(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return;
    }
    for (auto& [t, v] : terms_) v *= c;
  }

  void make_monic() {
    if (terms_.empty()) return;
    Rat lc = leading_coeff();
    if (lc != 1) scale(Rat(1) / lc);
  }

  /// this += c * (shift m applied to w)
  void axpy_shifted(const Rat& c, const ShiftMonomial& m, const SliceVector& w) {
    if (c == 0) return;
    for (const auto& [t, v] : w.terms_) add_term(DiffTerm(t.var, shift_multiply(t.shift, m)), c * v);
  }

  void axpy(const Rat& c, const SliceVector& w) {
    if (c == 0) return;
    for (const auto& [t, v] : w.terms_) add_term(t, c * v);
  }

  SliceVector operator+(const SliceVector& o) const {
    SliceVector r = *this;
    r.axpy(Rat(1), o);
    return r;
  }

  SliceVector operator-(const SliceVector& o) const {
    SliceVector r = *this;
    r.axpy(Rat(-1), o);
    return r;
  }

  bool operator==(const SliceVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const SliceVector& o) const { return terms_ != o.terms_; }

  bool integer_valued() const {
    for (const auto& [t, v] : terms_)
      if (!is_integer(v)) return false;
    return true;
  }

  /// Number of endomorphisms all terms agree on; -1 for the zero vector.
  int shift_width() const {
    if (terms_.empty()) return -1;
    int n = terms_.begin()->first.shift.n();
    for (const auto& [t, v] : terms_)
      if (t.shift.n() != n) throw InternalError("mixed shift widths inside one vector");
    return n;
  }

private:
  Map terms_;
};

/// The endomorphism action: every term's shift is multiplied by m,
/// coefficients untouched (trivial action on the ground field).
inline SliceVector apply_shift(const SliceVector& v, const ShiftMonomial& m) {
  if (!v.is_zero() && v.shift_width() != m.n())
    throw InputError("shift applied across different numbers of endomorphisms");
  SliceVector r;
  r.axpy_shifted(Rat(1), m, v);
  return r;
}

/// Exact-order-i relabelling onto n-1 endomorphisms: a term with exponents
/// (a_1,...,a_n) and a_1+...+a_n = i maps to (a_1,...,a_{n-1}). Injective on
/// terms, so ranks are preserved.
inline SliceVector twist_slice(const SliceVector& v, int i) {
  if (v.is_zero()) return v;
  int n = v.shift_width();
  if (n < 2) throw InputError("twist requires at least two endomorphisms");
  SliceVector r;
  for (const auto& [t, c] : v.terms()) {
    if (t.order() != i)
      throw InputError("twist applied to a term of order " + std::to_string(t.order()) +
                       ", expected exact order " + std::to_string(i));
    std::vector<int> e(t.shift.e.begin(), t.shift.e.end() - 1);
    r.add_term(DiffTerm(t.var, ShiftMonomial(std::move(e))), c);
  }
  return r;
}

}  // namespace diffdim
