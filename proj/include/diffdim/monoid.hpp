#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace diffdim {

/// Exponent vector (a_1,...,a_n) of a shift monomial s_1^{a_1}...s_n^{a_n}.
/// The free commutative monoid of these is the index set of every filtration
/// in the engine.
struct ShiftMonomial {
  std::vector<int> e;

  ShiftMonomial() = default;
  explicit ShiftMonomial(std::vector<int> exps) : e(std::move(exps)) {}
  static ShiftMonomial identity(int n) { return ShiftMonomial(std::vector<int>(n, 0)); }
  static ShiftMonomial unit(int n, int j) {
    std::vector<int> v(n, 0);
    v[j] = 1;
    return ShiftMonomial(std::move(v));
  }

  int n() const { return static_cast<int>(e.size()); }

  int order() const {
    int s = 0;
    for (int a : e) s += a;
    return s;
  }

  bool operator==(const ShiftMonomial& o) const { return e == o.e; }
  bool operator!=(const ShiftMonomial& o) const { return e != o.e; }
};

inline void require_same_n(const ShiftMonomial& a, const ShiftMonomial& b) {
  if (a.n() != b.n()) throw InputError("shift monomials over different numbers of endomorphisms");
}

inline ShiftMonomial shift_multiply(const ShiftMonomial& a, const ShiftMonomial& b) {
  require_same_n(a, b);
  ShiftMonomial r = a;
  for (int i = 0; i < a.n(); ++i) r.e[i] += b.e[i];
  return r;
}

/// Componentwise difference; empty when some exponent would go negative.
inline std::optional<ShiftMonomial> shift_divide(const ShiftMonomial& a, const ShiftMonomial& b) {
  require_same_n(a, b);
  ShiftMonomial r = a;
  for (int i = 0; i < a.n(); ++i) {
    r.e[i] -= b.e[i];
    if (r.e[i] < 0) return std::nullopt;
  }
  return r;
}

inline bool shift_divides(const ShiftMonomial& d, const ShiftMonomial& m) {
  require_same_n(d, m);
  for (int i = 0; i < d.n(); ++i)
    if (d.e[i] > m.e[i]) return false;
  return true;
}

inline ShiftMonomial shift_lcm(const ShiftMonomial& a, const ShiftMonomial& b) {
  require_same_n(a, b);
  ShiftMonomial r = a;
  for (int i = 0; i < a.n(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

/// Graded reverse-lexicographic order: compare total order first; within a
/// grade, a < b iff the last nonzero entry of a-b is positive. Degree
/// compatibility of this order is what makes staircase counts equal the
/// dimensions of the order filtration.
inline bool grevlex_less(const ShiftMonomial& a, const ShiftMonomial& b) {
  require_same_n(a, b);
  int da = a.order(), db = b.order();
  if (da != db) return da < db;
  for (int i = a.n() - 1; i >= 0; --i) {
    int d = a.e[i] - b.e[i];
    if (d != 0) return d > 0;
  }
  return false;
}

enum class ShiftRange { UpTo, Exactly };

namespace detail {
inline void gen_compositions(int n, int grade, int pos, std::vector<int>& cur,
                             std::vector<ShiftMonomial>& out) {
  if (pos == n - 1) {
    cur[pos] = grade;
    out.emplace_back(cur);
    return;
  }
  for (int a = grade; a >= 0; --a) {
    cur[pos] = a;
    gen_compositions(n, grade - a, pos + 1, cur, out);
  }
}
}  // namespace detail

/// All shift monomials of order <= i (UpTo) or == i (Exactly), listed by
/// grade and grevlex-descending within each grade. The listing is the fixed
/// coordinate order every matrix layout downstream depends on.
inline std::vector<ShiftMonomial> enumerate_shifts(int n, int i, ShiftRange range) {
  if (n < 1) throw InputError("the number of endomorphisms must be at least 1");
  if (i < 0) throw InputError("negative filtration level");
  std::vector<ShiftMonomial> out;
  std::vector<int> cur(n, 0);
  int lo = (range == ShiftRange::Exactly) ? i : 0;
  for (int grade = lo; grade <= i; ++grade) {
    std::vector<ShiftMonomial> layer;
    detail::gen_compositions(n, grade, 0, cur, layer);
    std::sort(layer.begin(), layer.end(),
              [](const ShiftMonomial& a, const ShiftMonomial& b) { return grevlex_less(b, a); });
    for (auto& m : layer) out.push_back(std::move(m));
  }
  return out;
}

/// |T[i]| = C(i+n, n) and |T(i)| = C(i+n-1, n-1), exactly.
inline Int count_shifts(int n, int i, ShiftRange range) {
  if (n < 1) throw InputError("the number of endomorphisms must be at least 1");
  if (i < 0) throw InputError("negative filtration level");
  if (range == ShiftRange::UpTo) return binomial(Int(i) + n, n);
  return binomial(Int(i) + n - 1, n - 1);
}

}  // namespace diffdim
