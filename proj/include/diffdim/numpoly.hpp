#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace diffdim {

/// Integer-valued polynomial in the binomial basis C(t+j, j), the canonical
/// form every dimension polynomial is reported in. Coefficients are integers
/// and the representation is unique; the empty list is the zero polynomial.
class NumericalPolynomial {
public:
  NumericalPolynomial() = default;
  explicit NumericalPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static NumericalPolynomial zero() { return NumericalPolynomial(); }
  static NumericalPolynomial constant(const Int& c) { return NumericalPolynomial({c}); }

  /// s * C(t+n, n), the free ambient dimension polynomial.
  static NumericalPolynomial scaled_basis(const Int& s, int n) {
    std::vector<Int> c(n + 1, Int(0));
    c[n] = s;
    return NumericalPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int j) const { return j < static_cast<int>(c_.size()) ? c_[j] : Int(0); }

  Int evaluate(const Int& t) const {
    Int total = 0;
    for (int j = 0; j < static_cast<int>(c_.size()); ++j) total += c_[j] * binomial(t + j, j);
    return total;
  }
  Int evaluate(long long t) const { return evaluate(Int(t)); }

  NumericalPolynomial operator+(const NumericalPolynomial& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = coeff(static_cast<int>(j)) + o.coeff(static_cast<int>(j));
    return NumericalPolynomial(std::move(c));
  }

  NumericalPolynomial operator-(const NumericalPolynomial& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = coeff(static_cast<int>(j)) - o.coeff(static_cast<int>(j));
    return NumericalPolynomial(std::move(c));
  }

  bool operator==(const NumericalPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const NumericalPolynomial& o) const { return c_ != o.c_; }

  /// Exact power-basis coefficients (degree -> rational), for rendering and
  /// basis conversions.
  std::vector<Rat> power_coeffs() const {
    std::vector<Rat> out;
    for (int j = 0; j < static_cast<int>(c_.size()); ++j) {
      std::vector<Rat> basis = power_coeffs_of_binomial(j);
      if (out.size() < basis.size()) out.resize(basis.size(), Rat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) out[k] += Rat(c_[j]) * basis[k];
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
  }

  /// Power-basis expansion of C(t+j, j) = (t+1)(t+2)...(t+j)/j!.
  static std::vector<Rat> power_coeffs_of_binomial(int j) {
    std::vector<Rat> p{Rat(1)};
    for (int k = 1; k <= j; ++k) {
      std::vector<Rat> q(p.size() + 1, Rat(0));
      for (std::size_t d = 0; d < p.size(); ++d) {
        q[d] += p[d] * k;  // multiply by (t + k)
        q[d + 1] += p[d];
      }
      p = std::move(q);
    }
    Rat inv = Rat(1) / Rat(factorial(j));
    for (Rat& v : p) v *= inv;
    return p;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Converts exact power-basis coefficients into the binomial basis; throws
/// when a coefficient falls outside the integers, which signals data that is
/// not an integer-valued polynomial.
inline NumericalPolynomial from_power_coeffs(std::vector<Rat> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  std::vector<Int> out(p.size(), Int(0));
  while (!p.empty()) {
    int d = static_cast<int>(p.size()) - 1;
    Rat lead = p.back() * Rat(factorial(d));
    if (!is_integer(lead)) throw InputError("non-integer basis coefficient");
    Int cd = to_integer(lead);
    out[d] = cd;
    std::vector<Rat> basis = NumericalPolynomial::power_coeffs_of_binomial(d);
    for (std::size_t k = 0; k < basis.size(); ++k) p[k] -= Rat(cd) * basis[k];
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (static_cast<int>(p.size()) - 1 >= d)
      throw InternalError("basis extraction failed to lower the degree");
  }
  return NumericalPolynomial(std::move(out));
}

/// Fits the unique polynomial of degree <= max_degree through integer values
/// at the consecutive points first_point..first_point+L via Newton forward
/// differences. Rejects windows whose higher differences do not vanish.
inline NumericalPolynomial fit(const std::vector<Int>& values, long long first_point,
                               int max_degree) {
  if (max_degree < 0) throw InputError("negative degree bound");
  int points = static_cast<int>(values.size());
  if (points < max_degree + 2)
    throw InputError("fit window needs at least max_degree + 2 points");
  std::vector<std::vector<Int>> diff{values};
  for (int r = 1; r < points; ++r) {
    const auto& prev = diff.back();
    std::vector<Int> next(prev.size() - 1);
    for (std::size_t k = 0; k + 1 < prev.size(); ++k) next[k] = prev[k + 1] - prev[k];
    diff.push_back(std::move(next));
  }
  for (int r = max_degree + 1; r < points; ++r)
    for (const Int& v : diff[r])
      if (v != 0) throw InputError("not eventually polynomial at this window");

  // Newton form sum_r diff[r][0] * C(t - first_point, r), expanded exactly
  std::vector<Rat> power;
  for (int r = 0; r <= max_degree && r < points; ++r) {
    if (diff[r].empty() || diff[r][0] == 0) continue;
    // C(t - first_point, r) = (t-first_point)(t-first_point-1).../r!
    std::vector<Rat> p{Rat(1)};
    for (int k = 0; k < r; ++k) {
      std::vector<Rat> q(p.size() + 1, Rat(0));
      Rat shift = Rat(-(first_point + k));
      for (std::size_t d = 0; d < p.size(); ++d) {
        q[d] += p[d] * shift;
        q[d + 1] += p[d];
      }
      p = std::move(q);
    }
    Rat scale = Rat(diff[r][0]) / Rat(factorial(r));
    if (power.size() < p.size()) power.resize(p.size(), Rat(0));
    for (std::size_t k = 0; k < p.size(); ++k) power[k] += scale * p[k];
  }
  return from_power_coeffs(std::move(power));
}

/// q with q(i) = sum over t in [m, i] of p(t); in the binomial basis the
/// prefix sum just shifts indices up by one.
inline NumericalPolynomial sum_transform(const NumericalPolynomial& p, long long m) {
  if (p.is_zero()) return p;
  // S(i) = sum_{t=0}^{i} p(t) has coefficients shifted up one slot
  std::vector<Int> shifted(p.coeffs().size() + 1, Int(0));
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) shifted[j + 1] = p.coeffs()[j];
  NumericalPolynomial prefix(std::move(shifted));
  Int below = prefix.evaluate(Int(m) - 1);  // empty when m == 0
  std::vector<Int> c = prefix.coeffs();
  if (c.empty()) c.push_back(Int(0));
  c[0] -= below;
  return NumericalPolynomial(std::move(c));
}

/// Degree, leading binomial coefficient, and the dimension read off a
/// dimension polynomial over n endomorphisms. The zero polynomial reports
/// (0, 0, 0) by convention.
struct PolyInvariants {
  int sigma_type = 0;
  Int typical_sigma_dim = 0;
  Int sigma_dim = 0;
};

inline PolyInvariants invariants(const NumericalPolynomial& p, int n) {
  if (p.is_zero()) return {};
  int d = p.degree();
  if (d > n)
    throw InputError("dimension polynomial degree " + std::to_string(d) +
                     " exceeds the number of endomorphisms " + std::to_string(n));
  PolyInvariants inv;
  inv.sigma_type = d;
  inv.typical_sigma_dim = p.coeff(d);
  inv.sigma_dim = (d == n) ? p.coeff(d) : Int(0);
  return inv;
}

/// "4*C(t+1,1) - 6*C(t,0)" style rendering of the canonical form.
inline std::string to_binomial_string(const NumericalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    Int c = p.coeff(j);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Int a = abs(c);
    if (a != 1) out += a.str() + "*";
    out += j == 0 ? "C(t,0)" : "C(t+" + std::to_string(j) + "," + std::to_string(j) + ")";
  }
  return out;
}

/// Expanded power form, e.g. "4t - 2" or "t^2/2 + 3t/2 + 1".
inline std::string to_expanded_string(const NumericalPolynomial& p) {
  std::vector<Rat> coeffs = p.power_coeffs();
  if (coeffs.empty()) return "0";
  std::string out;
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
    Rat c = coeffs[d];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rat a = c < 0 ? Rat(-c) : c;
    std::string mono = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
    Int num = numerator(a), den = denominator(a);
    if (d == 0) {
      out += rat_to_string(a);
    } else if (num == 1 && den == 1) {
      out += mono;
    } else if (den == 1) {
      out += num.str() + mono;
    } else {
      out += (num == 1 ? mono : num.str() + mono) + "/" + den.str();
    }
  }
  return out;
}

}  // namespace diffdim
