#pragma once

#include <string>
#include <vector>

#include "slice.hpp"

namespace diffdim {

/// The two supported families of ambient groups. Additive subgroups are cut
/// out by homogeneous linear expressions, multiplicative ones by monomial
/// binomials f - 1; either shape guarantees the defining ideal is a
/// difference Hopf ideal, so no Hopf structure is ever materialised.
enum class Family { Additive, Multiplicative };

inline std::string family_name(Family f) {
  return f == Family::Additive ? "additive" : "multiplicative";
}

/// Presentation of a difference closed subgroup of (G_a)^s or (G_m)^s.
struct GroupDescriptor {
  Family family = Family::Additive;
  int n = 1;                           // number of endomorphisms
  std::vector<std::string> variables;  // s names, 1-based indexing in terms
  std::vector<SliceVector> generators;
  std::string label;

  int s() const { return static_cast<int>(variables.size()); }
};

struct FamilyCheckResult {
  bool ok = true;
  int generator_index = -1;  // first offender, -1 when ok
  std::string message;
};

/// Structural check that each generator fits its family. Violations are
/// returned, not thrown.
inline FamilyCheckResult family_check(const GroupDescriptor& d) {
  FamilyCheckResult r;
  if (d.n < 1) return {false, -1, "the number of endomorphisms must be at least 1"};
  if (d.variables.empty()) return {false, -1, "a group needs at least one variable"};
  for (int idx = 0; idx < static_cast<int>(d.generators.size()); ++idx) {
    const SliceVector& g = d.generators[idx];
    for (const auto& [t, c] : g.terms()) {
      if (t.shift.n() != d.n)
        return {false, idx, "generator uses a shift over the wrong number of endomorphisms"};
      if (t.var < 1 || t.var > d.s())
        return {false, idx, "generator references variable index " + std::to_string(t.var) +
                                " outside 1.." + std::to_string(d.s())};
    }
    if (d.family == Family::Additive) {
      if (g.is_zero()) return {false, idx, "additive generators must be nonzero"};
    } else {
      if (!g.integer_valued())
        return {false, idx, "multiplicative exponents must be integers"};
    }
  }
  return r;
}

inline void require_family(const GroupDescriptor& d) {
  FamilyCheckResult r = family_check(d);
  if (!r.ok) {
    std::string where = r.generator_index >= 0
                            ? " (generator " + std::to_string(r.generator_index + 1) + ")"
                            : "";
    throw FamilyViolation(r.message + where);
  }
}

}  // namespace diffdim
