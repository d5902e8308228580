#pragma once

#include <random>
#include <vector>

#include "groups.hpp"

namespace diffdim {

/// Deterministic random instances for the self-test and property suites:
/// up to three generators of order at most four, coefficients in [-3, 3],
/// one or two variables, up to three endomorphisms.
struct CorpusInstance {
  GroupDescriptor desc;
  Schedule schedule;  // zariski for plain instances
};

namespace corpus_detail {

inline SliceVector random_generator(std::mt19937_64& rng, int n, int s, int max_order,
                                    int coeff_bound) {
  SliceVector v;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(n, 0);
    int budget = static_cast<int>(rng() % (max_order + 1));
    for (int b = 0; b < budget; ++b) e[rng() % n] += 1;
    long c = static_cast<long>(rng() % (2 * coeff_bound + 1)) - coeff_bound;
    v.add_term(DiffTerm(1 + static_cast<int>(rng() % s), ShiftMonomial(std::move(e))), Rat(c));
  }
  return v;
}

}  // namespace corpus_detail

inline std::vector<CorpusInstance> make_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusInstance> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 1 + static_cast<int>(rng() % 3);
    int s = 1 + static_cast<int>(rng() % 2);
    CorpusInstance inst;
    inst.desc.family = (rng() % 2 == 0) ? Family::Additive : Family::Multiplicative;
    inst.desc.n = n;
    inst.desc.variables = s == 1 ? std::vector<std::string>{"x"}
                                 : std::vector<std::string>{"x", "y"};
    int gens = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < gens; ++g) {
      SliceVector v = corpus_detail::random_generator(rng, n, s, 4, 3);
      if (!v.is_zero()) inst.desc.generators.push_back(std::move(v));
    }
    if (inst.desc.generators.empty()) continue;
    inst.desc.label = "corpus-" + std::to_string(out.size());
    out.push_back(std::move(inst));
  }
  return out;
}

/// Generalized variants: the same sampling with a delay schedule or an
/// axiom-valid explicit schedule built by introducing each generator a few
/// levels late.
/// Level window for property checks on an instance: past the structural
/// stabilization bound, where indicators and polynomials have settled, while
/// keeping the ambient dimension moderate.
inline int property_level(const GeneralizedGroupSpec& spec) {
  return stabilization_index(spec).guaranteed_bound + spec.base.n + 2;
}

inline std::vector<CorpusInstance> make_generalized_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<CorpusInstance> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 1 + static_cast<int>(rng() % 3);
    int s = 1 + static_cast<int>(rng() % 2);
    CorpusInstance inst;
    inst.desc.family = (rng() % 2 == 0) ? Family::Additive : Family::Multiplicative;
    inst.desc.n = n;
    inst.desc.variables = s == 1 ? std::vector<std::string>{"x"}
                                 : std::vector<std::string>{"x", "y"};
    int gens = 1 + static_cast<int>(rng() % 2);
    for (int g = 0; g < gens; ++g) {
      SliceVector v = corpus_detail::random_generator(rng, n, s, 3, 3);
      if (!v.is_zero()) inst.desc.generators.push_back(std::move(v));
    }
    if (inst.desc.generators.empty()) continue;
    if (rng() % 2 == 0) {
      inst.schedule = Schedule::delayed(1 + static_cast<int>(rng() % 2));
    } else {
      // introduce generator g only from level ord(g) + intro_delay[g]
      std::vector<int> intro;
      int tail_from = 1;
      for (const SliceVector& g : inst.desc.generators) {
        intro.push_back(static_cast<int>(rng() % 3));
        tail_from = std::max(tail_from, g.order() + intro.back() + 1);
      }
      inst.schedule.kind = Schedule::Kind::Explicit;
      inst.schedule.tail_from = tail_from;
      for (int level = 0; level < tail_from; ++level) {
        std::vector<std::pair<int, ShiftMonomial>> entries;
        for (int g = 0; g < static_cast<int>(inst.desc.generators.size()); ++g) {
          int room = level - inst.desc.generators[g].order() - intro[g];
          if (room < 0) continue;
          for (const ShiftMonomial& m : enumerate_shifts(n, room, ShiftRange::UpTo))
            entries.emplace_back(g, m);
        }
        inst.schedule.levels.push_back(std::move(entries));
      }
    }
    inst.desc.label = "gen-corpus-" + std::to_string(out.size());
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace diffdim
