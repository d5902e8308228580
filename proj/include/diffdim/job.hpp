#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "groups.hpp"
#include "parser.hpp"

namespace diffdim {

using Json = nlohmann::ordered_json;

/// One unit of work for the command line: a descriptor with a schedule.
struct JobSpec {
  GeneralizedGroupSpec spec;
  std::vector<std::string> generator_texts;  // as supplied, for echoing back
};

namespace job_detail {

[[noreturn]] inline void schema_error(const std::string& pointer, const std::string& what) {
  throw InputError("schema violation at " + pointer + ": " + what);
}

inline const Json& expect(const Json& j, const std::string& key, const std::string& pointer,
                          const char* type) {
  auto it = j.find(key);
  if (it == j.end()) schema_error(pointer + "/" + key, std::string("missing ") + type);
  return *it;
}

}  // namespace job_detail

inline JobSpec job_from_json(const Json& j) {
  using job_detail::expect;
  using job_detail::schema_error;
  if (!j.is_object()) schema_error("", "the job must be a JSON object");

  JobSpec job;
  GroupDescriptor& d = job.spec.base;

  const Json& n = expect(j, "n", "", "integer");
  if (!n.is_number_integer() || n.get<long long>() < 1)
    schema_error("/n", "expected a positive integer");
  d.n = n.get<int>();

  const Json& fam = expect(j, "family", "", "string");
  if (!fam.is_string()) schema_error("/family", "expected a string");
  std::string f = fam.get<std::string>();
  if (f == "additive")
    d.family = Family::Additive;
  else if (f == "multiplicative")
    d.family = Family::Multiplicative;
  else
    schema_error("/family", "expected \"additive\" or \"multiplicative\"");

  const Json& vars = expect(j, "variables", "", "array");
  if (!vars.is_array() || vars.empty()) schema_error("/variables", "expected a nonempty array");
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!vars[k].is_string() || vars[k].get<std::string>().empty())
      schema_error("/variables/" + std::to_string(k), "expected a nonempty string");
    d.variables.push_back(vars[k].get<std::string>());
  }

  const Json& gens = expect(j, "generators", "", "array");
  if (!gens.is_array()) schema_error("/generators", "expected an array");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].is_string())
      schema_error("/generators/" + std::to_string(k), "expected an expression string");
    std::string text = gens[k].get<std::string>();
    try {
      d.generators.push_back(parse_generator(text, d.family, d.n, d.variables));
    } catch (const InputError& e) {
      schema_error("/generators/" + std::to_string(k), e.what());
    }
    job.generator_texts.push_back(text);
  }

  if (j.contains("label")) {
    if (!j["label"].is_string()) schema_error("/label", "expected a string");
    d.label = j["label"].get<std::string>();
  }

  Schedule& sch = job.spec.schedule;
  if (j.contains("schedule")) {
    const Json& s = j["schedule"];
    if (!s.is_object()) schema_error("/schedule", "expected an object");
    const Json& kind = expect(s, "kind", "/schedule", "string");
    std::string k = kind.is_string() ? kind.get<std::string>() : "";
    if (k == "zariski") {
      sch.kind = Schedule::Kind::Zariski;
    } else if (k == "delay") {
      sch.kind = Schedule::Kind::Delay;
      const Json& dd = expect(s, "d", "/schedule", "integer");
      if (!dd.is_number_integer() || dd.get<long long>() < 0)
        schema_error("/schedule/d", "expected a non-negative integer");
      sch.delay = dd.get<int>();
    } else if (k == "explicit") {
      sch.kind = Schedule::Kind::Explicit;
      const Json& tf = expect(s, "tail_from", "/schedule", "integer");
      if (!tf.is_number_integer() || tf.get<long long>() < 1)
        schema_error("/schedule/tail_from", "expected a positive integer");
      sch.tail_from = tf.get<int>();
      const Json& levels = expect(s, "levels", "/schedule", "array");
      if (!levels.is_array() || static_cast<int>(levels.size()) != sch.tail_from)
        schema_error("/schedule/levels", "expected exactly tail_from level lists");
      for (std::size_t li = 0; li < levels.size(); ++li) {
        std::string lp = "/schedule/levels/" + std::to_string(li);
        if (!levels[li].is_array()) schema_error(lp, "expected an array of [index, exps] pairs");
        std::vector<std::pair<int, ShiftMonomial>> level;
        for (std::size_t pi = 0; pi < levels[li].size(); ++pi) {
          const Json& pair = levels[li][pi];
          std::string pp = lp + "/" + std::to_string(pi);
          if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
              !pair[1].is_array())
            schema_error(pp, "expected [generator index, [exponents]]");
          std::vector<int> exps;
          for (std::size_t e = 0; e < pair[1].size(); ++e) {
            if (!pair[1][e].is_number_integer() || pair[1][e].get<long long>() < 0)
              schema_error(pp + "/1/" + std::to_string(e), "expected a non-negative integer");
            exps.push_back(pair[1][e].get<int>());
          }
          if (static_cast<int>(exps.size()) != d.n)
            schema_error(pp + "/1", "expected " + std::to_string(d.n) + " exponents");
          level.emplace_back(pair[0].get<int>(), ShiftMonomial(std::move(exps)));
        }
        sch.levels.push_back(std::move(level));
      }
    } else {
      schema_error("/schedule/kind", "unknown schedule kind");
    }
  }
  return job;
}

/// Lossless inverse of job_from_json.
inline Json job_to_json(const JobSpec& job) {
  const GroupDescriptor& d = job.spec.base;
  Json j;
  j["n"] = d.n;
  j["family"] = family_name(d.family);
  j["variables"] = d.variables;
  Json gens = Json::array();
  for (const std::string& text : job.generator_texts) gens.push_back(text);
  j["generators"] = gens;
  const Schedule& sch = job.spec.schedule;
  Json s;
  switch (sch.kind) {
    case Schedule::Kind::Zariski:
      s["kind"] = "zariski";
      break;
    case Schedule::Kind::Delay:
      s["kind"] = "delay";
      s["d"] = sch.delay;
      break;
    case Schedule::Kind::Explicit: {
      s["kind"] = "explicit";
      Json levels = Json::array();
      for (const auto& level : sch.levels) {
        Json lj = Json::array();
        for (const auto& [gi, m] : level) lj.push_back(Json::array({gi, m.e}));
        levels.push_back(lj);
      }
      s["levels"] = levels;
      s["tail_from"] = sch.tail_from;
      break;
    }
  }
  j["schedule"] = s;
  j["label"] = d.label;
  return j;
}

inline JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open job file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("job file is not valid JSON: ") + e.what());
  }
  return job_from_json(j);
}

// ---------------------------------------------------------------------------
// Bundled fixtures
// ---------------------------------------------------------------------------

struct Fixture {
  std::string id;
  Json job;
};

/// The worked examples shipped with the engine; `--fixtures` runs a command
/// over all of them and reports embed the id when a job matches one.
inline const std::vector<Fixture>& bundled_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::vector<Fixture> out;
    auto add = [&out](const std::string& id, const char* text) {
      out.push_back({id, Json::parse(text)});
    };
    add("gm-binomial-n2", R"json({
      "n": 2, "family": "multiplicative", "variables": ["x"],
      "generators": ["s1^2 s2(x) * s2^4(x) - 1"],
      "schedule": {"kind": "zariski"},
      "label": "binomial subgroup of the multiplicative group, two endomorphisms"})json");
    add("gm-binomial-n2-delay1", R"json({
      "n": 2, "family": "multiplicative", "variables": ["x"],
      "generators": ["s1^2 s2(x) * s2^4(x) - 1"],
      "schedule": {"kind": "delay", "d": 1},
      "label": "the same binomial subgroup, chain one step behind"})json");
    add("ga-linear-n2", R"json({
      "n": 2, "family": "additive", "variables": ["x"],
      "generators": ["s1^2 s2(x) + 2 s2^3(x)"],
      "schedule": {"kind": "zariski"},
      "label": "linear subgroup of the additive group"})json");
    add("ga-trivial-n2", R"json({
      "n": 2, "family": "additive", "variables": ["x"],
      "generators": ["(x)"],
      "schedule": {"kind": "zariski"},
      "label": "trivial subgroup of the additive group"})json");
    add("ga-late-intro-n2", R"json({
      "n": 2, "family": "additive", "variables": ["x"],
      "generators": ["(x)"],
      "schedule": {"kind": "explicit",
                   "levels": [[], [[0, [0, 0]], [0, [1, 0]]]],
                   "tail_from": 2},
      "label": "trivial subgroup with the relation introduced late"})json");
    add("ga-free-n1", R"json({
      "n": 1, "family": "additive", "variables": ["x"],
      "generators": [], "schedule": {"kind": "zariski"},
      "label": "free additive group, one endomorphism"})json");
    add("ga-free-n2", R"json({
      "n": 2, "family": "additive", "variables": ["x"],
      "generators": [], "schedule": {"kind": "zariski"},
      "label": "free additive group, two endomorphisms"})json");
    add("ga-free-n2-s2", R"json({
      "n": 2, "family": "additive", "variables": ["x", "y"],
      "generators": [], "schedule": {"kind": "zariski"},
      "label": "free additive group, two endomorphisms, two variables"})json");
    add("ga-free-n3", R"json({
      "n": 3, "family": "additive", "variables": ["x"],
      "generators": [], "schedule": {"kind": "zariski"},
      "label": "free additive group, three endomorphisms"})json");
    return out;
  }();
  return fixtures;
}

/// Fixture id when the job is one of the bundled examples (label aside).
inline std::optional<std::string> match_fixture(const JobSpec& job) {
  Json mine = job_to_json(job);
  for (const Fixture& f : bundled_fixtures()) {
    JobSpec theirs = job_from_json(f.job);
    Json canon = job_to_json(theirs);
    Json a = mine, b = canon;
    a.erase("label");
    b.erase("label");
    if (a == b) return f.id;
  }
  return std::nullopt;
}

}  // namespace diffdim
