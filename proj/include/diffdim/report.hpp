#pragma once

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "job.hpp"

namespace diffdim {

enum class Command {
  Dims,
  DimPoly,
  Stabilize,
  Certificate,
  Generalized,
  Projections,
  Kernels,
  Twisted,
  OracleCheck,
  Report,
};

struct RunOptions {
  int max_level = -1;  // negative: derive the default from the job
  int horizon = -1;    // negative: max_level + 4
  bool oracle_check = false;
};

struct RunResult {
  Json doc;
  bool guard_tripped = false;  // unresolved indicators and similar soft guards
};

namespace report_detail {

inline Json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
  return Json(v.str());
}

inline Json dims_json(const std::vector<Int>& dims) {
  Json a = Json::array();
  for (const Int& d : dims) a.push_back(int_json(d));
  return a;
}

inline Json poly_json(const NumericalPolynomial& p, int threshold) {
  Json j;
  Json coeffs = Json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(int_json(c));
  j["binomial_coeffs"] = coeffs;
  j["binomial_form"] = to_binomial_string(p);
  j["expanded_form"] = to_expanded_string(p);
  j["threshold"] = threshold;
  return j;
}

inline Json invariants_json(const PolyInvariants& inv) {
  Json j;
  j["sigma_type"] = inv.sigma_type;
  j["typical_sigma_dimension"] = int_json(inv.typical_sigma_dim);
  j["sigma_dimension"] = int_json(inv.sigma_dim);
  return j;
}

inline Json indicators_json(const IndicatorReport& rep) {
  Json a = Json::array();
  for (std::size_t i = 0; i < rep.values.size(); ++i) {
    if (rep.resolved[i])
      a.push_back(rep.values[i]);
    else
      a.push_back(nullptr);
  }
  return a;
}

inline Json stabilization_json(const StabilizationReport& st) {
  Json j;
  j["m"] = st.m;
  j["guaranteed_bound"] = st.guaranteed_bound;
  Json table = Json::array();
  for (const auto& row : st.table) {
    Json r;
    r["level"] = row.level;
    r["next_slice_dim"] = int_json(row.lhs_dim);
    r["generated_dim"] = int_json(row.rhs_dim);
    r["equal"] = row.equal;
    table.push_back(r);
  }
  j["table"] = table;
  return j;
}

inline Json certificate_json(const GenerationCertificate& cert, const GroupDescriptor& d) {
  Json j;
  j["level"] = cert.level;
  Json gens = Json::array();
  for (const SliceVector& row : cert.rows)
    gens.push_back(print_generator(row, d.family, d.variables));
  j["generators"] = gens;
  return j;
}

inline Json axioms_json(const AxiomReport& rep) {
  Json j;
  j["ok"] = rep.ok;
  j["levels_checked"] = static_cast<int>(rep.entries.size());
  return j;
}

inline std::vector<Int> oracle_dims(const GroupDescriptor& d, int max_level) {
  std::vector<int> ranks = brute_slice_profile(d.generators, d.n, max_level);
  std::vector<Int> dims;
  for (int i = 0; i <= max_level; ++i)
    dims.push_back(Int(d.s()) * count_shifts(d.n, i, ShiftRange::UpTo) - ranks[i]);
  return dims;
}

inline Json oracle_section(const GroupDescriptor& d, const std::vector<Int>& main_dims,
                           int max_level) {
  Json j;
  std::vector<Int> brute = oracle_dims(d, max_level);
  j["main_dims"] = dims_json(main_dims);
  j["oracle_dims"] = dims_json(brute);
  bool all = true;
  Json matches = Json::array();
  for (int i = 0; i <= max_level; ++i) {
    bool ok = main_dims[i] == brute[i];
    matches.push_back(ok);
    all = all && ok;
  }
  j["match_per_level"] = matches;
  j["all_match"] = all;
  return j;
}

inline const char* command_name(Command c) {
  switch (c) {
    case Command::Dims: return "dims";
    case Command::DimPoly: return "dimpoly";
    case Command::Stabilize: return "stabilize";
    case Command::Certificate: return "certificate";
    case Command::Generalized: return "generalized";
    case Command::Projections: return "projections";
    case Command::Kernels: return "kernels";
    case Command::Twisted: return "twisted";
    case Command::OracleCheck: return "oracle-check";
    case Command::Report: return "report";
  }
  return "?";
}

}  // namespace report_detail

inline RunResult run_command(Command cmd, const JobSpec& job, const RunOptions& opts) {
  using namespace report_detail;
  const GeneralizedGroupSpec& spec = job.spec;
  const GroupDescriptor& d = spec.base;
  int max_level = opts.max_level >= 0 ? opts.max_level : default_max_level(spec);
  int horizon = opts.horizon >= 0 ? opts.horizon : max_level + 4;
  if (horizon < max_level) throw InputError("horizon must reach max_level");

  RunResult res;
  Json& doc = res.doc;
  doc["command"] = command_name(cmd);
  doc["label"] = d.label;
  if (auto fx = match_fixture(job)) doc["fixture"] = *fx;
  doc["job"] = job_to_json(job);
  doc["max_level"] = max_level;

  auto chain_dims = [&]() {
    if (spec.schedule.kind == Schedule::Kind::Zariski) return zariski_dims(d, max_level);
    return generalized_dims(spec, max_level).dims;
  };

  switch (cmd) {
    case Command::Dims: {
      std::vector<Int> dims = chain_dims();
      doc["dims"] = dims_json(dims);
      if (opts.oracle_check) doc["oracle_check"] = oracle_section(d, zariski_dims(d, max_level), max_level);
      break;
    }
    case Command::DimPoly: {
      std::vector<Int> dims = chain_dims();
      DimensionPolynomial dp = chain_dimension_polynomial(spec, dims);
      doc["dims"] = dims_json(dims);
      doc["polynomial"] = poly_json(dp.poly, dp.threshold);
      doc["invariants"] = invariants_json(invariants(dp.poly, d.n));
      break;
    }
    case Command::Stabilize: {
      doc["stabilization"] = stabilization_json(stabilization_index(spec));
      break;
    }
    case Command::Certificate: {
      GroupDescriptor u = d;
      u.generators = groups_detail::union_generators(spec);
      doc["certificate"] = certificate_json(finite_generation_certificate(u), d);
      break;
    }
    case Command::Generalized: {
      GeneralizedDims gd = generalized_dims(spec, max_level);
      IndicatorReport ind = zariski_indicators(spec, max_level, horizon);
      DimensionPolynomial dp = chain_dimension_polynomial(spec, gd.dims);
      doc["dims"] = dims_json(gd.dims);
      doc["polynomial"] = poly_json(dp.poly, dp.threshold);
      doc["invariants"] = invariants_json(invariants(dp.poly, d.n));
      doc["axioms"] = axioms_json(gd.axioms);
      doc["horizon"] = horizon;
      doc["indicators"] = indicators_json(ind);
      if (!ind.all_resolved) {
        doc["warnings"] = Json::array({"some indicators unresolved below the horizon"});
        res.guard_tripped = true;
      }
      break;
    }
    case Command::Projections: {
      ProjectionReport pr = projections(spec, max_level, horizon);
      doc["horizon"] = horizon;
      doc["dims"] = dims_json(pr.dims);
      doc["projection_indicators"] = indicators_json(pr.indicators);
      doc["chain_indicators"] = indicators_json(pr.chain_indicators);
      doc["lemma_bound_ok"] = pr.lemma_bound_ok;
      if (!pr.indicators.all_resolved || !pr.chain_indicators.all_resolved) {
        doc["warnings"] = Json::array({"some indicators unresolved below the horizon"});
        res.guard_tripped = true;
      }
      break;
    }
    case Command::Kernels: {
      KernelReport kr = kernels(spec, max_level);
      doc["dims"] = dims_json(kr.dims);
      Json tops = Json::array();
      for (const SliceBasis& b : kr.top_slices) tops.push_back(b.dim());
      doc["top_slice_dims"] = tops;
      break;
    }
    case Command::Twisted: {
      TwistedKernelReport tw = twisted_kernels(spec, max_level);
      doc["n_prime"] = tw.n_prime;
      doc["dims"] = dims_json(tw.dims);
      doc["kernel_dims"] = dims_json(tw.kernel_dims);
      Json slice_dims = Json::array();
      Json slices = Json::array();
      for (const SliceBasis& b : tw.slices) {
        slice_dims.push_back(b.dim());
        Json rows = Json::array();
        for (const SliceVector& row : b.rows())
          rows.push_back(print_generator(row, d.family, d.variables));
        slices.push_back(rows);
      }
      doc["slice_dims"] = slice_dims;
      doc["slices"] = slices;
      doc["axioms"] = axioms_json(tw.axioms);
      doc["polynomial"] = poly_json(tw.fitted, tw.fit_from);
      break;
    }
    case Command::OracleCheck: {
      doc["oracle_check"] = oracle_section(d, zariski_dims(d, max_level), max_level);
      break;
    }
    case Command::Report: {
      ClosureReport cr = closure_report(spec, max_level);
      doc["dims"] = dims_json(cr.dims);
      doc["polynomial"] = poly_json(cr.poly, cr.poly_threshold);
      doc["invariants"] = invariants_json(cr.inv);
      doc["stabilization"] = stabilization_json(stabilization_index(spec));
      GroupDescriptor u = d;
      u.generators = groups_detail::union_generators(spec);
      doc["certificate"] = certificate_json(finite_generation_certificate(u), d);
      if (spec.schedule.kind != Schedule::Kind::Zariski) {
        GeneralizedDims gd = generalized_dims(spec, max_level);
        IndicatorReport ind = zariski_indicators(spec, max_level, horizon);
        Json g;
        g["axioms"] = axioms_json(gd.axioms);
        g["horizon"] = horizon;
        g["indicators"] = indicators_json(ind);
        doc["generalized"] = g;
        if (!ind.all_resolved) res.guard_tripped = true;
      }
      ProjectionReport pr = projections(spec, max_level, horizon);
      Json pj;
      pj["dims"] = dims_json(pr.dims);
      pj["projection_indicators"] = indicators_json(pr.indicators);
      pj["lemma_bound_ok"] = pr.lemma_bound_ok;
      doc["projections"] = pj;
      KernelReport kr = kernels(spec, max_level);
      Json kj;
      kj["dims"] = dims_json(kr.dims);
      doc["kernels"] = kj;
      if (d.n >= 2) {
        TwistedKernelReport tw = twisted_kernels(spec, max_level);
        Json tj;
        tj["dims"] = dims_json(tw.dims);
        tj["polynomial"] = poly_json(tw.fitted, tw.fit_from);
        doc["twisted_kernels"] = tj;
      }
      if (opts.oracle_check)
        doc["oracle_check"] = oracle_section(d, zariski_dims(d, max_level), max_level);
      break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

namespace report_detail {

inline std::string json_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "?";
  return v.dump();
}

inline void render_dims_table(std::ostringstream& out, const Json& dims, const char* heading) {
  out << heading << "\n  level | dim\n  ------+------\n";
  for (std::size_t i = 0; i < dims.size(); ++i)
    out << "  " << std::setw(5) << i << " | " << json_scalar(dims[i]) << "\n";
}

inline void render_poly(std::ostringstream& out, const Json& p, const char* name) {
  out << name << "(t) = " << p["expanded_form"].get<std::string>() << "   (threshold "
      << p["threshold"] << "; binomial form " << p["binomial_form"].get<std::string>() << ")\n";
}

inline void render_invariants(std::ostringstream& out, const Json& inv) {
  out << "sigma-type " << json_scalar(inv["sigma_type"]) << ", typical sigma-dimension "
      << json_scalar(inv["typical_sigma_dimension"]) << ", sigma-dimension "
      << json_scalar(inv["sigma_dimension"]) << "\n";
}

inline void render_stabilization(std::ostringstream& out, const Json& st) {
  out << "stabilization index m = " << st["m"] << " (generation property certified for all i >= "
      << st["m"] << "; structural bound " << st["guaranteed_bound"] << ")\n";
  out << "  level | next slice dim | generated dim | equal\n";
  out << "  ------+----------------+---------------+------\n";
  for (const Json& row : st["table"]) {
    out << "  " << std::setw(5) << row["level"].get<int>() << " | " << std::setw(14)
        << json_scalar(row["next_slice_dim"]) << " | " << std::setw(13)
        << json_scalar(row["generated_dim"]) << " | " << (row["equal"].get<bool>() ? "yes" : "NO")
        << "\n";
  }
}

inline void render_indicator_row(std::ostringstream& out, const Json& ind, const char* name) {
  out << name << ":";
  for (std::size_t i = 0; i < ind.size(); ++i) out << " " << json_scalar(ind[i]);
  out << "\n";
}

}  // namespace report_detail

/// Renders a run result; formats are "table" (human), "json" (machine,
/// byte-identical across runs), and "csv" (dimension tables only).
inline std::string emit(const RunResult& res, const std::string& format) {
  using namespace report_detail;
  const Json& doc = res.doc;
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") {
    if (!doc.contains("dims"))
      throw InputError("csv output is only available for commands with a dimension table");
    std::string out = "level,dim\n";
    const Json& dims = doc["dims"];
    for (std::size_t i = 0; i < dims.size(); ++i)
      out += std::to_string(i) + "," + json_scalar(dims[i]) + "\n";
    return out;
  }
  if (format != "table") throw InputError("unknown output format: " + format);

  std::ostringstream out;
  out << "== " << doc["command"].get<std::string>();
  if (!doc["label"].get<std::string>().empty()) out << ": " << doc["label"].get<std::string>();
  out << " ==\n";
  if (doc.contains("fixture"))
    out << "matches bundled fixture '" << doc["fixture"].get<std::string>() << "'\n";
  if (doc.contains("dims")) render_dims_table(out, doc["dims"], "dimension sequence");
  if (doc.contains("polynomial")) {
    render_poly(out, doc["polynomial"], "Phi");
    if (doc.contains("invariants")) render_invariants(out, doc["invariants"]);
  }
  if (doc.contains("stabilization")) render_stabilization(out, doc["stabilization"]);
  if (doc.contains("certificate")) {
    const Json& c = doc["certificate"];
    out << "finitely sigma-generated by the order <= " << c["level"] << " slice:\n";
    for (const Json& g : c["generators"]) out << "  " << g.get<std::string>() << "\n";
  }
  if (doc.contains("axioms"))
    out << "chain axioms: " << (doc["axioms"]["ok"].get<bool>() ? "hold" : "FAIL") << " ("
        << doc["axioms"]["levels_checked"] << " levels checked)\n";
  if (doc.contains("indicators")) render_indicator_row(out, doc["indicators"], "indicators j_i");
  if (doc.contains("projection_indicators"))
    render_indicator_row(out, doc["projection_indicators"], "projection indicators f_i");
  if (doc.contains("chain_indicators"))
    render_indicator_row(out, doc["chain_indicators"], "chain indicators j_i");
  if (doc.contains("lemma_bound_ok"))
    out << "projection bound f_i <= j_i - 1 when j_i > i: "
        << (doc["lemma_bound_ok"].get<bool>() ? "holds" : "FAIL") << "\n";
  if (doc.contains("top_slice_dims"))
    render_indicator_row(out, doc["top_slice_dims"], "top slice dims");
  if (doc.contains("slice_dims"))
    render_indicator_row(out, doc["slice_dims"], "twisted slice dims");
  if (doc.contains("kernel_dims")) render_indicator_row(out, doc["kernel_dims"], "kernel dims");
  if (doc.contains("slices")) {
    out << "twisted slices per level:\n";
    const Json& slices = doc["slices"];
    for (std::size_t i = 0; i < slices.size(); ++i) {
      out << "  [" << i << "]";
      if (slices[i].empty()) out << " (zero)";
      for (const Json& g : slices[i]) out << " " << g.get<std::string>() << " ;";
      out << "\n";
    }
  }
  if (doc.contains("generalized")) {
    out << "generalized chain: axioms "
        << (doc["generalized"]["axioms"]["ok"].get<bool>() ? "hold" : "FAIL") << "\n";
    render_indicator_row(out, doc["generalized"]["indicators"], "indicators j_i");
  }
  if (doc.contains("projections")) {
    render_dims_table(out, doc["projections"]["dims"], "projection dimension sequence");
    render_indicator_row(out, doc["projections"]["projection_indicators"],
                         "projection indicators f_i");
  }
  if (doc.contains("kernels")) render_dims_table(out, doc["kernels"]["dims"], "kernel dims");
  if (doc.contains("twisted_kernels")) {
    render_dims_table(out, doc["twisted_kernels"]["dims"], "twisted kernel dims");
    render_poly(out, doc["twisted_kernels"]["polynomial"], "psi");
  }
  if (doc.contains("oracle_check")) {
    const Json& oc = doc["oracle_check"];
    out << "oracle cross-check\n  level | main | oracle | match\n";
    out << "  ------+------+--------+------\n";
    for (std::size_t i = 0; i < oc["main_dims"].size(); ++i)
      out << "  " << std::setw(5) << i << " | " << std::setw(4)
          << json_scalar(oc["main_dims"][i]) << " | " << std::setw(6)
          << json_scalar(oc["oracle_dims"][i]) << " | "
          << (oc["match_per_level"][i].get<bool>() ? "yes" : "NO") << "\n";
    out << (oc["all_match"].get<bool>() ? "oracle agrees at every level\n"
                                        : "ORACLE MISMATCH\n");
  }
  if (doc.contains("warnings"))
    for (const Json& w : doc["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
  return out.str();
}

}  // namespace diffdim
