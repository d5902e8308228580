#include <catch2/catch_amalgamated.hpp>

#include "diffdim/report.hpp"

using namespace diffdim;

namespace {

Json running_job() {
  return Json::parse(R"json({
    "n": 2, "family": "multiplicative", "variables": ["x"],
    "generators": ["s1^2 s2(x) * s2^4(x) - 1"],
    "schedule": {"kind": "zariski"},
    "label": "running"})json");
}

}  // namespace

TEST_CASE("job round trip through JSON is lossless") {
  for (const Fixture& f : bundled_fixtures()) {
    JobSpec job = job_from_json(f.job);
    Json serialized = job_to_json(job);
    JobSpec again = job_from_json(serialized);
    CHECK(job_to_json(again) == serialized);
    CHECK(again.spec.base.generators.size() == job.spec.base.generators.size());
    for (std::size_t k = 0; k < job.spec.base.generators.size(); ++k)
      CHECK(again.spec.base.generators[k] == job.spec.base.generators[k]);
  }
}

TEST_CASE("schema violations carry JSON pointer paths") {
  Json j = running_job();
  j.erase("n");
  CHECK_THROWS_WITH(job_from_json(j), Catch::Matchers::ContainsSubstring("/n"));

  j = running_job();
  j["family"] = "projective";
  CHECK_THROWS_WITH(job_from_json(j), Catch::Matchers::ContainsSubstring("/family"));

  j = running_job();
  j["generators"][0] = "s1(x) * * s2(x)";
  CHECK_THROWS_WITH(job_from_json(j), Catch::Matchers::ContainsSubstring("/generators/0"));

  j = running_job();
  j["schedule"]["kind"] = "sometimes";
  CHECK_THROWS_WITH(job_from_json(j), Catch::Matchers::ContainsSubstring("/schedule/kind"));

  j = running_job();
  j["schedule"] = Json::parse(R"({"kind": "explicit", "tail_from": 2, "levels": [[]]})");
  CHECK_THROWS_WITH(job_from_json(j), Catch::Matchers::ContainsSubstring("/schedule/levels"));
}

TEST_CASE("fixture matching ignores the label but not the content") {
  JobSpec job = job_from_json(running_job());
  auto fx = match_fixture(job);
  REQUIRE(fx.has_value());
  CHECK(*fx == "gm-binomial-n2");

  Json changed = running_job();
  changed["generators"][0] = "s1(x) * s2(x) - 1";
  CHECK_FALSE(match_fixture(job_from_json(changed)).has_value());
}

TEST_CASE("identical inputs produce byte-identical JSON output") {
  JobSpec job = job_from_json(running_job());
  RunOptions opts;
  opts.max_level = 8;
  std::string a = emit(run_command(Command::Report, job, opts), "json");
  std::string b = emit(run_command(Command::Report, job, opts), "json");
  CHECK(a == b);
  CHECK_FALSE(a.empty());
}

TEST_CASE("dims command and formats") {
  JobSpec job;
  job.spec.base = GroupDescriptor{Family::Additive, 3, {"x", "y"}, {}, "free"};
  RunOptions opts;
  opts.max_level = 5;
  RunResult res = run_command(Command::Dims, job, opts);
  const Json& dims = res.doc["dims"];
  REQUIRE(dims.size() == 6);
  for (int i = 0; i <= 5; ++i)
    CHECK(Int(dims[i].get<long long>()) == 2 * count_shifts(3, i, ShiftRange::UpTo));

  std::string csv = emit(res, "csv");
  CHECK(csv.rfind("level,dim\n0,2\n1,8\n", 0) == 0);

  std::string table = emit(res, "table");
  CHECK(table.find("dimension sequence") != std::string::npos);

  CHECK_THROWS_AS(emit(res, "yaml"), InputError);
  RunResult stab = run_command(Command::Stabilize, job, opts);
  CHECK_THROWS_AS(emit(stab, "csv"), InputError);
}

TEST_CASE("dimpoly reports exact values only") {
  JobSpec job = job_from_json(running_job());
  RunOptions opts;
  opts.max_level = 8;
  RunResult res = run_command(Command::DimPoly, job, opts);
  CHECK(res.doc["polynomial"]["expanded_form"] == "4t - 2");
  CHECK(res.doc["polynomial"]["binomial_form"] == "4*C(t+1,1) - 6*C(t,0)");
  CHECK(res.doc["polynomial"]["threshold"].get<int>() <= 4);
  CHECK(res.doc["invariants"]["sigma_type"] == 1);
  CHECK(res.doc["invariants"]["typical_sigma_dimension"] == 4);
  CHECK(res.doc["invariants"]["sigma_dimension"] == 0);
  // no floating point representation anywhere in the document
  std::string text = res.doc.dump();
  CHECK(text.find(".0") == std::string::npos);
  CHECK(text.find("e+") == std::string::npos);
}

TEST_CASE("oracle-check command agrees on the fixtures") {
  for (const Fixture& f : bundled_fixtures()) {
    JobSpec job = job_from_json(f.job);
    if (job.spec.base.n >= 3) continue;  // keep the unit suite quick
    RunOptions opts;
    opts.max_level = 6;
    RunResult res = run_command(Command::OracleCheck, job, opts);
    CAPTURE(f.id);
    CHECK(res.doc["oracle_check"]["all_match"].get<bool>());
  }
}

TEST_CASE("unresolved indicators trip the guard flag") {
  Json j = Json::parse(R"json({
    "n": 2, "family": "additive", "variables": ["x"],
    "generators": ["(x)"],
    "schedule": {"kind": "explicit",
                 "levels": [[], [[0, [0, 0]], [0, [1, 0]]]],
                 "tail_from": 2},
    "label": "late"})json");
  JobSpec job = job_from_json(j);
  RunOptions opts;
  opts.max_level = 5;
  opts.horizon = 5;  // too tight to resolve the last indicator
  RunResult res = run_command(Command::Generalized, job, opts);
  CHECK(res.guard_tripped);
  CHECK(res.doc["indicators"][5].is_null());

  opts.horizon = 9;
  RunResult ok = run_command(Command::Generalized, job, opts);
  CHECK_FALSE(ok.guard_tripped);
  CHECK(ok.doc["indicators"][5].get<int>() == 6);
}

TEST_CASE("generalized command carries the chain polynomial") {
  Json j = running_job();
  j["schedule"] = Json::parse(R"({"kind": "delay", "d": 1})");
  JobSpec job = job_from_json(j);
  RunOptions opts;
  opts.max_level = 10;
  RunResult res = run_command(Command::Generalized, job, opts);
  CHECK(res.doc["polynomial"]["expanded_form"] == "5t - 5");
  CHECK(res.doc["polynomial"]["threshold"].get<int>() <= 5);
  for (int i = 4; i <= 10; ++i) CHECK(res.doc["indicators"][i].get<int>() == i + 1);
}

TEST_CASE("report command assembles every section") {
  JobSpec job = job_from_json(running_job());
  RunOptions opts;
  opts.max_level = 8;
  RunResult res = run_command(Command::Report, job, opts);
  for (const char* key : {"dims", "polynomial", "invariants", "stabilization", "certificate",
                          "projections", "kernels", "twisted_kernels"})
    CHECK(res.doc.contains(key));
  CHECK(res.doc["fixture"] == "gm-binomial-n2");
}
