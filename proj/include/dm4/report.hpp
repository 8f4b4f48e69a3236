#pragma once

// Check registry and machine-readable suite reports.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dm4 {

enum class CheckStatus { pass, fail, skip, inconclusive };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct CheckOutcome {
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

inline CheckOutcome pass_check(std::string detail = "") { return {CheckStatus::pass, std::move(detail)}; }
inline CheckOutcome fail_check(std::string detail) { return {CheckStatus::fail, std::move(detail)}; }
inline CheckOutcome skip_check(std::string detail) { return {CheckStatus::skip, std::move(detail)}; }
inline CheckOutcome inconclusive_check(std::string detail) {
  return {CheckStatus::inconclusive, std::move(detail)};
}

inline CheckOutcome expect(bool ok, std::string detail_on_fail, std::string detail_on_pass = "") {
  return ok ? pass_check(std::move(detail_on_pass)) : fail_check(std::move(detail_on_fail));
}

struct Check {
  std::string id;
  std::string paper_ref;
  std::function<CheckOutcome()> run;
};

struct CheckResult {
  std::string id;
  CheckStatus status;
  std::string paper_ref;
  std::string detail;
  std::int64_t runtime_ms = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const {
    int c = 0;
    for (const auto& r : checks)
      if (r.status == s) ++c;
    return c;
  }
  bool all_pass() const { return count(CheckStatus::fail) == 0 && count(CheckStatus::inconclusive) == 0; }
};

struct RunOptions {
  bool deep = false;
  bool timings = false;  // off: runtime_ms reported as 0 for byte-stable output
  int arity3_samples = 0;  // 0: pick by mode (100000 deep, 20000 default)
};

inline SuiteResult run_checks(const std::string& suite, const std::vector<Check>& checks,
                              const RunOptions& opt) {
  SuiteResult res;
  res.suite = suite;
  for (const Check& c : checks) {
    auto t0 = std::chrono::steady_clock::now();
    CheckOutcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = fail_check(std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    std::int64_t ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    res.checks.push_back({c.id, out.status, c.paper_ref, out.detail, opt.timings ? ms : 0});
  }
  return res;
}

inline nlohmann::json suite_json(const SuiteResult& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"status", status_name(c.status)},
                      {"paper_ref", c.paper_ref},
                      {"detail", c.detail},
                      {"runtime_ms", c.runtime_ms}});
  return {{"suite", r.suite},
          {"checks", checks},
          {"summary",
           {{"pass", r.count(CheckStatus::pass)},
            {"fail", r.count(CheckStatus::fail)},
            {"skip", r.count(CheckStatus::skip)},
            {"inconclusive", r.count(CheckStatus::inconclusive)}}}};
}

}  // namespace dm4
