#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtwist/ring/errors.hpp"
#include "qtwist/ring/outcome.hpp"

namespace qtwist::cli {

enum class Status { pass, fail, error };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "?";
}

struct CheckReport {
  std::string check;
  std::string target;
  std::optional<std::string> pattern;
  std::optional<std::vector<std::string>> labels;
  Status status = Status::pass;
  std::size_t checked = 0;
  std::optional<nlohmann::ordered_json> counterexample;
  std::string message;  // error text, human summary only
  std::int64_t elapsed_ms = 0;
};

/// Folds a check outcome into a report; failures carry the first witness.
inline void apply_outcome(CheckReport& rep, const CheckOutcome& o) {
  rep.checked += o.checked;
  if (o.ok()) return;
  rep.status = Status::fail;
  if (!rep.counterexample) {
    rep.counterexample = nlohmann::ordered_json{{"witness", o.witness}, {"residual", o.residual}, {"failures", o.failures}};
  }
}

inline void fail_with(CheckReport& rep, nlohmann::ordered_json payload) {
  rep.status = Status::fail;
  if (!rep.counterexample) rep.counterexample = std::move(payload);
}

inline void sort_reports(std::vector<CheckReport>& reps) {
  std::stable_sort(reps.begin(), reps.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.check, a.target) < std::tie(b.check, b.target);
  });
}

inline nlohmann::ordered_json to_json(const CheckReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["target"] = r.target;
  if (r.pattern) j["pattern"] = *r.pattern;
  if (r.labels) j["labels"] = *r.labels;
  j["status"] = to_string(r.status);
  j["checked"] = r.checked;
  if (r.status != Status::pass) {
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    else j["counterexample"] = nlohmann::ordered_json{{"error", r.message}};
  }
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline std::string render_reports(const std::vector<CheckReport>& reps, bool timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reps) arr.push_back(to_json(r, timing));
  return arr.dump(2) + "\n";
}

/// Writes the JSON array to path; I/O failures name the path.
inline void emit_report(const std::vector<CheckReport>& reps, const std::string& path, bool timing = false) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open report file '" + path + "' for writing");
  os << render_reports(reps, timing);
  if (!os) throw Error("failed writing report file '" + path + "'");
}

inline void print_summary(const std::vector<CheckReport>& reps, std::ostream& os) {
  std::size_t failed = 0;
  for (const auto& r : reps) {
    std::string tag = r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "ERROR";
    os << tag << "  " << r.check << "  " << r.target << "  (" << r.checked << " checked, " << r.elapsed_ms << " ms)\n";
    if (r.status == Status::fail && r.counterexample) os << "       counterexample: " << r.counterexample->dump() << "\n";
    if (r.status == Status::error) os << "       error: " << r.message << "\n";
    if (r.status != Status::pass) ++failed;
  }
  os << reps.size() - failed << "/" << reps.size() << " checks passed\n";
}

inline bool all_pass(const std::vector<CheckReport>& reps) {
  return std::all_of(reps.begin(), reps.end(), [](const CheckReport& r) { return r.status == Status::pass; });
}

/// A unit of work for the orchestrator.
struct Task {
  std::string check;
  std::string target;
  std::function<void(CheckReport&)> body;
};

}  // namespace qtwist::cli
