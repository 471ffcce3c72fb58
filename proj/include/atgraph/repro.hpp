#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace atgraph {

// One reproduced claim instance. `computed` comes from this library's
// operations only; `expected` is the claimed value for the instance.
struct ReproRow {
  std::string target;
  std::string instance;
  std::string method;
  std::string computed;
  std::string expected;
  std::string detail;
  enum class Status { Pass, Fail, Inconclusive, Skipped } status = Status::Pass;
  double millis = 0;
};

struct ReproReport {
  std::vector<ReproRow> rows;

  bool any_failed() const;
  bool any_inconclusive() const;
  // 0 all pass, 1 any fail, 2 inconclusive rows but no hard failures.
  int exit_code() const;
};

struct ReproOptions {
  int nmax = 6;
  int mmax = 6;
  std::uint64_t seed = 12345;
  int sample = 500;              // instances for the randomized targets
  int at_exact_max_edges = 18;   // exhaustive search cutoff
  std::int64_t budget = 50'000'000;
  bool progress = false;         // progress lines on stderr
};

// Closed list of reproducible results; "all" runs every one of them.
const std::vector<std::string>& repro_target_ids();

ReproReport run_repro(const std::string& target, const ReproOptions& opts = {});
ReproReport run_all(const ReproOptions& opts = {});

nlohmann::json report_to_json(const ReproReport& report,
                              bool with_timing = true);
std::string report_to_table(const ReproReport& report);

}  // namespace atgraph
