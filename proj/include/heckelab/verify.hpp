#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace heckelab {

/// Parameter ranges for the suites; every field has a default.
struct SuiteRanges {
  int r_max = 4;
  int k_max = 10;
  int q_max = 3;
  int char_n_max = 8;
  int lambda_r_max = 5;
  int lambda_k_max = 8;
  int satake_n_max = 10;
  int eval_n_max = 16;
  int eval_trials = 100;
  int coherence_trials = 500;
  int tensor_trials = 100;
  int chow_max = 8;
  int dbullet_r_max = 10;
  std::uint64_t prime = 10007;
};

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  nlohmann::ordered_json params;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::int64_t elapsed_ms = 0;

  bool passed() const;
  std::size_t count(CheckStatus s) const;
};

const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown suite. "all" runs every suite in order.
/// A non-empty `only` keeps the checks whose full id starts with one of its entries.
SuiteReport run_suite(std::string_view name, const SuiteRanges& ranges, std::uint64_t seed,
                      const std::vector<std::string>& only = {});

nlohmann::ordered_json to_json(const SuiteReport& report);

}  // namespace heckelab
