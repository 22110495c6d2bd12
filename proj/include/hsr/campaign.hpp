#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hsr/ehrhart.hpp"
#include "hsr/root_solver.hpp"
#include "hsr/stability.hpp"

namespace hsr {

enum class GridRule {
  range,     // n_min <= n <= n_max, clipped to 2d <= n
  paper,     // 2d <= n <= d^2 + 2d
  diagonal,  // n = 2d
};

struct CampaignConfig {
  int d_min = 4;
  int d_max = 7;
  GridRule grid = GridRule::paper;
  int n_min = 2;
  int n_max = 2;
  /// Unset fields fall back to default_solver_config for each pair.
  std::optional<double> tolerance;
  std::optional<int> max_iterations;
  std::uint64_t seed = 0;
  bool certify = false;
  int threads = 1;
  std::filesystem::path output_dir = ".";
  bool svg = true;
  /// Record wall time in report.csv; off by default so the file is
  /// reproducible byte for byte.
  bool timings = false;
};

/// Pairs in lexicographic (d, n) order.  Throws InvalidParams for d_min < 1
/// or an empty d range.
[[nodiscard]] std::vector<HypersimplexParams> campaign_pairs(const CampaignConfig& config);

[[nodiscard]] SolverConfig solver_config_for(const CampaignConfig& config, const HypersimplexParams& params);

struct CampaignRow {
  int d = 0;
  int n = 0;
  int degree = 0;
  /// Unset when the campaign ran without --certify.
  std::optional<StripVerdict> strip;
  RootSet roots;
  double re_min = 0.0;
  double re_max = 0.0;
  double im_max = 0.0;
  double max_residual = 0.0;
  double millis = 0.0;
  /// Every numeric root inside the open strip and the solver converged.
  bool numeric_ok = false;
  /// Non-empty when the instance threw.
  std::string error;

  [[nodiscard]] bool certified() const { return strip && strip->overall; }
  [[nodiscard]] bool boundary() const;
};

struct CampaignSummary {
  int rows = 0;
  int certified = 0;
  int failed = 0;
  int boundary = 0;
  /// Rows run without certification whose numeric roots all lie in the strip.
  int numeric_only = 0;
  int errors = 0;
};

struct VerificationReport {
  std::vector<CampaignRow> rows;
  CampaignSummary summary;
};

[[nodiscard]] CampaignRow run_instance(const HypersimplexParams& params, const CampaignConfig& config);

/// Pairs run in parallel on config.threads OpenMP threads; rows come back in
/// (d, n) order whatever the schedule.
[[nodiscard]] VerificationReport run_campaign(const CampaignConfig& config);
/// Same result computed on the calling thread only.
[[nodiscard]] VerificationReport run_campaign_serial(const CampaignConfig& config);

[[nodiscard]] CampaignSummary summarize(const std::vector<CampaignRow>& rows, bool certify);

/// Writes report.csv, roots.csv, summary.txt and (if config.svg) one
/// roots_d<d>.svg per d into config.output_dir.
void write_campaign(const VerificationReport& report, const CampaignConfig& config);

/// 0 all certified, 1 numeric-only pass, 3 any failure or error.
[[nodiscard]] int campaign_exit_code(const VerificationReport& report, bool certify);

}  // namespace hsr
