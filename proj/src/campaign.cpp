#include "hsr/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>

#include "hsr/error.hpp"
#include "hsr/report_io.hpp"

namespace hsr {

bool CampaignRow::boundary() const {
  return strip && (strip->left_ok.status == StabilityVerdict::Status::Boundary ||
                   strip->right_ok.status == StabilityVerdict::Status::Boundary);
}

std::vector<HypersimplexParams> campaign_pairs(const CampaignConfig& config) {
  if (config.d_min < 1) throw InvalidParams("d_min must be at least 1");
  if (config.d_max < config.d_min) throw InvalidParams("d_max must be at least d_min");
  std::vector<HypersimplexParams> pairs;
  for (int d = config.d_min; d <= config.d_max; ++d) {
    int lo = 2 * d;
    int hi = 2 * d;
    switch (config.grid) {
      case GridRule::paper:
        hi = d * d + 2 * d;
        break;
      case GridRule::diagonal:
        break;
      case GridRule::range:
        lo = std::max(config.n_min, 2 * d);
        hi = config.n_max;
        break;
    }
    for (int n = lo; n <= hi; ++n) pairs.emplace_back(d, n);
  }
  return pairs;
}

SolverConfig solver_config_for(const CampaignConfig& config, const HypersimplexParams& params) {
  SolverConfig solver = default_solver_config(params);
  if (config.tolerance) solver.tolerance = *config.tolerance;
  if (config.max_iterations) solver.max_iterations = *config.max_iterations;
  solver.seed = config.seed;
  return solver;
}

CampaignRow run_instance(const HypersimplexParams& params, const CampaignConfig& config) {
  CampaignRow row;
  row.d = params.d();
  row.n = params.n();
  row.degree = params.degree();
  const auto start = std::chrono::steady_clock::now();
  try {
    const RationalPolynomial poly = ehrhart_polynomial(params);
    if (config.certify) row.strip = verify_strip(params, poly);
    row.roots = find_roots(params, solver_config_for(config, params));
    const auto& roots = row.roots.roots;
    row.re_min = roots.front().real();
    row.re_max = roots.front().real();
    for (const auto& z : roots) {
      row.re_min = std::min(row.re_min, z.real());
      row.re_max = std::max(row.re_max, z.real());
      row.im_max = std::max(row.im_max, std::abs(z.imag()));
    }
    for (double r : row.roots.residuals) row.max_residual = std::max(row.max_residual, r);
    const double left = -static_cast<double>(row.n) / row.d;
    row.numeric_ok = row.roots.converged && row.re_min > left && row.re_max < 0.0;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

CampaignSummary summarize(const std::vector<CampaignRow>& rows, bool certify) {
  CampaignSummary s;
  s.rows = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      ++s.errors;
    } else if (!certify) {
      ++(row.numeric_ok ? s.numeric_only : s.failed);
    } else if (row.certified()) {
      ++s.certified;
    } else if (row.boundary()) {
      ++s.boundary;
    } else {
      ++s.failed;
    }
  }
  return s;
}

VerificationReport run_campaign(const CampaignConfig& config) {
  const auto pairs = campaign_pairs(config);
  std::vector<CampaignRow> rows(pairs.size());
  // Largest degree first keeps the dynamic schedule balanced; results land
  // in their own slot so the order never depends on the schedule.
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pairs[a].n() > pairs[b].n(); });
  const long count = static_cast<long>(order.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, config.threads))
  for (long k = 0; k < count; ++k) {
    const std::size_t i = order[static_cast<std::size_t>(k)];
    rows[i] = run_instance(pairs[i], config);
  }
  VerificationReport report{std::move(rows), {}};
  report.summary = summarize(report.rows, config.certify);
  return report;
}

VerificationReport run_campaign_serial(const CampaignConfig& config) {
  VerificationReport report;
  for (const auto& params : campaign_pairs(config)) report.rows.push_back(run_instance(params, config));
  report.summary = summarize(report.rows, config.certify);
  return report;
}

void write_campaign(const VerificationReport& report, const CampaignConfig& config) {
  namespace fs = std::filesystem;
  fs::create_directories(config.output_dir);
  {
    std::ofstream out(config.output_dir / "report.csv");
    write_report_csv(out, report, config.timings);
  }
  std::vector<RootRow> all;
  for (const auto& row : report.rows) {
    if (!row.error.empty()) continue;
    auto rows = root_rows(row.d, row.n, row.roots);
    all.insert(all.end(), rows.begin(), rows.end());
  }
  {
    std::ofstream out(config.output_dir / "roots.csv");
    write_roots_csv(out, all);
  }
  {
    const auto& s = report.summary;
    std::ofstream out(config.output_dir / "summary.txt");
    out << "rows=" << s.rows << " certified=" << s.certified << " failed=" << s.failed << " boundary=" << s.boundary
        << " numeric_only=" << s.numeric_only << " errors=" << s.errors << '\n';
    for (const auto& row : report.rows) {
      if (!row.error.empty()) out << "FAILURE d=" << row.d << " n=" << row.n << ": " << row.error << '\n';
    }
  }
  if (config.svg) (void)emit_svg(all, config.output_dir);
}

int campaign_exit_code(const VerificationReport& report, bool certify) {
  const auto& s = report.summary;
  if (s.errors > 0 || s.failed > 0 || s.boundary > 0) return 3;
  return certify ? 0 : 1;
}

}  // namespace hsr
