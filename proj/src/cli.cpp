#include "hsr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "hsr/bound_lab.hpp"
#include "hsr/campaign.hpp"
#include "hsr/ehrhart.hpp"
#include "hsr/error.hpp"
#include "hsr/lattice_oracle.hpp"
#include "hsr/report_io.hpp"
#include "hsr/root_solver.hpp"
#include "hsr/stability.hpp"

namespace hsr {

namespace {

using json = nlohmann::json;

enum class Format { plain, csv, json };

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
const std::map<std::string, GridRule> kGrids{
    {"paper", GridRule::paper}, {"diagonal", GridRule::diagonal}, {"range", GridRule::range}};

std::string q_string(const mpq_class& q) { return q.get_str(); }

int default_threads() {
  if (const char* env = std::getenv("HSR_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string verify_word(const StripVerdict& v) {
  using S = StabilityVerdict::Status;
  if (v.overall) return "CERTIFIED";
  if (v.left_ok.status == S::Boundary || v.right_ok.status == S::Boundary) return "BOUNDARY";
  if (!v.left_ok.stable() && !v.right_ok.stable()) return "FAILED(left,right)";
  return v.left_ok.stable() ? "FAILED(right)" : "FAILED(left)";
}

json verdict_json(const StabilityVerdict& v) {
  json j{{"status", to_string(v.status)}};
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

struct Options {
  int d = 0;
  int n = 0;
  long m = 0;
  int s = 1;
  bool strict = false;
  Format format = Format::plain;
  std::string out;
  double tolerance = 0.0;
  int max_iter = 0;
  std::uint64_t seed = 0;
  int samples = 2001;
  std::string edge = "imaginary";
  double lambda = std::sqrt(2.0);
  double alpha = 0.0;
  std::optional<double> lo;
  std::optional<double> hi;
  int d_min = 4;
  int d_max = 7;
  int n_min = 2;
  int n_max = 2;
  GridRule grid = GridRule::paper;
  int threads = 1;
  bool certify = false;
  bool timings = false;
  bool no_svg = false;
  std::string config;
  std::string input;
};

void print_lemma(std::ostream& out, Format format, const std::string& name, const LemmaCheck& c) {
  if (format == Format::json) {
    out << json{{"check", name},
                {"passed", c.passed},
                {"samples", c.samples},
                {"degenerate", c.degenerate},
                {"worst_ratio", c.worst_ratio},
                {"worst_beta", c.worst_beta}}
               .dump()
        << '\n';
    return;
  }
  out << "samples=" << c.samples << ", degenerate=" << c.degenerate << ", worst_ratio=" << format_double(c.worst_ratio)
      << " at beta=" << format_double(c.worst_beta) << ", " << (c.passed ? "PASS" : "FAIL") << '\n';
}

CampaignConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainViolation("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainViolation("config file " + path + ": " + e.what());
  }
  CampaignConfig c;
  try {
    if (j.contains("d_min")) c.d_min = j.at("d_min").get<int>();
    if (j.contains("d_max")) c.d_max = j.at("d_max").get<int>();
    if (j.contains("n_min")) c.n_min = j.at("n_min").get<int>();
    if (j.contains("n_max")) c.n_max = j.at("n_max").get<int>();
    if (j.contains("grid")) {
      const auto it = kGrids.find(j.at("grid").get<std::string>());
      if (it == kGrids.end()) throw DomainViolation("config grid must be paper, diagonal or range");
      c.grid = it->second;
    }
    if (j.contains("tolerance")) c.tolerance = j.at("tolerance").get<double>();
    if (j.contains("max_iter")) c.max_iterations = j.at("max_iter").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("certify")) c.certify = j.at("certify").get<bool>();
    if (j.contains("timings")) c.timings = j.at("timings").get<bool>();
    if (j.contains("svg")) c.svg = j.at("svg").get<bool>();
    if (j.contains("out")) c.output_dir = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw DomainViolation("config file " + path + ": " + e.what());
  }
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart polynomials of hypersimplices: construction, roots and root-strip certificates", "hsr"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();

  auto add_dn = [&o](CLI::App* sub) {
    sub->add_option("--d", o.d, "Subset size d")->required();
    sub->add_option("--n", o.n, "Ambient dimension n")->required();
  };
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "plain, csv or json")->transform(CLI::CheckedTransformer(kFormats));
  };
  auto add_solver = [&o](CLI::App* sub) {
    sub->add_option("--tolerance", o.tolerance, "Solver relative residual bound")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", o.max_iter, "Solver iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for the initial approximations");
  };

  auto* poly = app.add_subcommand("poly", "Exact coefficients of i(Delta(d, n), m), lowest degree first");
  add_dn(poly);
  add_format(poly);

  auto* count = app.add_subcommand("count", "Lattice points of m Delta(d, n) by dynamic programming");
  add_dn(count);
  count->add_option("--m", o.m, "Dilation")->required();
  count->add_flag("--strict", o.strict, "Count relative-interior points");
  add_format(count);

  auto* roots = app.add_subcommand("roots", "All complex roots as CSV");
  add_dn(roots);
  add_solver(roots);
  add_format(roots);
  roots->add_option("--out", o.out, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Exact Routh-Hurwitz certificate for -n/d < Re < 0");
  add_dn(verify);
  add_format(verify);

  auto* bounds = app.add_subcommand("bounds", "Sampled checks of the ratio bounds");
  bounds->require_subcommand(1);
  auto* migi = bounds->add_subcommand("migi", "phi_{n+1} < phi_n on the imaginary axis");
  auto* hidari = bounds->add_subcommand("hidari", "phi_{n+d} < phi_n on Re z = -n/d");
  auto* aida = bounds->add_subcommand("aida", "phi_n at -alpha + i lambda n against its bound");
  auto* rouche = bounds->add_subcommand("rouche", "max of sum_s phi_s along one rectangle edge");
  auto* d4sum = bounds->add_subcommand("d4sum", "Partial exponential sum and ratio bound, d >= 4");
  auto* hneg = bounds->add_subcommand("hneg", "h(d, s) < 0 for 1 <= s <= d - 2, d >= 4");
  for (auto* sub : {migi, hidari, aida}) {
    add_dn(sub);
    sub->add_option("--s", o.s, "Term index, 1 <= s <= d - 1")->required();
    add_format(sub);
  }
  aida->add_option("--alpha", o.alpha, "alpha in [0, n/d]");
  aida->add_option("--lambda", o.lambda, "Height multiplier, Im z = lambda n");
  add_dn(rouche);
  rouche->add_option("--edge", o.edge, "imaginary, left, top or bottom")
      ->check(CLI::IsMember({"imaginary", "left", "top", "bottom", "horizontal"}));
  rouche->add_option("--samples", o.samples, "Sample count")->check(CLI::Range(2, 100'000'000));
  rouche->add_option("--lambda", o.lambda, "Height multiplier of the horizontal edges");
  rouche->add_option("--lo", o.lo, "Start of the edge parameter range");
  rouche->add_option("--hi", o.hi, "End of the edge parameter range");
  add_format(rouche);
  for (auto* sub : {d4sum, hneg}) {
    sub->add_option("--d", o.d, "d >= 4")->required();
    add_format(sub);
  }

  auto* campaign = app.add_subcommand("campaign", "Certify and solve every pair of a grid; writes CSV and SVG");
  campaign->add_option("--d-min", o.d_min, "Smallest d");
  campaign->add_option("--d-max", o.d_max, "Largest d");
  campaign->add_option("--n-min", o.n_min, "Smallest n (range grid)");
  campaign->add_option("--n-max", o.n_max, "Largest n (range grid)");
  campaign->add_option("--grid", o.grid, "paper, diagonal or range")->transform(CLI::CheckedTransformer(kGrids));
  add_solver(campaign);
  campaign->add_option("--threads", o.threads, "Worker threads (default $HSR_THREADS)")->check(CLI::PositiveNumber);
  campaign->add_flag("--certify", o.certify, "Run the exact Routh-Hurwitz tests");
  campaign->add_flag("--timings", o.timings, "Record wall time in report.csv");
  campaign->add_flag("--no-svg", o.no_svg, "Skip the SVG scatter plots");
  campaign->add_option("--out", o.out, "Output directory");
  campaign->add_option("--config", o.config, "JSON file with the same keys; flags win");
  add_format(campaign);

  auto* plot = app.add_subcommand("plot", "One SVG scatter per d from a roots CSV");
  plot->add_option("input", o.input, "roots.csv")->required();
  plot->add_option("--out", o.out, "Output directory")->required();

  std::vector<const char*> argv{"hsr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (poly->parsed()) {
      const HypersimplexParams params(o.d, o.n);
      const auto p = ehrhart_polynomial(params);
      if (o.format == Format::json) {
        json coeffs = json::array();
        for (const auto& c : p.coefficients()) coeffs.push_back(q_string(c));
        out << json{{"d", o.d}, {"n", o.n}, {"coefficients", coeffs}}.dump() << '\n';
      } else if (o.format == Format::csv) {
        out << "k,coefficient\n";
        for (std::size_t k = 0; k < p.coefficients().size(); ++k) out << k << ',' << q_string(p.coefficients()[k]) << '\n';
      } else {
        out << p.to_string() << '\n';
      }
      return kExitOk;
    }

    if (count->parsed()) {
      const mpz_class c = count_points({o.d, o.n, o.m, o.strict});
      if (o.format == Format::json) {
        out << json{{"d", o.d}, {"n", o.n}, {"m", o.m}, {"strict", o.strict}, {"count", c.get_str()}}.dump() << '\n';
      } else if (o.format == Format::csv) {
        out << "d,n,m,strict,count\n" << o.d << ',' << o.n << ',' << o.m << ',' << (o.strict ? "true" : "false") << ','
            << c.get_str() << '\n';
      } else {
        out << c.get_str() << '\n';
      }
      return kExitOk;
    }

    if (roots->parsed()) {
      const HypersimplexParams params(o.d, o.n);
      SolverConfig config = default_solver_config(params);
      if (roots->count("--tolerance")) config.tolerance = o.tolerance;
      if (roots->count("--max-iter")) config.max_iterations = o.max_iter;
      config.seed = o.seed;
      const RootSet set = find_roots(params, config);
      const auto rows = root_rows(o.d, o.n, set);
      std::ofstream file;
      if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw DomainViolation("cannot write " + o.out);
      }
      std::ostream& sink = o.out.empty() ? out : file;
      if (o.format == Format::json) {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back({{"d", r.d}, {"n", r.n}, {"root_index", r.index}, {"re", r.re}, {"im", r.im}, {"residual", r.residual}});
        }
        sink << json{{"converged", set.converged}, {"iterations", set.iterations}, {"roots", arr}}.dump() << '\n';
      } else {
        write_roots_csv(sink, rows);
      }
      if (!set.converged) {
        err << "solver did not converge after " << set.iterations << " iterations\n";
        return kExitFailed;
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const HypersimplexParams params(o.d, o.n);
      const StripVerdict v = verify_strip(params);
      if (o.format == Format::json) {
        out << json{{"d", o.d}, {"n", o.n}, {"result", verify_word(v)}, {"left", verdict_json(v.left_ok)},
                    {"right", verdict_json(v.right_ok)}}
                   .dump()
            << '\n';
      } else {
        out << verify_word(v) << '\n';
      }
      return v.overall ? kExitOk : kExitFailed;
    }

    if (bounds->parsed()) {
      if (migi->parsed() || hidari->parsed()) {
        const auto grid = default_beta_grid(o.n);
        const LemmaCheck c = migi->parsed() ? check_migi(o.n, o.d, o.s, grid) : check_hidari(o.n, o.d, o.s, grid);
        print_lemma(out, o.format, migi->parsed() ? "migi" : "hidari", c);
        return c.passed ? kExitOk : kExitFailed;
      }
      if (aida->parsed()) {
        const AidaCheck c = check_aida(o.n, o.d, o.s, o.alpha, o.lambda);
        if (o.format == Format::json) {
          out << json{{"check", "aida"}, {"passed", c.passed}, {"phi", c.phi}, {"bound", c.bound}}.dump() << '\n';
        } else {
          out << "phi=" << format_double(c.phi) << ", bound=" << format_double(c.bound) << ", "
              << (c.passed ? "PASS" : "FAIL") << '\n';
        }
        return c.passed ? kExitOk : kExitFailed;
      }
      if (rouche->parsed()) {
        ContourSpec spec;
        spec.d = o.d;
        spec.n = o.n;
        spec.samples = o.samples;
        spec.lambda = o.lambda;
        if (o.edge == "imaginary" || o.edge == "left") {
          spec.kind = o.edge == "left" ? ContourSpec::Kind::left_edge : ContourSpec::Kind::imaginary_axis;
          spec.range_lo = o.lo.value_or(-10.0 * o.n);
          spec.range_hi = o.hi.value_or(10.0 * o.n);
        } else {
          spec.kind = ContourSpec::Kind::horizontal_edge;
          if (o.edge == "bottom") spec.lambda = -spec.lambda;
          spec.range_lo = o.lo.value_or(0.0);
          spec.range_hi = o.hi.value_or(static_cast<double>(o.n) / o.d);
        }
        const MarginReport r = rouche_margin(spec);
        if (o.format == Format::json) {
          out << json{{"check", "rouche"},     {"edge", o.edge},
                      {"max_ratio", r.max_ratio}, {"argmax_re", r.argmax_point.real()},
                      {"argmax_im", r.argmax_point.imag()}, {"nudged", r.nudged},
                      {"passed", r.passed}}
                     .dump()
              << '\n';
        } else {
          out << "max_ratio=" << format_double(r.max_ratio) << " at " << format_double(r.argmax_point.real())
              << (r.argmax_point.imag() < 0 ? "-" : "+") << format_double(std::abs(r.argmax_point.imag())) << "i"
              << (r.nudged ? ", nudged=" + std::to_string(r.nudged) : "") << ", " << (r.passed ? "PASS" : "FAIL")
              << '\n';
        }
        return r.passed ? kExitOk : kExitFailed;
      }
      if (d4sum->parsed()) {
        const D4SumCheck c = check_d4_sum_bound(o.d);
        if (o.format == Format::json) {
          out << json{{"check", "d4sum"},
                      {"passed", c.passed},
                      {"partial_sum", c.partial_sum.get_d()},
                      {"exp_lower", c.exp_lower.get_d()},
                      {"exp_upper", c.exp_upper.get_d()},
                      {"ratio", q_string(c.ratio)}}
                     .dump()
              << '\n';
        } else {
          out << "partial_sum=" << format_double(c.partial_sum.get_d())
              << ", e^(2/3)-1 in [" << format_double(c.exp_lower.get_d()) << ", " << format_double(c.exp_upper.get_d())
              << "], ratio=" << q_string(c.ratio) << ", " << (c.passed ? "PASS" : "FAIL") << '\n';
        }
        return c.passed ? kExitOk : kExitFailed;
      }
      if (hneg->parsed()) {
        const HCheck c = check_h_negative(o.d);
        if (o.format == Format::json) {
          out << json{{"check", "hneg"}, {"passed", c.passed}, {"h", c.values},
                      {"endpoint_bound", q_string(c.endpoint_bound)}}
                     .dump()
              << '\n';
        } else {
          out << "h(d,1)=" << format_double(c.values.front()) << ", h(d,d-2)=" << format_double(c.values.back())
              << ", endpoint_bound=" << q_string(c.endpoint_bound) << ", " << (c.passed ? "PASS" : "FAIL") << '\n';
        }
        return c.passed ? kExitOk : kExitFailed;
      }
    }

    if (campaign->parsed()) {
      CampaignConfig c = o.config.empty() ? CampaignConfig{} : load_config_file(o.config);
      if (o.config.empty()) c.threads = o.threads;
      if (campaign->count("--d-min")) c.d_min = o.d_min;
      if (campaign->count("--d-max")) c.d_max = o.d_max;
      if (campaign->count("--n-min")) c.n_min = o.n_min;
      if (campaign->count("--n-max")) c.n_max = o.n_max;
      if (campaign->count("--grid")) c.grid = o.grid;
      if (campaign->count("--tolerance")) c.tolerance = o.tolerance;
      if (campaign->count("--max-iter")) c.max_iterations = o.max_iter;
      if (campaign->count("--seed")) c.seed = o.seed;
      if (campaign->count("--threads")) c.threads = o.threads;
      if (campaign->count("--certify")) c.certify = true;
      if (campaign->count("--timings")) c.timings = true;
      if (campaign->count("--no-svg")) c.svg = false;
      if (campaign->count("--out")) c.output_dir = o.out;
      if (c.threads < 1) throw InvalidParams("threads must be positive");

      const VerificationReport report = run_campaign(c);
      write_campaign(report, c);
      const auto& s = report.summary;
      if (o.format == Format::json) {
        out << json{{"rows", s.rows},     {"certified", s.certified},       {"failed", s.failed},
                    {"boundary", s.boundary}, {"numeric_only", s.numeric_only}, {"errors", s.errors}}
                   .dump()
            << '\n';
      } else {
        out << "rows=" << s.rows << " certified=" << s.certified << " failed=" << s.failed
            << " boundary=" << s.boundary << " numeric_only=" << s.numeric_only << " errors=" << s.errors << '\n';
      }
      for (const auto& row : report.rows) {
        if (!row.error.empty()) err << "FAILURE d=" << row.d << " n=" << row.n << ": " << row.error << '\n';
      }
      return campaign_exit_code(report, c.certify);
    }

    if (plot->parsed()) {
      std::ifstream in(o.input);
      if (!in) throw DomainViolation("cannot open " + o.input);
      for (const auto& path : emit_svg(read_roots_csv(in), o.out)) out << path.string() << '\n';
      return kExitOk;
    }
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ConjectureDomain& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidTermIndex& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitInvalid;
}

}  // namespace hsr
