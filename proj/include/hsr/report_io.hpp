#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hsr/root_solver.hpp"

namespace hsr {

struct VerificationReport;

/// Shortest round-trip form: 17 significant digits, "-0" printed as "0".
[[nodiscard]] std::string format_double(double x);

struct RootRow {
  int d = 0;
  int n = 0;
  int index = 0;
  double re = 0.0;
  double im = 0.0;
  double residual = 0.0;
};

inline constexpr const char* kRootsHeader = "d,n,root_index,re,im,residual";
inline constexpr const char* kReportHeader = "d,n,degree,certified,re_min,re_max,im_max,max_residual,millis";

/// Roots sorted by (re, im) and numbered from 0.
[[nodiscard]] std::vector<RootRow> root_rows(int d, int n, const RootSet& roots);

void write_root_rows(std::ostream& out, const std::vector<RootRow>& rows);
void write_roots_csv(std::ostream& out, const std::vector<RootRow>& rows);
void write_report_csv(std::ostream& out, const VerificationReport& report, bool timings);

/// Parses a roots.csv (header required).  Throws DomainViolation on a
/// malformed line.
[[nodiscard]] std::vector<RootRow> read_roots_csv(std::istream& in);

/// Scatter of one group of roots with dashed lines at Re = 0 and
/// Re = -n/d for the largest n present.  An empty group gives axes only.
[[nodiscard]] std::string render_svg(const std::vector<RootRow>& rows, const std::string& title);

/// One roots_d<d>.svg per d found in rows, or a single roots_empty.svg.
/// Returns the files written.
std::vector<std::filesystem::path> emit_svg(const std::vector<RootRow>& rows, const std::filesystem::path& out_dir);

}  // namespace hsr
