#include "hsr/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "hsr/campaign.hpp"
#include "hsr/error.hpp"

namespace hsr {

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<RootRow> root_rows(int d, int n, const RootSet& roots) {
  std::vector<RootRow> rows;
  rows.reserve(roots.roots.size());
  for (std::size_t k = 0; k < roots.roots.size(); ++k) {
    const double residual = k < roots.residuals.size() ? roots.residuals[k] : 0.0;
    rows.push_back({d, n, 0, roots.roots[k].real(), roots.roots[k].imag(), residual});
  }
  std::sort(rows.begin(), rows.end(), [](const RootRow& a, const RootRow& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k].index = static_cast<int>(k);
  return rows;
}

void write_root_rows(std::ostream& out, const std::vector<RootRow>& rows) {
  for (const auto& r : rows) {
    out << r.d << ',' << r.n << ',' << r.index << ',' << format_double(r.re) << ',' << format_double(r.im) << ','
        << format_double(r.residual) << '\n';
  }
}

void write_roots_csv(std::ostream& out, const std::vector<RootRow>& rows) {
  out << kRootsHeader << '\n';
  write_root_rows(out, rows);
}

void write_report_csv(std::ostream& out, const VerificationReport& report, bool timings) {
  out << kReportHeader << '\n';
  for (const auto& row : report.rows) {
    out << row.d << ',' << row.n << ',' << row.degree << ',';
    if (!row.error.empty()) {
      out << "error,nan,nan,nan,nan,";
    } else {
      out << (row.strip ? (row.strip->overall ? "true" : "false") : "skipped") << ',' << format_double(row.re_min)
          << ',' << format_double(row.re_max) << ',' << format_double(row.im_max) << ','
          << format_double(row.max_residual) << ',';
    }
    out << (timings ? format_double(std::round(row.millis * 1000.0) / 1000.0) : "0") << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

template <class T>
T parse(const std::string& field, std::size_t line_no) {
  T value{};
  if constexpr (std::is_same_v<T, double>) {
    try {
      std::size_t used = 0;
      value = std::stod(field, &used);
      if (used == field.size()) return value;
    } catch (const std::exception&) {
    }
  } else {
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc() && ptr == field.data() + field.size()) return value;
  }
  throw DomainViolation("roots csv line " + std::to_string(line_no) + ": bad field '" + field + "'");
}

}  // namespace

std::vector<RootRow> read_roots_csv(std::istream& in) {
  std::vector<RootRow> rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRootsHeader) throw DomainViolation("roots csv header must be '" + std::string(kRootsHeader) + "'");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 6) throw DomainViolation("roots csv line " + std::to_string(line_no) + ": expected 6 fields");
    rows.push_back({parse<int>(f[0], line_no), parse<int>(f[1], line_no), parse<int>(f[2], line_no),
                    parse<double>(f[3], line_no), parse<double>(f[4], line_no), parse<double>(f[5], line_no)});
  }
  return rows;
}

std::string render_svg(const std::vector<RootRow>& rows, const std::string& title) {
  constexpr double kWidth = 640;
  constexpr double kHeight = 480;
  constexpr double kPad = 48;

  double x_lo = -1.0;
  double x_hi = 0.5;
  double y_hi = 1.0;
  double left_line = 0.0;
  bool has_left = false;
  int n_max = 0;
  for (const auto& r : rows) {
    if (r.n > n_max) {
      n_max = r.n;
      left_line = -static_cast<double>(r.n) / r.d;
      has_left = true;
    }
  }
  if (has_left) x_lo = std::min(x_lo, left_line);
  for (const auto& r : rows) {
    x_lo = std::min(x_lo, r.re);
    x_hi = std::max(x_hi, r.re);
    y_hi = std::max(y_hi, std::abs(r.im));
  }
  const double x_span = x_hi - x_lo;
  x_lo -= 0.05 * x_span;
  x_hi += 0.05 * x_span;
  y_hi *= 1.05;
  auto sx = [&](double x) { return kPad + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kPad); };
  auto sy = [&](double y) { return kHeight / 2 - y / y_hi * (kHeight / 2 - kPad); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kPad << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
  // Axes: real axis at Im = 0, imaginary axis wherever Re = 0 lands.
  svg << "<line class=\"axis\" x1=\"" << num(kPad) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(kWidth - kPad)
      << "\" y2=\"" << num(sy(0)) << "\" stroke=\"black\"/>\n";
  svg << "<line class=\"axis\" x1=\"" << num(sx(0)) << "\" y1=\"" << num(kPad) << "\" x2=\"" << num(sx(0))
      << "\" y2=\"" << num(kHeight - kPad) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << num(kWidth - kPad) << "\" y=\"" << num(sy(0) - 6) << "\" font-size=\"11\">Re</text>\n";
  svg << "<text x=\"" << num(sx(0) + 4) << "\" y=\"" << num(kPad - 4) << "\" font-size=\"11\">Im "
      << num(y_hi) << "</text>\n";
  if (has_left) {
    svg << "<line class=\"strip\" x1=\"" << num(sx(left_line)) << "\" y1=\"" << num(kPad) << "\" x2=\""
        << num(sx(left_line)) << "\" y2=\"" << num(kHeight - kPad)
        << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    svg << "<text x=\"" << num(sx(left_line) + 4) << "\" y=\"" << num(kHeight - kPad + 14)
        << "\" font-size=\"11\">Re=" << num(left_line) << "</text>\n";
  }
  for (const auto& r : rows) {
    svg << "<circle cx=\"" << num(sx(r.re)) << "\" cy=\"" << num(sy(r.im)) << "\" r=\"1.5\" fill=\"steelblue\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::filesystem::path> emit_svg(const std::vector<RootRow>& rows, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    written.push_back(path);
  };
  if (rows.empty()) {
    write(out_dir / "roots_empty.svg", render_svg({}, "no roots"));
    return written;
  }
  std::map<int, std::vector<RootRow>> by_d;
  for (const auto& r : rows) by_d[r.d].push_back(r);
  for (const auto& [d, group] : by_d) {
    write(out_dir / ("roots_d" + std::to_string(d) + ".svg"), render_svg(group, "roots, d = " + std::to_string(d)));
  }
  return written;
}

}  // namespace hsr
