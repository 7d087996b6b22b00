#include "ppclab/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "ppclab/error.hpp"

namespace ppclab {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot write: " + path.string());
  return out;
}

struct Frame {
  // data ranges mapped onto the inner plot rectangle
  double x0, x1, y0, y1;
  static constexpr double width = 640, height = 480;
  static constexpr double ml = 64, mr = 16, mt = 16, mb = 44;

  double px(double x) const {
    const double span = x1 > x0 ? x1 - x0 : 1.0;
    return ml + (x - x0) / span * (width - ml - mr);
  }
  double py(double y) const {
    const double span = y1 > y0 ? y1 - y0 : 1.0;
    return height - mb - (y - y0) / span * (height - mt - mb);
  }
};

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void write_axes(std::ofstream& out, const Frame& f, const std::string& xlabel,
                const std::string& ylabel) {
  out << "  <g id=\"axes\" stroke=\"#333\" fill=\"#333\" font-size=\"12\" "
         "font-family=\"sans-serif\">\n";
  out << "    <line x1=\"" << f.px(f.x0) << "\" y1=\"" << f.py(f.y0) << "\" x2=\"" << f.px(f.x1)
      << "\" y2=\"" << f.py(f.y0) << "\"/>\n";
  out << "    <line x1=\"" << f.px(f.x0) << "\" y1=\"" << f.py(f.y0) << "\" x2=\"" << f.px(f.x0)
      << "\" y2=\"" << f.py(f.y1) << "\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double tx = f.x0 + (f.x1 - f.x0) * i / 4.0;
    const double ty = f.y0 + (f.y1 - f.y0) * i / 4.0;
    out << "    <line x1=\"" << f.px(tx) << "\" y1=\"" << f.py(f.y0) << "\" x2=\"" << f.px(tx)
        << "\" y2=\"" << f.py(f.y0) + 4 << "\"/>\n";
    out << "    <text x=\"" << f.px(tx) << "\" y=\"" << f.py(f.y0) + 18
        << "\" text-anchor=\"middle\" stroke=\"none\">" << fmt_tick(tx) << "</text>\n";
    out << "    <line x1=\"" << f.px(f.x0) - 4 << "\" y1=\"" << f.py(ty) << "\" x2=\""
        << f.px(f.x0) << "\" y2=\"" << f.py(ty) << "\"/>\n";
    out << "    <text x=\"" << f.px(f.x0) - 7 << "\" y=\"" << f.py(ty) + 4
        << "\" text-anchor=\"end\" stroke=\"none\">" << fmt_tick(ty) << "</text>\n";
  }
  out << "    <text x=\"" << (Frame::ml + Frame::width - Frame::mr) / 2 << "\" y=\""
      << Frame::height - 8 << "\" text-anchor=\"middle\" stroke=\"none\">" << xlabel
      << "</text>\n";
  out << "    <text x=\"14\" y=\"" << (Frame::mt + Frame::height - Frame::mb) / 2
      << "\" text-anchor=\"middle\" stroke=\"none\" transform=\"rotate(-90 14 "
      << (Frame::mt + Frame::height - Frame::mb) / 2 << ")\">" << ylabel << "</text>\n";
  out << "  </g>\n";
}

void svg_open(std::ofstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Frame::width << "\" height=\""
      << Frame::height << "\" viewBox=\"0 0 " << Frame::width << " " << Frame::height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_paircorr_csv(const std::filesystem::path& path,
                        const std::vector<PairCorrCurve>& per_alpha,
                        const PairCorrCurve& mean_curve) {
  if (mean_curve.s_grid.empty()) fail(errc::domain_error, "write_paircorr_csv: empty curve");
  auto out = open_out(path);
  out << "s";
  for (std::size_t a = 0; a < per_alpha.size(); ++a) out << ",alpha_" << a;
  out << ",mean,reference\n";
  for (std::size_t i = 0; i < mean_curve.s_grid.size(); ++i) {
    out << format_double(mean_curve.s_grid[i]);
    for (const auto& curve : per_alpha) out << "," << format_double(curve.r2[i]);
    out << "," << format_double(mean_curve.r2[i]) << ","
        << format_double(mean_curve.reference[i]) << "\n";
  }
}

void write_energy_csv(const std::filesystem::path& path, const EnergyReport& report) {
  auto out = open_out(path);
  out << "N,count\n";
  for (std::size_t i = 0; i < report.ns.size(); ++i)
    out << report.ns[i] << "," << report.counts[i] << "\n";
}

void write_energy_json(const std::filesystem::path& path, const EnergyReport& report) {
  nlohmann::json j;
  j["slope"] = report.slope;
  j["slope_stderr"] = report.slope_stderr;
  j["gamma"] = report.gamma;
  nlohmann::json subset = nlohmann::json::array();
  for (std::size_t l : report.subset) subset.push_back(l + 1);  // 1-based for humans
  j["subset"] = subset;
  j["ns"] = report.ns;
  j["counts"] = report.counts;
  auto out = open_out(path);
  out << j.dump(2) << "\n";
}

void write_variance_csv(const std::filesystem::path& path,
                        const std::vector<VarianceEstimate>& estimates) {
  auto out = open_out(path);
  out << "N,var_stat,stderr\n";
  for (const auto& e : estimates)
    out << e.n << "," << format_double(e.var_stat) << "," << format_double(e.std_error) << "\n";
}

void write_variance_json(const std::filesystem::path& path,
                         const std::vector<VarianceEstimate>& estimates) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : estimates) {
    nlohmann::json j;
    j["N"] = e.n;
    j["r"] = e.r;
    j["s"] = e.s;
    j["samples"] = e.samples;
    j["mean_stat"] = e.mean_stat;
    j["var_stat"] = e.var_stat;
    j["stderr"] = e.std_error;
    j["seed"] = e.seed;
    arr.push_back(j);
  }
  auto out = open_out(path);
  out << arr.dump(2) << "\n";
}

void emit_plot(const PairCorrCurve& curve, const std::filesystem::path& path) {
  if (curve.s_grid.empty()) fail(errc::domain_error, "emit_plot: empty curve");
  Frame f{};
  f.x0 = 0.0;
  f.x1 = curve.s_grid.back() * 1.05;
  f.y0 = 0.0;
  double ymax = 0.0;
  for (double v : curve.r2) ymax = std::max(ymax, v);
  for (double v : curve.reference) ymax = std::max(ymax, v);
  f.y1 = ymax > 0 ? ymax * 1.05 : 1.0;

  auto out = open_out(path);
  svg_open(out);
  write_axes(out, f, "s", "R2");
  out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < curve.s_grid.size(); ++i)
    out << f.px(curve.s_grid[i]) << "," << f.py(curve.r2[i]) << " ";
  out << "\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6 3\" points=\"";
  for (std::size_t i = 0; i < curve.s_grid.size(); ++i)
    out << f.px(curve.s_grid[i]) << "," << f.py(curve.reference[i]) << " ";
  out << "\"/>\n";
  out << "</svg>\n";
}

void emit_plot(const EnergyReport& report, const std::filesystem::path& path) {
  if (report.ns.empty()) fail(errc::domain_error, "emit_plot: empty report");
  Frame f{};
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < report.ns.size(); ++i) {
    lx.push_back(std::log10(static_cast<double>(report.ns[i])));
    ly.push_back(std::log10(static_cast<double>(report.counts[i])));
  }
  f.x0 = *std::min_element(lx.begin(), lx.end()) - 0.1;
  f.x1 = *std::max_element(lx.begin(), lx.end()) + 0.1;
  f.y0 = *std::min_element(ly.begin(), ly.end()) - 0.2;
  f.y1 = *std::max_element(ly.begin(), ly.end()) + 0.2;

  auto out = open_out(path);
  svg_open(out);
  write_axes(out, f, "log10 N", "log10 count");
  for (std::size_t i = 0; i < lx.size(); ++i)
    out << "  <circle cx=\"" << f.px(lx[i]) << "\" cy=\"" << f.py(ly[i])
        << "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";
  // fitted line, anchored at the centroid (log10 slope equals the ln slope)
  const double mx = (lx.front() + lx.back()) / 2.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) my += ly[i] - report.slope * (lx[i] - mx);
  my /= static_cast<double>(lx.size());
  out << "  <line x1=\"" << f.px(f.x0) << "\" y1=\"" << f.py(my + report.slope * (f.x0 - mx))
      << "\" x2=\"" << f.px(f.x1) << "\" y2=\"" << f.py(my + report.slope * (f.x1 - mx))
      << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  char legend[96];
  std::snprintf(legend, sizeof legend, "slope=%.3f±%.3f", report.slope, report.slope_stderr);
  out << "  <text x=\"" << Frame::ml + 12 << "\" y=\"" << Frame::mt + 18
      << "\" font-size=\"14\" font-family=\"sans-serif\" fill=\"#333\">" << legend
      << "</text>\n";
  out << "</svg>\n";
}

}  // namespace ppclab
