#include "ppclab/sequences.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "ppclab/error.hpp"

namespace ppclab {

std::vector<double> SequenceMatrix::column(std::size_t col) const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i, col);
  return out;
}

SequenceMatrix SequenceMatrix::head(std::size_t rows) const {
  if (rows > n) fail(errc::domain_error, "head: requested more rows than available");
  SequenceMatrix out = *this;
  out.n = rows;
  out.values.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(rows * dim));
  return out;
}

SequenceMatrix gen_power(std::span<const double> thetas, std::size_t count, std::size_t n0) {
  if (count < 1) fail(errc::domain_error, "gen_power: count must be >= 1");
  if (n0 < 1) fail(errc::domain_error, "gen_power: n0 must be >= 1");
  if (thetas.empty()) fail(errc::domain_error, "gen_power: need at least one exponent");
  for (double th : thetas)
    if (!(th > 0.0)) fail(errc::domain_error, "gen_power: exponents must be positive");

  SequenceMatrix x;
  x.n = count;
  x.dim = thetas.size();
  x.family = SeqFamily::power;
  x.thetas.assign(thetas.begin(), thetas.end());
  x.n0 = n0;
  x.values.resize(count * x.dim);
  for (std::size_t i = 0; i < count; ++i) {
    const double m = static_cast<double>(n0 + i);
    for (std::size_t l = 0; l < x.dim; ++l) x.at(i, l) = std::pow(m, thetas[l]);
  }
  return x;
}

SequenceMatrix gen_nlog(double a, std::size_t count, std::size_t n0) {
  if (count < 1) fail(errc::domain_error, "gen_nlog: count must be >= 1");
  if (!(a >= 1.0)) fail(errc::domain_error, "gen_nlog: exponent A must be >= 1");
  if (n0 < 2) fail(errc::domain_error, "gen_nlog: n0 must be >= 2 (n log^A n vanishes at n=1)");

  SequenceMatrix x;
  x.n = count;
  x.dim = 2;
  x.family = SeqFamily::nlog;
  x.log_power = a;
  x.n0 = n0;
  x.values.resize(count * 2);
  for (std::size_t i = 0; i < count; ++i) {
    const double m = static_cast<double>(n0 + i);
    x.at(i, 0) = m;
    x.at(i, 1) = m * std::pow(std::log(m), a);
  }
  return x;
}

namespace {

void validate_columns(const SequenceMatrix& x, const std::string& origin) {
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t l = 0; l < x.dim; ++l)
      if (!std::isfinite(x.at(i, l)))
        fail(errc::parse_error, origin + ": non-finite value at row " + std::to_string(i + 1));
  for (std::size_t l = 0; l < x.dim; ++l)
    for (std::size_t i = 0; i + 1 < x.n; ++i)
      if (!(x.at(i + 1, l) > x.at(i, l)))
        fail(errc::column_not_increasing,
             origin + ": column " + std::to_string(l + 1) + " not strictly increasing at row " +
                 std::to_string(i + 2));
}

}  // namespace

SequenceMatrix load_sequence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open sequence file: " + path.string());

  SequenceMatrix x;
  x.family = SeqFamily::file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    const char* p = line.c_str();
    while (true) {
      char* end = nullptr;
      errno = 0;
      double v = std::strtod(p, &end);
      if (end == p || errno == ERANGE)
        fail(errc::parse_error,
             path.string() + ": malformed row " + std::to_string(lineno));
      row.push_back(v);
      while (*end == ' ' || *end == '\t') ++end;
      if (*end == '\0') break;
      if (*end != ',')
        fail(errc::parse_error,
             path.string() + ": malformed row " + std::to_string(lineno));
      p = end + 1;
    }
    if (x.dim == 0) x.dim = row.size();
    if (row.size() != x.dim)
      fail(errc::parse_error,
           path.string() + ": row " + std::to_string(lineno) + " has " +
               std::to_string(row.size()) + " fields, expected " + std::to_string(x.dim));
    x.values.insert(x.values.end(), row.begin(), row.end());
    ++x.n;
  }
  if (x.n == 0) fail(errc::parse_error, path.string() + ": empty sequence file");
  validate_columns(x, path.string());
  return x;
}

void save_sequence(const SequenceMatrix& x, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io_error, "cannot write sequence file: " + path.string());
  char buf[64];
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t l = 0; l < x.dim; ++l) {
      std::snprintf(buf, sizeof buf, "%.17g", x.at(i, l));
      out << buf << (l + 1 < x.dim ? "," : "");
    }
    out << '\n';
  }
  if (!out) fail(errc::io_error, "write failed: " + path.string());
}

SpacingCertificate check_spacing(const SequenceMatrix& x, double c) {
  if (!(c > 0.0)) fail(errc::domain_error, "check_spacing: c must be positive");
  if (x.n < 2) fail(errc::domain_error, "check_spacing: need at least two rows");

  SpacingCertificate cert;
  cert.c = c;
  cert.worst_gap = std::numeric_limits<double>::infinity();
  cert.column_min_gap.assign(x.dim, std::numeric_limits<double>::infinity());
  for (std::size_t l = 0; l < x.dim; ++l) {
    for (std::size_t i = 0; i + 1 < x.n; ++i) {
      const double gap = x.at(i + 1, l) - x.at(i, l);
      if (gap < cert.column_min_gap[l]) cert.column_min_gap[l] = gap;
      if (gap < cert.worst_gap) {
        cert.worst_gap = gap;
        cert.worst_index = i;
        cert.worst_column = l;
      }
    }
  }
  cert.holds = cert.worst_gap >= c;
  return cert;
}

}  // namespace ppclab
