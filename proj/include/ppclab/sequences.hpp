#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ppclab {

enum class SeqFamily { power, nlog, file };

// N x d matrix of sequence values, row n = (x_n^{(1)},...,x_n^{(d)}).
// Columns are strictly increasing and every entry is finite.
struct SequenceMatrix {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> values;  // row-major, n*dim

  SeqFamily family = SeqFamily::file;
  std::vector<double> thetas;  // power family exponents
  double log_power = 0.0;      // nlog family exponent A
  std::size_t n0 = 1;          // start index

  double at(std::size_t row, std::size_t col) const { return values[row * dim + col]; }
  double& at(std::size_t row, std::size_t col) { return values[row * dim + col]; }
  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * dim, dim};
  }
  std::vector<double> column(std::size_t col) const;

  // First n rows as a view-copy (family metadata preserved).
  SequenceMatrix head(std::size_t rows) const;
};

// x_n^{(l)} = (n0+n-1)^{theta_l}, n = 1..count.  Requires theta_l > 0.
SequenceMatrix gen_power(std::span<const double> thetas, std::size_t count, std::size_t n0 = 1);

// Two columns (m, m*(ln m)^a) with m = n0+n-1.  Requires a >= 1, n0 >= 2.
SequenceMatrix gen_nlog(double a, std::size_t count, std::size_t n0 = 2);

// CSV contract: one row per n, d comma-separated decimal literals, no header,
// LF newlines.  Distinct error codes for missing file, malformed rows and
// non-increasing columns.
SequenceMatrix load_sequence(const std::filesystem::path& path);
void save_sequence(const SequenceMatrix& x, const std::filesystem::path& path);

struct SpacingCertificate {
  double c = 0.0;
  bool holds = false;
  double worst_gap = 0.0;
  std::size_t worst_index = 0;   // 0-based row of the gap's left endpoint
  std::size_t worst_column = 0;
  std::vector<double> column_min_gap;
};

// Verifies x_{n+1}^{(l)} - x_n^{(l)} >= c for every column.  Requires n >= 2.
SpacingCertificate check_spacing(const SequenceMatrix& x, double c);

}  // namespace ppclab
