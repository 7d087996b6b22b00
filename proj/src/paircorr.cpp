#include "ppclab/paircorr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppclab/error.hpp"
#include "ppclab/kernels.hpp"
#include "ppclab/parallel.hpp"

namespace ppclab {

namespace {

double pair_threshold(std::size_t n, std::size_t dim, double s) {
  const double root = dim == 1   ? static_cast<double>(n)
                      : dim == 2 ? std::sqrt(static_cast<double>(n))
                                 : std::pow(static_cast<double>(n), 1.0 / static_cast<double>(dim));
  return s / root;
}

// column-major copy; the kernels scan contiguous per-coordinate arrays
struct Columns {
  std::vector<std::vector<double>> data;
  std::vector<const double*> ptrs;
  explicit Columns(const TorusPointSet& pts, const std::vector<std::uint32_t>* order = nullptr) {
    data.resize(pts.dim);
    ptrs.resize(pts.dim);
    for (std::size_t l = 0; l < pts.dim; ++l) {
      data[l].resize(pts.n);
      for (std::size_t i = 0; i < pts.n; ++i) {
        const std::size_t src = order ? (*order)[i] : i;
        data[l][i] = pts.at(src, l);
      }
      ptrs[l] = data[l].data();
    }
  }
};

std::uint64_t brute_pairs(const TorusPointSet& pts, double thr, Norm norm) {
  const Columns cols(pts);
  const Kernels& k = active_kernels();
  const double thr2 = thr * thr;
  std::vector<std::uint64_t> partial(chunk_count(pts.n, 16), 0);
  parallel_chunks(pts.n, 16, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    std::uint64_t local = 0;
    std::vector<double> q(pts.dim);
    for (std::size_t m = b; m < e; ++m) {
      for (std::size_t l = 0; l < pts.dim; ++l) q[l] = cols.data[l][m];
      if (norm == Norm::sup)
        local += k.count_near_sup(cols.ptrs.data(), pts.dim, q.data(), m + 1, pts.n, thr);
      else
        local += k.count_near_euclid(cols.ptrs.data(), pts.dim, q.data(), m + 1, pts.n, thr2);
    }
    partial[chunk] = local;
  });
  const std::uint64_t unordered = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  return 2 * unordered;
}

std::uint64_t grid_pairs(const TorusPointSet& pts, double thr, Norm norm, std::size_t cells) {
  const std::size_t n = pts.n, dim = pts.dim;
  std::size_t total_cells = 1;
  for (std::size_t l = 0; l < dim; ++l) total_cells *= cells;

  // bucket ids, counting sort into CSR layout
  std::vector<std::uint32_t> cell_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = 0;
    for (std::size_t l = 0; l < dim; ++l) {
      auto axis = static_cast<std::size_t>(pts.at(i, l) * static_cast<double>(cells));
      if (axis >= cells) axis = cells - 1;
      c = c * cells + axis;
    }
    cell_of[i] = static_cast<std::uint32_t>(c);
  }
  std::vector<std::uint32_t> start(total_cells + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++start[cell_of[i] + 1];
  for (std::size_t c = 0; c < total_cells; ++c) start[c + 1] += start[c];
  std::vector<std::uint32_t> order(n);
  {
    std::vector<std::uint32_t> cursor(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < n; ++i) order[cursor[cell_of[i]]++] = static_cast<std::uint32_t>(i);
  }
  const Columns cols(pts, &order);
  const Kernels& k = active_kernels();
  const double thr2 = thr * thr;

  // 3^d neighbor offsets including self
  std::vector<std::vector<int>> offsets;
  {
    std::vector<int> cur(dim, -1);
    while (true) {
      offsets.push_back(cur);
      std::size_t l = 0;
      for (; l < dim; ++l) {
        if (cur[l] < 1) {
          ++cur[l];
          break;
        }
        cur[l] = -1;
      }
      if (l == dim) break;
    }
  }

  std::vector<std::uint64_t> partial(chunk_count(total_cells, 8), 0);
  parallel_chunks(total_cells, 8, [&](std::size_t chunk, std::size_t cb, std::size_t ce) {
    std::uint64_t local = 0;
    std::vector<double> q(dim);
    std::vector<std::size_t> axis(dim);
    for (std::size_t c = cb; c < ce; ++c) {
      const std::size_t pb = start[c], pe = start[c + 1];
      if (pb == pe) continue;
      {
        std::size_t rem = c;
        for (std::size_t l = dim; l-- > 0;) {
          axis[l] = rem % cells;
          rem /= cells;
        }
      }
      for (const auto& off : offsets) {
        std::size_t nc = 0;
        for (std::size_t l = 0; l < dim; ++l) {
          std::size_t a = axis[l] + static_cast<std::size_t>(off[l] + static_cast<int>(cells));
          a %= cells;
          nc = nc * cells + a;
        }
        const std::size_t qb = start[nc], qe = start[nc + 1];
        if (qb == qe) continue;
        const bool self = (nc == c);
        for (std::size_t p = pb; p < pe; ++p) {
          for (std::size_t l = 0; l < dim; ++l) q[l] = cols.data[l][p];
          std::uint64_t got =
              norm == Norm::sup
                  ? k.count_near_sup(cols.ptrs.data(), dim, q.data(), qb, qe, thr)
                  : k.count_near_euclid(cols.ptrs.data(), dim, q.data(), qb, qe, thr2);
          if (self) --got;  // the point itself is always within range
          local += got;
        }
      }
    }
    partial[chunk] += local;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace

double r2_count(const TorusPointSet& pts, double s, Norm norm, CountMethod method) {
  if (pts.n < 1) fail(errc::domain_error, "r2_count: empty point set");
  if (!(s > 0.0)) fail(errc::domain_error, "r2_count: s must be positive");
  if (pts.n == 1) return 0.0;

  const double thr = pair_threshold(pts.n, pts.dim, s);
  std::uint64_t ordered = 0;
  if (method == CountMethod::brute) {
    ordered = brute_pairs(pts, thr, norm);
  } else {
    const double root = pair_threshold(pts.n, pts.dim, 1.0);  // N^{-1/d}
    auto cells = static_cast<std::size_t>(std::floor(root == 0.0 ? 1.0 : 1.0 / (s * root)));
    if (cells < 1) cells = 1;
    while (cells > 1 && 1.0 / static_cast<double>(cells) < thr) --cells;
    std::size_t total = 1;
    bool overflow = false;
    for (std::size_t l = 0; l < pts.dim; ++l) {
      if (total > (std::size_t(1) << 28) / cells) {
        overflow = true;
        break;
      }
      total *= cells;
    }
    if (cells < 3 || overflow)
      ordered = brute_pairs(pts, thr, norm);
    else
      ordered = grid_pairs(pts, thr, norm, cells);
  }
  return static_cast<double>(ordered) / static_cast<double>(pts.n);
}

PairCorrCurve r2_curve(const TorusPointSet& pts, std::span<const double> s_grid, Norm norm) {
  if (s_grid.empty()) fail(errc::domain_error, "r2_curve: empty s grid");
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    if (!(s_grid[i] > 0.0)) fail(errc::domain_error, "r2_curve: s values must be positive");
    if (i > 0 && !(s_grid[i] > s_grid[i - 1]))
      fail(errc::domain_error, "r2_curve: s grid must be strictly increasing");
  }
  PairCorrCurve curve;
  curve.s_grid.assign(s_grid.begin(), s_grid.end());
  curve.n = pts.n;
  curve.dim = pts.dim;
  curve.norm = norm;
  const double nn = static_cast<double>(pts.n);
  for (double s : s_grid) {
    curve.r2.push_back(r2_count(pts, s, norm));
    const double ref = poisson_reference(s, pts.dim, norm) * (1.0 - 1.0 / nn);
    curve.reference.push_back(std::min(ref, nn - 1.0));
  }
  return curve;
}

double poisson_reference(double s, std::size_t dim, Norm norm) {
  if (norm == Norm::sup) return std::pow(2.0 * s, static_cast<double>(dim));
  const double d = static_cast<double>(dim);
  const double omega = std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
  return omega * std::pow(s, d);
}

}  // namespace ppclab
