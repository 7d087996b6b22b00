#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ppclab/torus.hpp"

namespace ppclab {

enum class CountMethod { brute, grid };

struct PairCorrCurve {
  std::vector<double> s_grid;
  std::vector<double> r2;
  std::vector<double> reference;  // omega_(d,norm) s^d (1-1/N), truncated at N-1
  std::size_t n = 0;
  std::size_t dim = 0;
  Norm norm = Norm::sup;
};

// (1/N) #{ m != n : intdist(y_n - y_m, norm) <= s/N^{1/d} }, threshold
// inclusive.  Ordered pairs.  The grid method buckets [0,1)^d into congruent
// cells and scans each cell against its 3^d-1 wrapped neighbors; it returns
// exactly the brute-force count.
double r2_count(const TorusPointSet& pts, double s, Norm norm = Norm::sup,
                CountMethod method = CountMethod::grid);

PairCorrCurve r2_curve(const TorusPointSet& pts, std::span<const double> s_grid,
                       Norm norm = Norm::sup);

// Volume of the unit ball: sup -> (2s)^d, euclid -> pi^{d/2}/Gamma(d/2+1) s^d.
double poisson_reference(double s, std::size_t dim, Norm norm);

}  // namespace ppclab
