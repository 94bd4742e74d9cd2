#pragma once

#include <string>
#include <vector>

#include "scaniv/dataset.hpp"

namespace scaniv {

// Thresholds xi_1 < ... < xi_p partitioning z into p+1 strata with the
// convention stratum j = { z : xi_j < z <= xi_{j+1} }, sentinels +-inf.
struct Stratification {
  std::vector<double> thresholds;

  int p() const { return static_cast<int>(thresholds.size()); }
  // 0-based stratum index in [0, p]; z <= thresholds[0] maps to 0.
  int stratum_index(double z) const;
};

// Scan grid: ascending points inside the central band of z, each carrying
// its empirical CDF level p = #{z_i <= xi}/n.
struct ThresholdGrid {
  std::vector<double> xi;
  std::vector<double> p;
  std::string rule;  // "quantile" or "explicit"

  std::size_t size() const { return xi.size(); }
};

// Fraction of sample z values <= xi.
double empirical_cdf(const Dataset& ds, double xi);

// Order-statistic quantile of z (type-1: smallest value with CDF >= prob).
double z_quantile(const Dataset& ds, double prob);

// Quantile-band grid per the scanning rule: continuous z uses the unique
// order statistics with CDF in [lower, upper], thinned evenly to at most
// max_points; ordinal z uses midpoints between consecutive observed ranks,
// intersected with the band. Throws EmptyGrid when the band is empty.
ThresholdGrid quantile_grid(const Dataset& ds, double lower = 0.1,
                            double upper = 0.9, int max_points = 81);

// Grid at caller-chosen points (p levels computed from the data).
ThresholdGrid explicit_grid(const Dataset& ds, const std::vector<double>& xis);

}  // namespace scaniv
