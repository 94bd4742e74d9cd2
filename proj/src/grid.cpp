#include "scaniv/grid.hpp"

#include <algorithm>
#include <cmath>

#include "scaniv/errors.hpp"

namespace scaniv {

int Stratification::stratum_index(double z) const {
  auto it = std::lower_bound(thresholds.begin(), thresholds.end(), z);
  return static_cast<int>(it - thresholds.begin());
}

double empirical_cdf(const Dataset& ds, double xi) {
  std::size_t c = 0;
  for (double zi : ds.z) c += (zi <= xi);
  return double(c) / double(ds.n());
}

double z_quantile(const Dataset& ds, double prob) {
  if (!(prob > 0.0 && prob < 1.0))
    throw Error(Errc::Config, "quantile level must lie in (0,1)");
  std::vector<double> s = ds.z;
  std::sort(s.begin(), s.end());
  std::size_t k = static_cast<std::size_t>(std::ceil(prob * double(s.size())));
  if (k == 0) k = 1;
  return s[k - 1];
}

namespace {

ThresholdGrid finish_grid(const Dataset& ds, std::vector<double> pts,
                          const std::string& rule) {
  ThresholdGrid g;
  g.rule = rule;
  g.xi = std::move(pts);
  g.p.reserve(g.xi.size());
  // Grids are small; the O(n) scan per point doubles as the reference CDF.
  for (double x : g.xi) g.p.push_back(empirical_cdf(ds, x));
  return g;
}

}  // namespace

ThresholdGrid quantile_grid(const Dataset& ds, double lower, double upper,
                            int max_points) {
  if (!(0.0 < lower && lower < upper && upper < 1.0))
    throw Error(Errc::Config, "grid band must satisfy 0 < lower < upper < 1");
  if (max_points < 1) throw Error(Errc::Config, "max_points must be >= 1");

  std::vector<double> uniq = ds.z;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() < 2)
    throw Error(Errc::EmptyGrid, "fewer than 2 distinct z values");

  const double n = double(ds.n());
  std::vector<double> band;
  if (ds.kind == InstrumentKind::ordinal) {
    // Midpoints between consecutive observed ranks, band-checked on the CDF
    // level each midpoint induces.
    for (std::size_t k = 0; k + 1 < uniq.size(); ++k) {
      double mid = 0.5 * (uniq[k] + uniq[k + 1]);
      double p = empirical_cdf(ds, mid);
      if (p >= lower && p <= upper) band.push_back(mid);
    }
  } else {
    std::size_t c = 0, j = 0;
    std::vector<double> zs = ds.z;
    std::sort(zs.begin(), zs.end());
    for (double v : uniq) {
      while (j < zs.size() && zs[j] <= v) ++j;
      c = j;  // #{z_i <= v}
      double p = double(c) / n;
      if (p >= lower && p <= upper) band.push_back(v);
    }
  }
  if (band.empty())
    throw Error(Errc::EmptyGrid, "no distinct z value in the CDF band");

  if (int(band.size()) > max_points) {
    std::vector<double> thin;
    thin.reserve(max_points);
    if (max_points == 1) {
      thin.push_back(band[band.size() / 2]);
    } else {
      const double m = double(band.size() - 1);
      for (int k = 0; k < max_points; ++k) {
        std::size_t idx = static_cast<std::size_t>(
            std::llround(m * double(k) / double(max_points - 1)));
        thin.push_back(band[idx]);
      }
      thin.erase(std::unique(thin.begin(), thin.end()), thin.end());
    }
    band = std::move(thin);
  }
  return finish_grid(ds, std::move(band), "quantile");
}

ThresholdGrid explicit_grid(const Dataset& ds,
                            const std::vector<double>& xis) {
  if (xis.empty()) throw Error(Errc::EmptyGrid, "no grid points supplied");
  std::vector<double> pts = xis;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return finish_grid(ds, std::move(pts), "explicit");
}

}  // namespace scaniv
