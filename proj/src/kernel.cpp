#include "scaniv/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scaniv/errors.hpp"

namespace scaniv {

namespace {
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_exp_arg(double a, double clamp) {
  return a > clamp ? clamp : (a < -clamp ? -clamp : a);
}
}  // namespace

double gaussian_kernel(double t) {
  return kInvSqrt2Pi * std::exp(-0.5 * t * t);
}

double bandwidth(const std::vector<double>& u_subset, const KernelConfig& cfg) {
  const std::size_t m = u_subset.size();
  if (m < 2)
    throw Error(Errc::Validation, "bandwidth needs at least 2 points");
  double mean = 0.0;
  for (double v : u_subset) mean += v;
  mean /= double(m);
  double ss = 0.0;
  for (double v : u_subset) ss += (v - mean) * (v - mean);
  double sd = std::sqrt(ss / double(m - 1));
  if (sd == 0.0)
    throw Error(Errc::DegenerateCovariate, "constant covariate in stratum");
  return cfg.bandwidth_multiplier * sd *
         std::pow(double(m), cfg.bandwidth_exponent);
}

GProfile profile_g(const Dataset& ds, double gamma, double h,
                   const std::vector<double>& eval_points,
                   const KernelConfig& cfg) {
  if (!(h > 0.0)) throw Error(Errc::Validation, "bandwidth must be positive");
  const std::size_t n = ds.n();
  std::vector<int> resp;
  for (std::size_t i = 0; i < n; ++i)
    if (ds.delta[i] == 1) resp.push_back(int(i));
  if (resp.empty()) throw Error(Errc::NoRespondents, "no observed outcomes");

  // Tilt exponents for respondents, stabilized by their maximum.
  std::vector<double> e(resp.size());
  double c = -kInf;
  for (std::size_t k = 0; k < resp.size(); ++k) {
    e[k] = clamp_exp_arg(gamma * ds.y[resp[k]], cfg.exp_clamp);
    c = std::max(c, e[k]);
  }

  GProfile prof;
  prof.gamma = gamma;
  prof.bandwidth = h;
  prof.eval_points = eval_points;
  prof.log_g.reserve(eval_points.size());
  const double log_floor = std::log(cfg.denominator_floor);

  for (double u0 : eval_points) {
    double num = 0.0, den_scaled = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (ds.delta[i] == 1) continue;
      num += gaussian_kernel((u0 - ds.u[i]) / h) / h;
    }
    for (std::size_t k = 0; k < resp.size(); ++k) {
      double kv = gaussian_kernel((u0 - ds.u[resp[k]]) / h) / h;
      den_scaled += std::exp(e[k] - c) * kv;
    }
    if (num == 0.0) {
      prof.log_g.push_back(-kInf);
      continue;
    }
    double log_den = den_scaled > 0.0 ? std::log(den_scaled) + c : -kInf;
    if (log_den < log_floor) {
      // Denominator deserted: use the nearest respondent's contribution.
      ++prof.n_fallback;
      double best = kInf;
      std::size_t kb = 0;
      for (std::size_t k = 0; k < resp.size(); ++k) {
        double d = std::fabs(u0 - ds.u[resp[k]]);
        if (d < best) { best = d; kb = k; }
      }
      double t = (u0 - ds.u[resp[kb]]) / h;
      double log_kv = -0.5 * t * t - std::log(h) - kLogSqrt2Pi;
      log_den = std::max(e[kb] + log_kv, log_floor);
    }
    prof.log_g.push_back(std::log(num) - log_den);
  }
  return prof;
}

double propensity(double y, double log_g_at_u, double gamma,
                  const KernelConfig& cfg) {
  if (log_g_at_u == -kInf) return 1.0;
  double a = clamp_exp_arg(log_g_at_u + gamma * y, cfg.exp_clamp);
  return 1.0 / (1.0 + std::exp(a));
}

ProfileEngine::ProfileEngine(const Dataset& ds, const KernelConfig& cfg)
    : ds_(&ds), cfg_(cfg) {
  const int n = int(ds.n());
  for (int i = 0; i < n; ++i)
    if (ds.delta[i] == 1) resp_rows_.push_back(i);
  if (resp_rows_.empty())
    throw Error(Errc::NoRespondents, "no observed outcomes");

  const int nr = int(resp_rows_.size());
  y_resp_.resize(nr);
  for (int r = 0; r < nr; ++r) y_resp_[r] = ds.y[resp_rows_[r]];

  dist_.resize(nr, n);
  for (int j = 0; j < n; ++j) {
    double uj = ds.u[j];
    for (int r = 0; r < nr; ++r) {
      double d = ds.u[resp_rows_[r]] - uj;
      dist_(r, j) = -0.5 * d * d;
    }
  }
  w_.resize(nr);
  den_.resize(nr);
  ratios_.resize(nr);
}

void ProfileEngine::set_bandwidth(double h, const std::vector<int>* stratum) {
  if (!(h > 0.0)) throw Error(Errc::Validation, "bandwidth must be positive");
  h_ = h;
  const int n = int(ds_->n());
  const int nr = int(resp_rows_.size());
  const double inv_h2 = 1.0 / (h * h);
  stratum_labels_ = stratum ? *stratum : std::vector<int>();

  Eigen::MatrixXd kern = (dist_.array() * inv_h2).exp().matrix();
  if (stratum) {
    for (int r = 0; r < nr; ++r) {
      int lab = (*stratum)[resp_rows_[r]];
      for (int j = 0; j < n; ++j)
        if ((*stratum)[j] != lab) kern(r, j) = 0.0;
    }
  }

  kern_resp_.resize(nr, nr);
  for (int k = 0; k < nr; ++k) kern_resp_.col(k) = kern.col(resp_rows_[k]);

  Eigen::VectorXd nonresp_mask = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j)
    if (ds_->delta[j] == 0) nonresp_mask[j] = 1.0;
  numer_.noalias() = kern * nonresp_mask;
}

const Eigen::ArrayXd& ProfileEngine::respondent_ratios(double gamma) {
  const int nr = int(resp_rows_.size());
  double c = -kInf;
  for (int r = 0; r < nr; ++r)
    c = std::max(c, clamp_exp_arg(gamma * y_resp_[r], cfg_.exp_clamp));
  for (int r = 0; r < nr; ++r)
    w_[r] = std::exp(clamp_exp_arg(gamma * y_resp_[r], cfg_.exp_clamp) - c);
  den_.noalias() = kern_resp_ * w_;

  for (int r = 0; r < nr; ++r) {
    double num = numer_[r];
    if (num == 0.0) {
      ratios_[r] = 0.0;  // g = -inf, propensity exactly 1
      continue;
    }
    double den = den_[r];
    if (den < 1e-290) {
      // Rebuild this row in log space (denominator underflowed the scaled
      // representation; the own-point term keeps the true value finite).
      ++n_fallback_;
      const bool masked = !stratum_labels_.empty();
      const int lab = masked ? stratum_labels_[resp_rows_[r]] : 0;
      double m = -kInf;
      for (int k = 0; k < nr; ++k) {
        if (masked && stratum_labels_[resp_rows_[k]] != lab) continue;
        double a = clamp_exp_arg(gamma * y_resp_[k], cfg_.exp_clamp) +
                   dist_(r, resp_rows_[k]) / (h_ * h_);
        m = std::max(m, a);
      }
      double s = 0.0;
      for (int k = 0; k < nr; ++k) {
        if (masked && stratum_labels_[resp_rows_[k]] != lab) continue;
        double a = clamp_exp_arg(gamma * y_resp_[k], cfg_.exp_clamp) +
                   dist_(r, resp_rows_[k]) / (h_ * h_);
        s += std::exp(a - m);
      }
      double log_ratio = std::log(num) +
                         clamp_exp_arg(gamma * y_resp_[r], cfg_.exp_clamp) -
                         (m + std::log(s));
      ratios_[r] = std::exp(clamp_exp_arg(log_ratio, cfg_.exp_clamp));
    } else {
      ratios_[r] = num * (w_[r] / den);
    }
  }
  return ratios_;
}

}  // namespace scaniv
