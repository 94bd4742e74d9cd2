#pragma once

#include <Eigen/Dense>
#include <vector>

#include "scaniv/dataset.hpp"

namespace scaniv {

struct KernelConfig {
  double bandwidth_multiplier = 1.5;
  double bandwidth_exponent = -1.0 / 3.0;
  double denominator_floor = 1e-300;
  double exp_clamp = 700.0;
  // Profile the nuisance within each stratum only, instead of over the full
  // sample with the stratum bandwidth (the default).
  bool per_stratum_profile = false;
};

// Kernel-profiled nuisance g_gamma evaluated at a set of u points:
// exp(g(u0)) = sum_i (1-d_i) K_h(u0-u_i) / sum_i d_i exp(gamma y_i) K_h(u0-u_i).
struct GProfile {
  double gamma = 0.0;
  std::vector<double> eval_points;
  std::vector<double> log_g;  // -inf sentinel allowed (zero nonresponse mass)
  double bandwidth = 0.0;
  int n_fallback = 0;  // denominator underflow fallbacks fired
};

// Standard normal density exp(-t^2/2)/sqrt(2*pi).
double gaussian_kernel(double t);

// h = multiplier * sd(u_subset) * m^exponent (sample sd, divisor m-1).
// Throws DegenerateCovariate when sd == 0, Validation when m < 2.
double bandwidth(const std::vector<double>& u_subset,
                 const KernelConfig& cfg = {});

// Reference profiling path over arbitrary evaluation points.
GProfile profile_g(const Dataset& ds, double gamma, double h,
                   const std::vector<double>& eval_points,
                   const KernelConfig& cfg = {});

// Tilting propensity [1 + exp(g + gamma*y)]^{-1}, exponent clamped;
// exactly 1 when g = -inf.
double propensity(double y, double log_g_at_u, double gamma,
                  const KernelConfig& cfg = {});

// Cached pairwise-kernel machinery for repeated profiling over one dataset.
// Rows are the respondents (the only points where estimation needs the
// profile); columns are all sample points. A bandwidth change rebuilds the
// kernel matrix; each trial gamma then costs one matrix-vector product.
class ProfileEngine {
 public:
  ProfileEngine(const Dataset& ds, const KernelConfig& cfg);

  const Dataset& data() const { return *ds_; }
  const std::vector<int>& respondent_rows() const { return resp_rows_; }
  int n_respondents() const { return int(resp_rows_.size()); }
  int n_nonrespondents() const { return int(ds_->n()) - n_respondents(); }

  // Rebuild kernel weights for bandwidth h; optional stratum labels (one per
  // sample row) restrict kernel mass to own-stratum points (the
  // per-stratum-profile switch). Pass nullptr for full-sample profiling.
  void set_bandwidth(double h, const std::vector<int>* stratum = nullptr);
  double current_bandwidth() const { return h_; }

  // ratios[r] = exp(g_hat(u_i) + gamma*y_i) = delta_i/pi_i - 1 for the r-th
  // respondent row i, at the current bandwidth. Stable against overflow:
  // the value is bounded by the numerator kernel mass.
  const Eigen::ArrayXd& respondent_ratios(double gamma);

  // Diagnostics: raw-denominator underflows seen since construction.
  int fallback_count() const { return n_fallback_; }

 private:
  const Dataset* ds_;
  KernelConfig cfg_;
  std::vector<int> resp_rows_;
  std::vector<int> stratum_labels_;  // empty = full-sample profiling
  Eigen::ArrayXd y_resp_;       // outcomes of respondent rows
  Eigen::MatrixXd dist_;        // -(u_i-u_j)^2/2, respondent rows x all cols
  Eigen::MatrixXd kern_resp_;   // current-h kernel, respondent columns only
  Eigen::VectorXd numer_;       // kernel mass over nonrespondent columns
  double h_ = -1.0;
  Eigen::VectorXd w_;           // workspace: tilted weights exp(gamma*y - c)
  Eigen::VectorXd den_;         // workspace: kern_resp_ * w_
  Eigen::ArrayXd ratios_;
  int n_fallback_ = 0;
};

}  // namespace scaniv
