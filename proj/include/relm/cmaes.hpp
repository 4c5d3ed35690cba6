#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "relm/linalg.hpp"
#include "relm/rng.hpp"
#include "relm/serialize.hpp"

namespace relm::cmaes {

struct StopCriteria {
  std::size_t max_generations = 200;
  std::optional<double> target_fitness;  // stop once best_ever <= target
  double tol_fun = 0.0;                  // stop when last fitness spread < tol_fun
  double sigma_floor = 1e-16;
};

struct StopVerdict {
  bool stop = false;
  std::string reason;
};

struct Best {
  std::vector<double> genome;
  double fitness = std::numeric_limits<double>::infinity();
  std::size_t generation = 0;
};

/// Strategy constants fixed at init from (n, lambda) by the standard default
/// formulas; see the constructor for the exact expressions.
struct Constants {
  double c_sigma = 0, d_sigma = 0, c_c = 0, c_1 = 0, c_mu = 0, chi_n = 0;
};

/// Full-covariance CMA-ES with an ask/tell interface, minimizing fitness.
/// ask() samples lambda candidates mean + sigma*B*D*z and records the draws;
/// tell() ranks the candidates and applies the standard mean, step-size
/// (CSA with the h_sigma stall rule) and covariance (rank-1 + rank-mu)
/// updates. The covariance is eigendecomposed on every ask.
class Cmaes {
public:
  /// lambda = 0 selects the default 4 + floor(3 ln n).
  Cmaes(std::size_t n, std::vector<double> mean0, double sigma0, std::size_t lambda,
        uint64_t seed);

  static std::size_t default_lambda(std::size_t n);

  /// Samples the next population. Repeated calls without tell() discard the
  /// previous draw. Throws NumericError if the covariance has broken down.
  const std::vector<std::vector<double>>& ask();

  /// Consumes fitnesses for the population returned by the last ask().
  /// Non-finite fitnesses rank last and set the nonfinite flag.
  void tell(const std::vector<std::vector<double>>& population,
            const std::vector<double>& fitnesses);

  StopVerdict should_stop(const StopCriteria& crit, double last_fitness_spread) const;

  std::size_t dim() const { return n_; }
  std::size_t lambda() const { return lambda_; }
  std::size_t mu() const { return mu_; }
  std::size_t generation() const { return generation_; }
  double sigma() const { return sigma_; }
  const std::vector<double>& mean() const { return mean_; }
  const linalg::Matrix& covariance() const { return cov_; }
  const std::vector<double>& step_path() const { return p_sigma_; }
  const std::vector<double>& cov_path() const { return p_c_; }
  const std::vector<double>& weights() const { return weights_; }
  double mu_eff() const { return mu_eff_; }
  const Constants& constants() const { return consts_; }

  bool has_best() const { return !best_.genome.empty(); }
  const Best& best() const { return best_; }

  /// Spread (max - min over finite values) of the fitnesses of the last tell.
  double last_spread() const { return last_spread_; }

  bool eigen_clamped() const { return eigen_clamped_; }
  bool saw_nonfinite_fitness() const { return saw_nonfinite_; }
  bool unrecoverable() const { return unrecoverable_; }

  /// Persistence. Saving is only allowed between generations (no pending ask).
  void save(serialize::Writer& w) const;
  static Cmaes load(serialize::Reader& r);

  /// Full state comparison (including the RNG), ignoring ask() scratch.
  bool equal_state(const Cmaes& other) const;

private:
  Cmaes() = default;

  std::size_t n_ = 0;
  std::size_t lambda_ = 0;
  std::size_t mu_ = 0;
  std::vector<double> weights_;
  double mu_eff_ = 0;
  Constants consts_;

  std::vector<double> mean_;
  double sigma_ = 0;
  linalg::Matrix cov_;
  std::vector<double> p_sigma_;
  std::vector<double> p_c_;
  std::size_t generation_ = 0;
  Best best_;
  Rng rng_;

  double last_spread_ = std::numeric_limits<double>::infinity();
  bool eigen_clamped_ = false;
  bool saw_nonfinite_ = false;
  bool unrecoverable_ = false;

  // ask() scratch, valid while ask_pending_
  bool ask_pending_ = false;
  std::vector<std::vector<double>> xs_;  // candidates
  std::vector<std::vector<double>> ys_;  // (x - mean) / sigma
  std::vector<std::vector<double>> zs_;  // isotropic draws
  linalg::Matrix eigvec_;                // row j = eigenvector j of cov_
};

}  // namespace relm::cmaes
