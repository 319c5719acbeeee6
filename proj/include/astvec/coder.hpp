#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>

#include <Eigen/Dense>

#include "astvec/node_kind.hpp"
#include "astvec/rng.hpp"
#include "astvec/sampling.hpp"

namespace astvec {

struct Hyperparams {
  std::size_t dim = 30;          ///< N_f
  double margin = 1.0;           ///< Δ
  double lambda = 1e-4;          ///< weight of the penalty on W_l, W_r
  double learning_rate = 0.001;  ///< α
  double momentum = 0.9;         ///< ε
  std::size_t epochs = 200;      ///< upper bound; training may stop earlier
  std::uint64_t seed = 1;
  bool shuffle = true;

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const;

  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

/// vec(·) for every node kind (one row per vocabulary id), the two child
/// weight matrices and the bias.
struct ModelParams {
  Eigen::MatrixXd embeddings;  // V x N_f
  Eigen::MatrixXd w_left;      // N_f x N_f
  Eigen::MatrixXd w_right;     // N_f x N_f
  Eigen::VectorXd bias;        // N_f

  [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(bias.size()); }
  [[nodiscard]] auto vec(NodeKind k) const { return embeddings.row(kind_id(k)).transpose(); }
  [[nodiscard]] bool all_finite() const;

  /// Exact element-wise equality (shapes included).
  friend bool operator==(const ModelParams& a, const ModelParams& b);
};

/// All-zero parameters of dimension `dim`.
ModelParams zero_params(std::size_t dim);

/// Every entry uniform in [-r, r], r = sqrt(6 / (2 N_f)).
ModelParams init_params(const Hyperparams& hyper, Rng& rng);

double init_range(std::size_t dim);

/// Interpolation coefficients (left, right) for child i (1-based) of n.
/// Throws std::out_of_range unless n >= 1 and 1 <= i <= n.
std::pair<double, double> child_weight(std::size_t n, std::size_t i);

/// tanh(Σ l_i W_i vec(c_i) + b).
Eigen::VectorXd code_children(const TrainingSample& sample, const ModelParams& params);
Eigen::VectorXd code_children(const NegativeSample& sample, const ModelParams& params);

/// ‖vec(p) − code_children‖².
double distance(const TrainingSample& sample, const ModelParams& params);
double distance(const NegativeSample& sample, const ModelParams& params);

/// max(0, delta + d − d_c).
double hinge_loss(double d, double d_c, double delta);

/// λ/(2M) (‖W_l‖²_F + ‖W_r‖²_F) with M = 2 N_f².
double l2_penalty(const ModelParams& params, const Hyperparams& hyper);

/// Hinge loss of one (sample, corrupted sample) pair.
double pair_hinge(const NegativeSample& negative, const ModelParams& params,
                  const Hyperparams& hyper);

/// Pair hinge plus the full penalty; gradient() differentiates this.
double pair_loss(const NegativeSample& negative, const ModelParams& params,
                 const Hyperparams& hyper);

/// (1/2N) Σ hinge + penalty over N pairs. Each negative refers to its base.
double objective(std::span<const NegativeSample> pairs, const ModelParams& params,
                 const Hyperparams& hyper);

/// Gradient with embedding rows kept only for the symbols a pair touches.
struct Gradient {
  std::map<NodeKind, Eigen::VectorXd> embeddings;
  Eigen::MatrixXd w_left;
  Eigen::MatrixXd w_right;
  Eigen::VectorXd bias;

  explicit Gradient(std::size_t dim = 0);

  void add_embedding(NodeKind kind, const Eigen::VectorXd& g);
  /// Row for `kind`, or zeros when untouched.
  [[nodiscard]] Eigen::VectorXd embedding(NodeKind kind) const;
  [[nodiscard]] bool is_zero() const;
};

/// Exact gradient of pair_loss with respect to all parameters. The hinge
/// part is zero when the margin is met (the kink included). If `hinge` is
/// non-null it receives the pair's hinge value.
Gradient gradient(const NegativeSample& negative, const ModelParams& params,
                  const Hyperparams& hyper, double* hinge = nullptr);

}  // namespace astvec
