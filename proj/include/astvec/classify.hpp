#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "astvec/ast.hpp"
#include "astvec/coder.hpp"

namespace astvec {

enum class FeatureMode { counts, embed_mean };

/// Node-kind histogram (length V) or the mean embedding over all nodes
/// (length N_f). embed_mean needs `params`; throws std::invalid_argument
/// without them.
Eigen::VectorXd featurize(const AstNode& ast, FeatureMode mode,
                          const ModelParams* params = nullptr);

/// Histograms of every program, one row each.
Eigen::MatrixXd count_matrix(std::span<const LabeledProgram> corpus);

struct SplitSpec {
  std::vector<std::size_t> train, cv, test;  ///< ascending corpus indices
};

/// Stratified 3:1:1 per label: floor(n/5) programs each to cv and test, the
/// rest to train. Throws std::invalid_argument if a label has fewer than 5.
SplitSpec split(std::span<const LabeledProgram> corpus, std::uint64_t seed);

/// Class index of every program in label_set order.
std::vector<std::size_t> label_indices(std::span<const LabeledProgram> corpus,
                                       std::span<const std::string> labels);

/// −(1/N) Σ log p[i, label_i]. Rows must sum to 1 within 1e-9 and every
/// entry must be positive, else std::invalid_argument.
double cross_entropy(const Eigen::MatrixXd& probabilities, std::span<const std::size_t> labels);

/// Row-wise softmax, shifted by the row maximum.
Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& logits);

/// Both architectures read raw histograms.
///  logistic:      softmax(W z + b) on z = standardized histogram.
///  embedding_mlp: x = Eᵀ h / Σh, tanh hidden layers, softmax output. E is
///                 either copied from a trained coder or drawn at random.
enum class Architecture { logistic, embedding_mlp };

struct ClassifierConfig {
  Architecture arch = Architecture::logistic;
  std::vector<std::size_t> hidden{64, 64, 64, 64};
  bool fine_tune = true;       ///< update E during training
  double learning_rate = 0.05;
  double momentum = 0.9;
  std::size_t batch_size = 16;
  std::size_t epochs = 100;
  std::uint64_t seed = 1;
  bool keep_best_cv = true;    ///< return the parameters of the lowest cv loss
};

struct Classifier {
  Architecture arch = Architecture::logistic;
  std::size_t classes = 0;
  std::size_t embed_dim = 0;
  std::vector<std::size_t> widths;  ///< layer input/output sizes after E
  bool fine_tune = true;
  Eigen::VectorXd mean, scale;      ///< standardization (logistic only)
  Eigen::VectorXd theta;            ///< every trainable value, flat

  [[nodiscard]] std::size_t parameter_count() const { return static_cast<std::size_t>(theta.size()); }
  /// Class probabilities, one row per histogram row.
  [[nodiscard]] Eigen::MatrixXd predict(const Eigen::MatrixXd& counts) const;
};

/// Untrained classifier. For embedding_mlp, `embeddings` (V x N_f) is copied
/// in when given; otherwise E is drawn uniformly in ±sqrt(6 / (2 N_f)) with
/// `embed_dim` columns. Layers use Glorot-uniform weights and zero biases.
/// `train_counts` supplies the standardization statistics.
Classifier make_classifier(const ClassifierConfig& config, std::size_t classes,
                           const Eigen::MatrixXd& train_counts,
                           const Eigen::MatrixXd* embeddings = nullptr,
                           std::size_t embed_dim = 30);

/// Mean cross-entropy at `theta`; fills `grad` (same size) when non-null.
/// When E is frozen its gradient entries are left at zero.
double loss_and_gradient(const Classifier& model, const Eigen::VectorXd& theta,
                         const Eigen::MatrixXd& counts, std::span<const std::size_t> labels,
                         Eigen::VectorXd* grad);

struct EpochMetrics {
  std::size_t epoch;
  double train_xent, cv_xent, train_acc, cv_acc;
};

struct Evaluation {
  double accuracy = 0.0;
  double cross_entropy = 0.0;
};

/// Argmax accuracy (ties to the lowest class index) and mean cross-entropy.
Evaluation evaluate(const Classifier& model, const Eigen::MatrixXd& counts,
                    std::span<const std::size_t> labels);

/// Argmax per row, ties to the lowest index.
std::vector<std::size_t> argmax_rows(const Eigen::MatrixXd& scores);

/// Minibatch SGD with momentum on the train rows. Metrics are recorded after
/// every epoch (epoch 0 is the untrained model). Throws NumericError on a
/// non-finite loss.
Classifier train_classifier(Classifier model, const ClassifierConfig& config,
                            const Eigen::MatrixXd& train_counts,
                            std::span<const std::size_t> train_labels,
                            const Eigen::MatrixXd& cv_counts,
                            std::span<const std::size_t> cv_labels,
                            std::vector<EpochMetrics>* curve = nullptr);

std::string metrics_csv(std::span<const EpochMetrics> curve, std::uint64_t seed);

/// Accuracies of the comparison harness: random guess, logistic regression
/// on counts, and the embedding network with random and with pretrained E.
struct ComparisonResult {
  std::size_t classes = 0;
  double random_guess = 0.0;
  double logistic = 0.0;
  double mlp_random = 0.0;
  double mlp_pretrained = 0.0;
  std::vector<EpochMetrics> logistic_curve, random_curve, pretrained_curve;
};

struct ComparisonConfig {
  std::uint64_t seed = 1;
  ClassifierConfig logistic{Architecture::logistic, {}, true, 0.05, 0.9, 16, 100, 1, true};
  ClassifierConfig mlp{Architecture::embedding_mlp, {64, 64, 64, 64}, true, 0.01, 0.9, 16, 100, 1, true};
  /// Seed of the train/cv/test split; derived from `seed` when unset.
  std::optional<std::uint64_t> split_seed;
};

/// Splits with `split_seed` (or a seed derived from `config.seed`), trains
/// all three models with seeds derived from `config.seed` and reports test
/// accuracy.
ComparisonResult compare_classifiers(std::span<const LabeledProgram> corpus,
                                     const ModelParams& pretrained,
                                     const ComparisonConfig& config);

/// Plain-text table of the comparison.
std::string comparison_table(const ComparisonResult& result, std::uint64_t seed);

}  // namespace astvec
