#include "astvec/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "astvec/error.hpp"
#include "astvec/rng.hpp"

namespace astvec {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using MapM = Eigen::Map<MatrixXd>;
using CMapM = Eigen::Map<const MatrixXd>;
using CMapV = Eigen::Map<const VectorXd>;

void tally(const AstNode& n, Eigen::Ref<VectorXd> h) {
  h[static_cast<Index>(kind_id(n.kind))] += 1.0;
  for (const auto& c : n.children) tally(c, h);
}

// Offsets of E and each layer's W (out x in) and b within theta.
struct Layout {
  Index embed = 0;  // size of E, zero for logistic
  std::vector<Index> w, b;
  Index total = 0;
};

Layout layout_of(const Classifier& m) {
  Layout l;
  Index at = 0;
  if (m.arch == Architecture::embedding_mlp) {
    l.embed = static_cast<Index>(kVocabularySize * m.embed_dim);
    at = l.embed;
  }
  for (std::size_t i = 0; i + 1 < m.widths.size(); ++i) {
    const auto in = static_cast<Index>(m.widths[i]), out = static_cast<Index>(m.widths[i + 1]);
    l.w.push_back(at);
    at += out * in;
    l.b.push_back(at);
    at += out;
  }
  l.total = at;
  return l;
}

MatrixXd input_layer(const Classifier& m, const VectorXd& theta, const MatrixXd& counts,
                     MatrixXd* normalized) {
  if (m.arch == Architecture::logistic) {
    return (counts.rowwise() - m.mean.transpose()).array().rowwise() /
           m.scale.transpose().array();
  }
  MatrixXd hn = counts;
  for (Index i = 0; i < hn.rows(); ++i) {
    const double s = hn.row(i).sum();
    if (s > 0.0) hn.row(i) /= s;
  }
  CMapM e(theta.data(), static_cast<Index>(kVocabularySize), static_cast<Index>(m.embed_dim));
  MatrixXd x = hn * e;
  if (normalized) *normalized = std::move(hn);
  return x;
}

// Forward pass keeping every activation; returns the output logits.
MatrixXd forward(const Classifier& m, const VectorXd& theta, const MatrixXd& counts,
                 std::vector<MatrixXd>& acts, MatrixXd* normalized) {
  const Layout l = layout_of(m);
  acts.clear();
  acts.push_back(input_layer(m, theta, counts, normalized));
  const std::size_t layers = l.w.size();
  MatrixXd z;
  for (std::size_t k = 0; k < layers; ++k) {
    const auto in = static_cast<Index>(m.widths[k]), out = static_cast<Index>(m.widths[k + 1]);
    CMapM w(theta.data() + l.w[k], out, in);
    CMapV b(theta.data() + l.b[k], out);
    z = (acts.back() * w.transpose()).rowwise() + b.transpose();
    if (k + 1 < layers) acts.push_back(z.array().tanh().matrix());
  }
  return z;
}

MatrixXd log_softmax_rows(const MatrixXd& z) {
  MatrixXd out(z.rows(), z.cols());
  for (Index i = 0; i < z.rows(); ++i) {
    const double mx = z.row(i).maxCoeff();
    const double lse = mx + std::log((z.row(i).array() - mx).exp().sum());
    out.row(i) = z.row(i).array() - lse;
  }
  return out;
}

MatrixXd rows_of(const MatrixXd& m, std::span<const std::size_t> idx) {
  MatrixXd out(static_cast<Index>(idx.size()), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) out.row(static_cast<Index>(i)) = m.row(static_cast<Index>(idx[i]));
  return out;
}

std::string pct(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%6.2f%%", 100.0 * x);
  return buf;
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Eigen::VectorXd featurize(const AstNode& ast, FeatureMode mode, const ModelParams* params) {
  VectorXd h = VectorXd::Zero(kVocabularySize);
  tally(ast, h);
  if (mode == FeatureMode::counts) return h;
  if (!params) throw std::invalid_argument("embed_mean features need trained parameters");
  return params->embeddings.transpose() * h / h.sum();
}

Eigen::MatrixXd count_matrix(std::span<const LabeledProgram> corpus) {
  MatrixXd out = MatrixXd::Zero(static_cast<Index>(corpus.size()), kVocabularySize);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    out.row(static_cast<Index>(i)) = featurize(corpus[i].ast, FeatureMode::counts).transpose();
  return out;
}

SplitSpec split(std::span<const LabeledProgram> corpus, std::uint64_t seed) {
  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < corpus.size(); ++i) by_label[corpus[i].label].push_back(i);
  Rng rng(seed);
  SplitSpec s;
  for (auto& [label, idx] : by_label) {
    if (idx.size() < 5) {
      throw std::invalid_argument("label '" + label + "' has " + std::to_string(idx.size()) +
                                  " programs; at least 5 are needed for a 3:1:1 split");
    }
    rng.shuffle(std::span(idx));
    const std::size_t fifth = idx.size() / 5;
    s.cv.insert(s.cv.end(), idx.begin(), idx.begin() + static_cast<long>(fifth));
    s.test.insert(s.test.end(), idx.begin() + static_cast<long>(fifth),
                  idx.begin() + static_cast<long>(2 * fifth));
    s.train.insert(s.train.end(), idx.begin() + static_cast<long>(2 * fifth), idx.end());
  }
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.cv.begin(), s.cv.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

std::vector<std::size_t> label_indices(std::span<const LabeledProgram> corpus,
                                       std::span<const std::string> labels) {
  std::vector<std::size_t> out;
  out.reserve(corpus.size());
  for (const auto& p : corpus) {
    auto it = std::lower_bound(labels.begin(), labels.end(), p.label);
    if (it == labels.end() || *it != p.label)
      throw std::invalid_argument("label '" + p.label + "' is not in the label set");
    out.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  return out;
}

double cross_entropy(const Eigen::MatrixXd& p, std::span<const std::size_t> labels) {
  if (static_cast<std::size_t>(p.rows()) != labels.size())
    throw std::invalid_argument("cross_entropy: row count differs from label count");
  if (labels.empty()) throw std::invalid_argument("cross_entropy: no rows");
  double sum = 0.0;
  for (Index i = 0; i < p.rows(); ++i) {
    if (!(p.row(i).minCoeff() > 0.0))
      throw std::invalid_argument("cross_entropy: row " + std::to_string(i) + " has a non-positive probability");
    if (std::abs(p.row(i).sum() - 1.0) > 1e-9)
      throw std::invalid_argument("cross_entropy: row " + std::to_string(i) + " does not sum to 1");
    const std::size_t y = labels[static_cast<std::size_t>(i)];
    if (y >= static_cast<std::size_t>(p.cols()))
      throw std::invalid_argument("cross_entropy: label out of range");
    sum -= std::log(p(i, static_cast<Index>(y)));
  }
  return sum / static_cast<double>(p.rows());
}

Eigen::MatrixXd softmax_rows(const Eigen::MatrixXd& logits) {
  return log_softmax_rows(logits).array().exp().matrix();
}

std::vector<std::size_t> argmax_rows(const Eigen::MatrixXd& scores) {
  std::vector<std::size_t> out(static_cast<std::size_t>(scores.rows()), 0);
  for (Index i = 0; i < scores.rows(); ++i) {
    Index best = 0;
    for (Index j = 1; j < scores.cols(); ++j)
      if (scores(i, j) > scores(i, best)) best = j;
    out[static_cast<std::size_t>(i)] = static_cast<std::size_t>(best);
  }
  return out;
}

Eigen::MatrixXd Classifier::predict(const Eigen::MatrixXd& counts) const {
  std::vector<MatrixXd> acts;
  return softmax_rows(forward(*this, theta, counts, acts, nullptr));
}

Classifier make_classifier(const ClassifierConfig& config, std::size_t classes,
                           const Eigen::MatrixXd& train_counts,
                           const Eigen::MatrixXd* embeddings, std::size_t embed_dim) {
  if (classes < 2) throw std::invalid_argument("a classifier needs at least 2 classes");
  Classifier m;
  m.arch = config.arch;
  m.classes = classes;
  m.fine_tune = config.fine_tune;
  Rng rng(derive_seed(config.seed, 0));
  if (m.arch == Architecture::logistic) {
    m.widths = {kVocabularySize, classes};
    const double n = static_cast<double>(train_counts.rows());
    m.mean = train_counts.colwise().mean().transpose();
    m.scale = ((train_counts.rowwise() - m.mean.transpose()).array().square().colwise().sum() / n)
                  .sqrt()
                  .transpose();
    for (Index i = 0; i < m.scale.size(); ++i)
      if (!(m.scale[i] > 0.0)) m.scale[i] = 1.0;
  } else {
    if (embeddings) {
      if (embeddings->rows() != static_cast<Index>(kVocabularySize))
        throw std::invalid_argument("embedding table must have one row per node kind");
      embed_dim = static_cast<std::size_t>(embeddings->cols());
    }
    if (embed_dim == 0) throw std::invalid_argument("embedding dimension must be positive");
    m.embed_dim = embed_dim;
    m.widths = {embed_dim};
    m.widths.insert(m.widths.end(), config.hidden.begin(), config.hidden.end());
    m.widths.push_back(classes);
  }
  const Layout l = layout_of(m);
  m.theta = VectorXd::Zero(l.total);
  if (m.arch == Architecture::embedding_mlp) {
    MapM e(m.theta.data(), static_cast<Index>(kVocabularySize), static_cast<Index>(embed_dim));
    if (embeddings) {
      e = *embeddings;
    } else {
      // Own stream, so layer weights do not depend on where E came from.
      Rng erng(derive_seed(config.seed, 2));
      const double r = init_range(embed_dim);
      for (Index i = 0; i < e.rows(); ++i)
        for (Index j = 0; j < e.cols(); ++j) e(i, j) = erng.uniform(-r, r);
    }
  }
  for (std::size_t k = 0; k < l.w.size(); ++k) {
    const auto in = static_cast<Index>(m.widths[k]), out = static_cast<Index>(m.widths[k + 1]);
    const double r = std::sqrt(6.0 / static_cast<double>(in + out));
    MapM w(m.theta.data() + l.w[k], out, in);
    for (Index i = 0; i < out; ++i)
      for (Index j = 0; j < in; ++j) w(i, j) = rng.uniform(-r, r);
  }
  return m;
}

double loss_and_gradient(const Classifier& m, const Eigen::VectorXd& theta,
                         const Eigen::MatrixXd& counts, std::span<const std::size_t> labels,
                         Eigen::VectorXd* grad) {
  const Layout l = layout_of(m);
  if (theta.size() != l.total) throw std::invalid_argument("parameter vector has the wrong size");
  std::vector<MatrixXd> acts;
  MatrixXd hn;
  const MatrixXd z = forward(m, theta, counts, acts, &hn);
  const MatrixXd logp = log_softmax_rows(z);
  const auto n = static_cast<double>(counts.rows());
  double loss = 0.0;
  for (Index i = 0; i < z.rows(); ++i) loss -= logp(i, static_cast<Index>(labels[static_cast<std::size_t>(i)]));
  loss /= n;
  if (!grad) return loss;

  grad->setZero(l.total);
  MatrixXd dz = logp.array().exp().matrix();
  for (Index i = 0; i < dz.rows(); ++i) dz(i, static_cast<Index>(labels[static_cast<std::size_t>(i)])) -= 1.0;
  dz /= n;
  for (std::size_t k = l.w.size(); k-- > 0;) {
    const auto in = static_cast<Index>(m.widths[k]), out = static_cast<Index>(m.widths[k + 1]);
    MapM(grad->data() + l.w[k], out, in) = dz.transpose() * acts[k];
    Eigen::Map<VectorXd>(grad->data() + l.b[k], out) = dz.colwise().sum().transpose();
    if (k == 0 && (m.arch == Architecture::logistic || !m.fine_tune)) break;
    CMapM w(theta.data() + l.w[k], out, in);
    MatrixXd da = dz * w;
    if (k == 0) {
      MapM(grad->data(), static_cast<Index>(kVocabularySize), static_cast<Index>(m.embed_dim)) =
          hn.transpose() * da;
    } else {
      dz = (da.array() * (1.0 - acts[k].array().square())).matrix();
    }
  }
  return loss;
}

Evaluation evaluate(const Classifier& model, const Eigen::MatrixXd& counts,
                    std::span<const std::size_t> labels) {
  std::vector<MatrixXd> acts;
  const MatrixXd z = forward(model, model.theta, counts, acts, nullptr);
  const auto pred = argmax_rows(z);
  const MatrixXd logp = log_softmax_rows(z);
  Evaluation e;
  std::size_t hits = 0;
  double xent = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    hits += pred[i] == labels[i];
    xent -= logp(static_cast<Index>(i), static_cast<Index>(labels[i]));
  }
  const double n = static_cast<double>(labels.size());
  e.accuracy = static_cast<double>(hits) / n;
  e.cross_entropy = xent / n;
  return e;
}

Classifier train_classifier(Classifier model, const ClassifierConfig& config,
                            const Eigen::MatrixXd& train_counts,
                            std::span<const std::size_t> train_labels,
                            const Eigen::MatrixXd& cv_counts,
                            std::span<const std::size_t> cv_labels,
                            std::vector<EpochMetrics>* curve) {
  if (static_cast<std::size_t>(train_counts.rows()) != train_labels.size() ||
      static_cast<std::size_t>(cv_counts.rows()) != cv_labels.size())
    throw std::invalid_argument("feature and label counts differ");
  if (train_labels.empty()) throw std::invalid_argument("no training rows");
  if (config.batch_size == 0) throw std::invalid_argument("batch size must be positive");

  Rng rng(derive_seed(config.seed, 1));
  const bool has_cv = !cv_labels.empty();
  auto record = [&](std::size_t epoch) {
    const Evaluation tr = evaluate(model, train_counts, train_labels);
    Evaluation cv{};
    if (has_cv) cv = evaluate(model, cv_counts, cv_labels);
    if (curve) curve->push_back({epoch, tr.cross_entropy, cv.cross_entropy, tr.accuracy, cv.accuracy});
    return has_cv ? cv.cross_entropy : tr.cross_entropy;
  };
  if (curve) curve->clear();
  double best = record(0);
  VectorXd best_theta = model.theta;

  VectorXd velocity = VectorXd::Zero(model.theta.size());
  VectorXd g;
  std::vector<std::size_t> order(train_labels.size());
  std::vector<std::size_t> batch_labels;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(std::span(order));
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t stop = std::min(order.size(), start + config.batch_size);
      const std::span<const std::size_t> idx(order.data() + start, stop - start);
      batch_labels.clear();
      for (std::size_t i : idx) batch_labels.push_back(train_labels[i]);
      const double loss = loss_and_gradient(model, model.theta, rows_of(train_counts, idx),
                                            batch_labels, &g);
      if (!std::isfinite(loss))
        throw NumericError("classifier loss is not finite at epoch " + std::to_string(epoch));
      velocity = config.momentum * velocity + g;
      model.theta -= config.learning_rate * velocity;
    }
    const double score = record(epoch);
    if (!config.keep_best_cv || score < best) {
      best = score;
      best_theta = model.theta;
    }
  }
  model.theta = best_theta;
  return model;
}

std::string metrics_csv(std::span<const EpochMetrics> curve, std::uint64_t seed) {
  std::string out = "# seed=" + std::to_string(seed) + "\nepoch,train_xent,cv_xent,train_acc,cv_acc\n";
  for (const auto& m : curve) {
    out += std::to_string(m.epoch) + "," + g17(m.train_xent) + "," + g17(m.cv_xent) + "," +
           g17(m.train_acc) + "," + g17(m.cv_acc) + "\n";
  }
  return out;
}

ComparisonResult compare_classifiers(std::span<const LabeledProgram> corpus,
                                     const ModelParams& pretrained,
                                     const ComparisonConfig& config) {
  const auto labels = label_set(corpus);
  const auto y = label_indices(corpus, labels);
  const SplitSpec s = split(corpus, config.split_seed.value_or(derive_seed(config.seed, 0)));
  const MatrixXd counts = count_matrix(corpus);
  auto pick_y = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> out;
    for (std::size_t i : idx) out.push_back(y[i]);
    return out;
  };
  const MatrixXd xtr = rows_of(counts, s.train), xcv = rows_of(counts, s.cv),
                 xte = rows_of(counts, s.test);
  const auto ytr = pick_y(s.train), ycv = pick_y(s.cv), yte = pick_y(s.test);

  ComparisonResult r;
  r.classes = labels.size();
  r.random_guess = 1.0 / static_cast<double>(labels.size());

  ClassifierConfig lr = config.logistic;
  lr.arch = Architecture::logistic;
  lr.seed = derive_seed(config.seed, 1);
  Classifier m = make_classifier(lr, r.classes, xtr);
  m = train_classifier(std::move(m), lr, xtr, ytr, xcv, ycv, &r.logistic_curve);
  r.logistic = evaluate(m, xte, yte).accuracy;

  // Same seed for both networks: identical layer initialization and batch
  // order, so only the embedding table differs.
  ClassifierConfig net = config.mlp;
  net.arch = Architecture::embedding_mlp;
  net.seed = derive_seed(config.seed, 2);
  Classifier rnd = make_classifier(net, r.classes, xtr, nullptr, pretrained.dim());
  rnd = train_classifier(std::move(rnd), net, xtr, ytr, xcv, ycv, &r.random_curve);
  r.mlp_random = evaluate(rnd, xte, yte).accuracy;

  Classifier pre = make_classifier(net, r.classes, xtr, &pretrained.embeddings);
  pre = train_classifier(std::move(pre), net, xtr, ytr, xcv, ycv, &r.pretrained_curve);
  r.mlp_pretrained = evaluate(pre, xte, yte).accuracy;
  return r;
}

std::string comparison_table(const ComparisonResult& r, std::uint64_t seed) {
  std::string out = "# seed=" + std::to_string(seed) + "\n";
  out += "Method                                         Test accuracy\n";
  out += "Random guess                                   " + pct(r.random_guess) + "\n";
  out += "Logistic regression, node-kind counts          " + pct(r.logistic) + "\n";
  out += "Feed-forward net, random embeddings            " + pct(r.mlp_random) + "\n";
  out += "Feed-forward net, pretrained embeddings        " + pct(r.mlp_pretrained) + "\n";
  out += "\nThe feed-forward networks read the mean embedding of all AST nodes;\n"
         "they stand in for a tree-structured network and are not one.\n";
  return out;
}

}  // namespace astvec
