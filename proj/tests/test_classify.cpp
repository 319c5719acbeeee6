#include <doctest.h>

#include <cmath>

#include "astvec/classify.hpp"
#include "support.hpp"

using namespace astvec;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

AstNode node(NodeKind k, std::vector<AstNode> kids = {}) { return AstNode(k, std::move(kids)); }

void recount(const AstNode& n, std::vector<double>& h) {
  h[kind_id(n.kind)] += 1;
  for (const auto& c : n.children) recount(c, h);
}

std::vector<LabeledProgram> toy_corpus(std::size_t per_label, std::size_t labels) {
  std::vector<LabeledProgram> out;
  Rng rng(3);
  for (std::size_t l = 0; l < labels; ++l)
    for (std::size_t i = 0; i < per_label; ++i)
      out.push_back({testing::random_tree(rng, 3, 10), "label" + std::to_string(l),
                     std::to_string(l) + "/" + std::to_string(i)});
  return out;
}

// Histogram rows for a separable two-class problem: class 0 has many IDs,
// class 1 many Constants.
void separable(MatrixXd& x, std::vector<std::size_t>& y, Rng& rng, std::size_t n) {
  x = MatrixXd::Zero(Eigen::Index(n), kVocabularySize);
  y.clear();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i % 2;
    x(Eigen::Index(i), Eigen::Index(kind_id(NodeKind::ID))) = double(c == 0 ? 8 + rng.below(5) : rng.below(3));
    x(Eigen::Index(i), Eigen::Index(kind_id(NodeKind::Constant))) = double(c == 1 ? 8 + rng.below(5) : rng.below(3));
    x(Eigen::Index(i), Eigen::Index(kind_id(NodeKind::Root))) = 1;
    x(Eigen::Index(i), Eigen::Index(kind_id(NodeKind::Decl))) = double(rng.below(4));
    y.push_back(c);
  }
}

}  // namespace

TEST_CASE("counts and embed_mean of a Root-only tree") {
  const AstNode root(NodeKind::Root);
  const VectorXd h = featurize(root, FeatureMode::counts);
  CHECK(h.size() == 44);
  CHECK(h.sum() == 1.0);
  CHECK(h[Eigen::Index(kind_id(NodeKind::Root))] == 1.0);

  Hyperparams hp;
  Rng rng(1);
  const ModelParams p = init_params(hp, rng);
  CHECK(featurize(root, FeatureMode::embed_mean, &p) == VectorXd(p.vec(NodeKind::Root)));
  CHECK_THROWS_AS(featurize(root, FeatureMode::embed_mean), std::invalid_argument);
}

TEST_CASE("histograms match an independent tally") {
  const AstNode fig = load_ast(read_text_file(testing::fixture("golden/snippet.ast.json")));
  std::vector<double> h(kVocabularySize, 0.0);
  recount(fig, h);
  const VectorXd f = featurize(fig, FeatureMode::counts);
  for (std::size_t i = 0; i < kVocabularySize; ++i) CHECK(f[Eigen::Index(i)] == h[i]);
  CHECK(f[Eigen::Index(kind_id(NodeKind::TypeDecl))] == 2.0);
  CHECK(f.sum() == double(node_count(fig)));

  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const AstNode tree = testing::random_tree(rng);
    std::vector<double> g(kVocabularySize, 0.0);
    recount(tree, g);
    const VectorXd v = featurize(tree, FeatureMode::counts);
    for (std::size_t i = 0; i < kVocabularySize; ++i) CHECK(v[Eigen::Index(i)] == g[i]);
  }
}

TEST_CASE("embed_mean is the mean of the node vectors") {
  Hyperparams hp;
  hp.dim = 3;
  Rng rng(9);
  const ModelParams p = init_params(hp, rng);
  const AstNode t = node(NodeKind::Root, {node(NodeKind::ID), node(NodeKind::ID)});
  const VectorXd expected = (p.vec(NodeKind::Root) + 2.0 * p.vec(NodeKind::ID)) / 3.0;
  CHECK((featurize(t, FeatureMode::embed_mean, &p) - expected).norm() < 1e-15);
}

TEST_CASE("split is stratified 3:1:1, disjoint, exhaustive and seeded") {
  const auto corpus = toy_corpus(5, 4);
  const SplitSpec s = split(corpus, 1);
  CHECK(s.train.size() == 12);
  CHECK(s.cv.size() == 4);
  CHECK(s.test.size() == 4);
  std::vector<std::size_t> all;
  for (const auto* part : {&s.train, &s.cv, &s.test}) all.insert(all.end(), part->begin(), part->end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);
  std::map<std::string, int> per_label_cv;
  for (std::size_t i : s.cv) ++per_label_cv[corpus[i].label];
  for (const auto& [label, n] : per_label_cv) CHECK(n == 1);
  CHECK(per_label_cv.size() == 4);

  const SplitSpec again = split(corpus, 1);
  CHECK(again.train == s.train);
  CHECK(again.test == s.test);
  const SplitSpec other = split(corpus, 2);
  CHECK((other.train != s.train || other.test != s.test));

  const auto big = toy_corpus(60, 4);
  const SplitSpec b = split(big, 7);
  CHECK(b.train.size() == 144);
  CHECK(b.cv.size() == 48);
  CHECK(b.test.size() == 48);

  auto small = toy_corpus(5, 2);
  small.pop_back();
  CHECK_THROWS_AS(split(small, 1), std::invalid_argument);
}

TEST_CASE("cross_entropy closed forms and validation") {
  const std::vector<std::size_t> y{0, 2, 1};
  MatrixXd onehot = MatrixXd::Zero(3, 4);
  onehot(0, 0) = onehot(1, 2) = onehot(2, 1) = 1.0;
  // Strictly positive entries are required; nudge the zeros.
  MatrixXd near = onehot * (1.0 - 3e-300) + MatrixXd::Constant(3, 4, 1e-300);
  CHECK(cross_entropy(near, y) == doctest::Approx(0.0));
  const MatrixXd uniform = MatrixXd::Constant(3, 4, 0.25);
  CHECK(std::abs(cross_entropy(uniform, y) - std::log(4.0)) < 1e-15);
  CHECK(std::abs(std::log(4.0) - 1.3863) < 1e-4);
  CHECK_THROWS_AS(cross_entropy(onehot, y), std::invalid_argument);
  MatrixXd unnormalized = uniform;
  unnormalized(1, 1) = 0.3;
  CHECK_THROWS_AS(cross_entropy(unnormalized, y), std::invalid_argument);

  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    MatrixXd p(7, 3);
    std::vector<std::size_t> labels;
    for (Eigen::Index i = 0; i < 7; ++i) {
      for (Eigen::Index j = 0; j < 3; ++j) p(i, j) = 0.05 + rng.uniform01();
      p.row(i) /= p.row(i).sum();
      labels.push_back(rng.below(3));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        sum -= (labels[i] == j ? 1.0 : 0.0) * std::log(p(Eigen::Index(i), Eigen::Index(j)));
    CHECK(std::abs(cross_entropy(p, labels) - sum / 7.0) < 1e-14);
    CHECK(cross_entropy(p, labels) >= 0.0);
  }
}

TEST_CASE("argmax breaks ties toward the lowest index and ignores logit shifts") {
  MatrixXd s(3, 3);
  s << 1, 1, 0, 0, 2, 2, 5, 5, 5;
  CHECK(argmax_rows(s) == std::vector<std::size_t>{0, 1, 0});
  Rng rng(2);
  MatrixXd z(20, 4);
  for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = rng.uniform(-3, 3);
  const auto before = argmax_rows(z);
  CHECK(argmax_rows((z.array() + 17.5).matrix()) == before);
  CHECK(argmax_rows(softmax_rows(z)) == before);
  CHECK((softmax_rows(z) - softmax_rows((z.array() - 4.0).matrix())).norm() < 1e-14);
}

TEST_CASE("logistic regression separates a separable set") {
  Rng rng(6);
  MatrixXd x;
  std::vector<std::size_t> y;
  separable(x, y, rng, 40);
  ClassifierConfig cfg;
  cfg.arch = Architecture::logistic;
  cfg.epochs = 200;
  cfg.keep_best_cv = false;
  Classifier m = make_classifier(cfg, 2, x);
  m = train_classifier(std::move(m), cfg, x, y, MatrixXd(0, kVocabularySize), {});
  CHECK(evaluate(m, x, y).accuracy == 1.0);
}

TEST_CASE("untrained classifiers are near chance on balanced labels") {
  const auto corpus = testing::bundled_corpus();
  const auto labels = label_set(corpus);
  const auto y = label_indices(corpus, labels);
  const MatrixXd x = count_matrix(corpus);
  double total = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    ClassifierConfig cfg;
    cfg.arch = Architecture::embedding_mlp;
    cfg.seed = std::uint64_t(s);
    const Classifier m = make_classifier(cfg, labels.size(), x, nullptr, 30);
    total += evaluate(m, x, y).accuracy;
  }
  // Mean over seeds of an untrained net: 0.25 expected, generous band.
  CHECK(std::abs(total / seeds - 0.25) < 0.12);
}

TEST_CASE("classifier gradients match finite differences") {
  Rng rng(77);
  double worst = 0.0;
  for (int t = 0; t < 6; ++t) {
    MatrixXd x = MatrixXd::Zero(5, kVocabularySize);
    std::vector<std::size_t> y;
    for (Eigen::Index i = 0; i < 5; ++i) {
      for (int k = 0; k < 6; ++k) x(i, Eigen::Index(rng.below(kVocabularySize))) += 1.0;
      y.push_back(rng.below(3));
    }
    ClassifierConfig cfg;
    cfg.seed = std::uint64_t(t);
    cfg.arch = t % 2 ? Architecture::logistic : Architecture::embedding_mlp;
    cfg.hidden = {5, 4};
    cfg.fine_tune = t != 4;
    const Classifier m = make_classifier(cfg, 3, x, nullptr, t % 3 == 0 ? 2 : 4);
    VectorXd g;
    loss_and_gradient(m, m.theta, x, y, &g);
    VectorXd th = m.theta;
    const std::size_t e_size = cfg.arch == Architecture::embedding_mlp ? kVocabularySize * m.embed_dim : 0;
    for (Eigen::Index i = 0; i < th.size(); ++i) {
      const double saved = th[i];
      th[i] = saved + 1e-5;
      const double up = loss_and_gradient(m, th, x, y, nullptr);
      th[i] = saved - 1e-5;
      const double down = loss_and_gradient(m, th, x, y, nullptr);
      th[i] = saved;
      double numeric = (up - down) / 2e-5;
      if (!m.fine_tune && std::size_t(i) < e_size) {
        CHECK(g[i] == 0.0);
        continue;
      }
      const double scale = std::max(std::abs(numeric), std::abs(g[i]));
      const double rel = scale > 1e-7 ? std::abs(numeric - g[i]) / scale : std::abs(numeric - g[i]) / 1e-7;
      worst = std::max(worst, rel);
    }
  }
  CHECK(worst < 1e-4);
  MESSAGE("max relative error " << worst);
}

TEST_CASE("evaluate agrees with an independent argmax count") {
  const auto corpus = toy_corpus(10, 3);
  const auto labels = label_set(corpus);
  const auto y = label_indices(corpus, labels);
  const MatrixXd x = count_matrix(corpus);
  ClassifierConfig cfg;
  cfg.arch = Architecture::logistic;
  const Classifier m = make_classifier(cfg, labels.size(), x);
  const MatrixXd p = m.predict(x);
  std::size_t hits = 0;
  double xent = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    Eigen::Index best = 0;
    for (Eigen::Index j = 1; j < p.cols(); ++j)
      if (p(i, j) > p(i, best)) best = j;
    hits += std::size_t(best) == y[std::size_t(i)];
    xent -= std::log(p(i, Eigen::Index(y[std::size_t(i)])));
  }
  const Evaluation e = evaluate(m, x, y);
  CHECK(e.accuracy == double(hits) / double(y.size()));
  CHECK(std::abs(e.cross_entropy - xent / double(y.size())) < 1e-12);
}

TEST_CASE("a model that predicts the truth scores 1 and zero cross-entropy") {
  // Large logistic weights on a perfectly separable problem.
  Rng rng(8);
  MatrixXd x;
  std::vector<std::size_t> y;
  separable(x, y, rng, 20);
  ClassifierConfig cfg;
  cfg.arch = Architecture::logistic;
  Classifier m = make_classifier(cfg, 2, x);
  m.theta.setZero();
  // W is 2 x 44 column-major after nothing else; bias follows.
  Eigen::Map<MatrixXd> w(m.theta.data(), 2, kVocabularySize);
  const auto id = Eigen::Index(kind_id(NodeKind::ID));
  const auto c = Eigen::Index(kind_id(NodeKind::Constant));
  w(0, id) = 500.0;
  w(1, c) = 500.0;
  const Evaluation e = evaluate(m, x, y);
  CHECK(e.accuracy == 1.0);
  CHECK(e.cross_entropy < 1e-12);
}

TEST_CASE("training is deterministic") {
  const auto corpus = toy_corpus(10, 3);
  const auto labels = label_set(corpus);
  const auto y = label_indices(corpus, labels);
  const MatrixXd x = count_matrix(corpus);
  ClassifierConfig cfg;
  cfg.arch = Architecture::embedding_mlp;
  cfg.epochs = 5;
  std::vector<EpochMetrics> c1, c2;
  const Classifier a = train_classifier(make_classifier(cfg, 3, x), cfg, x, y, x, y, &c1);
  const Classifier b = train_classifier(make_classifier(cfg, 3, x), cfg, x, y, x, y, &c2);
  CHECK(a.theta == b.theta);
  CHECK(metrics_csv(c1, 1) == metrics_csv(c2, 1));
  CHECK(c1.size() == 6);
  CHECK(metrics_csv(c1, 1).rfind("# seed=1\nepoch,train_xent,cv_xent,train_acc,cv_acc\n0,", 0) == 0);
}

TEST_CASE("frozen embeddings stay fixed during training") {
  const auto corpus = toy_corpus(10, 3);
  const auto labels = label_set(corpus);
  const auto y = label_indices(corpus, labels);
  const MatrixXd x = count_matrix(corpus);
  ClassifierConfig cfg;
  cfg.arch = Architecture::embedding_mlp;
  cfg.epochs = 3;
  cfg.fine_tune = false;
  const Classifier before = make_classifier(cfg, 3, x);
  const Classifier after = train_classifier(before, cfg, x, y, x, y);
  const Eigen::Index e = Eigen::Index(kVocabularySize * before.embed_dim);
  CHECK(after.theta.head(e) == before.theta.head(e));
  CHECK(after.theta.tail(after.theta.size() - e) != before.theta.tail(before.theta.size() - e));
}

TEST_CASE("pretrained embeddings are copied in") {
  Hyperparams hp;
  hp.dim = 6;
  Rng rng(1);
  const ModelParams p = init_params(hp, rng);
  MatrixXd x = MatrixXd::Ones(4, kVocabularySize);
  ClassifierConfig cfg;
  cfg.arch = Architecture::embedding_mlp;
  const Classifier m = make_classifier(cfg, 2, x, &p.embeddings);
  CHECK(m.embed_dim == 6);
  const Eigen::Map<const MatrixXd> e(m.theta.data(), kVocabularySize, 6);
  CHECK(e == p.embeddings);
  const Classifier r = make_classifier(cfg, 2, x, nullptr, 6);
  const Eigen::Index head = Eigen::Index(kVocabularySize * 6);
  // Identical layer weights whatever the embedding source.
  CHECK(m.theta.tail(m.theta.size() - head) == r.theta.tail(r.theta.size() - head));
}
