#include <doctest.h>

#include <cmath>

#include "astvec/coder.hpp"
#include "support.hpp"

using namespace astvec;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Straight-line recomputation of the coded vector, one scalar at a time.
std::vector<double> oracle_code(NodeKind parent_unused, const std::vector<NodeKind>& kids,
                                const std::vector<double>& l, const ModelParams& p) {
  (void)parent_unused;
  const std::size_t nf = p.dim(), n = kids.size();
  std::vector<double> out(nf);
  for (std::size_t r = 0; r < nf; ++r) {
    double z = p.bias[static_cast<Eigen::Index>(r)];
    for (std::size_t i = 0; i < n; ++i) {
      const double a = n == 1 ? 0.5 : double(n - 1 - i) / double(n - 1);
      const double b = n == 1 ? 0.5 : double(i) / double(n - 1);
      for (std::size_t c = 0; c < nf; ++c) {
        const double w = a * p.w_left(Eigen::Index(r), Eigen::Index(c)) +
                         b * p.w_right(Eigen::Index(r), Eigen::Index(c));
        z += l[i] * w * p.embeddings(Eigen::Index(kind_id(kids[i])), Eigen::Index(c));
      }
    }
    out[r] = std::tanh(z);
  }
  return out;
}

double oracle_distance(NodeKind parent, const std::vector<NodeKind>& kids,
                       const std::vector<double>& l, const ModelParams& p) {
  const auto y = oracle_code(parent, kids, l, p);
  double d = 0.0;
  for (std::size_t r = 0; r < y.size(); ++r) {
    const double e = p.embeddings(Eigen::Index(kind_id(parent)), Eigen::Index(r)) - y[r];
    d += e * e;
  }
  return d;
}

TrainingSample random_sample(Rng& rng, std::size_t max_children = 5) {
  TrainingSample s;
  s.parent = kind_at(rng.below(kVocabularySize));
  const std::size_t n = 1 + rng.below(max_children);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s.children.push_back(kind_at(rng.below(kVocabularySize)));
    s.coefficients.push_back(1.0 + static_cast<double>(rng.below(4)));
    total += s.coefficients.back();
  }
  for (double& c : s.coefficients) c /= total;
  return s;
}

Hyperparams hyper_for(std::size_t dim, double lambda) {
  Hyperparams h;
  h.dim = dim;
  h.lambda = lambda;
  return h;
}

}  // namespace

TEST_CASE("child_weight hand cases") {
  using P = std::pair<double, double>;
  CHECK(child_weight(1, 1) == P{0.5, 0.5});
  CHECK(child_weight(2, 1) == P{1.0, 0.0});
  CHECK(child_weight(2, 2) == P{0.0, 1.0});
  CHECK(child_weight(3, 1) == P{1.0, 0.0});
  CHECK(child_weight(3, 2) == P{0.5, 0.5});
  CHECK(child_weight(3, 3) == P{0.0, 1.0});
  CHECK_THROWS_AS(child_weight(3, 0), std::out_of_range);
  CHECK_THROWS_AS(child_weight(3, 4), std::out_of_range);
  CHECK_THROWS_AS(child_weight(0, 1), std::out_of_range);
}

TEST_CASE("child_weight coefficients are nonnegative and sum to one") {
  for (std::size_t n = 1; n <= 40; ++n)
    for (std::size_t i = 1; i <= n; ++i) {
      const auto [a, b] = child_weight(n, i);
      CHECK(a >= 0.0);
      CHECK(b >= 0.0);
      CHECK(std::abs(a + b - 1.0) <= 1e-15);
    }
}

TEST_CASE("init_params draws uniformly in the documented range") {
  Hyperparams h;
  CHECK(std::abs(init_range(30) - std::sqrt(0.1)) < 1e-15);
  CHECK(std::abs(init_range(30) - 0.3162) < 1e-4);
  Rng a(5), b(5);
  const ModelParams p = init_params(h, a);
  CHECK(p == init_params(h, b));
  CHECK(p.embeddings.rows() == 44);
  CHECK(p.embeddings.cols() == 30);
  CHECK(p.w_left.rows() == 30);
  const double r = init_range(30);
  const auto check_range = [&](const auto& m) {
    CHECK(m.maxCoeff() <= r);
    CHECK(m.minCoeff() >= -r);
  };
  check_range(p.embeddings);
  check_range(p.w_left);
  check_range(p.w_right);
  check_range(p.bias);

  h.dim = 200;
  Rng c(6);
  const ModelParams big = init_params(h, c);
  const double n = double(big.w_left.size() + big.w_right.size());
  const double mean = (big.w_left.sum() + big.w_right.sum()) / n;
  const double sigma = init_range(200) / std::sqrt(3.0);
  CHECK(std::abs(mean) <= 3.0 * sigma / std::sqrt(n));
}

TEST_CASE("code_children and distance hand cases") {
  const TrainingSample s{NodeKind::Return, {NodeKind::ID}, {1.0}};
  ModelParams z = zero_params(3);
  CHECK(code_children(s, z).isZero(0.0));
  CHECK(distance(s, z) == 0.0);

  ModelParams p = zero_params(1);
  p.w_left(0, 0) = 2.0;
  p.w_right(0, 0) = 2.0;
  p.bias[0] = 0.5;
  p.embeddings(Eigen::Index(kind_id(NodeKind::ID)), 0) = 0.25;
  CHECK(code_children(s, p)[0] == std::tanh(1.0));
  CHECK(std::abs(code_children(s, p)[0] - 0.76159) < 1e-5);
  p.embeddings(Eigen::Index(kind_id(NodeKind::Return)), 0) = std::tanh(1.0);
  CHECK(distance(s, p) == 0.0);

  ModelParams q = zero_params(2);
  q.embeddings(Eigen::Index(kind_id(NodeKind::Return)), 0) = 1.0;
  CHECK(distance(s, q) == 1.0);
}

TEST_CASE("code_children matches a scalar recomputation and stays inside (-1, 1)") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    Hyperparams h;
    h.dim = 1 + rng.below(6);
    ModelParams p = init_params(h, rng);
    p.w_left *= 3.0;
    const TrainingSample s = random_sample(rng);
    const VectorXd y = code_children(s, p);
    const auto o = oracle_code(s.parent, s.children, s.coefficients, p);
    for (std::size_t r = 0; r < o.size(); ++r) {
      CHECK(std::abs(y[Eigen::Index(r)] - o[r]) <= 1e-12);
      CHECK(std::abs(y[Eigen::Index(r)]) < 1.0);
    }
    CHECK(std::abs(distance(s, p) - oracle_distance(s.parent, s.children, s.coefficients, p)) <= 1e-12);
  }
}

TEST_CASE("hinge_loss hand cases and monotonicity") {
  CHECK(hinge_loss(0.0, 2.0, 1.0) == 0.0);
  CHECK(hinge_loss(0.5, 1.0, 1.0) == 0.5);
  CHECK(hinge_loss(0.7, 0.7, 1.0) == 1.0);
  CHECK(hinge_loss(0.0, 1.0, 1.0) == 0.0);
  for (double d = 0.0; d < 3.0; d += 0.25)
    for (double dc = 0.0; dc < 3.0; dc += 0.25) {
      CHECK(hinge_loss(d, dc, 1.0) >= hinge_loss(d, dc + 0.25, 1.0));
      CHECK(hinge_loss(d, dc, 1.0) <= hinge_loss(d + 0.25, dc, 1.0));
      CHECK((hinge_loss(d, dc, 1.0) == 0.0) == (dc >= d + 1.0));
    }
}

TEST_CASE("all-zero parameters give zero distance and a pair loss equal to the margin") {
  const TrainingSample s{NodeKind::BinaryOp, {NodeKind::ID, NodeKind::Constant}, {0.5, 0.5}};
  const ModelParams z = zero_params(30);
  Rng rng(1);
  const NegativeSample n = corrupt(s, rng);
  Hyperparams h;
  CHECK(distance(s, z) == 0.0);
  CHECK(distance(n, z) == 0.0);
  CHECK(pair_hinge(n, z, h) == h.margin);
  CHECK(pair_loss(n, z, h) == h.margin);
}

TEST_CASE("objective hand cases") {
  const TrainingSample s{NodeKind::Return, {NodeKind::ID}, {1.0}};
  const NegativeSample n{&s, 0, NodeKind::If};
  ModelParams p = zero_params(1);
  p.embeddings(Eigen::Index(kind_id(NodeKind::If)), 0) = 0.9;  // d_c = 0.81, d = 0
  Hyperparams h = hyper_for(1, 0.0);
  h.margin = 0.5;
  const std::vector<NegativeSample> pairs{n};
  CHECK(objective(pairs, p, h) == 0.0);

  h.lambda = 0.5;
  p.w_left(0, 0) = 2.0;
  p.w_right(0, 0) = 1.0;
  // M = 2, penalty = 0.5 / 4 * (4 + 1); the coded vector tanh(1.5 * 0) is still 0.
  CHECK(objective(pairs, p, h) == 0.625);
  CHECK(l2_penalty(p, h) == 0.625);

  h.margin = 1.0;
  h.lambda = 0.0;
  // hinge = 1 + 0 - 0.81 = 0.19, objective = 0.19 / 2.
  CHECK(std::abs(objective(pairs, p, h) - 0.095) < 1e-15);
}

TEST_CASE("objective matches an independent summation") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    Hyperparams h = hyper_for(1 + rng.below(5), 0.01 * double(rng.below(10)));
    const ModelParams p = init_params(h, rng);
    std::vector<TrainingSample> samples;
    for (int i = 0; i < 15; ++i) samples.push_back(random_sample(rng));
    std::vector<NegativeSample> pairs;
    for (const auto& s : samples) pairs.push_back(corrupt(s, rng));
    double sum = 0.0;
    for (const auto& n : pairs) {
      const auto m = n.materialize();
      const double d = oracle_distance(n.base->parent, n.base->children, n.base->coefficients, p);
      const double dc = oracle_distance(m.parent, m.children, m.coefficients, p);
      sum += std::max(0.0, h.margin + d - dc);
    }
    double fro = 0.0;
    for (Eigen::Index i = 0; i < p.w_left.size(); ++i)
      fro += p.w_left.data()[i] * p.w_left.data()[i] + p.w_right.data()[i] * p.w_right.data()[i];
    const double nf = double(h.dim);
    const double expected = sum / (2.0 * 15.0) + h.lambda / (2.0 * 2.0 * nf * nf) * fro;
    CHECK(std::abs(objective(pairs, p, h) - expected) <= 1e-12 * std::max(1.0, expected));
    CHECK(objective(pairs, p, h) >= 0.0);
  }
}

TEST_CASE("gradient is zero when the margin is met and lambda is zero") {
  const TrainingSample s{NodeKind::Return, {NodeKind::ID}, {1.0}};
  const NegativeSample n{&s, 0, NodeKind::If};
  ModelParams p = zero_params(1);
  p.embeddings(Eigen::Index(kind_id(NodeKind::If)), 0) = 0.9;
  Hyperparams h = hyper_for(1, 0.0);
  h.margin = 0.5;
  double j = -1.0;
  CHECK(gradient(n, p, h, &j).is_zero());
  CHECK(j == 0.0);

  // Exactly at the kink the gradient is taken as zero too.
  h.margin = 0.81;
  CHECK(pair_hinge(n, p, h) == 0.0);
  CHECK(gradient(n, p, h).is_zero());

  // With lambda > 0 only the penalty part remains.
  h.lambda = 0.3;
  p.w_left(0, 0) = 0.01;
  h.margin = 0.5;
  const Gradient g = gradient(n, p, h);
  CHECK(g.embeddings.empty());
  CHECK(g.w_left(0, 0) == doctest::Approx(0.3 / 2.0 * 0.01).epsilon(1e-15));
  CHECK(g.bias.isZero(0.0));
}

TEST_CASE("gradient matches central finite differences") {
  Rng rng(2718);
  const double step = 1e-5;
  double worst = 0.0;
  int instances = 0;
  for (std::size_t dim : {2u, 4u}) {
    for (int accepted = 0; accepted < 50;) {
      Hyperparams h = hyper_for(dim, 0.5);
      h.margin = 2.0;  // keep the hinge active so the smooth branch is tested
      ModelParams p = init_params(h, rng);
      const TrainingSample s = random_sample(rng, 4);
      const NegativeSample n = corrupt(s, rng);
      if (pair_hinge(n, p, h) <= 1e-3) continue;
      const Gradient g = gradient(n, p, h);

      std::vector<NodeKind> rows{s.parent, n.new_symbol};
      rows.insert(rows.end(), s.children.begin(), s.children.end());
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

      auto check = [&](double& x, double analytic) {
        const double saved = x;
        x = saved + step;
        const double up = pair_loss(n, p, h);
        x = saved - step;
        const double down = pair_loss(n, p, h);
        x = saved;
        const double numeric = (up - down) / (2.0 * step);
        const double scale = std::max(std::abs(numeric), std::abs(analytic));
        // Entries that are zero analytically only need FD noise to be tiny.
        const double rel = scale > 1e-7 ? std::abs(numeric - analytic) / scale
                                        : std::abs(numeric - analytic) / 1e-7;
        worst = std::max(worst, rel);
      };
      for (NodeKind k : rows) {
        const VectorXd ge = g.embedding(k);
        for (Eigen::Index c = 0; c < p.embeddings.cols(); ++c)
          check(p.embeddings(Eigen::Index(kind_id(k)), c), ge[c]);
      }
      for (Eigen::Index i = 0; i < p.w_left.size(); ++i) {
        check(p.w_left.data()[i], g.w_left.data()[i]);
        check(p.w_right.data()[i], g.w_right.data()[i]);
      }
      for (Eigen::Index i = 0; i < p.bias.size(); ++i) check(p.bias.data()[i], g.bias.data()[i]);
      ++instances;
      ++accepted;
    }
  }
  CHECK(instances == 100);
  CHECK(worst < 1e-4);
  MESSAGE("max relative error " << worst);
}

TEST_CASE("a symbol in two roles gets the sum of the single-role gradients") {
  // Parent and first child share a kind. Split the roles by giving the child
  // a stand-in kind with the same vector and add the two rows back together.
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    Hyperparams h = hyper_for(3, 0.0);
    h.margin = 3.0;
    ModelParams p = init_params(h, rng);
    const TrainingSample shared{NodeKind::Compound, {NodeKind::Compound, NodeKind::Return}, {0.5, 0.5}};
    const TrainingSample split{NodeKind::Compound, {NodeKind::Label, NodeKind::Return}, {0.5, 0.5}};
    p.embeddings.row(Eigen::Index(kind_id(NodeKind::Label))) =
        p.embeddings.row(Eigen::Index(kind_id(NodeKind::Compound)));
    const NegativeSample a{&shared, 2, NodeKind::Break};
    const NegativeSample b{&split, 2, NodeKind::Break};
    const Gradient ga = gradient(a, p, h);
    const Gradient gb = gradient(b, p, h);
    const VectorXd summed = gb.embedding(NodeKind::Compound) + gb.embedding(NodeKind::Label);
    CHECK((ga.embedding(NodeKind::Compound) - summed).norm() <= 1e-12);
    CHECK((ga.w_left - gb.w_left).norm() <= 1e-12);
    CHECK((ga.embedding(NodeKind::Break) - gb.embedding(NodeKind::Break)).norm() <= 1e-12);
  }
}

TEST_CASE("hyperparameter validation") {
  Hyperparams h;
  CHECK_NOTHROW(h.validate());
  h.dim = 0;
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);
  h = {};
  h.margin = -1;
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);
  h = {};
  h.lambda = -0.1;
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);
  h = {};
  h.momentum = 1.0;
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);
  h = {};
  h.learning_rate = -0.001;
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);
  h.learning_rate = 0.0;
  CHECK_NOTHROW(h.validate());
}
