#include "astvec/coder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace astvec {
namespace {

// Symbols of a sample as seen by the forward pass.
struct View {
  NodeKind parent;
  const TrainingSample* base;
  std::size_t position;  // corrupted slot, or npos for an intact sample
  NodeKind replacement;

  NodeKind child(std::size_t i) const {
    return position == i + 1 ? replacement : base->children[i];
  }
  std::size_t size() const { return base->children.size(); }
};

View view_of(const TrainingSample& s) { return {s.parent, &s, std::size_t(-1), s.parent}; }
View view_of(const NegativeSample& s) {
  return {s.parent(), s.base, s.position, s.new_symbol};
}

struct Forward {
  Eigen::VectorXd u;  // Σ l_i left_i vec(c_i)
  Eigen::VectorXd v;  // Σ l_i right_i vec(c_i)
  Eigen::VectorXd y;
  double d = 0.0;
};

Forward forward(const View& s, const ModelParams& p) {
  const Eigen::Index nf = p.bias.size();
  Forward f;
  f.u = Eigen::VectorXd::Zero(nf);
  f.v = Eigen::VectorXd::Zero(nf);
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto [left, right] = child_weight(n, i + 1);
    const double l = s.base->coefficients[i];
    const auto c = p.embeddings.row(kind_id(s.child(i))).transpose();
    if (left != 0.0) f.u.noalias() += (l * left) * c;
    if (right != 0.0) f.v.noalias() += (l * right) * c;
  }
  f.y = (p.w_left * f.u + p.w_right * f.v + p.bias).array().tanh().matrix();
  f.d = (p.vec(s.parent) - f.y).squaredNorm();
  return f;
}

// Adds sign * ∂d/∂Θ into g.
void backward(const View& s, const ModelParams& p, const Forward& f, double sign,
              Gradient& g) {
  const Eigen::VectorXd e = p.vec(s.parent) - f.y;
  g.add_embedding(s.parent, (2.0 * sign) * e);
  const Eigen::VectorXd dz =
      ((-2.0 * sign) * e.array() * (1.0 - f.y.array().square())).matrix();
  g.w_left.noalias() += dz * f.u.transpose();
  g.w_right.noalias() += dz * f.v.transpose();
  g.bias += dz;
  const Eigen::VectorXd gl = p.w_left.transpose() * dz;
  const Eigen::VectorXd gr = p.w_right.transpose() * dz;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto [left, right] = child_weight(n, i + 1);
    const double l = s.base->coefficients[i];
    g.add_embedding(s.child(i), l * (left * gl + right * gr));
  }
}

void require(bool ok, const char* field) {
  if (!ok) throw std::invalid_argument(std::string("invalid hyperparameter: ") + field);
}

}  // namespace

void Hyperparams::validate() const {
  require(dim >= 1, "dim must be at least 1");
  require(std::isfinite(margin) && margin >= 0.0, "margin must be >= 0");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be >= 0");
  require(std::isfinite(learning_rate) && learning_rate >= 0.0, "learning rate must be >= 0");
  require(std::isfinite(momentum) && momentum >= 0.0 && momentum < 1.0,
          "momentum must be in [0, 1)");
}

bool ModelParams::all_finite() const {
  return embeddings.allFinite() && w_left.allFinite() && w_right.allFinite() &&
         bias.allFinite();
}

bool operator==(const ModelParams& a, const ModelParams& b) {
  auto same = [](const auto& x, const auto& y) {
    return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
  };
  return same(a.embeddings, b.embeddings) && same(a.w_left, b.w_left) &&
         same(a.w_right, b.w_right) && same(a.bias, b.bias);
}

ModelParams zero_params(std::size_t dim) {
  const auto nf = static_cast<Eigen::Index>(dim);
  return ModelParams{Eigen::MatrixXd::Zero(kVocabularySize, nf),
                     Eigen::MatrixXd::Zero(nf, nf), Eigen::MatrixXd::Zero(nf, nf),
                     Eigen::VectorXd::Zero(nf)};
}

double init_range(std::size_t dim) { return std::sqrt(6.0 / (2.0 * static_cast<double>(dim))); }

ModelParams init_params(const Hyperparams& hyper, Rng& rng) {
  ModelParams p = zero_params(hyper.dim);
  const double r = init_range(hyper.dim);
  // Fixed fill order (row-major, in declaration order) so draws are stable.
  auto fill = [&](auto& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform(-r, r);
  };
  fill(p.embeddings);
  fill(p.w_left);
  fill(p.w_right);
  fill(p.bias);
  return p;
}

std::pair<double, double> child_weight(std::size_t n, std::size_t i) {
  if (n < 1 || i < 1 || i > n) {
    throw std::out_of_range("child_weight: position " + std::to_string(i) + " of " +
                            std::to_string(n));
  }
  if (n == 1) return {0.5, 0.5};
  const double denom = static_cast<double>(n - 1);
  return {static_cast<double>(n - i) / denom, static_cast<double>(i - 1) / denom};
}

Eigen::VectorXd code_children(const TrainingSample& sample, const ModelParams& params) {
  return forward(view_of(sample), params).y;
}
Eigen::VectorXd code_children(const NegativeSample& sample, const ModelParams& params) {
  return forward(view_of(sample), params).y;
}

double distance(const TrainingSample& sample, const ModelParams& params) {
  return forward(view_of(sample), params).d;
}
double distance(const NegativeSample& sample, const ModelParams& params) {
  return forward(view_of(sample), params).d;
}

double hinge_loss(double d, double d_c, double delta) {
  return std::max(0.0, delta + d - d_c);
}

double l2_penalty(const ModelParams& params, const Hyperparams& hyper) {
  const double nf = static_cast<double>(params.dim());
  const double m = 2.0 * nf * nf;
  return hyper.lambda / (2.0 * m) *
         (params.w_left.squaredNorm() + params.w_right.squaredNorm());
}

double pair_hinge(const NegativeSample& negative, const ModelParams& params,
                  const Hyperparams& hyper) {
  return hinge_loss(distance(*negative.base, params), distance(negative, params),
                    hyper.margin);
}

double pair_loss(const NegativeSample& negative, const ModelParams& params,
                 const Hyperparams& hyper) {
  return pair_hinge(negative, params, hyper) + l2_penalty(params, hyper);
}

double objective(std::span<const NegativeSample> pairs, const ModelParams& params,
                 const Hyperparams& hyper) {
  double sum = 0.0;
  for (const auto& neg : pairs) sum += pair_hinge(neg, params, hyper);
  const double n = static_cast<double>(pairs.size());
  return sum / (2.0 * n) + l2_penalty(params, hyper);
}

Gradient::Gradient(std::size_t dim)
    : w_left(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                   static_cast<Eigen::Index>(dim))),
      w_right(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim))),
      bias(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim))) {}

void Gradient::add_embedding(NodeKind kind, const Eigen::VectorXd& g) {
  auto [it, inserted] = embeddings.try_emplace(kind, g);
  if (!inserted) it->second += g;
}

Eigen::VectorXd Gradient::embedding(NodeKind kind) const {
  auto it = embeddings.find(kind);
  return it == embeddings.end() ? Eigen::VectorXd::Zero(bias.size()) : it->second;
}

bool Gradient::is_zero() const {
  if (!w_left.isZero(0.0) || !w_right.isZero(0.0) || !bias.isZero(0.0)) return false;
  return std::all_of(embeddings.begin(), embeddings.end(),
                     [](const auto& kv) { return kv.second.isZero(0.0); });
}

Gradient gradient(const NegativeSample& negative, const ModelParams& params,
                  const Hyperparams& hyper, double* hinge) {
  const View pos = view_of(*negative.base);
  const View neg = view_of(negative);
  const Forward fp = forward(pos, params);
  const Forward fn = forward(neg, params);
  const double j = hinge_loss(fp.d, fn.d, hyper.margin);
  if (hinge) *hinge = j;

  Gradient g(params.dim());
  if (j > 0.0) {
    backward(pos, params, fp, 1.0, g);
    backward(neg, params, fn, -1.0, g);
  }
  const double nf = static_cast<double>(params.dim());
  const double scale = hyper.lambda / (2.0 * nf * nf);
  if (scale != 0.0) {
    g.w_left += scale * params.w_left;
    g.w_right += scale * params.w_right;
  }
  return g;
}

}  // namespace astvec
