#include "astvec/trainer.hpp"

#include <chrono>
#include <cmath>
#include <numeric>

#include "astvec/error.hpp"

namespace astvec {
namespace {

constexpr double kRelativeTolerance = 1e-4;
constexpr std::size_t kPatience = 3;

// Sub-streams of the master seed.
constexpr std::uint64_t kInitStream = 0;
constexpr std::uint64_t kTrainStream = 1;

std::string where(std::size_t epoch, std::size_t sample) {
  return "epoch " + std::to_string(epoch) + ", sample " + std::to_string(sample);
}

void apply(Checkpoint& s, const Gradient& g) {
  const double eps = s.hyper.momentum;
  const double alpha = s.hyper.learning_rate;
  ModelParams& v = s.velocity;
  ModelParams& p = s.params;
  // One running velocity for every parameter, embedding rows included, so
  // rows not touched by this pair still move by their decayed velocity.
  v.embeddings *= eps;
  for (const auto& [kind, row] : g.embeddings)
    v.embeddings.row(kind_id(kind)) += row.transpose();
  v.w_left = eps * v.w_left + g.w_left;
  v.w_right = eps * v.w_right + g.w_right;
  v.bias = eps * v.bias + g.bias;
  p.embeddings -= alpha * v.embeddings;
  p.w_left -= alpha * v.w_left;
  p.w_right -= alpha * v.w_right;
  p.bias -= alpha * v.bias;
}

}  // namespace

bool has_converged(std::span<const double> history) {
  if (history.size() < kPatience + 1) return false;
  for (std::size_t k = history.size() - kPatience; k < history.size(); ++k) {
    const double prev = history[k - 1];
    const double cur = history[k];
    // A rise is not convergence: SGD noise can push the mean up for a few
    // epochs while the loss is still falling overall.
    const double rel = prev == cur ? 0.0 : std::abs(prev - cur) / std::abs(prev);
    if (!(rel < kRelativeTolerance)) return false;
  }
  return true;
}

Checkpoint start_training(const Hyperparams& hyper) {
  hyper.validate();
  Checkpoint s;
  s.hyper = hyper;
  Rng init(derive_seed(hyper.seed, kInitStream));
  s.params = init_params(hyper, init);
  s.velocity = zero_params(hyper.dim);
  s.rng_state = Rng(derive_seed(hyper.seed, kTrainStream)).state();
  return s;
}

std::size_t continue_training(Checkpoint& s, std::span<const TrainingSample> samples,
                              std::size_t until_epoch) {
  if (samples.empty()) throw std::invalid_argument("training set is empty");
  s.hyper.validate();
  Rng rng;
  rng.restore(s.rng_state);

  std::vector<std::size_t> order(samples.size());
  const std::size_t stop = std::min(until_epoch, s.hyper.epochs);
  std::size_t ran = 0;
  while (s.epoch < stop && !has_converged(s.mean_hinge)) {
    const std::size_t epoch = s.epoch + 1;
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (s.hyper.shuffle) rng.shuffle(std::span(order));

    double total = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t idx = order[k];
      const NegativeSample neg = corrupt(samples[idx], rng);
      double j = 0.0;
      const Gradient g = gradient(neg, s.params, s.hyper, &j);
      if (!std::isfinite(j)) throw NumericError("non-finite loss at " + where(epoch, idx));
      total += j;
      apply(s, g);
    }
    if (!s.params.all_finite())
      throw NumericError("non-finite parameter after epoch " + std::to_string(epoch) +
                         " (last " + where(epoch, order.back()) + ")");

    const double mean = total / static_cast<double>(samples.size());
    s.mean_hinge.push_back(mean);
    s.objective.push_back(mean / 2.0 + l2_penalty(s.params, s.hyper));
    s.epoch = epoch;
    ++ran;
  }
  s.rng_state = rng.state();
  return ran;
}

TrainResult train(std::span<const TrainingSample> samples, const Hyperparams& hyper) {
  const auto t0 = std::chrono::steady_clock::now();
  TrainResult r{{}, {}, start_training(hyper)};
  r.report.epochs_run = continue_training(r.checkpoint, samples, hyper.epochs);
  r.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.report.mean_hinge = r.checkpoint.mean_hinge;
  r.report.objective = r.checkpoint.objective;
  r.report.seed = hyper.seed;
  r.report.converged = has_converged(r.checkpoint.mean_hinge);
  r.params = r.checkpoint.params;
  return r;
}

std::string loss_csv(const Checkpoint& s) {
  std::string out = "# seed=" + std::to_string(s.hyper.seed) + "\n";
  out += "epoch,mean_hinge,objective\n";
  char buf[64];
  for (std::size_t i = 0; i < s.mean_hinge.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i + 1, s.mean_hinge[i],
                  s.objective[i]);
    out += buf;
  }
  return out;
}

}  // namespace astvec
