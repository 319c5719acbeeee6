#include <doctest.h>

#include <filesystem>

#include "astvec/error.hpp"
#include "astvec/trainer.hpp"
#include "support.hpp"

using namespace astvec;

namespace {

std::vector<TrainingSample> small_samples() {
  Rng rng(8);
  std::vector<LabeledProgram> corpus;
  for (int i = 0; i < 6; ++i) corpus.push_back({testing::random_tree(rng, 4, 30), "x", ""});
  return build_training_set(corpus);
}

Hyperparams small_hyper() {
  Hyperparams h;
  h.dim = 4;
  h.epochs = 6;
  h.seed = 42;
  return h;
}

std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "astvec_trainer_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("has_converged examples") {
  const std::vector<double> halving{1, 0.5, 0.25, 0.125, 0.0625, 0.03125};
  CHECK_FALSE(has_converged(halving));
  const std::vector<double> constant{0.3, 0.3, 0.3, 0.3};
  CHECK(has_converged(constant));
  const std::vector<double> short_constant{0.3, 0.3, 0.3};
  CHECK_FALSE(has_converged(short_constant));
  const std::vector<double> slow{1.0, 0.5, 0.49995, 0.49993, 0.49992};
  CHECK(has_converged(slow));
  const std::vector<double> not_yet{1.0, 0.5, 0.49995, 0.49993};
  CHECK_FALSE(has_converged(not_yet));
  const std::vector<double> zero{0.0, 0.0, 0.0, 0.0};
  CHECK(has_converged(zero));
  const std::vector<double> rising{0.5, 0.51, 0.52, 0.53};
  CHECK_FALSE(has_converged(rising));
}

TEST_CASE("zero learning rate keeps the initial parameters") {
  const auto samples = small_samples();
  Hyperparams h = small_hyper();
  h.learning_rate = 0.0;
  const Checkpoint start = start_training(h);
  const auto r = train(samples, h);
  CHECK(r.report.epochs_run > 0);
  CHECK(r.params == start.params);

  h.learning_rate = -0.1;
  CHECK_THROWS_AS(train(samples, h), std::invalid_argument);
}

TEST_CASE("same seed gives bit-identical checkpoints") {
  const auto samples = small_samples();
  const auto a = train(samples, small_hyper());
  const auto b = train(samples, small_hyper());
  CHECK(encode_checkpoint(a.checkpoint) == encode_checkpoint(b.checkpoint));
  Hyperparams other = small_hyper();
  other.seed = 43;
  CHECK(encode_checkpoint(train(samples, other).checkpoint) != encode_checkpoint(a.checkpoint));
}

TEST_CASE("report histories have one entry per epoch") {
  const auto r = train(small_samples(), small_hyper());
  CHECK(r.report.epochs_run == r.report.mean_hinge.size());
  CHECK(r.report.objective.size() == r.report.mean_hinge.size());
  CHECK(r.report.seed == 42);
  CHECK(r.params.all_finite());
}

TEST_CASE("resuming from a checkpoint equals an uninterrupted run") {
  const auto samples = small_samples();
  Hyperparams h = small_hyper();
  const auto full = train(samples, h);

  Checkpoint part = start_training(h);
  continue_training(part, samples, 2);
  CHECK(part.epoch == 2);
  const auto path = temp_path("resume.ck");
  save_checkpoint(part, path);
  Checkpoint resumed = load_checkpoint(path);
  CHECK(resumed == part);
  continue_training(resumed, samples, h.epochs);
  CHECK(resumed.params == full.params);
  CHECK(resumed == full.checkpoint);
}

TEST_CASE("checkpoint round trip and rejection of foreign files") {
  const auto r = train(small_samples(), small_hyper());
  const std::string bytes = encode_checkpoint(r.checkpoint);
  CHECK(decode_checkpoint(bytes) == r.checkpoint);
  const Checkpoint fresh = start_training(small_hyper());
  CHECK(decode_checkpoint(encode_checkpoint(fresh)) == fresh);

  std::string wrong_vocab = bytes;
  wrong_vocab[12] ^= 0x5a;  // first byte of the fingerprint
  CHECK_THROWS_AS(decode_checkpoint(wrong_vocab), FormatError);
  std::string wrong_version = bytes;
  wrong_version[8] = 99;
  CHECK_THROWS_AS(decode_checkpoint(wrong_version), FormatError);
  CHECK_THROWS_AS(decode_checkpoint(bytes.substr(0, bytes.size() - 3)), FormatError);
  CHECK_THROWS_AS(decode_checkpoint("ASTVECCX"), FormatError);
  CHECK_THROWS_AS(load_checkpoint(temp_path("missing.ck")), IoError);
}

TEST_CASE("zero momentum is plain SGD") {
  const auto samples = small_samples();
  Hyperparams h = small_hyper();
  h.momentum = 0.0;
  h.epochs = 2;
  h.shuffle = false;
  const auto r = train(samples, h);

  // Reference: plain SGD with the same negative draws.
  Checkpoint ref = start_training(h);
  Rng rng;
  rng.restore(ref.rng_state);
  ModelParams p = ref.params;
  for (std::size_t e = 0; e < 2; ++e) {
    for (const auto& s : samples) {
      const NegativeSample n = corrupt(s, rng);
      const Gradient g = gradient(n, p, h);
      for (const auto& [k, row] : g.embeddings)
        p.embeddings.row(Eigen::Index(kind_id(k))) -= h.learning_rate * row.transpose();
      p.w_left -= h.learning_rate * g.w_left;
      p.w_right -= h.learning_rate * g.w_right;
      p.bias -= h.learning_rate * g.bias;
    }
  }
  CHECK((r.params.embeddings - p.embeddings).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((r.params.w_left - p.w_left).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("per-epoch orders come from the seeded stream and differ between epochs") {
  const Checkpoint s = start_training(small_hyper());
  Rng rng;
  rng.restore(s.rng_state);
  std::vector<std::size_t> first(50), second(50);
  for (std::size_t i = 0; i < 50; ++i) first[i] = second[i] = i;
  rng.shuffle(std::span(first));
  rng.shuffle(std::span(second));
  CHECK(first != second);
}

TEST_CASE("non-finite losses abort with the epoch and sample") {
  auto samples = small_samples();
  Hyperparams h = small_hyper();
  h.learning_rate = 1e300;
  h.margin = 1e300;
  try {
    train(samples, h);
    FAIL("expected a numeric error");
  } catch (const NumericError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("epoch") != std::string::npos);
    CHECK(msg.find("sample") != std::string::npos);
  }
}

TEST_CASE("empty training set is rejected") {
  CHECK_THROWS_AS(train({}, small_hyper()), std::invalid_argument);
}

TEST_CASE("loss CSV layout") {
  const auto r = train(small_samples(), small_hyper());
  const std::string csv = loss_csv(r.checkpoint);
  CHECK(csv.rfind("# seed=42\nepoch,mean_hinge,objective\n1,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + long(r.report.epochs_run));
}
