// Acceptance run: every criterion prints one PASS or FAIL line; the exit
// status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "astvec/analysis.hpp"
#include "astvec/classify.hpp"
#include "astvec/cli.hpp"
#include "astvec/coder.hpp"
#include "astvec/error.hpp"
#include "astvec/sampling.hpp"
#include "astvec/trainer.hpp"
#include "support.hpp"

using namespace astvec;
using Eigen::MatrixXd;
using Eigen::VectorXd;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double relative_error(double numeric, double analytic) {
  const double scale = std::max(std::abs(numeric), std::abs(analytic));
  return scale > 1e-7 ? std::abs(numeric - analytic) / scale : std::abs(numeric - analytic) / 1e-7;
}

// --- 1. gradients ----------------------------------------------------------

double coder_fd_worst(int instances) {
  Rng rng(20240601);
  double worst = 0.0;
  int accepted = 0;
  while (accepted < instances) {
    Hyperparams h;
    h.dim = accepted % 2 ? 4 : 2;
    h.margin = 2.0;
    h.lambda = 0.5;
    ModelParams p = init_params(h, rng);
    const auto samples = extract_samples(testing::random_tree(rng, 3, 12));
    if (samples.empty()) continue;
    const TrainingSample& s = samples[rng.below(samples.size())];
    const NegativeSample n = corrupt(s, rng);
    // Away from the kink the loss is smooth and finite differences apply.
    if (pair_hinge(n, p, h) <= 1e-3) continue;
    const Gradient g = gradient(n, p, h);
    auto check = [&](double& x, double analytic) {
      const double saved = x;
      x = saved + 1e-5;
      const double up = pair_loss(n, p, h);
      x = saved - 1e-5;
      const double down = pair_loss(n, p, h);
      x = saved;
      worst = std::max(worst, relative_error((up - down) / 2e-5, analytic));
    };
    for (std::size_t r = 0; r < kVocabularySize; ++r) {
      const VectorXd ge = g.embedding(kind_at(r));
      for (Eigen::Index c = 0; c < p.embeddings.cols(); ++c)
        check(p.embeddings(Eigen::Index(r), c), ge[c]);
    }
    for (Eigen::Index i = 0; i < p.w_left.size(); ++i) {
      check(p.w_left.data()[i], g.w_left.data()[i]);
      check(p.w_right.data()[i], g.w_right.data()[i]);
    }
    for (Eigen::Index i = 0; i < p.bias.size(); ++i) check(p.bias.data()[i], g.bias.data()[i]);
    ++accepted;
  }
  return worst;
}

double classifier_fd_worst(int instances) {
  Rng rng(20240602);
  double worst = 0.0;
  for (int t = 0; t < instances; ++t) {
    MatrixXd x = MatrixXd::Zero(4, kVocabularySize);
    std::vector<std::size_t> y;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      for (int k = 0; k < 8; ++k) x(i, Eigen::Index(rng.below(kVocabularySize))) += 1.0;
      y.push_back(rng.below(4));
    }
    ClassifierConfig cfg;
    cfg.seed = std::uint64_t(t);
    cfg.arch = t % 4 == 3 ? Architecture::logistic : Architecture::embedding_mlp;
    cfg.hidden = {4, 3};
    const Classifier m = make_classifier(cfg, 4, x, nullptr, t % 2 ? 4 : 2);
    VectorXd g;
    loss_and_gradient(m, m.theta, x, y, &g);
    VectorXd th = m.theta;
    for (Eigen::Index i = 0; i < th.size(); ++i) {
      const double saved = th[i];
      th[i] = saved + 1e-5;
      const double up = loss_and_gradient(m, th, x, y, nullptr);
      th[i] = saved - 1e-5;
      const double down = loss_and_gradient(m, th, x, y, nullptr);
      th[i] = saved;
      worst = std::max(worst, relative_error((up - down) / 2e-5, g[i]));
    }
  }
  return worst;
}

void criterion1() {
  const auto start = Clock::now();
  const double coder = coder_fd_worst(100);
  const double cls = classifier_fd_worst(100);
  const double secs = seconds_since(start);
  report(1, coder < 1e-4 && cls < 1e-4 && secs < 60.0,
         "max relative error coder " + fmt("%.2e", coder) + ", classifier " + fmt("%.2e", cls) +
             " (100 instances each, N_f in {2,4}), " + fmt("%.1f", secs) + " s");
}

// --- 2. formulas -----------------------------------------------------------

AstNode leaf(NodeKind k) { return AstNode(k); }
AstNode with_leaves(NodeKind k, std::size_t leaves) {
  AstNode n(k);
  for (std::size_t i = 0; i < leaves; ++i) n.children.push_back(leaf(NodeKind::ID));
  return n;
}

void criterion2() {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };
  using W = std::pair<double, double>;
  expect(child_weight(3, 1) == W{1.0, 0.0} && child_weight(3, 2) == W{0.5, 0.5} &&
             child_weight(3, 3) == W{0.0, 1.0},
         "child_weight n=3");
  expect(child_weight(1, 1) == W{0.5, 0.5}, "child_weight n=1");
  expect(child_weight(2, 1) == W{1.0, 0.0} && child_weight(2, 2) == W{0.0, 1.0}, "child_weight n=2");
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t i = 1; i <= n; ++i) {
      const auto [l, r] = child_weight(n, i);
      expect(std::abs(l + r - 1.0) < 1e-12, "child_weight sum");
    }

  const auto two = extract_samples(AstNode(NodeKind::If, {leaf(NodeKind::ID), leaf(NodeKind::Constant)}));
  expect(two.size() == 1 && two[0].coefficients == std::vector<double>{0.5, 0.5}, "l_i [0.5, 0.5]");
  const auto mixed = extract_samples(
      AstNode(NodeKind::If, {with_leaves(NodeKind::BinaryOp, 2), with_leaves(NodeKind::FuncCall, 3)}));
  expect(!mixed.empty() && mixed[0].coefficients.size() == 2 &&
             std::abs(mixed[0].coefficients[0] - 0.4) < 1e-12 &&
             std::abs(mixed[0].coefficients[1] - 0.6) < 1e-12,
         "l_i [0.4, 0.6]");
  expect(extract_samples(leaf(NodeKind::ID)).empty(), "leaf has no samples");

  expect(hinge_loss(0.0, 2.0, 1.0) == 0.0, "hinge satisfied");
  expect(hinge_loss(0.5, 1.0, 1.0) == 0.5, "hinge 0.5");
  expect(hinge_loss(0.7, 0.7, 1.0) == 1.0, "hinge tie");

  ModelParams one = zero_params(1);
  one.w_left(0, 0) = one.w_right(0, 0) = 2.0;
  one.bias[0] = 0.5;
  one.embeddings(Eigen::Index(kind_id(NodeKind::ID)), 0) = 0.25;
  const TrainingSample single{NodeKind::Return, {NodeKind::ID}, {1.0}};
  expect(std::abs(code_children(single, one)[0] - std::tanh(1.0)) < 1e-12 &&
             std::abs(code_children(single, one)[0] - 0.76159) < 1e-5,
         "code_children tanh(1)");

  ModelParams two_d = zero_params(2);
  two_d.embeddings(Eigen::Index(kind_id(NodeKind::Return)), 0) = 1.0;
  const TrainingSample s2{NodeKind::Return, {NodeKind::ID}, {1.0}};
  expect(distance(s2, two_d) == 1.0, "distance (1,0) vs 0");
  expect(distance(s2, zero_params(2)) == 0.0, "distance zero params");

  // N_f = 1, W_l = 1, W_r = 2, every hinge term zero.
  ModelParams p = zero_params(1);
  p.w_left(0, 0) = 1.0;
  p.w_right(0, 0) = 2.0;
  p.embeddings(Eigen::Index(kind_id(NodeKind::Constant)), 0) = 10.0;
  const TrainingSample base{NodeKind::Return, {NodeKind::ID}, {1.0}};
  NegativeSample neg;
  neg.base = &base;
  neg.position = 0;
  neg.new_symbol = NodeKind::Constant;
  const std::vector<NegativeSample> pairs{neg, neg};
  Hyperparams h;
  h.dim = 1;
  h.lambda = 0.0;
  expect(objective(pairs, p, h) == 0.0, "objective lambda=0, margins satisfied");
  h.lambda = 0.5;
  // 0.5 / (2 * 2) * (1 + 4)
  expect(objective(pairs, p, h) == 0.625, "objective penalty only");
  expect(std::abs(init_range(30) - 0.3162) < 1e-4, "init range N_f=30");

  std::string detail = "child_weight, l_i, hinge, code, distance and objective hand cases";
  for (const auto& f : failed) detail += "; mismatch: " + f;
  report(2, failed.empty(), detail);
}

// --- shared trained models -------------------------------------------------

struct Run {
  std::uint64_t seed;
  TrainResult result;
};

constexpr int kSeeds = 5;

std::vector<Run> train_runs(std::span<const TrainingSample> samples, double& seconds) {
  const auto start = Clock::now();
  std::vector<Run> runs;
  for (int s = 1; s <= kSeeds; ++s) {
    Hyperparams h;
    h.seed = std::uint64_t(s);
    h.epochs = 40;
    runs.push_back({h.seed, train(samples, h)});
  }
  seconds = seconds_since(start);
  return runs;
}

// --- 3. trivial solution ---------------------------------------------------

void criterion3(std::span<const TrainingSample> samples, const std::vector<Run>& runs) {
  const ModelParams zero = zero_params(30);
  Hyperparams h;
  Rng rng(3);
  bool zero_ok = true;
  for (const auto& s : samples) {
    if (distance(s, zero) != 0.0) zero_ok = false;
    if (pair_loss(corrupt(s, rng), zero, h) != h.margin) zero_ok = false;
  }
  bool escaped = true;
  std::string finals;
  for (const auto& r : runs) {
    const double last = r.result.report.mean_hinge.back();
    escaped = escaped && last < h.margin;
    finals += (finals.empty() ? "" : ", ") + fmt("%.4f", last);
  }
  report(3, zero_ok && escaped,
         std::string("zero params give d=0 and pair loss=margin on ") + std::to_string(samples.size()) +
             " samples: " + (zero_ok ? "yes" : "no") + "; final mean hinge per seed " + finals +
             " (margin 1)");
}

// --- 4. descent ------------------------------------------------------------

void criterion4(const std::vector<Run>& runs, double seconds, std::size_t programs) {
  int good = 0;
  std::string ratios;
  for (const auto& r : runs) {
    const auto& m = r.result.report.mean_hinge;
    const double ratio = m.back() / m.front();
    good += ratio <= 0.5;
    ratios += (ratios.empty() ? "" : ", ") + fmt("%.3f", ratio);
  }
  report(4, good >= 4 && seconds < 600.0,
         std::to_string(good) + "/5 seeds with loss(epoch 40) <= 50% of loss(epoch 1); ratios " +
             ratios + "; " + std::to_string(programs) + " programs, " + fmt("%.0f", seconds) + " s");
}

// --- 5. neighbors ----------------------------------------------------------

bool in_top5(const ModelParams& p, NodeKind query, NodeKind target) {
  const auto list = nearest_neighbors(p, query, 5);
  return std::any_of(list.ranked.begin(), list.ranked.end(),
                     [&](const auto& n) { return n.first == target; });
}

void criterion5(const std::vector<Run>& runs) {
  const std::vector<NodeKind> loops{NodeKind::For, NodeKind::While, NodeKind::If, NodeKind::Break};
  int good = 0;
  std::string detail;
  for (const auto& r : runs) {
    const auto& p = r.result.params;
    const bool constant = in_top5(p, NodeKind::ID, NodeKind::Constant);
    std::string mutual;
    for (std::size_t a = 0; a < loops.size(); ++a)
      for (std::size_t b = a + 1; b < loops.size(); ++b)
        if (in_top5(p, loops[a], loops[b]) && in_top5(p, loops[b], loops[a]))
          mutual += std::string(mutual.empty() ? "" : " ") + std::string(kind_name(loops[a])) + "~" +
                    std::string(kind_name(loops[b]));
    const bool ok = constant && !mutual.empty();
    good += ok;
    detail += "; seed " + std::to_string(r.seed) + ": Constant " + (constant ? "yes" : "no") +
              ", mutual [" + mutual + "]";
  }
  report(5, good >= 3, std::to_string(good) + "/5 runs satisfy both conditions" + detail);
}

// --- 6. clusters -----------------------------------------------------------

void criterion6(const std::vector<Run>& runs) {
  const std::vector<NodeKind> control{NodeKind::If,    NodeKind::For,    NodeKind::While, NodeKind::Break,
                                      NodeKind::Continue, NodeKind::Switch, NodeKind::Case};
  const std::vector<NodeKind> decl{NodeKind::FuncDecl, NodeKind::ArrayDecl, NodeKind::PtrDecl,
                                   NodeKind::TypeDecl, NodeKind::Decl};
  double within_sum = 0.0, cross_sum = 0.0;
  std::string detail;
  for (const auto& r : runs) {
    const Clustering c = kmeans(r.result.params, 3, 16, r.seed);
    auto cl = [&](NodeKind k) { return c.assignment[kind_id(k)]; };
    int same = 0, pairs = 0;
    for (std::size_t a = 0; a < control.size(); ++a)
      for (std::size_t b = a + 1; b < control.size(); ++b) {
        same += cl(control[a]) == cl(control[b]);
        ++pairs;
      }
    const double within = double(same) / pairs;
    same = pairs = 0;
    for (NodeKind a : control)
      for (NodeKind b : decl) {
        same += cl(a) == cl(b);
        ++pairs;
      }
    const double cross = double(same) / pairs;
    within_sum += within;
    cross_sum += cross;
    detail += "; seed " + std::to_string(r.seed) + " " + fmt("%.2f", within) + "/" + fmt("%.2f", cross);
  }
  const double within = within_sum / kSeeds, cross = cross_sum / kSeeds;
  report(6, within - cross >= 0.2,
         "mean within-group rate " + fmt("%.3f", within) + " vs cross-group " + fmt("%.3f", cross) +
             " (difference " + fmt("%.3f", within - cross) + ", need >= 0.2)" + detail);
}

// --- 7. classification -----------------------------------------------------

void criterion7(std::span<const LabeledProgram> corpus, const std::vector<Run>& runs) {
  const auto start = Clock::now();
  double random = 0.0, lr = 0.0, rnd = 0.0, pre = 0.0;
  std::string detail;
  const std::uint64_t split_seed = derive_seed(1, 0);
  for (int s = 1; s <= 3; ++s) {
    ComparisonConfig cfg;
    cfg.seed = std::uint64_t(s);
    cfg.split_seed = split_seed;
    const ComparisonResult r = compare_classifiers(corpus, runs[std::size_t(s - 1)].result.params, cfg);
    random += r.random_guess / 3;
    lr += r.logistic / 3;
    rnd += r.mlp_random / 3;
    pre += r.mlp_pretrained / 3;
    detail += "; seed " + std::to_string(s) + " LR " + fmt("%.1f", 100 * r.logistic) + " random-E " +
              fmt("%.1f", 100 * r.mlp_random) + " pretrained " + fmt("%.1f", 100 * r.mlp_pretrained);
  }
  const double secs = seconds_since(start);
  const bool a = lr >= random + 0.30;
  const bool b = pre >= rnd && pre >= lr - 0.02;
  report(7, a && b && secs < 900.0,
         "mean test accuracy: random guess " + fmt("%.1f", 100 * random) + ", logistic " +
             fmt("%.1f", 100 * lr) + ", network random E " + fmt("%.1f", 100 * rnd) +
             ", network pretrained E " + fmt("%.1f", 100 * pre) + detail + "; " + fmt("%.0f", secs) + " s");
}

// --- 8. determinism --------------------------------------------------------

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "astvec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files[fs::relative(e.path(), dir).generic_string()] = read_text_file(e.path());
  return files;
}

std::map<std::string, std::string> pipeline(const fs::path& dir) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto at = [&](const std::string& rel) { return (dir / rel).string(); };
  std::map<std::string, std::string> stdout_of;
  auto step = [&](const std::string& name, std::vector<std::string> args) {
    const CliRun r = cli(std::move(args));
    stdout_of[name] = std::to_string(r.code) + "\n" + r.out;
  };
  step("corpus", {"corpus-build", "--root", (testing::source_dir() / "data" / "corpus").string(), "--out",
                  at("corpus.jsonl")});
  step("train", {"train", "--corpus", at("corpus.jsonl"), "--out", at("model.ckpt"), "--epochs", "2",
                 "--seed", "7", "--loss-csv", at("loss.csv")});
  step("nn", {"nn", "--checkpoint", at("model.ckpt"), "--symbol", "ID", "--report-dir", at("report")});
  step("cluster", {"cluster", "--checkpoint", at("model.ckpt"), "--k", "3", "--out", at("clusters.csv")});
  step("classify", {"classify", "--corpus", at("corpus.jsonl"), "--checkpoint", at("model.ckpt"), "--seed",
                    "7", "--epochs", "3", "--lr-epochs", "3", "--metrics-dir", at("metrics")});
  step("export", {"export", "--checkpoint", at("model.ckpt"), "--out", at("embeddings.txt")});
  auto files = snapshot(dir);
  for (const auto& [name, text] : stdout_of) files["stdout:" + name] = text;
  return files;
}

void criterion8() {
  const fs::path tmp = fs::temp_directory_path() / "astvec_acceptance";
  const auto a = pipeline(tmp / "a");
  const auto b = pipeline(tmp / "b");
  std::vector<std::string> differing;
  for (const auto& [name, text] : a) {
    auto it = b.find(name);
    if (it == b.end() || it->second != text) differing.push_back(name);
  }
  bool codes_ok = true;
  for (const auto& [name, text] : a)
    if (name.rfind("stdout:", 0) == 0 && text.rfind("0\n", 0) != 0) codes_ok = false;
  const bool ok = a.size() == b.size() && differing.empty() && codes_ok && a.count("model.ckpt") &&
                  a.count("metrics/mlp_pretrained.csv") && a.count("report/report.txt");
  std::string detail = std::to_string(a.size()) + " artifacts and outputs compared byte for byte";
  for (const auto& d : differing) detail += "; differs: " + d;
  if (!codes_ok) detail += "; a command failed";
  report(8, ok, detail);
  fs::remove_all(tmp);
}

// --- 9. parser golden suite ------------------------------------------------

void criterion9() {
  std::size_t golden = 0, golden_ok = 0;
  std::string detail;
  for (const auto& c : testing::files_in(testing::fixture("golden"), ".c")) {
    ++golden;
    fs::path expected = c;
    expected.replace_extension(".ast.json");
    try {
      if (dump_ast(cparse::parse_file(c)) == testing::trim_newline(read_text_file(expected))) ++golden_ok;
      else detail += "; mismatch " + c.filename().string();
    } catch (const Error& e) {
      detail += "; error " + c.filename().string() + ": " + e.what();
    }
  }
  const bool snippet = fs::exists(testing::fixture("golden/snippet.c"));

  std::map<std::string, std::pair<int, int>> positions;
  std::ifstream in(testing::fixture("invalid/positions.txt"));
  std::string name;
  int line = 0, col = 0;
  while (in >> name >> line >> col) positions[name] = {line, col};
  std::size_t invalid = 0, invalid_ok = 0;
  for (const auto& c : testing::files_in(testing::fixture("invalid"), ".c")) {
    ++invalid;
    try {
      cparse::parse_file(c);
      detail += "; accepted " + c.filename().string();
    } catch (const SourceError& e) {
      const auto it = positions.find(c.filename().string());
      if (it != positions.end() && it->second == std::pair{e.line(), e.column()}) ++invalid_ok;
      else detail += "; wrong position " + c.filename().string();
    }
  }
  report(9, snippet && golden >= 21 && golden_ok == golden && invalid > 0 && invalid_ok == invalid,
         std::to_string(golden_ok) + "/" + std::to_string(golden) + " golden dumps byte-equal (including snippet), " +
             std::to_string(invalid_ok) + "/" + std::to_string(invalid) +
             " invalid fixtures rejected at the expected line:column" + detail);
}

// --- 10. oracles -----------------------------------------------------------

double exhaustive_inertia(const MatrixXd& x, std::size_t k) {
  const std::size_t n = std::size_t(x.rows());
  std::vector<std::size_t> a(n, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<Eigen::RowVectorXd> sum(k, Eigen::RowVectorXd::Zero(x.cols()));
    std::vector<double> sq(k, 0.0);
    std::vector<std::size_t> count(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      sum[a[i]] += x.row(Eigen::Index(i));
      sq[a[i]] += x.row(Eigen::Index(i)).squaredNorm();
      ++count[a[i]];
    }
    double cost = 0.0;
    bool full = true;
    for (std::size_t c = 0; c < k; ++c) {
      if (count[c] == 0) full = false;
      else cost += sq[c] - sum[c].squaredNorm() / double(count[c]);
    }
    if (full) best = std::min(best, cost);
    std::size_t pos = 0;
    while (pos < n && ++a[pos] == k) a[pos++] = 0;
    if (pos == n) break;
  }
  return best;
}

void count_nodes(const AstNode& n, std::vector<double>& h, std::size_t& internal) {
  h[kind_id(n.kind)] += 1;
  if (!n.children.empty()) ++internal;
  for (const auto& c : n.children) count_nodes(c, h, internal);
}

void criterion10(std::span<const LabeledProgram> corpus) {
  Rng rng(10);
  int km_total = 0, km_ok = 0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 8 + std::size_t(t % 5);  // 8..12 points
    const std::size_t k = 2 + std::size_t(t % 2);
    MatrixXd x(Eigen::Index(n), 2);
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      // Half the sets are loose blobs, half uniform noise.
      const double cx = t < 10 ? 6.0 * double(std::size_t(i) % k) : 0.0;
      x(i, 0) = cx + rng.uniform(-1, 1);
      x(i, 1) = rng.uniform(-1, 1);
    }
    const double oracle = exhaustive_inertia(x, k);
    const Clustering c = kmeans(x, k, 32, std::uint64_t(t));
    ++km_total;
    km_ok += std::abs(c.inertia - oracle) <= 1e-9 * std::max(1.0, oracle);
  }

  int xent_total = 0, xent_ok = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 1 + rng.below(10), cols = 2 + rng.below(5);
    MatrixXd p(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::vector<std::size_t> y;
    for (std::size_t i = 0; i < rows; ++i) {
      double total = 0.0;
      for (std::size_t j = 0; j < cols; ++j) total += p(Eigen::Index(i), Eigen::Index(j)) = 0.01 + rng.uniform01();
      for (std::size_t j = 0; j < cols; ++j) p(Eigen::Index(i), Eigen::Index(j)) /= total;
      y.push_back(rng.below(cols));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) sum += -std::log(p(Eigen::Index(i), Eigen::Index(y[i])));
    ++xent_total;
    xent_ok += std::abs(cross_entropy(p, y) - sum / double(rows)) < 1e-12;
  }

  std::size_t hist_ok = 0, internal_total = 0;
  for (const auto& prog : corpus) {
    std::vector<double> h(kVocabularySize, 0.0);
    std::size_t internal = 0;
    count_nodes(prog.ast, h, internal);
    internal_total += internal;
    const VectorXd f = featurize(prog.ast, FeatureMode::counts);
    bool same = true;
    for (std::size_t i = 0; i < kVocabularySize; ++i) same = same && f[Eigen::Index(i)] == h[i];
    hist_ok += same;
  }
  const std::size_t samples = build_training_set(corpus).size();

  report(10, km_ok == km_total && xent_ok == xent_total && hist_ok == corpus.size() &&
                 samples == internal_total,
         "k-means matches exhaustive search " + std::to_string(km_ok) + "/" + std::to_string(km_total) +
             " (8-12 points), cross-entropy " + std::to_string(xent_ok) + "/" + std::to_string(xent_total) +
             ", histograms " + std::to_string(hist_ok) + "/" + std::to_string(corpus.size()) +
             ", sample count " + std::to_string(samples) + " vs recount " + std::to_string(internal_total));
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    const auto corpus = testing::bundled_corpus();
    const auto samples = build_training_set(corpus);
    double train_seconds = 0.0;
    const auto runs = train_runs(samples, train_seconds);
    criterion3(samples, runs);
    criterion4(runs, train_seconds, corpus.size());
    criterion5(runs);
    criterion6(runs);
    criterion7(corpus, runs);
    criterion8();
    criterion9();
    criterion10(corpus);
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
