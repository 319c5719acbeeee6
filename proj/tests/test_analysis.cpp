#include <doctest.h>

#include <filesystem>
#include <limits>

#include "astvec/analysis.hpp"
#include "support.hpp"

using namespace astvec;
using Eigen::MatrixXd;

namespace {

ModelParams random_params(std::uint64_t seed, std::size_t dim = 5) {
  Hyperparams h;
  h.dim = dim;
  Rng rng(seed);
  return init_params(h, rng);
}

// Lowest inertia over every assignment of n points to k labelled clusters.
double brute_force_inertia(const MatrixXd& x, std::size_t k, std::vector<std::size_t>& best) {
  const std::size_t n = static_cast<std::size_t>(x.rows());
  std::vector<std::size_t> a(n, 0);
  double best_cost = std::numeric_limits<double>::infinity();
  while (true) {
    double cost = 0.0;
    bool all_used = true;
    for (std::size_t c = 0; c < k; ++c) {
      Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(x.cols());
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] == c) {
          mean += x.row(Eigen::Index(i));
          ++count;
        }
      if (count == 0) {
        all_used = false;
        break;
      }
      mean /= double(count);
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] == c) cost += (x.row(Eigen::Index(i)) - mean).squaredNorm();
    }
    if (all_used && cost < best_cost) {
      best_cost = cost;
      best = a;
    }
    std::size_t pos = 0;
    while (pos < n && ++a[pos] == k) a[pos++] = 0;
    if (pos == n) break;
  }
  return best_cost;
}

// Same partition regardless of cluster numbering.
bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("neighbors on a line") {
  MatrixXd pts(3, 2);
  pts << 0, 0, 1, 0, 3, 0;
  const auto r = rank_neighbors(pts, 0, 2);
  REQUIRE(r.size() == 2);
  CHECK(r[0].index == 1);
  CHECK(r[0].distance == 1.0);
  CHECK(r[1].index == 2);
  CHECK(r[1].distance == 3.0);
  CHECK_THROWS_AS(rank_neighbors(pts, 0, 3), std::out_of_range);
  CHECK_THROWS_AS(rank_neighbors(pts, 0, 0), std::out_of_range);
}

TEST_CASE("ties are broken by index") {
  MatrixXd pts(4, 1);
  pts << 0, 1, -1, 1;
  const auto r = rank_neighbors(pts, 0, 3);
  CHECK(r[0].index == 1);
  CHECK(r[1].index == 2);
  CHECK(r[2].index == 3);
}

TEST_CASE("nearest_neighbors excludes the query and is sorted") {
  const ModelParams p = random_params(1);
  for (const auto& info : vocabulary()) {
    const auto list = nearest_neighbors(p, info.kind, kVocabularySize - 1);
    CHECK(list.ranked.size() == kVocabularySize - 1);
    for (std::size_t i = 0; i < list.ranked.size(); ++i) {
      CHECK(list.ranked[i].first != info.kind);
      if (i) CHECK(list.ranked[i - 1].second <= list.ranked[i].second);
    }
  }
  CHECK_THROWS_AS(nearest_neighbors(p, "Lambda", 5), std::invalid_argument);
  CHECK(nearest_neighbors(p, "ID", 5).ranked.size() == 5);
  CHECK(nearest_neighbors(p, "ID", 5, Metric::cosine).ranked.size() == 5);
}

TEST_CASE("ranking is invariant under translating every embedding") {
  const ModelParams p = random_params(2);
  ModelParams q = p;
  Eigen::RowVectorXd shift = Eigen::RowVectorXd::Constant(p.dim(), 0.75);
  shift[0] = -3.0;
  q.embeddings.rowwise() += shift;
  for (const auto& info : vocabulary()) {
    const auto a = nearest_neighbors(p, info.kind, kVocabularySize - 1);
    const auto b = nearest_neighbors(q, info.kind, kVocabularySize - 1);
    for (std::size_t i = 0; i < a.ranked.size(); ++i) {
      // Floating point may swap exact ties only.
      if (a.ranked[i].first != b.ranked[i].first)
        CHECK(std::abs(a.ranked[i].second - b.ranked[i].second) < 1e-12);
    }
  }
}

TEST_CASE("k = 1 gives the mean; k = V gives zero inertia") {
  const ModelParams p = random_params(3);
  const Clustering one = kmeans(p, 1, 4, 9);
  CHECK((one.centroids.row(0) - p.embeddings.colwise().mean()).norm() < 1e-12);
  for (std::size_t a : one.assignment) CHECK(a == 0);

  const Clustering all = kmeans(p, kVocabularySize, 2, 9);
  CHECK(all.inertia == 0.0);
  std::vector<std::size_t> sorted = all.assignment;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);

  CHECK_THROWS_AS(kmeans(p, 0, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(kmeans(p, kVocabularySize + 1, 1, 1), std::out_of_range);
}

TEST_CASE("two separated blobs match the exhaustive 2-partition") {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    MatrixXd x(10, 2);
    for (Eigen::Index i = 0; i < 10; ++i) {
      const double cx = i < 5 ? 0.0 : 10.0;
      x(i, 0) = cx + rng.uniform(-1, 1);
      x(i, 1) = rng.uniform(-1, 1);
    }
    std::vector<std::size_t> best;
    const double cost = brute_force_inertia(x, 2, best);
    const Clustering c = kmeans(x, 2, 8, 100 + std::uint64_t(t));
    CHECK(same_partition(c.assignment, best));
    CHECK(std::abs(c.inertia - cost) < 1e-9);
    for (Eigen::Index i = 1; i < 5; ++i) CHECK(c.assignment[std::size_t(i)] == c.assignment[0]);
  }
}

TEST_CASE("k-means on random small sets matches the exhaustive optimum") {
  Rng rng(12);
  int matches = 0;
  for (int t = 0; t < 10; ++t) {
    MatrixXd x(9, 2);
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = rng.uniform(-1, 1);
    std::vector<std::size_t> best;
    const double cost = brute_force_inertia(x, 3, best);
    const Clustering c = kmeans(x, 3, 32, std::uint64_t(t));
    CHECK(c.inertia >= cost - 1e-12);
    matches += std::abs(c.inertia - cost) < 1e-9;
  }
  CHECK(matches == 10);
}

TEST_CASE("inertia never increases across Lloyd steps") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ModelParams p = random_params(s);
    const Clustering c = kmeans(p, 3 + s % 5, 1, s);
    for (std::size_t i = 1; i < c.trace.size(); ++i)
      CHECK(c.trace[i] <= c.trace[i - 1] * (1.0 + 1e-12));
    CHECK(c.inertia >= 0.0);
  }
}

TEST_CASE("more restarts never give a worse result") {
  const ModelParams p = random_params(6);
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t r = 1; r <= 16; ++r) {
    const Clustering c = kmeans(p, 3, r, 77);
    CHECK(c.inertia <= prev);
    prev = c.inertia;
  }
  const Clustering a = kmeans(p, 3, 16, 77), b = kmeans(p, 3, 16, 77);
  CHECK(a.assignment == b.assignment);
  CHECK(a.inertia == b.inertia);
}

TEST_CASE("empty clusters are repaired") {
  // Identical points make both seeds coincide, so cluster 1 starts empty.
  MatrixXd x = MatrixXd::Zero(4, 2);
  const Clustering c = kmeans(x, 2, 1, 1);
  std::vector<int> used(2, 0);
  for (std::size_t a : c.assignment) used[a] = 1;
  CHECK(used == std::vector<int>{1, 1});
  CHECK(c.inertia == 0.0);
}

TEST_CASE("report files") {
  const ModelParams p = random_params(10, 30);
  const auto dir = std::filesystem::temp_directory_path() / "astvec_report_test";
  std::filesystem::remove_all(dir);
  const ReportOptions opt{5, 3, 16, 5};
  emit_report(p, dir, opt);
  const std::string nn = read_text_file(dir / "neighbors.csv");
  const std::string cl = read_text_file(dir / "clusters.csv");
  const std::string txt = read_text_file(dir / "report.txt");
  CHECK(nn.rfind("# seed=5\nquery,rank,neighbor,distance\n", 0) == 0);
  CHECK(std::count(nn.begin(), nn.end(), '\n') == 2 + 44 * 43);
  CHECK(std::count(cl.begin(), cl.end(), '\n') == 2 + 44);

  // One table row per symbol, then one line per cluster.
  const auto table_start = txt.find("\n\n") + 2;
  const auto table_end = txt.find("\n\nk-means");
  const std::string table = txt.substr(table_start, table_end - table_start + 1);
  CHECK(std::count(table.begin(), table.end(), '\n') == 44);
  std::size_t clusters = 0;
  for (std::size_t pos = txt.find("cluster "); pos != std::string::npos; pos = txt.find("cluster ", pos + 1))
    ++clusters;
  CHECK(clusters == 3);

  emit_report(p, dir, opt);
  CHECK(read_text_file(dir / "neighbors.csv") == nn);
  CHECK(read_text_file(dir / "clusters.csv") == cl);
  CHECK(read_text_file(dir / "report.txt") == txt);
}

TEST_CASE("clusters with no members are marked") {
  Clustering c;
  c.k = 2;
  c.assignment.assign(kVocabularySize, 0);
  const std::string txt = report_text(random_params(1), c, ReportOptions{1, 2, 1, 3});
  CHECK(txt.find("cluster 1: (empty)") != std::string::npos);
}
