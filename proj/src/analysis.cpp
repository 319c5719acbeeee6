#include "astvec/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "astvec/ast.hpp"
#include "astvec/rng.hpp"

namespace astvec {
namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double sq_dist(const Eigen::MatrixXd& a, Eigen::Index i, const Eigen::MatrixXd& b,
               Eigen::Index j) {
  return (a.row(i) - b.row(j)).squaredNorm();
}

// Nearest centroid for every point; ties go to the lower cluster id.
double assign(const Eigen::MatrixXd& x, const Eigen::MatrixXd& c,
              std::vector<std::size_t>& out) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (Eigen::Index j = 0; j < c.rows(); ++j) {
      const double d = sq_dist(x, i, c, j);
      if (d < best) {
        best = d;
        arg = static_cast<std::size_t>(j);
      }
    }
    out[static_cast<std::size_t>(i)] = arg;
    total += best;
  }
  return total;
}

double inertia_of(const Eigen::MatrixXd& x, const Eigen::MatrixXd& c,
                  const std::vector<std::size_t>& a) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    total += sq_dist(x, i, c, static_cast<Eigen::Index>(a[static_cast<std::size_t>(i)]));
  return total;
}

Eigen::MatrixXd plus_plus(const Eigen::MatrixXd& x, std::size_t k, Rng& rng) {
  const auto n = static_cast<std::size_t>(x.rows());
  Eigen::MatrixXd c(static_cast<Eigen::Index>(k), x.cols());
  c.row(0) = x.row(static_cast<Eigen::Index>(rng.below(n)));
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) d2[i] = sq_dist(x, static_cast<Eigen::Index>(i), c, 0);
  for (std::size_t j = 1; j < k; ++j) {
    const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
    std::size_t pick = n - 1;
    if (total > 0.0) {
      double u = rng.uniform01() * total;
      for (std::size_t i = 0; i < n; ++i) {
        if (d2[i] <= 0.0) continue;
        if (u < d2[i]) {
          pick = i;
          break;
        }
        u -= d2[i];
      }
      // Rounding can leave u just past the end; take the last candidate.
      while (d2[pick] <= 0.0) --pick;
    } else {
      pick = rng.below(n);
    }
    c.row(static_cast<Eigen::Index>(j)) = x.row(static_cast<Eigen::Index>(pick));
    for (std::size_t i = 0; i < n; ++i)
      d2[i] = std::min(d2[i], sq_dist(x, static_cast<Eigen::Index>(i), c,
                                      static_cast<Eigen::Index>(j)));
  }
  return c;
}

Clustering lloyd(const Eigen::MatrixXd& x, std::size_t k, Rng& rng, std::size_t max_iterations) {
  const auto n = static_cast<std::size_t>(x.rows());
  Clustering out;
  out.k = k;
  out.centroids = plus_plus(x, k, rng);
  out.assignment.assign(n, 0);
  assign(x, out.centroids, out.assignment);

  for (std::size_t it = 0; it < max_iterations; ++it) {
    // Update step, then repair empty clusters one at a time.
    std::vector<std::size_t> size(k, 0);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), x.cols());
    for (std::size_t i = 0; i < n; ++i) {
      ++size[out.assignment[i]];
      sum.row(static_cast<Eigen::Index>(out.assignment[i])) += x.row(static_cast<Eigen::Index>(i));
    }
    for (std::size_t j = 0; j < k; ++j)
      if (size[j] > 0)
        out.centroids.row(static_cast<Eigen::Index>(j)) =
            sum.row(static_cast<Eigen::Index>(j)) / static_cast<double>(size[j]);
    for (std::size_t j = 0; j < k; ++j) {
      if (size[j] > 0) continue;
      std::size_t far = n;
      double worst = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (size[out.assignment[i]] < 2) continue;
        const double d = sq_dist(x, static_cast<Eigen::Index>(i), out.centroids,
                                 static_cast<Eigen::Index>(out.assignment[i]));
        if (d > worst) {
          worst = d;
          far = i;
        }
      }
      if (far == n) break;  // fewer distinct donors than clusters
      const std::size_t from = out.assignment[far];
      const auto fi = static_cast<Eigen::Index>(far);
      const auto from_i = static_cast<Eigen::Index>(from);
      out.centroids.row(from_i) = (out.centroids.row(from_i) * static_cast<double>(size[from]) - x.row(fi)) /
                                  static_cast<double>(size[from] - 1);
      --size[from];
      out.centroids.row(static_cast<Eigen::Index>(j)) = x.row(fi);
      out.assignment[far] = j;
      size[j] = 1;
    }
    out.trace.push_back(inertia_of(x, out.centroids, out.assignment));

    std::vector<std::size_t> next(n);
    assign(x, out.centroids, next);
    // A point only moves when strictly closer; ties keep the current cluster.
    for (std::size_t i = 0; i < n; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      if (sq_dist(x, ii, out.centroids, static_cast<Eigen::Index>(next[i])) ==
          sq_dist(x, ii, out.centroids, static_cast<Eigen::Index>(out.assignment[i])))
        next[i] = out.assignment[i];
    }
    if (next == out.assignment) break;
    out.assignment = std::move(next);
  }
  out.inertia = out.trace.back();
  return out;
}

}  // namespace

std::vector<Neighbor> rank_neighbors(const Eigen::MatrixXd& points, std::size_t query,
                                     std::size_t top, Metric metric) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (query >= n) throw std::out_of_range("query row out of range");
  if (top < 1 || top > n - 1)
    throw std::out_of_range("top must be in [1, " + std::to_string(n - 1) + "]");
  const auto q = static_cast<Eigen::Index>(query);
  std::vector<Neighbor> all;
  all.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == query) continue;
    const auto r = static_cast<Eigen::Index>(i);
    double d;
    if (metric == Metric::euclidean) {
      d = (points.row(r) - points.row(q)).norm();
    } else {
      const double denom = points.row(r).norm() * points.row(q).norm();
      d = denom > 0.0 ? 1.0 - points.row(r).dot(points.row(q)) / denom : 1.0;
    }
    all.push_back({i, d});
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const Neighbor& a, const Neighbor& b) { return a.distance < b.distance; });
  all.resize(top);
  return all;
}

NeighborList nearest_neighbors(const ModelParams& params, NodeKind query, std::size_t top,
                               Metric metric) {
  NeighborList out{query, {}};
  for (const auto& nb : rank_neighbors(params.embeddings, kind_id(query), top, metric))
    out.ranked.emplace_back(kind_at(nb.index), nb.distance);
  return out;
}

NeighborList nearest_neighbors(const ModelParams& params, std::string_view query,
                               std::size_t top, Metric metric) {
  const auto kind = kind_from_name(query);
  if (!kind) throw std::invalid_argument("unknown symbol '" + std::string(query) + "'");
  return nearest_neighbors(params, *kind, top, metric);
}

Clustering kmeans(const Eigen::MatrixXd& points, std::size_t k, std::size_t restarts,
                  std::uint64_t seed, std::size_t max_iterations) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (k < 1 || k > n)
    throw std::out_of_range("k must be in [1, " + std::to_string(n) + "], got " + std::to_string(k));
  if (restarts < 1) throw std::out_of_range("restarts must be at least 1");
  Clustering best;
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, r));
    Clustering c = lloyd(points, k, rng, max_iterations);
    c.restart = r;
    if (r == 0 || c.inertia < best.inertia) best = std::move(c);
  }
  return best;
}

Clustering kmeans(const ModelParams& params, std::size_t k, std::size_t restarts,
                  std::uint64_t seed) {
  return kmeans(params.embeddings, k, restarts, seed);
}

std::string neighbors_csv(const ModelParams& params, std::uint64_t seed) {
  std::string out = "# seed=" + std::to_string(seed) + "\nquery,rank,neighbor,distance\n";
  for (const auto& info : vocabulary()) {
    const auto list = nearest_neighbors(params, info.kind, kVocabularySize - 1);
    for (std::size_t r = 0; r < list.ranked.size(); ++r) {
      out += std::string(info.name) + "," + std::to_string(r + 1) + "," +
             std::string(kind_name(list.ranked[r].first)) + "," + fmt(list.ranked[r].second) +
             "\n";
    }
  }
  return out;
}

std::string clusters_csv(const Clustering& c, std::uint64_t seed) {
  std::string out = "# seed=" + std::to_string(seed) + "\nsymbol,cluster\n";
  for (const auto& info : vocabulary())
    out += std::string(info.name) + "," + std::to_string(c.assignment[info.id()]) + "\n";
  return out;
}

std::string report_text(const ModelParams& params, const Clustering& c,
                        const ReportOptions& options) {
  std::string out = "# seed=" + std::to_string(options.seed) + "\n";
  out += "Nearest neighbors (Euclidean)\n\n";
  std::size_t width = 0;
  for (const auto& info : vocabulary()) width = std::max(width, info.name.size());
  for (const auto& info : vocabulary()) {
    std::string row(info.name);
    row.resize(width + 2, ' ');
    const auto list = nearest_neighbors(params, info.kind, options.table_top);
    for (std::size_t r = 0; r < list.ranked.size(); ++r) {
      if (r) row += ", ";
      row += kind_name(list.ranked[r].first);
    }
    out += row + "\n";
  }
  out += "\nk-means clustering, k=" + std::to_string(c.k) + ", inertia=" + fmt(c.inertia) + "\n\n";
  for (std::size_t j = 0; j < c.k; ++j) {
    std::string row = "cluster " + std::to_string(j) + ":";
    bool any = false;
    for (const auto& info : vocabulary()) {
      if (c.assignment[info.id()] != j) continue;
      row += " ";
      row += info.name;
      any = true;
    }
    if (!any) row += " (empty)";
    out += row + "\n";
  }
  return out;
}

void emit_report(const ModelParams& params, const std::filesystem::path& dir,
                 const ReportOptions& options) {
  const Clustering c = kmeans(params, options.k, options.restarts, options.seed);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  write_text_file(dir / "neighbors.csv", neighbors_csv(params, options.seed));
  write_text_file(dir / "clusters.csv", clusters_csv(c, options.seed));
  write_text_file(dir / "report.txt", report_text(params, c, options));
}

}  // namespace astvec
