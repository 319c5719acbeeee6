#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "astvec/coder.hpp"
#include "astvec/node_kind.hpp"

namespace astvec {

enum class Metric { euclidean, cosine };

struct Neighbor {
  std::size_t index;
  double distance;
};

/// Every row other than `query`, ascending by distance, ties by row index;
/// the first `top` of them. Cosine distance is 1 − cos.
std::vector<Neighbor> rank_neighbors(const Eigen::MatrixXd& points, std::size_t query,
                                     std::size_t top, Metric metric = Metric::euclidean);

struct NeighborList {
  NodeKind query;
  std::vector<std::pair<NodeKind, double>> ranked;
};

/// Throws std::out_of_range unless 1 <= top <= V − 1.
NeighborList nearest_neighbors(const ModelParams& params, NodeKind query, std::size_t top,
                               Metric metric = Metric::euclidean);
/// Throws std::invalid_argument for a name outside the vocabulary.
NeighborList nearest_neighbors(const ModelParams& params, std::string_view query,
                               std::size_t top, Metric metric = Metric::euclidean);

struct Clustering {
  std::size_t k = 0;
  std::vector<std::size_t> assignment;  ///< cluster id per row
  Eigen::MatrixXd centroids;            ///< k x dim
  double inertia = 0.0;
  std::size_t restart = 0;              ///< index of the winning restart
  std::vector<double> trace;            ///< inertia after each Lloyd step of that restart
};

/// Lloyd iterations from k-means++ seeding, repeated `restarts` times with
/// seeds derive_seed(seed, r); the lowest inertia wins, ties to the earlier
/// restart. An empty cluster is moved to the point farthest from its
/// centroid. Throws std::out_of_range unless 1 <= k <= rows.
Clustering kmeans(const Eigen::MatrixXd& points, std::size_t k, std::size_t restarts,
                  std::uint64_t seed, std::size_t max_iterations = 300);

Clustering kmeans(const ModelParams& params, std::size_t k, std::size_t restarts,
                  std::uint64_t seed);

struct ReportOptions {
  std::uint64_t seed = 1;
  std::size_t k = 3;
  std::size_t restarts = 16;
  std::size_t table_top = 5;  ///< neighbors shown per row in report.txt
};

/// Writes neighbors.csv (full ranking per symbol), clusters.csv and a plain
/// text report.txt into `dir`, which is created if needed.
void emit_report(const ModelParams& params, const std::filesystem::path& dir,
                 const ReportOptions& options);

std::string neighbors_csv(const ModelParams& params, std::uint64_t seed);
std::string clusters_csv(const Clustering& clustering, std::uint64_t seed);
std::string report_text(const ModelParams& params, const Clustering& clustering,
                        const ReportOptions& options);

}  // namespace astvec
