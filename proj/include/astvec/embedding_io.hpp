#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace astvec {

/// Named vectors in the common word-embedding text layout.
struct EmbeddingTable {
  std::vector<std::string> names;
  Eigen::MatrixXd vectors;  ///< one row per name
};

/// "V N_f" on the first line, then "<name> v_1 ... v_N_f" per vocabulary
/// symbol. Values use the shortest form that reads back to the same double.
std::string format_embeddings(const Eigen::MatrixXd& embeddings);

/// Parses the layout above; names are not checked against the vocabulary.
/// Throws FormatError with a line number.
EmbeddingTable parse_embeddings(std::string_view text);

/// Rows reordered into vocabulary order. Throws FormatError if the table
/// does not hold every vocabulary symbol exactly once.
Eigen::MatrixXd vocabulary_matrix(const EmbeddingTable& table);

void write_embeddings(const std::filesystem::path& path, const Eigen::MatrixXd& embeddings);
Eigen::MatrixXd read_embeddings(const std::filesystem::path& path);

}  // namespace astvec
