#include "astvec/embedding_io.hpp"

#include <charconv>

#include "astvec/ast.hpp"
#include "astvec/error.hpp"
#include "astvec/node_kind.hpp"

namespace astvec {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FormatError("embeddings:" + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string format_embeddings(const Eigen::MatrixXd& e) {
  std::string out = std::to_string(e.rows()) + " " + std::to_string(e.cols()) + "\n";
  char buf[32];
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    out += kind_name(kind_at(static_cast<std::size_t>(i)));
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      auto r = std::to_chars(buf, buf + sizeof buf, e(i, j));
      out += ' ';
      out.append(buf, r.ptr);
    }
    out += '\n';
  }
  return out;
}

EmbeddingTable parse_embeddings(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) fail(1, "empty file");
  const auto head = fields(lines[0]);
  std::size_t rows = 0, cols = 0;
  if (head.size() != 2 || !parse_number(head[0], rows) || !parse_number(head[1], cols))
    fail(1, "expected header \"<count> <dimension>\"");

  EmbeddingTable t;
  t.vectors.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::size_t row = 0;
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const auto f = fields(lines[ln]);
    if (f.empty()) continue;
    if (row == rows) fail(ln + 1, "more rows than the header declares");
    if (f.size() != cols + 1)
      fail(ln + 1, "expected a name and " + std::to_string(cols) + " values, got " +
                       std::to_string(f.size()) + " fields");
    t.names.emplace_back(f[0]);
    for (std::size_t j = 0; j < cols; ++j) {
      double v;
      if (!parse_number(f[j + 1], v)) fail(ln + 1, "bad number '" + std::string(f[j + 1]) + "'");
      t.vectors(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) = v;
    }
    ++row;
  }
  if (row != rows) fail(lines.size(), "header declares " + std::to_string(rows) + " rows, found " + std::to_string(row));
  return t;
}

Eigen::MatrixXd vocabulary_matrix(const EmbeddingTable& t) {
  if (t.names.size() != kVocabularySize)
    throw FormatError("embeddings: expected " + std::to_string(kVocabularySize) + " symbols, found " +
                      std::to_string(t.names.size()));
  Eigen::MatrixXd out(static_cast<Eigen::Index>(kVocabularySize), t.vectors.cols());
  std::vector<bool> seen(kVocabularySize, false);
  for (std::size_t i = 0; i < t.names.size(); ++i) {
    const auto kind = kind_from_name(t.names[i]);
    if (!kind) throw FormatError("embeddings: unknown symbol '" + t.names[i] + "'");
    const std::size_t id = kind_id(*kind);
    if (seen[id]) throw FormatError("embeddings: duplicate symbol '" + t.names[i] + "'");
    seen[id] = true;
    out.row(static_cast<Eigen::Index>(id)) = t.vectors.row(static_cast<Eigen::Index>(i));
  }
  return out;
}

void write_embeddings(const std::filesystem::path& path, const Eigen::MatrixXd& embeddings) {
  write_text_file(path, format_embeddings(embeddings));
}

Eigen::MatrixXd read_embeddings(const std::filesystem::path& path) {
  return vocabulary_matrix(parse_embeddings(read_text_file(path)));
}

}  // namespace astvec
