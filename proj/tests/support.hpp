#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "astvec/ast.hpp"
#include "astvec/parser.hpp"
#include "astvec/rng.hpp"

namespace testing {

inline std::filesystem::path source_dir() { return ASTVEC_SOURCE_DIR; }
inline std::filesystem::path fixture(const std::string& rel) {
  return source_dir() / "tests" / "fixtures" / rel;
}

inline std::vector<std::filesystem::path> files_in(const std::filesystem::path& dir,
                                                   const std::string& ext) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
    if (e.path().extension() == ext) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

/// The bundled corpus, parsed straight from data/corpus/<label>/*.c.
inline std::vector<astvec::LabeledProgram> bundled_corpus() {
  std::vector<astvec::LabeledProgram> corpus;
  const auto root = source_dir() / "data" / "corpus";
  for (const auto& f : files_in(root, ".c")) {
    corpus.push_back({astvec::cparse::parse_file(f), f.parent_path().filename().string(),
                      std::filesystem::relative(f, root).generic_string()});
  }
  return corpus;
}

/// Random tree with at most `budget` nodes.
inline astvec::AstNode grow_tree(astvec::Rng& rng, int depth, std::size_t& budget) {
  astvec::AstNode n(astvec::kind_at(rng.below(astvec::kVocabularySize)));
  if (budget == 0) return n;
  --budget;
  if (depth <= 0) return n;
  const std::size_t kids = rng.below(4);
  for (std::size_t i = 0; i < kids && budget > 0; ++i)
    n.children.push_back(grow_tree(rng, depth - 1, budget));
  return n;
}

inline astvec::AstNode random_tree(astvec::Rng& rng, int depth = 5, std::size_t budget = 60) {
  return grow_tree(rng, depth, budget);
}

inline std::string trim_newline(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace testing
