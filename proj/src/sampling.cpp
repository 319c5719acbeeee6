#include "astvec/sampling.hpp"

#include <charconv>

namespace astvec {
namespace {

// Returns the leaf count of `node` and appends its samples in preorder.
std::size_t collect(const AstNode& node, std::vector<TrainingSample>& out) {
  if (node.is_leaf()) return 1;
  const std::size_t slot = out.size();
  out.push_back(TrainingSample{node.kind, {}, {}});
  std::vector<std::size_t> leaves;
  leaves.reserve(node.children.size());
  std::size_t total = 0;
  for (const auto& child : node.children) {
    leaves.push_back(collect(child, out));
    total += leaves.back();
  }
  TrainingSample& s = out[slot];
  s.children.reserve(node.children.size());
  s.coefficients.reserve(node.children.size());
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    s.children.push_back(node.children[i].kind);
    s.coefficients.push_back(static_cast<double>(leaves[i]) / static_cast<double>(total));
  }
  return total;
}

}  // namespace

TrainingSample NegativeSample::materialize() const {
  TrainingSample s = *base;
  if (position == 0) {
    s.parent = new_symbol;
  } else {
    s.children[position - 1] = new_symbol;
  }
  return s;
}

std::vector<TrainingSample> extract_samples(const AstNode& ast) {
  std::vector<TrainingSample> out;
  collect(ast, out);
  return out;
}

NegativeSample corrupt(const TrainingSample& sample, Rng& rng) {
  NegativeSample neg;
  neg.base = &sample;
  neg.position = rng.below(sample.children.size() + 1);
  const NodeKind original =
      neg.position == 0 ? sample.parent : sample.children[neg.position - 1];
  // Draw from V-1 ids and skip over the original.
  std::size_t id = rng.below(kVocabularySize - 1);
  if (id >= kind_id(original)) ++id;
  neg.new_symbol = kind_at(id);
  return neg;
}

std::vector<TrainingSample> build_training_set(std::span<const LabeledProgram> corpus) {
  std::vector<TrainingSample> out;
  for (const auto& program : corpus) collect(program.ast, out);
  return out;
}

std::string dump_samples(std::span<const TrainingSample> samples) {
  std::string out;
  char buf[32];
  for (const auto& s : samples) {
    out += kind_name(s.parent);
    out += '\t';
    for (std::size_t i = 0; i < s.children.size(); ++i) {
      if (i) out += ',';
      out += kind_name(s.children[i]);
      out += ':';
      auto r = std::to_chars(buf, buf + sizeof buf, s.coefficients[i]);
      out.append(buf, r.ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace astvec
