#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "astvec/ast.hpp"
#include "astvec/node_kind.hpp"
#include "astvec/rng.hpp"

namespace astvec {

/// A non-leaf node and its direct children. coefficients[i] is the share of
/// the parent's leaves found under child i; they sum to 1.
struct TrainingSample {
  NodeKind parent = NodeKind::Root;
  std::vector<NodeKind> children;
  std::vector<double> coefficients;

  friend bool operator==(const TrainingSample&, const TrainingSample&) = default;
};

/// A training sample with exactly one symbol replaced. Slot 0 is the parent,
/// slot i (1-based) is child i. Coefficients are those of the base sample.
struct NegativeSample {
  const TrainingSample* base = nullptr;
  std::size_t position = 0;
  NodeKind new_symbol = NodeKind::Root;

  [[nodiscard]] NodeKind parent() const {
    return position == 0 ? new_symbol : base->parent;
  }
  [[nodiscard]] NodeKind child(std::size_t i) const {
    return position == i + 1 ? new_symbol : base->children[i];
  }
  /// The corrupted sample as a stand-alone value.
  [[nodiscard]] TrainingSample materialize() const;
};

/// One sample per non-leaf node, in preorder.
std::vector<TrainingSample> extract_samples(const AstNode& ast);

/// Picks one of the n+1 slots uniformly and replaces its symbol with a
/// uniformly drawn different symbol.
NegativeSample corrupt(const TrainingSample& sample, Rng& rng);

/// extract_samples over every program, in corpus order.
std::vector<TrainingSample> build_training_set(std::span<const LabeledProgram> corpus);

/// "parent<TAB>child:coeff,child:coeff,..." one line per sample.
std::string dump_samples(std::span<const TrainingSample> samples);

}  // namespace astvec
