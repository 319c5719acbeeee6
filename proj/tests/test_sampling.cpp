#include <doctest.h>

#include <array>
#include <cmath>

#include "astvec/sampling.hpp"
#include "support.hpp"

using namespace astvec;

namespace {

AstNode node(NodeKind k, std::vector<AstNode> kids = {}) { return AstNode(k, std::move(kids)); }

std::size_t non_leaves(const AstNode& n) {
  if (n.is_leaf()) return 0;
  std::size_t c = 1;
  for (const auto& k : n.children) c += non_leaves(k);
  return c;
}

}  // namespace

TEST_CASE("a single leaf yields no samples") {
  CHECK(extract_samples(node(NodeKind::ID)).empty());
}

TEST_CASE("two leaf children split evenly") {
  const auto s = extract_samples(node(NodeKind::BinaryOp, {node(NodeKind::ID), node(NodeKind::Constant)}));
  REQUIRE(s.size() == 1);
  CHECK(s[0].parent == NodeKind::BinaryOp);
  CHECK(s[0].children == std::vector<NodeKind>{NodeKind::ID, NodeKind::Constant});
  CHECK(s[0].coefficients == std::vector<double>{0.5, 0.5});
}

TEST_CASE("children with 2 and 3 leaves get 0.4 and 0.6") {
  const AstNode two = node(NodeKind::ExprList, {node(NodeKind::ID), node(NodeKind::ID)});
  const AstNode three =
      node(NodeKind::ExprList, {node(NodeKind::ID), node(NodeKind::ID), node(NodeKind::ID)});
  const auto s = extract_samples(node(NodeKind::FuncCall, {two, three}));
  REQUIRE(s.size() == 3);
  CHECK(s[0].parent == NodeKind::FuncCall);
  CHECK(s[0].coefficients[0] == 2.0 / 5.0);
  CHECK(s[0].coefficients[1] == 3.0 / 5.0);
  // Preorder: the parent first, then each child's subtree.
  CHECK(s[1].children.size() == 2);
  CHECK(s[2].children.size() == 3);
}

TEST_CASE("coefficient invariants on random trees") {
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const AstNode tree = testing::random_tree(rng);
    const auto samples = extract_samples(tree);
    CHECK(samples.size() == non_leaves(tree));
    for (const auto& s : samples) {
      REQUIRE(s.children.size() == s.coefficients.size());
      REQUIRE_FALSE(s.children.empty());
      double sum = 0.0, min = 1.0;
      for (double l : s.coefficients) {
        CHECK(l > 0.0);
        sum += l;
        min = std::min(min, l);
      }
      CHECK(std::abs(sum - 1.0) <= 1e-12);
      if (s.children.size() == 1) CHECK(s.coefficients[0] == 1.0);
    }
  }
}

TEST_CASE("coefficients are leaf shares of the source tree") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const AstNode tree = testing::random_tree(rng);
    const auto samples = extract_samples(tree);
    std::size_t i = 0;
    std::vector<const AstNode*> stack{&tree};
    while (!stack.empty()) {
      const AstNode* n = stack.back();
      stack.pop_back();
      if (n->is_leaf()) continue;
      const auto& s = samples.at(i++);
      CHECK(s.parent == n->kind);
      const double total = static_cast<double>(leaf_count(*n));
      for (std::size_t c = 0; c < n->children.size(); ++c) {
        CHECK(s.children[c] == n->children[c].kind);
        CHECK(s.coefficients[c] == static_cast<double>(leaf_count(n->children[c])) / total);
      }
      for (double l : s.coefficients) CHECK(l >= 1.0 / total);
      for (auto it = n->children.rbegin(); it != n->children.rend(); ++it) stack.push_back(&*it);
    }
    CHECK(i == samples.size());
  }
}

TEST_CASE("corrupt changes exactly one slot to a different symbol") {
  const TrainingSample s{NodeKind::BinaryOp, {NodeKind::ID, NodeKind::Constant}, {0.5, 0.5}};
  const TrainingSample before = s;
  Rng rng(1);
  for (int t = 0; t < 2000; ++t) {
    const NegativeSample n = corrupt(s, rng);
    const TrainingSample m = n.materialize();
    int diffs = (m.parent != s.parent);
    for (std::size_t i = 0; i < 2; ++i) diffs += (m.children[i] != s.children[i]);
    REQUIRE(diffs == 1);
    CHECK(m.coefficients == s.coefficients);
    CHECK(n.parent() == m.parent);
    CHECK(n.child(0) == m.children[0]);
    CHECK(n.child(1) == m.children[1]);
  }
  CHECK(s == before);
}

TEST_CASE("corrupted slot is uniform over the n+1 positions") {
  const TrainingSample s{NodeKind::BinaryOp, {NodeKind::ID, NodeKind::Constant}, {0.5, 0.5}};
  Rng rng(2024);
  const int draws = 10000;
  std::array<int, 3> hits{};
  std::array<int, kVocabularySize> symbols{};
  for (int t = 0; t < draws; ++t) {
    const NegativeSample n = corrupt(s, rng);
    ++hits[n.position];
    if (n.position == 0) ++symbols[kind_id(n.new_symbol)];
  }
  for (int h : hits) CHECK(std::abs(h / double(draws) - 1.0 / 3.0) <= 0.02);
  CHECK(symbols[kind_id(NodeKind::BinaryOp)] == 0);
}

TEST_CASE("corrupt is reproducible for a given seed") {
  const TrainingSample s{NodeKind::If, {NodeKind::BinaryOp, NodeKind::Compound}, {0.5, 0.5}};
  Rng a(99), b(99);
  for (int t = 0; t < 100; ++t) {
    const auto x = corrupt(s, a), y = corrupt(s, b);
    CHECK(x.position == y.position);
    CHECK(x.new_symbol == y.new_symbol);
  }
}

TEST_CASE("build_training_set concatenates per-program samples") {
  CHECK(build_training_set({}).empty());
  const LabeledProgram p{node(NodeKind::Root, {node(NodeKind::Decl, {node(NodeKind::TypeDecl)})}), "x", "x"};
  const std::vector<LabeledProgram> one{p};
  CHECK(build_training_set(one) == extract_samples(p.ast));

  const auto corpus = testing::bundled_corpus();
  std::size_t expected = 0;
  for (const auto& prog : corpus) expected += non_leaves(prog.ast);
  CHECK(build_training_set(corpus).size() == expected);
}

TEST_CASE("sample dump format") {
  const TrainingSample s{NodeKind::BinaryOp, {NodeKind::ID, NodeKind::Constant}, {0.25, 0.75}};
  const std::vector<TrainingSample> v{s};
  CHECK(dump_samples(v) == "BinaryOp\tID:0.25,Constant:0.75\n");
}
