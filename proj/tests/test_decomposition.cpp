#include <gtest/gtest.h>

#include <map>
#include <set>

#include "rhodesign/constructions.hpp"
#include "rhodesign/decomposition.hpp"

using namespace rhodesign;

namespace {

// Independent cover count: every unordered pair of Z_v exactly once.
bool covers_exactly_once(const std::vector<BlockEdges>& blocks, Label v) {
  std::map<std::pair<Label, Label>, int> seen;
  for (const auto& b : blocks) {
    for (auto [x, y] : b) ++seen[{std::min(x, y), std::max(x, y)}];
  }
  if (static_cast<Label>(seen.size()) != v * (v - 1) / 2) return false;
  for (const auto& [pair, count] : seen) {
    if (count != 1) return false;
  }
  return true;
}

std::set<std::pair<Label, Label>> as_set(const BlockEdges& b) { return {b.begin(), b.end()}; }

}  // namespace

TEST(BaseBlocks, CycleOfFourAtNine) {
  const auto c = label_even_cycle(4, 0, 9);
  const BaseBlockSet bb = base_blocks(c.graph, c.labeling, c.bipartition, 1);
  EXPECT_EQ(bb.v, 9);
  const DecompositionCertificate cert = develop(bb);
  EXPECT_TRUE(cert.pass) << cert.violation.value_or("");
  EXPECT_EQ(cert.developed.size(), 9u);
  EXPECT_EQ(cert.edge_count, 36u);
  EXPECT_TRUE(covers_exactly_once(cert.developed, 9));
}

TEST(BaseBlocks, SecondBlockMovesSideB) {
  const auto c = label_cycle_one_pendant(4, 1);
  const BaseBlockSet bb = base_blocks(c.graph, c.labeling, c.bipartition, 3);
  EXPECT_EQ(bb.v, 31);
  ASSERT_EQ(bb.embeddings.size(), 3u);
  for (Vertex u = 0; u < c.graph.vertex_count(); ++u) {
    const Label expected = c.bipartition.in_a(u) ? c.labeling[u] : c.labeling[u] + 20;
    EXPECT_EQ(bb.embeddings[2][u], expected);
  }
}

TEST(BaseBlocks, NeedsRhoPlus) {
  const auto c = label_even_cycle(4, 0, 9);
  try {
    base_blocks(c.graph, c.labeling, c.bipartition.swapped(), 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::precondition_violation);
  }
  EXPECT_THROW(base_blocks(c.graph, c.labeling, c.bipartition, 0), error);
}

TEST(Develop, FamiliesAndMultipliers) {
  std::vector<ConstructionResult> sources{label_cycle_one_pendant(6, 2),
                                          label_cycle_two_pendants(4, 1, 2),
                                          label_chain({{4, 2}, {6, 1}})};
  for (const auto& c : sources) {
    for (int x = 1; x <= 3; ++x) {
      const DecompositionCertificate cert = develop(base_blocks(c.graph, c.labeling, c.bipartition, x));
      const Label v = 2 * static_cast<Label>(c.graph.edge_count()) * x + 1;
      EXPECT_EQ(cert.v, v);
      EXPECT_TRUE(cert.pass) << cert.violation.value_or("");
      EXPECT_EQ(cert.edge_count, static_cast<std::size_t>(v * (v - 1) / 2));
      EXPECT_TRUE(covers_exactly_once(cert.developed, v));
    }
  }
}

TEST(Develop, TranslationClosure) {
  const auto c = label_cycle_one_pendant(4, 2);
  const DecompositionCertificate cert = develop(base_blocks(c.graph, c.labeling, c.bipartition, 2));
  ASSERT_TRUE(cert.pass);
  std::set<std::set<std::pair<Label, Label>>> blocks;
  for (const auto& b : cert.developed) blocks.insert(as_set(b));
  for (const auto& b : cert.developed) {
    BlockEdges moved;
    for (auto [x, y] : b) {
      const Label a = (x + 1) % cert.v;
      const Label z = (y + 1) % cert.v;
      moved.emplace_back(std::min(a, z), std::max(a, z));
    }
    EXPECT_TRUE(blocks.count(as_set(moved)));
  }
}

TEST(Develop, QuietKeepsOnlyBaseBlocks) {
  const auto c = label_even_cycle(4, 0, 9);
  const auto cert = develop(base_blocks(c.graph, c.labeling, c.bipartition, 2), false);
  EXPECT_TRUE(cert.pass);
  EXPECT_TRUE(cert.developed.empty());
  EXPECT_EQ(cert.base_blocks.size(), 2u);
  EXPECT_EQ(cert.edge_count, 17u * 16 / 2);
}

TEST(VerifyDecomposition, CatchesDuplicatesGapsAndWrongShapes) {
  const auto c = label_even_cycle(4, 0, 9);
  auto cert = develop(base_blocks(c.graph, c.labeling, c.bipartition, 1));
  ASSERT_TRUE(cert.pass);
  auto blocks = cert.developed;
  EXPECT_TRUE(verify_decomposition(blocks, 9, c.graph).pass);

  auto missing = blocks;
  missing.pop_back();
  const auto gap = verify_decomposition(missing, 9, c.graph);
  EXPECT_FALSE(gap.pass);
  EXPECT_NE(gap.violation->find("not covered"), std::string::npos);

  auto doubled = blocks;
  doubled.push_back(blocks.front());
  const auto twice = verify_decomposition(doubled, 9, c.graph);
  EXPECT_FALSE(twice.pass);
  EXPECT_NE(twice.violation->find("twice"), std::string::npos);

  auto bent = blocks;
  bent[0] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};  // a path, not C_4
  EXPECT_FALSE(verify_decomposition(bent, 9, c.graph).pass);

  auto outside = blocks;
  outside[0][0].second = 9;
  EXPECT_FALSE(verify_decomposition(outside, 9, c.graph).pass);
}
