#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "rhodesign/alternating.hpp"

using namespace rhodesign;

namespace {

using V = std::vector<Label>;

SignedDifferenceSequence pos(V a, Label r, Label k = 0) {
  return {SignPattern::positive_first, std::move(a), r, k};
}
SignedDifferenceSequence neg(V a, Label r, Label k = 0) {
  return {SignPattern::negative_first, std::move(a), r, k};
}

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::search_too_large;
}

Label reduce(Label d, Label r) {
  d = ((d % r) + r) % r;
  return std::min(d, r - d);
}

}  // namespace

TEST(Positions, PositiveFirst) {
  EXPECT_EQ(positions_positive_first(V{1, 3, 4, 5}, 11), (PositionPair{{1, 2}, {9, 8}, 11}));
  EXPECT_EQ(positions_positive_first(V{1, 3, 4}, 9), (PositionPair{{1, 2}, {7}, 9}));
}

TEST(Positions, NegativeFirst) {
  EXPECT_EQ(positions_negative_first(V{1, 3, 4, 5}, 11), (PositionPair{{2, 3}, {10, 9}, 11}));
  EXPECT_EQ(positions_negative_first(V{1}, 3), (PositionPair{{}, {2}, 3}));
  // Positions exist even though b = (1,3,4,4) collides mod 9.
  EXPECT_EQ(positions_negative_first(V{1, 3, 4, 5}, 9), (PositionPair{{2, 3}, {8, 7}, 9}));
  EXPECT_EQ(code_of([] { emit_path_labels(neg({1, 3, 4, 5}, 9)); }), errc::invalid_parameter);
}

TEST(Positions, RejectsBadMagnitudes) {
  EXPECT_EQ(code_of([] { positions_positive_first(V{}, 5); }), errc::invalid_parameter);
  EXPECT_EQ(code_of([] { positions_positive_first(V{1, 3, 2}, 9); }), errc::invalid_parameter);
  EXPECT_EQ(code_of([] { positions_positive_first(V{1, 9}, 9); }), errc::invalid_parameter);
  EXPECT_EQ(code_of([] { positions_positive_first(V{1, 2, 3}, 3); }), errc::invalid_parameter);
}

TEST(Positions, ShortBaseCollidesOnEmission) {
  // a = (1,2) at r = 3: positions are well defined, but b = (1,1).
  EXPECT_EQ(positions_positive_first(V{1, 2}, 3), (PositionPair{{1}, {2}, 3}));
  EXPECT_EQ(code_of([] { emit_path_labels(pos({1, 2}, 3)); }), errc::invalid_parameter);
}

TEST(Emit, Examples) {
  EXPECT_EQ(emit_path_labels(pos({1, 3, 4, 5}, 11), LabelForm::wrapped), (V{10, 0, 8, 1, 7}));
  EXPECT_EQ(emit_path_labels(neg({1, 3, 4, 5}, 11), LabelForm::raw), (V{0, 10, 2, 9, 3}));
  EXPECT_EQ(emit_path_labels(pos({1}, 3), LabelForm::raw), (V{0, 1}));
}

TEST(Emit, ShiftIsAppliedLast) {
  const V base = emit_path_labels(pos({1, 3, 4, 5}, 11), LabelForm::wrapped);
  const V moved = emit_path_labels(pos({1, 3, 4, 5}, 11, 4), LabelForm::wrapped);
  for (std::size_t i = 0; i < base.size(); ++i) EXPECT_EQ(moved[i], (base[i] + 4) % 11);
}

TEST(Windows, Examples) {
  const ShiftWindow a = alternating_shift_windows(pos({1, 3, 4, 5}, 11));
  EXPECT_EQ(a.for_ab, V{0});
  EXPECT_EQ(a.for_ba, (V{4, 5, 6, 7, 8, 9}));
  EXPECT_EQ(alternating_shift_windows(neg({2, 3, 4, 5}, 12)).for_ab, (V{0, 1}));
  EXPECT_EQ(alternating_shift_windows(pos({1}, 3)).for_ab, V{0});
}

TEST(Windows, RejectsNonRhoBarEmission) {
  // r = 8 puts b = 4 on the midpoint.
  EXPECT_EQ(code_of([] { alternating_shift_windows(pos({1, 3, 4}, 8)); }), errc::invalid_parameter);
}

TEST(Rebase, Example) {
  const AlternatingPath before = alternating_path(pos({1, 3, 4}, 9), LabelForm::wrapped);
  const AlternatingPath after = alternating_path(rebase(pos({1, 3, 4}, 9), 11), LabelForm::wrapped);
  EXPECT_EQ(before.labeling.values()[0], 8);
  EXPECT_EQ(V(before.labeling.values().begin(), before.labeling.values().end()), (V{8, 0, 6, 1}));
  EXPECT_EQ(V(after.labeling.values().begin(), after.labeling.values().end()), (V{10, 0, 8, 1}));
  EXPECT_EQ(before.sides, after.sides);
  EXPECT_TRUE(check_uniformly_ordered(after.graph, after.labeling, after.sides, 10).pass);
}

TEST(Rebase, Errors) {
  EXPECT_EQ(code_of([] { rebase(pos({1, 3, 4}, 9), 9); }), errc::invalid_parameter);
  EXPECT_EQ(code_of([] { rebase(pos({1, 3, 4}, 9), 7); }), errc::invalid_parameter);
  EXPECT_EQ(rebase(rebase(pos({1, 3, 4}, 9), 12), 15), rebase(pos({1, 3, 4}, 9), 15));
}

namespace {

// Random strictly increasing magnitudes in [1, r-1].
std::vector<SignedDifferenceSequence> random_sequences(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<SignedDifferenceSequence> out;
  while (static_cast<int>(out.size()) < count) {
    const Label r = std::uniform_int_distribution<Label>(3, 24)(rng);
    const int n = std::uniform_int_distribution<int>(1, static_cast<int>(std::min<Label>(r - 1, 7)))(rng);
    std::vector<Label> pool(static_cast<std::size_t>(r - 1));
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(n));
    std::sort(pool.begin(), pool.end());
    const auto pattern = rng() % 2 ? SignPattern::positive_first : SignPattern::negative_first;
    out.push_back({pattern, pool, r, static_cast<Label>(rng() % static_cast<std::uint32_t>(r))});
  }
  return out;
}

}  // namespace

TEST(AlternatingProperties, PositionChainIsStrict) {
  for (const auto& seq : random_sequences(2000, 11)) {
    const PositionPair p = positions(seq);
    V chain{0};
    chain.insert(chain.end(), p.xs.begin(), p.xs.end());
    chain.insert(chain.end(), p.ys.rbegin(), p.ys.rend());
    chain.push_back(seq.base);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) ASSERT_LT(chain[i], chain[i + 1]);
  }
}

TEST(AlternatingProperties, EmissionRealisesReducedMagnitudes) {
  int emitted = 0;
  for (const auto& seq : random_sequences(2000, 12)) {
    if (!has_distinct_reductions(seq)) {
      EXPECT_THROW(emit_path_labels(seq), error);
      continue;
    }
    for (LabelForm form : {LabelForm::raw, LabelForm::wrapped}) {
      const V labels = emit_path_labels(seq, form);
      ASSERT_EQ(labels.size(), seq.magnitudes.size() + 1);
      for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
        EXPECT_EQ(reduce(labels[i + 1] - labels[i], seq.base), reduce(seq.magnitudes[i], seq.base));
      }
      const Graph g = make_path(labels.size());
      // rho-bar at t = r-1 exactly when the classes are distinct, r-1 >= 2n,
      // and no class sits on the midpoint.
      bool expect = seq.base - 1 >= 2 * static_cast<Label>(seq.magnitudes.size());
      for (Label a : seq.magnitudes) expect = expect && 2 * a != seq.base;
      EXPECT_EQ(naive::is_rho_bar(g, labels, seq.base - 1), expect);
      ++emitted;
    }
  }
  EXPECT_GT(emitted, 500);
}

TEST(AlternatingProperties, WindowsMatchExhaustiveTesting) {
  int checked = 0;
  for (auto seq : random_sequences(4000, 13)) {
    seq.shift = 0;
    if (!has_distinct_reductions(seq)) continue;
    const AlternatingPath path = alternating_path(seq, canonical_form(seq.pattern));
    if (!naive::is_rho_bar(path.graph, path.labeling.values(), seq.base - 1)) continue;
    const ShiftWindow w = alternating_shift_windows(seq);
    const auto [ab, ba] =
        naive::windows(path.graph, path.labeling.values(), path.sides, seq.base - 1);
    EXPECT_EQ(w.for_ab, ab) << to_string(seq.pattern) << " r=" << seq.base;
    EXPECT_EQ(w.for_ba, ba) << to_string(seq.pattern) << " r=" << seq.base;
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(AlternatingProperties, CanonicalFormIsUniformlyOrdered) {
  for (auto seq : random_sequences(3000, 14)) {
    seq.shift = 0;
    if (!has_distinct_reductions(seq)) continue;
    const AlternatingPath path = alternating_path(seq, canonical_form(seq.pattern));
    if (!naive::is_rho_bar(path.graph, path.labeling.values(), seq.base - 1)) continue;
    EXPECT_TRUE(naive::is_uniform(path.graph, path.labeling.values(), path.sides, seq.base - 1));
  }
}

TEST(Rebase, CanBreakRhoBar) {
  // Every A label stays and every B label rises, so each edge difference grows
  // by r'-r; complementary pairs are then judged against a different sum.
  const AlternatingPath before = alternating_path(pos({3, 5}, 7), LabelForm::wrapped);
  EXPECT_EQ(V(before.labeling.values().begin(), before.labeling.values().end()), (V{6, 2, 4}));
  EXPECT_TRUE(check_uniformly_ordered(before.graph, before.labeling, before.sides, 6).pass);
  const Labeling after({7, 2, 5}, 7);
  EXPECT_FALSE(check_rho_bar(before.graph, after, 7).pass);
  EXPECT_THROW(emit_path_labels(rebase(pos({3, 5}, 7), 8)), error);
}

TEST(AlternatingProperties, RebaseShiftsEveryDifferenceEqually) {
  int kept = 0;
  for (auto seq : random_sequences(1500, 15)) {
    seq.shift = 0;
    if (!has_distinct_reductions(seq)) continue;
    const auto form = canonical_form(seq.pattern);
    const AlternatingPath path = alternating_path(seq, form);
    if (!naive::is_uniform(path.graph, path.labeling.values(), path.sides, seq.base - 1)) continue;
    const auto before = naive::diffs(path.graph, path.labeling.values());
    for (Label grow : {1, 2, 7}) {
      const auto wider = rebase(seq, seq.base + grow);
      // x positions stay, y positions rise by the growth.
      const PositionPair a = positions(seq);
      const PositionPair b = positions(wider);
      EXPECT_EQ(a.xs, b.xs);
      for (std::size_t i = 0; i < a.ys.size(); ++i) EXPECT_EQ(b.ys[i], a.ys[i] + grow);
      if (!has_distinct_reductions(wider)) continue;
      const AlternatingPath p2 = alternating_path(wider, form);
      const auto after = naive::diffs(p2.graph, p2.labeling.values());
      for (std::size_t i = 0; i < before.size(); ++i) EXPECT_EQ(after[i], before[i] + grow);
      // Order always survives; rho-bar survives unless a pair of the old
      // differences sums to r - grow.
      bool clash = false;
      for (Label d1 : before) {
        for (Label d2 : before) clash = clash || d1 + d2 == seq.base - grow;
      }
      EXPECT_EQ(naive::is_uniform(p2.graph, p2.labeling.values(), p2.sides, wider.base - 1), !clash);
      kept += !clash;
    }
  }
  EXPECT_GT(kept, 200);
}
