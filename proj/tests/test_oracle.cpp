#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "naive.hpp"
#include "rhodesign/constructions.hpp"
#include "rhodesign/oracle.hpp"

using namespace rhodesign;

namespace {

// Plain enumeration of injective maps, filtered by the naive predicate.
std::vector<std::vector<Label>> brute_force(const Graph& g, Label t, auto&& keep) {
  std::vector<std::vector<Label>> out;
  std::vector<Label> f(g.vertex_count());
  std::vector<bool> used(static_cast<std::size_t>(t) + 1, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == f.size()) {
      if (keep(f)) out.push_back(f);
      return;
    }
    for (Label x = 0; x <= t; ++x) {
      if (used[x]) continue;
      used[x] = true;
      f[i] = x;
      self(self, i + 1);
      used[x] = false;
    }
  };
  rec(rec, 0);
  return out;
}

SearchSpec spec_for(const Graph& g, Label t, CheckKind kind) {
  SearchSpec s;
  s.graph = g;
  s.t = t;
  s.kind = kind;
  return s;
}

std::vector<std::vector<Label>> raw(const std::vector<Labeling>& ls) {
  std::vector<std::vector<Label>> out;
  for (const auto& l : ls) out.emplace_back(l.values().begin(), l.values().end());
  return out;
}

}  // namespace

TEST(Oracle, RhoBarMatchesBruteForce) {
  for (auto [g, t] : std::vector<std::pair<Graph, Label>>{
           {make_path(3), 4}, {make_path(3), 6}, {make_path(4), 7}, {make_cycle(4), 8}, {make_cycle(4), 9}}) {
    SearchSpec spec = spec_for(g, t, CheckKind::rho_bar);
    const auto expected = brute_force(g, t, [&](const auto& f) { return naive::is_rho_bar(g, f, t); });
    EXPECT_EQ(raw(enumerate_labelings(spec)), expected);
    EXPECT_EQ(count_labelings(spec), expected.size());
  }
}

TEST(Oracle, OrderedKindsMatchBruteForce) {
  const Graph g = make_cycle_with_pendants(4, {1});
  const Bipartition bip = bipartition(g);
  SearchSpec uo = spec_for(g, 11, CheckKind::uniformly_ordered);
  EXPECT_EQ(raw(enumerate_labelings(uo)),
            brute_force(g, 11, [&](const auto& f) { return naive::is_uniform(g, f, bip, 11); }));

  SearchSpec plus = spec_for(g, 10, CheckKind::rho_plus);
  auto ordered_rho = [&](const auto& f) {
    if (!naive::is_rho(g, f)) return false;
    for (const Edge& e : g.edges()) {
      const Vertex a = bip.in_a(e.u) ? e.u : e.v;
      const Vertex b = a == e.u ? e.v : e.u;
      if (f[a] >= f[b]) return false;
    }
    return true;
  };
  EXPECT_EQ(raw(enumerate_labelings(plus)), brute_force(g, 10, ordered_rho));

  SearchSpec rho = spec_for(g, 10, CheckKind::rho);
  EXPECT_EQ(raw(enumerate_labelings(rho)),
            brute_force(g, 10, [&](const auto& f) { return naive::is_rho(g, f); }));
}

TEST(Oracle, ContainsConstructedLabelings) {
  for (const auto& c : {label_even_cycle(4, 0, 9), label_cycle_one_pendant(4, 1),
                        label_cycle_one_pendant(4, 2)}) {
    SearchSpec spec = spec_for(c.graph, c.labeling.bound(), CheckKind::uniformly_ordered);
    spec.bipartition = c.bipartition;
    const auto found = enumerate_labelings(spec);
    EXPECT_NE(std::find(found.begin(), found.end(), c.labeling), found.end());
  }
}

TEST(Oracle, TranslationReductionDividesCount) {
  // rho-bar is shift invariant, so each orbit of t+1 shifts has one member
  // with vertex 0 at label 0.
  const Graph g = make_cycle(4);
  SearchSpec all = spec_for(g, 9, CheckKind::rho_bar);
  SearchSpec pinned = all;
  pinned.up_to_translation = true;
  EXPECT_EQ(count_labelings(all), count_labelings(pinned) * 10);
  for (const auto& f : enumerate_labelings(pinned)) EXPECT_EQ(f[0], 0);
}

TEST(Oracle, LimitIsLexicographicPrefix) {
  const Graph g = make_path(4);
  SearchSpec spec = spec_for(g, 8, CheckKind::rho_bar);
  const auto full = raw(enumerate_labelings(spec));
  spec.limit = 7;
  const auto head = raw(enumerate_labelings(spec));
  ASSERT_EQ(head.size(), 7u);
  EXPECT_TRUE(std::equal(head.begin(), head.end(), full.begin()));
  EXPECT_EQ(count_labelings(spec), 7u);
}

TEST(Oracle, CountsAreStable) {
  SearchSpec spec = spec_for(make_cycle(6), 12, CheckKind::rho);
  const std::size_t first = count_labelings(spec);
  EXPECT_GT(first, 0u);
  EXPECT_EQ(count_labelings(spec), first);
}

TEST(Oracle, GuardsAndErrors) {
  const Graph big = make_path(13);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const error& e) {
      return e.code();
    }
    return errc::invalid_parameter;
  };
  EXPECT_EQ(code_of([&] { count_labelings(spec_for(big, 30, CheckKind::rho_bar)); }),
            errc::search_too_large);
  EXPECT_EQ(code_of([&] { count_labelings(spec_for(make_path(3), 41, CheckKind::rho_bar)); }),
            errc::search_too_large);
  SearchSpec odd = spec_for(make_path(3), 5, CheckKind::rho);
  EXPECT_THROW(count_labelings(odd), error);
  SearchSpec low = spec_for(make_path(3), 3, CheckKind::rho_bar);
  EXPECT_THROW(count_labelings(low), error);
  SearchSpec pinned = spec_for(make_path(3), 4, CheckKind::uniformly_ordered);
  pinned.up_to_translation = true;
  EXPECT_THROW(count_labelings(pinned), error);
}
