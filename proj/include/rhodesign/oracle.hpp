#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <vector>

#include "rhodesign/error.hpp"
#include "rhodesign/graph.hpp"
#include "rhodesign/labeling.hpp"

namespace rhodesign {

struct SearchSpec {
  Graph graph;
  Label t = 0;
  CheckKind kind = CheckKind::rho_bar;
  /// Needed for rho-plus and uniformly-ordered; computed from the graph
  /// when absent.
  std::optional<Bipartition> bipartition;
  /// Stop after this many results; exhaustive when unset.
  std::optional<std::size_t> limit;
  /// Pin vertex 0 to label 0, one representative per shift orbit. Only
  /// meaningful for the shift-invariant kinds (rho-bar, rho).
  bool up_to_translation = false;
  std::size_t max_vertices = 12;
  Label max_t = 40;
};

namespace detail {

class LabelSearch {
 public:
  explicit LabelSearch(const SearchSpec& spec) : spec_(spec), g_(spec.graph) {
    const std::size_t n = g_.vertex_count();
    const auto m = static_cast<Label>(g_.edge_count());
    require(n <= spec.max_vertices, errc::search_too_large,
            std::to_string(n) + " vertices exceed the cap of " + std::to_string(spec.max_vertices));
    require(spec.t <= spec.max_t, errc::search_too_large,
            "t=" + std::to_string(spec.t) + " exceeds the cap of " + std::to_string(spec.max_t));
    require(spec.t >= 2 * m, errc::invalid_parameter, "search needs t >= 2|E|");
    if (spec.kind == CheckKind::rho || spec.kind == CheckKind::rho_plus) {
      require(spec.t == 2 * m, errc::invalid_parameter, "rho kinds search at t = 2|E|");
    }
    ordered_ = spec.kind == CheckKind::rho_plus || spec.kind == CheckKind::uniformly_ordered;
    require(!(ordered_ && spec.up_to_translation), errc::invalid_parameter,
            "translation reduction applies to rho-bar and rho only");
    if (ordered_) {
      sides_ = spec.bipartition ? *spec.bipartition : bipartition(g_);
      require(sides_.vertex_count() == n, errc::invalid_parameter,
              "bipartition does not match graph");
    }
    // Edges to earlier vertices are checked as soon as both ends are set.
    back_.resize(n);
    for (const Edge& e : g_.edges()) back_[e.v].push_back(e.u);
  }

  // Results whose vertex 0 carries `first`, in lexicographic order. With
  // `store` false only the count is kept.
  std::vector<std::vector<Label>> run_from(Label first, std::optional<std::size_t> limit,
                                           bool store = true) {
    reset();
    results_.clear();
    found_ = 0;
    limit_ = limit;
    store_ = store;
    if (g_.vertex_count() == 0) return results_;
    if (assign(0, first)) descend(1);
    return std::move(results_);
  }

  std::size_t found() const noexcept { return found_; }

  std::vector<Label> first_labels() const {
    if (spec_.up_to_translation) return {0};
    std::vector<Label> out;
    for (Label x = 0; x <= spec_.t; ++x) out.push_back(x);
    return out;
  }

 private:
  void reset() {
    const auto size = static_cast<std::size_t>(spec_.t) + 2;
    label_.assign(g_.vertex_count(), -1);
    added_.assign(g_.vertex_count(), {});
    used_label_.assign(size, false);
    used_diff_.assign(size, false);
    max_a_ = -1;
    min_b_ = spec_.t + 1;
  }

  bool full() const { return limit_ && found_ >= *limit_; }

  void descend(Vertex x) {
    if (full()) return;
    if (x == g_.vertex_count()) {
      ++found_;
      if (store_) results_.push_back(label_);
      return;
    }
    for (Label value = 0; value <= spec_.t && !full(); ++value) {
      if (used_label_[value]) continue;
      const Label saved_max_a = max_a_;
      const Label saved_min_b = min_b_;
      if (assign(x, value)) descend(x + 1);
      unassign(x);
      max_a_ = saved_max_a;
      min_b_ = saved_min_b;
    }
  }

  // Sets label_[x] and the differences to earlier neighbours; false (with
  // partial state that unassign() clears) as soon as a condition breaks.
  bool assign(Vertex x, Label value) {
    label_[x] = value;
    used_label_[value] = true;
    added_[x].clear();
    if (ordered_) {
      if (sides_.in_a(x)) {
        max_a_ = std::max(max_a_, value);
      } else {
        min_b_ = std::min(min_b_, value);
      }
      if (spec_.kind == CheckKind::uniformly_ordered && max_a_ >= min_b_) return false;
    }
    for (Vertex y : back_[x]) {
      const Label other = label_[y];
      if (spec_.kind == CheckKind::rho_plus) {
        const bool x_low = sides_.in_a(x);
        if (x_low ? !(value < other) : !(other < value)) return false;
      }
      const Label d = value > other ? value - other : other - value;
      const Label partner = spec_.t + 1 - d;
      if (used_diff_[d] || partner == d || used_diff_[partner]) return false;
      used_diff_[d] = true;
      added_[x].push_back(d);
    }
    return true;
  }

  void unassign(Vertex x) {
    used_label_[label_[x]] = false;
    for (Label d : added_[x]) used_diff_[d] = false;
    added_[x].clear();
    label_[x] = -1;
  }

  const SearchSpec& spec_;
  const Graph& g_;
  bool ordered_ = false;
  Bipartition sides_;
  std::vector<std::vector<Vertex>> back_;
  std::vector<Label> label_;
  std::vector<bool> used_label_;
  std::vector<bool> used_diff_;
  std::vector<std::vector<Label>> added_;
  Label max_a_ = -1;
  Label min_b_ = 0;
  std::optional<std::size_t> limit_;
  bool store_ = true;
  std::size_t found_ = 0;
  std::vector<std::vector<Label>> results_;
};

}  // namespace detail

/// Exhaustive backtracking over label vectors in lexicographic order,
/// pruning on repeated and complementary differences (and side order for the
/// ordered kinds). Without a limit the first vertex's labels are searched in
/// parallel; the merged order is unchanged.
inline std::vector<Labeling> enumerate_labelings(const SearchSpec& spec) {
  detail::LabelSearch probe(spec);
  const std::vector<Label> firsts = probe.first_labels();
  std::vector<std::vector<Label>> raw;
  if (spec.limit) {
    for (Label first : firsts) {
      if (raw.size() >= *spec.limit) break;
      detail::LabelSearch search(spec);
      auto part = search.run_from(first, *spec.limit - raw.size());
      raw.insert(raw.end(), part.begin(), part.end());
    }
  } else {
    std::vector<std::future<std::vector<std::vector<Label>>>> parts;
    for (Label first : firsts) {
      parts.push_back(std::async(std::launch::async, [&spec, first] {
        detail::LabelSearch search(spec);
        return search.run_from(first, std::nullopt);
      }));
    }
    for (auto& part : parts) {
      auto chunk = part.get();
      raw.insert(raw.end(), chunk.begin(), chunk.end());
    }
  }
  std::vector<Labeling> out;
  out.reserve(raw.size());
  for (auto& values : raw) out.emplace_back(std::move(values), spec.t);
  return out;
}

/// Same search as enumerate_labelings without materialising the results.
inline std::size_t count_labelings(const SearchSpec& spec) {
  detail::LabelSearch probe(spec);
  std::vector<std::future<std::size_t>> parts;
  for (Label first : probe.first_labels()) {
    parts.push_back(std::async(std::launch::async, [&spec, first] {
      detail::LabelSearch search(spec);
      search.run_from(first, std::nullopt, false);
      return search.found();
    }));
  }
  std::size_t total = 0;
  for (auto& part : parts) total += part.get();
  if (spec.limit) total = std::min(total, *spec.limit);
  return total;
}

}  // namespace rhodesign
