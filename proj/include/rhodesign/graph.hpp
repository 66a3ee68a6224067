#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "rhodesign/error.hpp"

namespace rhodesign {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on the vertex ids 0..n-1, without isolated
/// vertices. Edge order is the construction order and is what every
/// per-edge report follows; use sorted_edges() for canonical output.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Vertex> roots = {})
      : n_(vertex_count), roots_(std::move(roots)), adj_(vertex_count) {
    edges_.reserve(edges.size());
    std::vector<Edge> seen;
    seen.reserve(edges.size());
    for (const Edge& raw : edges) {
      require(raw.u < n_ && raw.v < n_, errc::invalid_parameter, "edge endpoint out of range");
      require(raw.u != raw.v, errc::invalid_parameter,
              "self-loop at vertex " + std::to_string(raw.u));
      Edge e = make_edge(raw.u, raw.v);
      edges_.push_back(e);
      seen.push_back(e);
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    require(dup == seen.end(), errc::invalid_parameter,
            dup == seen.end() ? std::string{}
                              : "duplicate edge {" + std::to_string(dup->u) + "," +
                                    std::to_string(dup->v) + "}");
    for (Vertex x = 0; x < n_; ++x) {
      require(!adj_[x].empty(), errc::invalid_parameter, "isolated vertex " + std::to_string(x));
      std::sort(adj_[x].begin(), adj_[x].end());
    }
    std::vector<Vertex> r = roots_;
    std::sort(r.begin(), r.end());
    require(std::adjacent_find(r.begin(), r.end()) == r.end(), errc::invalid_parameter,
            "duplicate root");
    for (Vertex x : roots_) require(x < n_, errc::invalid_parameter, "root out of range");
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& roots() const noexcept { return roots_; }
  const std::vector<Vertex>& neighbors(Vertex x) const { return adj_.at(x); }
  std::size_t degree(Vertex x) const { return adj_.at(x).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return false;
    const auto& row = adj_[a];
    return std::binary_search(row.begin(), row.end(), b);
  }

  std::vector<Edge> sorted_edges() const {
    std::vector<Edge> out = edges_;
    std::sort(out.begin(), out.end());
    return out;
  }

  bool connected() const {
    if (n_ == 0) return true;
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj_[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    return reached == n_;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.roots_ == b.roots_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> roots_;
  std::vector<std::vector<Vertex>> adj_;
};

/// One (m_i, n_i) entry of a cycle chain.
struct CycleSpec {
  int m = 0;
  int n = 0;

  friend bool operator==(const CycleSpec&, const CycleSpec&) = default;
};

/// Where each cycle and path of a family graph landed. `cycle[k]` is the
/// vertex at cycle position k; consecutive positions are adjacent and
/// position m-1 closes back to 0. Each path lists its new vertices starting
/// from the one adjacent to the attachment vertex cycle[m-1].
struct StageLayout {
  std::vector<Vertex> cycle;
  std::vector<std::vector<Vertex>> paths;
};

struct FamilyGraph {
  Graph graph;
  std::vector<StageLayout> stages;
};

/// C_{m,(n_1,...,n_k)}. Vertex ids: the cycle 0..m-1 in cyclic order, the
/// root is vertex m-1, then each path in turn walking away from the root.
/// An n_i = 0 entry adds nothing but keeps its (empty) slot in the layout.
inline FamilyGraph cycle_with_pendants_layout(int m, std::span<const int> ns) {
  require(m >= 3, errc::invalid_parameter, "cycle length must be at least 3");
  for (int n : ns) require(n >= 0, errc::invalid_parameter, "path length must be non-negative");

  StageLayout stage;
  std::vector<Edge> edges;
  Vertex next = 0;
  for (int k = 0; k < m; ++k) stage.cycle.push_back(next++);
  for (int k = 0; k < m; ++k) edges.push_back(make_edge(stage.cycle[k], stage.cycle[(k + 1) % m]));
  const Vertex root = stage.cycle.back();
  for (int n : ns) {
    std::vector<Vertex> path;
    Vertex prev = root;
    for (int k = 0; k < n; ++k) {
      edges.push_back(make_edge(prev, next));
      path.push_back(next);
      prev = next++;
    }
    stage.paths.push_back(std::move(path));
  }
  FamilyGraph out{Graph(next, std::move(edges), {root}), {}};
  out.stages.push_back(std::move(stage));
  return out;
}

inline Graph make_cycle_with_pendants(int m, std::span<const int> ns) {
  return cycle_with_pendants_layout(m, ns).graph;
}

inline Graph make_cycle_with_pendants(int m, std::initializer_list<int> ns) {
  std::vector<int> v(ns);
  return make_cycle_with_pendants(m, std::span<const int>(v));
}

/// C_{m_1,(n_1),...,m_t,(n_t)}. Cycle i >= 2 is entered at position 1 (the
/// far end of path i-1) and left at position m_i-1, so the two attachment
/// vertices share the neighbour at position 0. Roots are the vertices of
/// degree > 2 in chain order. A single-entry chain is C_{m,(n)} exactly.
inline FamilyGraph cycle_chain_layout(std::span<const CycleSpec> specs) {
  require(!specs.empty(), errc::invalid_parameter, "chain needs at least one cycle");
  for (const CycleSpec& s : specs) {
    require(s.m >= 3, errc::invalid_parameter, "cycle length must be at least 3");
    require(s.n >= 0, errc::invalid_parameter, "path length must be non-negative");
  }
  if (specs.size() == 1) {
    const int n = specs[0].n;
    return cycle_with_pendants_layout(specs[0].m, std::span<const int>(&n, 1));
  }

  std::vector<StageLayout> stages;
  std::vector<Edge> edges;
  Vertex next = 0;
  std::optional<Vertex> entry;
  std::vector<Vertex> attachment_order;
  for (const CycleSpec& s : specs) {
    StageLayout stage;
    for (int k = 0; k < s.m; ++k) {
      if (k == 1 && entry) {
        stage.cycle.push_back(*entry);
      } else {
        stage.cycle.push_back(next++);
      }
    }
    for (int k = 0; k < s.m; ++k) {
      edges.push_back(make_edge(stage.cycle[k], stage.cycle[(k + 1) % s.m]));
    }
    if (entry) attachment_order.push_back(*entry);
    Vertex prev = stage.cycle.back();
    attachment_order.push_back(prev);
    std::vector<Vertex> path;
    for (int k = 0; k < s.n; ++k) {
      edges.push_back(make_edge(prev, next));
      path.push_back(next);
      prev = next++;
    }
    stage.paths.push_back(std::move(path));
    entry = prev;
    stages.push_back(std::move(stage));
  }

  std::vector<std::size_t> degree(next, 0);
  for (const Edge& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<Vertex> roots;
  for (Vertex x : attachment_order) {
    if (degree[x] > 2 && std::find(roots.begin(), roots.end(), x) == roots.end()) {
      roots.push_back(x);
    }
  }
  return FamilyGraph{Graph(next, std::move(edges), std::move(roots)), std::move(stages)};
}

inline Graph make_cycle_chain(std::span<const CycleSpec> specs) {
  return cycle_chain_layout(specs).graph;
}

inline Graph make_cycle_chain(std::initializer_list<CycleSpec> specs) {
  std::vector<CycleSpec> v(specs);
  return make_cycle_chain(std::span<const CycleSpec>(v));
}

/// Path on `vertex_count` vertices 0 - 1 - ... - (n-1); no roots.
inline Graph make_path(std::size_t vertex_count) {
  require(vertex_count >= 2, errc::invalid_parameter, "path needs at least two vertices");
  std::vector<Edge> edges;
  for (Vertex k = 0; k + 1 < vertex_count; ++k) edges.push_back(Edge{k, k + 1});
  return Graph(vertex_count, std::move(edges));
}

/// Plain cycle 0 - 1 - ... - (m-1) - 0; no roots. Odd m is allowed.
inline Graph make_cycle(int m) {
  require(m >= 3, errc::invalid_parameter, "cycle length must be at least 3");
  std::vector<Edge> edges;
  for (int k = 0; k < m; ++k) {
    edges.push_back(make_edge(static_cast<Vertex>(k), static_cast<Vertex>((k + 1) % m)));
  }
  return Graph(static_cast<std::size_t>(m), std::move(edges));
}

class Bipartition {
 public:
  Bipartition() = default;

  /// Validates cover, disjointness and that every edge crosses.
  static Bipartition from_sides(const Graph& g, std::vector<Vertex> side_a,
                                std::vector<Vertex> side_b) {
    std::vector<int> side(g.vertex_count(), -1);
    for (Vertex x : side_a) {
      require(x < g.vertex_count() && side[x] == -1, errc::invalid_parameter,
              "side A vertex out of range or repeated");
      side[x] = 0;
    }
    for (Vertex x : side_b) {
      require(x < g.vertex_count() && side[x] == -1, errc::invalid_parameter,
              "side B vertex out of range or shared with A");
      side[x] = 1;
    }
    for (std::size_t x = 0; x < side.size(); ++x) {
      require(side[x] != -1, errc::invalid_parameter,
              "vertex " + std::to_string(x) + " in neither side");
    }
    for (const Edge& e : g.edges()) {
      require(side[e.u] != side[e.v], errc::invalid_parameter,
              "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} inside one side");
    }
    Bipartition out;
    out.in_a_.resize(g.vertex_count());
    for (std::size_t x = 0; x < side.size(); ++x) out.in_a_[x] = side[x] == 0;
    std::sort(side_a.begin(), side_a.end());
    std::sort(side_b.begin(), side_b.end());
    out.side_a_ = std::move(side_a);
    out.side_b_ = std::move(side_b);
    return out;
  }

  const std::vector<Vertex>& side_a() const noexcept { return side_a_; }
  const std::vector<Vertex>& side_b() const noexcept { return side_b_; }
  bool in_a(Vertex x) const { return in_a_.at(x); }
  std::size_t vertex_count() const noexcept { return in_a_.size(); }

  Bipartition swapped() const {
    Bipartition out;
    out.side_a_ = side_b_;
    out.side_b_ = side_a_;
    out.in_a_.resize(in_a_.size());
    for (std::size_t x = 0; x < in_a_.size(); ++x) out.in_a_[x] = !in_a_[x];
    return out;
  }

  friend bool operator==(const Bipartition& a, const Bipartition& b) {
    return a.side_a_ == b.side_a_ && a.side_b_ == b.side_b_;
  }

 private:
  std::vector<Vertex> side_a_;
  std::vector<Vertex> side_b_;
  std::vector<bool> in_a_;
};

/// Two-colouring with the first root (or vertex 0 when rootless) in side A.
/// Components not reached from there start from their smallest vertex.
inline Bipartition bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> starts;
  if (!g.roots().empty()) starts.push_back(g.roots().front());
  for (Vertex x = 0; x < n; ++x) starts.push_back(x);
  for (Vertex start : starts) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<Vertex> q;
    q.push(start);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          fail(errc::not_bipartite, "odd cycle through edge {" + std::to_string(x) + "," +
                                        std::to_string(y) + "}");
        }
      }
    }
  }
  std::vector<Vertex> a, b;
  for (Vertex x = 0; x < n; ++x) (colour[x] == 0 ? a : b).push_back(x);
  return Bipartition::from_sides(g, std::move(a), std::move(b));
}

namespace detail {

// Colour refinement run on both graphs at once so colour ids are comparable.
inline std::pair<std::vector<int>, std::vector<int>> refine_colours(const Graph& g, const Graph& h) {
  std::vector<int> cg(g.vertex_count()), ch(h.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) cg[x] = static_cast<int>(g.degree(x));
  for (Vertex x = 0; x < h.vertex_count(); ++x) ch[x] = static_cast<int>(h.degree(x));
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& gr, const std::vector<int>& c, Vertex x) {
      std::vector<int> around;
      for (Vertex y : gr.neighbors(x)) around.push_back(c[y]);
      std::sort(around.begin(), around.end());
      return std::make_pair(c[x], std::move(around));
    };
    std::vector<int> ng(cg.size()), nh(ch.size());
    for (Vertex x = 0; x < cg.size(); ++x) {
      auto [it, _] = ids.try_emplace(signature(g, cg, x), static_cast<int>(ids.size()));
      ng[x] = it->second;
    }
    for (Vertex x = 0; x < ch.size(); ++x) {
      auto [it, _] = ids.try_emplace(signature(h, ch, x), static_cast<int>(ids.size()));
      nh[x] = it->second;
    }
    cg = std::move(ng);
    ch = std::move(nh);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {cg, ch};
}

}  // namespace detail

/// Exact isomorphism test: colour refinement, then backtracking along a BFS
/// order of `g` restricted to equally coloured candidates.
inline bool are_isomorphic(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (n == 0) return true;

  auto [cg, ch] = detail::refine_colours(g, h);
  {
    std::vector<int> sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }

  std::vector<Vertex> order;
  std::vector<bool> queued(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (queued[start]) continue;
    std::queue<Vertex> q;
    q.push(start);
    queued[start] = true;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      order.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!queued[y]) {
          queued[y] = true;
          q.push(y);
        }
      }
    }
  }

  constexpr Vertex unmapped = static_cast<Vertex>(-1);
  std::vector<Vertex> to_h(n, unmapped);
  std::vector<bool> used(n, false);

  auto consistent = [&](Vertex x, Vertex y) {
    if (cg[x] != ch[y] || used[y]) return false;
    for (std::size_t k = 0; k < n; ++k) {
      Vertex mapped = to_h[k];
      if (mapped == unmapped) continue;
      if (g.has_edge(x, static_cast<Vertex>(k)) != h.has_edge(y, mapped)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex x = order[depth];
    for (Vertex y = 0; y < n; ++y) {
      if (!consistent(x, y)) continue;
      to_h[x] = y;
      used[y] = true;
      if (self(self, depth + 1)) return true;
      to_h[x] = unmapped;
      used[y] = false;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace rhodesign
