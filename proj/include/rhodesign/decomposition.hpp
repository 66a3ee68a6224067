#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rhodesign/error.hpp"
#include "rhodesign/graph.hpp"
#include "rhodesign/labeling.hpp"

namespace rhodesign {

/// A block as its edge list over Z_v.
using BlockEdges = std::vector<std::pair<Label, Label>>;

/// x embeddings of G into Z_v, v = 2mx+1. `embeddings[j][u]` is the image of
/// vertex u in block j.
struct BaseBlockSet {
  Label v = 0;
  int x = 0;
  Graph graph;
  Labeling source;
  std::vector<std::vector<Label>> embeddings;

  BlockEdges block_edges(std::size_t j) const {
    BlockEdges out;
    for (const Edge& e : graph.edges()) {
      Label a = embeddings.at(j)[e.u];
      Label b = embeddings.at(j)[e.v];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
  }
};

struct DecompositionCertificate {
  Label v = 0;
  std::vector<BlockEdges> base_blocks;
  std::vector<BlockEdges> developed;
  std::size_t edge_count = 0;
  bool pass = false;
  std::optional<std::string> violation;
};

/// Block j keeps side A at f(a) and moves side B to f(b) + 2mj (mod v).
/// Requires a rho+-labeling; across the blocks the edge lengths mod v then
/// cover 1..mx once each.
inline BaseBlockSet base_blocks(const Graph& g, const Labeling& f, const Bipartition& bip, int x) {
  require(x >= 1, errc::invalid_parameter, "x must be positive");
  require(check_rho_plus(g, f, bip).pass, errc::precondition_violation,
          "base blocks need a rho+-labeling");
  const auto m = static_cast<Label>(g.edge_count());
  BaseBlockSet out;
  out.v = 2 * m * x + 1;
  out.x = x;
  out.graph = g;
  out.source = f;
  for (int j = 0; j < x; ++j) {
    std::vector<Label> images(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      images[u] = bip.in_a(u) ? f[u] : (f[u] + 2 * m * j) % out.v;
    }
    out.embeddings.push_back(std::move(images));
  }

  std::vector<int> lengths(static_cast<std::size_t>(m * x) + 1, 0);
  for (std::size_t j = 0; j < out.embeddings.size(); ++j) {
    for (const auto& [a, b] : out.block_edges(j)) ++lengths[reduce_mod(b - a, out.v)];
  }
  for (Label d = 1; d <= m * x; ++d) {
    if (lengths[d] != 1) {
      throw std::logic_error("edge length " + std::to_string(d) + " covered " +
                             std::to_string(lengths[d]) + " times by base blocks");
    }
  }
  return out;
}

namespace detail {

// Counts every unordered pair of Z_v; index of {a < b} in the upper triangle.
class PairCounter {
 public:
  explicit PairCounter(Label v)
      : v_(v), counts_(static_cast<std::size_t>(v) * static_cast<std::size_t>(v - 1) / 2, 0) {}

  // Returns the count after adding.
  int add(Label a, Label b) {
    if (a > b) std::swap(a, b);
    auto& c = counts_[index(a, b)];
    if (c < 255) ++c;
    return c;
  }

  std::optional<std::pair<Label, Label>> first_gap() const {
    for (Label a = 0; a < v_; ++a) {
      for (Label b = a + 1; b < v_; ++b) {
        if (counts_[index(a, b)] == 0) return std::make_pair(a, b);
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t index(Label a, Label b) const {
    auto ua = static_cast<std::size_t>(a);
    auto uv = static_cast<std::size_t>(v_);
    return ua * uv - ua * (ua + 1) / 2 + static_cast<std::size_t>(b - a - 1);
  }

  Label v_;
  std::vector<std::uint8_t> counts_;
};

inline std::string pair_name(Label a, Label b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

// Relabels a block's vertices to 0..k-1 and builds the graph; nullopt if the
// block is not a simple graph.
inline std::optional<Graph> block_graph(const BlockEdges& block) {
  std::vector<Label> ids;
  for (const auto& [a, b] : block) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Edge> edges;
  for (const auto& [a, b] : block) {
    auto ia = std::lower_bound(ids.begin(), ids.end(), a) - ids.begin();
    auto ib = std::lower_bound(ids.begin(), ids.end(), b) - ids.begin();
    edges.push_back(Edge{static_cast<Vertex>(ia), static_cast<Vertex>(ib)});
  }
  try {
    return Graph(ids.size(), std::move(edges));
  } catch (const error&) {
    return std::nullopt;
  }
}

inline bool cover_once(const std::vector<BlockEdges>& blocks, Label v,
                       DecompositionCertificate& cert) {
  PairCounter counter(v);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (const auto& [a, b] : blocks[j]) {
      ++cert.edge_count;
      if (counter.add(a, b) == 2) {
        cert.violation = "pair " + pair_name(std::min(a, b), std::max(a, b)) +
                         " covered twice (again in block " + std::to_string(j) + ")";
        return false;
      }
    }
  }
  if (auto gap = counter.first_gap()) {
    cert.violation = "pair " + pair_name(gap->first, gap->second) + " not covered";
    return false;
  }
  return true;
}

}  // namespace detail

/// Checks each block is a copy of G inside Z_v and that the blocks together
/// cover every pair of Z_v exactly once. Reports the first failure found.
inline DecompositionCertificate verify_decomposition(const std::vector<BlockEdges>& blocks, Label v,
                                                     const Graph& g) {
  DecompositionCertificate cert;
  cert.v = v;
  cert.developed = blocks;
  if (v < 2) {
    cert.violation = "v must be at least 2";
    return cert;
  }
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (const auto& [a, b] : blocks[j]) {
      if (a < 0 || a >= v || b < 0 || b >= v) {
        cert.violation = "block " + std::to_string(j) + " leaves Z_" + std::to_string(v);
        return cert;
      }
    }
    std::optional<Graph> h = detail::block_graph(blocks[j]);
    if (!h || !are_isomorphic(*h, g)) {
      cert.violation = "block " + std::to_string(j) + " is not a copy of G";
      return cert;
    }
  }
  cert.pass = detail::cover_once(blocks, v, cert);
  return cert;
}

/// All v translates of every base block, followed by the exact cover check.
/// `keep_blocks` = false drops the developed list from the certificate.
inline DecompositionCertificate develop(const BaseBlockSet& bb, bool keep_blocks = true) {
  DecompositionCertificate cert;
  cert.v = bb.v;
  for (std::size_t j = 0; j < bb.embeddings.size(); ++j) {
    cert.base_blocks.push_back(bb.block_edges(j));
    std::vector<Label> images = bb.embeddings[j];
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      cert.violation = "base block " + std::to_string(j) + " is not injective";
      return cert;
    }
  }
  std::vector<BlockEdges> all;
  all.reserve(cert.base_blocks.size() * static_cast<std::size_t>(bb.v));
  for (const BlockEdges& base : cert.base_blocks) {
    for (Label i = 0; i < bb.v; ++i) {
      BlockEdges moved;
      moved.reserve(base.size());
      for (const auto& [a, b] : base) {
        Label ta = (a + i) % bb.v;
        Label tb = (b + i) % bb.v;
        moved.emplace_back(std::min(ta, tb), std::max(ta, tb));
      }
      all.push_back(std::move(moved));
    }
  }
  cert.pass = detail::cover_once(all, bb.v, cert);
  if (keep_blocks) cert.developed = std::move(all);
  return cert;
}

}  // namespace rhodesign
