#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rhodesign/error.hpp"
#include "rhodesign/graph.hpp"

namespace rhodesign {

using Label = std::int64_t;

/// Injective vertex labeling into [0, bound]; shifts work modulo bound + 1.
/// Values are indexed by vertex id.
class Labeling {
 public:
  Labeling() = default;

  Labeling(std::vector<Label> values, Label bound) : bound_(bound), values_(std::move(values)) {
    require(bound_ >= 0, errc::invalid_parameter, "labeling bound must be non-negative");
    std::vector<Label> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    for (Label x : sorted) {
      require(x >= 0 && x <= bound_, errc::invalid_parameter,
              "label " + std::to_string(x) + " outside [0," + std::to_string(bound_) + "]");
    }
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    require(dup == sorted.end(), errc::invalid_parameter,
            dup == sorted.end() ? std::string{} : "label " + std::to_string(*dup) + " used twice");
  }

  Label bound() const noexcept { return bound_; }
  Label modulus() const noexcept { return bound_ + 1; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Label> values() const noexcept { return values_; }
  Label operator[](Vertex x) const { return values_.at(x); }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  Label bound_ = 0;
  std::vector<Label> values_;
};

inline void require_complete(const Graph& g, const Labeling& f) {
  require(f.size() == g.vertex_count(), errc::incomplete_labeling,
          "labeling covers " + std::to_string(f.size()) + " of " +
              std::to_string(g.vertex_count()) + " vertices");
}

/// min(d, r - d) for d taken mod r.
inline Label reduce_mod(Label d, Label r) {
  Label x = ((d % r) + r) % r;
  return std::min(x, r - x);
}

/// Per-edge differences in graph edge order.
struct DifferenceProfile {
  Label modulus = 0;
  std::vector<Label> raw;
  std::vector<Label> reduced;
};

inline DifferenceProfile difference_profile(const Graph& g, const Labeling& f) {
  require_complete(g, f);
  DifferenceProfile out;
  out.modulus = f.modulus();
  for (const Edge& e : g.edges()) {
    Label d = f[e.u] > f[e.v] ? f[e.u] - f[e.v] : f[e.v] - f[e.u];
    out.raw.push_back(d);
    out.reduced.push_back(reduce_mod(d, out.modulus));
  }
  return out;
}

enum class CheckKind { rho_bar, rho, rho_plus, uniformly_ordered };

constexpr std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::rho_bar: return "rho-bar";
    case CheckKind::rho: return "rho";
    case CheckKind::rho_plus: return "rho-plus";
    case CheckKind::uniformly_ordered: return "uniformly-ordered";
  }
  return "unknown";
}

inline std::optional<CheckKind> parse_check_kind(std::string_view s) {
  for (CheckKind k : {CheckKind::rho_bar, CheckKind::rho, CheckKind::rho_plus,
                      CheckKind::uniformly_ordered}) {
    if (to_string(k) == s) return k;
  }
  if (s == "uniform") return CheckKind::uniformly_ordered;
  return std::nullopt;
}

struct VerificationReport {
  CheckKind kind = CheckKind::rho_bar;
  bool pass = false;
  /// Threshold max f(A) on a passing uniformly-ordered check.
  std::optional<Label> lambda;
  /// Uniformly ordered with t = 2|E|, i.e. a rho++-labeling.
  bool rho_plus_plus = false;
  std::vector<std::string> violations;
};

namespace detail {

inline std::string edge_name(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

inline void check_range(const Labeling& f, Label lo, Label hi, std::vector<std::string>& out) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f.values()[x] < lo || f.values()[x] > hi) {
      out.push_back("vertex " + std::to_string(x) + " label " + std::to_string(f.values()[x]) +
                    " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
  }
}

inline VerificationReport finish(CheckKind kind, std::vector<std::string> violations) {
  VerificationReport r;
  r.kind = kind;
  r.pass = violations.empty();
  r.violations = std::move(violations);
  return r;
}

}  // namespace detail

/// Conditions (a)-(c): t >= 2|E|, raw differences pairwise distinct, and no
/// difference d with t+1-d also a difference. d = (t+1)/2 conflicts with itself.
inline VerificationReport check_rho_bar(const Graph& g, const Labeling& f, Label t) {
  require_complete(g, f);
  std::vector<std::string> v;
  const auto m = static_cast<Label>(g.edge_count());
  if (t < 2 * m) {
    v.push_back("t=" + std::to_string(t) + " < 2|E|=" + std::to_string(2 * m));
  }
  detail::check_range(f, 0, t, v);
  if (!v.empty()) return detail::finish(CheckKind::rho_bar, std::move(v));

  std::vector<int> seen(static_cast<std::size_t>(t) + 2, 0);
  std::vector<Label> raw = difference_profile(g, f).raw;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (seen[raw[k]]++ == 1) {
      v.push_back("difference " + std::to_string(raw[k]) + " repeated on edge " +
                  detail::edge_name(g.edges()[k]));
    }
  }
  std::vector<Label> distinct = raw;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (Label d : distinct) {
    Label partner = t + 1 - d;
    if (partner == d) {
      v.push_back("difference " + std::to_string(d) + " is self-complementary mod " +
                  std::to_string(t + 1));
    } else if (d < partner && seen[partner] > 0) {
      v.push_back("differences " + std::to_string(d) + " and " + std::to_string(partner) +
                  " are complementary mod " + std::to_string(t + 1));
    }
  }
  return detail::finish(CheckKind::rho_bar, std::move(v));
}

/// Rosa's conditions with m = |E|: labels in [0, 2m] and the differences
/// hit each class {i, 2m+1-i}, i = 1..m, exactly once.
inline VerificationReport check_rho(const Graph& g, const Labeling& f) {
  require_complete(g, f);
  std::vector<std::string> v;
  const auto m = static_cast<Label>(g.edge_count());
  detail::check_range(f, 0, 2 * m, v);
  if (!v.empty()) return detail::finish(CheckKind::rho, std::move(v));

  std::vector<int> hits(static_cast<std::size_t>(m) + 1, 0);
  for (Label d : difference_profile(g, f).raw) ++hits[std::min(d, 2 * m + 1 - d)];
  for (Label i = 1; i <= m; ++i) {
    if (hits[i] == 0) v.push_back("class " + std::to_string(i) + " not covered");
    if (hits[i] > 1) {
      v.push_back("class " + std::to_string(i) + " covered " + std::to_string(hits[i]) + " times");
    }
  }
  return detail::finish(CheckKind::rho, std::move(v));
}

inline VerificationReport check_rho_plus(const Graph& g, const Labeling& f, const Bipartition& bip) {
  VerificationReport base = check_rho(g, f);
  std::vector<std::string> v = std::move(base.violations);
  require(bip.vertex_count() == g.vertex_count(), errc::invalid_parameter,
          "bipartition does not match graph");
  for (const Edge& e : g.edges()) {
    Vertex a = bip.in_a(e.u) ? e.u : e.v;
    Vertex b = bip.in_a(e.u) ? e.v : e.u;
    if (!(f[a] < f[b])) {
      v.push_back("edge " + detail::edge_name(e) + ": f(a)=" + std::to_string(f[a]) +
                  " not below f(b)=" + std::to_string(f[b]));
    }
  }
  return detail::finish(CheckKind::rho_plus, std::move(v));
}

/// (A,B,t)-uniformly ordered: rho-bar plus max f(A) < min f(B).
inline VerificationReport check_uniformly_ordered(const Graph& g, const Labeling& f,
                                                  const Bipartition& bip, Label t) {
  VerificationReport base = check_rho_bar(g, f, t);
  std::vector<std::string> v = std::move(base.violations);
  require(bip.vertex_count() == g.vertex_count(), errc::invalid_parameter,
          "bipartition does not match graph");
  Label max_a = -1;
  Label min_b = t + 1;
  for (Vertex x : bip.side_a()) max_a = std::max(max_a, f[x]);
  for (Vertex x : bip.side_b()) min_b = std::min(min_b, f[x]);
  if (!(max_a < min_b)) {
    v.push_back("max f(A)=" + std::to_string(max_a) + " not below min f(B)=" +
                std::to_string(min_b));
  }
  VerificationReport r = detail::finish(CheckKind::uniformly_ordered, std::move(v));
  if (r.pass) {
    r.lambda = max_a;
    r.rho_plus_plus = t == 2 * static_cast<Label>(g.edge_count());
  }
  return r;
}

inline VerificationReport check(CheckKind kind, const Graph& g, const Labeling& f,
                                const Bipartition& bip, Label t) {
  switch (kind) {
    case CheckKind::rho_bar: return check_rho_bar(g, f, t);
    case CheckKind::rho: return check_rho(g, f);
    case CheckKind::rho_plus: return check_rho_plus(g, f, bip);
    case CheckKind::uniformly_ordered: return check_uniformly_ordered(g, f, bip, t);
  }
  return {};
}

/// k-shift: every label moves by k modulo t+1.
inline Labeling shift(const Labeling& f, Label k, Label t) {
  require(k >= 0 && k <= t, errc::invalid_parameter,
          "shift " + std::to_string(k) + " outside [0," + std::to_string(t) + "]");
  std::vector<Label> out;
  out.reserve(f.size());
  for (Label x : f.values()) {
    require(x <= t, errc::invalid_parameter, "label exceeds t");
    out.push_back((x + k) % (t + 1));
  }
  return Labeling(std::move(out), t);
}

/// Sorted set of shift amounts, for each orientation of the sides.
struct ShiftWindow {
  Label bound = 0;
  std::vector<Label> for_ab;
  std::vector<Label> for_ba;

  bool admits_ab(Label k) const { return std::binary_search(for_ab.begin(), for_ab.end(), k); }
  bool admits_ba(Label k) const { return std::binary_search(for_ba.begin(), for_ba.end(), k); }

  friend bool operator==(const ShiftWindow&, const ShiftWindow&) = default;
};

/// Maximal runs [lo, hi] of a sorted member list.
inline std::vector<std::pair<Label, Label>> as_intervals(std::span<const Label> members) {
  std::vector<std::pair<Label, Label>> out;
  for (Label k : members) {
    if (!out.empty() && out.back().second + 1 == k) {
      out.back().second = k;
    } else {
      out.emplace_back(k, k);
    }
  }
  return out;
}

namespace detail {

// Adds [lo, hi] clipped to [0, t]; empty when lo > hi.
inline void add_interval(std::vector<Label>& set, Label lo, Label hi, Label t) {
  for (Label k = std::max<Label>(lo, 0); k <= std::min(hi, t); ++k) set.push_back(k);
}

inline void normalise(std::vector<Label>& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

struct SideRange {
  Label min_a, max_a, min_b, max_b;
};

inline SideRange side_range(const Labeling& f, const Bipartition& bip) {
  SideRange s{f.bound() + 1, -1, f.bound() + 1, -1};
  for (Vertex x : bip.side_a()) {
    s.min_a = std::min(s.min_a, f[x]);
    s.max_a = std::max(s.max_a, f[x]);
  }
  for (Vertex x : bip.side_b()) {
    s.min_b = std::min(s.min_b, f[x]);
    s.max_b = std::max(s.max_b, f[x]);
  }
  return s;
}

// Shifts of an (A,B,t)-uniformly ordered labeling, from the extreme labels.
inline void already_ordered_windows(const SideRange& s, Label t, std::vector<Label>& ab,
                                    std::vector<Label>& ba) {
  add_interval(ab, 0, t - s.max_b, t);
  if (s.min_a >= 1) add_interval(ab, t + 1 - s.min_a, t, t);
  add_interval(ba, t + 1 - s.min_b, t - s.max_a, t);
}

// A's label interval holds no B label, but B labels sit on both sides of it.
inline void straddled_windows(const Labeling& f, const Bipartition& bip, const SideRange& s,
                              Label t, std::vector<Label>& ab, std::vector<Label>& ba) {
  Label below = -1;
  Label above = t + 1;
  for (Vertex x : bip.side_b()) {
    if (f[x] < s.min_a) below = std::max(below, f[x]);
    if (f[x] > s.max_a) above = std::min(above, f[x]);
  }
  add_interval(ab, t + 1 - s.min_a, t - below, t);
  add_interval(ba, t + 1 - above, t - s.max_a, t);
}

inline bool interval_avoids(const Labeling& f, const std::vector<Vertex>& others, Label lo,
                            Label hi) {
  return std::none_of(others.begin(), others.end(),
                      [&](Vertex x) { return f[x] >= lo && f[x] <= hi; });
}

}  // namespace detail

/// Every k in [0, t] tested directly.
inline ShiftWindow shift_windows_exhaustive(const Graph& g, const Labeling& f,
                                            const Bipartition& bip, Label t) {
  ShiftWindow w;
  w.bound = t;
  const Bipartition other = bip.swapped();
  for (Label k = 0; k <= t; ++k) {
    Labeling fk = shift(f, k, t);
    if (check_uniformly_ordered(g, fk, bip, t).pass) w.for_ab.push_back(k);
    if (check_uniformly_ordered(g, fk, other, t).pass) w.for_ba.push_back(k);
  }
  return w;
}

/// The k for which f_k is (A,B,t)- resp. (B,A,t)-uniformly ordered, from the
/// extreme labels of each side. Requires f to be a rho-bar labeling. Sides
/// of size one are handled by direct testing.
inline ShiftWindow uniform_shift_windows(const Graph& g, const Labeling& f,
                                         const Bipartition& bip, Label t) {
  require_complete(g, f);
  require(check_rho_bar(g, f, t).pass, errc::precondition_violation,
          "shift windows need a rho-bar labeling");
  if (bip.side_a().size() < 2 || bip.side_b().size() < 2) {
    return shift_windows_exhaustive(g, f, bip, t);
  }

  ShiftWindow w;
  w.bound = t;
  const auto s = detail::side_range(f, bip);
  if (s.max_a < s.min_b) {
    detail::already_ordered_windows(s, t, w.for_ab, w.for_ba);
  } else if (s.max_b < s.min_a) {
    detail::SideRange swapped{s.min_b, s.max_b, s.min_a, s.max_a};
    detail::already_ordered_windows(swapped, t, w.for_ba, w.for_ab);
  } else if (detail::interval_avoids(f, bip.side_b(), s.min_a, s.max_a)) {
    detail::straddled_windows(f, bip, s, t, w.for_ab, w.for_ba);
  } else if (detail::interval_avoids(f, bip.side_a(), s.min_b, s.max_b)) {
    const Bipartition other = bip.swapped();
    detail::straddled_windows(f, other, detail::side_range(f, other), t, w.for_ba, w.for_ab);
  }
  // Otherwise the sides interleave and no shift separates them.
  detail::normalise(w.for_ab);
  detail::normalise(w.for_ba);
  return w;
}

}  // namespace rhodesign
