#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhodesign/alternating.hpp"
#include "rhodesign/error.hpp"
#include "rhodesign/graph.hpp"
#include "rhodesign/labeling.hpp"

namespace rhodesign {

enum class Family { even_cycle, one_pendant, two_pendants, chain };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::even_cycle: return "cycle";
    case Family::one_pendant: return "cmn";
    case Family::two_pendants: return "cmn2";
    case Family::chain: return "chain";
  }
  return "unknown";
}

/// Bookkeeping for one cycle-plus-path stage of a construction. `p` offsets
/// the differences, `q` is the downward shift applied to the stage's labels,
/// `r` is the final modulus and `s` = floor((m+n)/2).
struct StageParameters {
  int m = 0;
  int n = 0;
  Label p = 0;
  Label q = 0;
  Label r = 0;
  Label s = 0;
  std::vector<Label> differences;
  std::vector<Label> stated;
};

struct ConstructionResult {
  Family family = Family::even_cycle;
  Graph graph;
  Labeling labeling;
  Bipartition bipartition;
  Label modulus = 0;
  /// Class representatives mod `modulus`; d stands for {d, modulus - d}.
  std::vector<Label> stated_differences;
  std::vector<StageParameters> stages;
  /// Second pendant path differences (two-pendant family only).
  std::vector<Label> auxiliary;
  std::vector<int> ms;
  std::vector<int> ns;
  Label p = 0;
};

namespace detail {

inline std::vector<Label> range_inclusive(Label lo, Label hi) {
  std::vector<Label> out;
  for (Label d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

// Differences of a cycle C_m carrying a path of n edges, offset by p. For
// m = 2 mod 4 the sequence skips p+m; with n >= 1 the last entry r-p-m
// supplies that class instead.
inline std::vector<Label> stage_differences(int m, int n, Label p, Label r) {
  std::vector<Label> a;
  const int len = m + n - 1;
  if (m % 4 == 0) {
    for (int j = 1; j <= len; ++j) a.push_back(p + j + (j >= m / 2 ? 1 : 0));
    return a;
  }
  for (int j = 1; j <= len; ++j) {
    if (j <= m / 2) {
      a.push_back(p + j);
    } else if (j <= m - 2) {
      a.push_back(p + j + 1);
    } else if (n == 0) {
      a.push_back(p + m + 1);
    } else if (j <= m + n - 2) {
      a.push_back(p + j + 2);
    } else {
      a.push_back(r - p - m);
    }
  }
  return a;
}

// r-1, x_1-1, y_1-1, ..., ending on x_s-1 or y_s-1.
inline std::vector<Label> wrapped_labels(const std::vector<Label>& a, Label r) {
  return emit_path_labels({SignPattern::positive_first, a, r, 0}, LabelForm::wrapped);
}

inline void require_even_cycle(int m) {
  require(m >= 4 && m % 2 == 0, errc::invalid_parameter,
          "cycle length must be even and at least 4, got " + std::to_string(m));
  require(m % 4 == 0 || m >= 6, errc::invalid_parameter, "m = 2 mod 4 needs m >= 6");
}

inline void invariant(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction invariant failed: " + what);
}

// Writes `labels` onto the cycle positions first, then along `path`.
inline void place(std::vector<Label>& out, const StageLayout& stage, const std::vector<Vertex>& path,
                  const std::vector<Label>& labels) {
  invariant(labels.size() == stage.cycle.size() + path.size(), "label count matches stage");
  std::size_t k = 0;
  for (Vertex x : stage.cycle) out[x] = labels[k++];
  for (Vertex x : path) out[x] = labels[k++];
}

inline ConstructionResult assemble(Family family, FamilyGraph fg, std::vector<Label> values,
                                   Label r) {
  ConstructionResult res;
  res.family = family;
  res.bipartition = bipartition(fg.graph);
  res.labeling = Labeling(std::move(values), r - 1);
  res.graph = std::move(fg.graph);
  res.modulus = r;
  return res;
}

}  // namespace detail

/// Even cycle C_m with differences offset by p, modulo r. Admissible r:
/// r >= 2p+2m+1, or p+m+1 <= r <= 2p+1 (p+m+2 for m = 2 mod 4). For
/// m = 2 mod 4 the value r = 2p+2m+2 is excluded: there p+m+1 = r/2.
inline ConstructionResult label_even_cycle(int m, Label p, Label r) {
  detail::require_even_cycle(m);
  require(p >= 0, errc::invalid_parameter, "p must be non-negative");
  const bool zero_mod4 = m % 4 == 0;
  const Label low_start = p + m + (zero_mod4 ? 1 : 2);
  const bool high = r >= 2 * p + 2 * m + 1;
  const bool low = r >= low_start && r <= 2 * p + 1;
  require(high || low, errc::invalid_parameter,
          "r=" + std::to_string(r) + " outside the admissible ranges");
  require(zero_mod4 || r != 2 * p + 2 * m + 2, errc::invalid_parameter,
          "r = 2p+2m+2 makes p+m+1 self-complementary");

  const std::vector<Label> a = detail::stage_differences(m, 0, p, r);
  FamilyGraph fg = cycle_with_pendants_layout(m, {});
  std::vector<Label> values(fg.graph.vertex_count());
  detail::place(values, fg.stages[0], {}, detail::wrapped_labels(a, r));

  StageParameters stage{m, 0, p, 0, r, m / 2, a, {}};
  stage.stated = zero_mod4 ? detail::range_inclusive(p + 1, p + m)
                           : detail::range_inclusive(p + 1, p + m - 1);
  if (!zero_mod4) stage.stated.push_back(p + m + 1);

  ConstructionResult res = detail::assemble(Family::even_cycle, std::move(fg), std::move(values), r);
  res.stated_differences = stage.stated;
  res.stages.push_back(std::move(stage));
  res.ms = {m};
  res.p = p;
  return res;
}

/// C_{m,(n)} for even m >= 4, modulo r = 2(m+n)+1: a rho-labeling that is
/// uniformly ordered with the root on the low side.
inline ConstructionResult label_cycle_one_pendant(int m, int n) {
  detail::require_even_cycle(m);
  require(n >= 0, errc::invalid_parameter, "path length must be non-negative");
  if (n == 0) {
    ConstructionResult res = label_even_cycle(m, 0, 2 * m + 1);
    res.family = Family::one_pendant;
    res.ns = {0};
    return res;
  }
  const Label r = 2 * (m + n) + 1;
  const std::vector<Label> a = detail::stage_differences(m, n, 0, r);
  FamilyGraph fg = cycle_with_pendants_layout(m, std::span<const int>(&n, 1));
  std::vector<Label> values(fg.graph.vertex_count());
  detail::place(values, fg.stages[0], fg.stages[0].paths[0], detail::wrapped_labels(a, r));

  StageParameters stage{m, n, 0, 0, r, (m + n) / 2, a, detail::range_inclusive(1, m + n)};
  ConstructionResult res = detail::assemble(Family::one_pendant, std::move(fg), std::move(values), r);
  res.stated_differences = stage.stated;
  res.stages.push_back(std::move(stage));
  res.ms = {m};
  res.ns = {n};
  return res;
}

/// C_{m,(n1,n2)} for even m >= 4. The shorter path is labeled with the cycle
/// as in the one-pendant case; the longer one carries a negative-first
/// alternating labeling shifted onto the root label.
inline ConstructionResult label_cycle_two_pendants(int m, int n1, int n2) {
  detail::require_even_cycle(m);
  require(n1 >= 0 && n2 >= 0, errc::invalid_parameter, "path lengths must be non-negative");
  const std::vector<int> ns{n1, n2};
  FamilyGraph fg = cycle_with_pendants_layout(m, ns);

  if (n1 == 0 || n2 == 0) {
    const int n = std::max(n1, n2);
    ConstructionResult one = label_cycle_one_pendant(m, n);
    // Same vertex ids: the empty path contributes nothing.
    ConstructionResult res = detail::assemble(
        Family::two_pendants, std::move(fg),
        std::vector<Label>(one.labeling.values().begin(), one.labeling.values().end()),
        one.modulus);
    res.stated_differences = one.stated_differences;
    res.stages = one.stages;
    res.ms = {m};
    res.ns = ns;
    return res;
  }

  const bool swapped = n1 > n2;
  const int short_n = std::min(n1, n2);
  const int long_n = std::max(n1, n2);
  const StageLayout& layout = fg.stages[0];
  const std::vector<Vertex>& short_path = layout.paths[swapped ? 1 : 0];
  const std::vector<Vertex>& long_path = layout.paths[swapped ? 0 : 1];

  const Label r = 2 * (m + n1 + n2) + 1;
  const bool zero_mod4 = m % 4 == 0;

  // First cycle-plus-path: as the one-pendant case but without the r-m term.
  std::vector<Label> a;
  for (int j = 1; j <= m + short_n - 1; ++j) {
    if (zero_mod4) {
      a.push_back(j + (j >= m / 2 ? 1 : 0));
    } else {
      a.push_back(j <= m / 2 ? j : (j <= m - 2 ? j + 1 : j + 2));
    }
  }

  std::vector<Label> aux;
  Label offset = 0;
  if (zero_mod4) {
    aux.push_back(m + short_n + 1);
    for (int i = 2; i <= long_n; ++i) aux.push_back(r - (m + short_n + long_n + 2 - i));
    offset = m / 2 - 1;
  } else {
    if (long_n == 1) {
      aux.push_back(r - m);
    } else {
      aux.push_back(m + short_n + 2);
      for (int i = 2; i <= long_n - 1; ++i) aux.push_back(r - (m + short_n + long_n + 2 - i));
      aux.push_back(r - m);
    }
    offset = m / 2;
  }

  std::vector<Label> values(fg.graph.vertex_count());
  const std::vector<Label> main_labels = detail::wrapped_labels(a, r);
  detail::place(values, layout, short_path, main_labels);

  const SignedDifferenceSequence second{SignPattern::negative_first, aux, r, offset};
  const std::vector<Label> second_labels = emit_path_labels(second, LabelForm::raw);
  detail::invariant(second_labels.front() == values[layout.cycle.back()],
                    "second path starts on the root label");
  for (std::size_t k = 0; k < long_path.size(); ++k) values[long_path[k]] = second_labels[k + 1];

  // Both paths separate cleanly: the second path's first A label sits above
  // the first path's, and its first B label below the first path's.
  const PositionPair first = positions_positive_first(a, r);
  const PositionPair extra = positions_negative_first(aux, r);
  if (long_n >= 2) {
    detail::invariant(extra.xs.front() + offset > first.xs.back() - 1, "x'_1 above x_s");
  }
  detail::invariant(extra.ys.front() + offset < first.ys.back() - 1, "y'_1 below the lowest y");

  StageParameters stage{m, short_n, 0, 0, r, (m + short_n) / 2, a, {}};
  ConstructionResult res =
      detail::assemble(Family::two_pendants, std::move(fg), std::move(values), r);
  res.stated_differences = detail::range_inclusive(1, m + n1 + n2);
  stage.stated = res.stated_differences;
  res.stages.push_back(std::move(stage));
  res.auxiliary = std::move(aux);
  res.ms = {m};
  res.ns = ns;
  return res;
}

/// Chain C_{m_1,(n_1),...,m_t,(n_t)} with m_i = 0 mod 4 and n_i even for
/// i < t and m_t even, built by merging. Stage i's differences are offset by
/// p_i = sum of earlier m_h + n_h and its labels are pulled down by
/// q_i = p_i/2 + i - 1, so the entry vertex it shares with stage i-1 keeps
/// its label. Before each new stage every earlier stage is rebased to the
/// grown modulus.
inline ConstructionResult label_chain(std::span<const CycleSpec> specs) {
  require(!specs.empty(), errc::invalid_parameter, "chain needs at least one cycle");
  for (const CycleSpec& s : specs) {
    require(s.m >= 3, errc::invalid_parameter, "cycle length must be at least 3");
    require(s.n >= 0, errc::invalid_parameter, "path length must be non-negative");
  }
  const std::size_t t = specs.size();
  for (std::size_t i = 0; i + 1 < t; ++i) {
    require(specs[i].m % 4 == 0 && specs[i].n % 2 == 0, errc::unsupported_parameters,
            "stage " + std::to_string(i + 1) + " needs m = 0 mod 4 and even n");
  }
  require(specs.back().m % 2 == 0 && specs.back().m >= 4, errc::unsupported_parameters,
          "last cycle length must be even and at least 4");
  require(specs.back().m % 4 == 0 || specs.back().m >= 6, errc::unsupported_parameters,
          "last cycle with m = 2 mod 4 needs m >= 6");

  std::vector<int> ms, ns;
  for (const CycleSpec& s : specs) {
    ms.push_back(s.m);
    ns.push_back(s.n);
  }
  if (t == 1) {
    ConstructionResult res = label_cycle_one_pendant(specs[0].m, specs[0].n);
    res.family = Family::chain;
    res.ns = ns;
    return res;
  }

  struct Stage {
    StageParameters params;
    SignedDifferenceSequence seq;
  };
  std::vector<Stage> stages;
  Label p = 0;
  Label r = 1;
  for (std::size_t i = 0; i < t; ++i) {
    const auto [m, n] = specs[i];
    r += 2 * (m + n);
    for (Stage& earlier : stages) {
      earlier.seq = rebase(earlier.seq, r);
      earlier.params.r = r;
    }
    const Label q = p / 2 + static_cast<Label>(i);
    std::vector<Label> a = detail::stage_differences(m, n, p, r);
    StageParameters params{m, n, p, q, r, (m + n) / 2, a, {}};
    if (m % 4 != 0 && n == 0) {
      params.stated = detail::range_inclusive(p + 1, p + m - 1);
      params.stated.push_back(p + m + 1);
    } else {
      params.stated = detail::range_inclusive(p + 1, p + m + n);
    }
    stages.push_back({std::move(params), {SignPattern::positive_first, std::move(a), r, 0}});
    p += m + n;
  }

  FamilyGraph fg = cycle_chain_layout(specs);
  constexpr Label unset = -1;
  std::vector<Label> values(fg.graph.vertex_count(), unset);
  for (std::size_t i = 0; i < t; ++i) {
    const Stage& st = stages[i];
    const Label q = st.params.q;
    std::vector<Label> labels = emit_path_labels(st.seq, LabelForm::wrapped);
    for (Label& x : labels) {
      x -= q;
      detail::invariant(x >= 0, "stage labels stay non-negative");
    }
    const StageLayout& layout = fg.stages[i];
    if (i > 0) {
      const Vertex entry = layout.cycle[1];
      detail::invariant(values[entry] == labels[1], "shared root keeps its label");
    }
    detail::place(values, layout, layout.paths[0], labels);
  }

  ConstructionResult res = detail::assemble(Family::chain, std::move(fg), std::move(values), r);
  for (Stage& st : stages) {
    res.stated_differences.insert(res.stated_differences.end(), st.params.stated.begin(),
                                  st.params.stated.end());
    res.stages.push_back(std::move(st.params));
  }
  res.ms = std::move(ms);
  res.ns = std::move(ns);
  return res;
}

inline ConstructionResult label_chain(std::initializer_list<CycleSpec> specs) {
  std::vector<CycleSpec> v(specs);
  return label_chain(std::span<const CycleSpec>(v));
}

}  // namespace rhodesign
