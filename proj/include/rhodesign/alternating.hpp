#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhodesign/error.hpp"
#include "rhodesign/graph.hpp"
#include "rhodesign/labeling.hpp"

namespace rhodesign {

/// Sign of the first step: (a_1, -a_2, a_3, ...) or (-a_1, a_2, -a_3, ...).
enum class SignPattern { positive_first, negative_first };

constexpr std::string_view to_string(SignPattern p) {
  return p == SignPattern::positive_first ? "pos-first" : "neg-first";
}

inline std::optional<SignPattern> parse_sign_pattern(std::string_view s) {
  if (s == "pos-first") return SignPattern::positive_first;
  if (s == "neg-first") return SignPattern::negative_first;
  return std::nullopt;
}

/// Raw labels start at 0; the wrapped form is the same path moved by -1
/// mod r, so it starts at r-1.
enum class LabelForm { raw, wrapped };

/// Alternating type: strictly increasing magnitudes with a fixed sign
/// pattern, taken in Z_r and finally shifted by `shift`.
struct SignedDifferenceSequence {
  SignPattern pattern = SignPattern::positive_first;
  std::vector<Label> magnitudes;
  Label base = 0;
  Label shift = 0;

  friend bool operator==(const SignedDifferenceSequence&, const SignedDifferenceSequence&) = default;
};

/// Vertex positions of the path in Z_r: x's ascend, y's descend, and
/// 0 < x_1 < ... < y_1 < r.
struct PositionPair {
  std::vector<Label> xs;
  std::vector<Label> ys;
  Label base = 0;

  friend bool operator==(const PositionPair&, const PositionPair&) = default;
};

namespace detail {

inline void validate_magnitudes(std::span<const Label> a, Label r) {
  require(!a.empty(), errc::invalid_parameter, "empty difference sequence");
  require(r >= static_cast<Label>(a.size()) + 1, errc::invalid_parameter,
          "base " + std::to_string(r) + " below |a|+1");
  for (std::size_t i = 0; i < a.size(); ++i) {
    require(a[i] >= 1 && a[i] <= r - 1, errc::invalid_parameter,
            "magnitude " + std::to_string(a[i]) + " outside [1, r-1]");
    if (i > 0) {
      require(a[i - 1] < a[i], errc::invalid_parameter, "magnitudes must strictly increase");
    }
  }
}

// Running signed sums; a positive step lands on an x, a negative one on a y
// (which is lifted by r).
inline PositionPair walk(std::span<const Label> a, Label r, bool positive_first) {
  validate_magnitudes(a, r);
  PositionPair out;
  out.base = r;
  Label partial = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool up = (i % 2 == 0) == positive_first;
    partial += up ? a[i] : -a[i];
    if (up) {
      out.xs.push_back(partial);
    } else {
      out.ys.push_back(partial + r);
    }
  }
  return out;
}

}  // namespace detail

inline PositionPair positions_positive_first(std::span<const Label> a, Label r) {
  return detail::walk(a, r, true);
}

inline PositionPair positions_negative_first(std::span<const Label> a, Label r) {
  return detail::walk(a, r, false);
}

inline PositionPair positions(const SignedDifferenceSequence& seq) {
  return detail::walk(seq.magnitudes, seq.base, seq.pattern == SignPattern::positive_first);
}

/// b_i = min(a_i, r - a_i).
inline std::vector<Label> reduced_magnitudes(const SignedDifferenceSequence& seq) {
  std::vector<Label> b;
  for (Label a : seq.magnitudes) b.push_back(std::min(a, seq.base - a));
  return b;
}

inline bool has_distinct_reductions(const SignedDifferenceSequence& seq) {
  std::vector<Label> b = reduced_magnitudes(seq);
  std::sort(b.begin(), b.end());
  return std::adjacent_find(b.begin(), b.end()) == b.end();
}

/// Path labels in walk order: <0, x1, y1, x2, ...> (positive-first) or
/// <0, y1, x1, y2, ...> (negative-first), in the requested form, then
/// shifted by seq.shift mod r. Consecutive labels differ by b_1, ..., b_n
/// in Z_r.
inline std::vector<Label> emit_path_labels(const SignedDifferenceSequence& seq,
                                           LabelForm form = LabelForm::raw) {
  const PositionPair pos = positions(seq);
  require(has_distinct_reductions(seq), errc::invalid_parameter,
          "reduced magnitudes collide mod " + std::to_string(seq.base));
  const Label r = seq.base;
  const Label offset = (form == LabelForm::wrapped ? r - 1 : 0) + ((seq.shift % r) + r) % r;
  const bool positive = seq.pattern == SignPattern::positive_first;

  std::vector<Label> walk{0};
  for (std::size_t i = 0; i < seq.magnitudes.size(); ++i) {
    const bool up = (i % 2 == 0) == positive;
    walk.push_back(up ? pos.xs[i / 2] : pos.ys[i / 2]);
  }
  for (Label& x : walk) x = (x + offset) % r;
  return walk;
}

/// The form in which each type is defined: the wrapped form for
/// positive-first, the raw form for negative-first.
constexpr LabelForm canonical_form(SignPattern p) {
  return p == SignPattern::positive_first ? LabelForm::wrapped : LabelForm::raw;
}

/// Path graph on |a|+1 vertices with its alternating sides: side A holds the
/// x positions (plus the start vertex for negative-first).
struct AlternatingPath {
  Graph graph;
  Bipartition sides;
  Labeling labeling;
};

inline AlternatingPath alternating_path(const SignedDifferenceSequence& seq, LabelForm form) {
  SignedDifferenceSequence unshifted = seq;
  unshifted.shift = 0;
  std::vector<Label> labels = emit_path_labels(unshifted, form);
  Graph g = make_path(labels.size());
  std::vector<Vertex> a, b;
  const Vertex a_parity = seq.pattern == SignPattern::positive_first ? 1 : 0;
  for (Vertex x = 0; x < labels.size(); ++x) (x % 2 == a_parity ? a : b).push_back(x);
  Bipartition sides = Bipartition::from_sides(g, std::move(a), std::move(b));
  return AlternatingPath{std::move(g), std::move(sides), Labeling(std::move(labels), seq.base - 1)};
}

/// Shift windows of the type-(a, k) labelings, k in [0, r-1], measured from
/// the canonical form of the type. Closed forms per sign pattern and parity
/// of |a|; a side of size one falls back to direct testing.
inline ShiftWindow alternating_shift_windows(const SignedDifferenceSequence& seq) {
  const AlternatingPath path = alternating_path(seq, canonical_form(seq.pattern));
  const Label r = seq.base;
  const Label t = r - 1;
  require(check_rho_bar(path.graph, path.labeling, t).pass, errc::invalid_parameter,
          "alternating labeling is not rho-bar at t = r-1");
  if (path.sides.side_a().size() < 2 || path.sides.side_b().size() < 2) {
    return shift_windows_exhaustive(path.graph, path.labeling, path.sides, t);
  }

  const PositionPair pos = positions(seq);
  const Label a1 = seq.magnitudes.front();
  ShiftWindow w;
  w.bound = t;
  if (seq.pattern == SignPattern::positive_first) {
    w.for_ab.push_back(0);
    if (a1 >= 2) detail::add_interval(w.for_ab, r + 1 - a1, r - 1, t);
    // Smallest B label: y_s - 1 when |a| = 2s, y_{s-1} - 1 when |a| = 2s-1.
    const Label low_y = pos.ys.back();
    detail::add_interval(w.for_ba, r + 1 - low_y, r - pos.xs.back(), t);
  } else {
    detail::add_interval(w.for_ab, 0, a1 - 1, t);
    // Largest A label: x_s when |a| = 2s, x_{s-1} when |a| = 2s-1.
    const Label high_x = pos.xs.back();
    detail::add_interval(w.for_ba, r - pos.ys.back(), r - 1 - high_x, t);
  }
  detail::normalise(w.for_ab);
  detail::normalise(w.for_ba);
  return w;
}

/// Same type over a larger base. x positions stay, y positions rise by
/// new_base - base.
inline SignedDifferenceSequence rebase(const SignedDifferenceSequence& seq, Label new_base) {
  require(new_base > seq.base, errc::invalid_parameter,
          "new base " + std::to_string(new_base) + " must exceed " + std::to_string(seq.base));
  SignedDifferenceSequence out = seq;
  out.base = new_base;
  return out;
}

}  // namespace rhodesign
