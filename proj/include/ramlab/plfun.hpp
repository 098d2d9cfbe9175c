/**
 * @file ramlab/plfun.hpp
 * @brief Exact continuous piecewise-linear functions on the half-line [0, +inf).
 *
 * A PLFun is its value at 0 plus a list of segments: segment j has slope
 * pieces[j].slope and ends at pieces[j].until; after the last breakpoint the
 * function continues with final_slope. The stored form is canonical:
 * breakpoints strictly increase and are > 0, and adjacent segments never
 * share a slope.
 */
#pragma once

#include "ramlab/rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramlab {

class PLFun {
 public:
  struct Piece {
    Rat until;
    Rat slope;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  /// Maximal linear stretch [start, end); end is nullopt on the last one.
  struct Segment {
    Rat start;
    std::optional<Rat> end;
    Rat value;  // at start
    Rat slope;
  };

  PLFun() = default;
  PLFun(Rat at0, std::vector<Piece> pieces, Rat final_slope)
      : at0_(std::move(at0)), pieces_(std::move(pieces)), final_slope_(std::move(final_slope)) {
    Rat prev(0);
    for (const auto& pc : pieces_) {
      if (pc.until <= prev) throw std::invalid_argument("PLFun: breakpoints must increase and be > 0");
      prev = pc.until;
    }
    canonicalize();
  }

  static PLFun constant(Rat c) { return PLFun(std::move(c), {}, Rat(0)); }
  static PLFun linear(Rat at0, Rat slope) { return PLFun(std::move(at0), {}, std::move(slope)); }
  /// max(0, slope * x - offset) for slope >= 0.
  static PLFun hinge(const Rat& slope, const Rat& offset) {
    if (offset <= 0) return linear(-offset, slope);
    if (slope == 0) return constant(Rat(0));
    return PLFun(Rat(0), {{offset / slope, Rat(0)}}, slope);
  }

  /// Builds from (start, slope) runs; the first start must be 0.
  static PLFun from_runs(Rat at0, const std::vector<std::pair<Rat, Rat>>& runs) {
    if (runs.empty() || runs.front().first != 0) throw std::invalid_argument("PLFun::from_runs: first run must start at 0");
    std::vector<Piece> pieces;
    for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
      if (runs[k + 1].first < runs[k].first) throw std::invalid_argument("PLFun::from_runs: unsorted runs");
      if (runs[k + 1].first == runs[k].first) continue;
      pieces.push_back({runs[k + 1].first, runs[k].second});
    }
    PLFun f;
    f.at0_ = std::move(at0);
    f.pieces_ = std::move(pieces);
    f.final_slope_ = runs.back().second;
    f.canonicalize();
    return f;
  }

  const Rat& value_at_0() const { return at0_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const Rat& final_slope() const { return final_slope_; }

  std::vector<Segment> segments() const {
    std::vector<Segment> out;
    Rat start(0), value = at0_;
    for (const auto& pc : pieces_) {
      out.push_back({start, pc.until, value, pc.slope});
      value += pc.slope * (pc.until - start);
      start = pc.until;
    }
    out.push_back({start, std::nullopt, value, final_slope_});
    return out;
  }

  std::vector<Rat> breakpoints() const {
    std::vector<Rat> out;
    out.reserve(pieces_.size());
    for (const auto& pc : pieces_) out.push_back(pc.until);
    return out;
  }

  /// Last breakpoint, or 0 for a linear function: the onset of the final segment.
  Rat linearity_onset() const { return pieces_.empty() ? Rat(0) : pieces_.back().until; }

  Rat operator()(const Rat& x) const {
    if (x < 0) throw std::domain_error("PLFun evaluated at negative x");
    Rat start(0), value = at0_;
    for (const auto& pc : pieces_) {
      if (x <= pc.until) return value + pc.slope * (x - start);
      value += pc.slope * (pc.until - start);
      start = pc.until;
    }
    return value + final_slope_ * (x - start);
  }

  Rat right_slope(const Rat& x) const {
    if (x < 0) throw std::domain_error("PLFun right slope at negative x");
    for (const auto& pc : pieces_)
      if (x < pc.until) return pc.slope;
    return final_slope_;
  }

  Rat left_slope(const Rat& x) const {
    if (x <= 0) throw std::domain_error("PLFun left slope requires x > 0");
    for (const auto& pc : pieces_)
      if (x <= pc.until) return pc.slope;
    return final_slope_;
  }

  /// Value the final segment's line takes at 0 (the eventual intercept).
  Rat eventual_intercept() const {
    const Rat x = linearity_onset();
    return (*this)(x) - final_slope_ * x;
  }

  bool is_convex() const {
    const Rat* prev = nullptr;
    for (const auto& pc : pieces_) {
      if (prev && pc.slope < *prev) return false;
      prev = &pc.slope;
    }
    return !prev || !(final_slope_ < *prev);
  }

  friend bool operator==(const PLFun&, const PLFun&) = default;

 private:
  void canonicalize() {
    std::vector<Piece> merged;
    for (auto& pc : pieces_) {
      if (!merged.empty() && merged.back().slope == pc.slope)
        merged.back().until = pc.until;
      else
        merged.push_back(std::move(pc));
    }
    while (!merged.empty() && merged.back().slope == final_slope_) merged.pop_back();
    pieces_ = std::move(merged);
  }

  Rat at0_{0};
  std::vector<Piece> pieces_;
  Rat final_slope_{0};
};

inline Rat pl_eval(const PLFun& f, const Rat& x) { return f(x); }
inline Rat pl_right_slope(const PLFun& f, const Rat& x) { return f.right_slope(x); }
inline Rat pl_left_slope(const PLFun& f, const Rat& x) { return f.left_slope(x); }
inline bool pl_is_convex(const PLFun& f) { return f.is_convex(); }
inline Rat pl_eventual_slope(const PLFun& f) { return f.final_slope(); }
inline std::vector<Rat> pl_breakpoints(const PLFun& f) { return f.breakpoints(); }

namespace detail {
inline std::vector<Rat> merged_grid(const PLFun& f, const PLFun& g) {
  std::vector<Rat> grid{Rat(0)};
  const auto a = f.breakpoints(), b = g.breakpoints();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    Rat next;
    if (j == b.size() || (i < a.size() && a[i] < b[j]))
      next = a[i++];
    else if (i == a.size() || b[j] < a[i])
      next = b[j++];
    else {
      next = a[i++];
      ++j;
    }
    grid.push_back(std::move(next));
  }
  return grid;
}
}  // namespace detail

inline PLFun pl_add(const PLFun& f, const PLFun& g) {
  const auto grid = detail::merged_grid(f, g);
  std::vector<std::pair<Rat, Rat>> runs;
  for (const auto& x : grid) runs.emplace_back(x, f.right_slope(x) + g.right_slope(x));
  return PLFun::from_runs(f.value_at_0() + g.value_at_0(), runs);
}

inline PLFun pl_scale(const PLFun& f, const Rat& c) {
  std::vector<PLFun::Piece> pieces;
  if (c == 0) return PLFun::constant(Rat(0));
  for (const auto& pc : f.pieces()) pieces.push_back({pc.until, pc.slope * c});
  return PLFun(f.value_at_0() * c, std::move(pieces), f.final_slope() * c);
}

inline PLFun pl_max(const PLFun& f, const PLFun& g) {
  const auto grid = detail::merged_grid(f, g);
  std::vector<std::pair<Rat, Rat>> runs;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const Rat& x = grid[k];
    const std::optional<Rat> end = k + 1 < grid.size() ? std::optional<Rat>(grid[k + 1]) : std::nullopt;
    const Rat vf = f(x), vg = g(x);
    const Rat sf = f.right_slope(x), sg = g.right_slope(x);
    // Which line is on top just to the right of x.
    const bool f_top = vf > vg || (vf == vg && sf >= sg);
    runs.emplace_back(x, f_top ? sf : sg);
    if (sf != sg) {
      const Rat cross = x + (vg - vf) / (sf - sg);
      if (cross > x && (!end || cross < *end)) runs.emplace_back(cross, f_top ? sg : sf);
    }
  }
  return PLFun::from_runs(rat_max(f.value_at_0(), g.value_at_0()), runs);
}

/// x -> f(x - s) on [s, inf), extended to the left of s by the constant f(0).
inline PLFun pl_translate(const PLFun& f, const Rat& s) {
  if (s < 0) throw std::domain_error("pl_translate: negative shift");
  if (s == 0) return f;
  std::vector<std::pair<Rat, Rat>> runs{{Rat(0), Rat(0)}};
  for (const auto& seg : f.segments()) runs.emplace_back(seg.start + s, seg.slope);
  return PLFun::from_runs(f.value_at_0(), runs);
}

/// CSV-ready knots: 0, every breakpoint, and one point past the last breakpoint.
inline std::vector<std::pair<Rat, Rat>> pl_plot_points(const PLFun& f) {
  std::vector<std::pair<Rat, Rat>> rows{{Rat(0), f(Rat(0))}};
  for (const auto& x : f.breakpoints()) rows.emplace_back(x, f(x));
  const Rat past = f.linearity_onset() + 1;
  rows.emplace_back(past, f(past));
  return rows;
}

inline std::ostream& operator<<(std::ostream& os, const PLFun& f) {
  os << "PLFun(" << to_string(f.value_at_0());
  for (const auto& pc : f.pieces()) os << "; slope " << to_string(pc.slope) << " until " << to_string(pc.until);
  return os << "; then slope " << to_string(f.final_slope()) << ")";
}

}  // namespace ramlab
