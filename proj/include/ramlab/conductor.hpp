/**
 * @file ramlab/conductor.hpp
 * @brief Break profiles of local systems on a punctured disc, their
 *        conductors and Newton break functions.
 *
 * A BreakProfile lists break curves f_i(rho) (the additive value of the
 * break as a function of rho = val(r)) with integer weights m_i (the length
 * of the corresponding stalk component). Everything else is derived:
 *
 *   delta(rho)   = sum_i m_i f_i(rho)
 *   sw(rho)      = right slope of delta at rho
 *   f_{q,c}(rho) = sum_i m_i max(f_i(rho), q rho - c)
 *   beta(q)      = sum_i m_i max(q, tau_i),  tau_i = eventual slope of f_i
 */
#pragma once

#include "ramlab/plfun.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramlab {

class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BreakCurve {
  PLFun f;
  std::int64_t m = 1;
  /// Set when the curve is only an upper bound (equal breaks in a tensor product).
  bool upper_bound = false;

  friend bool operator==(const BreakCurve&, const BreakCurve&) = default;
};

struct BreakProfile {
  std::vector<BreakCurve> curves;
  std::int64_t l = 1;

  BreakProfile() = default;
  BreakProfile(std::vector<BreakCurve> c, std::int64_t ring_length) : curves(std::move(c)), l(ring_length) { validate(); }

  std::int64_t rank() const {
    std::int64_t s = 0;
    for (const auto& c : curves) s += c.m;
    return s;
  }

  void validate() const {
    if (l < 1) throw ProfileError("ring length must be >= 1");
    for (const auto& c : curves) {
      if (c.m < 1) throw ProfileError("curve weight must be >= 1");
      if (c.f.value_at_0() < 0 || c.f.final_slope() < 0) throw ProfileError("break curve must be non-negative");
      for (const auto& x : c.f.breakpoints())
        if (c.f(x) < 0) throw ProfileError("break curve must be non-negative");
    }
  }

  friend bool operator==(const BreakProfile&, const BreakProfile&) = default;
};

struct NewtonBreak {
  Rat q;
  Rat c;
  std::int64_t mu;

  friend bool operator==(const NewtonBreak&, const NewtonBreak&) = default;
};

/// Output order: q descending, then c ascending.
inline bool newton_order(const NewtonBreak& a, const NewtonBreak& b) {
  if (a.q != b.q) return a.q > b.q;
  return a.c < b.c;
}

/// Rank-one Kummer sheaf of a character of order p^j: constant break j + 1/(p-1)
/// (the zero curve for the trivial character j = 0).
inline BreakProfile profile_kummer_char(std::int64_t p, int j, std::int64_t l) {
  if (!is_prime(p)) throw ProfileError("p must be prime");
  if (j < 0) throw ProfileError("character order exponent must be >= 0");
  const Rat level = j == 0 ? Rat(0) : Rat(j) + Rat(Int(1), Int(p - 1));
  return BreakProfile({{PLFun::constant(level), l, false}}, l);
}

/// The conductor of L(q), q = nq/mq, as a piecewise-linear function of rho:
/// zero up to q^-1/(p-1), then slopes lN, l p N, ..., l p^{a-1} N, ln with
/// breaks at q^-1, 2q^-1, ..., a q^-1, where nq = p^a N.
inline PLFun delta_LQ(std::int64_t nq, std::int64_t mq, std::int64_t p, std::int64_t l) {
  if (nq <= 0 || mq <= 0 || std::gcd(nq, mq) != 1) throw ProfileError("q must be a positive fraction in lowest terms");
  if (!is_prime(p)) throw ProfileError("p must be prime");
  if (l < 1) throw ProfileError("ring length must be >= 1");
  const int a = padic_order(nq, p);
  std::int64_t big_n = nq;
  for (int k = 0; k < a; ++k) big_n /= p;
  const Rat qinv{Int(mq), Int(nq)};
  const Rat onset = qinv / (p - 1);
  std::vector<std::pair<Rat, Rat>> runs{{Rat(0), Rat(0)}};
  if (a == 0) {
    runs.emplace_back(onset, Rat(l * nq));
  } else {
    runs.emplace_back(onset, Rat(l * big_n));
    std::int64_t pj = 1;
    for (int j = 1; j < a; ++j) {
      pj *= p;
      runs.emplace_back(qinv * j, Rat(l * pj * big_n));
    }
    runs.emplace_back(qinv * a, Rat(l * nq));
  }
  return PLFun::from_runs(Rat(0), runs);
}

/// Break profile of L(q): a single break curve delta/(l m) of weight l m.
inline BreakProfile profile_LQ(std::int64_t nq, std::int64_t mq, std::int64_t p, std::int64_t l) {
  const auto delta = delta_LQ(nq, mq, p, l);
  const std::int64_t w = l * mq;
  return BreakProfile({{pl_scale(delta, Rat(Int(1), Int(w))), w, false}}, l);
}

inline PLFun delta_from_profile(const BreakProfile& pr) {
  PLFun acc = PLFun::constant(Rat(0));
  for (const auto& c : pr.curves) acc = pl_add(acc, pl_scale(c.f, Rat(c.m)));
  return acc;
}

/// Swan conductor at rho: right derivative of delta.
inline Rat swan_at(const BreakProfile& pr, const Rat& rho) { return delta_from_profile(pr).right_slope(rho); }

/// Limit of the Swan conductor as the radius shrinks to 0.
inline Rat swan_limit(const BreakProfile& pr) { return delta_from_profile(pr).final_slope(); }

/// Profiles are eventually linear, so ramification is always bounded; the
/// bound is the limiting Swan conductor.
inline std::pair<bool, Rat> is_bounded(const BreakProfile& pr) { return {true, swan_limit(pr)}; }

/// f_{q,c}(rho) = sum_i m_i max(f_i(rho), q rho - c).
inline PLFun f_qc(const BreakProfile& pr, const Rat& q, const Rat& c) {
  const auto line = PLFun::linear(-c, q);
  PLFun acc = PLFun::constant(Rat(0));
  for (const auto& cv : pr.curves) acc = pl_add(acc, pl_scale(pl_max(cv.f, line), Rat(cv.m)));
  return acc;
}

/// beta(q) = sum_i m_i max(q, tau_i), as a function of q >= 0.
inline PLFun beta_function(const BreakProfile& pr) {
  PLFun acc = PLFun::constant(Rat(0));
  for (const auto& cv : pr.curves) {
    const Rat tau = cv.f.final_slope();
    const PLFun term = tau > 0 ? PLFun(tau, {{tau, Rat(0)}}, Rat(1)) : PLFun::linear(Rat(0), Rat(1));
    acc = pl_add(acc, pl_scale(term, Rat(cv.m)));
  }
  return acc;
}

/// Asymptotic breaks: curves grouped by eventual line tau * rho + c.
inline std::vector<NewtonBreak> newton_breaks(const BreakProfile& pr) {
  std::map<std::pair<Rat, Rat>, std::int64_t> groups;
  for (const auto& cv : pr.curves) groups[{cv.f.final_slope(), cv.f.eventual_intercept()}] += cv.m;
  std::vector<NewtonBreak> out;
  for (const auto& [key, mu] : groups) out.push_back({key.first, key.second, mu});
  std::sort(out.begin(), out.end(), newton_order);
  return out;
}

/// Radius past which every break curve is linear.
inline Rat linearity_onset(const BreakProfile& pr) {
  Rat out(0);
  for (const auto& cv : pr.curves) out = rat_max(out, cv.f.linearity_onset());
  return out;
}

/// Pullback along the shrinking map by a scalar of valuation s >= 0.
inline BreakProfile shift_profile(const BreakProfile& pr, const Rat& s) {
  if (s < 0) throw ProfileError("shift must be >= 0");
  BreakProfile out = pr;
  for (auto& cv : out.curves) cv.f = pl_translate(cv.f, s);
  return out;
}

/// Upper bound for the breaks of a tensor product: each pair of curves gives
/// their pointwise maximum with weight m_i m_j; pairs with the same eventual
/// line are flagged as bounds only.
inline BreakProfile tensor_profile_bound(const BreakProfile& a, const BreakProfile& b) {
  std::vector<BreakCurve> curves;
  for (const auto& x : a.curves)
    for (const auto& y : b.curves) {
      const bool same = x.f.final_slope() == y.f.final_slope() &&
                        x.f.eventual_intercept() == y.f.eventual_intercept();
      curves.push_back({pl_max(x.f, y.f), x.m * y.m, same || x.upper_bound || y.upper_bound});
    }
  return BreakProfile(std::move(curves), std::max(a.l, b.l));
}

}  // namespace ramlab
