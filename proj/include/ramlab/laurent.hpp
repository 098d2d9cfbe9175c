/**
 * @file ramlab/laurent.hpp
 * @brief Laurent polynomials over K seen through their coefficient valuations.
 *
 * A LaurentVal stores, for every degree with a non-zero coefficient, the
 * valuation of that coefficient (val(p) = 1, the chosen uniformizer also has
 * valuation 1). Radii are handled in log coordinates: rho = val(r), so the
 * monomial a*xi^i has valuation val(a) + i*rho on the circle of radius r.
 */
#pragma once

#include "ramlab/valgroup.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramlab {

/// Inner is the point eta(r) (omega = 1 - e), Outer is eta'(r) (omega = 1/(1 - e)).
enum class Side { Inner, Outer };

struct RadiusInterval {
  Rat lo;
  Rat hi;

  RadiusInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (hi < lo) throw std::invalid_argument("radius interval with hi < lo");
  }
  Rat width() const { return hi - lo; }
};

class LaurentVal {
 public:
  using Terms = std::map<std::int64_t, Rat>;

  LaurentVal() = default;
  explicit LaurentVal(Terms terms) : terms_(std::move(terms)) {}
  LaurentVal(std::initializer_list<std::pair<const std::int64_t, Rat>> init) : terms_(init) {}

  static LaurentVal monomial(std::int64_t degree, Rat valuation) {
    return LaurentVal(Terms{{degree, std::move(valuation)}});
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Valuation of the coefficient of xi^degree; nullopt for a zero coefficient.
  std::optional<Rat> coeff_val(std::int64_t degree) const {
    auto it = terms_.find(degree);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  void set(std::int64_t degree, Rat valuation) { terms_[degree] = std::move(valuation); }
  void erase(std::int64_t degree) { terms_.erase(degree); }

  friend bool operator==(const LaurentVal&, const LaurentVal&) = default;

 private:
  Terms terms_;
};

/// Valuation of a single monomial at the Gauss point of radius rho.
inline GammaVal monomial_gauss_val(std::int64_t degree, const Rat& coeff_val, const Rat& rho,
                                   Side side) {
  const Rat i(degree);
  return {coeff_val + i * rho, side == Side::Inner ? i : Rat(-i)};
}

/// Rank-two Gauss valuation of f at eta(r) (Inner) or eta'(r) (Outer).
inline GammaOrInf gauss_val(const LaurentVal& f, const Rat& rho, Side side) {
  GammaOrInf best;
  for (const auto& [deg, v] : f.terms()) best = ext_min(best, GammaOrInf(monomial_gauss_val(deg, v, rho, side)));
  return best;
}

/// Valuation of the sup norm over the annulus rho in [lo, hi].
inline RatOrInf sup_val(const LaurentVal& f, const RadiusInterval& interval) {
  RatOrInf best;
  for (const auto& [deg, v] : f.terms()) {
    const Rat i(deg);
    best = ext_min(best, RatOrInf(rat_min(v + i * interval.lo, v + i * interval.hi)));
  }
  return best;
}

/// Spectral value of a monic T^m + a_1 T^{m-1} + ... + a_m, given the
/// valuations of its non-zero lower coefficients as (index i, w(a_i)).
inline GammaOrInf spectral_value(const std::vector<std::pair<std::int64_t, GammaVal>>& coeffs) {
  GammaOrInf best;
  for (const auto& [index, w] : coeffs) {
    if (index < 1) throw std::invalid_argument("spectral_value: coefficient index must be >= 1");
    best = ext_min(best, GammaOrInf(gv_scale(w, Rat(Int(1), Int(index)))));
  }
  return best;
}

/// Min-plus product: the valuation of f*g when no cancellation occurs.
inline LaurentVal tropical_product(const LaurentVal& f, const LaurentVal& g) {
  LaurentVal out;
  for (const auto& [i, v] : f.terms())
    for (const auto& [j, w] : g.terms()) {
      const auto cur = out.coeff_val(i + j);
      const Rat s = v + w;
      if (!cur || s < *cur) out.set(i + j, s);
    }
  return out;
}

/// Coefficientwise minimum: the valuation of f + g when no cancellation occurs.
inline LaurentVal tropical_sum(const LaurentVal& f, const LaurentVal& g) {
  LaurentVal out = f;
  for (const auto& [j, w] : g.terms()) {
    const auto cur = out.coeff_val(j);
    if (!cur || w < *cur) out.set(j, w);
  }
  return out;
}

/// u = gamma * xi^n * (1 + h) with val(gamma) = c.
struct UnitDecomposition {
  std::int64_t n;
  Rat c;
  LaurentVal h;
};

/// Splits off the monomial that strictly dominates u at both ends of the
/// interval. nullopt means no single monomial does (u is then not provably a
/// unit with |h|_sup < 1).
inline std::optional<UnitDecomposition> unit_decompose(const LaurentVal& u,
                                                       const RadiusInterval& interval) {
  if (u.is_zero()) throw std::invalid_argument("unit_decompose: zero polynomial");
  auto dominant_at = [&](const Rat& rho) -> std::optional<std::int64_t> {
    std::optional<std::int64_t> arg;
    std::optional<Rat> best;
    bool tie = false;
    for (const auto& [deg, v] : u.terms()) {
      const Rat val = v + Rat(deg) * rho;
      if (!best || val < *best) {
        best = val;
        arg = deg;
        tie = false;
      } else if (val == *best) {
        tie = true;
      }
    }
    if (tie) return std::nullopt;
    return arg;
  };
  const auto at_lo = dominant_at(interval.lo);
  const auto at_hi = dominant_at(interval.hi);
  if (!at_lo || !at_hi || *at_lo != *at_hi) return std::nullopt;

  const std::int64_t n = *at_lo;
  const Rat c = *u.coeff_val(n);
  LaurentVal h;
  for (const auto& [deg, v] : u.terms())
    if (deg != n) h.set(deg - n, v - c);
  return UnitDecomposition{n, c, std::move(h)};
}

/// Infimum of the symmetric shrink sigma >= 0 after which
/// sup_val(h, [lo + sigma, hi - sigma]) > 1/(p - 1), the p-th root criterion.
/// strict means the condition is open: every sigma' > sigma works but sigma
/// itself may not.
struct RootShrink {
  Rat sigma;
  bool strict;
};

inline std::optional<RootShrink> pth_root_shrink(const LaurentVal& h, const RadiusInterval& interval,
                                                 std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("pth_root_shrink: p must be prime");
  const auto sup = sup_val(h, interval);
  if (sup.is_finite() && sup.value() < 0)
    throw std::invalid_argument("pth_root_shrink: requires |h|_sup <= 1");

  const Rat threshold(Int(1), Int(p - 1));
  // Each monomial k != 0 imposes sigma > bound_k; the constant term is unaffected by shrinking.
  std::optional<Rat> bound;
  for (const auto& [deg, v] : h.terms()) {
    if (deg == 0) {
      if (v <= threshold) return std::nullopt;
      continue;
    }
    const Rat k(deg);
    // k > 0: worst at lo + sigma; k < 0: worst at hi - sigma.
    const Rat b = deg > 0 ? (threshold - v) / k - interval.lo
                          : (threshold - v - k * interval.hi) / (-k);
    if (!bound || *bound < b) bound = b;
  }
  if (!bound || *bound < 0) return RootShrink{Rat(0), false};
  if (*bound * 2 > interval.width()) return std::nullopt;
  return RootShrink{*bound, true};
}

}  // namespace ramlab
