/**
 * @file ramlab/valgroup.hpp
 * @brief The rank-two value group in additive coordinates.
 *
 * An element is a pair (flat, eps): flat is the ordinary valuation
 * normalized so that val(p) = 1, eps is the exponent of the positive
 * infinitesimal (1 - e). Comparison is lexicographic, flat first; a larger
 * additive value means a smaller absolute value.
 */
#pragma once

#include "ramlab/rational.hpp"

#include <compare>
#include <optional>
#include <type_traits>
#include <ostream>
#include <utility>

namespace ramlab {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

inline Cmp cmp_rat(const Rat& a, const Rat& b) {
  if (a < b) return Cmp::LT;
  if (b < a) return Cmp::GT;
  return Cmp::EQ;
}

struct GammaVal {
  Rat flat{0};
  Rat eps{0};

  GammaVal() = default;
  GammaVal(Rat f, Rat e) : flat(std::move(f)), eps(std::move(e)) {}

  static GammaVal zero() { return {}; }

  friend bool operator==(const GammaVal& a, const GammaVal& b) {
    return a.flat == b.flat && a.eps == b.eps;
  }
  friend std::strong_ordering operator<=>(const GammaVal& a, const GammaVal& b) {
    if (a.flat < b.flat) return std::strong_ordering::less;
    if (b.flat < a.flat) return std::strong_ordering::greater;
    if (a.eps < b.eps) return std::strong_ordering::less;
    if (b.eps < a.eps) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  GammaVal operator-() const { return {-flat, -eps}; }
  GammaVal& operator+=(const GammaVal& o) {
    flat += o.flat;
    eps += o.eps;
    return *this;
  }
  GammaVal& operator-=(const GammaVal& o) {
    flat -= o.flat;
    eps -= o.eps;
    return *this;
  }
  friend GammaVal operator+(GammaVal a, const GammaVal& b) { return a += b; }
  friend GammaVal operator-(GammaVal a, const GammaVal& b) { return a -= b; }
};

inline GammaVal gv_add(const GammaVal& a, const GammaVal& b) { return a + b; }

inline Cmp gv_cmp(const GammaVal& a, const GammaVal& b) {
  const auto c = a <=> b;
  if (c < 0) return Cmp::LT;
  if (c > 0) return Cmp::GT;
  return Cmp::EQ;
}

inline GammaVal gv_scale(const GammaVal& a, const Rat& q) { return {a.flat * q, a.eps * q}; }

inline GammaVal gv_min(const GammaVal& a, const GammaVal& b) { return b < a ? b : a; }
inline GammaVal gv_max(const GammaVal& a, const GammaVal& b) { return a < b ? b : a; }

inline std::ostream& operator<<(std::ostream& os, const GammaVal& g) {
  return os << "(" << to_string(g.flat) << ", " << to_string(g.eps) << ")";
}

/// T extended by a top element +infinity (the valuation of zero).
template <class T>
class Extended {
 public:
  Extended() = default;  // infinity
  Extended(T v) : value_(std::move(v)) {}
  static Extended infinity() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const T& value() const { return value_.value(); }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return a.value() == b.value();
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.value() < b.value();
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) return {};
    return Extended(a.value() + b.value());
  }

  friend std::ostream& operator<<(std::ostream& os, const Extended& e) {
    if (e.is_infinite()) return os << "inf";
    if constexpr (std::is_same_v<T, Rat>)
      return os << to_string(e.value());
    else
      return os << e.value();
  }

 private:
  std::optional<T> value_;
};

using GammaOrInf = Extended<GammaVal>;
using RatOrInf = Extended<Rat>;

template <class T>
Extended<T> ext_min(const Extended<T>& a, const Extended<T>& b) {
  return b < a ? b : a;
}

}  // namespace ramlab
