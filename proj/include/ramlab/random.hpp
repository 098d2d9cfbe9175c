/**
 * @file ramlab/random.hpp
 * @brief Random instance generators for the property suites.
 */
#pragma once

#include "ramlab/breakdec.hpp"
#include "ramlab/conductor.hpp"
#include "ramlab/laurent.hpp"
#include "ramlab/ramify.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

namespace ramlab::gen {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Uniform-ish rational in [lo, hi] with denominator <= max_den.
inline Rat rational(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t den = uniform(rng, 1, max_den);
  return Rat(Int(uniform(rng, lo * den, hi * den)), Int(den));
}

inline GammaVal gamma(Rng& rng) { return {rational(rng, -4, 4, 6), rational(rng, -4, 4, 6)}; }

/// Up to max_terms terms, degrees in [-5, 5], valuations in [-3, 3] with denominator <= 6.
inline LaurentVal laurent(Rng& rng, int max_terms = 8) {
  LaurentVal f;
  const auto k = uniform(rng, 1, max_terms);
  for (int t = 0; t < k; ++t) f.set(uniform(rng, -5, 5), rational(rng, -3, 3, 6));
  return f;
}

inline RadiusInterval interval(Rng& rng) {
  Rat a = rational(rng, 0, 3, 4), b = rational(rng, 0, 3, 4);
  if (b < a) std::swap(a, b);
  return {a, b};
}

/// A unit on the interval: one monomial strictly dominating at both ends.
inline LaurentVal unit(Rng& rng, const RadiusInterval& iv) {
  const std::int64_t n = uniform(rng, -4, 4);
  const Rat c = rational(rng, -2, 2, 4);
  LaurentVal u = LaurentVal::monomial(n, c);
  const auto extra = uniform(rng, 0, 5);
  for (int t = 0; t < extra; ++t) {
    const std::int64_t k = uniform(rng, -5, 5);
    if (k == n) continue;
    const Rat dk(k - n);
    // v_k + k rho > c + n rho at both ends, with a random margin.
    const Rat floor_val = c + rat_max(-dk * iv.lo, -dk * iv.hi);
    u.set(k, floor_val + rational(rng, 0, 2, 6) + Rat(Int(1), Int(uniform(rng, 1, 12))));
  }
  return u;
}

/// Non-negative convex piecewise-linear curve with non-negative slopes.
inline PLFun convex_curve(Rng& rng) {
  const Rat at0 = uniform(rng, 0, 3) == 0 ? Rat(0) : rational(rng, 0, 3, 4);
  const auto k = uniform(rng, 0, 3);
  std::vector<std::pair<Rat, Rat>> runs;
  Rat x(0), slope = uniform(rng, 0, 1) == 0 ? Rat(0) : rational(rng, 0, 1, 3);
  runs.emplace_back(x, slope);
  for (int t = 0; t < k; ++t) {
    x += rational(rng, 0, 2, 4) + Rat(Int(1), Int(4));
    slope += rational(rng, 0, 2, 3) + Rat(Int(1), Int(3));
    runs.emplace_back(x, slope);
  }
  return PLFun::from_runs(at0, runs);
}

inline BreakProfile profile(Rng& rng) {
  std::vector<BreakCurve> curves;
  const auto k = uniform(rng, 1, 4);
  for (int t = 0; t < k; ++t) curves.push_back({convex_curve(rng), uniform(rng, 1, 3), false});
  return BreakProfile(std::move(curves), uniform(rng, 1, 2));
}

/// Cyclic stabilizer of order p^a * m with a filtration of the p-part:
/// elements of order p^j (j >= 1) get strictly decreasing wild values, the
/// rest sit at gamma0.
inline RamPoint rampoint(Rng& rng, std::int64_t p) {
  const int a = static_cast<int>(uniform(rng, 0, 2));
  const int m = static_cast<int>(uniform(rng, 1, 3));
  int pa = 1;
  for (int t = 0; t < a; ++t) pa *= static_cast<int>(p);
  int n = pa * m;
  if (m % p == 0) n = pa;  // keep the prime-to-p part prime to p
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
  const GammaVal g0(Rat(0), Rat(Int(1), Int(uniform(rng, 1, 3) * n)));
  std::vector<GammaVal> layer(a + 1);
  Rat flat = rational(rng, 1, 3, 4);
  for (int j = 1; j <= a; ++j) {
    layer[j] = GammaVal(flat, g0.eps + rational(rng, 0, 1, 6));
    flat = flat * Rat(Int(1), Int(uniform(rng, 2, 3)));
  }
  std::vector<GammaVal> i(n);
  for (int k = 1; k < n; ++k) {
    const int ord = n / std::gcd(n, k);
    i[k] = is_power_of(ord, p) ? layer[padic_order(ord, p)] : g0;
  }
  return RamPoint(std::move(g), std::move(i), g0, p, Rat(0));
}

/// Maximal chain Z/p^a > p Z/p^a > ... > {0} of a cyclic p-group.
inline std::vector<std::vector<int>> cyclic_maximal_chain(int order, int p) {
  std::vector<std::vector<int>> chain;
  for (int step = 1; step <= order; step *= p) {
    std::vector<int> sub;
    for (int x = 0; x < order; x += step) sub.push_back(x);
    chain.push_back(sub);
  }
  return chain;
}

/// Units x of Z/ell^n with x^order = 1.
inline std::vector<std::int64_t> roots_of_unity(const FinRing& ring, int order) {
  std::vector<std::int64_t> out;
  const std::int64_t m = ring.modulus();
  for (std::int64_t x = 1; x < m; ++x) {
    if (x % ring.ell == 0) continue;
    std::int64_t y = 1;
    for (int k = 0; k < order; ++k) y = y * x % m;
    if (y == 1) out.push_back(x);
  }
  return out;
}

/// Random invertible matrix together with its inverse (products of elementary matrices).
inline std::pair<ModMatrix, ModMatrix> random_unimodular(Rng& rng, int dim, std::int64_t mod) {
  ModMatrix s = ModMatrix::identity(dim, mod), s_inv = ModMatrix::identity(dim, mod);
  if (dim < 2) return {s, s_inv};
  for (int t = 0; t < 3 * dim; ++t) {
    const int i = static_cast<int>(uniform(rng, 0, dim - 1));
    int j = static_cast<int>(uniform(rng, 0, dim - 2));
    if (j >= i) ++j;
    const std::int64_t c = uniform(rng, 1, mod - 1);
    ModMatrix e = ModMatrix::identity(dim, mod), e_inv = ModMatrix::identity(dim, mod);
    e.set(i, j, c);
    e_inv.set(i, j, -c);
    s = s * e;
    s_inv = e_inv * s_inv;
  }
  return {s, s_inv};
}

/// Random representation of the cyclic p-group Z/order over Z/ell^n with
/// its maximal chain: sums of characters and coset permutation modules,
/// conjugated by a random change of basis. Dimension in [1, max_dim].
inline FilteredRep cyclic_rep(Rng& rng, int order, int p, const FinRing& ring, int max_dim = 6) {
  const std::int64_t mod = ring.modulus();
  const auto roots = roots_of_unity(ring, order);
  std::vector<int> divisors;
  for (int d = 1; d <= order; ++d)
    if (order % d == 0 && d <= max_dim) divisors.push_back(d);

  const int target = static_cast<int>(uniform(rng, 1, max_dim));
  std::vector<std::vector<std::int64_t>> gen_rows;
  int dim = 0;
  auto grow = [&](int by) {
    for (auto& r : gen_rows) r.resize(dim + by, 0);
    for (int k = 0; k < by; ++k) gen_rows.emplace_back(dim + by, 0);
  };
  while (dim < target) {
    if (uniform(rng, 0, 1) == 0) {
      const auto z = roots[uniform(rng, 0, static_cast<std::int64_t>(roots.size()) - 1)];
      grow(1);
      gen_rows[dim][dim] = z;
      dim += 1;
    } else {
      std::vector<int> fit;
      for (int d : divisors)
        if (dim + d <= target) fit.push_back(d);
      const int d = fit[uniform(rng, 0, static_cast<std::int64_t>(fit.size()) - 1)];
      grow(d);
      for (int k = 0; k < d; ++k) gen_rows[dim + (k + 1) % d][dim + k] = 1;
      dim += d;
    }
  }
  const ModMatrix gen(mod, gen_rows);
  const auto [s, s_inv] = random_unimodular(rng, dim, mod);
  const ModMatrix conj = s * gen * s_inv;
  std::vector<ModMatrix> act{ModMatrix::identity(dim, mod)};
  for (int k = 1; k < order; ++k) act.push_back(act.back() * conj);
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(order));
  return FilteredRep(std::move(g), cyclic_maximal_chain(order, p), ring, std::move(act), p);
}

}  // namespace ramlab::gen
