/**
 * @file ramlab/checks.hpp
 * @brief Randomized invariant suites, one per module.
 *
 * Each suite draws instances from a seeded generator and compares the
 * library against brute-force or closed-form oracles written here, not
 * against itself. The `check` command runs all of them.
 */
#pragma once

#include "ramlab/random.hpp"
#include "ramlab/report.hpp"

#include <sstream>
#include <string>

namespace ramlab::checks {

using gen::Rng;

namespace detail {
inline std::string fail_note(int trial) {
  std::ostringstream os;
  os << "first failure at trial " << trial;
  return os.str();
}

/// Records a property: pred(trial) is evaluated for every trial.
template <class Pred>
void property(CheckReport& out, const std::string& name, int trials, Pred&& pred) {
  for (int t = 0; t < trials; ++t)
    if (!pred(t)) {
      out.add(name, false, fail_note(t));
      return;
    }
  out.add(name, true, std::to_string(trials) + " cases");
}
}  // namespace detail

inline CheckReport check_valgroup(Rng& rng, int trials = 1000) {
  CheckReport out;
  detail::property(out, "order compatible with addition", trials, [&](int) {
    const auto a = gen::gamma(rng), b = gen::gamma(rng), c = gen::gamma(rng);
    return !(a < b) || (a + c < b + c);
  });
  detail::property(out, "scale by q then 1/q is identity", trials, [&](int) {
    const auto a = gen::gamma(rng);
    Rat q = gen::rational(rng, -5, 5, 7);
    if (q == 0) q = 1;
    return gv_scale(gv_scale(a, q), 1 / q) == a;
  });
  detail::property(out, "total order is trichotomous and transitive", trials, [&](int) {
    const auto a = gen::gamma(rng), b = gen::gamma(rng), c = gen::gamma(rng);
    const int count = int(a < b) + int(a == b) + int(b < a);
    const bool trans = !(a < b && b < c) || a < c;
    // The order is lexicographic; check against the pairwise definition.
    const bool lex = (a < b) == (a.flat < b.flat || (a.flat == b.flat && a.eps < b.eps));
    return count == 1 && trans && lex;
  });
  return out;
}

inline CheckReport check_laurent(Rng& rng, int trials = 1000) {
  CheckReport out;
  auto side_of = [&] { return gen::uniform(rng, 0, 1) == 0 ? Side::Inner : Side::Outer; };

  detail::property(out, "Gauss valuation is multiplicative (generic pairs)", trials, [&](int) {
    for (;;) {
      const auto f = gen::laurent(rng), g = gen::laurent(rng);
      const Rat rho = gen::rational(rng, -2, 2, 6);
      const Side side = side_of();
      // Brute force over all term pairs; keep only instances with a unique minimizing pair.
      std::optional<GammaVal> best;
      int hits = 0;
      for (const auto& [i, v] : f.terms())
        for (const auto& [j, w] : g.terms()) {
          const auto val = monomial_gauss_val(i, v, rho, side) + monomial_gauss_val(j, w, rho, side);
          if (!best || val < *best) {
            best = val;
            hits = 1;
          } else if (val == *best) {
            ++hits;
          }
        }
      if (hits != 1) continue;
      const auto prod = gauss_val(tropical_product(f, g), rho, side);
      return prod == GammaOrInf(*best) && prod == gauss_val(f, rho, side) + gauss_val(g, rho, side);
    }
  });

  detail::property(out, "ultrametric inequality, equality when values differ", trials, [&](int) {
    const auto f = gen::laurent(rng), g = gen::laurent(rng);
    const Rat rho = gen::rational(rng, -2, 2, 6);
    const Side side = side_of();
    // True sum: equal-valuation coefficients in the same degree may cancel to a higher valuation.
    LaurentVal sum = f;
    for (const auto& [j, w] : g.terms()) {
      const auto cur = sum.coeff_val(j);
      if (!cur || w < *cur) {
        sum.set(j, w);
      } else if (*cur == w) {
        const auto roll = gen::uniform(rng, 0, 2);
        if (roll == 1) sum.set(j, w + gen::rational(rng, 1, 2, 3));
        if (roll == 2) sum.erase(j);
      }
    }
    const auto gf = gauss_val(f, rho, side), gg = gauss_val(g, rho, side), gs = gauss_val(sum, rho, side);
    const auto lower = ext_min(gf, gg);
    if (gs < lower) return false;
    if (!(gf == gg)) return gs == lower;
    return true;
  });

  detail::property(out, "monomial Gauss valuation scales linearly in rho", trials, [&](int) {
    const std::int64_t k = gen::uniform(rng, -6, 6);
    const Rat v = gen::rational(rng, -3, 3, 6);
    const Rat rho = gen::rational(rng, 0, 3, 5), rho2 = gen::rational(rng, 0, 3, 5);
    const auto f = LaurentVal::monomial(k, v);
    const Side side = side_of();
    const auto a = gauss_val(f, rho, side), b = gauss_val(f, rho2, side);
    return b.value() == a.value() + GammaVal((rho2 - rho) * k, Rat(0));
  });

  detail::property(out, "sup on a circle equals the flat Gauss valuation", trials, [&](int) {
    for (;;) {
      const auto f = gen::laurent(rng);
      const Rat rho = gen::rational(rng, 0, 3, 5);
      std::optional<Rat> best;
      int hits = 0;
      for (const auto& [i, v] : f.terms()) {
        const Rat val = v + Rat(i) * rho;
        if (!best || val < *best) {
          best = val;
          hits = 1;
        } else if (val == *best) {
          ++hits;
        }
      }
      if (hits != 1) continue;
      return sup_val(f, {rho, rho}).value() == gauss_val(f, rho, Side::Inner).value().flat;
    }
  });
  return out;
}

inline CheckReport check_plfun(Rng& rng, int trials = 500) {
  CheckReport out;
  detail::property(out, "sum and max of convex functions are convex", trials, [&](int) {
    const auto f = gen::convex_curve(rng), g = gen::convex_curve(rng);
    return pl_is_convex(pl_add(f, g)) && pl_is_convex(pl_max(f, g));
  });
  detail::property(out, "pointwise add/max agree with evaluation", trials, [&](int) {
    const auto f = gen::convex_curve(rng), g = gen::convex_curve(rng);
    const auto s = pl_add(f, g), m = pl_max(f, g);
    for (int k = 0; k < 10; ++k) {
      const Rat x = gen::rational(rng, 0, 6, 7);
      if (s(x) != f(x) + g(x) || m(x) != rat_max(f(x), g(x))) return false;
    }
    return true;
  });
  detail::property(out, "value equals integral of slopes", trials, [&](int) {
    const auto f = gen::convex_curve(rng);
    const Rat x = gen::rational(rng, 0, 8, 9);
    Rat acc = f.value_at_0(), at(0);
    for (const auto& pc : f.pieces()) {
      if (pc.until >= x) break;
      acc += pc.slope * (pc.until - at);
      at = pc.until;
    }
    return f(x) == acc + f.right_slope(at) * (x - at);
  });
  detail::property(out, "canonical form is stable and preserves values", trials, [&](int) {
    const auto f = gen::convex_curve(rng);
    // Split every segment at its midpoint: a non-canonical description of f.
    std::vector<PLFun::Piece> split;
    Rat start(0);
    for (const auto& pc : f.pieces()) {
      split.push_back({(start + pc.until) / 2, pc.slope});
      split.push_back(pc);
      start = pc.until;
    }
    split.push_back({start + 1, f.final_slope()});
    const PLFun g(f.value_at_0(), split, f.final_slope());
    if (!(g == f)) return false;
    if (!(PLFun(g.value_at_0(), g.pieces(), g.final_slope()) == g)) return false;
    for (int k = 0; k < 100; ++k) {
      const Rat x = gen::rational(rng, 0, 8, 11);
      if (g(x) != f(x)) return false;
    }
    return true;
  });
  return out;
}

inline CheckReport check_ramify(Rng& rng, int trials = 200) {
  CheckReport out;
  const std::int64_t primes[] = {2, 3, 5};
  auto prime = [&] { return primes[gen::uniform(rng, 0, 2)]; };

  detail::property(out, "Herbrand function strictly increasing, fixes 0", trials, [&](int) {
    const auto rp = gen::rampoint(rng, prime());
    if (!(phi_upper(rp, GammaVal::zero()) == GammaVal::zero())) return false;
    GammaVal a{gen::rational(rng, 0, 3, 6), gen::rational(rng, -2, 2, 6)};
    GammaVal b{gen::rational(rng, 0, 3, 6), gen::rational(rng, -2, 2, 6)};
    if (a < GammaVal::zero()) a = -a;
    if (b < GammaVal::zero()) b = -b;
    if (a == b) return true;
    if (b < a) std::swap(a, b);
    return phi_upper(rp, a) < phi_upper(rp, b);
  });

  detail::property(out, "Artin and Swan characters: filtration sum equals total conductor", trials, [&](int) {
    const auto rp = gen::rampoint(rng, prime());
    const int o = rp.order();
    // Oracle: total conductor, written out per element.
    std::vector<Rat> aflat(o, Rat(0)), anat(o, Rat(0)), sw(o, Rat(0));
    for (int s = 1; s < o; ++s) {
      aflat[s] = -Rat(o) * rp.i(s).flat;
      anat[s] = -Rat(o) * rp.i(s).eps;
      aflat[0] += Rat(o) * rp.i(s).flat;
      anat[0] += Rat(o) * rp.i(s).eps;
    }
    for (int s = 0; s < o; ++s) sw[s] = anat[s] - (s == 0 ? Rat(o - 1) : Rat(-1));
    return artin_flat(rp).values() == aflat && swan_nat(rp).values() == sw;
  });

  detail::property(out, "conductor-discriminant formula for Kummer subcovers", 1, [&](int) {
    for (std::int64_t p : primes)
      for (int n = 1; n <= 24; ++n) {
        const auto rp = ram_from_kummer(n, p, Rat(0));
        const auto af = artin_flat(rp);
        for (int d = 1; d <= n; ++d) {
          if (n % d) continue;
          std::vector<int> sub;
          for (int x = 0; x < n; x += n / d) sub.push_back(x);
          const auto perm = permutation_character(rp.group, sub);
          if (inner(af, perm) != delta_value(ram_from_kummer(n / d, p, Rat(0)))) return false;
        }
      }
    return true;
  });

  detail::property(out, "a_flat pairs non-negatively with permutation characters", trials, [&](int) {
    const auto rp = gen::rampoint(rng, prime());
    const auto af = artin_flat(rp);
    const int n = rp.order();
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      std::vector<int> sub;
      for (int x = 0; x < n; x += n / d) sub.push_back(x);
      if (inner(af, permutation_character(rp.group, sub)) < 0) return false;
    }
    return true;
  });
  return out;
}

inline CheckReport check_breakdec(Rng& rng, int trials = 40) {
  CheckReport out;
  struct Case {
    int order, p;
    std::int64_t ell;
  };
  const Case cases[] = {{2, 2, 3}, {4, 2, 3}, {2, 2, 5}, {4, 2, 5}, {3, 3, 5}, {9, 3, 5}};
  auto draw = [&](int n) {
    const auto& c = cases[gen::uniform(rng, 0, 5)];
    return gen::cyclic_rep(rng, c.order, c.p, FinRing(c.ell, n));
  };
  detail::property(out, "break decomposition properties", trials, [&](int t) {
    const auto rep = draw(1 + t % 2);
    const auto dec = break_decompose(rep);
    return verify_break_props(rep, dec).ok() && hom_vanishing_check(rep, dec).ok();
  });
  detail::property(out, "projectors commute with equivariant endomorphisms", trials, [&](int) {
    const auto rep = draw(2);
    const auto dec = break_decompose(rep);
    ModMatrix x(rep.dim(), rep.ring().modulus());
    for (int i = 0; i < rep.dim(); ++i)
      for (int j = 0; j < rep.dim(); ++j) x.set(i, j, gen::uniform(rng, 0, rep.ring().modulus() - 1));
    const auto phi = equivariant_average(rep, x);
    for (const auto& c : dec.components)
      if (!(phi * c.projector == c.projector * phi)) return false;
    return true;
  });
  detail::property(out, "base change invariance", trials, [&](int) { return base_change_check(draw(2)).ok(); });
  detail::property(out, "tensor and Hom break rules", trials / 2, [&](int) {
    const auto& c = cases[gen::uniform(rng, 0, 5)];
    const FinRing ring(c.ell, 1);
    const auto a = gen::cyclic_rep(rng, c.order, c.p, ring, 3);
    const auto b = gen::cyclic_rep(rng, c.order, c.p, ring, 3);
    return tensor_breaks_check(a, b).ok();
  });
  return out;
}

inline CheckReport check_conductor(Rng& rng, int trials = 200) {
  CheckReport out;
  const Rat cs[] = {Rat(0), Rat(Int(-3), Int(2)), Rat(4)};
  detail::property(out, "beta equals the eventual slope of f_{q,c}", trials, [&](int) {
    const auto pr = gen::profile(rng);
    const auto beta = beta_function(pr);
    for (int k = 0; k < 20; ++k) {
      const Rat q(Int(k), Int(4));
      Rat closed(0);
      for (const auto& cv : pr.curves) closed += Rat(cv.m) * rat_max(q, cv.f.final_slope());
      if (beta(q) != closed) return false;
      for (const auto& c : cs)
        if (f_qc(pr, q, c).final_slope() != closed) return false;
    }
    return true;
  });
  detail::property(out, "delta convex, Swan conductor non-decreasing", trials, [&](int) {
    const auto pr = gen::profile(rng);
    const auto delta = delta_from_profile(pr);
    if (!pl_is_convex(delta)) return false;
    Rat prev = swan_at(pr, Rat(0));
    for (int k = 1; k <= 40; ++k) {
      const Rat s = swan_at(pr, Rat(Int(k), Int(5)));
      if (s < prev) return false;
      prev = s;
    }
    return true;
  });
  detail::property(out, "Newton multiplicities sum to the rank", trials, [&](int) {
    const auto pr = gen::profile(rng);
    std::int64_t s = 0;
    for (const auto& b : newton_breaks(pr)) s += b.mu;
    return s == pr.rank();
  });
  detail::property(out, "beta is invariant under shifts", trials, [&](int) {
    const auto pr = gen::profile(rng);
    return beta_function(shift_profile(pr, gen::rational(rng, 0, 3, 4))) == beta_function(pr);
  });
  detail::property(out, "L(n/m) curve slopes have denominator dividing m", 1, [&](int) {
    const std::int64_t ps[] = {2, 3, 5};
    for (auto p : ps)
      for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t m = 1; m <= 12; ++m) {
          if (std::gcd(n, m) != 1) continue;
          for (const auto& seg : profile_LQ(n, m, p, 1).curves.front().f.segments())
            if (m % denominator_of(seg.slope) != 0) return false;
        }
    return true;
  });
  return out;
}

inline CheckReport run_all(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport out;
  out.merge(check_valgroup(rng), "valgroup: ");
  out.merge(check_laurent(rng), "laurent: ");
  out.merge(check_plfun(rng), "plfun: ");
  out.merge(check_ramify(rng), "ramify: ");
  out.merge(check_breakdec(rng), "breakdec: ");
  out.merge(check_conductor(rng), "conductor: ");
  return out;
}

}  // namespace ramlab::checks
