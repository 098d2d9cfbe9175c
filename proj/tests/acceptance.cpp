/**
 * @file acceptance.cpp
 * @brief Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
 *
 * Each criterion compares library output against an oracle written here
 * without calling the routine under test: hand-derived closed forms,
 * exact polynomial arithmetic over Q with p-adic valuations, and a direct
 * scan of candidate shrink amounts. Time limits are wall-clock seconds.
 */
#include "ramlab/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ramlab;

Rat r(std::int64_t a, std::int64_t b = 1) { return make_rat(a, b); }

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Verdict()> body;
};

// --- shared fixtures ---------------------------------------------------------

std::vector<BreakProfile> fixture_profiles() {
  std::vector<BreakProfile> out;
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t l : {1, 2}) {
      for (auto [n, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{
               {1, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {5, 3}, {9, 4}, {6, 5}, {25, 1}})
        out.push_back(profile_LQ(n, m, p, l));
      for (int j = 0; j <= 3; ++j) out.push_back(profile_kummer_char(p, j, l));
    }
  BreakProfile mixed = profile_LQ(1, 1, 3, 1);
  mixed.curves.push_back(profile_kummer_char(3, 1, 1).curves.at(0));
  mixed.curves.push_back(profile_LQ(3, 2, 3, 1).curves.at(0));
  out.push_back(mixed);
  return out;
}

std::vector<Rat> rho_grid() {
  std::vector<Rat> g;
  for (int k = 0; k <= 48; ++k) g.push_back(r(k, 8));
  g.push_back(r(1, 7));
  g.push_back(r(100));
  return g;
}

// --- criterion 1 ---------------------------------------------------------------

Verdict kummer_upper_jump() {
  Verdict v;
  for (std::int64_t p : {2, 3, 5}) {
    const auto rp = ram_from_kummer(static_cast<int>(p), p, r(1, 3));
    const auto lower = jumps_lower(rp);
    if (lower.size() != 1) {
      v.fail("p=" + std::to_string(p) + ": expected one lower jump");
      continue;
    }
    // |p| * lambda with lambda = |p|^{1/(p-1)}: additive 1 + 1/(p-1).
    const Rat expected = r(1) + r(1, p - 1);
    const Rat got = phi_upper(rp, lower[0]).flat;
    if (got != expected) v.fail("p=" + std::to_string(p) + ": upper jump flat " + to_string(got));
  }
  return v;
}

// --- criterion 2 ---------------------------------------------------------------

Verdict kummer_swan_vanishes() {
  Verdict v;
  for (std::int64_t p : {2, 3, 5})
    for (int n : {static_cast<int>(p), static_cast<int>(p * p), 2 * static_cast<int>(p), 7})
      for (const auto& rho : {r(0), r(1, 2), r(1), r(2)}) {
        const auto sw = swan_nat(ram_from_kummer(n, p, rho));
        for (const auto& x : sw.values())
          if (x != 0) v.fail("swan_nat nonzero for n=" + std::to_string(n) + " p=" + std::to_string(p));
      }
  for (std::int64_t p : {2, 3, 5})
    for (int j = 0; j <= 3; ++j)
      for (std::int64_t l : {1, 3}) {
        const auto pr = profile_kummer_char(p, j, l);
        for (const auto& rho : rho_grid())
          if (swan_at(pr, rho) != 0) v.fail("swan_at nonzero for Kummer character p=" + std::to_string(p));
      }
  return v;
}

// --- criterion 3 ---------------------------------------------------------------

struct Schedule {
  std::vector<Rat> breakpoints;
  std::vector<Rat> slopes;
};

Verdict lq_schedule() {
  Verdict v;
  struct Case {
    std::int64_t p, nq, mq;
    Schedule expect;
  };
  // Hand-derived: zero until q^-1/(p-1), then slope l*n (p does not divide n here).
  const std::vector<Case> cases{
      {3, 1, 1, {{r(1, 2)}, {r(0), r(1)}}},
      {3, 1, 2, {{r(1)}, {r(0), r(1)}}},
      {5, 3, 1, {{r(1, 12)}, {r(0), r(3)}}},
      {3, 2, 3, {{r(3, 4)}, {r(0), r(2)}}},
  };
  for (const auto& c : cases)
    for (std::int64_t l : {1, 2}) {
      const auto delta = delta_from_profile(profile_LQ(c.nq, c.mq, c.p, l));
      std::vector<Rat> slopes;
      for (const auto& s : delta.segments()) slopes.push_back(s.slope);
      std::vector<Rat> want_slopes;
      for (const auto& s : c.expect.slopes) want_slopes.push_back(s * l);
      const std::string tag = "p=" + std::to_string(c.p) + " q=" + std::to_string(c.nq) + "/" +
                              std::to_string(c.mq) + " l=" + std::to_string(l);
      if (delta.breakpoints() != c.expect.breakpoints) v.fail(tag + ": breakpoints differ");
      if (slopes != want_slopes) v.fail(tag + ": slopes differ");
      if (delta(Rat(0)) != 0) v.fail(tag + ": nonzero at 0");
      if (pl_eventual_slope(delta) != r(l * c.nq)) v.fail(tag + ": eventual slope is not l*n");
    }
  return v;
}

// --- criterion 4 ---------------------------------------------------------------

Verdict convex_monotone() {
  Verdict v;
  auto check = [&](const BreakProfile& pr, const std::string& tag) {
    const auto delta = delta_from_profile(pr);
    if (!pl_is_convex(delta)) v.fail(tag + ": delta not convex");
    std::optional<Rat> prev;
    for (const auto& rho : [] {
           auto g = rho_grid();
           std::sort(g.begin(), g.end());
           return g;
         }()) {
      const Rat s = swan_at(pr, rho);
      if (prev && s < *prev) v.fail(tag + ": Swan conductor decreases");
      prev = s;
    }
  };
  int k = 0;
  for (const auto& pr : fixture_profiles()) check(pr, "fixture " + std::to_string(k++));
  gen::Rng rng(4004);
  for (int t = 0; t < 200; ++t) check(gen::profile(rng), "random " + std::to_string(t));
  return v;
}

// --- criterion 5 ---------------------------------------------------------------

Verdict beta_oracle() {
  Verdict v;
  auto check = [&](const BreakProfile& pr, const std::string& tag) {
    const auto beta = beta_function(pr);
    Rat max_tau(0);
    std::int64_t rank = 0;
    for (const auto& c : pr.curves) {
      max_tau = rat_max(max_tau, c.f.final_slope());
      rank += c.m;
    }
    for (int k = 0; k < 20; ++k) {
      const Rat q = r(k, 2);
      for (const auto& c : {r(0), r(-3, 2), r(4)}) {
        // Eventual slope of f_qc read off far past every breakpoint.
        const auto f = f_qc(pr, q, c);
        const auto bps = f.breakpoints();
        const Rat far = (bps.empty() ? Rat(0) : bps.back()) + 1;
        const Rat slope = f(far + 1) - f(far);
        if (beta(q) != slope) v.fail(tag + ": beta(" + to_string(q) + ") != slope of f_qc");
      }
    }
    std::int64_t mu = 0;
    for (const auto& b : newton_breaks(pr)) mu += b.mu;
    if (mu != rank) v.fail(tag + ": multiplicities do not sum to rank");
    for (int k = 0; k < 4; ++k) {
      const Rat q = max_tau + r(k, 3);
      if (beta(q) != q * rank) v.fail(tag + ": beta(q) != q*rank past the largest slope");
    }
  };
  int k = 0;
  for (const auto& pr : fixture_profiles()) check(pr, "fixture " + std::to_string(k++));
  gen::Rng rng(5005);
  for (int t = 0; t < 200; ++t) check(gen::profile(rng), "random " + std::to_string(t));
  return v;
}

// --- criterion 6 ---------------------------------------------------------------

int vp(std::int64_t n, std::int64_t p) {
  int k = 0;
  for (; n % p == 0; n /= p) ++k;
  return k;
}

Verdict fuhrer_oracle() {
  Verdict v;
  for (std::int64_t p : {2, 3, 5, 7, 11})
    for (int n = 1; n <= 12; ++n)
      for (const auto& rho : {r(0), r(1, 2), r(1), r(2)}) {
        // Naive discriminant n^n xi^(n-1) at eta(r), renormalized by the
        // orthogonal basis 1, xi^(1/n), ..., xi^((n-1)/n).
        Rat naive = Rat(n) * vp(n, p) + Rat(n - 1) * rho;
        Rat basis(0);
        for (int i = 1; i < n; ++i) basis += Rat(i) * rho / n;
        const Rat oracle = naive - 2 * basis;
        const Rat got = delta_value(ram_from_kummer(n, p, rho));
        if (got != oracle)
          v.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + to_string(got) + " vs " + to_string(oracle));
        if (n == p && got != Rat(p)) v.fail("n=p gives " + to_string(got));
        if (std::gcd<std::int64_t>(n, p) == 1 && got != 0) v.fail("tame n gives " + to_string(got));
      }
  return v;
}

// --- criterion 7 ---------------------------------------------------------------

Verdict break_suite() {
  Verdict v;
  struct Setup {
    int order, p;
    std::int64_t ell;
  };
  const std::vector<Setup> setups{{2, 2, 3}, {2, 2, 5}, {4, 2, 3}, {4, 2, 5}, {3, 3, 5}, {9, 3, 5}};
  gen::Rng rng(7007);
  for (const auto& s : setups)
    for (int n : {1, 2})
      for (int t = 0; t < 100; ++t) {
        const FinRing ring(s.ell, n);
        const auto rep = gen::cyclic_rep(rng, s.order, s.p, ring);
        const auto dec = break_decompose(rep);
        const std::string tag = "Z/" + std::to_string(s.order) + " over Z/" + std::to_string(ring.modulus());
        // Orthogonality and completeness, recomputed here.
        const auto id = ModMatrix::identity(rep.dim(), ring.modulus());
        ModMatrix sum(rep.dim(), ring.modulus());
        for (const auto& a : dec.components) {
          sum += a.projector;
          for (const auto& b : dec.components) {
            const auto prod = a.projector * b.projector;
            if (a.index == b.index ? !(prod == a.projector) : !prod.is_zero()) v.fail(tag + ": projectors not orthogonal idempotents");
          }
        }
        if (!(sum == id)) v.fail(tag + ": projectors do not sum to identity");
        if (!verify_break_props(rep, dec).ok()) v.fail(tag + ": break properties");
        if (!hom_vanishing_check(rep, dec).ok()) v.fail(tag + ": Hom between components");
        int total = 0;
        for (const auto& c : dec.components) total += c.rank;
        if (total != rep.dim()) v.fail(tag + ": ranks do not add up");
        if (n == 2 && !base_change_check(rep).ok()) v.fail(tag + ": base change");
      }
  return v;
}

// --- criterion 8 ---------------------------------------------------------------

Verdict tensor_rule() {
  Verdict v;
  struct Setup {
    int order, p;
    std::int64_t ell;
    int n;
  };
  const std::vector<Setup> setups{{2, 2, 3, 2}, {4, 2, 5, 1}, {3, 3, 5, 1}, {9, 3, 2, 1}};
  gen::Rng rng(8008);
  for (int t = 0; t < 100; ++t) {
    const auto& s = setups[t % setups.size()];
    const FinRing ring(s.ell, s.n);
    const auto a = gen::cyclic_rep(rng, s.order, s.p, ring);
    const auto b = gen::cyclic_rep(rng, s.order, s.p, ring);
    if (!tensor_breaks_check(a, b).ok()) v.fail("tensor rule, pair " + std::to_string(t));
  }
  for (int t = 0; t < 100; ++t) {
    const auto fa = gen::profile(rng), fb = gen::profile(rng);
    const auto da = delta_from_profile(fa), db = delta_from_profile(fb);
    const auto dt = delta_from_profile(tensor_profile_bound(fa, fb));
    const Rat rk = Rat(fa.rank() * fb.rank());
    for (const auto& rho : rho_grid())
      if (dt(rho) > rk * rat_max(da(rho), db(rho))) v.fail("conductor bound at rho=" + to_string(rho));
  }
  return v;
}

// --- criterion 9 ---------------------------------------------------------------

Rat rat_vp(const Rat& x, std::int64_t p) {
  Int num = numerator_of(x), den = denominator_of(x);
  if (num < 0) num = -num;
  Rat k(0);
  for (; num % p == 0; num /= p) k += 1;
  for (; den % p == 0; den /= p) k -= 1;
  return k;
}

using QPoly = std::map<std::int64_t, Rat>;

QPoly random_qpoly(gen::Rng& rng, std::int64_t p) {
  QPoly f;
  const auto k = gen::uniform(rng, 1, 8);
  for (int t = 0; t < k; ++t) {
    // p^v times a unit with small numerator and denominator prime to p.
    const auto e = gen::uniform(rng, -3, 3);
    Rat c(1);
    for (int s = 0; s < (e < 0 ? -e : e); ++s) c *= p;
    if (e < 0) c = 1 / c;
    std::int64_t a = 0, b = 0;
    do a = gen::uniform(rng, -2 * p, 2 * p); while (a % p == 0);
    do b = gen::uniform(rng, 1, 2 * p); while (b % p == 0);
    f[gen::uniform(rng, -5, 5)] = c * r(a, b);
  }
  return f;
}

LaurentVal valuation_of(const QPoly& f, std::int64_t p) {
  LaurentVal out;
  for (const auto& [d, c] : f)
    if (c != 0) out.set(d, rat_vp(c, p));
  return out;
}

// Direct evaluation of the rank-two Gauss value from its definition.
std::optional<GammaVal> brute_gauss(const LaurentVal& f, const Rat& rho, Side side) {
  std::optional<GammaVal> best;
  for (const auto& [i, w] : f.terms()) {
    const GammaVal x(w + Rat(i) * rho, side == Side::Inner ? Rat(i) : Rat(-i));
    if (!best || x < *best) best = x;
  }
  return best;
}

Verdict gauss_properties() {
  Verdict v;
  gen::Rng rng(9009);
  const std::vector<std::int64_t> primes{2, 3, 5};
  // Multiplicativity on generic pairs: the minimizing pair of monomials is unique.
  int generic = 0;
  while (generic < 1000) {
    const auto f = gen::laurent(rng), g = gen::laurent(rng);
    const Rat rho = gen::rational(rng, 0, 3, 6);
    const Side side = gen::uniform(rng, 0, 1) ? Side::Inner : Side::Outer;
    std::optional<GammaVal> best;
    int hits = 0;
    for (const auto& [i, a] : f.terms())
      for (const auto& [j, b] : g.terms()) {
        const GammaVal x(a + b + Rat(i + j) * rho, side == Side::Inner ? Rat(i + j) : Rat(-(i + j)));
        if (!best || x < *best) {
          best = x;
          hits = 1;
        } else if (x == *best) {
          ++hits;
        }
      }
    if (hits != 1) continue;
    ++generic;
    const auto prod = gauss_val(tropical_product(f, g), rho, side);
    const auto sum = gauss_val(f, rho, side) + gauss_val(g, rho, side);
    if (prod != sum || prod.value() != *best) v.fail("multiplicativity, generic pair " + std::to_string(generic));
  }
  // Multiplicativity with true cancellation: exact products over Q.
  for (int t = 0; t < 1000; ++t) {
    const auto p = primes[t % primes.size()];
    const auto f = random_qpoly(rng, p), g = random_qpoly(rng, p);
    QPoly fg;
    for (const auto& [i, a] : f)
      for (const auto& [j, b] : g) fg[i + j] += a * b;
    const Rat rho = gen::rational(rng, 0, 3, 6);
    const Side side = t % 2 ? Side::Inner : Side::Outer;
    const auto lhs = gauss_val(valuation_of(fg, p), rho, side);
    const auto rhs = gauss_val(valuation_of(f, p), rho, side) + gauss_val(valuation_of(g, p), rho, side);
    if (lhs != rhs) v.fail("multiplicativity over Q, pair " + std::to_string(t));
  }
  // Ultrametric inequality on exact sums, equality when the two values differ.
  int strict_pairs = 0;
  for (int t = 0; strict_pairs < 1000; ++t) {
    const auto p = primes[t % primes.size()];
    const auto f = random_qpoly(rng, p);
    auto g = random_qpoly(rng, p);
    if (t % 3 == 0)
      for (auto& [d, c] : g)
        if (f.count(d)) c = -f.at(d);  // force cancellation in shared degrees
    QPoly s = f;
    for (const auto& [d, c] : g) s[d] += c;
    const Rat rho = gen::rational(rng, 0, 3, 6);
    const Side side = t % 2 ? Side::Inner : Side::Outer;
    const auto vf = gauss_val(valuation_of(f, p), rho, side);
    const auto vg = gauss_val(valuation_of(g, p), rho, side);
    const auto vs = gauss_val(valuation_of(s, p), rho, side);
    const auto lo = ext_min(vf, vg);
    if (vs < lo) v.fail("ultrametric inequality, pair " + std::to_string(t));
    if (vf != vg) {
      ++strict_pairs;
      if (vs != lo) v.fail("ultrametric equality, pair " + std::to_string(t));
      const auto bf = brute_gauss(valuation_of(f, p), rho, side);
      if (!bf || vf != GammaOrInf(*bf)) v.fail("Gauss value differs from definition");
    }
  }
  return v;
}

// --- criterion 10 --------------------------------------------------------------

struct ShrinkOracle {
  bool possible;
  Rat sigma;
  bool strict;
};

// Infimum of sigma >= 0 at which every monomial clears 1/(p-1) at its worst
// end of [lo + sigma, hi - sigma], found by scanning every sigma at which some
// monomial crosses the threshold. Up to half the width the worst end is the
// minimum over both ends; past it each constraint is extended linearly, so an
// infimum of exactly half the width is reported as strict.
ShrinkOracle shrink_oracle(const LaurentVal& h, const RadiusInterval& iv, std::int64_t p, Verdict& v) {
  const Rat t = r(1, p - 1);
  auto holds = [&](const Rat& s) {
    for (const auto& [k, w] : h.terms()) {
      const Rat x = k > 0 ? iv.lo + s : iv.hi - s;
      if (w + Rat(k) * x <= t) return false;
    }
    return true;
  };
  auto holds_both_ends = [&](const Rat& s) {
    for (const auto& [k, w] : h.terms())
      if (w + Rat(k) * (iv.lo + s) <= t || w + Rat(k) * (iv.hi - s) <= t) return false;
    return true;
  };
  std::vector<Rat> cand{Rat(0)};
  for (const auto& [k, w] : h.terms()) {
    if (k == 0) continue;
    const Rat at_lo = (t - w) / k - iv.lo;
    const Rat at_hi = iv.hi - (t - w) / k;
    for (const auto& c : {at_lo, at_hi})
      if (c >= 0) cand.push_back(c);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  cand.push_back(cand.back() + 1);
  for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
    const Rat mid = (cand[i] + cand[i + 1]) / 2;
    for (const auto& s : {cand[i], mid})
      if (s * 2 <= iv.width() && holds(s) != holds_both_ends(s)) v.fail("oracle ends disagree");
  }
  if (holds(Rat(0))) return {true, Rat(0), false};
  for (std::size_t i = 0; i + 1 < cand.size(); ++i) {
    const Rat mid = (cand[i] + cand[i + 1]) / 2;
    if (holds(mid) || holds(cand[i])) {
      const Rat sigma = cand[i];
      if (sigma * 2 > iv.width()) return {false, Rat(0), false};
      return {true, sigma, !holds(sigma)};
    }
  }
  if (holds(cand.back())) return {cand.back() * 2 <= iv.width(), cand.back(), false};
  return {false, Rat(0), false};
}

std::string describe(const LaurentVal& h, const RadiusInterval& iv, std::int64_t p) {
  std::ostringstream os;
  os << " (p=" << p << ", [" << to_string(iv.lo) << ", " << to_string(iv.hi) << "], h:";
  for (const auto& [k, w] : h.terms()) os << " " << k << "->" << to_string(w);
  os << ")";
  return os.str();
}

Verdict riemann_step() {
  Verdict v;
  gen::Rng rng(10010);
  const std::vector<std::int64_t> primes{2, 3, 5, 7};
  int possible = 0;
  for (int t = 0; t < 50; ++t) {
    const auto iv = gen::interval(rng);
    const auto u = gen::unit(rng, iv);
    const auto p = primes[t % primes.size()];
    const auto dec = unit_decompose(u, iv);
    if (!dec) {
      v.fail("unit " + std::to_string(t) + " not recognized");
      continue;
    }
    // u = gamma xi^n (1 + h): rebuild u from the decomposition.
    LaurentVal rebuilt = LaurentVal::monomial(dec->n, dec->c);
    for (const auto& [k, w] : dec->h.terms()) rebuilt.set(k + dec->n, w + dec->c);
    if (!(rebuilt == u)) v.fail("unit " + std::to_string(t) + ": decomposition does not rebuild u");
    const auto got = pth_root_shrink(dec->h, iv, p);
    const auto want = shrink_oracle(dec->h, iv, p, v);
    if (got.has_value() != want.possible) {
      v.fail("unit " + std::to_string(t) + ": feasibility differs" + describe(dec->h, iv, p));
      continue;
    }
    if (got) {
      ++possible;
      if (got->sigma != want.sigma || got->strict != want.strict)
        v.fail("unit " + std::to_string(t) + ": sigma " + to_string(got->sigma) + " vs " + to_string(want.sigma));
    }
  }
  if (possible == 0) v.fail("no feasible instance exercised");
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Kummer wild fixture: upper jump flat part p/(p-1)", 1.0, kummer_upper_jump},
      {2, "Swan vanishing for Kummer sheaves", 1.0, kummer_swan_vanishes},
      {3, "conductor schedule of L(q)", 1.0, lq_schedule},
      {4, "convexity and monotone Swan conductor", 10.0, convex_monotone},
      {5, "break function against the f_qc oracle", 30.0, beta_oracle},
      {6, "discriminant value against the naive Kummer discriminant", 1.0, fuhrer_oracle},
      {7, "break decomposition suite", 60.0, break_suite},
      {8, "tensor rule and conductor bound", 30.0, tensor_rule},
      {9, "Gauss valuation multiplicativity and ultrametric equality", 10.0, gauss_properties},
      {10, "unit decomposition and p-th root shrink", 5.0, riemann_step},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && secs > c.limit_seconds) {
      std::ostringstream os;
      os << "took " << secs << " s, limit " << c.limit_seconds << " s";
      v.fail(os.str());
    }
    if (!v.ok) ++failed;
    std::printf("%s [%2d] %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                v.ok ? "" : ": ", v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
