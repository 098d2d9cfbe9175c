/**
 * @file ramlab/breakdec.hpp
 * @brief Break decomposition of Z/ell^n[H]-modules under a filtered p-group.
 *
 * Given P = P_0 >= P_1 >= ... >= P_n = {1}, all normal in H, the averaging
 * elements e_i = |P_i|^-1 sum_{g in P_i} g are central idempotents of the
 * group ring (ell != p). The module splits along
 *
 *   pi_{-1} = e_0,   pi_i = e_{i+1} (1 - e_i)   (0 <= i < n),
 *
 * so that M_{-1} = M^P, M_i^{P_i} = 0 and P_j acts trivially on M_i for j > i.
 * Ranks are read off modulo ell: the image of an idempotent over the local
 * ring Z/ell^n is free, of the same rank as its reduction.
 */
#pragma once

#include "ramlab/group.hpp"
#include "ramlab/modmat.hpp"
#include "ramlab/report.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramlab {

class BreakError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}
}  // namespace detail

class FilteredRep {
 public:
  FilteredRep(std::shared_ptr<const FiniteGroup> group, std::vector<std::vector<int>> chain, FinRing ring,
              std::vector<ModMatrix> action, std::optional<std::int64_t> p = std::nullopt)
      : group_(std::move(group)), chain_(std::move(chain)), ring_(ring), action_(std::move(action)) {
    for (auto& sub : chain_) std::sort(sub.begin(), sub.end());
    validate(p);
  }

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const std::vector<std::vector<int>>& chain() const { return chain_; }
  const FinRing& ring() const { return ring_; }
  const ModMatrix& action(int g) const { return action_.at(g); }
  const std::vector<ModMatrix>& actions() const { return action_; }
  int dim() const { return action_.front().dim(); }
  std::int64_t p() const { return p_; }
  /// Number of steps n of the filtration (components -1 .. n-1).
  int levels() const { return static_cast<int>(chain_.size()) - 1; }

 private:
  void validate(std::optional<std::int64_t> p) {
    const auto& g = *group_;
    const std::int64_t mod = ring_.modulus();
    if (static_cast<int>(action_.size()) != g.order()) throw BreakError("action must give one matrix per element");
    const int d = action_.front().dim();
    for (const auto& m : action_)
      if (m.dim() != d || m.modulus() != mod) throw BreakError("action matrices must share dimension and modulus");
    if (!(action_[0] == ModMatrix::identity(d, mod))) throw BreakError("identity must act trivially");
    auto check_triple = [&](int a, int b) {
      if (!(action_[g.mul(a, b)] == action_[a] * action_[b])) throw BreakError("action is not a homomorphism");
    };
    if (g.order() <= 64) {
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) check_triple(a, b);
    } else {
      std::mt19937 rng(12345);
      std::uniform_int_distribution<int> pick(0, g.order() - 1);
      for (int t = 0; t < 4096; ++t) check_triple(pick(rng), pick(rng));
    }

    if (chain_.empty()) throw BreakError("filtration chain is empty");
    for (std::size_t k = 0; k < chain_.size(); ++k) {
      if (!g.is_normal_subgroup(chain_[k])) throw BreakError("filtration member is not a normal subgroup");
      if (k > 0 && !std::includes(chain_[k - 1].begin(), chain_[k - 1].end(), chain_[k].begin(), chain_[k].end()))
        throw BreakError("filtration is not descending");
    }
    if (chain_.back() != std::vector<int>{0}) throw BreakError("filtration must end with the trivial subgroup");
    const auto top = static_cast<std::int64_t>(chain_.front().size());
    p_ = p ? *p : (top > 1 ? detail::smallest_prime_factor(top) : 2);
    if (!is_prime(p_)) throw BreakError("p must be prime");
    std::int64_t t = top;
    while (t % p_ == 0) t /= p_;
    if (t != 1) throw BreakError("P_0 is not a p-group");
    if (p_ == ring_.ell) throw BreakError("ell must differ from p");
  }

  std::shared_ptr<const FiniteGroup> group_;
  std::vector<std::vector<int>> chain_;
  FinRing ring_;
  std::vector<ModMatrix> action_;
  std::int64_t p_ = 2;
};

/// |S|^-1 sum_{g in S} rho(g); |S| must be invertible modulo ell.
inline ModMatrix averaging(const FilteredRep& rep, const std::vector<int>& elems) {
  const auto& ring = rep.ring();
  if (static_cast<std::int64_t>(elems.size()) % ring.ell == 0)
    throw BreakError("subgroup order is not invertible in the coefficient ring");
  ModMatrix s(rep.dim(), ring.modulus());
  for (int g : elems) s += rep.action(g);
  return ring.inverse(static_cast<std::int64_t>(elems.size())) * s;
}

/// E_i for the i-th member of the filtration, 0 <= i <= n.
inline ModMatrix idempotent(const FilteredRep& rep, int i) {
  if (i < 0 || i > rep.levels()) throw std::out_of_range("idempotent: filtration index out of range");
  return averaging(rep, rep.chain()[i]);
}

struct BreakDecomp {
  struct Component {
    int index;  // -1 .. n-1
    ModMatrix projector;
    int rank;
  };
  std::vector<Component> components;
  int ring_exponent = 1;

  const Component& at(int index) const {
    for (const auto& c : components)
      if (c.index == index) return c;
    throw std::out_of_range("BreakDecomp: no component with that index");
  }
  /// Lambda-length of a component: n * rank over Z/ell^n.
  int length(int index) const { return ring_exponent * at(index).rank; }
  int total_rank() const {
    int s = 0;
    for (const auto& c : components) s += c.rank;
    return s;
  }
};

inline BreakDecomp break_decompose(const FilteredRep& rep) {
  const int n = rep.levels();
  const auto id = ModMatrix::identity(rep.dim(), rep.ring().modulus());
  std::vector<ModMatrix> e;
  for (int i = 0; i <= n; ++i) e.push_back(idempotent(rep, i));
  BreakDecomp out;
  out.ring_exponent = rep.ring().n;
  out.components.push_back({-1, e[0], e[0].rank_mod(rep.ring().ell)});
  for (int i = 0; i < n; ++i) {
    auto pi = e[i + 1] * (id - e[i]);
    const int r = pi.rank_mod(rep.ring().ell);
    out.components.push_back({i, std::move(pi), r});
  }
  return out;
}

/// Rank of M^S for a subgroup S of order prime to ell.
inline int fixed_rank(const FilteredRep& rep, const std::vector<int>& subgroup) {
  if (!rep.group().is_subgroup(subgroup)) throw BreakError("fixed_rank: not a subgroup");
  return averaging(rep, subgroup).rank_mod(rep.ring().ell);
}

/// Checks the defining properties of a break decomposition by matrix identities.
inline CheckReport verify_break_props(const FilteredRep& rep, const BreakDecomp& dec) {
  CheckReport rep_out;
  const int n = rep.levels();
  const auto id = ModMatrix::identity(rep.dim(), rep.ring().modulus());
  std::vector<ModMatrix> e;
  for (int i = 0; i <= n; ++i) e.push_back(idempotent(rep, i));

  ModMatrix sum(rep.dim(), rep.ring().modulus());
  bool idem = true, orth = true;
  for (const auto& a : dec.components) {
    sum += a.projector;
    idem = idem && a.projector * a.projector == a.projector;
    for (const auto& b : dec.components)
      if (a.index != b.index) orth = orth && (a.projector * b.projector).is_zero();
  }
  rep_out.add("projectors idempotent", idem);
  rep_out.add("projectors orthogonal", orth);
  rep_out.add("projectors sum to identity", sum == id);
  rep_out.add("ranks sum to dimension", dec.total_rank() == rep.dim());

  bool fixed_minus1 = true, killed = true, fixed_above = true;
  for (const auto& c : dec.components) {
    if (c.index == -1) {
      // M_{-1} = M^P: the projector is e_0 itself.
      fixed_minus1 = (e[0] * c.projector == c.projector) && (c.projector * e[0] == e[0]);
    } else {
      killed = killed && (e[c.index] * c.projector).is_zero();
    }
    for (int j = c.index + 1; j <= n; ++j)
      if (j >= 0) fixed_above = fixed_above && e[j] * c.projector == c.projector;
  }
  rep_out.add("M_{-1} = M^P", fixed_minus1);
  rep_out.add("M_i^{P_i} = 0", killed);
  rep_out.add("P_j acts trivially on M_i for j > i", fixed_above);
  return rep_out;
}

inline CheckReport verify_break_props(const FilteredRep& rep) { return verify_break_props(rep, break_decompose(rep)); }

namespace detail {
inline void check_compatible(const FilteredRep& a, const FilteredRep& b) {
  if (!(a.group() == b.group()) || a.chain() != b.chain() || !(a.ring() == b.ring()))
    throw BreakError("representations must share group, filtration and ring");
}
}  // namespace detail

/// M (x) N with the diagonal action.
inline FilteredRep tensor_rep(const FilteredRep& a, const FilteredRep& b) {
  detail::check_compatible(a, b);
  std::vector<ModMatrix> act;
  for (int g = 0; g < a.group().order(); ++g) act.push_back(kron(a.action(g), b.action(g)));
  return FilteredRep(a.group_ptr(), a.chain(), a.ring(), std::move(act), a.p());
}

/// Hom(M, N) acting by X -> rho_N(g) X rho_M(g)^-1, on row-major vec(X).
inline FilteredRep hom_rep(const FilteredRep& a, const FilteredRep& b) {
  detail::check_compatible(a, b);
  std::vector<ModMatrix> act;
  const auto& g = a.group();
  for (int x = 0; x < g.order(); ++x) act.push_back(kron(b.action(x), a.action(g.inv(x)).transpose()));
  return FilteredRep(a.group_ptr(), a.chain(), a.ring(), std::move(act), a.p());
}

namespace detail {
/// Allowed target components for the piece (i, j) of a tensor or hom.
inline bool allowed_target(int i, int j, int k) {
  if (i != j) return k == std::max(i, j);
  return k <= i;
}
}  // namespace detail

/// M_i (x) N_j lies in (M (x) N)_{max(i,j)} when i != j and in the sum of
/// components <= i when i = j; likewise for Hom(M_i, N_j).
inline CheckReport tensor_breaks_check(const FilteredRep& a, const FilteredRep& b) {
  CheckReport out;
  const auto da = break_decompose(a), db = break_decompose(b);
  const auto t = tensor_rep(a, b);
  const auto dt = break_decompose(t);
  const auto h = hom_rep(a, b);
  const auto dh = break_decompose(h);

  bool tensor_ok = true, tensor_eq_ok = true, hom_ok = true, hom_eq_ok = true;
  for (const auto& ca : da.components)
    for (const auto& cb : db.components) {
      const auto piece = kron(ca.projector, cb.projector);
      const auto hom_piece = kron(cb.projector, ca.projector.transpose());
      for (const auto& ct : dt.components) {
        if (detail::allowed_target(ca.index, cb.index, ct.index)) continue;
        if (!(ct.projector * piece).is_zero()) (ca.index == cb.index ? tensor_eq_ok : tensor_ok) = false;
      }
      for (const auto& ch : dh.components) {
        if (detail::allowed_target(ca.index, cb.index, ch.index)) continue;
        if (!(ch.projector * hom_piece).is_zero()) (ca.index == cb.index ? hom_eq_ok : hom_ok) = false;
      }
    }
  out.add("M_i (x) N_j in (M (x) N)_max(i,j) for i != j", tensor_ok);
  out.add("M_i (x) N_i in sum_{k<=i} (M (x) N)_k", tensor_eq_ok);
  out.add("Hom(M_i, N_j) in Hom_max(i,j) for i != j", hom_ok);
  out.add("Hom(M_i, N_i) in sum_{k<=i} Hom_k", hom_eq_ok);
  return out;
}

/// Reduction of M from Z/ell^n to Z/ell^{n-1}.
inline FilteredRep reduce_rep(const FilteredRep& rep) {
  if (rep.ring().n < 2) throw BreakError("base change needs n >= 2");
  const FinRing smaller(rep.ring().ell, rep.ring().n - 1);
  std::vector<ModMatrix> act;
  for (const auto& m : rep.actions()) act.push_back(m.reduce_to(smaller.modulus()));
  return FilteredRep(rep.group_ptr(), rep.chain(), smaller, std::move(act), rep.p());
}

/// Decomposing and then reducing mod ell^{n-1} agrees with reducing first.
inline CheckReport base_change_check(const FilteredRep& rep) {
  CheckReport out;
  const auto small = reduce_rep(rep);
  const auto big_dec = break_decompose(rep);
  const auto small_dec = break_decompose(small);
  const std::int64_t m = small.ring().modulus();
  bool proj = big_dec.components.size() == small_dec.components.size();
  bool ranks = proj;
  for (std::size_t k = 0; proj && k < big_dec.components.size(); ++k) {
    proj = proj && big_dec.components[k].projector.reduce_to(m) == small_dec.components[k].projector;
    ranks = ranks && big_dec.components[k].rank == small_dec.components[k].rank;
  }
  out.add("projectors commute with reduction", proj);
  out.add("ranks invariant under reduction", ranks);
  return out;
}

/// X -> |P_0|^-1 sum_{g in P_0} rho(g) X rho(g)^-1: projection onto P-equivariant endomorphisms.
inline ModMatrix equivariant_average(const FilteredRep& rep, const ModMatrix& x) {
  const auto& p0 = rep.chain().front();
  ModMatrix s(rep.dim(), rep.ring().modulus());
  for (int g : p0) s += rep.action(g) * x * rep.action(rep.group().inv(g));
  return rep.ring().inverse(static_cast<std::int64_t>(p0.size())) * s;
}

/// Equivariant homs between distinct components vanish: pi_i A(X) pi_j = 0
/// for every basis matrix X.
inline CheckReport hom_vanishing_check(const FilteredRep& rep, const BreakDecomp& dec) {
  CheckReport out;
  bool ok = true;
  const int d = rep.dim();
  for (int a = 0; a < d && ok; ++a)
    for (int b = 0; b < d && ok; ++b) {
      ModMatrix x(d, rep.ring().modulus());
      x.set(a, b, 1);
      const auto phi = equivariant_average(rep, x);
      for (const auto& ci : dec.components)
        for (const auto& cj : dec.components)
          if (ci.index != cj.index && !(ci.projector * phi * cj.projector).is_zero()) ok = false;
    }
  out.add("Hom_P(M_j, M_i) = 0 for i != j", ok);
  return out;
}

}  // namespace ramlab
