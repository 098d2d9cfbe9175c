/**
 * @file ramlab/ramify.hpp
 * @brief Higher ramification data of a finite stabilizer group.
 *
 * A RamPoint records, for every non-identity element sigma of the stabilizer,
 * the additive value of i(sigma) = |t - sigma(t)| where |t| is the largest
 * element gamma0 of the value group below 1. From it we derive the lower
 * jumps, the Herbrand function, Artin and Swan class functions and the
 * discriminant value at the point.
 */
#pragma once

#include "ramlab/group.hpp"
#include "ramlab/valgroup.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ramlab {

class RamificationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_power_of(std::int64_t n, std::int64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

struct RamPoint {
  std::shared_ptr<const FiniteGroup> group;
  /// Indexed by element; entry 0 (the identity) is ignored.
  std::vector<GammaVal> i_map;
  GammaVal gamma0;
  std::int64_t p = 2;
  Rat rho{0};

  RamPoint(std::shared_ptr<const FiniteGroup> g, std::vector<GammaVal> i, GammaVal g0, std::int64_t prime,
           Rat radius = Rat(0))
      : group(std::move(g)), i_map(std::move(i)), gamma0(std::move(g0)), p(prime), rho(std::move(radius)) {
    validate();
  }

  int order() const { return group->order(); }
  const GammaVal& i(int sigma) const { return i_map.at(sigma); }

  /// P_w = {sigma : i(sigma) >= w} u {1}.
  std::vector<int> subgroup_at(const GammaVal& w) const {
    std::vector<int> out{0};
    for (int s = 1; s < order(); ++s)
      if (i(s) >= w) out.push_back(s);
    return out;
  }

 private:
  void validate() {
    if (!is_prime(p)) throw RamificationError("residue characteristic must be prime");
    if (static_cast<int>(i_map.size()) != group->order()) throw RamificationError("i_map size does not match group order");
    if (gamma0.flat != 0 || gamma0.eps <= 0) throw RamificationError("gamma0 must have flat part 0 and eps > 0");
    i_map[0] = GammaVal::zero();
    for (int s = 1; s < order(); ++s)
      if (i(s) < gamma0) throw RamificationError("i(sigma) must be >= gamma0 for sigma != 1");
    for (const auto& cls : group->classes())
      for (int x : cls)
        if (x != 0 && i(x) != i(cls.front())) throw RamificationError("i_map is not constant on conjugacy classes");
    std::vector<GammaVal> values(i_map.begin() + 1, i_map.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (const auto& w : values)
      if (!group->is_normal_subgroup(subgroup_at(w))) throw RamificationError("higher ramification set is not a normal subgroup");
    std::vector<int> wild;
    for (int s = 1; s < order(); ++s)
      if (i(s).flat > 0) wild.push_back(s);
    const auto wild_group = group->generated_subgroup(wild);
    if (!is_power_of(static_cast<std::int64_t>(wild_group.size()), p))
      throw RamificationError("wild elements do not generate a p-subgroup");
  }
};

/// Distinct i-values, increasing in additive order (decreasing multiplicatively).
inline std::vector<GammaVal> jumps_lower(const RamPoint& rp) {
  std::vector<GammaVal> out;
  for (int s = 1; s < rp.order(); ++s)
    if (rp.i(s) > GammaVal::zero()) out.push_back(rp.i(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Herbrand function in additive form: w + sum_{g != 1} min(w, i(g) - gamma0).
inline GammaVal phi_upper(const RamPoint& rp, const GammaVal& w) {
  if (w < GammaVal::zero()) throw std::domain_error("phi_upper: w must be >= 0");
  GammaVal out = w;
  for (int s = 1; s < rp.order(); ++s) out += gv_min(w, rp.i(s) - rp.gamma0);
  return out;
}

inline std::vector<GammaVal> jumps_upper(const RamPoint& rp) {
  std::vector<GammaVal> out;
  for (const auto& w : jumps_lower(rp)) out.push_back(phi_upper(rp, w));
  return out;
}

namespace detail {
/// sum_i o(P_i) * (part(w_i) - part(w_{i-1})) * Ind_{P_i} u_{P_i}, with w_0 = (0, 0).
template <class Part>
ClassFun layered_conductor(const RamPoint& rp, Part part) {
  auto total = ClassFun::zero(rp.group);
  Rat prev(0);
  for (const auto& w : jumps_lower(rp)) {
    const auto sub = rp.subgroup_at(w);
    const int o = static_cast<int>(sub.size());
    const Rat step = part(w) - prev;
    prev = part(w);
    if (step == 0) continue;
    auto ind_u = induce_from_elements(rp.group, sub, [o](int c) { return c == 0 ? Rat(o - 1) : Rat(-1); });
    total += ind_u * (step * o);
  }
  return total;
}
}  // namespace detail

/// a_flat from the filtration: layers weighted by the growth of the flat part.
inline ClassFun artin_flat(const RamPoint& rp) {
  return detail::layered_conductor(rp, [](const GammaVal& w) { return w.flat; });
}

/// a_nat from the filtration (layers weighted by the eps part, starting at 0).
inline ClassFun artin_nat(const RamPoint& rp) {
  return detail::layered_conductor(rp, [](const GammaVal& w) { return w.eps; });
}

/// sw_nat = a_nat - u_{St}.
inline ClassFun swan_nat(const RamPoint& rp) { return artin_nat(rp) - ClassFun::augmentation(rp.group); }

/// a_flat straight from the total Artin conductor: -o * flat(i(sigma)) off the
/// identity, o * sum of flat parts at the identity.
inline ClassFun artin_flat_direct(const RamPoint& rp) {
  const int o = rp.order();
  std::vector<Rat> v(o, Rat(0));
  for (int s = 1; s < o; ++s) {
    v[s] = -Rat(o) * rp.i(s).flat;
    v[0] += Rat(o) * rp.i(s).flat;
  }
  return ClassFun(rp.group, std::move(v));
}

inline ClassFun artin_nat_direct(const RamPoint& rp) {
  const int o = rp.order();
  std::vector<Rat> v(o, Rat(0));
  for (int s = 1; s < o; ++s) {
    v[s] = -Rat(o) * rp.i(s).eps;
    v[0] += Rat(o) * rp.i(s).eps;
  }
  return ClassFun(rp.group, std::move(v));
}

/// Valuation of the different: sum of i(sigma) over sigma != 1.
inline GammaVal different_val(const RamPoint& rp) {
  GammaVal s;
  for (int x = 1; x < rp.order(); ++x) s += rp.i(x);
  return s;
}

/// <a_flat, reg> = a_flat(1): the discriminant function at the point.
inline Rat delta_value(const RamPoint& rp) { return artin_flat(rp)(0); }

/// The Kummer covering xi -> xi^n seen at radius rho: cyclic stabilizer mu_n,
/// i(zeta) = |1 - zeta| * gamma0 with gamma0 = (0, 1/n).
inline RamPoint ram_from_kummer(int n, std::int64_t p, const Rat& rho) {
  if (n < 1) throw std::invalid_argument("ram_from_kummer: n must be >= 1");
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
  const GammaVal g0(Rat(0), Rat(Int(1), Int(n)));
  std::vector<GammaVal> i(n, GammaVal::zero());
  for (int k = 1; k < n; ++k) {
    const int ord = n / std::gcd(n, k);
    Rat flat(0);
    // |1 - zeta| < 1 exactly when the order of zeta is a power of p.
    if (is_power_of(ord, p)) {
      const int j = padic_order(ord, p);
      Int pj(1);
      for (int t = 1; t < j; ++t) pj *= p;
      flat = Rat(Int(1), pj * (p - 1));
    }
    i[k] = GammaVal(flat, g0.eps);
  }
  return RamPoint(std::move(g), std::move(i), g0, p, rho);
}

}  // namespace ramlab
