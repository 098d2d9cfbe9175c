/**
 * @file ramlab/modmat.hpp
 * @brief Dense square matrices over Z/ell^n.
 */
#pragma once

#include "ramlab/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramlab {

/// The ring Z/ell^n.
struct FinRing {
  std::int64_t ell = 2;
  int n = 1;

  FinRing() = default;
  FinRing(std::int64_t ell_, int n_) : ell(ell_), n(n_) {
    if (!is_prime(ell)) throw std::invalid_argument("FinRing: ell must be prime");
    if (n < 1) throw std::invalid_argument("FinRing: n must be >= 1");
    std::int64_t m = 1;
    for (int k = 0; k < n; ++k) {
      if (m > (std::int64_t{1} << 30) / ell) throw std::invalid_argument("FinRing: modulus too large");
      m *= ell;
    }
  }

  std::int64_t modulus() const {
    std::int64_t m = 1;
    for (int k = 0; k < n; ++k) m *= ell;
    return m;
  }

  std::int64_t reduce(std::int64_t x) const {
    const std::int64_t m = modulus();
    x %= m;
    return x < 0 ? x + m : x;
  }

  /// Inverse of a unit (an element prime to ell).
  std::int64_t inverse(std::int64_t a) const {
    const std::int64_t m = modulus();
    std::int64_t r0 = m, r1 = reduce(a), s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      s0 -= q * s1;
      std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("FinRing: element is not a unit");
    return reduce(s0);
  }

  friend bool operator==(const FinRing&, const FinRing&) = default;
};

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int dim, std::int64_t modulus) : dim_(dim), mod_(modulus), a_(static_cast<std::size_t>(dim) * dim, 0) {}
  ModMatrix(std::int64_t modulus, const std::vector<std::vector<std::int64_t>>& rows)
      : ModMatrix(static_cast<int>(rows.size()), modulus) {
    for (int i = 0; i < dim_; ++i) {
      if (static_cast<int>(rows[i].size()) != dim_) throw std::invalid_argument("ModMatrix: matrix is not square");
      for (int j = 0; j < dim_; ++j) set(i, j, rows[i][j]);
    }
  }

  static ModMatrix identity(int dim, std::int64_t modulus) {
    ModMatrix m(dim, modulus);
    for (int i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
  }

  int dim() const { return dim_; }
  std::int64_t modulus() const { return mod_; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, std::int64_t v) {
    v %= mod_;
    a_[static_cast<std::size_t>(i) * dim_ + j] = v < 0 ? v + mod_ : v;
  }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(dim_, std::vector<std::int64_t>(dim_));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (auto v : a_)
      if (v != 0) return false;
    return true;
  }

  friend ModMatrix operator+(const ModMatrix& x, const ModMatrix& y) {
    x.check(y);
    ModMatrix r(x.dim_, x.mod_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = (x.a_[k] + y.a_[k]) % x.mod_;
    return r;
  }
  friend ModMatrix operator-(const ModMatrix& x, const ModMatrix& y) {
    x.check(y);
    ModMatrix r(x.dim_, x.mod_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = (x.a_[k] - y.a_[k] + x.mod_) % x.mod_;
    return r;
  }
  friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
    x.check(y);
    const int d = x.dim_;
    ModMatrix r(d, x.mod_);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const std::int64_t xik = x(i, k);
        if (xik == 0) continue;
        for (int j = 0; j < d; ++j)
          r.a_[static_cast<std::size_t>(i) * d + j] = (r.a_[static_cast<std::size_t>(i) * d + j] + xik * y(k, j)) % x.mod_;
      }
    return r;
  }
  friend ModMatrix operator*(std::int64_t c, const ModMatrix& x) {
    ModMatrix r(x.dim_, x.mod_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) {
      const std::int64_t v = (c % x.mod_) * x.a_[k] % x.mod_;
      r.a_[k] = v < 0 ? v + x.mod_ : v;
    }
    return r;
  }
  ModMatrix& operator+=(const ModMatrix& y) { return *this = *this + y; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

  ModMatrix transpose() const {
    ModMatrix r(dim_, mod_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r.set(j, i, (*this)(i, j));
    return r;
  }

  /// Entrywise reduction to a divisor of the modulus.
  ModMatrix reduce_to(std::int64_t new_mod) const {
    if (new_mod < 1 || mod_ % new_mod != 0) throw std::invalid_argument("ModMatrix: reduction to a non-divisor modulus");
    ModMatrix r(dim_, new_mod);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] % new_mod;
    return r;
  }

  /// Rank of the reduction modulo the prime ell.
  int rank_mod(std::int64_t ell) const {
    auto m = reduce_to(ell).rows();
    int rank = 0;
    for (int col = 0; col < dim_ && rank < dim_; ++col) {
      int piv = -1;
      for (int r = rank; r < dim_; ++r)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(m[piv], m[rank]);
      const std::int64_t inv = FinRing(ell, 1).inverse(m[rank][col]);
      for (int j = 0; j < dim_; ++j) m[rank][j] = m[rank][j] * inv % ell;
      for (int r = 0; r < dim_; ++r) {
        if (r == rank || m[r][col] == 0) continue;
        const std::int64_t f = m[r][col];
        for (int j = 0; j < dim_; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % ell + ell) % ell;
      }
      ++rank;
    }
    return rank;
  }

 private:
  void check(const ModMatrix& y) const {
    if (dim_ != y.dim_ || mod_ != y.mod_) throw std::invalid_argument("ModMatrix: shape or modulus mismatch");
  }

  int dim_ = 0;
  std::int64_t mod_ = 1;
  std::vector<std::int64_t> a_;
};

/// Kronecker product, row-major: (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l].
inline ModMatrix kron(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("kron: modulus mismatch");
  const int da = a.dim(), db = b.dim();
  ModMatrix r(da * db, a.modulus());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const std::int64_t aij = a(i, j);
      if (aij == 0) continue;
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) r.set(i * db + k, j * db + l, aij * b(k, l));
    }
  return r;
}

}  // namespace ramlab
