/**
 * @file ramlab/group.hpp
 * @brief Finite groups given by Cayley tables, and rational class functions.
 */
#pragma once

#include "ramlab/rational.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramlab {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Elements are 0..order-1 and 0 is the identity.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<int>>;

  explicit FiniteGroup(Table table, std::vector<std::string> labels = {})
      : table_(std::move(table)), labels_(std::move(labels)) {
    validate();
    build_classes();
  }

  static FiniteGroup cyclic(int n) {
    if (n < 1) throw GroupError("cyclic group of order < 1");
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
  }

  static FiniteGroup trivial() { return cyclic(1); }

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  const Table& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
  }

  /// Conjugacy classes, each sorted, ordered by their minimal element.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_index_[a]; }

  bool is_subgroup(const std::vector<int>& elems) const {
    const std::set<int> s(elems.begin(), elems.end());
    if (!s.count(0)) return false;
    for (int a : s) {
      if (a < 0 || a >= order()) return false;
      for (int b : s)
        if (!s.count(mul(a, inv(b)))) return false;
    }
    return true;
  }

  bool is_normal_subgroup(const std::vector<int>& elems) const {
    if (!is_subgroup(elems)) return false;
    const std::set<int> s(elems.begin(), elems.end());
    for (int g = 0; g < order(); ++g)
      for (int h : s)
        if (!s.count(mul(mul(g, h), inv(g)))) return false;
    return true;
  }

  /// Smallest subgroup containing the given elements.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const {
    std::set<int> s{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int g : gens) {
          const int y = mul(x, g);
          if (s.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return {s.begin(), s.end()};
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  void validate() {
    const int n = order();
    if (n < 1) throw GroupError("group of order 0");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw GroupError("Cayley table is not square");
      for (int x : row)
        if (x < 0 || x >= n) throw GroupError("Cayley table entry out of range");
    }
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n) throw GroupError("label count mismatch");
    for (int a = 0; a < n; ++a) {
      if (table_[0][a] != a || table_[a][0] != a) throw GroupError("element 0 is not the identity");
      std::vector<char> seen(n, 0);
      for (int b = 0; b < n; ++b) {
        if (seen[table_[a][b]]) throw GroupError("Cayley table row is not a permutation");
        seen[table_[a][b]] = 1;
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw GroupError("Cayley table is not associative");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table_[a][b] == 0) inverse_[a] = b;
  }

  void build_classes() {
    const int n = order();
    class_index_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      if (class_index_[a] >= 0) continue;
      std::set<int> cls;
      for (int g = 0; g < n; ++g) cls.insert(mul(mul(g, a), inv(g)));
      const int idx = static_cast<int>(classes_.size());
      for (int x : cls) class_index_[x] = idx;
      classes_.emplace_back(cls.begin(), cls.end());
    }
  }

  Table table_;
  std::vector<std::string> labels_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_index_;
};

/// Rational-valued class function. Stored per element; constancy on classes
/// is checked at construction.
class ClassFun {
 public:
  ClassFun(std::shared_ptr<const FiniteGroup> group, std::vector<Rat> values)
      : group_(std::move(group)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != group_->order()) throw GroupError("class function size mismatch");
    for (const auto& cls : group_->classes())
      for (int x : cls)
        if (values_[x] != values_[cls.front()]) throw GroupError("function is not constant on conjugacy classes");
  }

  static ClassFun zero(std::shared_ptr<const FiniteGroup> g) {
    const int n = g->order();
    return ClassFun(std::move(g), std::vector<Rat>(n, Rat(0)));
  }
  static ClassFun trivial(std::shared_ptr<const FiniteGroup> g) {
    const int n = g->order();
    return ClassFun(std::move(g), std::vector<Rat>(n, Rat(1)));
  }
  static ClassFun regular(std::shared_ptr<const FiniteGroup> g) {
    std::vector<Rat> v(g->order(), Rat(0));
    v[0] = Rat(g->order());
    return ClassFun(std::move(g), std::move(v));
  }
  /// reg - 1.
  static ClassFun augmentation(std::shared_ptr<const FiniteGroup> g) {
    std::vector<Rat> v(g->order(), Rat(-1));
    v[0] = Rat(g->order() - 1);
    return ClassFun(std::move(g), std::move(v));
  }

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const Rat& operator()(int g) const { return values_.at(g); }
  const std::vector<Rat>& values() const { return values_; }

  /// One value per conjugacy class, in class order.
  std::vector<Rat> class_values() const {
    std::vector<Rat> out;
    for (const auto& cls : group_->classes()) out.push_back(values_[cls.front()]);
    return out;
  }

  ClassFun& operator+=(const ClassFun& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  ClassFun& operator-=(const ClassFun& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  ClassFun& operator*=(const Rat& c) {
    for (auto& v : values_) v *= c;
    return *this;
  }
  friend ClassFun operator+(ClassFun a, const ClassFun& b) { return a += b; }
  friend ClassFun operator-(ClassFun a, const ClassFun& b) { return a -= b; }
  friend ClassFun operator*(ClassFun a, const Rat& c) { return a *= c; }

  friend bool operator==(const ClassFun& a, const ClassFun& b) {
    return *a.group_ == *b.group_ && a.values_ == b.values_;
  }

  void check_same(const ClassFun& o) const {
    if (group_ != o.group_ && !(*group_ == *o.group_)) throw GroupError("class functions on different groups");
  }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Rat> values_;
};

/// <a, b> = (1/|G|) sum_g a(g) b(g^-1).
inline Rat inner(const ClassFun& a, const ClassFun& b) {
  a.check_same(b);
  const auto& g = a.group();
  Rat s(0);
  for (int x = 0; x < g.order(); ++x) s += a(x) * b(g.inv(x));
  return s / g.order();
}

/// Induction from the subgroup given as a list of elements of G, of a
/// function f defined on those elements (indexed by element of G).
template <class F>
ClassFun induce_from_elements(std::shared_ptr<const FiniteGroup> g, const std::vector<int>& subgroup, F&& f) {
  std::vector<char> in(g->order(), 0);
  for (int h : subgroup) in[h] = 1;
  std::vector<Rat> vals(g->order(), Rat(0));
  for (int x = 0; x < g->order(); ++x) {
    Rat s(0);
    for (int t = 0; t < g->order(); ++t) {
      const int c = g->mul(g->mul(g->inv(t), x), t);
      if (in[c]) s += f(c);
    }
    vals[x] = s / static_cast<int>(subgroup.size());
  }
  return ClassFun(std::move(g), std::move(vals));
}

/// Ind_H^G cf, where embedding[h] is the image in G of element h of H.
inline ClassFun induce(const ClassFun& cf, std::shared_ptr<const FiniteGroup> g, const std::vector<int>& embedding) {
  const auto& h = cf.group();
  if (static_cast<int>(embedding.size()) != h.order()) throw GroupError("embedding size mismatch");
  std::vector<int> back(g->order(), -1);
  for (int a = 0; a < h.order(); ++a) {
    const int e = embedding[a];
    if (e < 0 || e >= g->order()) throw GroupError("embedding out of range");
    if (back[e] >= 0) throw GroupError("embedding is not injective");
    back[e] = a;
  }
  for (int a = 0; a < h.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      if (embedding[h.mul(a, b)] != g->mul(embedding[a], embedding[b]))
        throw GroupError("embedding is not a homomorphism");
  return induce_from_elements(std::move(g), embedding, [&](int c) { return cf(back[c]); });
}

/// Permutation character C[G/H] = Ind_H^G 1.
inline ClassFun permutation_character(std::shared_ptr<const FiniteGroup> g, const std::vector<int>& subgroup) {
  return induce_from_elements(std::move(g), subgroup, [](int) { return Rat(1); });
}

/// Subgroup given as G-elements, turned into a standalone group plus embedding.
inline std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(const FiniteGroup& g, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  if (!g.is_subgroup(elems)) throw GroupError("elements do not form a subgroup");
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  FiniteGroup::Table t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = pos[g.mul(elems[a], elems[b])];
  return {FiniteGroup(std::move(t)), elems};
}

}  // namespace ramlab
