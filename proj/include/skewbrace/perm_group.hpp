#pragma once

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "perm.hpp"

namespace skewbrace {

// A permutation group materialized as its complete, sorted element list.
// Also serves as the permutation-set type of the regular-subgroup side;
// closure is always asserted.
class PermGroup {
 public:
  PermGroup() = default;

  // Sorts, dedups, validates identity / closure / inverses.
  static PermGroup from_elements(std::vector<Perm> elems) {
    require(!elems.empty(), errc::bad_input, "empty permutation set");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    const int deg = elems.front().degree();
    for (const Perm& p : elems)
      require(p.degree() == deg, errc::bad_input, "mixed permutation degrees");
    PermGroup g;
    g.deg_ = deg;
    g.elems_ = std::move(elems);
    require(g.contains(Perm::identity(deg)), errc::bad_input,
            "permutation set lacks the identity");
    for (const Perm& p : g.elems_) {
      require(g.contains(p.inverse()), errc::bad_input,
              "permutation set not closed under inverse");
      for (const Perm& q : g.elems_)
        require(g.contains(compose(p, q)), errc::bad_input,
                "permutation set not closed under composition");
    }
    return g;
  }

  int degree() const { return deg_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<Perm>& elements() const { return elems_; }
  const Perm& element(int i) const { return elems_[static_cast<size_t>(i)]; }

  int index_of(const Perm& p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || *it != p) return -1;
    return static_cast<int>(it - elems_.begin());
  }

  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  // Cayley table in the sorted element order. The identity is the
  // lexicographically smallest permutation, so it lands at index 0.
  FiniteGroup to_group() const {
    const int m = order();
    std::vector<std::vector<int>> rows(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int k = index_of(compose(elems_[static_cast<size_t>(i)], elems_[static_cast<size_t>(j)]));
        ensure(k >= 0, "permutation group closure");
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
      }
    return make_group(rows);
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.elems_ == b.elems_;
  }

 private:
  int deg_ = 0;
  std::vector<Perm> elems_;
};

// lambda(g)[x] = g x, indexed by g.
inline std::vector<Perm> left_translations(const FiniteGroup& G) {
  std::vector<Perm> out;
  out.reserve(static_cast<size_t>(G.order()));
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> m(static_cast<size_t>(G.order()));
    for (int x = 0; x < G.order(); ++x) m[static_cast<size_t>(x)] = G.op(g, x);
    out.emplace_back(Perm::unchecked{}, std::move(m));
  }
  return out;
}

// rho(g)[x] = x g^{-1}, indexed by g.
inline std::vector<Perm> right_translations(const FiniteGroup& G) {
  std::vector<Perm> out;
  out.reserve(static_cast<size_t>(G.order()));
  for (int g = 0; g < G.order(); ++g) {
    std::vector<int> m(static_cast<size_t>(G.order()));
    for (int x = 0; x < G.order(); ++x) m[static_cast<size_t>(x)] = G.op(x, G.inv(g));
    out.emplace_back(Perm::unchecked{}, std::move(m));
  }
  return out;
}

inline PermGroup left_regular(const FiniteGroup& G) {
  return PermGroup::from_elements(left_translations(G));
}

inline PermGroup right_regular(const FiniteGroup& G) {
  return PermGroup::from_elements(right_translations(G));
}

}  // namespace skewbrace
