#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "perm.hpp"

namespace skewbrace {

// A finite group on {0..n-1} given by its Cayley table. The identity is
// always element 0; every constructor re-indexes to enforce this.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  int order() const { return n_; }
  int op(int x, int y) const { return table_[static_cast<size_t>(x) * n_ + y]; }
  int inv(int x) const { return inv_[static_cast<size_t>(x)]; }
  int element_order(int x) const { return elt_order_[static_cast<size_t>(x)]; }

  // x^k, k may be negative.
  int power(int x, int k) const {
    if (k < 0) {
      x = inv(x);
      k = -k;
    }
    int r = 0;
    while (k > 0) {
      if (k & 1) r = op(r, x);
      x = op(x, x);
      k >>= 1;
    }
    return r;
  }

  int conj(int g, int x) const { return op(op(g, x), inv(g)); }

  bool is_abelian() const {
    for (int x = 0; x < n_; ++x)
      for (int y = x + 1; y < n_; ++y)
        if (op(x, y) != op(y, x)) return false;
    return true;
  }

  const std::vector<int>& flat_table() const { return table_; }

  std::vector<std::vector<int>> table() const {
    std::vector<std::vector<int>> rows(static_cast<size_t>(n_));
    for (int x = 0; x < n_; ++x)
      rows[static_cast<size_t>(x)] =
          std::vector<int>(table_.begin() + static_cast<size_t>(x) * n_,
                           table_.begin() + static_cast<size_t>(x + 1) * n_);
    return rows;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

  friend FiniteGroup make_group(const std::vector<std::vector<int>>& rows);

 private:
  void finalize() {
    inv_.assign(static_cast<size_t>(n_), 0);
    elt_order_.assign(static_cast<size_t>(n_), 0);
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y)
        if (op(x, y) == 0) inv_[static_cast<size_t>(x)] = y;
      int k = 1, p = x;
      while (p != 0) {
        p = op(p, x);
        ++k;
      }
      elt_order_[static_cast<size_t>(x)] = x == 0 ? 1 : k;
    }
  }

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;
};

// Validates a Cayley table: closed, identity at 0, two-sided inverses,
// associative. Errors name the first violating cell or triple.
inline FiniteGroup make_group(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  require(n >= 1, errc::not_square, "empty table");
  for (int x = 0; x < n; ++x)
    require(static_cast<int>(rows[static_cast<size_t>(x)].size()) == n, errc::not_square,
            "row " + std::to_string(x) + " has length " +
                std::to_string(rows[static_cast<size_t>(x)].size()) + ", expected " +
                std::to_string(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = rows[static_cast<size_t>(x)][static_cast<size_t>(y)];
      require(v >= 0 && v < n, errc::not_closed,
              "NotClosed: entry (" + std::to_string(x) + "," + std::to_string(y) +
                  ") = " + std::to_string(v) + " out of range");
    }
  for (int y = 0; y < n; ++y)
    require(rows[0][static_cast<size_t>(y)] == y, errc::no_identity_at_zero,
            "NoIdentityAtZero: table[0][" + std::to_string(y) + "] != " + std::to_string(y));
  for (int x = 0; x < n; ++x)
    require(rows[static_cast<size_t>(x)][0] == x, errc::no_identity_at_zero,
            "NoIdentityAtZero: table[" + std::to_string(x) + "][0] != " + std::to_string(x));
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      found = rows[static_cast<size_t>(x)][static_cast<size_t>(y)] == 0 &&
              rows[static_cast<size_t>(y)][static_cast<size_t>(x)] == 0;
    require(found, errc::no_inverse, "NoInverse: element " + std::to_string(x));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int xy = rows[static_cast<size_t>(x)][static_cast<size_t>(y)];
        int yz = rows[static_cast<size_t>(y)][static_cast<size_t>(z)];
        require(rows[static_cast<size_t>(xy)][static_cast<size_t>(z)] ==
                    rows[static_cast<size_t>(x)][static_cast<size_t>(yz)],
                errc::not_associative,
                "NotAssociative: triple (" + std::to_string(x) + "," + std::to_string(y) +
                    "," + std::to_string(z) + ")");
      }

  FiniteGroup g;
  g.n_ = n;
  g.table_.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) g.table_.insert(g.table_.end(), row.begin(), row.end());
  g.finalize();
  return g;
}

inline FiniteGroup make_group_flat(int n, std::vector<int> flat) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(n));
  require(static_cast<int>(flat.size()) == n * n, errc::not_square, "flat table size mismatch");
  for (int x = 0; x < n; ++x)
    rows[static_cast<size_t>(x)] = std::vector<int>(flat.begin() + static_cast<size_t>(x) * n,
                                                    flat.begin() + static_cast<size_t>(x + 1) * n);
  return make_group(rows);
}

inline FiniteGroup cyclic_group(int n) {
  require(n >= 1, errc::bad_input, "cyclic_group: order must be positive");
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = (x + y) % n;
  return make_group(rows);
}

// Dihedral group of order 2m: indices i < m are rotations r^i, m+i are
// reflections s r^i.
inline FiniteGroup dihedral_group(int m) {
  require(m >= 1, errc::bad_input, "dihedral_group: m must be positive");
  const int n = 2 * m;
  auto idx = [m](int refl, int i) { return refl * m + ((i % m) + m) % m; };
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          // (s^j1 r^i1)(s^j2 r^i2) = s^(j1+j2) r^(i2 + (-1)^j2 i1)
          int j = (j1 + j2) % 2;
          int i = j2 == 0 ? i1 + i2 : i2 - i1;
          rows[static_cast<size_t>(idx(j1, i1))][static_cast<size_t>(idx(j2, i2))] = idx(j, i);
        }
  return make_group(rows);
}

// Dicyclic group of order 4m: a of order 2m, b with b^2 = a^m and
// b a b^{-1} = a^{-1}. Index of a^i b^j is 2i + j.
inline FiniteGroup dicyclic_group(int m) {
  require(m >= 1, errc::bad_input, "dicyclic_group: m must be positive");
  const int two_m = 2 * m;
  const int n = 4 * m;
  auto idx = [two_m](int i, int j) { return 2 * (((i % two_m) + two_m) % two_m) + j; };
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i1 = 0; i1 < two_m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < two_m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int v;
          if (j1 == 0)
            v = idx(i1 + i2, j2);
          else if (j2 == 0)
            v = idx(i1 - i2, 1);
          else
            v = idx(i1 - i2 + m, 0);
          rows[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] = v;
        }
  return make_group(rows);
}

// Pair encoding for product groups: (a, b) -> a * |B| + b.
inline int pair_code(int a, int b, int b_order) { return a * b_order + b; }

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  const int n = A.order() * B.order();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a1 = 0; a1 < A.order(); ++a1)
    for (int b1 = 0; b1 < B.order(); ++b1)
      for (int a2 = 0; a2 < A.order(); ++a2)
        for (int b2 = 0; b2 < B.order(); ++b2)
          rows[static_cast<size_t>(pair_code(a1, b1, B.order()))]
              [static_cast<size_t>(pair_code(a2, b2, B.order()))] =
                  pair_code(A.op(a1, a2), B.op(b1, b2), B.order());
  return make_group(rows);
}

inline bool is_automorphism_of(const FiniteGroup& G, const Perm& f) {
  if (f.degree() != G.order() || f[0] != 0) return false;
  for (int x = 0; x < G.order(); ++x)
    for (int y = 0; y < G.order(); ++y)
      if (f[G.op(x, y)] != G.op(f[x], f[y])) return false;
  return true;
}

// A x| B with action act[b] an automorphism of A; act must be a
// homomorphism from B. Table: (a,b)(a',b') = (a act_b(a'), b b').
inline FiniteGroup semidirect_product_group(const FiniteGroup& A, const FiniteGroup& B,
                                            const std::vector<Perm>& act) {
  require(static_cast<int>(act.size()) == B.order(), errc::not_an_action,
          "NotAnAction: expected one permutation of A per element of B");
  for (int b = 0; b < B.order(); ++b)
    require(is_automorphism_of(A, act[static_cast<size_t>(b)]), errc::not_an_action,
            "NotAnAction: image of " + std::to_string(b) + " is not an automorphism of A");
  for (int b1 = 0; b1 < B.order(); ++b1)
    for (int b2 = 0; b2 < B.order(); ++b2)
      require(act[static_cast<size_t>(B.op(b1, b2))] ==
                  compose(act[static_cast<size_t>(b1)], act[static_cast<size_t>(b2)]),
              errc::not_an_action, "NotAnAction: act is not a homomorphism at (" +
                                       std::to_string(b1) + "," + std::to_string(b2) + ")");
  const int n = A.order() * B.order();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a1 = 0; a1 < A.order(); ++a1)
    for (int b1 = 0; b1 < B.order(); ++b1)
      for (int a2 = 0; a2 < A.order(); ++a2)
        for (int b2 = 0; b2 < B.order(); ++b2)
          rows[static_cast<size_t>(pair_code(a1, b1, B.order()))]
              [static_cast<size_t>(pair_code(a2, b2, B.order()))] =
                  pair_code(A.op(a1, act[static_cast<size_t>(b1)][a2]), B.op(b1, b2), B.order());
  return make_group(rows);
}

// ---- subsets and subgroups -------------------------------------------------

inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& H) {
  if (H.empty()) return false;
  std::vector<char> in(static_cast<size_t>(G.order()), 0);
  for (int x : H) {
    if (x < 0 || x >= G.order()) return false;
    in[static_cast<size_t>(x)] = 1;
  }
  if (!in[0]) return false;
  for (int x : H)
    for (int y : H)
      if (!in[static_cast<size_t>(G.op(x, y))]) return false;
  return true;
}

inline std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<size_t>(G.order()), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (int g : gens)
    if (!in[static_cast<size_t>(g)]) {
      in[static_cast<size_t>(g)] = 1;
      elems.push_back(g);
    }
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j) {
      int p = G.op(elems[i], elems[j]);
      if (!in[static_cast<size_t>(p)]) {
        in[static_cast<size_t>(p)] = 1;
        elems.push_back(p);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// All subgroups, found by closing generated subsets; results sorted.
inline std::vector<std::vector<int>> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> triv{0};
  seen.insert(triv);
  queue.push_back(triv);
  for (size_t i = 0; i < queue.size(); ++i) {
    std::vector<int> h = queue[i];
    for (int g = 1; g < G.order(); ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      std::vector<int> gens = h;
      gens.push_back(g);
      std::vector<int> k = generated_subgroup(G, gens);
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  return out;
}

inline std::vector<std::vector<int>> subgroups_of_order(const FiniteGroup& G, int k) {
  std::vector<std::vector<int>> out;
  if (k < 1 || G.order() % k != 0) return out;
  for (auto& h : all_subgroups(G))
    if (static_cast<int>(h.size()) == k) out.push_back(h);
  return out;
}

inline bool is_normal(const FiniteGroup& G, const std::vector<int>& H) {
  require(is_subgroup(G, H), errc::not_a_subgroup, "NotASubgroup");
  std::vector<char> in(static_cast<size_t>(G.order()), 0);
  for (int x : H) in[static_cast<size_t>(x)] = 1;
  for (int g = 0; g < G.order(); ++g)
    for (int x : H)
      if (!in[static_cast<size_t>(G.conj(g, x))]) return false;
  return true;
}

// The subgroup as a group in its own right; local index = position in the
// sorted element list.
inline FiniteGroup restrict_to_subgroup(const FiniteGroup& G, const std::vector<int>& H) {
  require(is_subgroup(G, H), errc::not_a_subgroup, "NotASubgroup");
  std::vector<int> sorted = H;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> local(static_cast<size_t>(G.order()), -1);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    local[static_cast<size_t>(sorted[static_cast<size_t>(i)])] = i;
  const int m = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> rows(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          local[static_cast<size_t>(G.op(sorted[static_cast<size_t>(i)], sorted[static_cast<size_t>(j)]))];
  return make_group(rows);
}

// Greedy deterministic generating chain: repeatedly adjoin the smallest
// element outside the generated subgroup.
inline std::vector<int> generating_chain(const FiniteGroup& G) {
  std::vector<int> gens;
  std::vector<int> sub{0};
  while (static_cast<int>(sub.size()) < G.order()) {
    int g = 0;
    for (int x = 1; x < G.order(); ++x)
      if (!std::binary_search(sub.begin(), sub.end(), x)) {
        g = x;
        break;
      }
    gens.push_back(g);
    sub = generated_subgroup(G, gens);
  }
  return gens;
}

}  // namespace skewbrace
