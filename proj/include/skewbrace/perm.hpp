#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace skewbrace {

// A permutation of {0..deg-1} stored as its image sequence.
class Perm {
 public:
  struct unchecked {};

  Perm() = default;

  explicit Perm(std::vector<int> images) : map_(std::move(images)) {
    std::vector<char> seen(map_.size(), 0);
    for (int v : map_) {
      require(v >= 0 && v < degree() && !seen[v], errc::bad_input,
              "image sequence is not a permutation");
      seen[v] = 1;
    }
  }

  Perm(unchecked, std::vector<int> images) : map_(std::move(images)) {}

  static Perm identity(int deg) {
    std::vector<int> m(static_cast<size_t>(deg));
    std::iota(m.begin(), m.end(), 0);
    return Perm(unchecked{}, std::move(m));
  }

  int degree() const { return static_cast<int>(map_.size()); }
  int operator[](int x) const { return map_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return map_; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (map_[static_cast<size_t>(x)] != x) return false;
    return true;
  }

  Perm inverse() const {
    std::vector<int> m(map_.size());
    for (int x = 0; x < degree(); ++x) m[static_cast<size_t>(map_[static_cast<size_t>(x)])] = x;
    return Perm(unchecked{}, std::move(m));
  }

  int order() const {
    std::vector<char> done(map_.size(), 0);
    long long ord = 1;
    for (int x = 0; x < degree(); ++x) {
      if (done[x]) continue;
      int len = 0;
      for (int y = x; !done[y]; y = map_[static_cast<size_t>(y)]) {
        done[y] = 1;
        ++len;
      }
      ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
  }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> map_;
};

// compose(p, q) applies q first, then p.
inline Perm compose(const Perm& p, const Perm& q) {
  std::vector<int> m(static_cast<size_t>(q.degree()));
  for (int x = 0; x < q.degree(); ++x) m[static_cast<size_t>(x)] = p[q[x]];
  return Perm(Perm::unchecked{}, std::move(m));
}

inline Perm power(const Perm& p, int k) {
  Perm r = Perm::identity(p.degree());
  Perm base = p;
  if (k < 0) {
    base = p.inverse();
    k = -k;
  }
  while (k > 0) {
    if (k & 1) r = compose(r, base);
    base = compose(base, base);
    k >>= 1;
  }
  return r;
}

}  // namespace skewbrace
