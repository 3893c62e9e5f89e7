#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "hom.hpp"
#include "perm.hpp"

namespace skewbrace {

// A skew brace (G, dot, circ): two group structures on one element set,
// shared identity 0, linked by x o (y . z) = (x o y) . x^{-1} . (x o z).
// The gamma function gamma_x(y) = x^{-1} (x o y) is materialized at
// construction and cached.
class SkewBrace {
 public:
  SkewBrace() = default;

  int order() const { return dot_.order(); }
  const FiniteGroup& dot_group() const { return dot_; }
  const FiniteGroup& circ_group() const { return circ_; }

  int dot(int x, int y) const { return dot_.op(x, y); }
  int circ(int x, int y) const { return circ_.op(x, y); }
  int dot_inv(int x) const { return dot_.inv(x); }
  int circ_inv(int x) const { return circ_.inv(x); }

  const Perm& gamma(int x) const { return gamma_[static_cast<size_t>(x)]; }
  int gamma(int x, int y) const { return gamma_[static_cast<size_t>(x)][y]; }
  const std::vector<Perm>& gamma_table() const { return gamma_; }

  friend bool operator==(const SkewBrace& a, const SkewBrace& b) {
    return a.dot_ == b.dot_ && a.circ_ == b.circ_;
  }

  friend SkewBrace make_brace(const FiniteGroup& dot, const FiniteGroup& circ);

 private:
  FiniteGroup dot_;
  FiniteGroup circ_;
  std::vector<Perm> gamma_;
};

// Validates the brace axiom over all triples, then computes gamma and
// asserts that each gamma_x is a dot-automorphism and that
// gamma_{x o y} = gamma_x gamma_y.
inline SkewBrace make_brace(const FiniteGroup& dot, const FiniteGroup& circ) {
  require(dot.order() == circ.order(), errc::bad_input,
          "dot and circ tables have different orders");
  const int n = dot.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        require(circ.op(x, dot.op(y, z)) ==
                    dot.op(dot.op(circ.op(x, y), dot.inv(x)), circ.op(x, z)),
                errc::brace_axiom_fails,
                "BraceAxiomFails: triple (" + std::to_string(x) + "," + std::to_string(y) +
                    "," + std::to_string(z) + ")");

  SkewBrace b;
  b.dot_ = dot;
  b.circ_ = circ;
  b.gamma_.reserve(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    std::vector<int> m(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) m[static_cast<size_t>(y)] = dot.op(dot.inv(x), circ.op(x, y));
    b.gamma_.emplace_back(Perm::unchecked{}, std::move(m));
  }
  ensure(b.gamma_[0].is_identity(), "gamma at the identity");
  for (int x = 0; x < n; ++x)
    ensure(is_automorphism_of(dot, b.gamma_[static_cast<size_t>(x)]),
           "gamma value is a dot-automorphism");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      ensure(b.gamma_[static_cast<size_t>(circ.op(x, y))] ==
                 compose(b.gamma_[static_cast<size_t>(x)], b.gamma_[static_cast<size_t>(y)]),
             "gamma is a homomorphism from the circ group");
  return b;
}

inline SkewBrace make_brace(const std::vector<std::vector<int>>& dot_rows,
                            const std::vector<std::vector<int>>& circ_rows) {
  FiniteGroup dot, circ;
  try {
    dot = make_group(dot_rows);
  } catch (const error& e) {
    fail(errc::dot_not_group, std::string("DotNotGroup: ") + e.what());
  }
  try {
    circ = make_group(circ_rows);
  } catch (const error& e) {
    fail(errc::circ_not_group, std::string("CircNotGroup: ") + e.what());
  }
  return make_brace(dot, circ);
}

inline SkewBrace trivial_brace(const FiniteGroup& G) { return make_brace(G, G); }

inline FiniteGroup opposite_group(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = G.op(y, x);
  return make_group(rows);
}

inline SkewBrace almost_trivial_brace(const FiniteGroup& G) {
  return make_brace(opposite_group(G), G);
}

// Same circ, dot replaced by its opposite; an involution on braces.
inline SkewBrace opposite(const SkewBrace& b) {
  return make_brace(opposite_group(b.dot_group()), b.circ_group());
}

// Flags for a subset of a brace. The implications
// ideal => strong left ideal => left ideal => subgroup under both
// operations hold for every classified subset.
struct IdealClass {
  std::vector<int> subset;
  bool is_subgroup_circ = false;
  bool is_subgroup_dot = false;
  bool is_left_ideal = false;
  bool is_strong_left_ideal = false;
  bool is_ideal = false;
};

inline bool is_gamma_stable(const SkewBrace& b, const std::vector<int>& H) {
  std::vector<char> in(static_cast<size_t>(b.order()), 0);
  for (int x : H) in[static_cast<size_t>(x)] = 1;
  for (int g = 0; g < b.order(); ++g)
    for (int x : H)
      if (!in[static_cast<size_t>(b.gamma(g, x))]) return false;
  return true;
}

// Classifies an arbitrary subset; non-subgroups get all-false flags beyond
// the subgroup checks. A gamma-stable subgroup under either operation is a
// subgroup under both; that remark is asserted, not assumed.
inline IdealClass classify_subset(const SkewBrace& b, const std::vector<int>& subset) {
  IdealClass c;
  c.subset = subset;
  std::sort(c.subset.begin(), c.subset.end());
  c.is_subgroup_circ = is_subgroup(b.circ_group(), c.subset);
  c.is_subgroup_dot = is_subgroup(b.dot_group(), c.subset);
  if (!(c.is_subgroup_circ || c.is_subgroup_dot)) return c;
  if (!is_gamma_stable(b, c.subset)) return c;
  c.is_left_ideal = true;
  ensure(c.is_subgroup_circ && c.is_subgroup_dot,
         "a gamma-stable one-sided subgroup is a subgroup for both operations");
  c.is_strong_left_ideal = is_normal(b.dot_group(), c.subset);
  c.is_ideal = c.is_strong_left_ideal && is_normal(b.circ_group(), c.subset);
  return c;
}

// Classification of every circ-subgroup, sorted by element list.
inline std::vector<IdealClass> left_ideals(const SkewBrace& b) {
  std::vector<IdealClass> out;
  for (const auto& h : all_subgroups(b.circ_group())) out.push_back(classify_subset(b, h));
  return out;
}

// Quotient by an ideal: brace on the circ-cosets of A, cosets ordered by
// minimal representative (the identity coset comes first).
inline SkewBrace quotient_brace(const SkewBrace& b, const std::vector<int>& ideal) {
  IdealClass c = classify_subset(b, ideal);
  require(c.is_ideal, errc::not_an_ideal, "NotAnIdeal");
  const int n = b.order();
  std::vector<int> coset_of(static_cast<size_t>(n), -1);
  std::vector<int> min_rep;
  for (int x = 0; x < n; ++x) {
    if (coset_of[static_cast<size_t>(x)] >= 0) continue;
    int idx = static_cast<int>(min_rep.size());
    min_rep.push_back(x);
    for (int a : c.subset) coset_of[static_cast<size_t>(b.circ(x, a))] = idx;
  }
  // For an ideal, dot-cosets and circ-cosets coincide; assert it.
  for (int x = 0; x < n; ++x)
    for (int a : c.subset)
      ensure(coset_of[static_cast<size_t>(b.dot(x, a))] == coset_of[static_cast<size_t>(x)],
             "dot-cosets of an ideal match its circ-cosets");
  const int m = static_cast<int>(min_rep.size());
  std::vector<std::vector<int>> qdot(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  std::vector<std::vector<int>> qcirc(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      qdot[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          coset_of[static_cast<size_t>(b.dot(min_rep[static_cast<size_t>(i)], min_rep[static_cast<size_t>(j)]))];
      qcirc[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          coset_of[static_cast<size_t>(b.circ(min_rep[static_cast<size_t>(i)], min_rep[static_cast<size_t>(j)]))];
    }
  // Well-definedness: the product coset does not depend on representatives.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ensure(coset_of[static_cast<size_t>(b.dot(x, y))] ==
                 qdot[static_cast<size_t>(coset_of[static_cast<size_t>(x)])]
                     [static_cast<size_t>(coset_of[static_cast<size_t>(y)])],
             "quotient dot is well defined");
      ensure(coset_of[static_cast<size_t>(b.circ(x, y))] ==
                 qcirc[static_cast<size_t>(coset_of[static_cast<size_t>(x)])]
                      [static_cast<size_t>(coset_of[static_cast<size_t>(y)])],
             "quotient circ is well defined");
    }
  return make_brace(qdot, qcirc);
}

// Witness bijection respecting both tables, or empty.
inline std::optional<Perm> brace_isomorphic(const SkewBrace& b1, const SkewBrace& b2) {
  if (b1.order() != b2.order()) return std::nullopt;
  if (element_order_profile(b1.circ_group()) != element_order_profile(b2.circ_group()))
    return std::nullopt;
  if (element_order_profile(b1.dot_group()) != element_order_profile(b2.dot_group()))
    return std::nullopt;
  std::vector<int> gens = generating_chain(b1.circ_group());
  std::optional<Perm> witness;
  detail::search_maps(
      b1.circ_group(), b2.circ_group(), gens,
      [&](int g, int t) {
        return b1.circ_group().element_order(g) == b2.circ_group().element_order(t) &&
               b1.dot_group().element_order(g) == b2.dot_group().element_order(t);
      },
      [&](const std::vector<int>& image) {
        if (!detail::is_bijective_image(image, b1.order())) return true;
        for (int x = 0; x < b1.order(); ++x)
          for (int y = 0; y < b1.order(); ++y)
            if (image[static_cast<size_t>(b1.dot(x, y))] !=
                b2.dot(image[static_cast<size_t>(x)], image[static_cast<size_t>(y)]))
              return true;
        witness = Perm(Perm::unchecked{}, image);
        return false;
      });
  return witness;
}

// Sub-brace on a subset closed under both operations.
inline SkewBrace restrict_brace(const SkewBrace& b, const std::vector<int>& subset) {
  return make_brace(restrict_to_subgroup(b.dot_group(), subset),
                    restrict_to_subgroup(b.circ_group(), subset));
}

}  // namespace skewbrace
