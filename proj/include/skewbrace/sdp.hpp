#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "brace.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "hom.hpp"
#include "perm.hpp"

namespace skewbrace {

// Data for an external semidirect product A x|_theta^phi B:
//   phi[b]   an automorphism of (A, circ), phi a homomorphism from (B, circ);
//   theta[b] an automorphism of (A, dot),  theta a homomorphism from (B, dot).
// Whether phi[b] also respects the dot operation of A is a checked condition
// inside is_admissible, not a type invariant.
struct SdpSpec {
  SkewBrace A;
  SkewBrace B;
  std::vector<Perm> phi;
  std::vector<Perm> theta;
};

inline SdpSpec make_sdp_spec(SkewBrace A, SkewBrace B, std::vector<Perm> phi,
                             std::vector<Perm> theta) {
  require(static_cast<int>(phi.size()) == B.order() &&
              static_cast<int>(theta.size()) == B.order(),
          errc::spec_invalid, "SpecInvalid: need one phi and one theta value per element of B");
  for (int b = 0; b < B.order(); ++b) {
    require(is_automorphism_of(A.circ_group(), phi[static_cast<size_t>(b)]), errc::spec_invalid,
            "SpecInvalid: phi[" + std::to_string(b) + "] is not a circ-automorphism of A");
    require(is_automorphism_of(A.dot_group(), theta[static_cast<size_t>(b)]), errc::spec_invalid,
            "SpecInvalid: theta[" + std::to_string(b) + "] is not a dot-automorphism of A");
  }
  for (int b1 = 0; b1 < B.order(); ++b1)
    for (int b2 = 0; b2 < B.order(); ++b2) {
      require(phi[static_cast<size_t>(B.circ(b1, b2))] ==
                  compose(phi[static_cast<size_t>(b1)], phi[static_cast<size_t>(b2)]),
              errc::spec_invalid, "SpecInvalid: phi does not respect circ on B at (" +
                                      std::to_string(b1) + "," + std::to_string(b2) + ")");
      require(theta[static_cast<size_t>(B.dot(b1, b2))] ==
                  compose(theta[static_cast<size_t>(b1)], theta[static_cast<size_t>(b2)]),
              errc::spec_invalid, "SpecInvalid: theta does not respect dot on B at (" +
                                      std::to_string(b1) + "," + std::to_string(b2) + ")");
    }
  return SdpSpec{std::move(A), std::move(B), std::move(phi), std::move(theta)};
}

struct SdpTables {
  FiniteGroup dot;
  FiniteGroup circ;
};

// The two product tables on A x B under the pair encoding (a,b) -> a|B|+b:
//   (a,b) o (a',b') = (a o phi_b(a'), b o b')
//   (a,b) . (a',b') = (a . theta_b(a'), b . b').
// Both are revalidated as group tables; the brace axiom is deliberately NOT
// checked here, so the admissibility criterion can be tested against full
// brace validation without circularity.
inline SdpTables external_sdp(const SdpSpec& spec) {
  const int na = spec.A.order(), nb = spec.B.order();
  const int n = na * nb;
  std::vector<std::vector<int>> dot(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  std::vector<std::vector<int>> circ(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2) {
          int row = pair_code(a1, b1, nb), col = pair_code(a2, b2, nb);
          dot[static_cast<size_t>(row)][static_cast<size_t>(col)] =
              pair_code(spec.A.dot(a1, spec.theta[static_cast<size_t>(b1)][a2]),
                        spec.B.dot(b1, b2), nb);
          circ[static_cast<size_t>(row)][static_cast<size_t>(col)] =
              pair_code(spec.A.circ(a1, spec.phi[static_cast<size_t>(b1)][a2]),
                        spec.B.circ(b1, b2), nb);
        }
  return SdpTables{make_group(dot), make_group(circ)};
}

struct Admissibility {
  bool admissible = false;
  // Empty when admissible; otherwise names the failed condition:
  // "phi-action", "gamma-theta-commute", or "phi-theta-twist".
  std::string condition;
  int witness1 = -1;
  int witness2 = -1;
  std::string message;
};

// The semidirect-product admissibility criterion. Checks, in order:
//  (i)  every phi_b is also a dot-automorphism of A (B acts on the brace A),
//  (ii) gamma_a theta_b = theta_b gamma_a for all a in A, b in B,
//  (iii) phi_b theta_b' = theta_{b gamma_b(b') b^{-1}} phi_b for all b, b' in B
//        (products and the inverse taken in (B, dot)).
// Witnesses name the first failure in lexicographic order.
inline Admissibility is_admissible(const SdpSpec& spec) {
  Admissibility r;
  for (int b = 0; b < spec.B.order(); ++b)
    if (!is_automorphism_of(spec.A.dot_group(), spec.phi[static_cast<size_t>(b)])) {
      r.condition = "phi-action";
      r.witness1 = b;
      r.message = "phi[" + std::to_string(b) + "] is not a dot-automorphism of A";
      return r;
    }
  for (int a = 0; a < spec.A.order(); ++a)
    for (int b = 0; b < spec.B.order(); ++b)
      if (compose(spec.A.gamma(a), spec.theta[static_cast<size_t>(b)]) !=
          compose(spec.theta[static_cast<size_t>(b)], spec.A.gamma(a))) {
        r.condition = "gamma-theta-commute";
        r.witness1 = a;
        r.witness2 = b;
        r.message = "gamma_a theta_b != theta_b gamma_a at (a,b) = (" + std::to_string(a) +
                    "," + std::to_string(b) + ")";
        return r;
      }
  for (int b = 0; b < spec.B.order(); ++b)
    for (int b2 = 0; b2 < spec.B.order(); ++b2) {
      int twisted = spec.B.dot(spec.B.dot(b, spec.B.gamma(b, b2)), spec.B.dot_inv(b));
      if (compose(spec.phi[static_cast<size_t>(b)], spec.theta[static_cast<size_t>(b2)]) !=
          compose(spec.theta[static_cast<size_t>(twisted)], spec.phi[static_cast<size_t>(b)])) {
        r.condition = "phi-theta-twist";
        r.witness1 = b;
        r.witness2 = b2;
        r.message = "phi_b theta_b' != theta_{b gamma_b(b') b^-1} phi_b at (b,b') = (" +
                    std::to_string(b) + "," + std::to_string(b2) + ")";
        return r;
      }
    }
  r.admissible = true;
  return r;
}

inline SkewBrace make_sdp_brace(const SdpSpec& spec) {
  Admissibility a = is_admissible(spec);
  require(a.admissible, errc::not_admissible, "NotAdmissible: " + a.message);
  SdpTables t = external_sdp(spec);
  return make_brace(t.dot, t.circ);
}

// All admissible theta for given A, B, phi: the homomorphisms
// (B, dot) -> Aut(A, dot) filtered through is_admissible, in lexicographic
// image order. The dst of each returned hom is the Cayley table of
// automorphisms(A.dot_group()).
inline std::vector<GroupHom> admissible_thetas(const SkewBrace& A, const SkewBrace& B,
                                               const std::vector<Perm>& phi) {
  require(static_cast<int>(phi.size()) == B.order(), errc::not_an_action,
          "PhiNotAnAction: need one value per element of B");
  for (int b = 0; b < B.order(); ++b)
    require(is_automorphism_of(A.circ_group(), phi[static_cast<size_t>(b)]) &&
                is_automorphism_of(A.dot_group(), phi[static_cast<size_t>(b)]),
            errc::not_an_action,
            "PhiNotAnAction: phi[" + std::to_string(b) + "] is not a brace automorphism of A");
  for (int b1 = 0; b1 < B.order(); ++b1)
    for (int b2 = 0; b2 < B.order(); ++b2)
      require(phi[static_cast<size_t>(B.circ(b1, b2))] ==
                  compose(phi[static_cast<size_t>(b1)], phi[static_cast<size_t>(b2)]),
              errc::not_an_action, "PhiNotAnAction: phi does not respect circ on B");

  PermGroup aut = automorphisms(A.dot_group());
  std::vector<GroupHom> out;
  for (GroupHom& hom : homomorphisms(B.dot_group(), aut)) {
    SdpSpec spec = make_sdp_spec(A, B, phi, hom_perms(hom, aut));
    if (is_admissible(spec).admissible) out.push_back(std::move(hom));
  }
  return out;
}

// Pointwise power theta^(i)_b = (theta_b)^i; validated as a homomorphism.
inline GroupHom theta_power(const GroupHom& theta, int i) {
  require(i >= 1, errc::bad_input, "theta_power: exponent must be positive");
  std::vector<int> image(theta.image.size());
  for (size_t b = 0; b < theta.image.size(); ++b)
    image[b] = theta.dst.power(theta.image[b], i);
  return make_hom(theta.src, theta.dst, std::move(image));
}

namespace detail {

inline void check_complement_pair(const FiniteGroup& G, const std::vector<int>& A,
                                  const std::vector<int>& B) {
  require(is_subgroup(G, A) && is_normal(G, A), errc::bad_complement_pair,
          "BadComplementPair: A must be a normal subgroup");
  require(is_subgroup(G, B), errc::bad_complement_pair,
          "BadComplementPair: B must be a subgroup");
  std::vector<int> inter;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(inter));
  require(inter == std::vector<int>{0}, errc::bad_complement_pair,
          "BadComplementPair: A and B must intersect trivially");
  require(static_cast<int>(A.size() * B.size()) == G.order(), errc::bad_complement_pair,
          "BadComplementPair: |A| |B| must equal |G|");
}

}  // namespace detail

// The conjugation action of the complement B on the normal subgroup A,
// re-indexed to A's local indices: b -> (a -> b a b^{-1}). With the circ
// group this is the phi of an internal decomposition; with the dot group,
// the theta.
inline std::vector<Perm> conjugation_action(const FiniteGroup& G, const std::vector<int>& A,
                                            const std::vector<int>& B) {
  detail::check_complement_pair(G, A, B);
  std::vector<int> sa = A, sb = B;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<int> local(static_cast<size_t>(G.order()), -1);
  for (int i = 0; i < static_cast<int>(sa.size()); ++i)
    local[static_cast<size_t>(sa[static_cast<size_t>(i)])] = i;
  std::vector<Perm> out;
  out.reserve(sb.size());
  for (int b : sb) {
    std::vector<int> m(sa.size());
    for (size_t i = 0; i < sa.size(); ++i) {
      int image = G.conj(b, sa[i]);
      ensure(local[static_cast<size_t>(image)] >= 0, "conjugation preserves the normal subgroup");
      m[i] = local[static_cast<size_t>(image)];
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

// Same action as a GroupHom into the materialized Aut of the restricted group.
inline GroupHom conjugation_phi(const FiniteGroup& G, const std::vector<int>& A,
                                const std::vector<int>& B) {
  std::vector<Perm> perms = conjugation_action(G, A, B);
  FiniteGroup Bg = restrict_to_subgroup(G, B);
  PermGroup aut = automorphisms(restrict_to_subgroup(G, A));
  std::vector<int> image;
  image.reserve(perms.size());
  for (const Perm& p : perms) {
    int idx = aut.index_of(p);
    ensure(idx >= 0, "conjugation restricts to an automorphism");
    image.push_back(idx);
  }
  return make_hom(std::move(Bg), aut.to_group(), std::move(image));
}

// Internal semidirect product test: A an ideal, B a left ideal, trivial
// intersection, and A o B = A . B = G (the last follows but is asserted).
inline bool is_internal_sdp(const SkewBrace& b, const std::vector<int>& A,
                            const std::vector<int>& B) {
  std::vector<int> sa = A, sb = B;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (!classify_subset(b, sa).is_ideal) return false;
  if (!classify_subset(b, sb).is_left_ideal) return false;
  std::vector<int> inter;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
  if (inter != std::vector<int>{0}) return false;
  if (static_cast<int>(sa.size() * sb.size()) != b.order()) return false;
  std::vector<char> circ_cover(static_cast<size_t>(b.order()), 0);
  std::vector<char> dot_cover(static_cast<size_t>(b.order()), 0);
  for (int x : sa)
    for (int y : sb) {
      circ_cover[static_cast<size_t>(b.circ(x, y))] = 1;
      dot_cover[static_cast<size_t>(b.dot(x, y))] = 1;
    }
  for (int g = 0; g < b.order(); ++g)
    if (!circ_cover[static_cast<size_t>(g)] || !dot_cover[static_cast<size_t>(g)]) return false;
  return true;
}

// An internal semidirect product rewritten as an external one.
struct SdpDecomposition {
  std::vector<int> A_subset;
  std::vector<int> B_subset;
  SkewBrace A_brace;
  SkewBrace B_brace;
  std::vector<Perm> phi;
  std::vector<Perm> theta;
  Perm delta;  // g = a o b  ->  pair_code(a, b)
};

// Extracts restricted braces, the conjugation phi and theta, and the
// re-indexing delta; asserts that delta is a brace isomorphism onto the
// external semidirect product and that gamma_a(b) = b for a in A, b in B.
inline SdpDecomposition internal_to_external(const SkewBrace& b, const std::vector<int>& A,
                                             const std::vector<int>& B) {
  require(is_internal_sdp(b, A, B), errc::not_internal_sdp, "NotInternalSdp");
  SdpDecomposition d;
  d.A_subset = A;
  d.B_subset = B;
  std::sort(d.A_subset.begin(), d.A_subset.end());
  std::sort(d.B_subset.begin(), d.B_subset.end());
  d.A_brace = restrict_brace(b, d.A_subset);
  d.B_brace = restrict_brace(b, d.B_subset);
  d.phi = conjugation_action(b.circ_group(), d.A_subset, d.B_subset);
  d.theta = conjugation_action(b.dot_group(), d.A_subset, d.B_subset);

  const int nb = static_cast<int>(d.B_subset.size());
  std::vector<int> code(static_cast<size_t>(b.order()), -1);
  for (int ai = 0; ai < static_cast<int>(d.A_subset.size()); ++ai)
    for (int bi = 0; bi < nb; ++bi) {
      int g = b.circ(d.A_subset[static_cast<size_t>(ai)], d.B_subset[static_cast<size_t>(bi)]);
      ensure(code[static_cast<size_t>(g)] < 0, "the circ factorization g = a o b is unique");
      code[static_cast<size_t>(g)] = pair_code(ai, bi, nb);
    }
  d.delta = Perm(code);

  for (int a : d.A_subset)
    for (int x : d.B_subset) ensure(b.gamma(a, x) == x, "gamma_a fixes the left ideal pointwise");

  SdpSpec spec = make_sdp_spec(d.A_brace, d.B_brace, d.phi, d.theta);
  ensure(is_admissible(spec).admissible, "extracted spec is admissible");
  SdpTables ext = external_sdp(spec);
  for (int x = 0; x < b.order(); ++x)
    for (int y = 0; y < b.order(); ++y) {
      ensure(ext.dot.op(d.delta[x], d.delta[y]) == d.delta[b.dot(x, y)],
             "delta transports the dot table");
      ensure(ext.circ.op(d.delta[x], d.delta[y]) == d.delta[b.circ(x, y)],
             "delta transports the circ table");
    }
  return d;
}

}  // namespace skewbrace
