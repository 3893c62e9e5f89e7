#pragma once

// Shared fixtures: the worked C8/C4 example data, small stock groups, and
// the (A, B, phi) pool used by the semidirect-product property tests.

#include <string>
#include <vector>

#include <skewbrace/skewbrace.hpp>

namespace stock {

using namespace skewbrace;

inline int imod(int v, int n) { return ((v % n) + n) % n; }

// Brace on C8 with a^[i] . a^[j] = a^[i + (-1)^i j]; its dot group is D4.
inline SkewBrace c8_brace() {
  std::vector<std::vector<int>> dot(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) dot[i][j] = imod(i + (i % 2 ? -j : j), 8);
  return make_brace(make_group(dot), cyclic_group(8));
}

// Brace on C4 with b^[i] . b^[j] = b^[i + j + 2ij]; its dot group is C2 x C2.
inline SkewBrace c4_brace() {
  std::vector<std::vector<int>> dot(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) dot[i][j] = imod(i + j + 2 * i * j, 4);
  return make_brace(make_group(dot), cyclic_group(4));
}

// phi_b = circ-inversion of C8 on odd powers of b.
inline std::vector<Perm> c8_c4_phi() {
  std::vector<int> inv(8);
  for (int i = 0; i < 8; ++i) inv[i] = imod(-i, 8);
  std::vector<Perm> phi;
  for (int b = 0; b < 4; ++b) phi.push_back(b % 2 ? Perm(inv) : Perm::identity(8));
  return phi;
}

// theta: identity on {e, b^[2]}, dot-conjugation by a^[2] on {b, b^[3]}.
inline std::vector<Perm> c8_c4_theta() {
  SkewBrace A = c8_brace();
  std::vector<int> iota(8);
  for (int x = 0; x < 8; ++x) iota[x] = A.dot(A.dot(2, x), A.dot_inv(2));
  std::vector<Perm> theta;
  for (int b = 0; b < 4; ++b) theta.push_back(b % 2 ? Perm(iota) : Perm::identity(8));
  return theta;
}

inline SdpSpec c8_c4_spec() {
  return make_sdp_spec(c8_brace(), c4_brace(), c8_c4_phi(), c8_c4_theta());
}

inline FiniteGroup klein() { return direct_product(cyclic_group(2), cyclic_group(2)); }
inline FiniteGroup s3() { return dihedral_group(3); }
inline FiniteGroup q8() { return dicyclic_group(2); }

// the alternating group on four letters, as (C2 x C2) x| C3 with the
// 3-cycle action permuting the involutions
inline FiniteGroup a4() {
  Perm rot(std::vector<int>{0, 2, 3, 1});
  std::vector<Perm> act{Perm::identity(4), rot, compose(rot, rot)};
  return semidirect_product_group(klein(), cyclic_group(3), act);
}

// Brace with dot = C4 and circ = C2 x C2 (xor); its circ group has
// automorphisms that do not respect the dot operation.
inline SkewBrace xor_brace() {
  std::vector<std::vector<int>> dot(4, std::vector<int>(4)), circ(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      dot[x][y] = (x + y) % 4;
      circ[x][y] = x ^ y;
    }
  return make_brace(make_group(dot), make_group(circ));
}

// All groups of order <= 8, one table per isomorphism type.
inline std::vector<FiniteGroup> groups_up_to_8() {
  return {
      cyclic_group(1),
      cyclic_group(2),
      cyclic_group(3),
      cyclic_group(4),
      klein(),
      cyclic_group(5),
      cyclic_group(6),
      s3(),
      cyclic_group(7),
      cyclic_group(8),
      direct_product(cyclic_group(4), cyclic_group(2)),
      direct_product(klein(), cyclic_group(2)),
      dihedral_group(4),
      q8(),
  };
}

// An assortment of braces used by the structural property tests.
inline std::vector<SkewBrace> stock_braces() {
  std::vector<SkewBrace> out;
  out.push_back(trivial_brace(cyclic_group(4)));
  out.push_back(trivial_brace(s3()));
  out.push_back(almost_trivial_brace(s3()));
  out.push_back(trivial_brace(q8()));
  out.push_back(almost_trivial_brace(dihedral_group(4)));
  out.push_back(c8_brace());
  out.push_back(c4_brace());
  out.push_back(trivial_brace(metacyclic_pq_group(3, 2)));
  out.push_back(almost_trivial_brace(metacyclic_pq_group(3, 2)));
  out.push_back(trivial_brace(metacyclic_pq_group(7, 3)));
  for (auto& e : pq_catalog(7, 3, PqKind::metacyclic).entries)
    if (out.size() < 16) out.push_back(e.brace);
  return out;
}

struct SpecPoolItem {
  std::string name;
  SkewBrace A;
  SkewBrace B;
  std::vector<Perm> phi;
};

// whether phi lands in the brace automorphisms of A (the action hypothesis
// of the admissibility criterion)
inline bool phi_acts(const SpecPoolItem& item) {
  for (const Perm& p : item.phi)
    if (!is_automorphism_of(item.A.dot_group(), p)) return false;
  return true;
}

inline std::vector<Perm> trivial_action(int b_order, int a_order) {
  return std::vector<Perm>(static_cast<size_t>(b_order), Perm::identity(a_order));
}

// phi from the conjugation action of a complement inside a semidirect
// product of trivial braces.
inline std::vector<Perm> conj_phi_of(const FiniteGroup& G, int p, int q) {
  auto A = subgroups_of_order(G, p).at(0);
  auto B = subgroups_of_order(G, q).at(0);
  return conjugation_action(G, A, B);
}

// The (A, B, phi) pool for the admissibility-vs-validation equivalence
// property; |A| |B| <= 32 throughout.
inline std::vector<SpecPoolItem> sdp_pool() {
  std::vector<SpecPoolItem> pool;

  pool.push_back({"C3xC2-trivial-phi", trivial_brace(cyclic_group(3)),
                  trivial_brace(cyclic_group(2)), trivial_action(2, 3)});

  {
    FiniteGroup g = metacyclic_pq_group(3, 2);
    pool.push_back({"C3:C2-conj-phi", trivial_brace(cyclic_group(3)),
                    trivial_brace(cyclic_group(2)), conj_phi_of(g, 3, 2)});
  }
  {
    FiniteGroup g = metacyclic_pq_group(7, 3);
    pool.push_back({"C7:C3-conj-phi", trivial_brace(cyclic_group(7)),
                    trivial_brace(cyclic_group(3)), conj_phi_of(g, 7, 3)});
  }
  {
    FiniteGroup g = metacyclic_pq_group(5, 2);
    pool.push_back({"C5:C2-conj-phi", trivial_brace(cyclic_group(5)),
                    trivial_brace(cyclic_group(2)), conj_phi_of(g, 5, 2)});
  }

  pool.push_back({"paper-C8-C4", c8_brace(), c4_brace(), c8_c4_phi()});

  // nontrivial gamma on A, trivial and inner phi
  pool.push_back({"atS3xC2-trivial-phi", almost_trivial_brace(s3()),
                  trivial_brace(cyclic_group(2)), trivial_action(2, 6)});
  {
    FiniteGroup g = s3();
    SkewBrace A = almost_trivial_brace(g);
    int t = -1;
    for (int x = 1; x < g.order() && t < 0; ++x)
      if (g.element_order(x) == 2) t = x;
    std::vector<int> conj(6);
    for (int x = 0; x < 6; ++x) conj[x] = g.conj(t, x);
    pool.push_back({"atS3xC2-inner-phi", A, trivial_brace(cyclic_group(2)),
                    {Perm::identity(6), Perm(conj)}});
  }

  // nontrivial B-brace acting on a trivial C4
  {
    std::vector<int> inv4{0, 3, 2, 1};
    pool.push_back({"C4xB4-inversion-phi", trivial_brace(cyclic_group(4)), c4_brace(),
                    {Perm::identity(4), Perm(inv4), Perm::identity(4), Perm(inv4)}});
  }

  // phi lands in Aut(A, circ) but outside Aut(A, dot)
  pool.push_back({"xor-swap-phi", xor_brace(), trivial_brace(cyclic_group(2)),
                  {Perm::identity(4), Perm(std::vector<int>{0, 2, 1, 3})}});
  return pool;
}

}  // namespace stock
