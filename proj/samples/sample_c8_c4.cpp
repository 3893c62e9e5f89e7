// Walkthrough: build the braces on C8 and C4 whose dot groups are D4 and
// C2 x C2, check that the twisted homomorphism theta is admissible, and
// assemble the 32-element semidirect-product brace.

#include <iostream>

#include <skewbrace/skewbrace.hpp>

using namespace skewbrace;

namespace {

int imod(int v, int n) { return ((v % n) + n) % n; }

}  // namespace

int main() {
  // a^[i] . a^[j] = a^[i + (-1)^i j] on the cyclic circ group of order 8
  std::vector<std::vector<int>> dot_a(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) dot_a[i][j] = imod(i + (i % 2 ? -j : j), 8);
  SkewBrace A = make_brace(make_group(dot_a), cyclic_group(8));
  std::cout << "dot group of A is dihedral: "
            << (are_isomorphic(A.dot_group(), dihedral_group(4)).has_value() ? "yes" : "no")
            << "\n";

  // b^[i] . b^[j] = b^[i + j + 2ij] on the cyclic circ group of order 4
  std::vector<std::vector<int>> dot_b(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) dot_b[i][j] = imod(i + j + 2 * i * j, 4);
  SkewBrace B = make_brace(make_group(dot_b), cyclic_group(4));
  std::cout << "dot group of B is C2 x C2: "
            << (are_isomorphic(B.dot_group(),
                               direct_product(cyclic_group(2), cyclic_group(2)))
                    .has_value()
                    ? "yes"
                    : "no")
            << "\n";

  // phi_b inverts the circ group of A; theta is the identity on the square
  // elements of B and dot-conjugation by a^[2] on the others
  std::vector<int> inv(8), iota(8);
  for (int i = 0; i < 8; ++i) {
    inv[i] = imod(-i, 8);
    iota[i] = A.dot(A.dot(2, i), A.dot_inv(2));
  }
  std::vector<Perm> phi, theta;
  for (int b = 0; b < 4; ++b) {
    phi.push_back(b % 2 ? Perm(inv) : Perm::identity(8));
    theta.push_back(b % 2 ? Perm(iota) : Perm::identity(8));
  }

  SdpSpec spec = make_sdp_spec(A, B, phi, theta);
  Admissibility adm = is_admissible(spec);
  std::cout << "theta admissible: " << (adm.admissible ? "yes" : "no") << "\n";

  SkewBrace G = make_sdp_brace(spec);
  std::cout << "product brace order: " << G.order() << "\n";

  std::vector<int> a_part, b_part;
  for (int a = 0; a < 8; ++a) a_part.push_back(pair_code(a, 0, 4));
  for (int b = 0; b < 4; ++b) b_part.push_back(pair_code(0, b, 4));
  std::cout << "(A, e) is an ideal: " << (classify_subset(G, a_part).is_ideal ? "yes" : "no")
            << "\n";
  std::cout << "(e, B) is a left ideal: "
            << (classify_subset(G, b_part).is_left_ideal ? "yes" : "no") << "\n";
  return adm.admissible ? 0 : 1;
}
