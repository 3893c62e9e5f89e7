#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include <skewbrace/skewbrace.hpp>

#include "oracles.hpp"
#include "stock.hpp"

using namespace skewbrace;

namespace {

// circ-relabeling of C4 by the transposition (1 2); a valid C4 table that
// does not form a brace with the standard C4 dot
std::vector<std::vector<int>> c4_relabeled() {
  std::vector<int> s{0, 2, 1, 3};
  std::vector<std::vector<int>> rows(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) rows[s[x]][s[y]] = s[(x + y) % 4];
  return rows;
}

Perm dot_conjugation(const SkewBrace& b, int g) {
  std::vector<int> m(static_cast<size_t>(b.order()));
  for (int h = 0; h < b.order(); ++h) m[h] = b.dot(b.dot(g, h), b.dot_inv(g));
  return Perm(std::move(m));
}

// the 21-element semidirect-product brace with theta the square of the
// conjugation action; its only order-3 left ideal is the complement
SkewBrace pq_theta_squared_brace() {
  FiniteGroup g = metacyclic_pq_group(7, 3);
  std::vector<int> a = subgroups_of_order(g, 7).at(0);
  std::vector<int> b = subgroups_of_order(g, 3).at(0);
  SkewBrace A = trivial_brace(restrict_to_subgroup(g, a));
  SkewBrace B = trivial_brace(restrict_to_subgroup(g, b));
  GroupHom phi_hom = conjugation_phi(g, a, b);
  GroupHom theta2 = theta_power(phi_hom, 2);
  PermGroup aut = automorphisms(A.dot_group());
  return make_sdp_brace(make_sdp_spec(A, B, conjugation_action(g, a, b), hom_perms(theta2, aut)));
}

}  // namespace

TEST_CASE("make_brace validation") {
  CHECK(make_brace(stock::s3(), stock::s3()).order() == 6);
  CHECK(almost_trivial_brace(stock::s3()).order() == 6);

  // both tables are groups, but the axiom fails; first violating triple
  // frozen from the lexicographic scan
  auto dot_rows = cyclic_group(4).table();
  auto circ_rows = c4_relabeled();
  auto violation = oracles::bf_first_brace_violation(make_group(dot_rows), make_group(circ_rows));
  REQUIRE(violation.has_value());
  CHECK(*violation == std::make_tuple(2, 1, 1));
  try {
    make_brace(dot_rows, circ_rows);
    FAIL("expected BraceAxiomFails");
  } catch (const error& e) {
    CHECK(e.code() == errc::brace_axiom_fails);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("(2,1,1)"));
  }

  try {
    make_brace({{0, 1}, {1, 1}}, {{0, 1}, {1, 0}});
    FAIL("expected DotNotGroup");
  } catch (const error& e) {
    CHECK(e.code() == errc::dot_not_group);
  }
  try {
    make_brace({{0, 1}, {1, 0}}, {{0, 1}, {1, 1}});
    FAIL("expected CircNotGroup");
  } catch (const error& e) {
    CHECK(e.code() == errc::circ_not_group);
  }
}

TEST_CASE("gamma function") {
  SkewBrace triv = trivial_brace(stock::s3());
  for (int x = 0; x < 6; ++x) CHECK(triv.gamma(x).is_identity());

  // gamma of the C4 brace: gamma_{b^[i]}(b^[j]) = b^[(2i+1)j]
  SkewBrace B = stock::c4_brace();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(B.gamma(i, j) == ((2 * i + 1) * j) % 4);

  // gamma of the almost trivial brace is circ-conjugation
  SkewBrace at = almost_trivial_brace(stock::s3());
  const FiniteGroup& s3 = at.circ_group();
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) CHECK(at.gamma(g, h) == s3.conj(g, h));

  // gamma is a circ-to-Aut(dot) homomorphism on every stock brace
  for (const SkewBrace& b : stock::stock_braces()) {
    for (int x = 0; x < b.order(); ++x) {
      CHECK(is_automorphism_of(b.dot_group(), b.gamma(x)));
      for (int y = 0; y < b.order(); ++y)
        CHECK(b.gamma(b.circ(x, y)) == compose(b.gamma(x), b.gamma(y)));
    }
  }
}

TEST_CASE("trivial and almost trivial braces") {
  CHECK(trivial_brace(cyclic_group(2)) == almost_trivial_brace(cyclic_group(2)));
  CHECK(almost_trivial_brace(stock::s3()).order() == 6);
  for (int x = 0; x < 4; ++x) CHECK(trivial_brace(cyclic_group(4)).gamma(x).is_identity());
}

TEST_CASE("opposite braces") {
  SkewBrace triv = trivial_brace(stock::s3());
  CHECK(opposite(triv) == almost_trivial_brace(stock::s3()));

  // abelian dot group: self-opposite
  SkewBrace c4 = trivial_brace(cyclic_group(4));
  CHECK(opposite(c4) == c4);

  for (const SkewBrace& b : stock::stock_braces()) {
    SkewBrace op = opposite(b);
    CHECK(opposite(op) == b);
    CHECK((op == b) == b.dot_group().is_abelian());
    // gamma of the opposite twists by dot-conjugation
    for (int g = 0; g < b.order(); ++g)
      CHECK(op.gamma(g) == compose(dot_conjugation(b, g), b.gamma(g)));
  }

  // the metacyclic pq braces with nontrivial theta are not self-opposite
  SkewBrace pq = pq_theta_squared_brace();
  CHECK(opposite(pq) != pq);
}

TEST_CASE("classify_subset") {
  SkewBrace at = almost_trivial_brace(stock::s3());
  std::vector<int> full(6);
  std::iota(full.begin(), full.end(), 0);
  CHECK(classify_subset(at, {0}).is_ideal);
  CHECK(classify_subset(at, full).is_ideal);

  std::vector<int> two = subgroups_of_order(stock::s3(), 2).at(0);
  IdealClass c = classify_subset(at, two);
  CHECK(c.is_subgroup_circ);
  CHECK_FALSE(c.is_left_ideal);

  // order-p subset of a pq brace is an ideal
  SkewBrace pq = pq_theta_squared_brace();
  std::vector<int> a7 = subgroups_of_order(pq.circ_group(), 7).at(0);
  CHECK(classify_subset(pq, a7).is_ideal);

  // flag implications on every circ-subgroup of every stock brace
  for (const SkewBrace& b : stock::stock_braces())
    for (const IdealClass& ic : left_ideals(b)) {
      if (ic.is_ideal) CHECK(ic.is_strong_left_ideal);
      if (ic.is_strong_left_ideal) CHECK(ic.is_left_ideal);
      if (ic.is_left_ideal) {
        CHECK(ic.is_subgroup_circ);
        CHECK(ic.is_subgroup_dot);
      }
    }
}

TEST_CASE("left ideal catalogs") {
  // trivial brace: every subgroup is a left ideal, ideals = normal subgroups
  SkewBrace triv = trivial_brace(stock::s3());
  for (const IdealClass& c : left_ideals(triv)) {
    CHECK(c.is_left_ideal);
    CHECK(c.is_ideal == is_normal(stock::s3(), c.subset));
  }

  // almost trivial S3: left ideals are {e}, A3, S3
  SkewBrace at = almost_trivial_brace(stock::s3());
  std::vector<std::vector<int>> li;
  for (const IdealClass& c : left_ideals(at))
    if (c.is_left_ideal) li.push_back(c.subset);
  std::vector<int> a3 = subgroups_of_order(stock::s3(), 3).at(0);
  std::vector<int> full(6);
  std::iota(full.begin(), full.end(), 0);
  CHECK(li == std::vector<std::vector<int>>{{0}, a3, full});

  // nontrivial-theta pq brace: exactly one left ideal of order q
  SkewBrace pq = pq_theta_squared_brace();
  int order_q_left_ideals = 0;
  for (const IdealClass& c : left_ideals(pq))
    if (c.is_left_ideal && c.subset.size() == 3) ++order_q_left_ideals;
  CHECK(order_q_left_ideals == 1);
}

TEST_CASE("quotient braces") {
  SkewBrace pq = pq_theta_squared_brace();
  std::vector<int> a7 = subgroups_of_order(pq.circ_group(), 7).at(0);
  SkewBrace quo = quotient_brace(pq, a7);
  CHECK(quo.order() == 3);
  CHECK(quo.dot_group() == quo.circ_group());  // trivial brace on C_q
  CHECK(are_isomorphic(quo.circ_group(), cyclic_group(3)).has_value());

  std::vector<int> full(pq.order());
  std::iota(full.begin(), full.end(), 0);
  CHECK(quotient_brace(pq, full).order() == 1);
  CHECK(quotient_brace(pq, {0}) == pq);

  SkewBrace at = almost_trivial_brace(stock::s3());
  CHECK_THROWS_AS(quotient_brace(at, subgroups_of_order(stock::s3(), 2).at(0)), error);
}

TEST_CASE("brace isomorphism") {
  SkewBrace b = stock::c8_brace();
  auto self = brace_isomorphic(b, b);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());

  CHECK_FALSE(brace_isomorphic(trivial_brace(cyclic_group(4)), trivial_brace(stock::klein()))
                  .has_value());
  CHECK_FALSE(
      brace_isomorphic(trivial_brace(stock::s3()), almost_trivial_brace(stock::s3())).has_value());

  // a found witness respects both tables
  SkewBrace triv1 = trivial_brace(stock::s3());
  SkewBrace triv2 = trivial_brace(metacyclic_pq_group(3, 2));
  auto w = brace_isomorphic(triv1, triv2);
  REQUIRE(w.has_value());
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      CHECK((*w)[triv1.dot(x, y)] == triv2.dot((*w)[x], (*w)[y]));
      CHECK((*w)[triv1.circ(x, y)] == triv2.circ((*w)[x], (*w)[y]));
    }
}

TEST_CASE("restrict_brace") {
  SkewBrace b = stock::c8_brace();
  std::vector<int> sub{0, 2, 4, 6};
  SkewBrace r = restrict_brace(b, sub);
  CHECK(r.order() == 4);
  CHECK(are_isomorphic(r.circ_group(), cyclic_group(4)).has_value());
  CHECK_THROWS_AS(restrict_brace(b, std::vector<int>{0, 1, 2}), error);
}

TEST_CASE("gamma determines itself on images") {
  // the forcing rule behind the enumeration search: for w = gamma_x(y),
  // gamma_w is the composite gamma_x gamma_y corrected by
  // q(u) = w-bar o gamma_x(y o u)
  for (const SkewBrace& b : stock::stock_braces()) {
    const int n = b.order();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int w = b.gamma(x, y);
        int wbar = b.circ_inv(w);
        for (int u = 0; u < n; ++u) {
          int q = b.circ(wbar, b.gamma(x, b.circ(y, u)));
          CHECK(b.gamma(w, q) == b.gamma(x, b.gamma(y, u)));
        }
      }
  }
}
