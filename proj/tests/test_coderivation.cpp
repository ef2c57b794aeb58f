#include <map>
#include <random>
#include <vector>

#include "doctest.h"

#include "coderiv/coderivation.hpp"
#include "coderiv/moduli.hpp"

using namespace coderiv;

namespace {

using C = Coderivation<Rational>;

C bc(MultiIndex I, int out) { return C::basis(std::move(I), out); }

// All basis coderivations with arity up to max_arity, canonical order.
std::vector<C> basis_up_to(int max_arity) {
  std::vector<C> all;
  for (int n = 0; n <= max_arity; ++n) {
    std::vector<MultiIndex> words{{}};
    for (int k = 0; k < n; ++k) {
      std::vector<MultiIndex> next;
      for (const auto &w : words)
        for (int i = 1; i <= 2; ++i) {
          MultiIndex copy = w;
          copy.push_back(i);
          next.push_back(copy);
        }
      words = next;
    }
    for (const auto &w : words)
      for (int out = 1; out <= 2; ++out) all.push_back(bc(w, out));
  }
  return all;
}

// Random coderivation of definite parity. On the 0|2 space the odd basis
// elements have even arity and vice versa.
C random_homogeneous(std::mt19937_64 &rng, Parity parity) {
  static const std::vector<int> odd_arities{0, 2, 4};
  static const std::vector<int> even_arities{1, 3};
  const auto &arities = parity ? odd_arities : even_arities;
  C result;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    int arity = arities[rng() % arities.size()];
    MultiIndex I;
    for (int k = 0; k < arity; ++k) I.push_back(1 + static_cast<int>(rng() % 2));
    long coeff = static_cast<long>(rng() % 7) - 3;
    result += Rational(coeff) * bc(I, 1 + static_cast<int>(rng() % 2));
  }
  return result;
}

// Extension of f applied to a combination of words.
std::map<MultiIndex, Rational> apply_extended(
    const C &f, const std::map<MultiIndex, Rational> &words) {
  std::map<MultiIndex, Rational> out;
  for (const auto &[w, c] : words) {
    for (const auto &[w2, c2] : evaluate_extended(f, w)) {
      Rational &slot = out[w2];
      slot += c * c2;
      if (scalar_is_zero(slot)) out.erase(w2);
    }
  }
  return out;
}

std::map<MultiIndex, Rational> combine(std::map<MultiIndex, Rational> a,
                                       const std::map<MultiIndex, Rational> &b,
                                       const Rational &scale) {
  for (const auto &[w, c] : b) {
    Rational &slot = a[w];
    slot += scale * c;
    if (scalar_is_zero(slot)) a.erase(w);
  }
  return a;
}

}  // namespace

TEST_CASE("parity bookkeeping on the 0|2 space") {
  GradedSpace sp = space_0_2();
  CHECK(sp.dim() == 2);
  CHECK(sp.parity(1) == 1);
  CHECK(sp.parity(2) == 1);

  // arity + 1 mod 2: both generators are odd.
  CHECK(bc({}, 2).parity() == 1);
  CHECK(bc({1}, 1).parity() == 0);
  CHECK(bc({2, 2}, 2).parity() == 1);
  CHECK(bc({1, 2, 1}, 1).parity() == 0);

  CHECK(bc({2, 2}, 2).uniform_degree() == 2);
  CHECK((bc({2, 2}, 2) + bc({1}, 1)).uniform_degree() == std::nullopt);
  CHECK(C::zero().parity() == 0);

  CHECK_THROWS_AS((void)(bc({}, 1) + bc({1}, 1)).parity(), MixedParityError);
}

TEST_CASE("term arithmetic stays canonical") {
  C a = bc({1, 2}, 1) + bc({2, 2}, 2);
  C b = Rational(-1) * bc({1, 2}, 1);
  CHECK((a + b) == bc({2, 2}, 2));
  CHECK((a - a).is_zero());
  CHECK((Rational(0) * a).is_zero());
  CHECK(a.terms().size() == 2);

  CHECK_THROWS_AS(bc({3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(bc({1}, 0), std::invalid_argument);

  Coderivation<Rational> other{GradedSpace{{1}}};
  CHECK_THROWS_AS((void)(C::zero() + other), SpaceMismatchError);
}

TEST_CASE("composition on basis elements: hand-checked values") {
  // slot replacement with a sign from the odd prefix
  CHECK(compose(bc({1, 2}, 1), bc({2, 2}, 2)) ==
        Rational(-1) * bc({1, 2, 2}, 1));
  // the two matches of psi[22->2] against itself cancel
  CHECK(compose(bc({2, 2}, 2), bc({2, 2}, 2)).is_zero());
  // no slot matches the output index
  CHECK(compose(bc({1, 1}, 1), bc({2, 2}, 2)).is_zero());
  // arity-0 left factor has no slots
  CHECK(compose(bc({}, 2), bc({2, 2}, 2)).is_zero());
  // empty second index deletes the slot
  CHECK(compose(bc({1, 2}, 1), bc({}, 2)) == Rational(-1) * bc({1}, 1));

  // composition adds arities minus one
  C comp = compose(bc({1, 2}, 1), bc({2, 1}, 2));
  CHECK(comp.uniform_degree() == 3);
}

TEST_CASE("bracket anchors against the standard codifferentials") {
  C d2 = standard_codifferential(2);
  C d3 = standard_codifferential(3);
  C d5 = standard_codifferential(5);
  C d6 = standard_codifferential(6);

  CHECK(bracket(d3, bc({}, 2)) == Rational(-1) * bc({1}, 1));
  CHECK(bracket(d2, bc({}, 1)).is_zero());
  CHECK(bracket(d5, bc({1}, 2)) == Rational(2) * bc({1, 1}, 1));
  CHECK(bracket(d6, bc({2, 1}, 1)) == Rational(-1) * bc({2, 2, 2}, 1));
  CHECK(bracket(d6, bc({2}, 1)).is_zero());
  CHECK(bracket(d6, bc({1}, 2)) ==
        bc({1, 2}, 1) + bc({2, 1}, 1) - bc({2, 2}, 2));
}

TEST_CASE("each standard codifferential squares to zero") {
  for (int k = 1; k <= 6; ++k) {
    C d = standard_codifferential(k);
    CHECK(d.parity() == 1);
    CHECK(d.uniform_degree() == 2);
    CHECK(bracket(d, d).is_zero());
  }
}

TEST_CASE("brackets of the degree-two cocycle pair") {
  C delta1 = bc({2, 1}, 1) + bc({1, 2}, 1);
  C delta2 = bc({2, 1}, 2) + bc({1, 2}, 2) + bc({1, 1}, 1);

  CHECK(bracket(delta1, delta1) ==
        Rational(2) * bc({1, 2, 2}, 1) - Rational(2) * bc({2, 2, 1}, 1));
  CHECK(bracket(delta2, delta2).is_zero());
  CHECK(bracket(delta2, delta1) ==
        Rational(-1) * bc({2, 2, 1}, 2) + bc({1, 2, 2}, 2) +
            bc({2, 1, 1}, 1) - Rational(1) * bc({1, 1, 2}, 1));
}

TEST_CASE("extension of a coderivation to tensor words") {
  using W = std::map<MultiIndex, Rational>;
  CHECK(evaluate_extended(bc({2, 2}, 2), MultiIndex{2, 2}) ==
        W{{{2}, Rational(1)}});
  // two overlapping matches with opposite signs cancel
  CHECK(evaluate_extended(bc({2, 2}, 2), MultiIndex{2, 2, 2}).empty());
  // arity-0 term inserts at every gap; the late gap passes an odd letter
  CHECK(evaluate_extended(bc({}, 2), MultiIndex{1}) ==
        W{{{2, 1}, Rational(1)}, {{1, 2}, Rational(-1)}});
  CHECK(evaluate_extended(bc({1}, 2), MultiIndex{}).empty());
  CHECK_THROWS_AS((void)evaluate_extended(bc({1}, 2), MultiIndex{3}),
                  std::invalid_argument);
}

TEST_CASE("slot composition equals the corestriction definition") {
  std::vector<C> all = basis_up_to(3);
  CHECK(all.size() == 30);
  int pairs = 0;
  for (const auto &f : all)
    for (const auto &g : all) {
      CAPTURE(f.terms().begin()->first.in);
      CAPTURE(g.terms().begin()->first.in);
      CHECK(compose(f, g) == compose_by_evaluation(f, g));
      ++pairs;
    }
  CHECK(pairs == 900);
}

TEST_CASE("bracket is the commutator of coderivation extensions") {
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 60; ++trial) {
    Parity pf = static_cast<Parity>(rng() % 2);
    Parity pg = static_cast<Parity>(rng() % 2);
    C f = random_homogeneous(rng, pf);
    C g = random_homogeneous(rng, pg);
    int len = static_cast<int>(rng() % 5);
    MultiIndex word;
    for (int k = 0; k < len; ++k) word.push_back(1 + static_cast<int>(rng() % 2));

    std::map<MultiIndex, Rational> seed{{word, Rational(1)}};
    auto fg = apply_extended(f, apply_extended(g, seed));
    auto gf = apply_extended(g, apply_extended(f, seed));
    Rational sign = (pf && pg) ? Rational(1) : Rational(-1);
    auto commutator = combine(fg, gf, sign);

    auto direct = evaluate_extended(bracket(f, g), word);
    CHECK(direct == commutator);
  }
}

TEST_CASE("graded Jacobi identity on random homogeneous elements") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    Parity pf = static_cast<Parity>(rng() % 2);
    Parity pg = static_cast<Parity>(rng() % 2);
    Parity ph = static_cast<Parity>(rng() % 2);
    C f = random_homogeneous(rng, pf);
    C g = random_homogeneous(rng, pg);
    C h = random_homogeneous(rng, ph);

    C lhs = bracket(f, bracket(g, h));
    C rhs = bracket(bracket(f, g), h);
    C last = bracket(g, bracket(f, h));
    rhs += (pf && pg) ? -last : last;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("prefix insertion and the Decleene tower") {
  C phi1 = bc({}, 1);
  CHECK(lambda_insert<Rational>({2, 1}, phi1) == bc({2, 1}, 1));
  CHECK(decleene_map(phi1) == bc({2, 1}, 1) + bc({1, 2}, 1));
  CHECK(decleene_map(decleene_map(phi1)) ==
        bc({2, 1, 2, 1}, 1) + bc({2, 1, 1, 2}, 1) + bc({1, 2, 2, 1}, 1) +
            bc({1, 2, 1, 2}, 1));

  CHECK(decleene_cocycle(0, 1) == bc({}, 1));
  CHECK(decleene_cocycle(1, 2) == bc({2}, 2));
  CHECK(decleene_cocycle(2, 1) == bc({2, 1}, 1) + bc({1, 2}, 1));
  CHECK(decleene_cocycle(3, 1) == bc({2, 1, 2}, 1) + bc({1, 2, 2}, 1));
  for (int n = 0; n <= 6; ++n) {
    CHECK(decleene_cocycle(n, 1).uniform_degree() == n);
    CHECK(static_cast<int>(decleene_cocycle(n, 2).terms().size()) ==
          (n <= 1 ? 1 : 1 << (n / 2)));
  }
  CHECK_THROWS_AS(decleene_cocycle(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(decleene_cocycle(0, 3), std::invalid_argument);

  Coderivation<Rational> wrong{GradedSpace{{1, 1, 1}}};
  CHECK_THROWS_AS(decleene_map(wrong), std::invalid_argument);
}

TEST_CASE("coefficient ring conversions") {
  C d6 = standard_codifferential(6);
  Coderivation<Poly> lifted = to_poly_coefficients(d6);
  CHECK(evaluate_coefficients(lifted, {}) == d6);

  Coderivation<Poly> family = lifted;
  family += Poly::variable("t") * to_poly_coefficients(bc({2, 2}, 2));
  CHECK(evaluate_coefficients(family, {{"t", Rational(0)}}) == d6);
  CHECK(evaluate_coefficients(family, {{"t", Rational(3)}}) ==
        d6 + Rational(3) * bc({2, 2}, 2));
  CHECK_THROWS_AS((void)evaluate_coefficients(family, {}), UnassignedVariable);
}
