#include <map>
#include <random>

#include "doctest.h"

#include "coderiv/deformation.hpp"

using namespace coderiv;

namespace {

using C = Coderivation<Rational>;

C bc(MultiIndex I, int out) { return C::basis(std::move(I), out); }

C delta1() { return bc({2, 1}, 1) + bc({1, 2}, 1); }
C delta2() { return bc({2, 1}, 2) + bc({1, 2}, 2) + bc({1, 1}, 1); }

std::map<AlgebraClass, int> class_counts(const DeformationGraph &g) {
  std::map<AlgebraClass, int> counts;
  for (const auto &p : g.points) ++counts[p.cls];
  return counts;
}

}  // namespace

TEST_CASE("family construction validates its input") {
  CHECK_NOTHROW(builtin_family(2));
  CHECK_NOTHROW(builtin_family(5));
  CHECK_NOTHROW(builtin_family(6));
  CHECK_THROWS_AS(builtin_family(1), std::invalid_argument);

  // base with a nonzero self-bracket
  CHECK_THROWS_AS(make_family(delta1(), {}), NotCodifferentialError);
  // direction of the wrong arity
  CHECK_THROWS_AS(
      make_family(standard_codifferential(2), {{"t", bc({1}, 1)}}),
      NotCodifferentialError);
  // zero direction
  CHECK_THROWS_AS(make_family(standard_codifferential(2), {{"t", C::zero()}}),
                  NotCodifferentialError);
  // quadratic but not a cocycle of the base
  CHECK_THROWS_AS(
      make_family(standard_codifferential(2), {{"t", bc({1, 1}, 2)}}),
      NotCodifferentialError);
}

TEST_CASE("built-in families extend to exact polynomial families") {
  for (int k : {2, 5, 6}) {
    ObstructionResult obs = obstruction(builtin_family(k));
    CAPTURE(k);
    CHECK(obs.is_zero);
    CHECK(obs.self_bracket.is_zero());
  }
}

TEST_CASE("the textbook cocycle pair over theta^2 = x is obstructed") {
  // Both directions are genuine cocycles, so the family constructs...
  DeformationFamily printed = make_family(
      standard_codifferential(6), {{"t1", delta1()}, {"t2", delta2()}});
  // ...but its self-bracket is a nonzero quadratic in the parameters.
  ObstructionResult obs = obstruction(printed);
  CHECK_FALSE(obs.is_zero);

  Poly t1 = Poly::variable("t1"), t2 = Poly::variable("t2");
  Coderivation<Poly> expected;
  expected.add_term(BasisCoderivation{{1, 2, 2}, 1}, Poly(2) * t1 * t1);
  expected.add_term(BasisCoderivation{{2, 2, 1}, 1}, Poly(-2) * t1 * t1);
  expected.add_term(BasisCoderivation{{1, 2, 2}, 2}, Poly(2) * t1 * t2);
  expected.add_term(BasisCoderivation{{2, 2, 1}, 2}, Poly(-2) * t1 * t2);
  expected.add_term(BasisCoderivation{{2, 1, 1}, 1}, Poly(2) * t1 * t2);
  expected.add_term(BasisCoderivation{{1, 1, 2}, 1}, Poly(-2) * t1 * t2);
  CHECK(obs.self_bracket == expected);

  CHECK_THROWS_AS((void)jump_census(printed, default_grid({"t1", "t2"})),
                  NonVersalError);

  // The fix used by the built-in family: psi[22->2] is cohomologous to the
  // first direction, differing by the coboundary of phi[1->2].
  CHECK(coboundary(standard_codifferential(6), bc({1}, 2)) ==
        delta1() - bc({2, 2}, 2));
}

TEST_CASE("specialization matches the symbolic family") {
  DeformationFamily f2 = builtin_family(2);
  CHECK(specialize(f2, {{"t", Rational(0)}}) == standard_codifferential(2));
  CHECK(specialize(f2, {{"t", Rational(1)}}) ==
        standard_codifferential(2) + bc({1, 1}, 1));

  // evaluating the symbolic self-bracket commutes with specializing
  DeformationFamily printed = make_family(
      standard_codifferential(6), {{"t1", delta1()}, {"t2", delta2()}});
  ObstructionResult obs = obstruction(printed);
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    ParameterPoint p{{"t1", Rational(static_cast<long>(rng() % 9) - 4)},
                     {"t2", Rational(static_cast<long>(rng() % 9) - 4)}};
    C at_point = specialize(printed, p);
    CHECK(evaluate_coefficients(obs.self_bracket, p) ==
          bracket(at_point, at_point));
  }
}

TEST_CASE("default sample grids") {
  auto grid1 = default_grid({"t"});
  CHECK(grid1.size() == 7);
  CHECK(grid1.front().at("t") == Rational(-2));
  CHECK(grid1.back().at("t") == Rational(2));
  auto grid2 = default_grid({"t1", "t2"});
  CHECK(grid2.size() == 49);
  bool has_origin = false;
  for (const auto &p : grid2)
    if (scalar_is_zero(p.at("t1")) && scalar_is_zero(p.at("t2")))
      has_origin = true;
  CHECK(has_origin);
}

TEST_CASE("jump census of the idempotent-splitting family") {
  DeformationFamily f = builtin_family(2);
  DeformationGraph g = jump_census(f, default_grid({"t"}));
  CHECK(g.base_class == AlgebraClass::d2);
  auto counts = class_counts(g);
  CHECK(counts[AlgebraClass::d2] == 1);  // only t = 0
  CHECK(counts[AlgebraClass::d1] == 6);  // every nonzero t
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].to == AlgebraClass::d1);
  CHECK(g.edges[0].witnesses.size() == 6);
}

TEST_CASE("jump census of the unital family") {
  DeformationFamily f = builtin_family(5);
  DeformationGraph g = jump_census(f, default_grid({"t"}));
  CHECK(g.base_class == AlgebraClass::d5);
  auto counts = class_counts(g);
  CHECK(counts[AlgebraClass::d5] == 1);  // t = 0
  CHECK(counts[AlgebraClass::d1] == 1);  // t = 1, discriminant 4
  CHECK(counts[AlgebraClass::quadratic_field_extension] == 5);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].to == AlgebraClass::d1);
  CHECK(g.edges[1].to == AlgebraClass::quadratic_field_extension);
}

TEST_CASE("jump census of the two-parameter nilpotent family") {
  DeformationFamily f = builtin_family(6);
  DeformationGraph g = jump_census(f, default_grid({"t1", "t2"}));
  CHECK(g.base_class == AlgebraClass::d6);
  auto counts = class_counts(g);
  // strata on the 7x7 grid: the origin keeps d6; the t1-axis degenerates
  // to d2; on t2 != 0 the algebra is unital with discriminant t1^2 + 4 t2
  CHECK(counts[AlgebraClass::d6] == 1);
  CHECK(counts[AlgebraClass::d2] == 6);
  CHECK(counts[AlgebraClass::d5] == 2);   // (+-2, -1)
  CHECK(counts[AlgebraClass::d1] == 5);   // (0,1) (+-1,2) (+-1/2,1/2)
  CHECK(counts[AlgebraClass::quadratic_field_extension] == 35);

  std::vector<AlgebraClass> targets;
  for (const auto &e : g.edges) targets.push_back(e.to);
  CHECK(targets == std::vector<AlgebraClass>{
                       AlgebraClass::d1, AlgebraClass::d2, AlgebraClass::d5,
                       AlgebraClass::quadratic_field_extension});
  for (const auto &e : g.edges) {
    CHECK(e.from == AlgebraClass::d6);
    CHECK(!e.witnesses.empty());
  }

  // the d5 witnesses are exactly the vanishing-discriminant points
  for (const auto &e : g.edges)
    if (e.to == AlgebraClass::d5) {
      REQUIRE(e.witnesses.size() == 2);
      for (const auto &w : e.witnesses) {
        Rational t1 = w.at("t1"), t2 = w.at("t2");
        CHECK(scalar_is_zero(t1 * t1 + 4 * t2));
      }
    }
}

TEST_CASE("infinitesimal deformation directions") {
  CHECK(infinitesimal_basis(standard_codifferential(1)).empty());
  CHECK(infinitesimal_basis(standard_codifferential(3)).empty());
  CHECK(infinitesimal_basis(standard_codifferential(4)).empty());

  auto span_with = [](const Coderivation<Rational> &d,
                      const std::vector<C> &generators,
                      const std::vector<C> &probes) {
    CochainBasis basis = CochainBasis::make(space_0_2(), 2);
    RowSpace<Rational> span(basis.dim());
    Matrix<Rational> below = coboundary_matrix(d, 1);
    for (int c = 0; c < below.cols; ++c) {
      std::vector<Rational> col(below.rows);
      for (int r = 0; r < below.rows; ++r) col[r] = below[r][c];
      span.insert(std::move(col));
    }
    for (const auto &g : generators) CHECK(span.insert(to_vector(basis, g)));
    for (const auto &p : probes) CHECK(!span.insert(to_vector(basis, p)));
  };

  auto b2 = infinitesimal_basis(standard_codifferential(2));
  REQUIRE(b2.size() == 1);
  span_with(standard_codifferential(2), {bc({1, 1}, 1)}, b2);

  auto b5 = infinitesimal_basis(standard_codifferential(5));
  REQUIRE(b5.size() == 1);
  span_with(standard_codifferential(5), {bc({1, 1}, 2)}, b5);

  auto b6 = infinitesimal_basis(standard_codifferential(6));
  REQUIRE(b6.size() == 2);
  span_with(standard_codifferential(6), {delta1(), delta2()}, b6);
}

TEST_CASE("solution families satisfy the codifferential equation") {
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(verify_solution_family(solution_family(k)));
  }
  CHECK_THROWS_AS(solution_family(0), std::invalid_argument);
  CHECK_THROWS_AS(solution_family(9), std::invalid_argument);

  // the generic coderivation does not: the equation carves out the variety
  Coderivation<Poly> g = generic_coderivation();
  CHECK_FALSE(bracket(g, g).is_zero());
}

TEST_CASE("classification of solution family sample points") {
  auto sample = [](int k, ParameterPoint p) {
    return sample_solution_family(solution_family(k), p);
  };

  CHECK(sample(1, {{"a24", 1}}) == AlgebraClass::d4);
  CHECK(sample(2, {{"a24", 1}}) == AlgebraClass::d3);
  CHECK(sample(3, {{"a24", 1}}) == AlgebraClass::d1);

  CHECK(sample(4, {{"a11", 0}, {"a21", 0}, {"a24", 1}}) == AlgebraClass::d5);
  CHECK(sample(4, {{"a11", 0}, {"a21", 1}, {"a24", 0}}) == AlgebraClass::d6);
  CHECK(sample(4, {{"a11", 1}, {"a21", 0}, {"a24", 0}}) == AlgebraClass::d2);
  CHECK(sample(4, {{"a11", 1}, {"a21", 0}, {"a24", 1}}) == AlgebraClass::d1);

  CHECK(sample(5, {{"a12", 1}, {"a23", 0}}) == AlgebraClass::d3);
  CHECK(sample(5, {{"a12", 1}, {"a23", 1}}) == AlgebraClass::d3);

  CHECK(sample(6, {{"a13", 1}, {"a22", 0}}) == AlgebraClass::d4);
  CHECK(sample(6, {{"a13", 1}, {"a22", 1}}) == AlgebraClass::d4);

  CHECK(sample(7, {{"a21", 0}, {"a23", 1}, {"a24", 0}}) == AlgebraClass::d5);
  CHECK(sample(7, {{"a21", 1}, {"a23", 1}, {"a24", 1}}) == AlgebraClass::d2);

  CHECK(sample(8, {{"a13", 0}, {"a14", 1}, {"a23", 0}, {"a24", 0}}) ==
        AlgebraClass::d6);
  CHECK(sample(8, {{"a13", 0}, {"a14", 1}, {"a23", 0}, {"a24", 1}}) ==
        AlgebraClass::d2);
  CHECK(sample(8, {{"a13", 0}, {"a14", 1}, {"a23", 1}, {"a24", 0}}) ==
        AlgebraClass::d1);
  CHECK(sample(8, {{"a13", 0}, {"a14", 1}, {"a23", -1}, {"a24", 0}}) ==
        AlgebraClass::quadratic_field_extension);
  CHECK(sample(8, {{"a13", 0}, {"a14", 1}, {"a23", -1}, {"a24", 2}}) ==
        AlgebraClass::d5);

  // nonvanishing constraints are enforced
  CHECK_THROWS_AS(
      (void)sample(7, {{"a21", 0}, {"a23", 0}, {"a24", 1}}),
      ConstraintViolationError);
  CHECK_THROWS_AS((void)sample(8, {{"a13", 0}, {"a23", 0}, {"a24", 0}}),
                  ConstraintViolationError);
}
