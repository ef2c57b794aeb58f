#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coderiv/hochschild.hpp"
#include "coderiv/moduli.hpp"

namespace coderiv {

struct NonVersalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstraintViolationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A polynomial family d_t = base + sum_i t_i * direction_i. Directions are
// validated at construction: odd, degree 2, cocycles of the base.
struct DeformationFamily {
  Coderivation<Rational> base;
  std::vector<std::pair<std::string, Coderivation<Rational>>> directions;
};

DeformationFamily make_family(
    Coderivation<Rational> base,
    std::vector<std::pair<std::string, Coderivation<Rational>>> directions);

// The ready-made jump-deformation families: one-parameter families over
// d2 and d5, and the two-parameter family over d6. The second d6
// direction keeps the usual representative psi[21->2]+psi[12->2]+psi[11->1];
// the first uses psi[22->2], cohomologous to psi[21->1]+psi[12->1], because
// the latter pair has a nonvanishing self-bracket and does not extend to
// an exact polynomial family.
DeformationFamily builtin_family(int k);  // k in {2, 5, 6}

// d_t as a single coderivation over the polynomial ring in the parameters.
Coderivation<Poly> family_total(const DeformationFamily &f);

struct ObstructionResult {
  Coderivation<Poly> self_bracket;  // [d_t, d_t], expanded exactly
  bool is_zero = false;
};

ObstructionResult obstruction(const DeformationFamily &f);

using ParameterPoint = std::map<std::string, Rational>;

Coderivation<Rational> specialize(const DeformationFamily &f,
                                  const ParameterPoint &point);

struct PointRecord {
  ParameterPoint point;
  AlgebraClass cls = AlgebraClass::inconsistent;
};

struct JumpEdge {
  AlgebraClass from = AlgebraClass::inconsistent;
  AlgebraClass to = AlgebraClass::inconsistent;
  std::vector<ParameterPoint> witnesses;
};

struct DeformationGraph {
  AlgebraClass base_class = AlgebraClass::inconsistent;
  std::vector<PointRecord> points;
  std::vector<JumpEdge> edges;  // no self-edges; ordered by target class
};

// Classifies the specialization at every sample point. Requires the
// obstruction to vanish identically (otherwise specializations would not
// even be associative); throws NonVersalError if it does not.
DeformationGraph jump_census(const DeformationFamily &f,
                             const std::vector<ParameterPoint> &points);

// All points with every parameter ranging over
// {-2, -1, -1/2, 0, 1/2, 1, 2}, in lexicographic order.
std::vector<ParameterPoint> default_grid(
    const std::vector<std::string> &params);

// Representatives of the degree-2 cohomology classes of d: the available
// deformation directions. Empty exactly when d is rigid.
std::vector<Coderivation<Rational>> infinitesimal_basis(
    const Coderivation<Rational> &d);

// One solution family of the quadratic codifferential equation [d,d] = 0
// for the generic odd degree-2 coderivation
//   d = sum a_{i,j} psi^{I_j}_i,  I_1..I_4 = (1,1), (1,2), (2,1), (2,2).
// Families 7 and 8 are stored denominator-cleared, with the cleared
// variable recorded as a nonvanishing constraint.
struct SolutionFamily {
  int index = 0;
  std::map<std::string, Poly> assignments;  // keys a11..a14, a21..a24
  std::vector<std::string> nonvanishing;
};

SolutionFamily solution_family(int k);  // k in 1..8

// The generic odd degree-2 coderivation with indeterminate coefficients.
Coderivation<Poly> generic_coderivation();

Coderivation<Poly> family_coderivation(const SolutionFamily &s);

// Exact symbolic check that the family satisfies [d,d] = 0 identically.
bool verify_solution_family(const SolutionFamily &s);

// Specializes the family at rational values of its free variables and
// classifies the resulting algebra. Enforces nonvanishing constraints.
AlgebraClass sample_solution_family(const SolutionFamily &s,
                                    const ParameterPoint &assignment);

}  // namespace coderiv
