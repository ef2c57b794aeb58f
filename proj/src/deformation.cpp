#include "coderiv/deformation.hpp"

#include <algorithm>

namespace coderiv {

DeformationFamily make_family(
    Coderivation<Rational> base,
    std::vector<std::pair<std::string, Coderivation<Rational>>> directions) {
  require_codifferential(base);
  for (const auto &[name, dir] : directions) {
    if (dir.is_zero())
      throw NotCodifferentialError("deformation direction '" + name +
                                   "' is zero");
    for (const auto &[b, c] : dir.terms()) {
      if (b.degree() != 2)
        throw NotCodifferentialError("deformation direction '" + name +
                                     "' has a term of degree != 2");
      if (parity_of(dir.space(), b) != 1)
        throw NotCodifferentialError("deformation direction '" + name +
                                     "' has an even term");
    }
    if (!is_cocycle(base, dir))
      throw NotCodifferentialError("deformation direction '" + name +
                                   "' is not a cocycle of the base");
  }
  return DeformationFamily{std::move(base), std::move(directions)};
}

DeformationFamily builtin_family(int k) {
  using C = Coderivation<Rational>;
  switch (k) {
    case 2:
      return make_family(standard_codifferential(2),
                         {{"t", C::basis({1, 1}, 1)}});
    case 5:
      return make_family(standard_codifferential(5),
                         {{"t", C::basis({1, 1}, 2)}});
    case 6:
      return make_family(
          standard_codifferential(6),
          {{"t1", C::basis({2, 2}, 2)},
           {"t2",
            C::basis({2, 1}, 2) + C::basis({1, 2}, 2) + C::basis({1, 1}, 1)}});
    default:
      throw std::invalid_argument("built-in families exist for k in {2,5,6}");
  }
}

Coderivation<Poly> family_total(const DeformationFamily &f) {
  Coderivation<Poly> total = to_poly_coefficients(f.base);
  for (const auto &[name, dir] : f.directions) {
    Poly t = Poly::variable(name);
    for (const auto &[b, c] : dir.terms()) total.add_term(b, t * Poly(c));
  }
  return total;
}

ObstructionResult obstruction(const DeformationFamily &f) {
  Coderivation<Poly> total = family_total(f);
  Coderivation<Poly> b = bracket(total, total);
  return ObstructionResult{b, b.is_zero()};
}

Coderivation<Rational> specialize(const DeformationFamily &f,
                                  const ParameterPoint &point) {
  return evaluate_coefficients(family_total(f), point);
}

std::vector<ParameterPoint> default_grid(
    const std::vector<std::string> &params) {
  const std::vector<Rational> coords = {
      Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
      Rational(1, 2), Rational(1), Rational(2)};
  std::vector<ParameterPoint> grid = {ParameterPoint{}};
  for (const auto &name : params) {
    std::vector<ParameterPoint> next;
    next.reserve(grid.size() * coords.size());
    for (const auto &p : grid)
      for (const auto &c : coords) {
        ParameterPoint q = p;
        q[name] = c;
        next.push_back(std::move(q));
      }
    grid = std::move(next);
  }
  return grid;
}

DeformationGraph jump_census(const DeformationFamily &f,
                             const std::vector<ParameterPoint> &points) {
  ObstructionResult obs = obstruction(f);
  if (!obs.is_zero)
    throw NonVersalError(
        "the family has a nonvanishing self-bracket; its specializations "
        "are not associative away from the base point");

  DeformationGraph graph;
  graph.base_class = classify(codifferential_to_table(f.base));
  std::map<AlgebraClass, std::vector<ParameterPoint>> targets;
  for (const auto &point : points) {
    Coderivation<Rational> d = specialize(f, point);
    AlgebraClass cls = classify(codifferential_to_table(d));
    graph.points.push_back(PointRecord{point, cls});
    if (cls != graph.base_class) targets[cls].push_back(point);
  }
  for (auto &[cls, witnesses] : targets)
    graph.edges.push_back(JumpEdge{graph.base_class, cls, witnesses});
  return graph;
}

std::vector<Coderivation<Rational>> infinitesimal_basis(
    const Coderivation<Rational> &d) {
  return cohomology(d, 2).degrees[2].representatives;
}

namespace {

Poly V(const std::string &name) { return Poly::variable(name); }

}  // namespace

SolutionFamily solution_family(int k) {
  SolutionFamily s;
  s.index = k;
  auto &a = s.assignments;
  for (const char *key : {"a11", "a12", "a13", "a14", "a21", "a22", "a23",
                          "a24"})
    a[key] = Poly();
  switch (k) {
    case 1:
      a["a13"] = V("a24");
      a["a24"] = V("a24");
      break;
    case 2:
      a["a12"] = V("a24");
      a["a24"] = V("a24");
      break;
    case 3:
      a["a11"] = V("a24");
      a["a24"] = V("a24");
      break;
    case 4:
      a["a11"] = V("a11");
      a["a21"] = V("a21");
      a["a12"] = V("a24");
      a["a13"] = V("a24");
      a["a24"] = V("a24");
      break;
    case 5:
      a["a12"] = V("a12");
      a["a24"] = V("a12");
      a["a11"] = V("a23");
      a["a23"] = V("a23");
      break;
    case 6:
      a["a13"] = V("a13");
      a["a24"] = V("a13");
      a["a11"] = V("a22");
      a["a22"] = V("a22");
      break;
    case 7:
      // Cleared by a23 (a23 != 0): original a11 = (a23^2 - a21 a24)/a23,
      // a22 = a23, free a21, a23, a24.
      a["a11"] = V("a23") * V("a23") - V("a21") * V("a24");
      a["a21"] = V("a21") * V("a23");
      a["a22"] = V("a23") * V("a23");
      a["a23"] = V("a23") * V("a23");
      a["a24"] = V("a24") * V("a23");
      s.nonvanishing = {"a23"};
      break;
    case 8:
      // Cleared by a14 (a14 != 0): original a21 = a13 a23 / a14,
      // a11 = (a13^2 - a13 a24 + a14 a23)/a14, a22 = a23, a12 = a13.
      a["a11"] = V("a13") * V("a13") - V("a13") * V("a24") +
                 V("a14") * V("a23");
      a["a12"] = V("a13") * V("a14");
      a["a13"] = V("a13") * V("a14");
      a["a14"] = V("a14") * V("a14");
      a["a21"] = V("a13") * V("a23");
      a["a22"] = V("a23") * V("a14");
      a["a23"] = V("a23") * V("a14");
      a["a24"] = V("a24") * V("a14");
      s.nonvanishing = {"a14"};
      break;
    default:
      throw std::invalid_argument("solution family index must be 1..8");
  }
  return s;
}

namespace {

const std::array<MultiIndex, 4> kColumns = {
    MultiIndex{1, 1}, MultiIndex{1, 2}, MultiIndex{2, 1}, MultiIndex{2, 2}};

Coderivation<Poly> coderivation_from_entries(
    const std::map<std::string, Poly> &entries) {
  Coderivation<Poly> d(space_0_2());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 4; ++j) {
      std::string key = "a" + std::to_string(i) + std::to_string(j);
      d.add_term(BasisCoderivation{kColumns[j - 1], i}, entries.at(key));
    }
  return d;
}

}  // namespace

Coderivation<Poly> generic_coderivation() {
  std::map<std::string, Poly> entries;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 4; ++j) {
      std::string key = "a" + std::to_string(i) + std::to_string(j);
      entries[key] = Poly::variable(key);
    }
  return coderivation_from_entries(entries);
}

Coderivation<Poly> family_coderivation(const SolutionFamily &s) {
  return coderivation_from_entries(s.assignments);
}

bool verify_solution_family(const SolutionFamily &s) {
  Coderivation<Poly> d = family_coderivation(s);
  return bracket(d, d).is_zero();
}

AlgebraClass sample_solution_family(const SolutionFamily &s,
                                    const ParameterPoint &assignment) {
  for (const auto &var : s.nonvanishing) {
    auto it = assignment.find(var);
    if (it == assignment.end() || scalar_is_zero(it->second))
      throw ConstraintViolationError("variable " + var +
                                     " must be assigned a nonzero value");
  }
  Coderivation<Rational> d =
      evaluate_coefficients(family_coderivation(s), assignment);
  return classify(codifferential_to_table(d));
}

}  // namespace coderiv
