#pragma once

#include <string>
#include <vector>

#include "coderiv/deformation.hpp"

namespace coderiv {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "-2", "5/4". Exact; canonicalized.
Rational parse_rational(const std::string &s);

// Text syntax for coderivations:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := integer [ '/' integer ]
//           | name [ '^' integer ]            (polynomial variable)
//           | ('phi'|'psi') '[' digits? '->' digit ']'
//           | '(' expr ')' [ '^' integer ]
// with at most one basis symbol per term. Examples:
//   "psi[22->2] + psi[11->1]", "phi[->2]", "t*psi[11->1]",
//   "3/4*phi[12->2]", "(1+t)*psi[22->2]".
// phi and psi are interchangeable on input; display uses psi for odd terms.
Coderivation<Poly> parse_coderivation(const std::string &s);

// Same, but rejects polynomial variables.
Coderivation<Rational> parse_rational_coderivation(const std::string &s);

// 8 structure constants in the order
//   c11^1 c11^2 c12^1 c12^2 c21^1 c21^2 c22^1 c22^2,
// comma/space separated ("0,0,0,0,0,0,1,0") or a JSON array
// ("[0,0,0,0,0,0,\"1/2\",0]").
MulTable<Rational> parse_table(const std::string &s);

// Deformation family definition, as accepted by the CLI:
// {"base": "<coderivation>", "directions": {"t": "<coderivation>", ...},
//  "grid": [{"t": "1"}, ...]}   (grid optional)
struct FamilySpec {
  DeformationFamily family;
  std::vector<ParameterPoint> grid;
  bool has_grid = false;
};

FamilySpec family_from_json_text(const std::string &text);

std::string format_rational(const Rational &q);
std::string format_polynomial(const Poly &p);
std::string format_coderivation(const Coderivation<Rational> &c);
std::string format_coderivation(const Coderivation<Poly> &c);

// One product of a table as a combination of x and theta, e.g. "x + 2*theta".
std::string format_product(const MulTable<Rational> &m, int i, int j);

}  // namespace coderiv
