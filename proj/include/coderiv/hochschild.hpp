#pragma once

#include <optional>
#include <vector>

#include "coderiv/coderivation.hpp"
#include "coderiv/linalg.hpp"

namespace coderiv {

struct NotCodifferentialError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Throws NotCodifferentialError unless every term of d is odd of degree 2
// and [d,d] = 0. The zero coderivation passes vacuously.
void require_codifferential(const Coderivation<Rational> &d);

// Ordered basis of the cochain space C^n = Hom(W^n, W): all 2^{n+1}
// basis coderivations of degree n on the 0|2 space, in canonical order.
struct CochainBasis {
  GradedSpace space;
  int n = 0;
  std::vector<BasisCoderivation> elements;

  static CochainBasis make(const GradedSpace &sp, int n);
  int dim() const { return static_cast<int>(elements.size()); }
  int index_of(const BasisCoderivation &b) const;
};

std::vector<Rational> to_vector(const CochainBasis &basis,
                                const Coderivation<Rational> &phi);
Coderivation<Rational> from_vector(const CochainBasis &basis,
                                   const std::vector<Rational> &v);

// D(phi) = [d, phi]. d must be a codifferential, phi of uniform degree.
Coderivation<Rational> coboundary(const Coderivation<Rational> &d,
                                  const Coderivation<Rational> &phi);

// Matrix of D: C^n -> C^{n+1}, rows indexed by CochainBasis(n+1), columns
// by CochainBasis(n). Column c is coboundary(d, basis[c]).
Matrix<Rational> coboundary_matrix(const Coderivation<Rational> &d, int n);

struct DegreeCohomology {
  int n = 0;
  int cochain_dim = 0;
  int kernel_dim = 0;
  int image_dim = 0;  // rank of D: C^{n-1} -> C^n, zero at n = 0
  int h_dim = 0;
  std::vector<Coderivation<Rational>> representatives;
};

struct CohomologyReport {
  Coderivation<Rational> d;
  std::vector<DegreeCohomology> degrees;  // n = 0 .. max_degree

  std::vector<int> dims() const {
    std::vector<int> v;
    for (const auto &g : degrees) v.push_back(g.h_dim);
    return v;
  }
};

// Exact cohomology of D = [d,-] for n = 0..max_degree. H^0 is the kernel
// of D on C^0 (nothing sits below degree 0). Representatives are the
// reduced-echelon kernel vectors independent of the image span, in
// canonical basis order.
CohomologyReport cohomology(const Coderivation<Rational> &d, int max_degree);

bool is_cocycle(const Coderivation<Rational> &d,
                const Coderivation<Rational> &phi);

// A preimage xi with D(xi) = phi, or nullopt. Degree-0 phi has nothing
// below it, so the answer there is nullopt unless phi = 0.
std::optional<Coderivation<Rational>> is_coboundary(
    const Coderivation<Rational> &d, const Coderivation<Rational> &phi);

// Checks D_{n+1} . D_n = 0 as an exact matrix product.
bool verify_d_squared(const Coderivation<Rational> &d, int n);

// Components: C^n splits by output index. Given phi supported on one
// output component, look for xi supported on the *other* components with
// D(phi + xi) = 0. Returns the completed cocycle phi + xi if one exists.
std::optional<Coderivation<Rational>> extend_to_cocycle(
    const Coderivation<Rational> &d, const Coderivation<Rational> &phi,
    int free_component);

}  // namespace coderiv
