#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coderiv/coderivation.hpp"
#include "coderiv/fp.hpp"
#include "coderiv/linalg.hpp"
#include "coderiv/rational.hpp"

namespace coderiv {

struct NonAssociativeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Isomorphism classes of 2-dimensional associative algebras, over the
// algebraic closure, plus `zero` for the zero multiplication and
// `quadratic_field_extension` for tables that become d1 only after a
// degree-2 extension of the scalars. `inconsistent` means the decision
// tree failed; it is a loud bug signal, never a valid answer.
enum class AlgebraClass {
  zero,
  d1,
  d2,
  d3,
  d4,
  d5,
  d6,
  quadratic_field_extension,
  inconsistent,
};

std::string to_string(AlgebraClass c);

// Multiplication table on the 2-dimensional space V = <x, theta>:
// v_i v_j = sum_k c_{ij}^k v_k with v_1 = x, v_2 = theta.
// Constants stored in the fixed order
//   c11^1 c11^2 c12^1 c12^2 c21^1 c21^2 c22^1 c22^2.
template <class F>
struct MulTable {
  std::array<F, 8> c{};

  static int slot(int i, int j, int k) {
    return ((i - 1) * 2 + (j - 1)) * 2 + (k - 1);
  }
  const F &coeff(int i, int j, int k) const { return c[slot(i, j, k)]; }
  F &coeff(int i, int j, int k) { return c[slot(i, j, k)]; }

  // Product of two coordinate vectors.
  std::array<F, 2> mul(const std::array<F, 2> &a,
                       const std::array<F, 2> &b) const {
    std::array<F, 2> r{F(0), F(0)};
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k)
          r[k - 1] = r[k - 1] + a[i - 1] * b[j - 1] * coeff(i, j, k);
    return r;
  }

  bool is_zero() const {
    for (const F &x : c)
      if (!scalar_is_zero(x)) return false;
    return true;
  }
  bool operator==(const MulTable &) const = default;
};

template <class F>
bool is_associative(const MulTable<F> &m) {
  auto basis = [](int i) {
    std::array<F, 2> v{F(0), F(0)};
    v[i - 1] = F(1);
    return v;
  };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        auto left = m.mul(m.mul(basis(i), basis(j)), basis(k));
        auto right = m.mul(basis(i), m.mul(basis(j), basis(k)));
        if (left != right) return false;
      }
  return true;
}

// First failing triple (i,j,k), if any, for diagnostics.
template <class F>
std::optional<std::array<int, 3>> associativity_failure(const MulTable<F> &m) {
  auto basis = [](int i) {
    std::array<F, 2> v{F(0), F(0)};
    v[i - 1] = F(1);
    return v;
  };
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        auto left = m.mul(m.mul(basis(i), basis(j)), basis(k));
        auto right = m.mul(basis(i), m.mul(basis(j), basis(k)));
        if (left != right) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

// Base change g^*(m)(a, b) = g^{-1}(m(g a, g b)) for an invertible g,
// stored row-major: g = [g11 g12; g21 g22], column i holds the image of v_i.
template <class F>
MulTable<F> apply_automorphism(const std::array<F, 4> &g,
                               const MulTable<F> &m) {
  F det = g[0] * g[3] - g[1] * g[2];
  if (scalar_is_zero(det))
    throw std::invalid_argument("base change matrix is singular");
  F inv_det = F(1) / det;
  // g^{-1} row-major
  std::array<F, 4> h{g[3] * inv_det, -g[1] * inv_det, -g[2] * inv_det,
                     g[0] * inv_det};
  auto G = [&](int a, int i) { return g[(a - 1) * 2 + (i - 1)]; };
  auto H = [&](int k, int cc) { return h[(k - 1) * 2 + (cc - 1)]; };
  MulTable<F> r;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        F s(0);
        for (int a = 1; a <= 2; ++a)
          for (int b = 1; b <= 2; ++b)
            for (int cc = 1; cc <= 2; ++cc)
              s = s + H(k, cc) * G(a, i) * G(b, j) * m.coeff(a, b, cc);
        r.coeff(i, j, k) = s;
      }
  return r;
}

struct StructuralInvariants {
  bool is_commutative = false;
  int square_dim = 0;  // dimension of the span of all products
  bool nilpotent = false;  // all triple products vanish
  bool has_left_identity = false;
  bool has_right_identity = false;
  bool has_two_sided_identity = false;
  // Defined when a two-sided identity exists: whether the minimal
  // quadratic z^2 = alpha z + beta e of a non-scalar element has a double
  // root (vanishing discriminant alpha^2 + 4 beta).
  std::optional<bool> unital_discriminant_zero;

  bool operator==(const StructuralInvariants &) const = default;
};

namespace detail {

// Solve e . v_j = v_j (left) or v_j . e = v_j (right) for e.
template <class F>
bool has_identity_side(const MulTable<F> &m, bool left) {
  Matrix<F> A(4, 2);
  std::vector<F> rhs(4, F(0));
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k) {
      int row = (j - 1) * 2 + (k - 1);
      for (int e = 1; e <= 2; ++e)
        A[row][e - 1] = left ? m.coeff(e, j, k) : m.coeff(j, e, k);
      rhs[row] = (j == k) ? F(1) : F(0);
    }
  return solve(A, rhs).has_value();
}

template <class F>
std::optional<std::array<F, 2>> two_sided_identity(const MulTable<F> &m) {
  Matrix<F> A(8, 2);
  std::vector<F> rhs(8, F(0));
  int row = 0;
  for (int side = 0; side < 2; ++side)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        for (int e = 1; e <= 2; ++e)
          A[row][e - 1] = side == 0 ? m.coeff(e, j, k) : m.coeff(j, e, k);
        rhs[row] = (j == k) ? F(1) : F(0);
        ++row;
      }
  auto sol = solve(A, rhs);
  if (!sol) return std::nullopt;
  return std::array<F, 2>{(*sol)[0], (*sol)[1]};
}

// Minimal quadratic z^2 = alpha z + beta e of a basis element z outside
// the line F e, for a unital table. Returns (alpha, beta).
template <class F>
std::array<F, 2> unital_quadratic(const MulTable<F> &m,
                                  const std::array<F, 2> &e) {
  // Pick z = v_1 unless v_1 is proportional to e.
  std::array<F, 2> z{F(1), F(0)};
  bool v1_scalar = scalar_is_zero(e[1]);  // v1 || e iff e has no v2 part
  if (v1_scalar) z = {F(0), F(1)};
  auto z2 = m.mul(z, z);
  // Solve z2 = alpha z + beta e in coordinates (2x2 system; {z, e} is a
  // basis because e is not proportional to z by the choice above).
  Matrix<F> A(2, 2);
  A[0][0] = z[0];
  A[0][1] = e[0];
  A[1][0] = z[1];
  A[1][1] = e[1];
  auto sol = solve(A, std::vector<F>{z2[0], z2[1]});
  if (!sol) throw std::logic_error("unital quadratic solve failed");
  return {(*sol)[0], (*sol)[1]};
}

// Number of distinct roots of z^2 - alpha z - beta in the base field:
// 0 (irreducible), 1 (double root), or 2 (split). Field-specific.
int root_count(const Rational &alpha, const Rational &beta);

template <int P>
int root_count(Zp<P> alpha, Zp<P> beta) {
  int n = 0;
  for (int r = 0; r < P; ++r) {
    Zp<P> z(r);
    if (z * z - alpha * z - beta == Zp<P>(0)) ++n;
  }
  return n;
}

}  // namespace detail

template <class F>
StructuralInvariants invariants(const MulTable<F> &m) {
  if (auto fail = associativity_failure(m)) {
    const char *name[] = {"x", "theta"};
    std::ostringstream os;
    os << "non-associative multiplication: (" << name[(*fail)[0] - 1] << "*"
       << name[(*fail)[1] - 1] << ")*" << name[(*fail)[2] - 1] << " != "
       << name[(*fail)[0] - 1] << "*(" << name[(*fail)[1] - 1] << "*"
       << name[(*fail)[2] - 1] << ")";
    throw NonAssociativeError(os.str());
  }
  StructuralInvariants inv;
  inv.is_commutative = true;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        if (!(m.coeff(i, j, k) == m.coeff(j, i, k))) inv.is_commutative = false;

  Matrix<F> prods(4, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        prods[(i - 1) * 2 + (j - 1)][k - 1] = m.coeff(i, j, k);
  inv.square_dim = rank(prods);

  inv.nilpotent = true;
  auto basis = [](int i) {
    std::array<F, 2> v{F(0), F(0)};
    v[i - 1] = F(1);
    return v;
  };
  for (int i = 1; i <= 2 && inv.nilpotent; ++i)
    for (int j = 1; j <= 2 && inv.nilpotent; ++j)
      for (int k = 1; k <= 2 && inv.nilpotent; ++k) {
        auto t = m.mul(m.mul(basis(i), basis(j)), basis(k));
        if (!scalar_is_zero(t[0]) || !scalar_is_zero(t[1]))
          inv.nilpotent = false;
      }

  inv.has_left_identity = detail::has_identity_side(m, true);
  inv.has_right_identity = detail::has_identity_side(m, false);
  auto e = detail::two_sided_identity(m);
  inv.has_two_sided_identity = e.has_value();
  if (e) {
    auto [alpha, beta] = detail::unital_quadratic(m, *e);
    F disc = alpha * alpha + F(4) * beta;
    inv.unital_discriminant_zero = scalar_is_zero(disc);
  }
  return inv;
}

template <class F>
AlgebraClass classify(const MulTable<F> &m) {
  StructuralInvariants inv = invariants(m);
  if (m.is_zero()) return AlgebraClass::zero;
  if (inv.nilpotent) return AlgebraClass::d6;
  if (inv.has_two_sided_identity) {
    auto e = detail::two_sided_identity(m);
    auto [alpha, beta] = detail::unital_quadratic(m, *e);
    switch (detail::root_count(alpha, beta)) {
      case 1:
        return AlgebraClass::d5;
      case 2:
        return AlgebraClass::d1;
      default:
        return AlgebraClass::quadratic_field_extension;
    }
  }
  if (inv.has_right_identity && !inv.has_left_identity) return AlgebraClass::d3;
  if (inv.has_left_identity && !inv.has_right_identity) return AlgebraClass::d4;
  if (inv.is_commutative && !inv.has_two_sided_identity && !inv.nilpotent &&
      inv.square_dim == 1)
    return AlgebraClass::d2;
  return AlgebraClass::inconsistent;
}

// The six pairwise nonisomorphic codifferentials on the 0|2 space.
Coderivation<Rational> standard_codifferential(int k);

// Conversion between a multiplication on V and the induced codifferential
// on W = Pi V: the coefficient of psi^{ij}_k equals c_{ij}^k, with the
// identification x <-> w_1, theta <-> w_2.
Coderivation<Rational> table_to_codifferential(const MulTable<Rational> &m);
MulTable<Rational> codifferential_to_table(const Coderivation<Rational> &d);

MulTable<Rational> standard_table(int k);

// Finite-field census: every multiplication table over F_p, filtered for
// associativity, partitioned into base-change orbits.
struct OrbitInfo {
  std::array<int, 8> representative{};  // lexicographically minimal member
  long long orbit_size = 0;
  AlgebraClass cls = AlgebraClass::inconsistent;
  StructuralInvariants inv;
};

struct Census {
  int p = 0;
  long long total = 0;
  long long associative_count = 0;
  std::vector<OrbitInfo> orbits;  // ordered by representative encoding
};

Census enumerate_finite_field(int p);

// All invertible 2x2 matrices over F_p as row-major arrays (for orbit
// checks in tests).
template <int P>
std::vector<std::array<Zp<P>, 4>> all_invertible_matrices() {
  std::vector<std::array<Zp<P>, 4>> out;
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < P; ++b)
      for (int c = 0; c < P; ++c)
        for (int d = 0; d < P; ++d)
          if ((a * d - b * c) % P != 0)
            out.push_back({Zp<P>(a), Zp<P>(b), Zp<P>(c), Zp<P>(d)});
  return out;
}

template <int P>
MulTable<Zp<P>> table_mod_p(const MulTable<Rational> &m) {
  MulTable<Zp<P>> r;
  for (int s = 0; s < 8; ++s) {
    const Rational &q = m.c[s];
    Integer num = q.get_num(), den = q.get_den();
    long long n = mpz_fdiv_ui(num.get_mpz_t(), P);
    long long d = mpz_fdiv_ui(den.get_mpz_t(), P);
    if (d == 0)
      throw std::invalid_argument("denominator not invertible mod p");
    r.c[s] = Zp<P>(n) / Zp<P>(d);
  }
  return r;
}

}  // namespace coderiv
