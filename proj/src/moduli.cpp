#include "coderiv/moduli.hpp"

#include <set>

namespace coderiv {

std::string to_string(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::zero:
      return "zero";
    case AlgebraClass::d1:
      return "d1";
    case AlgebraClass::d2:
      return "d2";
    case AlgebraClass::d3:
      return "d3";
    case AlgebraClass::d4:
      return "d4";
    case AlgebraClass::d5:
      return "d5";
    case AlgebraClass::d6:
      return "d6";
    case AlgebraClass::quadratic_field_extension:
      return "quadratic_field_extension";
    case AlgebraClass::inconsistent:
      return "inconsistent";
  }
  return "inconsistent";
}

namespace detail {

int root_count(const Rational &alpha, const Rational &beta) {
  Rational disc = alpha * alpha + 4 * beta;
  if (scalar_is_zero(disc)) return 1;
  return is_rational_square(disc) ? 2 : 0;
}

}  // namespace detail

Coderivation<Rational> standard_codifferential(int k) {
  using C = Coderivation<Rational>;
  switch (k) {
    case 1:
      return C::basis({2, 2}, 2) + C::basis({1, 1}, 1);
    case 2:
      return C::basis({2, 2}, 2);
    case 3:
      return C::basis({2, 2}, 2) + C::basis({1, 2}, 1);
    case 4:
      return C::basis({2, 2}, 2) + C::basis({2, 1}, 1);
    case 5:
      return C::basis({2, 2}, 2) + C::basis({1, 2}, 1) + C::basis({2, 1}, 1);
    case 6:
      return C::basis({2, 2}, 1);
    default:
      throw std::invalid_argument("standard codifferential index must be 1..6");
  }
}

Coderivation<Rational> table_to_codifferential(const MulTable<Rational> &m) {
  Coderivation<Rational> d(space_0_2());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        d.add_term(BasisCoderivation{{i, j}, k}, m.coeff(i, j, k));
  return d;
}

MulTable<Rational> codifferential_to_table(const Coderivation<Rational> &d) {
  MulTable<Rational> m;
  for (int s = 0; s < 8; ++s) m.c[s] = Rational(0);
  for (const auto &[b, c] : d.terms()) {
    if (b.degree() != 2)
      throw std::invalid_argument(
          "only a degree-2 coderivation encodes a multiplication table");
    m.coeff(b.in[0], b.in[1], b.out) = c;
  }
  return m;
}

MulTable<Rational> standard_table(int k) {
  return codifferential_to_table(standard_codifferential(k));
}

namespace {

template <int P>
long long encode(const MulTable<Zp<P>> &m) {
  long long e = 0;
  for (int s = 0; s < 8; ++s) e = e * P + m.c[s].v;
  return e;
}

template <int P>
MulTable<Zp<P>> decode(long long e) {
  MulTable<Zp<P>> m;
  for (int s = 7; s >= 0; --s) {
    m.c[s] = Zp<P>(e % P);
    e /= P;
  }
  return m;
}

template <int P>
Census census_impl() {
  Census census;
  census.p = P;
  long long total = 1;
  for (int s = 0; s < 8; ++s) total *= P;
  census.total = total;

  auto gl2 = all_invertible_matrices<P>();
  std::vector<bool> seen(total, false);

  for (long long e = 0; e < total; ++e) {
    MulTable<Zp<P>> m = decode<P>(e);
    if (!is_associative(m)) continue;
    ++census.associative_count;
    if (seen[e]) continue;
    // New orbit; e is its minimal encoding because the scan is ascending.
    std::set<long long> orbit;
    for (const auto &g : gl2) orbit.insert(encode<P>(apply_automorphism(g, m)));
    for (long long member : orbit) seen[member] = true;
    OrbitInfo info;
    for (int s = 0; s < 8; ++s) info.representative[s] = m.c[s].v;
    info.orbit_size = static_cast<long long>(orbit.size());
    info.cls = classify(m);
    info.inv = invariants(m);
    census.orbits.push_back(std::move(info));
  }
  return census;
}

}  // namespace

Census enumerate_finite_field(int p) {
  switch (p) {
    case 2:
      return census_impl<2>();
    case 3:
      return census_impl<3>();
    case 5:
      return census_impl<5>();
    default:
      throw std::invalid_argument("census supports p in {2, 3, 5} only");
  }
}

}  // namespace coderiv
