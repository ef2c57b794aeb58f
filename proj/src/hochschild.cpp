#include "coderiv/hochschild.hpp"

#include <sstream>

namespace coderiv {

void require_codifferential(const Coderivation<Rational> &d) {
  for (const auto &[b, c] : d.terms()) {
    if (b.degree() != 2)
      throw NotCodifferentialError("codifferential terms must have degree 2");
    if (parity_of(d.space(), b) != 1)
      throw NotCodifferentialError("codifferential terms must be odd");
  }
  if (!bracket(d, d).is_zero())
    throw NotCodifferentialError("self-bracket [d,d] is nonzero");
}

CochainBasis CochainBasis::make(const GradedSpace &sp, int n) {
  if (n < 0) throw std::invalid_argument("negative cochain degree");
  CochainBasis basis;
  basis.space = sp;
  basis.n = n;
  const int m = sp.dim();
  MultiIndex word(n, 1);
  while (true) {
    for (int out = 1; out <= m; ++out)
      basis.elements.push_back(BasisCoderivation{word, out});
    int pos = n - 1;
    while (pos >= 0 && word[pos] == m) {
      word[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++word[pos];
  }
  return basis;
}

int CochainBasis::index_of(const BasisCoderivation &b) const {
  // Elements are generated in canonical order: rank the multi-index as a
  // base-m numeral, then the output index.
  const int m = space.dim();
  if (static_cast<int>(b.in.size()) != n)
    throw std::invalid_argument("degree mismatch against cochain basis");
  long long r = 0;
  for (int i : b.in) r = r * m + (i - 1);
  return static_cast<int>(r * m + (b.out - 1));
}

std::vector<Rational> to_vector(const CochainBasis &basis,
                                const Coderivation<Rational> &phi) {
  std::vector<Rational> v(basis.dim(), Rational(0));
  for (const auto &[b, c] : phi.terms()) v[basis.index_of(b)] = c;
  return v;
}

Coderivation<Rational> from_vector(const CochainBasis &basis,
                                   const std::vector<Rational> &v) {
  if (static_cast<int>(v.size()) != basis.dim())
    throw std::invalid_argument("vector length does not match cochain basis");
  Coderivation<Rational> phi(basis.space);
  for (int i = 0; i < basis.dim(); ++i)
    phi.add_term(basis.elements[i], v[i]);
  return phi;
}

Coderivation<Rational> coboundary(const Coderivation<Rational> &d,
                                  const Coderivation<Rational> &phi) {
  require_codifferential(d);
  if (!phi.uniform_degree() && !phi.is_zero())
    throw std::invalid_argument("coboundary needs a uniform-degree cochain");
  return bracket(d, phi);
}

Matrix<Rational> coboundary_matrix(const Coderivation<Rational> &d, int n) {
  require_codifferential(d);
  CochainBasis src = CochainBasis::make(d.space(), n);
  CochainBasis dst = CochainBasis::make(d.space(), n + 1);
  Matrix<Rational> m(dst.dim(), src.dim());
  for (int c = 0; c < src.dim(); ++c) {
    Coderivation<Rational> phi(d.space());
    phi.add_term(src.elements[c], Rational(1));
    Coderivation<Rational> img = bracket(d, phi);
    for (const auto &[b, coeff] : img.terms()) m[dst.index_of(b)][c] = coeff;
  }
  return m;
}

CohomologyReport cohomology(const Coderivation<Rational> &d, int max_degree) {
  require_codifferential(d);
  CohomologyReport report;
  report.d = d;
  std::optional<Matrix<Rational>> below;  // D: C^{n-1} -> C^n
  for (int n = 0; n <= max_degree; ++n) {
    Matrix<Rational> Dn = coboundary_matrix(d, n);
    CochainBasis basis = CochainBasis::make(d.space(), n);
    DegreeCohomology deg;
    deg.n = n;
    deg.cochain_dim = basis.dim();
    auto kernel = kernel_basis(Dn);
    deg.kernel_dim = static_cast<int>(kernel.size());

    RowSpace<Rational> span(basis.dim());
    if (below) {
      for (int c = 0; c < below->cols; ++c) {
        std::vector<Rational> col(below->rows);
        for (int r = 0; r < below->rows; ++r) col[r] = (*below)[r][c];
        bool nonzero = false;
        for (const auto &x : col)
          if (!scalar_is_zero(x)) {
            nonzero = true;
            break;
          }
        if (nonzero) span.insert(std::move(col));
      }
    }
    deg.image_dim = span.rank();
    for (auto &v : kernel)
      if (span.insert(v)) deg.representatives.push_back(from_vector(basis, v));
    deg.h_dim = deg.kernel_dim - deg.image_dim;
    if (deg.h_dim != static_cast<int>(deg.representatives.size()))
      throw std::logic_error("cohomology dimension bookkeeping is broken");
    report.degrees.push_back(std::move(deg));
    below = std::move(Dn);
  }
  return report;
}

bool is_cocycle(const Coderivation<Rational> &d,
                const Coderivation<Rational> &phi) {
  return coboundary(d, phi).is_zero();
}

std::optional<Coderivation<Rational>> is_coboundary(
    const Coderivation<Rational> &d, const Coderivation<Rational> &phi) {
  require_codifferential(d);
  if (phi.is_zero()) return Coderivation<Rational>::zero(d.space());
  auto deg = phi.uniform_degree();
  if (!deg) throw std::invalid_argument("cochain must have uniform degree");
  if (*deg == 0) return std::nullopt;
  int n = *deg - 1;
  Matrix<Rational> Dn = coboundary_matrix(d, n);
  CochainBasis src = CochainBasis::make(d.space(), n);
  CochainBasis dst = CochainBasis::make(d.space(), *deg);
  auto sol = solve(Dn, to_vector(dst, phi));
  if (!sol) return std::nullopt;
  return from_vector(src, *sol);
}

bool verify_d_squared(const Coderivation<Rational> &d, int n) {
  Matrix<Rational> a = coboundary_matrix(d, n + 1);
  Matrix<Rational> b = coboundary_matrix(d, n);
  // The coboundary matrices are sparse; collect the support of each row of
  // a once so the product costs what the nonzero entries cost.
  std::vector<std::vector<int>> support(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      if (!scalar_is_zero(a[i][k])) support[i].push_back(k);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      Rational s(0);
      for (int k : support[i]) s += a[i][k] * b[k][j];
      if (!scalar_is_zero(s)) return false;
    }
  return true;
}

std::optional<Coderivation<Rational>> extend_to_cocycle(
    const Coderivation<Rational> &d, const Coderivation<Rational> &phi,
    int free_component) {
  require_codifferential(d);
  if (free_component < 1 || free_component > d.space().dim())
    throw std::invalid_argument("component out of range");
  auto deg = phi.uniform_degree();
  if (!deg) throw std::invalid_argument("cochain must have uniform degree");
  int n = *deg;
  CochainBasis src = CochainBasis::make(d.space(), n);
  CochainBasis dst = CochainBasis::make(d.space(), n + 1);

  // Columns: basis cochains with the free output component.
  std::vector<int> free_cols;
  for (int c = 0; c < src.dim(); ++c)
    if (src.elements[c].out == free_component) free_cols.push_back(c);

  Matrix<Rational> full = coboundary_matrix(d, n);
  Matrix<Rational> restricted(dst.dim(), static_cast<int>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j)
    for (int r = 0; r < dst.dim(); ++r)
      restricted[r][static_cast<int>(j)] = full[r][free_cols[j]];

  std::vector<Rational> rhs = to_vector(dst, coboundary(d, phi));
  for (auto &x : rhs) x = -x;
  auto sol = solve(restricted, rhs);
  if (!sol) return std::nullopt;

  Coderivation<Rational> completed = phi;
  for (size_t j = 0; j < free_cols.size(); ++j)
    completed.add_term(src.elements[free_cols[j]], (*sol)[j]);
  return completed;
}

}  // namespace coderiv
