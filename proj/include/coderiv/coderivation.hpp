#pragma once

#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "coderiv/polynomial.hpp"
#include "coderiv/rational.hpp"

namespace coderiv {

using Parity = int;  // 0 = even, 1 = odd

// Z2-graded vector space W = <w_1 .. w_m>, one parity per basis vector.
struct GradedSpace {
  std::vector<Parity> parities;

  int dim() const { return static_cast<int>(parities.size()); }
  Parity parity(int i) const { return parities.at(i - 1); }  // 1-based
  bool operator==(const GradedSpace &) const = default;
};

// The space this project studies: two odd generators.
inline GradedSpace space_0_2() { return GradedSpace{{1, 1}}; }

// Multi-index I = (i_1, ..., i_n), entries in 1..m. Empty allowed.
using MultiIndex = std::vector<int>;

inline Parity word_parity(const GradedSpace &sp, const MultiIndex &w) {
  int p = 0;
  for (int i : w) p += sp.parity(i);
  return p & 1;
}

inline std::string multiindex_str(const MultiIndex &I) {
  std::string s;
  for (int i : I) s += std::to_string(i);
  return s;
}

// phi^I_i : W^{l(I)} -> W, w_J |-> [J == I] w_i, extended to a coderivation
// of the tensor coalgebra by the insertion rule. Written psi^I_i when odd.
struct BasisCoderivation {
  MultiIndex in;  // I
  int out;        // i

  int degree() const { return static_cast<int>(in.size()); }
  bool operator==(const BasisCoderivation &) const = default;
  // Canonical order: by length of I, then lexicographically on I, then on i.
  friend std::strong_ordering operator<=>(const BasisCoderivation &a,
                                          const BasisCoderivation &b) {
    if (auto c = a.in.size() <=> b.in.size(); c != 0) return c;
    if (auto c = a.in <=> b.in; c != 0) return c;
    return a.out <=> b.out;
  }
};

inline Parity parity_of(const GradedSpace &sp, const BasisCoderivation &b) {
  return (sp.parity(b.out) + word_parity(sp, b.in)) & 1;
}

struct MixedParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SpaceMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Formal linear combination of basis coderivations over a scalar ring S
// (Rational or Poly). Canonical form: no zero coefficients. Terms may mix
// degrees; parity() is defined only when all terms share one parity.
template <class S>
class Coderivation {
 public:
  using TermMap = std::map<BasisCoderivation, S>;

  Coderivation() : space_(space_0_2()) {}
  explicit Coderivation(GradedSpace sp) : space_(std::move(sp)) {}

  static Coderivation zero(const GradedSpace &sp = space_0_2()) {
    return Coderivation(sp);
  }
  static Coderivation basis(MultiIndex I, int out, S coeff = S(1),
                            const GradedSpace &sp = space_0_2()) {
    Coderivation c(sp);
    c.add_term(BasisCoderivation{std::move(I), out}, std::move(coeff));
    return c;
  }

  const GradedSpace &space() const { return space_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisCoderivation &b, const S &c) {
    if (scalar_is_zero(c)) return;
    for (int i : b.in)
      if (i < 1 || i > space_.dim())
        throw std::invalid_argument("basis index out of range");
    if (b.out < 1 || b.out > space_.dim())
      throw std::invalid_argument("output index out of range");
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_[b] = c;
    } else {
      it->second += c;
      if (scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  Coderivation operator-() const {
    Coderivation r(space_);
    for (const auto &[b, c] : terms_) r.terms_[b] = -c;
    return r;
  }
  Coderivation &operator+=(const Coderivation &o) {
    require_same_space(o);
    for (const auto &[b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Coderivation &operator-=(const Coderivation &o) {
    require_same_space(o);
    for (const auto &[b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  friend Coderivation operator+(Coderivation a, const Coderivation &b) {
    return a += b;
  }
  friend Coderivation operator-(Coderivation a, const Coderivation &b) {
    return a -= b;
  }
  friend Coderivation operator*(const S &s, const Coderivation &a) {
    Coderivation r(a.space_);
    for (const auto &[b, c] : a.terms_) r.add_term(b, s * c);
    return r;
  }
  bool operator==(const Coderivation &o) const {
    return space_ == o.space_ && terms_ == o.terms_;
  }

  // Parity shared by all terms; zero counts as even. Throws
  // MixedParityError listing the offending terms otherwise.
  Parity parity() const {
    std::optional<Parity> p;
    for (const auto &[b, c] : terms_) {
      Parity q = parity_of(space_, b);
      if (!p) {
        p = q;
      } else if (*p != q) {
        std::ostringstream os;
        os << "mixed parity:";
        for (const auto &[bb, cc] : terms_)
          os << " phi[" << multiindex_str(bb.in) << "->" << bb.out << "]("
             << (parity_of(space_, bb) ? "odd" : "even") << ")";
        throw MixedParityError(os.str());
      }
    }
    return p.value_or(0);
  }

  // Degree shared by all terms, if any; nullopt for mixed or zero.
  std::optional<int> uniform_degree() const {
    std::optional<int> d;
    for (const auto &[b, c] : terms_) {
      if (!d)
        d = b.degree();
      else if (*d != b.degree())
        return std::nullopt;
    }
    return d;
  }

  void require_same_space(const Coderivation &o) const {
    if (!(space_ == o.space_))
      throw SpaceMismatchError("coderivations live on different graded spaces");
  }

 private:
  GradedSpace space_;
  TermMap terms_;
};

// Gerstenhaber composition: on basis elements,
//   phi^I_i o phi^J_j =
//     sum over slots k with I_k = j of
//       (-1)^{(|w_{I_1}|+...+|w_{I_{k-1}}|) * |phi^J_j|} phi^{(I,J,k)}_i
// where (I,J,k) replaces the k-th entry of I by the whole sequence J
// (empty J deletes the slot). Extended bilinearly; the sign uses the
// parity of the individual second-argument term.
template <class S>
Coderivation<S> compose(const Coderivation<S> &f, const Coderivation<S> &g) {
  f.require_same_space(g);
  const GradedSpace &sp = f.space();
  Coderivation<S> result(sp);
  for (const auto &[bf, cf] : f.terms()) {
    for (const auto &[bg, cg] : g.terms()) {
      Parity pg = parity_of(sp, bg);
      int prefix_parity = 0;
      for (size_t k = 0; k < bf.in.size(); ++k) {
        if (bf.in[k] == bg.out) {
          MultiIndex merged;
          merged.reserve(bf.in.size() + bg.in.size() - 1);
          merged.insert(merged.end(), bf.in.begin(), bf.in.begin() + k);
          merged.insert(merged.end(), bg.in.begin(), bg.in.end());
          merged.insert(merged.end(), bf.in.begin() + k + 1, bf.in.end());
          S term = cf * cg;
          if ((prefix_parity & pg & 1) != 0) term = -term;
          result.add_term(BasisCoderivation{std::move(merged), bf.out}, term);
        }
        prefix_parity = (prefix_parity + sp.parity(bf.in[k])) & 1;
      }
    }
  }
  return result;
}

// Graded commutator [f,g] = f o g - (-1)^{|f||g|} g o f.
// Both arguments must have definite parity.
template <class S>
Coderivation<S> bracket(const Coderivation<S> &f, const Coderivation<S> &g) {
  Parity pf = f.parity(), pg = g.parity();
  Coderivation<S> fg = compose(f, g);
  Coderivation<S> gf = compose(g, f);
  return (pf & pg) ? fg + gf : fg - gf;
}

// The coderivation extension of f applied to a basis word:
//   f(w_1...w_n) = sum_i (-1)^{(|w_1|+...+|w_i|)|f|}
//                        w_1...w_i f(w_{i+1}...w_{i+k}) w_{i+k+1}...w_n.
// Returns the resulting combination of basis words of the tensor algebra.
template <class S>
std::map<MultiIndex, S> evaluate_extended(const Coderivation<S> &f,
                                          const MultiIndex &word) {
  const GradedSpace &sp = f.space();
  for (int i : word)
    if (i < 1 || i > sp.dim())
      throw std::invalid_argument("word index out of range");
  std::map<MultiIndex, S> out;
  for (const auto &[b, c] : f.terms()) {
    const size_t k = b.in.size();
    if (word.size() < k) continue;
    Parity pf = parity_of(sp, b);
    int prefix_parity = 0;
    for (size_t i = 0; i + k <= word.size(); ++i) {
      bool match = true;
      for (size_t t = 0; t < k; ++t)
        if (word[i + t] != b.in[t]) {
          match = false;
          break;
        }
      if (match) {
        MultiIndex result;
        result.reserve(word.size() - k + 1);
        result.insert(result.end(), word.begin(), word.begin() + i);
        result.push_back(b.out);
        result.insert(result.end(), word.begin() + i + k, word.end());
        S term = c;
        if ((prefix_parity & pf & 1) != 0) term = -term;
        auto it = out.find(result);
        if (it == out.end()) {
          out[result] = term;
        } else {
          it->second += term;
          if (scalar_is_zero(it->second)) out.erase(it);
        }
      }
      // For degree-0 terms the loop visits the gap after the last letter;
      // there is no letter there to fold into the prefix parity.
      if (i < word.size())
        prefix_parity = (prefix_parity + sp.parity(word[i])) & 1;
    }
  }
  return out;
}

// Composition computed the slow way, straight from the definition: the
// corestriction of f-extended-after-g-extended, read off on every basis
// word of W^{p+q-1}. Serves as an independent oracle for compose().
// Requires uniform degrees on both arguments.
template <class S>
Coderivation<S> compose_by_evaluation(const Coderivation<S> &f,
                                      const Coderivation<S> &g) {
  f.require_same_space(g);
  const GradedSpace &sp = f.space();
  Coderivation<S> result(sp);
  if (f.is_zero() || g.is_zero()) return result;
  auto p = f.uniform_degree(), q = g.uniform_degree();
  if (!p || !q)
    throw std::invalid_argument("composition oracle needs uniform degrees");
  int n = *p + *q - 1;
  if (n < 0) return result;

  // Iterate all m^n words of length n.
  MultiIndex word(n, 1);
  const int m = sp.dim();
  while (true) {
    auto expanded = evaluate_extended(g, word);
    for (const auto &[mid, c] : expanded) {
      // Words of length p feed the corestriction of f directly.
      for (const auto &[bf, cf] : f.terms()) {
        if (bf.in == mid)
          result.add_term(BasisCoderivation{word, bf.out}, c * cf);
      }
    }
    // next word
    int pos = n - 1;
    while (pos >= 0 && word[pos] == m) {
      word[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++word[pos];
  }
  return result;
}

// lambda^P: prefix insertion, phi^J_j |-> phi^{PJ}_j on every term.
template <class S>
Coderivation<S> lambda_insert(const MultiIndex &prefix,
                              const Coderivation<S> &f) {
  Coderivation<S> r(f.space());
  for (const auto &[b, c] : f.terms()) {
    MultiIndex merged = prefix;
    merged.insert(merged.end(), b.in.begin(), b.in.end());
    r.add_term(BasisCoderivation{std::move(merged), b.out}, c);
  }
  return r;
}

// Decleene map theta = lambda^{21} + lambda^{12} on the two-generator space.
template <class S>
Coderivation<S> decleene_map(const Coderivation<S> &f) {
  if (f.space().dim() != 2)
    throw std::invalid_argument("Decleene map is defined on the 0|2 space");
  return lambda_insert<S>({2, 1}, f) + lambda_insert<S>({1, 2}, f);
}

// Decleene cocycles:
//   Ch^{2n}_c = theta^n phi_c,   Ch^{2n+1}_c = theta^n phi^{2}_c.
// The odd-degree base case is the degree-1 element phi^2_c: it is the
// choice that lands Ch^n_c in C^n for every n and is itself a cocycle for
// psi^{22}_1 (the degree-2 candidate phi^{21}_c is neither).
inline Coderivation<Rational> decleene_cocycle(int n, int component) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (component != 1 && component != 2)
    throw std::invalid_argument("component must be 1 or 2");
  Coderivation<Rational> c =
      (n % 2 == 0) ? Coderivation<Rational>::basis({}, component)
                   : Coderivation<Rational>::basis({2}, component);
  for (int k = 0; k < n / 2; ++k) c = decleene_map(c);
  return c;
}

// Coefficient-ring conversions.
inline Coderivation<Poly> to_poly_coefficients(const Coderivation<Rational> &f) {
  Coderivation<Poly> r(f.space());
  for (const auto &[b, c] : f.terms()) r.add_term(b, Poly(c));
  return r;
}

inline Coderivation<Rational> evaluate_coefficients(
    const Coderivation<Poly> &f, const std::map<std::string, Rational> &point) {
  Coderivation<Rational> r(f.space());
  for (const auto &[b, c] : f.terms()) r.add_term(b, c.eval(point));
  return r;
}

}  // namespace coderiv
