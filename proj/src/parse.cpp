#include "coderiv/parse.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace coderiv {

namespace {

Rational rational_from_parts(const std::string &num, const std::string &den) {
  try {
    Integer n(num, 10);
    if (den.empty()) return Rational(n);
    Integer d(den, 10);
    if (sgn(d) == 0) throw ParseError("zero denominator in rational literal");
    Rational q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument &) {
    throw ParseError("malformed rational literal: " + num +
                     (den.empty() ? "" : "/" + den));
  }
}

// Recursive-descent parser over a linear token scan. Values are affine in
// the basis symbols: a polynomial scalar part plus a coderivation part.
class CoderivationParser {
 public:
  explicit CoderivationParser(const std::string &src) : src_(src) {}

  Coderivation<Poly> parse() {
    Value v = parse_expr();
    skip_ws();
    if (pos_ != src_.size())
      fail("unexpected trailing input at position " + std::to_string(pos_));
    if (!v.scalar.is_zero())
      fail("term without a basis symbol (a coderivation expression must "
           "attach every coefficient to phi[..] or psi[..])");
    return v.lin;
  }

 private:
  struct Value {
    Poly scalar;
    Coderivation<Poly> lin;

    bool has_lin() const { return !lin.is_zero(); }
  };

  [[noreturn]] void fail(const std::string &msg) { throw ParseError(msg); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  std::string read_digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected digits at position " + std::to_string(start));
    return src_.substr(start, pos_ - start);
  }

  std::string read_name() {
    skip_ws();
    size_t start = pos_;
    auto alpha = [&](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto alnum = [&](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos_ >= src_.size() || !alpha(src_[pos_]))
      fail("expected a name at position " + std::to_string(start));
    while (pos_ < src_.size() && alnum(src_[pos_])) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  unsigned read_exponent() {
    std::string digits = read_digits();
    if (digits.size() > 4) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  Value parse_expr() {
    bool negate = false;
    skip_ws();
    if (eat('+')) {
    } else if (eat('-')) {
      negate = true;
    }
    Value acc = parse_term();
    if (negate) {
      acc.scalar = -acc.scalar;
      acc.lin = -acc.lin;
    }
    while (true) {
      skip_ws();
      if (eat('+')) {
        Value t = parse_term();
        acc.scalar += t.scalar;
        acc.lin += t.lin;
      } else if (eat('-')) {
        Value t = parse_term();
        acc.scalar -= t.scalar;
        acc.lin -= t.lin;
      } else {
        break;
      }
    }
    return acc;
  }

  Value parse_term() {
    Value acc = parse_factor();
    while (eat('*')) {
      Value f = parse_factor();
      if (acc.has_lin() && f.has_lin())
        fail("cannot multiply two coderivation factors");
      if (f.has_lin()) {
        f.lin = acc.scalar * f.lin;
        f.scalar *= acc.scalar;
        acc = std::move(f);
      } else {
        acc.lin = f.scalar * acc.lin;
        acc.scalar *= f.scalar;
      }
    }
    return acc;
  }

  Value parse_factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      std::string den;
      if (eat('/')) den = read_digits();
      Value v;
      v.scalar = Poly(rational_from_parts(num, den));
      return v;
    }
    if (c == '(') {
      ++pos_;
      Value inner = parse_expr();
      if (!eat(')')) fail("missing ')'");
      if (peek() == '^') {
        ++pos_;
        if (inner.has_lin()) fail("cannot raise a coderivation to a power");
        unsigned e = read_exponent();
        Poly p(1);
        for (unsigned i = 0; i < e; ++i) p *= inner.scalar;
        inner.scalar = p;
      }
      return inner;
    }
    std::string name = read_name();
    if (name == "phi" || name == "psi") return parse_basis();
    unsigned exp = 1;
    if (peek() == '^') {
      ++pos_;
      exp = read_exponent();
    }
    Value v;
    v.scalar = Poly::variable(name, exp);
    return v;
  }

  // The bracketed part of phi[I->i] / psi[I->i]; the keyword was consumed.
  Value parse_basis() {
    if (!eat('[')) fail("expected '[' after phi/psi");
    skip_ws();
    MultiIndex in;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      int idx = src_[pos_] - '0';
      if (idx < 1 || idx > 2)
        fail("basis index must be 1 or 2 on the two-generator space");
      in.push_back(idx);
      ++pos_;
    }
    skip_ws();
    if (pos_ + 1 >= src_.size() || src_[pos_] != '-' || src_[pos_ + 1] != '>')
      fail("expected '->' inside phi[..]");
    pos_ += 2;
    std::string out_digits = read_digits();
    if (out_digits.size() != 1 || (out_digits[0] != '1' && out_digits[0] != '2'))
      fail("output index must be 1 or 2");
    if (!eat(']')) fail("expected ']'");
    Value v;
    v.lin = Coderivation<Poly>::basis(in, out_digits[0] - '0', Poly(1));
    return v;
  }

  const std::string &src_;
  size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(const std::string &s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  size_t end = s.find_last_not_of(" \t\r\n");
  if (begin == std::string::npos) throw ParseError("empty rational literal");
  std::string t = s.substr(begin, end - begin + 1);
  bool neg = false;
  size_t i = 0;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) {
    neg = (t[i] == '-');
    ++i;
  }
  size_t slash = t.find('/', i);
  std::string num = t.substr(i, slash == std::string::npos ? std::string::npos
                                                           : slash - i);
  std::string den =
      slash == std::string::npos ? std::string() : t.substr(slash + 1);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("malformed rational literal: " + s);
  if (slash != std::string::npos &&
      (den.empty() || den.find_first_not_of("0123456789") != std::string::npos))
    throw ParseError("malformed rational literal: " + s);
  Rational q = rational_from_parts(num, den);
  return neg ? Rational(-q) : q;
}

Coderivation<Poly> parse_coderivation(const std::string &s) {
  return CoderivationParser(s).parse();
}

Coderivation<Rational> parse_rational_coderivation(const std::string &s) {
  Coderivation<Poly> p = parse_coderivation(s);
  Coderivation<Rational> r(p.space());
  for (const auto &[b, coeff] : p.terms()) {
    if (!coeff.is_constant())
      throw ParseError(
          "polynomial coefficients are not allowed here (a rational "
          "coderivation was expected)");
    r.add_term(b, coeff.constant_value());
  }
  return r;
}

namespace {

Rational rational_from_json(const nlohmann::json &v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer())
    return parse_rational(std::to_string(v.get<long long>()));
  throw ParseError(
      "expected an integer or a rational string in JSON numeric position");
}

}  // namespace

MulTable<Rational> parse_table(const std::string &s) {
  std::vector<Rational> vals;
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin != std::string::npos && s[begin] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(std::string("bad JSON table: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("JSON table must be an array");
    for (const auto &v : j) vals.push_back(rational_from_json(v));
  } else {
    std::string norm = s;
    for (char &c : norm)
      if (c == ',') c = ' ';
    std::istringstream is(norm);
    std::string field;
    while (is >> field) vals.push_back(parse_rational(field));
  }
  if (vals.size() != 8)
    throw ParseError("a multiplication table needs exactly 8 constants, got " +
                     std::to_string(vals.size()));
  MulTable<Rational> m;
  for (int i = 0; i < 8; ++i) m.c[i] = vals[i];
  return m;
}

FamilySpec family_from_json_text(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("bad family JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("base") || !j.contains("directions"))
    throw ParseError("family JSON needs 'base' and 'directions'");
  if (!j["base"].is_string())
    throw ParseError("family 'base' must be a coderivation string");
  Coderivation<Rational> base =
      parse_rational_coderivation(j["base"].get<std::string>());

  std::vector<std::pair<std::string, Coderivation<Rational>>> dirs;
  const auto &jd = j["directions"];
  if (jd.is_object()) {
    for (auto it = jd.begin(); it != jd.end(); ++it) {
      if (!it.value().is_string())
        throw ParseError("family direction '" + it.key() +
                         "' must be a coderivation string");
      dirs.emplace_back(it.key(),
                        parse_rational_coderivation(it.value().get<std::string>()));
    }
  } else if (jd.is_array()) {
    for (const auto &entry : jd) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
          !entry[1].is_string())
        throw ParseError("family directions array entries must be "
                         "[name, coderivation] pairs");
      dirs.emplace_back(entry[0].get<std::string>(),
                        parse_rational_coderivation(entry[1].get<std::string>()));
    }
  } else {
    throw ParseError("family 'directions' must be an object or array");
  }
  if (dirs.empty()) throw ParseError("family needs at least one direction");

  FamilySpec spec{make_family(std::move(base), std::move(dirs)), {}, false};
  if (j.contains("grid")) {
    if (!j["grid"].is_array())
      throw ParseError("family 'grid' must be an array of points");
    for (const auto &jp : j["grid"]) {
      if (!jp.is_object())
        throw ParseError("grid points must be JSON objects");
      ParameterPoint point;
      for (auto it = jp.begin(); it != jp.end(); ++it)
        point[it.key()] = rational_from_json(it.value());
      spec.grid.push_back(std::move(point));
    }
    spec.has_grid = true;
  }
  return spec;
}

std::string format_rational(const Rational &q) { return rational_str(q); }

namespace {

std::string format_monomial_body(const Monomial &m) {
  std::string out;
  bool first = true;
  for (const auto &[name, exp] : m.exponents) {
    if (!first) out += "*";
    first = false;
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

}  // namespace

std::string format_polynomial(const Poly &p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Highest monomial first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto &[mono, coeff] = *it;
    Rational mag = coeff;
    bool neg = sgn(coeff.get_num()) < 0;
    if (neg) mag = -mag;
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string body = format_monomial_body(mono);
    if (body.empty()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += format_rational(mag) + "*" + body;
    }
  }
  return out;
}

namespace {

std::string basis_symbol(const GradedSpace &sp, const BasisCoderivation &b) {
  std::string s = parity_of(sp, b) ? "psi[" : "phi[";
  s += multiindex_str(b.in);
  s += "->";
  s += std::to_string(b.out);
  s += "]";
  return s;
}

}  // namespace

std::string format_coderivation(const Coderivation<Rational> &c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[b, coeff] : c.terms()) {
    bool neg = sgn(coeff.get_num()) < 0;
    Rational mag = neg ? Rational(-coeff) : coeff;
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (!(mag == 1)) out += format_rational(mag) + "*";
    out += basis_symbol(c.space(), b);
  }
  return out;
}

std::string format_coderivation(const Coderivation<Poly> &c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto &[b, coeff] : c.terms()) {
    std::string cs;
    bool neg = false;
    if (coeff.terms().size() == 1) {
      const auto &[mono, q] = *coeff.terms().begin();
      neg = sgn(q.get_num()) < 0;
      Rational mag = neg ? Rational(-q) : q;
      std::string body = format_monomial_body(mono);
      if (body.empty()) {
        cs = (mag == 1) ? "" : format_rational(mag) + "*";
      } else if (mag == 1) {
        cs = body + "*";
      } else {
        cs = format_rational(mag) + "*" + body + "*";
      }
    } else {
      cs = "(" + format_polynomial(coeff) + ")*";
    }
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    out += cs + basis_symbol(c.space(), b);
  }
  return out;
}

std::string format_product(const MulTable<Rational> &m, int i, int j) {
  const char *names[] = {"x", "theta"};
  std::string out;
  bool first = true;
  for (int k = 1; k <= 2; ++k) {
    const Rational &c = m.coeff(i, j, k);
    if (scalar_is_zero(c)) continue;
    bool neg = sgn(c.get_num()) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (!(mag == 1)) out += format_rational(mag) + "*";
    out += names[k - 1];
  }
  return first ? "0" : out;
}

}  // namespace coderiv
