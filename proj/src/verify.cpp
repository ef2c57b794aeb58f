#include "coderiv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "coderiv/deformation.hpp"
#include "coderiv/hochschild.hpp"
#include "coderiv/parse.hpp"

namespace coderiv {

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      problems.push_back(what);
    }
  }
  void note(const std::string &s) { notes.push_back(s); }

  std::string detail() const {
    std::ostringstream os;
    if (!ok) {
      os << "FAILED:";
      size_t shown = std::min<size_t>(problems.size(), 8);
      for (size_t i = 0; i < shown; ++i) os << " [" << problems[i] << "]";
      if (problems.size() > shown)
        os << " (+" << problems.size() - shown << " more)";
      if (!notes.empty()) os << " | ";
    }
    for (size_t i = 0; i < notes.size(); ++i) {
      if (i) os << "; ";
      os << notes[i];
    }
    return os.str();
  }
};

struct Context {
  VerifyOptions opts;
  std::vector<Coderivation<Rational>> d;      // d[k-1] = d_k
  std::vector<CohomologyReport> reports;      // parallel to d
};

int expected_h(int k, int n) {
  if (n == 0) {
    static const int h0[] = {2, 2, 0, 0, 2, 2};
    return h0[k - 1];
  }
  switch (k) {
    case 2:
    case 5:
      return 1;
    case 6:
      return 2;
    default:
      return 0;
  }
}

std::string fmt_point(const ParameterPoint &p) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto &[name, value] : p) {
    if (!first) os << ",";
    first = false;
    os << name << "=" << format_rational(value);
  }
  os << ")";
  return os.str();
}

VerifyItem item_self_bracket(const Context &ctx) {
  Check c;
  for (int k = 1; k <= 6; ++k) {
    auto b = bracket(ctx.d[k - 1], ctx.d[k - 1]);
    c.expect(b.is_zero(), "[d" + std::to_string(k) + ",d" + std::to_string(k) +
                              "] = " + format_coderivation(b));
  }
  c.note("self-bracket vanishes exactly for all six codifferentials");
  return {"codifferential-self-bracket", c.ok, c.detail()};
}

VerifyItem item_cohomology_dimensions(const Context &ctx) {
  Check c;
  std::ostringstream table;
  for (int k = 1; k <= 6; ++k) {
    const auto &report = ctx.reports[k - 1];
    table << (k > 1 ? "; " : "") << "d" << k << ":";
    for (int n = 0; n <= ctx.opts.max_degree; ++n) {
      int got = report.degrees[n].h_dim;
      table << " " << got;
      c.expect(got == expected_h(k, n),
               "dim H^" + std::to_string(n) + "(d" + std::to_string(k) +
                   ") = " + std::to_string(got) + ", expected " +
                   std::to_string(expected_h(k, n)));
    }
  }
  c.note("dims n=0.." + std::to_string(ctx.opts.max_degree) + " -> " +
         table.str());
  return {"cohomology-dimensions", c.ok, c.detail()};
}

VerifyItem item_representatives(const Context &ctx) {
  Check c;
  const auto &d2 = ctx.d[1];
  const auto &d6 = ctx.d[5];
  const int nmax = ctx.opts.max_degree;

  // H^n(d2) is represented by phi[1^n -> 1].
  for (int n = 1; n <= nmax; ++n) {
    MultiIndex ones(n, 1);
    auto rep = Coderivation<Rational>::basis(ones, 1);
    c.expect(ctx.reports[1].degrees[n].h_dim == 1,
             "dim H^" + std::to_string(n) + "(d2) != 1");
    c.expect(is_cocycle(d2, rep),
             "phi[1^" + std::to_string(n) + "->1] is not a d2-cocycle");
    c.expect(!is_coboundary(d2, rep).has_value(),
             "phi[1^" + std::to_string(n) + "->1] is a d2-coboundary");
  }

  // Degree-n cocycles Ch^n_1: nontrivial classes for d6.
  for (int n = 0; n <= nmax; ++n) {
    auto ch1 = decleene_cocycle(n, 1);
    c.expect(is_cocycle(d6, ch1),
             "Ch^" + std::to_string(n) + "_1 is not a d6-cocycle");
    c.expect(!is_coboundary(d6, ch1).has_value(),
             "Ch^" + std::to_string(n) + "_1 is a d6-coboundary");
  }

  // Ch^n_2: cocycle for the output-2 component operator, and extension by
  // an output-1 cochain exists exactly when the rank test predicts it.
  std::vector<int> extension_degrees;
  for (int n = 0; n <= nmax; ++n) {
    auto ch2 = decleene_cocycle(n, 2);
    auto img = coboundary(d6, ch2);
    Coderivation<Rational> img2(d6.space());
    for (const auto &[b, coeff] : img.terms())
      if (b.out == 2) img2.add_term(b, coeff);
    c.expect(img2.is_zero(), "Ch^" + std::to_string(n) +
                                 "_2 is not a component-2 cocycle");

    CochainBasis src = CochainBasis::make(d6.space(), n);
    CochainBasis dst = CochainBasis::make(d6.space(), n + 1);
    Matrix<Rational> full = coboundary_matrix(d6, n);
    std::vector<int> cols;
    for (int j = 0; j < src.dim(); ++j)
      if (src.elements[j].out == 1) cols.push_back(j);
    Matrix<Rational> restricted(dst.dim(), static_cast<int>(cols.size()));
    Matrix<Rational> augmented(dst.dim(), static_cast<int>(cols.size()) + 1);
    std::vector<Rational> rhs = to_vector(dst, img);
    for (int r = 0; r < dst.dim(); ++r) {
      for (size_t j = 0; j < cols.size(); ++j) {
        restricted[r][static_cast<int>(j)] = full[r][cols[j]];
        augmented[r][static_cast<int>(j)] = full[r][cols[j]];
      }
      augmented[r][static_cast<int>(cols.size())] = -rhs[r];
    }
    bool predicted = rank(restricted) == rank(augmented);
    auto ext = extend_to_cocycle(d6, ch2, 1);
    c.expect(predicted == ext.has_value(),
             "Ch^" + std::to_string(n) +
                 "_2 extension solve disagrees with the rank prediction");
    if (ext) {
      extension_degrees.push_back(n);
      c.expect(is_cocycle(d6, *ext),
               "extended Ch^" + std::to_string(n) + "_2 is not a cocycle");
      Coderivation<Rational> part2(d6.space());
      for (const auto &[b, coeff] : ext->terms())
        if (b.out == 2) part2.add_term(b, coeff);
      c.expect(part2 == ch2, "extension altered the component-2 part of Ch^" +
                                 std::to_string(n) + "_2");
    }
  }
  std::ostringstream ds;
  for (size_t i = 0; i < extension_degrees.size(); ++i)
    ds << (i ? "," : "") << extension_degrees[i];
  c.note("d2 classes carried by phi[1^n->1] for n=1.." + std::to_string(nmax));
  c.note("Ch^n_1 nontrivial d6-cocycles for n=0.." + std::to_string(nmax));
  c.note("Ch^n_2 cocycle extensions exist in degrees {" + ds.str() + "}");
  return {"cohomology-representatives", c.ok, c.detail()};
}

VerifyItem item_d_squared(const Context &ctx) {
  Check c;
  for (int k = 1; k <= 6; ++k)
    for (int n = 0; n <= 5; ++n)
      c.expect(verify_d_squared(ctx.d[k - 1], n),
               "D_{n+1} D_n != 0 for d" + std::to_string(k) +
                   ", n=" + std::to_string(n));
  c.note("D^2 = 0 as exact matrix products, all six codifferentials, n <= 5");
  return {"coboundary-squares-to-zero", c.ok, c.detail()};
}

VerifyItem item_compose_oracle(const Context &) {
  Check c;
  GradedSpace sp = space_0_2();
  std::vector<Coderivation<Rational>> elements;
  for (int n = 0; n <= 3; ++n) {
    CochainBasis basis = CochainBasis::make(sp, n);
    for (const auto &b : basis.elements)
      elements.push_back(Coderivation<Rational>::basis(b.in, b.out));
  }
  int pairs = 0;
  for (const auto &f : elements)
    for (const auto &g : elements) {
      ++pairs;
      if (!(compose(f, g) == compose_by_evaluation(f, g)))
        c.expect(false, "compose mismatch: " + format_coderivation(f) +
                            " with " + format_coderivation(g));
    }
  c.note("composition matches direct evaluation on all " +
         std::to_string(pairs) + " basis pairs of degree <= 3");
  return {"composition-evaluation-oracle", c.ok, c.detail()};
}

VerifyItem item_solution_families(const Context &) {
  Check c;
  for (int k = 1; k <= 8; ++k)
    c.expect(verify_solution_family(solution_family(k)),
             "family " + std::to_string(k) + " fails [d,d]=0");
  auto g = generic_coderivation();
  c.expect(!bracket(g, g).is_zero(),
           "generic coderivation satisfies [d,d]=0 identically");
  c.note("all eight families vanish symbolically; the generic one does not");
  return {"solution-families", c.ok, c.detail()};
}

VerifyItem item_obstructions(const Context &) {
  Check c;
  for (int k : {2, 5, 6}) {
    auto obs = obstruction(builtin_family(k));
    c.expect(obs.is_zero, "d" + std::to_string(k) + " family obstruction = " +
                              format_coderivation(obs.self_bracket));
  }
  c.note("[d_t,d_t] = 0 identically for the d2, d5, and d6 families");
  return {"versal-obstructions", c.ok, c.detail()};
}

VerifyItem item_jump_deformations(const Context &) {
  Check c;
  std::set<std::pair<AlgebraClass, AlgebraClass>> edges;

  auto g2 = jump_census(builtin_family(2), default_grid({"t"}));
  c.expect(g2.base_class == AlgebraClass::d2, "d2 family base class wrong");
  for (const auto &pr : g2.points) {
    if (scalar_is_zero(pr.point.at("t")))
      c.expect(pr.cls == AlgebraClass::d2, "d2 family at t=0 is not d2");
    else
      c.expect(pr.cls == AlgebraClass::d1,
               "d2 family at t=" + format_rational(pr.point.at("t")) +
                   " is " + to_string(pr.cls) + ", expected d1");
  }
  for (const auto &e : g2.edges) edges.insert({e.from, e.to});

  auto g5 = jump_census(builtin_family(5), default_grid({"t"}));
  std::vector<std::string> closure_flags;
  bool plain_d1 = false;
  for (const auto &pr : g5.points) {
    if (scalar_is_zero(pr.point.at("t"))) {
      c.expect(pr.cls == AlgebraClass::d5, "d5 family at t=0 is not d5");
    } else if (pr.cls == AlgebraClass::d1) {
      plain_d1 = true;
    } else if (pr.cls == AlgebraClass::quadratic_field_extension) {
      closure_flags.push_back("t=" + format_rational(pr.point.at("t")));
    } else {
      c.expect(false, "d5 family at t=" + format_rational(pr.point.at("t")) +
                          " is " + to_string(pr.cls));
    }
  }
  c.expect(plain_d1, "d5 family shows no split d1 point on the grid");
  for (const auto &e : g5.edges) edges.insert({e.from, e.to});

  auto g6 = jump_census(builtin_family(6), default_grid({"t1", "t2"}));
  std::map<AlgebraClass, int> strata;
  for (const auto &pr : g6.points) {
    strata[pr.cls]++;
    bool origin = scalar_is_zero(pr.point.at("t1")) &&
                  scalar_is_zero(pr.point.at("t2"));
    if (origin) c.expect(pr.cls == AlgebraClass::d6, "d6 family origin wrong");
  }
  for (const auto &e : g6.edges) edges.insert({e.from, e.to});

  c.expect(edges.count({AlgebraClass::d2, AlgebraClass::d1}) == 1,
           "missing jump d2 -> d1");
  c.expect(edges.count({AlgebraClass::d5, AlgebraClass::d1}) == 1,
           "missing jump d5 -> d1");
  c.expect(edges.count({AlgebraClass::d6, AlgebraClass::d2}) == 1,
           "missing jump d6 -> d2");
  c.expect(edges.count({AlgebraClass::d6, AlgebraClass::d5}) == 1,
           "missing jump d6 -> d5");
  for (const auto &[from, to] : edges) {
    c.expect(to != AlgebraClass::d3 && to != AlgebraClass::d4,
             "unexpected jump into " + to_string(to));
  }

  c.note("d2 family: every nonzero t lands in d1");
  if (closure_flags.empty()) {
    c.note("d5 family: every nonzero t lands in d1");
  } else {
    std::string flagged;
    for (size_t i = 0; i < closure_flags.size(); ++i)
      flagged += (i ? ", " : "") + closure_flags[i];
    c.note("d5 family: nonzero t lands in d1, with " + flagged +
           " split only after a quadratic extension (class "
           "quadratic_field_extension, equal to d1 over the closure)");
  }
  std::ostringstream ss;
  for (const auto &[cls, count] : strata)
    ss << " " << to_string(cls) << ":" << count;
  c.note("d6 family strata over the 7x7 grid ->" + ss.str());
  c.note("the quoted closed-form strata conditions for the two-parameter "
         "family (t1^1=t2 / t2^1=3t1^1/4) are internally inconsistent and "
         "were ignored; strata are established pointwise by exact "
         "classification");
  return {"jump-deformations", c.ok, c.detail()};
}

VerifyItem item_classifier_invariance(const Context &ctx) {
  Check c;
  std::mt19937_64 rng(ctx.opts.seed);
  auto random_entry = [&rng]() {
    return Rational(static_cast<long>(rng() % 7) - 3);
  };
  static const AlgebraClass expected[] = {AlgebraClass::d1, AlgebraClass::d2,
                                          AlgebraClass::d3, AlgebraClass::d4,
                                          AlgebraClass::d5, AlgebraClass::d6};
  for (int k = 1; k <= 6; ++k) {
    MulTable<Rational> table = standard_table(k);
    c.expect(classify(table) == expected[k - 1],
             "standard table d" + std::to_string(k) + " classifies as " +
                 to_string(classify(table)));
    int done = 0;
    while (done < ctx.opts.conjugates) {
      std::array<Rational, 4> g{random_entry(), random_entry(), random_entry(),
                                random_entry()};
      if (scalar_is_zero(g[0] * g[3] - g[1] * g[2])) continue;
      ++done;
      AlgebraClass cls = classify(apply_automorphism(g, table));
      if (cls != expected[k - 1]) {
        c.expect(false, "conjugate #" + std::to_string(done) + " of d" +
                            std::to_string(k) + " classifies as " +
                            to_string(cls));
        break;
      }
    }
  }
  c.note(std::to_string(ctx.opts.conjugates) +
         " random invertible base changes per class, classification constant");
  return {"classifier-invariance", c.ok, c.detail()};
}

template <int P>
void check_census_structure(Check &c, const Census &census) {
  auto gl2 = all_invertible_matrices<P>();
  long long orbit_total = 0;
  for (const auto &orbit : census.orbits) {
    MulTable<Zp<P>> rep;
    for (int s = 0; s < 8; ++s) rep.c[s] = Zp<P>(orbit.representative[s]);
    AlgebraClass cls = classify(rep);
    c.expect(cls == orbit.cls, "orbit label mismatch over F_" +
                                   std::to_string(P));
    c.expect(cls != AlgebraClass::inconsistent,
             "inconsistent classification over F_" + std::to_string(P));
    std::set<long long> members;
    for (const auto &g : gl2) {
      MulTable<Zp<P>> image = apply_automorphism(g, rep);
      long long enc = 0;
      for (int s = 0; s < 8; ++s) enc = enc * P + image.c[s].v;
      if (members.insert(enc).second)
        c.expect(classify(image) == cls,
                 "classification not constant on an F_" + std::to_string(P) +
                     " orbit");
    }
    c.expect(static_cast<long long>(members.size()) == orbit.orbit_size,
             "orbit size mismatch over F_" + std::to_string(P));
    orbit_total += orbit.orbit_size;
  }
  c.expect(orbit_total == census.associative_count,
           "orbit sizes do not add up to the associative count over F_" +
               std::to_string(P));
}

long long canonical_encoding_mod3(const MulTable<Rational> &table) {
  auto m = table_mod_p<3>(table);
  auto gl2 = all_invertible_matrices<3>();
  long long best = -1;
  for (const auto &g : gl2) {
    MulTable<Zp<3>> image = apply_automorphism(g, m);
    long long enc = 0;
    for (int s = 0; s < 8; ++s) enc = enc * 3 + image.c[s].v;
    if (best < 0 || enc < best) best = enc;
  }
  return best;
}

VerifyItem item_census(const Context &) {
  Check c;
  for (int p : {2, 3}) {
    auto start = std::chrono::steady_clock::now();
    Census census = enumerate_finite_field(p);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    c.expect(elapsed < 10000, "F_" + std::to_string(p) +
                                  " census took " + std::to_string(elapsed) +
                                  " ms");
    if (p == 2)
      check_census_structure<2>(c, census);
    else
      check_census_structure<3>(c, census);

    Census again = enumerate_finite_field(p);
    c.expect(census_fingerprint(again) == census_fingerprint(census),
             "census over F_" + std::to_string(p) + " is not deterministic");

    bool have_golden = false;
    for (const auto &golden : census_goldens()) {
      if (golden.p != p) continue;
      have_golden = true;
      Check g;
      g.expect(census.total == golden.total, "total");
      g.expect(census.associative_count == golden.associative_count,
               "associative count");
      g.expect(census.orbits.size() == golden.orbits.size(), "orbit count");
      if (census.orbits.size() == golden.orbits.size()) {
        for (size_t i = 0; i < golden.orbits.size(); ++i) {
          const auto &[rep, size, cls] = golden.orbits[i];
          g.expect(census.orbits[i].representative == rep &&
                       census.orbits[i].orbit_size == size &&
                       to_string(census.orbits[i].cls) == cls,
                   "orbit " + std::to_string(i));
        }
      }
      c.expect(g.ok, "census over F_" + std::to_string(p) +
                         " drifted from the frozen golden values");
    }
    if (!have_golden)
      c.note("no frozen golden values for F_" + std::to_string(p) +
             " yet; observed: " + census_fingerprint(census));
    else
      c.note("F_" + std::to_string(p) + ": associative=" +
             std::to_string(census.associative_count) + ", orbits=" +
             std::to_string(census.orbits.size()) + ", matches golden values");
  }

  // The six standard tables stay pairwise nonisomorphic over F_3.
  std::set<long long> orbits3;
  for (int k = 1; k <= 6; ++k) {
    auto table = standard_table(k);
    c.expect(classify(table_mod_p<3>(table)) ==
                 classify(table),
             "d" + std::to_string(k) + " changes class mod 3");
    orbits3.insert(canonical_encoding_mod3(table));
  }
  c.expect(orbits3.size() == 6,
           "the six standard tables occupy " +
               std::to_string(orbits3.size()) + " orbits over F_3");
  c.note("the six standard tables reduce to six distinct F_3 orbits");
  return {"finite-field-census", c.ok, c.detail()};
}

VerifyItem item_basis_count(const Context &) {
  Check c;
  GradedSpace sp = space_0_2();
  for (int n = 0; n <= 8; ++n) {
    int dim = CochainBasis::make(sp, n).dim();
    c.expect(dim == (1 << (n + 1)),
             "dim C^" + std::to_string(n) + " = " + std::to_string(dim));
  }
  c.note("dim C^n = 2^(n+1) for n <= 8");
  return {"cochain-basis-count", c.ok, c.detail()};
}

}  // namespace

std::string census_fingerprint(const Census &census) {
  std::ostringstream os;
  os << "p=" << census.p << " total=" << census.total
     << " associative=" << census.associative_count
     << " orbits=" << census.orbits.size();
  for (const auto &orbit : census.orbits) {
    os << " |";
    for (int v : orbit.representative) os << v;
    os << ":" << orbit.orbit_size << ":" << to_string(orbit.cls);
  }
  return os.str();
}

const std::vector<CensusGolden> &census_goldens() {
  // Frozen from the first enumeration runs. Orbit sizes divide |GL_2(F_p)|
  // (6, 48, 480) and sum to the associative count; every field realizes the
  // same eight classes. Any drift from these values is a regression.
  static const std::vector<CensusGolden> goldens = {
      {2, 256, 28,
       {{{0, 0, 0, 0, 0, 0, 0, 0}, 1, "zero"},
        {{0, 0, 0, 0, 0, 0, 0, 1}, 6, "d2"},
        {{0, 0, 0, 0, 0, 0, 1, 0}, 3, "d6"},
        {{0, 0, 0, 0, 1, 0, 0, 1}, 3, "d4"},
        {{0, 0, 1, 0, 0, 0, 0, 1}, 3, "d3"},
        {{0, 0, 1, 0, 1, 0, 0, 1}, 6, "d5"},
        {{0, 1, 1, 1, 1, 1, 1, 0}, 3, "quadratic_field_extension"},
        {{1, 0, 0, 0, 0, 0, 0, 1}, 3, "d1"}}},
      {3, 6561, 121,
       {{{0, 0, 0, 0, 0, 0, 0, 0}, 1, "zero"},
        {{0, 0, 0, 0, 0, 0, 0, 1}, 24, "d2"},
        {{0, 0, 0, 0, 0, 0, 1, 0}, 8, "d6"},
        {{0, 0, 0, 0, 1, 0, 0, 1}, 8, "d4"},
        {{0, 0, 1, 0, 0, 0, 0, 1}, 8, "d3"},
        {{0, 0, 1, 0, 1, 0, 0, 1}, 24, "d5"},
        {{0, 1, 1, 0, 1, 0, 0, 1}, 24, "d1"},
        {{0, 1, 1, 1, 1, 1, 1, 2}, 24, "quadratic_field_extension"}}},
      {5, 390625, 793,
       {{{0, 0, 0, 0, 0, 0, 0, 0}, 1, "zero"},
        {{0, 0, 0, 0, 0, 0, 0, 1}, 120, "d2"},
        {{0, 0, 0, 0, 0, 0, 1, 0}, 24, "d6"},
        {{0, 0, 0, 0, 1, 0, 0, 1}, 24, "d4"},
        {{0, 0, 1, 0, 0, 0, 0, 1}, 24, "d3"},
        {{0, 0, 1, 0, 1, 0, 0, 1}, 120, "d5"},
        {{0, 1, 1, 0, 1, 0, 0, 1}, 240, "d1"},
        {{0, 1, 1, 2, 1, 2, 2, 0}, 240, "quadratic_field_extension"}}},
  };
  return goldens;
}

std::vector<VerifyItem> verify_all(const VerifyOptions &opts) {
  Context ctx;
  ctx.opts = opts;
  for (int k = 1; k <= 6; ++k) {
    ctx.d.push_back(standard_codifferential(k));
    ctx.reports.push_back(cohomology(ctx.d.back(), opts.max_degree));
  }
  return {
      item_self_bracket(ctx),
      item_cohomology_dimensions(ctx),
      item_representatives(ctx),
      item_d_squared(ctx),
      item_compose_oracle(ctx),
      item_solution_families(ctx),
      item_obstructions(ctx),
      item_jump_deformations(ctx),
      item_classifier_invariance(ctx),
      item_census(ctx),
      item_basis_count(ctx),
  };
}

}  // namespace coderiv
