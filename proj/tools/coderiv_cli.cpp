#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "coderiv/parse.hpp"
#include "coderiv/report.hpp"

namespace {

using namespace coderiv;

int algebra_index(const std::string &name) {
  if (name.size() == 2 && name[0] == 'd' && name[1] >= '1' && name[1] <= '6')
    return name[1] - '0';
  throw ParseError("unknown algebra '" + name + "', expected d1..d6");
}

int cmd_cohomology(const std::string &algebra, const std::string &dstr,
                   int max_degree, const std::string &format) {
  if (algebra.empty() == dstr.empty())
    throw ParseError("provide exactly one of --algebra or --d");
  if (max_degree < 0 || max_degree > 10)
    throw ParseError("--max-degree must be between 0 and 10");
  Coderivation<Rational> d = algebra.empty()
                                 ? parse_rational_coderivation(dstr)
                                 : standard_codifferential(algebra_index(algebra));
  CohomologyReport report = cohomology(d, max_degree);
  if (format == "json")
    std::cout << cohomology_json(report).dump(2) << "\n";
  else
    std::cout << cohomology_text(report);
  return 0;
}

int cmd_classify(const std::string &table_str, const std::string &format) {
  MulTable<Rational> m = parse_table(table_str);
  StructuralInvariants inv = invariants(m);  // throws with the failing triple
  AlgebraClass cls = classify(m);
  if (format == "json")
    std::cout << classify_json(m, cls, inv).dump(2) << "\n";
  else
    std::cout << classify_text(m, cls, inv);
  return 0;
}

std::vector<std::string> builtin_notes(int k) {
  if (k != 6) return {};
  return {
      "the t1 direction uses the representative psi[22->2]; it is"
      " cohomologous to psi[21->1]+psi[12->1] (they differ by the"
      " coboundary of phi[1->2]), and the latter pair has a nonvanishing"
      " self-bracket, so it does not extend to an exact polynomial family",
      "the quoted closed-form strata conditions for this two-parameter"
      " family (t1^1=t2 / t2^1=3t1^1/4) are internally inconsistent and"
      " were ignored; strata are established pointwise by exact"
      " classification"};
}

int cmd_deform(const std::string &builtin, const std::string &family_file,
               const std::string &format) {
  if (builtin.empty() == family_file.empty())
    throw ParseError("provide exactly one of --builtin or --family");
  DeformationFamily family;
  std::vector<ParameterPoint> grid;
  std::vector<std::string> notes;
  if (!builtin.empty()) {
    int k = algebra_index(builtin);
    if (k != 2 && k != 5 && k != 6)
      throw ParseError("built-in families exist for d2, d5, d6");
    family = builtin_family(k);
    notes = builtin_notes(k);
    std::vector<std::string> params;
    for (const auto &[name, dir] : family.directions) params.push_back(name);
    grid = default_grid(params);
  } else {
    std::ifstream in(family_file);
    if (!in) throw ParseError("cannot open family file: " + family_file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    FamilySpec spec = family_from_json_text(buffer.str());
    family = std::move(spec.family);
    if (spec.has_grid) {
      grid = std::move(spec.grid);
    } else {
      std::vector<std::string> params;
      for (const auto &[name, dir] : family.directions) params.push_back(name);
      grid = default_grid(params);
    }
  }

  ObstructionResult obs = obstruction(family);
  if (!obs.is_zero)
    throw NonVersalError("nonvanishing obstruction [d_t,d_t] = " +
                         format_coderivation(obs.self_bracket));
  DeformationGraph graph = jump_census(family, grid);
  if (format == "json")
    std::cout << deform_json(family, obs, graph, notes).dump(2) << "\n";
  else
    std::cout << deform_text(family, obs, graph, notes);
  return 0;
}

int cmd_enumerate(int p, const std::string &format) {
  Census census = enumerate_finite_field(p);
  if (format == "json")
    std::cout << census_json(census).dump(2) << "\n";
  else
    std::cout << census_text(census);
  return 0;
}

int cmd_verify(int max_degree, const std::string &format) {
  if (max_degree < 4 || max_degree > 8)
    throw ParseError("--max-degree must be between 4 and 8 for verify");
  VerifyOptions opts;
  opts.max_degree = max_degree;
  std::vector<VerifyItem> items = verify_all(opts);
  bool all = true;
  for (const auto &item : items) all = all && item.passed;
  if (format == "json")
    std::cout << verify_json(items).dump(2) << "\n";
  else
    std::cout << verify_text(items);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact coderivation calculus and moduli of 2-dimensional "
               "associative algebras"};
  app.require_subcommand(1);

  auto *coh = app.add_subcommand(
      "cohomology", "cohomology table and representatives of a codifferential");
  std::string coh_algebra, coh_d;
  int coh_max = 6;
  std::string coh_format = "text";
  coh->add_option("--algebra", coh_algebra, "one of d1..d6");
  coh->add_option("--d", coh_d, "codifferential string, e.g. 'psi[22->2]'");
  coh->add_option("--max-degree", coh_max, "highest cochain degree (default 6)");
  coh->add_option("--format", coh_format, "text or json");

  auto *cls = app.add_subcommand(
      "classify", "classify a multiplication table up to isomorphism");
  std::string cls_table;
  std::string cls_format = "text";
  cls->add_option("--table", cls_table,
                  "8 constants c11^1 c11^2 c12^1 c12^2 c21^1 c21^2 c22^1 "
                  "c22^2, comma separated or a JSON array")
      ->required();
  cls->add_option("--format", cls_format, "text or json");

  auto *def = app.add_subcommand(
      "deform", "obstruction and jump census of a deformation family");
  std::string def_builtin, def_family;
  std::string def_format = "text";
  def->add_option("--builtin", def_builtin, "one of d2, d5, d6");
  def->add_option("--family", def_family, "family definition JSON file");
  def->add_option("--format", def_format, "text or json");

  auto *enu = app.add_subcommand(
      "enumerate", "brute-force census of algebra structures over F_p");
  int enu_p = 0;
  std::string enu_format = "text";
  enu->add_option("--p", enu_p, "prime: 2, 3, or 5")->required();
  enu->add_option("--format", enu_format, "text or json");

  auto *ver = app.add_subcommand(
      "verify", "run the complete exact reproduction suite");
  int ver_max = 6;
  std::string ver_format = "text";
  ver->add_option("--max-degree", ver_max, "cohomology degree bound (4..8)");
  ver->add_option("--format", ver_format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coh->parsed())
      return cmd_cohomology(coh_algebra, coh_d, coh_max, coh_format);
    if (cls->parsed()) return cmd_classify(cls_table, cls_format);
    if (def->parsed()) return cmd_deform(def_builtin, def_family, def_format);
    if (enu->parsed()) return cmd_enumerate(enu_p, enu_format);
    if (ver->parsed()) return cmd_verify(ver_max, ver_format);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const coderiv::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const coderiv::NotCodifferentialError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const coderiv::NonAssociativeError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const coderiv::NonVersalError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
