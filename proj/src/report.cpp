#include "coderiv/report.hpp"

#include <algorithm>
#include <sstream>

#include "coderiv/parse.hpp"

namespace coderiv {

Json cohomology_json(const CohomologyReport &report) {
  Json j;
  j["codifferential"] = format_coderivation(report.d);
  j["max_degree"] = static_cast<int>(report.degrees.size()) - 1;
  Json degrees = Json::array();
  for (const auto &deg : report.degrees) {
    Json entry;
    entry["n"] = deg.n;
    entry["cochain_dim"] = deg.cochain_dim;
    entry["kernel_dim"] = deg.kernel_dim;
    entry["image_dim"] = deg.image_dim;
    entry["h_dim"] = deg.h_dim;
    Json reps = Json::array();
    for (const auto &rep : deg.representatives)
      reps.push_back(format_coderivation(rep));
    entry["representatives"] = reps;
    degrees.push_back(entry);
  }
  j["degrees"] = degrees;
  return j;
}

std::string cohomology_text(const CohomologyReport &report) {
  std::ostringstream os;
  os << "codifferential: " << format_coderivation(report.d) << "\n";
  os << "n   dim C^n   dim ker   dim im    dim H^n\n";
  for (const auto &deg : report.degrees) {
    os << deg.n << "   " << deg.cochain_dim << (deg.cochain_dim < 10 ? "   " : "  ")
       << "      " << deg.kernel_dim << "        " << deg.image_dim
       << "        " << deg.h_dim << "\n";
  }
  for (const auto &deg : report.degrees) {
    if (deg.representatives.empty()) continue;
    os << "H^" << deg.n << " representatives:\n";
    for (const auto &rep : deg.representatives)
      os << "  " << format_coderivation(rep) << "\n";
  }
  return os.str();
}

Json invariants_json(const StructuralInvariants &inv) {
  Json j;
  j["commutative"] = inv.is_commutative;
  j["square_dim"] = inv.square_dim;
  j["nilpotent"] = inv.nilpotent;
  j["left_identity"] = inv.has_left_identity;
  j["right_identity"] = inv.has_right_identity;
  j["two_sided_identity"] = inv.has_two_sided_identity;
  if (inv.unital_discriminant_zero.has_value())
    j["unital_discriminant_zero"] = *inv.unital_discriminant_zero;
  else
    j["unital_discriminant_zero"] = nullptr;
  return j;
}

namespace {

Json table_json(const MulTable<Rational> &m) {
  Json constants = Json::array();
  for (const auto &c : m.c) constants.push_back(format_rational(c));
  Json products;
  const char *names[] = {"x", "theta"};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      products[std::string(names[i - 1]) + "*" + names[j - 1]] =
          format_product(m, i, j);
  Json j;
  j["constants"] = constants;
  j["products"] = products;
  return j;
}

}  // namespace

Json classify_json(const MulTable<Rational> &m, AlgebraClass cls,
                   const StructuralInvariants &inv) {
  Json j = table_json(m);
  j["class"] = to_string(cls);
  j["invariants"] = invariants_json(inv);
  return j;
}

std::string classify_text(const MulTable<Rational> &m, AlgebraClass cls,
                          const StructuralInvariants &inv) {
  std::ostringstream os;
  const char *names[] = {"x", "theta"};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      os << names[i - 1] << "*" << names[j - 1] << " = "
         << format_product(m, i, j) << "\n";
  os << "class: " << to_string(cls) << "\n";
  os << "commutative: " << (inv.is_commutative ? "yes" : "no")
     << ", square_dim: " << inv.square_dim
     << ", nilpotent: " << (inv.nilpotent ? "yes" : "no") << "\n";
  os << "identity: ";
  if (inv.has_two_sided_identity)
    os << "two-sided";
  else if (inv.has_left_identity)
    os << "left only";
  else if (inv.has_right_identity)
    os << "right only";
  else
    os << "none";
  os << "\n";
  if (inv.unital_discriminant_zero.has_value())
    os << "unital discriminant zero: "
       << (*inv.unital_discriminant_zero ? "yes" : "no") << "\n";
  return os.str();
}

namespace {

Json point_json(const ParameterPoint &p) {
  Json j;
  for (const auto &[name, value] : p) j[name] = format_rational(value);
  return j;
}

std::string point_str(const ParameterPoint &p) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto &[name, value] : p) {
    if (!first) os << ", ";
    first = false;
    os << name << "=" << format_rational(value);
  }
  os << ")";
  return os.str();
}

}  // namespace

Json deform_json(const DeformationFamily &f, const ObstructionResult &obs,
                 const DeformationGraph &graph,
                 const std::vector<std::string> &notes) {
  Json j;
  j["base"] = format_coderivation(f.base);
  j["base_class"] = to_string(graph.base_class);
  Json dirs;
  for (const auto &[name, dir] : f.directions)
    dirs[name] = format_coderivation(dir);
  j["directions"] = dirs;
  j["family"] = format_coderivation(family_total(f));
  Json obstruction;
  obstruction["self_bracket"] = format_coderivation(obs.self_bracket);
  obstruction["is_zero"] = obs.is_zero;
  j["obstruction"] = obstruction;
  Json points = Json::array();
  for (const auto &pr : graph.points) {
    Json entry;
    entry["point"] = point_json(pr.point);
    entry["class"] = to_string(pr.cls);
    points.push_back(entry);
  }
  j["points"] = points;
  Json edges = Json::array();
  for (const auto &e : graph.edges) {
    Json entry;
    entry["from"] = to_string(e.from);
    entry["to"] = to_string(e.to);
    Json witnesses = Json::array();
    for (const auto &w : e.witnesses) witnesses.push_back(point_json(w));
    entry["witnesses"] = witnesses;
    edges.push_back(entry);
  }
  j["edges"] = edges;
  Json ns = Json::array();
  for (const auto &n : notes) ns.push_back(n);
  j["notes"] = ns;
  return j;
}

std::string deform_text(const DeformationFamily &f,
                        const ObstructionResult &obs,
                        const DeformationGraph &graph,
                        const std::vector<std::string> &notes) {
  std::ostringstream os;
  os << "base: " << format_coderivation(f.base) << " (class "
     << to_string(graph.base_class) << ")\n";
  for (const auto &[name, dir] : f.directions)
    os << "direction " << name << ": " << format_coderivation(dir) << "\n";
  os << "family: " << format_coderivation(family_total(f)) << "\n";
  os << "obstruction [d_t,d_t]: " << format_coderivation(obs.self_bracket)
     << (obs.is_zero ? " (vanishes identically)" : " (NONZERO)") << "\n";
  os << "jumps:\n";
  for (const auto &e : graph.edges) {
    os << "  " << to_string(e.from) << " -> " << to_string(e.to) << "  at";
    size_t shown = std::min<size_t>(e.witnesses.size(), 4);
    for (size_t i = 0; i < shown; ++i) os << " " << point_str(e.witnesses[i]);
    if (e.witnesses.size() > shown)
      os << " (+" << e.witnesses.size() - shown << " more)";
    os << "\n";
  }
  if (graph.edges.empty()) os << "  none\n";
  os << "points:\n";
  for (const auto &pr : graph.points)
    os << "  " << point_str(pr.point) << " -> " << to_string(pr.cls) << "\n";
  for (const auto &n : notes) os << "note: " << n << "\n";
  return os.str();
}

Json census_json(const Census &census) {
  Json j;
  j["p"] = census.p;
  j["total"] = census.total;
  j["associative"] = census.associative_count;
  j["orbit_count"] = static_cast<long long>(census.orbits.size());
  Json orbits = Json::array();
  for (const auto &orbit : census.orbits) {
    Json entry;
    Json rep = Json::array();
    for (int v : orbit.representative) rep.push_back(v);
    entry["representative"] = rep;
    entry["size"] = orbit.orbit_size;
    entry["class"] = to_string(orbit.cls);
    entry["invariants"] = invariants_json(orbit.inv);
    orbits.push_back(entry);
  }
  j["orbits"] = orbits;
  return j;
}

std::string census_text(const Census &census) {
  std::ostringstream os;
  os << "multiplication tables over F_" << census.p << ": " << census.total
     << ", associative: " << census.associative_count << ", orbits: "
     << census.orbits.size() << "\n";
  os << "representative           size   class\n";
  for (const auto &orbit : census.orbits) {
    std::string rep;
    for (int v : orbit.representative) rep += std::to_string(v);
    os << rep << "                 " << orbit.orbit_size
       << (orbit.orbit_size < 10 ? "      " : "     ") << to_string(orbit.cls)
       << "\n";
  }
  return os.str();
}

Json verify_json(const std::vector<VerifyItem> &items) {
  Json j;
  Json arr = Json::array();
  bool all = true;
  for (const auto &item : items) {
    Json entry;
    entry["name"] = item.name;
    entry["passed"] = item.passed;
    entry["detail"] = item.detail;
    arr.push_back(entry);
    all = all && item.passed;
  }
  j["items"] = arr;
  j["all_passed"] = all;
  return j;
}

std::string verify_text(const std::vector<VerifyItem> &items) {
  std::ostringstream os;
  bool all = true;
  int idx = 0;
  for (const auto &item : items) {
    ++idx;
    os << "[" << (idx < 10 ? " " : "") << idx << "/" << items.size() << "] "
       << (item.passed ? "PASS" : "FAIL") << "  " << item.name;
    if (!item.detail.empty()) os << " :: " << item.detail;
    os << "\n";
    all = all && item.passed;
  }
  os << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

}  // namespace coderiv
