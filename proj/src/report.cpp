#include "ecc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "ecc/fixtures.hpp"

namespace ecc::report {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json to_json(const TheoremReport& r) {
  json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = opt(r.m);
  j["class"] = {{"is_clique_tree", opt(r.is_clique_tree)},
                {"in_ct", opt(r.in_ct)},
                {"diameter", r.diameter},
                {"radius", r.radius},
                {"center", r.center}};
  json poly = json::array();
  for (const auto& c : r.char_poly.coeffs()) poly.push_back(c.get_str());
  j["char_poly"] = poly;
  j["inertia_exact"] = {r.inertia_exact.n_plus, r.inertia_exact.n_minus, r.inertia_exact.n_zero};
  json spec = json::array();
  for (double x : r.spectrum) spec.push_back(round12(x));
  j["spectrum"] = spec;
  j["symmetric"] = r.symmetric;
  j["flags"] = r.flags;
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id}, {"applicable", c.applicable}, {"passed", opt(c.passed)}, {"witness", opt(c.witness)}});
  }
  j["checks"] = checks;
  return j;
}

TheoremReport from_json(const json& j) {
  TheoremReport r;
  r.graph_id = j.at("graph_id").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.m = get_opt<std::size_t>(j.at("m"));
  const auto& c = j.at("class");
  r.is_clique_tree = get_opt<bool>(c.at("is_clique_tree"));
  r.in_ct = get_opt<bool>(c.at("in_ct"));
  r.diameter = c.at("diameter").get<std::uint32_t>();
  r.radius = c.at("radius").get<std::uint32_t>();
  r.center = c.at("center").get<VertexSet>();
  std::vector<BigInt> coeffs;
  for (const auto& s : j.at("char_poly")) coeffs.emplace_back(s.get<std::string>());
  r.char_poly = IntPolynomial(std::move(coeffs));
  const auto& in = j.at("inertia_exact");
  r.inertia_exact = {in.at(0).get<std::size_t>(), in.at(1).get<std::size_t>(), in.at(2).get<std::size_t>()};
  r.spectrum = j.at("spectrum").get<std::vector<double>>();
  r.symmetric = j.at("symmetric").get<bool>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  for (const auto& cj : j.at("checks")) {
    CheckRecord rec;
    rec.id = cj.at("id").get<std::string>();
    rec.applicable = cj.at("applicable").get<bool>();
    rec.passed = get_opt<bool>(cj.at("passed"));
    rec.witness = get_opt<std::string>(cj.at("witness"));
    r.checks.push_back(std::move(rec));
  }
  return r;
}

std::string csv_header() {
  return "graph_id,n,m,in_ct,diameter,radius,n_plus,n_minus,n_zero,symmetric,applicable,failures,flags";
}

std::string to_csv_row(const TheoremReport& r) {
  std::ostringstream out;
  std::string flags;
  for (const auto& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
  out << csv_field(r.graph_id) << ',' << r.n << ',' << (r.m ? std::to_string(*r.m) : "") << ',' << opt_bool(r.in_ct) << ','
      << r.diameter << ',' << r.radius << ',' << r.inertia_exact.n_plus << ',' << r.inertia_exact.n_minus << ','
      << r.inertia_exact.n_zero << ',' << (r.symmetric ? "true" : "false") << ',' << r.applicable() << ',' << r.failures()
      << ',' << csv_field(flags);
  return out.str();
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream out;
  out << r.graph_id << ": n=" << r.n;
  if (r.m) out << " m=" << *r.m;
  out << " diameter=" << r.diameter << " radius=" << r.radius << '\n';
  if (r.in_ct) out << "  clique tree: " << opt_bool(r.is_clique_tree) << ", in CT: " << opt_bool(r.in_ct) << '\n';
  out << "  centre: {";
  for (std::size_t i = 0; i < r.center.size(); ++i) out << (i ? "," : "") << r.center[i];
  out << "}\n";
  const auto factored = golden_factored_form(r.char_poly);
  out << "  char poly: " << (factored ? *factored : r.char_poly.to_string()) << '\n';
  out << "  inertia: (" << r.inertia_exact.n_plus << ", " << r.inertia_exact.n_minus << ", " << r.inertia_exact.n_zero << ")"
      << (r.symmetric ? ", symmetric spectrum" : ", asymmetric spectrum") << '\n';
  out << "  spectrum:";
  // rounding residue around zero reads better as 0
  double scale = 1.0;
  for (double x : r.spectrum) scale = std::max(scale, std::abs(x));
  for (double x : r.spectrum) out << ' ' << (std::abs(x) < 1e-9 * scale ? 0.0 : round12(x));
  out << '\n';
  for (const auto& c : r.checks) {
    out << "  [" << (!c.applicable ? "skip" : *c.passed ? "pass" : "FAIL") << "] " << c.id;
    if (c.witness) out << ": " << *c.witness;
    out << '\n';
  }
  for (const auto& f : r.flags) out << "  flag: " << f << '\n';
  return out.str();
}

}  // namespace ecc::report
