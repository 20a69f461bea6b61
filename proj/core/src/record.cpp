#include "chebext/record.hpp"

#include <algorithm>
#include <cstdio>
#include <span>

#include <json.hpp>

#include "chebext/errors.hpp"

namespace chebext {

using ojson = nlohmann::ordered_json;

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

ojson reals(std::span<const double> values) {
  ojson arr = ojson::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

// nlohmann prints the shortest round-trip form; the record format fixes 17 digits.
void dump(const ojson& j, std::string& out, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += ojson(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump(value, out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Scalars stay on one line; nested containers get a line each.
      const bool nested = std::any_of(j.begin(), j.end(),
                                      [](const ojson& v) { return v.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += nested || indent < 0 ? "," : ", ";
        first = false;
        if (nested) newline(depth + 1);
        dump(value, out, indent, depth + 1);
      }
      if (nested) newline(depth);
      out += ']';
      return;
    }
    case ojson::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string to_json(const SolutionRecord& rec, int indent) {
  ojson doc;
  doc["version"] = rec.version;

  ojson spec;
  spec["kind"] = std::string(to_string(rec.spec.kind()));
  spec["indices"] = rec.spec.indices();
  spec["b"] = rec.spec.b();
  doc["spec"] = spec;

  const ExtremalSolution& s = rec.solution;
  ojson sol = ojson::object();
  if (s.phase_index) sol["phase_index"] = *s.phase_index;
  if (s.dual_moments) {
    ojson cm;
    cm["b"] = s.dual_moments->b();
    cm["p"] = reals(s.dual_moments->p());
    sol["dual_moments"] = cm;
  } else {
    sol["dual_moments"] = nullptr;
  }
  ojson alphas = ojson::array();
  for (const auto& [j, a] : s.alphas) alphas.push_back(ojson{{"index", j}, {"value", a}});
  sol["alphas"] = alphas;
  ojson polys = ojson::array();
  for (const auto& [j, p] : s.polys) polys.push_back(ojson{{"index", j}, {"coeffs", reals(p.coeffs())}});
  sol["polys"] = polys;
  sol["objective"] = s.objective;
  sol["active_set"] = s.active_set;
  doc["solution"] = sol;

  const VerificationReport& v = rec.verification;
  ojson ver;
  ver["constraint_sup"] = v.constraint_sup.sup;
  ver["argmax"] = v.constraint_sup.argmax;
  ver["attained_tol"] = v.constraint_sup.attained_tol;
  ver["objective"] = v.objective;
  ver["equimax_spread"] = v.equimax_spread;
  ver["support_attainment"] = v.support_attainment;
  ver["duality_residual"] = v.duality_residual;
  ver["dual_available"] = v.dual_available;
  ver["checks"] = ojson{{"feasible", v.feasible},
                        {"equimax", v.equimax_ok},
                        {"attainment", v.attainment_ok},
                        {"duality", v.duality_ok}};
  ver["pass"] = v.pass();
  doc["verification"] = ver;

  std::string out;
  dump(doc, out, indent, 0);
  return out;
}

SolutionRecord parse_solution_record(std::string_view text) {
  try {
    const ojson doc = ojson::parse(text);
    const int version = doc.at("version").get<int>();
    if (version != kRecordVersion)
      throw InvalidInput("unsupported record version " + std::to_string(version));

    const ojson& js = doc.at("spec");
    ProblemSpec spec(parse_kind(js.at("kind").get<std::string>()),
                     js.at("indices").get<std::vector<int>>(), js.at("b").get<double>());

    const ojson& jsol = doc.at("solution");
    ExtremalSolution sol;
    if (jsol.contains("phase_index")) sol.phase_index = jsol.at("phase_index").get<int>();
    if (const ojson& cm = jsol.at("dual_moments"); !cm.is_null())
      sol.dual_moments = CanonicalMomentSeq(cm.at("b").get<double>(), cm.at("p").get<std::vector<double>>());
    for (const auto& a : jsol.at("alphas")) sol.alphas[a.at("index").get<int>()] = a.at("value").get<double>();
    for (const auto& p : jsol.at("polys"))
      sol.polys[p.at("index").get<int>()] = Polynomial(p.at("coeffs").get<std::vector<double>>());
    sol.objective = jsol.at("objective").get<double>();
    sol.active_set = jsol.at("active_set").get<std::vector<int>>();

    const ojson& jv = doc.at("verification");
    VerificationReport ver;
    ver.constraint_sup.sup = jv.at("constraint_sup").get<double>();
    ver.constraint_sup.argmax = jv.at("argmax").get<double>();
    ver.constraint_sup.attained_tol = jv.value("attained_tol", 0.0);
    ver.objective = jv.value("objective", sol.objective);
    ver.equimax_spread = jv.at("equimax_spread").get<double>();
    ver.support_attainment = jv.at("support_attainment").get<double>();
    ver.duality_residual = jv.at("duality_residual").get<double>();
    ver.dual_available = jv.value("dual_available", spec.kind() == ProblemKind::first);
    const bool pass = jv.at("pass").get<bool>();
    if (jv.contains("checks")) {
      const ojson& c = jv.at("checks");
      ver.feasible = c.at("feasible").get<bool>();
      ver.equimax_ok = c.at("equimax").get<bool>();
      ver.attainment_ok = c.at("attainment").get<bool>();
      ver.duality_ok = c.at("duality").get<bool>();
    } else {
      ver.feasible = ver.equimax_ok = ver.attainment_ok = ver.duality_ok = pass;
    }
    return SolutionRecord{version, std::move(spec), std::move(sol), ver};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed solution record: ") + e.what());
  }
}

}  // namespace chebext
