#include "nilsys/report_json.hpp"
#include "nilsys/error.hpp"

#include <json.hpp>

namespace nilsys {

using json = nlohmann::json;

namespace {

json vec(const Vector &v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(to_string(x));
  return out;
}

Vector unvec(const json &j) {
  Vector v;
  for (const auto &x : j)
    v.push_back(parse_rational(x.get<std::string>()));
  return v;
}

Rational rat(const json &j) { return parse_rational(j.get<std::string>()); }

} // namespace

ReportData make_report_data(const BoundReport &r) {
  ReportData d;
  d.name = r.name;
  d.dim = r.dim;
  d.nilpotency_class = r.nilpotency_class;
  d.D = r.D;
  d.k_c = r.k_c;
  d.residual_girth = r.baselines.residual_girth;
  d.kc_bound = r.baselines.kc_bound;
  d.h_lower = r.lower.h;
  d.h_upper = r.upper.h;
  d.theta = r.upper.theta;
  for (std::size_t v = 0; v < r.lower.system.vars.size(); ++v)
    d.variables.push_back(r.lower.system.vars.name(v));
  for (const auto &c : r.lower.system.constraints)
    d.constraints.push_back({c.lhs, c.rhs, c.provenance.str()});
  d.dual = r.lower.certificate.dual;
  if (!r.witnesses.empty()) {
    const auto &w = r.witnesses.front();
    d.lattice_witness = ReportData::Witness{w.r, w.lattice.basis(), w.systole.str(), w.covolume};
  }
  d.carnot_verdict = r.carnot_verdict;
  return d;
}

std::string render_json(const ReportData &d) {
  json j;
  j["name"] = d.name;
  j["dim"] = d.dim;
  j["class"] = d.nilpotency_class;
  j["D"] = d.D;
  j["k_c"] = to_string(d.k_c);
  j["baselines"] = {{"residual_girth", to_string(d.residual_girth)},
                    {"kc_bound", to_string(d.kc_bound)}};
  j["h_lower"] = to_string(d.h_lower);
  j["h_upper"] = to_string(d.h_upper);
  j["theta"] = vec(d.theta);
  j["variables"] = d.variables;
  j["constraints"] = json::array();
  for (const auto &c : d.constraints)
    j["constraints"].push_back(
        {{"lhs", vec(c.lhs)}, {"rhs", to_string(c.rhs)}, {"provenance", c.provenance}});
  j["dual"] = vec(d.dual);
  if (d.lattice_witness) {
    json basis = json::array();
    for (const auto &row : d.lattice_witness->basis)
      basis.push_back(vec(row));
    j["lattice_witness"] = {{"r", d.lattice_witness->r.get_str()},
                            {"basis", basis},
                            {"systole", d.lattice_witness->systole},
                            {"covolume", to_string(d.lattice_witness->covolume)}};
  } else {
    j["lattice_witness"] = nullptr;
  }
  j["carnot_verdict"] = d.carnot_verdict;
  return j.dump(2) + "\n";
}

ReportData parse_report_json(const std::string &text) {
  try {
    json j = json::parse(text);
    ReportData d;
    d.name = j.at("name").get<std::string>();
    d.dim = j.at("dim").get<std::size_t>();
    d.nilpotency_class = j.at("class").get<std::size_t>();
    d.D = j.at("D").get<std::size_t>();
    d.k_c = rat(j.at("k_c"));
    d.residual_girth = rat(j.at("baselines").at("residual_girth"));
    d.kc_bound = rat(j.at("baselines").at("kc_bound"));
    d.h_lower = rat(j.at("h_lower"));
    d.h_upper = rat(j.at("h_upper"));
    d.theta = unvec(j.at("theta"));
    d.variables = j.at("variables").get<std::vector<std::string>>();
    for (const auto &c : j.at("constraints"))
      d.constraints.push_back(
          {unvec(c.at("lhs")), rat(c.at("rhs")), c.at("provenance").get<std::string>()});
    d.dual = unvec(j.at("dual"));
    const auto &w = j.at("lattice_witness");
    if (!w.is_null()) {
      ReportData::Witness wit;
      wit.r = Integer(w.at("r").get<std::string>());
      for (const auto &row : w.at("basis"))
        wit.basis.push_back(unvec(row));
      wit.systole = w.at("systole").get<std::string>();
      wit.covolume = rat(w.at("covolume"));
      d.lattice_witness = std::move(wit);
    }
    d.carnot_verdict = j.at("carnot_verdict").get<std::string>();
    return d;
  } catch (const json::exception &e) {
    throw ParseError(0, std::string("report JSON: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(0, std::string("report JSON: ") + e.what());
  }
}

} // namespace nilsys
