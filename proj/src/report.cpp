#include "cideal/report.hpp"

#include <chrono>
#include <ctime>

#include <nlohmann/json.hpp>

namespace cideal {

const char* kVersion = "1.0.0";

json jint(const Int& v) {
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (v >= lo && v <= hi) return static_cast<int64_t>(v);
  return v.str();
}

json to_json(const Monomial& m, const std::vector<std::string>& vars) {
  return to_string(m, vars);
}

json to_json(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(to_string(g, vars));
  return json{{"generators", gens}, {"dim", I.dim()}};
}

json to_json(const ConstellationNode& n, const std::vector<std::string>& vars) {
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(to_json(c, vars));
  return json{{"path", n.path},
              {"order", n.order},
              {"residue_degree", n.residue_degree},
              {"transform", to_json(n.local, vars)},
              {"children", kids}};
}

json to_json(const Constellation& c, const std::vector<std::string>& vars) {
  return json{{"node_count", c.node_count}, {"root", to_json(c.root, vars)}};
}

json to_json(const HDReport& r) {
  json nodes = json::array();
  for (const auto& n : r.per_node)
    nodes.push_back(json{{"path", n.path}, {"order", n.order}, {"term", jint(n.term)}});
  return json{{"colength_closure", jint(r.colength_closure)},
              {"hd_sum", jint(r.hd_sum)},
              {"defect", jint(r.defect)},
              {"per_node", nodes}};
}

json to_json(const HilbertTable& t) {
  json samples = json::object();
  for (const auto& [n, v] : t.samples) samples[std::to_string(n)] = jint(v);
  json coeffs = json::array();
  for (const auto& c : t.fitted) {
    coeffs.push_back(json{{"num", jint(numerator(c))}, {"den", jint(denominator(c))}});
  }
  return json{{"samples", samples},
              {"coefficients", coeffs},
              {"fit_valid_from", t.fit_valid_from},
              {"multiplicity", jint(t.multiplicity)}};
}

json to_json(const MultReport& r) {
  json mixed = json::array();
  for (const auto& [idx, v] : r.mixed)
    mixed.push_back(json{{"index", idx}, {"value", jint(v)}});
  const char* src = r.source == MultSource::Both        ? "point-basis+fitting"
                    : r.source == MultSource::PointBasis ? "point-basis"
                                                         : "fitting";
  return json{{"e", jint(r.e)},
              {"mixed", mixed},
              {"source", src},
              {"discrepancies", r.discrepancies},
              {"notices", r.notices}};
}

json to_json(const CriteriaReport& r) {
  json upper_i = json::array();
  for (const auto& u : r.upper_i) upper_i.push_back(jint(u));
  json j{{"order", r.o},
         {"mu_closure", r.mu_closure},
         {"lower", jint(r.lower)},
         {"upper", jint(r.upper)},
         {"upper_by_level", upper_i},
         {"finitely_supported", r.finitely_supported},
         {"input_was_closed", r.input_was_closed},
         {"mi_closed", r.mi_closed},
         {"criterion_consistent", r.criterion_consistent},
         {"binding", r.binding},
         {"hypothesis_notes", r.hypothesis_notes}};
  if (r.mi_witness)
    j["mi_witness"] = to_string(*r.mi_witness, default_vars(r.mi_witness->dim()));
  return j;
}

json to_json(const ReductionReport& r) {
  json j{{"n_max", r.n_max},
         {"failing_n", r.failing_n},
         {"r_J", r.r_J},
         {"is_reduction", r.is_reduction},
         {"inconclusive", r.inconclusive}};
  if (r.lemma61) {
    j["lemma61"] = json{{"lhs", jint(r.lemma61->lhs)},
                        {"rhs", jint(r.lemma61->rhs)},
                        {"cm_iff", r.lemma61->cm_iff},
                        {"low_order_ok", r.lemma61->low_order_ok},
                        {"high_order_ok", r.lemma61->high_order_ok}};
  }
  return j;
}

json make_report(const std::string& command, const json& inputs,
                 const json& result, bool with_timestamp) {
  json j{{"command", command},
         {"inputs", inputs},
         {"result", result},
         {"status", "ok"},
         {"version", kVersion}};
  if (with_timestamp) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
    j["timestamp"] = buf;
  }
  return j;
}

} // namespace cideal
