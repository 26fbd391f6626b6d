#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cideal/fixtures.hpp"
#include "cideal/report.hpp"

using namespace cideal;

namespace {

struct Common {
  std::string vars;
  std::string format = "json";
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--vars", c.vars, "comma-separated variable names");
  cmd->add_option("--format", c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp field");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::vector<std::string>> split_vars(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') { out.push_back(cur); cur.clear(); }
    else if (ch != ' ') cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

ParsedIdeal load(const std::string& path, const Common& c) {
  return parse_ideal(slurp(path), split_vars(c.vars));
}

// Flatten a json report to indented `key: value` lines.
void print_text(const json& j, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        std::cout << pad << k << ":\n";
        print_text(v, indent + 2);
      } else {
        std::cout << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
      }
    }
  } else if (j.is_array()) {
    for (auto& v : j) {
      if (v.is_object() || v.is_array()) {
        std::cout << pad << "-\n";
        print_text(v, indent + 2);
      } else {
        std::cout << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
      }
    }
  } else {
    std::cout << pad << j.dump() << "\n";
  }
}

void emit(const std::string& command, const json& inputs, const json& result,
          const Common& c) {
  json rep = make_report(command, inputs, result, !c.no_timestamp);
  if (c.format == "json")
    std::cout << rep.dump(2) << "\n";
  else
    print_text(rep);
}

json echo_input(const ParsedIdeal& p) {
  json j;
  j["vars"] = p.vars;
  j["kind"] = p.monomial ? "monomial" : "polynomial";
  if (p.monomial) {
    j["ideal"] = to_json(*p.mono, p.vars);
  } else {
    json gens = json::array();
    for (const auto& g : p.poly->gens()) gens.push_back(to_string(g, p.vars));
    j["ideal"] = json{{"generators", gens}, {"dim", p.poly->dim()}};
  }
  return j;
}

int run_fixtures(const Common& c) {
  auto results = fixtures::run_all();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.group << "." << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
  }
  std::cout << (all ? "all fixture checks passed" : "fixture checks FAILED") << "\n";
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with complete monomial ideals"};
  app.require_subcommand(1);

  std::string file, jfile, file2;
  std::vector<std::string> files;
  int max_n = -1, chart = 0, max_depth = 64;
  unsigned seed = 1;
  Common c;

  auto add_file_cmd = [&](const std::string& name, const std::string& desc) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->add_option("file", file, "ideal file")->required();
    add_common(cmd, c);
    return cmd;
  };

  auto* cmd_order = add_file_cmd("order", "order o(I), the minimum generator order");
  auto* cmd_mingens = add_file_cmd("mingens", "canonical minimal generators");
  auto* cmd_colength = add_file_cmd("colength", "staircase colength of a monomial ideal");
  auto* cmd_closure = add_file_cmd("closure", "integral closure of I^n");
  cmd_closure->add_option("--max-n", max_n, "power to close (default 1)");
  auto* cmd_isclosed = add_file_cmd("is-closed", "test integral closedness");
  auto* cmd_basepoints = add_file_cmd("basepoints", "constellation of base points");
  cmd_basepoints->add_option("--max-depth", max_depth, "recursion depth guard");
  auto* cmd_hd = add_file_cmd("hd-check", "length identity against the point basis");
  auto* cmd_hilbert = add_file_cmd("hilbert", "lengths of closed powers and the fitted polynomial");
  cmd_hilbert->add_option("--max-n", max_n, "largest sampled power");
  auto* cmd_mult = add_file_cmd("mult", "multiplicity e(I)");
  auto* cmd_mixed = app.add_subcommand("mixed-mult", "mixed multiplicities of several ideals");
  cmd_mixed->add_option("files", files, "ideal files")->required()->expected(1, 8);
  add_common(cmd_mixed, c);
  auto* cmd_fiber = add_file_cmd("fiber", "fiber-cone numerator coefficients");
  cmd_fiber->add_option("--max-n", max_n, "sampling range (default 8)");
  auto* cmd_micheck = add_file_cmd("mi-check", "closedness of M I against the generator-count criterion");
  auto* cmd_bounds = add_file_cmd("bounds-check", "generator-count bounds for the closure");
  auto* cmd_transform = add_file_cmd("transform", "quadratic transform in one chart");
  cmd_transform->add_option("--chart", chart, "chart variable index (0-based)")->required();
  auto* cmd_gbcolength = add_file_cmd("gb-colength", "colength via a Groebner basis");
  auto* cmd_reduction = add_file_cmd("reduction-check", "reduction test and reduction number");
  cmd_reduction->add_option("--J", jfile, "candidate reduction (d generators)");
  cmd_reduction->add_option("--max-n", max_n, "largest tested power (default 6)");
  cmd_reduction->add_option("--seed", seed, "search seed when --J is omitted");
  auto* cmd_lemma61 = add_file_cmd("lemma61", "depth criteria in dimension three");
  cmd_lemma61->add_option("--J", jfile, "candidate reduction")->required();
  cmd_lemma61->add_option("--max-n", max_n, "largest tested power (default 6)");
  auto* cmd_fixtures = app.add_subcommand("fixtures", "run the worked-example corpus");
  add_common(cmd_fixtures, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (cmd_fixtures->parsed()) return run_fixtures(c);

    if (cmd_mixed->parsed()) {
      std::vector<MonomialIdeal> ideals;
      json inputs = json::array();
      for (const auto& f : files) {
        ParsedIdeal p = parse_ideal(slurp(f), split_vars(c.vars));
        inputs.push_back(echo_input(p));
        ideals.push_back(p.as_monomial());
      }
      MultReport rep = mixed_multiplicities(ideals);
      emit("mixed-mult", inputs, to_json(rep), c);
      return rep.discrepancies.empty() ? 0 : 1;
    }

    ParsedIdeal p = load(file, c);
    json inputs = echo_input(p);

    if (cmd_order->parsed()) {
      int o = p.monomial ? order(*p.mono) : ideal_order(*p.poly);
      emit("order", inputs, json{{"order", o}}, c);
    } else if (cmd_mingens->parsed()) {
      emit("mingens", inputs, inputs["ideal"], c);
    } else if (cmd_colength->parsed()) {
      emit("colength", inputs, json{{"colength", jint(colength(p.as_monomial()))}}, c);
    } else if (cmd_closure->parsed()) {
      int n = max_n < 0 ? 1 : max_n;
      MonomialIdeal C = closure_power(p.as_monomial(), n);
      emit("closure", inputs, json{{"n", n}, {"closure", to_json(C, p.vars)}}, c);
    } else if (cmd_isclosed->parsed()) {
      emit("is-closed", inputs,
           json{{"closed", is_integrally_closed(p.as_monomial())}}, c);
    } else if (cmd_basepoints->parsed()) {
      Constellation cs = constellation(p.as_monomial(), max_depth);
      json res = to_json(cs, p.vars);
      res["point_basis"] = point_basis(cs);
      emit("basepoints", inputs, res, c);
    } else if (cmd_hd->parsed()) {
      HDReport rep = hd_check(p.as_monomial());
      emit("hd-check", inputs, to_json(rep), c);
      if (rep.defect != 0) return 1;
    } else if (cmd_hilbert->parsed()) {
      emit("hilbert", inputs, to_json(hilbert_table(p.as_monomial(), max_n)), c);
    } else if (cmd_mult->parsed()) {
      emit("mult", inputs, json{{"e", jint(multiplicity(p.as_monomial()))}}, c);
    } else if (cmd_fiber->parsed()) {
      auto num = fiber_numerator(p.as_monomial(), max_n < 0 ? 8 : max_n);
      json arr = json::array();
      for (const auto& v : num) arr.push_back(jint(v));
      emit("fiber", inputs, json{{"numerator", arr}}, c);
    } else if (cmd_micheck->parsed()) {
      CriteriaReport rep = mi_criterion(p.as_monomial());
      emit("mi-check", inputs, to_json(rep), c);
      if (!rep.criterion_consistent) return 1;
    } else if (cmd_bounds->parsed()) {
      emit("bounds-check", inputs, to_json(generator_bounds(p.as_monomial())), c);
    } else if (cmd_transform->parsed()) {
      if (p.monomial) {
        MonomialIdeal T = chart_transform(*p.mono, chart);
        emit("transform", inputs, json{{"chart", chart}, {"transform", to_json(T, p.vars)}}, c);
      } else {
        PolynomialIdeal T = poly_transform(*p.poly, chart);
        json gens = json::array();
        for (const auto& f : T.gens()) gens.push_back(to_string(f, p.vars));
        emit("transform", inputs,
             json{{"chart", chart}, {"transform", json{{"generators", gens}}}}, c);
      }
    } else if (cmd_gbcolength->parsed()) {
      emit("gb-colength", inputs,
           json{{"colength", jint(gb_colength(p.as_polynomial()))}}, c);
    } else if (cmd_reduction->parsed()) {
      const MonomialIdeal& I = p.as_monomial();
      int n = max_n < 0 ? 6 : max_n;
      if (jfile.empty()) {
        auto J = find_reduction(I, seed, 50, n);
        if (!J) {
          emit("reduction-check", inputs, json{{"found", false}}, c);
          return 1;
        }
        json gens = json::array();
        for (const auto& f : J->gens()) gens.push_back(to_string(f, p.vars));
        ReductionReport rep = is_reduction(*J, I, n);
        json res = to_json(rep);
        res["found"] = true;
        res["J"] = gens;
        emit("reduction-check", inputs, res, c);
      } else {
        PolynomialIdeal J = parse_ideal(slurp(jfile), split_vars(c.vars)).as_polynomial();
        ReductionReport rep = is_reduction(J, I, n);
        emit("reduction-check", inputs, to_json(rep), c);
      }
    } else if (cmd_lemma61->parsed()) {
      PolynomialIdeal J = parse_ideal(slurp(jfile), split_vars(c.vars)).as_polynomial();
      ReductionReport rep = lemma61_checks(p.as_monomial(), J, max_n < 0 ? 6 : max_n);
      emit("lemma61", inputs, to_json(rep), c);
      if (rep.lemma61 && !(rep.lemma61->low_order_ok && rep.lemma61->high_order_ok))
        return 1;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
