#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zp/zp.hpp"

namespace zp::cli {

using ojson = nlohmann::ordered_json;

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::center_not_rational:
    case ErrorKind::step_budget_exceeded:
    case ErrorKind::not_minimal:
    case ErrorKind::retries_exhausted:
    case ErrorKind::order_two_candidate:
      return 3;
    case ErrorKind::invariant_violation:
      return 4;
    default:
      return 2;
  }
}

struct Options {
  std::string command;
  bool json = false;
  bool dot = false;
  bool check = false;
  std::uint64_t seed = 0;
  int max_blowups = kDefaultMaxBlowups;
  std::string diagram_json;
  int jobs = 1;
  std::vector<std::string> files;
  std::vector<std::string> generators;
  long a = 0, b = 0;
  std::string s0;
};

inline std::vector<BiPoly> parse_generators(const std::vector<std::string>& texts) {
  std::vector<BiPoly> gens;
  for (auto& t : texts) gens.push_back(parse_poly(t));
  if (gens.empty()) throw Error(ErrorKind::invalid_argument, "no generators given");
  return gens;
}

inline std::vector<std::string> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string vertex_list(const IntersectionDiagram& d) {
  std::string s;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    const auto& v = d.vertices[i];
    s += (i ? ", " : "") + v.name() + " (" + std::to_string(v.N) + "," + std::to_string(v.nu) + ")";
  }
  return s;
}

inline std::string edge_list(const IntersectionDiagram& d) {
  std::string s;
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    s += (i ? ", " : "") + d.at(d.edges[i].first).name() + "-" + d.at(d.edges[i].second).name();
  return s.empty() ? "none" : s;
}

inline std::string terms_str(const std::vector<ZetaTerm>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    std::string den;
    for (auto [nu, N] : t.factors) den += "(" + RationalFunctionS::factor_str({nu, N, 1}) + ")";
    s += (i ? " + " : "") + t.coefficient.str() + "/" + (t.factors.size() == 1 ? den : "(" + den + ")");
  }
  return s;
}

/// Runs every structural check; the names of failed ones, empty if all pass.
inline std::vector<std::string> check_failures(const IntersectionDiagram& d, const ChartState* st) {
  std::vector<std::string> bad;
  for (auto& r : validate_all(d))
    for (auto& f : r.failures) bad.push_back(r.name + ": " + f);
  if (d.minimal) {
    auto cc = cross_check(d);
    if (!cc.match()) bad.push_back("criterion disagrees with zeta: " + cc.dump());
  }
  if (st) {
    if (auto f = check_factorization(*st); !f.empty()) bad.push_back("factorization: " + f);
    for (auto& f : verify_minimality(*st).failures) bad.push_back("minimality: " + f);
  }
  return bad;
}

struct Input {
  std::optional<PrincipalizationResult> result;
  IntersectionDiagram diagram;
};

inline Input load_input(const Options& o, const std::vector<std::string>& gens) {
  Input in;
  if (!o.diagram_json.empty()) {
    in.diagram = import_json(read_text(o.diagram_json));
    return in;
  }
  in.result = principalize(parse_generators(gens), o.max_blowups);
  in.diagram = in.result->diagram;
  return in;
}

inline int finish_check(const Options& o, const Input& in, std::ostream& out) {
  if (!o.check) return 0;
  const auto bad = check_failures(in.diagram, in.result ? &in.result->state : nullptr);
  for (auto& b : bad) out << "check failed: " << b << "\n";
  if (!bad.empty()) return 4;
  if (!o.json && !o.dot) out << "checks passed\n";
  return 0;
}

inline ojson log_json(const ChartState& st) {
  ojson arr = ojson::array();
  for (auto& e : st.events) {
    ojson j;
    j["step"] = e.step;
    j["chart"] = st.charts[static_cast<std::size_t>(e.center.chart)].name();
    j["center"] = {e.center.u.str(), e.center.v.str()};
    j["divisor"] = st.exceptional[static_cast<std::size_t>(e.divisor)].name();
    j["N"] = e.N;
    j["nu"] = e.nu;
    j["bad"] = e.was_bad;
    arr.push_back(j);
  }
  return arr;
}

inline int cmd_principalize(const Options& o, const std::vector<std::string>& gens, std::ostream& out) {
  Input in;
  in.result = principalize(parse_generators(gens), o.max_blowups);
  in.diagram = in.result->diagram;
  const auto& st = in.result->state;
  if (o.dot) {
    out << export_dot(in.diagram);
  } else if (o.json) {
    ojson j;
    j["steps"] = in.result->step_count;
    j["log"] = log_json(st);
    j["diagram"] = diagram_to_json(in.diagram);
    out << j.dump(2) << "\n";
  } else {
    out << "blow-ups: " << in.result->step_count << "\n";
    for (auto& e : st.events)
      out << "step " << e.step << ": center (" << e.center.u << "," << e.center.v << ") in chart "
          << st.charts[static_cast<std::size_t>(e.center.chart)].name() << " -> "
          << st.exceptional[static_cast<std::size_t>(e.divisor)].name() << " (N=" << e.N << ", nu=" << e.nu << ")\n";
    out << "vertices: " << vertex_list(in.diagram) << "\n";
    out << "edges: " << edge_list(in.diagram) << "\n";
  }
  return finish_check(o, in, out);
}

inline int cmd_zeta(const Options& o, const std::vector<std::string>& gens, std::ostream& out) {
  const Input in = load_input(o, gens);
  const auto rep = pole_report(in.diagram);
  if (o.json) {
    ojson j = zeta_report_json(rep);
    j["terms"] = terms_str(rep.terms);
    out << j.dump(2) << "\n";
  } else {
    out << rep.zeta.str() << "\n";
    out << "terms: " << terms_str(rep.terms) << "\n";
  }
  return finish_check(o, in, out);
}

inline int cmd_poles(const Options& o, const std::vector<std::string>& gens, std::ostream& out) {
  const Input in = load_input(o, gens);
  const auto rep = pole_report(in.diagram);
  if (o.json) {
    out << zeta_report_json(rep)["poles"].dump(2) << "\n";
  } else {
    for (auto& p : rep.poles) out << p.location << " (order " << p.order << ") leading " << p.leading << "\n";
  }
  return finish_check(o, in, out);
}

inline int cmd_classify(const Options& o, const std::vector<std::string>& gens, std::ostream& out) {
  const Input in = load_input(o, gens);
  ojson arr = ojson::array();
  for (auto& s0 : candidate_poles(in.diagram)) {
    const Verdict v = classify(in.diagram, s0);
    if (o.json) {
      ojson j;
      j["s"] = s0.str();
      j["pole"] = v.is_pole;
      j["reasons"] = ojson::array();
      for (auto& h : v.reasons) j["reasons"].push_back({{"condition", h.condition}, {"vertex", in.diagram.at(h.vertex).name()}});
      arr.push_back(j);
      continue;
    }
    out << s0 << ":";
    if (v.reasons.empty()) out << "none";
    for (std::size_t i = 0; i < v.reasons.size(); ++i)
      out << (i ? "," : "") << "cond" << v.reasons[i].condition << "(" << in.diagram.at(v.reasons[i].vertex).name() << ")";
    out << "\n";
  }
  if (o.json) out << arr.dump(2) << "\n";
  return finish_check(o, in, out);
}

inline int cmd_verify(const Options& o, const std::vector<std::string>& gens, std::ostream& out) {
  const Input in = load_input(o, gens);
  const IntersectionDiagram& d = in.diagram;
  std::vector<std::pair<std::string, bool>> rows;
  ojson j;
  for (auto& r : validate_all(d)) {
    rows.emplace_back(r.name, r.pass());
    for (auto& f : r.failures) out << "  " << r.name << ": " << f << "\n";
  }
  const auto cc = cross_check(d);
  rows.emplace_back("criterion-vs-zeta", cc.match());
  if (!cc.match()) out << "  " << cc.dump() << "\n";
  bool residues_ok = true;
  for (auto& c : pole_report(d).per_candidate) {
    if (c.order_two) continue;
    const auto poles = poles_of(local_zeta(d));
    Rational residue(0);
    for (auto& p : poles)
      if (p.location == c.s0) residue = p.leading;
    if (residue != c.total) residues_ok = false;
  }
  rows.emplace_back("residues", residues_ok);
  if (in.result) {
    const auto& st = in.result->state;
    rows.emplace_back("factorization", check_factorization(st).empty());
    rows.emplace_back("minimality", verify_minimality(st).pass());
    const GenericCheckReport g = generic_check(*in.result, o.seed);
    bool min_ok = std::all_of(g.min_rows.begin(), g.min_rows.end(), [](auto& r) { return r.pass(); });
    bool rel_ok = std::all_of(g.relations.begin(), g.relations.end(), [](auto& r) { return r.pass(); });
    rows.emplace_back("min-property", min_ok);
    rows.emplace_back("relations", rel_ok);
    std::string lam;
    for (std::size_t i = 0; i < g.lambda.size(); ++i) lam += (i ? "," : "") + g.lambda[i].str();
    if (o.json) {
      j["lambda"] = lam;
      j["retries"] = g.retries;
      j["n"] = ojson::object();
      for (auto& r : g.relations) j["n"][r.divisor] = r.n;
    } else {
      out << "lambda: (" << lam << "), retries " << g.retries << "\n";
      std::string ns;
      for (std::size_t i = 0; i < g.relations.size(); ++i)
        ns += (i ? ", " : "") + g.relations[i].divisor + ":" + std::to_string(g.relations[i].n);
      out << "n: " << (ns.empty() ? "none" : ns) << "\n";
      for (auto& r : g.relations)
        out << "  " << r.divisor << ": sum alpha = " << r.alpha_sum << ", m-2+nu*n/N = " << r.count_rhs
            << ", sum alpha + n(1-nu/N) = " << r.form_lhs << ", m+n-2 = " << r.form_rhs << "\n";
    }
  }
  bool all = true;
  for (auto& [name, ok] : rows) all = all && ok;
  if (o.json) {
    j["checks"] = ojson::object();
    for (auto& [name, ok] : rows) j["checks"][name] = ok;
    j["pass"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (auto& [name, ok] : rows) out << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    out << (all ? "all checks passed" : "verification failed") << "\n";
  }
  return all ? 0 : 1;
}

inline int cmd_family(const Options& o, std::ostream& out) {
  const auto gens = family::build(o.a, o.b);
  const auto res = principalize(gens, o.max_blowups);
  const auto rep = pole_report(res.diagram);
  const Rational target(-(o.a - o.b + 1), o.a);
  const bool chain_ok = family::matches_chain(res.diagram, o.a, o.b);
  const bool hit = std::any_of(rep.poles.begin(), rep.poles.end(), [&](const Pole& p) { return p.location == target; });
  if (o.json) {
    ojson j;
    j["ideal"] = {gens[0].str(), gens[1].str()};
    j["diagram"] = diagram_to_json(res.diagram);
    j["chain_matches"] = chain_ok;
    j["zeta"] = rep.zeta.str();
    j["target_pole"] = target.str();
    j["target_is_pole"] = hit;
    out << j.dump(2) << "\n";
  } else {
    out << "ideal: (" << gens[0].str() << ", " << gens[1].str() << ")\n";
    out << "chain:";
    for (auto& v : res.diagram.vertices) out << " (" << v.N << "," << v.nu << ")";
    out << (chain_ok ? " [as predicted]" : " [differs from prediction]") << "\n";
    out << "zeta: " << rep.zeta.str() << "\n";
    out << "pole " << target << (hit ? "" : " MISSING") << "\n";
  }
  return chain_ok && hit ? 0 : 1;
}

inline int cmd_realize(const Options& o, std::ostream& out) {
  Rational s0;
  try {
    s0 = Rational::parse(o.s0);
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, "not a rational number: " + o.s0);
  }
  const auto r = family::realize_and_verify(s0, o.max_blowups);
  if (o.json) {
    ojson j;
    j["s"] = s0.str();
    j["a"] = r.a;
    j["b"] = r.b;
    j["verified"] = r.verified;
    out << j.dump(2) << "\n";
  } else {
    out << "(a,b)=(" << r.a << "," << r.b << "); " << (r.verified ? "verified" : "NOT verified") << " pole " << s0 << "\n";
  }
  return r.verified ? 0 : 4;
}

inline int dispatch(const Options& o, const std::vector<std::string>& gens, std::ostream& out) {
  if (o.command == "principalize") return cmd_principalize(o, gens, out);
  if (o.command == "zeta") return cmd_zeta(o, gens, out);
  if (o.command == "poles") return cmd_poles(o, gens, out);
  if (o.command == "classify") return cmd_classify(o, gens, out);
  if (o.command == "verify") return cmd_verify(o, gens, out);
  if (o.command == "family") return cmd_family(o, out);
  return cmd_realize(o, out);
}

/// One run with errors mapped to exit codes.
inline int guarded(const Options& o, const std::vector<std::string>& gens, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(o, gens, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principalization and topological zeta functions of ideals in two variables"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool takes_generators) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--max-blowups", o.max_blowups, "blow-up budget")->check(CLI::PositiveNumber);
    if (takes_generators) {
      sub->add_option("generators", o.generators, "generators, one polynomial per argument");
      sub->add_option("-f,--file", o.files, "file with one generator per line; repeatable");
      sub->add_option("--jobs", o.jobs, "parallel runs over --file inputs")->check(CLI::PositiveNumber);
      sub->add_flag("--check", o.check, "run validators and the criterion cross-check");
      sub->add_flag("--dot", o.dot, "DOT output of the diagram");
      sub->add_option("--seed", o.seed, "seed for generic coefficients");
      sub->add_option("--diagram-json", o.diagram_json, "read the diagram from a JSON file instead");
    }
  };
  for (const char* name : {"principalize", "zeta", "poles", "classify", "verify"}) {
    auto* sub = app.add_subcommand(name);
    common(sub, true);
  }
  app.get_subcommand("principalize")->description("blow up until the ideal is a normal crossings monomial");
  app.get_subcommand("zeta")->description("local topological zeta function");
  app.get_subcommand("poles")->description("poles with orders and leading coefficients");
  app.get_subcommand("classify")->description("pole verdict for every candidate from the diagram");
  app.get_subcommand("verify")->description("relations, bounds and cross-checks");
  auto* fam = app.add_subcommand("family", "the ideal (x^b*y, x^a + y^(b+1))");
  common(fam, false);
  fam->add_option("a", o.a)->required();
  fam->add_option("b", o.b)->required();
  auto* real = app.add_subcommand("realize", "family member with a pole at s0 (write: realize -- -3/5)");
  common(real, false);
  real->add_option("s0", o.s0)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  o.command = app.get_subcommands().front()->get_name();
  if (o.dot && o.command != "principalize") {
    err << "error: --dot is only available for principalize\n";
    return 2;
  }

  if (o.files.empty()) return guarded(o, o.generators, out, err);
  if (!o.generators.empty()) {
    err << "error: give generators either as arguments or with --file, not both\n";
    return 2;
  }

  // Batch over files: each run isolated, output in input order.
  std::vector<std::string> outs(o.files.size()), errs(o.files.size());
  std::vector<int> codes(o.files.size(), 0);
  auto work = [&](std::size_t i) {
    std::ostringstream os, es;
    try {
      codes[i] = guarded(o, read_generator_file(o.files[i]), os, es);
    } catch (const Error& e) {
      es << "error: " << e.what() << "\n";
      codes[i] = exit_code_for(e.kind());
    }
    outs[i] = os.str();
    errs[i] = es.str();
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(o.jobs), o.files.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < o.files.size(); i += jobs) work(i);
    });
  for (auto& th : pool) th.join();
  int worst = 0;
  for (std::size_t i = 0; i < o.files.size(); ++i) {
    if (o.files.size() > 1) out << "== " << o.files[i] << "\n";
    out << outs[i];
    err << errs[i];
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

}  // namespace zp::cli
