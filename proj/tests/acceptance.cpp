// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <iostream>
#include <sstream>

#include "corpus.hpp"

using namespace zp;
using zp::testing::describe;
using zp::testing::parse_all;
using zp::testing::Principalized;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool has_pole(const RationalFunctionS& z, const Rational& s0, int order = 1) {
  for (auto& p : poles_of(z))
    if (p.location == s0) return p.order == order;
  return false;
}

Outcome golden_example() {
  Outcome o;
  const auto r = principalize(parse_all({"x^4*y", "x^7 + x*y^4"}));
  const auto& d = r.diagram;
  const std::vector<std::tuple<std::string, long, long>> want = {{"E1", 5, 2}, {"E2", 6, 3}, {"E3", 7, 4}, {"S1", 1, 1}};
  if (d.vertices.size() != want.size()) return o.fail("vertex count"), o;
  for (std::size_t i = 0; i < want.size(); ++i) {
    auto& [name, N, nu] = want[i];
    if (d.vertices[i].name() != name || d.vertices[i].N != N || d.vertices[i].nu != nu) o.fail("vertex " + name);
  }
  const std::vector<std::pair<int, int>> chain = {{0, 1}, {0, 3}, {1, 2}};
  if (d.edges != chain) o.fail("edges");
  const auto z = local_zeta(d);
  if (z.str() != "(5s^2+16s+8)/((2+5s)(4+7s)(1+s))") o.fail("zeta " + z.str());
  const auto poles = poles_of(z);
  std::vector<Rational> locs;
  for (auto& p : poles) {
    locs.push_back(p.location);
    if (p.order != 1) o.fail("pole order");
  }
  if (locs != std::vector<Rational>{Rational(-1), Rational(-4, 7), Rational(-2, 5)}) o.fail("pole set");
  if (classify(d, Rational(-1, 2)).is_pole) o.fail("-1/2 accepted");
  return o;
}

Outcome criterion_equivalence(const std::vector<Principalized>& corpus, std::size_t skipped) {
  Outcome o;
  if (corpus.size() < 50) o.fail("corpus has only " + std::to_string(corpus.size()) + " ideals");
  for (auto& p : corpus) {
    const auto c = cross_check(p.result.diagram);
    if (!c.match()) o.fail(describe(p.entry) + ": " + c.dump());
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " ideals, " + std::to_string(skipped) + " skipped";
  return o;
}

Outcome relation_suite(const std::vector<Principalized>& corpus) {
  Outcome o;
  for (auto& p : corpus) {
    if (p.result.state.events.empty()) continue;
    try {
      const auto rep = generic_check(p.result, 1);
      for (auto& row : rep.relations)
        if (!row.pass()) o.fail(describe(p.entry) + " " + row.divisor);
      if (p.entry.label == "golden") {
        std::vector<int> n;
        for (auto& row : rep.relations) n.push_back(row.n);
        if (n != std::vector<int>{3, 0, 1}) o.fail("golden n");
      }
    } catch (const Error& e) {
      o.fail(describe(p.entry) + ": " + e.what());
    }
  }
  return o;
}

Outcome structure_suite(const std::vector<Principalized>& corpus) {
  Outcome o;
  for (auto& p : corpus)
    for (auto& rep : validate_all(p.result.diagram))
      if (!rep.pass()) o.fail(describe(p.entry) + " " + rep.name + ": " + rep.failures.front());
  return o;
}

Outcome residue_oracle(const std::vector<Principalized>& corpus) {
  Outcome o;
  int checked = 0;
  for (auto& p : corpus) {
    const auto rep = pole_report(p.result.diagram);
    const Rational maximal = rep.candidates.back();
    if (rep.poles.empty() || rep.poles.back().location != maximal) o.fail(describe(p.entry) + ": maximal candidate is not a pole");
    for (auto& c : rep.per_candidate) {
      if (c.order_two) continue;
      Rational residue(0);
      for (auto& q : rep.poles)
        if (q.location == c.s0) residue = q.order == 1 ? q.leading : Rational(0);
      if (residue != c.total) o.fail(describe(p.entry) + " at " + c.s0.str());
      if (c.s0 != maximal)
        for (auto& k : c.contributions)
          if (k.value.sign() > 0) o.fail(describe(p.entry) + ": positive contribution at " + c.s0.str());
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " candidates";
  return o;
}

Outcome independence(const std::vector<Principalized>& corpus) {
  Outcome o;
  int done = 0;
  for (auto& p : corpus) {
    if (done == 10) break;
    const auto centers = allowed_extra_centers(p.result.state, 1);
    if (centers.empty()) continue;
    const auto st = blown_up(p.result.state, centers.front());
    if (!find_bad_points(st).empty()) o.fail(describe(p.entry) + ": extra blow-up broke normal crossings");
    if (local_zeta(build_diagram(st)).str() != local_zeta(p.result.diagram).str()) o.fail(describe(p.entry));
    ++done;
  }
  if (done < 10) o.fail("only " + std::to_string(done) + " ideals admit an extra center");
  return o;
}

Outcome min_property(const std::vector<Principalized>& corpus) {
  Outcome o;
  for (auto& p : corpus) {
    if (p.result.state.generators.size() < 2 || p.result.state.events.empty()) continue;
    try {
      const auto rep = generic_check(p.result, 1);
      for (auto& row : rep.min_rows)
        if (!row.pass()) o.fail(describe(p.entry) + " " + row.divisor);
    } catch (const Error& e) {
      o.fail(describe(p.entry) + ": " + e.what());
    }
  }
  return o;
}

Outcome realization() {
  Outcome o;
  std::vector<Rational> sample;
  for (long i = 1; i <= 10; ++i) sample.push_back(Rational(-1) - Rational(1, i));
  for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 1},   {1, 2},   {1, 3},   {2, 3},   {3, 5},   {4, 7},   {1, 50},
                                                        {49, 50}, {7, 13},  {12, 25}, {1, 7},   {5, 6},   {3, 4},   {9, 11},
                                                        {17, 19}, {23, 29}, {31, 37}, {41, 43}, {2, 47}, {13, 50}})
    sample.emplace_back(-p, q);
  if (sample.size() != 30) o.fail("sample size");
  for (auto& s0 : sample) {
    try {
      const auto r = family::realize_and_verify(s0);
      if (!r.verified) o.fail(s0.str() + " not realized by (" + std::to_string(r.a) + "," + std::to_string(r.b) + ")");
    } catch (const Error& e) {
      o.fail(s0.str() + ": " + e.what());
    }
  }
  for (auto& r : {Rational(-3, 2), Rational(0), Rational(-5, 2)})
    if (family::admissible(r)) o.fail("admissible accepts " + r.str());
  return o;
}

Outcome degenerate_bases() {
  Outcome o;
  if (local_zeta(principalize(parse_all({"x"})).diagram).str() != "1/(1+s)") o.fail("(x)");
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      if (a == b) continue;
      const auto z = local_zeta(principalize(parse_all({zp::testing::mono(a, b)})).diagram);
      const auto want = rf_sum_of_terms({{Rational(1), {{1, a}, {1, b}}}});
      if (!(z == want) || !has_pole(z, Rational(-1, a)) || !has_pole(z, Rational(-1, b)) || poles_of(z).size() != 2)
        o.fail(zp::testing::mono(a, b) + ": " + z.str());
    }
  const auto m = local_zeta(principalize(parse_all({"x", "y"})).diagram);
  if (m.str() != "2/(2+s)" || !has_pole(m, Rational(-2))) o.fail("(x,y): " + m.str());
  return o;
}

}  // namespace

int main() {
  std::vector<std::string> skipped;
  const auto corpus = zp::testing::principalize_corpus(zp::testing::full_corpus(), &skipped);
  for (auto& s : skipped) std::cout << "skipped: " << s << "\n";

  const std::vector<std::pair<std::string, Outcome>> results = {
      {"golden example", golden_example()},
      {"criterion equals zeta poles", criterion_equivalence(corpus, skipped.size())},
      {"relation suite", relation_suite(corpus)},
      {"structure suite", structure_suite(corpus)},
      {"residue oracle", residue_oracle(corpus)},
      {"independence of extra blow-ups", independence(corpus)},
      {"min-property", min_property(corpus)},
      {"pole-set realization", realization()},
      {"degenerate bases", degenerate_bases()},
  };
  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& [name, o] = results[i];
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    failed += o.pass ? 0 : 1;
  }
  return failed ? 1 : 0;
}
