#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "zp/blowup.hpp"
#include "zp/error.hpp"
#include "zp/rational.hpp"

namespace zp {

/// Decorated dual graph of a principalization. Vertices are ordered
/// exceptional curves first (E1, E2, ...), then strict branches (S1, ...).
struct IntersectionDiagram {
  std::vector<DivisorRecord> vertices;
  std::vector<std::pair<int, int>> edges;  // vertex indices, first < second, sorted
  bool origin_case = false;
  bool minimal = true;

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].name() == name) return static_cast<int>(i);
    return -1;
  }
  const DivisorRecord& at(int i) const { return vertices[static_cast<std::size_t>(i)]; }
  bool is_exceptional(int i) const { return at(i).kind == DivisorKind::exceptional; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
      if (a == v) out.push_back(b);
      if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  Rational ratio(int v) const { return Rational(at(v).nu, at(v).N); }

  /// Sorts vertices canonically and remaps edges.
  void canonicalize() {
    std::vector<int> order(vertices.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto key = [&](int i) { return std::pair(at(i).kind == DivisorKind::strict_branch, at(i).id); };
    std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return key(l) < key(r); });
    std::vector<int> where(order.size());
    std::vector<DivisorRecord> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
      where[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
      sorted.push_back(at(order[i]));
    }
    vertices = std::move(sorted);
    for (auto& [a, b] : edges) {
      a = where[static_cast<std::size_t>(a)];
      b = where[static_cast<std::size_t>(b)];
      if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
  }

  friend bool operator==(const IntersectionDiagram&, const IntersectionDiagram&) = default;
};

struct ValidationReport {
  std::string name;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

/// alpha_i = nu_i - (nu/N) N_i toward every neighbor, for any vertex.
inline std::vector<std::pair<int, Rational>> alpha_row(const IntersectionDiagram& d, int v) {
  std::vector<std::pair<int, Rational>> row;
  const Rational r = d.ratio(v);
  for (int w : d.neighbors(v)) row.emplace_back(w, Rational(d.at(w).nu) - r * Rational(d.at(w).N));
  return row;
}

inline std::vector<std::pair<int, Rational>> alphas(const IntersectionDiagram& d, int v) {
  if (v < 0 || v >= static_cast<int>(d.vertices.size()) || !d.is_exceptional(v))
    throw Error(ErrorKind::not_exceptional, "alphas need an exceptional vertex");
  return alpha_row(d, v);
}

inline ValidationReport validate_alpha_bounds(const IntersectionDiagram& d) {
  ValidationReport rep{"alpha-bounds", {}};
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    if (!d.is_exceptional(v)) continue;
    const auto row = alpha_row(d, v);
    for (auto& [w, a] : row) {
      const std::string where = d.at(v).name() + " toward " + d.at(w).name() + ": alpha = " + a.str();
      if (a < Rational(-1) || a >= Rational(1)) rep.failures.push_back(where + " outside [-1,1)");
      else if (a == Rational(-1) && row.size() != 1) rep.failures.push_back(where + " with m = " + std::to_string(row.size()));
    }
  }
  return rep;
}

inline ValidationReport validate_alpha_signs(const IntersectionDiagram& d) {
  ValidationReport rep{"alpha-signs", {}};
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    if (!d.is_exceptional(v)) continue;
    const auto row = alpha_row(d, v);
    const auto neg = std::count_if(row.begin(), row.end(), [](auto& p) { return p.second.sign() < 0; });
    const auto nonpos = std::count_if(row.begin(), row.end(), [](auto& p) { return p.second.sign() <= 0; });
    const std::string name = d.at(v).name();
    if (neg > 1) rep.failures.push_back(name + ": " + std::to_string(neg) + " negative alphas");
    if (row.size() >= 3 && nonpos > 1) rep.failures.push_back(name + ": " + std::to_string(nonpos) + " nonpositive alphas with m >= 3");
    if (row.size() == 2) {
      const Rational r = d.ratio(v);
      for (int k = 0; k < 2; ++k) {
        const int lo = row[static_cast<std::size_t>(k)].first, hi = row[static_cast<std::size_t>(1 - k)].first;
        if (d.ratio(lo) < r && !(r < d.ratio(hi)))
          rep.failures.push_back(name + ": ratio not between neighbors " + d.at(lo).name() + " and " + d.at(hi).name());
      }
    }
  }
  return rep;
}

inline ValidationReport validate_ordered_tree(const IntersectionDiagram& d) {
  ValidationReport rep{"ordered-tree", {}};
  const int n = static_cast<int>(d.vertices.size());
  if (n == 0) return rep;
  Rational lo = d.ratio(0);
  for (int v = 1; v < n; ++v) lo = std::min(lo, d.ratio(v));
  std::vector<int> minset;
  for (int v = 0; v < n; ++v)
    if (d.ratio(v) == lo) minset.push_back(v);
  // Connectivity of the minimal part.
  std::set<int> seen{minset.front()};
  std::queue<int> q;
  q.push(minset.front());
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : d.neighbors(v))
      if (d.ratio(w) == lo && seen.insert(w).second) q.push(w);
  }
  if (seen.size() != minset.size()) rep.failures.push_back("vertices of minimal ratio " + lo.str() + " are not connected");
  // Ratios strictly increase along every path leaving it.
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  for (int v : minset) {
    dist[static_cast<std::size_t>(v)] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : d.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      if (!(d.ratio(w) > d.ratio(v)))
        rep.failures.push_back("ratio does not increase from " + d.at(v).name() + " (" + d.ratio(v).str() + ") to " +
                               d.at(w).name() + " (" + d.ratio(w).str() + ")");
      q.push(w);
    }
  }
  for (int v = 0; v < n; ++v)
    if (dist[static_cast<std::size_t>(v)] < 0) rep.failures.push_back(d.at(v).name() + " is not connected to the rest");
  return rep;
}

inline ValidationReport validate_nu_bound(const IntersectionDiagram& d) {
  ValidationReport rep{"nu-bound", {}};
  for (auto& r : d.vertices)
    if (r.kind == DivisorKind::exceptional && r.nu > r.N + 1)
      rep.failures.push_back(r.name() + ": nu = " + std::to_string(r.nu) + " > N + 1 = " + std::to_string(r.N + 1));
  return rep;
}

/// Exceptional part and whole graph are trees without duplicate edges;
/// strict branches hang off exactly one curve.
inline ValidationReport validate_tree_shape(const IntersectionDiagram& d) {
  ValidationReport rep{"tree-shape", {}};
  const int n = static_cast<int>(d.vertices.size());
  std::set<std::pair<int, int>> uniq;
  for (auto [a, b] : d.edges) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) rep.failures.push_back("malformed edge");
    else if (!uniq.insert({std::min(a, b), std::max(a, b)}).second)
      rep.failures.push_back("duplicate edge " + d.at(a).name() + "-" + d.at(b).name());
  }
  if (!rep.pass()) return rep;
  int exc = 0, exc_edges = 0;
  for (int v = 0; v < n; ++v) exc += d.is_exceptional(v) ? 1 : 0;
  for (auto [a, b] : d.edges) exc_edges += (d.is_exceptional(a) && d.is_exceptional(b)) ? 1 : 0;
  if (exc > 0 && exc_edges != exc - 1)
    rep.failures.push_back(std::to_string(exc) + " exceptional curves but " + std::to_string(exc_edges) + " edges among them");
  if (n > 0 && static_cast<int>(d.edges.size()) != n - 1)
    rep.failures.push_back("graph has " + std::to_string(n) + " vertices and " + std::to_string(d.edges.size()) + " edges");
  for (int v = 0; v < n; ++v) {
    if (d.is_exceptional(v)) {
      if (d.origin_case) rep.failures.push_back("exceptional vertex in the origin case");
      if (d.at(v).nu < 2) rep.failures.push_back(d.at(v).name() + ": exceptional with nu < 2");
      continue;
    }
    if (d.at(v).nu != 1) rep.failures.push_back(d.at(v).name() + ": strict branch with nu != 1");
    if (!d.origin_case) {
      const auto nb = d.neighbors(v);
      if (nb.size() != 1 || !d.is_exceptional(nb.front()))
        rep.failures.push_back(d.at(v).name() + ": strict branch must meet exactly one exceptional curve");
    }
  }
  if (d.origin_case && (n < 1 || n > 2)) rep.failures.push_back("origin case needs one or two branches");
  return rep;
}

inline std::vector<ValidationReport> validate_all(const IntersectionDiagram& d) {
  return {validate_tree_shape(d), validate_alpha_bounds(d), validate_alpha_signs(d), validate_ordered_tree(d),
          validate_nu_bound(d)};
}

inline nlohmann::ordered_json diagram_to_json(const IntersectionDiagram& d) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (auto& v : d.vertices) {
    nlohmann::ordered_json o;
    o["id"] = v.name();
    o["kind"] = std::string(kind_str(v.kind));
    o["N"] = v.N;
    o["nu"] = v.nu;
    j["vertices"].push_back(o);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : d.edges) j["edges"].push_back({d.at(a).name(), d.at(b).name()});
  if (d.origin_case) {
    nlohmann::ordered_json oc;
    oc["branches"] = nlohmann::ordered_json::array();
    for (auto& v : d.vertices) oc["branches"].push_back(v.name());
    j["origin_case"] = oc;
  } else {
    j["origin_case"] = nullptr;
  }
  j["minimal"] = d.minimal;
  return j;
}

inline std::string export_json(const IntersectionDiagram& d) { return diagram_to_json(d).dump(2); }

inline std::string export_dot(const IntersectionDiagram& d) {
  std::ostringstream os;
  os << "graph diagram {\n";
  for (auto& v : d.vertices)
    os << "  \"" << v.name() << "\" [label=\"" << v.name() << " (" << v.N << "," << v.nu << ")\", shape="
       << (v.kind == DivisorKind::exceptional ? "ellipse" : "box") << "];\n";
  for (auto [a, b] : d.edges) os << "  \"" << d.at(a).name() << "\" -- \"" << d.at(b).name() << "\";\n";
  os << "}\n";
  return os.str();
}

/// Reads the JSON produced by export_json. Structural checks only; the
/// validators judge the content.
inline IntersectionDiagram import_json(const std::string& text) {
  auto bad = [](const std::string& m) { return Error(ErrorKind::malformed_diagram, m); };
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw bad(std::string("not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) throw bad("missing vertices array");
  IntersectionDiagram d;
  std::set<std::string> names;
  for (auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v.contains("N") || !v.contains("nu") || !v["id"].is_string() ||
        !v["N"].is_number_integer() || !v["nu"].is_number_integer())
      throw bad("vertex needs id, N, nu");
    const std::string id = v["id"];
    DivisorRecord r;
    if (id.size() < 2 || (id[0] != 'E' && id[0] != 'S')) throw bad("vertex id must be E<k> or S<k>: " + id);
    try {
      std::size_t used = 0;
      r.id = std::stoi(id.substr(1), &used);
      if (used != id.size() - 1 || r.id < 1) throw bad("bad vertex id " + id);
    } catch (const std::logic_error&) {
      throw bad("bad vertex id " + id);
    }
    r.kind = id[0] == 'E' ? DivisorKind::exceptional : DivisorKind::strict_branch;
    if (v.contains("kind") && v["kind"] != std::string(kind_str(r.kind))) throw bad("kind disagrees with id " + id);
    r.N = v["N"];
    r.nu = v["nu"];
    if (r.N < 1 || r.nu < 1) throw bad(id + ": N and nu must be positive");
    if (!names.insert(id).second) throw bad("duplicate vertex " + id);
    d.vertices.push_back(r);
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw bad("edges must be an array");
    for (auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) throw bad("edge must be a pair of ids");
      const int a = d.index_of(e[0]), b = d.index_of(e[1]);
      if (a < 0 || b < 0) throw bad("edge names an unknown vertex");
      if (a == b) throw bad("self loop");
      d.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  d.origin_case = j.contains("origin_case") && !j["origin_case"].is_null();
  if (j.contains("minimal")) {
    if (!j["minimal"].is_boolean()) throw bad("minimal must be a boolean");
    d.minimal = j["minimal"];
  }
  d.canonicalize();
  return d;
}

}  // namespace zp
