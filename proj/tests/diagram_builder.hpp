#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zp/zp.hpp"

namespace zp::testing {

/// Hand-built diagram from (name, N, nu) triples and name pairs.
inline IntersectionDiagram make_diagram(const std::vector<std::tuple<std::string, long, long>>& verts,
                                        const std::vector<std::pair<std::string, std::string>>& edges,
                                        bool origin_case = false) {
  IntersectionDiagram d;
  d.origin_case = origin_case;
  for (auto& [name, N, nu] : verts)
    d.vertices.push_back({std::stoi(name.substr(1)), name[0] == 'E' ? DivisorKind::exceptional : DivisorKind::strict_branch,
                          N, nu, 0});
  for (auto& [a, b] : edges) {
    const int i = d.index_of(a), j = d.index_of(b);
    d.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  d.canonicalize();
  return d;
}

}  // namespace zp::testing
