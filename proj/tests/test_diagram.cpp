#include <gtest/gtest.h>

#include "corpus.hpp"
#include "diagram_builder.hpp"

using namespace zp;
using zp::testing::make_diagram;
using zp::testing::parse_all;

namespace {

IntersectionDiagram golden() { return principalize(parse_all({"x^4*y", "x^7 + x*y^4"})).diagram; }

Rational alpha_toward(const IntersectionDiagram& d, const std::string& from, const std::string& to) {
  for (auto& [w, a] : alphas(d, d.index_of(from)))
    if (d.at(w).name() == to) return a;
  ADD_FAILURE() << from << " is not adjacent to " << to;
  return Rational(0);
}

}  // namespace

TEST(Diagram, GoldenShape) {
  auto d = golden();
  ASSERT_EQ(d.vertices.size(), 4u);
  EXPECT_EQ(d.at(0).name(), "E1");
  EXPECT_EQ(d.at(0).N, 5);
  EXPECT_EQ(d.at(0).nu, 2);
  EXPECT_EQ(d.at(1).N, 6);
  EXPECT_EQ(d.at(2).N, 7);
  EXPECT_EQ(d.at(2).nu, 4);
  EXPECT_EQ(d.at(3).name(), "S1");
  const std::vector<std::pair<int, int>> edges{{0, 1}, {0, 3}, {1, 2}};
  EXPECT_EQ(d.edges, edges);
}

TEST(Alphas, GoldenValues) {
  auto d = golden();
  EXPECT_EQ(alpha_toward(d, "E2", "E1"), Rational(-1, 2));
  EXPECT_EQ(alpha_toward(d, "E2", "E3"), Rational(1, 2));
  EXPECT_EQ(alpha_toward(d, "E3", "E2"), Rational(-3, 7));
  EXPECT_EQ(alpha_toward(d, "E1", "S1"), Rational(3, 5));
  try {
    alphas(d, d.index_of("S1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_exceptional);
  }
}

TEST(Validators, CorpusPasses) {
  for (auto& p : zp::testing::principalize_corpus(zp::testing::full_corpus()))
    for (auto& rep : validate_all(p.result.diagram))
      EXPECT_TRUE(rep.pass()) << describe(p.entry) << " " << rep.name << ": " << (rep.pass() ? "" : rep.failures[0]);
}

TEST(Validators, AlphaBoundNegativeControl) {
  auto d = make_diagram({{"E1", 2, 5}, {"S1", 1, 1}}, {{"E1", "S1"}});
  EXPECT_FALSE(validate_alpha_bounds(d).pass());
}

TEST(Validators, OrderedTreeNegativeControl) {
  auto d = make_diagram({{"E1", 4, 2}, {"E2", 6, 2}, {"E3", 4, 2}, {"E4", 6, 2}},
                        {{"E1", "E2"}, {"E2", "E3"}, {"E3", "E4"}});
  EXPECT_FALSE(validate_ordered_tree(d).pass());
  EXPECT_TRUE(validate_tree_shape(d).pass());
}

TEST(Validators, NuBoundNegativeControl) {
  auto d = make_diagram({{"E1", 2, 4}}, {});
  auto rep = validate_nu_bound(d);
  ASSERT_EQ(rep.failures.size(), 1u);
  EXPECT_EQ(rep.failures[0], "E1: nu = 4 > N + 1 = 3");
}

TEST(Validators, AlphaSignsNegativeControl) {
  // E2 has ratio 2/5 with a lower neighbor on each side.
  auto d = make_diagram({{"E1", 10, 2}, {"E2", 5, 2}, {"E3", 10, 3}}, {{"E1", "E2"}, {"E2", "E3"}});
  auto rep = validate_alpha_signs(d);
  EXPECT_FALSE(rep.pass());
  EXPECT_TRUE(std::any_of(rep.failures.begin(), rep.failures.end(),
                          [](const std::string& f) { return f.find("ratio not between") != std::string::npos; }));
}

TEST(Validators, TreeShapeNegativeControl) {
  auto cycle = make_diagram({{"E1", 2, 2}, {"E2", 3, 3}, {"E3", 4, 4}}, {{"E1", "E2"}, {"E2", "E3"}, {"E1", "E3"}});
  EXPECT_FALSE(validate_tree_shape(cycle).pass());
  auto loose = make_diagram({{"E1", 2, 2}, {"S1", 1, 1}}, {});
  EXPECT_FALSE(validate_tree_shape(loose).pass());
}

TEST(Export, Dot) {
  const std::string dot = export_dot(golden());
  EXPECT_EQ(dot.rfind("graph diagram {", 0), 0u);
  EXPECT_NE(dot.find("\"E1\" [label=\"E1 (5,2)\", shape=ellipse];"), std::string::npos);
  EXPECT_NE(dot.find("\"S1\" [label=\"S1 (1,1)\", shape=box];"), std::string::npos);
  EXPECT_NE(dot.find("\"E1\" -- \"E2\";"), std::string::npos);
}

TEST(Export, JsonRoundTrip) {
  for (auto& p : zp::testing::principalize_corpus(zp::testing::full_corpus())) {
    const std::string text = export_json(p.result.diagram);
    EXPECT_EQ(export_json(import_json(text)), text) << describe(p.entry);
  }
}

TEST(Export, OriginCaseJson) {
  auto d = principalize(parse_all({"x^2*y^3"})).diagram;
  auto j = diagram_to_json(d);
  EXPECT_FALSE(j["origin_case"].is_null());
  EXPECT_EQ(j["origin_case"]["branches"].size(), 2u);
  EXPECT_EQ(export_json(import_json(export_json(d))), export_json(d));
}

TEST(Import, Malformed) {
  const std::vector<std::string> inputs = {
      "not json",
      "{}",
      R"({"vertices": [{"id": "X1", "N": 1, "nu": 2}]})",
      R"({"vertices": [{"id": "E1", "N": 0, "nu": 2}]})",
      R"({"vertices": [{"id": "E1", "N": 1, "nu": 2}, {"id": "E1", "N": 1, "nu": 2}]})",
      R"({"vertices": [{"id": "E1", "N": 1, "nu": 2}], "edges": [["E1", "E2"]]})",
      R"({"vertices": [{"id": "E1", "kind": "strict", "N": 1, "nu": 2}]})",
      R"({"vertices": [{"id": "E1", "N": 1, "nu": 2}], "minimal": "yes"})",
  };
  for (auto& s : inputs) {
    try {
      import_json(s);
      ADD_FAILURE() << "accepted " << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::malformed_diagram) << s;
    }
  }
}
