#include "conemod/driver/algorithm.hpp"
#include "conemod/driver/instances.hpp"
#include "conemod/driver/io.hpp"
#include "conemod/driver/membership.hpp"
#include "doctest.h"
#include "working.hpp"

using namespace conemod;

namespace {

std::vector<std::vector<std::string>> terminal_paths(const ChartTree& tree) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t t : tree.terminals()) out.push_back(edge_sequence(tree, t));
  return out;
}

// I, II, identity I, II, then either a proper or an identity I.
bool reference_shaped(const std::vector<std::string>& p) {
  return p.size() == 5 && p[0] == "I" && p[1] == "II" && p[2] == "I=" && p[3] == "II" && (p[4] == "I" || p[4] == "I=");
}

}  // namespace

TEST_CASE("instance generators") {
  const auto inst = gen_working_example(2, 1, 1);
  CHECK(inst.vars().weights() == std::vector<std::uint64_t>{0, 2, 2, 1, 1, 3});
  CHECK(gen_working_example(2, 1, 2).vars().weights() == std::vector<std::uint64_t>{0, 2, 2, 1, 2, 4});
  CHECK(verify_action(gen_working_example(2, 1, 2)).ok());
  CHECK_THROWS_AS(gen_working_example(1, 1, 1), ParameterError);
  CHECK_THROWS_AS(gen_working_example(2, 0, 1), ParameterError);
  CHECK_THROWS_AS(gen_working_example(2, 1, 0), ParameterError);

  const auto g = gen_grassmann_instance(3, 1, {2});
  CHECK(g.vars().names() == std::vector<std::string>{"a1_1", "a1_3", "f1"});
  CHECK(compute_index(g).d == 2);
  CHECK_THROWS_AS(gen_grassmann_instance(2, 3, {1, 2, 3}), ParameterError);
  CHECK_THROWS_AS(gen_grassmann_instance(2, 1, {3}), ParameterError);
  CHECK_THROWS_AS(gen_grassmann_instance(2, 2, {1, 1}), ParameterError);
}

TEST_CASE("run_algorithm on the working example") {
  SUBCASE("rho = 3, sigma = 2") {
    const ChartTree tree = run_algorithm(gen_working_example(3, 2, 1));
    CHECK(tree.complete);
    CHECK(tree.terminals().size() == 2);
    for (const auto& p : terminal_paths(tree)) CHECK(reference_shaped(p));
    std::vector<std::string> labels;
    for (std::size_t t : tree.terminals()) labels.push_back(tree.nodes[t].chart.label);
    CHECK(labels == std::vector<std::string>{"identity", "a22/a21"});
  }
  SUBCASE("rho = 2 sigma gives a third step-4 chart") {
    const ChartTree tree = run_algorithm(gen_working_example(2, 1, 1));
    CHECK(tree.complete);
    CHECK(tree.terminals().size() == 3);
    for (const auto& p : terminal_paths(tree)) CHECK(reference_shaped(p));
  }
  for (auto [rho, sigma] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{3, 1}}) {
    const ChartTree tree = run_algorithm(gen_working_example(rho, sigma, 1));
    for (const auto& n : tree.nodes) {
      if (!n.mod_type) continue;
      if (*n.mod_type == ModType::I) CHECK(n.index_after <= *n.index_before);
      if (*n.mod_type == ModType::II) CHECK(n.index_after < *n.index_before);
    }
    for (std::size_t t : tree.terminals()) {
      CHECK(check_uu(tree.nodes[t].chart.instance));
      CHECK(tree.nodes[t].quotient.has_value());
    }
    REQUIRE(tree.depth_bound());
    CHECK(tree.depth() <= *tree.depth_bound());
  }
}

TEST_CASE("run_algorithm on degenerate instances") {
  const ChartTree g = run_algorithm(gen_grassmann_instance(3, 2, {1, 3}));
  REQUIRE(g.nodes.size() == 2);
  CHECK(g.nodes[1].chart.identity);
  CHECK(g.nodes[1].terminal);
  CHECK(g.nodes[1].index_after == IndexPair{1, std::nullopt});

  const RingPtr ring = make_ring(VarTable({"a", "x"}, {0, 1}));
  ConeInstance trivial;
  trivial.algebra = GradedAlgebra(ring, {});
  trivial.action.r = 2;
  trivial.action.w = 1;
  trivial.action.images.assign(2, std::vector<Poly>(2, Poly(ring)));
  const ChartTree t = run_algorithm(trivial);
  REQUIRE(t.terminals().size() == 1);
  CHECK(t.nodes[t.terminals()[0]].index_after == IndexPair{2, std::nullopt});

  auto broken = gen_working_example(2, 1, 1);
  broken.action.images[0][5] = broken.algebra.variable(5);
  CHECK_THROWS_AS(run_algorithm(broken), PreconditionViolation);
}

TEST_CASE("step budget truncates the tree") {
  RunConfig cfg;
  cfg.max_steps = 2;
  const ChartTree tree = run_algorithm(gen_working_example(2, 1, 1), cfg);
  CHECK(!tree.complete);
  CHECK(tree.depth() <= 2);
  bool truncated = false;
  for (const auto& n : tree.nodes) truncated = truncated || n.truncated;
  CHECK(truncated);
}

TEST_CASE("algebra membership in charts") {
  const auto s = working::build(3, 2);
  const RingPtr root = s.inst.ring_ptr();
  CHECK(algebra_membership(parse_fraction("f2/a11", root), s.c1) == Membership::Member);
  CHECK(algebra_membership(parse_fraction("f1", root), s.c1) == Membership::Member);
  CHECK(algebra_membership(parse_fraction("a11/f1", root), s.c1) == Membership::NonMember);
  CHECK(algebra_membership(parse_fraction("f2/a11^2", root), s.c1) == Membership::NonMember);
  const auto e = express_in_chart(parse_fraction("f1", root), s.c1);
  CHECK(*e.expression == parse_poly("a11*f1_a11", s.c1.instance.ring_ptr()));
  const std::size_t a = working::index_of_label(s.c4, "a21/e");
  CHECK(algebra_membership(parse_fraction("f2/a22 - f1*a21/(a11*a22)", root), s.c5[a].at(0)) == Membership::Member);
  CHECK(algebra_membership(parse_fraction("1/e", root), s.c0) == Membership::NonMember);

  const auto gens = working::fractions(root, {"a11", "f1/a11"});
  CHECK(generated_membership(parse_fraction("a11^2*f1/a11 + 3", root), gens, s.c1) == Membership::Member);
  CHECK(generated_membership(parse_fraction("e/a11", root), gens, s.c1) == Membership::NonMember);
}

TEST_CASE("instance json round trip") {
  const auto inst = gen_working_example(2, 1, 1);
  const Json doc = instance_to_json(inst);
  CHECK(doc["derivations"][0]["images"]["f1"] == "a11");
  const auto back = instance_from_json(doc);
  CHECK(instance_to_json(back).dump() == doc.dump());

  Json bad = doc;
  bad["derivations"][0]["images"]["zz"] = "a11";
  CHECK_THROWS_AS(instance_from_json(bad), InputError);
  bad = doc;
  bad.erase("variables");
  CHECK_THROWS_AS(instance_from_json(bad), InputError);
  bad = doc;
  bad["relations"] = Json::array({"a11 +"});
  CHECK_THROWS_AS(instance_from_json(bad), ParseError);
  bad = doc;
  bad["r"] = 3;
  CHECK_THROWS_AS(instance_from_json(bad), InputError);
}

TEST_CASE("chart tree json round trip and determinism") {
  for (auto [rho, sigma] : {std::pair{2, 1}, std::pair{3, 2}}) {
    const ChartTree tree = run_algorithm(gen_working_example(rho, sigma, 1));
    const std::string text = tree_to_json(tree).dump(2);
    CHECK(tree_to_json(run_algorithm(gen_working_example(rho, sigma, 1))).dump(2) == text);
    const ChartTree back = tree_from_json(Json::parse(text));
    CHECK(tree_to_json(back).dump(2) == text);
  }
  const ChartTree g = run_algorithm(gen_grassmann_instance(3, 1, {2}));
  const std::string text = tree_to_json(g).dump();
  CHECK(tree_to_json(tree_from_json(Json::parse(text))).dump() == text);
}

TEST_CASE("index and dot output") {
  CHECK(index_to_json(IndexPair{1, 2}).dump() == R"({"d":1,"e":2})");
  CHECK(index_to_json(IndexPair{0, std::nullopt}).dump() == R"({"d":0,"e":"inf"})");
  CHECK(index_from_json(Json::parse(R"({"d":0,"e":"inf"})")) == IndexPair{0, std::nullopt});
  const std::string dot = tree_to_dot(run_algorithm(gen_working_example(3, 2, 1)));
  CHECK(dot.rfind("digraph charts {", 0) == 0);
  CHECK(dot.find("n0 -> n1 [label=\"I\"]") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
}
