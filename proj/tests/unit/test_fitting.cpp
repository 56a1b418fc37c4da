#include <random>

#include "conemod/driver/instances.hpp"
#include "conemod/fitting/fitting.hpp"
#include "conemod/poly/parse.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "working.hpp"

using namespace conemod;

namespace {

std::vector<Poly> polys(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(parse_poly(t, ring));
  return out;
}

bool same(const ConeInstance& inst, const std::vector<Poly>& a, std::initializer_list<const char*> b) {
  return working::same_ideal_in(inst, a, polys(inst.ring_ptr(), b));
}

ConeInstance trivial_action(std::size_t r) {
  const RingPtr ring = make_ring(VarTable({"a", "x", "y"}, {0, 1, 2}));
  ConeInstance inst;
  inst.algebra = GradedAlgebra(ring, {});
  inst.action.r = r;
  inst.action.w = 1;
  inst.action.images.assign(r, std::vector<Poly>(3, Poly(ring)));
  return inst;
}

}  // namespace

TEST_CASE("index pair ordering and printing") {
  CHECK(IndexPair{1, 2} < IndexPair{1, 3});
  CHECK(IndexPair{1, 9} < IndexPair{1, std::nullopt});
  CHECK(IndexPair{0, std::nullopt} < IndexPair{1, 1});
  CHECK(to_string(IndexPair{0, std::nullopt}) == "(0,inf)");
  CHECK(to_string(IndexPair{1, 2}) == "(1,2)");
}

TEST_CASE("presentation matrix") {
  const auto inst = gen_working_example(2, 1, 1);
  const auto m = presentation_matrix(inst);
  const auto& vars = inst.vars();
  REQUIRE(m.row_variables.size() == 5);  // a21, a22, e, f1, f2
  for (std::size_t k = 0; k < m.row_variables.size(); ++k) {
    const std::string name = vars.name(m.row_variables[k]);
    const Poly& c0 = m.matrix.at(k, 0);
    const Poly& c1 = m.matrix.at(k, 1);
    if (name == "f1") {
      CHECK(c0 == parse_poly("a11", inst.ring_ptr()));
      CHECK(c1.is_zero());
    } else if (name == "f2") {
      CHECK(c0 == parse_poly("a21", inst.ring_ptr()));
      CHECK(c1 == parse_poly("a22", inst.ring_ptr()));
    } else {
      CHECK(c0.is_zero());
      CHECK(c1.is_zero());
    }
  }
  const auto zero = presentation_matrix(trivial_action(2));
  for (std::size_t k = 0; k < zero.matrix.rows(); ++k)
    for (std::size_t i = 0; i < 2; ++i) CHECK(zero.matrix.at(k, i).is_zero());
}

TEST_CASE("fitting ideals along the working example") {
  const auto s = working::build(2, 1, 1);
  const auto& c0 = s.c0.instance;
  const auto m0 = presentation_matrix(c0);
  CHECK(fitting_generators(c0, m0, -1).empty());
  CHECK(same(c0, fitting_generators(c0, m0, 0), {"a11*a22"}));
  CHECK(same(c0, fitting_generators(c0, m0, 1), {"a11", "a21", "a22"}));
  CHECK(same(c0, fitting_generators(c0, m0, 2), {"1"}));
  CHECK(fitting_ideal(c0, 2).is_unit());

  const auto& c1 = s.c1.instance;
  CHECK(same(c1, fitting_generators(c1, presentation_matrix(c1), 0), {"a22_a11"}));
  CHECK(fitting_ideal(c1, 1).is_unit());
  const auto& c2 = s.c2.instance;
  CHECK(same(c2, fitting_generators(c2, presentation_matrix(c2), 0), {"a22_e"}));
}

TEST_CASE("index along the working example") {
  const auto s = working::build(2, 1, 1);
  CHECK(compute_index(s.c0.instance) == IndexPair{1, 2});
  CHECK(compute_index(s.c1.instance) == IndexPair{1, 2});
  CHECK(compute_index(s.c2.instance) == IndexPair{1, 1});
  CHECK(compute_index(s.c3.instance) == IndexPair{1, 1});
  for (const auto& c : s.c4) CHECK(compute_index(c.instance) == IndexPair{0, std::nullopt});
  CHECK(compute_index(gen_working_example(3, 1, 1)) == IndexPair{1, 3});
  CHECK(compute_index(gen_working_example(2, 1, 2)) == IndexPair{1, 2});
  CHECK(compute_index(trivial_action(2)) == IndexPair{2, std::nullopt});
  CHECK(compute_index(trivial_action(0)) == IndexPair{0, std::nullopt});
}

TEST_CASE("fitting report invariants") {
  const auto s = working::build(3, 2, 1);
  std::vector<const Chart*> charts{&s.c0, &s.c1, &s.c2, &s.c3};
  for (const auto& c : s.c4) charts.push_back(&c);
  for (const auto* chart : charts) {
    const auto& inst = chart->instance;
    const auto report = fitting_report(inst);
    CHECK(report.fit.at(-1).empty());
    CHECK(report.fit.at(static_cast<long>(inst.r())) == std::vector<Poly>{Poly::constant(inst.ring_ptr(), 1)});
    for (long d = -1; d < static_cast<long>(inst.r()); ++d) {
      const Ideal lower = inst.algebra.relations().plus(report.fit.at(d));
      const Ideal upper = inst.algebra.relations().plus(report.fit.at(d + 1));
      CHECK(upper.contains(lower));
      for (const auto& g : report.fit.at(d)) CHECK(is_homogeneous(g));
    }
  }
}

TEST_CASE("pointwise stabiliser dimension") {
  const auto inst = gen_working_example(2, 1, 1);
  auto point = [](std::initializer_list<int> v) {
    std::vector<Rational> out;
    for (int x : v) out.emplace_back(x);
    return out;
  };
  CHECK(stab_dim_at_point(inst, point({1, 0, 1, 0, 0, 0})) == 0);
  CHECK(stab_dim_at_point(inst, point({0, 0, 0, 0, 0, 0})) == 2);
  CHECK(stab_dim_at_point(inst, point({1, 0, 0, 0, 0, 0})) == 1);

  const RingPtr ring = make_ring(VarTable({"a", "f"}, {0, 1}));
  ConeInstance rel;
  rel.algebra = GradedAlgebra(ring, {parse_poly("a*f", ring)});
  rel.action.r = 1;
  rel.action.w = 1;
  rel.action.images = {{Poly(ring), Poly(ring)}};
  CHECK_THROWS_AS(stab_dim_at_point(rel, point({1, 1})), PointNotOnVariety);
}

TEST_CASE("stabiliser dimension agrees with the fitting ideals") {
  std::mt19937_64 rng(3);
  const auto s = working::build(2, 1, 1);
  for (const Chart* chart : {&s.c0, &s.c1, &s.c2}) {
    const auto& inst = chart->instance;
    const auto report = fitting_report(inst);
    for (int k = 0; k < 40; ++k) {
      // Free charts: any point lies on the variety. Coordinates are often zero.
      std::vector<Rational> x;
      for (std::size_t j = 0; j < inst.vars().size(); ++j)
        x.push_back(rng() % 2 ? Rational(0) : oracle::random_rational(rng, 2));
      const std::size_t dim = stab_dim_at_point(inst, x);
      for (long d = -1; d <= static_cast<long>(inst.r()); ++d) {
        bool vanishes = true;
        for (const auto& g : report.fit.at(d)) vanishes = vanishes && evaluate(g, x) == 0;
        CHECK((static_cast<long>(dim) > d) == vanishes);
      }
    }
  }
}

TEST_CASE("grassmann model has constant stabiliser dimension") {
  for (auto [r, b, subset] : std::vector<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>>{
           {2, 1, {1}}, {2, 1, {2}}, {2, 2, {1, 2}}, {3, 1, {2}}, {3, 2, {1, 3}}, {3, 2, {3, 1}}}) {
    const auto inst = gen_grassmann_instance(r, b, subset);
    const auto report = fitting_report(inst);
    const long d = static_cast<long>(r - b);
    CHECK(report.index.d == r - b);
    CHECK(report.fit.at(d - 1).empty());
    CHECK(inst.algebra.relations().plus(report.fit.at(d)).is_unit());
  }
  const auto inst = gen_grassmann_instance(2, 1, {1});
  const auto m = presentation_matrix(inst);
  REQUIRE(m.matrix.rows() == 1);
  CHECK(m.matrix.at(0, 0) == Poly::constant(inst.ring_ptr(), 1));
  CHECK(m.matrix.at(0, 1) == parse_poly("a1_2", inst.ring_ptr()));
}

TEST_CASE("rational rank") {
  std::vector<std::vector<Rational>> m{{1, 2}, {2, 4}};
  CHECK(rational_rank(m) == 1);
  CHECK(rational_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(rational_rank({{1, 0, 0}, {0, 0, 1}}) == 2);
}
