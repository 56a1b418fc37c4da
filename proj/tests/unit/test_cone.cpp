#include <random>

#include "conemod/cone/cone.hpp"
#include "conemod/driver/instances.hpp"
#include "conemod/poly/parse.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "working.hpp"

using namespace conemod;

namespace {

Poly P(const ConeInstance& inst, const char* text) { return parse_poly(text, inst.ring_ptr()); }

std::size_t var(const ConeInstance& inst, const char* name) { return *inst.vars().index_of(name); }

}  // namespace

TEST_CASE("derivations on the working example") {
  const auto inst = gen_working_example(2, 1, 1);
  CHECK(apply_derivation(inst, 0, P(inst, "f1")) == P(inst, "a11"));
  CHECK(apply_derivation(inst, 0, P(inst, "f2")) == P(inst, "a21"));
  CHECK(apply_derivation(inst, 1, P(inst, "f2")) == P(inst, "a22"));
  CHECK(apply_derivation(inst, 0, P(inst, "7/3")).is_zero());
  // Leibniz: xi_1(f1*f2) = a11*f2 + a21*f1
  CHECK(apply_derivation(inst, 0, P(inst, "f1*f2")) == P(inst, "a11*f2 + a21*f1"));
  CHECK(apply_combination(inst, {Rational(1), Rational(2)}, P(inst, "f2")) == P(inst, "a21 + 2*a22"));
}

TEST_CASE("verify_action accepts valid instances") {
  for (auto [rho, sigma, w] : {std::tuple{2, 1, 1}, std::tuple{3, 1, 1}, std::tuple{2, 1, 2}, std::tuple{5, 3, 2}}) {
    const auto report = verify_action(gen_working_example(rho, sigma, w));
    CHECK(report.ok());
    CHECK(report.failures().empty());
  }
  CHECK(verify_action(gen_grassmann_instance(3, 2, {1, 3})).ok());
}

TEST_CASE("verify_action names the broken axiom") {
  SUBCASE("weight shift") {
    auto inst = gen_working_example(2, 1, 1);
    inst.action.images[1][var(inst, "f2")] = P(inst, "a22 + f1");
    const auto failures = verify_action(inst).failures();
    CHECK(std::find(failures.begin(), failures.end(), "weight-shift") != failures.end());
  }
  SUBCASE("weight not lowered") {
    auto inst = gen_working_example(2, 1, 1);
    inst.action.images[0][var(inst, "f2")] = P(inst, "f2");
    const auto failures = verify_action(inst).failures();
    CHECK(std::find(failures.begin(), failures.end(), "weight-shift") != failures.end());
    CHECK(std::find(failures.begin(), failures.end(), "local-nilpotence") != failures.end());
  }
  SUBCASE("commutation") {
    // xi_1(f2) = f1 and xi_2(f1) = a11 do not commute on f2.
    const RingPtr ring = make_ring(VarTable({"a11", "f1", "f2"}, {0, 1, 2}));
    ConeInstance inst;
    inst.algebra = GradedAlgebra(ring, {});
    inst.action.r = 2;
    inst.action.w = 1;
    inst.action.images.assign(2, std::vector<Poly>(3, Poly(ring)));
    inst.action.images[0][2] = parse_poly("f1", ring);
    inst.action.images[1][1] = parse_poly("a11", ring);
    CHECK(verify_action(inst).failures() == std::vector<std::string>{"commutation"});
  }
  SUBCASE("relations not preserved") {
    const RingPtr ring = make_ring(VarTable({"a", "f"}, {0, 1}));
    ConeInstance inst;
    inst.algebra = GradedAlgebra(ring, {parse_poly("f^2", ring)});
    inst.action.r = 1;
    inst.action.w = 1;
    inst.action.images = {{Poly(ring), parse_poly("a", ring)}};
    CHECK(verify_action(inst).failures() == std::vector<std::string>{"relations-preserved"});
  }
  SUBCASE("inhomogeneous relation") {
    const RingPtr ring = make_ring(VarTable({"a", "f"}, {0, 1}));
    ConeInstance inst;
    inst.algebra = GradedAlgebra(ring, {parse_poly("f - a", ring)});
    inst.action.r = 1;
    inst.action.w = 1;
    inst.action.images = {{Poly(ring), Poly(ring)}};
    const auto failures = verify_action(inst).failures();
    CHECK(std::find(failures.begin(), failures.end(), "homogeneous-relations") != failures.end());
  }
  SUBCASE("unit relations") {
    const RingPtr ring = make_ring(VarTable({"a"}, {0}));
    ConeInstance inst;
    inst.algebra = GradedAlgebra(ring, {parse_poly("1", ring)});
    inst.action.r = 0;
    inst.action.w = 1;
    const auto failures = verify_action(inst).failures();
    CHECK(std::find(failures.begin(), failures.end(), "nontrivial-algebra") != failures.end());
  }
}

TEST_CASE("weight shift of every derivation image") {
  for (auto [rho, sigma, w] : {std::tuple{2, 1, 1}, std::tuple{4, 1, 3}}) {
    const auto inst = gen_working_example(rho, sigma, w);
    for (std::size_t i = 0; i < inst.r(); ++i)
      for (std::size_t j = 0; j < inst.vars().size(); ++j) {
        const Poly img = apply_derivation(inst, i, inst.algebra.variable(j));
        if (img.is_zero()) continue;
        CHECK(weighted_degree(img).value() + inst.w() == inst.vars().weight(j));
      }
  }
}

TEST_CASE("coaction") {
  const auto inst = gen_working_example(2, 1, 1);
  const RingPtr t = coaction_ring(inst);
  CHECK(t->vars.name(6) == "u1");
  CHECK(t->vars.weight(7) == inst.w());
  CHECK(coaction(inst, P(inst, "f2")) == parse_poly("f2 + a21*u1 + a22*u2", t));
  CHECK(coaction(inst, P(inst, "a11^2 + 3")) == parse_poly("a11^2 + 3", t));
  CHECK(coaction(inst, P(inst, "f1*f2")) == coaction(inst, P(inst, "f1")) * coaction(inst, P(inst, "f2")));
  CHECK(coaction(inst, P(inst, "f1^2")) == parse_poly("f1^2 + 2*a11*f1*u1 + a11^2*u1^2", t));

  // Setting u = 0 recovers p; homomorphism on random homogeneous pairs.
  std::mt19937_64 rng(7);
  std::vector<Poly> zero_u;
  for (std::size_t j = 0; j < t->size(); ++j)
    zero_u.push_back(j < inst.vars().size() ? Poly::variable(inst.ring_ptr(), j) : Poly(inst.ring_ptr()));
  for (int k = 0; k < 20; ++k) {
    const Poly p = working::random_weighted(rng, inst.ring_ptr(), rng() % 5, 3, 3);
    const Poly q = working::random_weighted(rng, inst.ring_ptr(), rng() % 5, 3, 3);
    CHECK(coaction(inst, p * q) == coaction(inst, p) * coaction(inst, q));
    CHECK(substitute(coaction(inst, p), zero_u, inst.ring_ptr()) == p);
  }
}

TEST_CASE("hat projection") {
  const auto inst = gen_working_example(2, 1, 1);
  SliceData slice;
  slice.betas = {{Rational(1), Rational(0)}};
  slice.slices = {P(inst, "f1")};
  // Not a slice (xi_1(f1) = a11), but the formula is still defined.
  CHECK(hat_projection(inst, slice, P(inst, "e")) == P(inst, "e"));
  CHECK(hat_projection(inst, slice, P(inst, "a21^2")) == P(inst, "a21^2"));

  // Chart with a genuine slice: the a22/e chart two modifications down.
  const auto steps = working::build(3, 2, 1);
  const Chart& chart = working::by_label(steps.c4, "a22/e");
  const ConeInstance& c = chart.instance;
  SliceData s;
  s.betas = {{Rational(1), Rational(0)}};
  s.slices = {parse_poly("f1_a11", c.ring_ptr())};
  CHECK(hat_projection(c, s, parse_poly("f1_a11", c.ring_ptr())).is_zero());
  CHECK(hat_projection(c, s, parse_poly("f2_a22", c.ring_ptr())) ==
        parse_poly("f2_a22 - a21_a22*f1_a11", c.ring_ptr()));
  const Fraction embedded =
      substitute(hat_projection(c, s, parse_poly("f2_a22", c.ring_ptr())), chart.embedding, chart.root_ring);
  CHECK(embedded.equals(parse_fraction("f2/a22 - a21*f1/(a11*a22)", chart.root_ring)));

  // Output is killed by the slice directions; idempotent.
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const Poly h = working::random_weighted(rng, c.ring_ptr(), 1 + rng() % 3, 3, 3);
    const Poly hat = hat_projection(c, s, h);
    CHECK(apply_combination(c, s.betas[0], hat).is_zero());
    CHECK(hat_projection(c, s, hat) == hat);
  }
}

TEST_CASE("fraction derivative uses the quotient rule") {
  const auto inst = gen_working_example(2, 1, 1);
  const Fraction q = parse_fraction("f2/a22", inst.ring_ptr());
  CHECK(apply_derivation(inst, 0, q).equals(parse_fraction("a21/a22", inst.ring_ptr())));
  CHECK(apply_derivation(inst, 1, q).equals(parse_fraction("1", inst.ring_ptr())));
}
