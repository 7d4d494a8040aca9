#include <doctest.h>

#include "dlgreen/gamma.hpp"
#include "dlgreen/runner.hpp"
#include "test_support.hpp"

using namespace dlgreen;
using dlgreen::testing::gl2;
using dlgreen::testing::torus;
using Kind = TorusData::Kind;

TEST_CASE("gamma basics") {
  const GroupTable& g = gl2(3, 2);
  ClassFunction one = ClassFunction::constant(g, CycloNum(1));
  CHECK(gamma(one, one) == CycloNum(1));

  Subgroup units = diag_units_subgroup(g);
  AbelianStructure ust(units);
  auto chis = characters_enumerate(ust);

  SUBCASE("abelianized character orthogonality through det") {
    for (std::size_t i = 0; i < chis.size(); ++i)
      for (std::size_t j = 0; j < chis.size(); ++j) {
        ClassFunction a = det_twist(g, chis[i]);
        ClassFunction b = det_twist(g, chis[j]).conjugated();
        CHECK(gamma(a, b) == (i == j ? CycloNum(1) : CycloNum::zero()));
      }
  }

  SUBCASE("bilinearity") {
    ClassFunction f = det_twist(g, chis[1]);
    ClassFunction p1 = det_twist(g, chis[2]);
    ClassFunction p2 = det_twist(g, chis[3]);
    CHECK(gamma(f, p1 + p2) == gamma(f, p1) + gamma(f, p2));
    CHECK(gamma(f + p1, p2) == gamma(f, p2) + gamma(p1, p2));
  }

  SUBCASE("group mismatch is rejected") {
    ClassFunction other = ClassFunction::constant(gl2(2, 2), CycloNum(1));
    CHECK_THROWS_AS(gamma(one, other), std::invalid_argument);
  }
}

TEST_CASE("p-constant torus characters") {
  const TorusData& t = torus(2, 2, Kind::nonsplit);
  auto thetas = characters_enumerate(t.structure);
  int count = 0;
  for (const auto& th : thetas)
    if (theta_is_p_constant(t, th)) ++count;
  CHECK(count == t.level_one.order());  // characters of T/T^1

  const TorusData& ts = torus(2, 2, Kind::split);
  auto thetas_s = characters_enumerate(ts.structure);
  int count_s = 0;
  for (const auto& th : thetas_s)
    if (theta_is_p_constant(ts, th)) ++count_s;
  CHECK(count_s == 1);  // T_1 is trivial at q = 2
}

TEST_CASE("gamma identity") {
  ExperimentConfig cfg;
  cfg.q = 2;
  cfg.r = 2;
  Experiment e(cfg);
  const GroupTable& g = e.group();
  auto samples = e.p_constant_samples();
  REQUIRE(samples.size() >= 5);
  for (const auto& [name, psi] : samples) CHECK(is_p_constant(psi));

  for (Kind kind : {Kind::split, Kind::nonsplit}) {
    const auto& b = e.bundle(kind);
    SUBCASE("holds for p-constant theta") {
      for (std::size_t i = 0; i < b.thetas.size(); ++i) {
        if (!theta_is_p_constant(*b.torus, b.thetas[i])) continue;
        for (const auto& [name, psi] : samples) {
          auto res = gamma_identity_check(g, *b.torus, b.thetas[i], b.chars[i], psi);
          CHECK(res.pass);
        }
      }
    }
    SUBCASE("fails for some non-p-constant theta: the negative control") {
      bool found_control = false;
      for (std::size_t i = 0; i < b.thetas.size() && !found_control; ++i) {
        if (theta_is_p_constant(*b.torus, b.thetas[i])) continue;
        for (const auto& [name, psi] : samples) {
          auto res = gamma_identity_values(g, *b.torus, b.thetas[i], b.chars[i], psi);
          if (!res.pass) {
            found_control = true;
            break;
          }
        }
      }
      CHECK(found_control);
    }
    SUBCASE("hypotheses are enforced") {
      int bad = -1;
      for (std::size_t i = 0; i < b.thetas.size(); ++i)
        if (!theta_is_p_constant(*b.torus, b.thetas[i])) {
          bad = static_cast<int>(i);
          break;
        }
      REQUIRE(bad >= 0);
      CHECK_THROWS_AS(
          gamma_identity_check(g, *b.torus, b.thetas[bad], b.chars[bad], samples[0].second),
          std::invalid_argument);

      ClassFunction not_pconst(g);
      not_pconst.values[g.class_of(g.identity())] = CycloNum(1);
      REQUIRE_FALSE(is_p_constant(not_pconst));
      CHECK_THROWS_AS(
          gamma_identity_check(g, *b.torus, b.thetas[0], b.chars[0], not_pconst),
          std::invalid_argument);
    }
  }
}

TEST_CASE("gamma identity is conjugation invariant data") {
  // gamma over class functions only sees class data; transporting both
  // arguments by any inner automorphism is the identity on class functions
  const GroupTable& g = gl2(2, 2);
  Subgroup units = diag_units_subgroup(g);
  AbelianStructure ust(units);
  auto chis = characters_enumerate(ust);
  ClassFunction f = det_twist(g, chis[1]);
  ClassFunction h = det_twist(g, chis[0]);
  CHECK(gamma(f, h) == gamma(f, h));
  CHECK(gamma(f, h) == gamma(h, f));  // symmetric, no conjugation
}
