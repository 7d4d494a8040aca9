#include <doctest.h>

#include "dlgreen/classfun.hpp"
#include "test_support.hpp"

using namespace dlgreen;
using dlgreen::testing::gl2;
using dlgreen::testing::torus;
using Kind = TorusData::Kind;

namespace {

ClassFunction regular_character(const GroupTable& g) {
  ClassFunction f(g);
  f.values[g.class_of(g.identity())] = CycloNum(g.order());
  return f;
}

}  // namespace

TEST_CASE("inner products") {
  const GroupTable& g = gl2(2, 2);
  ClassFunction one = ClassFunction::constant(g, CycloNum(1));
  CHECK(inner_product(one, one) == CycloNum(1));
  CHECK(inner_product(regular_character(g), one) == CycloNum(1));

  SUBCASE("torus character orthogonality through SubgroupFn") {
    const TorusData& t = torus(2, 2, Kind::nonsplit);
    auto thetas = characters_enumerate(t.structure);
    for (std::size_t i : {std::size_t{0}, std::size_t{5}})
      for (std::size_t j = 0; j < thetas.size(); ++j) {
        SubgroupFn fi(t.torus.elems.size()), fj(t.torus.elems.size());
        for (std::size_t x = 0; x < t.torus.elems.size(); ++x) {
          fi[x] = thetas[i].eval(t.torus.elems[x]);
          fj[x] = thetas[j].eval(t.torus.elems[x]);
        }
        CHECK(inner_product_on(t.torus, fi, fj) == (i == j ? CycloNum(1) : CycloNum::zero()));
      }
  }

  SUBCASE("group mismatch is rejected") {
    ClassFunction other = ClassFunction::constant(gl2(3, 2), CycloNum(1));
    CHECK_THROWS_AS(inner_product(one, other), std::invalid_argument);
  }
}

TEST_CASE("frobenius induction") {
  const GroupTable& g = gl2(2, 2);
  const TorusData& t = torus(2, 2, Kind::split);

  // H = T^F (G^1)^F of order 16; the permutation character has degree 6
  std::vector<int> gens = g.congruence_kernel(1).elems;
  for (const auto& f : t.structure.factors) gens.push_back(f.gen);
  Subgroup h = g.generate(gens);
  CHECK(h.order() == 16);
  ClassFunction perm = induce(h, [](int) { return CycloNum(1); });
  CHECK(perm.degree() == CycloNum(6));

  SUBCASE("induced functions are constant on classes by construction") {
    // recompute the raw Frobenius sum at two members of one class
    auto transversal = g.left_transversal(h);
    auto raw = [&](int elem) {
      CycloNum acc;
      for (int x : transversal) {
        int y = g.conj(elem, x);
        if (h.contains(y)) acc += CycloNum(1);
      }
      return acc;
    };
    for (int c = 0; c < g.num_classes(); ++c) {
      int rep = g.class_reps()[c];
      for (long other = 0; other < g.order(); ++other)
        if (g.class_of(static_cast<int>(other)) == c && static_cast<int>(other) != rep) {
          CHECK(raw(rep) == raw(static_cast<int>(other)));
          break;
        }
    }
  }

  SUBCASE("frobenius reciprocity, exact") {
    const TorusData& tn = torus(2, 2, Kind::nonsplit);
    auto thetas = characters_enumerate(tn.structure);
    ClassFunction reg = regular_character(g);
    ClassFunction one = ClassFunction::constant(g, CycloNum(1));
    for (std::size_t i : {std::size_t{0}, std::size_t{3}, std::size_t{7}}) {
      auto theta_fn = [&](int x) { return thetas[i].eval(x); };
      ClassFunction ind = induce(tn.torus, theta_fn);
      for (const ClassFunction* rhs : {&reg, &one}) {
        SubgroupFn res = restrict_to(*rhs, tn.torus);
        SubgroupFn th(tn.torus.elems.size());
        for (std::size_t x = 0; x < th.size(); ++x) th[x] = thetas[i].eval(tn.torus.elems[x]);
        CHECK(inner_product(ind, *rhs) == inner_product_on(tn.torus, th, res));
      }
    }
  }

  SUBCASE("induction in stages agrees") {
    auto thetas = characters_enumerate(t.structure);
    const AbelianChar& theta = thetas[1];
    auto theta_fn = [&](int x) { return theta.eval(x); };
    ClassFunction direct = induce(t.torus, theta_fn);
    SubgroupFn stage = induce_to(t.torus, h, theta_fn);
    auto stage_fn = [&](int x) {
      int pos = h.position(x);
      REQUIRE(pos >= 0);
      return stage[pos];
    };
    ClassFunction two_step = induce(h, stage_fn);
    CHECK(direct == two_step);
  }
}

TEST_CASE("restriction") {
  const GroupTable& g = gl2(2, 2);
  const TorusData& t = torus(2, 2, Kind::nonsplit);
  ClassFunction one = ClassFunction::constant(g, CycloNum(1));
  SubgroupFn res = restrict_to(one, t.torus);
  for (const auto& v : res) CHECK(v == CycloNum(1));

  SUBCASE("restrict after induce is not the identity") {
    auto thetas = characters_enumerate(t.structure);
    const AbelianChar& theta = thetas[1];
    ClassFunction ind = induce(t.torus, [&](int x) { return theta.eval(x); });
    SubgroupFn back = restrict_to(ind, t.torus);
    bool differs = false;
    for (std::size_t i = 0; i < back.size(); ++i)
      if (back[i] != theta.eval(t.torus.elems[i])) differs = true;
    CHECK(differs);
  }

  SUBCASE("det twist restricted to the split torus is chi(a) chi(d)") {
    const GroupTable& g3 = gl2(3, 2);
    const TorusData& ts = torus(3, 2, Kind::split);
    Subgroup units = diag_units_subgroup(g3);
    AbelianStructure ust(units);
    auto chis = characters_enumerate(ust);
    for (std::size_t i : {std::size_t{1}, chis.size() - 1}) {
      ClassFunction f = det_twist(g3, chis[i]);
      for (int x : ts.torus.elems) {
        const Mat2& m = g3.element(x);
        int da = g3.index_of(Mat2{&g3.ring, {m.e[0], 0, 0, g3.ring.one()}});
        int dd = g3.index_of(Mat2{&g3.ring, {m.e[3], 0, 0, g3.ring.one()}});
        CHECK(f.at_elem(x) == chis[i].eval(da) * chis[i].eval(dd));
      }
    }
  }
}

TEST_CASE("p-constant machinery") {
  const GroupTable& g = gl2(3, 2);
  CHECK(is_p_constant(ClassFunction::constant(g, CycloNum(5))));
  CHECK_FALSE(is_p_constant(regular_character(g)));

  Subgroup units = diag_units_subgroup(g);
  AbelianStructure ust(units);
  auto chis = characters_enumerate(ust);
  SUBCASE("det twists by prime-to-p characters are p-constant") {
    for (const auto& chi : chis) {
      ClassFunction f = det_twist(g, chi);
      CHECK(is_p_constant(f) == (chi.order() % g.p != 0));
    }
  }

  SUBCASE("extension examples") {
    std::map<int, CycloNum> vals;
    for (int c = 0; c < g.num_classes(); ++c)
      if (g.is_semisimple(g.class_reps()[c])) vals.emplace(c, CycloNum(1));
    ClassFunction allone = p_constant_extend(g, vals);
    CHECK(allone == ClassFunction::constant(g, CycloNum(1)));

    for (auto& [c, v] : vals) v = (c == g.class_of(g.identity())) ? CycloNum(1) : CycloNum::zero();
    ClassFunction indicator = p_constant_extend(g, vals);
    for (int c = 0; c < g.num_classes(); ++c)
      CHECK(indicator.values[c] ==
            (g.is_unipotent(g.class_reps()[c]) ? CycloNum(1) : CycloNum::zero()));
    CHECK(indicator.pointwise_mul(indicator) == indicator);

    SUBCASE("idempotence on p-constant inputs") {
      const AbelianChar* chi2 = nullptr;
      for (const auto& chi : chis)
        if (chi.order() == 2) chi2 = &chi;
      REQUIRE(chi2 != nullptr);
      ClassFunction f = det_twist(g, *chi2);
      REQUIRE(is_p_constant(f));
      std::map<int, CycloNum> ss_values;
      for (int c = 0; c < g.num_classes(); ++c)
        if (g.is_semisimple(g.class_reps()[c])) ss_values.emplace(c, f.values[c]);
      CHECK(p_constant_extend(g, ss_values) == f);
    }
  }

  SUBCASE("missing semisimple class is an error") {
    std::map<int, CycloNum> vals;
    vals.emplace(g.class_of(g.identity()), CycloNum(1));
    if (g.num_classes() > 1) CHECK_THROWS_AS(p_constant_extend(g, vals), std::invalid_argument);
  }

  SUBCASE("p-constant functions close under sum and product") {
    const AbelianChar* chi2 = nullptr;
    for (const auto& chi : chis)
      if (chi.order() == 2) chi2 = &chi;
    REQUIRE(chi2 != nullptr);
    ClassFunction f = det_twist(g, *chi2);
    std::map<int, CycloNum> vals;
    int i = 0;
    for (int c = 0; c < g.num_classes(); ++c)
      if (g.is_semisimple(g.class_reps()[c])) vals.emplace(c, CycloNum(++i));
    ClassFunction h = p_constant_extend(g, vals);
    CHECK(is_p_constant(f + h));
    CHECK(is_p_constant(f.pointwise_mul(h)));
  }
}

TEST_CASE("pointwise products") {
  const GroupTable& g = gl2(3, 2);
  Subgroup units = diag_units_subgroup(g);
  AbelianStructure ust(units);
  auto chis = characters_enumerate(ust);
  ClassFunction one = ClassFunction::constant(g, CycloNum(1));
  ClassFunction f = det_twist(g, chis[1]);
  CHECK(f.pointwise_mul(one) == f);

  SUBCASE("(chi det)(chi' det) = (chi chi') det") {
    for (std::size_t i = 0; i < chis.size(); ++i)
      for (std::size_t j = 0; j < chis.size(); ++j) {
        std::vector<int> sum_exps(ust.factors.size());
        for (std::size_t k = 0; k < sum_exps.size(); ++k)
          sum_exps[k] = chis[i].exps[k] + chis[j].exps[k];
        AbelianChar prod(ust, sum_exps);
        CHECK(det_twist(g, chis[i]).pointwise_mul(det_twist(g, chis[j])) ==
              det_twist(g, prod));
      }
  }
}
