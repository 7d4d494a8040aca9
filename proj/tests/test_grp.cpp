#include <doctest.h>

#include <numeric>

#include "test_support.hpp"

using namespace dlgreen;
using dlgreen::testing::gl2;
using dlgreen::testing::ring;

TEST_CASE("enumerated group orders") {
  CHECK(gl2(2, 1).order() == 6);
  CHECK(gl2(2, 2).order() == 96);
  CHECK(gl2(3, 2).order() == 3888);
  CHECK(gl2(2, 1).order() == gl2_order_formula(2, 1));
  CHECK(gl2(2, 2).order() == gl2_order_formula(2, 2));
  CHECK(gl2(3, 2).order() == gl2_order_formula(3, 2));

  SUBCASE("class sizes partition the group and divide its order") {
    for (const GroupTable* g : {&gl2(2, 2), &gl2(3, 2)}) {
      long total = std::accumulate(g->class_sizes().begin(), g->class_sizes().end(), 0L);
      CHECK(total == g->order());
      for (long sz : g->class_sizes()) CHECK(g->order() % sz == 0);
    }
  }

  SUBCASE("level zero gives the trivial group") {
    GroupTable g(ring(2, 1, 0));
    CHECK(g.order() == 1);
  }

  SUBCASE("budget errors") {
    CHECK_THROWS_AS(GroupTable(ring(2, 1, 2), 10), std::invalid_argument);
  }
}

TEST_CASE("congruence kernels") {
  const GroupTable& g = gl2(2, 2);
  CHECK(g.congruence_kernel(2).order() == 1);
  CHECK(g.congruence_kernel(0).order() == g.order());
  Subgroup k1 = g.congruence_kernel(1);
  CHECK(k1.order() == 16);  // q^{4(r-i)}
  CHECK(k1.is_abelian());

  SUBCASE("normality") {
    for (int x : k1.elems)
      for (int h = 0; h < 20; ++h) CHECK(k1.contains(g.conj(x, h)));
  }
  SUBCASE("kernel orders q^{4(r-i)}") {
    const GroupTable& g3 = gl2(3, 2);
    CHECK(g3.congruence_kernel(1).order() == 81);
  }
}

TEST_CASE("jordan decomposition") {
  const GroupTable& g3 = gl2(3, 1);
  const TruncRing& R = g3.ring;
  // [[-1, 1], [0, -1]] has order 6; parts are -I and [[1, -1], [0, 1]]
  int idx = g3.index_of(Mat2{&R, {2, 1, 0, 2}});
  CHECK(g3.element_order(idx) == 6);
  auto [s, u] = g3.jordan(idx);
  CHECK(s == g3.index_of(Mat2{&R, {2, 0, 0, 2}}));
  CHECK(u == g3.index_of(Mat2{&R, {1, 2, 0, 1}}));
  CHECK(g3.mul(s, u) == idx);

  SUBCASE("unipotent and semisimple inputs") {
    for (long i = 0; i < g3.order(); ++i) {
      auto [si, ui] = g3.jordan(static_cast<int>(i));
      if (g3.is_unipotent(static_cast<int>(i))) {
        CHECK(si == g3.identity());
        CHECK(ui == static_cast<int>(i));
      }
      if (g3.is_semisimple(static_cast<int>(i))) {
        CHECK(si == static_cast<int>(i));
        CHECK(ui == g3.identity());
      }
    }
  }

  SUBCASE("parts commute and multiply back, exhaustively") {
    for (const GroupTable* g : {&gl2(2, 2), &gl2(3, 2)}) {
      int p = g->p;
      for (long i = 0; i < g->order(); ++i) {
        auto [s, u] = g->jordan(static_cast<int>(i));
        CHECK(g->mul(s, u) == static_cast<int>(i));
        CHECK(g->mul(u, s) == static_cast<int>(i));
        CHECK(g->element_order(s) % p != 0);
        long uo = g->element_order(u);
        while (uo % p == 0) uo /= p;
        CHECK(uo == 1);
      }
    }
  }

  SUBCASE("uniqueness by full scan at desk scale") {
    const GroupTable& g = gl2(2, 2);
    std::vector<int> ss, unip;
    for (long i = 0; i < g.order(); ++i) {
      if (g.is_semisimple(static_cast<int>(i))) ss.push_back(static_cast<int>(i));
      if (g.is_unipotent(static_cast<int>(i))) unip.push_back(static_cast<int>(i));
    }
    for (long i = 0; i < g.order(); ++i) {
      int found = 0;
      std::pair<int, int> witness{-1, -1};
      for (int s : ss)
        for (int u : unip) {
          if (g.mul(s, u) != static_cast<int>(i)) continue;
          if (g.mul(s, u) != g.mul(u, s)) continue;
          ++found;
          witness = {s, u};
        }
      CHECK(found == 1);
      CHECK(witness == g.jordan(static_cast<int>(i)));
    }
  }
}

TEST_CASE("semisimple and unipotent tests agree") {
  for (const GroupTable* g : {&gl2(2, 2), &gl2(3, 2)}) {
    for (long i = 0; i < g->order(); ++i)
      CHECK(g->is_unipotent(static_cast<int>(i)) ==
            g->is_unipotent_matrix_test(static_cast<int>(i)));
  }
  const GroupTable& g3 = gl2(3, 2);
  const TruncRing& R = g3.ring;
  int u = g3.index_of(Mat2{&R, {1, R.from_coeffs({0, 1}), 0, 1}});  // 1 + t E12
  CHECK(g3.is_unipotent(u));
  CHECK(g3.element_order(u) == 3);
  int d = g3.index_of(Mat2{&R, {1, 0, 0, 2}});  // diag(1, -1)
  CHECK(g3.is_semisimple(d));
  CHECK(g3.is_semisimple(g3.identity()));
  CHECK(g3.is_unipotent(g3.identity()));
}

TEST_CASE("centralizers") {
  const GroupTable& g3 = gl2(3, 2);
  CHECK(g3.centralizer(g3.identity()).order() == g3.order());
  int d = g3.index_of(Mat2{&g3.ring, {1, 0, 0, 2}});
  CHECK(g3.centralizer(d).order() == 36);  // |O_2^x|^2

  const GroupTable& g2 = gl2(2, 2);
  // regular elliptic constant: [[0, 1], [1, 1]] lifts the F_4 generator
  int ell = g2.index_of(Mat2{&g2.ring, {0, 1, 1, 1}});
  CHECK(g2.is_semisimple(ell));
  CHECK(g2.centralizer(ell).order() == 12);  // |O_{2,2}^x|
}

TEST_CASE("transporters") {
  const GroupTable& g3 = gl2(3, 1);
  const TruncRing& R = g3.ring;
  std::vector<int> diag;
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) diag.push_back(g3.index_of(Mat2{&R, {a, 0, 0, b}}));
  Subgroup T(g3, diag);
  int s = g3.index_of(Mat2{&R, {1, 0, 0, 2}});
  CHECK(g3.transporter_to(s, T.member).size() == 8);  // 2 |T^F|

  SUBCASE("central element lands everywhere") {
    int z = g3.index_of(Mat2{&R, {2, 0, 0, 2}});
    CHECK(g3.transporter_to(z, T.member).size() == static_cast<std::size_t>(g3.order()));
  }
  SUBCASE("class missing the subset gives the empty set") {
    int ell = g3.index_of(Mat2{&R, {0, 1, 2, 0}});  // x^2 = -1 companion, elliptic
    CHECK(g3.is_semisimple(ell));
    CHECK(g3.transporter_to(ell, T.member).empty());
  }
}

TEST_CASE("subgroup generation and transversals") {
  const GroupTable& g = gl2(2, 2);
  CHECK(g.generate({g.identity()}).order() == 1);

  // T^F together with (G^1)^F generates a subgroup of order 16
  std::vector<int> gens = g.congruence_kernel(1).elems;
  const TruncRing& R = g.ring;
  int u3 = R.from_coeffs({1, 1});
  gens.push_back(g.index_of(Mat2{&R, {u3, 0, 0, 1}}));
  gens.push_back(g.index_of(Mat2{&R, {1, 0, 0, u3}}));
  Subgroup h = g.generate(gens);
  CHECK(h.order() == 16);

  std::vector<int> reps = g.left_transversal(h);
  CHECK(reps.size() == 6);
  SUBCASE("transversal covers the group without overlap") {
    std::vector<char> seen(g.order(), 0);
    for (int rep : reps)
      for (int x : h.elems) {
        int y = g.mul(rep, x);
        CHECK_FALSE(seen[y]);
        seen[y] = 1;
      }
    for (long i = 0; i < g.order(); ++i) CHECK(seen[i]);
  }

  SUBCASE("closure verification rejects non-subgroups") {
    int m = g.index_of(Mat2{&R, {0, 1, 1, 1}});  // order 3
    CHECK_THROWS_AS(Subgroup(g, {g.identity(), m}), std::invalid_argument);
  }
}

TEST_CASE("center is the scalars") {
  const GroupTable& g = gl2(2, 2);
  CHECK(g.center().size() == 2);  // |O_2^x| scalars
  for (int z : g.center()) CHECK(g.is_central(z));
  const GroupTable& g3 = gl2(3, 2);
  CHECK(g3.center().size() == 6);
}
