#include <doctest.h>

#include <tuple>
#include <random>
#include <set>
#include <stdexcept>

#include "dlgreen/rings.hpp"

using namespace dlgreen;

namespace {

// brute-force irreducibility of a monic quadratic over F_p: no roots
bool quadratic_irreducible(int p, int c0, int c1) {
  for (int x = 0; x < p; ++x)
    if ((x * x + c1 * x + c0) % p == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("deterministic field presentations") {
  const FiniteField& f2 = FiniteField::make(2, 1);
  CHECK(f2.modulus == std::vector<int>{0, 1});  // x
  CHECK(f2.size == 2);

  const FiniteField& f4 = FiniteField::make(2, 2);
  CHECK(f4.modulus == std::vector<int>{1, 1, 1});  // x^2 + x + 1
  SUBCASE("the only irreducible monic quadratic over F_2, by exhaustion") {
    int count = 0;
    for (int c0 = 0; c0 < 2; ++c0)
      for (int c1 = 0; c1 < 2; ++c1)
        if (quadratic_irreducible(2, c0, c1)) {
          ++count;
          CHECK(c0 == 1);
          CHECK(c1 == 1);
        }
    CHECK(count == 1);
  }

  const FiniteField& f9 = FiniteField::make(3, 2);
  CHECK(quadratic_irreducible(3, f9.modulus[0], f9.modulus[1]));
  SUBCASE("lexicographically smallest, constant term first") {
    for (int c0 = 0; c0 < 3; ++c0)
      for (int c1 = 0; c1 < 3; ++c1) {
        if (std::make_pair(c0, c1) >= std::make_pair(f9.modulus[0], f9.modulus[1])) continue;
        CHECK_FALSE(quadratic_irreducible(3, c0, c1));
      }
  }

  CHECK(&FiniteField::make(3, 1) == &FiniteField::make(3, 1));
  CHECK_THROWS_AS(FiniteField::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField::make(6, 1), std::invalid_argument);
}

TEST_CASE("field arithmetic basics") {
  const FiniteField& f4 = FiniteField::make(2, 2);
  int w = 2;  // the class of x
  CHECK(f4.mul(w, w) == 3);          // w^2 = w + 1
  CHECK(f4.mul(w, f4.mul(w, w)) == 1);  // w^3 = 1
  CHECK(f4.element_order(w) == 3);
  CHECK(f4.inv(w) == 3);
  CHECK(f4.frobenius(w, 2) == 3);

  const FiniteField& f9 = FiniteField::make(3, 2);
  for (int a = 1; a < f9.size; ++a) CHECK(f9.mul(a, f9.inv(a)) == 1);
  CHECK(f9.element_order(f9.generator()) == 8);
}

TEST_CASE("truncated ring arithmetic") {
  const TruncRing& o2 = TruncRing::make(FiniteField::make(2, 1), 2);
  int one_plus_t = o2.from_coeffs({1, 1});
  CHECK(o2.mul(one_plus_t, one_plus_t) == o2.one());
  CHECK(o2.inv(one_plus_t) == one_plus_t);

  const TruncRing& o2_3 = TruncRing::make(FiniteField::make(3, 1), 2);
  int x = o2_3.from_coeffs({1, 1});
  int expect = o2_3.from_coeffs({1, 2});  // 1 - t
  CHECK(o2_3.inv(x) == expect);
  CHECK(o2_3.mul(x, expect) == o2_3.one());

  int t = o2_3.from_coeffs({0, 1});
  CHECK_FALSE(o2_3.is_unit(t));
  CHECK_THROWS_WITH_AS(o2_3.inv(t), "non-unit", std::domain_error);
}

TEST_CASE("reduction maps") {
  const TruncRing& o4 = TruncRing::make(FiniteField::make(3, 1), 4);
  int x = o4.from_coeffs({1, 2, 0, 1});
  const TruncRing& o2 = TruncRing::make(FiniteField::make(3, 1), 2);
  CHECK(reduce_to_level(o4, x, 2) == o2.from_coeffs({1, 2}));
  CHECK(reduce_to_level(o4, x, 1) == 1);
  CHECK_THROWS_AS(reduce_to_level(o2, 0, 3), std::invalid_argument);

  SUBCASE("ring homomorphism and functoriality") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      int a = static_cast<int>(rng() % o4.size), b = static_cast<int>(rng() % o4.size);
      CHECK(reduce_to_level(o4, o4.mul(a, b), 2) ==
            o2.mul(reduce_to_level(o4, a, 2), reduce_to_level(o4, b, 2)));
      CHECK(reduce_to_level(o4, o4.add(a, b), 2) ==
            o2.add(reduce_to_level(o4, a, 2), reduce_to_level(o4, b, 2)));
      // rho_{2,1} o rho_{4,2} = rho_{4,1}
      CHECK(reduce_to_level(o2, reduce_to_level(o4, a, 2), 1) == reduce_to_level(o4, a, 1));
    }
  }

  SUBCASE("level zero is the one-element ring") {
    const TruncRing& o0 = TruncRing::make(FiniteField::make(3, 1), 0);
    CHECK(o0.size == 1);
    CHECK(o0.is_unit(0));
    CHECK(reduce_to_level(o4, x, 0) == 0);
  }
}

TEST_CASE("teichmuller section") {
  const TruncRing& o3 = TruncRing::make(FiniteField::make(3, 1), 3);
  const FiniteField& f = o3.field;
  CHECK(o3.teichmuller(1) == o3.one());
  for (int a = 0; a < f.size; ++a) {
    CHECK(reduce_to_level(o3, o3.teichmuller(a), 1) == a);
    for (int b = 0; b < f.size; ++b) {
      CHECK(o3.mul(o3.teichmuller(a), o3.teichmuller(b)) == o3.teichmuller(f.mul(a, b)));
      CHECK(o3.add(o3.teichmuller(a), o3.teichmuller(b)) == o3.teichmuller(f.add(a, b)));
    }
  }
}

TEST_CASE("frobenius on extension rings") {
  const TruncRing& o22 = TruncRing::make(FiniteField::make(2, 2), 2);
  int w = 2, w2 = 3;
  int x = o22.from_coeffs({w, w});
  CHECK(o22.frobenius(x, 2) == o22.from_coeffs({w2, w2}));
  SUBCASE("order two, fixes the base subring") {
    for (int a = 0; a < o22.size; ++a)
      CHECK(o22.frobenius(o22.frobenius(a, 2), 2) == a);
    const TruncRing& o2 = TruncRing::make(FiniteField::make(2, 1), 2);
    RingEmbedding emb(o2, o22);
    for (int a = 0; a < o2.size; ++a) CHECK(o22.frobenius(emb.map(a), 2) == emb.map(a));
  }
  SUBCASE("commutes with reduction and teichmuller") {
    const TruncRing& o12 = TruncRing::make(FiniteField::make(2, 2), 1);
    for (int a = 0; a < o22.size; ++a)
      CHECK(reduce_to_level(o22, o22.frobenius(a, 2), 1) ==
            o12.frobenius(reduce_to_level(o22, a, 1), 2));
    for (int a = 0; a < o22.field.size; ++a)
      CHECK(o22.frobenius(o22.teichmuller(a), 2) == o22.teichmuller(o22.field.frobenius(a, 2)));
  }
}

TEST_CASE("norm and trace") {
  const TruncRing& f4r1 = TruncRing::make(FiniteField::make(2, 2), 1);
  int w = 2;
  CHECK(ring_norm(f4r1, w, 2) == 1);  // w * w^2 = w^3 = 1

  const TruncRing& o22 = TruncRing::make(FiniteField::make(2, 2), 2);
  SUBCASE("norm multiplicative, values Frobenius-fixed") {
    for (int a = 0; a < o22.size; ++a) {
      int tr = ring_trace(o22, a, 2);
      CHECK(o22.frobenius(tr, 2) == tr);
      if (!o22.is_unit(a)) continue;
      int na = ring_norm(o22, a, 2);
      CHECK(o22.frobenius(na, 2) == na);
      for (int b = 0; b < o22.size; ++b)
        if (o22.is_unit(b))
          CHECK(ring_norm(o22, o22.mul(a, b), 2) == o22.mul(na, ring_norm(o22, b, 2)));
    }
  }
  SUBCASE("norm of a constant is the constant norm") {
    const FiniteField& f4 = o22.field;
    for (int a = 1; a < f4.size; ++a)
      CHECK(ring_norm(o22, o22.teichmuller(a), 2) ==
            o22.teichmuller(f4.mul(a, f4.frobenius(a, 2))));
  }
}

TEST_CASE("unit group counts and decomposition") {
  for (auto [p, k, rmax] : {std::tuple{2, 1, 4}, {3, 1, 4}, {2, 2, 3}, {3, 2, 2}}) {
    for (int r = 1; r <= rmax; ++r) {
      const TruncRing& o = TruncRing::make(FiniteField::make(p, k), r);
      long units = 0;
      for (long a = 0; a < o.size; ++a)
        if (o.is_unit(static_cast<int>(a))) ++units;
      CHECK(units == o.unit_count());

      // internal direct product Teich(F^x) x (1 + t O)
      std::set<std::pair<int, int>> seen;
      for (long a = 0; a < o.size; ++a) {
        if (!o.is_unit(static_cast<int>(a))) continue;
        int teich = o.teichmuller(o.coeff(static_cast<int>(a), 0));
        int oneunit = o.mul(o.inv(teich), static_cast<int>(a));
        CHECK(o.coeff(oneunit, 0) == 1);
        seen.emplace(teich, oneunit);
      }
      CHECK(static_cast<long>(seen.size()) == units);
    }
  }
}

TEST_CASE("field and ring embeddings are homomorphisms") {
  const TruncRing& o2 = TruncRing::make(FiniteField::make(2, 1), 2);
  const TruncRing& o22 = TruncRing::make(FiniteField::make(2, 2), 2);
  RingEmbedding emb(o2, o22);
  for (int a = 0; a < o2.size; ++a) {
    CHECK(emb.preimage(emb.map(a)) == a);
    for (int b = 0; b < o2.size; ++b) {
      CHECK(emb.map(o2.mul(a, b)) == o22.mul(emb.map(a), emb.map(b)));
      CHECK(emb.map(o2.add(a, b)) == o22.add(emb.map(a), emb.map(b)));
    }
  }
  CHECK(emb.map(o2.one()) == o22.one());

  const TruncRing& o23 = TruncRing::make(FiniteField::make(3, 1), 2);
  const TruncRing& o29 = TruncRing::make(FiniteField::make(3, 2), 2);
  RingEmbedding emb3(o23, o29);
  for (int a = 0; a < o23.size; ++a)
    for (int b = 0; b < o23.size; ++b)
      CHECK(emb3.map(o23.mul(a, b)) == o29.mul(emb3.map(a), emb3.map(b)));
}
