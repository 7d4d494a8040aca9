#ifndef DLGREEN_RINGS_HPP
#define DLGREEN_RINGS_HPP

#include <cstdint>
#include <vector>

namespace dlgreen {

/// A finite field F_{p^k} presented as F_p[x]/(modulus), with the modulus
/// chosen deterministically: the lexicographically smallest monic
/// irreducible polynomial of degree k, coefficients compared constant
/// term first.  Elements are encoded as integers in [0, p^k): the code's
/// base-p digits are the polynomial coefficients, constant digit lowest.
///
/// Instances are interned: make(p, k) always returns the same object, so
/// serialized tables are reproducible and pointers can be compared.
class FiniteField {
public:
  static const FiniteField& make(int p, int k);

  int p;
  int k;
  int size;                  // p^k
  std::vector<int> modulus;  // length k+1, constant first, monic

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // throws on 0
  int pow(int a, long e) const;

  /// x -> x^p, the absolute Frobenius.
  int frobenius_p(int a) const;
  /// x -> x^q for q = p^j a sub-power; throws if q is not one.
  int frobenius(int a, int q) const;

  /// A fixed generator of the multiplicative group (smallest code).
  int generator() const { return gen_; }
  long element_order(int a) const;  // multiplicative order, a != 0

private:
  FiniteField(int p, int k);
  FiniteField(const FiniteField&) = delete;

  int mul_raw(int a, int b) const;  // polynomial product mod modulus

  bool tabled_ = false;
  std::vector<uint16_t> add_tab_, mul_tab_;
  std::vector<uint16_t> neg_tab_, inv_tab_, frob_tab_;
  int gen_ = 0;
};

/// The truncated polynomial ring O_{r,d} = F_{q^d}[t]/t^r over a finite
/// field.  Elements are coded as integers in [0, size^r) with base-(field
/// size) digits as t-adic coefficients, constant digit lowest.  r = 0 is
/// the one-element ring.  Interned like FiniteField.
class TruncRing {
public:
  static const TruncRing& make(const FiniteField& field, int r);

  const FiniteField& field;
  int r;
  long size;  // field.size^r

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  bool is_unit(int a) const { return r == 0 || coeff(a, 0) != 0; }
  int inv(int a) const;  // throws std::domain_error("non-unit") on non-units

  int coeff(int a, int i) const;                 // t^i coefficient, field code
  int from_coeffs(const std::vector<int>& c) const;
  std::vector<int> coeffs(int a) const;

  /// Zero out all coefficients of t^i and higher (truncation inside the
  /// same ring).  reduce() below lands in the actual level-i ring.
  int truncate(int a, int lvl) const;

  /// The constant series a + 0 t + ..., a ring section of reduce(-, 1).
  int teichmuller(int field_elem) const { return field_elem; }

  /// Coefficientwise x -> x^q.
  int frobenius(int a, int q) const;

  int zero() const { return 0; }
  int one() const { return r == 0 ? 0 : 1; }

  long unit_count() const;  // (|F| - 1) |F|^{r-1}

private:
  TruncRing(const FiniteField& f, int r);
  TruncRing(const TruncRing&) = delete;

  int mul_raw(int a, int b) const;
  int inv_raw(int a) const;

  bool tabled_ = false;
  std::vector<int32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

/// The reduction map rho_{r,i}: O_r -> O_i (surjective ring homomorphism);
/// the result is a code in TruncRing::make(ring.field, lvl).
int reduce_to_level(const TruncRing& ring, int a, int lvl);

/// norm(x) = x Frob(x), trace(x) = x + Frob(x), for x in a quadratic
/// unramified extension ring over the q-element base; values land in the
/// Frobenius-fixed subring.
int ring_norm(const TruncRing& ring, int a, int q);
int ring_trace(const TruncRing& ring, int a, int q);

/// The field inclusion F_{p^k} -> F_{p^{2k}} determined by sending the
/// small field's generator-class to the smallest root of its modulus in
/// the big field.
class FieldEmbedding {
public:
  FieldEmbedding(const FiniteField& sub, const FiniteField& big);

  const FiniteField& sub;
  const FiniteField& big;

  int map(int a) const { return fwd_[a]; }
  /// Preimage, or -1 when the element is outside the subfield image.
  int preimage(int a) const { return back_[a]; }

private:
  std::vector<int> fwd_, back_;
};

/// Coefficientwise extension O_r -> O_{r,2} induced by a FieldEmbedding.
class RingEmbedding {
public:
  RingEmbedding(const TruncRing& sub, const TruncRing& big);

  const TruncRing& sub;
  const TruncRing& big;
  FieldEmbedding femb;

  int map(int a) const;
  int preimage(int a) const;  // -1 when outside the image

private:
  std::vector<int> fwd_;
};

}  // namespace dlgreen

#endif
