#ifndef DLGREEN_CYCLO_HPP
#define DLGREEN_CYCLO_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace dlgreen {

using Rational = mpq_class;

/// Canonicalized exact fraction (mpq_class(n, d) alone does not reduce).
inline Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Integer coefficients of the N-th cyclotomic polynomial, constant term
/// first, length deg(Phi_N) + 1.  Results are cached per N.
const std::vector<long>& cyclotomic_poly(long n);

/// An exact element of the cyclotomic field Q(zeta_N), stored as a rational
/// polynomial in zeta_N reduced modulo Phi_N.  This is the value domain for
/// every character computation in the project: all values that arise are
/// Z-linear combinations of roots of unity divided by group orders, so a
/// finite cyclotomic field always suffices.
///
/// The representation is canonical at a fixed modulus: two values with the
/// same modulus are equal iff their coefficient vectors are equal.  Mixed
/// moduli embed into Q(zeta_lcm) on demand.
class CycloNum {
public:
  CycloNum();                     // zero in Q(zeta_1)
  explicit CycloNum(Rational c);  // a rational constant
  explicit CycloNum(long c);

  static CycloNum zero() { return CycloNum(); }
  static CycloNum one() { return CycloNum(1); }

  /// zeta_N^k in canonical form (k may be negative).
  static CycloNum root_of_unity(long n, long k);

  long modulus() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Image under Q(zeta_M) -> Q(zeta_N), zeta_M -> zeta_N^{N/M}.  Requires
  /// modulus() | n.
  CycloNum embedded(long n) const;

  CycloNum operator-() const;
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycloNum inverted() const;

  /// The field automorphism zeta_N -> zeta_N^{N-1} (complex conjugation).
  CycloNum conjugated() const;

  bool is_zero() const;

  /// The rational value if the element lies in Q, otherwise nullopt.
  std::optional<Rational> as_rational() const;
  bool is_integer() const;

  bool operator==(const CycloNum& o) const;
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  /// Human-readable rendering, e.g. "1/2", "z12^4 - 1".
  std::string str() const;

private:
  long n_;                   // cyclotomic modulus N
  std::vector<Rational> c_;  // length deg Phi_N, index i is coeff of zeta^i

  friend CycloNum operator*(const Rational& a, const CycloNum& z);
};

CycloNum operator*(const Rational& a, const CycloNum& z);

/// All of zeta_N^0 .. zeta_N^{N-1} in canonical form; the workhorse table
/// for accumulating character sums.
std::vector<CycloNum> roots_of_unity_table(long n);

}  // namespace dlgreen

#endif
