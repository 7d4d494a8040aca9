#ifndef DLGREEN_TORI_HPP
#define DLGREEN_TORI_HPP

#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "dlgreen/cyclo.hpp"
#include "dlgreen/grp.hpp"

namespace dlgreen {

struct CyclicFactor {
  int gen;     // element index in the parent group
  long order;  // order of gen in the quotient (= its true order)
};

/// A direct-product presentation of a finite abelian subgroup, found by
/// cyclic peeling: pick an element of maximal order in the remaining
/// quotient whose own order matches, record it, quotient out.  Factor
/// orders are invariant-factor compatible (each divides the previous),
/// and the exhaustive coordinate map doubles as an independence proof.
class AbelianStructure {
public:
  AbelianStructure() = default;
  explicit AbelianStructure(const Subgroup& s);

  const GroupTable* G = nullptr;
  std::vector<CyclicFactor> factors;
  long exponent = 1;  // lcm of factor orders
  long size = 1;

  const std::vector<int>& coords_of(int elem_idx) const;  // throws if absent
  bool contains(int elem_idx) const { return coords_.count(elem_idx) != 0; }
  int element_at(const std::vector<int>& exps) const;

private:
  std::unordered_map<int, std::vector<int>> coords_;
};

/// A linear character of an abelian subgroup, by exponents against the
/// cyclic factors: the value on factor generator g_i of order m_i is
/// zeta_{m_i}^{e_i}.  All values are roots of unity of order dividing the
/// group exponent M; zeta_exp returns the power of zeta_M directly so hot
/// loops can stay in integer arithmetic.
class AbelianChar {
public:
  AbelianChar(const AbelianStructure& st, std::vector<int> exps);

  const AbelianStructure* structure;
  std::vector<int> exps;

  long modulus() const { return structure->exponent; }
  long zeta_exp(int elem_idx) const;
  CycloNum eval(int elem_idx) const;
  long order() const;
  bool is_trivial() const;
  bool operator==(const AbelianChar& o) const {
    return structure == o.structure && exps == o.exps;
  }
};

/// All |S| characters, trivial first, ordered by exponent tuple.
std::vector<AbelianChar> characters_enumerate(const AbelianStructure& st);

/// A maximal torus of GL_2(O_r) together with the data every later stage
/// needs: the T = T_1 x T^1 decomposition, the abelian presentation, Weyl
/// representatives, and a diagonalizing frame over the quadratic
/// unramified extension ring O_{r,2}.
class TorusData {
public:
  enum class Kind { split, nonsplit };

  static std::unique_ptr<TorusData> build_split(const GroupTable& g);
  static std::unique_ptr<TorusData> build_nonsplit(const GroupTable& g);

  Kind kind;
  const GroupTable* G;
  Subgroup torus;      // T^F
  Subgroup level_one;  // T_1^F, the constant part
  Subgroup pro_part;   // (T^1)^F, the kernel of reduction to level 1
  AbelianStructure structure;
  std::vector<int> weyl_reps;  // {identity, w}, cosets of N(T^F)/T^F

  const TruncRing* ext_ring;  // O_{r,2}
  std::unique_ptr<RingEmbedding> emb;
  Mat2 frame, frame_inv;  // diagonalizes T over O_{r,2}; identity for split

  int q() const { return G->ring.field.size; }
  long order() const { return torus.order(); }

  /// Unique factorization t = t1 * tpro with t1 constant and tpro = 1 mod t.
  std::pair<int, int> split_element(int t) const;

  /// Torus elements congruent to 1 mod t^lvl, as a subgroup (T^lvl)^F.
  Subgroup torus_kernel(int lvl) const;

  /// Nonsplit bookkeeping: the unit x of O_{r,2} realized by a torus
  /// element, and back.  Unused for the split torus.
  int unit_of_elem(int idx) const;
  int elem_of_unit(int xcode) const;

  const char* kind_name() const { return kind == Kind::split ? "split" : "nonsplit"; }

private:
  TorusData() = default;
  void finish_common(const GroupTable& g, int w_structural);

  std::unordered_map<int, int> elem_to_unit_;
  std::unordered_map<int, int> unit_to_elem_;
};

/// (^w theta)(t) = theta(w^{-1} t w); throws if w does not normalize T^F.
AbelianChar weyl_action(const TorusData& t, int w, const AbelianChar& theta);

/// Whether the conjugation action of w fixes theta.
bool weyl_fixes(const TorusData& t, int w, const AbelianChar& theta);

/// theta * (other restricted to the torus), where other is a linear
/// character given by its zeta-exponent evaluator: value at element i is
/// zeta_{other_modulus}^{other_zexp(i)}.  The product must again be a
/// character of the torus.
AbelianChar char_multiply(const AbelianChar& theta, long other_modulus,
                          const std::function<long(int)>& other_zexp);

}  // namespace dlgreen

#endif
