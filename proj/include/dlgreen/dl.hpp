#ifndef DLGREEN_DL_HPP
#define DLGREEN_DL_HPP

#include <memory>

#include "dlgreen/classfun.hpp"
#include "dlgreen/grp.hpp"
#include "dlgreen/tori.hpp"

namespace dlgreen {

/// The theta-independent scaffolding for building algebraized higher
/// Deligne-Lusztig characters at even level r with b = r/2:
///
///   - H^F = T^F (G^{r/2})^F, the induction subgroup;
///   - the Iwahori projection (G^{r/2})^F -> (T^{r/2})^F computed in the
///     diagonalizing frame over O_{r,2}, where the congruence kernel is
///     abelian and the torus/upper/lower factorization is exact;
///   - the decomposition x = t g of every element of H^F, so that each
///     trivial lift evaluates as theta(t) theta(project(g));
///   - per conjugacy class, the list of H-elements hit by the Frobenius
///     induction formula over a fixed left transversal.
///
/// All of it is shared by every theta on the torus.
class DLContext {
public:
  DLContext(const GroupTable& g, const TorusData& t);

  const GroupTable* G;
  const TorusData* T;
  int b;               // = r/2
  Subgroup kernel;     // (G^{r/2})^F
  Subgroup torus_b;    // (T^{r/2})^F
  Subgroup lift;       // H^F
  std::vector<int> transversal;

  /// The torus part of the exact Iwahori factorization of a congruence
  /// kernel element; a homomorphism on the abelian kernel, invariant
  /// under T^F-conjugation, the identity on (T^{r/2})^F.
  int iwahori_project(int g_elem) const;

  /// theta~(x) for x in H^F, as a zeta_M-exponent (M = torus exponent).
  long trivial_lift_zexp(const AbelianChar& theta, int x_elem) const;
  CycloNum trivial_lift_eval(const AbelianChar& theta, int x_elem) const;

  /// The algebraized character Ind_{H^F}^{G^F} theta~.
  ClassFunction character(const AbelianChar& theta) const;

private:
  std::vector<int> proj_;                        // by position in kernel.elems
  std::vector<std::pair<int, int>> decomp_;      // (t, proj) by position in lift.elems
  std::vector<std::vector<int>> pattern_;        // per class id: lift positions
  std::vector<int> levelb_rep_;                  // truncated-code -> torus element
  int project_raw(int g_elem) const;
};

/// The level-one characters of GL_2(F_q): Borel induction for the split
/// torus, the cuspidal-type table for the nonsplit torus with the global
/// sign pinned by the regular-semisimple value formula.
ClassFunction classical_dl_level1(const GroupTable& g, const TorusData& t,
                                  const AbelianChar& theta);

/// sum_{w in W(T)^F} (^w theta)(s^c) for s regular semisimple with
/// s^c in T_1^F, or zero when the class of s misses T_1.
CycloNum regular_ss_value(const GroupTable& g, const TorusData& t, const AbelianChar& theta,
                          int s_elem);

/// Same, with the conjugator supplied (or -1 when the class misses T_1);
/// used by sweeps that cache the transporter search per class.
CycloNum regular_ss_value_with(const GroupTable& g, const TorusData& t,
                               const AbelianChar& theta, int s_elem, int c_elem);

/// Smallest c with s^c in T_1^F, or -1.
int find_conjugator_into_t1(const GroupTable& g, const TorusData& t, int s_elem);

bool is_regular_semisimple(const GroupTable& g, int elem);

}  // namespace dlgreen

#endif
