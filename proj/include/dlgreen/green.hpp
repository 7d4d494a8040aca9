#ifndef DLGREEN_GREEN_HPP
#define DLGREEN_GREEN_HPP

#include <optional>
#include <vector>

#include "dlgreen/classfun.hpp"
#include "dlgreen/dl.hpp"

namespace dlgreen {

/// The two-variable Green table of (G, T, b): rows are unipotent
/// conjugacy classes, columns the elements of (T^1)^F, with
///   Q(u, tau) = (1/|T^F|) sum_theta theta(tau) N^theta(u)
/// inverted over the full torus dual.  No single theta survives into the
/// table.
class GreenTable {
public:
  GreenTable(const GroupTable& g, const TorusData& t, int b);

  const GroupTable* G;
  const TorusData* T;
  int b;
  std::vector<int> unip_classes;  // class ids, ascending
  std::vector<int> taus;          // (T^1)^F element indices, ascending
  std::vector<std::vector<CycloNum>> rows;  // [unip row][tau col]

  int row_of_class(int cid) const;
  int col_of_tau(int tau_elem) const;
  const CycloNum& value(int cid, int tau_elem) const;
};

/// Build by inversion from the given characters, one per torus character
/// in enumeration order.
GreenTable green_from_characters(const GroupTable& g, const TorusData& t, int b,
                                 const std::vector<ClassFunction>& chars);

/// The Green table of the torus acting on itself: rows and columns both
/// run over (T^1)^F, and the value is the normalized bimodule trace
/// (1/|T^F|) #{x : u x tau = x}, which is the indicator of u tau = 1.
class TorusGreenTable {
public:
  const TorusData* T;
  std::vector<int> taus;
  std::vector<std::vector<CycloNum>> rows;  // [u][tau]

  int pos_of(int elem) const;
  const CycloNum& value(int u_elem, int tau_elem) const;
};

TorusGreenTable torus_green(const TorusData& t);
/// The same table via (1/|T^F|) sum_theta theta(tau) theta(u), the
/// inversion route with the torus as its own group.
TorusGreenTable torus_green_by_inversion(const TorusData& t);

/// Conjugation transport: Q^{hT,hU,b}(u, tau) = Q^{T,U,b}(u^h, tau^h).
CycloNum transported_green_value(const GreenTable& q, int h, int u_elem, int tau_elem);
CycloNum transported_torus_green_value(const TorusGreenTable& q, int h, int u_elem,
                                       int tau_elem);

/// Evaluates the right-hand side of the character formula
///   N^theta(g) = 1/|Stab(s)^F| sum_{h : s in hT_1h^-1} sum_{tau}
///                theta(s^h tau^h) Q_stab(u, tau^-1)
/// with the two stabilizer shapes available in GL_2: the full group when
/// s is central (group Green table, transported), and a torus conjugate
/// when s is regular (torus delta table, transported).  Transporters and
/// Jordan data are cached per class.
class CharFormulaEvaluator {
public:
  CharFormulaEvaluator(const GroupTable& g, const TorusData& t, const GreenTable& qg,
                       const TorusGreenTable& qt);

  CycloNum rhs(const AbelianChar& theta, int class_id) const;

  struct PerClassReport {
    int class_id;
    CycloNum lhs, rhs;
    bool pass;
  };
  /// Checks lhs = rhs on every conjugacy class.
  std::vector<PerClassReport> verify(const AbelianChar& theta, const ClassFunction& lhs) const;

private:
  const GroupTable* G;
  const TorusData* T;
  const GreenTable* Qg;
  const TorusGreenTable* Qt;

  struct ClassData {
    int s, u;
    bool central;
    bool empty;  // transporter empty: value 0
    std::vector<int> transporter;
    long stab_order;
  };
  const ClassData& class_data(int cid) const;
  mutable std::vector<std::optional<ClassData>> cache_;
};

/// Proposition-style summation: sum over unipotent elements (classes
/// weighted by size) and all tau; expected value |G^F| / |T_1^F|.
std::pair<CycloNum, long> summation_check(const GreenTable& q);

struct IntegralityRow {
  int class_id;
  CycloNum total;
  bool integral;
};
/// sum_tau Q(u, tau) must be a rational integer for every unipotent class.
std::vector<IntegralityRow> integrality_check(const GreenTable& q);

}  // namespace dlgreen

#endif
