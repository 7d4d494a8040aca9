#ifndef DLGREEN_CLASSFUN_HPP
#define DLGREEN_CLASSFUN_HPP

#include <functional>
#include <map>
#include <vector>

#include "dlgreen/cyclo.hpp"
#include "dlgreen/grp.hpp"
#include "dlgreen/tori.hpp"

namespace dlgreen {

/// A cyclotomic-valued class function on an enumerated group, stored by
/// conjugacy class.
class ClassFunction {
public:
  explicit ClassFunction(const GroupTable& g);
  ClassFunction(const GroupTable& g, std::vector<CycloNum> values);
  static ClassFunction constant(const GroupTable& g, CycloNum c);

  const GroupTable* G;
  std::vector<CycloNum> values;  // indexed by class id

  const CycloNum& at_class(int cid) const { return values[cid]; }
  const CycloNum& at_elem(int i) const { return values[G->class_of(i)]; }
  CycloNum degree() const { return at_elem(G->identity()); }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction pointwise_mul(const ClassFunction& o) const;
  ClassFunction conjugated() const;
  bool operator==(const ClassFunction& o) const;
};

/// Hermitian inner product (1/|G|) sum_x f(x) conj(g(x)), summed classwise
/// with class-size weights.
CycloNum inner_product(const ClassFunction& f, const ClassFunction& g);

/// Functions on a subgroup are stored elementwise, indexed by the position
/// in Subgroup::elems.
using SubgroupFn = std::vector<CycloNum>;

CycloNum inner_product_on(const Subgroup& h, const SubgroupFn& f, const SubgroupFn& g);

/// Frobenius induction of an H-class function (given as an evaluator on
/// parent element indices) to the whole group.
ClassFunction induce(const Subgroup& h, const std::function<CycloNum(int)>& f);

/// Induction from H to an intermediate subgroup K >= H, elementwise on K.
SubgroupFn induce_to(const Subgroup& h, const Subgroup& k,
                     const std::function<CycloNum(int)>& f);

SubgroupFn restrict_to(const ClassFunction& f, const Subgroup& h);

/// f(g) = f(s) for the Jordan decomposition g = su of every class.
bool is_p_constant(const ClassFunction& f);

/// Build the p-constant function with the given values on semisimple
/// classes: f(g) = values[class of s(g)].  Throws when a needed
/// semisimple class is missing from the map.
ClassFunction p_constant_extend(const GroupTable& g, const std::map<int, CycloNum>& ss_values);

/// The subgroup {diag(u, 1)} realizing the unit group O_r^x inside G,
/// which carries the characters used for determinant twists.
Subgroup diag_units_subgroup(const GroupTable& g);

/// chi o det as a class function, for chi a character of the diagonal
/// unit subgroup above.
ClassFunction det_twist(const GroupTable& g, const AbelianChar& chi);

/// The zeta-exponent of (chi o det) at an arbitrary group element.
long det_twist_zexp(const GroupTable& g, const AbelianChar& chi, int elem);

}  // namespace dlgreen

#endif
