#include "dlgreen/gamma.hpp"

#include <stdexcept>

namespace dlgreen {

CycloNum gamma(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.G != psi.G) throw std::invalid_argument("gamma over different groups");
  const GroupTable& g = *chi.G;
  CycloNum acc;
  for (int c = 0; c < g.num_classes(); ++c)
    acc += Rational(g.class_sizes()[c]) * (chi.values[c] * psi.values[c]);
  return frac(1, g.order()) * acc;
}

CycloNum gamma_on_level_one(const TorusData& t, const AbelianChar& theta,
                            const ClassFunction& psi) {
  CycloNum acc;
  for (int x : t.level_one.elems) acc += theta.eval(x) * psi.at_elem(x);
  return frac(1, t.level_one.order()) * acc;
}

bool theta_is_p_constant(const TorusData& t, const AbelianChar& theta) {
  for (int x : t.pro_part.elems)
    if (theta.zeta_exp(x) != 0) return false;
  return true;
}

GammaCheckResult gamma_identity_values(const GroupTable& g, const TorusData& t,
                                       const AbelianChar& theta,
                                       const ClassFunction& dl_char_theta,
                                       const ClassFunction& psi) {
  (void)g;
  CycloNum lhs = gamma(dl_char_theta, psi);
  CycloNum rhs = gamma_on_level_one(t, theta, psi);
  return {lhs, rhs, lhs == rhs};
}

GammaCheckResult gamma_identity_check(const GroupTable& g, const TorusData& t,
                                      const AbelianChar& theta,
                                      const ClassFunction& dl_char_theta,
                                      const ClassFunction& psi) {
  if (!theta_is_p_constant(t, theta))
    throw std::invalid_argument("theta is not p-constant (nontrivial on (T^1)^F)");
  if (!is_p_constant(psi)) throw std::invalid_argument("psi is not p-constant");
  return gamma_identity_values(g, t, theta, dl_char_theta, psi);
}

}  // namespace dlgreen
