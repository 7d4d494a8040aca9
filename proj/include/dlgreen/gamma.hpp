#ifndef DLGREEN_GAMMA_HPP
#define DLGREEN_GAMMA_HPP

#include "dlgreen/classfun.hpp"
#include "dlgreen/tori.hpp"

namespace dlgreen {

/// gamma_{G^F}(chi, psi) = (1/|G^F|) sum_g chi(g) psi(g); bilinear, no
/// conjugation.
CycloNum gamma(const ClassFunction& chi, const ClassFunction& psi);

/// The torus-level gamma gamma_{T_1^F}(theta, psi|_{T_1^F}).
CycloNum gamma_on_level_one(const TorusData& t, const AbelianChar& theta,
                            const ClassFunction& psi);

/// A torus character is p-constant exactly when it is trivial on the
/// p-part (T^1)^F of T^F = T_1^F x (T^1)^F.
bool theta_is_p_constant(const TorusData& t, const AbelianChar& theta);

struct GammaCheckResult {
  CycloNum lhs, rhs;
  bool pass;
};

/// Both sides of the gamma identity, with no hypothesis checks (used for
/// negative controls).
GammaCheckResult gamma_identity_values(const GroupTable& g, const TorusData& t,
                                       const AbelianChar& theta,
                                       const ClassFunction& dl_char_theta,
                                       const ClassFunction& psi);

/// The gamma identity gamma_G(N^theta, psi) = gamma_{T_1}(theta, psi|);
/// throws unless theta is p-constant and psi is a p-constant class
/// function.
GammaCheckResult gamma_identity_check(const GroupTable& g, const TorusData& t,
                                      const AbelianChar& theta,
                                      const ClassFunction& dl_char_theta,
                                      const ClassFunction& psi);

}  // namespace dlgreen

#endif
