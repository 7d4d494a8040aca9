#include "dlgreen/green.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlgreen {

GreenTable::GreenTable(const GroupTable& g, const TorusData& t, int b_) : G(&g), T(&t), b(b_) {
  for (int c = 0; c < g.num_classes(); ++c)
    if (g.is_unipotent(g.class_reps()[c])) unip_classes.push_back(c);
  taus = t.pro_part.elems;
  rows.assign(unip_classes.size(), std::vector<CycloNum>(taus.size()));
}

int GreenTable::row_of_class(int cid) const {
  auto it = std::lower_bound(unip_classes.begin(), unip_classes.end(), cid);
  if (it == unip_classes.end() || *it != cid)
    throw std::invalid_argument("not a unipotent class");
  return static_cast<int>(it - unip_classes.begin());
}

int GreenTable::col_of_tau(int tau_elem) const {
  int pos = T->pro_part.position(tau_elem);
  if (pos < 0) throw std::invalid_argument("element outside (T^1)^F");
  return pos;
}

const CycloNum& GreenTable::value(int cid, int tau_elem) const {
  return rows[row_of_class(cid)][col_of_tau(tau_elem)];
}

GreenTable green_from_characters(const GroupTable& g, const TorusData& t, int b,
                                 const std::vector<ClassFunction>& chars) {
  if (static_cast<long>(chars.size()) != t.order())
    throw std::invalid_argument("need one character per torus dual element");
  GreenTable q(g, t, b);
  std::vector<AbelianChar> thetas = characters_enumerate(t.structure);
  long m = t.structure.exponent;
  std::vector<CycloNum> roots = roots_of_unity_table(m);
  for (std::size_t row = 0; row < q.unip_classes.size(); ++row) {
    int cid = q.unip_classes[row];
    for (std::size_t col = 0; col < q.taus.size(); ++col) {
      CycloNum acc;
      for (std::size_t j = 0; j < thetas.size(); ++j)
        acc += roots[thetas[j].zeta_exp(q.taus[col])] * chars[j].at_class(cid);
      q.rows[row][col] = Rational(1, t.order()) * acc;
    }
  }
  return q;
}

int TorusGreenTable::pos_of(int elem) const {
  int pos = T->pro_part.position(elem);
  if (pos < 0) throw std::invalid_argument("element outside (T^1)^F");
  return pos;
}

const CycloNum& TorusGreenTable::value(int u_elem, int tau_elem) const {
  return rows[pos_of(u_elem)][pos_of(tau_elem)];
}

TorusGreenTable torus_green(const TorusData& t) {
  const GroupTable& g = *t.G;
  TorusGreenTable q;
  q.T = &t;
  q.taus = t.pro_part.elems;
  q.rows.assign(q.taus.size(), std::vector<CycloNum>(q.taus.size()));
  for (std::size_t i = 0; i < q.taus.size(); ++i) {
    for (std::size_t j = 0; j < q.taus.size(); ++j) {
      long fixed = 0;
      for (int x : t.torus.elems)
        if (g.mul(g.mul(q.taus[i], x), q.taus[j]) == x) ++fixed;
      q.rows[i][j] = CycloNum(frac(fixed, t.order()));
    }
  }
  return q;
}

TorusGreenTable torus_green_by_inversion(const TorusData& t) {
  TorusGreenTable q;
  q.T = &t;
  q.taus = t.pro_part.elems;
  q.rows.assign(q.taus.size(), std::vector<CycloNum>(q.taus.size()));
  std::vector<AbelianChar> thetas = characters_enumerate(t.structure);
  long m = t.structure.exponent;
  std::vector<CycloNum> roots = roots_of_unity_table(m);
  for (std::size_t i = 0; i < q.taus.size(); ++i)
    for (std::size_t j = 0; j < q.taus.size(); ++j) {
      CycloNum acc;
      for (const auto& th : thetas)
        acc += roots[(th.zeta_exp(q.taus[j]) + th.zeta_exp(q.taus[i])) % m];
      q.rows[i][j] = Rational(1, t.order()) * acc;
    }
  return q;
}

CycloNum transported_green_value(const GreenTable& q, int h, int u_elem, int tau_elem) {
  const GroupTable& g = *q.G;
  int uh = g.conj(u_elem, h);
  int tauh = g.conj(tau_elem, h);
  if (q.T->pro_part.position(tauh) < 0)
    throw std::invalid_argument("transported tau escapes (T^1)^F");
  return q.value(g.class_of(uh), tauh);
}

CycloNum transported_torus_green_value(const TorusGreenTable& q, int h, int u_elem,
                                       int tau_elem) {
  const GroupTable& g = *q.T->G;
  int uh = g.conj(u_elem, h);
  int tauh = g.conj(tau_elem, h);
  if (q.T->pro_part.position(tauh) < 0)
    throw std::invalid_argument("transported tau escapes (T^1)^F");
  return q.value(uh, tauh);
}

CharFormulaEvaluator::CharFormulaEvaluator(const GroupTable& g, const TorusData& t,
                                           const GreenTable& qg, const TorusGreenTable& qt)
    : G(&g), T(&t), Qg(&qg), Qt(&qt), cache_(g.num_classes()) {
  // transporters and stabilizers are filled now so that rhs() is a pure
  // read and safe to call from parallel workers
  for (int c = 0; c < g.num_classes(); ++c) class_data(c);
}

const CharFormulaEvaluator::ClassData& CharFormulaEvaluator::class_data(int cid) const {
  if (cache_[cid]) return *cache_[cid];
  const GroupTable& g = *G;
  ClassData d;
  int rep = g.class_reps()[cid];
  auto [s, u] = g.jordan(rep);
  d.s = s;
  d.u = u;
  d.central = g.is_central(s);
  d.empty = false;
  d.stab_order = 0;
  if (d.central) {
    // transporter is all of G^F; 1/|G^F| cancels against the h-sum
    if (!T->level_one.contains(s)) throw std::logic_error("central semisimple part not constant");
  } else {
    d.transporter = g.transporter_to(s, T->level_one.member);
    if (d.transporter.empty()) {
      d.empty = true;
    } else {
      Subgroup cent = g.centralizer(s);
      d.stab_order = cent.order();
      if (d.stab_order != T->order())
        throw std::logic_error("semisimple stabilizer is not of torus size");
    }
  }
  cache_[cid] = std::move(d);
  return *cache_[cid];
}

CycloNum CharFormulaEvaluator::rhs(const AbelianChar& theta, int class_id) const {
  const GroupTable& g = *G;
  const TorusData& t = *T;
  const ClassData& d = class_data(class_id);
  if (!d.central && d.empty) return CycloNum::zero();

  long m = theta.structure->exponent;
  std::vector<CycloNum> roots = roots_of_unity_table(m);

  if (d.central) {
    // sum over tau of theta(s tau) Q_G(class(u), tau^-1); the h-sum of
    // the transported table collapses classwise against 1/|G^F|.
    CycloNum acc;
    for (int tau : t.pro_part.elems) {
      const CycloNum& qv = Qg->value(g.class_of(d.u), g.inv(tau));
      if (qv.is_zero()) continue;
      acc += roots[theta.zeta_exp(g.mul(d.s, tau))] * qv;
    }
    return acc;
  }

  // Regular semisimple part: the stabilizer is the torus conjugate
  // determined by each h, and its Green table is the transported delta.
  CycloNum acc;
  for (int h : d.transporter) {
    int sh = g.conj(d.s, h);
    int uh = g.conj(d.u, h);
    for (int tau : t.pro_part.elems) {
      const CycloNum& qv = Qt->value(uh, g.inv(tau));
      if (qv.is_zero()) continue;
      acc += roots[theta.zeta_exp(g.mul(sh, tau))] * qv;
    }
  }
  return frac(1, d.stab_order) * acc;
}

std::vector<CharFormulaEvaluator::PerClassReport> CharFormulaEvaluator::verify(
    const AbelianChar& theta, const ClassFunction& lhs) const {
  std::vector<PerClassReport> out;
  out.reserve(G->num_classes());
  for (int c = 0; c < G->num_classes(); ++c) {
    CycloNum r = rhs(theta, c);
    const CycloNum& l = lhs.at_class(c);
    out.push_back({c, l, r, l == r});
  }
  return out;
}

std::pair<CycloNum, long> summation_check(const GreenTable& q) {
  const GroupTable& g = *q.G;
  CycloNum total;
  for (std::size_t row = 0; row < q.unip_classes.size(); ++row) {
    CycloNum tau_sum;
    for (const auto& v : q.rows[row]) tau_sum += v;
    total += Rational(g.class_sizes()[q.unip_classes[row]]) * tau_sum;
  }
  long expected = g.order() / q.T->level_one.order();
  return {total, expected};
}

std::vector<IntegralityRow> integrality_check(const GreenTable& q) {
  std::vector<IntegralityRow> out;
  for (std::size_t row = 0; row < q.unip_classes.size(); ++row) {
    CycloNum tau_sum;
    for (const auto& v : q.rows[row]) tau_sum += v;
    out.push_back({q.unip_classes[row], tau_sum, tau_sum.is_integer()});
  }
  return out;
}

}  // namespace dlgreen
