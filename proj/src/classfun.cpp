#include "dlgreen/classfun.hpp"

#include <stdexcept>

namespace dlgreen {

ClassFunction::ClassFunction(const GroupTable& g)
    : G(&g), values(g.num_classes(), CycloNum::zero()) {}

ClassFunction::ClassFunction(const GroupTable& g, std::vector<CycloNum> v)
    : G(&g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != g.num_classes())
    throw std::invalid_argument("class value count mismatch");
}

ClassFunction ClassFunction::constant(const GroupTable& g, CycloNum c) {
  ClassFunction f(g);
  for (auto& v : f.values) v = c;
  return f;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (G != o.G) throw std::invalid_argument("class functions on different groups");
  ClassFunction f(*G);
  for (std::size_t i = 0; i < values.size(); ++i) f.values[i] = values[i] + o.values[i];
  return f;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  if (G != o.G) throw std::invalid_argument("class functions on different groups");
  ClassFunction f(*G);
  for (std::size_t i = 0; i < values.size(); ++i) f.values[i] = values[i] - o.values[i];
  return f;
}

ClassFunction ClassFunction::pointwise_mul(const ClassFunction& o) const {
  if (G != o.G) throw std::invalid_argument("class functions on different groups");
  ClassFunction f(*G);
  for (std::size_t i = 0; i < values.size(); ++i) f.values[i] = values[i] * o.values[i];
  return f;
}

ClassFunction ClassFunction::conjugated() const {
  ClassFunction f(*G);
  for (std::size_t i = 0; i < values.size(); ++i) f.values[i] = values[i].conjugated();
  return f;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (G != o.G) return false;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != o.values[i]) return false;
  return true;
}

CycloNum inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.G != g.G) throw std::invalid_argument("class functions on different groups");
  const GroupTable& G = *f.G;
  CycloNum acc;
  for (int c = 0; c < G.num_classes(); ++c)
    acc += Rational(G.class_sizes()[c]) * (f.values[c] * g.values[c].conjugated());
  return Rational(1, G.order()) * acc;
}

CycloNum inner_product_on(const Subgroup& h, const SubgroupFn& f, const SubgroupFn& g) {
  CycloNum acc;
  for (std::size_t i = 0; i < h.elems.size(); ++i) acc += f[i] * g[i].conjugated();
  return Rational(1, h.order()) * acc;
}

ClassFunction induce(const Subgroup& h, const std::function<CycloNum(int)>& f) {
  const GroupTable& G = *h.parent;
  std::vector<int> transversal = G.left_transversal(h);
  ClassFunction out(G);
  for (int c = 0; c < G.num_classes(); ++c) {
    int rep = G.class_reps()[c];
    CycloNum acc;
    for (int x : transversal) {
      int y = G.conj(rep, x);
      if (h.contains(y)) acc += f(y);
    }
    out.values[c] = acc;
  }
  return out;
}

SubgroupFn induce_to(const Subgroup& h, const Subgroup& k,
                     const std::function<CycloNum(int)>& f) {
  const GroupTable& G = *h.parent;
  // transversal of H-cosets inside K
  std::vector<char> covered(G.order(), 0);
  std::vector<int> transversal;
  for (int g : k.elems) {
    if (covered[g]) continue;
    transversal.push_back(g);
    for (int x : h.elems) covered[G.mul(g, x)] = 1;
  }
  SubgroupFn out(k.elems.size());
  for (std::size_t i = 0; i < k.elems.size(); ++i) {
    CycloNum acc;
    for (int x : transversal) {
      int y = G.conj(k.elems[i], x);
      if (h.contains(y)) acc += f(y);
    }
    out[i] = acc;
  }
  return out;
}

SubgroupFn restrict_to(const ClassFunction& f, const Subgroup& h) {
  SubgroupFn out(h.elems.size());
  for (std::size_t i = 0; i < h.elems.size(); ++i) out[i] = f.at_elem(h.elems[i]);
  return out;
}

bool is_p_constant(const ClassFunction& f) {
  const GroupTable& G = *f.G;
  for (int c = 0; c < G.num_classes(); ++c) {
    int s = G.jordan(G.class_reps()[c]).first;
    if (f.values[c] != f.at_elem(s)) return false;
  }
  return true;
}

ClassFunction p_constant_extend(const GroupTable& g, const std::map<int, CycloNum>& ss_values) {
  ClassFunction out(g);
  for (int c = 0; c < g.num_classes(); ++c) {
    int s = g.jordan(g.class_reps()[c]).first;
    auto it = ss_values.find(g.class_of(s));
    if (it == ss_values.end()) throw std::invalid_argument("missing semisimple class value");
    out.values[c] = it->second;
  }
  return out;
}

Subgroup diag_units_subgroup(const GroupTable& g) {
  const TruncRing& R = g.ring;
  std::vector<int> elems;
  for (long u = 0; u < R.size; ++u) {
    if (!R.is_unit(static_cast<int>(u))) continue;
    Mat2 m{&R, {static_cast<int>(u), 0, 0, R.one()}};
    elems.push_back(g.index_of(m));
  }
  return Subgroup(g, std::move(elems), false);
}

namespace {

int det_elem(const GroupTable& g, int elem) {
  const TruncRing& R = g.ring;
  int d = g.element(elem).det();
  return g.index_of(Mat2{&R, {d, 0, 0, R.one()}});
}

}  // namespace

long det_twist_zexp(const GroupTable& g, const AbelianChar& chi, int elem) {
  return chi.zeta_exp(det_elem(g, elem));
}

ClassFunction det_twist(const GroupTable& g, const AbelianChar& chi) {
  ClassFunction out(g);
  for (int c = 0; c < g.num_classes(); ++c)
    out.values[c] = chi.eval(det_elem(g, g.class_reps()[c]));
  return out;
}

}  // namespace dlgreen
