#include "dlgreen/dl.hpp"

#include <stdexcept>

namespace dlgreen {

namespace {

// Lift a rational matrix into the extension ring O_{r,2}.
Mat2 embed_mat(const RingEmbedding& emb, const Mat2& m) {
  return Mat2{&emb.big, {emb.map(m.e[0]), emb.map(m.e[1]), emb.map(m.e[2]), emb.map(m.e[3])}};
}

// Pull a matrix back to O_r; all entries must be Frobenius-fixed.
Mat2 unembed_mat(const RingEmbedding& emb, const Mat2& m) {
  int a = emb.preimage(m.e[0]), b = emb.preimage(m.e[1]);
  int c = emb.preimage(m.e[2]), d = emb.preimage(m.e[3]);
  if (a < 0 || b < 0 || c < 0 || d < 0)
    throw std::logic_error("Iwahori projection produced a non-rational matrix");
  return Mat2{&emb.sub, {a, b, c, d}};
}

}  // namespace

DLContext::DLContext(const GroupTable& g, const TorusData& t) : G(&g), T(&t) {
  int r = g.ring.r;
  if (r < 2 || r % 2 != 0) throw std::invalid_argument("algebraized characters need even r >= 2");
  b = r / 2;

  kernel = g.congruence_kernel(b);
  torus_b = t.torus_kernel(b);

  std::vector<int> gens = kernel.elems;
  for (const auto& f : t.structure.factors) gens.push_back(f.gen);
  lift = g.generate(gens);
  long expected =
      t.torus.order() / torus_b.order() * kernel.order();
  if (lift.order() != expected) throw std::logic_error("lift subgroup has unexpected order");

  transversal = g.left_transversal(lift);

  proj_.resize(kernel.elems.size());
  for (std::size_t i = 0; i < kernel.elems.size(); ++i)
    proj_[i] = project_raw(kernel.elems[i]);

  // One torus representative per level-b reduction, smallest index first.
  levelb_rep_.assign(static_cast<std::size_t>(g.ring.size) * g.ring.size * g.ring.size *
                         g.ring.size,
                     -1);
  for (int ti : t.torus.elems) {
    long code = g.element(ti).truncated(b).code();
    if (levelb_rep_[code] < 0) levelb_rep_[code] = ti;
  }

  decomp_.resize(lift.elems.size());
  for (std::size_t i = 0; i < lift.elems.size(); ++i) {
    int x = lift.elems[i];
    int ti = levelb_rep_[g.element(x).truncated(b).code()];
    if (ti < 0) throw std::logic_error("lift element has no torus part at level b");
    int ker = g.mul(g.inv(ti), x);
    int pos = kernel.position(ker);
    if (pos < 0) throw std::logic_error("lift decomposition left the congruence kernel");
    decomp_[i] = {ti, proj_[pos]};
  }

  pattern_.resize(g.num_classes());
  for (int c = 0; c < g.num_classes(); ++c) {
    int rep = g.class_reps()[c];
    for (int x : transversal) {
      int y = g.conj(rep, x);
      if (lift.contains(y)) pattern_[c].push_back(lift.position(y));
    }
  }
}

int DLContext::project_raw(int g_elem) const {
  const GroupTable& g = *G;
  const TorusData& t = *T;
  const RingEmbedding& emb = *t.emb;
  const TruncRing& E = *t.ext_ring;

  Mat2 m = embed_mat(emb, g.element(g_elem));
  Mat2 framed = (t.frame_inv * m) * t.frame;
  // Entries off the diagonal must vanish to order b, the diagonal must be
  // 1 mod t^b; then diag * unipotent recovers the matrix exactly.
  if (E.truncate(framed.e[1], b) != 0 || E.truncate(framed.e[2], b) != 0)
    throw std::logic_error("kernel element not congruent to 1 mod t^b off-diagonal");
  if (E.truncate(framed.e[0], b) != E.one() || E.truncate(framed.e[3], b) != E.one())
    throw std::logic_error("kernel element not congruent to 1 mod t^b on-diagonal");
  Mat2 diag{&E, {framed.e[0], 0, 0, framed.e[3]}};
  Mat2 back = (t.frame * diag) * t.frame_inv;
  Mat2 rational = unembed_mat(emb, back);  // Frobenius-fixedness check
  int idx = g.index_of(rational);
  if (!torus_b.contains(idx))
    throw std::logic_error("projected torus part escapes (T^b)^F");
  return idx;
}

int DLContext::iwahori_project(int g_elem) const {
  int pos = kernel.position(g_elem);
  if (pos < 0) throw std::invalid_argument("element outside the congruence kernel");
  return proj_[pos];
}

long DLContext::trivial_lift_zexp(const AbelianChar& theta, int x_elem) const {
  int pos = lift.position(x_elem);
  if (pos < 0) throw std::invalid_argument("element outside the lift subgroup");
  long m = theta.structure->exponent;
  return (theta.zeta_exp(decomp_[pos].first) + theta.zeta_exp(decomp_[pos].second)) % m;
}

CycloNum DLContext::trivial_lift_eval(const AbelianChar& theta, int x_elem) const {
  return CycloNum::root_of_unity(theta.structure->exponent, trivial_lift_zexp(theta, x_elem));
}

ClassFunction DLContext::character(const AbelianChar& theta) const {
  const GroupTable& g = *G;
  long m = theta.structure->exponent;
  std::vector<CycloNum> roots = roots_of_unity_table(m);
  ClassFunction out(g);
  for (int c = 0; c < g.num_classes(); ++c) {
    CycloNum acc;
    for (int pos : pattern_[c]) {
      long z = (theta.zeta_exp(decomp_[pos].first) + theta.zeta_exp(decomp_[pos].second)) % m;
      acc += roots[z];
    }
    out.values[c] = acc;
  }
  return out;
}

bool is_regular_semisimple(const GroupTable& g, int elem) {
  return g.is_semisimple(elem) && !g.is_central(elem);
}

int find_conjugator_into_t1(const GroupTable& g, const TorusData& t, int s_elem) {
  for (long h = 0; h < g.order(); ++h)
    if (t.level_one.contains(g.conj(s_elem, static_cast<int>(h)))) return static_cast<int>(h);
  return -1;
}

CycloNum regular_ss_value_with(const GroupTable& g, const TorusData& t,
                               const AbelianChar& theta, int s_elem, int c_elem) {
  if (!is_regular_semisimple(g, s_elem))
    throw std::invalid_argument("element is not regular semisimple");
  if (c_elem < 0) return CycloNum::zero();
  int sc = g.conj(s_elem, c_elem);
  CycloNum acc;
  for (int w : t.weyl_reps) acc += theta.eval(g.conj(sc, w));
  return acc;
}

CycloNum regular_ss_value(const GroupTable& g, const TorusData& t, const AbelianChar& theta,
                          int s_elem) {
  return regular_ss_value_with(g, t, theta, s_elem, find_conjugator_into_t1(g, t, s_elem));
}

ClassFunction classical_dl_level1(const GroupTable& g, const TorusData& t,
                                  const AbelianChar& theta) {
  if (g.ring.r != 1) throw std::invalid_argument("classical table is for level r = 1");
  const TruncRing& R = g.ring;

  if (t.kind == TorusData::Kind::split) {
    // Principal series: induce theta from the Borel, trivially extended
    // over the unipotent radical.
    std::vector<int> borel;
    for (long a = 0; a < R.size; ++a) {
      if (!R.is_unit(static_cast<int>(a))) continue;
      for (long d = 0; d < R.size; ++d) {
        if (!R.is_unit(static_cast<int>(d))) continue;
        for (long u = 0; u < R.size; ++u)
          borel.push_back(g.index_of(
              Mat2{&R, {static_cast<int>(a), static_cast<int>(u), 0, static_cast<int>(d)}}));
      }
    }
    Subgroup B(g, std::move(borel), false);
    auto lift_eval = [&](int x) {
      const Mat2& m = g.element(x);
      int diag = g.index_of(Mat2{&R, {m.e[0], 0, 0, m.e[3]}});
      return theta.eval(diag);
    };
    return induce(B, lift_eval);
  }

  // Nonsplit: the virtual character with sign pinned so that regular
  // semisimple values match the Weyl-sum formula.
  int q = R.field.size;
  ClassFunction out(g);
  for (int c = 0; c < g.num_classes(); ++c) {
    int rep = g.class_reps()[c];
    auto [s, u] = g.jordan(rep);
    if (g.is_central(s)) {
      if (!t.torus.contains(s)) throw std::logic_error("central element missing from torus");
      CycloNum th = theta.eval(s);
      if (u == g.identity())
        out.values[c] = Rational(-(q - 1)) * th;  // central: -(q-1) theta(z)
      else
        out.values[c] = th;  // z times nontrivial unipotent: theta(z)
    } else {
      out.values[c] = regular_ss_value(g, t, theta, s);
    }
  }
  return out;
}

}  // namespace dlgreen
