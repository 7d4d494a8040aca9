#include "dlgreen/tori.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlgreen {

AbelianStructure::AbelianStructure(const Subgroup& s) : G(s.parent) {
  if (!s.is_abelian()) throw std::invalid_argument("subgroup is not abelian");
  size = s.order();

  const GroupTable& g = *G;
  std::vector<char> current(g.order(), 0);
  current[g.identity()] = 1;
  long current_size = 1;

  auto quotient_order = [&](int x) {
    long m = 1;
    int y = x;
    while (!current[y]) {
      y = g.mul(y, x);
      ++m;
    }
    return m;
  };

  while (current_size < size) {
    long best_m = 0;
    for (int x : s.elems) best_m = std::max(best_m, quotient_order(x));
    int pick = -1;
    for (int x : s.elems) {
      if (quotient_order(x) == best_m && g.element_order(x) == best_m) {
        pick = x;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("cyclic peeling found no clean factor");
    factors.push_back({pick, best_m});
    // close current under the new generator
    std::vector<int> members;
    for (int y : s.elems)
      if (current[y]) members.push_back(y);
    for (int y : members) {
      int z = y;
      for (long e = 1; e < best_m; ++e) {
        z = g.mul(z, pick);
        if (!current[z]) {
          current[z] = 1;
          ++current_size;
        }
      }
    }
  }

  exponent = 1;
  for (const auto& f : factors) exponent = std::lcm(exponent, f.order);

  // Exhaustive coordinates; doubles as the independence check.
  std::vector<int> exps(factors.size(), 0);
  while (true) {
    int x = g.identity();
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (exps[i] != 0) x = g.mul(x, g.pow(factors[i].gen, exps[i]));
    if (!coords_.emplace(x, exps).second)
      throw std::logic_error("cyclic factors are not independent");
    std::size_t i = 0;
    for (; i < factors.size(); ++i) {
      if (++exps[i] < factors[i].order) break;
      exps[i] = 0;
    }
    if (i == factors.size()) break;
  }
  if (static_cast<long>(coords_.size()) != size)
    throw std::logic_error("factor presentation does not cover the subgroup");
  for (int y : s.elems)
    if (!coords_.count(y)) throw std::logic_error("factor presentation misses an element");
}

const std::vector<int>& AbelianStructure::coords_of(int elem_idx) const {
  auto it = coords_.find(elem_idx);
  if (it == coords_.end()) throw std::invalid_argument("element outside abelian subgroup");
  return it->second;
}

int AbelianStructure::element_at(const std::vector<int>& exps) const {
  const GroupTable& g = *G;
  int x = g.identity();
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (exps[i] != 0) x = g.mul(x, g.pow(factors[i].gen, exps[i]));
  return x;
}

AbelianChar::AbelianChar(const AbelianStructure& st, std::vector<int> e)
    : structure(&st), exps(std::move(e)) {
  if (exps.size() != st.factors.size()) throw std::invalid_argument("exponent vector size");
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = static_cast<int>(((exps[i] % st.factors[i].order) + st.factors[i].order) %
                               st.factors[i].order);
}

long AbelianChar::zeta_exp(int elem_idx) const {
  const auto& x = structure->coords_of(elem_idx);
  long m = structure->exponent;
  long acc = 0;
  for (std::size_t i = 0; i < exps.size(); ++i)
    acc = (acc + (m / structure->factors[i].order) * exps[i] % m * x[i]) % m;
  return acc;
}

CycloNum AbelianChar::eval(int elem_idx) const {
  return CycloNum::root_of_unity(structure->exponent, zeta_exp(elem_idx));
}

long AbelianChar::order() const {
  long o = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    long m = structure->factors[i].order;
    o = std::lcm(o, m / std::gcd(static_cast<long>(exps[i]), m));
  }
  return o;
}

bool AbelianChar::is_trivial() const {
  for (int e : exps)
    if (e != 0) return false;
  return true;
}

std::vector<AbelianChar> characters_enumerate(const AbelianStructure& st) {
  std::vector<AbelianChar> out;
  std::vector<int> exps(st.factors.size(), 0);
  while (true) {
    out.emplace_back(st, exps);
    std::size_t i = 0;
    for (; i < st.factors.size(); ++i) {
      if (++exps[i] < st.factors[i].order) break;
      exps[i] = 0;
    }
    if (i == st.factors.size()) break;
  }
  if (static_cast<long>(out.size()) != st.size)
    throw std::logic_error("character count mismatch");
  return out;
}

namespace {

// Entrywise Teichmueller lift of the level-1 reduction: the constant part
// of a matrix.  Ring codes of constants coincide with field codes.
Mat2 constant_part(const Mat2& m) {
  const TruncRing& R = *m.ring;
  return Mat2{&R, {R.coeff(m.e[0], 0), R.coeff(m.e[1], 0), R.coeff(m.e[2], 0),
                   R.coeff(m.e[3], 0)}};
}

}  // namespace

void TorusData::finish_common(const GroupTable& g, int w_structural) {
  structure = AbelianStructure(torus);

  // Rational Weyl representatives.  The normalizer of the finite set T^F
  // can degenerate (at q = 2 the split T^F consists of non-regular
  // elements and its rational normalizer is larger than 2|T^F|), so the
  // structural w is the anchor; where the normalizer is clean the coset
  // representatives are cross-checked against it.
  for (const auto& f : structure.factors)
    if (!torus.contains(g.conj(f.gen, w_structural)))
      throw std::logic_error("structural Weyl element does not normalize the torus");
  if (torus.contains(w_structural)) throw std::logic_error("structural Weyl element inside torus");
  if (!torus.contains(g.mul(w_structural, w_structural)))
    throw std::logic_error("structural Weyl element not an involution mod torus");

  std::vector<int> normalizer;
  for (long h = 0; h < g.order(); ++h) {
    bool ok = true;
    for (const auto& f : structure.factors)
      if (!torus.contains(g.conj(f.gen, static_cast<int>(h)))) {
        ok = false;
        break;
      }
    if (ok) normalizer.push_back(static_cast<int>(h));
  }
  if (static_cast<long>(normalizer.size()) == 2 * torus.order()) {
    int w = -1;
    for (int h : normalizer)
      if (!torus.contains(h)) {
        w = h;
        break;
      }
    weyl_reps = {g.identity(), w};
  } else {
    weyl_reps = {g.identity(), w_structural};
  }
}

std::unique_ptr<TorusData> TorusData::build_split(const GroupTable& g) {
  auto t = std::unique_ptr<TorusData>(new TorusData());
  t->kind = Kind::split;
  t->G = &g;
  const TruncRing& R = g.ring;

  std::vector<int> elems, ones, pros;
  for (long a = 0; a < R.size; ++a) {
    if (!R.is_unit(static_cast<int>(a))) continue;
    for (long d = 0; d < R.size; ++d) {
      if (!R.is_unit(static_cast<int>(d))) continue;
      int ac = static_cast<int>(a), dc = static_cast<int>(d);
      Mat2 m{&R, {ac, 0, 0, dc}};
      int idx = g.index_of(m);
      elems.push_back(idx);
      if (R.truncate(ac, 1) == ac && R.truncate(dc, 1) == dc) ones.push_back(idx);
      if (R.truncate(ac, 1) == R.one() && R.truncate(dc, 1) == R.one()) pros.push_back(idx);
    }
  }
  t->torus = Subgroup(g, std::move(elems), false);
  t->level_one = Subgroup(g, std::move(ones), false);
  t->pro_part = Subgroup(g, std::move(pros), false);

  const FiniteField& f2 = FiniteField::make(R.field.p, 2 * R.field.k);
  t->ext_ring = &TruncRing::make(f2, R.r);
  t->emb = std::make_unique<RingEmbedding>(R, *t->ext_ring);
  t->frame = Mat2::identity(*t->ext_ring);
  t->frame_inv = t->frame;

  Mat2 w{&R, {0, R.one(), R.one(), 0}};
  t->finish_common(g, g.index_of(w));
  return t;
}

std::unique_ptr<TorusData> TorusData::build_nonsplit(const GroupTable& g) {
  auto t = std::unique_ptr<TorusData>(new TorusData());
  t->kind = Kind::nonsplit;
  t->G = &g;
  const TruncRing& R = g.ring;
  const FiniteField& fq = R.field;

  const FiniteField& f2 = FiniteField::make(fq.p, 2 * fq.k);
  const TruncRing& E = TruncRing::make(f2, R.r);
  t->ext_ring = &E;
  t->emb = std::make_unique<RingEmbedding>(R, E);
  const FieldEmbedding& fe = t->emb->femb;

  // beta: the smallest element of F_{q^2} outside F_q; O_{r,2} = O_r[beta].
  int beta = -1;
  for (int x = 0; x < f2.size; ++x)
    if (fe.preimage(x) < 0) {
      beta = x;
      break;
    }
  if (beta < 0) throw std::logic_error("no generator for the quadratic extension");
  int beta_q = f2.frobenius(beta, fq.size);
  int c1f = fe.preimage(f2.neg(f2.add(beta, beta_q)));   // beta + beta^q = -c1
  int c0f = fe.preimage(f2.mul(beta, beta_q));           // beta beta^q = c0
  if (c1f < 0 || c0f < 0) throw std::logic_error("minimal polynomial not over the base field");
  int c1 = c1f, c0 = c0f;  // constants of O_r

  // Regular embedding of O_{r,2}^x: x = u + v beta acts on the basis
  // {1, beta} by [[u, -c0 v], [v, u - c1 v]].
  std::vector<int> elems, ones, pros;
  int beta_ring = beta;  // constant series in E
  for (long u = 0; u < R.size; ++u) {
    for (long v = 0; v < R.size; ++v) {
      int uc = static_cast<int>(u), vc = static_cast<int>(v);
      Mat2 m{&R, {uc, R.mul(R.neg(c0), vc), vc, R.sub(uc, R.mul(c1, vc))}};
      if (!m.is_invertible()) continue;
      int idx = g.index_of(m);
      elems.push_back(idx);
      int x = E.add(t->emb->map(uc), E.mul(t->emb->map(vc), beta_ring));
      t->elem_to_unit_.emplace(idx, x);
      t->unit_to_elem_.emplace(x, idx);
      bool u_const = R.truncate(uc, 1) == uc, v_const = R.truncate(vc, 1) == vc;
      if (u_const && v_const) ones.push_back(idx);
      if (R.coeff(uc, 0) == 1 && R.coeff(vc, 0) == 0) pros.push_back(idx);
    }
  }
  t->torus = Subgroup(g, std::move(elems), false);
  t->level_one = Subgroup(g, std::move(ones), false);
  t->pro_part = Subgroup(g, std::move(pros), false);

  // Frame: columns are the eigenvectors (-beta^q, 1) and (-beta, 1) of
  // multiplication by beta, so frame^{-1} M(x) frame = diag(x, Frob x).
  Mat2 P{&E, {f2.neg(beta_q), f2.neg(beta), E.one(), E.one()}};
  t->frame = P;
  t->frame_inv = P.inverse();

  // The matrix of Frob on the basis {1, beta} conjugates M(x) to M(x^q).
  Mat2 w{&R, {R.one(), R.neg(c1), 0, R.neg(R.one())}};
  t->finish_common(g, g.index_of(w));
  return t;
}

std::pair<int, int> TorusData::split_element(int ti) const {
  if (!torus.contains(ti)) throw std::invalid_argument("element outside the torus");
  const GroupTable& g = *G;
  int t1 = g.index_of(constant_part(g.element(ti)));
  int tpro = g.mul(g.inv(t1), ti);
  if (!level_one.contains(t1) || !pro_part.contains(tpro))
    throw std::logic_error("torus element fails the T1 x T^1 factorization");
  return {t1, tpro};
}

Subgroup TorusData::torus_kernel(int lvl) const {
  const GroupTable& g = *G;
  Mat2 id_trunc = Mat2::identity(g.ring).truncated(lvl);
  std::vector<int> ks;
  for (int i : torus.elems)
    if (g.element(i).truncated(lvl) == id_trunc) ks.push_back(i);
  return Subgroup(g, std::move(ks), false);
}

int TorusData::unit_of_elem(int idx) const {
  auto it = elem_to_unit_.find(idx);
  return it == elem_to_unit_.end() ? -1 : it->second;
}

int TorusData::elem_of_unit(int xcode) const {
  auto it = unit_to_elem_.find(xcode);
  return it == unit_to_elem_.end() ? -1 : it->second;
}

AbelianChar weyl_action(const TorusData& t, int w, const AbelianChar& theta) {
  const GroupTable& g = *t.G;
  long m = t.structure.exponent;
  std::vector<int> exps(t.structure.factors.size());
  for (std::size_t i = 0; i < t.structure.factors.size(); ++i) {
    const auto& f = t.structure.factors[i];
    int y = g.conj(f.gen, w);
    if (!t.torus.contains(y)) throw std::invalid_argument("element does not normalize the torus");
    long a = theta.zeta_exp(y);
    if (a * f.order % m != 0) throw std::logic_error("Weyl image is not a character value");
    exps[i] = static_cast<int>(a * f.order / m % f.order);
  }
  return AbelianChar(t.structure, std::move(exps));
}

bool weyl_fixes(const TorusData& t, int w, const AbelianChar& theta) {
  return weyl_action(t, w, theta) == theta;
}

AbelianChar char_multiply(const AbelianChar& theta, long other_modulus,
                          const std::function<long(int)>& other_zexp) {
  const AbelianStructure& st = *theta.structure;
  long m = st.exponent, m2 = other_modulus;
  long big = std::lcm(m, m2);
  std::vector<int> exps(st.factors.size());
  for (std::size_t i = 0; i < st.factors.size(); ++i) {
    const auto& f = st.factors[i];
    long a = (theta.zeta_exp(f.gen) * (big / m) + other_zexp(f.gen) * (big / m2)) % big;
    if (a * f.order % big != 0)
      throw std::invalid_argument("product is not multiplicative on the torus");
    exps[i] = static_cast<int>(a * f.order / big % f.order);
  }
  return AbelianChar(st, std::move(exps));
}

}  // namespace dlgreen
