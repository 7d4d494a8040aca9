#include "dlgreen/grp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dlgreen {

Mat2 Mat2::operator*(const Mat2& o) const {
  const TruncRing& R = *ring;
  return Mat2{ring,
              {R.add(R.mul(e[0], o.e[0]), R.mul(e[1], o.e[2])),
               R.add(R.mul(e[0], o.e[1]), R.mul(e[1], o.e[3])),
               R.add(R.mul(e[2], o.e[0]), R.mul(e[3], o.e[2])),
               R.add(R.mul(e[2], o.e[1]), R.mul(e[3], o.e[3]))}};
}

Mat2 Mat2::operator+(const Mat2& o) const {
  const TruncRing& R = *ring;
  return Mat2{ring, {R.add(e[0], o.e[0]), R.add(e[1], o.e[1]), R.add(e[2], o.e[2]),
                     R.add(e[3], o.e[3])}};
}

Mat2 Mat2::operator-(const Mat2& o) const {
  const TruncRing& R = *ring;
  return Mat2{ring, {R.sub(e[0], o.e[0]), R.sub(e[1], o.e[1]), R.sub(e[2], o.e[2]),
                     R.sub(e[3], o.e[3])}};
}

int Mat2::det() const {
  const TruncRing& R = *ring;
  return R.sub(R.mul(e[0], e[3]), R.mul(e[1], e[2]));
}

Mat2 Mat2::inverse() const {
  const TruncRing& R = *ring;
  int d = R.inv(det());
  return Mat2{ring, {R.mul(d, e[3]), R.mul(d, R.neg(e[1])), R.mul(d, R.neg(e[2])),
                     R.mul(d, e[0])}};
}

Mat2 Mat2::frobenius(int q) const {
  return Mat2{ring, {ring->frobenius(e[0], q), ring->frobenius(e[1], q),
                     ring->frobenius(e[2], q), ring->frobenius(e[3], q)}};
}

Mat2 Mat2::truncated(int lvl) const {
  return Mat2{ring, {ring->truncate(e[0], lvl), ring->truncate(e[1], lvl),
                     ring->truncate(e[2], lvl), ring->truncate(e[3], lvl)}};
}

long Mat2::code() const {
  long s = ring->size;
  return ((static_cast<long>(e[0]) * s + e[1]) * s + e[2]) * s + e[3];
}

Mat2 Mat2::from_code(const TruncRing& R, long code) {
  long s = R.size;
  Mat2 m;
  m.ring = &R;
  m.e[3] = static_cast<int>(code % s);
  code /= s;
  m.e[2] = static_cast<int>(code % s);
  code /= s;
  m.e[1] = static_cast<int>(code % s);
  m.e[0] = static_cast<int>(code / s);
  return m;
}

long gl2_order_formula(int q, int r) {
  long gl2_fq = static_cast<long>(q * q - 1) * (q * q - q);
  long n = gl2_fq;
  for (int i = 0; i < 4 * (r - 1); ++i) n *= q;
  return r == 0 ? 1 : n;
}

GroupTable::GroupTable(const TruncRing& ring_, long size_limit) : ring(ring_), p(ring_.field.p) {
  long s = ring.size;
  long codes = s * s * s * s;
  if (codes > (1L << 28)) throw std::invalid_argument("group enumeration budget exceeded");

  code_to_index_.assign(codes, -1);
  for (long c = 0; c < codes; ++c) {
    Mat2 m = Mat2::from_code(ring, c);
    if (!m.is_invertible()) continue;
    if (static_cast<long>(elems_.size()) >= size_limit)
      throw std::invalid_argument("group enumeration budget exceeded");
    code_to_index_[c] = static_cast<int32_t>(elems_.size());
    elems_.push_back(m);
  }
  long n = order();
  id_ = index_of(Mat2::identity(ring));

  inv_.resize(n);
  for (long i = 0; i < n; ++i) inv_[i] = index_of(elems_[i].inverse());

  order_.assign(n, 0);
  for (long i = 0; i < n; ++i) {
    long o = 1;
    int x = static_cast<int>(i);
    while (x != id_) {
      x = mul(x, static_cast<int>(i));
      ++o;
    }
    order_[i] = o;
  }

  // Jordan parts: split ord(g) = p^a m and pull both factors out of <g>.
  jordan_s_.resize(n);
  jordan_u_.resize(n);
  for (long i = 0; i < n; ++i) {
    long o = order_[i];
    long pa = 1;
    long m = o;
    while (m % p == 0) {
      m /= p;
      pa *= p;
    }
    if (pa == 1) {
      jordan_s_[i] = static_cast<int32_t>(i);
      jordan_u_[i] = id_;
      continue;
    }
    if (m == 1) {
      jordan_s_[i] = id_;
      jordan_u_[i] = static_cast<int32_t>(i);
      continue;
    }
    long alpha = 1;  // inverse of p^a mod m
    while ((pa % m) * alpha % m != 1) ++alpha;
    long es = pa * alpha % o;
    int sidx = pow(static_cast<int>(i), es);
    int uidx = mul(inv_[sidx], static_cast<int>(i));
    jordan_s_[i] = sidx;
    jordan_u_[i] = uidx;
  }

  // Conjugacy classes by orbit expansion; one sweep of G per new class.
  class_id_.assign(n, -1);
  for (long i = 0; i < n; ++i) {
    if (class_id_[i] >= 0) continue;
    int cid = static_cast<int>(class_reps_.size());
    class_reps_.push_back(static_cast<int>(i));
    long sz = 0;
    for (long h = 0; h < n; ++h) {
      int y = conj(static_cast<int>(i), static_cast<int>(h));
      if (class_id_[y] < 0) {
        class_id_[y] = cid;
        ++sz;
      }
    }
    class_sizes_.push_back(sz);
  }

  // Scalar matrices with unit entry; checked central against everything.
  for (long a = 0; a < ring.size; ++a) {
    if (!ring.is_unit(static_cast<int>(a))) continue;
    Mat2 z{&ring, {static_cast<int>(a), 0, 0, static_cast<int>(a)}};
    center_.push_back(index_of(z));
  }
  std::sort(center_.begin(), center_.end());
  for (int z : center_)
    for (long h = 0; h < n; ++h)
      if (conj(z, static_cast<int>(h)) != z)
        throw std::logic_error("scalar matrix not central");
}

int GroupTable::index_of(const Mat2& m) const {
  long c = m.code();
  int idx = code_to_index_[c];
  if (idx < 0) throw std::invalid_argument("matrix not in group");
  return idx;
}

int GroupTable::mul(int i, int j) const { return index_of(elems_[i] * elems_[j]); }

int GroupTable::conj(int x, int h) const {
  return index_of(elems_[inv_[h]] * elems_[x] * elems_[h]);
}

int GroupTable::pow(int i, long e) const {
  long o = order_[i];
  e %= o;
  if (e < 0) e += o;
  int acc = id_;
  int base = i;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool GroupTable::is_unipotent(int i) const {
  long o = order_[i];
  while (o % p == 0) o /= p;
  return o == 1;
}

bool GroupTable::is_unipotent_matrix_test(int i) const {
  Mat2 nmat = elems_[i] - Mat2::identity(ring);
  Mat2 acc = nmat;
  Mat2 zero{&ring, {0, 0, 0, 0}};
  int steps = 2 * std::max(ring.r, 1);
  for (int j = 1; j < steps; ++j) {
    if (acc == zero) return true;
    acc = acc * nmat;
  }
  return acc == zero;
}

Subgroup::Subgroup(const GroupTable& g, std::vector<int> elems_in, bool verify)
    : parent(&g), elems(std::move(elems_in)) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  member.assign(g.order(), 0);
  for (int e : elems) member[e] = 1;
  if (verify) {
    if (!contains(g.identity())) throw std::invalid_argument("subgroup misses identity");
    for (int a : elems) {
      if (!contains(g.inv(a))) throw std::invalid_argument("subgroup not inverse-closed");
      for (int b : elems)
        if (!contains(g.mul(a, b))) throw std::invalid_argument("subgroup not closed");
    }
  }
}

bool Subgroup::is_abelian() const {
  for (int a : elems)
    for (int b : elems)
      if (parent->mul(a, b) != parent->mul(b, a)) return false;
  return true;
}

int Subgroup::position(int i) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), i);
  if (it == elems.end() || *it != i) return -1;
  return static_cast<int>(it - elems.begin());
}

Subgroup GroupTable::congruence_kernel(int lvl) const {
  if (lvl < 0 || lvl > ring.r) throw std::invalid_argument("kernel level out of range");
  Mat2 idm = Mat2::identity(ring);
  Mat2 id_trunc = idm.truncated(lvl);
  std::vector<int> ks;
  for (long i = 0; i < order(); ++i)
    if (elems_[i].truncated(lvl) == id_trunc) ks.push_back(static_cast<int>(i));
  return Subgroup(*this, std::move(ks), false);
}

Subgroup GroupTable::centralizer(int s) const {
  std::vector<int> cs;
  for (long h = 0; h < order(); ++h)
    if (mul(static_cast<int>(h), s) == mul(s, static_cast<int>(h))) cs.push_back(static_cast<int>(h));
  return Subgroup(*this, std::move(cs), false);
}

std::vector<int> GroupTable::transporter_to(int s, const std::vector<char>& subset_mask) const {
  std::vector<int> hs;
  for (long h = 0; h < order(); ++h)
    if (subset_mask[conj(s, static_cast<int>(h))]) hs.push_back(static_cast<int>(h));
  return hs;
}

Subgroup GroupTable::generate(const std::vector<int>& gens) const {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  std::vector<char> seen(order(), 0);
  std::vector<int> work{id_}, out{id_};
  seen[id_] = 1;
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int g : gens) {
      int y = mul(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        work.push_back(y);
        out.push_back(y);
      }
    }
  }
  return Subgroup(*this, std::move(out), false);
}

std::vector<int> GroupTable::left_transversal(const Subgroup& h) const {
  std::vector<char> covered(order(), 0);
  std::vector<int> reps;
  for (long g = 0; g < order(); ++g) {
    if (covered[g]) continue;
    reps.push_back(static_cast<int>(g));
    for (int x : h.elems) covered[mul(static_cast<int>(g), x)] = 1;
  }
  return reps;
}

Subgroup GroupTable::whole_group() const {
  std::vector<int> all(order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(*this, std::move(all), false);
}

}  // namespace dlgreen
