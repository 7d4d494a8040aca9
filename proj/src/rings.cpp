#include "dlgreen/rings.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace dlgreen {

namespace {

constexpr int kFieldTableLimit = 1024;
constexpr long kRingTableLimit = 512;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- dense polynomial arithmetic over F_p, used only during field setup ---

using Poly = std::vector<int>;  // constant first, may have zero leads

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  int dm = poly_deg(m);
  for (int i = static_cast<int>(c.size()) - 1; i >= dm; --i) {
    if (c[i] == 0) continue;
    int q = c[i] % p;  // m is monic
    for (int j = 0; j <= dm; ++j) c[i - dm + j] = ((c[i - dm + j] - q * m[j]) % p + p) % p;
  }
  c.resize(dm);
  return c;
}

Poly poly_powmod_xq(const Poly& m, int p, int reps) {
  // x^(p^reps) mod m, by repeated p-th powering
  int dm = poly_deg(m);
  Poly x(dm, 0);
  if (dm == 1) {
    // x reduces to a constant
    x[0] = ((-m[0]) % p + p) % p;
  } else {
    x[1] = 1;
  }
  for (int step = 0; step < reps; ++step) {
    // x <- x^p by square-and-multiply on the exponent p
    Poly acc(dm, 0);
    acc[0] = 1;
    Poly base = x;
    int e = p;
    while (e > 0) {
      if (e & 1) acc = poly_mulmod(acc, base, m, p);
      base = poly_mulmod(base, base, m, p);
      e >>= 1;
    }
    x = std::move(acc);
  }
  return x;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  auto mod_inverse = [p](int v) {
    int r = 1, e = p - 2, base = ((v % p) + p) % p;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  while (poly_deg(b) >= 0) {
    int db = poly_deg(b), da = poly_deg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    int s = a[da] * mod_inverse(b[db]) % p;
    for (int j = 0; j <= db; ++j)
      a[da - db + j] = ((a[da - db + j] - s * b[j]) % p + p) % p;
    if (poly_deg(a) < poly_deg(b)) std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility: f monic of degree k over F_p is irreducible iff
// x^(p^k) = x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for each prime l | k.
bool poly_irreducible(const Poly& f, int p, int k) {
  Poly xk = poly_powmod_xq(f, p, k);
  Poly x(std::max(poly_deg(f), 2), 0);
  if (poly_deg(f) == 1)
    x[0] = ((-f[0]) % p + p) % p;
  else
    x[1] = 1;
  x.resize(xk.size(), 0);
  if (xk != x) return false;
  int kk = k;
  for (int l = 2; l <= kk; ++l) {
    if (kk % l != 0) continue;
    while (kk % l == 0) kk /= l;
    Poly xj = poly_powmod_xq(f, p, k / l);
    Poly diff = xj;
    diff.resize(std::max<std::size_t>(diff.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = ((diff[i] - x[i]) % p + p) % p;
    Poly g = poly_gcd(f, diff, p);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::mutex g_field_mutex;
std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> g_fields;

std::mutex g_ring_mutex;
std::map<std::pair<const FiniteField*, int>, std::unique_ptr<TruncRing>> g_rings;

}  // namespace

const FiniteField& FiniteField::make(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("field degree must be >= 1");
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto key = std::make_pair(p, k);
  auto it = g_fields.find(key);
  if (it == g_fields.end())
    it = g_fields.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, k))).first;
  return *it->second;
}

FiniteField::FiniteField(int p_, int k_) : p(p_), k(k_) {
  long sz = 1;
  for (int i = 0; i < k; ++i) {
    sz *= p;
    if (sz > (1 << 16)) throw std::invalid_argument("field too large (> 2^16)");
  }
  size = static_cast<int>(sz);

  // Smallest monic irreducible of degree k, lexicographic on the
  // coefficient sequence (c_0, c_1, ...) with the constant term ranked
  // first.  Enumerate that order directly.
  std::vector<int> low(k, 0);
  bool found = false;
  while (true) {
    Poly f(low.begin(), low.end());
    f.push_back(1);
    if (poly_irreducible(f, p, k)) {
      modulus.assign(f.begin(), f.end());
      found = true;
      break;
    }
    int i = k - 1;
    while (i >= 0 && low[i] == p - 1) low[i--] = 0;
    if (i < 0) break;
    ++low[i];
  }
  if (!found) throw std::logic_error("no irreducible polynomial found");

  tabled_ = size <= kFieldTableLimit;
  if (tabled_) {
    add_tab_.resize(static_cast<std::size_t>(size) * size);
    mul_tab_.resize(static_cast<std::size_t>(size) * size);
    neg_tab_.resize(size);
    inv_tab_.assign(size, 0);
    frob_tab_.resize(size);
    for (int a = 0; a < size; ++a) {
      int na = 0, base = 1;
      for (int t = a, i = 0; i < k; ++i, t /= p) {
        na += ((p - t % p) % p) * base;
        base *= p;
      }
      neg_tab_[a] = static_cast<uint16_t>(na);
      for (int b = 0; b < size; ++b) {
        int s = 0;
        base = 1;
        for (int x = a, y = b, i = 0; i < k; ++i, x /= p, y /= p) {
          s += ((x % p) + (y % p)) % p * base;
          base *= p;
        }
        add_tab_[static_cast<std::size_t>(a) * size + b] = static_cast<uint16_t>(s);
        mul_tab_[static_cast<std::size_t>(a) * size + b] = static_cast<uint16_t>(mul_raw(a, b));
      }
    }
    for (int a = 1; a < size; ++a) inv_tab_[a] = static_cast<uint16_t>(pow(a, size - 2));
    for (int a = 0; a < size; ++a) frob_tab_[a] = static_cast<uint16_t>(pow(a, p));
  }

  // smallest multiplicative generator
  auto primes = prime_factors(size - 1);
  for (int g = 1; g < size; ++g) {
    bool ok = true;
    for (long l : primes)
      if (pow(g, (size - 1) / l) == 1) {
        ok = false;
        break;
      }
    if (ok || size == 2) {
      gen_ = g;
      break;
    }
  }
}

int FiniteField::mul_raw(int a, int b) const {
  Poly pa(k), pb(k);
  for (int i = 0, t = a; i < k; ++i, t /= p) pa[i] = t % p;
  for (int i = 0, t = b; i < k; ++i, t /= p) pb[i] = t % p;
  Poly c = poly_mulmod(pa, pb, Poly(modulus.begin(), modulus.end()), p);
  int code = 0, base = 1;
  for (int i = 0; i < k; ++i, base *= p) code += (i < static_cast<int>(c.size()) ? c[i] : 0) * base;
  return code;
}

int FiniteField::add(int a, int b) const {
  if (tabled_) return add_tab_[static_cast<std::size_t>(a) * size + b];
  int s = 0, base = 1;
  for (int i = 0; i < k; ++i, a /= p, b /= p, base *= p) s += ((a % p) + (b % p)) % p * base;
  return s;
}

int FiniteField::neg(int a) const {
  if (tabled_) return neg_tab_[a];
  int s = 0, base = 1;
  for (int i = 0; i < k; ++i, a /= p, base *= p) s += ((p - a % p) % p) * base;
  return s;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
  if (tabled_) return mul_tab_[static_cast<std::size_t>(a) * size + b];
  return mul_raw(a, b);
}

int FiniteField::pow(int a, long e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  int r = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  if (tabled_) return inv_tab_[a];
  return pow(a, size - 2);
}

int FiniteField::frobenius_p(int a) const {
  if (tabled_) return frob_tab_[a];
  return pow(a, p);
}

int FiniteField::frobenius(int a, int q) const {
  int reps = 0;
  long qq = 1;
  while (qq < q) {
    qq *= p;
    ++reps;
  }
  if (qq != q) throw std::invalid_argument("frobenius base is not a power of p");
  for (int i = 0; i < reps; ++i) a = frobenius_p(a);
  return a;
}

long FiniteField::element_order(int a) const {
  if (a == 0) throw std::domain_error("order of zero");
  long ord = 1;
  int x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

// ---------------------------------------------------------------------------

const TruncRing& TruncRing::make(const FiniteField& field, int r) {
  if (r < 0) throw std::invalid_argument("ring level must be >= 0");
  std::lock_guard<std::mutex> lock(g_ring_mutex);
  auto key = std::make_pair(&field, r);
  auto it = g_rings.find(key);
  if (it == g_rings.end())
    it = g_rings.emplace(key, std::unique_ptr<TruncRing>(new TruncRing(field, r))).first;
  return *it->second;
}

TruncRing::TruncRing(const FiniteField& f, int r_) : field(f), r(r_) {
  size = 1;
  for (int i = 0; i < r; ++i) {
    size *= f.size;
    if (size > (1L << 24)) throw std::invalid_argument("truncated ring too large");
  }
  tabled_ = size <= kRingTableLimit;
  if (tabled_) {
    add_tab_.resize(static_cast<std::size_t>(size) * size);
    mul_tab_.resize(static_cast<std::size_t>(size) * size);
    neg_tab_.resize(size);
    inv_tab_.assign(size, -1);
    for (long a = 0; a < size; ++a) {
      long na = 0, base = 1;
      for (long t = a, i = 0; i < r; ++i, t /= f.size, base *= f.size)
        na += static_cast<long>(f.neg(static_cast<int>(t % f.size))) * base;
      neg_tab_[a] = static_cast<int32_t>(na);
      for (long b = 0; b < size; ++b) {
        long s = 0;
        base = 1;
        for (long x = a, y = b, i = 0; i < r; ++i, x /= f.size, y /= f.size, base *= f.size)
          s += static_cast<long>(
                   f.add(static_cast<int>(x % f.size), static_cast<int>(y % f.size))) *
               base;
        add_tab_[static_cast<std::size_t>(a) * size + b] = static_cast<int32_t>(s);
        mul_tab_[static_cast<std::size_t>(a) * size + b] =
            static_cast<int32_t>(mul_raw(static_cast<int>(a), static_cast<int>(b)));
      }
    }
    for (long a = 0; a < size; ++a)
      if (is_unit(static_cast<int>(a)))
        inv_tab_[a] = static_cast<int32_t>(inv_raw(static_cast<int>(a)));
  }
}

int TruncRing::coeff(int a, int i) const {
  if (i < 0 || i >= r) return 0;
  long t = a;
  for (int j = 0; j < i; ++j) t /= field.size;
  return static_cast<int>(t % field.size);
}

int TruncRing::from_coeffs(const std::vector<int>& c) const {
  long code = 0, base = 1;
  for (int i = 0; i < r; ++i, base *= field.size)
    code += static_cast<long>(i < static_cast<int>(c.size()) ? c[i] : 0) * base;
  return static_cast<int>(code);
}

std::vector<int> TruncRing::coeffs(int a) const {
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i, a /= field.size) c[i] = a % field.size;
  return c;
}

int TruncRing::add(int a, int b) const {
  if (tabled_) return add_tab_[static_cast<std::size_t>(a) * size + b];
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = field.add(coeff(a, i), coeff(b, i));
  return from_coeffs(c);
}

int TruncRing::neg(int a) const {
  if (tabled_) return neg_tab_[a];
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = field.neg(coeff(a, i));
  return from_coeffs(c);
}

int TruncRing::sub(int a, int b) const { return add(a, neg(b)); }

int TruncRing::mul_raw(int a, int b) const {
  std::vector<int> c(r, 0);
  for (int i = 0; i < r; ++i) {
    int ai = coeff(a, i);
    if (ai == 0) continue;
    for (int j = 0; i + j < r; ++j) c[i + j] = field.add(c[i + j], field.mul(ai, coeff(b, j)));
  }
  return from_coeffs(c);
}

int TruncRing::mul(int a, int b) const {
  if (tabled_) return mul_tab_[static_cast<std::size_t>(a) * size + b];
  return mul_raw(a, b);
}

int TruncRing::inv_raw(int a) const {
  // Newton lifting from the residue-field inverse: x <- x(2 - ax).
  if (!is_unit(a)) throw std::domain_error("non-unit");
  if (r == 0) return 0;
  int x = field.inv(coeff(a, 0));  // constant series
  int two = add(one(), one());
  for (int steps = 1; steps < r; steps *= 2) x = mul_raw(x, sub(two, mul_raw(a, x)));
  return x;
}

int TruncRing::inv(int a) const {
  if (!is_unit(a)) throw std::domain_error("non-unit");
  if (tabled_) return inv_tab_[a];
  return inv_raw(a);
}

int TruncRing::truncate(int a, int lvl) const {
  if (lvl >= r) return a;
  std::vector<int> c(r, 0);
  for (int i = 0; i < lvl; ++i) c[i] = coeff(a, i);
  return from_coeffs(c);
}

int TruncRing::frobenius(int a, int q) const {
  std::vector<int> c(r);
  for (int i = 0; i < r; ++i) c[i] = field.frobenius(coeff(a, i), q);
  return from_coeffs(c);
}

long TruncRing::unit_count() const {
  if (r == 0) return 1;
  long n = field.size - 1;
  for (int i = 1; i < r; ++i) n *= field.size;
  return n;
}

int reduce_to_level(const TruncRing& ring, int a, int lvl) {
  if (lvl > ring.r) throw std::invalid_argument("reduction level exceeds ring level");
  const TruncRing& target = TruncRing::make(ring.field, lvl);
  std::vector<int> c(lvl);
  for (int i = 0; i < lvl; ++i) c[i] = ring.coeff(a, i);
  return target.from_coeffs(c);
}

int ring_norm(const TruncRing& ring, int a, int q) {
  if (!ring.is_unit(a)) throw std::domain_error("norm of non-unit");
  return ring.mul(a, ring.frobenius(a, q));
}

int ring_trace(const TruncRing& ring, int a, int q) {
  return ring.add(a, ring.frobenius(a, q));
}

// ---------------------------------------------------------------------------

FieldEmbedding::FieldEmbedding(const FiniteField& sub_, const FiniteField& big_)
    : sub(sub_), big(big_) {
  if (sub.p != big.p || big.k % sub.k != 0)
    throw std::invalid_argument("no field embedding: incompatible degrees");
  // Roots of sub.modulus inside big; the smallest code gives the embedding.
  int root = -1;
  for (int x = 0; x < big.size; ++x) {
    int acc = 0;
    for (int i = sub.k; i >= 0; --i) acc = big.add(big.mul(acc, x), sub.modulus[i] % sub.p);
    if (acc == 0) {
      root = x;
      break;
    }
  }
  if (root < 0) throw std::logic_error("modulus has no root in extension field");
  fwd_.resize(sub.size);
  back_.assign(big.size, -1);
  for (int a = 0; a < sub.size; ++a) {
    int img = 0, xpow = 1;
    for (int i = 0, t = a; i < sub.k; ++i, t /= sub.p) {
      img = big.add(img, big.mul(t % sub.p, xpow));
      xpow = big.mul(xpow, root);
    }
    fwd_[a] = img;
    back_[img] = a;
  }
}

RingEmbedding::RingEmbedding(const TruncRing& sub_, const TruncRing& big_)
    : sub(sub_), big(big_), femb(sub_.field, big_.field) {
  if (sub.r != big.r) throw std::invalid_argument("ring embedding needs equal levels");
  fwd_.resize(sub.size);
  for (long a = 0; a < sub.size; ++a) {
    std::vector<int> c(sub.r);
    for (int i = 0; i < sub.r; ++i) c[i] = femb.map(sub.coeff(static_cast<int>(a), i));
    fwd_[a] = big.from_coeffs(c);
  }
}

int RingEmbedding::map(int a) const { return fwd_[a]; }

int RingEmbedding::preimage(int a) const {
  std::vector<int> c(big.r);
  for (int i = 0; i < big.r; ++i) {
    int pre = femb.preimage(big.coeff(a, i));
    if (pre < 0) return -1;
    c[i] = pre;
  }
  return sub.from_coeffs(c);
}

}  // namespace dlgreen
