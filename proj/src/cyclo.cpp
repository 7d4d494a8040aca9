#include "dlgreen/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dlgreen {

namespace {

// Exact division of integer polynomials, used to peel cyclotomic factors
// out of x^n - 1.  Remainder must come out zero.
std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> quot(num.size() - den.size() + 1, 0);
  for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
    long lead = num[i + den.size() - 1];
    if (lead % den.back() != 0) throw std::logic_error("cyclotomic division not exact");
    long q = lead / den.back();
    quot[i] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
  }
  for (long c : num)
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

std::mutex g_poly_mutex;
std::map<long, std::vector<long>> g_poly_cache;

const std::vector<long>& cyclotomic_poly_locked(long n) {
  auto it = g_poly_cache.find(n);
  if (it != g_poly_cache.end()) return it->second;
  std::vector<long> f(n + 1, 0);  // x^n - 1
  f[0] = -1;
  f[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) f = poly_divide_exact(std::move(f), cyclotomic_poly_locked(d));
  return g_poly_cache.emplace(n, std::move(f)).first->second;
}

// Per-modulus context: Phi_N and the canonical forms of zeta^j for
// j in [0, N), which drive reduction, embedding and conjugation.
struct CycloCtx {
  long n = 1;
  int deg = 1;
  std::vector<long> phi;
  std::vector<std::vector<Rational>> power;  // power[j] = zeta^j mod Phi_N
};

std::mutex g_ctx_mutex;
std::map<long, CycloCtx> g_ctx_cache;

const CycloCtx& ctx_for(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
  std::lock_guard<std::mutex> lock(g_ctx_mutex);
  auto it = g_ctx_cache.find(n);
  if (it != g_ctx_cache.end()) return it->second;

  CycloCtx ctx;
  ctx.n = n;
  {
    std::lock_guard<std::mutex> plock(g_poly_mutex);
    ctx.phi = cyclotomic_poly_locked(n);
  }
  ctx.deg = static_cast<int>(ctx.phi.size()) - 1;

  // zeta^{j+1} = shift of zeta^j, with overflow into lower powers via
  // x^deg = -(phi_0 + phi_1 x + ... ) since Phi_N is monic.
  ctx.power.resize(n);
  ctx.power[0].assign(ctx.deg, 0);
  ctx.power[0][0] = 1;
  for (long j = 1; j < n; ++j) {
    const auto& prev = ctx.power[j - 1];
    std::vector<Rational> cur(ctx.deg, 0);
    Rational carry = prev[ctx.deg - 1];
    for (int i = ctx.deg - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (carry != 0)
      for (int i = 0; i < ctx.deg; ++i) cur[i] -= carry * ctx.phi[i];
    ctx.power[j] = std::move(cur);
  }
  return g_ctx_cache.emplace(n, std::move(ctx)).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  return cyclotomic_poly_locked(n);
}

CycloNum::CycloNum() : n_(1), c_(1, Rational(0)) {}

CycloNum::CycloNum(Rational c) : n_(1), c_(1, std::move(c)) {}

CycloNum::CycloNum(long c) : n_(1), c_(1, Rational(c)) {}

CycloNum CycloNum::root_of_unity(long n, long k) {
  const CycloCtx& ctx = ctx_for(n);
  long j = ((k % n) + n) % n;
  CycloNum z;
  z.n_ = n;
  z.c_ = ctx.power[j];
  return z;
}

CycloNum CycloNum::embedded(long n) const {
  if (n % n_ != 0) throw std::invalid_argument("embedding target modulus not a multiple");
  if (n == n_) return *this;
  const CycloCtx& ctx = ctx_for(n);
  long step = n / n_;
  CycloNum z;
  z.n_ = n;
  z.c_.assign(ctx.deg, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& pw = ctx.power[(j * step) % n];
    for (int i = 0; i < ctx.deg; ++i) z.c_[i] += c_[j] * pw[i];
  }
  return z;
}

CycloNum CycloNum::operator-() const {
  CycloNum z = *this;
  for (auto& c : z.c_) c = -c;
  return z;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  long n = std::lcm(n_, o.n_);
  CycloNum a = embedded(n), b = o.embedded(n);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.n_ == n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  *this = *this + o;
  return *this;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  long n = std::lcm(n_, o.n_);
  CycloNum a = embedded(n), b = o.embedded(n);
  const CycloCtx& ctx = ctx_for(n);
  int deg = ctx.deg;
  std::vector<Rational> conv(2 * deg - 1, 0);
  for (int i = 0; i < deg; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  CycloNum z;
  z.n_ = n;
  z.c_.assign(deg, 0);
  for (int i = 0; i < deg && i < static_cast<int>(conv.size()); ++i) z.c_[i] = conv[i];
  for (int j = deg; j < 2 * deg - 1; ++j) {
    if (conv[j] == 0) continue;
    const auto& pw = ctx.power[j % n];  // j < 2 deg - 1 < 2N, reduce mod N
    for (int i = 0; i < deg; ++i) z.c_[i] += conv[j] * pw[i];
  }
  return z;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  *this = *this * o;
  return *this;
}

namespace {

// Extended Euclid over Q[x]; returns u with u*a = gcd (mod m), where the
// gcd is forced to be a nonzero constant because m = Phi_N is irreducible.
std::vector<Rational> poly_inverse_mod(std::vector<Rational> a, const std::vector<long>& m) {
  auto deg = [](const std::vector<Rational>& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return static_cast<long>(-1);
  };
  std::vector<Rational> r0(m.begin(), m.end()), r1 = std::move(a);
  std::vector<Rational> u0{0}, u1{1};
  while (deg(r1) > 0) {
    long d0 = deg(r0), d1 = deg(r1);
    // one reduction step of r0 by r1
    while (d0 >= d1 && d0 >= 0) {
      Rational q = r0[d0] / r1[d1];
      if (u0.size() < u1.size() + static_cast<std::size_t>(d0 - d1))
        u0.resize(u1.size() + d0 - d1, 0);
      for (long i = 0; i <= d1; ++i) r0[i + d0 - d1] -= q * r1[i];
      for (std::size_t i = 0; i < u1.size(); ++i) u0[i + d0 - d1] -= q * u1[i];
      d0 = deg(r0);
    }
    std::swap(r0, r1);
    std::swap(u0, u1);
  }
  long d1 = deg(r1);
  if (d1 != 0) throw std::domain_error("division by zero in cyclotomic field");
  Rational lead = r1[0];
  for (auto& c : u1) c /= lead;
  return u1;
}

}  // namespace

CycloNum CycloNum::inverted() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  const CycloCtx& ctx = ctx_for(n_);
  std::vector<Rational> inv = poly_inverse_mod(c_, ctx.phi);
  CycloNum z;
  z.n_ = n_;
  z.c_.assign(ctx.deg, 0);
  for (std::size_t i = 0; i < inv.size() && i < z.c_.size(); ++i) z.c_[i] = inv[i];
  // inv may formally have degree >= deg before trimming zero leads; anything
  // beyond deg-1 must be zero since it was reduced against Phi.
  for (std::size_t i = z.c_.size(); i < inv.size(); ++i)
    if (inv[i] != 0) throw std::logic_error("inverse not reduced");
  return z;
}

CycloNum CycloNum::conjugated() const {
  if (n_ == 1 || n_ == 2) return *this;
  const CycloCtx& ctx = ctx_for(n_);
  CycloNum z;
  z.n_ = n_;
  z.c_.assign(ctx.deg, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& pw = ctx.power[(j * (n_ - 1)) % n_];
    for (int i = 0; i < ctx.deg; ++i) z.c_[i] += c_[j] * pw[i];
  }
  return z;
}

bool CycloNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> CycloNum::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

bool CycloNum::is_integer() const {
  auto r = as_rational();
  return r && r->get_den() == 1;
}

bool CycloNum::operator==(const CycloNum& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  long n = std::lcm(n_, o.n_);
  return embedded(n).c_ == o.embedded(n).c_;
}

std::string CycloNum::str() const {
  if (auto r = as_rational()) return r->get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (first) {
      if (c < 0) out << "-", c = -c;
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      out << "z" << n_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

CycloNum operator*(const Rational& a, const CycloNum& z) {
  CycloNum out = z;
  for (auto& c : out.c_) c *= a;
  return out;
}

std::vector<CycloNum> roots_of_unity_table(long n) {
  std::vector<CycloNum> table;
  table.reserve(n);
  for (long k = 0; k < n; ++k) table.push_back(CycloNum::root_of_unity(n, k));
  return table;
}

}  // namespace dlgreen
