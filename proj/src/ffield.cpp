#include "fixerlab/ffield.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#ifndef FIXERLAB_DEFAULT_DATA_DIR
#define FIXERLAB_DEFAULT_DATA_DIR "data"
#endif

namespace fixerlab {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<uint32_t, uint32_t> prime_power(uint64_t q) {
  if (q < 2) throw FieldError("not a prime power: " + std::to_string(q));
  uint64_t p = prime_factors(q).front();
  uint32_t f = 0;
  uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++f;
  }
  if (m != 1) throw FieldError("not a prime power: " + std::to_string(q));
  return {static_cast<uint32_t>(p), f};
}

bool is_prime_power(uint64_t q) {
  if (q < 2) return false;
  uint64_t p = prime_factors(q).front();
  while (q % p == 0) q /= p;
  return q == 1;
}

std::string data_dir() {
  if (const char *env = std::getenv("FIXERLAB_DATA"); env && *env) return env;
  return FIXERLAB_DEFAULT_DATA_DIR;
}

namespace {

// Dense polynomials over GF(p), low degree first, no trailing zeros.
using Poly = std::vector<uint32_t>;

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    int64_t k = r / nr;
    t -= k * nt;
    std::swap(t, nt);
    r -= k * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw FieldError("not invertible mod p");
  return static_cast<uint32_t>((t % p + p) % p);
}

Poly poly_mod(Poly a, const Poly &m, uint32_t p) {
  trim(a);
  uint32_t li = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    uint64_t c = uint64_t(a.back()) * li % p;
    size_t sh = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[sh + i] = static_cast<uint32_t>((a[sh + i] + uint64_t(p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly &a, const Poly &b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
  Poly out(r.begin(), r.end());
  trim(out);
  return out;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly &m, uint32_t p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    e >>= 1;
    if (e) base = poly_mod(poly_mul(base, base, p), m, p);
  }
  return r;
}

Poly poly_sub(Poly a, const Poly &b, uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly eval_at(const Poly &c, const Poly &y, const Poly &m, uint32_t p) {
  // Horner evaluation of c at y inside GF(p)[x]/(m).
  Poly acc;
  for (size_t k = c.size(); k-- > 0;) {
    acc = poly_mod(poly_mul(acc, y, p), m, p);
    if (acc.empty()) acc.resize(1, 0);
    acc[0] = (acc[0] + c[k]) % p;
    trim(acc);
  }
  return acc;
}

std::mutex g_conway_mu;
std::map<std::pair<uint32_t, uint32_t>, Poly> g_conway_cache;
bool g_conway_loaded = false;

void load_conway_file() {
  if (g_conway_loaded) return;
  g_conway_loaded = true;
  std::ifstream in(data_dir() + "/conway.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    uint32_t p, f;
    if (!(ss >> p >> f)) continue;
    Poly c(f + 1);
    for (auto &x : c) ss >> x;
    g_conway_cache[{p, f}] = c;
  }
}

}  // namespace

bool is_irreducible(uint32_t p, const std::vector<uint32_t> &poly) {
  Poly m(poly);
  trim(m);
  if (m.size() < 2) return false;
  uint32_t f = static_cast<uint32_t>(m.size() - 1);
  if (f == 1) return true;
  // Rabin: x^(p^f) = x and gcd(x^(p^(f/r)) - x, m) = 1 for primes r | f.
  auto xpow = [&](uint32_t k) {
    Poly r{0, 1};
    for (uint32_t i = 0; i < k; ++i) r = poly_powmod(r, p, m, p);
    return r;
  };
  Poly x{0, 1};
  if (poly_sub(xpow(f), x, p).size() != 0) return false;
  for (auto r : prime_factors(f)) {
    Poly g = poly_gcd(m, poly_sub(xpow(f / static_cast<uint32_t>(r)), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<uint32_t> compute_conway_polynomial(uint32_t p, uint32_t f) {
  if (!is_prime(p) || f == 0) throw FieldError("bad field parameters");
  uint64_t q = 1;
  for (uint32_t i = 0; i < f; ++i) q *= p;
  auto qfac = prime_factors(q - 1);
  std::vector<std::pair<uint32_t, Poly>> subs;
  for (uint32_t d = 1; d < f; ++d)
    if (f % d == 0) subs.emplace_back(d, conway_polynomial(p, d));
  // Candidates in Conway order: tuples (c_{f-1},...,c_0) ascending, with
  // coefficient a_i = (-1)^(f-i) c_i.
  std::vector<uint32_t> c(f, 0);
  Poly x{0, 1};
  if (f == 1) x = {0, 1};
  while (true) {
    Poly m(f + 1);
    m[f] = 1;
    for (uint32_t i = 0; i < f; ++i) {
      uint32_t ci = c[f - 1 - i];
      m[i] = ((f - i) % 2 == 0) ? ci : (p - ci) % p;
    }
    bool ok = m[0] != 0;
    if (ok) {
      Poly xx = poly_mod(x, m, p);
      if (poly_powmod(xx, q - 1, m, p) != Poly{1}) ok = false;
      for (size_t k = 0; ok && k < qfac.size(); ++k)
        if (poly_powmod(xx, (q - 1) / qfac[k], m, p) == Poly{1}) ok = false;
      for (size_t k = 0; ok && k < subs.size(); ++k) {
        uint64_t qd = 1;
        for (uint32_t i = 0; i < subs[k].first; ++i) qd *= p;
        Poly y = poly_powmod(xx, (q - 1) / (qd - 1), m, p);
        if (!eval_at(subs[k].second, y, m, p).empty()) ok = false;
      }
    }
    if (ok) return m;
    // increment the tuple
    int pos = static_cast<int>(f) - 1;
    while (pos >= 0 && ++c[pos] == p) c[pos--] = 0;
    if (pos < 0) throw FieldError("no Conway polynomial found");
  }
}

std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t f) {
  {
    std::lock_guard<std::mutex> lk(g_conway_mu);
    load_conway_file();
    auto it = g_conway_cache.find({p, f});
    if (it != g_conway_cache.end()) return it->second;
  }
  Poly c = compute_conway_polynomial(p, f);
  std::lock_guard<std::mutex> lk(g_conway_mu);
  g_conway_cache[{p, f}] = c;
  return c;
}

// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(uint32_t p, std::vector<uint32_t> poly) : p_(p), poly_(std::move(poly)) {
  if (!is_prime(p)) throw FieldError("characteristic must be prime");
  Poly m(poly_);
  trim(m);
  if (m.size() < 2 || m.back() != 1) throw FieldError("defining polynomial must be monic of degree >= 1");
  for (auto c : m)
    if (c >= p) throw FieldError("coefficient out of range");
  if (!is_irreducible(p, m)) throw FieldError("defining polynomial is reducible");
  f_ = static_cast<uint32_t>(m.size() - 1);
  uint64_t q = 1;
  for (uint32_t i = 0; i < f_; ++i) q *= p;
  if (q > (1u << 20)) throw FieldError("field too large");
  q_ = static_cast<uint32_t>(q);

  auto to_poly = [&](uint32_t code) {
    Poly a(f_);
    for (uint32_t i = 0; i < f_; ++i) {
      a[i] = code % p;
      code /= p;
    }
    trim(a);
    return a;
  };
  auto to_code = [&](const Poly &a) {
    uint32_t code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
  };
  auto order_is_full = [&](uint32_t code) {
    if (code == 0) return false;
    Poly g = to_poly(code);
    if (q_ == 2) return code == 1;
    for (auto r : prime_factors(q_ - 1))
      if (poly_powmod(g, (q_ - 1) / r, m, p) == Poly{1}) return false;
    return true;
  };
  uint32_t gen = (f_ == 1) ? (p - m[0]) % p : p;
  if (!order_is_full(gen)) {
    gen = 0;
    for (uint32_t c = 1; c < q_; ++c)
      if (order_is_full(c)) {
        gen = c;
        break;
      }
  }
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  Poly g = to_poly(gen);
  Poly cur{1};
  for (uint32_t k = 0; k < q_ - 1; ++k) {
    uint32_t code = to_code(cur);
    exp_[k] = exp_[k + q_ - 1] = code;
    log_[code] = k;
    cur = poly_mod(poly_mul(cur, g, p), m, p);
  }
  // Zech logarithms: log(1 + t^k).
  zech_.assign(q_ - 1, -1);
  for (uint32_t k = 0; k < q_ - 1; ++k) {
    Poly a = to_poly(exp_[k]);
    if (a.empty()) a = {0};
    a[0] = (a[0] + 1) % p;
    trim(a);
    uint32_t code = to_code(a);
    zech_[k] = code == 0 ? -1 : static_cast<int32_t>(log_[code]);
  }
  minus_one_log_ = (p == 2) ? 0 : (q_ - 1) / 2;
}

FieldPtr FieldCtx::make(uint32_t p, uint32_t f) {
  return std::make_shared<const FieldCtx>(p, conway_polynomial(p, f));
}

FieldPtr FieldCtx::with_polynomial(uint32_t p, std::vector<uint32_t> poly) {
  return std::make_shared<const FieldCtx>(p, std::move(poly));
}

FieldPtr FieldCtx::get(uint32_t q) {
  static std::mutex mu;
  static std::map<uint32_t, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }
  auto [p, f] = prime_power(q);
  FieldPtr F = make(p, f);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(q, F).first->second;
}

FFElem FieldCtx::elem(uint32_t code) const {
  if (code >= q_) throw FieldError("element code out of range");
  return {this, code};
}

FFElem FieldCtx::from_int(int64_t v) const {
  int64_t r = ((v % int64_t(p_)) + p_) % p_;
  return {this, static_cast<uint32_t>(r)};
}

FFElem FieldCtx::from_coeffs(const std::vector<uint32_t> &c) const {
  if (c.size() != f_) throw FieldError("coefficient vector has wrong length");
  uint32_t code = 0;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw FieldError("coefficient out of range");
    code = code * p_ + c[i];
  }
  return {this, code};
}

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  uint32_t la = log_[a], lb = log_[b];
  uint32_t k = lb >= la ? lb - la : lb + (q_ - 1) - la;
  int32_t z = zech_[k];
  if (z < 0) return 0;
  return exp_[la + static_cast<uint32_t>(z)];
}

uint32_t FieldCtx::neg(uint32_t a) const {
  if (a == 0 || p_ == 2) return a;
  return exp_[log_[a] + minus_one_log_];
}

uint32_t FieldCtx::inv(uint32_t a) const {
  if (a == 0) throw FieldError("division by zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t FieldCtx::pow(uint32_t a, int64_t k) const {
  if (a == 0) {
    if (k < 0) throw FieldError("division by zero");
    return k == 0 ? 1 : 0;
  }
  int64_t m = q_ - 1;
  int64_t e = (int64_t(log_[a]) * ((k % m + m) % m)) % m;
  return exp_[e];
}

uint32_t FieldCtx::frob(uint32_t a, int64_t i) const {
  if (a == 0) return 0;
  int64_t ii = ((i % int64_t(f_)) + f_) % f_;
  uint64_t e = log_[a];
  for (int64_t j = 0; j < ii; ++j) e = e * p_ % (q_ - 1);
  return exp_[e];
}

FFElem FieldCtx::frobenius(const FFElem &x, int64_t i) const { return {this, frob(x.code(), i)}; }

void FieldCtx::check_divisor(uint32_t f1) const {
  if (f1 == 0 || f_ % f1 != 0)
    throw FieldError("subfield degree " + std::to_string(f1) + " does not divide " + std::to_string(f_));
}

FFElem FieldCtx::rel_trace(const FFElem &x, uint32_t f1) const {
  check_divisor(f1);
  uint32_t acc = 0;
  for (uint32_t j = 0; j < f_ / f1; ++j) acc = add(acc, frob(x.code(), int64_t(f1) * j));
  return {this, acc};
}

FFElem FieldCtx::rel_norm(const FFElem &x, uint32_t f1) const {
  check_divisor(f1);
  uint32_t acc = 1;
  for (uint32_t j = 0; j < f_ / f1; ++j) acc = mul(acc, frob(x.code(), int64_t(f1) * j));
  return {this, acc};
}

bool FieldCtx::in_subfield(const FFElem &x, uint32_t f1) const {
  check_divisor(f1);
  return frob(x.code(), f1) == x.code();
}

std::vector<uint32_t> FieldCtx::subfield(uint32_t f1) const {
  check_divisor(f1);
  uint32_t q1 = 1;
  for (uint32_t i = 0; i < f1; ++i) q1 *= p_;
  std::vector<uint32_t> out{0};
  uint32_t step = (q_ - 1) / (q1 - 1);
  for (uint32_t k = 0; k < q1 - 1; ++k) out.push_back(exp_[uint64_t(k) * step]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
uint32_t fixed_degree(uint32_t f, int64_t i) {
  int64_t ii = ((i % int64_t(f)) + f) % f;
  return static_cast<uint32_t>(std::gcd<int64_t, int64_t>(ii, f));
}
}  // namespace

FFElem FieldCtx::hilbert90_additive(const FFElem &b, int64_t i) const {
  uint32_t g = fixed_degree(f_, i);
  if (!rel_trace(b, g).is_zero())
    throw FieldError("hilbert90_additive: trace to GF(p^" + std::to_string(g) + ") is nonzero, no solution");
  if (q_ > kSearchLimit) return hilbert90_additive_linear(b, i);
  for (uint32_t c = 0; c < q_; ++c)
    if (sub(frob(c, -i), c) == b.code()) return {this, c};
  throw FieldError("hilbert90_additive: search failed");
}

FFElem FieldCtx::hilbert90_additive_linear(const FFElem &b, int64_t i) const {
  uint32_t g = fixed_degree(f_, i);
  if (!rel_trace(b, g).is_zero()) throw FieldError("hilbert90_additive: trace nonzero, no solution");
  // The map c -> c^(phi^-i) - c is GF(p)-linear; solve A c = b by elimination.
  uint32_t n = f_;
  std::vector<std::vector<uint32_t>> A(n, std::vector<uint32_t>(n + 1, 0));
  uint32_t basis = 1;
  for (uint32_t j = 0; j < n; ++j, basis *= p_) {
    auto col = FFElem(this, sub(frob(basis, -i), basis)).coeffs();
    for (uint32_t r = 0; r < n; ++r) A[r][j] = col[r];
  }
  auto rhs = b.coeffs();
  for (uint32_t r = 0; r < n; ++r) A[r][n] = rhs[r];
  std::vector<int> pivcol;
  uint32_t row = 0;
  for (uint32_t col = 0; col < n && row < n; ++col) {
    uint32_t piv = row;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(A[piv], A[row]);
    uint32_t iv = inv_mod(A[row][col], p_);
    for (auto &v : A[row]) v = static_cast<uint32_t>(uint64_t(v) * iv % p_);
    for (uint32_t r = 0; r < n; ++r) {
      if (r == row || A[r][col] == 0) continue;
      uint64_t fct = A[r][col];
      for (uint32_t k = 0; k <= n; ++k) A[r][k] = static_cast<uint32_t>((A[r][k] + (p_ - fct) * A[row][k]) % p_);
    }
    pivcol.push_back(static_cast<int>(col));
    ++row;
  }
  for (uint32_t r = row; r < n; ++r)
    if (A[r][n] != 0) throw FieldError("hilbert90_additive: inconsistent system");
  std::vector<uint32_t> c(n, 0);
  for (uint32_t r = 0; r < row; ++r) c[pivcol[r]] = A[r][n];
  FFElem out = from_coeffs(c);
  if (sub(frob(out.code(), -i), out.code()) != b.code()) throw FieldError("hilbert90_additive: verification failed");
  return out;
}

FFElem FieldCtx::hilbert90_multiplicative(const FFElem &lambda, int64_t i) const {
  if (lambda.is_zero()) throw FieldError("hilbert90_multiplicative: lambda must be nonzero");
  uint32_t g = fixed_degree(f_, i);
  if (rel_norm(lambda, g).code() != 1)
    throw FieldError("hilbert90_multiplicative: norm to GF(p^" + std::to_string(g) + ") is not 1, no solution");
  if (q_ > kSearchLimit) return hilbert90_multiplicative_linear(lambda, i);
  for (uint32_t c = 1; c < q_; ++c)
    if (mul(frob(c, -i), inv(c)) == lambda.code()) return {this, c};
  throw FieldError("hilbert90_multiplicative: search failed");
}

FFElem FieldCtx::hilbert90_multiplicative_linear(const FFElem &lambda, int64_t i) const {
  uint32_t g = fixed_degree(f_, i);
  if (lambda.is_zero() || rel_norm(lambda, g).code() != 1)
    throw FieldError("hilbert90_multiplicative: norm is not 1, no solution");
  // mu = t^m: need m (p^(f-i) - 1) = log(lambda) mod q-1.
  int64_t M = q_ - 1;
  int64_t ii = ((-i % int64_t(f_)) + f_) % f_;
  int64_t e = 1;
  for (int64_t j = 0; j < ii; ++j) e = e * p_ % M;
  int64_t a = ((e - 1) % M + M) % M;
  int64_t l = log_[lambda.code()];
  int64_t d = std::gcd(a, M);
  if (l % d != 0) throw FieldError("hilbert90_multiplicative: congruence unsolvable");
  int64_t Md = M / d, m = 0;
  if (Md > 1) m = (l / d) % Md * inv_mod(static_cast<uint32_t>((a / d) % Md), static_cast<uint32_t>(Md)) % Md;
  FFElem out(this, exp_[m]);
  if (mul(frob(out.code(), -i), inv(out.code())) != lambda.code())
    throw FieldError("hilbert90_multiplicative: verification failed");
  return out;
}

std::string FieldCtx::to_string(uint32_t code) const {
  if (f_ == 1) return std::to_string(code);
  if (code == 0) return "0";
  std::string s;
  auto c = FFElem(this, code).coeffs();
  for (size_t k = c.size(); k-- > 0;) {
    if (!c[k]) continue;
    if (!s.empty()) s += "+";
    if (k == 0 || c[k] != 1) s += std::to_string(c[k]);
    if (k >= 1) s += "t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

// ---------------------------------------------------------------------------

void FFElem::same(const FFElem &o) const {
  if (ctx_ == nullptr || ctx_ != o.ctx_) throw FieldError("elements from different fields");
}

std::vector<uint32_t> FFElem::coeffs() const {
  std::vector<uint32_t> c(ctx_->f());
  uint32_t code = code_;
  for (auto &x : c) {
    x = code % ctx_->p();
    code /= ctx_->p();
  }
  return c;
}

FFElem FFElem::operator+(const FFElem &o) const {
  same(o);
  return {ctx_, ctx_->add(code_, o.code_)};
}
FFElem FFElem::operator-(const FFElem &o) const {
  same(o);
  return {ctx_, ctx_->sub(code_, o.code_)};
}
FFElem FFElem::operator*(const FFElem &o) const {
  same(o);
  return {ctx_, ctx_->mul(code_, o.code_)};
}
FFElem FFElem::operator/(const FFElem &o) const {
  same(o);
  return {ctx_, ctx_->div(code_, o.code_)};
}
FFElem FFElem::operator-() const { return {ctx_, ctx_->neg(code_)}; }
FFElem FFElem::pow(int64_t k) const { return {ctx_, ctx_->pow(code_, k)}; }
FFElem FFElem::inv() const { return {ctx_, ctx_->inv(code_)}; }
FFElem FFElem::frob(int64_t i) const { return {ctx_, ctx_->frob(code_, i)}; }

}  // namespace fixerlab
