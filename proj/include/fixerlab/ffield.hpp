#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixerlab {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// Element of GF(p^f), stored as its canonical code sum coeffs[j] p^j.
class FFElem {
 public:
  FFElem() = default;
  FFElem(const FieldCtx *ctx, uint32_t code) : ctx_(ctx), code_(code) {}

  uint32_t code() const { return code_; }
  const FieldCtx *ctx() const { return ctx_; }
  std::vector<uint32_t> coeffs() const;
  bool is_zero() const { return code_ == 0; }

  FFElem operator+(const FFElem &o) const;
  FFElem operator-(const FFElem &o) const;
  FFElem operator*(const FFElem &o) const;
  FFElem operator/(const FFElem &o) const;
  FFElem operator-() const;
  FFElem pow(int64_t k) const;
  FFElem inv() const;
  FFElem frob(int64_t i) const;

  bool operator==(const FFElem &o) const { return ctx_ == o.ctx_ && code_ == o.code_; }
  bool operator!=(const FFElem &o) const { return !(*this == o); }
  bool operator<(const FFElem &o) const { return code_ < o.code_; }

 private:
  void same(const FFElem &o) const;
  const FieldCtx *ctx_ = nullptr;
  uint32_t code_ = 0;
};

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // Conway polynomial from the shipped table (computed on the fly if absent).
  static FieldPtr make(uint32_t p, uint32_t f);
  // poly = c_0 .. c_f, monic; must be irreducible.
  static FieldPtr with_polynomial(uint32_t p, std::vector<uint32_t> poly);
  // Cached instance per q for the Conway polynomial.
  static FieldPtr get(uint32_t q);

  uint32_t p() const { return p_; }
  uint32_t f() const { return f_; }
  uint32_t q() const { return q_; }
  const std::vector<uint32_t> &poly() const { return poly_; }

  FFElem zero() const { return {this, 0}; }
  FFElem one() const { return {this, 1}; }
  FFElem elem(uint32_t code) const;
  FFElem from_int(int64_t v) const;
  FFElem from_coeffs(const std::vector<uint32_t> &c) const;
  // Canonical primitive element: the root t when the polynomial is primitive.
  FFElem primitive() const { return {this, exp_[1]}; }
  // Discrete log w.r.t. primitive(); x nonzero.
  uint32_t log(uint32_t code) const { return log_[code]; }
  uint32_t exp(uint64_t e) const { return exp_[e % (q_ - 1)]; }

  // Raw code arithmetic, hot path.
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, int64_t k) const;
  // x^(p^i), i taken mod f (negative allowed).
  uint32_t frob(uint32_t a, int64_t i) const;

  FFElem frobenius(const FFElem &x, int64_t i) const;
  FFElem rel_trace(const FFElem &x, uint32_t f1) const;
  FFElem rel_norm(const FFElem &x, uint32_t f1) const;
  bool in_subfield(const FFElem &x, uint32_t f1) const;
  // All elements of GF(p^f1), ascending codes.
  std::vector<uint32_t> subfield(uint32_t f1) const;

  // c with c^(phi^-i) - c = b. Requires Tr to the fixed field of phi^i zero.
  FFElem hilbert90_additive(const FFElem &b, int64_t i) const;
  // mu with mu^(phi^-i) mu^-1 = lambda. Requires norm 1.
  FFElem hilbert90_multiplicative(const FFElem &lambda, int64_t i) const;
  // Size cutoff for the exhaustive solvers.
  static constexpr uint32_t kSearchLimit = 4096;
  FFElem hilbert90_additive_linear(const FFElem &b, int64_t i) const;
  FFElem hilbert90_multiplicative_linear(const FFElem &lambda, int64_t i) const;

  std::string to_string(uint32_t code) const;

  FieldCtx(uint32_t p, std::vector<uint32_t> poly);

 private:
  void check_divisor(uint32_t f1) const;
  uint32_t p_, f_, q_;
  std::vector<uint32_t> poly_;
  std::vector<uint32_t> exp_;  // length 2(q-1)
  std::vector<uint32_t> log_;
  std::vector<int32_t> zech_;  // log(1 + t^k), -1 when zero
  uint32_t minus_one_log_ = 0;
};

// Conway polynomial helpers.
bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);
// Returns c_0..c_f; reads the data table, falling back to computation.
std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t f);
std::vector<uint32_t> compute_conway_polynomial(uint32_t p, uint32_t f);
bool is_irreducible(uint32_t p, const std::vector<uint32_t> &poly);
// Directory holding shipped data (FIXERLAB_DATA or the build-time default).
std::string data_dir();
// q -> (p, f); throws unless q is a prime power.
std::pair<uint32_t, uint32_t> prime_power(uint64_t q);
bool is_prime_power(uint64_t q);

}  // namespace fixerlab
