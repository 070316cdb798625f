#include "fixerlab/perm.hpp"

#include <algorithm>
#include <numeric>

namespace fixerlab {

uint64_t lcm_u64(uint64_t a, uint64_t b) { return a / std::gcd(a, b) * b; }

Perm::Perm(size_t n) : img_(n) {
  if (n > 65535) throw PermError("degree too large");
  std::iota(img_.begin(), img_.end(), Point(0));
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (auto x : img_) {
    if (x >= img_.size()) throw PermError("image out of range");
    if (seen[x]) throw PermError("repeated image");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(size_t n, const std::vector<std::vector<Point>> &cycles) {
  Perm p(n);
  std::vector<char> used(n, 0);
  for (const auto &c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n) throw PermError("cycle point out of range");
      if (used[c[i]]) throw PermError("cycles are not disjoint");
      used[c[i]] = 1;
      p.img_[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

Perm Perm::operator*(const Perm &o) const {
  if (o.degree() != degree()) throw PermError("degree mismatch");
  std::vector<Point> r(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r[i] = o.img_[img_[i]];
  Perm out;
  out.img_ = std::move(r);
  return out;
}

Perm Perm::inverse() const {
  std::vector<Point> r(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<Point>(i);
  Perm out;
  out.img_ = std::move(r);
  return out;
}

Perm Perm::pow(int64_t k) const {
  Perm base = k < 0 ? inverse() : *this;
  uint64_t e = k < 0 ? uint64_t(-k) : uint64_t(k);
  Perm r(degree());
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

uint64_t Perm::order() const {
  uint64_t o = 1;
  for (auto l : cycle_type()) o = lcm_u64(o, l);
  return o;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

size_t Perm::fixed_points() const {
  size_t c = 0;
  for (size_t i = 0; i < img_.size(); ++i) c += img_[i] == i;
  return c;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(img_.size(), 0);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<Point> c;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(static_cast<Point>(j));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<uint32_t> Perm::cycle_type() const {
  std::vector<uint32_t> t;
  std::vector<char> seen(img_.size(), 0);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0;
    for (size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto &c : cs) {
    s += "(";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    s += ")";
  }
  return s;
}

}  // namespace fixerlab
