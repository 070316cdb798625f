#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixerlab {

using Point = uint16_t;

struct PermError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Permutation of {0..n-1}. Products are left-to-right: (a*b)(i) = b(a(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(size_t n);
  explicit Perm(std::vector<Point> images);
  static Perm from_cycles(size_t n, const std::vector<std::vector<Point>> &cycles);

  size_t degree() const { return img_.size(); }
  Point operator[](size_t i) const { return img_[i]; }
  const std::vector<Point> &images() const { return img_; }
  const Point *data() const { return img_.data(); }

  Perm operator*(const Perm &o) const;
  Perm inverse() const;
  Perm pow(int64_t k) const;
  // x^g = g^-1 x g
  Perm conj(const Perm &g) const { return g.inverse() * *this * g; }
  uint64_t order() const;
  bool is_identity() const;
  size_t fixed_points() const;
  std::vector<std::vector<Point>> cycles() const;  // nontrivial cycles only
  std::vector<uint32_t> cycle_type() const;        // all cycle lengths, descending
  std::string str() const;                         // cycle notation, 0-based

  bool operator==(const Perm &o) const { return img_ == o.img_; }
  bool operator!=(const Perm &o) const { return img_ != o.img_; }
  bool operator<(const Perm &o) const { return img_ < o.img_; }

 private:
  std::vector<Point> img_;
};

uint64_t lcm_u64(uint64_t a, uint64_t b);

}  // namespace fixerlab
