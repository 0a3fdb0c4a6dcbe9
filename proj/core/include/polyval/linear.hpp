#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <ostream>
#include <string>
#include <vector>

#include "polyval/rational.hpp"

namespace polyval {

/// Point or direction in R^n with exact coordinates.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : coords_(static_cast<std::size_t>(dim)) {}
  explicit Vec(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  Vec(std::initializer_list<Rat> coords) : coords_(coords) {}

  static Vec zero(int dim) { return Vec(dim); }
  static Vec unit(int dim, int i);
  /// The all-ones vector.
  static Vec ones(int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rat& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  Rat& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const Rat> coords() const { return coords_; }

  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rat& s);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= Rat(-1); }
  friend Vec operator*(Vec a, const Rat& s) { return a *= s; }
  friend Vec operator*(const Rat& s, Vec a) { return a *= s; }

  friend bool operator==(const Vec& a, const Vec& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order; the canonical vertex order of a polytope.
  friend bool operator<(const Vec& a, const Vec& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rat> coords_;
};

Rat dot(const Vec& a, const Vec& b);

/// "(p/q, p/q, ...)"
std::string to_string(const Vec& v);
inline std::ostream& operator<<(std::ostream& os, const Vec& x) { return os << to_string(x); }

/// Square matrix acting on column vectors, stored row-major.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int dim);
  /// Rows given in order; must be square.
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(int dim);
  /// Matrix whose j-th column is cols[j].
  static Mat from_columns(std::span<const Vec> cols);

  int dim() const { return dim_; }
  const Rat& operator()(int r, int c) const { return entries_[index(r, c)]; }
  Rat& operator()(int r, int c) { return entries_[index(r, c)]; }

  Vec column(int c) const;
  Mat transpose() const;

  friend Vec operator*(const Mat& m, const Vec& v);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(c);
  }

  int dim_ = 0;
  std::vector<Rat> entries_;
};

std::string to_string(const Mat& m);
inline std::ostream& operator<<(std::ostream& os, const Mat& x) { return os << to_string(x); }

/// Exact determinant by Gaussian elimination over Q.
Rat det(const Mat& m);

/// (m^-1)^t. Throws std::domain_error("singular") when det(m) == 0.
Mat inverse_transpose(const Mat& m);

/// Exact rank of a list of row vectors.
int rank(std::span<const Vec> rows);

/// Counter-clockwise rotation of the plane by a right angle: (x, y) -> (-y, x).
Vec rotate90(const Vec& v);
/// Inverse of rotate90: (x, y) -> (y, -x).
Vec rotate90_inverse(const Vec& v);
/// rotate90 as a matrix.
Mat rotation90();

// Transforms that split the standard simplices along the hyperplane through
// the origin with normal (1-l)e1 - l e2. All require 0 < l < 1.

/// e1 -> l e1 + (1-l) e2, e_n -> e_n / l, other basis vectors fixed. n >= 3.
Mat make_phi1(const Rat& lambda, int n);
/// e2 -> l e1 + (1-l) e2, e_n -> e_n / (1-l), other basis vectors fixed. n >= 3.
Mat make_psi1(const Rat& lambda, int n);
/// e1 -> l e1 + (1-l) e2, others fixed (det = l). n >= 2.
Mat make_phi2(const Rat& lambda, int n);
/// e2 -> l e1 + (1-l) e2, others fixed (det = 1-l). n >= 2.
Mat make_psi2(const Rat& lambda, int n);

/// Identity plus `factor` at entry (row, col), row != col.
Mat shear(int n, int row, int col, const Rat& factor);

/// Deterministic product of `steps` random elementary shears. Shear factors
/// are p/q with p in [-3,3]\{0} and q in [1,3]. det == 1 exactly.
Mat random_unimodular(int n, std::uint64_t seed, int steps);

/// Fixed det-1 test transforms: 3-cycles along the diagonal, -I2 blocks at
/// every diagonal position, the swap-with-sign matrices for n >= 3. For n = 2
/// only -I2 remains. Duplicates are removed.
std::vector<Mat> sigma_library(int n);

}  // namespace polyval
