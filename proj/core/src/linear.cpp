#include "polyval/linear.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace polyval {

Vec Vec::unit(int dim, int i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

Vec Vec::ones(int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = 1;
  return v;
}

bool Vec::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

Vec& Vec::operator+=(const Vec& o) {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (o.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Vec& Vec::operator*=(const Rat& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Rat s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  os << ')';
  return os.str();
}

Mat::Mat(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) : Mat(static_cast<int>(rows.size())) {
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) throw std::invalid_argument("matrix must be square");
    int c = 0;
    for (const auto& x : row) (*this)(r, c++) = x;
    ++r;
  }
}

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(std::span<const Vec> cols) {
  const int n = static_cast<int>(cols.size());
  Mat m(n);
  for (int c = 0; c < n; ++c) {
    if (cols[static_cast<std::size_t>(c)].dim() != n) throw std::invalid_argument("matrix must be square");
    for (int r = 0; r < n; ++r) m(r, c) = cols[static_cast<std::size_t>(c)][r];
  }
  return m;
}

Vec Mat::column(int c) const {
  Vec v(dim_);
  for (int r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec operator*(const Mat& m, const Vec& v) {
  if (m.dim() != v.dim()) throw std::invalid_argument("dimension mismatch");
  Vec out(m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    Rat s = 0;
    for (int c = 0; c < m.dim(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = a.dim();
  Mat out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Rat s = 0;
      for (int k = 0; k < n; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < m.dim(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (int c = 0; c < m.dim(); ++c) {
      if (c) os << ", ";
      os << to_string(m(r, c));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Rat det(const Mat& m) {
  const int n = m.dim();
  Mat a = m;
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      d = -d;
    }
    d *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat f = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return d;
}

Mat inverse_transpose(const Mat& m) {
  const int n = m.dim();
  Mat a = m;
  Mat inv = Mat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rat p = a(col, col);
    for (int c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rat f = a(r, col);
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv.transpose();
}

int rank(std::span<const Vec> rows) {
  if (rows.empty()) return 0;
  std::vector<Vec> a(rows.begin(), rows.end());
  const int cols = a.front().dim();
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
    auto pivot = static_cast<std::size_t>(r);
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(r)]);
    const Vec& pr = a[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rat f = a[i][c] / pr[c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * pr[k];
    }
    ++r;
  }
  return r;
}

Vec rotate90(const Vec& v) {
  if (v.dim() != 2) throw std::invalid_argument("rotate90 requires a planar vector");
  return Vec{-v[1], v[0]};
}

Vec rotate90_inverse(const Vec& v) {
  if (v.dim() != 2) throw std::invalid_argument("rotate90 requires a planar vector");
  return Vec{v[1], -v[0]};
}

Mat rotation90() { return Mat{{0, -1}, {1, 0}}; }

namespace {

void require_open_unit(const Rat& lambda) {
  if (lambda <= 0 || lambda >= 1) throw std::invalid_argument("lambda must lie in (0,1)");
}

// Column 0 or 1 becomes l e1 + (1-l) e2.
Mat split_transform(const Rat& lambda, int n, int moved) {
  Mat m = Mat::identity(n);
  m(0, moved) = lambda;
  m(1, moved) = 1 - lambda;
  return m;
}

}  // namespace

Mat make_phi1(const Rat& lambda, int n) {
  require_open_unit(lambda);
  if (n < 3) throw std::invalid_argument("make_phi1 requires n >= 3");
  Mat m = split_transform(lambda, n, 0);
  m(n - 1, n - 1) = 1 / lambda;
  return m;
}

Mat make_psi1(const Rat& lambda, int n) {
  require_open_unit(lambda);
  if (n < 3) throw std::invalid_argument("make_psi1 requires n >= 3");
  Mat m = split_transform(lambda, n, 1);
  m(n - 1, n - 1) = 1 / (1 - lambda);
  return m;
}

Mat make_phi2(const Rat& lambda, int n) {
  require_open_unit(lambda);
  if (n < 2) throw std::invalid_argument("make_phi2 requires n >= 2");
  return split_transform(lambda, n, 0);
}

Mat make_psi2(const Rat& lambda, int n) {
  require_open_unit(lambda);
  if (n < 2) throw std::invalid_argument("make_psi2 requires n >= 2");
  return split_transform(lambda, n, 1);
}

Mat shear(int n, int row, int col, const Rat& factor) {
  if (row == col) throw std::invalid_argument("shear requires row != col");
  Mat m = Mat::identity(n);
  m(row, col) = factor;
  return m;
}

Mat random_unimodular(int n, std::uint64_t seed, int steps) {
  if (n < 2) throw std::invalid_argument("random_unimodular requires n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(0, n - 1);
  std::uniform_int_distribution<int> numer(1, 6);
  std::uniform_int_distribution<int> denom(1, 3);
  Mat m = Mat::identity(n);
  for (int s = 0; s < steps; ++s) {
    const int i = index(rng);
    int j = index(rng);
    while (j == i) j = index(rng);
    const int k = numer(rng);
    const int p = k <= 3 ? -k : k - 3;
    m = shear(n, i, j, ratio(p, denom(rng))) * m;
  }
  return m;
}

std::vector<Mat> sigma_library(int n) {
  if (n < 2) throw std::invalid_argument("sigma_library requires n >= 2");
  std::vector<Mat> out;
  auto add = [&out](Mat m) {
    for (const auto& e : out) {
      if (e == m) return;
    }
    out.push_back(std::move(m));
  };
  // Cyclic permutation of three consecutive coordinates.
  for (int r = 0; r + 3 <= n; ++r) {
    Mat m = Mat::identity(n);
    for (int i = 0; i < 3; ++i) m(r + i, r + i) = 0;
    m(r, r + 2) = 1;
    m(r + 1, r) = 1;
    m(r + 2, r + 1) = 1;
    add(std::move(m));
  }
  // -I2 block at each diagonal position.
  for (int r = 0; r + 2 <= n; ++r) {
    Mat m = Mat::identity(n);
    m(r, r) = -1;
    m(r + 1, r + 1) = -1;
    add(std::move(m));
  }
  if (n >= 3) {
    // Swap e1, e2 and negate the last coordinate; for n = 3 this is the
    // 3x3 swap-with-sign matrix itself.
    Mat swap_last = Mat::identity(n);
    swap_last(0, 0) = 0;
    swap_last(1, 1) = 0;
    swap_last(0, 1) = 1;
    swap_last(1, 0) = 1;
    swap_last(n - 1, n - 1) = -1;
    add(std::move(swap_last));
    // Swap-with-sign on the leading 3x3 block, identity elsewhere.
    Mat swap_block = Mat::identity(n);
    swap_block(0, 0) = 0;
    swap_block(1, 1) = 0;
    swap_block(0, 1) = 1;
    swap_block(1, 0) = 1;
    swap_block(2, 2) = -1;
    add(std::move(swap_block));
  }
  return out;
}

}  // namespace polyval
