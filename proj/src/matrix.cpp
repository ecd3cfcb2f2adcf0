#include "selfdual/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sd {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  RatMatrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (is_zero(at(r, k))) continue;
      for (int c = 0; c < o.cols_; ++c) p.at(r, c) += at(r, k) * o.at(k, c);
    }
  return p;
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(std::vector<Rat>& a, int rows, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    for (int i = r; i < rows; ++i) {
      if (is_zero(a[i * cols + c])) continue;
      if (best < 0 || cmp(abs(a[i * cols + c]), abs(a[best * cols + c])) > 0)
        best = i;
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[best * cols + j]);
    Rat inv = 1 / a[r * cols + c];
    for (int j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i * cols + c])) continue;
      Rat f = a[i * cols + c];
      for (int j = c; j < cols; ++j) a[i * cols + j] -= f * a[r * cols + j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int RatMatrix::rank() const {
  std::vector<Rat> a(a_);
  return static_cast<int>(rref(a, rows_, cols_).size());
}

std::vector<std::vector<Rat>> RatMatrix::kernel_basis() const {
  std::vector<Rat> a(a_);
  std::vector<int> pivots = rref(a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_);
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i * cols_ + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat RatMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  int n = rows_;
  std::vector<Rat> a(a_);
  Rat result = 1;
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int i = c; i < n; ++i) {
      if (is_zero(a[i * n + c])) continue;
      if (best < 0 || cmp(abs(a[i * n + c]), abs(a[best * n + c])) > 0) best = i;
    }
    if (best < 0) return Rat(0);
    if (best != c) {
      for (int j = 0; j < n; ++j) std::swap(a[c * n + j], a[best * n + j]);
      result = -result;
    }
    result *= a[c * n + c];
    Rat inv = 1 / a[c * n + c];
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(a[i * n + c])) continue;
      Rat f = a[i * n + c] * inv;
      for (int j = c + 1; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
      a[i * n + c] = 0;
    }
  }
  return result;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  int n = rows_;
  // Gauss-Jordan on (A | I).
  std::vector<Rat> a(n * 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r * 2 * n + c] = at(r, c);
    a[r * 2 * n + n + r] = 1;
  }
  std::vector<int> pivots = rref(a, n, 2 * n);
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(pivots.size()) <= i || pivots[i] != i)
      throw std::invalid_argument("matrix is singular");
  RatMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = a[r * 2 * n + n + c];
  return inv;
}

Rat RatMatrix::det_bareiss() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  int n = rows_;
  if (n == 0) return Rat(1);
  // Clear denominators row by row; det scales by the product of the scalars.
  std::vector<mpz_class> a(n * n);
  Rat scale = 1;
  for (int r = 0; r < n; ++r) {
    mpz_class lcm = 1;
    for (int c = 0; c < n; ++c) {
      const Rat& x = a_[r * cols_ + c];
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    }
    scale *= Rat(lcm);
    for (int c = 0; c < n; ++c) {
      const Rat& x = a_[r * cols_ + c];
      a[r * n + c] = x.get_num() * (lcm / x.get_den());
    }
  }
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) { piv = i; break; }
      if (piv < 0) return Rat(0);
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  Rat d(a[(n - 1) * n + (n - 1)]);
  if (sign < 0) d = -d;
  return d / scale;
}

std::map<Subset, Rat> RatMatrix::maximal_minors() const {
  if (rows_ > cols_) throw std::invalid_argument("maximal_minors needs rows <= cols");
  std::map<Subset, Rat> out;
  for (const Subset& s : subsets_lex(cols_, rows_)) out[s] = minor_det(s);
  return out;
}

Rat RatMatrix::minor_det(const Subset& cols) const {
  int n = static_cast<int>(cols.size());
  if (n != rows_) throw std::invalid_argument("minor_det: wrong subset size");
  RatMatrix sub(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) sub.at(r, c) = at(r, cols[c] - 1);
  return sub.det();
}

}  // namespace sd
