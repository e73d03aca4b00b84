#include "lpgame/linalg.hpp"

#include <sstream>

#include "lpgame/errors.hpp"

namespace lpgame {

Vec Vec::ones(std::size_t dim) {
  Vec v(dim);
  for (auto& e : v) e = 1;
  return v;
}

Vec Vec::unit(std::size_t dim, std::size_t index) {
  Vec v(dim);
  v[index] = 1;
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  LPGAME_CHECK(a.dim() == b.dim());
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  LPGAME_CHECK(a.dim() == b.dim());
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
  return r;
}

Vec operator*(const Vec& a, const Rat& s) {
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] * s;
  return r;
}

Vec operator/(const Vec& a, const Rat& s) {
  LPGAME_CHECK(s != 0);
  Vec r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] / s;
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  LPGAME_CHECK(a.dim() == b.dim());
  Rat r = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) r += a[i] * b[i];
  return r;
}

Rat sum(const Vec& a) {
  Rat r = 0;
  for (const auto& e : a) r += e;
  return r;
}

bool is_nonneg(const Vec& a) {
  for (const auto& e : a) {
    if (e < 0) return false;
  }
  return true;
}

bool is_positive(const Vec& a) {
  for (const auto& e : a) {
    if (e <= 0) return false;
  }
  return true;
}

bool is_zero(const Vec& a) {
  for (const auto& e : a) {
    if (e != 0) return false;
  }
  return true;
}

bool lex_less(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.dim(); ++i) r[a.dim() + i] = b[i];
  return r;
}

Vec slice(const Vec& a, std::size_t begin, std::size_t end) {
  LPGAME_CHECK(begin <= end && end <= a.dim());
  Vec r(end - begin);
  for (std::size_t i = begin; i < end; ++i) r[i - begin] = a[i];
  return r;
}

Vec select_entries(const Vec& a, const std::vector<std::size_t>& indices) {
  Vec r(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    LPGAME_CHECK(indices[i] < a.dim());
    r[i] = a[indices[i]];
  }
  return r;
}

std::string to_string(const Vec& a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i > 0) out << ", ";
    out << rat_to_string(a[i]);
  }
  out << ']';
  return out.str();
}

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    LPGAME_CHECK(row.size() == cols_);
    for (const auto& e : row) entries_.push_back(e);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Mat::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  LPGAME_CHECK(v.dim() == cols_);
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Mat::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vec operator*(const Mat& a, const Vec& x) {
  LPGAME_CHECK(a.cols() == x.dim());
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rat s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

Vec left_mul(const Vec& y, const Mat& a) {
  LPGAME_CHECK(y.dim() == a.rows());
  Vec r(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += y[i] * a(i, j);
    r[j] = s;
  }
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  LPGAME_CHECK(a.cols() == b.rows());
  Mat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  }
  return r;
}

Mat operator-(const Mat& a) {
  Mat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
  }
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  LPGAME_CHECK(a.rows() == b.rows());
  Mat r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  LPGAME_CHECK(a.cols() == b.cols());
  Mat r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  }
  return r;
}

Mat select_rows(const Mat& a, const std::vector<std::size_t>& rows) {
  Mat r(rows.size(), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    LPGAME_CHECK(rows[i] < a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(rows[i], j);
  }
  return r;
}

Mat select_cols(const Mat& a, const std::vector<std::size_t>& cols) {
  Mat r(a.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    LPGAME_CHECK(cols[j] < a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, cols[j]);
  }
  return r;
}

Mat drop_row(const Mat& a, std::size_t index) {
  LPGAME_CHECK(index < a.rows());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i != index) keep.push_back(i);
  }
  return select_rows(a, keep);
}

bool is_skew_symmetric(const Mat& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (a(i, j) != -a(j, i)) return false;
    }
  }
  return true;
}

std::string to_string(const Mat& a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i > 0) out << ", ";
    out << to_string(a.row(i));
  }
  out << ']';
  return out.str();
}

namespace {

// Reduced row echelon form with the transform tracked: transform * input
// = reduced, transform invertible. Pivoting picks the first nonzero entry
// in each column, which keeps runs reproducible.
struct Rref {
  Mat reduced;
  Mat transform;
  std::vector<std::size_t> pivot_cols;
};

Rref rref(const Mat& input) {
  Rref out{input, Mat::identity(input.rows()), {}};
  Mat& r = out.reduced;
  Mat& t = out.transform;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < input.cols() && pivot_row < input.rows(); ++col) {
    std::size_t found = input.rows();
    for (std::size_t i = pivot_row; i < input.rows(); ++i) {
      if (r(i, col) != 0) {
        found = i;
        break;
      }
    }
    if (found == input.rows()) continue;
    r.swap_rows(pivot_row, found);
    t.swap_rows(pivot_row, found);
    Rat inv = 1 / r(pivot_row, col);
    for (std::size_t j = 0; j < r.cols(); ++j) r(pivot_row, j) *= inv;
    for (std::size_t j = 0; j < t.cols(); ++j) t(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < input.rows(); ++i) {
      if (i == pivot_row || r(i, col) == 0) continue;
      Rat f = r(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) -= f * r(pivot_row, j);
      for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) -= f * t(pivot_row, j);
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  return out;
}

}  // namespace

std::size_t rank(const Mat& m) { return rref(m).pivot_cols.size(); }

std::vector<Vec> nullspace_basis(const Mat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols());
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
      v[r.pivot_cols[i]] = -r.reduced(i, free_col);
    }
    LPGAME_CHECK(is_zero(m * v));
    basis.push_back(std::move(v));
  }
  return basis;
}

Alternative<Vec, Vec> solve_or_refute(const Mat& a, const Vec& b) {
  if (b.dim() != a.rows()) throw DimensionError("solve_or_refute: dim(b) != rows(A)");
  Rref r = rref(a);
  Vec tb = r.transform * b;
  for (std::size_t i = r.pivot_cols.size(); i < a.rows(); ++i) {
    if (tb[i] != 0) {
      Vec y = r.transform.row(i);
      LPGAME_CHECK(is_zero(left_mul(y, a)));
      LPGAME_CHECK(dot(y, b) != 0);
      return Alternative<Vec, Vec>::right(std::move(y));
    }
  }
  Vec x(a.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = tb[i];
  LPGAME_CHECK(a * x == b);
  return Alternative<Vec, Vec>::left(std::move(x));
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  auto alt = solve_or_refute(a, b);
  if (alt.is_left()) return alt.left_value();
  return std::nullopt;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  Rref r = rref(a);
  if (r.pivot_cols.size() != a.rows()) return std::nullopt;
  return r.transform;
}

}  // namespace lpgame
