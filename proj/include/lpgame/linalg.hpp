#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpgame/rational.hpp"

namespace lpgame {

/// Dense vector of exact rationals.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : entries_(dim) {}
  Vec(std::initializer_list<Rat> init) : entries_(init) {}
  explicit Vec(std::vector<Rat> entries) : entries_(std::move(entries)) {}

  static Vec zero(std::size_t dim) { return Vec(dim); }
  static Vec ones(std::size_t dim);
  static Vec unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  Rat& operator[](std::size_t i) { return entries_[i]; }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const Vec& other) const { return entries_ == other.entries_; }
  bool operator!=(const Vec& other) const { return !(*this == other); }

 private:
  std::vector<Rat> entries_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Vec& a, const Rat& s);
Vec operator/(const Vec& a, const Rat& s);
Rat dot(const Vec& a, const Vec& b);
Rat sum(const Vec& a);
bool is_nonneg(const Vec& a);
bool is_positive(const Vec& a);
bool is_zero(const Vec& a);
/// Lexicographic order, used only to make enumeration output deterministic.
bool lex_less(const Vec& a, const Vec& b);
Vec concat(const Vec& a, const Vec& b);
/// Half-open range [begin, end).
Vec slice(const Vec& a, std::size_t begin, std::size_t end);
Vec select_entries(const Vec& a, const std::vector<std::size_t>& indices);
std::string to_string(const Vec& a);

/// Dense rows x cols matrix of exact rationals. Empty dimensions are legal.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> init);

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void swap_rows(std::size_t i, std::size_t k);
  Mat transposed() const;

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
  }
  bool operator!=(const Mat& other) const { return !(*this == other); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

Vec operator*(const Mat& a, const Vec& x);
/// y^T A as a vector of length cols(A).
Vec left_mul(const Vec& y, const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat select_rows(const Mat& a, const std::vector<std::size_t>& rows);
Mat select_cols(const Mat& a, const std::vector<std::size_t>& cols);
Mat drop_row(const Mat& a, std::size_t i);
bool is_skew_symmetric(const Mat& a);
std::string to_string(const Mat& a);

/// Either/or certificate of a theorem of the alternative. Exactly one side
/// is populated, and the producing operation verifies the payload against
/// its defining system before returning it.
template <class L, class R>
class Alternative {
 public:
  static Alternative left(L value) { return Alternative(std::variant<L, R>(std::in_place_index<0>, std::move(value))); }
  static Alternative right(R value) { return Alternative(std::variant<L, R>(std::in_place_index<1>, std::move(value))); }

  bool is_left() const { return payload_.index() == 0; }
  bool is_right() const { return payload_.index() == 1; }
  const L& left_value() const { return std::get<0>(payload_); }
  const R& right_value() const { return std::get<1>(payload_); }

 private:
  explicit Alternative(std::variant<L, R> payload) : payload_(std::move(payload)) {}
  std::variant<L, R> payload_;
};

/// Row rank (= column rank), by exact Gaussian elimination.
std::size_t rank(const Mat& m);

/// cols(M) - rank(M) linearly independent vectors spanning {x : Mx = 0}.
std::vector<Vec> nullspace_basis(const Mat& m);

/// Either some x solves Ax = b, or some y has y^T A = 0^T and y^T b != 0.
/// The returned vector satisfies its defining identities exactly.
Alternative<Vec, Vec> solve_or_refute(const Mat& a, const Vec& b);

/// One solution of Ax = b if the system is consistent.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

/// Exact inverse, or nullopt if the matrix is singular or not square.
std::optional<Mat> inverse(const Mat& a);

}  // namespace lpgame
