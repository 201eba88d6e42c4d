#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fanok/rational.hpp"

namespace fanok {

/// Dense matrix of exact rationals. Small sizes only (the engines work on
/// 5x5 forms and linear systems with a few dozen unknowns), so plain
/// Gaussian elimination with exact pivoting is used throughout.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Mat identity(std::size_t n);
  static Mat diagonal(const std::vector<Rational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat transpose() const;
  bool is_symmetric() const;

  /// Exact rank via Gauss-Jordan elimination.
  std::size_t rank() const;
  std::size_t kernel_dim() const { return cols_ - rank(); }
  /// Exact determinant (square matrices).
  Rational det() const;
  Rational trace() const;

  Mat operator-() const;
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Rational& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  /// Lexicographic entry comparison (row-major); used for deduplication.
  friend bool lex_less(const Mat& a, const Mat& b);

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Scales a nonzero matrix so its first nonzero entry (row-major scan)
/// becomes 1; the canonical representative modulo scalars.
Mat projective_normalize(const Mat& m);

}  // namespace fanok
