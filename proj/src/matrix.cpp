#include "fanok/matrix.hpp"

#include <sstream>

#include "fanok/errors.hpp"

namespace fanok {

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) throw InputError("matrix entry count mismatch");
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Mat Mat::diagonal(const std::vector<Rational>& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::size_t Mat::rank() const {
  Mat m = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    const Rational inv = Rational(1) / m.at(rank, col);
    for (std::size_t j = col; j < cols_; ++j) m.at(rank, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col);
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Rational Mat::det() const {
  if (!is_square()) throw InputError("determinant of a non-square matrix");
  Mat m = *this;
  Rational d(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return Rational(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pivot, j));
      d = -d;
    }
    d *= m.at(col, col);
    const Rational inv = Rational(1) / m.at(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col) * inv;
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

Rational Mat::trace() const {
  if (!is_square()) throw InputError("trace of a non-square matrix");
  Rational t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Mat Mat::operator-() const {
  Mat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch in +");
  Mat r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch in -");
  Mat r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix shape mismatch in *");
  Mat r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

Mat operator*(const Rational& s, const Mat& a) {
  Mat r(a.rows_, a.cols_);
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = s * a.a_[k];
  return r;
}

bool lex_less(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t k = 0; k < a.a_.size(); ++k) {
    if (a.a_[k] < b.a_[k]) return true;
    if (b.a_[k] < a.a_[k]) return false;
  }
  return false;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Mat projective_normalize(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return (Rational(1) / m.at(i, j)) * m;
  return m;
}

}  // namespace fanok
