#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mcgsig/rational.hpp"

namespace mcgsig {

using Vec = std::vector<Rat>;

/// Dense exact-rational matrix, row major. Ambient dimensions in this
/// project stay small (<= ~30), so no sparsity.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Mat transpose() const;
  Mat operator*(const Mat& other) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& other) const;
  Mat operator-(const Mat& other) const;

  bool operator==(const Mat& other) const = default;

  bool is_zero() const;

  /// Horizontal concatenation [*this | other]; row counts must agree.
  Mat hcat(const Mat& other) const;
  /// Vertical concatenation; column counts must agree.
  Mat vcat(const Mat& other) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

Rat dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
bool is_zero(const Vec& v);
Vec unit_vec(std::size_t n, std::size_t i);

}  // namespace mcgsig
