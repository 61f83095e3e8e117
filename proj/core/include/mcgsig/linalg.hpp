#pragma once

#include <optional>
#include <vector>

#include "mcgsig/matrix.hpp"

namespace mcgsig {

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

/// Canonical reduced row-echelon form (Gauss-Jordan over Q). Row space is
/// preserved; the result is unique, so it doubles as a canonical form.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// One exact solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Inverse of a square matrix; throws std::invalid_argument if singular.
Mat mat_inverse(const Mat& m);

/// A rational subspace of Q^ambient, stored as a canonical RREF basis so that
/// equal subspaces compare bit-identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span_of_rows(const Mat& rows);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim) { return span_of_rows(Mat::identity(ambient_dim)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_;
  Mat basis_;  // RREF, full row rank
};

/// Null space of m, as a subspace of Q^cols.
Subspace kernel(const Mat& m);
/// Column space of m, as a subspace of Q^rows.
Subspace image(const Mat& m);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// Coset representatives completing a basis of d to a basis of w.
/// Requires d <= w; throws std::invalid_argument otherwise.
std::vector<Vec> quotient_basis(const Subspace& w, const Subspace& d);

struct Signature {
  std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
  int value() const { return static_cast<int>(n_plus) - static_cast<int>(n_minus); }
  bool operator==(const Signature&) const = default;
};

/// Signature of a symmetric bilinear form by exact congruence
/// diagonalization. Throws std::invalid_argument if g is not symmetric.
Signature symmetric_signature(const Mat& g);

}  // namespace mcgsig
