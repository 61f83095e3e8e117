#include "mcgsig/linalg.hpp"

#include <stdexcept>

namespace mcgsig {

RrefResult rref(const Mat& m) {
  Mat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    const Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Mat aug = m.hcat(Mat::from_cols({b}, b.size()));
  auto [red, pivots] = rref(aug);
  // Inconsistent iff the last column is a pivot.
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

Mat mat_inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mat_inverse: not square");
  const std::size_t n = m.rows();
  auto [red, pivots] = rref(m.hcat(Mat::identity(n)));
  if (pivots.size() != n || pivots.back() != n - 1)
    throw std::invalid_argument("mat_inverse: singular matrix");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

Subspace Subspace::span_of_rows(const Mat& rows) {
  Subspace s(rows.cols());
  auto [red, pivots] = rref(rows);
  Mat basis(pivots.size(), rows.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) basis(i, j) = red(i, j);
  s.basis_ = basis;
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  if (vectors.empty()) return Subspace(ambient_dim);
  return span_of_rows(Mat::from_rows(vectors, ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dim mismatch");
  // v reduces to zero against the echelon basis.
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_(i, p) == 0) ++p;
    if (p == ambient_) continue;
    if (w[p] != 0) {
      const Rat f = w[p];
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(i, j);
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace kernel(const Mat& m) {
  auto [red, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, c);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace image(const Mat& m) { return Subspace::span_of_rows(m.transpose()); }

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  if (u.dim() == 0) return v;
  if (v.dim() == 0) return u;
  return Subspace::span_of_rows(u.basis().vcat(v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return Subspace(n);
  // x in U cap V iff x = U^T a = V^T b; solve U^T a - V^T b = 0.
  Mat ut = u.basis().transpose();
  Mat vt = v.basis().transpose();
  Mat neg_vt(vt.rows(), vt.cols());
  for (std::size_t i = 0; i < vt.rows(); ++i)
    for (std::size_t j = 0; j < vt.cols(); ++j) neg_vt(i, j) = -vt(i, j);
  Subspace k = kernel(ut.hcat(neg_vt));
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vec coeffs = k.basis().row(i);
    Vec a(coeffs.begin(), coeffs.begin() + static_cast<long>(u.dim()));
    basis.push_back(ut * a);
  }
  return Subspace::span(basis, n);
}

std::vector<Vec> quotient_basis(const Subspace& w, const Subspace& d) {
  if (w.ambient_dim() != d.ambient_dim())
    throw std::invalid_argument("quotient_basis: ambient dimension mismatch");
  if (!w.contains(d)) throw std::invalid_argument("quotient_basis: d is not contained in w");
  std::vector<Vec> reps;
  Subspace cur = d;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Vec v = w.basis().row(i);
    if (!cur.contains(v)) {
      reps.push_back(v);
      cur = sum(cur, Subspace::span({v}, w.ambient_dim()));
    }
  }
  return reps;
}

Signature symmetric_signature(const Mat& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("symmetric_signature: not square");
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i)) throw std::invalid_argument("symmetric_signature: not symmetric");

  Mat a = g;
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Symmetric pivot search: bring a nonzero diagonal entry to (k,k), or
      // expose one by adding row/col j to row/col i when only an off-diagonal
      // a(i,j) survives.
      std::size_t d = k + 1;
      while (d < n && a(d, d) == 0) ++d;
      if (d < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(d, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, d));
      } else {
        std::size_t oi = n, oj = n;
        for (std::size_t i = k; i < n && oi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (a(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi == n) {
          sig.n_zero += n - k;
          break;
        }
        for (std::size_t j = 0; j < n; ++j) a(oi, j) += a(oj, j);
        for (std::size_t i = 0; i < n; ++i) a(i, oi) += a(i, oj);
        if (oi != k) {
          for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(oi, j));
          for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, oi));
        }
      }
    }
    const Rat piv = a(k, k);
    if (piv > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rat f = a(i, k) / piv;
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(k, i) == 0) continue;
      const Rat f = a(k, i) / piv;
      for (std::size_t j = 0; j < n; ++j) a(j, i) -= f * a(j, k);
    }
  }
  return sig;
}

}  // namespace mcgsig
