#include "mcgsig/stabilize.hpp"

namespace mcgsig {

Mat symplectic_form(std::size_t half_dim) {
  Mat j(2 * half_dim, 2 * half_dim);
  for (std::size_t i = 0; i < half_dim; ++i) {
    j(i, half_dim + i) = 1;
    j(half_dim + i, i) = -1;
  }
  return j;
}

SymplecticMatrix::SymplecticMatrix(std::size_t half_dim, Mat matrix) : n(half_dim), m(std::move(matrix)) {
  if (m.rows() != 2 * n || m.cols() != 2 * n)
    throw SymplecticityViolation("SymplecticMatrix: wrong shape for half-dimension " +
                                 std::to_string(n));
  const Mat j = symplectic_form(n);
  if (m.transpose() * j * m != j)
    throw SymplecticityViolation("SymplecticMatrix: M^T J M != J");
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& other) const {
  if (n != other.n) throw std::invalid_argument("SymplecticMatrix::operator*: half-dim mismatch");
  return {n, m * other.m};
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // For symplectic M, M^{-1} = -J M^T J.
  const Mat j = symplectic_form(n);
  Mat inv = j * m.transpose() * j;
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t k = 0; k < inv.cols(); ++k) inv(i, k) = -inv(i, k);
  return {n, inv};
}

SymplecticMatrix cap(const MappingClassRep& rep) {
  rep.check_invariants();
  const std::size_t g = rep.model.genus();
  const std::size_t d = rep.model.d_index();
  // M fixes d, so deleting the d row and column gives the quotient action.
  Mat q(2 * g, 2 * g);
  for (std::size_t i = 0; i < 2 * g; ++i)
    for (std::size_t j = 0; j < 2 * g; ++j) q(i, j) = rep.action(i < d ? i : i + 1, j < d ? j : j + 1);
  return SymplecticMatrix(g, std::move(q));
}

SymplecticMatrix annulus(const MappingClassRep& rep) {
  rep.check_invariants();
  const std::size_t g = rep.model.genus();
  const std::size_t n = rep.model.dim();
  const std::size_t d = rep.model.d_index();
  const std::size_t gg = g + 1;

  // Re-index the old basis into (a_1..a_g, a_{g+1}, b_1..b_g, b_{g+1}):
  // a_i -> i, d -> g (= a_{g+1}), b_i -> g+1+i; b_{g+1} is the new index 2g+1.
  auto relabel = [&](std::size_t old_idx) {
    if (old_idx < g) return old_idx;      // a_i
    if (old_idx == d) return g;           // d becomes a_{g+1}
    return old_idx + 1;                   // b_i shifts past a_{g+1}
  };

  Mat m(2 * gg, 2 * gg);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec img = rep.action.col(j);
    for (std::size_t i = 0; i < n; ++i) m(relabel(i), relabel(j)) = img[i];
  }
  m(g, g) = rep.action(d, d);  // a_{g+1} column (d is fixed, so this is 1)
  // b_{g+1} picks up the arc displacement; the sign -eps_arc keeps the new
  // handle's pairing with the arc closure consistent with lambda(d) = eps_arc.
  const std::size_t b_new = 2 * gg - 1;
  m(b_new, b_new) = 1;
  const Rat sigma(-rep.model.calibration().eps_arc);
  for (std::size_t i = 0; i < n; ++i) {
    if (rep.disp[i] == 0) continue;
    m(relabel(i), b_new) += sigma * rep.disp[i];
  }
  return SymplecticMatrix(gg, std::move(m));
}

}  // namespace mcgsig
