#include "mcgsig/meyer.hpp"

namespace mcgsig {

MeyerForm meyer_form(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("meyer_form: half-dimension mismatch");
  const std::size_t n = a.n;
  const std::size_t two_n = 2 * n;
  if (n == 0) return {0, Subspace(0), Mat(0, 0)};

  const Mat a_inv_minus_i = a.inverse().m - Mat::identity(two_n);
  const Mat b_minus_i = b.m - Mat::identity(two_n);
  const Subspace v = kernel(a_inv_minus_i.hcat(b_minus_i));

  const Mat j = symplectic_form(n);
  const Mat j_i_minus_b = j * (Mat::identity(two_n) - b.m);

  const std::size_t k = v.dim();
  Mat gram(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    const Vec vr = v.basis().row(r);
    Vec xy_sum(two_n);
    for (std::size_t t = 0; t < two_n; ++t) xy_sum[t] = vr[t] + vr[two_n + t];
    const Vec left = j_i_minus_b.transpose() * xy_sum;  // left^T y2 = (x1+y1)^T J(I-B) y2
    for (std::size_t s = 0; s < k; ++s) {
      const Vec vs = v.basis().row(s);
      Rat entry;
      for (std::size_t t = 0; t < two_n; ++t) entry += left[t] * vs[two_n + t];
      gram(r, s) = entry;
    }
  }
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = r + 1; s < k; ++s)
      if (gram(r, s) != gram(s, r))
        throw GramAsymmetry("meyer_form: Gram matrix is not symmetric on V_{A,B}");
  return {n, v, gram};
}

int meyer_tau(const SymplecticMatrix& a, const SymplecticMatrix& b, int eps_tau) {
  const MeyerForm form = meyer_form(a, b);
  if (form.gram.rows() == 0) return 0;
  return eps_tau * symmetric_signature(form.gram).value();
}

int tilde_tau(const MappingClassRep& x, const MappingClassRep& y) {
  if (!(x.model == y.model)) throw std::invalid_argument("tilde_tau: model mismatch");
  const int eps_tau = x.model.calibration().eps_tau;
  return meyer_tau(annulus(x), annulus(y), eps_tau) - meyer_tau(cap(x), cap(y), eps_tau);
}

int cocycle_defect(const SymplecticMatrix& a, const SymplecticMatrix& b,
                   const SymplecticMatrix& c, int eps_tau) {
  return meyer_tau(b, c, eps_tau) - meyer_tau(a * b, c, eps_tau) + meyer_tau(a, b * c, eps_tau) -
         meyer_tau(a, b, eps_tau);
}

}  // namespace mcgsig
