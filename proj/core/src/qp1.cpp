#include "mcgsig/qp1.hpp"

#include <stdexcept>

namespace mcgsig {

ProjectiveRational::ProjectiveRational(Int p, Int q) {
  if (p == 0 && q == 0)
    throw std::invalid_argument("ProjectiveRational: [0:0] is not a point of QP^1");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  p_ = p;
  q_ = q;
}

ProjectiveRational ProjectiveRational::from_coords(const Rat& p, const Rat& q) {
  // Clear denominators to reach integer homogeneous coordinates.
  const Int lcm_den = [&] {
    Int l;
    mpz_lcm(l.get_mpz_t(), p.get_den().get_mpz_t(), q.get_den().get_mpz_t());
    return l;
  }();
  Rat ps = p * lcm_den, qs = q * lcm_den;
  return ProjectiveRational(ps.get_num(), qs.get_num());
}

std::string ProjectiveRational::str() const {
  return "[" + p_.get_str() + ":" + q_.get_str() + "]";
}

ProjectiveRational add(const ProjectiveRational& x, const ProjectiveRational& y) {
  if (x == ProjectiveRational::absorbing() && y == ProjectiveRational::absorbing())
    return ProjectiveRational::absorbing();
  return ProjectiveRational(x.p() * y.p(), x.p() * y.q() + x.q() * y.p());
}

ProjectiveRational neg(const ProjectiveRational& x) { return ProjectiveRational(x.p(), -x.q()); }

ProjectiveRational scalar_mul(long k, const ProjectiveRational& x) {
  if (k == 0) return ProjectiveRational::zero();
  // Closed form: k[p:q] = [p:kq] for p != 0, and k[0:1] = [0:1]; the iterated
  // addition definition is kept as a test oracle.
  if (x.p() == 0) return ProjectiveRational::absorbing();
  return ProjectiveRational(x.p(), k * x.q());
}

int sign(const ProjectiveRational& x) { return sign_of(Int(x.p() * x.q())); }

}  // namespace mcgsig
