#pragma once

#include "mcgsig/errors.hpp"
#include "mcgsig/matrix.hpp"
#include "mcgsig/surface.hpp"

namespace mcgsig {

/// Standard symplectic form on the ordered basis (a_1..a_n, b_1..b_n):
/// J = [[0, I], [-I, 0]].
Mat symplectic_form(std::size_t half_dim);

/// Exact-rational 2n x 2n matrix with M^T J M = J; validated on construction.
struct SymplecticMatrix {
  std::size_t n = 0;
  Mat m;

  SymplecticMatrix() = default;
  SymplecticMatrix(std::size_t half_dim, Mat matrix);

  static SymplecticMatrix identity(std::size_t half_dim) {
    return {half_dim, Mat::identity(2 * half_dim)};
  }

  SymplecticMatrix operator*(const SymplecticMatrix& other) const;
  SymplecticMatrix inverse() const;

  bool operator==(const SymplecticMatrix&) const = default;
};

/// Homology action on the closed genus-g surface obtained by capping both
/// boundary circles with disks: the quotient of H_1 by the class d.
SymplecticMatrix cap(const MappingClassRep& rep);

/// Homology action on the closed genus-(g+1) surface obtained by joining the
/// boundary circles with an annulus. The annulus core becomes a_{g+1} (the
/// image of d) and the closure of the arc l becomes b_{g+1}.
SymplecticMatrix annulus(const MappingClassRep& rep);

}  // namespace mcgsig
