#pragma once

#include <cstdint>

#include "mcgsig/linalg.hpp"
#include "mcgsig/qp1.hpp"
#include "mcgsig/surface.hpp"

namespace mcgsig {

/// A symplectic space with three Lagrangian subspaces, the input of the
/// non-additivity correction Sign(V;BCA). The argument order throughout is
/// (B, C, A); the value is sensitive to the cyclic order.
struct WallTriple {
  Mat omega;  // antisymmetric intersection form on V
  Subspace a, b, c;
};

struct WallResult {
  int signature = 0;
  std::size_t dim_w = 0;
};

/// Signature of Wall's form Psi on W = B cap (C+A) / ((B cap C)+(B cap A)).
/// Throws NonLagrangian if A, B or C fails to be its own annihilator, and
/// DecompositionFailure if a representative cannot be split a'+b'+c' = 0.
/// A nonzero perturb_seed picks randomized alternate decompositions
/// a'+b'+c' = 0; the result must not depend on the choice.
WallResult wall_signature(const WallTriple& t, std::uint64_t perturb_seed = 0);

/// The explicit 12-dimensional triple attached to the boundary tori of a
/// surface bundle over the pair of pants, with monodromy m-values m1, m2, m3.
WallTriple pants_triple(const ProjectiveRational& m1, const ProjectiveRational& m2,
                        const ProjectiveRational& m3);

/// Sign(E_g) - Sign(E_{g,2}) = -sign(m(x) + m(y) + m((xy)^{-1})).
int sig_diff_cap(const MappingClassRep& x, const MappingClassRep& y);

/// Sign(E_{g+1}) - Sign(E_{g,2}) = sum of signs minus sign of the sum.
int sig_diff_annulus(const MappingClassRep& x, const MappingClassRep& y);

}  // namespace mcgsig
