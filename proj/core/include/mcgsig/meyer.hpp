#pragma once

#include "mcgsig/linalg.hpp"
#include "mcgsig/stabilize.hpp"
#include "mcgsig/surface.hpp"

namespace mcgsig {

/// The bilinear form whose signature is the Meyer cocycle value: built on
/// V_{A,B} = ker [A^{-1}-I | B-I] with Gram entry
/// <(x1,y1),(x2,y2)> = (x1+y1)^T J (I-B) y2.
struct MeyerForm {
  std::size_t n = 0;
  Subspace v{0};
  Mat gram;
};

/// Throws GramAsymmetry if the form fails to be symmetric on V_{A,B}.
MeyerForm meyer_form(const SymplecticMatrix& a, const SymplecticMatrix& b);

/// tau(A, B) = eps_tau * signature of the Meyer form.
int meyer_tau(const SymplecticMatrix& a, const SymplecticMatrix& b, int eps_tau = +1);

/// eta* tau_{g+1} - theta* tau_g on a pair of mapping classes; eps_tau comes
/// from the model calibration.
int tilde_tau(const MappingClassRep& x, const MappingClassRep& y);

/// delta tau evaluated on a triple: tau(B,C) - tau(AB,C) + tau(A,BC) - tau(A,B).
/// Zero for a genuine cocycle.
int cocycle_defect(const SymplecticMatrix& a, const SymplecticMatrix& b,
                   const SymplecticMatrix& c, int eps_tau = +1);

}  // namespace mcgsig
