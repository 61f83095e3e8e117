#pragma once

#include <string>

#include "mcgsig/rational.hpp"

namespace mcgsig {

/// An element [p:q] of the rational projective line, carried as the monoid
/// with addition [p:q]+[r:s] = [pr:ps+qr], zero [1:0] and absorbing element
/// [0:1]. Stored canonically: gcd(|p|,|q|) = 1, p >= 0, and q = 1 when p = 0.
class ProjectiveRational {
 public:
  ProjectiveRational() : p_(1), q_(0) {}  // the zero element [1:0]
  ProjectiveRational(Int p, Int q);
  ProjectiveRational(long p, long q) : ProjectiveRational(Int(p), Int(q)) {}

  /// [p:q] from rational coordinates, clearing denominators.
  static ProjectiveRational from_coords(const Rat& p, const Rat& q);
  static ProjectiveRational zero() { return {}; }
  static ProjectiveRational absorbing() { return {0, 1}; }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  bool operator==(const ProjectiveRational&) const = default;

  std::string str() const;

 private:
  Int p_, q_;
};

ProjectiveRational add(const ProjectiveRational& x, const ProjectiveRational& y);
ProjectiveRational neg(const ProjectiveRational& x);
ProjectiveRational scalar_mul(long k, const ProjectiveRational& x);
int sign(const ProjectiveRational& x);

inline ProjectiveRational operator+(const ProjectiveRational& x, const ProjectiveRational& y) {
  return add(x, y);
}

}  // namespace mcgsig
