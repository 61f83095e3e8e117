#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcgsig/errors.hpp"
#include "mcgsig/linalg.hpp"
#include "mcgsig/matrix.hpp"
#include "mcgsig/qp1.hpp"

namespace mcgsig {

/// Orientation conventions the source material fixes only through pictures.
/// Resolved operationally by the calibration scan (see calibrate.hpp).
struct Calibration {
  int eps_twist = +1;  // handedness of catalog Dehn twists
  int eps_arc = +1;    // value of the arc functional on the boundary class d
  int eps_tau = +1;    // global sign of the Meyer cocycle
  bool operator==(const Calibration&) const = default;
};

/// Homological model of the genus-g surface with two boundary circles.
/// Ordered basis of H_1: (a_1..a_g, b_1..b_g, d) where d is the class of the
/// boundary circle S_1; the intersection form has <a_i,b_i> = 1 and d in the
/// radical. The arc functional lambda pairs with the relative class of an arc
/// l joining the two boundary circles; l is chosen disjoint from the a_i, b_i
/// representatives, so lambda is supported on d.
class SurfaceModel {
 public:
  explicit SurfaceModel(std::size_t genus, Calibration cal = {});

  std::size_t genus() const { return genus_; }
  std::size_t dim() const { return 2 * genus_ + 1; }
  const Calibration& calibration() const { return cal_; }

  const Mat& omega() const { return omega_; }
  /// Coordinate vector of the boundary class [S_1] = d.
  Vec boundary_class() const;
  std::size_t d_index() const { return 2 * genus_; }

  /// lambda(c) = eps_arc * (d-coefficient of c).
  Rat arc_pairing(const Vec& c) const;
  /// <x, y> with respect to the intersection form.
  Rat pairing(const Vec& x, const Vec& y) const;

  bool operator==(const SurfaceModel&) const = default;

 private:
  std::size_t genus_;
  Calibration cal_;
  Mat omega_;
};

/// A simple closed curve the catalog can twist along, given by its homology
/// class. Realizability of a user-registered class by an embedded curve is
/// the user's responsibility; everything downstream only uses the class.
struct TwistGenerator {
  std::string name;
  Vec cls;            // integer entries, nonzero
  int handedness = +1;
};

/// The pair (homology action, arc displacement class) of a mapping class.
/// This is all the class function needs.
struct MappingClassRep {
  SurfaceModel model;
  Mat action;  // invertible, fixes d, preserves the intersection form
  Vec disp;    // omega_l(phi) = phi(l) - l

  static MappingClassRep identity(const SurfaceModel& model);
  /// Checks action * s = s and action^T Omega action = Omega.
  void check_invariants() const;
};

MappingClassRep twist(const TwistGenerator& gen, const SurfaceModel& model);
/// x after y (the right factor acts first); the crossed-homomorphism law
/// (M1 M2, w1 + M1 w2).
MappingClassRep compose(const MappingClassRep& x, const MappingClassRep& y);
MappingClassRep inverse(const MappingClassRep& x);
MappingClassRep power(const MappingClassRep& x, long k);

struct WordFactor {
  std::string name;
  long exponent;
  bool operator==(const WordFactor&) const = default;
};
using Word = std::vector<WordFactor>;

/// Grammar: word := factor ("*" factor)*, factor := NAME ("^" INT)?
/// Whitespace around tokens is permitted. Empty input is the empty word.
Word parse_word(const std::string& text);
std::string word_to_string(const Word& word);
Word word_inverse(const Word& word);
Word word_concat(const Word& u, const Word& v);

class Catalog {
 public:
  /// t_a1..t_ag, t_b1..t_bg, t_d; aliases t_alpha, t_alpha_prime, t_beta at
  /// g >= 1 (classes a_1, -a_1-d, d), and t_beta = t_d at g = 0.
  static Catalog standard(const SurfaceModel& model);

  void register_generator(TwistGenerator gen);
  const TwistGenerator& resolve(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, TwistGenerator> gens_;
};

MappingClassRep evaluate(const Word& word, const Catalog& catalog, const SurfaceModel& model);

/// The class function m. Solves for the line {(p,q) : p w + q s in Im(M-I)}
/// and returns its canonical projective representative. Throws
/// DegenerateKernel if that solution space is not 1-dimensional.
ProjectiveRational class_function_m(const MappingClassRep& rep);

/// A word whose class-function value is the given target. At g = 0 only
/// targets [1:k] are reachable; throws std::invalid_argument otherwise.
Word surjectivity_witness(const ProjectiveRational& target, const SurfaceModel& model,
                          const Catalog& catalog);

}  // namespace mcgsig
