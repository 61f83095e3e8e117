#pragma once

#include <cstdint>
#include <vector>

#include "mcgsig/surface.hpp"

namespace mcgsig {

/// Scorecard of one sign assignment (eps_twist, eps_arc, eps_tau) against
/// the closed-form fixtures and the coboundary identity on a fixed corpus.
struct CalibrationScore {
  Calibration cal;
  int fixtures_genus0_pass = 0;   // m(t_beta^{-q}) = [1:q], q in [-10,10]
  int fixtures_genus0_total = 0;
  bool genus0_flipped = false;    // whole family matches only after q -> -q
  int fixtures_genus1_pass = 0;   // m(t_alpha^p t_alpha' t_beta^{-1}) = [p+1:-1]
  int fixtures_genus1_total = 0;
  bool genus1_flipped = false;
  int cobound_fail = 0;           // coboundary-identity failures on the corpus
  int cobound_total = 0;

  int fixtures_pass() const { return fixtures_genus0_pass + fixtures_genus1_pass; }
  bool cobound_ok() const { return cobound_fail == 0; }
};

/// Scores all 8 assignments on the corpus (default: 50 seeded word pairs
/// split across genus 0 and 1).
std::vector<CalibrationScore> calibration_scan(std::uint64_t seed = 2026, int corpus_pairs = 50);

/// The winning assignment: coboundary identity must hold, then most fixtures,
/// then lexicographically smallest signs. Throws NoConsistentAssignment when
/// no assignment satisfies the coboundary identity.
CalibrationScore choose_calibration(const std::vector<CalibrationScore>& scores);

/// Compiled-in default produced by the scan on a fresh checkout.
Calibration default_calibration();

}  // namespace mcgsig
