#include "mcgsig/calibrate.hpp"

#include "mcgsig/errors.hpp"
#include "mcgsig/meyer.hpp"
#include "mcgsig/rng.hpp"

namespace mcgsig {

namespace {

bool cobound_identity_holds(const SurfaceModel& model, const Catalog& catalog, const Word& u,
                            const Word& v) {
  const MappingClassRep ru = evaluate(u, catalog, model);
  const MappingClassRep rv = evaluate(v, catalog, model);
  const int lhs = tilde_tau(ru, rv);
  const int rhs = sign(class_function_m(ru)) + sign(class_function_m(rv)) +
                  sign(class_function_m(inverse(compose(ru, rv))));
  return lhs == rhs;
}

}  // namespace

std::vector<CalibrationScore> calibration_scan(std::uint64_t seed, int corpus_pairs) {
  std::vector<CalibrationScore> scores;
  for (int et : {+1, -1})
    for (int el : {+1, -1})
      for (int etau : {+1, -1}) {
        CalibrationScore sc;
        sc.cal = {et, el, etau};

        {
          const SurfaceModel model(0, sc.cal);
          const Catalog catalog = Catalog::standard(model);
          int flipped = 0;
          for (long q = -10; q <= 10; ++q) {
            Word w;
            if (q != 0) w.push_back({"t_beta", -q});
            const auto mq = class_function_m(evaluate(w, catalog, model));
            ++sc.fixtures_genus0_total;
            if (mq == ProjectiveRational(1, q)) ++sc.fixtures_genus0_pass;
            if (mq == ProjectiveRational(1, -q)) ++flipped;
          }
          sc.genus0_flipped =
              sc.fixtures_genus0_pass < sc.fixtures_genus0_total && flipped == sc.fixtures_genus0_total;
        }
        {
          const SurfaceModel model(1, sc.cal);
          const Catalog catalog = Catalog::standard(model);
          int flipped = 0;
          for (long p = -5; p <= 5; ++p) {
            Word w;
            if (p != 0) w.push_back({"t_alpha", p});
            w.push_back({"t_alpha_prime", 1});
            w.push_back({"t_beta", -1});
            const auto m = class_function_m(evaluate(w, catalog, model));
            ++sc.fixtures_genus1_total;
            if (m == ProjectiveRational(p + 1, -1)) ++sc.fixtures_genus1_pass;
            if (m == ProjectiveRational(p + 1, 1)) ++flipped;
          }
          sc.genus1_flipped =
              sc.fixtures_genus1_pass < sc.fixtures_genus1_total && flipped == sc.fixtures_genus1_total;
        }

        Rng rng(seed);
        for (int i = 0; i < corpus_pairs; ++i) {
          const std::size_t genus = i % 2;  // half genus 0, half genus 1
          const SurfaceModel model(genus, sc.cal);
          const Catalog catalog = Catalog::standard(model);
          std::vector<std::string> names;
          for (std::size_t k = 0; k < genus; ++k) {
            names.push_back("t_a" + std::to_string(k + 1));
            names.push_back("t_b" + std::to_string(k + 1));
          }
          names.push_back("t_d");
          const Word u = random_word(rng, names, 4);
          const Word v = random_word(rng, names, 4);
          ++sc.cobound_total;
          if (!cobound_identity_holds(model, catalog, u, v)) ++sc.cobound_fail;
        }

        scores.push_back(sc);
      }
  return scores;
}

CalibrationScore choose_calibration(const std::vector<CalibrationScore>& scores) {
  const CalibrationScore* best = nullptr;
  for (const auto& sc : scores) {
    if (!sc.cobound_ok()) continue;
    if (!best || sc.fixtures_pass() > best->fixtures_pass()) best = &sc;
  }
  if (!best)
    throw NoConsistentAssignment(
        "no sign assignment satisfies the coboundary identity on the corpus; "
        "this indicates an implementation bug, not a calibration issue");
  return *best;
}

Calibration default_calibration() { return {+1, +1, +1}; }

}  // namespace mcgsig
