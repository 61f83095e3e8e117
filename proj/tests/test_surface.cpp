#include <doctest.h>

#include "mcgsig/rng.hpp"
#include "mcgsig/surface.hpp"

using namespace mcgsig;

namespace {

Word random_catalog_word(Rng& rng, const SurfaceModel& model, std::size_t max_len) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < model.genus(); ++i) {
    names.push_back("t_a" + std::to_string(i + 1));
    names.push_back("t_b" + std::to_string(i + 1));
  }
  names.push_back("t_d");
  return random_word(rng, names, max_len);
}

}  // namespace

TEST_CASE("word grammar") {
  CHECK(parse_word("").empty());
  CHECK(parse_word("  ").empty());
  const Word w = parse_word("t_alpha^2 * t_alpha_prime*t_beta^-1");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == WordFactor{"t_alpha", 2});
  CHECK(w[1] == WordFactor{"t_alpha_prime", 1});
  CHECK(w[2] == WordFactor{"t_beta", -1});
  CHECK(parse_word(word_to_string(w)) == w);
  CHECK_THROWS_AS(parse_word("t_a1^"), WordParseError);
  CHECK_THROWS_AS(parse_word("t_a1 t_a2"), WordParseError);
  CHECK_THROWS_AS(parse_word("*t_a1"), WordParseError);
  CHECK_THROWS_AS(parse_word("t_a1^0"), WordParseError);
}

TEST_CASE("unknown generator") {
  const SurfaceModel model(1);
  const Catalog cat = Catalog::standard(model);
  CHECK_THROWS_AS(evaluate(parse_word("t_nope"), cat, model), UnknownGenerator);
}

TEST_CASE("twist along the boundary class acts trivially on homology") {
  const SurfaceModel model(1);
  const Catalog cat = Catalog::standard(model);
  const MappingClassRep rep = twist(cat.resolve("t_d"), model);
  CHECK(rep.action == Mat::identity(3));
  CHECK(rep.disp == model.boundary_class());  // eps_twist = eps_arc = +1 defaults
}

TEST_CASE("twist along a_1 is the expected transvection with zero displacement") {
  const SurfaceModel model(1);
  const Catalog cat = Catalog::standard(model);
  const MappingClassRep rep = twist(cat.resolve("t_a1"), model);
  CHECK(is_zero(rep.disp));
  // a_1 and d fixed, b_1 -> b_1 - a_1 under the default handedness.
  CHECK(rep.action * unit_vec(3, 0) == unit_vec(3, 0));
  CHECK(rep.action * unit_vec(3, 2) == unit_vec(3, 2));
  Vec b1_img = rep.action * unit_vec(3, 1);
  CHECK(b1_img[1] == 1);
  CHECK(b1_img[0] * b1_img[0] == 1);
  CHECK(b1_img[2] == 0);
}

TEST_CASE("rep invariants hold on every evaluated word") {
  Rng rng(211);
  for (std::size_t g : {0u, 1u, 2u}) {
    const SurfaceModel model(g);
    const Catalog cat = Catalog::standard(model);
    for (int trial = 0; trial < 25; ++trial) {
      const Word w = random_catalog_word(rng, model, 5);
      const MappingClassRep rep = evaluate(w, cat, model);
      CHECK_NOTHROW(rep.check_invariants());
    }
  }
}

TEST_CASE("compose/inverse/power") {
  const SurfaceModel model(1);
  const Catalog cat = Catalog::standard(model);
  Rng rng(223);
  for (int trial = 0; trial < 20; ++trial) {
    const Word wu = random_catalog_word(rng, model, 4);
    const Word wv = random_catalog_word(rng, model, 4);
    const auto u = evaluate(wu, cat, model);
    const auto v = evaluate(wv, cat, model);
    const auto id = MappingClassRep::identity(model);
    CHECK(compose(u, inverse(u)).action == id.action);
    CHECK(compose(u, inverse(u)).disp == id.disp);
    // (evaluate, compose) is a monoid homomorphism from words.
    const auto both = evaluate(word_concat(wu, wv), cat, model);
    CHECK(compose(u, v).action == both.action);
    CHECK(compose(u, v).disp == both.disp);
    // Associativity.
    const auto w = evaluate(random_catalog_word(rng, model, 3), cat, model);
    CHECK(compose(compose(u, v), w).action == compose(u, compose(v, w)).action);
    CHECK(compose(compose(u, v), w).disp == compose(u, compose(v, w)).disp);
  }

  const auto td = twist(cat.resolve("t_d"), model);
  for (long k : {-3L, -1L, 0L, 2L, 5L}) {
    const auto p = power(td, k);
    CHECK(p.action == Mat::identity(3));
    CHECK(p.disp == Rat(k) * model.boundary_class());
  }
}

TEST_CASE("class function: identity and boundary twists") {
  const SurfaceModel model0(0);
  const Catalog cat0 = Catalog::standard(model0);
  CHECK(class_function_m(MappingClassRep::identity(model0)) == ProjectiveRational::zero());

  // g = 0 closed-form family under the calibrated default signs.
  for (long q = -10; q <= 10; ++q) {
    Word w;
    if (q != 0) w.push_back({"t_beta", -q});
    CHECK(class_function_m(evaluate(w, cat0, model0)) == ProjectiveRational(1, q));
  }
}

TEST_CASE("class function: genus-1 twist-word family") {
  const SurfaceModel model(1);
  const Catalog cat = Catalog::standard(model);
  for (long p = -5; p <= 5; ++p) {
    Word w;
    if (p != 0) w.push_back({"t_alpha", p});
    w.push_back({"t_alpha_prime", 1});
    w.push_back({"t_beta", -1});
    const auto m = class_function_m(evaluate(w, cat, model));
    // [p+1 : +-1]; the sign of the second coordinate is the residual
    // involution the calibration report flags (see calibrate.hpp).
    if (p == -1) {
      CHECK(m == ProjectiveRational::absorbing());
    } else {
      CHECK(m.p() == ((p + 1 > 0) ? Int(p + 1) : Int(-(p + 1))));
      CHECK(m.q() * m.q() == 1);
    }
  }

  const Word w = parse_word("t_alpha^2*t_alpha_prime*t_beta^-1");
  const auto rep = evaluate(w, cat, model);
  CHECK(image(rep.action - Mat::identity(3)).dim() == 1);
}

TEST_CASE("class function: words supported away from the arc have m = [1:0]") {
  const SurfaceModel model(2);
  const Catalog cat = Catalog::standard(model);
  Rng rng(227);
  const std::vector<std::string> interior = {"t_a1", "t_b1", "t_a2", "t_b2"};
  for (int trial = 0; trial < 30; ++trial) {
    const Word w = random_word(rng, interior, 5);
    CHECK(class_function_m(evaluate(w, cat, model)) == ProjectiveRational::zero());
  }
}

TEST_CASE("class function: conjugation invariance, power law, negation") {
  Rng rng(229);
  for (std::size_t g : {0u, 1u, 2u}) {
    const SurfaceModel model(g);
    const Catalog cat = Catalog::standard(model);
    for (int trial = 0; trial < 15; ++trial) {
      const Word wu = random_catalog_word(rng, model, 4);
      const Word wv = random_catalog_word(rng, model, 4);
      const auto u = evaluate(wu, cat, model);
      const auto v = evaluate(wv, cat, model);
      CHECK(class_function_m(compose(compose(u, v), inverse(u))) == class_function_m(v));
      CHECK(class_function_m(inverse(u)) == neg(class_function_m(u)));
      const long k = rng.uniform(-5, 5);
      CHECK(class_function_m(power(u, k)) == scalar_mul(k, class_function_m(u)));
    }
  }
}

TEST_CASE("class function: degenerate input raises") {
  // A synthetic pair (I, 0) with s forced into Im(M-I) cannot come from the
  // group; fabricate M-I with image containing both s and w.
  const SurfaceModel model(1);
  MappingClassRep bad = MappingClassRep::identity(model);
  // M = transvection along d would be identity; instead make M-I = diag gadget
  // hitting d. Such an action does not fix s, so build directly.
  bad.action(2, 1) = 1;  // b_1 -> b_1 + d: fixes s = d, preserves omega? check not required here
  bad.disp = Vec(3);
  // Now Im(M-I) = span(d), so both p and q directions degenerate differently:
  // w = 0 in W and s in W gives a 2-dimensional solution space.
  CHECK_THROWS_AS(class_function_m(bad), DegenerateKernel);
}

TEST_CASE("surjectivity witnesses round-trip") {
  {
    const SurfaceModel model(0);
    const Catalog cat = Catalog::standard(model);
    CHECK(surjectivity_witness(ProjectiveRational::zero(), model, cat).empty());
    for (long q = -5; q <= 5; ++q) {
      const auto target = ProjectiveRational(1, q);
      const Word w = surjectivity_witness(target, model, cat);
      CHECK(class_function_m(evaluate(w, cat, model)) == target);
    }
    CHECK_THROWS_AS(surjectivity_witness(ProjectiveRational(2, 1), model, cat),
                    std::invalid_argument);
    CHECK_THROWS_AS(surjectivity_witness(ProjectiveRational::absorbing(), model, cat),
                    std::invalid_argument);
  }
  {
    const SurfaceModel model(1);
    const Catalog cat = Catalog::standard(model);
    for (long p = -5; p <= 5; ++p)
      for (long q = -5; q <= 5; ++q) {
        if (p == 0 && q == 0) continue;
        const auto target = ProjectiveRational(p, q);
        const Word w = surjectivity_witness(target, model, cat);
        CHECK(class_function_m(evaluate(w, cat, model)) == target);
      }
  }
}
