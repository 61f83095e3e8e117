#include <doctest.h>

#include "mcgsig/json_io.hpp"
#include "mcgsig/rng.hpp"
#include "mcgsig/wall.hpp"

using namespace mcgsig;
using nlohmann::json;

TEST_CASE("matrix JSON round-trip keeps exactness") {
  Rng rng(601);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        m(i, j) = make_rat(rng.uniform(-1000, 1000), rng.uniform(1, 97));
    CHECK(mat_from_json(mat_to_json(m)) == m);
  }
  // Plain integers are accepted too.
  const json j = json::parse(R"([[1, "2/3"], ["-4", 0]])");
  const Mat m = mat_from_json(j);
  CHECK(m(0, 1) == make_rat(2, 3));
  CHECK(m(1, 0) == Rat(-4));
}

TEST_CASE("projective point JSON is the canonical [p, q] pair") {
  const ProjectiveRational x(6, -4);  // canonical [3:-2]
  const json j = qp1_to_json(x);
  CHECK(j[0] == "3");
  CHECK(j[1] == "-2");
  CHECK(qp1_from_json(j) == x);
}

TEST_CASE("generator registration from JSON") {
  const json j = json::parse(R"({"name": "t_custom", "class": [1, 0, 1], "handedness": -1})");
  const TwistGenerator gen = generator_from_json(j);
  CHECK(gen.name == "t_custom");
  CHECK(gen.handedness == -1);
  const SurfaceModel model(1);
  Catalog cat = Catalog::standard(model);
  cat.register_generator(gen);
  CHECK_NOTHROW(evaluate(parse_word("t_custom^2"), cat, model));
}

TEST_CASE("wall triple from JSON") {
  const auto t = pants_triple(ProjectiveRational(1, 1), ProjectiveRational(1, 1),
                              ProjectiveRational(1, 1));
  json j;
  j["omega"] = mat_to_json(t.omega);
  j["A"] = mat_to_json(t.a.basis());
  j["B"] = mat_to_json(t.b.basis());
  j["C"] = mat_to_json(t.c.basis());
  const WallTriple back = wall_triple_from_json(j);
  CHECK(wall_signature(back).signature == wall_signature(t).signature);
}
