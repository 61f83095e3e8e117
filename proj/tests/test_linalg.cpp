#include <doctest.h>

#include "mcgsig/linalg.hpp"
#include "oracles.hpp"

using namespace mcgsig;

TEST_CASE("rref identity and rank-1") {
  const Mat id = Mat::identity(3);
  auto [red, pivots] = rref(id);
  CHECK(red == id);
  CHECK(pivots == std::vector<std::size_t>{0, 1, 2});

  const Mat m{{Rat(2), Rat(4)}, {Rat(1), Rat(2)}};
  auto [red2, pivots2] = rref(m);
  CHECK(red2 == Mat{{Rat(1), Rat(2)}, {Rat(0), Rat(0)}});
  CHECK(pivots2 == std::vector<std::size_t>{0});
}

TEST_CASE("rref of random invertible matrices is the identity") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Mat m = oracles::random_invertible(rng, 5);
    auto [red, pivots] = rref(m);
    CHECK(red == Mat::identity(5));
    CHECK(pivots.size() == 5);
  }
}

TEST_CASE("kernel and image: trivial cases and rank-nullity") {
  const Mat z = Mat::zero(4, 4);
  CHECK(kernel(z).dim() == 4);
  CHECK(image(z).dim() == 0);
  CHECK(kernel(Mat::identity(4)).dim() == 0);
  CHECK(image(Mat::identity(4)).dim() == 4);

  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat m = oracles::random_mat(rng, 6, 4);
    CHECK(kernel(m).dim() + image(m).dim() == 4);
    // Kernel vectors really are annihilated.
    const Subspace k = kernel(m);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m * k.basis().row(i)));
  }
}

TEST_CASE("subspace sum/intersection: idempotence and the dimension law") {
  const Subspace e1 = Subspace::span({unit_vec(2, 0)}, 2);
  const Subspace e2 = Subspace::span({unit_vec(2, 1)}, 2);
  CHECK(intersect(e1, e1) == e1);
  CHECK(sum(e1, e1) == e1);
  CHECK(intersect(e1, e2).dim() == 0);

  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const auto u = Subspace::span_of_rows(
        oracles::random_mat(rng, static_cast<std::size_t>(rng.uniform(0, 8)), 8));
    const auto v = Subspace::span_of_rows(
        oracles::random_mat(rng, static_cast<std::size_t>(rng.uniform(0, 8)), 8));
    CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());
    CHECK(sum(u, v).contains(u));
    CHECK(u.contains(intersect(u, v)));
  }
}

TEST_CASE("subspace canonicity: different spanning sets, identical basis") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace u =
        Subspace::span_of_rows(oracles::random_mat(rng, 3, 6));
    // Respan from random combinations of the basis.
    std::vector<Vec> combos;
    for (int i = 0; i < 5; ++i) {
      Vec v(6);
      for (std::size_t r = 0; r < u.dim(); ++r)
        v = v + oracles::random_rat(rng) * u.basis().row(r);
      combos.push_back(v);
    }
    const Subspace w = Subspace::span(combos, 6);
    if (w.dim() == u.dim()) CHECK(w == u);
    CHECK(u.contains(w));
  }
}

TEST_CASE("quotient_basis") {
  const Subspace full = Subspace::full(2);
  const Subspace e1 = Subspace::span({unit_vec(2, 0)}, 2);
  CHECK(quotient_basis(e1, e1).empty());
  const auto reps = quotient_basis(full, e1);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0][1] != 0);  // representative congruent to e2 mod e1
  CHECK_THROWS_AS(quotient_basis(e1, full), std::invalid_argument);

  Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Subspace d = Subspace::span_of_rows(oracles::random_mat(rng, 2, 6));
    Subspace w = d;
    for (int i = 0; i < 2; ++i)
      w = sum(w, Subspace::span({oracles::random_mat(rng, 1, 6).row(0)}, 6));
    const auto r = quotient_basis(w, d);
    CHECK(r.size() == w.dim() - d.dim());
    // Representatives together with d's basis span w.
    std::vector<Vec> all = r;
    for (std::size_t i = 0; i < d.dim(); ++i) all.push_back(d.basis().row(i));
    CHECK(Subspace::span(all, 6) == w);
  }
}

TEST_CASE("solve") {
  const Mat id = Mat::identity(3);
  const Vec b{Rat(1), Rat(-2), make_rat(1, 3)};
  CHECK(solve(id, b) == b);

  const Mat row{{Rat(1), Rat(1)}};
  const auto x = solve(row, {Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 2);

  // Inconsistent system.
  const Mat m{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK(!solve(m, {Rat(0), Rat(1)}).has_value());

  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = oracles::random_mat(rng, 5, 7);
    Vec x0(7);
    for (auto& e : x0) e = oracles::random_rat(rng);
    const Vec b2 = a * x0;
    const auto sol = solve(a, b2);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b2);  // residual exactly zero
  }
}

TEST_CASE("symmetric_signature: closed forms") {
  const Mat d{{Rat(2), Rat(0), Rat(0)}, {Rat(0), Rat(-3), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
  CHECK(symmetric_signature(d) == Signature{1, 1, 1});
  const Mat pd{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
  CHECK(symmetric_signature(pd) == Signature{2, 0, 0});
  // Hyperbolic plane: all-zero diagonal exercises the off-diagonal pivot.
  const Mat hyp{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  CHECK(symmetric_signature(hyp) == Signature{1, 1, 0});
  const Mat asym{{Rat(0), Rat(1)}, {Rat(2), Rat(0)}};
  CHECK_THROWS_AS(symmetric_signature(asym), std::invalid_argument);
}

TEST_CASE("symmetric_signature agrees with the characteristic-polynomial oracle") {
  Rng rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
    const Mat g = oracles::random_symmetric(rng, n);
    CHECK(symmetric_signature(g) == oracles::eigen_sign_count(g));
  }
}

TEST_CASE("symmetric_signature is a congruence invariant") {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat g = oracles::random_symmetric(rng, 5);
    const Mat p = oracles::random_invertible(rng, 5);
    CHECK(symmetric_signature(p.transpose() * g * p) == symmetric_signature(g));
  }
}
