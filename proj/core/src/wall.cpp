#include "mcgsig/wall.hpp"

#include "mcgsig/errors.hpp"
#include "mcgsig/rng.hpp"

namespace mcgsig {

namespace {

/// Annihilator of a subspace with respect to omega: {x : U Omega x = 0}.
Subspace annihilator(const Subspace& s, const Mat& omega) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return kernel(s.basis() * omega);
}

void require_lagrangian(const Subspace& s, const Mat& omega, const char* label) {
  if (!(annihilator(s, omega) == s))
    throw NonLagrangian(std::string("wall_signature: subspace ") + label +
                        " is not its own annihilator");
}

}  // namespace

WallResult wall_signature(const WallTriple& t, std::uint64_t perturb_seed) {
  const std::size_t n = t.omega.rows();
  if (t.a.ambient_dim() != n || t.b.ambient_dim() != n || t.c.ambient_dim() != n)
    throw std::invalid_argument("wall_signature: ambient dimension mismatch");
  require_lagrangian(t.a, t.omega, "A");
  require_lagrangian(t.b, t.omega, "B");
  require_lagrangian(t.c, t.omega, "C");

  const Subspace w_space = intersect(t.b, sum(t.c, t.a));
  const Subspace degenerate = sum(intersect(t.b, t.c), intersect(t.b, t.a));
  const std::vector<Vec> reps = quotient_basis(w_space, degenerate);
  if (reps.empty()) return {0, 0};

  // Split each representative b' as -a' - c' with a' in A, c' in C.
  const Mat at = t.a.basis().transpose();
  const Mat ct = t.c.basis().transpose();
  const Mat system = at.hcat(ct);
  const Subspace homogeneous = kernel(system);
  Rng rng(perturb_seed);
  std::vector<Vec> c_parts;
  for (const Vec& bp : reps) {
    Vec rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = -bp[i];
    auto sol = solve(system, rhs);
    if (!sol) throw DecompositionFailure("wall_signature: b' not in C + A");
    if (perturb_seed != 0) {
      for (std::size_t k = 0; k < homogeneous.dim(); ++k)
        *sol = *sol + Rat(rng.uniform(-3, 3)) * homogeneous.basis().row(k);
    }
    Vec gamma(sol->begin() + static_cast<long>(t.a.dim()), sol->end());
    c_parts.push_back(ct * gamma);
  }

  const std::size_t k = reps.size();
  Mat gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(reps[i], t.omega * c_parts[j]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (gram(i, j) != gram(j, i))
        throw GramAsymmetry("wall_signature: Psi is not symmetric on W");
  return {symmetric_signature(gram).value(), k};
}

WallTriple pants_triple(const ProjectiveRational& m1, const ProjectiveRational& m2,
                        const ProjectiveRational& m3) {
  const ProjectiveRational ms[3] = {m1, m2, m3};
  const std::size_t dim = 12;
  auto e = [](std::size_t i, std::size_t j) { return 4 * i + j; };  // i, j zero-based

  // Each boundary-torus block (e_{i1}..e_{i4}) carries <e1,e3> = <e2,e4> = 1;
  // this is the block form that makes the three kernels Lagrangian.
  Mat omega(dim, dim);
  for (std::size_t i = 0; i < 3; ++i) {
    omega(e(i, 0), e(i, 2)) = 1;
    omega(e(i, 2), e(i, 0)) = -1;
    omega(e(i, 1), e(i, 3)) = 1;
    omega(e(i, 3), e(i, 1)) = -1;
  }

  std::vector<Vec> a_basis, b_basis, c_basis;
  for (std::size_t i = 0; i < 3; ++i) {
    a_basis.push_back(unit_vec(dim, e(i, 0)));
    a_basis.push_back(unit_vec(dim, e(i, 1)));
  }

  // B: fiber-circle differences plus the two section sums.
  for (std::size_t j = 0; j < 2; ++j) {
    Vec d1(dim), d2(dim);
    d1[e(0, j)] = 1;
    d1[e(1, j)] = -1;
    d2[e(0, j)] = 1;
    d2[e(2, j)] = -1;
    b_basis.push_back(d1);
    b_basis.push_back(d2);
  }
  for (std::size_t j = 2; j < 4; ++j) {
    Vec s(dim);
    s[e(0, j)] = 1;
    s[e(1, j)] = 1;
    s[e(2, j)] = 1;
    b_basis.push_back(s);
  }

  for (std::size_t i = 0; i < 3; ++i) {
    if (ms[i].p() != 0) {
      const Rat mi = make_rat(ms[i].q(), ms[i].p());
      Vec u(dim), v(dim);
      u[e(i, 0)] = 1;
      u[e(i, 1)] = 1;
      v[e(i, 2)] = 1;
      v[e(i, 3)] = -1;
      v[e(i, 0)] = mi;
      c_basis.push_back(u);
      c_basis.push_back(v);
    } else {
      c_basis.push_back(unit_vec(dim, e(i, 0)));
      c_basis.push_back(unit_vec(dim, e(i, 1)));
    }
  }

  return {omega, Subspace::span(a_basis, dim), Subspace::span(b_basis, dim),
          Subspace::span(c_basis, dim)};
}

int sig_diff_cap(const MappingClassRep& x, const MappingClassRep& y) {
  const ProjectiveRational mx = class_function_m(x);
  const ProjectiveRational my = class_function_m(y);
  const ProjectiveRational mz = class_function_m(inverse(compose(x, y)));
  return -sign(add(add(mx, my), mz));
}

int sig_diff_annulus(const MappingClassRep& x, const MappingClassRep& y) {
  const ProjectiveRational mx = class_function_m(x);
  const ProjectiveRational my = class_function_m(y);
  const ProjectiveRational mz = class_function_m(inverse(compose(x, y)));
  return sign(mx) + sign(my) + sign(mz) - sign(add(add(mx, my), mz));
}

}  // namespace mcgsig
