#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinphase/errors.hpp"
#include "spinphase/quadrature.hpp"
#include "spinphase/special.hpp"
#include "spinphase/sphere.hpp"

using namespace spinphase;

namespace {

Vector sample(const SphereGrid& grid, int l, int m) {
  Vector values(grid.size());
  for (int node = 0; node < grid.size(); ++node) {
    values(node) = spherical_harmonic(l, m, grid.node_theta(node), grid.node_phi(node));
  }
  return values;
}

}  // namespace

TEST_CASE("grid shape and total weight") {
  const GridPtr g0 = build_grid(0);
  CHECK(g0->n_theta() == 1);
  CHECK(g0->n_phi() == 2);
  double total = 0.0;
  for (int node = 0; node < g0->size(); ++node) total += g0->weight(node);
  CHECK(std::abs(total - 4.0 * M_PI) < 1e-12);

  const GridPtr g5 = build_grid(5);
  CHECK(g5->n_theta() == 6);
  CHECK(g5->n_phi() == 12);
  total = 0.0;
  for (int node = 0; node < g5->size(); ++node) {
    CHECK(g5->weight(node) > 0.0);
    total += g5->weight(node);
  }
  CHECK(std::abs(total - 4.0 * M_PI) < 1e-12);

  CHECK_THROWS_AS(build_grid(-1), InvalidIndex);
}

TEST_CASE("constant and zero-mean integrands") {
  const GridPtr grid = build_grid(3);
  CHECK(std::abs(integrate(*grid, Vector::Ones(grid->size())) - Complex(4.0 * M_PI)) <
        1e-12);
  CHECK(std::abs(integrate(*grid, sample(*grid, 1, 1))) < 1e-13);
}

TEST_CASE("every nonconstant harmonic integrates to zero up to the band limit") {
  const int L = 6;
  const GridPtr grid = build_grid(L);
  for (int l = 1; l <= L; ++l) {
    for (int m = -l; m <= l; ++m) {
      CHECK(std::abs(integrate(*grid, sample(*grid, l, m))) < 1e-12);
    }
  }
}

TEST_CASE("closed-form oracle: integral of cos^2 over the sphere") {
  const GridPtr grid = build_grid(2);
  Vector values(grid->size());
  for (int node = 0; node < grid->size(); ++node) {
    const double c = std::cos(grid->node_theta(node));
    values(node) = c * c;
  }
  CHECK(std::abs(integrate(*grid, values) - Complex(4.0 * M_PI / 3.0)) < 1e-13);
}

TEST_CASE("harmonic products integrate exactly up to the band limit") {
  const int L = 4;
  const GridPtr grid = build_grid(L);
  for (int l1 = 0; l1 <= L; ++l1) {
    for (int l2 = 0; l2 <= L; ++l2) {
      for (int m1 = -l1; m1 <= l1; ++m1) {
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const Complex overlap = integrate(
              *grid, sample(*grid, l1, m1).cwiseProduct(sample(*grid, l2, m2).conjugate()));
          const double expected = (l1 == l2 && m1 == m2) ? 1.0 : 0.0;
          CHECK(std::abs(overlap - Complex(expected)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("orthonormality at the band limit") {
  const GridPtr grid = build_grid(2);
  const Complex overlap =
      integrate(*grid, sample(*grid, 1, 0).cwiseProduct(sample(*grid, 1, 0).conjugate()));
  CHECK(std::abs(overlap - Complex(1.0)) < 1e-13);
}

TEST_CASE("grids are deterministic") {
  const GridPtr a = build_grid(7);
  const GridPtr b = build_grid(7);
  REQUIRE(a->size() == b->size());
  for (int node = 0; node < a->size(); ++node) {
    CHECK(a->node_theta(node) == b->node_theta(node));
    CHECK(a->node_phi(node) == b->node_phi(node));
    CHECK(a->weight(node) == b->weight(node));
  }
}

TEST_CASE("amplitude modulus integral for the basis state") {
  // integral of |Psi|^2 = (1/4)(1 + sqrt(3) cos)^2 over the sphere is 2 pi.
  const SWKernel kernel = SWKernel::standard(half());
  const GridPtr grid = build_grid(recommended_band_limit(1));
  Vector up(2);
  up << 1.0, 0.0;
  const SpinState psi(half(), up);
  const SphereField amp = amplitude_field(psi, psi, kernel, grid);
  const Complex integral = integrate(*grid, amp.values.cwiseAbs2().cast<Complex>());
  CHECK(std::abs(integral - Complex(2.0 * M_PI)) < 1e-12);
}

TEST_CASE("size mismatch raises GridMismatch") {
  const GridPtr grid = build_grid(2);
  CHECK_THROWS_AS(integrate(*grid, Vector::Ones(3)), GridMismatch);
}
