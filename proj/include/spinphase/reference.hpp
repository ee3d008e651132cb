#pragma once

#include "spinphase/lattice.hpp"
#include "spinphase/sphere.hpp"

// Plain serial implementations of the OpenMP kernels.  Kept for testing
// (the parallel paths must reproduce them exactly) and for the benchmark.
namespace spinphase::reference {

std::vector<Matrix> kernel_table(const SWKernel& kernel, const SphereGrid& grid);

SphereField star_product_integral(const SphereField& f, const SphereField& g,
                                  const SWKernel& kernel);

LatticeField lattice_star(const LatticeField& f, const LatticeField& g,
                          const LatticeKernel& kernel);

}  // namespace spinphase::reference
