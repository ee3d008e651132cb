#include "spinphase/reference.hpp"

#include <cmath>

namespace spinphase::reference {

std::vector<Matrix> kernel_table(const SWKernel& kernel, const SphereGrid& grid) {
  std::vector<Matrix> table(grid.size());
  for (int node = 0; node < grid.size(); ++node) {
    table[node] = kernel.evaluate(grid.node_theta(node), grid.node_phi(node));
  }
  return table;
}

SphereField star_product_integral(const SphereField& f, const SphereField& g,
                                  const SWKernel& kernel) {
  require_same_grid(f, g);
  const SphereGrid& grid = *f.grid;
  const std::vector<Matrix> table = kernel_table(kernel, grid);
  const int n = grid.size();
  const double scale = std::pow((kernel.j().twice() + 1.0) / (4.0 * M_PI), 2);
  Vector out(n);
  for (int node = 0; node < n; ++node) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const Matrix left = table[node] * table[k];
      const Complex fk = grid.weight(k) * f.values(k);
      Complex inner = 0.0;
      for (int l = 0; l < n; ++l) {
        const Complex trace = (left.transpose().cwiseProduct(table[l])).sum();
        inner += grid.weight(l) * g.values(l) * trace;
      }
      acc += fk * inner;
    }
    out(node) = scale * acc;
  }
  return SphereField(f.grid, std::move(out));
}

LatticeField lattice_star(const LatticeField& f, const LatticeField& g,
                          const LatticeKernel& kernel) {
  const int d = kernel.dim();
  const int n = d * d;
  Eigen::MatrixXcd out(d, d);
  for (int point = 0; point < n; ++point) {
    const int alpha = point / d, beta = point % d;
    Complex acc = 0.0;
    for (int p = 0; p < n; ++p) {
      const Matrix left = kernel.at(alpha, beta) * kernel.at(p / d, p % d);
      const Complex fp = f.values(p / d, p % d);
      for (int q = 0; q < n; ++q) {
        const Complex trace =
            (left.transpose().cwiseProduct(kernel.at(q / d, q % d))).sum();
        acc += fp * g.values(q / d, q % d) * trace;
      }
    }
    out(alpha, beta) = acc / static_cast<double>(n);
  }
  return LatticeField(d, std::move(out));
}

}  // namespace spinphase::reference
