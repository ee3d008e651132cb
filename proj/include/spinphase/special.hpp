#pragma once

#include <complex>
#include <vector>

#include "spinphase/halfint.hpp"

namespace spinphase {

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
// convention.  Evaluated by the Racah sum with exact integer arithmetic
// (one square root at the end).  Returns 0 outside the selection rules;
// throws InvalidIndex for indices outside their domain.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M);

// Wigner 3j symbol (j1 j2 j3; m1 m2 m3), from the Clebsch-Gordan relation
//   (j1 j2 j3; m1 m2 m3) = (-1)^(j1-j2-m3) / sqrt(2 j3 + 1)
//                          * <j1 m1; j2 m2 | j3, -m3>.
double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                HalfInt m3);

// Spherical harmonic Y_{l,m}(theta, phi), Condon-Shortley convention,
// orthonormal over the sphere.  Computed by upward recurrence in l on the
// fully normalized associated Legendre functions.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

// All Y_{l,m} for 0 <= l <= lmax at one point; index with lm_index(l, m).
class HarmonicTable {
 public:
  HarmonicTable(int lmax, double theta, double phi);

  static int lm_index(int l, int m) { return l * (l + 1) + m; }

  std::complex<double> operator()(int l, int m) const {
    return table_[lm_index(l, m)];
  }
  int lmax() const { return lmax_; }

 private:
  int lmax_;
  std::vector<std::complex<double>> table_;
};

}  // namespace spinphase
