#include "spinphase/special.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "spinphase/errors.hpp"

namespace spinphase {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial_exact(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_index(HalfInt j, HalfInt m) {
  if (!j.nonnegative()) throw InvalidIndex("negative j: " + j.str());
  if (m.twice() < -j.twice() || m.twice() > j.twice()) {
    throw InvalidIndex("|m| > j: m=" + m.str() + ", j=" + j.str());
  }
  if ((j.twice() + m.twice()) % 2 != 0) {
    throw InvalidIndex("m=" + m.str() + " not in the ladder of j=" + j.str());
  }
}

}  // namespace

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M) {
  check_index(j1, m1);
  check_index(j2, m2);
  check_index(J, M);

  if (M != m1 + m2) return 0.0;
  const int tj1 = j1.twice(), tj2 = j2.twice(), tJ = J.twice();
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
  if ((tj1 + tj2 + tJ) % 2 != 0) return 0.0;

  // Non-negative integer factorial arguments of the Racah formula.
  const int a = (tj1 + tj2 - tJ) / 2;
  const int b = (tj1 - tj2 + tJ) / 2;
  const int c = (-tj1 + tj2 + tJ) / 2;
  const int j1pm1 = (tj1 + m1.twice()) / 2, j1mm1 = (tj1 - m1.twice()) / 2;
  const int j2pm2 = (tj2 + m2.twice()) / 2, j2mm2 = (tj2 - m2.twice()) / 2;
  const int JpM = (tJ + M.twice()) / 2, JmM = (tJ - M.twice()) / 2;

  BigRat prefactor_sq(BigInt(tJ + 1) * factorial_exact(a) * factorial_exact(b) *
                          factorial_exact(c),
                      factorial_exact((tj1 + tj2 + tJ) / 2 + 1));
  prefactor_sq *= BigRat(factorial_exact(JpM) * factorial_exact(JmM) *
                             factorial_exact(j1pm1) * factorial_exact(j1mm1) *
                             factorial_exact(j2pm2) * factorial_exact(j2mm2),
                         1);

  const int t4_base = (tJ - tj2 + m1.twice()) / 2;  // J - j2 + m1
  const int t5_base = (tJ - tj1 - m2.twice()) / 2;  // J - j1 - m2
  const int kmin = std::max({0, -t4_base, -t5_base});
  const int kmax = std::min({a, j1mm1, j2pm2});

  BigRat sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    BigInt denom = factorial_exact(k) * factorial_exact(a - k) *
                   factorial_exact(j1mm1 - k) * factorial_exact(j2pm2 - k) *
                   factorial_exact(t4_base + k) * factorial_exact(t5_base + k);
    if (k % 2 == 0) {
      sum += BigRat(1, denom);
    } else {
      sum -= BigRat(1, denom);
    }
  }
  if (sum == 0) return 0.0;

  const double magnitude =
      std::sqrt((prefactor_sq * sum * sum).convert_to<double>());
  return sum < 0 ? -magnitude : magnitude;
}

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2,
                HalfInt m3) {
  check_index(j1, m1);
  check_index(j2, m2);
  check_index(j3, m3);
  if ((m1 + m2 + m3).twice() != 0) return 0.0;
  const double cg = clebsch_gordan(j1, m1, j2, m2, j3, -m3);
  if (cg == 0.0) return 0.0;
  // (j1 - j2 - m3) is an integer whenever the symbol survives the rules above.
  const int exponent = (j1.twice() - j2.twice() - m3.twice()) / 2;
  const double phase = (exponent % 2 == 0) ? 1.0 : -1.0;
  return phase * cg / std::sqrt(j3.twice() + 1.0);
}

namespace {

constexpr double kFourPi = 4.0 * M_PI;

// Fully normalized associated Legendre lambda_l^m(x) for fixed m >= 0 and
// l = m..lmax, including the Condon-Shortley phase, so that
// Y_{l,m} = lambda_l^m(cos theta) e^{i m phi}.
void normalized_legendre_column(int m, int lmax, double x, double sin_theta,
                                double* out) {
  double lam = std::sqrt(1.0 / kFourPi);
  for (int k = 1; k <= m; ++k) {
    lam *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * sin_theta;
  }
  out[0] = lam;
  double prev = 0.0;
  for (int l = m + 1; l <= lmax; ++l) {
    const double a =
        std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
    const double lm1 = l - 1.0;
    const double b = std::sqrt((lm1 * lm1 - static_cast<double>(m) * m) /
                               (4.0 * lm1 * lm1 - 1.0));
    const double cur = a * (x * lam - b * prev);
    prev = lam;
    lam = cur;
    out[l - m] = cur;
  }
}

}  // namespace

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) {
    throw InvalidIndex("spherical harmonic needs |m| <= l, l >= 0");
  }
  const int ma = std::abs(m);
  std::vector<double> col(l - ma + 1);
  normalized_legendre_column(ma, l, std::cos(theta), std::sin(theta), col.data());
  std::complex<double> y =
      col[l - ma] * std::exp(std::complex<double>(0.0, ma * phi));
  if (m < 0) {
    y = std::conj(y);
    if (ma % 2 != 0) y = -y;
  }
  return y;
}

HarmonicTable::HarmonicTable(int lmax, double theta, double phi)
    : lmax_(lmax), table_((lmax + 1) * (lmax + 1)) {
  const double x = std::cos(theta), s = std::sin(theta);
  std::vector<double> col(lmax + 1);
  for (int m = 0; m <= lmax; ++m) {
    normalized_legendre_column(m, lmax, x, s, col.data());
    const std::complex<double> e = std::exp(std::complex<double>(0.0, m * phi));
    for (int l = m; l <= lmax; ++l) {
      const std::complex<double> y = col[l - m] * e;
      table_[lm_index(l, m)] = y;
      if (m > 0) {
        table_[lm_index(l, -m)] = (m % 2 == 0) ? std::conj(y) : -std::conj(y);
      }
    }
  }
}

}  // namespace spinphase
