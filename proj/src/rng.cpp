#include "discord/rng.hpp"

#include <cmath>

namespace discord {

Mat ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

Mat haar_unitary(int d, Rng& rng) {
  const Mat g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0 ? rjj / a : Complex(1.0));
  }
  return q;
}

std::vector<double> dirichlet_uniform(int n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    p[i] = expo(rng);
    sum += p[i];
  }
  for (int i = 0; i < n; ++i) p[i] /= sum;
  return p;
}

}  // namespace discord
