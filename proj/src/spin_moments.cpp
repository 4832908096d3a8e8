#include "spincat/spin_moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spincat {

double max_eigenvalue_sym3(const Mat3& m) {
  const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
  if (p1 == 0.0) {
    return std::max({m[0][0], m[1][1], m[2][2]});
  }
  const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
  const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                    (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  if (p == 0.0) return q;

  // B = (m - q I)/p, r = det(B)/2 in [-1, 1] up to roundoff
  Mat3 b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
  const double detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                      b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                      b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  const double r = std::clamp(detb / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  return q + 2.0 * p * std::cos(phi);
}

QfiResult qfi_from_moments(const SpinMoments& mom) {
  const Mat3& s = mom.second_sym;
  double asym = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) asym = std::max(asym, std::abs(s[i][j] - s[j][i]));
  if (asym > 1e-9) {
    throw std::invalid_argument("qfi_from_moments: second-moment matrix not symmetric");
  }

  QfiResult out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double sym_ij = 0.5 * (s[i][j] + s[j][i]);
      out.matrix[i][j] = 4.0 * (sym_ij - mom.first[i] * mom.first[j]);
    }
  }
  out.qfi = max_eigenvalue_sym3(out.matrix);
  return out;
}

}  // namespace spincat
