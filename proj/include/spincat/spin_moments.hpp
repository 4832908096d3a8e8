#pragma once

#include <array>

namespace spincat {

using Mat3 = std::array<std::array<double, 3>, 3>;

// First moments <Jx>,<Jy>,<Jz> and symmetrized second moments
// <JiJj + JjJi>/2 of the collective spin.
struct SpinMoments {
  std::array<double, 3> first{};
  Mat3 second_sym{};
};

struct QfiResult {
  Mat3 matrix{};  // F_ij = 2<JiJj + JjJi> - 4<Ji><Jj>
  double qfi = 0.0;
};

// Largest eigenvalue of a symmetric 3x3 matrix, closed-form via the
// characteristic polynomial (trigonometric solution). Deterministic.
double max_eigenvalue_sym3(const Mat3& m);

// Builds the collective-covariance matrix from the moments and returns it
// together with its largest eigenvalue. Throws std::invalid_argument if
// second_sym deviates from symmetry by more than 1e-9.
QfiResult qfi_from_moments(const SpinMoments& moments);

}  // namespace spincat
