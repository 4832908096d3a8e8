#pragma once

#include <complex>
#include <vector>

#include "spincat/spin_moments.hpp"

namespace spincat::dicke {

using cd = std::complex<double>;

// Pure state of N two-level atoms in the Jz eigenbasis, J = N/2.
// amps[i] is the amplitude of |m> with m = i - N/2 (half-integer for odd N).
struct DickeState {
  int n_atoms = 0;
  std::vector<cd> amps;

  double j() const { return 0.5 * n_atoms; }
  double m_of(int i) const { return i - 0.5 * n_atoms; }
  int dim() const { return n_atoms + 1; }
};

enum class Axis { x, y, z };

double norm(const DickeState& s);
cd inner(const DickeState& bra, const DickeState& ket);

// Coherent spin state: amplitudes
//   c_m = sqrt(binom(2J, J+m)) cos(theta/2)^{J-m} sin(theta/2)^{J+m} e^{-i(J+m)phi}.
// Binomials are evaluated per element through log-gamma.
DickeState make_css(int n_atoms, double theta, double phi);

// One-axis twisting: c_m -> exp(-i m^2 chi_t) c_m.
DickeState evolve_oat(const DickeState& s, double twist_angle);

// exp(-i J_axis * angle) applied exactly (dense eigendecomposition of the
// tridiagonal generator; unitary to 1e-12).
DickeState rotate(const DickeState& s, Axis axis, double angle);

// Husimi-style overlap map Q(theta, phi) = |<alpha(theta,phi)|psi>|, returned
// row-major over theta_grid x phi_grid.
std::vector<double> q_function(const DickeState& s, const std::vector<double>& theta_grid,
                               const std::vector<double>& phi_grid);

// Default (theta, phi) grid: 181 x 361 uniform nodes on [0,pi] x [0,2pi].
std::vector<double> default_theta_grid();
std::vector<double> default_phi_grid();

// Exact ladder-operator sums over the amplitude vector.
SpinMoments spin_moments(const DickeState& s);

// |<cat(theta,phi)|s>| where |cat> is the equal superposition of antipodal
// coherent states produced by twisting to chi_t = pi/2 (even-N form, or the
// half-integer-J variant with phases e^{-i pi/4}, i(-1)^{J +- 1/2} for odd N).
double cat_fidelity(const DickeState& s, double theta, double phi);

}  // namespace spincat::dicke
