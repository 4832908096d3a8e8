#include "spincat/dicke.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spincat::dicke {

namespace {

constexpr double kPi = std::numbers::pi;

void check_state(const DickeState& s, const char* where) {
  if (s.n_atoms < 1 || static_cast<int>(s.amps.size()) != s.n_atoms + 1) {
    throw std::invalid_argument(std::string(where) + ": malformed state");
  }
}

// f(m) = sqrt(J(J+1) - m(m+1)); J_+|m> = f(m)|m+1> with J_+- = J_x +- i J_y.
double ladder(double jj, double m) { return std::sqrt(jj * (jj + 1.0) - m * (m + 1.0)); }

}  // namespace

double norm(const DickeState& s) {
  double n2 = 0.0;
  for (const cd& a : s.amps) n2 += std::norm(a);
  return std::sqrt(n2);
}

cd inner(const DickeState& bra, const DickeState& ket) {
  if (bra.n_atoms != ket.n_atoms) throw std::invalid_argument("inner: atom-number mismatch");
  cd acc = 0.0;
  for (int i = 0; i < bra.dim(); ++i) acc += std::conj(bra.amps[i]) * ket.amps[i];
  return acc;
}

DickeState make_css(int n_atoms, double theta, double phi) {
  if (n_atoms < 1) throw std::invalid_argument("make_css: n_atoms must be >= 1");
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("make_css: non-finite angle");
  }
  if (theta < 0.0 || theta > kPi) throw std::invalid_argument("make_css: theta outside [0, pi]");

  const double jj = 0.5 * n_atoms;
  const double lc = std::log(std::cos(0.5 * theta));  // -inf at theta = pi is fine
  const double ls = std::log(std::sin(0.5 * theta));

  DickeState s;
  s.n_atoms = n_atoms;
  s.amps.resize(n_atoms + 1);
  for (int i = 0; i <= n_atoms; ++i) {
    const double jm_p = i;            // J + m
    const double jm_m = n_atoms - i;  // J - m
    const double logb =
        0.5 * (std::lgamma(2.0 * jj + 1.0) - std::lgamma(jm_p + 1.0) - std::lgamma(jm_m + 1.0));
    // 0^0 = 1: skip the log term when its exponent vanishes
    double logmag = logb;
    logmag += (jm_m > 0) ? jm_m * lc : 0.0;
    logmag += (jm_p > 0) ? jm_p * ls : 0.0;
    const double mag = std::exp(logmag);
    s.amps[i] = std::polar(mag, -jm_p * phi);
  }
  const double n = norm(s);
  for (cd& a : s.amps) a /= n;
  return s;
}

DickeState evolve_oat(const DickeState& s, double twist_angle) {
  check_state(s, "evolve_oat");
  if (!std::isfinite(twist_angle)) throw std::invalid_argument("evolve_oat: non-finite angle");
  DickeState out = s;
  for (int i = 0; i < s.dim(); ++i) {
    const double m = s.m_of(i);
    out.amps[i] *= std::polar(1.0, -m * m * twist_angle);
  }
  return out;
}

DickeState rotate(const DickeState& s, Axis axis, double angle) {
  check_state(s, "rotate");
  if (!std::isfinite(angle)) throw std::invalid_argument("rotate: non-finite angle");
  const int d = s.dim();
  const double jj = s.j();

  if (axis == Axis::z) {
    DickeState out = s;
    for (int i = 0; i < d; ++i) out.amps[i] *= std::polar(1.0, -s.m_of(i) * angle);
    return out;
  }

  // J_y = exp(-i pi/2 J_z) J_x exp(+i pi/2 J_z); conjugate by the z-phases and
  // reuse the exact J_x rotation.
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v(i) = s.amps[i];
  if (axis == Axis::y) {
    for (int i = 0; i < d; ++i) v(i) *= std::polar(1.0, 0.5 * kPi * s.m_of(i));
  }

  Eigen::MatrixXd jx = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i + 1 < d; ++i) {
    const double f = 0.5 * ladder(jj, s.m_of(i));
    jx(i + 1, i) = f;
    jx(i, i + 1) = f;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jx);
  const Eigen::MatrixXd& u = es.eigenvectors();
  Eigen::VectorXcd w = u.transpose() * v;
  for (int i = 0; i < d; ++i) w(i) *= std::polar(1.0, -es.eigenvalues()(i) * angle);
  v = u * w;

  if (axis == Axis::y) {
    for (int i = 0; i < d; ++i) v(i) *= std::polar(1.0, -0.5 * kPi * s.m_of(i));
  }
  DickeState out = s;
  for (int i = 0; i < d; ++i) out.amps[i] = v(i);
  return out;
}

std::vector<double> q_function(const DickeState& s, const std::vector<double>& theta_grid,
                               const std::vector<double>& phi_grid) {
  check_state(s, "q_function");
  if (theta_grid.empty() || phi_grid.empty()) {
    throw std::invalid_argument("q_function: empty grid");
  }
  for (double t : theta_grid)
    if (!std::isfinite(t)) throw std::invalid_argument("q_function: non-finite theta");
  for (double p : phi_grid)
    if (!std::isfinite(p)) throw std::invalid_argument("q_function: non-finite phi");

  std::vector<double> out(theta_grid.size() * phi_grid.size());
  std::size_t idx = 0;
  for (double theta : theta_grid) {
    const DickeState ref = make_css(s.n_atoms, std::clamp(theta, 0.0, kPi), 0.0);
    for (double phi : phi_grid) {
      // <alpha(theta,phi)|psi> with the phi phases folded in analytically
      cd acc = 0.0;
      for (int i = 0; i < s.dim(); ++i) {
        acc += std::conj(ref.amps[i] * std::polar(1.0, -static_cast<double>(i) * phi)) * s.amps[i];
      }
      out[idx++] = std::abs(acc);
    }
  }
  return out;
}

std::vector<double> default_theta_grid() {
  std::vector<double> g(181);
  for (int i = 0; i < 181; ++i) g[i] = kPi * i / 180.0;
  return g;
}

std::vector<double> default_phi_grid() {
  std::vector<double> g(361);
  for (int i = 0; i < 361; ++i) g[i] = kPi * i / 180.0;
  return g;
}

SpinMoments spin_moments(const DickeState& s) {
  check_state(s, "spin_moments");
  const double jj = s.j();
  const int d = s.dim();

  double jz = 0.0, jz2 = 0.0, jpjm = 0.0;
  cd jp = 0.0, jpjp = 0.0, jpjz_sym = 0.0;  // <J_+ J_z + J_z J_+>
  for (int i = 0; i < d; ++i) {
    const double m = s.m_of(i);
    const double p = std::norm(s.amps[i]);
    jz += m * p;
    jz2 += m * m * p;
    jpjm += (jj * (jj + 1.0) - m * (m - 1.0)) * p;
    if (i + 1 < d) {
      const cd c = std::conj(s.amps[i + 1]) * s.amps[i] * ladder(jj, m);
      jp += c;
      jpjz_sym += c * (2.0 * m + 1.0);
    }
    if (i + 2 < d) {
      jpjp += std::conj(s.amps[i + 2]) * s.amps[i] * ladder(jj, m) * ladder(jj, m + 1.0);
    }
  }
  const double jmjp = jpjm - 2.0 * jz;  // [J_+, J_-] = 2 J_z

  SpinMoments out;
  out.first = {jp.real(), jp.imag(), jz};
  const double xx = 0.5 * (jpjp.real() + 0.5 * (jpjm + jmjp));
  const double yy = 0.5 * (-jpjp.real() + 0.5 * (jpjm + jmjp));
  out.second_sym[0][0] = xx;
  out.second_sym[1][1] = yy;
  out.second_sym[2][2] = jz2;
  out.second_sym[0][1] = out.second_sym[1][0] = 0.5 * jpjp.imag();
  out.second_sym[0][2] = out.second_sym[2][0] = 0.5 * jpjz_sym.real();
  out.second_sym[1][2] = out.second_sym[2][1] = 0.5 * jpjz_sym.imag();
  return out;
}

double cat_fidelity(const DickeState& s, double theta, double phi) {
  check_state(s, "cat_fidelity");
  const int n = s.n_atoms;
  const cd pref = std::polar(1.0 / std::sqrt(2.0), -0.25 * kPi);
  DickeState cat;
  if (n % 2 == 0) {
    const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;  // (-1)^J, J integer
    const DickeState a = make_css(n, theta, phi);
    const DickeState b = make_css(n, theta, phi + kPi);
    cat = a;
    for (int i = 0; i < cat.dim(); ++i) {
      cat.amps[i] = pref * (a.amps[i] + cd(0.0, sign) * b.amps[i]);
    }
  } else {
    const double sign = ((n + 1) / 2) % 2 == 0 ? 1.0 : -1.0;  // (-1)^{J+1/2}
    const DickeState a = make_css(n, theta, phi + 0.5 * kPi);
    const DickeState b = make_css(n, theta, phi - 0.5 * kPi);
    cat = a;
    for (int i = 0; i < cat.dim(); ++i) {
      cat.amps[i] = pref * (a.amps[i] + cd(0.0, sign) * b.amps[i]);
    }
  }
  return std::abs(inner(cat, s));
}

}  // namespace spincat::dicke
