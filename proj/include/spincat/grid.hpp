#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace spincat::field {

using cd = std::complex<double>;

// Uniform spatial grid on [-half_width, half_width) in oscillator units,
// with the FFT-ordered conjugate momentum grid. Immutable after construction
// and freely shareable across threads.
struct Grid1D {
  int n_points;
  double half_width;
  double dx;
  std::vector<double> x;
  std::vector<double> k;

  Grid1D(int n_points, double half_width);
};

using GridPtr = std::shared_ptr<const Grid1D>;

GridPtr make_grid(int n_points, double half_width);

// Engineering defaults: enough headroom for the Thomas-Fermi radius plus
// breathing excursions.
GridPtr default_grid(double mu);
double default_dt(double mu);

struct ComplexField {
  GridPtr grid;
  std::vector<cd> v;

  int size() const { return static_cast<int>(v.size()); }
};

ComplexField make_field(GridPtr grid);

double field_norm(const ComplexField& f);     // sqrt(int |f|^2 dx)
void normalize_field(ComplexField& f);
cd inner(const ComplexField& bra, const ComplexField& ket);  // int conj(bra) ket dx

}  // namespace spincat::field
