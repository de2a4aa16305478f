#pragma once

#include <complex>
#include <vector>

namespace lf {

// Roots of R_h(lambda, kappa) = lambda (lambda-1) ... (lambda-h) - kappa (kappa+1) ... (kappa+h).
struct RootSet {
  int h = 0;
  double kappa = 0.0;
  std::vector<std::complex<double>> roots;  // h + 1 roots, real part desc, imag asc
};

std::complex<double> characteristic_value(std::complex<double> lambda, int h, double kappa);

// Deflates the known root kappa + h, then solves the remaining degree-h
// factor by Durand-Kerner iteration (tolerance 1e-12, at most 500 sweeps)
// followed by Newton polishing on R_h itself. NumericError on failure.
RootSet characteristic_roots(int h, double kappa);

// Roots lying within `tol` of kappa + Z (real, integer offset from kappa).
std::vector<std::complex<double>> integer_translates(const RootSet& set, double tol = 1e-9);

}  // namespace lf
