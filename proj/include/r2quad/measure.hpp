#pragma once

#include <complex>
#include <functional>

namespace r2quad {

using RealIntegrand = std::function<std::complex<double>(double)>;

/// Computes the integral of g against a fixed real-line measure to the requested
/// tolerance. Implementations should throw (or return a non-finite value) on failure.
using MeasureIntegrator = std::function<std::complex<double>(const RealIntegrand& g, double tol)>;

using CircleIntegrand = std::function<std::complex<double>(double theta)>;

/// Adaptive Gauss-Kronrod integration of g(x) w(x) over the real line, after the
/// substitution x = -cot(theta) that maps (0, pi) onto R.
MeasureIntegrator density_integrator(std::function<double(double)> density);

/// Adaptive Gauss-Kronrod integration of F(theta) w(theta) over (0, 2pi).
std::complex<double> integrate_circle_density(const std::function<double(double)>& density,
                                              const CircleIntegrand& F, double tol);

}  // namespace r2quad
