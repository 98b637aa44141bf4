#pragma once

#include <complex>

namespace r2quad {

/// log Gamma(z) for complex z (Lanczos approximation, g = 7, with reflection
/// for Re z < 1/2). The imaginary part is only defined modulo 2*pi.
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace r2quad
