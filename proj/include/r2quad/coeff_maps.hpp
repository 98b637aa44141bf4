#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "r2quad/family.hpp"
#include "r2quad/measure.hpp"

namespace r2quad {

using cplx = std::complex<double>;

enum class VerblunskySource { mu, nu_epsilon };

/// alpha[k] = alpha_k (k = 0..n-1) and tau[k] = tau_{k+1} for the mu source,
/// tau[k] = tau_k (starting at tau_0 = 1) for the nu source.
struct VerblunskySeq {
    std::vector<cplx> alpha;
    std::vector<cplx> tau;
    VerblunskySource source = VerblunskySource::mu;
    cplx tau1_seed{1.0, 0.0};
};

/// Verblunsky coefficients alpha_0..alpha_{n-1} of mu.
VerblunskySeq verblunsky_from_coeffs(const CoefficientFamily& fam, std::size_t n);

/// Verblunsky coefficients alpha_0..alpha_{n-1} of nu_0, from the maximal parameters.
VerblunskySeq verblunsky_nu0_from_coeffs(const CoefficientFamily& fam, std::size_t n);

struct MuInverse {
    std::vector<double> c;    ///< c_1..c_{n+1}
    std::vector<double> ell;  ///< l_2..l_{n+1}
    std::vector<cplx> tau;    ///< tau_1..tau_{n+1}
};

/// Inverse of verblunsky_from_coeffs; `alpha` must hold at least n values.
MuInverse coeffs_from_verblunsky_mu(std::span<const cplx> alpha, cplx tau1, std::size_t n);

/// tau_1 = I / conj(I).
cplx tau1_from_integral(cplx I_mu);

struct NuInverse {
    std::vector<double> c;  ///< c_1..c_n
    std::vector<double> g;  ///< g_1..g_n
    std::vector<double> d;  ///< d_2..d_n
    std::vector<cplx> tau;  ///< tau_0..tau_n
};

/// Recovery of (c, d) from the Verblunsky coefficients of nu_eps.
NuInverse coeffs_from_verblunsky_nu(std::span<const cplx> alpha, std::size_t n);

struct MeasureCoeffs {
    std::vector<double> c;  ///< c_1..c_{n+1}
    std::vector<double> d;  ///< d_2..d_{n+1}
    std::vector<cplx> gamma_hat;
    double gamma0 = 1.0;
};

/// Recurrence coefficients of a real-line probability measure from integrals
/// computed by `integrate`.
MeasureCoeffs coeffs_from_measure(const MeasureIntegrator& integrate, std::size_t n, double quad_tol);

}  // namespace r2quad
