#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "r2quad/family.hpp"
#include "r2quad/measure.hpp"

namespace r2quad {

/// c = 0, d = 1/4. Orthogonal with respect to dx / (pi (1 + x^2)).
CoefficientFamily lebesgue_family();

/// Complementary Romanovski-Routh family with b = lambda + i eta, lambda > -1/2.
CoefficientFamily crr_family(double lambda, double eta);

/// Family read from a coefficient file (rows `k c_k d_{k+1}`).
CoefficientFamily custom_family(const std::filesystem::path& path);

/// Family from caller-supplied providers. `d(k)` returns d_k for k >= 2.
CoefficientFamily custom_family(std::string name, IndexedSequence c, IndexedSequence d,
                                std::optional<std::size_t> max_index = std::nullopt);

/// Integrator over the family's real-line density. Throws InvalidParameter when
/// the family has no density hook.
MeasureIntegrator family_integrator(const CoefficientFamily& fam);

namespace lebesgue {

double node(std::size_t n, std::size_t k);  ///< cot(k pi / (n+1))
double weight(std::size_t n);               ///< 1 / (n+1)
double mu_weight(std::size_t n, std::size_t k);
double density(double x);
/// P_n(x) = i((x-i)/2)^{n+1} - i((x+i)/2)^{n+1}
double p_closed(std::size_t n, double x);
/// int x^r (x^2+1)^{-m} dphi for the Lebesgue measure.
double moment(std::size_t r, std::size_t m);

}  // namespace lebesgue

/// Closed-form data of the complementary Romanovski-Routh family.
struct CrrClosedForm {
    double lambda;
    double eta;

    double c(std::size_t k) const;       ///< eta / (lambda + k)
    double d(std::size_t k) const;       ///< d_k, k >= 2
    double ell(std::size_t k) const;     ///< l_k, k >= 1
    double maxp(std::size_t k) const;    ///< M_k, k >= 1
    double lambda_hat(std::size_t n) const;  ///< n! / (2 lambda + 2)_n
    std::complex<double> tau() const;    ///< tau(b)
    double density(double x) const;      ///< real-line density
    double nu_density(double theta) const;
    double mu_density(double theta) const;
};

/// tau(b) for a general b = lambda + i eta.
std::complex<double> crr_tau(double lambda, double eta);

}  // namespace r2quad
