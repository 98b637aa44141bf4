#include "r2quad/coeff_maps.hpp"

#include <cmath>

#include "r2quad/errors.hpp"
#include "r2quad/numeric.hpp"

namespace r2quad {

namespace {

constexpr double kTiny = 1e-300;

cplx unit(cplx z) { return z / std::abs(z); }

cplx cayley_factor(double c) { return cplx(1.0, -c) / cplx(1.0, c); }

}  // namespace

VerblunskySeq verblunsky_from_coeffs(const CoefficientFamily& fam, std::size_t n) {
    const ChainParams cp = fam.chain_params(n);
    VerblunskySeq out;
    out.source = VerblunskySource::mu;
    cplx tau = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        tau = unit(tau * cayley_factor(fam.c(k)));
        if (k == 1) out.tau1_seed = tau;
        out.tau.push_back(tau);
        const double c_next = fam.c(k + 1);
        const double l_next = cp.ell_at(k + 1);
        out.alpha.push_back(-(cplx(1.0 - 2.0 * l_next, -c_next) / cplx(1.0, -c_next)) / tau);
    }
    return out;
}

VerblunskySeq verblunsky_nu0_from_coeffs(const CoefficientFamily& fam, std::size_t n) {
    const ChainParams cp = fam.chain_params(n);
    if (!cp.has_m1()) throw DivergentSeries("maximal parameters need a finite series S");
    VerblunskySeq out;
    out.source = VerblunskySource::nu_epsilon;
    cplx tau = 1.0;
    out.tau.push_back(tau);
    for (std::size_t k = 1; k <= n; ++k) {
        const double ck = fam.c(k);
        const double Mk = cp.max_at(k);
        out.alpha.push_back((cplx(1.0 - 2.0 * Mk, -ck) / cplx(1.0, -ck)) / tau);
        tau = unit(tau * cayley_factor(ck));
        out.tau.push_back(tau);
    }
    return out;
}

cplx tau1_from_integral(cplx I_mu) {
    if (std::abs(I_mu) == 0.0) throw InvalidParameter("I(mu) must be nonzero");
    return unit(I_mu / std::conj(I_mu));
}

MuInverse coeffs_from_verblunsky_mu(std::span<const cplx> alpha, cplx tau1, std::size_t n) {
    if (alpha.size() < n) throw InvalidParameter("need " + std::to_string(n) + " Verblunsky coefficients");
    if (!(std::abs(tau1) > 0.0)) throw InvalidParameter("tau_1 must be unimodular");
    tau1 = unit(tau1);
    const double den1 = std::norm(tau1 + 1.0);
    if (std::sqrt(den1) < kTiny) throw InvalidTauSeed();

    MuInverse out;
    out.c.push_back(-2.0 * tau1.imag() / den1);
    cplx tau = tau1;
    out.tau.push_back(tau);
    for (std::size_t k = 1; k <= n; ++k) {
        const cplx w = tau * alpha[k - 1];
        const cplx one_w = 1.0 + w;
        const double re = one_w.real();
        if (re <= kTiny) throw DegenerateInput(k - 1, "Re(1 + tau alpha) is not positive");
        out.c.push_back(w.imag() / re);
        out.ell.push_back(0.5 * std::norm(one_w) / re);
        tau = unit(tau * std::conj(one_w) / one_w);
        out.tau.push_back(tau);
    }
    return out;
}

NuInverse coeffs_from_verblunsky_nu(std::span<const cplx> alpha, std::size_t n) {
    if (alpha.size() < n) throw InvalidParameter("need " + std::to_string(n) + " Verblunsky coefficients");
    NuInverse out;
    cplx tau = 1.0;
    out.tau.push_back(tau);
    for (std::size_t k = 1; k <= n; ++k) {
        const cplx w = tau * alpha[k - 1];
        const double den = 1.0 - w.real();
        if (den <= kTiny) throw DegenerateInput(k - 1, "1 - Re(tau alpha) is not positive");
        out.c.push_back(-w.imag() / den);
        out.g.push_back(0.5 * std::norm(1.0 - w) / den);
        tau = unit(tau * (1.0 - std::conj(w)) / (1.0 - w));
        out.tau.push_back(tau);
    }
    for (std::size_t k = 1; k < n; ++k) out.d.push_back((1.0 - out.g[k - 1]) * out.g[k]);
    return out;
}

MeasureCoeffs coeffs_from_measure(const MeasureIntegrator& integrate, std::size_t n, double quad_tol) {
    if (!integrate) throw InvalidParameter("no integrator supplied");
    if (!(quad_tol > 0.0)) throw InvalidParameter("quad_tol must be positive");

    auto call = [&](const RealIntegrand& g, const char* what) {
        cplx v;
        try {
            v = integrate(g, quad_tol);
        } catch (const std::exception& e) {
            throw OracleFailure(std::string(what) + ": " + e.what());
        }
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw OracleFailure(std::string(what) + " is not finite");
        return v;
    };

    MeasureCoeffs out;
    out.gamma0 = call([](double) { return cplx(1.0); }, "gamma_0").real();
    if (std::abs(out.gamma0 - 1.0) > 10.0 * quad_tol) throw NormalizationError(out.gamma0);

    const double num = call([](double x) { return cplx(x / (x * x + 1.0)); }, "first moment").real();
    const double den = call([](double x) { return cplx(1.0 / (x * x + 1.0)); }, "zeroth moment").real();
    out.c.push_back(num / den);

    // (x+i) P_k(x) (x^2+1)^{-k-1}, written through X_k = P_k/(x^2+1)^{k/2}.
    auto gamma_hat = [&](std::size_t k) {
        const std::vector<double> c = out.c;
        const std::vector<double> d = out.d;
        return call(
            [c, d, k](double x) {
                const double q = x * x + 1.0;
                const double r = std::sqrt(q);
                double prev = 1.0, cur = 1.0;
                if (k >= 1) cur = (x - c[0]) / r;
                for (std::size_t m = 1; m < k; ++m) {
                    const double next = (x - c[m]) / r * cur - d[m - 1] * prev;
                    prev = cur;
                    cur = next;
                }
                return cplx(x, 1.0) * (cur * std::pow(q, -0.5 * static_cast<double>(k) - 1.0));
            },
            "gamma_hat");
    };

    out.gamma_hat.push_back(gamma_hat(0));
    for (std::size_t k = 1; k <= n; ++k) {
        out.gamma_hat.push_back(gamma_hat(k));
        const cplx ratio = safe_divide(out.gamma_hat[k - 1], out.gamma_hat[k]);
        if (!(ratio.imag() > 0.0)) throw DegenerateInput(k + 1, "Im(gamma_hat ratio) is not positive");
        out.d.push_back(1.0 / ratio.imag());
        out.c.push_back(-ratio.real() / ratio.imag());
    }
    return out;
}

}  // namespace r2quad
