#include "r2quad/families.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "r2quad/errors.hpp"
#include "r2quad/io.hpp"
#include "r2quad/special.hpp"

namespace r2quad {

using std::numbers::pi;

CoefficientFamily lebesgue_family() {
    CoefficientFamily fam("lebesgue", [](std::size_t) { return 0.0; }, [](std::size_t) { return 0.25; });
    fam.density = lebesgue::density;
    fam.nu_density = [](double) { return 0.5 / pi; };
    fam.mu_density = [](double theta) {
        const double s = std::sin(0.5 * theta);
        return s * s / pi;
    };
    return fam;
}

CoefficientFamily crr_family(double lambda, double eta) {
    if (!(lambda > -0.5) || !std::isfinite(lambda) || !std::isfinite(eta))
        throw InvalidParameter("crr family needs lambda > -1/2 and finite eta");
    const CrrClosedForm cf{lambda, eta};
    CoefficientFamily fam(
        "crr", [cf](std::size_t k) { return cf.c(k); }, [cf](std::size_t k) { return cf.d(k); });
    fam.set_param("lambda", lambda);
    fam.set_param("eta", eta);
    fam.density = [cf](double x) { return cf.density(x); };
    fam.nu_density = [cf](double t) { return cf.nu_density(t); };
    fam.mu_density = [cf](double t) { return cf.mu_density(t); };
    return fam;
}

CoefficientFamily custom_family(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open coefficient file " + path.string());
    CoefficientTable table = parse_coefficients(in);
    const std::size_t rows = table.c.size();
    auto data = std::make_shared<const CoefficientTable>(std::move(table));
    CoefficientFamily fam(
        path.filename().string(), [data](std::size_t k) { return data->c.at(k - 1); },
        [data](std::size_t k) { return data->d_next.at(k - 2); }, rows);
    if (data->m1) fam.set_m1(*data->m1);
    return fam;
}

CoefficientFamily custom_family(std::string name, IndexedSequence c, IndexedSequence d,
                                std::optional<std::size_t> max_index) {
    return CoefficientFamily(std::move(name), std::move(c), std::move(d), max_index);
}

MeasureIntegrator family_integrator(const CoefficientFamily& fam) {
    if (!fam.density) throw InvalidParameter("family '" + fam.name() + "' has no density");
    return density_integrator(fam.density);
}

namespace lebesgue {

double node(std::size_t n, std::size_t k) {
    const double t = static_cast<double>(k) * pi / static_cast<double>(n + 1);
    return std::cos(t) / std::sin(t);
}

double weight(std::size_t n) { return 1.0 / static_cast<double>(n + 1); }

double mu_weight(std::size_t n, std::size_t k) {
    const double s = std::sin(static_cast<double>(k) * pi / static_cast<double>(n + 1));
    return 2.0 * s * s / static_cast<double>(n + 1);
}

double density(double x) { return 1.0 / (pi * (1.0 + x * x)); }

double p_closed(std::size_t n, double x) {
    const std::complex<double> a = std::pow(std::complex<double>(x, -1.0) / 2.0, static_cast<int>(n + 1));
    return -2.0 * a.imag();
}

double moment(std::size_t r, std::size_t m) {
    if (r % 2 == 1) return 0.0;
    const double j = static_cast<double>(r / 2);
    const double mm = static_cast<double>(m);
    if (j > mm) throw InvalidParameter("moment does not exist");
    return std::exp(std::lgamma(j + 0.5) + std::lgamma(mm + 0.5 - j) - std::lgamma(mm + 1.0)) / pi;
}

}  // namespace lebesgue

double CrrClosedForm::c(std::size_t k) const { return eta / (lambda + static_cast<double>(k)); }

double CrrClosedForm::d(std::size_t k) const {
    const double n = static_cast<double>(k - 1);
    return n * (n + 2.0 * lambda + 1.0) / (4.0 * (n + lambda) * (n + lambda + 1.0));
}

double CrrClosedForm::ell(std::size_t k) const {
    const double n = static_cast<double>(k - 1);
    return n / (2.0 * (n + lambda + 1.0));
}

double CrrClosedForm::maxp(std::size_t k) const {
    const double n = static_cast<double>(k - 1);
    return (n + 2.0 * lambda + 1.0) / (2.0 * (n + lambda + 1.0));
}

double CrrClosedForm::lambda_hat(std::size_t n) const {
    double v = 1.0;
    for (std::size_t j = 1; j <= n; ++j) v *= static_cast<double>(j) / (2.0 * lambda + 1.0 + static_cast<double>(j));
    return v;
}

std::complex<double> CrrClosedForm::tau() const { return crr_tau(lambda, eta); }

namespace {

// log of 2^{2 lambda} |Gamma(b+1)|^2 / Gamma(2 lambda + 1)
double log_norm(double lambda, double eta) {
    const double lg = log_gamma({lambda + 1.0, eta}).real();
    return 2.0 * lambda * std::log(2.0) + 2.0 * lg - std::lgamma(2.0 * lambda + 1.0);
}

double circle_density(double lambda, double eta, double theta) {
    const double s2 = std::pow(std::sin(0.5 * theta), 2);
    if (s2 == 0.0) return lambda > 0.0 ? 0.0 : (lambda == 0.0 ? std::exp(log_norm(lambda, eta) + (pi - theta) * eta) / (2.0 * pi) : INFINITY);
    return std::exp(log_norm(lambda, eta) + (pi - theta) * eta + lambda * std::log(s2)) / (2.0 * pi);
}

}  // namespace

double CrrClosedForm::density(double x) const {
    const double arccot = 0.5 * pi - std::atan(x);
    const double logv = pi * eta + std::log(2.0) + log_norm(lambda, eta) - 2.0 * eta * arccot -
                        (lambda + 1.0) * std::log1p(x * x);
    return std::exp(logv) / (2.0 * pi);
}

double CrrClosedForm::nu_density(double theta) const { return circle_density(lambda, eta, theta); }

double CrrClosedForm::mu_density(double theta) const { return circle_density(lambda + 1.0, eta, theta); }

std::complex<double> crr_tau(double lambda, double eta) {
    const double lg = log_gamma({lambda + 1.0, eta}).real();
    const double mag = std::exp(2.0 * lg - std::lgamma(2.0 * lambda + 1.0) + pi * eta) / (2.0 * pi);
    // 1/i * exp(-i pi lambda)
    const std::complex<double> phase = std::complex<double>(0.0, -1.0) * std::polar(1.0, -pi * lambda);
    return mag * phase;
}

}  // namespace r2quad
