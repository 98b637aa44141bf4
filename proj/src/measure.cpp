#include "r2quad/measure.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "r2quad/errors.hpp"

namespace r2quad {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;
constexpr unsigned kMaxDepth = 18;

template <typename F>
std::complex<double> integrate_parts(F&& h, double a, double b, double tol) {
    auto re = [&](double t) { return h(t).real(); };
    auto im = [&](double t) { return h(t).imag(); };
    const double vr = Kronrod::integrate(re, a, b, kMaxDepth, tol);
    const double vi = Kronrod::integrate(im, a, b, kMaxDepth, tol);
    return {vr, vi};
}

}  // namespace

MeasureIntegrator density_integrator(std::function<double(double)> density) {
    if (!density) throw InvalidParameter("density is empty");
    return [w = std::move(density)](const RealIntegrand& g, double tol) {
        auto h = [&](double theta) -> std::complex<double> {
            const double s = std::sin(theta);
            if (s == 0.0) return 0.0;
            const double x = -std::cos(theta) / s;
            return g(x) * (w(x) / (s * s));
        };
        return integrate_parts(h, 0.0, std::numbers::pi, tol);
    };
}

std::complex<double> integrate_circle_density(const std::function<double(double)>& density,
                                              const CircleIntegrand& F, double tol) {
    if (!density) throw InvalidParameter("circle density is empty");
    auto h = [&](double theta) { return F(theta) * density(theta); };
    return integrate_parts(h, 0.0, 2.0 * std::numbers::pi, tol);
}

}  // namespace r2quad
