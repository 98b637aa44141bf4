#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "helpers.hpp"
#include "r2quad/errors.hpp"
#include "r2quad/families.hpp"
#include "r2quad/measure.hpp"
#include "r2quad/quadrature.hpp"

using namespace r2quad;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

TEST_CASE("Lebesgue real rule") {
    for (std::size_t n : {5u, 15u, 50u}) {
        const auto rule = real_rule(lebesgue_family(), n);
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(std::abs(rule.nodes[k - 1] - lebesgue::node(n, k)) < 1e-10);
            CHECK(std::abs(rule.weights[k - 1] - 1.0 / (n + 1.0)) < 1e-12);
        }
    }
}

TEST_CASE("CRR real rules against the published tables") {
    SUBCASE("lambda 2.5, n 8") {
        const double x[] = {2.752206638, 1.509028782, 0.909786866, 0.519849212,
                            0.211994598, -0.075029910, -0.395455713, -0.860951902};
        const double w[] = {0.039041093, 0.173690345, 0.291154810, 0.268406695,
                            0.155038062, 0.057779655, 0.013120781, 0.001435559};
        const auto rule = real_rule(crr_family(2.5, 2.0), 8);
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(std::abs(rule.nodes[k] - x[k]) < 5e-10);
            CHECK(std::abs(rule.weights[k] - w[k]) < 5e-10);
        }
    }
    SUBCASE("lambda 2.0, n 15") {
        const double x[] = {5.358584571,  2.970861856,  1.956293085,  1.381314327,  0.999518459,
                            0.716961300,  0.489563410,  0.293142015,  0.112221377,  -0.065156395,
                            -0.250739572, -0.459623282, -0.716927042, -1.076874551, -1.709139557};
        const double w[] = {0.007880354, 0.043473255, 0.104560922, 0.161215301, 0.185747261,
                            0.172611607, 0.134906482, 0.090767684, 0.053180697, 0.027196733,
                            0.012058883, 0.004551300, 0.001407835, 0.000329605, 0.000047582};
        const auto rule = real_rule(crr_family(2.0, 2.0), 15);
        for (std::size_t k = 0; k < 15; ++k) {
            CHECK(std::abs(rule.nodes[k] - x[k]) < 5e-10);
            CHECK(std::abs(rule.weights[k] - w[k]) < 5e-10);
        }
    }
}

TEST_CASE("integrating the rational Gaussian") {
    auto f = [](double x) { return pi * std::pow(x * x + 1.0, -7.0) * std::exp(-x * x); };
    CHECK(std::abs(integrate_real(real_rule(lebesgue_family(), 15), f) - 0.61332294881837) < 1e-11);
    CHECK(std::abs(integrate_real(real_rule(lebesgue_family(), 6), f) - 0.61228678065306) < 1e-11);
}

TEST_CASE("weight sum identity") {
    for (const auto& fam : {lebesgue_family(), crr_family(2.5, 2.0), crr_family(2.0, 2.0)})
        for (std::size_t n : {3u, 8u, 15u, 25u}) {
            const auto rule = real_rule(fam, n);
            double s = 0.0;
            for (double w : rule.weights) {
                CHECK(w > 0.0);
                s += w;
            }
            CHECK(std::abs(s - (1.0 - lambda_hat(fam.chain_params(n), n))) < 1e-10);
            if (fam.name() == "lebesgue") CHECK(std::abs(s - n / (n + 1.0)) < 1e-12);
        }
}

TEST_CASE("real-line exactness") {
    SUBCASE("Lebesgue against analytic moments") {
        for (std::size_t n = 1; n <= 12; ++n) {
            const auto rule = real_rule(lebesgue_family(), n);
            for (std::size_t r = 0; r <= 2 * n - 1; ++r) {
                const double q = integrate_real(rule, [&](double x) { return std::pow(x, r) / std::pow(x * x + 1.0, n); });
                CHECK(std::abs(q - lebesgue::moment(r, n)) < 1e-12);
            }
        }
    }
    SUBCASE("CRR against adaptive integration of the density") {
        for (double lambda : {2.5, 2.0}) {
            const auto fam = crr_family(lambda, 2.0);
            const auto integ = family_integrator(fam);
            for (std::size_t n = 1; n <= 12; ++n) {
                const auto rule = real_rule(fam, n);
                for (std::size_t r = 0; r <= 2 * n - 1; ++r) {
                    auto g = [&](double x) { return std::pow(x, r) / std::pow(x * x + 1.0, n); };
                    const double exact = integ([&](double x) { return cd(g(x)); }, 1e-13).real();
                    CHECK(std::abs(integrate_real(rule, g) - exact) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("mu circle rule") {
    SUBCASE("Lebesgue closed form") {
        const std::size_t n = 11;
        const auto rule = circle_rule_mu(lebesgue_family(), n);
        for (std::size_t k = 1; k <= n; ++k) {
            const double s = std::sin(k * pi / (n + 1));
            CHECK(std::abs(rule.weights[k - 1] - 2.0 * s * s / (n + 1.0)) < 1e-12);
            CHECK(std::abs(rule.weights[k - 1] - lebesgue::mu_weight(n, k)) < 1e-12);
            CHECK(std::abs(rule.nodes[k - 1].z() - std::polar(1.0, 2.0 * k * pi / (n + 1))) < 1e-12);
        }
    }
    SUBCASE("weights from the area constant") {
        for (const auto& fam : {lebesgue_family(), crr_family(2.5, 2.0), crr_family(2.0, 2.0)}) {
            const std::size_t n = 10;
            const auto base = real_rule(fam, n);
            const auto rule = circle_rule_mu(fam, base);
            const auto cp = fam.chain_params(n);
            const double c1 = fam.c(1);
            const double area_s = (c1 * c1 + 1.0) * cp.series_S / 4.0;
            const double area_m = (c1 * c1 + 1.0) / (4.0 * cp.m1);
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double gap = std::norm(rule.nodes[k].z() - 1.0);
                CHECK(std::abs(rule.weights[k] - area_s * gap * base.weights[k]) < 1e-10);
                CHECK(std::abs(rule.weights[k] - area_m * gap * base.weights[k]) < 1e-10);
                CHECK(std::abs(rule.nodes[k].theta - cayley_angle(base.nodes[k])) < 1e-12);
                const cd xi = cd(base.nodes[k], 1.0) / cd(base.nodes[k], -1.0);
                CHECK(std::abs(rule.nodes[k].z() - xi) < 1e-12);
                sum += rule.weights[k];
            }
            CHECK(std::abs(sum - 1.0) < 1e-10);
        }
    }
    SUBCASE("exactness on monomials") {
        for (const auto& fam : {lebesgue_family(), crr_family(2.5, 2.0), crr_family(2.0, 2.0)})
            for (std::size_t n = 1; n <= 10; ++n) {
                const auto rule = circle_rule_mu(fam, n);
                for (int m = -static_cast<int>(n) + 1; m <= static_cast<int>(n) - 1; ++m) {
                    const cd q = integrate_circle(rule, [m](cd z) { return std::pow(z, m); });
                    const cd exact = integrate_circle_density(
                        fam.mu_density, [m](double t) { return std::polar(1.0, m * t); }, 1e-13);
                    CHECK(std::abs(q - exact) < 1e-9);
                }
            }
    }
}

TEST_CASE("nu circle rule") {
    SUBCASE("Lebesgue at eps = 0 is uniform on roots of unity") {
        const std::size_t n = 9;
        const auto rule = circle_rule_nu(lebesgue_family(), n, 0.0);
        CHECK(rule.n_points == n + 1);
        CHECK(std::abs(rule.mass_at_one - 1.0 / (n + 1.0)) < 1e-12);
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(std::abs(rule.weights[k - 1] - 1.0 / (n + 1.0)) < 1e-12);
            CHECK(std::abs(rule.nodes[k - 1].z() - std::polar(1.0, 2.0 * k * pi / (n + 1))) < 1e-12);
        }
    }
    SUBCASE("mass at one for CRR") {
        const auto rule = circle_rule_nu(crr_family(2.5, 2.0), 8, 0.0);
        CHECK(std::abs(rule.mass_at_one - 40320.0 / 121080960.0) < 1e-14);
        const CrrClosedForm cf{2.5, 2.0};
        CHECK(std::abs(cf.lambda_hat(8) - 40320.0 / 121080960.0) < 1e-16);
    }
    SUBCASE("mixing") {
        const auto fam = crr_family(2.0, 2.0);
        const auto base = real_rule(fam, 8);
        for (double eps : {0.0, 0.25, 0.9, 0.999999}) {
            const auto rule = circle_rule_nu(fam, base, eps);
            const cd one = integrate_circle(rule, [](cd) { return cd(1.0); });
            CHECK(std::abs(one - 1.0) < 1e-10);
            if (eps > 0.99) {
                CHECK(rule.mass_at_one > 1.0 - 1e-5);
                for (double w : rule.weights) CHECK(w < 1e-5);
            }
        }
        CHECK_THROWS_AS(circle_rule_nu(fam, base, 1.0), InvalidParameter);
    }
    SUBCASE("exactness against the nu_0 density") {
        for (const auto& fam : {lebesgue_family(), crr_family(2.5, 2.0)}) {
            const std::size_t n = 8;
            const auto rule = circle_rule_nu(fam, n, 0.0);
            for (int m = -static_cast<int>(n); m <= static_cast<int>(n); ++m) {
                const cd q = integrate_circle(rule, [m](cd z) { return std::pow(z, m); });
                const cd exact =
                    integrate_circle_density(fam.nu_density, [m](double t) { return std::polar(1.0, m * t); }, 1e-13);
                CHECK(std::abs(q - exact) < 1e-9);
            }
        }
    }
}

TEST_CASE("circle sums") {
    const auto fam = crr_family(2.5, 2.0);
    const cd tau = crr_tau(2.5, 2.0);
    CHECK(std::abs(tau - cd(-2.26887229599887, 0.0)) < 1e-12);
    const auto rule = circle_rule_nu(fam, 15, 0.0);
    const cd s1 = integrate_circle(rule, [](cd z) { return z * std::sin(z) / (4.0 - z); }) / tau;
    CHECK(std::abs(s1.real() - 3.52677323654955e-2) < 1e-11);
    CHECK(std::abs(s1.imag() - 2.86020606599670e-2) < 1e-11);

    const auto fam2 = crr_family(2.0, 2.0);
    const auto rule2 = circle_rule_nu(fam2, 15, 0.0);
    const cd s2 = integrate_circle(rule2, [](cd z) { return (z - 1.0) * z * std::sin(z) / (4.0 - z); }) /
                  crr_tau(2.0, 2.0);
    CHECK(std::abs(s2.real() - 3.36067074166006e-3) < 1e-11);
    CHECK(std::abs(s2.imag() - 2.80064202570487e-2) < 1e-11);

    CHECK(std::abs(integrate_circle(rule, [](cd) { return cd(1.0); }) - 1.0) < 1e-12);
    CHECK(std::abs(integrate_circle(circle_rule_mu(fam, 15), [](cd) { return cd(1.0); }) - 1.0) < 1e-12);
}

TEST_CASE("divergent series refuses the rules") {
    auto fam = custom_family("flat", [](std::size_t) { return 0.0; },
                             [](std::size_t k) { return k == 2 ? 0.5 : 0.25; });
    fam.chain_config().max_terms = 1u << 14;
    CHECK_THROWS_AS(real_rule(fam, 4), DivergentSeries);
    CHECK_THROWS_AS(circle_rule_mu(fam, 4), DivergentSeries);
}

TEST_CASE("threaded weight assembly matches the serial result") {
    RootFindConfig one, four;
    four.threads = 4;
    const auto fam = crr_family(2.5, 2.0);
    const auto a = real_rule(fam, 40, one);
    const auto b = real_rule(fam, 40, four);
    CHECK(a.nodes == b.nodes);
    CHECK(a.weights == b.weights);
}
