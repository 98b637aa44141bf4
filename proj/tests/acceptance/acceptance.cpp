// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "r2quad/coeff_maps.hpp"
#include "r2quad/families.hpp"
#include "r2quad/poly.hpp"
#include "r2quad/quadrature.hpp"
#include "r2quad/root_finder.hpp"

using namespace r2quad;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// --- golden data -----------------------------------------------------------

struct Seed {
    double y0;
    int j;
    double x;
};

const Seed kTable1[] = {{0.1000000000, 5, 0.1989123673}, {0.3978247347, 3, 0.4142135624},
                        {0.6295147573, 4, 0.6681786379}, {0.9221437134, 4, 1.0000000000},
                        {1.3318213620, 4, 1.4966057627}, {1.9932115253, 4, 2.4142135624},
                        {3.3318213620, 5, 5.0273394921}};

struct PrintedRule {
    double lambda;
    std::size_t n;
    std::vector<double> x;  // k = 1..n
    std::vector<double> w;
};

const PrintedRule kCrrTables[] = {
    {2.5, 8,
     {2.752206638, 1.509028782, 0.909786866, 0.519849212, 0.211994598, -0.075029910, -0.395455713, -0.860951902},
     {0.039041093, 0.173690345, 0.291154810, 0.268406695, 0.155038062, 0.057779655, 0.013120781, 0.001435559}},
    {2.5, 15,
     {4.607169720, 2.679413438, 1.807020312, 1.292753697, 0.941766842, 0.676720369, 0.460151608, 0.270925228,
      0.095146340, -0.078205917, -0.260191665, -0.465177200, -0.717060414, -1.066959532, -1.672044257},
     {0.003769069, 0.026491638, 0.077127555, 0.138672540, 0.180719442, 0.185015149, 0.155554797, 0.110088169,
      0.066361078, 0.034128298, 0.014845009, 0.005341485, 0.001519919, 0.000311365, 0.000036057}},
    {2.0, 8,
     {3.172646563, 1.668212121, 0.990130503, 0.567035907, 0.242186897, -0.055426036, -0.385089950, -0.866362671},
     {0.058358497, 0.208595193, 0.296947815, 0.243675010, 0.131133033, 0.047818577, 0.011285827, 0.001409047}},
    {2.0, 15,
     {5.358584571, 2.970861856, 1.956293085, 1.381314327, 0.999518459, 0.716961300, 0.489563410, 0.293142015,
      0.112221377, -0.065156395, -0.250739572, -0.459623282, -0.716927042, -1.076874551, -1.709139557},
     {0.007880354, 0.043473255, 0.104560922, 0.161215301, 0.185747261, 0.172611607, 0.134906482, 0.090767684,
      0.053180697, 0.027196733, 0.012058883, 0.004551300, 0.001407835, 0.000329605, 0.000047582}},
};

struct Table7Row {
    std::size_t n;
    double value;
    double err;
};
const Table7Row kTable7[] = {
    {6, 0.61228678065306, 1.0e-3}, {10, 0.61332311526782, 1.6e-7}, {12, 0.61332296550298, 1.5e-8}, {15, 0.61332294881837, 7.7e-10}};
constexpr double kTable7Exact = 0.6133229495946;

const cd kS1_15{3.52677323654955e-2, 2.86020606599670e-2};
const cd kS2_15{3.36067074166006e-3, 2.80064202570487e-2};
const cd kS1_exact{3.52677323641868e-2, 2.86020606590488e-2};
const cd kS2_exact{0.33606707423377e-2, 2.80064202619193e-2};
constexpr double kS1_err8 = 1.3e-7;
constexpr double kS2_err8 = 4.3e-7;

// --- helpers ---------------------------------------------------------------

CoefficientFamily family_from_ell(std::vector<double> c, std::vector<double> ell) {
    auto cs = std::make_shared<std::vector<double>>(std::move(c));
    auto ls = std::make_shared<std::vector<double>>(std::move(ell));
    auto lk = [ls](std::size_t k) { return k <= ls->size() ? (*ls)[k - 1] : 0.4; };
    return custom_family(
        "synthetic", [cs](std::size_t k) { return k <= cs->size() ? (*cs)[k - 1] : 0.0; },
        [lk](std::size_t k) { return (1.0 - lk(k - 1)) * lk(k); });
}

std::vector<CoefficientFamily> builtins() { return {lebesgue_family(), crr_family(2.5, 2.0), crr_family(2.0, 2.0)}; }

// --- criteria --------------------------------------------------------------

Outcome criterion1() {
    Outcome o;
    const auto fam = lebesgue_family();
    const RootFindConfig cfg;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<LrfResult> res;
    for (const auto& s : kTable1) res.push_back(lrf_find_zero(fam, 15, s.y0, Direction::plus, cfg));
    const double secs = seconds_since(t0);
    for (std::size_t i = 0; i < res.size(); ++i) {
        const std::size_t k = 7 - i;
        const double exact = 1.0 / std::tan(k * kPi / 16.0);
        o.require(std::abs(res[i].zero - exact) < 1e-10, "node " + std::to_string(k));
        o.require(std::abs(res[i].zero - kTable1[i].x) < 1e-10, "printed node " + std::to_string(k));
        o.require(std::abs(static_cast<long>(res[i].iterations) - kTable1[i].j) <= 1, "count " + std::to_string(k));
    }
    o.require(secs < 0.1, "runtime " + num(secs) + " s");
    if (o.pass) o.detail = "7 nodes, runtime " + num(secs) + " s";
    return o;
}

Outcome criterion2() {
    Outcome o;
    double worst_x = 0.0, worst_w = 0.0;
    for (std::size_t n : {5u, 15u, 50u}) {
        const auto rule = real_rule(lebesgue_family(), n);
        for (std::size_t k = 1; k <= n; ++k) {
            worst_x = std::max(worst_x, std::abs(rule.nodes[k - 1] - 1.0 / std::tan(k * kPi / (n + 1.0))));
            worst_w = std::max(worst_w, std::abs(rule.weights[k - 1] - 1.0 / (n + 1.0)));
        }
    }
    o.require(worst_x < 1e-10, "node error " + num(worst_x));
    o.require(worst_w < 1e-12, "weight error " + num(worst_w));
    if (o.pass) o.detail = "max node err " + num(worst_x) + ", max weight err " + num(worst_w);
    return o;
}

Outcome criterion3() {
    Outcome o;
    double worst = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& t : kCrrTables) {
        const auto rule = real_rule(crr_family(t.lambda, 2.0), t.n);
        for (std::size_t k = 0; k < t.n; ++k) {
            worst = std::max({worst, std::abs(rule.nodes[k] - t.x[k]), std::abs(rule.weights[k] - t.w[k])});
        }
    }
    const double secs = seconds_since(t0);
    o.require(worst < 5e-10, "max deviation " + num(worst));
    o.require(secs < 1.0, "runtime " + num(secs) + " s");
    if (o.pass) o.detail = "max deviation " + num(worst) + ", runtime " + num(secs) + " s";
    return o;
}

Outcome criterion4() {
    Outcome o;
    auto f = [](double x) { return kPi * std::pow(x * x + 1.0, -7.0) * std::exp(-x * x); };
    for (const auto& row : kTable7) {
        const double I = integrate_real(real_rule(lebesgue_family(), row.n), f);
        const double err = std::abs(I - kTable7Exact);
        o.require(std::abs(I - row.value) < 1e-11, "I_" + std::to_string(row.n) + " = " + num(I));
        o.require(err <= 2.0 * row.err && err >= 0.5 * row.err, "error of I_" + std::to_string(row.n) + " " + num(err));
    }
    if (o.pass) o.detail = "I_6, I_10, I_12, I_15 reproduced";
    return o;
}

Outcome criterion5() {
    Outcome o;
    auto F1 = [](cd z) { return z * std::sin(z) / (4.0 - z); };
    auto F2hat = [](cd z) { return (z - 1.0) * z * std::sin(z) / (4.0 - z); };
    const auto a = crr_family(2.5, 2.0);
    const auto b = crr_family(2.0, 2.0);
    const cd ta = crr_tau(2.5, 2.0), tb = crr_tau(2.0, 2.0);

    const cd s1 = integrate_circle(circle_rule_nu(a, 15, 0.0), F1) / ta;
    const cd s2 = integrate_circle(circle_rule_nu(b, 15, 0.0), F2hat) / tb;
    o.require(std::abs(s1.real() - kS1_15.real()) < 1e-11 && std::abs(s1.imag() - kS1_15.imag()) < 1e-11, "S1 (15+1)");
    o.require(std::abs(s2.real() - kS2_15.real()) < 1e-11 && std::abs(s2.imag() - kS2_15.imag()) < 1e-11, "S2 (15+1)");

    const double e1 = std::abs(integrate_circle(circle_rule_nu(a, 8, 0.0), F1) / ta - kS1_exact);
    const double e2 = std::abs(integrate_circle(circle_rule_nu(b, 8, 0.0), F2hat) / tb - kS2_exact);
    o.require(e1 <= 2 * kS1_err8 && e1 >= 0.5 * kS1_err8, "S1 (8+1) error " + num(e1));
    o.require(e2 <= 2 * kS2_err8 && e2 >= 0.5 * kS2_err8, "S2 (8+1) error " + num(e2));
    if (o.pass) o.detail = "(8+1) errors " + num(e1) + ", " + num(e2);
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> ux(-4.0, 4.0);
    for (const auto& fam : {lebesgue_family(), crr_family(2.5, 2.0), crr_family(2.0, 2.0)}) {
        const std::string who = fam.name() + (fam.params().empty() ? "" : " " + num(fam.params().at("lambda")));
        std::vector<double> prev = find_all_zeros(fam, 1, {});
        for (std::size_t n = 2; n <= 31; ++n) {
            const auto z = find_all_zeros(fam, n, {});
            for (std::size_t k = 0; k + 1 < n; ++k)
                o.require(z[k] > prev[k] && prev[k] > z[k + 1], "interlacing " + who + " n=" + std::to_string(n));
            prev = z;
        }
        for (std::size_t n : {4u, 8u, 15u, 30u}) {
            const auto rule = real_rule(fam, n);
            const auto cp = fam.chain_params(n);
            double s = 0.0;
            for (double w : rule.weights) {
                o.require(w > 0.0, "positive weights " + who);
                s += w;
            }
            o.require(std::abs(s - (1.0 - lambda_hat(cp, n))) < 1e-10, "weight sum " + who);
            const auto mu = circle_rule_mu(fam, rule);
            const auto nu = circle_rule_nu(fam, rule, 0.3);
            double sm = 0.0, sn = nu.mass_at_one;
            for (double w : mu.weights) sm += w;
            for (double w : nu.weights) sn += w;
            o.require(std::abs(sm - 1.0) < 1e-10 && std::abs(sn - 1.0) < 1e-10, "circle mass " + who);
        }
        const std::size_t n = 10;
        const double m1 = fam.chain_params(n).m1;
        const auto rule = real_rule(fam, n);
        for (int i = 0; i < 20; ++i) {
            const double x = ux(rng);
            const auto P = eval_raw(fam, n + 1, x);
            const auto Q = eval_Q(fam, m1, n + 1, x);
            double rhs = m1 * std::pow(x * x + 1.0, static_cast<double>(n));
            for (std::size_t k = 2; k <= n + 1; ++k) rhs *= fam.d(k);
            o.require(std::abs(Q[n + 1] * P[n] - P[n + 1] * Q[n] - rhs) < 1e-10 * std::abs(rhs), "determinant " + who);
        }
        int done = 0;
        while (done < 20) {
            const double x = ux(rng);
            if (std::any_of(rule.nodes.begin(), rule.nodes.end(), [x](double z) { return std::abs(x - z) < 1e-3; }))
                continue;
            ++done;
            const double lhs = eval_Q(fam, m1, n, x)[n] / eval_raw(fam, n, x)[n];
            double rhs = 0.0;
            for (std::size_t k = 0; k < n; ++k) rhs += rule.weights[k] / (x - rule.nodes[k]);
            o.require(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)), "partial fractions " + who);
        }
    }
    if (o.pass) o.detail = "interlacing, positivity, sums, determinant and partial fractions";
    return o;
}

Outcome criterion7() {
    Outcome o;
    double worst_real = 0.0, worst_circle = 0.0;
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto rule = real_rule(lebesgue_family(), n);
        for (std::size_t r = 0; r <= 2 * n - 1; ++r) {
            const double q = integrate_real(rule, [&](double x) { return std::pow(x, r) / std::pow(x * x + 1.0, n); });
            worst_real = std::max(worst_real, std::abs(q - lebesgue::moment(r, n)));
        }
    }
    for (const auto& fam : builtins())
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto rule = circle_rule_mu(fam, n);
            for (int m = 1 - static_cast<int>(n); m <= static_cast<int>(n) - 1; ++m) {
                const cd q = integrate_circle(rule, [m](cd z) { return std::pow(z, m); });
                const cd exact =
                    integrate_circle_density(fam.mu_density, [m](double t) { return std::polar(1.0, m * t); }, 1e-13);
                worst_circle = std::max(worst_circle, std::abs(q - exact));
            }
        }
    o.require(worst_real < 1e-12, "real moments " + num(worst_real));
    o.require(worst_circle < 1e-9, "circle moments " + num(worst_circle));
    if (o.pass) o.detail = "real " + num(worst_real) + ", circle " + num(worst_circle);
    return o;
}

// Largest deviation of the mu round trip, measured against the family's own
// minimal parameters. The map's sensitivity grows like prod (1 - l_k) / l_k,
// so the parameter ranges decide how much of double precision survives.
double mu_round_trip(std::uint64_t seed, double l_lo, double l_hi, double c_max) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> un(1, 50);
    std::uniform_real_distribution<double> uc(-c_max, c_max), ul(l_lo, l_hi);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = un(rng);
        std::vector<double> c(n + 1), ell(n + 1, 0.0);
        for (auto& v : c) v = uc(rng);
        for (std::size_t k = 1; k <= n; ++k) ell[k] = ul(rng);
        const auto fam = family_from_ell(c, ell);
        const auto cp = fam.chain_params(n);
        const auto s = verblunsky_from_coeffs(fam, n);
        const auto r = coeffs_from_verblunsky_mu(s.alpha, s.tau1_seed, n);
        for (std::size_t k = 0; k <= n; ++k) worst = std::max(worst, std::abs(r.c[k] - fam.c(k + 1)));
        for (std::size_t k = 1; k <= n; ++k) worst = std::max(worst, std::abs(r.ell[k - 1] - cp.ell_at(k + 1)));
    }
    return worst;
}

Outcome criterion8() {
    Outcome o;
    const double worst = mu_round_trip(8, 0.3, 0.7, 1.0);
    o.require(worst < 1e-12, "round trip error " + num(worst));
    const double wide = mu_round_trip(8, 0.05, 0.95, 2.0);

    const std::vector<cplx> zero(40, 0.0);
    const auto nu = coeffs_from_verblunsky_nu(zero, zero.size());
    double dev = 0.0;
    for (double v : nu.c) dev = std::max(dev, std::abs(v));
    for (double v : nu.d) dev = std::max(dev, std::abs(v - 0.25));
    for (double v : nu.g) dev = std::max(dev, std::abs(v - 0.5));
    o.require(dev <= 1e-16, "alpha = 0 deviation " + num(dev));
    if (o.pass) o.detail = "100 round trips, max error " + num(worst) + " (wide-range families: " + num(wide) + ")";
    return o;
}

Outcome criterion9() {
    Outcome o;
    double worst_x = 0.0, worst_w = 0.0;
    for (const auto& t : kCrrTables) {
        const auto fam = crr_family(t.lambda, 2.0);
        RootFindConfig hyb;
        hyb.method = Method::hybrid;
        const auto a = find_all_zeros(fam, t.n, {});
        const auto h = find_all_zeros_detailed(fam, t.n, hyb);
        const double m1 = fam.chain_params(t.n).m1;
        for (std::size_t k = 0; k < t.n; ++k) {
            worst_x = std::max(worst_x, std::abs(a[k] - h[k].x));
            if (!h[k].ip_weight) {
                o.require(false, "missing IP weight");
                continue;
            }
            const double w = formula_weight(fam, eval_scaled(fam, t.n, h[k].x), m1);
            worst_w = std::max(worst_w, std::abs(*h[k].ip_weight - w));
        }
    }
    o.require(worst_x < 2e-10, "node disagreement " + num(worst_x));
    o.require(worst_w < 1e-9, "weight disagreement " + num(worst_w));
    if (o.pass) o.detail = "nodes " + num(worst_x) + ", weights " + num(worst_w);
    return o;
}

Outcome criterion10() {
    Outcome o;
    double worst = 0.0;
    const auto integ = family_integrator(lebesgue_family());
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto r = coeffs_from_measure(integ, n, 1e-10);
        for (double c : r.c) worst = std::max(worst, std::abs(c));
        for (double d : r.d) worst = std::max(worst, std::abs(d - 0.25));
    }
    o.require(worst < 1e-8, "max deviation " + num(worst));
    if (o.pass) o.detail = "max deviation " + num(worst);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"Lebesgue n=15 LRF from published seeds", criterion1},
        {"Lebesgue closed-form nodes and weights", criterion2},
        {"CRR rules against the printed tables", criterion3},
        {"rational Gaussian integral I_n", criterion4},
        {"circle sums S1 and S2", criterion5},
        {"property suite", criterion6},
        {"exactness oracles", criterion7},
        {"Verblunsky map round trips", criterion8},
        {"hybrid/LRF/IP agreement", criterion9},
        {"coefficients from the Lebesgue density", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s  criterion %2zu  %-42s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
    }
    return failures;
}
