#include "r2quad/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "r2quad/errors.hpp"
#include "r2quad/numeric.hpp"
#include "r2quad/poly.hpp"

namespace r2quad {

std::string to_string(CircleKind k) { return k == CircleKind::mu_rule ? "mu_rule" : "nu_rule"; }

CircleNode CircleNode::from_angle(double theta) {
    CircleNode c;
    c.theta = theta;
    c.re = std::cos(theta);
    c.im = std::sin(theta);
    return c;
}

double cayley_angle(double x) { return std::numbers::pi - 2.0 * std::atan(x); }

namespace {

template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(t);
    for (unsigned w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += t) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

RealRule real_rule(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg) {
    if (n < 1) throw InvalidParameter("rule size must be at least 1");
    const ChainParams cp = fam.chain_params(n);
    if (!cp.has_m1()) throw DivergentSeries();

    RealRule rule;
    rule.n = n;
    rule.family = fam.name();
    rule.params = fam.params();
    rule.tol = cfg.tol;
    rule.method = cfg.method;
    rule.provenance = find_all_zeros_detailed(fam, n, cfg);
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t k = 0; k < n; ++k) rule.nodes[k] = rule.provenance[k].x;

    parallel_for(n, cfg.threads, [&](std::size_t k) {
        const ScaledEval s = eval_scaled(fam, n, rule.nodes[k]);
        rule.weights[k] = formula_weight(fam, s, cp.m1);
    });
    for (std::size_t k = 0; k < n; ++k)
        if (!(rule.weights[k] > 0.0) || !std::isfinite(rule.weights[k]))
            throw NotConverged("weight " + std::to_string(k + 1) + " is not positive");
    return rule;
}

double integrate_real(const RealRule& rule, const std::function<double(double)>& f) {
    CompensatedSum<double> acc;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * f(rule.nodes[k]);
    return acc.value();
}

CircleRule circle_rule_mu(const CoefficientFamily& fam, const RealRule& base) {
    const ChainParams cp = fam.chain_params(base.n);
    if (!cp.has_m1()) throw DivergentSeries("the mu-rule needs a finite series S");
    const double c1 = fam.c(1);
    const double scale = (c1 * c1 + 1.0) / cp.m1;

    CircleRule rule;
    rule.kind = CircleKind::mu_rule;
    rule.n_points = base.n;
    rule.family = base.family;
    rule.params = base.params;
    for (std::size_t k = 0; k < base.n; ++k) {
        const double x = base.nodes[k];
        rule.nodes.push_back(CircleNode::from_angle(cayley_angle(x)));
        rule.weights.push_back(scale * base.weights[k] / (x * x + 1.0));
    }
    return rule;
}

CircleRule circle_rule_mu(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg) {
    return circle_rule_mu(fam, real_rule(fam, n, cfg));
}

CircleRule circle_rule_nu(const CoefficientFamily& fam, const RealRule& base, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw InvalidParameter("epsilon must lie in [0,1)");
    const ChainParams cp = fam.chain_params(base.n);
    if (!cp.has_m1()) throw DivergentSeries();

    CircleRule rule;
    rule.kind = CircleKind::nu_rule;
    rule.epsilon = epsilon;
    rule.n_points = base.n + 1;
    rule.family = base.family;
    rule.params = base.params;
    rule.mass_at_one = (1.0 - epsilon) * lambda_hat(cp, base.n) + epsilon;
    for (std::size_t k = 0; k < base.n; ++k) {
        rule.nodes.push_back(CircleNode::from_angle(cayley_angle(base.nodes[k])));
        rule.weights.push_back((1.0 - epsilon) * base.weights[k]);
    }
    return rule;
}

CircleRule circle_rule_nu(const CoefficientFamily& fam, std::size_t n, double epsilon, const RootFindConfig& cfg) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) throw InvalidParameter("epsilon must lie in [0,1)");
    return circle_rule_nu(fam, real_rule(fam, n, cfg), epsilon);
}

std::complex<double> integrate_circle(const CircleRule& rule,
                                      const std::function<std::complex<double>(std::complex<double>)>& F) {
    CompensatedSum<std::complex<double>> acc;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * F(rule.nodes[k].z());
    if (rule.kind == CircleKind::nu_rule) acc += rule.mass_at_one * F({1.0, 0.0});
    return acc.value();
}

}  // namespace r2quad
