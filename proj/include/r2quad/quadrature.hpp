#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "r2quad/family.hpp"
#include "r2quad/root_finder.hpp"

namespace r2quad {

/// n-point rule for the real-line measure: nodes descending, weights positive.
struct RealRule {
    std::size_t n = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::string family;
    std::map<std::string, double> params;
    double tol = 0.0;
    Method method = Method::lrf;
    std::vector<NodeRecord> provenance;  ///< may be empty for rules loaded from disk
};

enum class CircleKind { mu_rule, nu_rule };

std::string to_string(CircleKind k);

struct CircleNode {
    double theta = 0.0;  ///< in [0, 2 pi)
    double re = 1.0;
    double im = 0.0;

    std::complex<double> z() const { return {re, im}; }
    static CircleNode from_angle(double theta);
};

/// Unit-circle rule. For the nu-rule the point zeta = 1 is carried separately
/// in mass_at_one and is not part of `nodes`.
struct CircleRule {
    std::size_t n_points = 0;
    std::vector<CircleNode> nodes;
    std::vector<double> weights;
    double mass_at_one = 0.0;
    CircleKind kind = CircleKind::mu_rule;
    double epsilon = 0.0;
    std::string family;
    std::map<std::string, double> params;
};

RealRule real_rule(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg = {});

/// Weighted sum with compensated accumulation.
double integrate_real(const RealRule& rule, const std::function<double(double)>& f);

/// theta = pi - 2 atan(x), the angle of (x+i)/(x-i).
double cayley_angle(double x);

/// n-point circle rule for mu, with lambda_k = ((c_1^2+1)/M_1) w_k/(x_k^2+1).
CircleRule circle_rule_mu(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg = {});
CircleRule circle_rule_mu(const CoefficientFamily& fam, const RealRule& base);

/// (n+1)-point rule for nu_eps = (1-eps) nu_0 + eps delta_1.
CircleRule circle_rule_nu(const CoefficientFamily& fam, std::size_t n, double epsilon, const RootFindConfig& cfg = {});
CircleRule circle_rule_nu(const CoefficientFamily& fam, const RealRule& base, double epsilon);

std::complex<double> integrate_circle(const CircleRule& rule,
                                      const std::function<std::complex<double>(std::complex<double>)>& F);

}  // namespace r2quad
