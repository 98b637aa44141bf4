#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "r2quad/quadrature.hpp"

namespace r2quad {

/// Rows `k c_k d_{k+1}`; c[k-1] = c_k and d_next[k-1] = d_{k+1}.
/// A comment line of the form `# m1 <value>` supplies M_1 for finite data.
struct CoefficientTable {
    std::vector<double> c;
    std::vector<double> d_next;
    std::optional<double> m1;
};

CoefficientTable parse_coefficients(std::istream& in);
void write_coefficients(std::ostream& out, const CoefficientTable& table);

struct VerblunskyData {
    std::vector<std::complex<double>> alpha;
    std::optional<std::complex<double>> tau1;
};

VerblunskyData parse_verblunsky(std::istream& in);
void write_verblunsky(std::ostream& out, const VerblunskyData& data);

nlohmann::json to_json(const RealRule& rule);
nlohmann::json to_json(const CircleRule& rule);
RealRule real_rule_from_json(const nlohmann::json& j);
CircleRule circle_rule_from_json(const nlohmann::json& j);

void write_csv(std::ostream& out, const RealRule& rule);
void write_csv(std::ostream& out, const CircleRule& rule);

/// `%.17g`
std::string format_double(double v);

}  // namespace r2quad
