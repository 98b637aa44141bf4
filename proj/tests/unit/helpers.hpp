#pragma once

#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "r2quad/families.hpp"

namespace testing {

inline bool close_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

/// Family whose first n+1 minimal parameters are `ell` (ell[0] = l_1 = 0) with c given
/// up to c_{n+1}; beyond the data it continues with the geometric chain l = 0.4, c = 0.
inline r2quad::CoefficientFamily family_from_ell(std::vector<double> c, std::vector<double> ell) {
    auto cs = std::make_shared<std::vector<double>>(std::move(c));
    auto ls = std::make_shared<std::vector<double>>(std::move(ell));
    auto lk = [ls](std::size_t k) { return k <= ls->size() ? (*ls)[k - 1] : 0.4; };
    return r2quad::custom_family(
        "synthetic", [cs](std::size_t k) { return k <= cs->size() ? (*cs)[k - 1] : 0.0; },
        [lk](std::size_t k) { return (1.0 - lk(k - 1)) * lk(k); });
}

inline r2quad::CoefficientFamily random_family(std::mt19937_64& rng, std::size_t n, double l_lo = 0.05,
                                               double l_hi = 0.95, double c_max = 2.0) {
    std::uniform_real_distribution<double> cu(-c_max, c_max), lu(l_lo, l_hi);
    std::vector<double> c(n + 1), ell(n + 1);
    ell[0] = 0.0;
    for (std::size_t k = 0; k <= n; ++k) c[k] = cu(rng);
    for (std::size_t k = 1; k <= n; ++k) ell[k] = lu(rng);
    return family_from_ell(std::move(c), std::move(ell));
}

}  // namespace testing
