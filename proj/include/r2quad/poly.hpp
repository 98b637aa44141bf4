#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "r2quad/family.hpp"

namespace r2quad {

/// Scaled values X_m = P_m/(x^2+1)^{m/2}, Y_m = P_m'/(x^2+1)^{(m-1)/2} and
/// Z_m = P_m''/(x^2+1)^{(m-2)/2} for m = 0..n. The true values are the stored
/// ones multiplied by 2^ledger[m]; the same factor applies to X, Y and Z at m.
struct ScaledEval {
    double x = 0.0;
    std::vector<double> X, Y, Z;
    std::vector<int> ledger;

    std::size_t degree() const { return X.size() - 1; }
    double X_true(std::size_t m) const;
    double Y_true(std::size_t m) const;
    double Z_true(std::size_t m) const;
};

/// P_0(x)..P_n(x) straight from the three-term recurrence.
std::vector<double> eval_raw(const CoefficientFamily& fam, std::size_t n, double x);

ScaledEval eval_scaled(const CoefficientFamily& fam, std::size_t n, double x);

/// Second-kind polynomials: Q_0 = 0, Q_1 = m1, same recurrence as P.
std::vector<double> eval_Q(const CoefficientFamily& fam, double m1, std::size_t n, double x);

/// Circle polynomials R_0..R_n at z.
std::vector<std::complex<double>> eval_R(const CoefficientFamily& fam, std::size_t n, std::complex<double> z);

struct SturmCounts {
    std::size_t neg = 0;  ///< zeros below t
    std::size_t at = 0;   ///< 1 when P_n(t) = 0
    std::size_t pos = 0;  ///< zeros above t
};

/// Zero counts of P_n relative to t from sign changes of X_0(t)..X_n(t).
SturmCounts sturm_counts(const CoefficientFamily& fam, std::size_t n, double t);

/// prod_{k=1}^n (1 - l_k): the leading coefficient of P_n.
double leading_coefficient(const CoefficientFamily& fam, std::size_t n);

}  // namespace r2quad
