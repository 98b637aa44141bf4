#include "r2quad/poly.hpp"

#include <algorithm>
#include <cmath>

#include "r2quad/errors.hpp"

namespace r2quad {

namespace {

constexpr int kHighExp = 512;
constexpr int kLowExp = -512;

int exponent_of(double v) {
    int e = 0;
    std::frexp(v, &e);
    return e;
}

}  // namespace

double ScaledEval::X_true(std::size_t m) const { return std::ldexp(X.at(m), ledger.at(m)); }
double ScaledEval::Y_true(std::size_t m) const { return std::ldexp(Y.at(m), ledger.at(m)); }
double ScaledEval::Z_true(std::size_t m) const { return std::ldexp(Z.at(m), ledger.at(m)); }

std::vector<double> eval_raw(const CoefficientFamily& fam, std::size_t n, double x) {
    std::vector<double> p(n + 1);
    p[0] = 1.0;
    if (n == 0) return p;
    p[1] = x - fam.c(1);
    const double q = x * x + 1.0;
    for (std::size_t m = 1; m < n; ++m) p[m + 1] = (x - fam.c(m + 1)) * p[m] - fam.d(m + 1) * q * p[m - 1];
    return p;
}

ScaledEval eval_scaled(const CoefficientFamily& fam, std::size_t n, double x) {
    if (n < 1) throw InvalidParameter("eval_scaled needs n >= 1");
    ScaledEval s;
    s.x = x;
    s.X.assign(n + 1, 0.0);
    s.Y.assign(n + 1, 0.0);
    s.Z.assign(n + 1, 0.0);
    s.ledger.assign(n + 1, 0);

    const double r = std::sqrt(x * x + 1.0);
    const double xr = x / r;
    s.X[0] = 1.0;
    s.X[1] = (x - fam.c(1)) / r;
    s.Y[1] = 1.0;

    for (std::size_t m = 1; m < n; ++m) {
        const double sm = (x - fam.c(m + 1)) / r;
        const double dm = fam.d(m + 1);
        // bring level m-1 onto the exponent of level m
        const int shift = s.ledger[m - 1] - s.ledger[m];
        const double Xp = std::ldexp(s.X[m - 1], shift);
        const double Yp = std::ldexp(s.Y[m - 1], shift);
        const double Zp = std::ldexp(s.Z[m - 1], shift);

        double Xn = sm * s.X[m] - dm * Xp;
        double Yn = sm * s.Y[m] - dm * Yp + s.X[m] - 2.0 * xr * dm * Xp;
        double Zn = sm * s.Z[m] - dm * Zp + 2.0 * s.Y[m] - 4.0 * xr * dm * Yp - 2.0 * dm * Xp;

        int e = s.ledger[m];
        const double big = std::max({std::abs(Xn), std::abs(Yn), std::abs(Zn)});
        if (big != 0.0 && std::isfinite(big)) {
            const int be = exponent_of(big);
            if (be > kHighExp || be < kLowExp) {
                Xn = std::ldexp(Xn, -be);
                Yn = std::ldexp(Yn, -be);
                Zn = std::ldexp(Zn, -be);
                e += be;
            }
        }
        s.X[m + 1] = Xn;
        s.Y[m + 1] = Yn;
        s.Z[m + 1] = Zn;
        s.ledger[m + 1] = e;
    }
    return s;
}

std::vector<double> eval_Q(const CoefficientFamily& fam, double m1, std::size_t n, double x) {
    std::vector<double> q(n + 1);
    q[0] = 0.0;
    if (n == 0) return q;
    q[1] = m1;
    const double w = x * x + 1.0;
    for (std::size_t m = 1; m < n; ++m) q[m + 1] = (x - fam.c(m + 1)) * q[m] - fam.d(m + 1) * w * q[m - 1];
    return q;
}

std::vector<std::complex<double>> eval_R(const CoefficientFamily& fam, std::size_t n, std::complex<double> z) {
    using cd = std::complex<double>;
    std::vector<cd> R(n + 1);
    R[0] = 1.0;
    if (n == 0) return R;
    auto lin = [&](std::size_t k) {
        const double ck = fam.c(k);
        return cd(1.0, ck) * z + cd(1.0, -ck);
    };
    R[1] = lin(1);
    for (std::size_t m = 1; m < n; ++m) R[m + 1] = lin(m + 1) * R[m] - 4.0 * fam.d(m + 1) * z * R[m - 1];
    return R;
}

SturmCounts sturm_counts(const CoefficientFamily& fam, std::size_t n, double t) {
    if (n < 1) throw InvalidParameter("sturm_counts needs n >= 1");
    // Only signs matter, so a lean X-only recurrence with crude rescaling suffices.
    const double r = std::sqrt(t * t + 1.0);
    double prev = 1.0;
    double cur = (t - fam.c(1)) / r;
    int prev_sign = 1;
    std::size_t changes = 0;
    auto sign_of = [&](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : -prev_sign); };

    int s1 = sign_of(cur);
    if (n == 1) {
        SturmCounts out;
        if (cur == 0.0) {
            out.at = 1;
            out.pos = 0;
        } else {
            out.pos = s1 != prev_sign ? 1 : 0;
        }
        out.neg = n - out.at - out.pos;
        return out;
    }
    if (s1 != prev_sign) ++changes;
    prev_sign = s1;

    for (std::size_t m = 1; m < n; ++m) {
        double next = (t - fam.c(m + 1)) / r * cur - fam.d(m + 1) * prev;
        prev = cur;
        cur = next;
        const double big = std::max(std::abs(prev), std::abs(cur));
        if (big > 0x1p500 || (big < 0x1p-500 && big > 0.0)) {
            const int e = exponent_of(big);
            prev = std::ldexp(prev, -e);
            cur = std::ldexp(cur, -e);
        }
        if (m + 1 == n) break;
        const int s = sign_of(cur);
        if (s != prev_sign) ++changes;
        prev_sign = s;
    }
    SturmCounts out;
    if (cur == 0.0) {
        out.at = 1;
        out.pos = changes;
    } else {
        const int s = cur > 0.0 ? 1 : -1;
        out.pos = changes + (s != prev_sign ? 1 : 0);
    }
    out.neg = n - out.at - out.pos;
    return out;
}

double leading_coefficient(const CoefficientFamily& fam, std::size_t n) {
    double l = 0.0;
    double prod = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k >= 2) {
            l = fam.d(k) / (1.0 - l);
            if (!(l > 0.0 && l < 1.0)) throw ChainSequenceViolation(k);
        }
        prod *= 1.0 - l;
    }
    return prod;
}

}  // namespace r2quad
