#pragma once

#include <cmath>
#include <complex>

namespace r2quad {

/// Neumaier's variant of Kahan summation.
template <typename T>
class CompensatedSum {
public:
    void add(T x) {
        T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(T x) {
        add(x);
        return *this;
    }
    T value() const { return sum_ + comp_; }

private:
    T sum_{0};
    T comp_{0};
};

template <>
class CompensatedSum<std::complex<double>> {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    CompensatedSum& operator+=(std::complex<double> z) {
        add(z);
        return *this;
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum<double> re_;
    CompensatedSum<double> im_;
};

/// A double kept as mantissa * 2^exponent, used for long products whose
/// magnitude leaves the binary64 range.
struct ScaledReal {
    double mantissa = 1.0;
    long exponent = 0;

    ScaledReal& operator*=(double v) {
        mantissa *= v;
        normalize();
        return *this;
    }
    ScaledReal& operator/=(double v) {
        mantissa /= v;
        normalize();
        return *this;
    }
    ScaledReal& operator*=(const ScaledReal& o) {
        mantissa *= o.mantissa;
        exponent += o.exponent;
        normalize();
        return *this;
    }
    ScaledReal& operator/=(const ScaledReal& o) {
        mantissa /= o.mantissa;
        exponent -= o.exponent;
        normalize();
        return *this;
    }
    void normalize() {
        if (mantissa == 0.0 || !std::isfinite(mantissa)) return;
        int e = 0;
        mantissa = std::frexp(mantissa, &e);
        exponent += e;
    }
    double value() const {
        if (exponent > 2000) return mantissa * INFINITY;
        if (exponent < -2000) return mantissa * 0.0;
        return std::ldexp(mantissa, static_cast<int>(exponent));
    }
};

/// Smith's algorithm for complex division; scales by the larger component of the
/// denominator so that tiny or huge operands do not under/overflow.
inline std::complex<double> safe_divide(std::complex<double> a, std::complex<double> b) {
    const double c = b.real(), d = b.imag();
    if (std::abs(c) >= std::abs(d)) {
        const double r = d / c;
        const double den = c + d * r;
        return {(a.real() + a.imag() * r) / den, (a.imag() - a.real() * r) / den};
    }
    const double r = c / d;
    const double den = c * r + d;
    return {(a.real() * r + a.imag()) / den, (a.imag() * r - a.real()) / den};
}

}  // namespace r2quad
