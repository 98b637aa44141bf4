#include "r2quad/root_finder.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "r2quad/errors.hpp"
#include "r2quad/numeric.hpp"

namespace r2quad {

std::string to_string(Method m) {
    switch (m) {
        case Method::lrf: return "lrf";
        case Method::ip: return "ip";
        case Method::hybrid: return "hybrid";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "lrf") return Method::lrf;
    if (s == "ip") return Method::ip;
    if (s == "hybrid") return Method::hybrid;
    throw InvalidParameter("unknown method '" + s + "'");
}

void RootFindConfig::validate() const {
    if (!(tol > 0.0)) throw InvalidParameter("tol must be positive");
    if (!(delta > 0.0)) throw InvalidParameter("delta must be positive");
    if (!(hybrid_switch_tol > tol)) throw InvalidParameter("hybrid_switch_tol must exceed tol");
    if (max_iter == 0) throw InvalidParameter("max_iter must be positive");
}

LrfResult lrf_find_zero(const CoefficientFamily& fam, std::size_t n, double y0, Direction dir,
                        const RootFindConfig& cfg) {
    if (n < 1) throw InvalidParameter("degree must be at least 1");
    const double nn = static_cast<double>(n);
    double y = y0;
    double start_sign = 0.0;
    for (std::size_t j = 1; j <= cfg.max_iter; ++j) {
        const ScaledEval s = eval_scaled(fam, n, y);
        const double X = s.X[n], Y = s.Y[n], Z = s.Z[n];
        if (X == 0.0) return {y, j - 1, s};
        if (start_sign == 0.0) start_sign = X > 0.0 ? 1.0 : -1.0;
        // a sign change of X means the last step landed just past the zero;
        // the opposite branch then points back at it
        const bool crossed = (X > 0.0 ? 1.0 : -1.0) != start_sign;
        const Direction d = crossed ? (dir == Direction::plus ? Direction::minus : Direction::plus) : dir;

        const double a = (nn - 1.0) * Y;
        double disc = a * a - nn * (nn - 1.0) * X * Z;
        if (disc < 0.0) {
            // rounding can push a zero discriminant slightly negative
            if (-disc <= 1e-12 * a * a) {
                disc = 0.0;
            } else {
                throw NegativeDiscriminant(y);
            }
        }
        const double sgn = X > 0.0 ? 1.0 : -1.0;
        const double root = sgn * std::sqrt(disc);
        const double den = d == Direction::plus ? -Y + root : -Y - root;
        if (den == 0.0) throw NegativeDiscriminant(y);
        const double next = y + nn * X * std::sqrt(y * y + 1.0) / den;
        if (!std::isfinite(next)) throw NegativeDiscriminant(y);
        const double step = std::abs(next - y);
        y = next;
        if (step < cfg.tol) return {y, j, eval_scaled(fam, n, y)};
    }
    throw MaxIterExceeded("LRF did not converge from y0 = " + std::to_string(y0));
}

double formula_weight(const CoefficientFamily& fam, const ScaledEval& at_zero, double m1) {
    const std::size_t n = at_zero.degree();
    ScaledReal w;
    for (std::size_t k = 2; k <= n; ++k) w *= fam.d(k);
    w *= m1;
    w /= at_zero.Y[n];
    w /= at_zero.X[n - 1];
    w.exponent -= at_zero.ledger[n] + at_zero.ledger[n - 1];
    return w.value();
}

LUFactors lu_factor_pencil(const CoefficientFamily& fam, std::size_t n, double p) {
    if (n < 1) throw InvalidParameter("degree must be at least 1");
    LUFactors f;
    f.shift = p;
    f.r.resize(n);
    f.t_re.resize(n - 1);
    f.t_im.resize(n - 1);
    f.l_re.resize(n - 1);
    f.l_im.resize(n - 1);
    constexpr double kTiny = 1e-300;
    const double q = p * p + 1.0;

    f.r[0] = fam.c(1) - p;
    if (std::abs(f.r[0]) < kTiny) throw SingularPivot(1);
    for (std::size_t m = 0; m + 1 < n; ++m) {
        const double dm = fam.d(m + 2);
        const double sd = std::sqrt(dm);
        f.t_re[m] = -p * sd;
        f.t_im[m] = sd;
        // l = conj(t) / r
        f.l_re[m] = -p * sd / f.r[m];
        f.l_im[m] = -sd / f.r[m];
        f.r[m + 1] = fam.c(m + 2) - p - q * dm / f.r[m];
        if (std::abs(f.r[m + 1]) < kTiny) throw SingularPivot(m + 2);
    }
    return f;
}

namespace {

// u^H B u for the pencil's B (unit diagonal, off-diagonals sqrt(d_{m+2})).
double hermitian_form(const std::vector<double>& ur, const std::vector<double>& ui, const std::vector<double>& sd) {
    CompensatedSum<double> acc;
    const std::size_t n = ur.size();
    for (std::size_t m = 0; m < n; ++m) acc += ur[m] * ur[m] + ui[m] * ui[m];
    for (std::size_t m = 0; m + 1 < n; ++m) acc += 2.0 * sd[m] * (ur[m] * ur[m + 1] + ui[m] * ui[m + 1]);
    return acc.value();
}

}  // namespace

IpResult ip_refine(const CoefficientFamily& fam, std::size_t n, double p, const RootFindConfig& cfg,
                   std::optional<double> m1) {
    if (n < 1) throw InvalidParameter("degree must be at least 1");
    if (!m1) {
        const ChainParams cp = fam.chain_params(n);
        m1 = cp.has_m1() ? cp.m1 : std::numeric_limits<double>::quiet_NaN();
    }

    // Keep the shift a little away from the zero it is aimed at; a Newton step
    // estimates the distance.
    {
        const ScaledEval s = eval_scaled(fam, n, p);
        const double guard = 1e-6 * (1.0 + std::abs(p));
        const double step = s.Y[n] != 0.0 ? s.X[n] * std::sqrt(p * p + 1.0) / s.Y[n] : 0.0;
        if (std::isfinite(step) && std::abs(step) < guard) {
            const double target = p - step;
            p = target + (step >= 0.0 ? guard : -guard);
        }
    }

    const LUFactors f = lu_factor_pencil(fam, n, p);
    std::vector<double> sd(n > 0 ? n - 1 : 0);
    for (std::size_t m = 0; m + 1 < n; ++m) sd[m] = f.t_im[m];

    // Start from the rational eigenvector formula evaluated at p.
    std::vector<double> ur(n), ui(n);
    {
        std::complex<double> u = 1.0;
        ur[0] = 1.0;
        ui[0] = 0.0;
        const std::complex<double> pm(p, -1.0);
        for (std::size_t m = 1; m < n; ++m) {
            u *= f.r[m - 1] / (pm * sd[m - 1]);
            if (!std::isfinite(std::abs(u)) || std::abs(u) > 1e150) u /= std::abs(u);
            ur[m] = u.real();
            ui[m] = u.imag();
        }
    }

    std::vector<double> hr(n), hi(n), vr(n), vi(n), wr(n), wi(n);
    double gamma_prev = 0.0;
    IpResult res;
    res.shift = p;
    for (std::size_t j = 1; j <= cfg.max_iter; ++j) {
        // u_hat = B u
        for (std::size_t m = 0; m < n; ++m) {
            double ar = ur[m], ai = ui[m];
            if (m > 0) {
                ar += sd[m - 1] * ur[m - 1];
                ai += sd[m - 1] * ui[m - 1];
            }
            if (m + 1 < n) {
                ar += sd[m] * ur[m + 1];
                ai += sd[m] * ui[m + 1];
            }
            hr[m] = ar;
            hi[m] = ai;
        }
        // L v = u_hat
        vr[0] = hr[0];
        vi[0] = hi[0];
        for (std::size_t m = 0; m + 1 < n; ++m) {
            const double l1 = f.l_re[m], l2 = f.l_im[m];
            vr[m + 1] = hr[m + 1] - l1 * vr[m] + l2 * vi[m];
            vi[m + 1] = hi[m + 1] - l2 * vr[m] - l1 * vi[m];
        }
        // U w = v
        wr[n - 1] = vr[n - 1] / f.r[n - 1];
        wi[n - 1] = vi[n - 1] / f.r[n - 1];
        for (std::size_t m = n - 1; m-- > 0;) {
            const double t1 = f.t_re[m], t2 = f.t_im[m];
            wr[m] = (vr[m] - t1 * wr[m + 1] + t2 * wi[m + 1]) / f.r[m];
            wi[m] = (vi[m] - t2 * wr[m + 1] - t1 * wi[m + 1]) / f.r[m];
        }
        // normalize by the first entry: gamma = 1/w_0, u = w/w_0
        const double w0r = wr[0], w0i = wi[0];
        const double mag2 = w0r * w0r + w0i * w0i;
        if (!(mag2 > 0.0) || !std::isfinite(mag2)) throw MaxIterExceeded("IP iterate degenerated");
        const double gamma_re = w0r / mag2;
        const std::complex<double> inv_w0 = std::complex<double>(w0r, -w0i) / mag2;
        for (std::size_t m = 0; m < n; ++m) {
            const std::complex<double> z = std::complex<double>(wr[m], wi[m]) * inv_w0;
            ur[m] = z.real();
            ui[m] = z.imag();
        }
        ur[0] = 1.0;
        ui[0] = 0.0;

        const bool done = std::abs(gamma_re - gamma_prev) < cfg.tol;
        gamma_prev = gamma_re;
        if (done) {
            res.zero = p + gamma_re;
            res.iterations = j;
            res.bform = hermitian_form(ur, ui, sd);
            res.weight = *m1 / res.bform;
            return res;
        }
    }
    throw MaxIterExceeded("inverse power iteration did not converge from p = " + std::to_string(p));
}

namespace {

using Refiner = std::function<NodeRecord(double y0, Direction dir, double lo, double hi)>;

IpResult ip_with_retry(const CoefficientFamily& fam, std::size_t n, double p, const RootFindConfig& cfg,
                       double m1);

class Sweep {
public:
    Sweep(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg, Refiner refine,
          bool weigh_origin = false, double m1 = 0.0)
        : fam_(fam), n_(n), cfg_(cfg), refine_(std::move(refine)), weigh_origin_(weigh_origin), m1_(m1) {}

    std::vector<NodeRecord> run() {
        const SturmCounts c0 = sturm_counts(fam_, n_, 0.0);
        std::vector<NodeRecord> pos, neg;
        std::optional<NodeRecord> mid;
        if (c0.at) {
            NodeRecord r;
            r.x = 0.0;
            if (weigh_origin_) {
                // the shift guard moves p off the zero; the iteration comes back to it
                const IpResult ip = ip_with_retry(fam_, n_, 0.0, cfg_, m1_);
                r.ip_iterations = ip.iterations;
                if (std::isfinite(ip.weight)) r.ip_weight = ip.weight;
            }
            mid = r;
        }
        side(+1, c0.pos, c0.at != 0, pos);
        side(-1, c0.neg, c0.at != 0, neg);

        std::vector<NodeRecord> out;
        out.reserve(n_);
        for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(*it);
        if (mid) out.push_back(*mid);
        for (const auto& r : neg) out.push_back(r);
        if (out.size() != n_) throw RootCountMismatch("found " + std::to_string(out.size()) + " zeros, expected " + std::to_string(n_));
        for (std::size_t i = 1; i < out.size(); ++i)
            if (!(out[i].x < out[i - 1].x)) throw RootCountMismatch("zeros are not strictly descending");
        return out;
    }

private:
    // number of zeros strictly beyond t in direction s
    std::size_t beyond(int s, double t) const {
        const SturmCounts c = sturm_counts(fam_, n_, t);
        return s > 0 ? c.pos : c.neg;
    }

    double far_bound(int s) const {
        double b = 1.0;
        for (int i = 0; i < 1100 && beyond(s, s * b) > 0; ++i) b *= 2.0;
        return s * b;
    }

    // Sturm bisection: returns lo with beyond(lo) == remaining, lo past `lower`
    // unless `lower` may be used, and |hi - lo| <= 0.5.
    std::pair<double, double> bracket(int s, double lower, bool lower_is_zero, std::size_t remaining,
                                      double width = 0.5) const {
        double lo = lower;
        double hi = far_bound(s);
        for (int it = 0; it < 4000; ++it) {
            if (std::abs(hi - lo) <= width && (!lower_is_zero || lo != lower)) break;
            const double m = 0.5 * (lo + hi);
            if (m == lo || m == hi) break;
            if (beyond(s, m) == remaining)
                lo = m;
            else
                hi = m;
        }
        return {lo, hi};
    }

    bool valid(int s, const NodeRecord& r, double lower, std::size_t remaining) const {
        if (!std::isfinite(r.x) || !(s * (r.x - lower) > 0.0)) return false;
        const double eps = std::max(100.0 * cfg_.tol, 1e-12) * (1.0 + std::abs(r.x));
        return beyond(s, r.x - s * eps) == remaining && beyond(s, r.x + s * eps) + 1 == remaining;
    }

    void side(int s, std::size_t count, bool zero_at_origin, std::vector<NodeRecord>& found) {
        const Direction dir = s > 0 ? Direction::plus : Direction::minus;
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t remaining = count - i;
            const bool have_prev = i >= 1;
            const double lower = have_prev ? found.back().x : 0.0;
            const bool lower_is_zero = have_prev || zero_at_origin;

            std::optional<double> y0;
            if (i >= 2 || (i == 1 && zero_at_origin)) {
                const double a1 = found.back().x;
                const double a2 = i >= 2 ? found[i - 2].x : 0.0;
                double delta = cfg_.delta;
                for (int h = 0; h < 60; ++h, delta *= 0.5) {
                    const double cand = a1 + (a1 - a2) * delta;
                    if (cand != a1 && beyond(s, cand) == remaining) {
                        y0 = cand;
                        break;
                    }
                }
            }

            NodeRecord rec;
            bool ok = false;
            double lo = lower, hi = far_bound(s);
            if (!y0) {
                std::tie(lo, hi) = bracket(s, lower, lower_is_zero, remaining);
                y0 = lo;
            }
            try {
                rec = refine_(*y0, dir, lower, hi);
                ok = valid(s, rec, lower, remaining);
            } catch (const NegativeDiscriminant&) {
            } catch (const MaxIterExceeded&) {
            } catch (const SingularPivot&) {
            }
            if (!ok) {
                // re-bracket tightly and fall back to plain LRF from the bracket end
                std::tie(lo, hi) = bracket(s, lower, lower_is_zero, remaining);
                try {
                    const LrfResult lr = lrf_find_zero(fam_, n_, lo, dir, cfg_);
                    rec = NodeRecord{};
                    rec.x = lr.zero;
                    rec.y0 = lo;
                    rec.lrf_iterations = lr.iterations;
                    ok = valid(s, rec, lower, remaining);
                } catch (const Error&) {
                    ok = false;
                }
            }
            if (!ok)
                throw RootCountMismatch("could not isolate zero " + std::to_string(i + 1) + " on the " +
                                        (s > 0 ? "positive" : "negative") + " side");
            found.push_back(rec);
        }
    }

    const CoefficientFamily& fam_;
    std::size_t n_;
    const RootFindConfig& cfg_;
    Refiner refine_;
    bool weigh_origin_;
    double m1_;
};

NodeRecord single_zero(const CoefficientFamily& fam) {
    NodeRecord r;
    r.x = fam.c(1);
    r.y0 = r.x;
    return r;
}

Refiner lrf_refiner(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg) {
    return [&fam, n, &cfg](double y0, Direction dir, double, double) {
        const LrfResult lr = lrf_find_zero(fam, n, y0, dir, cfg);
        NodeRecord r;
        r.x = lr.zero;
        r.y0 = y0;
        r.lrf_iterations = lr.iterations;
        return r;
    };
}

IpResult ip_with_retry(const CoefficientFamily& fam, std::size_t n, double p, const RootFindConfig& cfg,
                       double m1) {
    for (int attempt = 0;; ++attempt) {
        try {
            return ip_refine(fam, n, p, cfg, m1);
        } catch (const SingularPivot&) {
            if (attempt >= 4) throw;
            p += 1e-8 * (1.0 + std::abs(p));
        }
    }
}

double rule_m1(const CoefficientFamily& fam, std::size_t n) {
    const ChainParams cp = fam.chain_params(n);
    return cp.has_m1() ? cp.m1 : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::vector<NodeRecord> find_all_zeros_detailed(const CoefficientFamily& fam, std::size_t n,
                                                const RootFindConfig& cfg) {
    cfg.validate();
    if (n < 1) throw InvalidParameter("degree must be at least 1");
    if (cfg.method == Method::hybrid) return hybrid_find(fam, n, cfg);
    if (n == 1) return {single_zero(fam)};

    if (cfg.method == Method::lrf) return Sweep(fam, n, cfg, lrf_refiner(fam, n, cfg)).run();

    // Pure inverse power: narrow a Sturm bracket to hybrid_switch_tol, then IP from its midpoint.
    const double m1 = rule_m1(fam, n);
    Refiner ip = [&fam, n, &cfg, m1](double y0, Direction dir, double lower, double) {
        const int s = dir == Direction::plus ? 1 : -1;
        double lo = y0;
        double hi = lo;
        {
            // the zero lies beyond y0 in direction s; find a far end first
            const std::size_t base = s > 0 ? sturm_counts(fam, n, lo).pos : sturm_counts(fam, n, lo).neg;
            double step = std::max(std::abs(y0 - lower), 0.5);
            for (int i = 0; i < 2000; ++i) {
                hi = lo + s * step;
                const std::size_t b = s > 0 ? sturm_counts(fam, n, hi).pos : sturm_counts(fam, n, hi).neg;
                if (b < base) break;
                lo = hi;
                step *= 2.0;
            }
            for (int i = 0; i < 200 && std::abs(hi - lo) > cfg.hybrid_switch_tol; ++i) {
                const double m = 0.5 * (lo + hi);
                const std::size_t b = s > 0 ? sturm_counts(fam, n, m).pos : sturm_counts(fam, n, m).neg;
                if (b == base)
                    lo = m;
                else
                    hi = m;
            }
        }
        const double p = 0.5 * (lo + hi);
        const IpResult r = ip_with_retry(fam, n, p, cfg, m1);
        NodeRecord rec;
        rec.x = r.zero;
        rec.y0 = p;
        rec.ip_iterations = r.iterations;
        if (std::isfinite(r.weight)) rec.ip_weight = r.weight;
        return rec;
    };
    return Sweep(fam, n, cfg, ip, true, m1).run();
}

std::vector<double> find_all_zeros(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg) {
    const auto recs = find_all_zeros_detailed(fam, n, cfg);
    std::vector<double> x(recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) x[i] = recs[i].x;
    return x;
}

std::vector<NodeRecord> hybrid_find(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg) {
    cfg.validate();
    if (n < 1) throw InvalidParameter("degree must be at least 1");
    const double m1 = rule_m1(fam, n);
    if (n == 1) {
        NodeRecord r = single_zero(fam);
        if (std::isfinite(m1)) r.ip_weight = m1;
        return {r};
    }
    RootFindConfig coarse = cfg;
    coarse.tol = cfg.hybrid_switch_tol;
    Refiner hyb = [&fam, n, &cfg, coarse, m1](double y0, Direction dir, double, double) {
        const LrfResult lr = lrf_find_zero(fam, n, y0, dir, coarse);
        const IpResult ip = ip_with_retry(fam, n, lr.zero, cfg, m1);
        NodeRecord rec;
        rec.x = ip.zero;
        rec.y0 = y0;
        rec.lrf_iterations = lr.iterations;
        rec.ip_iterations = ip.iterations;
        if (std::isfinite(ip.weight)) rec.ip_weight = ip.weight;
        return rec;
    };
    return Sweep(fam, n, cfg, hyb, true, m1).run();
}

}  // namespace r2quad
