#include "r2quad/chain_seq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "r2quad/errors.hpp"
#include "r2quad/numeric.hpp"

namespace r2quad {

namespace {

constexpr std::size_t kFirstCheckpoint = 64;
constexpr int kMaxAitkenLevel = 3;

double aitken(double x0, double x1, double x2) {
    const double d1 = x1 - x0;
    const double d2 = x2 - x1;
    if (d2 == 0.0) return x2;
    if (d1 == 0.0) return NAN;
    const double q = d2 / d1;
    if (!(q > 0.0 && q < 0.999)) return NAN;
    return x2 + d2 * q / (1.0 - q);
}

}  // namespace

namespace detail {

void HorizonExtrapolator::push(std::vector<double> v) {
    raw_.push_back(std::move(v));
    const std::size_t j = raw_.size() - 1;
    const std::size_t width = raw_.back().size();
    std::vector<double> est(width);
    double change = 0.0;
    bool have_change = j >= 1;

    for (std::size_t i = 0; i < width; ++i) {
        // table[L][h] for horizons h = 0..j
        std::vector<std::vector<double>> table(kMaxAitkenLevel + 1, std::vector<double>(j + 1, NAN));
        for (std::size_t h = 0; h <= j; ++h) table[0][h] = raw_[h][i];
        for (int L = 1; L <= kMaxAitkenLevel; ++L)
            for (std::size_t h = 2; h <= j; ++h)
                table[L][h] = aitken(table[L - 1][h - 2], table[L - 1][h - 1], table[L - 1][h]);

        double best_val = table[0][j];
        double best_change = j >= 1 ? std::abs(table[0][j] - table[0][j - 1]) : INFINITY;
        for (int L = 1; L <= kMaxAitkenLevel && j >= 1; ++L) {
            const double a = table[L][j], b = table[L][j - 1];
            if (!std::isfinite(a) || !std::isfinite(b)) continue;
            const double c = std::abs(a - b);
            if (c < best_change) {
                best_change = c;
                best_val = a;
            }
        }
        est[i] = best_val;
        change = std::max(change, best_change);
    }
    estimate_ = std::move(est);
    change_ = have_change ? change : INFINITY;
}

}  // namespace detail

std::vector<double> minimal_parameters(std::span<const double> d) {
    std::vector<double> ell(d.size() + 1);
    ell[0] = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const std::size_t k = i + 2;  // subscript of the new parameter
        if (!(d[i] > 0.0)) throw ChainSequenceViolation(k, "d must be positive");
        const double l = d[i] / (1.0 - ell[i]);
        if (!(l > 0.0 && l < 1.0)) throw ChainSequenceViolation(k);
        ell[i + 1] = l;
    }
    return ell;
}

SeriesResult series_S(const IndexedSequence& ell, double tail_tol, std::size_t max_terms) {
    if (!(tail_tol > 0.0)) throw InvalidParameter("tail_tol must be positive");
    CompensatedSum<double> sum;
    sum += 1.0;
    double term = 1.0;
    double prev_term = INFINITY;
    bool decreasing_segment = true;
    std::size_t checkpoint = kFirstCheckpoint;
    int stable = 0;
    detail::HorizonExtrapolator extrap;
    SeriesResult res;

    std::size_t n = 2;
    for (; n <= max_terms; ++n) {
        const double l = ell(n);
        if (!(l > 0.0 && l < 1.0)) throw ChainSequenceViolation(n);
        term *= l / (1.0 - l);
        sum += term;
        if (!(term < prev_term)) decreasing_segment = false;
        prev_term = term;
        if (term == 0.0) {
            return {sum.value(), true, n};
        }
        if (n == checkpoint) {
            extrap.push({sum.value()});
            const double est = extrap.estimate()[0];
            stable = extrap.change() < tail_tol * est ? stable + 1 : 0;
            // Either the tail is negligible, or the extrapolated limit has held
            // still over two consecutive doublings of the horizon.
            const bool small = term < tail_tol && stable >= 1;
            if (decreasing_segment && (small || stable >= 2)) return {est, true, n};
            decreasing_segment = true;
            checkpoint *= 2;
        }
        if (!std::isfinite(term) || term > 1e300) break;
    }
    res.terms = std::min(n, max_terms);
    const bool small = term < tail_tol && decreasing_segment;
    if (small) {
        // term condition met but the extrapolation has not settled
        extrap.push({sum.value()});
        res.value = extrap.estimate()[0];
        res.converged = true;
    } else {
        res.value = sum.value();
        res.converged = false;
    }
    return res;
}

SeriesResult series_S(std::span<const double> ell, double tail_tol, std::size_t max_terms) {
    const std::size_t avail = ell.size();
    const std::size_t limit = std::min(max_terms, avail);
    if (limit < 2) return {1.0, false, 1};
    return series_S([&](std::size_t k) { return ell[k - 1]; }, tail_tol, limit);
}

std::vector<double> maximal_parameters(const IndexedSequence& d, std::size_t n, const ChainConfig& cfg,
                                       std::size_t data_limit) {
    if (!(cfg.tol > 0.0)) throw InvalidParameter("tol must be positive");
    const std::size_t width = n + 1;
    const std::size_t cap = cfg.horizon_cap_factor * std::max<std::size_t>(n, 1);
    std::size_t N = std::max({cfg.horizon_factor * n, n + 2, std::size_t{16}});
    if (data_limit < N) {
        if (data_limit < n + 2) throw IndexBeyondData(n + 2);
        N = data_limit;
    }

    detail::HorizonExtrapolator extrap;
    std::vector<double> prefix(width);
    for (;;) {
        double g = 1.0;
        for (std::size_t k = N - 1; k >= 1; --k) {
            g = 1.0 - d(k + 1) / g;
            if (!(g > 0.0 && g <= 1.0)) throw DegenerateTail(k);
            if (k <= width) prefix[k - 1] = g;
        }
        extrap.push(prefix);
        if (extrap.change() < cfg.tol) return extrap.estimate();
        if (N >= cap || N >= data_limit) break;
        N = std::min({2 * N, cap, data_limit});
    }
    throw NotConverged("maximal parameters did not stabilize up to horizon " + std::to_string(N));
}

namespace {

// M_1..M_{n+1} from the normalized tails sigma_k = sum_{j>=k} t_j / t_k of the
// series, where t_j = prod_{i=2}^{j+1} r_i and r = l/(1-l):
//   sigma_{k-1} = 1 + r_{k+1} sigma_k,   M_k = (1 + l_k r_{k+1} sigma_k) / sigma_{k-1}.
// Every operation combines positive numbers, so small M_k keep full relative
// accuracy. Returns an empty vector when the shifted tail does not converge.
std::vector<double> maximal_from_tail(const IndexedSequence& d, std::size_t n, const ChainConfig& cfg,
                                      std::size_t terms) {
    const std::size_t shift = n + 1;
    if (terms <= shift + 2) return {};
    std::vector<double> l(n + 3, 0.0);
    for (std::size_t k = 2; k <= n + 2; ++k) l[k] = d(k) / (1.0 - l[k - 1]);
    double l_prev = l[n + 2];
    std::size_t next_k = n + 3;
    auto tail_ell = [&](std::size_t m) {
        for (const std::size_t k = m + shift; next_k <= k; ++next_k) l_prev = d(next_k) / (1.0 - l_prev);
        return l_prev;
    };
    const SeriesResult tail = series_S(tail_ell, cfg.tail_tol, terms - shift);
    if (!tail.converged) return {};
    std::vector<double> m(n + 1);
    double sigma = tail.value;  // sigma_{n+1}
    for (std::size_t k = n + 1; k >= 1; --k) {
        const double r = l[k + 1] / (1.0 - l[k + 1]);
        const double prev = 1.0 + r * sigma;
        m[k - 1] = (1.0 + l[k] * r * sigma) / prev;
        sigma = prev;
    }
    return m;
}

}  // namespace

ChainParams compute_chain_params(const IndexedSequence& d, std::size_t n, const ChainConfig& cfg,
                                 std::size_t data_limit) {
    ChainParams cp;
    cp.n = n;
    std::vector<double> dv(n);
    for (std::size_t k = 2; k <= n + 1; ++k) dv[k - 2] = d(k);
    cp.ell = minimal_parameters(dv);

    // Stream l_k beyond the prefix for the series.
    double l_prev = 0.0;
    std::size_t next_k = 2;
    auto ell_stream = [&](std::size_t k) {
        while (next_k <= k) {
            const double dk = d(next_k);
            const double l = dk / (1.0 - l_prev);
            if (!(dk > 0.0) || !(l > 0.0 && l < 1.0)) throw ChainSequenceViolation(next_k);
            l_prev = l;
            ++next_k;
        }
        return l_prev;
    };
    const std::size_t terms = std::min(cfg.max_terms, data_limit);
    SeriesResult s = series_S(ell_stream, cfg.tail_tol, terms);
    cp.series_S = s.converged ? s.value : INFINITY;
    cp.series_converged = s.converged;

    if (!s.converged) {
        cp.maxp = cp.ell;
        cp.m1 = 0.0;
        return cp;
    }
    const double check_tol = 10.0 * std::max(cfg.tol, cfg.tail_tol);
    auto mismatch = [&](const std::vector<double>& m) { return std::abs(m[0] * cp.series_S - 1.0); };
    cp.maxp = maximal_parameters(d, n, cfg, data_limit);
    if (mismatch(cp.maxp) > check_tol) {
        // Backward recursion amplifies rounding by (1 - M_k) / M_{k+1}, which
        // is large when S is large. The tail form has no cancellation there.
        auto alt = maximal_from_tail(d, n, cfg, terms);
        if (!alt.empty() && mismatch(alt) < mismatch(cp.maxp)) cp.maxp = std::move(alt);
    }
    cp.m1 = cp.maxp[0];
    if (mismatch(cp.maxp) > check_tol) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", cp.m1 * cp.series_S - 1.0);
        throw NotConverged(std::string("M_1 and 1/S disagree: M_1*S - 1 = ") + buf);
    }
    return cp;
}

double lambda_hat(const ChainParams& cp, std::size_t n) {
    if (n > cp.n + 1) throw IndexBeyondData(n);
    double prod = 1.0;
    for (std::size_t k = 1; k <= n; ++k) prod *= (1.0 - cp.max_at(k)) / (1.0 - cp.ell_at(k));
    return prod;
}

}  // namespace r2quad
