#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace r2quad {

/// An indexed real sequence, queried with increasing or arbitrary indices.
using IndexedSequence = std::function<double(std::size_t)>;

struct ChainConfig {
    double tol = 1e-12;            ///< stop tolerance for the maximal parameters
    double tail_tol = 1e-12;       ///< last-term threshold for the series S
    std::size_t max_terms = 1u << 26;
    std::size_t horizon_factor = 4;       ///< first horizon is horizon_factor * n
    std::size_t horizon_cap_factor = 1u << 20;  ///< horizon may grow to cap_factor * n
};

struct SeriesResult {
    double value = 1.0;
    bool converged = false;
    std::size_t terms = 0;
};

/// Minimal and maximal parameters of a positive chain sequence, truncated to
/// indices 1..n+1. Index k lives at position k-1.
struct ChainParams {
    std::size_t n = 0;
    std::vector<double> ell;
    std::vector<double> maxp;
    double series_S = std::numeric_limits<double>::infinity();
    bool series_converged = false;
    double m1 = 0.0;

    double ell_at(std::size_t k) const { return ell.at(k - 1); }
    double max_at(std::size_t k) const { return maxp.at(k - 1); }
    bool has_m1() const { return series_converged && m1 > 0.0; }
};

/// l_1 = 0 and l_{k+1} = d_{k+1} / (1 - l_k). `d` holds d_2..d_{n+1}; the result
/// has n+1 entries. Throws ChainSequenceViolation with the subscript k of the
/// first l_k outside (0,1).
std::vector<double> minimal_parameters(std::span<const double> d);

/// Sums 1 + sum_{n>=2} prod_{k=2}^n l_k/(1-l_k). `ell(k)` is queried for
/// k = 2, 3, ... in order. Partial sums at doubling checkpoints are
/// accelerated with iterated Aitken extrapolation.
SeriesResult series_S(const IndexedSequence& ell, double tail_tol, std::size_t max_terms);

/// Same series over a finite prefix l_1..l_m (only the prefix is summed).
SeriesResult series_S(std::span<const double> ell, double tail_tol, std::size_t max_terms);

/// Maximal parameters M_1..M_{n+1} by backward recursion g_k = 1 - d_{k+1}/g_{k+1}
/// from g_N = 1, with the horizon N doubled until the extrapolated prefix is stable.
/// `d(k)` returns d_k for k >= 2. `data_limit` is the largest k for which d_k exists.
std::vector<double> maximal_parameters(const IndexedSequence& d, std::size_t n, const ChainConfig& cfg = {},
                                       std::size_t data_limit = std::numeric_limits<std::size_t>::max());

/// Full chain data for a rule of degree n: l and M up to index n+1, S, and M_1.
/// When S diverges the maximal prefix is left equal to the minimal one and m1 = 0.
/// `d(k)` returns d_k for k >= 2.
ChainParams compute_chain_params(const IndexedSequence& d, std::size_t n, const ChainConfig& cfg = {},
                                 std::size_t data_limit = std::numeric_limits<std::size_t>::max());

/// prod_{k=1}^n (1 - M_k)/(1 - l_k).
double lambda_hat(const ChainParams& cp, std::size_t n);

namespace detail {

/// Elementwise iterated Aitken extrapolation over a sequence of vectors obtained
/// at geometrically growing horizons.
class HorizonExtrapolator {
public:
    void push(std::vector<double> v);
    /// Latest estimate (deepest level that is valid at both of the last two horizons).
    const std::vector<double>& estimate() const { return estimate_; }
    /// Max abs difference between the last two estimates; +inf before two pushes.
    double change() const { return change_; }
    std::size_t size() const { return raw_.size(); }

private:
    std::vector<std::vector<double>> raw_;
    std::vector<double> estimate_;
    double change_ = std::numeric_limits<double>::infinity();
};

}  // namespace detail

}  // namespace r2quad
