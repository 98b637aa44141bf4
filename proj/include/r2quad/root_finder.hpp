#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "r2quad/family.hpp"
#include "r2quad/poly.hpp"

namespace r2quad {

enum class Method { lrf, ip, hybrid };
enum class Direction { plus, minus };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct RootFindConfig {
    double tol = 1e-10;
    double delta = 1.0;
    std::size_t max_iter = 100;
    Method method = Method::lrf;
    double hybrid_switch_tol = 1e-2;
    unsigned threads = 1;  ///< worker threads for per-node weight assembly

    /// Throws InvalidParameter unless tol > 0, delta > 0 and switch_tol > tol.
    void validate() const;
};

struct LrfResult {
    double zero = 0.0;
    std::size_t iterations = 0;
    ScaledEval scaled;  ///< evaluation at the returned zero
};

/// Laguerre iteration in scaled form. `plus` converges upward onto x_{n,k} from
/// a start in (x_{n,k+1}, x_{n,k}); `minus` converges downward.
LrfResult lrf_find_zero(const CoefficientFamily& fam, std::size_t n, double y0, Direction dir,
                        const RootFindConfig& cfg);

/// Diagnostics kept for each node of a sweep.
struct NodeRecord {
    double x = 0.0;
    double y0 = 0.0;  ///< start of the LRF run (or the IP shift for the pure IP method)
    std::size_t lrf_iterations = 0;
    std::size_t ip_iterations = 0;
    std::optional<double> ip_weight;
};

/// All zeros of P_n, descending.
std::vector<double> find_all_zeros(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg);

/// As find_all_zeros, with per-node diagnostics (descending order).
std::vector<NodeRecord> find_all_zeros_detailed(const CoefficientFamily& fam, std::size_t n,
                                                const RootFindConfig& cfg);

/// A_n - p B_n = L U with L unit lower bidiagonal (subdiagonal l) and U upper
/// bidiagonal (diagonal r, superdiagonal t).
struct LUFactors {
    double shift = 0.0;
    std::vector<double> r;
    std::vector<double> t_re, t_im;
    std::vector<double> l_re, l_im;
};

LUFactors lu_factor_pencil(const CoefficientFamily& fam, std::size_t n, double p);

struct IpResult {
    double zero = 0.0;
    double weight = 0.0;  ///< NaN when M_1 is unavailable
    double bform = 0.0;   ///< u^H B u of the normalized eigenvector
    std::size_t iterations = 0;
    double shift = 0.0;   ///< shift actually used (after the distance guard)
};

/// Inverse power iteration on the pencil with shift p. `m1` defaults to the
/// family's M_1.
IpResult ip_refine(const CoefficientFamily& fam, std::size_t n, double p, const RootFindConfig& cfg,
                   std::optional<double> m1 = std::nullopt);

/// LRF to hybrid_switch_tol, then IP to tol. Nodes descending, with IP weights.
std::vector<NodeRecord> hybrid_find(const CoefficientFamily& fam, std::size_t n, const RootFindConfig& cfg);

/// d_2...d_n M_1 / (Y_n X_{n-1}) at a zero, with the products kept in scaled form.
double formula_weight(const CoefficientFamily& fam, const ScaledEval& at_zero, double m1);

}  // namespace r2quad
