#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "r2quad/chain_seq.hpp"

namespace r2quad {

/// Recurrence data c_k (k >= 1) and d_k (k >= 2) together with metadata and
/// optional reference hooks. Copies share one chain-parameter cache.
///
/// Note on indexing: `d(k)` returns d_k by its own subscript, so the first
/// value is d(2). The coefficient file stores pairs (c_k, d_{k+1}) per row.
class CoefficientFamily {
public:
    CoefficientFamily(std::string name, IndexedSequence c, IndexedSequence d,
                      std::optional<std::size_t> max_index = std::nullopt);

    double c(std::size_t k) const;
    double d(std::size_t k) const;

    const std::string& name() const noexcept { return name_; }

    /// Numeric parameters such as lambda/eta; empty for parameter-free families.
    const std::map<std::string, double>& params() const noexcept { return params_; }
    void set_param(const std::string& key, double value) { params_[key] = value; }

    /// Largest k for which c_k and d_{k+1} are available, if finite.
    std::optional<std::size_t> max_index() const noexcept { return max_index_; }

    /// Chain data up to index n+1. Computed once per family (shared across copies)
    /// and recomputed only when a larger n is requested.
    ChainParams chain_params(std::size_t n) const;

    /// Supplying M_1 directly lets finite-data families skip the infinite series.
    void set_m1(double m1);
    std::optional<double> m1_override() const noexcept { return m1_override_; }

    ChainConfig& chain_config() noexcept { return chain_cfg_; }
    const ChainConfig& chain_config() const noexcept { return chain_cfg_; }

    /// Real-line density of the orthogonality measure (w.r.t. dx), when known.
    std::function<double(double)> density;
    /// Unit-circle densities w.r.t. dtheta on (0, 2pi): the measure nu_0 of the
    /// (n+1)-point rule and the measure mu of the n-point rule.
    std::function<double(double)> nu_density;
    std::function<double(double)> mu_density;

private:
    struct Cache;

    std::string name_;
    IndexedSequence c_;
    IndexedSequence d_;
    std::optional<std::size_t> max_index_;
    std::map<std::string, double> params_;
    std::optional<double> m1_override_;
    ChainConfig chain_cfg_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace r2quad
