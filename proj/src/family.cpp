#include "r2quad/family.hpp"

#include <mutex>

#include "r2quad/errors.hpp"

namespace r2quad {

struct CoefficientFamily::Cache {
    std::mutex mutex;
    std::optional<ChainParams> params;
};

CoefficientFamily::CoefficientFamily(std::string name, IndexedSequence c, IndexedSequence d,
                                     std::optional<std::size_t> max_index)
    : name_(std::move(name)),
      c_(std::move(c)),
      d_(std::move(d)),
      max_index_(max_index),
      cache_(std::make_shared<Cache>()) {
    if (!c_ || !d_) throw InvalidParameter("family providers must be callable");
}

double CoefficientFamily::c(std::size_t k) const {
    if (k == 0) throw InvalidParameter("c_k is defined for k >= 1");
    if (max_index_ && k > *max_index_) throw IndexBeyondData(k);
    return c_(k);
}

double CoefficientFamily::d(std::size_t k) const {
    if (k < 2) throw InvalidParameter("d_k is defined for k >= 2");
    if (max_index_ && k > *max_index_ + 1) throw IndexBeyondData(k);
    return d_(k);
}

void CoefficientFamily::set_m1(double m1) {
    if (!(m1 > 0.0 && m1 <= 1.0)) throw InvalidParameter("M_1 must lie in (0,1]");
    m1_override_ = m1;
    std::lock_guard lock(cache_->mutex);
    cache_->params.reset();
}

ChainParams CoefficientFamily::chain_params(std::size_t n) const {
    std::lock_guard lock(cache_->mutex);
    if (cache_->params && cache_->params->n >= n) return *cache_->params;

    auto dk = [this](std::size_t k) { return d(k); };
    const std::size_t limit = max_index_ ? *max_index_ + 1 : std::numeric_limits<std::size_t>::max();
    ChainParams cp;
    if (m1_override_) {
        cp.n = n;
        std::vector<double> dv(n);
        for (std::size_t k = 2; k <= n + 1; ++k) dv[k - 2] = d(k);
        cp.ell = minimal_parameters(dv);
        cp.m1 = *m1_override_;
        cp.series_S = 1.0 / cp.m1;
        cp.series_converged = true;
        cp.maxp.assign(n + 1, 0.0);
        cp.maxp[0] = cp.m1;
        for (std::size_t k = 1; k <= n; ++k) cp.maxp[k] = dv[k - 1] / (1.0 - cp.maxp[k - 1]);
    } else {
        cp = compute_chain_params(dk, n, chain_cfg_, limit);
    }
    cache_->params = cp;
    return cp;
}

}  // namespace r2quad
