#include "evidence/freq_evidence.hpp"

#include <cmath>
#include <stdexcept>

namespace evidence {

LocationNormalData::LocationNormalData(int n, double xbar, double sigma0)
    : n_(n), xbar_(xbar), sigma0_(sigma0) {
    if (n < 1) throw std::domain_error("LocationNormalData: n must be >= 1");
    if (!std::isfinite(xbar)) throw std::domain_error("LocationNormalData: xbar not finite");
    if (!std::isfinite(sigma0) || !(sigma0 > 0.0)) {
        throw std::domain_error("LocationNormalData: sigma0 must be > 0");
    }
}

double LocationNormalData::standard_error() const noexcept {
    return sigma0_ / std::sqrt(static_cast<double>(n_));
}

double z_statistic(const LocationNormalData& data, double mu0) {
    return std::abs(data.xbar() - mu0) / data.standard_error();
}

double pvalue_location_normal(const LocationNormalData& data, double mu0) {
    if (!std::isfinite(mu0)) throw std::domain_error("pvalue: mu0 not finite");
    return std::min(1.0, 2.0 * normal_sf(z_statistic(data, mu0)));
}

IntervalSet confidence_interval(const LocationNormalData& data, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("confidence_interval: alpha must lie in (0, 1)");
    }
    const double half = normal_quantile(1.0 - alpha / 2.0) * data.standard_error();
    IntervalSet out;
    if (half > 0.0) out.add(data.xbar() - half, data.xbar() + half);
    return out;
}

McProbability two_stage_rejection_prob(double alpha, int n1, int n2,
                                       std::uint64_t reps, RngSeed seed,
                                       unsigned workers) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("two_stage_rejection_prob: alpha must lie in (0, 1)");
    }
    if (n1 < 1 || n2 < 0) {
        throw std::domain_error("two_stage_rejection_prob: need n1 >= 1, n2 >= 0");
    }
    if (reps < 1) throw std::domain_error("two_stage_rejection_prob: reps must be >= 1");

    // H0: mu = 0, sigma0 = 1. Stage means are drawn from their exact laws.
    const double sd1 = 1.0 / std::sqrt(static_cast<double>(n1));
    const double sd2 = n2 > 0 ? 1.0 / std::sqrt(static_cast<double>(n2)) : 0.0;
    const double total = static_cast<double>(n1 + n2);

    auto body = [&](Rng& rng, std::uint64_t count) {
        std::normal_distribution<double> z(0.0, 1.0);
        HitCount acc;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double m1 = sd1 * z(rng);
            bool reject = 2.0 * normal_sf(std::abs(m1) / sd1) <= alpha;
            if (!reject && n2 > 0) {
                const double m2 = sd2 * z(rng);
                const double pooled = (n1 * m1 + n2 * m2) / total;
                reject = 2.0 * normal_sf(std::abs(pooled) * std::sqrt(total)) <= alpha;
            }
            acc.hits += reject ? 1 : 0;
            ++acc.reps;
        }
        return acc;
    };
    const HitCount hits = run_blocks<HitCount>(seed, 0x7457, reps, workers, body);
    return make_proportion(hits.hits, hits.reps);
}

}  // namespace evidence
