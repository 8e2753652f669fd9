#include "evidence/e_process.hpp"

#include <cmath>
#include <limits>

namespace evidence {

EValue e_value_power(double pvalue, double a) {
    if (!(a > 0.0 && a < 1.0)) {
        throw std::domain_error("e_value_power: a must lie in (0, 1)");
    }
    if (!(pvalue >= 0.0 && pvalue <= 1.0)) {
        throw std::domain_error("e_value_power: p-value must lie in [0, 1]");
    }
    if (pvalue == 0.0) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    return {a * std::pow(pvalue, a - 1.0), false};
}

EProcessState::EProcessState(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("EProcessState: alpha must lie in (0, 1)");
    }
}

EProcessState update(const EProcessState& state, double e_value) {
    if (state.stopped()) {
        throw StateError("EProcessState: update after stopping");
    }
    if (!(e_value >= 0.0)) {
        throw std::domain_error("EProcessState: e-value must be >= 0");
    }
    EProcessState next = state;
    next.product_ *= e_value;
    ++next.steps_;
    if (next.product_ >= next.threshold()) next.stopped_at_ = next.steps_;
    return next;
}

namespace {

struct SequentialAcc {
    std::uint64_t rejections = 0;
    std::uint64_t reps = 0;
    double stopped_sum = 0.0;
    double stopped_sq = 0.0;
    std::vector<double> step_sum;
    std::vector<double> step_sq;

    SequentialAcc& operator+=(const SequentialAcc& o) {
        rejections += o.rejections;
        reps += o.reps;
        stopped_sum += o.stopped_sum;
        stopped_sq += o.stopped_sq;
        if (step_sum.size() < o.step_sum.size()) {
            step_sum.resize(o.step_sum.size(), 0.0);
            step_sq.resize(o.step_sq.size(), 0.0);
        }
        for (std::size_t k = 0; k < o.step_sum.size(); ++k) {
            step_sum[k] += o.step_sum[k];
            step_sq[k] += o.step_sq[k];
        }
        return *this;
    }
};

McMean finish_mean(double sum, double sq, std::uint64_t n) {
    if (n == 0) return {};
    const double dn = static_cast<double>(n);
    const double mean = sum / dn;
    const double var = n > 1 ? std::max(0.0, (sq - dn * mean * mean) / (dn - 1.0)) : 0.0;
    return {mean, std::sqrt(var / dn), n};
}

}  // namespace

SequentialResult simulate_sequential(const SequentialConfig& cfg) {
    if (cfg.max_steps < 1) throw std::domain_error("simulate_sequential: max_steps >= 1");
    if (cfg.reps < 1) throw std::domain_error("simulate_sequential: reps >= 1");
    if (!(cfg.sigma0 > 0.0)) throw std::domain_error("simulate_sequential: sigma0 > 0");
    // Validate alpha and a up front.
    (void)EProcessState(cfg.alpha);
    (void)e_value_power(1.0, cfg.a);

    const int tracked = std::max(0, cfg.tracked_steps);
    const int horizon = std::max(cfg.max_steps, tracked);
    const double threshold = 1.0 / cfg.alpha;

    auto body = [&](Rng& rng, std::uint64_t count) {
        std::normal_distribution<double> noise(0.0, 1.0);
        SequentialAcc acc;
        acc.step_sum.assign(tracked, 0.0);
        acc.step_sq.assign(tracked, 0.0);
        for (std::uint64_t r = 0; r < count; ++r) {
            double product = 1.0;
            double stopped_value = 0.0;
            bool stopped = false;
            // Every path draws the full horizon, so the stream layout does not
            // depend on where paths stop or on tracked_steps.
            for (int step = 1; step <= horizon; ++step) {
                // x ~ N(mu0, sigma0^2); the standardized deviation is all that matters.
                const double z = std::abs(noise(rng));
                const double p = std::min(1.0, 2.0 * normal_sf(z));
                product *= e_value_power(p, cfg.a).value;
                if (step <= tracked) {
                    acc.step_sum[step - 1] += product;
                    acc.step_sq[step - 1] += product * product;
                }
                if (!stopped && step <= cfg.max_steps) {
                    if (product >= threshold) {
                        stopped = true;
                        stopped_value = product;
                        ++acc.rejections;
                    } else if (step == cfg.max_steps) {
                        stopped_value = product;
                    }
                }
            }
            acc.stopped_sum += stopped_value;
            acc.stopped_sq += stopped_value * stopped_value;
            ++acc.reps;
        }
        return acc;
    };

    const SequentialAcc total =
        run_blocks<SequentialAcc>(cfg.seed, 0xe9e9, cfg.reps, cfg.workers, body);

    SequentialResult out;
    out.rejection_rate = make_proportion(total.rejections, total.reps);
    out.stopped_mean = finish_mean(total.stopped_sum, total.stopped_sq, total.reps);
    for (int k = 0; k < tracked; ++k) {
        out.product_means.push_back(
            finish_mean(total.step_sum[k], total.step_sq[k], total.reps));
    }
    return out;
}

McProbability simulate_sequential_type1(double alpha, double a, double mu0,
                                        double sigma0, int max_steps,
                                        std::uint64_t reps, RngSeed seed,
                                        unsigned workers) {
    SequentialConfig cfg;
    cfg.alpha = alpha;
    cfg.a = a;
    cfg.mu0 = mu0;
    cfg.sigma0 = sigma0;
    cfg.max_steps = max_steps;
    cfg.reps = reps;
    cfg.seed = seed;
    cfg.workers = workers;
    cfg.tracked_steps = 0;
    return simulate_sequential(cfg).rejection_rate;
}

}  // namespace evidence
