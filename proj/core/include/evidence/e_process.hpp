#pragma once

#include "evidence/monte_carlo.hpp"
#include "evidence/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace evidence {

/// Thrown when an operation is applied to a state that no longer accepts it.
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// e-value together with a flag for the p = 0 divergence.
struct EValue {
    double value = 0.0;
    bool diverged = false;
};

/// a * p^(a - 1), an e-variable for any a in (0, 1) when p is uniform.
/// p = 0 yields {+inf, diverged = true}.
EValue e_value_power(double pvalue, double a);

/// Running product of e-values with a 1/alpha stopping rule.
/// Values are immutable; update() returns the next state.
class EProcessState {
public:
    explicit EProcessState(double alpha);

    double running_product() const noexcept { return product_; }
    int step_count() const noexcept { return steps_; }
    double alpha() const noexcept { return alpha_; }
    double threshold() const noexcept { return 1.0 / alpha_; }
    std::optional<int> stopped_at() const noexcept { return stopped_at_; }
    bool stopped() const noexcept { return stopped_at_.has_value(); }

    friend EProcessState update(const EProcessState& state, double e_value);

private:
    double product_ = 1.0;
    int steps_ = 0;
    double alpha_;
    std::optional<int> stopped_at_;
};

/// Multiplies in one e-value; sets stopped_at on the first product >= 1/alpha.
/// Throws StateError once stopped, std::domain_error for e_value < 0.
EProcessState update(const EProcessState& state, double e_value);

struct SequentialConfig {
    double alpha = 0.05;
    double a = 0.5;
    double mu0 = 0.0;
    double sigma0 = 1.0;
    int max_steps = 1000;
    std::uint64_t reps = 100000;
    RngSeed seed{};
    unsigned workers = 1;
    /// Steps for which the unstopped running product mean is tracked.
    int tracked_steps = 20;
};

struct SequentialResult {
    /// Fraction of H0 paths whose product reached 1/alpha within max_steps.
    McProbability rejection_rate;
    /// Mean of the product stopped at min(S_alpha, max_steps).
    McMean stopped_mean;
    /// Mean of the unstopped product after step k+1, k < tracked_steps.
    std::vector<McMean> product_means;
};

/// Simulates H0-true data one observation per step; each step's e-value is
/// e_value_power of that observation's own two-sided p-value.
SequentialResult simulate_sequential(const SequentialConfig& config);

/// Rejection-rate part of simulate_sequential.
McProbability simulate_sequential_type1(double alpha, double a, double mu0,
                                        double sigma0, int max_steps,
                                        std::uint64_t reps, RngSeed seed,
                                        unsigned workers = 1);

}  // namespace evidence
