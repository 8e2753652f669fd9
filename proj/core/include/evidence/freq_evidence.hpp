#pragma once

#include "evidence/interval_set.hpp"
#include "evidence/monte_carlo.hpp"
#include "evidence/numeric.hpp"

namespace evidence {

/// Summary of an iid N(mu, sigma0^2) sample with known sigma0.
class LocationNormalData {
public:
    LocationNormalData(int n, double xbar, double sigma0);

    int n() const noexcept { return n_; }
    double xbar() const noexcept { return xbar_; }
    double sigma0() const noexcept { return sigma0_; }
    /// sigma0 / sqrt(n), the sd of the sample mean.
    double standard_error() const noexcept;

    LocationNormalData with_xbar(double xbar) const { return {n_, xbar, sigma0_}; }

private:
    int n_;
    double xbar_;
    double sigma0_;
};

/// sqrt(n) |xbar - mu0| / sigma0.
double z_statistic(const LocationNormalData& data, double mu0);

/// Two-sided p-value 2(1 - Phi(z)) for H0: mu = mu0.
double pvalue_location_normal(const LocationNormalData& data, double mu0);

/// {mu0 : p-value > alpha} = xbar -/+ z_{1-alpha/2} sigma0/sqrt(n).
IntervalSet confidence_interval(const LocationNormalData& data, double alpha);

/// Monte Carlo rejection rate of the "look, then add n2 more and look again"
/// procedure under H0. Rejection at a look means p-value <= alpha; the second
/// look uses the pooled mean of all n1 + n2 values.
McProbability two_stage_rejection_prob(double alpha, int n1, int n2,
                                       std::uint64_t reps, RngSeed seed,
                                       unsigned workers = 1);

}  // namespace evidence
