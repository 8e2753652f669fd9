#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

namespace evidence {

/// Mean and standard deviation of a normal law. Used both for the sampling
/// model (mu, sigma0) and for priors/posteriors (mu0, tau0).
class NormalParams {
public:
    NormalParams(double mean, double sd);

    double mean() const noexcept { return mean_; }
    double sd() const noexcept { return sd_; }
    double variance() const noexcept { return sd_ * sd_; }

    friend bool operator==(const NormalParams&, const NormalParams&) = default;

private:
    double mean_;
    double sd_;
};

struct RngSeed {
    std::uint64_t value = 0;
    friend bool operator==(const RngSeed&, const RngSeed&) = default;
};

/// Generator used by every Monte Carlo routine in the library.
using Rng = std::mt19937_64;

/// Human-readable name of the generator, recorded in reports.
std::string_view rng_name() noexcept;

/// Generator for block `block` of stream `stream` under `seed`.
/// Seeded through std::seed_seq{seed.lo, seed.hi, stream, block}.
Rng make_rng(RngSeed seed, std::uint64_t stream, std::uint64_t block);

// Standard normal functions. All throw std::domain_error on non-finite input.
double normal_pdf(double z);
double normal_cdf(double z);
/// Upper tail 1 - Phi(z), accurate where 1 - normal_cdf(z) would cancel.
double normal_sf(double z);
/// Inverse of normal_cdf on (0, 1).
double normal_quantile(double p);

/// P(lo <= X < hi) for X ~ params, computed on the tail side that avoids
/// cancellation. Infinite bounds are allowed.
double normal_interval_mass(double lo, double hi, const NormalParams& params);

std::vector<double> sample_normal(const NormalParams& params, std::size_t count,
                                  RngSeed seed);

/// Composite Simpson rule with `intervals` (rounded up to even) panels.
double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, std::size_t intervals);

}  // namespace evidence
