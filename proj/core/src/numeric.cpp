#include "evidence/numeric.hpp"
#include "evidence/monte_carlo.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace evidence {

namespace {

void require_finite(double z, const char* what) {
    if (!std::isfinite(z)) {
        throw std::domain_error(std::string(what) + ": non-finite argument");
    }
}

}  // namespace

NormalParams::NormalParams(double mean, double sd) : mean_(mean), sd_(sd) {
    if (!std::isfinite(mean) || !std::isfinite(sd) || !(sd > 0.0)) {
        throw std::domain_error("NormalParams: need finite mean and sd > 0");
    }
}

std::string_view rng_name() noexcept {
    return "std::mt19937_64+std::normal_distribution (libstdc++)";
}

Rng make_rng(RngSeed seed, std::uint64_t stream, std::uint64_t block) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed.value & 0xffffffffu),
        static_cast<std::uint32_t>(seed.value >> 32),
        static_cast<std::uint32_t>(stream & 0xffffffffu),
        static_cast<std::uint32_t>(stream >> 32),
        static_cast<std::uint32_t>(block & 0xffffffffu),
        static_cast<std::uint32_t>(block >> 32),
    };
    return Rng(seq);
}

double normal_pdf(double z) {
    require_finite(z, "normal_pdf");
    return std::exp(-0.5 * z * z) * std::numbers::inv_sqrtpi / std::numbers::sqrt2;
}

double normal_cdf(double z) {
    require_finite(z, "normal_cdf");
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double normal_sf(double z) {
    require_finite(z, "normal_sf");
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("normal_quantile: p must lie in (0, 1)");
    }
    double x = -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
    // One Newton step on whichever tail is better conditioned.
    const double density = std::exp(-0.5 * x * x) * std::numbers::inv_sqrtpi /
                           std::numbers::sqrt2;
    if (density > 0.0) {
        const double err = x < 0.0 ? normal_cdf(x) - p : (1.0 - p) - normal_sf(x);
        x -= err / density;
    }
    return x;
}

double normal_interval_mass(double lo, double hi, const NormalParams& params) {
    if (std::isnan(lo) || std::isnan(hi)) {
        throw std::domain_error("normal_interval_mass: NaN bound");
    }
    if (!(hi > lo)) {
        return 0.0;
    }
    const double a = (lo - params.mean()) / params.sd();
    const double b = (hi - params.mean()) / params.sd();
    const auto cdf = [](double z) {
        if (z == std::numeric_limits<double>::infinity()) return 1.0;
        if (z == -std::numeric_limits<double>::infinity()) return 0.0;
        return normal_cdf(z);
    };
    const auto sf = [](double z) {
        if (z == std::numeric_limits<double>::infinity()) return 0.0;
        if (z == -std::numeric_limits<double>::infinity()) return 1.0;
        return normal_sf(z);
    };
    if (a >= 0.0) {
        return sf(a) - sf(b);
    }
    if (b <= 0.0) {
        return cdf(b) - cdf(a);
    }
    return 1.0 - cdf(a) - sf(b);
}

std::vector<double> sample_normal(const NormalParams& params, std::size_t count,
                                  RngSeed seed) {
    if (count < 1) {
        throw std::domain_error("sample_normal: count must be >= 1");
    }
    Rng rng = make_rng(seed, 0, 0);
    std::normal_distribution<double> dist(params.mean(), params.sd());
    std::vector<double> out(count);
    for (auto& v : out) {
        v = dist(rng);
    }
    return out;
}

McProbability make_proportion(std::uint64_t hits, std::uint64_t reps) {
    if (reps == 0) return {};
    const double p = static_cast<double>(hits) / static_cast<double>(reps);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(reps)), reps};
}

McMean make_mean(const std::vector<double>& values) {
    if (values.empty()) return {};
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double se = values.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    return {mean, se, values.size()};
}

double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, std::size_t intervals) {
    if (intervals < 2) intervals = 2;
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / static_cast<double>(intervals);
    double sum = f(a) + f(b);
    for (std::size_t i = 1; i < intervals; ++i) {
        const double x = a + h * static_cast<double>(i);
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(x);
    }
    return sum * h / 3.0;
}

}  // namespace evidence
