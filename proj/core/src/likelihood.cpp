#include "evidence/likelihood.hpp"

#include "evidence/csv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace evidence {

std::string_view to_string(CurveKind kind) noexcept {
    switch (kind) {
        case CurveKind::plain: return "plain";
        case CurveKind::relative: return "relative";
        case CurveKind::profile: return "profile";
        case CurveKind::integrated: return "integrated";
    }
    return "plain";
}

std::size_t LikelihoodCurve::argmax() const {
    if (value.empty()) throw std::domain_error("LikelihoodCurve::argmax: empty curve");
    // max_element returns the first maximum, i.e. the smallest psi.
    return static_cast<std::size_t>(
        std::max_element(value.begin(), value.end()) - value.begin());
}

LikelihoodCurve LikelihoodCurve::relative() const {
    LikelihoodCurve out = *this;
    const double top = value.at(argmax());
    if (top > 0.0) {
        for (auto& v : out.value) v /= top;
    }
    out.kind = CurveKind::relative;
    return out;
}

std::vector<double> default_abs_grid(const LocationNormalData& data, double spacing) {
    if (!(spacing > 0.0)) throw std::domain_error("default_abs_grid: spacing > 0");
    const double upper = std::abs(data.xbar()) + 6.0 * data.standard_error();
    const auto count = static_cast<std::size_t>(std::ceil(upper / spacing)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = spacing * static_cast<double>(i);
    return grid;
}

namespace {

double gauss_kernel(const LocationNormalData& data, double diff) {
    const double s = data.sigma0();
    return std::exp(-data.n() * diff * diff / (2.0 * s * s));
}

}  // namespace

double relative_likelihood_location(const LocationNormalData& data, double mu) {
    return gauss_kernel(data, data.xbar() - mu);
}

IntervalSet likelihood_region(const LocationNormalData& data, double r) {
    if (!(r >= 1.0)) throw std::domain_error("likelihood_region: r must be >= 1");
    IntervalSet out;
    const double half = data.standard_error() * std::sqrt(2.0 * std::log(r));
    if (half > 0.0) out.add(data.xbar() - half, data.xbar() + half);
    return out;
}

double profile_likelihood_abs(const LocationNormalData& data, double psi) {
    if (!(psi >= 0.0)) throw std::domain_error("profile_likelihood_abs: psi must be >= 0");
    return gauss_kernel(data, std::abs(data.xbar()) - psi);
}

double integrated_likelihood_abs(const LocationNormalData& data, double psi,
                                 double p_sign) {
    if (!(psi >= 0.0)) throw std::domain_error("integrated_likelihood_abs: psi must be >= 0");
    if (!(p_sign > 0.0 && p_sign < 1.0)) {
        throw std::domain_error("integrated_likelihood_abs: p_sign must lie in (0, 1)");
    }
    return p_sign * gauss_kernel(data, data.xbar() - psi) +
           (1.0 - p_sign) * gauss_kernel(data, data.xbar() + psi);
}

double abs_mean_density(double psi_true, int sgn, const LocationNormalData& data) {
    if (!(psi_true >= 0.0)) throw std::domain_error("abs_mean_density: psi must be >= 0");
    if (sgn != 1 && sgn != -1) throw std::domain_error("abs_mean_density: sgn must be +/-1");
    const double se = data.standard_error();
    const double t = std::abs(data.xbar());
    const double shift = sgn * psi_true;
    return (gauss_kernel(data, t - shift) + gauss_kernel(data, t + shift)) /
           (std::sqrt(2.0 * std::numbers::pi) * se);
}

LikelihoodCurve profile_curve(const LocationNormalData& data,
                              const std::vector<double>& grid) {
    LikelihoodCurve c;
    c.kind = CurveKind::profile;
    c.psi = grid;
    c.spacing = grid.size() > 1 ? grid[1] - grid[0] : 0.0;
    c.value.reserve(grid.size());
    for (double psi : grid) c.value.push_back(profile_likelihood_abs(data, psi));
    return c;
}

LikelihoodCurve integrated_curve(const LocationNormalData& data, double p_sign,
                                 const std::vector<double>& grid) {
    LikelihoodCurve c;
    c.kind = CurveKind::integrated;
    c.psi = grid;
    c.spacing = grid.size() > 1 ? grid[1] - grid[0] : 0.0;
    c.value.reserve(grid.size());
    for (double psi : grid) c.value.push_back(integrated_likelihood_abs(data, psi, p_sign));
    return c;
}

ScaleNormalData::ScaleNormalData(int n, double sx2, int k) : n_(n), sx2_(sx2), k_(k) {
    if (n < 1) throw std::domain_error("ScaleNormalData: n must be >= 1");
    if (k < 0) throw std::domain_error("ScaleNormalData: k must be >= 0");
    if (!(sx2 >= 0.0) || !std::isfinite(sx2)) {
        throw std::domain_error("ScaleNormalData: sx2 must be finite and >= 0");
    }
}

ScaleNormalMles scale_normal_mles(const ScaleNormalData& data) {
    return {data.sx2() / data.n(), data.sx2() / (data.n() + data.k()), 0.0};
}

void write_curves_csv(std::ostream& os, const std::vector<LikelihoodCurve>& curves) {
    CsvWriter csv(os, {"psi", "value", "kind"});
    for (const auto& c : curves) {
        for (std::size_t i = 0; i < c.psi.size(); ++i) {
            csv.row(c.psi[i], c.value[i], to_string(c.kind));
        }
    }
}

}  // namespace evidence
