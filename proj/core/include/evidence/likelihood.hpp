#pragma once

#include "evidence/freq_evidence.hpp"
#include "evidence/interval_set.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace evidence {

/// Royall's benchmarks: relative likelihood >= 1/8 is "very strong", >= 1/32
/// "quite strong" support. Exposed as r in the region {L_rel >= 1/r}.
inline constexpr double kRoyallVeryStrong = 8.0;
inline constexpr double kRoyallQuiteStrong = 32.0;

enum class CurveKind { plain, relative, profile, integrated };

std::string_view to_string(CurveKind kind) noexcept;

/// A likelihood-type curve sampled on an evenly spaced psi grid.
struct LikelihoodCurve {
    std::vector<double> psi;
    std::vector<double> value;
    CurveKind kind = CurveKind::plain;
    double spacing = 0.0;

    /// Index of the maximum; ties go to the smallest psi.
    std::size_t argmax() const;
    double argmax_psi() const { return psi.at(argmax()); }
    /// Same curve divided by its maximum, kind = relative.
    LikelihoodCurve relative() const;
};

/// Default psi grid for psi = |mu|: [0, |xbar| + 6 sigma0/sqrt(n)] at `spacing`.
std::vector<double> default_abs_grid(const LocationNormalData& data,
                                     double spacing = 0.01);

/// exp(-n (xbar - mu)^2 / (2 sigma0^2)).
double relative_likelihood_location(const LocationNormalData& data, double mu);

/// {mu : relative likelihood >= 1/r}; requires r >= 1.
IntervalSet likelihood_region(const LocationNormalData& data, double r);

/// Profile likelihood of psi = |mu|: exp(-n (|xbar| - psi)^2 / (2 sigma0^2)).
double profile_likelihood_abs(const LocationNormalData& data, double psi);

/// Integrated likelihood of psi = |mu| with P(sign = +1 | psi) = p_sign.
double integrated_likelihood_abs(const LocationNormalData& data, double psi,
                                 double p_sign);

/// Sampling density of |xbar| at the observed data.xbar() when |mu| = psi_true
/// and sign(mu) = sgn. The two folded terms make it symmetric in sgn.
double abs_mean_density(double psi_true, int sgn, const LocationNormalData& data);

LikelihoodCurve profile_curve(const LocationNormalData& data,
                              const std::vector<double>& grid);
LikelihoodCurve integrated_curve(const LocationNormalData& data, double p_sign,
                                 const std::vector<double>& grid);

/// Scale-normal sample N(0, sigma^2): n observations with sx2 = sum x_i^2,
/// and k future values to predict.
class ScaleNormalData {
public:
    ScaleNormalData(int n, double sx2, int k);
    int n() const noexcept { return n_; }
    double sx2() const noexcept { return sx2_; }
    int k() const noexcept { return k_; }

private:
    int n_;
    double sx2_;
    int k_;
};

struct ScaleNormalMles {
    double mle;           // sx2 / n
    double profile_mle;   // sx2 / (n + k), after profiling out the future values
    double predictive_y;  // profile MLE of each future value
};

ScaleNormalMles scale_normal_mles(const ScaleNormalData& data);

/// CSV with header "psi,value,kind", one row per grid point.
void write_curves_csv(std::ostream& os, const std::vector<LikelihoodCurve>& curves);

}  // namespace evidence
