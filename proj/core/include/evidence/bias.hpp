#pragma once

#include "evidence/monte_carlo.hpp"
#include "evidence/relative_belief.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace evidence {

/// Monte Carlo settings shared by the bias estimators.
struct BiasSettings {
    Target target = Target::abs_value;
    /// Cell-0 center for the identity target (normally the hypothesized mu0).
    double origin = 0.0;
    std::uint64_t reps = 10000;
    RngSeed seed{};
    unsigned workers = 1;
    /// Upper bound on the number of alternative values tried in a supremum.
    std::size_t max_candidates = 401;
    /// Alternatives are drawn from the prior mean +/- this many prior sds.
    double support_sds = 5.0;
};

/// Prior probability of not getting evidence in favor of psi0 when it is true:
/// M(RB(psi0 | X) <= 1 | psi0). Data are simulated from the conditional prior
/// given psi0 (for |mu|, sign + with probability pi(psi0)/(pi(psi0)+pi(-psi0))).
McProbability bias_against_H(const BayesInferenceBase& base, double psi0,
                             const BiasSettings& settings);

struct InFavorResult {
    McProbability estimate;
    std::optional<double> sup_attained_at;
    double candidate_spacing = 0.0;
    std::size_t candidate_count = 0;
    /// No alternative lies at distance >= delta_sep inside the prior support.
    bool candidates_empty = false;
};

/// sup over |psi' - psi0| >= delta_sep of M(RB(psi0 | X) >= 1 | psi'), with the
/// supremum taken over a finite candidate grid.
InFavorResult bias_in_favor_H(const BayesInferenceBase& base, double psi0,
                              double delta_sep, const BiasSettings& settings);

struct BiasReport {
    McProbability bias_against;
    McProbability bias_in_favor;
    double psi0 = 0.0;
    double delta = 0.0;
    double delta_sep = 0.0;
    std::uint64_t reps = 0;
    RngSeed seed{};
    std::optional<double> sup_attained_at;
    double candidate_spacing = 0.0;
    std::size_t candidate_count = 0;
    bool candidates_empty = false;
    Target target = Target::abs_value;
    std::string rng;
};

BiasReport bias_report(const BayesInferenceBase& base, double psi0, double delta_sep,
                       const BiasSettings& settings);

struct BiasE {
    /// Prior average of bias_against_H.
    McMean bias_against_E;
    /// Prior-predictive probability that the true psi lies in Pl(X), counted
    /// separately from the plausible region of a freshly built grid.
    McMean plausible_coverage;
    /// Prior average of the bias-in-favor supremum (psi not in Im(X)).
    McMean bias_in_favor_E;
    std::uint64_t outer_reps = 0;
    std::uint64_t inner_reps = 0;
};

/// Biases for estimation: the H-biases averaged over psi drawn from the prior.
/// settings.reps is ignored; outer and inner counts are explicit.
BiasE bias_E(const BayesInferenceBase& base, double delta_sep, std::uint64_t outer_reps,
             std::uint64_t inner_reps, const BiasSettings& settings);

struct LindleyRow {
    double tau0;
    double rb;
    double strength;
    double pvalue;
};

/// For each prior sd tau0, the cell RB and strength of H0: mu = mu0 under the
/// prior N(mu0, tau0^2), next to the prior-free p-value.
std::vector<LindleyRow> lindley_sweep(const LocationNormalData& data, double mu0,
                                      const std::vector<double>& tau0_list, double delta);

/// CSV "tau0,rb,strength,pvalue".
void write_lindley_csv(std::ostream& os, const std::vector<LindleyRow>& rows);

}  // namespace evidence
