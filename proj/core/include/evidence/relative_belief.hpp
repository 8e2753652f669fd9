#pragma once

#include "evidence/freq_evidence.hpp"
#include "evidence/interval_set.hpp"
#include "evidence/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace evidence {

/// Location-normal model with a N(mu0, tau0^2) prior on mu and the difference
/// that matters `delta`. Without data the posterior equals the prior.
class BayesInferenceBase {
public:
    BayesInferenceBase(LocationNormalData data, NormalParams prior, double delta);

    static BayesInferenceBase prior_only(NormalParams prior, double delta);

    const std::optional<LocationNormalData>& data() const noexcept { return data_; }
    const NormalParams& prior() const noexcept { return prior_; }
    double delta() const noexcept { return delta_; }

    /// The observed data; throws std::domain_error for a prior-only base.
    const LocationNormalData& require_data() const;

    BayesInferenceBase with_xbar(double xbar) const;
    BayesInferenceBase with_prior(NormalParams prior) const;
    BayesInferenceBase with_n(int n) const;

private:
    BayesInferenceBase(std::optional<LocationNormalData> data, NormalParams prior,
                       double delta);

    std::optional<LocationNormalData> data_;
    NormalParams prior_;
    double delta_;
};

/// Conjugate posterior of mu.
NormalParams posterior_params(const BayesInferenceBase& base);

/// Parameter of interest: psi = |mu| or psi = mu.
enum class Target { abs_value, identity };

std::string to_string(Target t);

/// Cell i covers [origin + (i - 1/2) delta, origin + (i + 1/2) delta); for
/// |mu| the origin is 0 and cell 0 is truncated to [0, delta/2).
struct CellLayout {
    Target target = Target::abs_value;
    double origin = 0.0;
    double delta = 0.01;

    /// Index of the cell containing psi (a boundary belongs to the right cell).
    std::int64_t index_of(double psi) const;
    Interval bounds(std::int64_t index) const;
    double center(std::int64_t index) const;
};

/// Prior or posterior mass of one cell: a normal interval mass for the
/// identity target, the folded-normal mass of the cell for |mu|.
double cell_mass(Target target, const Interval& cell, const NormalParams& law);

/// Cells carrying prior mass below this are left without a relative belief ratio.
inline constexpr double kMinPriorMass = 1e-300;

struct EvidenceCell {
    double lo = 0.0;
    double hi = 0.0;
    double center = 0.0;
    double prior_mass = 0.0;
    double posterior_mass = 0.0;
    /// posterior_mass / prior_mass, NaN when prior_mass < kMinPriorMass.
    double rb = 0.0;

    bool has_rb() const noexcept;
};

struct GridOptions {
    Target target = Target::abs_value;
    /// Center of cell 0; ignored (fixed at 0) for the |mu| target.
    double origin = 0.0;
    /// The grid covers all but this much prior and posterior mass.
    double tail_mass = 1e-12;
};

class EvidenceGrid {
public:
    EvidenceGrid(CellLayout layout, std::int64_t first_index, std::vector<EvidenceCell> cells);

    const std::vector<EvidenceCell>& cells() const noexcept { return cells_; }
    const CellLayout& layout() const noexcept { return layout_; }
    std::size_t size() const noexcept { return cells_.size(); }
    const EvidenceCell& operator[](std::size_t i) const { return cells_[i]; }

    /// Position in cells() of the cell containing psi, if it is on the grid.
    std::optional<std::size_t> find(double psi) const;

    double total_prior_mass() const noexcept;
    double total_posterior_mass() const noexcept;

private:
    CellLayout layout_;
    std::int64_t first_index_;
    std::vector<EvidenceCell> cells_;
};

EvidenceGrid build_grid(const BayesInferenceBase& base, const GridOptions& options = {});

/// Relative belief ratio of one cell as a function of the observed mean.
/// The prior mass is computed once; rb(xbar) only needs the posterior.
class CellEvaluator {
public:
    CellEvaluator(const BayesInferenceBase& base, const CellLayout& layout, double psi);

    const Interval& cell() const noexcept { return cell_; }
    double prior_mass() const noexcept { return prior_mass_; }
    double posterior_mass(double xbar) const;
    double rb(double xbar) const;

private:
    Target target_;
    Interval cell_;
    double prior_mass_;
    double prior_mean_;
    double prior_precision_;
    double data_precision_;
    double posterior_sd_;
};

enum class JeffreysBand { barely_worth_mentioning, substantial, strong, very_strong, decisive };
enum class EvidenceDirection { in_favor, against, neutral };

struct JeffreysLabel {
    JeffreysBand band = JeffreysBand::barely_worth_mentioning;
    EvidenceDirection direction = EvidenceDirection::neutral;
    friend bool operator==(const JeffreysLabel&, const JeffreysLabel&) = default;
};

/// Jeffreys' scale: (1, 10^1/2], (10^1/2, 10], (10, 10^3/2], (10^3/2, 100],
/// (100, inf). bf < 1 uses the band of 1/bf with direction `against`.
JeffreysLabel jeffreys_label(double bf);
std::string to_string(JeffreysLabel label);
std::string to_string(JeffreysBand band);

struct EvidenceReport {
    double psi0 = 0.0;
    double estimate = 0.0;
    IntervalSet plausible;
    double plausible_content = 0.0;
    double rb_at_hypothesis = 0.0;
    double strength = 0.0;
    /// Present only when the gamma-credible region lies inside `plausible`.
    std::optional<IntervalSet> credible;
    bool credible_contained = true;
    IntervalSet credible_candidate;
    double gamma = 0.0;
    double bf_at_hypothesis = 0.0;
    JeffreysLabel jeffreys_label;
};

/// Estimate, plausible region and content, RB and strength at psi0, the
/// relative belief gamma-credible region and the cell Bayes factor at psi0.
EvidenceReport evidence_report(const EvidenceGrid& grid, double psi0, double gamma);

/// RB of the cell containing psi0; throws std::domain_error off the grid.
double rb_at(const EvidenceGrid& grid, double psi0);
/// Posterior mass of cells whose RB does not exceed rb_at(grid, psi0).
double strength_at(const EvidenceGrid& grid, double psi0);

/// Cells with rb > 1, merged into intervals.
IntervalSet plausible_region(const EvidenceGrid& grid);
/// Cells with rb < 1, merged into intervals.
IntervalSet implausible_region(const EvidenceGrid& grid);

/// Posterior odds over prior odds. posterior_mass == 1 gives +inf.
double bayes_factor(double prior_mass, double posterior_mass);
double relative_belief_ratio(double prior_mass, double posterior_mass);

struct BayesFactorStep {
    double epsilon;
    double bf;
};

struct BayesFactorLimit {
    std::vector<BayesFactorStep> sequence;
    /// Linear extrapolation to epsilon = 0 from the two smallest epsilons.
    double limit = 0.0;
    /// Posterior density over prior density of psi at psi0.
    double density_ratio = 0.0;
};

/// Bayes factors of the neighborhoods [psi0 - eps, psi0 + eps) for shrinking eps.
BayesFactorLimit bayes_factor_limit(const BayesInferenceBase& base, Target target,
                                    double psi0, const std::vector<double>& epsilons);

/// Marginal density of psi at psi0 under `law` (folded for |mu|).
double psi_density(Target target, double psi, const NormalParams& law);

struct UrnEvidence {
    double rb;
    double posterior;
};

/// Uniform draw from N items, observed to lie in a set of n containing the
/// single target item.
UrnEvidence urn_evidence(std::int64_t big_n, std::int64_t small_n);

/// Posterior mass where the posterior density does not exceed its value at mu0.
double pereira_stern_ev(const BayesInferenceBase& base, double mu0);

/// CSV "psi_mid,prior_mass,posterior_mass,rb"; rb is empty for excluded cells.
void write_grid_csv(std::ostream& os, const EvidenceGrid& grid);

}  // namespace evidence
