#include "evidence/relative_belief.hpp"

#include "evidence/csv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace evidence {

// ---------------------------------------------------------------------------
// Inference base and posterior

BayesInferenceBase::BayesInferenceBase(std::optional<LocationNormalData> data,
                                       NormalParams prior, double delta)
    : data_(std::move(data)), prior_(prior), delta_(delta) {
    if (!std::isfinite(delta) || !(delta > 0.0)) {
        throw std::domain_error("BayesInferenceBase: delta must be > 0");
    }
    if (!(delta < prior.sd())) {
        throw std::domain_error("BayesInferenceBase: delta must be smaller than the prior sd");
    }
}

BayesInferenceBase::BayesInferenceBase(LocationNormalData data, NormalParams prior,
                                       double delta)
    : BayesInferenceBase(std::optional<LocationNormalData>(data), prior, delta) {}

BayesInferenceBase BayesInferenceBase::prior_only(NormalParams prior, double delta) {
    return BayesInferenceBase(std::optional<LocationNormalData>{}, prior, delta);
}

const LocationNormalData& BayesInferenceBase::require_data() const {
    if (!data_) throw std::domain_error("BayesInferenceBase: operation needs observed data");
    return *data_;
}

BayesInferenceBase BayesInferenceBase::with_xbar(double xbar) const {
    return BayesInferenceBase(require_data().with_xbar(xbar), prior_, delta_);
}

BayesInferenceBase BayesInferenceBase::with_prior(NormalParams prior) const {
    return BayesInferenceBase(data_, prior, delta_);
}

BayesInferenceBase BayesInferenceBase::with_n(int n) const {
    const auto& d = require_data();
    return BayesInferenceBase(LocationNormalData(n, d.xbar(), d.sigma0()), prior_, delta_);
}

namespace {

struct Precisions {
    double prior;
    double data;
};

Precisions precisions(const BayesInferenceBase& base) {
    const double prior = 1.0 / base.prior().variance();
    if (!base.data()) return {prior, 0.0};
    const auto& d = *base.data();
    return {prior, d.n() / (d.sigma0() * d.sigma0())};
}

NormalParams combine(const Precisions& p, double prior_mean, double xbar) {
    const double total = p.data + p.prior;
    return NormalParams((p.data * xbar + p.prior * prior_mean) / total,
                        std::sqrt(1.0 / total));
}

}  // namespace

NormalParams posterior_params(const BayesInferenceBase& base) {
    if (!base.data()) return base.prior();
    return combine(precisions(base), base.prior().mean(), base.data()->xbar());
}

std::string to_string(Target t) {
    return t == Target::abs_value ? "abs_value" : "identity";
}

// ---------------------------------------------------------------------------
// Cells

std::int64_t CellLayout::index_of(double psi) const {
    if (!std::isfinite(psi)) throw std::domain_error("CellLayout::index_of: psi not finite");
    auto i = static_cast<std::int64_t>(std::floor((psi - origin) / delta + 0.5));
    // Snap to the stored edges so lookups agree with bounds() exactly.
    while (psi < bounds(i).lo) --i;
    while (psi >= bounds(i).hi) ++i;
    return i;
}

Interval CellLayout::bounds(std::int64_t index) const {
    const double lo = origin + (static_cast<double>(index) - 0.5) * delta;
    const double hi = origin + (static_cast<double>(index) + 0.5) * delta;
    if (target == Target::abs_value && index == 0) return {0.0, hi};
    return {lo, hi};
}

double CellLayout::center(std::int64_t index) const {
    const Interval b = bounds(index);
    return 0.5 * (b.lo + b.hi);
}

double cell_mass(Target target, const Interval& cell, const NormalParams& law) {
    if (target == Target::identity) return normal_interval_mass(cell.lo, cell.hi, law);
    return normal_interval_mass(cell.lo, cell.hi, law) +
           normal_interval_mass(-cell.hi, -cell.lo, law);
}

bool EvidenceCell::has_rb() const noexcept { return prior_mass >= kMinPriorMass; }

EvidenceGrid::EvidenceGrid(CellLayout layout, std::int64_t first_index,
                           std::vector<EvidenceCell> cells)
    : layout_(layout), first_index_(first_index), cells_(std::move(cells)) {}

std::optional<std::size_t> EvidenceGrid::find(double psi) const {
    if (!std::isfinite(psi)) return std::nullopt;
    if (layout_.target == Target::abs_value && psi < 0.0) return std::nullopt;
    const std::int64_t i = layout_.index_of(psi) - first_index_;
    if (i < 0 || i >= static_cast<std::int64_t>(cells_.size())) return std::nullopt;
    return static_cast<std::size_t>(i);
}

double EvidenceGrid::total_prior_mass() const noexcept {
    double s = 0.0;
    for (const auto& c : cells_) s += c.prior_mass;
    return s;
}

double EvidenceGrid::total_posterior_mass() const noexcept {
    double s = 0.0;
    for (const auto& c : cells_) s += c.posterior_mass;
    return s;
}

namespace {

// Tail value at one cell edge: lower cdf left of the mean, upper tail right of it.
struct EdgeTail {
    double value;
    bool upper;
};

EdgeTail edge_tail(double edge, const NormalParams& law) {
    const double z = (edge - law.mean()) / law.sd();
    if (z >= 0.0) return {normal_sf(z), true};
    return {normal_cdf(z), false};
}

// Same branches as normal_interval_mass, so results agree bit for bit.
double mass_between(const EdgeTail& a, const EdgeTail& b) {
    if (a.upper) return a.value - b.value;
    if (!b.upper) return b.value - a.value;
    return 1.0 - a.value - b.value;
}

std::vector<double> cell_masses(const CellLayout& layout, std::int64_t first,
                                std::size_t count, const NormalParams& law) {
    std::vector<EdgeTail> pos(count + 1);
    std::vector<EdgeTail> neg;
    for (std::size_t j = 0; j <= count; ++j) {
        const std::int64_t idx = first + static_cast<std::int64_t>(j);
        const double edge = j < count ? layout.bounds(idx).lo : layout.bounds(idx - 1).hi;
        pos[j] = edge_tail(edge, law);
    }
    const bool folded = layout.target == Target::abs_value;
    if (folded) {
        neg.resize(count + 1);
        for (std::size_t j = 0; j <= count; ++j) {
            const std::int64_t idx = first + static_cast<std::int64_t>(j);
            const double edge = j < count ? layout.bounds(idx).lo : layout.bounds(idx - 1).hi;
            neg[j] = edge_tail(-edge, law);
        }
    }
    std::vector<double> out(count);
    for (std::size_t j = 0; j < count; ++j) {
        double m = mass_between(pos[j], pos[j + 1]);
        if (folded) m += mass_between(neg[j + 1], neg[j]);
        out[j] = m;
    }
    return out;
}

constexpr std::int64_t kMaxGridCells = 50'000'000;

}  // namespace

EvidenceGrid build_grid(const BayesInferenceBase& base, const GridOptions& options) {
    if (!(options.tail_mass > 0.0 && options.tail_mass < 1e-6 + 1e-18)) {
        throw std::domain_error("build_grid: tail_mass must lie in (0, 1e-6]");
    }
    CellLayout layout{options.target,
                      options.target == Target::abs_value ? 0.0 : options.origin,
                      base.delta()};
    const NormalParams prior = base.prior();
    const NormalParams post = posterior_params(base);
    const double k = -normal_quantile(options.tail_mass / 2.0);

    double lo = 0.0;
    double hi = 0.0;
    if (layout.target == Target::abs_value) {
        hi = std::max(std::abs(prior.mean()) + k * prior.sd(),
                      std::abs(post.mean()) + k * post.sd());
    } else {
        lo = std::min(prior.mean() - k * prior.sd(), post.mean() - k * post.sd());
        hi = std::max(prior.mean() + k * prior.sd(), post.mean() + k * post.sd());
    }
    const std::int64_t first =
        layout.target == Target::abs_value ? 0 : layout.index_of(lo);
    const std::int64_t last = layout.index_of(hi);
    const std::int64_t count = last - first + 1;
    if (count > kMaxGridCells) {
        throw std::domain_error("build_grid: delta too small for the prior/posterior span");
    }

    const auto n = static_cast<std::size_t>(count);
    const std::vector<double> prior_mass = cell_masses(layout, first, n, prior);
    const std::vector<double> post_mass = cell_masses(layout, first, n, post);

    std::vector<EvidenceCell> cells(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto idx = first + static_cast<std::int64_t>(j);
        const Interval b = layout.bounds(idx);
        auto& c = cells[j];
        c.lo = b.lo;
        c.hi = b.hi;
        c.center = 0.5 * (b.lo + b.hi);
        c.prior_mass = prior_mass[j];
        c.posterior_mass = post_mass[j];
        c.rb = c.has_rb() ? c.posterior_mass / c.prior_mass
                          : std::numeric_limits<double>::quiet_NaN();
    }
    return EvidenceGrid(layout, first, std::move(cells));
}

// ---------------------------------------------------------------------------
// Single-cell evaluator

CellEvaluator::CellEvaluator(const BayesInferenceBase& base, const CellLayout& layout,
                             double psi)
    : target_(layout.target),
      cell_(layout.bounds(layout.index_of(psi))),
      prior_mass_(cell_mass(layout.target, cell_, base.prior())),
      prior_mean_(base.prior().mean()) {
    const Precisions p = precisions(base);
    if (!base.data()) {
        throw std::domain_error("CellEvaluator: needs n and sigma0 from observed data");
    }
    if (layout.target == Target::abs_value && psi < 0.0) {
        throw std::domain_error("CellEvaluator: psi must be >= 0 for |mu|");
    }
    prior_precision_ = p.prior;
    data_precision_ = p.data;
    posterior_sd_ = std::sqrt(1.0 / (p.data + p.prior));
}

double CellEvaluator::posterior_mass(double xbar) const {
    const NormalParams post = combine({prior_precision_, data_precision_}, prior_mean_, xbar);
    return cell_mass(target_, cell_, post);
}

double CellEvaluator::rb(double xbar) const {
    if (!(prior_mass_ >= kMinPriorMass)) return std::numeric_limits<double>::quiet_NaN();
    return posterior_mass(xbar) / prior_mass_;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

const EvidenceCell& hypothesis_cell(const EvidenceGrid& grid, double psi0) {
    const auto at = grid.find(psi0);
    if (!at) throw std::domain_error("psi0 outside the grid");
    const EvidenceCell& c = grid[*at];
    if (!c.has_rb()) throw std::domain_error("psi0 cell has no prior mass");
    return c;
}

}  // namespace

double rb_at(const EvidenceGrid& grid, double psi0) { return hypothesis_cell(grid, psi0).rb; }

double strength_at(const EvidenceGrid& grid, double psi0) {
    const double rb0 = hypothesis_cell(grid, psi0).rb;
    double s = 0.0;
    for (const auto& c : grid.cells()) {
        if (c.has_rb() && c.rb <= rb0) s += c.posterior_mass;
    }
    return s;
}

IntervalSet plausible_region(const EvidenceGrid& grid) {
    IntervalSet out;
    for (const auto& c : grid.cells()) {
        if (c.has_rb() && c.rb > 1.0) out.add(c.lo, c.hi);
    }
    return out;
}

IntervalSet implausible_region(const EvidenceGrid& grid) {
    IntervalSet out;
    for (const auto& c : grid.cells()) {
        if (c.has_rb() && c.rb < 1.0) out.add(c.lo, c.hi);
    }
    return out;
}

EvidenceReport evidence_report(const EvidenceGrid& grid, double psi0, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw std::domain_error("evidence_report: gamma must lie in (0, 1)");
    }
    const EvidenceCell& h0 = hypothesis_cell(grid, psi0);
    const std::size_t h0_index = static_cast<std::size_t>(&h0 - grid.cells().data());

    EvidenceReport r;
    r.psi0 = psi0;
    r.gamma = gamma;
    r.rb_at_hypothesis = h0.rb;
    r.bf_at_hypothesis = bayes_factor(h0.prior_mass, h0.posterior_mass);
    r.jeffreys_label = jeffreys_label(r.bf_at_hypothesis);

    const auto& cells = grid.cells();
    std::size_t best = h0_index;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        if (!c.has_rb()) continue;
        if (c.rb > cells[best].rb || (c.rb == cells[best].rb && i < best)) best = i;
        if (c.rb > 1.0) r.plausible_content += c.posterior_mass;
        if (c.rb <= h0.rb) r.strength += c.posterior_mass;
    }
    r.estimate = cells[best].center;
    r.plausible = plausible_region(grid);

    std::vector<std::size_t> order;
    order.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].has_rb()) order.push_back(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cells[a].rb > cells[b].rb;
    });
    double mass = 0.0;
    for (std::size_t i : order) {
        if (mass >= gamma) break;
        r.credible_candidate.add(cells[i].lo, cells[i].hi);
        mass += cells[i].posterior_mass;
    }
    r.credible_contained = r.credible_candidate.subset_of(r.plausible);
    if (r.credible_contained) r.credible = r.credible_candidate;
    return r;
}

double bayes_factor(double prior_mass, double posterior_mass) {
    if (!(prior_mass > 0.0 && prior_mass < 1.0)) {
        throw std::domain_error("bayes_factor: prior mass must lie in (0, 1)");
    }
    if (!(posterior_mass >= 0.0 && posterior_mass <= 1.0)) {
        throw std::domain_error("bayes_factor: posterior mass must lie in [0, 1]");
    }
    if (posterior_mass == 1.0) return std::numeric_limits<double>::infinity();
    return (posterior_mass / (1.0 - posterior_mass)) / (prior_mass / (1.0 - prior_mass));
}

double relative_belief_ratio(double prior_mass, double posterior_mass) {
    if (!(prior_mass > 0.0)) throw std::domain_error("relative_belief_ratio: prior mass must be > 0");
    return posterior_mass / prior_mass;
}

double psi_density(Target target, double psi, const NormalParams& law) {
    const double s = law.sd();
    double d = normal_pdf((psi - law.mean()) / s) / s;
    if (target == Target::abs_value) {
        if (psi < 0.0) return 0.0;
        d += normal_pdf((-psi - law.mean()) / s) / s;
    }
    return d;
}

BayesFactorLimit bayes_factor_limit(const BayesInferenceBase& base, Target target,
                                    double psi0, const std::vector<double>& epsilons) {
    if (epsilons.empty()) throw std::domain_error("bayes_factor_limit: no epsilons");
    const double prior_density = psi_density(target, psi0, base.prior());
    if (!(prior_density > 0.0)) {
        throw std::domain_error("bayes_factor_limit: prior density is zero at psi0");
    }
    std::vector<double> eps = epsilons;
    std::sort(eps.begin(), eps.end(), std::greater<>());
    const NormalParams post = posterior_params(base);

    BayesFactorLimit out;
    for (double e : eps) {
        if (!(e > 0.0)) throw std::domain_error("bayes_factor_limit: epsilons must be > 0");
        Interval hood{psi0 - e, psi0 + e};
        if (target == Target::abs_value) hood.lo = std::max(0.0, hood.lo);
        out.sequence.push_back(
            {e, bayes_factor(cell_mass(target, hood, base.prior()), cell_mass(target, hood, post))});
    }
    const auto n = out.sequence.size();
    if (n == 1) {
        out.limit = out.sequence[0].bf;
    } else {
        const auto& a = out.sequence[n - 2];
        const auto& b = out.sequence[n - 1];
        out.limit = b.bf - b.epsilon * (a.bf - b.bf) / (a.epsilon - b.epsilon);
    }
    out.density_ratio = psi_density(target, psi0, post) / prior_density;
    return out;
}

// ---------------------------------------------------------------------------
// Jeffreys scale

std::string to_string(JeffreysBand band) {
    switch (band) {
        case JeffreysBand::barely_worth_mentioning: return "barely_worth_mentioning";
        case JeffreysBand::substantial: return "substantial";
        case JeffreysBand::strong: return "strong";
        case JeffreysBand::very_strong: return "very_strong";
        case JeffreysBand::decisive: return "decisive";
    }
    return "barely_worth_mentioning";
}

std::string to_string(JeffreysLabel label) {
    const std::string band = to_string(label.band);
    return label.direction == EvidenceDirection::against ? "against_" + band : band;
}

JeffreysLabel jeffreys_label(double bf) {
    if (!(bf > 0.0)) throw std::domain_error("jeffreys_label: bf must be > 0");
    JeffreysLabel out;
    double x = bf;
    if (bf > 1.0) {
        out.direction = EvidenceDirection::in_favor;
    } else if (bf < 1.0) {
        out.direction = EvidenceDirection::against;
        x = 1.0 / bf;
    }
    if (x <= std::sqrt(10.0)) {
        out.band = JeffreysBand::barely_worth_mentioning;
    } else if (x <= 10.0) {
        out.band = JeffreysBand::substantial;
    } else if (x <= std::pow(10.0, 1.5)) {
        out.band = JeffreysBand::strong;
    } else if (x <= 100.0) {
        out.band = JeffreysBand::very_strong;
    } else {
        out.band = JeffreysBand::decisive;
    }
    return out;
}

// ---------------------------------------------------------------------------

UrnEvidence urn_evidence(std::int64_t big_n, std::int64_t small_n) {
    if (small_n < 1 || small_n >= big_n) {
        throw std::domain_error("urn_evidence: need 1 <= n < N");
    }
    return {static_cast<double>(big_n) / static_cast<double>(small_n),
            1.0 / static_cast<double>(small_n)};
}

double pereira_stern_ev(const BayesInferenceBase& base, double mu0) {
    if (!std::isfinite(mu0)) throw std::domain_error("pereira_stern_ev: mu0 not finite");
    const NormalParams post = posterior_params(base);
    return std::min(1.0, 2.0 * normal_sf(std::abs(mu0 - post.mean()) / post.sd()));
}

void write_grid_csv(std::ostream& os, const EvidenceGrid& grid) {
    CsvWriter csv(os, {"psi_mid", "prior_mass", "posterior_mass", "rb"});
    for (const auto& c : grid.cells()) {
        if (c.has_rb()) {
            csv.row(c.center, c.prior_mass, c.posterior_mass, c.rb);
        } else {
            csv.row(c.center, c.prior_mass, c.posterior_mass, std::string_view{});
        }
    }
}

}  // namespace evidence
