#include "evidence/bias.hpp"

#include "evidence/csv.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace evidence {

namespace {

constexpr std::uint64_t kAgainstStream = 1;
constexpr std::uint64_t kCandidateStream = 1000;
constexpr std::uint64_t kOuterStream = 2;
// bias_E inner streams: one block of ids per outer replication.
constexpr std::uint64_t kNestedStream = std::uint64_t{1} << 32;
constexpr std::uint64_t kNestedStride = std::uint64_t{1} << 16;

CellLayout layout_for(const BayesInferenceBase& base, const BiasSettings& s) {
    return {s.target, s.target == Target::abs_value ? 0.0 : s.origin, base.delta()};
}

// Draws xbar given psi: mu = +/-psi for |mu| with the conditional prior sign.
class DataGenerator {
public:
    DataGenerator(const BayesInferenceBase& base, Target target, double psi)
        : target_(target), psi_(psi), se_(base.require_data().standard_error()) {
        const NormalParams& prior = base.prior();
        // log pi(psi) - log pi(-psi) = 2 psi m / t^2
        const double log_odds = 2.0 * psi * prior.mean() / prior.variance();
        p_plus_ = 1.0 / (1.0 + std::exp(-log_odds));
    }

    double operator()(Rng& rng) {
        double mu = psi_;
        if (target_ == Target::abs_value && psi_ > 0.0) {
            if (!(unif_(rng) < p_plus_)) mu = -psi_;
        }
        return mu + se_ * z_(rng);
    }

private:
    Target target_;
    double psi_;
    double se_;
    double p_plus_ = 1.0;
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
    std::normal_distribution<double> z_{0.0, 1.0};
};

void check_psi0(const BayesInferenceBase& base, const BiasSettings& s, double psi0) {
    if (!std::isfinite(psi0)) throw std::domain_error("bias: psi0 not finite");
    if (s.target == Target::abs_value && psi0 < 0.0) {
        throw std::domain_error("bias: psi0 must be >= 0 for |mu|");
    }
    base.require_data();
    const EvidenceGrid grid = build_grid(BayesInferenceBase::prior_only(base.prior(), base.delta()),
                                         {s.target, s.origin});
    const auto at = grid.find(psi0);
    if (!at || !grid[*at].has_rb()) throw std::domain_error("bias: psi0 outside the grid");
}

void check_reps(std::uint64_t reps) {
    if (reps < 1) throw std::domain_error("bias: reps must be >= 1");
}

struct Candidates {
    std::vector<double> values;
    double spacing = 0.0;
};

Candidates candidate_grid(const BayesInferenceBase& base, const BiasSettings& s, double psi0,
                          double delta_sep) {
    const NormalParams& prior = base.prior();
    double lo = prior.mean() - s.support_sds * prior.sd();
    double hi = prior.mean() + s.support_sds * prior.sd();
    if (s.target == Target::abs_value) {
        lo = 0.0;
        hi = std::abs(prior.mean()) + s.support_sds * prior.sd();
    }
    const double span = hi - lo;
    const std::size_t max_count = std::max<std::size_t>(s.max_candidates, 2);
    Candidates out;
    out.spacing = std::max({base.delta(), delta_sep / 10.0,
                            span / static_cast<double>(max_count - 1)});
    const auto steps = static_cast<std::size_t>(std::floor(span / out.spacing + 1e-9));
    for (std::size_t k = 0; k <= steps; ++k) {
        const double c = lo + out.spacing * static_cast<double>(k);
        if (std::abs(c - psi0) >= delta_sep) out.values.push_back(c);
    }
    for (double b : {psi0 - delta_sep, psi0 + delta_sep}) {
        if (b >= lo && b <= hi) out.values.push_back(b);
    }
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
    return out;
}

// Fraction of `reps` draws under psi_true where the evaluator's rb passes `pred`.
template <class Pred>
std::uint64_t count_hits(const BayesInferenceBase& base, Target target, double psi_true,
                         const CellEvaluator& cell, std::uint64_t reps, Rng& rng, Pred pred) {
    DataGenerator gen(base, target, psi_true);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < reps; ++i) {
        if (pred(cell.rb(gen(rng)))) ++hits;
    }
    return hits;
}

}  // namespace

McProbability bias_against_H(const BayesInferenceBase& base, double psi0,
                             const BiasSettings& settings) {
    check_reps(settings.reps);
    check_psi0(base, settings, psi0);
    const CellEvaluator cell(base, layout_for(base, settings), psi0);
    auto body = [&](Rng& rng, std::uint64_t count) {
        const auto hits = count_hits(base, settings.target, psi0, cell, count, rng,
                                     [](double rb) { return rb <= 1.0; });
        return HitCount{hits, count};
    };
    const HitCount h =
        run_blocks<HitCount>(settings.seed, kAgainstStream, settings.reps, settings.workers, body);
    return make_proportion(h.hits, h.reps);
}

InFavorResult bias_in_favor_H(const BayesInferenceBase& base, double psi0, double delta_sep,
                              const BiasSettings& settings) {
    if (!(delta_sep > 0.0)) throw std::domain_error("bias_in_favor_H: delta_sep must be > 0");
    check_reps(settings.reps);
    check_psi0(base, settings, psi0);
    const CellEvaluator cell(base, layout_for(base, settings), psi0);
    const Candidates cands = candidate_grid(base, settings, psi0, delta_sep);

    InFavorResult out;
    out.candidate_spacing = cands.spacing;
    out.candidate_count = cands.values.size();
    if (cands.values.empty()) {
        out.candidates_empty = true;
        out.estimate = make_proportion(0, settings.reps);
        return out;
    }
    std::uint64_t best_hits = 0;
    for (std::size_t j = 0; j < cands.values.size(); ++j) {
        const double c = cands.values[j];
        auto body = [&](Rng& rng, std::uint64_t count) {
            const auto hits = count_hits(base, settings.target, c, cell, count, rng,
                                         [](double rb) { return rb >= 1.0; });
            return HitCount{hits, count};
        };
        const HitCount h = run_blocks<HitCount>(settings.seed, kCandidateStream + j,
                                                settings.reps, settings.workers, body);
        // Strict comparison keeps the smallest psi' among ties.
        if (!out.sup_attained_at || h.hits > best_hits) {
            best_hits = h.hits;
            out.sup_attained_at = c;
        }
    }
    out.estimate = make_proportion(best_hits, settings.reps);
    return out;
}

BiasReport bias_report(const BayesInferenceBase& base, double psi0, double delta_sep,
                       const BiasSettings& settings) {
    const InFavorResult favor = bias_in_favor_H(base, psi0, delta_sep, settings);
    BiasReport r;
    r.bias_against = bias_against_H(base, psi0, settings);
    r.bias_in_favor = favor.estimate;
    r.psi0 = psi0;
    r.delta = base.delta();
    r.delta_sep = delta_sep;
    r.reps = settings.reps;
    r.seed = settings.seed;
    r.sup_attained_at = favor.sup_attained_at;
    r.candidate_spacing = favor.candidate_spacing;
    r.candidate_count = favor.candidate_count;
    r.candidates_empty = favor.candidates_empty;
    r.target = settings.target;
    r.rng = std::string(rng_name());
    return r;
}

BiasE bias_E(const BayesInferenceBase& base, double delta_sep, std::uint64_t outer_reps,
             std::uint64_t inner_reps, const BiasSettings& settings) {
    if (outer_reps < 2 || inner_reps < 1) {
        throw std::domain_error("bias_E: need outer_reps >= 2 and inner_reps >= 1");
    }
    if (!(delta_sep > 0.0)) throw std::domain_error("bias_E: delta_sep must be > 0");
    const LocationNormalData& data = base.require_data();
    const CellLayout layout = layout_for(base, settings);
    const GridOptions grid_options{settings.target, settings.origin};

    std::vector<double> psi(outer_reps);
    {
        Rng rng = make_rng(settings.seed, kOuterStream, 0);
        std::normal_distribution<double> prior(base.prior().mean(), base.prior().sd());
        for (auto& p : psi) {
            const double mu = prior(rng);
            p = settings.target == Target::abs_value ? std::abs(mu) : mu;
        }
    }

    std::vector<double> against(outer_reps);
    std::vector<double> coverage(outer_reps);
    std::vector<double> favor(outer_reps);
    parallel_for(outer_reps, settings.workers, [&](std::uint64_t i) {
        const std::uint64_t stream = kNestedStream + i * kNestedStride;
        const CellEvaluator cell(base, layout, psi[i]);

        Rng rng = make_rng(settings.seed, stream, 0);
        DataGenerator gen(base, settings.target, psi[i]);
        std::uint64_t not_for = 0;
        std::uint64_t covered = 0;
        for (std::uint64_t k = 0; k < inner_reps; ++k) {
            const double xbar = gen(rng);
            if (cell.rb(xbar) <= 1.0) ++not_for;
            const EvidenceGrid grid =
                build_grid(BayesInferenceBase(data.with_xbar(xbar), base.prior(), base.delta()),
                           grid_options);
            if (plausible_region(grid).contains(psi[i])) ++covered;
        }
        const auto n = static_cast<double>(inner_reps);
        against[i] = static_cast<double>(not_for) / n;
        coverage[i] = static_cast<double>(covered) / n;

        const Candidates cands = candidate_grid(base, settings, psi[i], delta_sep);
        std::uint64_t best = 0;
        for (std::size_t j = 0; j < cands.values.size(); ++j) {
            Rng crng = make_rng(settings.seed, stream + 1 + j, 0);
            best = std::max(best, count_hits(base, settings.target, cands.values[j], cell,
                                             inner_reps, crng,
                                             [](double rb) { return rb >= 1.0; }));
        }
        favor[i] = static_cast<double>(best) / n;
    });

    return {make_mean(against), make_mean(coverage), make_mean(favor), outer_reps, inner_reps};
}

std::vector<LindleyRow> lindley_sweep(const LocationNormalData& data, double mu0,
                                      const std::vector<double>& tau0_list, double delta) {
    if (!std::isfinite(mu0)) throw std::domain_error("lindley_sweep: mu0 not finite");
    const double pvalue = pvalue_location_normal(data, mu0);
    std::vector<LindleyRow> rows;
    rows.reserve(tau0_list.size());
    for (double tau0 : tau0_list) {
        const BayesInferenceBase base(data, NormalParams(mu0, tau0), delta);
        const EvidenceGrid grid = build_grid(base, {Target::identity, mu0});
        rows.push_back({tau0, rb_at(grid, mu0), strength_at(grid, mu0), pvalue});
    }
    return rows;
}

void write_lindley_csv(std::ostream& os, const std::vector<LindleyRow>& rows) {
    CsvWriter csv(os, {"tau0", "rb", "strength", "pvalue"});
    for (const auto& r : rows) csv.row(r.tau0, r.rb, r.strength, r.pvalue);
}

}  // namespace evidence
