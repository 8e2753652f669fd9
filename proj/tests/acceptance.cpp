// Acceptance checks 1-10. `acceptance K...` runs the listed criteria (all by
// default) and prints one PASS/FAIL line each; the exit code is 1 if any fail.

#include "oracles.hpp"

#include <evidence/bias.hpp>
#include <evidence/e_process.hpp>
#include <evidence/freq_evidence.hpp>
#include <evidence/likelihood.hpp>
#include <evidence/relative_belief.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace evidence;

namespace {

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

class Checks {
public:
    void add(bool ok, const std::string& what) {
        ok_ = ok_ && ok;
        std::ostringstream& os = ok ? passed_ : failed_;
        if (!os.str().empty()) os << "; ";
        os << what;
    }
    bool ok() const { return ok_; }
    std::string summary() const {
        std::string s = failed_.str().empty() ? "" : "failed: " + failed_.str();
        if (!passed_.str().empty()) s += (s.empty() ? "" : " | ") + std::string("ok: ") + passed_.str();
        return s;
    }

private:
    bool ok_ = true;
    std::ostringstream passed_;
    std::ostringstream failed_;
};

std::string num(double v) {
    std::ostringstream os;
    os.precision(7);
    os << v;
    return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BayesInferenceBase example6_base(int n = 2) {
    return BayesInferenceBase(LocationNormalData(n, 1.47, 1.0), NormalParams(0.0, 2.0), 0.01);
}

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }

Checks criterion1() {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    const EvidenceGrid grid = build_grid(example6_base());
    const EvidenceReport r = evidence_report(grid, 2.0, 0.5);
    const double elapsed = seconds_since(t0);
    c.add(within(r.estimate, 1.47, 0.01), "estimate " + num(r.estimate) + " vs 1.47 +/- 0.01");
    const bool one_piece = r.plausible.size() == 1;
    c.add(one_piece, "plausible region is one interval");
    if (one_piece) {
        c.add(within(r.plausible[0].lo, 0.65, 0.02),
              "Pl lo " + num(r.plausible[0].lo) + " vs 0.65 +/- 0.02");
        c.add(within(r.plausible[0].hi, 2.26, 0.02),
              "Pl hi " + num(r.plausible[0].hi) + " vs 2.26 +/- 0.02");
    }
    c.add(within(r.plausible_content, 0.76, 0.01),
          "content " + num(r.plausible_content) + " vs 0.76 +/- 0.01");
    c.add(within(r.rb_at_hypothesis, 1.41, 0.02),
          "RB(2) " + num(r.rb_at_hypothesis) + " vs 1.41 +/- 0.02");
    c.add(within(r.strength, 0.42, 0.02), "strength(2) " + num(r.strength) + " vs 0.42 +/- 0.02");
    c.add(elapsed < 5.0, "runtime " + num(elapsed) + " s < 5 s");
    return c;
}

Checks criterion2() {
    Checks c;
    const int n = 20;
    const LocationNormalData d(n, 5.0 / std::sqrt(double(n)), 1.0);
    const double p = pvalue_location_normal(d, 0.0);
    // Half a unit in the sixth significant digit of 5.73303e-7.
    c.add(std::abs(p - 5.733031e-7) <= 5e-13,
          "pvalue " + num(p) + " vs 5.733031e-7 (6 significant digits)");
    return c;
}

Checks criterion3() {
    Checks c;
    const UrnEvidence u = urn_evidence(1'000'000, 1'000);
    c.add(u.rb == 1000.0, "rb " + num(u.rb) + " == 1000");
    c.add(u.posterior == 0.001, "posterior " + num(u.posterior) + " == 0.001");
    const std::string label = to_string(jeffreys_label(u.rb));
    c.add(label == "decisive", "label " + label + " == decisive");
    return c;
}

Checks criterion4() {
    Checks c;
    const LocationNormalData d(2, 1.47, 1.0);
    const auto grid = default_abs_grid(d, 0.01);
    const LikelihoodCurve prof = profile_curve(d, grid);
    const LikelihoodCurve integ = integrated_curve(d, 0.5, grid);
    c.add(within(prof.argmax_psi(), 1.47, 0.01),
          "profile argmax " + num(prof.argmax_psi()) + " within one cell of 1.47");
    c.add(within(integ.argmax_psi(), 1.47, 0.01),
          "integrated argmax " + num(integ.argmax_psi()) + " within one cell of 1.47");
    double worst = 0.0;
    for (double psi : {0.0, 0.5, 1.47, 3.0}) {
        const double mass = oracle::simpson(
            [&](double t) { return abs_mean_density(psi, 1, d.with_xbar(t)); }, 0.0,
            psi + 14.0 * d.standard_error(), 40000);
        worst = std::max(worst, std::abs(mass - 1.0));
    }
    c.add(worst <= 1e-6, "density of |xbar| integrates to 1 (max error " + num(worst) + ")");
    double lo = INFINITY;
    double hi = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (prof.value[i] < 1e-12) continue;
        const double ratio = integ.value[i] / prof.value[i];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    c.add(hi / lo - 1.0 > 0.01, "integrated/profile ratio varies by " + num(hi / lo - 1.0));
    return c;
}

Checks criterion5() {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    for (double alpha : {0.05, 0.01}) {
        const McProbability r =
            simulate_sequential_type1(alpha, 0.5, 0.0, 1.0, 1000, 100000, RngSeed{5}, workers());
        c.add(r.estimate <= alpha + 3.0 * r.std_error,
              "e-process rate " + num(r.estimate) + " <= " + num(alpha) + " + 3 SE (" +
                  num(r.std_error) + ")");
    }
    const McProbability two =
        two_stage_rejection_prob(0.05, 50, 50, 1'000'000, RngSeed{5}, workers());
    c.add(two.estimate - 0.05 > 5.0 * two.std_error,
          "two-stage rate " + num(two.estimate) + " > 0.05 + 5 SE (" + num(two.std_error) + ")");
    const double elapsed = seconds_since(t0);
    c.add(elapsed < 600.0, "runtime " + num(elapsed) + " s < 600 s");
    return c;
}

Checks criterion6() {
    Checks c;
    SequentialConfig cfg;
    cfg.reps = 100000;
    cfg.max_steps = 20;
    cfg.tracked_steps = 20;
    cfg.seed = RngSeed{6};
    cfg.workers = workers();
    const SequentialResult r = simulate_sequential(cfg);
    int bad = 0;
    double worst = -INFINITY;
    for (const auto& m : r.product_means) {
        if (!(m.mean <= 1.0 + 3.0 * m.std_error)) ++bad;
        worst = std::max(worst, (m.mean - 1.0) / m.std_error);
    }
    c.add(r.product_means.size() == 20 && bad == 0,
          "product mean <= 1 + 3 SE at steps 1..20 (max (mean-1)/SE = " + num(worst) + ")");
    return c;
}

Checks criterion7() {
    Checks c;
    const EvidenceGrid grid = build_grid(example6_base());
    const oracle::LocationModel model{2, 1.47, 1.0, 0.0, 2.0, true};
    const double m = model.marginal();
    double worst = 0.0;
    std::size_t cells = 0;
    for (const auto& cell : grid.cells()) {
        if (!cell.has_rb()) continue;
        worst = std::max(worst, std::abs(cell.rb - model.rb(cell.lo, cell.hi, m)));
        ++cells;
    }
    c.add(worst <= 1e-6, "max |rb - m(x|cell)/m(x)| = " + num(worst) + " over " +
                             std::to_string(cells) + " cells");
    return c;
}

Checks criterion8() {
    Checks c;
    const auto base = example6_base();
    const EvidenceGrid grid = build_grid(base);
    int bad = 0;
    int favor = 0;
    int against = 0;
    for (const auto& cell : grid.cells()) {
        if (!cell.has_rb() || cell.posterior_mass <= 0.0) continue;
        const double bf = bayes_factor(cell.prior_mass, cell.posterior_mass);
        if (cell.rb > 1.0) {
            ++favor;
            bad += !(bf > cell.rb);
        } else if (cell.rb < 1.0) {
            ++against;
            bad += !(bf < cell.rb);
        }
    }
    c.add(bad == 0, "bf > rb on " + std::to_string(favor) + " in-favor cells, bf < rb on " +
                        std::to_string(against) + " against cells");
    const auto lim =
        bayes_factor_limit(base, Target::abs_value, 2.0, {0.4, 0.2, 0.1, 0.05, 0.01});
    bool monotone = true;
    std::string gaps;
    for (std::size_t i = 0; i < lim.sequence.size(); ++i) {
        const double gap = std::abs(lim.sequence[i].bf - lim.density_ratio);
        gaps += (i ? "," : "") + num(gap);
        if (i > 0 && !(gap < std::abs(lim.sequence[i - 1].bf - lim.density_ratio))) {
            monotone = false;
        }
    }
    c.add(monotone, "|BF(N_eps) - RB(2)| decreasing: " + gaps);
    return c;
}

Checks criterion9() {
    Checks c;
    const std::vector<double> taus{1.0, 10.0, 100.0, 1000.0};
    const int n = 20;
    const LocationNormalData d(n, 5.0 / std::sqrt(double(n)), 1.0);
    const auto rows = lindley_sweep(d, 0.0, taus, 0.01);
    bool rb_up = true;
    bool gap_down = true;
    std::string rbs;
    std::string gaps;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rbs += (i ? "," : "") + num(rows[i].rb);
        gaps += (i ? "," : "") + num(std::abs(rows[i].strength - rows[i].pvalue));
        if (i == 0) continue;
        rb_up = rb_up && rows[i].rb > rows[i - 1].rb;
        gap_down = gap_down && std::abs(rows[i].strength - rows[i].pvalue) <
                                   std::abs(rows[i - 1].strength - rows[i - 1].pvalue);
    }
    c.add(rb_up, "rb(mu0) strictly increasing: " + rbs);
    c.add(gap_down, "|strength - pvalue| strictly decreasing: " + gaps);

    BiasSettings s;
    s.target = Target::identity;
    s.origin = 0.0;
    s.reps = 10000;
    s.seed = RngSeed{9};
    s.workers = workers();
    bool favor_up = true;
    std::string favors;
    double prev = -1.0;
    for (double tau0 : taus) {
        const BayesInferenceBase base(d, NormalParams(0.0, tau0), 0.01);
        const double f = bias_in_favor_H(base, 0.0, 0.5, s).estimate.estimate;
        favors += (prev < 0.0 ? "" : ",") + num(f);
        favor_up = favor_up && f > prev;
        prev = f;
    }
    c.add(favor_up, "bias in favor increasing: " + favors);
    return c;
}

Checks criterion10() {
    Checks c;
    BiasSettings s;
    s.reps = 10000;
    s.seed = RngSeed{10};
    s.workers = workers();
    std::vector<McProbability> against;
    std::vector<McProbability> favor;
    for (int n : {2, 10, 50}) {
        const auto base = example6_base(n);
        against.push_back(bias_against_H(base, 2.0, s));
        favor.push_back(bias_in_favor_H(base, 2.0, 0.5, s).estimate);
    }
    auto describe = [](const std::vector<McProbability>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out += (i ? "," : "") + num(v[i].estimate) + "(" + num(v[i].std_error) + ")";
        }
        return out;
    };
    auto decreasing = [](const std::vector<McProbability>& v) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (!(v[i].estimate < v[i - 1].estimate)) return false;
        }
        return true;
    };
    auto small_se = [](const std::vector<McProbability>& v) {
        return std::all_of(v.begin(), v.end(), [](const McProbability& p) { return p.std_error <= 0.005; });
    };
    c.add(decreasing(against), "bias against decreasing over n=2,10,50: " + describe(against));
    c.add(decreasing(favor), "bias in favor decreasing over n=2,10,50: " + describe(favor));
    c.add(small_se(against) && small_se(favor), "every SE <= 0.005");

    const BiasE e = bias_E(example6_base(2), 0.5, 100, 1000, s);
    const double gap = std::abs(1.0 - e.bias_against_E.mean - e.plausible_coverage.mean);
    c.add(gap <= 3.0 * e.bias_against_E.std_error,
          "1 - bias_against_E " + num(1.0 - e.bias_against_E.mean) + " vs Pl coverage " +
              num(e.plausible_coverage.mean) + " within 3 SE (" +
              num(e.bias_against_E.std_error) + ")");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Checks()>> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9, criterion10,
    };
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
    if (which.empty()) {
        for (int k = 1; k <= 10; ++k) which.push_back(k);
    }
    bool all_ok = true;
    for (int k : which) {
        if (k < 1 || k > 10) {
            std::cerr << "unknown criterion " << k << '\n';
            return 2;
        }
        Checks c;
        try {
            c = criteria[k - 1]();
        } catch (const std::exception& e) {
            c.add(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << k << ": " << (c.ok() ? "PASS" : "FAIL") << "  "
                  << c.summary() << std::endl;
        all_ok = all_ok && c.ok();
    }
    return all_ok ? 0 : 1;
}
