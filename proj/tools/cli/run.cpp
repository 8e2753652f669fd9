#include "run.hpp"

#include <evidence/bias.hpp>
#include <evidence/csv.hpp>
#include <evidence/e_process.hpp>
#include <evidence/freq_evidence.hpp>
#include <evidence/likelihood.hpp>
#include <evidence/relative_belief.hpp>
#include <evidence/report_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace evidence::cli {

namespace {

using Json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input validation happens in the domain constructors; their errors are
// configuration errors, anything thrown later is a numeric failure.
template <class F>
auto configured(F f) {
    try {
        return f();
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
}

class Context {
public:
    Context(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    const RunConfig& cfg() const { return cfg_; }
    std::ostream& out() { return out_; }

    void write(const std::string& name, const std::string& content) {
        const std::filesystem::path dir(cfg_.output_dir);
        std::filesystem::create_directories(dir);
        std::ofstream f(dir / name, std::ios::binary);
        f << content;
        if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
    }

    /// Writes `content` to `name` and echoes it to stdout.
    void emit(const std::string& name, const std::string& content) {
        write(name, content);
        out_ << content;
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json intervals(const IntervalSet& set) {
    Json out = Json::array();
    for (const auto& p : set) out.push_back({p.lo, p.hi});
    return out;
}

Target parse_target(const std::string& s) {
    return s == "identity" ? Target::identity : Target::abs_value;
}

LocationNormalData data_of(const RunConfig& c) {
    return configured([&] { return LocationNormalData(c.n, c.xbar, c.sigma0); });
}

BayesInferenceBase base_of(const RunConfig& c) {
    return configured([&] {
        return BayesInferenceBase(LocationNormalData(c.n, c.xbar, c.sigma0),
                                  NormalParams(c.mu0, c.tau0), c.delta);
    });
}

void check_alpha(double alpha) { require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)"); }
void check_reps(std::uint64_t reps) { require(reps >= 1, "reps must be >= 1"); }

// ---------------------------------------------------------------------------
// Subcommands

int cmd_pvalue(Context& ctx) {
    const auto& c = ctx.cfg();
    const auto data = data_of(c);
    require(std::isfinite(c.mu0), "mu0 must be finite");
    Json j;
    j["n"] = c.n;
    j["xbar"] = c.xbar;
    j["sigma0"] = c.sigma0;
    j["mu0"] = c.mu0;
    j["z"] = z_statistic(data, c.mu0);
    j["pvalue"] = pvalue_location_normal(data, c.mu0);
    ctx.write("pvalue.json", dump(j));
    ctx.out() << "pvalue " << format_real(j["pvalue"].get<double>()) << '\n';
    return kExitOk;
}

int cmd_confint(Context& ctx) {
    const auto& c = ctx.cfg();
    const auto data = data_of(c);
    check_alpha(c.alpha);
    const IntervalSet ci = confidence_interval(data, c.alpha);
    Json j;
    j["alpha"] = c.alpha;
    j["level"] = 1.0 - c.alpha;
    j["interval"] = intervals(ci);
    ctx.write("confint.json", dump(j));
    ctx.out() << "confint " << format_real(ci[0].lo) << ' ' << format_real(ci[0].hi) << '\n';
    return kExitOk;
}

int cmd_two_stage(Context& ctx) {
    const auto& c = ctx.cfg();
    check_alpha(c.alpha);
    check_reps(c.reps);
    require(c.n1 >= 1 && c.n2 >= 0, "need n1 >= 1 and n2 >= 0");
    const McProbability p =
        two_stage_rejection_prob(c.alpha, c.n1, c.n2, c.reps, RngSeed{c.seed}, c.workers);
    Json j;
    j["alpha"] = c.alpha;
    j["n1"] = c.n1;
    j["n2"] = c.n2;
    j["reps"] = c.reps;
    j["seed"] = c.seed;
    j["rejection_rate"] = p.estimate;
    j["rejection_rate_se"] = p.std_error;
    ctx.emit("two-stage.json", dump(j));
    return kExitOk;
}

SequentialConfig sequential_config(const RunConfig& c) {
    SequentialConfig s;
    s.alpha = c.alpha;
    s.a = c.a;
    s.mu0 = c.mu0;
    s.sigma0 = c.sigma0;
    s.max_steps = c.max_steps;
    s.reps = c.reps;
    s.seed = RngSeed{c.seed};
    s.workers = c.workers;
    configured([&] {
        (void)EProcessState(s.alpha);
        (void)e_value_power(1.0, s.a);
        return 0;
    });
    require(s.max_steps >= 1, "max-steps must be >= 1");
    require(s.sigma0 > 0.0, "sigma0 must be > 0");
    check_reps(s.reps);
    return s;
}

std::string product_means_csv(const SequentialResult& r) {
    std::ostringstream os;
    CsvWriter csv(os, {"step", "product_mean", "std_error"});
    for (std::size_t k = 0; k < r.product_means.size(); ++k) {
        csv.row(k + 1, r.product_means[k].mean, r.product_means[k].std_error);
    }
    return os.str();
}

int cmd_eprocess(Context& ctx) {
    const SequentialResult r = simulate_sequential(sequential_config(ctx.cfg()));
    ctx.write("eprocess.csv", product_means_csv(r));
    ctx.emit("eprocess.json", to_json(r));
    return kExitOk;
}

std::string curves_csv(const std::vector<LikelihoodCurve>& curves) {
    std::ostringstream os;
    write_curves_csv(os, curves);
    return os.str();
}

int cmd_likelihood(Context& ctx) {
    const auto& c = ctx.cfg();
    const auto data = data_of(c);
    configured([&] { return integrated_likelihood_abs(data, 0.0, c.p_sign); });
    const auto grid = configured([&] { return default_abs_grid(data, c.delta); });
    const LikelihoodCurve profile = profile_curve(data, grid);
    const LikelihoodCurve integrated = integrated_curve(data, c.p_sign, grid);
    ctx.write("likelihood.csv", curves_csv({profile, integrated}));
    Json j;
    j["n"] = c.n;
    j["xbar"] = c.xbar;
    j["sigma0"] = c.sigma0;
    j["p_sign"] = c.p_sign;
    j["grid_spacing"] = c.delta;
    j["profile_argmax"] = profile.argmax_psi();
    j["integrated_argmax"] = integrated.argmax_psi();
    j["region_1_8"] = intervals(likelihood_region(data, kRoyallVeryStrong));
    j["region_1_32"] = intervals(likelihood_region(data, kRoyallQuiteStrong));
    const ScaleNormalMles m = configured([&] { return scale_normal_mles({c.n, c.sx2, c.k}); });
    j["sx2"] = c.sx2;
    j["k"] = c.k;
    j["scale_mle"] = m.mle;
    j["scale_profile_mle"] = m.profile_mle;
    j["scale_predictive_y"] = m.predictive_y;
    ctx.emit("likelihood.json", dump(j));
    return kExitOk;
}

EvidenceGrid grid_for(const BayesInferenceBase& base, Target target, double psi0) {
    return build_grid(base, {target, target == Target::identity ? psi0 : 0.0});
}

std::string grid_csv(const EvidenceGrid& grid) {
    std::ostringstream os;
    write_grid_csv(os, grid);
    return os.str();
}

int cmd_rb(Context& ctx) {
    const auto& c = ctx.cfg();
    const auto base = base_of(c);
    require(c.gamma > 0.0 && c.gamma < 1.0, "gamma must lie in (0, 1)");
    require(std::isfinite(c.psi0), "psi0 must be finite");
    const EvidenceGrid grid = grid_for(base, parse_target(c.target), c.psi0);
    const EvidenceReport report = evidence_report(grid, c.psi0, c.gamma);
    ctx.write("rb.csv", grid_csv(grid));
    ctx.emit("rb.json", to_json(report));
    return kExitOk;
}

BiasSettings bias_settings(const RunConfig& c) {
    BiasSettings s;
    s.target = parse_target(c.target);
    s.origin = c.psi0;
    s.reps = c.reps;
    s.seed = RngSeed{c.seed};
    s.workers = c.workers;
    check_reps(c.reps);
    require(c.delta_sep > 0.0, "delta-sep must be > 0");
    return s;
}

int cmd_bias(Context& ctx) {
    const auto& c = ctx.cfg();
    const auto base = base_of(c);
    const BiasSettings s = bias_settings(c);
    const BiasReport r = configured([&] { return bias_report(base, c.psi0, c.delta_sep, s); });
    ctx.emit("bias.json", to_json(r));
    if (c.outer_reps > 0) {
        require(c.outer_reps >= 2 && c.inner_reps >= 1, "need outer-reps >= 2, inner-reps >= 1");
        ctx.emit("bias_e.json", to_json(bias_E(base, c.delta_sep, c.outer_reps, c.inner_reps, s)));
    }
    return kExitOk;
}

std::string lindley_csv(const std::vector<LindleyRow>& rows) {
    std::ostringstream os;
    write_lindley_csv(os, rows);
    return os.str();
}

int cmd_lindley(Context& ctx) {
    const auto& c = ctx.cfg();
    const auto data = data_of(c);
    require(!c.tau0_list.empty(), "tau0-list is empty");
    const auto rows =
        configured([&] { return lindley_sweep(data, c.mu0, c.tau0_list, c.delta); });
    ctx.emit("lindley.csv", lindley_csv(rows));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Worked examples

int example2(Context& ctx) {
    const LocationNormalData data(2, 1.47, 1.0);
    const double mu0 = 2.0;
    Json j;
    j["n"] = data.n();
    j["xbar"] = data.xbar();
    j["sigma0"] = data.sigma0();
    j["mu0"] = mu0;
    j["z"] = z_statistic(data, mu0);
    j["pvalue"] = pvalue_location_normal(data, mu0);
    j["confidence_interval_95"] = intervals(confidence_interval(data, 0.05));
    ctx.emit("example2.json", dump(j));
    return kExitOk;
}

int example3(Context& ctx) {
    const auto& c = ctx.cfg();
    std::ostringstream os;
    CsvWriter csv(os, {"pvalue", "e_value"});
    for (double p : {1.0, 0.5, 0.1, 0.05, 0.01, 0.001}) csv.row(p, e_value_power(p, 0.5).value);
    ctx.write("example3.csv", os.str());

    RunConfig seq = c;
    seq.alpha = 0.05;
    seq.a = 0.5;
    seq.mu0 = 0.0;
    seq.sigma0 = 1.0;
    seq.max_steps = 1000;
    const SequentialResult r = simulate_sequential(sequential_config(seq));
    ctx.emit("example3.json", to_json(r));
    return kExitOk;
}

int example4(Context& ctx) {
    const LocationNormalData data(2, 1.47, 1.0);
    const auto grid = default_abs_grid(data, 0.01);
    const LikelihoodCurve profile = profile_curve(data, grid);
    const LikelihoodCurve integrated = integrated_curve(data, 0.5, grid);
    ctx.write("example4.csv", curves_csv({profile, integrated}));

    const double psi = 1.47;
    const double upper = psi + 12.0 * data.standard_error();
    const double mass = integrate_simpson(
        [&](double t) { return abs_mean_density(psi, 1, data.with_xbar(t)); }, 0.0, upper, 20000);
    Json j;
    j["profile_argmax"] = profile.argmax_psi();
    j["integrated_argmax"] = integrated.argmax_psi();
    j["grid_spacing"] = profile.spacing;
    j["abs_mean_density_mass"] = mass;
    ctx.emit("example4.json", dump(j));
    return kExitOk;
}

int example5(Context& ctx) {
    const ScaleNormalData data(10, 10.0, 5);
    const ScaleNormalMles m = scale_normal_mles(data);
    Json j;
    j["n"] = data.n();
    j["sx2"] = data.sx2();
    j["k"] = data.k();
    j["mle"] = m.mle;
    j["profile_mle"] = m.profile_mle;
    j["predictive_y"] = m.predictive_y;
    ctx.emit("example5.json", dump(j));
    return kExitOk;
}

int example6(Context& ctx) {
    const BayesInferenceBase base(LocationNormalData(2, 1.47, 1.0), NormalParams(0.0, 2.0), 0.01);
    const EvidenceGrid grid = build_grid(base);
    ctx.write("example6.csv", grid_csv(grid));
    ctx.emit("example6.json", to_json(evidence_report(grid, 2.0, ctx.cfg().gamma)));
    return kExitOk;
}

int example7(Context& ctx) {
    const std::int64_t big_n = 1'000'000;
    const std::int64_t small_n = 1'000;
    const UrnEvidence u = urn_evidence(big_n, small_n);
    Json j;
    j["big_n"] = big_n;
    j["small_n"] = small_n;
    j["rb"] = u.rb;
    j["posterior"] = u.posterior;
    j["jeffreys_label"] = to_string(jeffreys_label(u.rb));
    ctx.emit("example7.json", dump(j));
    return kExitOk;
}

constexpr int kLindleyN = 20;
constexpr double kLindleyZ = 5.0;

LocationNormalData lindley_data() {
    return LocationNormalData(kLindleyN, kLindleyZ / std::sqrt(double(kLindleyN)), 1.0);
}

int example8(Context& ctx) {
    const auto rows = lindley_sweep(lindley_data(), 0.0, {1.0, 10.0, 100.0, 1000.0}, 0.01);
    ctx.emit("example8.csv", lindley_csv(rows));
    return kExitOk;
}

int example9(Context& ctx) {
    const auto& c = ctx.cfg();
    BiasSettings s;
    s.target = Target::identity;
    s.origin = 0.0;
    s.reps = c.reps;
    s.seed = RngSeed{c.seed};
    s.workers = c.workers;
    check_reps(s.reps);
    std::ostringstream os;
    CsvWriter csv(os, {"tau0", "bias_against", "bias_against_se", "bias_in_favor",
                       "bias_in_favor_se", "sup_attained_at"});
    for (double tau0 : {1.0, 10.0, 100.0, 1000.0}) {
        const BayesInferenceBase base(lindley_data(), NormalParams(0.0, tau0), 0.01);
        const BiasReport r = bias_report(base, 0.0, 0.5, s);
        csv.row(tau0, r.bias_against.estimate, r.bias_against.std_error,
                r.bias_in_favor.estimate, r.bias_in_favor.std_error,
                r.sup_attained_at ? format_real(*r.sup_attained_at) : std::string());
    }
    ctx.emit("example9.csv", os.str());
    return kExitOk;
}

const std::map<std::string, std::function<int(Context&)>>& examples() {
    static const std::map<std::string, std::function<int(Context&)>> table{
        {"example2", example2}, {"example3", example3}, {"example4", example4},
        {"example5", example5}, {"example6", example6}, {"example7", example7},
        {"example8", example8}, {"example9", example9},
    };
    return table;
}

int cmd_reproduce(Context& ctx) { return examples().at(ctx.cfg().example)(ctx); }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Statistical evidence toolkit", "evidence"};
    app.fallthrough();
    app.require_subcommand(1, 1);

    app.add_option("--n", cfg.n, "Sample size")->capture_default_str();
    app.add_option("--xbar", cfg.xbar, "Observed mean")->capture_default_str();
    app.add_option("--sigma0", cfg.sigma0, "Known sampling sd")->capture_default_str();
    app.add_option("--mu0", cfg.mu0, "Null value / prior mean")->capture_default_str();
    app.add_option("--tau0", cfg.tau0, "Prior sd")->capture_default_str();
    app.add_option("--delta", cfg.delta, "Difference that matters (grid cell width)")
        ->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Level")->capture_default_str();
    app.add_option("--gamma", cfg.gamma, "Credible region content")->capture_default_str();
    app.add_option("--a", cfg.a, "Power e-value calibrator exponent")->capture_default_str();
    app.add_option("--p-sign", cfg.p_sign, "P(sign = + | psi) for the integrated likelihood")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    app.add_option("--reps", cfg.reps, "Monte Carlo replications")->capture_default_str();
    app.add_option("--output-dir", cfg.output_dir, "Directory for CSV/JSON files")
        ->envname("EVIDENCE_OUTPUT_DIR")
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "Monte Carlo threads")->capture_default_str();
    app.add_option("--psi0", cfg.psi0, "Hypothesized value of psi")->capture_default_str();
    app.add_option("--target", cfg.target, "psi = |mu| (abs) or mu (identity)")
        ->check(CLI::IsMember({"abs", "identity"}))
        ->capture_default_str();
    app.add_option("--n1", cfg.n1, "First-stage sample size")->capture_default_str();
    app.add_option("--n2", cfg.n2, "Second-stage sample size")->capture_default_str();
    app.add_option("--max-steps", cfg.max_steps, "e-process horizon")->capture_default_str();
    app.add_option("--delta-sep", cfg.delta_sep, "Separation for bias in favor")
        ->capture_default_str();
    app.add_option("--tau0-list", cfg.tau0_list, "Prior sds for the lindley sweep")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--k", cfg.k, "Number of future values (scale model)")->capture_default_str();
    app.add_option("--sx2", cfg.sx2, "Sum of squares (scale model)")->capture_default_str();
    app.add_option("--outer-reps", cfg.outer_reps, "bias: outer replications for E-biases (0 = skip)")
        ->capture_default_str();
    app.add_option("--inner-reps", cfg.inner_reps, "bias: inner replications for E-biases")
        ->capture_default_str();

    const std::map<std::string, std::function<int(Context&)>> handlers{
        {"pvalue", cmd_pvalue},       {"confint", cmd_confint}, {"two-stage", cmd_two_stage},
        {"eprocess", cmd_eprocess},   {"likelihood", cmd_likelihood}, {"rb", cmd_rb},
        {"bias", cmd_bias},           {"lindley", cmd_lindley}, {"reproduce", cmd_reproduce},
    };
    const std::map<std::string, std::string> help{
        {"pvalue", "Two-sided p-value for H0: mu = mu0"},
        {"confint", "1 - alpha confidence interval for mu"},
        {"two-stage", "Rejection rate of the two-look p-value procedure under H0"},
        {"eprocess", "Sequential e-process simulation under H0"},
        {"likelihood", "Profile and integrated likelihood curves for |mu|"},
        {"rb", "Relative belief evidence report on the delta grid"},
        {"bias", "Bias against / in favor of psi0"},
        {"lindley", "RB and strength of mu0 across prior sds"},
        {"reproduce", "Run one worked example"},
    };
    for (const auto& [name, text] : help) {
        auto* sub = app.add_subcommand(name, text);
        if (name == "reproduce") {
            std::vector<std::string> names;
            for (const auto& e : examples()) names.push_back(e.first);
            sub->add_option("example", cfg.example, "example2 ... example9")
                ->required()
                ->check(CLI::IsMember(names));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    try {
        require(cfg.workers >= 1, "workers must be >= 1");
        Context ctx(cfg, out);
        return handlers.at(cfg.subcommand)(ctx);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
}

}  // namespace evidence::cli
