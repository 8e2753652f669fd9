#include "evidence/report_io.hpp"

#include "evidence/csv.hpp"

#include <json.hpp>

#include <cstdio>

namespace evidence {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& os, std::initializer_list<std::string_view> header)
    : os_(os) {
    bool first = true;
    for (auto h : header) {
        os_ << (first ? "" : ",") << h;
        first = false;
    }
    os_ << '\n';
}

namespace {

using Json = nlohmann::ordered_json;

Json intervals(const IntervalSet& set) {
    Json out = Json::array();
    for (const auto& p : set) out.push_back({p.lo, p.hi});
    return out;
}

Json optional_real(const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const EvidenceReport& r) {
    Json j;
    j["psi0"] = r.psi0;
    j["estimate"] = r.estimate;
    j["plausible"] = intervals(r.plausible);
    j["plausible_content"] = r.plausible_content;
    j["rb_at_hypothesis"] = r.rb_at_hypothesis;
    j["strength"] = r.strength;
    j["gamma"] = r.gamma;
    j["credible"] = r.credible ? intervals(*r.credible) : Json(nullptr);
    j["credible_contained"] = r.credible_contained;
    j["credible_candidate"] = intervals(r.credible_candidate);
    j["bf_at_hypothesis"] = r.bf_at_hypothesis;
    j["jeffreys_label"] = to_string(r.jeffreys_label);
    return dump(j);
}

std::string to_json(const BiasReport& r) {
    Json j;
    j["bias_against"] = r.bias_against.estimate;
    j["bias_against_se"] = r.bias_against.std_error;
    j["bias_in_favor"] = r.bias_in_favor.estimate;
    j["bias_in_favor_se"] = r.bias_in_favor.std_error;
    j["psi0"] = r.psi0;
    j["delta"] = r.delta;
    j["delta_sep"] = r.delta_sep;
    j["reps"] = r.reps;
    j["seed"] = r.seed.value;
    j["sup_attained_at"] = optional_real(r.sup_attained_at);
    j["candidate_spacing"] = r.candidate_spacing;
    j["candidate_count"] = r.candidate_count;
    j["candidates_empty"] = r.candidates_empty;
    j["target"] = to_string(r.target);
    j["rng"] = r.rng;
    return dump(j);
}

std::string to_json(const BiasE& r) {
    Json j;
    j["bias_against_e"] = r.bias_against_E.mean;
    j["bias_against_e_se"] = r.bias_against_E.std_error;
    j["plausible_coverage"] = r.plausible_coverage.mean;
    j["plausible_coverage_se"] = r.plausible_coverage.std_error;
    j["bias_in_favor_e"] = r.bias_in_favor_E.mean;
    j["bias_in_favor_e_se"] = r.bias_in_favor_E.std_error;
    j["outer_reps"] = r.outer_reps;
    j["inner_reps"] = r.inner_reps;
    return dump(j);
}

std::string to_json(const SequentialResult& r) {
    Json j;
    j["rejection_rate"] = r.rejection_rate.estimate;
    j["rejection_rate_se"] = r.rejection_rate.std_error;
    j["reps"] = r.rejection_rate.reps;
    j["stopped_mean"] = r.stopped_mean.mean;
    j["stopped_mean_se"] = r.stopped_mean.std_error;
    Json means = Json::array();
    Json ses = Json::array();
    for (const auto& m : r.product_means) {
        means.push_back(m.mean);
        ses.push_back(m.std_error);
    }
    j["product_means"] = means;
    j["product_means_se"] = ses;
    return dump(j);
}

}  // namespace evidence
