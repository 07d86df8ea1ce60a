#include "prodmatch/reports.hpp"

#include <json.hpp>

namespace prodmatch {

namespace {

using nlohmann::json;

json rat_json(const BigRat& q) {
    json j;
    j["num"] = to_decimal(numerator(q));
    j["den"] = to_decimal(denominator(q));
    j["approx"] = q.convert_to<double>();
    return j;
}

json edge_json(const ProductSpace& space, const Edge& e) {
    json arr = json::array();
    for (const Vertex& v : edge_vertices(space, e)) arr.push_back(format_vertex(v));
    return arr;
}

json edges_json(const ProductSpace& space, const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(edge_json(space, e));
    return arr;
}

json certificate_obj(const ProductSpace& space, const MatchingCertificate& cert) {
    json j;
    j["size"] = cert.edges.size();
    j["edges"] = edges_json(space, cert.edges);
    if (!cert.family_indices.empty()) j["families"] = cert.family_indices;
    return j;
}

json space_obj(const ProductSpace& space) {
    json j;
    j["n"] = space.part_sizes();
    j["k"] = space.uniformities();
    return j;
}

std::string finish(json j) {
    j["schema"] = 1;
    return j.dump();
}

} // namespace

std::string certificate_json(const ProductSpace& space, const MatchingCertificate& cert) {
    return finish(certificate_obj(space, cert));
}

std::string matching_result_json(const ProductSpace& space, const MatchingResult& result) {
    json j;
    j["nu"] = result.value;
    j["capped"] = result.capped;
    j["witness"] = certificate_obj(space, result.witness);
    return finish(std::move(j));
}

std::string rainbow_result_json(const ProductSpace& space, const RainbowResult& result) {
    json j;
    j["found"] = result.found;
    if (result.found) j["witness"] = certificate_obj(space, result.witness);
    return finish(std::move(j));
}

std::string overlap_result_json(const ProductSpace& space, const OverlapResult& result, int s) {
    json j;
    j["s"] = s;
    j["holds"] = result.holds;
    if (result.counterexample) j["counterexample"] = certificate_obj(space, *result.counterexample);
    return finish(std::move(j));
}

std::string bound_report_json(const BoundReport& report) {
    json j;
    j["name"] = report.name;
    j["n"] = report.n;
    j["k"] = report.k;
    j["s"] = report.s;
    if (report.m) j["families"] = *report.m;
    if (denominator(report.value) == 1) {
        j["value"] = to_decimal(numerator(report.value));
    } else {
        j["value"] = rat_json(report.value);
        j["floor"] = to_decimal(report.floor_value);
    }
    if (report.witness_part) j["witness_part"] = *report.witness_part;
    if (report.witness_branch) j["witness_branch"] = *report.witness_branch;
    if (report.part_order) j["part_order"] = *report.part_order;
    if (report.clamped) j["clamped"] = true;
    if (report.vacuous) j["vacuous"] = true;
    return finish(std::move(j));
}

std::string composition_min_json(const std::vector<int>& n, const std::vector<int>& k,
                                 int total, const std::string& method,
                                 const CompositionMin& result) {
    json j;
    j["name"] = "composition-min";
    j["n"] = n;
    j["k"] = k;
    j["total"] = total;
    j["method"] = method;
    j["value"] = to_decimal(result.value);
    j["argmin"] = result.argmin;
    if (result.clamped) j["clamped"] = true;
    return finish(std::move(j));
}

std::string ratio_chain_json(const RatioChainReport& report) {
    json j;
    j["name"] = "ratio-chain";
    j["n"] = report.n;
    j["k"] = report.k;
    j["s"] = report.s;
    j["set_ratio"] = rat_json(report.set_ratio);
    j["power_term"] = rat_json(report.power_term);
    j["linear_term"] = rat_json(report.linear_term);
    j["link1"] = report.link1;
    j["link2"] = report.link2;
    j["link3"] = report.link3;
    j["all_hold"] = report.all_hold;
    return finish(std::move(j));
}

std::string spectrum_report_json(const SpectrumReport& report) {
    json j;
    json pairs = json::array();
    for (const auto& [value, mult] : report.pairs)
        pairs.push_back({to_decimal(value), to_decimal(mult)});
    j["pairs"] = std::move(pairs);
    j["degree"] = to_decimal(report.degree);
    j["vertices"] = to_decimal(report.vertex_count);
    j["lambda"] = to_decimal(report.lambda);
    j["degenerate"] = report.degenerate;
    if (report.lambda_ratio_identity) j["lambda_ratio_identity"] = *report.lambda_ratio_identity;
    return finish(std::move(j));
}

std::string mixing_report_json(const MixingReport& report) {
    json j;
    j["edges_within"] = to_decimal(report.edges_within);
    j["subset_size"] = to_decimal(report.subset_size);
    j["vertices"] = to_decimal(report.vertex_count);
    j["degree"] = to_decimal(report.degree);
    j["lambda"] = to_decimal(report.lambda);
    j["lhs"] = rat_json(report.lhs);
    j["rhs"] = rat_json(report.rhs);
    j["holds"] = report.holds;
    return finish(std::move(j));
}

std::string shift_summary_json(const ProductSpace& space, std::size_t family_size,
                               const ShiftLog& log) {
    json j;
    j["space"] = space_obj(space);
    j["size"] = family_size;
    j["passes"] = log.passes;
    j["steps"] = log.steps.size();
    std::size_t moved = 0;
    for (const auto& step : log.steps) moved += step.moved;
    j["moved"] = moved;
    return finish(std::move(j));
}

std::string shift_log_jsonl(const ShiftLog& log) {
    std::string out;
    for (const auto& step : log.steps) {
        json j;
        j["a"] = format_vertex(step.a);
        j["b"] = format_vertex(step.b);
        j["moved"] = step.moved;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string sample_report_json(const ProductSpace& space, const std::vector<Edge>& edges) {
    json j;
    j["space"] = space_obj(space);
    j["m"] = edges.size();
    j["edges"] = edges_json(space, edges);
    return finish(std::move(j));
}

std::string averaging_report_json(const AveragingReport& report) {
    json j;
    j["m"] = report.m;
    j["trials"] = report.trials;
    j["nu"] = report.nu_value;
    j["exact_slice_mean"] = rat_json(report.exact_slice_mean);
    j["sample_slice_mean"] = rat_json(report.sample_slice_mean);
    j["sample_mean"] = rat_json(report.sample_mean);
    j["sample_variance"] = rat_json(report.sample_variance);
    j["mean_within_band"] = report.mean_within_band;
    j["sum_checked"] = report.sum_checked;
    j["sum_threshold"] = to_decimal(report.sum_threshold);
    j["sum_violations"] = report.sum_violations;
    j["pass"] = report.pass;
    return finish(std::move(j));
}

std::string concentration_report_json(const ConcentrationReport& report) {
    json j;
    j["m"] = report.m;
    j["s"] = report.s;
    j["trials"] = report.trials;
    j["alpha"] = rat_json(report.alpha);
    j["sum_x"] = to_decimal(report.sum_x);
    j["sum_x2"] = to_decimal(report.sum_x2);
    j["sample_mean"] = rat_json(report.sample_mean);
    j["sample_variance"] = rat_json(report.sample_variance);
    j["expected_mean"] = rat_json(report.expected_mean);
    j["variance_bound"] = rat_json(report.variance_bound);
    j["variance_within_bound"] = report.variance_within_bound;
    j["mean_within_band"] = report.mean_within_band;
    j["tail_count"] = report.tail_count;
    j["tail_freq"] = rat_json(report.tail_freq);
    j["tail_threshold"] = rat_json(report.tail_threshold);
    j["tail_applicable"] = report.tail_applicable;
    j["tail_verdict"] = report.tail_verdict;
    j["pass"] = report.pass;
    return finish(std::move(j));
}

std::string rainbow_run_report_json(const ProductSpace& space, const RainbowRunReport& report) {
    json j;
    j["m"] = report.m;
    j["s"] = report.s;
    j["trials"] = report.trials;
    j["threshold"] = to_decimal(report.threshold);
    j["clear_per_family"] = report.clear_count_per_family;
    j["all_clear_trials"] = report.all_clear_trials;
    j["certificates_found"] = report.certificates_found;
    j["extraction_failures"] = report.extraction_failures;
    if (report.sample_certificate)
        j["sample_certificate"] = certificate_obj(space, *report.sample_certificate);
    j["pass"] = report.pass;
    return finish(std::move(j));
}

std::string family_search_json(const ProductSpace& space, const FamilySearchResult& result) {
    json j;
    j["problem"] = "matching";
    j["max_size"] = result.best_size;
    if (result.witness) j["witness"] = edges_json(space, std::vector<Edge>(result.witness->edges().begin(), result.witness->edges().end()));
    return finish(std::move(j));
}

std::string tuple_search_json(const ProductSpace& space, const TupleSearchResult& result) {
    json j;
    j["problem"] = "rainbow";
    j["max_min_size"] = result.best_min_size;
    if (result.witness) {
        json fams = json::array();
        for (const Family& f : result.witness->families())
            fams.push_back(edges_json(space, std::vector<Edge>(f.edges().begin(), f.edges().end())));
        j["witness"] = std::move(fams);
    }
    return finish(std::move(j));
}

std::string verdict_report_json(const ProductSpace& space, const VerdictReport& report) {
    json j;
    j["theorem"] = report.theorem;
    j["s"] = report.s;
    j["space"] = space_obj(space);
    j["threshold_satisfied"] = report.threshold_satisfied;
    j["bound"] = to_decimal(report.bound_value);
    j["search_max"] = report.search_max;
    j["bound_holds"] = report.bound_holds;
    j["attained"] = report.attained;
    j["vacuous"] = report.vacuous;
    if (report.search_witness)
        j["search_witness"] = edges_json(space, std::vector<Edge>(report.search_witness->edges().begin(), report.search_witness->edges().end()));
    if (report.search_seconds) j["seconds"] = *report.search_seconds;
    return finish(std::move(j));
}

std::string construct_summary_json(const std::string& path, std::size_t size) {
    json j;
    j["written"] = path;
    j["size"] = size;
    return finish(std::move(j));
}

} // namespace prodmatch
