// prodmatch: batch verification CLI over the core library.
//
// Every subcommand is a thin adapter around one library call and prints a
// single-line JSON report to stdout. Exit codes: 0 success / property holds,
// 1 a checked property was violated (a finding, not a crash), 2 bad input,
// 3 a resource cap was hit.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prodmatch/bounds.hpp"
#include "prodmatch/constructions.hpp"
#include "prodmatch/errors.hpp"
#include "prodmatch/family.hpp"
#include "prodmatch/matching.hpp"
#include "prodmatch/montecarlo.hpp"
#include "prodmatch/reports.hpp"
#include "prodmatch/rng.hpp"
#include "prodmatch/search.hpp"
#include "prodmatch/shifting.hpp"
#include "prodmatch/spectral.hpp"

namespace {

using namespace prodmatch;

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::uint64_t trials = 10000;
    std::uint64_t cap = kDefaultEnumerationCap;
    int threads = 1;
    bool quiet = false;
};

void note(const GlobalOpts& g, const std::string& msg) {
    if (!g.quiet) std::cerr << msg << '\n';
}

ProductSpace make_space(const std::vector<int>& n, const std::vector<int>& k) {
    return ProductSpace(n, k);
}

void emit(const std::string& doc) { std::cout << doc << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open for writing: " + path);
    out << text;
}

// ---- bound ----------------------------------------------------------------

struct BoundArgs {
    std::string formula;
    std::vector<int> n;
    std::vector<int> k;
    int s = 0;
    int m = 0;
    bool m_given = false;
    int total = 0;
    bool total_given = false;
    std::string method = "vertex";
};

int single(const std::vector<int>& v, const char* what) {
    if (v.size() != 1) throw InputError(std::string(what) + " expects a single part");
    return v.front();
}

int run_bound(const BoundArgs& a, const GlobalOpts& g) {
    if (a.formula == "emc") {
        emit(bound_report_json(emc_bound(single(a.n, "emc"), single(a.k, "emc"), a.s)));
    } else if (a.formula == "product-matching") {
        emit(bound_report_json(product_matching_bound(a.n, a.k, a.s)));
    } else if (a.formula == "product-rainbow") {
        emit(bound_report_json(product_rainbow_bound(a.n, a.k, a.s)));
    } else if (a.formula == "overlapping-sum") {
        if (!a.m_given) throw InputError("overlapping-sum requires --m");
        emit(bound_report_json(
            overlapping_sum_bound(single(a.n, "overlapping-sum"), single(a.k, "overlapping-sum"), a.s, a.m)));
    } else if (a.formula == "averaging") {
        emit(bound_report_json(averaging_bound(a.n, a.k, a.s)));
    } else if (a.formula == "rainbow-threshold") {
        emit(bound_report_json(rainbow_threshold_bound(a.n, a.k, a.s)));
    } else if (a.formula == "claim1") {
        emit(bound_report_json(claim1_bound(a.n, a.k, a.s)));
    } else if (a.formula == "composition-min") {
        if (!a.total_given) throw InputError("composition-min requires --total");
        CompositionMin result;
        if (a.method == "vertex") {
            result = composition_min(a.n, a.k, a.total);
        } else if (a.method == "enumerate") {
            result = composition_min_enumerated(a.n, a.k, a.total, g.cap);
        } else {
            throw InputError("unknown --method: " + a.method);
        }
        emit(composition_min_json(a.n, a.k, a.total, a.method, result));
    } else if (a.formula == "ratio-chain") {
        RatioChainReport report =
            check_ratio_inequality(single(a.n, "ratio-chain"), single(a.k, "ratio-chain"), a.s);
        emit(ratio_chain_json(report));
        return report.all_hold ? 0 : 1;
    } else {
        throw InputError("unknown --formula: " + a.formula);
    }
    return 0;
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
    std::string kind = "cover";
    std::vector<int> n;
    std::vector<int> k;
    int part = 1;
    int size = 0;
    int s = 0;
    std::uint64_t count = 0;
    std::string out;
};

int run_construct(const ConstructArgs& a, const GlobalOpts& g) {
    ProductSpace space = make_space(a.n, a.k);
    Family family(space);
    if (a.kind == "cover") {
        family = build_cover_family(space, CoverSpec{a.part, a.size}, g.cap);
    } else if (a.kind == "clique") {
        family = build_clique_family(space, a.s, g.cap);
    } else if (a.kind == "random") {
        family = random_family(space, a.count, g.seed, g.cap);
    } else {
        throw InputError("unknown --kind: " + a.kind);
    }
    save_family(family, a.out);
    emit(construct_summary_json(a.out, family.size()));
    return 0;
}

// ---- family-file subcommands ----------------------------------------------

int run_nu(const std::string& path, std::optional<int> cap) {
    Family family = load_family(path);
    MatchingResult result = matching_number(family, cap);
    emit(matching_result_json(family.space(), result));
    return 0;
}

int run_rainbow(const std::vector<std::string>& paths, std::optional<int> overlapping) {
    std::vector<Family> families;
    families.reserve(paths.size());
    for (const auto& p : paths) families.push_back(load_family(p));
    if (overlapping) {
        OverlapResult result = is_s_overlapping(families, *overlapping);
        emit(overlap_result_json(families.front().space(), result, *overlapping));
        return result.holds ? 0 : 1;
    }
    FamilyTuple tuple(families);
    RainbowResult result = has_rainbow_matching(tuple);
    emit(rainbow_result_json(tuple.space(), result));
    return 0;
}

struct ShiftArgs {
    std::vector<std::string> files;
    std::string out;
    std::string out_dir;
    std::string log;
};

int run_shift(const ShiftArgs& a) {
    if (a.files.size() == 1) {
        Family family = load_family(a.files.front());
        auto [shifted, log] = shift_to_fixpoint(family);
        if (!a.out.empty()) save_family(shifted, a.out);
        if (!a.log.empty()) write_text(a.log, shift_log_jsonl(log));
        emit(shift_summary_json(family.space(), family.size(), log));
        return 0;
    }
    std::vector<Family> families;
    for (const auto& p : a.files) families.push_back(load_family(p));
    FamilyTuple tuple(families);
    auto [shifted, log] = shift_tuple_to_fixpoint(tuple);
    if (!a.out_dir.empty()) {
        std::filesystem::create_directories(a.out_dir);
        for (std::size_t t = 0; t < a.files.size(); ++t) {
            auto name = std::filesystem::path(a.files[t]).filename();
            save_family(shifted.families()[t], (std::filesystem::path(a.out_dir) / name).string());
        }
    }
    if (!a.log.empty()) write_text(a.log, shift_log_jsonl(log));
    std::size_t total = 0;
    for (const auto& f : families) total += f.size();
    emit(shift_summary_json(tuple.space(), total, log));
    return 0;
}

int run_spectrum(const std::vector<int>& n, const std::vector<int>& k) {
    SpectrumReport report =
        n.size() == 1 ? kneser_spectrum(n.front(), k.front()) : product_graph_spectrum(n, k);
    emit(spectrum_report_json(report));
    if (report.lambda_ratio_identity && !*report.lambda_ratio_identity) return 1;
    return 0;
}

int run_mixing(const std::string& path, const std::string& lambda, const GlobalOpts& g) {
    Family family = load_family(path);
    std::optional<BigInt> forced;
    if (!lambda.empty()) forced = BigInt(lambda);
    MixingReport report = mixing_audit(family, forced, g.threads);
    emit(mixing_report_json(report));
    return report.holds ? 0 : 1;
}

struct SampleArgs {
    std::vector<int> n;
    std::vector<int> k;
    int m = 1;
    int first = 1;
    int last = 0; // 0: highest part
};

int run_sample(const SampleArgs& a, const GlobalOpts& g) {
    ProductSpace space = make_space(a.n, a.k);
    int last = a.last == 0 ? space.part_count() : a.last;
    Xoshiro256StarStar rng(g.seed, 0);
    std::vector<Edge> edges = sample_matching(space, a.first, last, a.m, rng);
    emit(sample_report_json(space, edges));
    return 0;
}

struct ConcentrateArgs {
    std::vector<std::string> files;
    std::string mode = "tail";
    int s = 0;
    bool s_given = false;
    std::string csv;
};

int run_concentrate(const ConcentrateArgs& a, const GlobalOpts& g) {
    if (a.files.size() > 1) {
        std::vector<Family> families;
        for (const auto& p : a.files) families.push_back(load_family(p));
        FamilyTuple tuple(families);
        RainbowRunReport report = rainbow_run(tuple, g.trials, g.seed, g.threads);
        emit(rainbow_run_report_json(tuple.space(), report));
        return report.pass ? 0 : 1;
    }
    Family family = load_family(a.files.front());
    if (a.mode == "averaging") {
        AveragingReport report = averaging_check(family, g.trials, g.seed, g.threads);
        emit(averaging_report_json(report));
        return report.pass ? 0 : 1;
    }
    if (a.mode != "tail") throw InputError("unknown --mode: " + a.mode);
    if (!a.s_given) throw InputError("concentrate --mode tail requires --s");
    ConcentrationReport report = concentration_run(family, a.s, g.trials, g.seed, g.threads);
    if (!a.csv.empty()) {
        std::string lines = "x\n";
        for (auto x : report.samples) lines += std::to_string(x) + "\n";
        write_text(a.csv, lines);
        note(g, "raw samples written to " + a.csv);
    }
    emit(concentration_report_json(report));
    return report.pass ? 0 : 1;
}

struct SearchArgs {
    std::vector<int> n;
    std::vector<int> k;
    int s = 0;
    std::string problem = "matching";
    std::string mode = "exhaustive";
    bool shifted = false;
    bool shifted_given = false;
};

int run_search(const SearchArgs& a) {
    ProductSpace space = make_space(a.n, a.k);
    SearchMode mode;
    if (a.mode == "exhaustive") {
        mode = SearchMode::exhaustive;
    } else if (a.mode == "bb") {
        mode = SearchMode::branch_and_bound;
    } else {
        throw InputError("unknown --mode: " + a.mode);
    }
    if (a.problem == "matching") {
        bool shifted = a.shifted_given ? a.shifted : false;
        FamilySearchResult result = max_family_with_matching_cap(space, a.s, mode, shifted);
        emit(family_search_json(space, result));
        return 0;
    }
    if (a.problem != "rainbow") throw InputError("unknown --problem: " + a.problem);
    bool shifted = a.shifted_given ? a.shifted : true;
    TupleSearchResult result = max_rainbow_free_tuple(space, a.s, mode, shifted);
    emit(tuple_search_json(space, result));
    return 0;
}

struct VerifyArgs {
    std::vector<int> n;
    std::vector<int> k;
    int s = 0;
    std::string theorem = "matching";
    bool timings = false;
};

int run_verify(const VerifyArgs& a) {
    ProductSpace space = make_space(a.n, a.k);
    TheoremKind kind;
    if (a.theorem == "matching") {
        kind = TheoremKind::matching;
    } else if (a.theorem == "rainbow") {
        kind = TheoremKind::rainbow;
    } else {
        throw InputError("unknown --theorem: " + a.theorem);
    }
    VerdictReport report = verify_theorem(space, a.s, kind, a.timings);
    emit(verdict_report_json(space, report));
    return report.bound_holds ? 0 : 1;
}

void add_nk(CLI::App* sub, std::vector<int>& n, std::vector<int>& k) {
    sub->add_option("--n", n, "part sizes, comma separated")->delimiter(',')->required();
    sub->add_option("--k", k, "uniformities, comma separated")->delimiter(',')->required();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and randomized checks for matchings in direct products of set systems"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed (default 0)");
    app.add_option("--trials", g.trials, "Monte Carlo trial count (default 10000)");
    app.add_option("--cap", g.cap, "enumeration cap (default 10^7)");
    app.add_option("--threads", g.threads, "worker threads (default 1)");
    app.add_flag("--quiet", g.quiet, "suppress log lines on stderr");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "JSON reports to stdout (the default; accepted for scripts)");

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "evaluate a bound formula exactly");
    bound_cmd->add_option("--formula", bound.formula,
                          "emc | product-matching | product-rainbow | overlapping-sum | averaging | "
                          "rainbow-threshold | claim1 | composition-min | ratio-chain")
        ->required();
    add_nk(bound_cmd, bound.n, bound.k);
    bound_cmd->add_option("--s", bound.s, "matching / rainbow parameter");
    auto* m_opt = bound_cmd->add_option("--m", bound.m, "family count (overlapping-sum)");
    auto* total_opt = bound_cmd->add_option("--total", bound.total, "composition total (composition-min)");
    bound_cmd->add_option("--method", bound.method, "vertex | enumerate (composition-min)");

    ConstructArgs construct;
    auto* construct_cmd = app.add_subcommand("construct", "write a family file");
    construct_cmd->add_option("--kind", construct.kind, "cover | clique | random");
    add_nk(construct_cmd, construct.n, construct.k);
    construct_cmd->add_option("--part", construct.part, "cover: part index (1-based)");
    construct_cmd->add_option("--size", construct.size, "cover: cover-set size");
    construct_cmd->add_option("--s", construct.s, "clique: matching number");
    construct_cmd->add_option("--count", construct.count, "random: number of edges");
    construct_cmd->add_option("--out", construct.out, "output family file")->required();

    std::string nu_file;
    int nu_cap = 0;
    auto* nu_cmd = app.add_subcommand("nu", "matching number of a family file");
    nu_cmd->add_option("file", nu_file, "family file")->required();
    auto* nu_cap_opt = nu_cmd->add_option("--cap", nu_cap, "stop once nu is known to exceed this");

    std::vector<std::string> rainbow_files;
    int overlap_s = 0;
    auto* rainbow_cmd = app.add_subcommand("rainbow", "rainbow matching over a tuple of family files");
    rainbow_cmd->add_option("files", rainbow_files, "family files, one per color")->required();
    auto* overlap_opt =
        rainbow_cmd->add_option("--overlapping", overlap_s, "instead check the list is s-overlapping");

    ShiftArgs shift;
    auto* shift_cmd = app.add_subcommand("shift", "compress to a shifting fixpoint");
    shift_cmd->add_option("files", shift.files, "family file(s); several shift in lockstep")->required();
    shift_cmd->add_option("--out", shift.out, "write the shifted family (single file mode)");
    shift_cmd->add_option("--out-dir", shift.out_dir, "write shifted families here (lockstep mode)");
    shift_cmd->add_option("--log", shift.log, "write the step log as JSON lines");

    std::vector<int> spectrum_n, spectrum_k;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "exact disjointness-graph spectrum");
    add_nk(spectrum_cmd, spectrum_n, spectrum_k);

    std::string mixing_file, mixing_lambda;
    auto* mixing_cmd = app.add_subcommand("mixing", "audit the mixing inequality on a subset");
    mixing_cmd->add_option("file", mixing_file, "family file (the subset S)")->required();
    mixing_cmd->add_option("--lambda", mixing_lambda, "override the spectral bound");

    SampleArgs sample;
    auto* sample_cmd = app.add_subcommand("sample", "draw one random partial matching");
    add_nk(sample_cmd, sample.n, sample.k);
    sample_cmd->add_option("--m", sample.m, "number of blocks")->required();
    sample_cmd->add_option("--first-part", sample.first, "first covered part (default 1)");
    sample_cmd->add_option("--last-part", sample.last, "last covered part (default: highest)");

    ConcentrateArgs concentrate;
    auto* concentrate_cmd =
        app.add_subcommand("concentrate", "Monte Carlo averaging / concentration / rainbow runs");
    concentrate_cmd->add_option("files", concentrate.files, "one family (statistics) or s families (rainbow run)")
        ->required();
    concentrate_cmd->add_option("--mode", concentrate.mode, "tail | averaging (single file)");
    auto* conc_s_opt = concentrate_cmd->add_option("--s", concentrate.s, "tail mode: target matching number");
    concentrate_cmd->add_option("--csv", concentrate.csv, "write raw per-trial X values as CSV");

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "exact extremal search on a tiny space");
    add_nk(search_cmd, search.n, search.k);
    search_cmd->add_option("--s", search.s, "matching / rainbow parameter")->required();
    search_cmd->add_option("--problem", search.problem, "matching | rainbow");
    search_cmd->add_option("--mode", search.mode, "exhaustive | bb");
    auto* shifted_opt =
        search_cmd->add_flag("--shifted,!--no-shifted", search.shifted, "restrict to shifted families");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "search vs. bound verdict for one theorem");
    add_nk(verify_cmd, verify.n, verify.k);
    verify_cmd->add_option("--s", verify.s, "parameter")->required();
    verify_cmd->add_option("--theorem", verify.theorem, "matching | rainbow")->required();
    verify_cmd->add_flag("--timings", verify.timings, "include wall-clock seconds in the report");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message and usage hint to stderr
        return 2;
    }

    bound.m_given = m_opt->count() > 0;
    bound.total_given = total_opt->count() > 0;
    concentrate.s_given = conc_s_opt->count() > 0;
    search.shifted_given = shifted_opt->count() > 0;

    try {
        if (bound_cmd->parsed()) return run_bound(bound, g);
        if (construct_cmd->parsed()) return run_construct(construct, g);
        if (nu_cmd->parsed())
            return run_nu(nu_file, nu_cap_opt->count() > 0 ? std::optional<int>(nu_cap) : std::nullopt);
        if (rainbow_cmd->parsed())
            return run_rainbow(rainbow_files,
                               overlap_opt->count() > 0 ? std::optional<int>(overlap_s) : std::nullopt);
        if (shift_cmd->parsed()) return run_shift(shift);
        if (spectrum_cmd->parsed()) return run_spectrum(spectrum_n, spectrum_k);
        if (mixing_cmd->parsed()) return run_mixing(mixing_file, mixing_lambda, g);
        if (sample_cmd->parsed()) return run_sample(sample, g);
        if (concentrate_cmd->parsed()) return run_concentrate(concentrate, g);
        if (search_cmd->parsed()) return run_search(search);
        if (verify_cmd->parsed()) return run_verify(verify);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
