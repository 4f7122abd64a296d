// lcskit -- command-line front end for the k-length-substring similarity
// measures: pairwise scores with optional tracebacks, all-pairs matrices,
// brute-force cross-checking and scaling benchmarks.
//
// Exit codes: 0 success, 1 usage or guard error, 2 input/output error,
// 3 documented oracle discrepancy (edk, k >= 3), 4 asserted oracle
// mismatch (never expected).

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcsk/bench.hpp"
#include "lcsk/edk.hpp"
#include "lcsk/fasta.hpp"
#include "lcsk/lcsk.hpp"
#include "lcsk/matrix.hpp"
#include "lcsk/oracle_check.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::size_t k = 1;
    std::string a;
    std::string b;
    std::string mode = "full";
    bool traceback = false;
    std::string format = "json";
    bool uppercase = false;
};

lcsk::OpsMode parse_mode(const std::string& mode) {
    if (mode == "full") return lcsk::OpsMode::Full;
    if (mode == "indel") return lcsk::OpsMode::IndelOnly;
    throw std::invalid_argument("unknown mode: " + mode);
}

lcsk::Metric parse_metric(const std::string& metric) {
    if (metric == "lcsk") return lcsk::Metric::Lcsk;
    if (metric == "edk") return lcsk::Metric::Edk;
    throw std::invalid_argument("unknown metric: " + metric);
}

// An argument is either an inline sequence or @path; a referenced file may
// be plain text or single-record FASTA.
lcsk::Sequence resolve_sequence(const std::string& arg, const char* name,
                                lcsk::NormalizeOptions opts) {
    if (arg.empty() || arg.front() != '@')
        return lcsk::normalize(arg, opts, name);
    const std::string path = arg.substr(1);
    lcsk::Dataset ds = lcsk::load_dataset(path, opts);
    ds.records.erase(
        std::remove_if(ds.records.begin(), ds.records.end(),
                       [](const lcsk::Sequence& s) { return s.empty(); }),
        ds.records.end());
    if (ds.records.size() != 1)
        throw lcsk::ParseError(path +
                               ": expected exactly one non-empty sequence");
    return ds.records.front();
}

json span_to_json(const lcsk::KMatchSpan& s) {
    return json{{"a_start", s.a_start}, {"b_start", s.b_start}, {"len", s.len}};
}

json op_to_json(const lcsk::EditOp& op) {
    json j;
    switch (op.kind) {
        case lcsk::EditKind::Insert: j["op"] = "insert"; break;
        case lcsk::EditKind::Delete: j["op"] = "delete"; break;
        case lcsk::EditKind::Substitute: j["op"] = "substitute"; break;
        case lcsk::EditKind::KMatch: j["op"] = "kmatch"; break;
    }
    if (op.a_pos) j["a_pos"] = *op.a_pos;
    if (op.b_pos) j["b_pos"] = *op.b_pos;
    j["len"] = op.len;
    return j;
}

void warn_degenerate_k(const CommonOpts& opts, const lcsk::Sequence& a,
                       const lcsk::Sequence& b) {
    if (opts.k > std::min(a.size(), b.size()))
        std::cerr << "warning: k=" << opts.k
                  << " exceeds the shorter input (|a|=" << a.size()
                  << ", |b|=" << b.size() << "); score is 0 by definition\n";
}

int run_pairwise(const std::string& metric, const CommonOpts& opts) {
    const lcsk::Params params(opts.k);
    const lcsk::NormalizeOptions norm{.uppercase = opts.uppercase};
    const lcsk::Sequence a = resolve_sequence(opts.a, "a", norm);
    const lcsk::Sequence b = resolve_sequence(opts.b, "b", norm);
    warn_degenerate_k(opts, a, b);

    json out;
    out["metric"] = metric;
    out["k"] = opts.k;
    std::size_t score = 0;
    if (metric == "lcsk") {
        if (opts.traceback) {
            const lcsk::LcskResult r = lcsk::lcsk_traceback(a, b, params.k);
            score = r.length;
            out["score"] = score;
            if (opts.format == "json") {
                json matches = json::array();
                for (const auto& s : r.matches) matches.push_back(span_to_json(s));
                out["matches"] = std::move(matches);
            }
        } else {
            score = lcsk::lcsk_score(a, b, params.k);
            out["score"] = score;
        }
    } else {
        const lcsk::OpsMode mode = parse_mode(opts.mode);
        if (opts.traceback) {
            const lcsk::EdkResult r = lcsk::edk_traceback(a, b, params.k, mode);
            score = r.distance;
            out["score"] = score;
            if (opts.format == "json") {
                json script = json::array();
                for (const auto& op : r.script) script.push_back(op_to_json(op));
                out["script"] = std::move(script);
            }
        } else {
            score = lcsk::edk_score(a, b, params.k, mode);
            out["score"] = score;
        }
    }

    if (opts.format == "tsv") {
        if (opts.traceback)
            std::cerr << "warning: traceback is omitted in tsv format\n";
        std::cout << metric << '\t' << opts.k << '\t' << score << '\n';
    } else {
        std::cout << out.dump() << '\n';
    }
    return 0;
}

int run_matrix(const std::string& metric_name, std::size_t k,
               const std::string& mode, const std::string& input,
               const std::string& out_path, unsigned jobs, bool uppercase) {
    const lcsk::Dataset ds =
        lcsk::load_dataset(input, {.uppercase = uppercase});
    for (const std::string& w : ds.warnings) std::cerr << "warning: " << w << '\n';
    if (ds.records.empty()) throw lcsk::ParseError(input + ": no records");

    const lcsk::MatrixReport report = lcsk::compute_matrix(
        ds, parse_metric(metric_name), k, parse_mode(mode), jobs);

    if (out_path.empty() || out_path == "-") {
        lcsk::write_matrix_tsv(report, std::cout);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw lcsk::IoError("cannot open " + out_path + " for writing");
    lcsk::write_matrix_tsv(report, out);
    out.flush();
    if (!out) throw lcsk::IoError("write failure on " + out_path);
    return 0;
}

int run_oracle_check(const std::string& metric_name,
                     std::vector<std::size_t> ks, std::size_t max_len,
                     const std::string& alphabet, std::size_t trials,
                     std::uint64_t seed) {
    lcsk::check::OracleCheckConfig config;
    config.metric = parse_metric(metric_name);
    if (!ks.empty()) config.ks = std::move(ks);
    config.max_len = max_len;
    config.alphabet = alphabet;
    config.trials = trials;
    config.seed = seed;

    const lcsk::check::OracleCheckReport report =
        lcsk::check::run_oracle_check(config);

    std::cout << "metric=" << metric_name << " max_len=" << max_len
              << " alphabet=" << alphabet
              << (trials == 0 ? " exhaustive"
                              : " trials=" + std::to_string(trials) +
                                    " seed=" + std::to_string(seed))
              << " comparisons=" << report.comparisons << '\n';
    const auto dump = [&](const lcsk::check::Mismatch& m, const char* kind) {
        std::cout << kind << " k=" << m.k << " a=\"" << m.a << "\" b=\"" << m.b
                  << "\" oracle=" << m.expected << " dp=" << m.got
                  << "  (reproduce: lcskit " << metric_name << " --k " << m.k
                  << " --a \"" << m.a << "\" --b \"" << m.b << "\")\n";
    };
    for (const auto& m : report.asserted) dump(m, "MISMATCH");
    for (const auto& m : report.documented) dump(m, "DISCREPANCY");
    std::cout << "mismatches=" << report.asserted.size()
              << " documented_discrepancies=" << report.documented.size()
              << '\n';
    if (!report.asserted.empty()) return 4;
    if (!report.documented.empty()) return 3;
    return 0;
}

int run_bench(const std::string& metric_name, std::size_t k,
              const std::string& mode, std::vector<std::size_t> sizes,
              unsigned repeats, std::uint64_t seed) {
    if (sizes.empty()) throw std::invalid_argument("bench: no sizes given");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::invalid_argument("bench: sizes must be sorted ascending");
    lcsk::bench::BenchConfig config;
    config.metric = parse_metric(metric_name);
    config.k = k;
    config.mode = parse_mode(mode);
    config.sizes = std::move(sizes);
    config.repeats = repeats;
    config.seed = seed;
    lcsk::bench::write_bench_table(lcsk::bench::run_bench(config), std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-length-substring similarity toolkit"};
    app.require_subcommand(1);

    CommonOpts lcsk_opts, edk_opts;
    auto add_pair_flags = [](CLI::App* cmd, CommonOpts& o, bool with_mode) {
        cmd->add_option("--k", o.k, "substring match length")->required();
        cmd->add_option("--a", o.a, "first sequence (inline or @file)")
            ->required();
        cmd->add_option("--b", o.b, "second sequence (inline or @file)")
            ->required();
        if (with_mode)
            cmd->add_option("--mode", o.mode, "edit operations: full|indel")
                ->check(CLI::IsMember({"full", "indel"}));
        cmd->add_flag("--traceback", o.traceback, "emit the witness");
        cmd->add_option("--format", o.format, "output format: json|tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
        cmd->add_flag("--uppercase", o.uppercase,
                      "fold ASCII letters to uppercase at load time");
    };
    CLI::App* lcsk_cmd =
        app.add_subcommand("lcsk", "pairwise common k-substring count");
    add_pair_flags(lcsk_cmd, lcsk_opts, false);
    CLI::App* edk_cmd =
        app.add_subcommand("edk", "pairwise edit distance over k-substrings");
    add_pair_flags(edk_cmd, edk_opts, true);

    std::string mx_metric = "lcsk", mx_mode = "full", mx_input, mx_out = "-";
    std::size_t mx_k = 1;
    unsigned mx_jobs = 1;
    bool mx_upper = false;
    CLI::App* mx_cmd = app.add_subcommand("matrix", "all-pairs score matrix");
    mx_cmd->add_option("--metric", mx_metric, "lcsk|edk")
        ->check(CLI::IsMember({"lcsk", "edk"}));
    mx_cmd->add_option("--k", mx_k, "substring match length")->required();
    mx_cmd->add_option("--mode", mx_mode, "edit operations: full|indel")
        ->check(CLI::IsMember({"full", "indel"}));
    mx_cmd->add_option("--input", mx_input, "FASTA or plain-text file")
        ->required();
    mx_cmd->add_option("--out", mx_out, "output path ('-' for stdout)");
    mx_cmd->add_option("--jobs", mx_jobs, "worker threads");
    mx_cmd->add_flag("--uppercase", mx_upper, "fold letters to uppercase");

    std::string oc_metric = "lcsk", oc_alphabet = "AC";
    std::vector<std::size_t> oc_ks;
    std::size_t oc_max_len = 7, oc_trials = 0;
    std::uint64_t oc_seed = 42;
    CLI::App* oc_cmd = app.add_subcommand(
        "oracle-check", "compare the DP against brute-force references");
    oc_cmd->add_option("--metric", oc_metric, "lcsk|edk")
        ->check(CLI::IsMember({"lcsk", "edk"}));
    oc_cmd->add_option("--k", oc_ks, "k values (comma separated)")
        ->delimiter(',');
    oc_cmd->add_option("--max-len", oc_max_len, "maximum string length");
    oc_cmd->add_option("--alphabet", oc_alphabet, "symbol set");
    oc_cmd->add_option("--trials", oc_trials,
                       "random trials (0 = exhaustive)");
    oc_cmd->add_option("--seed", oc_seed, "random seed for trials");

    std::string bn_metric = "lcsk", bn_mode = "full";
    std::size_t bn_k = 2;
    std::vector<std::size_t> bn_sizes;
    unsigned bn_repeats = 5;
    std::uint64_t bn_seed = 1;
    CLI::App* bn_cmd =
        app.add_subcommand("bench", "scaling of the score-only paths");
    bn_cmd->add_option("--metric", bn_metric, "lcsk|edk")
        ->check(CLI::IsMember({"lcsk", "edk"}));
    bn_cmd->add_option("--k", bn_k, "substring match length");
    bn_cmd->add_option("--mode", bn_mode, "edk mode: full|indel")
        ->check(CLI::IsMember({"full", "indel"}));
    bn_cmd->add_option("--sizes", bn_sizes, "input lengths, ascending")
        ->delimiter(',')
        ->required();
    bn_cmd->add_option("--repeats", bn_repeats, "repeats per size (median)");
    bn_cmd->add_option("--seed", bn_seed, "random input seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (lcsk_cmd->parsed()) return run_pairwise("lcsk", lcsk_opts);
        if (edk_cmd->parsed()) return run_pairwise("edk", edk_opts);
        if (mx_cmd->parsed())
            return run_matrix(mx_metric, mx_k, mx_mode, mx_input, mx_out,
                              mx_jobs, mx_upper);
        if (oc_cmd->parsed())
            return run_oracle_check(oc_metric, oc_ks, oc_max_len, oc_alphabet,
                                    oc_trials, oc_seed);
        if (bn_cmd->parsed())
            return run_bench(bn_metric, bn_k, bn_mode, bn_sizes, bn_repeats,
                             bn_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
