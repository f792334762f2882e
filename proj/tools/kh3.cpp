// Command-line front end: normal forms, conjugacy classification, synthesized
// partial Khovanov tables, the exact homology engine, cross-verification, the
// rational-code rewrites, and the linear-time benchmark.
//
// KH3_WORKERS controls the homology engine's thread count (default: cores).

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <json.hpp>
#include <random>

#include "kh3/rational.hpp"
#include "kh3/render.hpp"

using namespace kh3;
using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct Output {
    bool as_json = false;

    void emit(const json& record, const std::string& text) const {
        if (as_json)
            std::cout << record.dump(2) << "\n";
        else
            std::cout << text;
    }
};

json base_record(const std::string& command, const std::string& input) {
    return json{{"schema_version", kSchemaVersion}, {"command", command}, {"input", input}};
}

std::string describe_lambda(LambdaFamily f) {
    switch (f) {
        case LambdaFamily::L1: return "L1";
        case LambdaFamily::L2: return "L2";
        case LambdaFamily::L3: return "L3";
        case LambdaFamily::L4: return "L4";
        case LambdaFamily::L5: return "L5";
    }
    return "?";
}

PartialTable shape_of_word(const BraidWord& w) {
    const auto res = conjugate_to_lambda(normal_form(w));
    if (res.cls.rep.p < 0) throw NotPositiveError();
    return extended_shape(res.cls.rep);
}

int run_verify(const BraidWord& w, const Output& out, json record) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = conjugate_to_lambda(normal_form(w));
    if (res.cls.rep.p < 0) throw NotPositiveError();
    const PartialTable synth = extended_shape(res.cls.rep);
    const HomologyTable oracle = homology(from_braid_closure(to_word(res.cls.rep)));
    const auto witness = first_disagreement(synth, oracle);
    record["elapsed_ms"] = ms_since(t0);
    record["verdict"] = witness ? "fail" : "pass";
    std::string text = witness ? "FAIL" : "PASS";
    if (witness) {
        record["witness"] = {{"i", witness->first}, {"j", witness->second}};
        text += " at (" + std::to_string(witness->first) + "," + std::to_string(witness->second) +
                ")";
    }
    out.emit(record, text + "\n");
    return witness ? 1 : 0;
}

int run_bench(const std::vector<long long>& lengths, int trials, uint64_t seed,
              const Output& out) {
    json record = base_record("bench", "");
    record["trials"] = trials;
    json rows = json::array();
    std::string text = "length  median_ms  per_letter_ns\n";
    std::vector<double> medians;
    for (long long len : lengths) {
        std::vector<double> times;
        for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng(seed + static_cast<uint64_t>(t) * 1000003 +
                                static_cast<uint64_t>(len));
            BraidWord w;
            w.strands = 3;
            w.letters.reserve(static_cast<size_t>(len));
            std::uniform_int_distribution<int> dist(0, 3);
            for (long long k = 0; k < len; ++k) {
                const int v = dist(rng);
                w.letters.push_back({1 + (v & 1), v < 2 ? 1 : -1});
            }
            const auto t0 = std::chrono::steady_clock::now();
            const NormalForm3 nf = normal_form(w);
            const auto res = conjugate_to_lambda(nf);
            FamilyTag tag;
            const bool positive = try_classify_family(res.cls.rep, tag);
            (void)positive;
            times.push_back(ms_since(t0));
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        medians.push_back(median);
        rows.push_back({{"length", len}, {"median_ms", median}});
        text += std::to_string(len) + "  " + std::to_string(median) + "  " +
                std::to_string(median * 1e6 / static_cast<double>(len)) + "\n";
    }
    record["rows"] = rows;
    if (lengths.size() >= 2) {
        const double ratio = medians.back() / medians.front();
        record["ratio"] = ratio;
        record["length_ratio"] =
            static_cast<double>(lengths.back()) / static_cast<double>(lengths.front());
        text += "time ratio " + std::to_string(ratio) + " (length ratio " +
                std::to_string(static_cast<double>(lengths.back()) /
                               static_cast<double>(lengths.front())) +
                ")\n";
    }
    out.emit(record, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Garside normal forms and Khovanov homology of 3-braid closures"};
    app.require_subcommand(1);

    Output out;
    std::string format = "ascii";
    app.add_option("--format", format, "output format: ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}));

    std::string word_text;
    int strands = 3;
    std::string code_text;
    int t_index = 2;
    std::vector<long long> bench_lengths{250000, 1000000};
    int bench_trials = 5;
    uint64_t seed = 20240811;
    int max_crossings = 18;

    auto* nf_cmd = app.add_subcommand("nf", "left normal form of a 3-braid word");
    nf_cmd->add_option("word", word_text, "braid word")->required();

    auto* classify_cmd =
        app.add_subcommand("classify", "conjugacy family of the closure (Theorem classes)");
    classify_cmd->add_option("word", word_text)->required();

    auto* summit_cmd = app.add_subcommand("summit", "summit infimum and Lambda representative");
    summit_cmd->add_option("word", word_text)->required();

    auto* shape_cmd =
        app.add_subcommand("shape", "synthesized partial Khovanov table of the closure");
    shape_cmd->add_option("word", word_text)->required();

    auto* hom_cmd = app.add_subcommand("homology", "exact Khovanov homology (brute force)");
    hom_cmd->add_option("word", word_text, "braid word (closure is taken)");
    hom_cmd->add_option("--strands", strands, "strand count for the braid word");
    hom_cmd->add_option("--rational", code_text, "rational code instead of a braid word");
    hom_cmd->add_option("--max-crossings", max_crossings, "state enumeration guard");

    auto* verify_cmd =
        app.add_subcommand("verify", "synthesized table vs exact homology on the closure");
    verify_cmd->add_option("word", word_text)->required();

    auto* rational_cmd = app.add_subcommand("rational", "rational-code rewriting");
    std::string rational_op;
    rational_cmd->add_option("op", rational_op, "u | t | alt | check")->required();
    rational_cmd->add_option("code", code_text, "comma-separated integers")->required();
    rational_cmd->add_option("--index", t_index, "1-based -1 position for op t");

    auto* bench_cmd = app.add_subcommand("bench", "normal form + conjugacy timing");
    bench_cmd->add_option("--lengths", bench_lengths, "word lengths");
    bench_cmd->add_option("--trials", bench_trials, "trials per length");
    bench_cmd->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);
    out.as_json = format == "json";

    try {
        if (nf_cmd->parsed()) {
            const auto t0 = std::chrono::steady_clock::now();
            const NormalForm3 nf = normal_form(parse_word(word_text, 3));
            const auto [inf, sup] = inf_sup(nf);
            json record = base_record("nf", word_text);
            record["normal_form"] = json::parse(nf_to_json(nf));
            record["rendered"] = render_nf(nf);
            record["inf"] = inf;
            record["sup"] = sup;
            record["elapsed_ms"] = ms_since(t0);
            out.emit(record, render_nf(nf) + "  inf=" + std::to_string(inf) +
                                 " sup=" + std::to_string(sup) + "\n");
            return 0;
        }
        if (classify_cmd->parsed() || summit_cmd->parsed()) {
            const auto t0 = std::chrono::steady_clock::now();
            const NormalForm3 nf = normal_form(parse_word(word_text, 3));
            const auto res = conjugate_to_lambda(nf);
            json record = base_record(classify_cmd->parsed() ? "classify" : "summit", word_text);
            record["lambda_family"] = describe_lambda(res.cls.family);
            record["representative"] = render_nf(res.cls.rep);
            record["summit_infimum"] = res.cls.rep.p;
            record["conjugator"] = render_word(res.conjugator);
            std::string text = "lambda=" + describe_lambda(res.cls.family) +
                               "  rep=" + render_nf(res.cls.rep) +
                               "  inf_s=" + std::to_string(res.cls.rep.p) + "  conjugator=\"" +
                               render_word(res.conjugator) + "\"\n";
            if (classify_cmd->parsed()) {
                const FamilyTag tag = classify_family(nf);  // throws when inf_s < 0
                record["family"] = render_tag(tag);
                text += "family=" + render_tag(tag) + "\n";
            }
            record["elapsed_ms"] = ms_since(t0);
            out.emit(record, text);
            return 0;
        }
        if (shape_cmd->parsed()) {
            const auto t0 = std::chrono::steady_clock::now();
            const PartialTable t = shape_of_word(parse_word(word_text, 3));
            json record = base_record("shape", word_text);
            record["table"] = json::parse(partial_to_json(t));
            record["elapsed_ms"] = ms_since(t0);
            out.emit(record, render_partial(t));
            return 0;
        }
        if (hom_cmd->parsed()) {
            const auto t0 = std::chrono::steady_clock::now();
            HomologyOptions opts;
            opts.max_crossings = max_crossings;
            LinkDiagram d = code_text.empty()
                                ? from_braid_closure(parse_word(word_text, strands))
                                : from_rational_code(parse_code(code_text));
            const HomologyTable t = homology(d, opts);
            json record = base_record("homology", code_text.empty() ? word_text : code_text);
            record["crossings"] = d.crossing_count();
            record["components"] = d.component_count();
            record["table"] = json::parse(table_to_json(t));
            record["euler"] = render_poly(graded_euler_characteristic(t));
            record["elapsed_ms"] = ms_since(t0);
            out.emit(record, render_table(t));
            return 0;
        }
        if (verify_cmd->parsed()) {
            return run_verify(parse_word(word_text, 3), out, base_record("verify", word_text));
        }
        if (rational_cmd->parsed()) {
            const RationalCode code = parse_code(code_text);
            json record = base_record("rational " + rational_op, code_text);
            if (rational_op == "u") {
                const RationalCode r = u_transform(code);
                record["result"] = json::parse(code_to_json(r));
                out.emit(record, render_code(r) + "\n");
            } else if (rational_op == "t") {
                const RationalCode r = t_transform(code, t_index);
                record["result"] = json::parse(code_to_json(r));
                out.emit(record, render_code(r) + "\n");
            } else if (rational_op == "alt") {
                const auto [r, bk] = alternating_code(code);
                record["result"] = json::parse(code_to_json(r));
                record["delta_p"] = bk.delta_p;
                record["delta_n"] = bk.delta_n;
                record["delta_w"] = bk.delta_w;
                out.emit(record, render_code(r) + "  (dp=" + std::to_string(bk.delta_p) +
                                     " dn=" + std::to_string(bk.delta_n) +
                                     " dw=" + std::to_string(bk.delta_w) + ")\n");
            } else if (rational_op == "check") {
                const bool alt = is_alternating(code);
                record["alternating"] = alt;
                out.emit(record, std::string(alt ? "alternating" : "not alternating") + "\n");
            } else {
                throw CLI::ValidationError("op must be one of u, t, alt, check");
            }
            return 0;
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_lengths, bench_trials, seed, out);
        }
    } catch (const std::exception& e) {
        json record{{"schema_version", kSchemaVersion}, {"error", e.what()}};
        if (out.as_json)
            std::cout << record.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
