// Command-line front end. Talks to the library exclusively through the
// public C interface in torusemb.h.

#include "torusemb.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitEmbeddable = 0;
constexpr int kExitNotEmbeddable = 1;
constexpr int kExitInputError = 2;

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitInputError;
}

int run_decide(const std::string& path, bool witness_flag, bool witness_set,
               const std::string& report_mode, bool report_set) {
    std::ifstream in(path);
    if (!in) return fail_input("cannot read job file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();

    te_map* map = nullptr;
    if (te_map_from_job_json(buf.str().c_str(), &map) != TE_OK)
        return fail_input(te_last_error());

    int want_witness = witness_set ? (witness_flag ? 1 : 0) : -1;
    int full_report = -1;
    if (report_set) {
        if (report_mode != "verdict" && report_mode != "full") {
            te_map_free(map);
            return fail_input("--report must be \"verdict\" or \"full\"");
        }
        full_report = report_mode == "full" ? 1 : 0;
    }

    te_result* result = nullptr;
    te_status st = te_map_decide(map, want_witness, full_report, &result);
    te_map_free(map);
    if (st != TE_OK) return fail_input(te_last_error());

    std::fputs(te_result_report_json(result), stdout);
    int exit_code = te_result_embeddable(result) ? kExitEmbeddable : kExitNotEmbeddable;
    te_result_free(result);
    return exit_code;
}

bool parse_surface_spec(const std::string& spec, std::string& kind, long& genus) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return false;
    const std::string head = spec.substr(0, colon);
    if (head == "o")
        kind = "orientable";
    else if (head == "n")
        kind = "nonorientable";
    else
        return false;
    try {
        genus = std::stol(spec.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return true;
}

int run_sample(const std::string& spec, long bound, long count, std::uint64_t seed) {
    std::string kind;
    long genus = 0;
    if (!parse_surface_spec(spec, kind, genus))
        return fail_input("--surface must look like o:2 or n:4");
    char* text = nullptr;
    if (te_sample_jsonl(kind.c_str(), genus, bound, count, seed, &text) != TE_OK)
        return fail_input(te_last_error());
    std::fputs(text, stdout);
    te_text_free(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decides which maps of a closed surface into the 3-torus are homotopic to "
                 "embeddings, and constructs witnesses"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    std::string job_path;
    bool witness_flag = false;
    std::string report_mode;
    auto* decide_cmd = app.add_subcommand("decide", "decide a job file and print a JSON report");
    decide_cmd->add_option("file", job_path, "job document (JSON)")->required();
    auto* witness_opt = decide_cmd->add_flag("--witness", witness_flag, "construct a witness");
    auto* report_opt =
        decide_cmd->add_option("--report", report_mode, "report detail: verdict or full");

    std::string surface_spec;
    long bound = 1, count = 1;
    std::uint64_t seed = 0;
    auto* sample_cmd = app.add_subcommand("sample", "sample random maps as JSON lines");
    sample_cmd->add_option("--surface", surface_spec, "surface spec, o:<genus> or n:<genus>")
        ->required();
    sample_cmd->add_option("--bound", bound, "entry bound (>= 1)")->required();
    sample_cmd->add_option("--count", count, "number of samples (>= 1)")->required();
    sample_cmd->add_option("--seed", seed, "random seed")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    if (decide_cmd->parsed())
        return run_decide(job_path, witness_flag, witness_opt->count() > 0, report_mode,
                          report_opt->count() > 0);
    if (sample_cmd->parsed()) return run_sample(surface_spec, bound, count, seed);
    if (selftest_cmd->parsed()) {
        int failed = te_selftest(1);
        if (failed == 0) {
            std::printf("selftest: all checks passed\n");
            return 0;
        }
        std::printf("selftest: %d check(s) failed\n", failed);
        return 1;
    }
    return kExitInputError;
}
