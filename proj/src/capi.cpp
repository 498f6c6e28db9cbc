#include "torusemb.h"

#include "report.hpp"
#include "selftest.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>

using namespace torusemb;

struct te_map {
    TorusMap map;
    JobOptions options;
};

struct te_result {
    Verdict verdict;
    std::string report;
    std::string case_tag;
};

namespace {

thread_local std::string g_last_error;

te_status fail(te_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
te_status guarded(te_status parse_code, Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(parse_code, e.what());
    } catch (const std::domain_error& e) {
        return fail(TE_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(TE_ERROR_INTERNAL, e.what());
    }
}

te_status parse_kind(const char* surface_kind, SurfaceKind* out) {
    if (surface_kind && std::strcmp(surface_kind, "orientable") == 0) {
        *out = SurfaceKind::Orientable;
        return TE_OK;
    }
    if (surface_kind && std::strcmp(surface_kind, "nonorientable") == 0) {
        *out = SurfaceKind::Nonorientable;
        return TE_OK;
    }
    return fail(TE_ERROR_INVALID_ARGUMENT, "surface kind must be \"orientable\" or \"nonorientable\"");
}

}  // namespace

extern "C" {

const char* te_version(void) { return "0.1.0"; }

const char* te_last_error(void) { return g_last_error.c_str(); }

te_status te_map_create(const char* surface_kind, long genus, const char* basis,
                        const int64_t* entries, size_t rows, size_t cols, te_map** out) {
    if (!out) return fail(TE_ERROR_INVALID_ARGUMENT, "output handle is null");
    *out = nullptr;
    SurfaceKind kind;
    te_status st = parse_kind(surface_kind, &kind);
    if (st != TE_OK) return st;
    if (!entries && rows * cols != 0) return fail(TE_ERROR_INVALID_ARGUMENT, "entries pointer is null");
    BasisTag tag;
    if (basis && std::strcmp(basis, "standard") == 0)
        tag = BasisTag::Standard;
    else if (basis && std::strcmp(basis, "crosscap") == 0)
        tag = BasisTag::Crosscap;
    else
        return fail(TE_ERROR_INVALID_ARGUMENT, "basis must be \"standard\" or \"crosscap\"");

    return guarded(TE_ERROR_INVALID_ARGUMENT, [&] {
        SurfaceModel surface = make_surface(kind, genus);
        IntMatrix m(rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) m(r, c) = Int(static_cast<long>(entries[r * cols + c]));
        *out = new te_map{new_map(surface, m, tag), JobOptions{}};
        return TE_OK;
    });
}

te_status te_map_from_job_json(const char* json_text, te_map** out) {
    if (!out) return fail(TE_ERROR_INVALID_ARGUMENT, "output handle is null");
    *out = nullptr;
    if (!json_text) return fail(TE_ERROR_PARSE, "job text is null");
    return guarded(TE_ERROR_PARSE, [&] {
        Job job = parse_job(json_text);
        *out = new te_map{new_map(job.surface, job.matrix, job.basis), job.options};
        return TE_OK;
    });
}

void te_map_free(te_map* map) { delete map; }

te_status te_map_decide(const te_map* map, int want_witness, int full_report, te_result** out) {
    if (!out) return fail(TE_ERROR_INVALID_ARGUMENT, "output handle is null");
    *out = nullptr;
    if (!map) return fail(TE_ERROR_INVALID_ARGUMENT, "map handle is null");
    return guarded(TE_ERROR_INVALID_ARGUMENT, [&] {
        JobOptions opt = map->options;
        if (want_witness >= 0) opt.want_witness = want_witness != 0;
        if (full_report >= 0) opt.full_report = full_report != 0;

        std::optional<EmbeddingWitness> witness;
        Verdict verdict;
        if (opt.want_witness) {
            WitnessOutcome outcome = build_witness(map->map);
            verdict = std::move(outcome.verdict);
            witness = std::move(outcome.witness);
        } else {
            verdict = decide(map->map);
        }
        auto result = new te_result{std::move(verdict), {}, {}};
        result->case_tag = case_tag_name(result->verdict.tag);
        result->report = render_report(result->verdict, witness, opt);
        *out = result;
        return TE_OK;
    });
}

int te_result_embeddable(const te_result* result) {
    return result && result->verdict.embeddable ? 1 : 0;
}

const char* te_result_case(const te_result* result) {
    return result ? result->case_tag.c_str() : "";
}

const char* te_result_report_json(const te_result* result) {
    return result ? result->report.c_str() : "";
}

void te_result_free(te_result* result) { delete result; }

te_status te_sample_jsonl(const char* surface_kind, long genus, long bound, long count,
                          uint64_t seed, char** out_text) {
    if (!out_text) return fail(TE_ERROR_INVALID_ARGUMENT, "output pointer is null");
    *out_text = nullptr;
    SurfaceKind kind;
    te_status st = parse_kind(surface_kind, &kind);
    if (st != TE_OK) return st;
    return guarded(TE_ERROR_INVALID_ARGUMENT, [&] {
        std::string text = sample_jsonl(kind, genus, bound, count, seed);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out_text = buf;
        return TE_OK;
    });
}

void te_text_free(char* text) { std::free(text); }

int te_selftest(int verbose) {
    int failed = 0;
    for (std::size_t i = 0; i < acceptance_check_count(); ++i) {
        CheckResult r = run_acceptance_check(i);
        if (!r.pass) ++failed;
        if (verbose)
            std::printf("[%s] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.empty() ? "" : ": ", r.detail.c_str());
    }
    return failed;
}

}  // extern "C"
