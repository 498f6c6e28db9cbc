#pragma once

#include "witness.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace torusemb {

struct JobOptions {
    bool full_report = false;
    bool want_witness = false;
};

struct Job {
    SurfaceModel surface;
    IntMatrix matrix;
    BasisTag basis = BasisTag::Standard;
    JobOptions options;
};

// Parses a job document. Throws std::invalid_argument naming the violated
// rule on malformed input. Matrix entries may be JSON integers or decimal
// strings; strings carry values beyond 53-bit float safety.
Job parse_job(const std::string& json_text);

// Integers within the 53-bit safe range serialize as JSON numbers, larger
// ones as decimal strings.
nlohmann::ordered_json json_int(const Int& v);

nlohmann::ordered_json report_json(const Verdict& verdict,
                                   const std::optional<EmbeddingWitness>& witness,
                                   const JobOptions& options);

// Fixed rendering (two-space indent, fixed key order): identical jobs yield
// byte-identical reports.
std::string render_report(const Verdict& verdict, const std::optional<EmbeddingWitness>& witness,
                          const JobOptions& options);

// Deterministic random maps for a surface, one JSON line each with the
// matrix and a verdict summary.
std::string sample_jsonl(SurfaceKind kind, long genus, long bound, long count,
                         std::uint64_t seed);

}  // namespace torusemb
