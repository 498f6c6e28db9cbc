// Exercises the shared-library surface only: torusemb.h, no core headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torusemb.h"

#include <json.hpp>

#include <cstring>
#include <string>
#include <vector>

namespace {

struct MapHandle {
    te_map* ptr = nullptr;
    ~MapHandle() { te_map_free(ptr); }
};

struct ResultHandle {
    te_result* ptr = nullptr;
    ~ResultHandle() { te_result_free(ptr); }
};

std::string decide_report(te_map* map, int witness, int full) {
    ResultHandle result;
    REQUIRE(te_map_decide(map, witness, full, &result.ptr) == TE_OK);
    return te_result_report_json(result.ptr);
}

}  // namespace

TEST_CASE("typed construction and decision") {
    const int64_t subtorus[] = {1, 0, 0, 1, 0, 0};
    MapHandle map;
    REQUIRE(te_map_create("orientable", 1, "standard", subtorus, 3, 2, &map.ptr) == TE_OK);

    ResultHandle result;
    REQUIRE(te_map_decide(map.ptr, 0, -1, &result.ptr) == TE_OK);
    CHECK(te_result_embeddable(result.ptr) == 1);
    CHECK(std::string(te_result_case(result.ptr)) == "PrimitiveRank2");
}

TEST_CASE("error paths set status and message") {
    te_map* out = nullptr;
    CHECK(te_map_create("flat", 1, "standard", nullptr, 0, 0, &out) == TE_ERROR_INVALID_ARGUMENT);
    CHECK(out == nullptr);
    CHECK(std::strlen(te_last_error()) > 0);

    CHECK(te_map_from_job_json("{ not json", &out) == TE_ERROR_PARSE);
    CHECK(std::string(te_last_error()).find("JSON") != std::string::npos);

    // crosscap columns must sum to zero
    const char* bad_crosscap = R"({
      "surface": {"type": "nonorientable", "genus": 4},
      "basis": "crosscap",
      "matrix": [[1,0,0,0],[0,0,0,0],[0,0,0,0]]
    })";
    CHECK(te_map_from_job_json(bad_crosscap, &out) == TE_ERROR_PARSE);
    CHECK(std::string(te_last_error()).find("torsion generator") != std::string::npos);

    const char* bad_genus = R"({
      "surface": {"type": "nonorientable", "genus": 0},
      "matrix": [[],[],[]]
    })";
    CHECK(te_map_from_job_json(bad_genus, &out) == TE_ERROR_PARSE);
}

TEST_CASE("report schema and byte stability") {
    const char* job = R"({
      "surface": {"type": "nonorientable", "genus": 4},
      "basis": "standard",
      "matrix": [[1,0,0],[0,1,0],[0,0,1]],
      "options": {"report": "full", "witness": true}
    })";
    MapHandle map;
    REQUIRE(te_map_from_job_json(job, &map.ptr) == TE_OK);

    std::string a = decide_report(map.ptr, -1, -1);
    std::string b = decide_report(map.ptr, -1, -1);
    CHECK(a == b);  // byte-identical reruns

    auto doc = nlohmann::ordered_json::parse(a);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"verdict", "conditions", "invariants", "witness",
                                           "notes"});
    CHECK(doc["verdict"]["embeddable"] == true);
    CHECK(doc["verdict"]["case"] == "NonorientableAllFive");
    CHECK(doc["conditions"].size() == 5);
    for (const auto& c : doc["conditions"]) CHECK(c.contains("evidence"));  // full report
    CHECK(doc["witness"]["shape"] == "nonorientable_standard");
    CHECK(doc["invariants"]["det_gram"] == 1);

    // witness suppressed unless requested
    std::string quiet = decide_report(map.ptr, 0, 0);
    auto qdoc = nlohmann::ordered_json::parse(quiet);
    CHECK(qdoc["witness"].is_null());
    for (const auto& c : qdoc["conditions"]) CHECK_FALSE(c.contains("evidence"));
}

TEST_CASE("crosscap job converts and decides") {
    // Klein bottle crosscap input: f(c1) = x, f(c2) = -x
    const char* job = R"({
      "surface": {"type": "nonorientable", "genus": 2},
      "basis": "crosscap",
      "matrix": [[1,-1],[0,0],[0,0]]
    })";
    MapHandle map;
    REQUIRE(te_map_from_job_json(job, &map.ptr) == TE_OK);
    ResultHandle result;
    REQUIRE(te_map_decide(map.ptr, -1, -1, &result.ptr) == TE_OK);
    CHECK(te_result_embeddable(result.ptr) == 0);
    auto doc = nlohmann::ordered_json::parse(te_result_report_json(result.ptr));
    bool cited = false;
    for (const auto& c : doc["conditions"])
        if (c["name"] == "h1_surjective" && c["holds"] == false) cited = true;
    CHECK(cited);
}

TEST_CASE("large entries round-trip as decimal strings") {
    const char* job = R"({
      "surface": {"type": "orientable", "genus": 1},
      "matrix": [["36028797018963968", 0], [0, 1], [0, 0]]
    })";
    MapHandle map;
    REQUIRE(te_map_from_job_json(job, &map.ptr) == TE_OK);
    std::string report = decide_report(map.ptr, 0, 0);
    auto doc = nlohmann::ordered_json::parse(report);
    CHECK(doc["invariants"]["omega"][0].is_string());  // 2^55 exceeds 53-bit safety
    CHECK(doc["invariants"]["omega"][0] == "36028797018963968");
    CHECK(doc["verdict"]["embeddable"] == false);
}

TEST_CASE("sampling is deterministic and honors the surface") {
    char* first = nullptr;
    char* second = nullptr;
    REQUIRE(te_sample_jsonl("orientable", 1, 1, 10, 7, &first) == TE_OK);
    REQUIRE(te_sample_jsonl("orientable", 1, 1, 10, 7, &second) == TE_OK);
    CHECK(std::string(first) == std::string(second));
    int lines = 0;
    for (const char* p = first; *p; ++p)
        if (*p == '\n') ++lines;
    CHECK(lines == 10);
    te_text_free(first);
    te_text_free(second);

    char* other_seed = nullptr;
    REQUIRE(te_sample_jsonl("orientable", 1, 1, 10, 8, &other_seed) == TE_OK);
    te_text_free(other_seed);

    // odd nonorientable genus: every verdict is false
    char* odd = nullptr;
    REQUIRE(te_sample_jsonl("nonorientable", 3, 2, 50, 1, &odd) == TE_OK);
    CHECK(std::string(odd).find("\"embeddable\":true") == std::string::npos);
    te_text_free(odd);

    // genus 4 with generous sampling finds embeddable maps
    char* h4 = nullptr;
    REQUIRE(te_sample_jsonl("nonorientable", 4, 2, 400, 11, &h4) == TE_OK);
    CHECK(std::string(h4).find("\"embeddable\":true") != std::string::npos);
    te_text_free(h4);

    char* bad = nullptr;
    CHECK(te_sample_jsonl("orientable", 1, 0, 10, 7, &bad) == TE_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("odd-genus crosscap job decides through the C surface") {
    // h = 3: f(c1) = x, f(c2) = y, f(c3) = -x - y
    const char* job = R"({
      "surface": {"type": "nonorientable", "genus": 3},
      "basis": "crosscap",
      "matrix": [[1,0,-1],[0,1,-1],[0,0,0]]
    })";
    MapHandle map;
    REQUIRE(te_map_from_job_json(job, &map.ptr) == TE_OK);
    ResultHandle result;
    REQUIRE(te_map_decide(map.ptr, -1, 1, &result.ptr) == TE_OK);
    CHECK(te_result_embeddable(result.ptr) == 0);
    auto doc = nlohmann::ordered_json::parse(te_result_report_json(result.ptr));
    CHECK(doc["invariants"]["det_gram"].is_null());  // pairing undefined at odd genus
    bool genus_cited = false, w1_cited = false;
    for (const auto& c : doc["conditions"]) {
        if (c["name"] == "genus_even" && c["holds"] == false) genus_cited = true;
        if (c["name"] == "w1_pullback" && c["holds"] == false) w1_cited = true;
    }
    CHECK(genus_cited);
    CHECK(w1_cited);
}

TEST_CASE("genus-0 job embeds with the convention noted") {
    const char* job = R"({
      "surface": {"type": "orientable", "genus": 0},
      "matrix": [[],[],[]],
      "options": {"witness": true}
    })";
    MapHandle map;
    REQUIRE(te_map_from_job_json(job, &map.ptr) == TE_OK);
    ResultHandle result;
    REQUIRE(te_map_decide(map.ptr, -1, -1, &result.ptr) == TE_OK);
    CHECK(te_result_embeddable(result.ptr) == 1);
    auto doc = nlohmann::ordered_json::parse(te_result_report_json(result.ptr));
    CHECK(doc["witness"]["shape"] == "sphere_with_tubes");
    CHECK(doc["notes"].size() > 0);
}

TEST_CASE("typed crosscap creation") {
    // Klein bottle: f(c1) = x, f(c2) = -x
    const int64_t entries[] = {1, -1, 0, 0, 0, 0};
    MapHandle map;
    REQUIRE(te_map_create("nonorientable", 2, "crosscap", entries, 3, 2, &map.ptr) == TE_OK);
    ResultHandle result;
    REQUIRE(te_map_decide(map.ptr, 0, 0, &result.ptr) == TE_OK);
    CHECK(te_result_embeddable(result.ptr) == 0);

    const int64_t bad[] = {1, 0, 0, 0, 0, 0};
    te_map* out = nullptr;
    CHECK(te_map_create("nonorientable", 2, "crosscap", bad, 3, 2, &out) ==
          TE_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("version string") { CHECK(std::string(te_version()) == "0.1.0"); }
