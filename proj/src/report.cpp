#include "report.hpp"

#include "rng.hpp"

#include <stdexcept>

namespace torusemb {

using nlohmann::ordered_json;

namespace {

constexpr std::int64_t kSafeIntBound = 9007199254740991;  // 2^53 - 1

Int int_from_json(const nlohmann::json& v, const char* where) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(std::string(where) + " must be an integer or decimal string");
        }
    }
    throw std::invalid_argument(std::string(where) + " must be an integer or decimal string");
}

ordered_json json_vector(const std::vector<Int>& v) {
    ordered_json arr = ordered_json::array();
    for (const Int& x : v) arr.push_back(json_int(x));
    return arr;
}

ordered_json json_vector3(const std::array<Int, 3>& v) {
    return json_vector({v[0], v[1], v[2]});
}

ordered_json json_bits(const std::array<Bit, 3>& v) {
    return ordered_json::array({static_cast<int>(v[0]), static_cast<int>(v[1]),
                                static_cast<int>(v[2])});
}

ordered_json json_matrix(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(json_vector(m.row_vector(r)));
    return rows;
}

ordered_json witness_json(const EmbeddingWitness& w) {
    ordered_json out;
    if (const auto* sphere = std::get_if<SphereWithTubes>(&w.shape)) {
        out["shape"] = "sphere_with_tubes";
        ordered_json arcs = ordered_json::array();
        for (const auto& a : sphere->arc_classes) arcs.push_back(json_vector3(a));
        out["arc_classes"] = arcs;
    } else if (const auto* torus = std::get_if<TorusWithHandles>(&w.shape)) {
        out["shape"] = "torus_with_handles";
        out["torus_image"] =
            ordered_json::array({json_vector3(torus->torus_image[0]), json_vector3(torus->torus_image[1])});
        ordered_json arcs = ordered_json::array();
        for (const auto& a : torus->arc_classes) arcs.push_back(json_vector3(a));
        out["arc_classes"] = arcs;
    } else {
        const auto& ns = std::get<NonorientableStandard>(w.shape);
        out["shape"] = "nonorientable_standard";
        out["torus_image"] =
            ordered_json::array({json_vector3(ns.torus_image[0]), json_vector3(ns.torus_image[1])});
        out["cross_tube_class"] = json_vector3(ns.cross_tube_class);
        ordered_json pairs = ordered_json::array();
        for (const auto& p : ns.handle_pairs) {
            ordered_json pj;
            pj["kernel_vector"] = json_vector(p.kernel_vector);
            pj["partner_vector"] = json_vector(p.partner_vector);
            pairs.push_back(pj);
        }
        out["handle_pairs"] = pairs;
    }
    ordered_json trace = ordered_json::array();
    for (const auto& step : w.trace) {
        ordered_json sj;
        sj["kernel_vector"] = json_vector(step.kernel_vector);
        sj["partner_vector"] = json_vector(step.partner_vector);
        sj["arc_class"] = json_vector3(step.arc_class);
        sj["basis_change"] = json_matrix(step.basis_change);
        trace.push_back(sj);
    }
    out["trace"] = trace;
    return out;
}

}  // namespace

nlohmann::ordered_json json_int(const Int& v) {
    auto small = to_int64(v);
    if (small && *small <= kSafeIntBound && *small >= -kSafeIntBound) return *small;
    return to_decimal(v);
}

Job parse_job(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("job document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("job document must be a JSON object");
    if (!doc.contains("surface") || !doc["surface"].is_object())
        throw std::invalid_argument("job document must carry a \"surface\" object");
    const auto& surf = doc["surface"];
    if (!surf.contains("type") || !surf["type"].is_string())
        throw std::invalid_argument("surface.type must be \"orientable\" or \"nonorientable\"");
    const std::string type = surf["type"].get<std::string>();
    SurfaceKind kind;
    if (type == "orientable")
        kind = SurfaceKind::Orientable;
    else if (type == "nonorientable")
        kind = SurfaceKind::Nonorientable;
    else
        throw std::invalid_argument("surface.type must be \"orientable\" or \"nonorientable\"");
    if (!surf.contains("genus") || !surf["genus"].is_number_integer())
        throw std::invalid_argument("surface.genus must be an integer");
    const long genus = surf["genus"].get<long>();

    BasisTag basis = BasisTag::Standard;
    if (doc.contains("basis")) {
        if (!doc["basis"].is_string())
            throw std::invalid_argument("basis must be \"standard\" or \"crosscap\"");
        const std::string b = doc["basis"].get<std::string>();
        if (b == "standard")
            basis = BasisTag::Standard;
        else if (b == "crosscap")
            basis = BasisTag::Crosscap;
        else
            throw std::invalid_argument("basis must be \"standard\" or \"crosscap\"");
    }

    if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].size() != 3)
        throw std::invalid_argument("matrix must be an array of exactly 3 rows");
    const auto& mat = doc["matrix"];
    const std::size_t cols = mat[0].is_array() ? mat[0].size() : 0;
    for (const auto& row : mat)
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix rows must be arrays of equal length");
    IntMatrix m(3, cols);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = int_from_json(mat[r][c], "matrix entry");

    JobOptions opt;
    if (doc.contains("options")) {
        const auto& o = doc["options"];
        if (!o.is_object()) throw std::invalid_argument("options must be an object");
        if (o.contains("report")) {
            if (!o["report"].is_string())
                throw std::invalid_argument("options.report must be \"verdict\" or \"full\"");
            const std::string r = o["report"].get<std::string>();
            if (r == "full")
                opt.full_report = true;
            else if (r != "verdict")
                throw std::invalid_argument("options.report must be \"verdict\" or \"full\"");
        }
        if (o.contains("witness")) {
            if (!o["witness"].is_boolean())
                throw std::invalid_argument("options.witness must be a boolean");
            opt.want_witness = o["witness"].get<bool>();
        }
    }

    SurfaceModel surface = make_surface(kind, genus);  // throws on bad genus
    return Job{surface, std::move(m), basis, opt};
}

nlohmann::ordered_json report_json(const Verdict& verdict,
                                   const std::optional<EmbeddingWitness>& witness,
                                   const JobOptions& options) {
    ordered_json out;

    ordered_json v;
    v["embeddable"] = verdict.embeddable;
    ordered_json surf;
    surf["type"] = verdict.kind == SurfaceKind::Orientable ? "orientable" : "nonorientable";
    surf["genus"] = verdict.genus;
    v["surface"] = surf;
    v["case"] = case_tag_name(verdict.tag);
    out["verdict"] = v;

    ordered_json conds = ordered_json::array();
    for (const auto& c : verdict.conditions) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["holds"] = c.holds;
        if (!c.applicable) cj["applicable"] = false;
        if (options.full_report) cj["evidence"] = c.detail;
        conds.push_back(cj);
    }
    out["conditions"] = conds;

    ordered_json inv;
    const VerdictEvidence& e = verdict.evidence;
    inv["omega"] = e.omega ? ordered_json(ordered_json::array(
                                 {json_int(e.omega->a), json_int(e.omega->b), json_int(e.omega->c)}))
                           : ordered_json(nullptr);
    inv["gcd_omega"] = e.gcd_omega ? json_int(*e.gcd_omega) : ordered_json(nullptr);
    inv["omega_mod2"] = e.omega_mod2 ? json_bits(*e.omega_mod2) : ordered_json(nullptr);
    inv["image_rank"] = e.profile.rank;
    inv["invariant_factors"] = json_vector(e.profile.invariant_factors);
    inv["is_summand"] = e.profile.is_summand;
    inv["is_surjective"] = e.profile.is_surjective;
    inv["w1_witness"] =
        (e.w1_checked && e.w1_witness) ? json_bits(*e.w1_witness) : ordered_json(nullptr);
    inv["kernel_rank"] = e.kernel_rank ? ordered_json(*e.kernel_rank) : ordered_json(nullptr);
    inv["det_gram"] = e.det_gram ? json_int(*e.det_gram) : ordered_json(nullptr);
    inv["kernel_m_coefficients_nonzero"] = e.kernel_m_coefficients_nonzero;
    out["invariants"] = inv;

    out["witness"] = witness ? witness_json(*witness) : ordered_json(nullptr);

    ordered_json notes = ordered_json::array();
    for (const auto& n : verdict.notes) notes.push_back(n);
    out["notes"] = notes;
    return out;
}

std::string render_report(const Verdict& verdict, const std::optional<EmbeddingWitness>& witness,
                          const JobOptions& options) {
    return report_json(verdict, witness, options).dump(2) + "\n";
}

std::string sample_jsonl(SurfaceKind kind, long genus, long bound, long count,
                         std::uint64_t seed) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    SurfaceModel surface = make_surface(kind, genus);
    SplitMix64 rng{seed};
    std::string out;
    for (long i = 0; i < count; ++i) {
        IntMatrix m(3, surface.free_rank());
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < surface.free_rank(); ++c)
                m(r, c) = rng.uniform(-bound, bound);
        TorusMap f = new_map(surface, m, BasisTag::Standard);
        Verdict v = decide(f);
        ordered_json line;
        line["matrix"] = json_matrix(m);
        ordered_json vs;
        vs["embeddable"] = v.embeddable;
        vs["case"] = case_tag_name(v.tag);
        line["verdict"] = vs;
        out += line.dump() + "\n";
    }
    return out;
}

}  // namespace torusemb
