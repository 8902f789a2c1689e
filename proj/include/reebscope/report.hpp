#pragma once

// Assembly of the full analysis report and its JSON serialization
// (schema 1): exact rationals as "num/den" strings, algebraic numerics as
// 12-significant-digit decimal strings plus interval bounds. The timings
// section is informational and excluded from determinism comparisons.

#include <json.hpp>

#include <chrono>
#include <string>

#include "reebscope/cone.hpp"
#include "reebscope/deformation.hpp"
#include "reebscope/families.hpp"
#include "reebscope/polygon.hpp"
#include "reebscope/series.hpp"
#include "reebscope/volume.hpp"

namespace reebscope {

using nlohmann::json;

inline const std::vector<std::string> kAbc{"a", "b", "c"};

inline json vertices_json(const LatticePolygon& p) {
    json arr = json::array();
    for (const auto& v : p.vertices()) arr.push_back({v.x, v.y});
    return arr;
}

inline json validation_json(const DiagramValidation& v) {
    json offending = json::array();
    for (const auto& e : v.offending_edges) offending.push_back({e.x, e.y});
    return {{"valid", v.valid()},
            {"convex_simple", v.is_convex_simple},
            {"edges_primitive", v.edges_primitive},
            {"offending_edges", offending},
            {"reason", v.reason()}};
}

inline json hilbert_basis_json(const HilbertBasis& hb) {
    json cols = json::array();
    for (const auto& h : hb.elements) cols.push_back({h[0], h[1], h[2]});
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (const auto& h : hb.elements) row.push_back(h[r]);
        rows.push_back(row);
    }
    return {{"size", hb.elements.size()}, {"columns", cols}, {"matrix_rows", rows}};
}

inline std::string w_matrix_text(const HilbertBasis& hb) {
    std::string out;
    for (int r = 0; r < 3; ++r) {
        for (const auto& h : hb.elements) {
            std::string cell = std::to_string(h[r]);
            out += std::string(cell.size() >= 4 ? 1 : 4 - cell.size(), ' ') + cell;
        }
        out += "\n";
    }
    return out;
}

inline json series_json(const HilbertSeriesSum& hs) {
    json pieces = json::array();
    for (const auto& piece : hs.pieces) {
        json dens = json::array();
        for (const auto& g : piece.denominator_exponents) dens.push_back({g[0], g[1], g[2]});
        json offs = json::array();
        for (const auto& q : piece.offsets) offs.push_back({q[0], q[1], q[2]});
        pieces.push_back({{"denominator_exponents", dens}, {"offsets", offs}});
    }
    return {{"pieces", pieces}, {"string", hs.to_string()}};
}

inline json interval_json(const QInterval& iv) {
    return {{"decimal", to_decimal_string(iv.mid(), 12)},
            {"lo", to_string(iv.lo)},
            {"hi", to_string(iv.hi)}};
}

inline json coordinate_json(const QInterval& iv, const CoordinateCertificate& cert) {
    json j = interval_json(iv);
    j["regularity"] = cert.rational ? "rational" : "irrational";
    if (cert.rational_value) j["rational_value"] = to_string(*cert.rational_value);
    j["eliminant"] = cert.eliminant.to_string({"x"});
    json removed = json::array();
    for (const auto& f : cert.spurious_factors_removed) removed.push_back(f.to_string({"x"}));
    j["spurious_factors_removed"] = removed;
    j["isolating_interval"] = {to_string(cert.isolating_interval.lo), to_string(cert.isolating_interval.hi)};
    json cands = json::array();
    for (const auto& q : cert.rational_candidates_tested) cands.push_back(to_string(q));
    j["rational_candidates_tested"] = cands;
    return j;
}

inline json reeb_json(const ReebResult& r) {
    json j;
    j["origin_shift"] = {r.origin_shift.x, r.origin_shift.y};
    j["a"] = coordinate_json(r.a, r.cert_a);
    j["b"] = coordinate_json(r.b, r.cert_b);
    j["c"] = 3;
    j["value"] = interval_json(r.value);
    if (r.exact_value) {
        j["value"]["exact"] = to_string(*r.exact_value);
        j["a"]["exact"] = to_string(*r.exact_a);
        j["b"]["exact"] = to_string(*r.exact_b);
    }
    j["quasi_regular"] = r.quasi_regular;
    j["regularity"] = r.quasi_regular ? "quasi-regular" : "irregular";
    j["iterations"] = r.iterations;
    j["precision_bits"] = r.precision_bits;
    return j;
}

inline json decomposition_json(const LatticePolygon& p) {
    json j;
    auto sc = summand_cone(p);
    json gens = json::array();
    for (const auto& g : sc.generators) {
        json t = json::array();
        for (const auto& x : g.t) t.push_back(to_string(x));
        gens.push_back({{"t", t}, {"summand", vertices_json(g.summand)}});
    }
    json edges = json::array();
    for (const auto& e : sc.edges) edges.push_back({e.x, e.y});
    j["summand_cone"] = {{"edges", edges}, {"generators", gens}};

    json maximal = json::array();
    for (const auto& c : maximal_decompositions(p)) {
        json col = json::array();
        for (const auto& x : c) col.push_back(to_string(x));
        maximal.push_back(col);
    }
    j["maximal_decompositions"] = maximal;

    auto validation = validate_toric_diagram(p);
    if (validation.valid()) {
        json decs = json::array();
        auto all = lattice_maximal_decompositions(p);
        for (const auto& d : all) {
            json blocks = json::array();
            for (const auto& blk : d.blocks) blocks.push_back(blk);
            json summands = json::array();
            for (const auto& s : d.summands) summands.push_back(vertices_json(s));
            json cone = json::array();
            auto tc = tautological_total_cone(p, d.summands);
            for (const auto& g : tc.generators) cone.push_back(g);
            decs.push_back({{"blocks", blocks},
                            {"summands", summands},
                            {"tautological_cone", {{"ambient_rank", tc.ambient_rank}, {"generators", cone}}}});
        }
        j["lattice_maximal_decompositions"] = decs;
        j["versal_base_dimensions"] = versal_base(p);
    }

    auto ideal = scheme_ideal(p);
    std::vector<std::string> tnames;
    for (size_t i = 0; i < sc.edges.size(); ++i) tnames.push_back("t" + std::to_string(i + 1));
    json gens_k = json::array();
    for (const auto& [gx, gy] : ideal.generators)
        gens_k.push_back({gx.to_string(tnames), gy.to_string(tnames)});
    j["scheme_ideal"] = {{"k0", ideal.k0}, {"generators", gens_k}};
    return j;
}

struct ReportOptions {
    int ideal_max_degree = 2;
    unsigned precision_bits = 256;
    bool include_ideal = true;
};

inline json full_report(const LatticePolygon& p, const ReportOptions& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    json j;
    j["schema"] = 1;
    j["input"] = {{"vertices", vertices_json(p)}, {"text", p.to_text()}};
    auto validation = validate_toric_diagram(p);
    j["validation"] = validation_json(validation);
    json timings;
    auto lap = [&](const char* name, auto&& fn) {
        auto s = std::chrono::steady_clock::now();
        fn();
        timings[name] =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - s)
                .count();
    };
    if (validation.valid()) {
        PolyCone3 cs = dual_cone(cone_over_diagram(p).cone);
        HilbertBasis hb;
        lap("hilbert_basis", [&] { hb = hilbert_basis(cs); });
        j["hilbert_basis"] = hilbert_basis_json(hb);
        lap("hilbert_series", [&] { j["hilbert_series"] = series_json(hilbert_series(cs)); });
        IndexCharacterCoeffs ic;
        lap("index_character", [&] { ic = index_character(cs); });
        j["index_character"] = {{"a0", ic.a0.to_string(kAbc)}, {"a1", ic.a1.to_string(kAbc)}};
        if (opt.include_ideal) {
            lap("ideal", [&] {
                auto bins = toric_ideal_binomials(hb, opt.ideal_max_degree);
                json list = json::array();
                for (const auto& b : bins) list.push_back(b.to_string());
                j["ideal"] = {{"max_degree", opt.ideal_max_degree}, {"count", bins.size()}, {"binomials", list}};
            });
        }
        ReebAnalysis ra;
        lap("reeb", [&] { ra = analyze_reeb(p, opt.precision_bits); });
        j["volume"] = {{"a0", ra.a0.to_string(kAbc)}};
        j["reeb"] = reeb_json(ra.reeb);
        lap("decomposition", [&] { j["decomposition"] = decomposition_json(p); });
    }
    timings["total"] =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    j["timings"] = timings;
    return j;
}

// Internal-consistency verifier for a previously emitted report. Returns an
// empty list when all checks hold.
inline std::vector<std::string> verify_report(const json& j) {
    std::vector<std::string> problems;
    auto complain = [&](const std::string& s) { problems.push_back(s); };
    if (!j.contains("schema") || j["schema"] != 1) complain("schema missing or not 1");
    if (!j.contains("input") || !j["input"].contains("vertices")) {
        complain("input section missing");
        return problems;
    }
    std::vector<Point2> pts;
    for (const auto& v : j["input"]["vertices"]) pts.push_back({v[0], v[1]});
    LatticePolygon p = LatticePolygon::from_vertices(pts);
    auto validation = validate_toric_diagram(p);
    if (j["validation"]["valid"] != validation.valid()) complain("validation verdict mismatch");
    if (!validation.valid()) return problems;
    if (j.contains("hilbert_basis")) {
        auto hb = hilbert_basis(dual_cone(cone_over_diagram(p).cone));
        if (j["hilbert_basis"]["size"] != hb.elements.size()) complain("hilbert basis size mismatch");
        if (j.contains("ideal") && j["hilbert_basis"]["columns"].size() != hb.elements.size())
            complain("ideal variable count inconsistent with W");
    }
    if (j.contains("volume") && j.contains("index_character")) {
        if (j["volume"]["a0"] != j["index_character"]["a0"])
            complain("volume and index-character a0 disagree");
    }
    if (j.contains("reeb")) {
        const auto& r = j["reeb"];
        BigRat alo = rat_from_string(r["a"]["lo"].get<std::string>());
        BigRat ahi = rat_from_string(r["a"]["hi"].get<std::string>());
        if (!(alo <= ahi)) complain("reeb a-interval inverted");
        if (BigRat(ahi - alo) > make_rat(BigInt(1), pow(BigInt(10), 12)))
            complain("reeb a-interval wider than 1e-12");
        bool qr = r["quasi_regular"].get<bool>();
        bool both_rat = r["a"]["regularity"] == "rational" && r["b"]["regularity"] == "rational";
        if (qr != both_rat) complain("quasi-regular flag inconsistent with coordinate tags");
    }
    if (j.contains("decomposition") && j["decomposition"].contains("lattice_maximal_decompositions")) {
        auto edges = p.oriented_edges().edges;
        for (const auto& d : j["decomposition"]["lattice_maximal_decompositions"]) {
            for (const auto& blk : d["blocks"]) {
                Point2 sum{0, 0};
                for (const auto& i : blk) sum = sum + edges.at(i.get<size_t>());
                if (sum != Point2{0, 0}) complain("decomposition block does not sum to zero");
            }
        }
    }
    return problems;
}

}  // namespace reebscope
