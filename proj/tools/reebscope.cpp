// reebscope: toric-diagram analysis front end.
//
// Subcommands mirror the analysis pipeline: validate, hilbert-basis, series,
// ideal, volume, reeb, decompose, versal, family, report, svg, verify.
// Diagrams come from --vertices "(x,y);(x,y);...", --json FILE (array of
// pairs), or --family with parameters. Exit codes: 0 success, 2 parse error,
// 3 invalid diagram, 4 certificate failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "reebscope/report.hpp"
#include "reebscope/svg.hpp"

using namespace reebscope;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalidDiagram = 3;
constexpr int kExitCertificate = 4;

struct InputOptions {
    std::string vertices;
    std::string json_file;
    std::string family;
    long p = 0, q = 0, r = 0, s = 0;
    std::string variant = "q1-segment";
};

struct OutputOptions {
    std::string format = "text";
    std::string out_file;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--vertices", in.vertices, "diagram vertices, e.g. \"(-1,0);(0,-1);(1,0);(0,1)\"");
    cmd->add_option("--json", in.json_file, "file with a JSON array of vertex pairs");
    cmd->add_option("--family", in.family, "family shortcut: gmsw, cfo, or qpq");
    cmd->add_option("--p", in.p, "family parameter p");
    cmd->add_option("--q", in.q, "family parameter q");
    cmd->add_option("--r", in.r, "family parameter r");
    cmd->add_option("--s", in.s, "family parameter s");
    cmd->add_option("--variant", in.variant, "qpq variant: q1-segment or odd-segment");
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o,--output", out.out_file, "write output to a file instead of stdout");
}

LatticePolygon resolve_diagram(const InputOptions& in) {
    int sources = !in.vertices.empty() + !in.json_file.empty() + !in.family.empty();
    if (sources != 1)
        throw std::invalid_argument("provide exactly one of --vertices, --json, --family");
    if (!in.vertices.empty()) return polygon_from_text(in.vertices);
    if (!in.json_file.empty()) {
        std::ifstream f(in.json_file);
        if (!f) throw std::invalid_argument("cannot open " + in.json_file);
        std::stringstream buf;
        buf << f.rdbuf();
        return polygon_from_text(buf.str());
    }
    if (in.family == "gmsw") return family_gmsw(in.p, in.q);
    if (in.family == "cfo") return family_cfo(in.r, in.s);
    if (in.family == "qpq") return family_qpq(in.p, in.q, qpq_variant_from_string(in.variant));
    throw std::invalid_argument("unknown family: " + in.family);
}

void emit(const OutputOptions& out, const std::string& payload) {
    if (out.out_file.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out.out_file);
        if (!f) throw std::invalid_argument("cannot write " + out.out_file);
        f << payload;
    }
}

unsigned precision_from_env() {
    const char* env = std::getenv("REEBSCOPE_PRECISION");
    if (!env) return 256;
    long bits = std::strtol(env, nullptr, 10);
    if (bits < 64 || bits > 65536) return 256;
    return static_cast<unsigned>(bits);
}

LatticePolygon require_valid(const LatticePolygon& p) {
    auto v = validate_toric_diagram(p);
    if (!v.valid()) {
        json j = {{"validation", validation_json(v)}};
        std::cerr << j.dump(2) << "\n";
        std::exit(kExitInvalidDiagram);
    }
    return p;
}

std::string render_json_or(const OutputOptions& out, const json& j, const std::string& text) {
    return out.format == "json" ? j.dump(2) + "\n" : text;
}

// range parameter "lo:hi" or single value
std::vector<long> parse_range(long single, const std::string& text) {
    if (text.empty()) return {single};
    auto colon = text.find(':');
    if (colon == std::string::npos) return {std::stol(text)};
    long lo = std::stol(text.substr(0, colon));
    long hi = std::stol(text.substr(colon + 1));
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reebscope: Hilbert bases, volume minimization and Minkowski decompositions of toric diagrams"};
    app.require_subcommand(1);
    unsigned precision = precision_from_env();

    InputOptions in;
    OutputOptions out;
    int ideal_degree = 2;
    bool svg_decomposition = false;
    bool sweep = false;
    std::string sweep_p, sweep_q, sweep_r, sweep_s;
    std::string verify_file;

    auto* c_validate = app.add_subcommand("validate", "check the toric-diagram conditions");
    auto* c_basis = app.add_subcommand("hilbert-basis", "Hilbert basis of the moment cone");
    auto* c_series = app.add_subcommand("series", "multivariate Hilbert series");
    auto* c_ideal = app.add_subcommand("ideal", "degree-bounded toric-ideal binomials");
    auto* c_volume = app.add_subcommand("volume", "exact volume function a0");
    auto* c_reeb = app.add_subcommand("reeb", "volume minimizer with rationality certificate");
    auto* c_decomp = app.add_subcommand("decompose", "Minkowski summand cone and decompositions");
    auto* c_versal = app.add_subcommand("versal", "versal base component dimensions");
    auto* c_family = app.add_subcommand("family", "construct family members (supports --sweep)");
    auto* c_report = app.add_subcommand("report", "full analysis report");
    auto* c_svg = app.add_subcommand("svg", "SVG figure of the diagram");
    auto* c_verify = app.add_subcommand("verify", "re-check a report JSON for internal consistency");

    for (auto* cmd : {c_validate, c_basis, c_series, c_ideal, c_volume, c_reeb, c_decomp, c_versal,
                      c_report, c_svg}) {
        add_input_options(cmd, in);
        add_output_options(cmd, out);
    }
    c_ideal->add_option("--max-degree", ideal_degree, "total degree bound (default 2)");
    c_svg->add_flag("--decomposition", svg_decomposition, "append lattice-decomposition panels");
    c_family->add_option("--name", in.family, "gmsw, cfo, or qpq")->required();
    c_family->add_flag("--sweep", sweep, "iterate over parameter ranges lo:hi");
    c_family->add_option("--p", sweep_p, "p or p-range lo:hi");
    c_family->add_option("--q", sweep_q, "q or q-range lo:hi");
    c_family->add_option("--r", sweep_r, "r or r-range lo:hi");
    c_family->add_option("--s", sweep_s, "s or s-range lo:hi");
    c_family->add_option("--variant", in.variant, "qpq variant");
    add_output_options(c_family, out);
    c_verify->add_option("file", verify_file, "report JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (c_validate->parsed()) {
            auto p = resolve_diagram(in);
            auto v = validate_toric_diagram(p);
            json j = {{"input", {{"vertices", vertices_json(p)}, {"text", p.to_text()}}},
                      {"validation", validation_json(v)}};
            emit(out, render_json_or(out, j, p.to_text() + "\n" + v.reason() + "\n"));
            return v.valid() ? 0 : kExitInvalidDiagram;
        }
        if (c_basis->parsed()) {
            auto p = require_valid(resolve_diagram(in));
            auto hb = hilbert_basis(dual_cone(cone_over_diagram(p).cone));
            json j = {{"hilbert_basis", hilbert_basis_json(hb)}};
            emit(out, render_json_or(out, j, "W =\n" + w_matrix_text(hb)));
            return 0;
        }
        if (c_series->parsed()) {
            auto p = require_valid(resolve_diagram(in));
            auto cs = dual_cone(cone_over_diagram(p).cone);
            auto hs = hilbert_series(cs);
            auto ic = index_character(cs);
            json j = {{"hilbert_series", series_json(hs)},
                      {"index_character", {{"a0", ic.a0.to_string(kAbc)}, {"a1", ic.a1.to_string(kAbc)}}}};
            emit(out, render_json_or(out, j,
                                     "H = " + hs.to_string() + "\na0 = " + ic.a0.to_string(kAbc) +
                                         "\na1 = " + ic.a1.to_string(kAbc) + "\n"));
            return 0;
        }
        if (c_ideal->parsed()) {
            auto p = require_valid(resolve_diagram(in));
            auto hb = hilbert_basis(dual_cone(cone_over_diagram(p).cone));
            auto bins = toric_ideal_binomials(hb, ideal_degree);
            json list = json::array();
            std::string text;
            for (const auto& b : bins) {
                list.push_back(b.to_string());
                text += b.to_string() + "\n";
            }
            json j = {{"ideal", {{"max_degree", ideal_degree}, {"count", bins.size()}, {"binomials", list}}}};
            emit(out, render_json_or(out, j, text + "count: " + std::to_string(bins.size()) + "\n"));
            return 0;
        }
        if (c_volume->parsed()) {
            auto p = require_valid(resolve_diagram(in));
            auto a0 = volume_function(p);
            json j = {{"volume", {{"a0", a0.to_string(kAbc)}}}};
            emit(out, render_json_or(out, j, "a0 = " + a0.to_string(kAbc) + "\n"));
            return 0;
        }
        if (c_reeb->parsed()) {
            auto p = require_valid(resolve_diagram(in));
            auto ra = analyze_reeb(p, precision);
            json j = {{"volume", {{"a0", ra.a0.to_string(kAbc)}}}, {"reeb", reeb_json(ra.reeb)}};
            std::string text = "a0 = " + ra.a0.to_string(kAbc) + "\n";
            text += "minimizer: a = " + to_decimal_string(ra.reeb.a.mid(), 12) +
                    ", b = " + to_decimal_string(ra.reeb.b.mid(), 12) + ", c = 3\n";
            text += "value = " + to_decimal_string(ra.reeb.value.mid(), 12) + "\n";
            text += std::string("regularity: ") + (ra.reeb.quasi_regular ? "quasi-regular" : "irregular") + "\n";
            emit(out, render_json_or(out, j, text));
            return 0;
        }
        if (c_decomp->parsed() || c_versal->parsed()) {
            auto p = resolve_diagram(in);
            if (c_versal->parsed()) require_valid(p);
            json j = {{"decomposition", decomposition_json(p)}};
            std::string text;
            if (validate_toric_diagram(p).valid()) {
                auto decs = lattice_maximal_decompositions(p);
                text += "lattice maximal decompositions: " + std::to_string(decs.size()) + "\n";
                for (const auto& d : decs) {
                    text += "  ";
                    for (size_t i = 0; i < d.summands.size(); ++i)
                        text += (i ? " + " : "") + d.summands[i].to_text();
                    text += "\n";
                }
                auto dims = versal_base(p);
                text += "versal base dimensions:";
                for (int m : dims) text += " " + std::to_string(m);
                text += dims.empty() ? " (trivial)\n" : "\n";
            } else {
                text += "not a toric diagram; summand cone only\n";
            }
            emit(out, render_json_or(out, j, text));
            return 0;
        }
        if (c_family->parsed()) {
            json members = json::array();
            std::string text;
            auto handle = [&](const LatticePolygon& p, const std::string& label) {
                auto v = validate_toric_diagram(p);
                json m = {{"label", label},
                          {"vertices", vertices_json(p)},
                          {"valid", v.valid()},
                          {"interior_lattice_points", p.interior_lattice_point_count()}};
                if (v.valid()) m["versal_base_dimensions"] = versal_base(p);
                members.push_back(m);
                text += label + ": " + p.to_text() + (v.valid() ? "" : "  [invalid]") + "\n";
            };
            auto run_family = [&]() {
                if (in.family == "gmsw" || in.family == "qpq") {
                    for (long p : parse_range(0, sweep_p))
                        for (long q : parse_range(0, sweep_q)) {
                            std::string label = in.family + "(p=" + std::to_string(p) +
                                                ",q=" + std::to_string(q) + ")";
                            try {
                                handle(in.family == "gmsw"
                                           ? family_gmsw(p, q)
                                           : family_qpq(p, q, qpq_variant_from_string(in.variant)),
                                       label);
                            } catch (const std::invalid_argument& e) {
                                if (!sweep) throw;
                                members.push_back({{"label", label}, {"error", e.what()}});
                            }
                        }
                } else if (in.family == "cfo") {
                    for (long r : parse_range(0, sweep_r))
                        for (long s : parse_range(0, sweep_s)) {
                            std::string label =
                                "cfo(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
                            try {
                                handle(family_cfo(r, s), label);
                            } catch (const std::invalid_argument& e) {
                                if (!sweep) throw;
                                members.push_back({{"label", label}, {"error", e.what()}});
                            }
                        }
                } else {
                    throw std::invalid_argument("unknown family: " + in.family);
                }
            };
            run_family();
            emit(out, render_json_or(out, {{"family", in.family}, {"members", members}}, text));
            return 0;
        }
        if (c_report->parsed()) {
            auto p = require_valid(resolve_diagram(in));
            ReportOptions opt;
            opt.ideal_max_degree = ideal_degree;
            opt.precision_bits = precision;
            json j = full_report(p, opt);
            if (out.format == "json") {
                emit(out, j.dump(2) + "\n");
            } else {
                std::string text = "diagram: " + p.to_text() + "\n";
                text += "validation: " + j["validation"]["reason"].get<std::string>() + "\n";
                text += "hilbert basis size: " + std::to_string(j["hilbert_basis"]["size"].get<size_t>()) + "\n";
                text += "a0 = " + j["volume"]["a0"].get<std::string>() + "\n";
                text += "minimizer a = " + j["reeb"]["a"]["decimal"].get<std::string>() +
                        ", b = " + j["reeb"]["b"]["decimal"].get<std::string>() + ", c = 3\n";
                text += "value = " + j["reeb"]["value"]["decimal"].get<std::string>() + "\n";
                text += "regularity: " + j["reeb"]["regularity"].get<std::string>() + "\n";
                emit(out, text);
            }
            return 0;
        }
        if (c_svg->parsed()) {
            auto p = resolve_diagram(in);
            std::vector<LatticePolygon> summands;
            if (svg_decomposition && validate_toric_diagram(p).valid()) {
                auto decs = lattice_maximal_decompositions(p);
                if (!decs.empty()) summands = decs.front().summands;
            }
            emit(out, render_svg(p, summands));
            return 0;
        }
        if (c_verify->parsed()) {
            std::ifstream f(verify_file);
            if (!f) throw std::invalid_argument("cannot open " + verify_file);
            json j = json::parse(f);
            auto problems = verify_report(j);
            for (const auto& s : problems) std::cerr << "verify: " << s << "\n";
            if (problems.empty()) std::cout << "report is internally consistent\n";
            return problems.empty() ? 0 : 1;
        }
    } catch (const CertificateFailure& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return kExitCertificate;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
