// Command-line front end: verify, chain, survey, maximize, blowup, structure,
// rho.  All outputs are stable-schema JSON unless --format csv|text.
//
// Exit codes: 0 holds/tight, 1 usage or I/O error, 2 certified violation,
// 3 inconclusive.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "maclaurin/json_io.hpp"

namespace mc = maclaurin;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kError = 1, kViolation = 2, kInconclusive = 3 };

int verdict_exit(mc::VerdictKind kind) {
    switch (kind) {
        case mc::VerdictKind::CertifiedViolation: return kViolation;
        case mc::VerdictKind::Inconclusive: return kInconclusive;
        default: return kOk;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GraphInput {
    std::string spec;          // inline graph6 or a file path
    std::string format;        // "", "graph6", "edgelist"
    std::string resolved_from; // "inline" or the path

    mc::Graph load() {
        std::string text = spec;
        bool from_file = std::filesystem::exists(spec);
        resolved_from = from_file ? spec : "inline";
        if (from_file) text = read_file(spec);
        std::string fmt = format;
        if (fmt.empty()) {
            // Edge lists contain spaces, '#' or an n= header; graph6 is one
            // token of printable bytes.
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
            }
            bool looks_edgelist = line.find(' ') != std::string::npos ||
                                  line.find('#') != std::string::npos ||
                                  line.rfind("n=", 0) == 0;
            fmt = looks_edgelist ? "edgelist" : "graph6";
        }
        if (fmt == "edgelist") {
            std::vector<std::string> warnings;
            mc::Graph g = mc::parse_edge_list(text, &warnings);
            for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
            return g;
        }
        return mc::parse_graph6(text);
    }
};

mc::WeightVector load_weights(const std::string& path, int n) {
    if (path.empty()) return mc::WeightVector::ones(n);
    return mc::parse_weights(read_file(path), n);
}

std::vector<long long> parse_multiplicities(const std::string& text) {
    std::vector<long long> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0)
            throw std::invalid_argument("bad multiplicity token: " + tok);
        out.push_back(v);
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string approx_str(const mc::CertifiedValue& v) {
    std::ostringstream out;
    out.precision(15);
    if (v.is_exact())
        out << mc::rat_to_string(v.exact_value()) << " (= " << v.approx() << ")";
    else
        out << "[" << v.approx() << " +/- " << static_cast<double>(v.width()) / 2 << "]";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified clique-inequality toolkit"};
    app.require_subcommand(1);

    std::string graph_spec, graph_format, weights_path, precision_text, format = "json";

    auto add_common = [&](CLI::App* cmd, bool with_graph = true) {
        if (with_graph) {
            cmd->add_option("-g,--graph", graph_spec, "inline graph6 string or input file path")
                ->required();
            cmd->add_option("--graph-format", graph_format, "graph6|edgelist (default: auto)")
                ->check(CLI::IsMember({"graph6", "edgelist"}));
        }
        cmd->add_option("--precision", precision_text,
                        "escalation schedule, e.g. 64,256,1024 (env MACLAURIN_PRECISION)");
        cmd->add_option("--format", format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto schedule = [&]() {
        return precision_text.empty() ? mc::default_precision_schedule()
                                      : mc::parse_precision_schedule(precision_text);
    };

    // verify
    int s = 1, q = 1, r = 1, t = 0, jobs = 1, max_iters = 10000;
    bool with_structure = false, no_refine = false, do_check = false, only_div = false;
    int fixed_s = 0, fixed_q = 0, max_q = 0;
    std::string mult_text, survey_input = "-";

    CLI::App* verify = app.add_subcommand("verify", "verify the localized inequality f <= h^{q/s}");
    add_common(verify);
    verify->add_option("-s", s, "lower clique size")->required();
    verify->add_option("-q", q, "upper clique size")->required();
    verify->add_option("--weights", weights_path, "per-vertex rational weights file");
    verify->add_flag("--structure", with_structure, "attach the equality-structure diagnosis");

    CLI::App* chain = app.add_subcommand("chain", "verify the clique-count chain for K_{r+1}-free graphs");
    add_common(chain);
    chain->add_option("-r", r, "clique-number bound")->required();
    chain->add_option("--weights", weights_path, "per-vertex rational weights file");

    CLI::App* zykov = app.add_subcommand("zykov", "verify the clique-count bound k_q <= C(r,q)(n/r)^q");
    add_common(zykov);
    zykov->add_option("-r", r, "clique-number bound")->required();
    zykov->add_option("-q", q, "clique size")->required();

    CLI::App* survey_cmd = app.add_subcommand("survey", "verify every (s,q) pair over a graph6 corpus");
    survey_cmd->add_option("input", survey_input, "corpus path, or - for stdin");
    survey_cmd->add_option("-j,--parallelism", jobs, "worker threads");
    survey_cmd->add_option("--fixed-s", fixed_s, "pin s");
    survey_cmd->add_option("--fixed-q", fixed_q, "pin q");
    survey_cmd->add_option("--max-q", max_q, "cap q");
    survey_cmd->add_flag("--only-divisible", only_div, "only pairs with s | q (exact path)");
    add_common(survey_cmd, false);

    CLI::App* maximize = app.add_subcommand("maximize", "maximise f over the surface h_s = 1");
    add_common(maximize);
    maximize->add_option("-s", s, "lower clique size")->required();
    maximize->add_option("-q", q, "upper clique size")->required();
    maximize->add_flag("--no-refine", no_refine, "uniform clique seeds only");
    maximize->add_option("--max-iters", max_iters, "ascent iteration cap");

    CLI::App* blowup_cmd = app.add_subcommand("blowup", "blow up vertices into independent sets");
    add_common(blowup_cmd);
    blowup_cmd->add_option("-x,--multiplicities", mult_text, "comma list, e.g. 2,3")->required();
    blowup_cmd->add_flag("--check", do_check, "check the counting/sigma/f equivalences");
    blowup_cmd->add_option("-s", s, "lower clique size (with --check)");
    blowup_cmd->add_option("-q", q, "upper clique size (with --check)");

    CLI::App* structure = app.add_subcommand("structure", "equality-structure diagnosis");
    add_common(structure);
    structure->add_option("-s", s, "lower clique size")->required();
    structure->add_option("-q", q, "upper clique size")->required();
    structure->add_option("--weights", weights_path, "per-vertex rational weights file");

    CLI::App* rho = app.add_subcommand("rho", "extension weight C(t,s)^{q/s}/C(t,q)");
    rho->add_option("-s", s, "lower clique size")->required();
    rho->add_option("-q", q, "upper clique size")->required();
    rho->add_option("-t", t, "extension number")->required();
    add_common(rho, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            GraphInput input{graph_spec, graph_format, ""};
            mc::Graph g = input.load();
            mc::VerifyOptions options;
            options.schedule = schedule();
            options.with_structure = with_structure;
            options.graph_id = input.resolved_from == "inline" ? graph_spec : input.resolved_from;
            mc::VerificationReport report =
                mc::verify_localized(g, s, q, load_weights(weights_path, g.vertex_count()), options);
            if (format == "text") {
                std::cout << "verdict: " << mc::to_string(report.verdict.kind)
                          << "\nlhs f = " << approx_str(report.lhs)
                          << "\nrhs h^{q/s} = " << approx_str(report.rhs) << "\n";
            } else {
                emit(mc::envelope("verify",
                                  json{{"graph", options.graph_id}, {"s", s}, {"q", q}},
                                  mc::to_json(report)));
            }
            return verdict_exit(report.verdict.kind);
        }

        if (chain->parsed()) {
            GraphInput input{graph_spec, graph_format, ""};
            mc::Graph g = input.load();
            auto links = mc::verify_chain(g, r, load_weights(weights_path, g.vertex_count()),
                                          graph_spec);
            json arr = json::array();
            int exit_code = kOk;
            for (const auto& link : links) {
                arr.push_back(mc::to_json(link));
                exit_code = std::max(exit_code, verdict_exit(link.verdict.kind));
            }
            emit(mc::envelope("chain", json{{"graph", graph_spec}, {"r", r}}, arr));
            return exit_code;
        }

        if (zykov->parsed()) {
            GraphInput input{graph_spec, graph_format, ""};
            mc::Graph g = input.load();
            mc::VerificationReport report = mc::verify_zykov(g, r, q, graph_spec);
            emit(mc::envelope("zykov", json{{"graph", graph_spec}, {"r", r}, {"q", q}},
                              mc::to_json(report)));
            return verdict_exit(report.verdict.kind);
        }

        if (survey_cmd->parsed()) {
            std::vector<std::string> lines;
            std::string line;
            if (survey_input == "-") {
                while (std::getline(std::cin, line)) lines.push_back(line);
            } else {
                std::istringstream in(read_file(survey_input));
                while (std::getline(in, line)) lines.push_back(line);
            }
            mc::SurveyOptions options;
            options.schedule = schedule();
            options.parallelism = jobs;
            options.fixed_s = fixed_s;
            options.fixed_q = fixed_q;
            options.max_q = max_q;
            options.only_divisible = only_div;
            auto records = mc::survey(lines, options);
            int exit_code = kOk;
            long long violations = 0, errors = 0;
            if (format == "csv") std::cout << mc::survey_csv_header() << "\n";
            for (const auto& rec : records) {
                if (format == "csv")
                    std::cout << mc::survey_csv_line(rec) << "\n";
                else
                    std::cout << mc::to_json(rec).dump() << "\n";
                if (rec.is_error()) {
                    ++errors;
                    continue;
                }
                exit_code = std::max(exit_code, verdict_exit(rec.verdict));
                if (rec.verdict == mc::VerdictKind::CertifiedViolation) ++violations;
            }
            std::cerr << "survey: " << records.size() << " records, " << violations
                      << " violations, " << errors << " parse errors\n";
            return exit_code;
        }

        if (maximize->parsed()) {
            GraphInput input{graph_spec, graph_format, ""};
            mc::Graph g = input.load();
            mc::OptimizeConfig config;
            config.refine = !no_refine;
            config.max_iterations = max_iters;
            config.precision_bits = schedule().max_bits();
            mc::OptimizationResult result = mc::maximize(g, s, q, config);
            emit(mc::envelope("maximize", json{{"graph", graph_spec}, {"s", s}, {"q", q}},
                              mc::to_json(result)));
            return kOk;
        }

        if (blowup_cmd->parsed()) {
            GraphInput input{graph_spec, graph_format, ""};
            mc::Graph g = input.load();
            auto multiplicities = parse_multiplicities(mult_text);
            mc::BlowupResult blown = mc::blowup({g, multiplicities});
            json result;
            result["graph6"] = mc::encode_graph6(blown.graph);
            result["n"] = blown.graph.vertex_count();
            result["origin"] = blown.origin;
            int exit_code = kOk;
            if (do_check) {
                auto report = mc::check_blowup_equivalence(g, s, q, multiplicities,
                                                           schedule().max_bits());
                result["check"] = mc::to_json(report);
                if (!report.ok) exit_code = kViolation;
            }
            emit(mc::envelope("blowup",
                              json{{"graph", graph_spec}, {"multiplicities", multiplicities}},
                              result));
            return exit_code;
        }

        if (structure->parsed()) {
            GraphInput input{graph_spec, graph_format, ""};
            mc::Graph g = input.load();
            auto diagnosis =
                mc::diagnose_equality(g, s, q, load_weights(weights_path, g.vertex_count()));
            emit(mc::envelope("structure", json{{"graph", graph_spec}, {"s", s}, {"q", q}},
                              mc::to_json(diagnosis)));
            return kOk;
        }

        if (rho->parsed()) {
            mc::CertifiedValue value = mc::extension_weight(s, q, t, schedule().max_bits());
            emit(mc::envelope("rho", json{{"s", s}, {"q", q}, {"t", t}}, mc::to_json(value)));
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
