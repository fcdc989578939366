#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcreal/tcreal.hpp"

// Subcommand bodies for the tcreal executable. Each returns the process exit
// code: 0 realizable / ok, 1 not realizable / violation, 2 input error,
// 3 internal invariant failure.
namespace tcreal::cli {

enum Exit : int { ok = 0, no = 1, bad_input = 2, internal = 3 };

enum class Format { json, text, dot };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "text") return Format::text;
    if (s == "dot") return Format::dot;
    throw precondition_error("unknown format '" + s + "'");
}

// Above this many vertices build skips the all-pairs TC check; its bitsets
// take n^2/8 bytes.
inline constexpr std::size_t tc_verify_limit = 20000;

struct RunReport {
    std::string sequence;
    GraphMode mode = GraphMode::simple;
    Decision decision;
    std::size_t n = 0;
    std::size_t m = 0;
    Label max_label = 0;
    std::size_t shared = 0;
    std::string certificate;
    double ms = 0;
    std::optional<bool> verified;
    std::string note;
};

inline std::string certificate_kind(const Certificate& c) {
    if (c.central_cycle) return "c4-pivotable";
    return c.shared.empty() ? "edge-disjoint" : "one-shared-edge";
}

inline nlohmann::json report_json(const RunReport& r) {
    nlohmann::json j;
    j["sequence"] = r.sequence;
    j["mode"] = to_string(r.mode);
    j["realizable"] = r.decision.realizable;
    j["reason"] = to_string(r.decision.reason);
    if (r.decision.realizable && !r.certificate.empty()) {
        j["n"] = r.n;
        j["m"] = r.m;
        j["max_label"] = r.max_label;
        j["shared_edges"] = r.shared;
        j["certificate"] = r.certificate;
    }
    j["ms"] = r.ms;
    if (r.verified) j["verified"] = *r.verified;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline std::string report_text(const RunReport& r) {
    std::ostringstream out;
    out << r.sequence << " [" << to_string(r.mode) << "]: " << (r.decision.realizable ? "yes" : "no") << " ("
        << to_string(r.decision.reason) << ")";
    if (r.decision.realizable && !r.certificate.empty()) {
        out << " n=" << r.n << " m=" << r.m << " max_label=" << r.max_label << " shared=" << r.shared
            << " certificate=" << r.certificate;
    }
    out << " " << r.ms << " ms";
    if (r.verified) out << (*r.verified ? " verified" : " VERIFICATION FAILED");
    if (!r.note.empty()) out << " (" << r.note << ")";
    return out.str();
}

// Non-blank lines of the input; a positional sequence wins over stdin.
inline std::vector<std::string> input_lines(const std::optional<std::string>& positional, std::istream& in) {
    std::vector<std::string> lines;
    if (positional) {
        lines.push_back(*positional);
        return lines;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r,") != std::string::npos) lines.push_back(line);
    }
    return lines;
}

inline DegreeSequence degrees_of(const LabeledMultigraph& g) {
    std::vector<std::uint32_t> deg(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    return DegreeSequence(deg);
}

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

struct CheckOptions {
    std::optional<std::string> sequence;
    GraphMode mode = GraphMode::simple;
    Format format = Format::text;
};

// One report per input line. The worst line decides the exit code.
inline int cmd_check(const CheckOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    auto lines = input_lines(opt.sequence, in);
    if (lines.empty()) {
        err << "error: no sequence given\n";
        return bad_input;
    }
    int code = ok;
    for (const auto& line : lines) {
        DegreeSequence d;
        try {
            d = parse_degree_sequence(line);
        } catch (const std::invalid_argument& ex) {
            err << "error: " << ex.what() << "\n";
            code = bad_input;
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        RunReport r;
        r.sequence = to_string(d);
        r.mode = opt.mode;
        r.decision = check_tc_realizable(d, opt.mode);
        r.ms = elapsed_ms(start);
        if (opt.format == Format::json) out << report_json(r).dump() << "\n";
        else out << report_text(r) << "\n";
        if (!r.decision.realizable && code == ok) code = no;
    }
    return code;
}

struct BuildOptions {
    std::optional<std::string> sequence;
    GraphMode mode = GraphMode::simple;
    Format format = Format::json;
    std::optional<std::string> out_path;
    bool verify = true;
    std::optional<std::uint64_t> seed;  // accepted, unused: constructions are deterministic
};

inline int cmd_build(const BuildOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    auto lines = input_lines(opt.sequence, in);
    if (lines.size() != 1) {
        err << "error: build takes exactly one sequence\n";
        return bad_input;
    }
    DegreeSequence d;
    try {
        d = parse_degree_sequence(lines[0]);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return bad_input;
    }

    RunReport r;
    r.sequence = to_string(d);
    r.mode = opt.mode;
    auto start = std::chrono::steady_clock::now();
    TcResult res;
    try {
        res = realize_tc(d, opt.mode);
    } catch (const std::logic_error& ex) {
        err << "internal error: " << ex.what() << "\n";
        return internal;
    }
    r.decision = res.decision;
    r.ms = elapsed_ms(start);
    if (!res.decision.realizable) {
        if (opt.format == Format::json) out << report_json(r).dump(2) << "\n";
        else out << report_text(r) << "\n";
        return no;
    }

    const auto& g = res.realization->graph;
    const auto& cert = res.realization->certificate;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.max_label = res.labeling.max_label();
    r.shared = cert.shared.size();
    r.certificate = certificate_kind(cert);

    if (opt.verify) {
        std::string problem;
        if (degrees_of(g) != d) {
            problem = "degree mismatch";
        } else if (!is_simple(g, res.labeling)) {
            problem = "labeling is not simple";
        } else if (!is_proper(g, res.labeling)) {
            problem = "labeling is not proper";
        } else if (auto why = certificate_problem(g, cert)) {
            problem = "certificate: " + *why;
        } else if (g.vertex_count() <= tc_verify_limit) {
            if (auto gap = first_unreachable_pair(g, res.labeling)) {
                problem = "no journey from " + std::to_string(gap->first) + " to " + std::to_string(gap->second);
            }
        } else {
            r.note = "temporal connectivity not re-checked above " + std::to_string(tc_verify_limit) + " vertices";
        }
        r.verified = problem.empty();
        if (!problem.empty()) {
            err << "internal error: " << problem << "\n";
            err << report_text(r) << "\n";
            return internal;
        }
    }

    std::string artifact;
    if (opt.format == Format::json) {
        auto j = to_json(g, cert.central_cycle);
        j["report"] = report_json(r);
        artifact = j.dump(2) + "\n";
    } else if (opt.format == Format::dot) {
        artifact = to_dot(g, cert.central_cycle);
    } else {
        artifact = report_text(r) + "\n";
    }
    if (opt.out_path) {
        std::ofstream file(*opt.out_path);
        if (!file) {
            err << "error: cannot write " << *opt.out_path << "\n";
            return bad_input;
        }
        file << artifact;
        out << report_text(r) << "\n";
    } else {
        out << artifact;
    }
    return ok;
}

struct VerifyOptions {
    std::string path;  // "-" reads stdin
    Format format = Format::text;
};

inline int cmd_verify(const VerifyOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string text;
    if (opt.path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(opt.path);
        if (!file) {
            err << "error: cannot read " << opt.path << "\n";
            return bad_input;
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    LoadedGraph loaded;
    try {
        loaded = graph_from_json_text(text);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return bad_input;
    }
    const auto& g = loaded.graph;
    auto lab = labeling_of(g);

    nlohmann::json j;
    std::string verdict = "ok";
    bool has_trees = false;
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) has_trees = has_trees || g.edge(e).tree != TreeFlag::none;
    if (has_trees) {
        auto why = certificate_problem(g, certificate_from_flags(g, loaded.central_cycle));
        j["certificate"] = why ? *why : "valid";
    }

    int code = ok;
    if (!is_simple(g, lab)) {
        for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
            if (lab[e] == 0) {
                verdict = "edge " + std::to_string(e) + " has no label";
                break;
            }
        }
        j["simple"] = false;
        code = no;
    } else if (auto clash = first_label_conflict(g, lab)) {
        verdict = "edges " + std::to_string(clash->first) + " and " + std::to_string(clash->second) +
                  " share an endpoint and label " + std::to_string(lab[clash->first]);
        j["simple"] = true;
        j["proper"] = false;
        code = no;
    } else if (auto gap = first_unreachable_pair(g, lab)) {
        verdict = "no journey from " + std::to_string(gap->first) + " to " + std::to_string(gap->second);
        j["simple"] = j["proper"] = true;
        j["tc"] = false;
        j["unreachable"] = {gap->first, gap->second};
        code = no;
    } else {
        j["simple"] = j["proper"] = j["tc"] = true;
    }
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["verdict"] = verdict;
    if (opt.format == Format::json) {
        out << j.dump() << "\n";
    } else {
        out << verdict << "\n";
        if (j.contains("certificate")) out << "certificate: " << j["certificate"].get<std::string>() << "\n";
    }
    return code;
}

struct OracleOptions {
    std::size_t n = 4;
    GraphMode mode = GraphMode::simple;
    Format format = Format::text;
};

inline OracleCaps oracle_caps(GraphMode mode) {
    return mode == GraphMode::simple ? OracleCaps{6, 15} : OracleCaps{5, 8};
}

// Compares the characterization with exhaustive search on every sequence
// with 1..n entries (multigraph sequences limited to 8 edges).
inline int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
    const auto caps = oracle_caps(opt.mode);
    if (opt.n > caps.max_n) {
        err << "error: oracle supports n <= " << caps.max_n << " in " << to_string(opt.mode) << " mode\n";
        return bad_input;
    }
    std::size_t checked = 0;
    std::vector<std::string> disagreements;
    for (std::size_t n = 1; n <= opt.n; ++n) {
        for (const auto& d : enumerate_sequences(n, opt.mode)) {
            if (d.sum() / 2 > caps.max_m) continue;
            ++checked;
            bool fast = check_tc_realizable(d, opt.mode).realizable;
            bool slow = oracle_tc_realizable(d, opt.mode, caps);
            if (fast != slow) {
                disagreements.push_back(to_string(d) + " check=" + (fast ? "yes" : "no") +
                                        " oracle=" + (slow ? "yes" : "no"));
            }
        }
    }
    std::sort(disagreements.begin(), disagreements.end());
    if (opt.format == Format::json) {
        nlohmann::json j;
        j["mode"] = to_string(opt.mode);
        j["n"] = opt.n;
        j["checked"] = checked;
        j["disagreements"] = disagreements;
        out << j.dump() << "\n";
    } else {
        for (const auto& s : disagreements) out << "disagree: " << s << "\n";
        if (disagreements.empty()) out << "all sequences agree (" << checked << " checked)\n";
        else out << disagreements.size() << " of " << checked << " sequences disagree\n";
    }
    return disagreements.empty() ? ok : no;
}

struct BenchOptions {
    std::size_t n = 100000;
    GraphMode mode = GraphMode::simple;
    Format format = Format::text;
    std::size_t repeat = 3;
    std::optional<std::uint64_t> seed;  // accepted, unused
};

// (4,...,4,3,3,2,2): m = 2n-3, the sparsest case with a one-shared-edge
// certificate. Plain cubic sequences stop being realizable past n = 8.
inline DegreeSequence bench_sequence(std::size_t n) {
    std::vector<std::uint32_t> v(n, 4);
    v[n - 4] = v[n - 3] = 3;
    v[n - 2] = v[n - 1] = 2;
    return DegreeSequence(v);
}

// Best-of-repeat wall time for decide + construct + label.
inline int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.n < 4 || opt.repeat == 0) {
        err << "error: bench needs n >= 4 and repeat >= 1\n";
        return bad_input;
    }
    auto d = bench_sequence(opt.n);
    double best = 0;
    TcResult res;
    for (std::size_t i = 0; i < opt.repeat; ++i) {
        auto start = std::chrono::steady_clock::now();
        res = realize_tc(d, opt.mode);
        auto ms = elapsed_ms(start);
        if (i == 0 || ms < best) best = ms;
    }
    if (!res.decision.realizable) {
        err << "internal error: bench family is not realizable\n";
        return internal;
    }
    RunReport r;
    r.sequence = "bench family, n=" + std::to_string(opt.n);
    r.mode = opt.mode;
    r.decision = res.decision;
    r.n = res.realization->graph.vertex_count();
    r.m = res.realization->graph.edge_count();
    r.max_label = res.labeling.max_label();
    r.shared = res.realization->certificate.shared.size();
    r.certificate = certificate_kind(res.realization->certificate);
    r.ms = best;
    if (opt.format == Format::json) out << report_json(r).dump() << "\n";
    else out << report_text(r) << "\n";
    return ok;
}

}  // namespace tcreal::cli
