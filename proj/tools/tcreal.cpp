#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace tcreal;
using namespace tcreal::cli;

const std::map<std::string, GraphMode> mode_names{{"simple", GraphMode::simple}, {"multi", GraphMode::multi}};
const std::map<std::string, Format> format_names{{"json", Format::json}, {"text", Format::text}, {"dot", Format::dot}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporally connected realizations of degree sequences"};
    app.require_subcommand(1);

    GraphMode mode = GraphMode::simple;
    Format format = Format::text;
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", mode, "simple or multi")->transform(CLI::CheckedTransformer(mode_names));
    };
    auto add_format = [&](CLI::App* sub, const char* help) {
        sub->add_option("--format", format, help)->transform(CLI::CheckedTransformer(format_names));
    };

    std::optional<std::string> sequence;
    std::optional<std::string> out_path;
    std::optional<std::uint64_t> seed;
    std::string path = "-";
    std::size_t n = 4;
    std::size_t repeat = 3;
    bool no_verify = false;

    auto* check = app.add_subcommand("check", "decide each sequence (argument or one per stdin line)");
    check->add_option("sequence", sequence, "degrees separated by spaces or commas");
    add_mode(check);
    add_format(check, "json or text");

    auto* build = app.add_subcommand("build", "construct, label and self-verify a realization");
    build->add_option("sequence", sequence, "degrees separated by spaces or commas");
    add_mode(build);
    add_format(build, "json (graph file), dot or text; default json");
    build->add_option("--out", out_path, "write the artifact here instead of stdout");
    build->add_flag("--no-verify", no_verify, "skip the self-check");
    build->add_option("--seed", seed, "reserved; constructions are deterministic");

    auto* verify = app.add_subcommand("verify", "check a labeled graph file");
    verify->add_option("file", path, "graph JSON, or - for stdin");
    add_format(verify, "json or text");

    auto* oracle = app.add_subcommand("oracle", "compare the decision with exhaustive search");
    oracle->add_option("--n", n, "largest sequence length (6 simple, 5 multi)");
    add_mode(oracle);
    add_format(oracle, "json or text");

    auto* bench = app.add_subcommand("bench", "time construction on the (4,...,4,3,3,2,2) family");
    bench->add_option("--n", n, "number of vertices");
    bench->add_option("--repeat", repeat, "runs; the best is reported");
    bench->add_option("--seed", seed, "reserved; constructions are deterministic");
    add_mode(bench);
    add_format(bench, "json or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : bad_input;
    }

    try {
        if (*check) return cmd_check({sequence, mode, format}, std::cin, std::cout, std::cerr);
        if (*build) {
            bool explicit_format = build->count("--format") > 0;
            return cmd_build({sequence, mode, explicit_format ? format : Format::json, out_path, !no_verify, seed},
                             std::cin, std::cout, std::cerr);
        }
        if (*verify) return cmd_verify({path, format}, std::cin, std::cout, std::cerr);
        if (*oracle) return cmd_oracle({n, mode, format}, std::cout, std::cerr);
        if (*bench) return cmd_bench({n, mode, format, repeat, seed}, std::cout, std::cerr);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return bad_input;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return internal;
    }
    return bad_input;
}
