// mrt: matroid T-space computations on a presentation matrix.
//
// Exit status: 0 success, 1 a verification failed, 2 usage or parse error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mrt/cli.hpp"
#include "mrt/ingest.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Matroid T-spaces, broken circuit complexes and multiplicity bases"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string input_path, tflat, dot_path;
    bool as_json = false;
    std::uint64_t seed = 0;
    app.add_option("--input", input_path, "Matrix file (text or JSON); '-' reads standard input");
    app.add_option("--tflat", tflat, "T-flat to work in, e.g. 1234 or 1,2,10 (default: the ground set)");
    app.add_option("--dot", dot_path, "tflats: write the labelled lattice as Graphviz DOT");
    app.add_flag("--json", as_json, "Print the versioned JSON report");
    app.add_option("--seed", seed, "gen-uniform: random seed");

    mrt::CommandOptions options;
    const std::map<std::string, std::string> help{
        {"circuits", "List the circuits"},
        {"tflats", "The lattice of T-flats and its labelled covers"},
        {"beta", "Beta invariant of the T-space by four routes"},
        {"bnbc", "Beta-nbc bases of every T-flat that is not a circuit"},
        {"homology", "Reduced integral homology of the reduced broken circuit complex"},
        {"basis", "The polynomials x_B spanning the multiplicity space"},
        {"verify", "Run every invariant check; exit 1 on failure"},
        {"gen-uniform", "Random generic r x n representation of U(r,n)"},
    };
    for (const auto& name : mrt::command_names()) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        if (name == "gen-uniform") {
            sub->add_option("r", options.r, "rank")->required();
            sub->add_option("n", options.n, "number of columns")->required();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        options.seed = seed;
        if (!tflat.empty()) options.tflat = mrt::parse_element_set(tflat);
        if (!dot_path.empty() && command != "tflats") throw mrt::UsageError("--dot only applies to tflats");

        std::optional<mrt::InputMatrix> input;
        if (!input_path.empty()) input = mrt::ingest_file(input_path);
        const auto out = mrt::run_command(command, input ? &*input : nullptr, options);

        if (!dot_path.empty()) {
            if (out.dot.empty()) throw mrt::UsageError("the matroid has no T-flats to draw");
            std::ofstream f(dot_path, std::ios::binary);
            if (!(f << out.dot)) throw mrt::UsageError("cannot write " + dot_path);
        }
        if (as_json)
            std::cout << out.report.dump(2) << "\n";
        else
            std::cout << out.text;
        return out.exit_code;
    } catch (const mrt::ParseError& e) {
        std::cerr << "mrt: parse error: " << e.what() << "\n";
        return 2;
    } catch (const mrt::UsageError& e) {
        std::cerr << "mrt: " << e.what() << "\n";
        return 2;
    }
}
