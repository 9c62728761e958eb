#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mirage/problem.hpp"

int main(int argc, char** argv) {
    CLI::App app{"mirage: exact analytic continuation of parametric partition polytopes"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string out_path;
    std::string window_arg;
    mirage::RunOptions opts;
    int resolution = -1;

    const std::vector<std::string> names = {"validate", "topes", "bg",    "eval",  "count", "sum",
                                            "volume",   "wallcross", "sweep", "face",  "toric", "render"};
    const std::vector<std::string> descriptions = {
        "check the configuration invariants",
        "enumerate topes with sign vectors and representatives",
        "print the combinatorial Brianchon-Gram polynomial of the tope",
        "evaluate the continuation at the point x",
        "count lattice points of p(Phi,lambda) by direct enumeration",
        "signed lattice sum S(Phi,tau,h)(lambda)",
        "exact volume polynomial value at lambda",
        "wall-crossing prediction between two topes, with identity check",
        "CSV sweep of count/signed sum/volume along a lambda segment",
        "CSV sweep of transverse slice counts P(y) for a face",
        "multiplicity of the character m",
        "SVG picture of the continuation on V(Phi,lambda) (d = 2 only)"};

    for (size_t i = 0; i < names.size(); ++i) {
        auto* sub = app.add_subcommand(names[i], descriptions[i]);
        sub->add_option("problem", problem_path, "problem JSON file")->required();
        sub->add_option("--seed", opts.seed, "RNG seed for beta/xi sampling (default 0)");
        sub->add_option("--resolution", resolution, "render cells per axis");
        sub->add_option("--window", window_arg, "render window x0,x1,y0,y1");
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
        sub->add_option("--trials", opts.trials, "repetitions for randomized properties");
    }

    CLI11_PARSE(app, argc, argv);
    std::string sub = app.get_subcommands().front()->get_name();

    try {
        if (resolution > 0) opts.resolution = resolution;
        if (!window_arg.empty()) {
            std::array<mirage::Rat, 4> w;
            size_t pos = 0;
            for (int k = 0; k < 4; ++k) {
                size_t comma = window_arg.find(',', pos);
                std::string piece = window_arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
                w[k] = mirage::parse_rational(piece);
                if (k < 3) {
                    if (comma == std::string::npos)
                        mirage::fail(mirage::ErrorCode::ParseError, "--window needs four comma-separated rationals");
                    pos = comma + 1;
                }
            }
            opts.window = w;
        }

        mirage::ProblemFile problem = mirage::parse_problem(problem_path);
        mirage::RunResult result = mirage::run(sub, problem, opts);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) mirage::fail(mirage::ErrorCode::ParseError, "cannot open output file '" + out_path + "'");
            out << result.output;
        } else {
            std::cout << result.output;
        }
        return result.exit_code;
    } catch (const mirage::Error& e) {
        std::cerr << "error [" << mirage::error_name(e.code()) << "]: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(mirage::ErrorCode::Internal);
    }
}
