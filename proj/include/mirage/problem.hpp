#pragma once

#include <array>
#include <optional>
#include <string>

#include "mirage/continuation.hpp"

namespace mirage {

// JSON problem file. Rationals are strings "n" or "n/d" throughout.
struct ProblemFile {
    std::vector<RatVec> phi;
    std::optional<RatVec> tope_representative;
    std::optional<RatVec> target_tope;
    std::optional<RatVec> lambda;
    std::optional<RatVec> lambda_to;
    int sweep_steps = 10;
    std::optional<RatVec> x;
    std::optional<IntVec> m;
    std::optional<WeightPolynomial> weight;
    std::optional<SubsetMask> face_set;
    std::optional<RatVec> slice_from;
    std::optional<RatVec> slice_to;
    int slice_steps = 10;
    std::optional<std::array<Rat, 4>> window;
    int resolution = 256;
};

ProblemFile parse_problem(const std::string& path);
ProblemFile parse_problem_text(const std::string& text);

struct RunOptions {
    std::uint64_t seed = 0;
    std::optional<int> resolution;
    std::optional<std::array<Rat, 4>> window;
    int trials = 20;
};

struct RunResult {
    int exit_code = 0;
    std::string output;
};

// Subcommands: validate, topes, bg, eval, count, sum, volume, wallcross,
// sweep, face, toric, render. Throws mirage::Error for module failures; the
// CLI maps error codes to exit codes.
RunResult run(const std::string& subcommand, const ProblemFile& problem, const RunOptions& opts);

} // namespace mirage
