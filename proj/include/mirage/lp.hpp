#pragma once

#include <optional>

#include "mirage/rational.hpp"

namespace mirage {

enum class Rel { LE, GE, EQ, LT, GT };

struct LinearSystem {
    struct Constraint {
        RatVec covector;
        Rel rel;
        Rat rhs;
    };
    int dim = 0;
    std::vector<Constraint> constraints;

    void add(RatVec covector, Rel rel, Rat rhs);
    bool has_strict() const;
};

struct LPOutcome {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status;
    Rat value;      // meaningful when Optimal
    RatVec witness; // meaningful when Optimal
};

// Exact two-phase simplex under Bland's rule; sys must not contain strict
// relations. Deterministic: same input, same outcome and witness.
LPOutcome maximize(const RatVec& objective, const LinearSystem& sys);

// Witness satisfying every constraint at its stated strictness, or nullopt.
// Strictness is handled by one shared slack t: each "a.x > c" becomes
// "a.x >= c + t", then t is maximized subject to t <= 1.
std::optional<RatVec> feasible_strict(const LinearSystem& sys);

} // namespace mirage
