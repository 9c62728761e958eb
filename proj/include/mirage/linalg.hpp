#pragma once

#include <optional>
#include <utility>

#include "mirage/rational.hpp"

namespace mirage {

// Rank over Q, fraction-free (Bareiss) after clearing row denominators.
int rank(const RatMat& m);

// Exact determinant of a square matrix (Bareiss).
Rat determinant(const RatMat& m);

// Solves m*x = b for square nonsingular m; throws Singular otherwise.
RatVec solve_unique(const RatMat& m, const RatVec& b);

// Inverse of a square nonsingular matrix.
RatMat inverse(const RatMat& m);

// Rational basis of {x : m*x = 0}; size cols - rank.
std::vector<RatVec> kernel_basis(const RatMat& m);

// Column-style Hermite normal form: returns (H, U) with H = m*U, U unimodular,
// H in column echelon form with positive pivots and reduced off-pivot entries.
std::pair<IntMat, IntMat> hermite_normal_form(const IntMat& m);

// Basis of the lattice {x in Z^cols : m*x = 0} (zero columns of the HNF).
std::vector<IntVec> integer_kernel_basis(const IntMat& m);

// Some x in Z^cols with m*x = b, or nullopt when b is not in the column lattice.
std::optional<IntVec> particular_integer_solution(const IntMat& m, const IntVec& b);

Int int_determinant(const IntMat& m);

} // namespace mirage
