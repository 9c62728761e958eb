#pragma once

#include "mirage/configuration.hpp"

namespace mirage {

// Per-coordinate sign constraint for a lattice slice {x in Z^N : M x = lambda}.
enum class CoordSign { NonNeg, StrictNeg, StrictPos };

struct EnumDiagnostics {
    bool empty_coset = false;   // lambda not in the integer column span of Phi
    bool empty_closure = false; // no feasible vertex, the closed polytope is empty
};

// All integer points of the slice subject to the per-coordinate signs, sorted
// lexicographically. Requires an integral configuration and integral lambda.
// The closure of the constrained region must be bounded (callers guarantee it
// via salience); the free coordinates of the lowest basic subset are scanned
// inside bounds derived from the feasible vertices.
//
// The two implementations share their contract but not their loop code: the
// serial one is the reference the parallel kernel is tested against.
std::vector<IntVec> lattice_points_signed_serial(const Configuration& cfg,
                                                 const std::vector<CoordSign>& signs,
                                                 const IntVec& lambda,
                                                 EnumDiagnostics* diag = nullptr);
std::vector<IntVec> lattice_points_signed(const Configuration& cfg,
                                          const std::vector<CoordSign>& signs,
                                          const IntVec& lambda,
                                          EnumDiagnostics* diag = nullptr);

// Lattice points of the semi-closed flip polytope: x_i < 0 on B, x_i >= 0
// off B. Checks is_flip_salient(cfg, b) up front (boundedness).
std::vector<IntVec> lattice_points_flip_polytope(const Configuration& cfg, SubsetMask b,
                                                 const IntVec& lambda,
                                                 EnumDiagnostics* diag = nullptr);

// |p(Phi,lambda) cap Z^N| by direct serial enumeration; the independent oracle
// for the quadrant machinery.
Int brute_force_count(const Configuration& cfg, const IntVec& lambda);

} // namespace mirage
