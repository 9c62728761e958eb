#pragma once

#include <cstdint>
#include <optional>

#include "mirage/linalg.hpp"
#include "mirage/lp.hpp"

namespace mirage {

// Index subsets of {1..N} as bitmasks, bit i-1 for index i.
using SubsetMask = std::uint32_t;

#ifndef MIRAGE_MAX_VECTORS
#define MIRAGE_MAX_VECTORS 24
#endif
inline constexpr int kMaxVectors = MIRAGE_MAX_VECTORS;
static_assert(kMaxVectors >= 1 && kMaxVectors <= 24, "the N cap is configurable down, never up");

int popcount(SubsetMask m);
SubsetMask full_mask(int n);
std::vector<int> mask_indices(SubsetMask m); // 0-based, ascending
std::string mask_to_string(SubsetMask m);    // "{1,3,4}" style, 1-based

struct Wall {
    IntVec normal; // primitive, first nonzero entry positive
    SubsetMask spanning_indices = 0;

    bool operator==(const Wall& o) const { return normal == o.normal; }
};

struct Tope {
    std::vector<int> signs; // one of +1/-1 per wall, in wall order
    RatVec representative;

    bool operator==(const Tope& o) const { return signs == o.signs; }
    bool operator<(const Tope& o) const { return signs < o.signs; }
};

struct EdgeGenerators {
    SubsetMask basic_set = 0;
    // u[j] holds the coefficients of phi_j over the basis I (indexed by the
    // ascending members of I); defined for j not in I.
    std::vector<RatVec> u_by_complement;
    std::vector<RatVec> generators; // g_j in R^N, same order as complement indices
    std::vector<int> complement;    // ascending 0-based indices outside I
};

struct RegularCovector {
    RatVec beta; // length N
};

class Configuration {
public:
    // Builds the configuration and its caches. Zero vectors and a non-spanning
    // phi are always rejected; the salience check runs unless deferred (the
    // flipped systems of wall-crossing need non-salient instances).
    static Configuration make(std::vector<RatVec> phi, bool check_salient = true);

    int n() const { return n_; }
    int r() const { return r_; }
    int d() const { return n_ - r_; }
    const std::vector<RatVec>& phi() const { return phi_; }
    const RatVec& phi(int i) const { return phi_[i]; }
    const RatMat& matrix() const { return matrix_; }
    bool integral() const { return integral_; }
    const IntMat& integer_matrix() const { return int_matrix_; } // requires integral()
    const std::vector<RatVec>& kernel_rational() const { return kernel_rational_; }
    // Basis of V cap Z^N (valid for rational phi as well; row scaling keeps
    // both the kernel and the lattice).
    const std::vector<IntVec>& kernel_integer() const { return kernel_integer_; }

    const std::vector<Wall>& walls() const { return walls_; }
    const std::vector<SubsetMask>& basic_subsets() const { return basic_subsets_; }
    const std::vector<SubsetMask>& generating_subsets() const { return generating_subsets_; }
    const RatMat& basis_inverse(SubsetMask basic) const;

    bool is_basic(SubsetMask m) const;
    bool is_generating(SubsetMask m) const;

private:
    int n_ = 0, r_ = 0;
    std::vector<RatVec> phi_;
    RatMat matrix_;
    bool integral_ = false;
    IntMat int_matrix_;
    std::vector<RatVec> kernel_rational_;
    std::vector<IntVec> kernel_integer_;
    std::vector<Wall> walls_;
    std::vector<SubsetMask> basic_subsets_;
    std::vector<SubsetMask> generating_subsets_;
    std::vector<RatMat> basic_inverses_;
    std::vector<int> basic_index_of_mask_; // dense map mask -> index into basic_subsets_, or -1
    friend void validate(const Configuration&);
};

// Verifies all Configuration invariants (including salience); throws
// ZeroVector / NotSpanning / NotSalient.
void validate(const Configuration& cfg);

std::vector<Wall> walls(const Configuration& cfg);
std::vector<SubsetMask> basic_subsets(const Configuration& cfg);
std::vector<SubsetMask> generating_subsets(const Configuration& cfg);

bool is_regular(const Configuration& cfg, const RatVec& lambda);
Tope tope_of(const Configuration& cfg, const RatVec& lambda);

// Every realizable wall-sign vector, sorted by sign vector, each with a strict
// interior witness. Flood fill over the tope adjacency graph.
std::vector<Tope> enumerate_topes(const Configuration& cfg);

// The unique differing wall when the topes share a facet; two distinct topes
// at sign distance one always do, and the crossing point is verified exactly.
std::optional<Wall> adjacent(const Configuration& cfg, const Tope& t1, const Tope& t2);

// Shortest adjacency path (BFS, lexicographic-sign tie-break).
std::vector<Tope> tope_path(const Configuration& cfg, const Tope& from, const Tope& to);

// B(Phi,tau): basic subsets whose cone contains the tope.
std::vector<SubsetMask> basic_subsets_of_tope(const Configuration& cfg, const Tope& tau);

// G(Phi,tau): generating subsets whose cone contains the tope. Equals the
// upward closure of B(Phi,tau) for regular representatives.
std::vector<SubsetMask> generating_subsets_of_tope(const Configuration& cfg, const Tope& tau);

// s_I(Phi,lambda): coordinates of lambda over the basis I, zeros elsewhere.
RatVec vertex(const Configuration& cfg, SubsetMask basic, const RatVec& lambda);

EdgeGenerators edge_generators(const Configuration& cfg, SubsetMask basic);

// Phi with signs negated on B; salience intentionally not revalidated.
Configuration flip(const Configuration& cfg, SubsetMask b);

bool is_flip_salient(const Configuration& cfg, SubsetMask b);

// lambda in tau - b(Phi): exists t in [0,1]^N with lambda + sum t_i phi_i
// strictly inside tau.
bool in_fattened_tope(const Configuration& cfg, const Tope& tau, const RatVec& lambda);

RegularCovector random_regular_covector(const Configuration& cfg, std::uint64_t seed);
bool is_regular_covector(const Configuration& cfg, const RatVec& beta);

// A(Phi,tau1,tau2): indices whose phi_i lies strictly on the tau1 side of the
// common wall.
SubsetMask crossing_set(const Configuration& cfg, const Tope& t1, const Tope& t2);

} // namespace mirage
