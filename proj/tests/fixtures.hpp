#pragma once

#include "mirage/configuration.hpp"

namespace mirage::tests {

inline Configuration interval() { return Configuration::make({rat_vec({1}), rat_vec({1})}); }

inline Configuration knapsack(int n) {
    std::vector<RatVec> phi(n, rat_vec({1}));
    return Configuration::make(std::move(phi));
}

inline Configuration onetwo() { return Configuration::make({rat_vec({1}), rat_vec({2})}); }

// phi1, phi2, phi1+phi2 with the standard basis
inline Configuration triple() {
    return Configuration::make({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({1, 1})});
}

// integral scaling of (phi1, phi2, (phi2-phi1)/2, (phi1+phi2)/2); positive
// scalings keep all the tope/subset combinatorics and the W-polynomials
inline Configuration b2() {
    return Configuration::make({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({-1, 1}), rat_vec({1, 1})});
}

// the paper's exact rational B2 vectors
inline Configuration b2_paper() {
    RatVec phi3 = {Rat(-1) / 2, Rat(1) / 2};
    RatVec phi4 = {Rat(1) / 2, Rat(1) / 2};
    return Configuration::make({rat_vec({1, 0}), rat_vec({0, 1}), phi3, phi4});
}

inline Configuration threetopes() {
    return Configuration::make(
        {rat_vec({1, 0, 0}), rat_vec({0, 1, 0}), rat_vec({0, 0, 1}), rat_vec({1, 1, 1})});
}

inline Configuration hexagon() {
    return Configuration::make({rat_vec({1, 0, 0, 0}), rat_vec({0, 1, 0, 0}), rat_vec({0, 0, 1, 0}),
                                rat_vec({0, 0, 0, 1}), rat_vec({-1, -1, 1, 1}), rat_vec({1, -1, 0, 1})});
}

// [0,a] x [0,b] as a partition polytope
inline Configuration square() {
    return Configuration::make({rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({1, 0}), rat_vec({0, 1})});
}

// the tipi with vertices (0,0,0),(1,0,0),(0,1,0),(0,0,1),(1,1,0):
// slacks of z>=0, x>=0, y>=0, x+z<=1, y+z<=1
inline Configuration tipi() {
    return Configuration::make(
        {rat_vec({1, 1}), rat_vec({1, 0}), rat_vec({0, 1}), rat_vec({1, 0}), rat_vec({0, 1})});
}

inline SubsetMask mask(std::initializer_list<int> one_based) {
    SubsetMask m = 0;
    for (int i : one_based) m |= 1u << (i - 1);
    return m;
}

} // namespace mirage::tests
