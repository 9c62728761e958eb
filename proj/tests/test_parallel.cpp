#include <doctest.h>

#include "fixtures.hpp"
#include "mirage/enumeration.hpp"

using namespace mirage;
using namespace mirage::tests;

// The OpenMP kernel must agree with the serial reference on every slice it is
// asked for, including empty and strict-sign cases.
TEST_CASE("parallel enumeration equals the serial reference") {
    for (const auto& cfg : {interval(), onetwo(), triple(), b2(), knapsack(4), hexagon()}) {
        auto topes = enumerate_topes(cfg);
        std::vector<IntVec> lambdas;
        lambdas.push_back(IntVec(cfg.r(), Int(0)));
        for (const auto& t : topes) {
            IntVec l = primitive_integer_vector(t.representative);
            for (Int& e : l) e *= 3;
            lambdas.push_back(l);
        }
        for (const auto& lambda : lambdas) {
            for (SubsetMask b : {SubsetMask(0), full_mask(cfg.n()), mask({1})}) {
                if (!is_flip_salient(cfg, b)) continue;
                std::vector<CoordSign> signs(cfg.n(), CoordSign::NonNeg);
                for (int i : mask_indices(b)) signs[i] = CoordSign::StrictNeg;
                CHECK(lattice_points_signed(cfg, signs, lambda) ==
                      lattice_points_signed_serial(cfg, signs, lambda));
            }
            std::vector<CoordSign> strict(cfg.n(), CoordSign::StrictPos);
            CHECK(lattice_points_signed(cfg, strict, lambda) ==
                  lattice_points_signed_serial(cfg, strict, lambda));
        }
    }
}

TEST_CASE("parallel enumeration on a larger knapsack slice") {
    auto k3 = knapsack(3);
    std::vector<CoordSign> signs(3, CoordSign::NonNeg);
    auto serial = lattice_points_signed_serial(k3, signs, int_vec({120}));
    auto parallel = lattice_points_signed(k3, signs, int_vec({120}));
    CHECK(serial.size() == 7381); // C(122,2) compositions of 120 into 3 parts
    CHECK(serial == parallel);
}
