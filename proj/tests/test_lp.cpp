#include <doctest.h>

#include <algorithm>
#include <random>

#include "mirage/lp.hpp"

using namespace mirage;

TEST_CASE("maximize basics") {
    // max x1 with 0 <= x1 <= 1
    LinearSystem sys;
    sys.dim = 1;
    sys.add(rat_vec({1}), Rel::GE, 0);
    sys.add(rat_vec({1}), Rel::LE, 1);
    auto out = maximize(rat_vec({1}), sys);
    REQUIRE(out.status == LPOutcome::Status::Optimal);
    CHECK(out.value == Rat(1));
    CHECK(out.witness == rat_vec({1}));

    // max x1+x2 with x1+x2 <= 3, x >= 0
    LinearSystem sys2;
    sys2.dim = 2;
    sys2.add(rat_vec({1, 1}), Rel::LE, 3);
    sys2.add(rat_vec({1, 0}), Rel::GE, 0);
    sys2.add(rat_vec({0, 1}), Rel::GE, 0);
    auto out2 = maximize(rat_vec({1, 1}), sys2);
    REQUIRE(out2.status == LPOutcome::Status::Optimal);
    CHECK(out2.value == Rat(3));

    // max x1 with x1 >= 0 is unbounded
    LinearSystem sys3;
    sys3.dim = 1;
    sys3.add(rat_vec({1}), Rel::GE, 0);
    CHECK(maximize(rat_vec({1}), sys3).status == LPOutcome::Status::Unbounded);

    // infeasible
    LinearSystem sys4;
    sys4.dim = 1;
    sys4.add(rat_vec({1}), Rel::GE, 2);
    sys4.add(rat_vec({1}), Rel::LE, 1);
    CHECK(maximize(rat_vec({1}), sys4).status == LPOutcome::Status::Infeasible);
}

TEST_CASE("feasible_strict basics") {
    LinearSystem open01;
    open01.dim = 1;
    open01.add(rat_vec({1}), Rel::GT, 0);
    open01.add(rat_vec({1}), Rel::LT, 1);
    auto w = feasible_strict(open01);
    REQUIRE(w.has_value());
    CHECK(sgn((*w)[0]) > 0);
    CHECK((*w)[0] < Rat(1));

    LinearSystem contra;
    contra.dim = 1;
    contra.add(rat_vec({1}), Rel::GT, 0);
    contra.add(rat_vec({1}), Rel::LT, 0);
    CHECK(!feasible_strict(contra).has_value());

    // salient-quadrant style: x1 > 0, x2 > 0, x1 + x2 = 0
    LinearSystem salient;
    salient.dim = 2;
    salient.add(rat_vec({1, 0}), Rel::GT, 0);
    salient.add(rat_vec({0, 1}), Rel::GT, 0);
    salient.add(rat_vec({1, 1}), Rel::EQ, 0);
    CHECK(!feasible_strict(salient).has_value());
}

TEST_CASE("witnesses satisfy the constraints exactly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int dim = 1 + static_cast<int>(rng() % 3);
        LinearSystem sys;
        sys.dim = dim;
        int rows = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < rows; ++i) {
            RatVec a(dim);
            for (int j = 0; j < dim; ++j) a[j] = Rat(static_cast<long>(rng() % 7) - 3);
            Rel rel = static_cast<Rel>(rng() % 5);
            sys.add(a, rel, Rat(static_cast<long>(rng() % 7) - 3));
        }
        // keep it bounded with a box so strictness is decidable quickly
        for (int j = 0; j < dim; ++j) {
            RatVec e(dim, Rat(0));
            e[j] = 1;
            sys.add(e, Rel::GE, -10);
            RatVec e2 = e;
            sys.add(e2, Rel::LE, 10);
        }
        auto w = feasible_strict(sys);
        if (!w) continue;
        for (const auto& c : sys.constraints) {
            Rat v = dot(c.covector, *w);
            switch (c.rel) {
                case Rel::LE: CHECK(v <= c.rhs); break;
                case Rel::GE: CHECK(v >= c.rhs); break;
                case Rel::EQ: CHECK(v == c.rhs); break;
                case Rel::LT: CHECK(v < c.rhs); break;
                case Rel::GT: CHECK(v > c.rhs); break;
            }
        }
    }
}

TEST_CASE("feasibility verdict is invariant under row permutation") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int dim = 2;
        LinearSystem sys;
        sys.dim = dim;
        int rows = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < rows; ++i) {
            RatVec a(dim);
            for (int j = 0; j < dim; ++j) a[j] = Rat(static_cast<long>(rng() % 5) - 2);
            sys.add(a, rng() % 2 ? Rel::GT : Rel::LE, Rat(static_cast<long>(rng() % 5) - 2));
        }
        LinearSystem perm = sys;
        std::shuffle(perm.constraints.begin(), perm.constraints.end(), rng);
        CHECK(feasible_strict(sys).has_value() == feasible_strict(perm).has_value());
    }
}
