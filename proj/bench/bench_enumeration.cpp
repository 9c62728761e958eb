// Compares the serial reference lattice enumerator with the OpenMP kernel on
// growing knapsack and hexagon slices, checking the outputs match.

#include <chrono>
#include <cstdio>

#include "mirage/enumeration.hpp"

using namespace mirage;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

void bench_case(const char* name, const Configuration& cfg, const IntVec& lambda) {
    std::vector<CoordSign> signs(cfg.n(), CoordSign::NonNeg);
    auto t0 = std::chrono::steady_clock::now();
    auto serial = lattice_points_signed_serial(cfg, signs, lambda);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = lattice_points_signed(cfg, signs, lambda);
    auto t2 = std::chrono::steady_clock::now();
    bool same = serial == parallel;
    std::printf("%-24s points=%-9zu serial=%8.3fs parallel=%8.3fs speedup=%5.2fx  %s\n", name,
                serial.size(), seconds(t0, t1), seconds(t1, t2),
                seconds(t0, t1) / std::max(1e-9, seconds(t1, t2)), same ? "match" : "MISMATCH");
}

} // namespace

int main() {
    {
        std::vector<RatVec> phi(4, rat_vec({1}));
        auto k4 = Configuration::make(std::move(phi));
        bench_case("knapsack4 lambda=150", k4, int_vec({150}));
        bench_case("knapsack4 lambda=260", k4, int_vec({260}));
    }
    {
        auto hex = Configuration::make({rat_vec({1, 0, 0, 0}), rat_vec({0, 1, 0, 0}),
                                        rat_vec({0, 0, 1, 0}), rat_vec({0, 0, 0, 1}),
                                        rat_vec({-1, -1, 1, 1}), rat_vec({1, -1, 0, 1})});
        bench_case("hexagon ample small", hex, int_vec({200, -100, 200, 400}));
        bench_case("hexagon ample large", hex, int_vec({600, -300, 600, 1200}));
    }
    return 0;
}
