// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the whole battery on the bundled problem files.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mirage/facelift.hpp"
#include "mirage/problem.hpp"
#include "mirage/render.hpp"

using namespace mirage;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    std::function<bool(std::string&)> body;
};

void report(const char* name, bool ok, double secs, const std::string& detail) {
    std::printf("%-28s %s  (%.2fs)%s%s\n", name, ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++g_failures;
}

ProblemFile load(const std::string& name) {
    return parse_problem(std::string(MIRAGE_PROBLEM_DIR) + "/" + name);
}

Configuration cfg_of(const ProblemFile& p) { return Configuration::make(p.phi); }

struct Example {
    std::string file;
    Configuration cfg;
    std::vector<Tope> topes;
};

std::vector<Example>& example_suite() {
    static std::vector<Example> suite = [] {
        std::vector<Example> out;
        for (const char* name : {"interval.json", "knapsack3.json", "knapsack4.json", "onetwo.json",
                                 "triple.json", "b2.json", "hexagon.json"}) {
            ProblemFile p = load(name);
            Configuration cfg = cfg_of(p);
            out.push_back({name, cfg, enumerate_topes(cfg)});
        }
        return out;
    }();
    return suite;
}

const Example& example(const std::string& file) {
    for (const auto& e : example_suite())
        if (e.file == file) return e;
    throw Error(ErrorCode::Internal, "no example " + file);
}

bool expect(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// ---- criterion bodies ------------------------------------------------------

bool golden_polynomials(std::string& detail) {
    bool ok = true;

    // (a) the interval
    {
        const auto& e = example("interval.json");
        Tope pos = tope_of(e.cfg, rat_vec({1}));
        ok &= expect(wpoly_to_text(bg_polynomial(e.cfg, pos)) == "+p1p2 -q1q2", detail, "interval");
    }
    // (b) knapsacks N=3..6
    for (int n = 3; n <= 6; ++n) {
        std::vector<RatVec> phi(n, rat_vec({1}));
        Configuration k = Configuration::make(std::move(phi));
        WPolynomial x = bg_polynomial(k, tope_of(k, rat_vec({1})));
        WPolynomial want;
        want.n = n;
        want.add_term(0, 1);
        want.add_term(full_mask(n), (n % 2 == 0) ? -1 : 1);
        ok &= expect(x == want, detail, "knapsack N=" + std::to_string(n));
    }
    // (c) the three-vector example
    {
        const auto& e = example("triple.json");
        Tope tau1 = tope_of(e.cfg, rat_vec({3, 1}));
        ok &= expect(wpoly_to_text(bg_polynomial(e.cfg, tau1)) == "+p1p2p3 +q1p2p3 -p1q2q3 -q1q2q3",
                     detail, "triple");
    }
    // (d) all four printed B2 polynomials
    {
        const auto& e = example("b2.json");
        Tope t1 = tope_of(e.cfg, rat_vec({1, 2}));
        Tope t2 = tope_of(e.cfg, rat_vec({2, 1}));
        ok &= expect(wpoly_to_text(bg_polynomial(e.cfg, t1)) == "+p1p2p3p4 -p1q2q3p4 -q1p2p3q4 +q1q2q3q4",
                     detail, "B2 X(tau1)");
        ok &= expect(wpoly_to_text(bg_polynomial(e.cfg, t2)) == "+p1p2p3p4 +q1p2p3p4 +p1q2q3q4 +q1q2q3q4",
                     detail, "B2 X(tau2)");
        Configuration f = flip(e.cfg, 0b0110u);
        Tope t2f = tope_of(f, rat_vec({2, 1}));
        WPolynomial xf = bg_polynomial(f, t2f);
        ok &= expect(wpoly_to_text(xf) == "+p1p2p3p4 +q1q2q3p4 +p1p2p3q4 +q1q2q3q4", detail,
                     "B2 X(flip,tau2)");
        ok &= expect(wpoly_to_text(flip_map(xf, 0b0110u)) == "+q1p2p3p4 +p1q2q3p4 +q1p2p3q4 +p1q2q3q4",
                     detail, "B2 Flip_A X(flip,tau2)");
    }
    // (e) the 34-monomial hexagon polynomial with its two -2 coefficients
    {
        const auto& e = example("hexagon.json");
        Tope tau = tope_of(e.cfg, rat_vec({2, -1, 2, 4}));
        WPolynomial x = bg_polynomial(e.cfg, tau);
        // transcribed term by term from the printed polynomial
        auto m = [](std::initializer_list<int> q) {
            SubsetMask b = 0;
            for (int i : q) b |= 1u << (i - 1);
            return b;
        };
        WPolynomial want;
        want.n = 6;
        want.add_term(0, 1);
        want.add_term(m({5, 6}), -1);
        want.add_term(m({4, 6}), -1);
        want.add_term(m({4, 5}), -1);
        want.add_term(m({4, 5, 6}), -2);
        want.add_term(m({3, 5}), -1);
        want.add_term(m({3, 5, 6}), -1);
        want.add_term(m({3, 4, 5}), -1);
        want.add_term(m({3, 4, 5, 6}), -1);
        want.add_term(m({2, 4}), -1);
        want.add_term(m({2, 4, 6}), -1);
        want.add_term(m({2, 4, 5}), -1);
        want.add_term(m({2, 4, 5, 6}), -1);
        want.add_term(m({2, 3}), -1);
        want.add_term(m({2, 3, 5}), -1);
        want.add_term(m({2, 3, 4}), -1);
        want.add_term(m({2, 3, 4, 5}), -1);
        want.add_term(m({1, 6}), -1);
        want.add_term(m({1, 5, 6}), -1);
        want.add_term(m({1, 4, 6}), -1);
        want.add_term(m({1, 4, 5, 6}), -1);
        want.add_term(m({1, 3}), -1);
        want.add_term(m({1, 3, 6}), -1);
        want.add_term(m({1, 3, 5}), -1);
        want.add_term(m({1, 3, 5, 6}), -1);
        want.add_term(m({1, 2}), -1);
        want.add_term(m({1, 2, 6}), -1);
        want.add_term(m({1, 2, 4}), -1);
        want.add_term(m({1, 2, 4, 6}), -1);
        want.add_term(m({1, 2, 3}), -2);
        want.add_term(m({1, 2, 3, 6}), -1);
        want.add_term(m({1, 2, 3, 5}), -1);
        want.add_term(m({1, 2, 3, 4}), -1);
        want.add_term(full_mask(6), 1);
        ok &= expect(x.coefficients.size() == 34, detail, "hexagon monomial count");
        ok &= expect(x == want, detail, "hexagon polynomial");
    }
    return ok;
}

bool wall_crossing_identity(std::string& detail) {
    bool ok = true;
    for (const auto& e : example_suite()) {
        std::map<SubsetMask, Configuration> flip_cache;
        std::map<std::vector<int>, WPolynomial> bg_cache;
        auto bg_of = [&](const Tope& t) {
            auto it = bg_cache.find(t.signs);
            if (it == bg_cache.end()) it = bg_cache.emplace(t.signs, bg_polynomial(e.cfg, t)).first;
            return it->second;
        };
        size_t pairs = 0;
        for (size_t i = 0; i < e.topes.size(); ++i)
            for (size_t j = 0; j < e.topes.size(); ++j) {
                if (i == j) continue;
                int diff = 0;
                for (size_t w = 0; w < e.topes[i].signs.size() && diff < 2; ++w)
                    if (e.topes[i].signs[w] != e.topes[j].signs[w]) ++diff;
                if (diff != 1) continue;
                SubsetMask a = crossing_set(e.cfg, e.topes[i], e.topes[j]);
                auto fit = flip_cache.find(a);
                if (fit == flip_cache.end()) fit = flip_cache.emplace(a, flip(e.cfg, a)).first;
                Tope t2f = tope_of(fit->second, e.topes[j].representative);
                WPolynomial pred = flip_map(bg_polynomial(fit->second, t2f), a);
                if (popcount(a) % 2 == 0) pred = -pred;
                ok &= expect(bg_of(e.topes[i]) == bg_of(e.topes[j]) + pred, detail,
                             e.file + " pair " + std::to_string(i) + "," + std::to_string(j));
                ++pairs;
            }
        ok &= expect(pairs > 0, detail, e.file + ": no adjacent pairs found");
    }
    return ok;
}

bool polarization(std::string& detail) {
    bool ok = true;
    for (const auto& e : example_suite()) {
        for (const auto& tau : e.topes) {
            WPolynomial x = bg_polynomial(e.cfg, tau);
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                RegularCovector beta = random_regular_covector(e.cfg, seed);
                ok &= expect(lv_polynomial(e.cfg, tau, beta) == x, detail,
                             e.file + " seed " + std::to_string(seed));
            }
        }
    }
    return ok;
}

bool salience_of_support(std::string& detail) {
    bool ok = true;
    for (const auto& e : example_suite()) {
        for (const auto& tau : e.topes) {
            WPolynomial x = bg_polynomial(e.cfg, tau);
            for (const auto& [b, z] : x.coefficients)
                ok &= expect(is_flip_salient(e.cfg, b), detail, e.file + " B=" + mask_to_string(b));
            if (!x.is_zero()) {
                ok &= expect(x.coefficient(0) == 1, detail, e.file + " z_empty");
                ok &= expect(x.coefficient(full_mask(e.cfg.n())) == ((e.cfg.d() % 2 == 0) ? 1 : -1),
                             detail, e.file + " z_full");
            }
        }
    }
    return ok;
}

bool continuity_oracle(std::string& detail) {
    bool ok = true;
    for (const auto& e : example_suite()) {
        if (e.cfg.d() > 3) continue; // d <= 3 per the stated runtime envelope
        WeightPolynomial one = WeightPolynomial::one(e.cfg.n());
        int checked = 0;
        for (const auto& tau : e.topes) {
            if (checked >= 140) break;
            if (basic_subsets_of_tope(e.cfg, tau).empty()) continue;
            // deterministic integral samples: ray multiples of the primitive
            // representative direction plus small box offsets around it
            std::set<IntVec> samples;
            IntVec dir = primitive_integer_vector(tau.representative);
            long ray = e.cfg.r() == 1 ? 55 : 12;
            for (long s = 1; s <= ray; ++s) {
                IntVec l = dir;
                for (Int& v : l) v *= s;
                samples.insert(l);
            }
            for (long o1 = -3; o1 <= 3; ++o1)
                for (long o2 = -3; o2 <= 3; ++o2) {
                    IntVec l = dir;
                    l[0] += o1;
                    if (e.cfg.r() >= 2) l[1] += o2;
                    samples.insert(l);
                    if (e.cfg.r() < 2) break;
                }
            for (const auto& lambda : samples) {
                if (checked >= 140) break;
                if (!in_fattened_tope(e.cfg, tau, to_rational(lambda))) continue;
                ok &= expect(discrete_sum(e.cfg, tau, one, lambda) == Rat(brute_force_count(e.cfg, lambda)),
                             detail, e.file + " lambda sample");
                ++checked;
            }
        }
        ok &= expect(checked >= 50, detail, e.file + " too few fattened samples (" +
                                                std::to_string(checked) + ")");
    }
    return ok;
}

bool wall_crossing_counts(std::string& detail) {
    bool ok = true;
    // desk configurations: every adjacent pair, >= 10 lambdas, three weights
    for (const char* name : {"interval.json", "knapsack3.json", "onetwo.json", "triple.json", "b2.json"}) {
        const auto& e = example(name);
        WeightPolynomial one = WeightPolynomial::one(e.cfg.n());
        WeightPolynomial x1 = WeightPolynomial::coordinate(e.cfg.n(), 0);
        WeightPolynomial x1x2 =
            e.cfg.n() >= 2 ? WeightPolynomial::product(x1, WeightPolynomial::coordinate(e.cfg.n(), 1)) : one;
        for (const auto& t1 : e.topes)
            for (const auto& t2 : e.topes) {
                if (t1 == t2 || !adjacent(e.cfg, t1, t2)) continue;
                IntVec dir = primitive_integer_vector(t2.representative);
                for (long s = 1; s <= 10; ++s) {
                    IntVec lambda = dir;
                    for (Int& v : lambda) v *= s;
                    for (const auto& h : {one, x1, x1x2}) {
                        auto [lhs, rhs] = wallcross_count_check(e.cfg, t1, t2, h, lambda);
                        ok &= expect(lhs == rhs, detail, std::string(name) + " pair/count mismatch");
                    }
                }
            }
    }
    return ok;
}

bool hexagon_multiplicity(std::string& detail) {
    const auto& e = example("hexagon.json");
    Tope tau = tope_of(e.cfg, rat_vec({2, -1, 2, 4}));
    bool ok = true;
    IntVec m = int_vec({200, 234, 478, -200, -100, -100});
    ok &= expect(toric_multiplicity(e.cfg, tau, m) == -2, detail, "multiplicity != -2");
    // the weight lies over lambda = (200,434,378,-400)
    RatVec img = e.cfg.matrix().apply(to_rational(m));
    ok &= expect(img == rat_vec({200, 434, 378, -400}), detail, "m does not lie over lambda");

    IntVec ample = int_vec({200, -100, 200, 400});
    ok &= expect(virtual_dimension(e.cfg, tau, ample) == brute_force_count(e.cfg, ample), detail,
                 "ample virtual dimension");
    return ok;
}

bool quasi_polynomiality(std::string& detail) {
    bool ok = true;
    for (const char* name : {"interval.json", "onetwo.json", "knapsack4.json", "b2.json"}) {
        const auto& e = example(name);
        WeightPolynomial one = WeightPolynomial::one(e.cfg.n());
        WeightPolynomial x1 = WeightPolynomial::coordinate(e.cfg.n(), 0);
        for (const auto& tau : e.topes) {
            if (basic_subsets_of_tope(e.cfg, tau).empty()) continue;
            IntVec base = primitive_integer_vector(tau.representative);
            for (const auto& h : {one, x1}) {
                try {
                    QuasiPolyFit fit = quasipoly_fit(e.cfg, tau, h, base);
                    ok &= expect(fit.holdout_verified, detail, std::string(name) + " holdout flag");
                } catch (const Error& err) {
                    ok &= expect(false, detail, std::string(name) + ": " + err.what());
                }
            }
        }
    }
    return ok;
}

bool volume_checks(std::string& detail) {
    bool ok = true;
    // exact xi-independence everywhere
    for (const auto& e : example_suite()) {
        for (const auto& tau : e.topes) {
            DualCovector xa = random_regular_xi(e.cfg, 17), xb = random_regular_xi(e.cfg, 18);
            RatVec lambda = tau.representative;
            ok &= expect(volume_integral(e.cfg, tau, 0, xa, lambda) ==
                             volume_integral(e.cfg, tau, 0, xb, lambda),
                         detail, e.file + " xi dependence");
        }
    }
    // closed forms
    {
        const auto& e = example("interval.json");
        Tope pos = tope_of(e.cfg, rat_vec({1}));
        DualCovector xi = random_regular_xi(e.cfg, 1);
        ok &= expect(volume_integral(e.cfg, pos, 0, xi, rat_vec({17})) == Rat(17), detail, "interval b");
    }
    {
        const auto& e = example("knapsack3.json");
        Tope pos = tope_of(e.cfg, rat_vec({1}));
        DualCovector xi = random_regular_xi(e.cfg, 1);
        ok &= expect(volume_integral(e.cfg, pos, 0, xi, rat_vec({9})) == Rat(81) / Rat(2), detail,
                     "simplex t^2/2");
        // (count / lambda^d) vs (volume / lambda^d) at lambda = 1000
        Rat vol = volume_integral(e.cfg, pos, 0, xi, rat_vec({1000}));
        Rat cnt = Rat(brute_force_count(e.cfg, int_vec({1000})));
        ok &= expect(abs(cnt / vol - 1) <= Rat(1) / 50, detail, "leading coefficient off by > 2%");
    }
    return ok;
}

bool face_continuation(std::string& detail) {
    bool ok = true;
    // unit square: exact slice counts and the partition of the total count
    ProblemFile sq = load("square.json");
    Configuration scfg = cfg_of(sq);
    Tope stau = tope_of(scfg, rat_vec({2, 3}));
    IntVec slambda = int_vec({2, 3});
    SubsetMask sface = 0b1011u; // {1,2,4}: the edge x3 = 0
    Int total = 0;
    std::vector<CoordSign> nn(scfg.n(), CoordSign::NonNeg);
    auto inside = lattice_points_signed_serial(scfg, nn, slambda);
    for (long yv = 0; yv <= 2; ++yv) {
        Int got = slice_count(scfg, stau, sface, slambda, int_vec({yv}));
        long direct = 0;
        for (const auto& pt : inside)
            if (pt[2] == yv) ++direct;
        ok &= expect(got == direct, detail, "square slice y=" + std::to_string(yv));
        total += got;
    }
    ok &= expect(total == brute_force_count(scfg, slambda), detail, "square partition");

    // B2 tetragon edges against direct slice enumeration in the near-vertex
    // region; the partition check sums over the verified y's (no B2 edge sweep
    // stays valid across the whole projection range).
    const auto& b = example("b2.json");
    Tope t1 = tope_of(b.cfg, rat_vec({1, 2}));
    IntVec blam = int_vec({2, 5});
    auto binside = lattice_points_signed_serial(b.cfg, std::vector<CoordSign>(4, CoordSign::NonNeg), blam);
    int faces_checked = 0;
    for (SubsetMask face : generating_subsets_of_tope(b.cfg, t1)) {
        if (popcount(face) != 3) continue;
        int comp = mask_indices(full_mask(4) & ~face)[0];
        LiftedConfiguration lc = lift(b.cfg, face);
        Tope lt = lifted_tope(lc, t1);
        long hi = 0;
        for (const auto& pt : binside) hi = std::max(hi, pt[comp].get_si());
        Int swept = 0;
        long direct_total = 0;
        int verified = 0;
        for (long yv = 0; yv <= hi; ++yv) {
            IntVec y = int_vec({yv});
            if (!in_fattened_tope(lc.lifted, lt, lifted_parameter(lc, to_rational(blam), to_rational(y))))
                continue;
            Int got = slice_count(b.cfg, t1, face, blam, y);
            long direct = 0;
            for (const auto& pt : binside)
                if (pt[comp] == yv) ++direct;
            ok &= expect(got == direct, detail, "b2 face " + mask_to_string(face));
            swept += got;
            direct_total += direct;
            ++verified;
        }
        ok &= expect(verified >= 2, detail, "b2 face " + mask_to_string(face) + " barely sampled");
        ok &= expect(swept == direct_total, detail, "b2 partial partition " + mask_to_string(face));
        ++faces_checked;
    }
    ok &= expect(faces_checked == 4, detail, "expected all four tetragon edges");
    return ok;
}

bool render_regression(std::string& detail) {
    bool ok = true;
    const auto& b = example("b2.json");
    Tope t1 = tope_of(b.cfg, rat_vec({1, 2}));
    struct Station {
        RatVec lambda;
        bool blue, red;
        const char* what;
    };
    std::vector<Station> stations = {
        {rat_vec({1, 2}), true, false, "tope (phi2,phi4): closed tetragon"},
        {rat_vec({1, 1}), true, false, "wall (phi4): triangle"},
        {rat_vec({2, 1}), true, true, "tope (phi4,phi1): triangle plus flipped triangle"},
        {rat_vec({3, -1}), false, true, "tope (phi1,-phi3): semi-closed quadrilateral"},
        {rat_vec({1, -3}), true, true, "tope (-phi3,-phi2): new open triangle"},
        {rat_vec({-1, -3}), true, false, "tope (-phi2,-phi4): open opposite tetragon"},
    };
    for (const auto& st : stations) {
        RenderScene scene = default_scene(b.cfg, t1, st.lambda, 96);
        RenderStats stats1, stats2;
        std::string svg1 = render_svg(b.cfg, t1, st.lambda, scene, &stats1);
        std::string svg2 = render_svg(b.cfg, t1, st.lambda, scene, &stats2);
        ok &= expect(svg1 == svg2, detail, std::string("render instability: ") + st.what);
        ok &= expect((stats1.cells_by_value[1] > 0) == st.blue, detail,
                     std::string("blue cells wrong: ") + st.what);
        ok &= expect((stats1.cells_by_value[-1] > 0) == st.red, detail,
                     std::string("red cells wrong: ") + st.what);
        ok &= expect(stats1.cells_by_value[-2] == 0, detail, std::string("magenta cells: ") + st.what);
    }
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 golden polynomials", golden_polynomials},
        {"2 wall-crossing identity", wall_crossing_identity},
        {"3 polarization", polarization},
        {"4 salience of support", salience_of_support},
        {"5 continuity oracle", continuity_oracle},
        {"6 wall-crossing counts", wall_crossing_counts},
        {"7 hexagon multiplicity", hexagon_multiplicity},
        {"8 quasi-polynomiality", quasi_polynomiality},
        {"9 volume", volume_checks},
        {"10 face continuation", face_continuation},
        {"11 render regression", render_regression},
    };
    for (auto& c : criteria) {
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        report(c.name, ok, std::chrono::duration<double>(t1 - t0).count(), detail);
    }
    return g_failures == 0 ? 0 : 1;
}
