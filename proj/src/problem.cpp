#include "mirage/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mirage/facelift.hpp"
#include "mirage/render.hpp"

namespace mirage {

namespace {

using nlohmann::json;

RatVec parse_rat_vec(const json& j, const std::string& field) {
    if (!j.is_array()) fail(ErrorCode::ParseError, field + ": expected an array of rational strings");
    RatVec v;
    for (const auto& e : j) {
        if (!e.is_string()) fail(ErrorCode::ParseError, field + ": entries must be strings");
        v.push_back(parse_rational(e.get<std::string>()));
    }
    return v;
}

IntVec parse_int_vec(const json& j, const std::string& field) {
    RatVec v = parse_rat_vec(j, field);
    if (!is_integral(v)) fail(ErrorCode::ParseError, field + ": entries must be integers");
    return to_integer(v);
}

} // namespace

ProblemFile parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("problem file: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorCode::ParseError, "problem file: expected a JSON object");
    if (!j.contains("phi")) fail(ErrorCode::ParseError, "problem file: missing field 'phi'");

    ProblemFile p;
    if (!j["phi"].is_array() || j["phi"].empty())
        fail(ErrorCode::ParseError, "phi: expected a nonempty array of vectors");
    for (size_t i = 0; i < j["phi"].size(); ++i)
        p.phi.push_back(parse_rat_vec(j["phi"][i], "phi[" + std::to_string(i) + "]"));
    size_t r = p.phi[0].size();
    for (const auto& v : p.phi)
        if (v.size() != r) fail(ErrorCode::ParseError, "phi: vectors of unequal length");
    size_t n = p.phi.size();

    auto want_len = [&](const RatVec& v, size_t len, const std::string& field) {
        if (v.size() != len)
            fail(ErrorCode::ParseError, field + ": expected length " + std::to_string(len));
    };

    if (j.contains("tope_representative")) {
        p.tope_representative = parse_rat_vec(j["tope_representative"], "tope_representative");
        want_len(*p.tope_representative, r, "tope_representative");
    }
    if (j.contains("target_tope")) {
        p.target_tope = parse_rat_vec(j["target_tope"], "target_tope");
        want_len(*p.target_tope, r, "target_tope");
    }
    if (j.contains("lambda")) {
        p.lambda = parse_rat_vec(j["lambda"], "lambda");
        want_len(*p.lambda, r, "lambda");
    }
    if (j.contains("lambda_to")) {
        p.lambda_to = parse_rat_vec(j["lambda_to"], "lambda_to");
        want_len(*p.lambda_to, r, "lambda_to");
    }
    if (j.contains("sweep_steps")) {
        if (!j["sweep_steps"].is_number_integer() || j["sweep_steps"].get<int>() < 1)
            fail(ErrorCode::ParseError, "sweep_steps: expected a positive integer");
        p.sweep_steps = j["sweep_steps"].get<int>();
    }
    if (j.contains("x")) {
        p.x = parse_rat_vec(j["x"], "x");
        want_len(*p.x, n, "x");
    }
    if (j.contains("m")) {
        IntVec m = parse_int_vec(j["m"], "m");
        if (m.size() != n) fail(ErrorCode::ParseError, "m: expected length " + std::to_string(n));
        p.m = std::move(m);
    }
    if (j.contains("weight")) {
        if (!j["weight"].is_array()) fail(ErrorCode::ParseError, "weight: expected an array of monomials");
        WeightPolynomial h;
        h.n = static_cast<int>(n);
        for (const auto& mono : j["weight"]) {
            if (!mono.is_object() || !mono.contains("coeff") || !mono.contains("exponents"))
                fail(ErrorCode::ParseError, "weight: monomials need 'coeff' and 'exponents'");
            WeightPolynomial::Monomial mm;
            mm.coeff = parse_rational(mono["coeff"].get<std::string>());
            for (const auto& e : mono["exponents"]) {
                if (!e.is_number_integer() || e.get<int>() < 0)
                    fail(ErrorCode::ParseError, "weight: exponents must be nonnegative integers");
                mm.exponents.push_back(e.get<unsigned>());
            }
            if (mm.exponents.size() != n) fail(ErrorCode::ParseError, "weight: exponent lists must have length N");
            h.monomials.push_back(std::move(mm));
        }
        p.weight = std::move(h);
    }
    if (j.contains("face_set")) {
        if (!j["face_set"].is_array()) fail(ErrorCode::ParseError, "face_set: expected an array of 1-based indices");
        SubsetMask mask = 0;
        for (const auto& e : j["face_set"]) {
            if (!e.is_number_integer()) fail(ErrorCode::ParseError, "face_set: indices must be integers");
            int idx = e.get<int>();
            if (idx < 1 || idx > static_cast<int>(n)) fail(ErrorCode::ParseError, "face_set: index out of range");
            mask |= 1u << (idx - 1);
        }
        p.face_set = mask;
    }
    if (j.contains("slice_from")) p.slice_from = parse_rat_vec(j["slice_from"], "slice_from");
    if (j.contains("slice_to")) p.slice_to = parse_rat_vec(j["slice_to"], "slice_to");
    if (j.contains("slice_steps")) {
        if (!j["slice_steps"].is_number_integer() || j["slice_steps"].get<int>() < 1)
            fail(ErrorCode::ParseError, "slice_steps: expected a positive integer");
        p.slice_steps = j["slice_steps"].get<int>();
    }
    if (j.contains("window")) {
        RatVec w = parse_rat_vec(j["window"], "window");
        if (w.size() != 4) fail(ErrorCode::ParseError, "window: expected [x0,x1,y0,y1]");
        p.window = std::array<Rat, 4>{w[0], w[1], w[2], w[3]};
    }
    if (j.contains("resolution")) {
        if (!j["resolution"].is_number_integer() || j["resolution"].get<int>() < 1)
            fail(ErrorCode::ParseError, "resolution: expected a positive integer");
        p.resolution = j["resolution"].get<int>();
    }
    return p;
}

ProblemFile parse_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open problem file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

namespace {

std::string format_vec(const RatVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_rational(v[i]);
    }
    return out + ")";
}

Tope need_tope(const Configuration& cfg, const ProblemFile& p) {
    if (p.tope_representative) return tope_of(cfg, *p.tope_representative);
    if (p.lambda && is_regular(cfg, *p.lambda)) return tope_of(cfg, *p.lambda);
    fail(ErrorCode::NotRegular, "no tope: provide 'tope_representative' (or a regular 'lambda')");
}

IntVec need_integral_lambda(const ProblemFile& p) {
    if (!p.lambda) fail(ErrorCode::ParseError, "missing field 'lambda'");
    if (!is_integral(*p.lambda)) fail(ErrorCode::NotIntegral, "lambda must be integral here");
    return to_integer(*p.lambda);
}

WeightPolynomial need_weight(const ProblemFile& p, int n) {
    return p.weight ? *p.weight : WeightPolynomial::one(n);
}

const char* kCRLF = "\r\n";

} // namespace

RunResult run(const std::string& subcommand, const ProblemFile& p, const RunOptions& opts) {
    Configuration cfg = Configuration::make(p.phi);
    std::ostringstream os;

    if (subcommand == "validate") {
        validate(cfg);
        os << "valid: N=" << cfg.n() << " r=" << cfg.r() << " d=" << cfg.d()
           << " walls=" << cfg.walls().size() << " integral=" << (cfg.integral() ? "yes" : "no") << "\n";
        return {0, os.str()};
    }

    if (subcommand == "topes") {
        auto topes = enumerate_topes(cfg);
        os << "topes " << topes.size() << "\n";
        for (const auto& t : topes) {
            for (int s : t.signs) os << (s > 0 ? '+' : '-');
            os << " rep=" << format_vec(t.representative) << "\n";
        }
        return {0, os.str()};
    }

    if (subcommand == "bg") {
        Tope tau = need_tope(cfg, p);
        WPolynomial x = bg_polynomial(cfg, tau);
        // cross-check against the polarized sum for --trials random covectors
        for (int k = 0; k < opts.trials; ++k) {
            RegularCovector beta = random_regular_covector(cfg, opts.seed + static_cast<std::uint64_t>(k));
            if (!(lv_polynomial(cfg, tau, beta) == x))
                fail(ErrorCode::Internal, "bg: polarized sum disagrees with the face expansion");
        }
        os << wpoly_to_text(x) << "\n";
        return {0, os.str()};
    }

    if (subcommand == "eval") {
        if (!p.x) fail(ErrorCode::ParseError, "eval: missing field 'x'");
        Int v = geom_eval(bg_polynomial(cfg, need_tope(cfg, p)), *p.x);
        os << v.get_str() << "\n";
        return {0, os.str()};
    }

    if (subcommand == "count") {
        os << brute_force_count(cfg, need_integral_lambda(p)).get_str() << "\n";
        return {0, os.str()};
    }

    if (subcommand == "sum") {
        Rat s = discrete_sum(cfg, need_tope(cfg, p), need_weight(p, cfg.n()), need_integral_lambda(p));
        os << format_rational(s) << "\n";
        return {0, os.str()};
    }

    if (subcommand == "volume") {
        if (!p.lambda) fail(ErrorCode::ParseError, "volume: missing field 'lambda'");
        Tope tau = need_tope(cfg, p);
        DualCovector xi = random_regular_xi(cfg, opts.seed);
        Rat v = volume_integral(cfg, tau, 0, xi, *p.lambda);
        // the value must be independent of xi; recheck with --trials more draws
        for (int k = 1; k < opts.trials; ++k) {
            DualCovector other = random_regular_xi(cfg, opts.seed + static_cast<std::uint64_t>(k));
            if (volume_integral(cfg, tau, 0, other, *p.lambda) != v)
                fail(ErrorCode::Internal, "volume: xi-dependence detected");
        }
        os << format_rational(v) << "\n";
        return {0, os.str()};
    }

    if (subcommand == "wallcross") {
        Tope t1 = need_tope(cfg, p);
        if (!p.target_tope) fail(ErrorCode::ParseError, "wallcross: missing field 'target_tope'");
        Tope t2 = tope_of(cfg, *p.target_tope);
        auto [a, predicted] = wallcross_delta(cfg, t1, t2);
        bool ok = bg_polynomial(cfg, t1) == bg_polynomial(cfg, t2) + predicted;
        os << "A = " << mask_to_string(a) << "\n";
        os << "predicted = " << wpoly_to_text(predicted) << "\n";
        os << "identity: " << (ok ? "PASS" : "FAIL") << "\n";
        return {ok ? 0 : 1, os.str()};
    }

    if (subcommand == "sweep") {
        if (!p.lambda || !p.lambda_to) fail(ErrorCode::ParseError, "sweep: need 'lambda' and 'lambda_to'");
        Tope tau = need_tope(cfg, p);
        DualCovector xi = random_regular_xi(cfg, opts.seed);
        os << "lambda_1";
        for (int i = 1; i < cfg.r(); ++i) os << ",lambda_" << (i + 1);
        os << ",count,signed_sum,volume" << kCRLF;
        for (int step = 0; step <= p.sweep_steps; ++step) {
            RatVec lam(cfg.r());
            for (int i = 0; i < cfg.r(); ++i)
                lam[i] = (*p.lambda)[i] + Rat(step) * ((*p.lambda_to)[i] - (*p.lambda)[i]) / Rat(p.sweep_steps);
            for (int i = 0; i < cfg.r(); ++i) {
                if (i) os << ",";
                os << format_rational(lam[i]);
            }
            if (cfg.integral() && is_integral(lam)) {
                IntVec il = to_integer(lam);
                os << "," << brute_force_count(cfg, il).get_str();
                os << "," << format_rational(discrete_sum(cfg, tau, need_weight(p, cfg.n()), il));
            } else {
                os << ",,";
            }
            os << "," << format_rational(volume_integral(cfg, tau, 0, xi, lam));
            os << kCRLF;
        }
        return {0, os.str()};
    }

    if (subcommand == "face") {
        if (!p.face_set) fail(ErrorCode::ParseError, "face: missing field 'face_set'");
        if (!p.slice_from || !p.slice_to) fail(ErrorCode::ParseError, "face: need 'slice_from' and 'slice_to'");
        Tope tau = need_tope(cfg, p);
        IntVec lambda = need_integral_lambda(p);
        size_t vars = p.slice_from->size();
        os << "y_1";
        for (size_t i = 1; i < vars; ++i) os << ",y_" << (i + 1);
        os << ",P" << kCRLF;
        for (int step = 0; step <= p.slice_steps; ++step) {
            RatVec y(vars);
            for (size_t i = 0; i < vars; ++i)
                y[i] = (*p.slice_from)[i] + Rat(step) * ((*p.slice_to)[i] - (*p.slice_from)[i]) / Rat(p.slice_steps);
            for (size_t i = 0; i < vars; ++i) {
                if (i) os << ",";
                os << format_rational(y[i]);
            }
            if (is_integral(y)) {
                os << "," << slice_count(cfg, tau, *p.face_set, lambda, to_integer(y)).get_str();
            } else {
                os << ",";
            }
            os << kCRLF;
        }
        return {0, os.str()};
    }

    if (subcommand == "toric") {
        if (!p.m) fail(ErrorCode::ParseError, "toric: missing field 'm'");
        os << toric_multiplicity(cfg, need_tope(cfg, p), *p.m).get_str() << "\n";
        return {0, os.str()};
    }

    if (subcommand == "render") {
        if (!p.lambda) fail(ErrorCode::ParseError, "render: missing field 'lambda'");
        Tope tau = need_tope(cfg, p);
        int res = opts.resolution ? *opts.resolution : p.resolution;
        RenderScene scene;
        if (opts.window)
            scene = RenderScene{*opts.window, res};
        else if (p.window)
            scene = RenderScene{*p.window, res};
        else
            scene = default_scene(cfg, tau, *p.lambda, res);
        return {0, render_svg(cfg, tau, *p.lambda, scene)};
    }

    fail(ErrorCode::ParseError, "unknown subcommand '" + subcommand + "'");
}

} // namespace mirage
