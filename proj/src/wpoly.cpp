#include "mirage/wpoly.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace mirage {

Int WPolynomial::coefficient(SubsetMask b) const {
    auto it = coefficients.find(b);
    return it == coefficients.end() ? Int(0) : it->second;
}

void WPolynomial::add_term(SubsetMask b, const Int& z) {
    if (sgn(z) == 0) return;
    auto [it, inserted] = coefficients.emplace(b, z);
    if (!inserted) {
        it->second += z;
        if (sgn(it->second) == 0) coefficients.erase(it);
    }
}

WPolynomial& WPolynomial::operator+=(const WPolynomial& o) {
    for (const auto& [b, z] : o.coefficients) add_term(b, z);
    return *this;
}

WPolynomial& WPolynomial::operator-=(const WPolynomial& o) {
    for (const auto& [b, z] : o.coefficients) add_term(b, -z);
    return *this;
}

WPolynomial WPolynomial::operator+(const WPolynomial& o) const {
    WPolynomial out = *this;
    out += o;
    return out;
}

WPolynomial WPolynomial::operator-(const WPolynomial& o) const {
    WPolynomial out = *this;
    out -= o;
    return out;
}

WPolynomial WPolynomial::operator-() const {
    WPolynomial out;
    out.n = n;
    for (const auto& [b, z] : coefficients) out.coefficients.emplace(b, -z);
    return out;
}

std::string wpoly_to_text(const WPolynomial& w) {
    if (w.coefficients.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, z] : w.coefficients) {
        if (!first) os << ' ';
        first = false;
        os << (sgn(z) > 0 ? '+' : '-');
        Int mag = abs(z);
        if (mag != 1) os << mag.get_str();
        for (int i = 0; i < w.n; ++i) os << ((b >> i) & 1u ? 'q' : 'p') << (i + 1);
    }
    return os.str();
}

WPolynomial wpoly_from_text(const std::string& text, int n) {
    WPolynomial w;
    w.n = n;
    if (text == "0") return w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        size_t pos = 0;
        int sign = 1;
        if (tok[pos] == '+')
            ++pos;
        else if (tok[pos] == '-') {
            sign = -1;
            ++pos;
        }
        std::string digits;
        while (pos < tok.size() && isdigit(tok[pos])) digits += tok[pos++];
        Int mag = digits.empty() ? Int(1) : Int(digits);
        SubsetMask b = 0;
        SubsetMask seen = 0;
        while (pos < tok.size()) {
            char c = tok[pos++];
            if (c != 'p' && c != 'q') fail(ErrorCode::ParseError, "wpoly: bad factor in '" + tok + "'");
            std::string idx;
            while (pos < tok.size() && isdigit(tok[pos])) idx += tok[pos++];
            if (idx.empty()) fail(ErrorCode::ParseError, "wpoly: missing index in '" + tok + "'");
            int i = std::stoi(idx);
            if (i < 1 || i > n) fail(ErrorCode::ParseError, "wpoly: index out of range in '" + tok + "'");
            if (seen & (1u << (i - 1))) fail(ErrorCode::ParseError, "wpoly: repeated index in '" + tok + "'");
            seen |= 1u << (i - 1);
            if (c == 'q') b |= 1u << (i - 1);
        }
        if (seen != full_mask(n)) fail(ErrorCode::ParseError, "wpoly: monomial '" + tok + "' does not mention every index");
        w.add_term(b, sign > 0 ? mag : Int(-mag));
    }
    return w;
}

WPolynomial bg_polynomial(const Configuration& cfg, const Tope& tau) {
    WPolynomial w;
    w.n = cfg.n();
    auto bt = basic_subsets_of_tope(cfg, tau);
    if (bt.empty()) return w; // tope outside c(Phi)
    if (cfg.n() > 20) fail(ErrorCode::Internal, "bg_polynomial: N > 20 subset transform not supported");

    size_t size = size_t(1) << cfg.n();
    // f(J) = (-1)^{|J|-r} [J generating and containing the tope]; then
    // z_B = sum_{J >= B} f(J), a superset-sum zeta transform.
    std::vector<long long> acc(size, 0);
    std::vector<char> good(size, 0);
    for (SubsetMask k : bt) good[k] = 1;
    for (int bit = 0; bit < cfg.n(); ++bit)
        for (SubsetMask j = 0; j < size; ++j)
            if ((j >> bit) & 1u) good[j] |= good[j & ~(1u << bit)];
    for (SubsetMask j = 0; j < size; ++j)
        if (good[j]) acc[j] = ((popcount(j) - cfg.r()) % 2 == 0) ? 1 : -1;
    for (int bit = 0; bit < cfg.n(); ++bit)
        for (SubsetMask j = 0; j < size; ++j)
            if (!((j >> bit) & 1u)) acc[j] += acc[j | (1u << bit)];
    for (SubsetMask b = 0; b < size; ++b)
        if (acc[b] != 0) w.coefficients.emplace(b, Int(static_cast<long>(acc[b])));
    return w;
}

PolarizationSplit polarization_split(const Configuration& cfg, SubsetMask basic, const RatVec& beta) {
    PolarizationSplit split;
    split.basic_set = basic;
    EdgeGenerators eg = edge_generators(cfg, basic);
    for (size_t k = 0; k < eg.complement.size(); ++k) {
        int s = sgn(dot(beta, eg.generators[k]));
        if (s > 0)
            split.positive |= 1u << eg.complement[k];
        else if (s < 0)
            split.negative |= 1u << eg.complement[k];
        else
            fail(ErrorCode::Internal, "polarization_split: beta vanishes on an edge generator");
    }
    return split;
}

WPolynomial lv_polynomial(const Configuration& cfg, const Tope& tau, const RegularCovector& beta) {
    WPolynomial w;
    w.n = cfg.n();
    for (SubsetMask k : basic_subsets_of_tope(cfg, tau)) {
        PolarizationSplit split = polarization_split(cfg, k, beta.beta);
        Int c = (popcount(split.negative) % 2 == 0) ? 1 : -1;
        // expand prod_{i in K}(p_i + q_i): every S subseteq K contributes to B = negative | S
        SubsetMask s = 0;
        while (true) {
            w.add_term(split.negative | s, c);
            if (s == k) break;
            s = (s - k) & k; // next subset of k
        }
    }
    return w;
}

WPolynomial flip_map(const WPolynomial& w, SubsetMask a) {
    WPolynomial out;
    out.n = w.n;
    for (const auto& [b, z] : w.coefficients) out.coefficients.emplace(b ^ a, z);
    return out;
}

namespace {

template <typename Vec>
SubsetMask negative_mask(const Vec& x) {
    SubsetMask b = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) < 0) b |= 1u << i;
    return b;
}

} // namespace

Int geom_eval(const WPolynomial& w, const RatVec& x) {
    if (static_cast<int>(x.size()) != w.n) fail(ErrorCode::DimensionMismatch, "geom_eval: point length");
    return w.coefficient(negative_mask(x));
}

Int geom_eval(const WPolynomial& w, const IntVec& x) {
    if (static_cast<int>(x.size()) != w.n) fail(ErrorCode::DimensionMismatch, "geom_eval: point length");
    return w.coefficient(negative_mask(x));
}

Int geom_eval_semiclosed(const WPolynomial& w, SubsetMask a, const RatVec& x) {
    if (static_cast<int>(x.size()) != w.n) fail(ErrorCode::DimensionMismatch, "geom_eval_semiclosed: point length");
    SubsetMask b = negative_mask(x);
    for (size_t i = 0; i < x.size(); ++i)
        if ((a >> i) & 1u)
            if (sgn(x[i]) == 0) b |= 1u << i;
    return w.coefficient(b);
}

std::pair<SubsetMask, WPolynomial> wallcross_delta(const Configuration& cfg, const Tope& tau1,
                                                   const Tope& tau2) {
    SubsetMask a = crossing_set(cfg, tau1, tau2); // throws NotAdjacent
    Configuration flipped = flip(cfg, a);
    // Same walls, same sign vectors: tau2 is reused as a flipped-system tope.
    Tope tau2f = tope_of(flipped, tau2.representative);
    WPolynomial pred = flip_map(bg_polynomial(flipped, tau2f), a);
    if (popcount(a) % 2 == 0) pred = -pred;
    return {a, std::move(pred)};
}

SignedSubsetList path_flip_list(const Configuration& cfg, const Tope& tau, const Tope& nu,
                                const std::vector<Tope>& path) {
    if (path.empty() || !(path.front() == tau) || !(path.back() == nu))
        fail(ErrorCode::InvalidPath, "path_flip_list: endpoints do not match");
    for (size_t k = 0; k + 1 < path.size(); ++k)
        if (!adjacent(cfg, path[k], path[k + 1]))
            fail(ErrorCode::InvalidPath, "path_flip_list: consecutive topes not adjacent");

    SignedSubsetList list;
    list.entries.emplace_back(1, 0);
    for (size_t k = 0; k + 1 < path.size(); ++k) {
        size_t count = list.entries.size();
        for (size_t e = 0; e < count; ++e) {
            auto [eps, a] = list.entries[e];
            Configuration flipped = flip(cfg, a);
            Tope t1 = tope_of(flipped, path[k].representative);
            Tope t2 = tope_of(flipped, path[k + 1].representative);
            SubsetMask step = crossing_set(flipped, t1, t2);
            list.entries.emplace_back(-eps, a ^ step);
        }
    }
    return list;
}

WPolynomial path_flip_expansion(const Configuration& cfg, const Tope& nu, const SignedSubsetList& list) {
    WPolynomial sum;
    sum.n = cfg.n();
    for (const auto& [eps, a] : list.entries) {
        Configuration flipped = flip(cfg, a);
        Tope nuf = tope_of(flipped, nu.representative);
        WPolynomial term = flip_map(bg_polynomial(flipped, nuf), a);
        int sign = eps * (popcount(a) % 2 == 0 ? 1 : -1);
        if (sign > 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

namespace {

// Strict interior point of Q_neg^B whose image M(x) is regular; the spec's
// deterministic rule (increment the last coordinate) first, then a fixed-seed
// redraw of all coordinates as a fallback.
RatVec regular_quadrant_witness(const Configuration& cfg, SubsetMask b) {
    RatVec x(cfg.n());
    auto sign_of = [&](int i) { return (b >> i) & 1u ? -1 : 1; };
    for (int i = 0; i < cfg.n(); ++i) x[i] = Rat(sign_of(i));
    for (int k = 0; k < 64; ++k) {
        if (is_regular(cfg, cfg.matrix().apply(x))) return x;
        x[cfg.n() - 1] = Rat(sign_of(cfg.n() - 1)) * (1 + Rat(k + 1) / Rat(2 * (k + 2)));
    }
    std::mt19937_64 rng(0x5eedULL);
    while (true) {
        for (int i = 0; i < cfg.n(); ++i)
            x[i] = Rat(sign_of(i)) * (1 + Rat(static_cast<long>(rng() % 1024)) / Rat(2048));
        if (is_regular(cfg, cfg.matrix().apply(x))) return x;
    }
}

} // namespace

Int quadrant_coefficient(const Configuration& cfg, const Tope& tau, SubsetMask b) {
    Int direct = bg_polynomial(cfg, tau).coefficient(b);

    RatVec x = regular_quadrant_witness(cfg, b);
    Tope nu = tope_of(cfg, cfg.matrix().apply(x));
    auto path = tope_path(cfg, tau, nu);
    SignedSubsetList list = path_flip_list(cfg, tau, nu, path);
    Int via_path = 0;
    for (const auto& [eps, a] : list.entries)
        if (a == b) via_path += eps;
    if (popcount(b) % 2 != 0) via_path = -via_path;

    if (direct != via_path)
        fail(ErrorCode::Internal, "quadrant_coefficient: expansion and path formula disagree on " + mask_to_string(b));
    return direct;
}

} // namespace mirage
