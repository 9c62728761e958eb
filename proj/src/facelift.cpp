#include "mirage/facelift.hpp"

namespace mirage {

LiftedConfiguration lift(const Configuration& cfg, SubsetMask face_set) {
    if (!cfg.is_generating(face_set))
        fail(ErrorCode::NotGenerating, "lift: " + mask_to_string(face_set) + " does not generate F");
    LiftedConfiguration lc;
    lc.base = cfg;
    lc.face_set = face_set;
    for (int j = 0; j < cfg.n(); ++j)
        if (!(face_set & (1u << j))) lc.complement.push_back(j);

    int extra = static_cast<int>(lc.complement.size());
    std::vector<RatVec> phi;
    phi.reserve(cfg.n());
    for (int i = 0; i < cfg.n(); ++i) {
        RatVec v = cfg.phi(i);
        v.resize(cfg.r() + extra, Rat(0));
        for (int k = 0; k < extra; ++k)
            if (lc.complement[k] == i) v[cfg.r() + k] = 1;
        phi.push_back(std::move(v));
    }
    lc.lifted = Configuration::make(std::move(phi)); // salient by construction
    return lc;
}

RatVec lifted_parameter(const LiftedConfiguration& lc, const RatVec& lambda, const RatVec& y) {
    if (static_cast<int>(lambda.size()) != lc.base.r() || y.size() != lc.complement.size())
        fail(ErrorCode::DimensionMismatch, "lifted_parameter: component lengths");
    RatVec out = lambda;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

IntVec lifted_parameter(const LiftedConfiguration& lc, const IntVec& lambda, const IntVec& y) {
    if (static_cast<int>(lambda.size()) != lc.base.r() || y.size() != lc.complement.size())
        fail(ErrorCode::DimensionMismatch, "lifted_parameter: component lengths");
    IntVec out = lambda;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

Tope lifted_tope(const LiftedConfiguration& lc, const Tope& base_tope) {
    const RatVec& l0 = base_tope.representative;
    Rat delta = 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatVec lam = l0;
        for (int j : lc.complement) lam = add(lam, scale(delta, lc.base.phi(j)));
        RatVec y(lc.complement.size(), delta);
        RatVec rep = lifted_parameter(lc, lam, y);
        if (is_regular(lc.lifted, rep)) return tope_of(lc.lifted, rep);
        delta /= 2;
    }
    fail(ErrorCode::Internal, "lifted_tope: no regular representative found");
}

namespace {

// I must contain a basic subset with strictly positive coordinates at lambda,
// i.e. I is in G(Phi, tope_of(lambda)).
bool face_contains_tope(const Configuration& cfg, SubsetMask face_set, const RatVec& lambda) {
    for (SubsetMask k : cfg.basic_subsets()) {
        if ((k & face_set) != k) continue;
        RatVec x = cfg.basis_inverse(k).apply(lambda);
        bool pos = true;
        for (const Rat& e : x)
            if (sgn(e) <= 0) {
                pos = false;
                break;
            }
        if (pos) return true;
    }
    return false;
}

} // namespace

Int slice_value(const Configuration& cfg, const Tope& tau, SubsetMask face_set, const RatVec& lambda,
                const RatVec& y, const IntVec& x) {
    if (!is_regular(cfg, lambda)) fail(ErrorCode::NotRegular, "slice_value: lambda lies on a wall");
    if (!(tope_of(cfg, lambda) == tau)) fail(ErrorCode::Internal, "slice_value: lambda is not inside tau");
    if (!face_contains_tope(cfg, face_set, lambda))
        fail(ErrorCode::NotGenerating, "slice_value: face set not in G(Phi, tope_of(lambda))");

    LiftedConfiguration lc = lift(cfg, face_set);
    // x on the slice: M x = lambda and x_i = y_i on the complement
    RatVec xr = to_rational(x);
    RatVec img = cfg.matrix().apply(xr);
    for (int i = 0; i < cfg.r(); ++i)
        if (img[i] != lambda[i]) fail(ErrorCode::PointOffSlice, "slice_value: M x != lambda");
    for (size_t k = 0; k < lc.complement.size(); ++k)
        if (xr[lc.complement[k]] != y[k]) fail(ErrorCode::PointOffSlice, "slice_value: x does not match y");

    for (const Rat& yi : y)
        if (sgn(yi) < 0) return 0;

    Tope lt = lifted_tope(lc, tau);
    return geom_eval(bg_polynomial(lc.lifted, lt), xr);
}

Int slice_count(const Configuration& cfg, const Tope& tau, SubsetMask face_set, const IntVec& lambda,
                const IntVec& y) {
    if (!face_contains_tope(cfg, face_set, tau.representative))
        fail(ErrorCode::NotGenerating, "slice_count: face set not in G(Phi, tau)");
    for (const Int& yi : y)
        if (sgn(yi) < 0) return 0;
    LiftedConfiguration lc = lift(cfg, face_set);
    Tope lt = lifted_tope(lc, tau);
    Int total = 0;
    for (const auto& sp : signed_support(lc.lifted, lt, lifted_parameter(lc, lambda, y)))
        total += sp.value;
    return total;
}

QuasiPolyFit transverse_quasipoly_fit(const Configuration& cfg, const Tope& tau, SubsetMask face_set,
                                      const IntVec& lambda) {
    if (!cfg.integral()) fail(ErrorCode::NotIntegral, "transverse_quasipoly_fit requires integral phi");
    LiftedConfiguration lc = lift(cfg, face_set);
    int vars = static_cast<int>(lc.complement.size());

    QuasiPolyFit fit;
    fit.nvars = vars;
    fit.base = IntVec(vars, Int(0));
    fit.period = 1;
    for (SubsetMask k : lc.lifted.basic_subsets()) {
        std::vector<RatVec> cols;
        for (int i : mask_indices(k)) cols.push_back(lc.lifted.phi(i));
        Rat det = determinant(RatMat::from_cols(cols));
        Int mag = abs(det.get_num());
        mpz_lcm(fit.period.get_mpz_t(), fit.period.get_mpz_t(), mag.get_mpz_t());
    }

    int deg = lc.lifted.d(); // h = 1
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> cur(vars, 0);
    while (true) {
        exps.push_back(cur);
        int pos = vars - 1;
        while (pos >= 0 && cur[pos] == static_cast<unsigned>(deg)) {
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++cur[pos];
    }
    size_t m = exps.size();

    auto y_at = [&](const std::vector<unsigned>& g) {
        IntVec y(vars);
        for (int i = 0; i < vars; ++i) y[i] = fit.period * static_cast<long>(g[i]);
        return y;
    };
    auto sample = [&](const std::vector<unsigned>& g) {
        return Rat(slice_count(cfg, tau, face_set, lambda, y_at(g)));
    };

    RatMat vand(static_cast<int>(m), static_cast<int>(m));
    RatVec rhs(m);
    for (size_t row = 0; row < m; ++row) {
        for (size_t col = 0; col < m; ++col) {
            Rat v = 1;
            for (int i = 0; i < vars; ++i)
                for (unsigned p = 0; p < exps[col][i]; ++p) v *= Rat(static_cast<long>(exps[row][i]));
            vand.at(static_cast<int>(row), static_cast<int>(col)) = v;
        }
        rhs[row] = sample(exps[row]);
    }
    RatVec coeff = solve_unique(vand, rhs);
    for (size_t col = 0; col < m; ++col)
        if (sgn(coeff[col]) != 0) fit.coefficients.emplace(exps[col], coeff[col]);

    std::vector<std::vector<unsigned>> holdouts;
    for (int kk = 0; kk < vars; ++kk) {
        std::vector<unsigned> g(vars, 0);
        g[kk] = static_cast<unsigned>(deg + 1);
        holdouts.push_back(std::move(g));
    }
    holdouts.push_back(std::vector<unsigned>(vars, static_cast<unsigned>(deg + 1)));

    fit.holdout_verified = true;
    for (const auto& g : holdouts) {
        if (fit.evaluate(y_at(g)) != sample(g)) {
            fit.holdout_verified = false;
            fail(ErrorCode::InterpolationMismatch, "transverse_quasipoly_fit: holdout sample disagrees");
        }
    }
    return fit;
}

} // namespace mirage
