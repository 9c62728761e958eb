#include "mirage/continuation.hpp"

#include <algorithm>
#include <map>

namespace mirage {

WeightPolynomial WeightPolynomial::one(int n) {
    WeightPolynomial h;
    h.n = n;
    h.monomials.push_back({Rat(1), std::vector<unsigned>(n, 0)});
    return h;
}

WeightPolynomial WeightPolynomial::coordinate(int n, int zero_based_index) {
    WeightPolynomial h;
    h.n = n;
    std::vector<unsigned> e(n, 0);
    e[zero_based_index] = 1;
    h.monomials.push_back({Rat(1), std::move(e)});
    return h;
}

WeightPolynomial WeightPolynomial::product(const WeightPolynomial& a, const WeightPolynomial& b) {
    WeightPolynomial h;
    h.n = a.n;
    for (const auto& ma : a.monomials)
        for (const auto& mb : b.monomials) {
            std::vector<unsigned> e(h.n);
            for (int i = 0; i < h.n; ++i) e[i] = ma.exponents[i] + mb.exponents[i];
            h.monomials.push_back({ma.coeff * mb.coeff, std::move(e)});
        }
    return h;
}

Rat WeightPolynomial::evaluate(const IntVec& x) const {
    if (static_cast<int>(x.size()) != n) fail(ErrorCode::DimensionMismatch, "weight: point length");
    Rat total = 0;
    for (const auto& m : monomials) {
        Rat term = m.coeff;
        for (int i = 0; i < n; ++i)
            for (unsigned e = 0; e < m.exponents[i]; ++e) term *= Rat(x[i]);
        total += term;
    }
    return total;
}

int WeightPolynomial::degree() const {
    int deg = 0;
    for (const auto& m : monomials) {
        int d = 0;
        for (unsigned e : m.exponents) d += static_cast<int>(e);
        deg = std::max(deg, d);
    }
    return deg;
}

std::vector<SignedPoint> signed_support(const Configuration& cfg, const Tope& tau, const IntVec& lambda) {
    WPolynomial x = bg_polynomial(cfg, tau);
    std::map<IntVec, Int> agg;
    for (const auto& [b, z] : x.coefficients) {
        for (auto& pt : lattice_points_flip_polytope(cfg, b, lambda)) {
            auto [it, inserted] = agg.emplace(std::move(pt), z);
            if (!inserted)
                fail(ErrorCode::Internal, "signed_support: point hit by two quadrants");
        }
    }
    std::vector<SignedPoint> out;
    out.reserve(agg.size());
    for (auto& [pt, z] : agg) out.push_back({pt, z});
    return out;
}

Rat discrete_sum(const Configuration& cfg, const Tope& tau, const WeightPolynomial& h, const IntVec& lambda) {
    Rat total = 0;
    for (const auto& sp : signed_support(cfg, tau, lambda)) total += Rat(sp.value) * h.evaluate(sp.x);
    return total;
}

bool is_regular_xi(const Configuration& cfg, const Tope& tau, const RatVec& xi) {
    for (SubsetMask k : basic_subsets_of_tope(cfg, tau)) {
        EdgeGenerators eg = edge_generators(cfg, k);
        for (const RatVec& g : eg.generators)
            if (sgn(dot(xi, g)) == 0) return false;
    }
    return true;
}

DualCovector random_regular_xi(const Configuration& cfg, std::uint64_t seed) {
    // regular against every basic subset, which is stronger than any one tope needs
    return {random_regular_covector(cfg, seed).beta};
}

namespace {

// Covolume of the parallelepiped spanned by the edge generators of a basic
// subset, measured against the lattice V cap Z^N.
Rat edge_covolume(const Configuration& cfg, const EdgeGenerators& eg) {
    int d = cfg.d();
    if (d == 0) return 1;
    const auto& lat = cfg.kernel_integer();
    if (static_cast<int>(lat.size()) != d) fail(ErrorCode::Internal, "edge_covolume: lattice basis size");
    // d independent rows of the lattice basis matrix determine the coefficients
    RatMat latmat(cfg.n(), d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < cfg.n(); ++i) latmat.at(i, j) = Rat(lat[j][i]);
    // pick pivot rows by elimination
    std::vector<int> pivot_rows;
    {
        RatMat w = latmat;
        int rk = 0;
        for (int i = 0; i < cfg.n() && rk < d; ++i) {
            int pc = -1;
            for (int j = rk; j < d; ++j)
                if (sgn(w.at(i, j)) != 0) {
                    pc = j;
                    break;
                }
            if (pc < 0) continue;
            if (pc != rk)
                for (int ii = 0; ii < cfg.n(); ++ii) std::swap(w.at(ii, pc), w.at(ii, rk));
            for (int j = 0; j < d; ++j) {
                if (j == rk || sgn(w.at(i, j)) == 0) continue;
                Rat f = w.at(i, j) / w.at(i, rk);
                for (int ii = 0; ii < cfg.n(); ++ii) w.at(ii, j) -= f * w.at(ii, rk);
            }
            pivot_rows.push_back(i);
            ++rk;
        }
        if (rk != d) fail(ErrorCode::Internal, "edge_covolume: lattice basis not full rank");
    }
    RatMat lsub(d, d), gsub(d, d);
    for (int a = 0; a < d; ++a)
        for (int j = 0; j < d; ++j) {
            lsub.at(a, j) = latmat.at(pivot_rows[a], j);
            gsub.at(a, j) = eg.generators[j][pivot_rows[a]];
        }
    // C = lsub^{-1} gsub expresses the generators over the lattice basis
    RatMat c = inverse(lsub);
    Rat det = 0;
    {
        RatMat coeff(d, d);
        for (int a = 0; a < d; ++a)
            for (int j = 0; j < d; ++j) {
                Rat s = 0;
                for (int k = 0; k < d; ++k) s += c.at(a, k) * gsub.at(k, j);
                coeff.at(a, j) = s;
            }
        det = determinant(coeff);
    }
    return abs(det);
}

Int factorial(int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Rat pow_rat(const Rat& x, int e) {
    Rat p = 1;
    for (int k = 0; k < e; ++k) p *= x;
    return p;
}

} // namespace

Rat volume_integral(const Configuration& cfg, const Tope& tau, int m_degree, const DualCovector& xi,
                    const RatVec& lambda) {
    if (static_cast<int>(xi.xi.size()) != cfg.n()) fail(ErrorCode::DimensionMismatch, "volume_integral: xi length");
    auto bt = basic_subsets_of_tope(cfg, tau);
    if (bt.empty()) return 0;
    int d = cfg.d();
    Rat total = 0;
    for (SubsetMask k : bt) {
        EdgeGenerators eg = edge_generators(cfg, k);
        Rat denom = 1;
        for (const RatVec& g : eg.generators) {
            Rat v = dot(xi.xi, g);
            if (sgn(v) == 0)
                fail(ErrorCode::IrregularXi, "volume_integral: xi vanishes on an edge generator of " + mask_to_string(k));
            denom *= -v;
        }
        RatVec s = vertex(cfg, k, lambda);
        Rat num = pow_rat(dot(xi.xi, s), m_degree + d);
        total += num * edge_covolume(cfg, eg) / (Rat(factorial(m_degree + d)) * denom);
    }
    return total;
}

Rat QuasiPolyFit::evaluate(const IntVec& lambda) const {
    if (static_cast<int>(lambda.size()) != nvars) fail(ErrorCode::DimensionMismatch, "quasipoly: lambda length");
    RatVec g(nvars);
    for (int i = 0; i < nvars; ++i) g[i] = Rat(lambda[i] - base[i]) / Rat(period);
    Rat total = 0;
    for (const auto& [e, c] : coefficients) {
        Rat term = c;
        for (int i = 0; i < nvars; ++i)
            for (unsigned p = 0; p < e[i]; ++p) term *= g[i];
        total += term;
    }
    return total;
}

QuasiPolyFit quasipoly_fit(const Configuration& cfg, const Tope& tau, const WeightPolynomial& h,
                           const IntVec& lambda0) {
    if (!cfg.integral()) fail(ErrorCode::NotIntegral, "quasipoly_fit requires integral phi");
    QuasiPolyFit fit;
    fit.base = lambda0;
    fit.nvars = cfg.r();
    fit.period = 1;
    for (SubsetMask k : cfg.basic_subsets()) {
        std::vector<RatVec> cols;
        for (int i : mask_indices(k)) cols.push_back(cfg.phi(i));
        Rat det = determinant(RatMat::from_cols(cols));
        Int mag = abs(det.get_num());
        mpz_lcm(fit.period.get_mpz_t(), fit.period.get_mpz_t(), mag.get_mpz_t());
    }

    int deg = cfg.d() + h.degree();
    int r = cfg.r();

    // tensor grid {0..deg}^r
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> cur(r, 0);
    while (true) {
        exps.push_back(cur);
        int pos = r - 1;
        while (pos >= 0 && cur[pos] == static_cast<unsigned>(deg)) {
            cur[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++cur[pos];
    }
    size_t m = exps.size();

    auto lambda_at = [&](const std::vector<unsigned>& g) {
        IntVec l = lambda0;
        for (int i = 0; i < r; ++i) l[i] += fit.period * static_cast<long>(g[i]);
        return l;
    };
    auto sample = [&](const std::vector<unsigned>& g) { return discrete_sum(cfg, tau, h, lambda_at(g)); };

    RatMat vand(static_cast<int>(m), static_cast<int>(m));
    RatVec rhs(m);
    for (size_t row = 0; row < m; ++row) {
        for (size_t col = 0; col < m; ++col) {
            Rat v = 1;
            for (int i = 0; i < r; ++i)
                for (unsigned p = 0; p < exps[col][i]; ++p) v *= Rat(static_cast<long>(exps[row][i]));
            vand.at(static_cast<int>(row), static_cast<int>(col)) = v;
        }
        rhs[row] = sample(exps[row]);
    }
    RatVec coeff = solve_unique(vand, rhs);
    for (size_t col = 0; col < m; ++col)
        if (sgn(coeff[col]) != 0) fit.coefficients.emplace(exps[col], coeff[col]);

    // holdout grid points: (deg+1)*e_k and (deg+1)*(1,..,1)
    std::vector<std::vector<unsigned>> holdouts;
    for (int kk = 0; kk < r; ++kk) {
        std::vector<unsigned> g(r, 0);
        g[kk] = static_cast<unsigned>(deg + 1);
        holdouts.push_back(std::move(g));
    }
    holdouts.push_back(std::vector<unsigned>(r, static_cast<unsigned>(deg + 1)));

    fit.holdout_verified = true;
    for (const auto& g : holdouts) {
        if (fit.evaluate(lambda_at(g)) != sample(g)) {
            fit.holdout_verified = false;
            fail(ErrorCode::InterpolationMismatch, "quasipoly_fit: holdout sample disagrees with the fit");
        }
    }
    return fit;
}

std::pair<Rat, Rat> wallcross_count_check(const Configuration& cfg, const Tope& tau1, const Tope& tau2,
                                          const WeightPolynomial& h, const IntVec& lambda) {
    SubsetMask a = crossing_set(cfg, tau1, tau2); // throws NotAdjacent
    Tope at = tope_of(cfg, to_rational(lambda));
    if (!(at == tau2)) fail(ErrorCode::Internal, "wallcross_count_check: lambda is not strictly inside tau2");

    Rat lhs = discrete_sum(cfg, tau1, h, lambda);

    std::vector<CoordSign> closed(cfg.n(), CoordSign::NonNeg);
    Rat plain = 0;
    for (const auto& x : lattice_points_signed_serial(cfg, closed, lambda)) plain += h.evaluate(x);

    std::vector<CoordSign> flipped(cfg.n(), CoordSign::NonNeg);
    for (int i : mask_indices(a)) flipped[i] = CoordSign::StrictNeg;
    Rat flip_sum = 0;
    for (const auto& x : lattice_points_signed_serial(cfg, flipped, lambda)) flip_sum += h.evaluate(x);

    Rat rhs = plain - Rat(popcount(a) % 2 == 0 ? 1 : -1) * flip_sum;
    return {lhs, rhs};
}

Int toric_multiplicity(const Configuration& cfg, const Tope& tau, const IntVec& m) {
    return geom_eval(bg_polynomial(cfg, tau), m);
}

Int virtual_dimension(const Configuration& cfg, const Tope& tau, const IntVec& lambda) {
    Rat v = discrete_sum(cfg, tau, WeightPolynomial::one(cfg.n()), lambda);
    if (!is_integer(v)) fail(ErrorCode::Internal, "virtual_dimension: non-integer sum");
    return v.get_num();
}

} // namespace mirage
