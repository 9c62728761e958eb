#include "mirage/render.hpp"

#include <algorithm>
#include <sstream>

namespace mirage {

namespace {

struct Chart {
    SubsetMask basic = 0;
    int j1 = 0, j2 = 0;          // the two free coordinates
    std::vector<int> basic_idx;  // K0 ascending
    RatVec v0;                   // inv * lambda
    RatVec w1, w2;               // inv * phi_j1, inv * phi_j2
};

Chart make_chart(const Configuration& cfg, const RatVec& lambda) {
    if (cfg.d() != 2) fail(ErrorCode::WrongCodimension, "render: N - r must be 2");
    Chart ch;
    ch.basic = cfg.basic_subsets().front();
    std::vector<int> free_idx;
    for (int j = 0; j < cfg.n(); ++j)
        if (!(ch.basic & (1u << j))) free_idx.push_back(j);
    ch.j1 = free_idx[0];
    ch.j2 = free_idx[1];
    ch.basic_idx = mask_indices(ch.basic);
    const RatMat& inv = cfg.basis_inverse(ch.basic);
    ch.v0 = inv.apply(lambda);
    ch.w1 = inv.apply(cfg.phi(ch.j1));
    ch.w2 = inv.apply(cfg.phi(ch.j2));
    return ch;
}

// Point of V(Phi,lambda) with free coordinates (u,v).
RatVec chart_point(const Configuration& cfg, const Chart& ch, const Rat& u, const Rat& v) {
    RatVec x(cfg.n(), Rat(0));
    x[ch.j1] = u;
    x[ch.j2] = v;
    for (size_t k = 0; k < ch.basic_idx.size(); ++k)
        x[ch.basic_idx[k]] = ch.v0[k] - u * ch.w1[k] - v * ch.w2[k];
    return x;
}

// Fixed-point decimal with 4 fractional digits, exact rounding.
std::string decimal4(const Rat& x) {
    Int scaled;
    Rat t = x * 10000;
    // round half away from zero: floor(|t| + 1/2) with the sign restored
    Rat a = abs(t) + Rat(1) / Rat(2);
    mpz_fdiv_q(scaled.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    if (sgn(x) < 0) scaled = -scaled;
    Int q = scaled / 10000;
    Int r = abs(scaled % 10000);
    std::string frac = r.get_str();
    frac.insert(frac.begin(), 4 - frac.size(), '0');
    std::string sign = (sgn(scaled) < 0 && q == 0) ? "-" : "";
    return sign + q.get_str() + "." + frac;
}

const char* color_of(long value) {
    switch (value) {
        case 1: return "#3b6fd4";
        case -1: return "#d43b3b";
        case -2: return "#ff00ff";
        default: return "#888888";
    }
}

} // namespace

RenderScene default_scene(const Configuration& cfg, const Tope& tau, const RatVec& lambda,
                          int resolution) {
    Chart ch = make_chart(cfg, lambda);
    WPolynomial x = bg_polynomial(cfg, tau);
    bool any = false;
    Rat lo1, hi1, lo2, hi2;
    for (const auto& [b, z] : x.coefficients) {
        for (SubsetMask k : cfg.basic_subsets()) {
            RatVec s = vertex(cfg, k, lambda);
            bool ok = true;
            for (int i = 0; i < cfg.n() && ok; ++i) {
                int sg = sgn(s[i]);
                if ((b >> i) & 1u ? sg > 0 : sg < 0) ok = false;
            }
            if (!ok) continue;
            Rat u = s[ch.j1], v = s[ch.j2];
            if (!any) {
                lo1 = hi1 = u;
                lo2 = hi2 = v;
                any = true;
            } else {
                lo1 = std::min(lo1, u);
                hi1 = std::max(hi1, u);
                lo2 = std::min(lo2, v);
                hi2 = std::max(hi2, v);
            }
        }
    }
    if (!any) {
        lo1 = lo2 = -1;
        hi1 = hi2 = 1;
    }
    Rat pad1 = (hi1 - lo1) / 4, pad2 = (hi2 - lo2) / 4;
    if (sgn(pad1) == 0) pad1 = 1;
    if (sgn(pad2) == 0) pad2 = 1;
    RenderScene scene;
    scene.window = {lo1 - pad1, hi1 + pad1, lo2 - pad2, hi2 + pad2};
    scene.resolution = resolution;
    return scene;
}

std::string render_svg(const Configuration& cfg, const Tope& tau, const RatVec& lambda,
                       const RenderScene& scene, RenderStats* stats) {
    Chart ch = make_chart(cfg, lambda);
    WPolynomial xpoly = bg_polynomial(cfg, tau);
    int res = scene.resolution;
    const Rat &x0 = scene.window[0], &x1 = scene.window[1], &y0 = scene.window[2], &y1 = scene.window[3];
    if (!(x0 < x1 && y0 < y1) || res <= 0) fail(ErrorCode::ParseError, "render: degenerate window");
    Rat du = (x1 - x0) / res;
    Rat dv = (y1 - y0) / res;

    // values at cell centers, rows from the top of the picture (v decreasing)
    std::vector<std::vector<long>> grid(res, std::vector<long>(res, 0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int row = 0; row < res; ++row) {
        Rat v = y1 - dv * (2 * row + 1) / 2;
        for (int col = 0; col < res; ++col) {
            Rat u = x0 + du * (2 * col + 1) / 2;
            Int z = geom_eval(xpoly, chart_point(cfg, ch, u, v));
            grid[row][col] = z.fits_slong_p() ? z.get_si() : 999;
        }
    }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << res << "\" height=\"" << res
       << "\" viewBox=\"0 0 " << res << " " << res << "\">\n";
    os << "<g shape-rendering=\"crispEdges\">\n";
    for (int row = 0; row < res; ++row) {
        int col = 0;
        while (col < res) {
            long val = grid[row][col];
            int start = col;
            while (col < res && grid[row][col] == val) ++col;
            if (stats) stats->cells_by_value[val] += col - start;
            if (val == 0) continue;
            os << "<rect x=\"" << start << "\" y=\"" << row << "\" width=\"" << (col - start)
               << "\" height=\"1\" fill=\"" << color_of(val) << "\"/>\n";
        }
    }
    os << "</g>\n<g stroke=\"#222222\" stroke-width=\"0.6\">\n";

    // the N lines x_i = 0 in chart coordinates: a*u + b*v = c
    auto to_px_u = [&](const Rat& u) { return decimal4((u - x0) / du); };
    auto to_px_v = [&](const Rat& v) { return decimal4((y1 - v) / dv); };
    for (int i = 0; i < cfg.n(); ++i) {
        Rat a, b, c;
        if (i == ch.j1) {
            a = 1;
            b = 0;
            c = 0;
        } else if (i == ch.j2) {
            a = 0;
            b = 1;
            c = 0;
        } else {
            int k = -1;
            for (size_t t = 0; t < ch.basic_idx.size(); ++t)
                if (ch.basic_idx[t] == i) k = static_cast<int>(t);
            a = ch.w1[k];
            b = ch.w2[k];
            c = ch.v0[k];
        }
        // intersect with the window rectangle
        std::vector<std::pair<Rat, Rat>> pts;
        auto push_unique = [&](const Rat& u, const Rat& v) {
            for (const auto& p : pts)
                if (p.first == u && p.second == v) return;
            pts.emplace_back(u, v);
        };
        if (sgn(b) != 0) {
            for (const Rat& u : {x0, x1}) {
                Rat v = (c - a * u) / b;
                if (v >= y0 && v <= y1) push_unique(u, v);
            }
        }
        if (sgn(a) != 0) {
            for (const Rat& v : {y0, y1}) {
                Rat u = (c - b * v) / a;
                if (u >= x0 && u <= x1) push_unique(u, v);
            }
        }
        if (pts.size() >= 2) {
            os << "<line x1=\"" << to_px_u(pts[0].first) << "\" y1=\"" << to_px_v(pts[0].second)
               << "\" x2=\"" << to_px_u(pts[1].first) << "\" y2=\"" << to_px_v(pts[1].second)
               << "\"/>\n";
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace mirage
