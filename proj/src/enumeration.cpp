#include "mirage/enumeration.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mirage {

namespace {

struct SliceBox {
    bool empty = false;
    SubsetMask basic = 0;
    std::vector<int> free_idx;   // K0^c, ascending
    std::vector<int> basic_idx;  // K0, ascending
    std::vector<long> lo, hi;    // integer bounds per free coordinate
    RatVec v0;                   // inv * lambda
    std::vector<RatVec> wcols;   // inv * phi_j per free coordinate
};

long ceil_long(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (!q.fits_slong_p()) fail(ErrorCode::Internal, "enumeration: bound exceeds machine range");
    return q.get_si();
}

long floor_long(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    if (!q.fits_slong_p()) fail(ErrorCode::Internal, "enumeration: bound exceeds machine range");
    return q.get_si();
}

// Bounds for the free coordinates from the feasible vertices of the closure.
SliceBox make_box(const Configuration& cfg, const std::vector<CoordSign>& signs, const RatVec& lambda) {
    SliceBox box;
    const auto& basics = cfg.basic_subsets();
    std::vector<RatVec> feasible;
    for (SubsetMask k : basics) {
        RatVec s = vertex(cfg, k, lambda);
        bool ok = true;
        for (int i = 0; i < cfg.n() && ok; ++i) {
            int sg = sgn(s[i]);
            if (signs[i] == CoordSign::StrictNeg ? sg > 0 : sg < 0) ok = false;
        }
        if (ok) feasible.push_back(std::move(s));
    }
    if (feasible.empty()) {
        box.empty = true;
        return box;
    }

    box.basic = basics.front();
    box.basic_idx = mask_indices(box.basic);
    for (int j = 0; j < cfg.n(); ++j)
        if (!(box.basic & (1u << j))) box.free_idx.push_back(j);

    double cells = 1;
    for (int j : box.free_idx) {
        Rat lo = feasible[0][j], hi = feasible[0][j];
        for (const auto& s : feasible) {
            if (s[j] < lo) lo = s[j];
            if (s[j] > hi) hi = s[j];
        }
        long l = ceil_long(lo), h = floor_long(hi);
        switch (signs[j]) {
            case CoordSign::NonNeg: l = std::max(l, 0L); break;
            case CoordSign::StrictPos: l = std::max(l, 1L); break;
            case CoordSign::StrictNeg: h = std::min(h, -1L); break;
        }
        box.lo.push_back(l);
        box.hi.push_back(h);
        if (l > h) box.empty = true;
        cells *= std::max(0.0, static_cast<double>(h) - static_cast<double>(l) + 1);
    }
    if (!box.empty && cells > 2e8)
        fail(ErrorCode::Internal, "enumeration: free-coordinate box exceeds 2e8 cells");

    const RatMat& inv = cfg.basis_inverse(box.basic);
    box.v0 = inv.apply(lambda);
    for (int j : box.free_idx) box.wcols.push_back(inv.apply(cfg.phi(j)));
    return box;
}

// Checks the dependent coordinates of one assignment and emits the point.
bool finish_point(const Configuration& cfg, const std::vector<CoordSign>& signs, const SliceBox& box,
                  const std::vector<long>& assign, const RatVec& residual, IntVec& out) {
    for (size_t k = 0; k < box.basic_idx.size(); ++k) {
        if (!is_integer(residual[k])) return false;
        int i = box.basic_idx[k];
        int sg = sgn(residual[k]);
        switch (signs[i]) {
            case CoordSign::NonNeg:
                if (sg < 0) return false;
                break;
            case CoordSign::StrictPos:
                if (sg <= 0) return false;
                break;
            case CoordSign::StrictNeg:
                if (sg >= 0) return false;
                break;
        }
    }
    out.assign(cfg.n(), Int(0));
    for (size_t t = 0; t < assign.size(); ++t) out[box.free_idx[t]] = assign[t];
    for (size_t k = 0; k < box.basic_idx.size(); ++k) out[box.basic_idx[k]] = residual[k].get_num();
    return true;
}

void recurse(const Configuration& cfg, const std::vector<CoordSign>& signs, const SliceBox& box,
             size_t depth, std::vector<long>& assign, const RatVec& residual,
             std::vector<IntVec>& out) {
    if (depth == box.free_idx.size()) {
        IntVec pt;
        if (finish_point(cfg, signs, box, assign, residual, pt)) out.push_back(std::move(pt));
        return;
    }
    RatVec res = residual;
    // start at lo: residual -= lo * w, then step by -w
    const RatVec& w = box.wcols[depth];
    for (size_t k = 0; k < res.size(); ++k) res[k] -= Rat(box.lo[depth]) * w[k];
    for (long v = box.lo[depth]; v <= box.hi[depth]; ++v) {
        assign[depth] = v;
        recurse(cfg, signs, box, depth + 1, assign, res, out);
        for (size_t k = 0; k < res.size(); ++k) res[k] -= w[k];
    }
}

void check_discrete_inputs(const Configuration& cfg, const std::vector<CoordSign>& signs,
                           const IntVec& lambda) {
    if (!cfg.integral()) fail(ErrorCode::NotIntegral, "lattice enumeration requires integral phi");
    if (static_cast<int>(lambda.size()) != cfg.r())
        fail(ErrorCode::DimensionMismatch, "lattice enumeration: lambda length");
    if (static_cast<int>(signs.size()) != cfg.n())
        fail(ErrorCode::DimensionMismatch, "lattice enumeration: sign vector length");
}

bool coset_empty(const Configuration& cfg, const IntVec& lambda) {
    return !particular_integer_solution(cfg.integer_matrix(), lambda).has_value();
}

} // namespace

std::vector<IntVec> lattice_points_signed_serial(const Configuration& cfg,
                                                 const std::vector<CoordSign>& signs,
                                                 const IntVec& lambda, EnumDiagnostics* diag) {
    check_discrete_inputs(cfg, signs, lambda);
    if (coset_empty(cfg, lambda)) {
        if (diag) diag->empty_coset = true;
        return {};
    }
    SliceBox box = make_box(cfg, signs, to_rational(lambda));
    if (box.empty) {
        if (diag) diag->empty_closure = true;
        return {};
    }
    std::vector<IntVec> out;
    std::vector<long> assign(box.free_idx.size(), 0);
    recurse(cfg, signs, box, 0, assign, box.v0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> lattice_points_signed(const Configuration& cfg,
                                          const std::vector<CoordSign>& signs, const IntVec& lambda,
                                          EnumDiagnostics* diag) {
    check_discrete_inputs(cfg, signs, lambda);
    if (coset_empty(cfg, lambda)) {
        if (diag) diag->empty_coset = true;
        return {};
    }
    SliceBox box = make_box(cfg, signs, to_rational(lambda));
    if (box.empty) {
        if (diag) diag->empty_closure = true;
        return {};
    }
    std::vector<IntVec> out;
    if (box.free_idx.empty()) {
        IntVec pt;
        std::vector<long> none;
        if (finish_point(cfg, signs, box, none, box.v0, pt)) out.push_back(std::move(pt));
        return out;
    }

    long lo0 = box.lo[0], hi0 = box.hi[0];
    long span = hi0 - lo0 + 1;
    std::vector<std::vector<IntVec>> partial(static_cast<size_t>(span));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long off = 0; off < span; ++off) {
        long v = lo0 + off;
        RatVec res = box.v0;
        const RatVec& w = box.wcols[0];
        for (size_t k = 0; k < res.size(); ++k) res[k] -= Rat(v) * w[k];
        std::vector<long> assign(box.free_idx.size(), 0);
        assign[0] = v;
        recurse(cfg, signs, box, 1, assign, res, partial[static_cast<size_t>(off)]);
    }
    for (auto& chunk : partial)
        for (auto& pt : chunk) out.push_back(std::move(pt));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> lattice_points_flip_polytope(const Configuration& cfg, SubsetMask b,
                                                 const IntVec& lambda, EnumDiagnostics* diag) {
    if (!is_flip_salient(cfg, b))
        fail(ErrorCode::NotSalient, "lattice_points_flip_polytope: flipped cone " + mask_to_string(b) +
                                        " is not salient, the slice is unbounded");
    std::vector<CoordSign> signs(cfg.n(), CoordSign::NonNeg);
    for (int i : mask_indices(b)) signs[i] = CoordSign::StrictNeg;
    return lattice_points_signed(cfg, signs, lambda, diag);
}

Int brute_force_count(const Configuration& cfg, const IntVec& lambda) {
    std::vector<CoordSign> signs(cfg.n(), CoordSign::NonNeg);
    return Int(static_cast<long>(lattice_points_signed_serial(cfg, signs, lambda).size()));
}

} // namespace mirage
