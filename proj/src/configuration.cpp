#include "mirage/configuration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <sstream>

namespace mirage {

int popcount(SubsetMask m) { return __builtin_popcount(m); }
SubsetMask full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

std::vector<int> mask_indices(SubsetMask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

std::string mask_to_string(SubsetMask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : mask_indices(m)) {
        if (!first) os << ',';
        os << (i + 1);
        first = false;
    }
    os << '}';
    return os.str();
}

namespace {

void enumerate_combinations(int n, int k, const std::function<void(SubsetMask)>& fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        SubsetMask m = 0;
        for (int i : idx) m |= 1u << i;
        fn(m);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

RatMat submatrix_cols(const std::vector<RatVec>& phi, int r, SubsetMask m) {
    std::vector<RatVec> cols;
    for (int i : mask_indices(m)) cols.push_back(phi[i]);
    RatMat out = RatMat::from_cols(cols);
    if (out.rows == 0) out = RatMat(r, 0);
    return out;
}

RatMat rows_of(const std::vector<RatVec>& phi, SubsetMask m) {
    std::vector<RatVec> rows;
    for (int i : mask_indices(m)) rows.push_back(phi[i]);
    return RatMat::from_rows(rows);
}

IntVec canonical_normal(const RatVec& kernel_vec) {
    IntVec n = primitive_integer_vector(kernel_vec);
    for (const Int& e : n) {
        if (sgn(e) == 0) continue;
        if (sgn(e) < 0)
            for (Int& f : n) f = -f;
        break;
    }
    return n;
}

Rat wall_value(const Wall& w, const RatVec& x) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        if (sgn(w.normal[i]) != 0) s += Rat(w.normal[i]) * x[i];
    return s;
}

} // namespace

Configuration Configuration::make(std::vector<RatVec> phi, bool check_salient) {
    Configuration cfg;
    cfg.n_ = static_cast<int>(phi.size());
    if (cfg.n_ == 0) fail(ErrorCode::NotSpanning, "empty configuration");
    if (cfg.n_ > kMaxVectors)
        fail(ErrorCode::DimensionMismatch, "configuration exceeds the N <= " + std::to_string(kMaxVectors) + " cap");
    cfg.r_ = static_cast<int>(phi[0].size());
    for (int i = 0; i < cfg.n_; ++i) {
        if (static_cast<int>(phi[i].size()) != cfg.r_)
            fail(ErrorCode::DimensionMismatch, "phi vectors of unequal length");
        if (is_zero(phi[i]))
            fail(ErrorCode::ZeroVector, "phi_" + std::to_string(i + 1) + " is zero");
    }
    cfg.phi_ = std::move(phi);
    cfg.matrix_ = RatMat::from_cols(cfg.phi_);
    if (rank(cfg.matrix_) != cfg.r_) fail(ErrorCode::NotSpanning, "phi does not span F");

    cfg.integral_ = true;
    for (const auto& v : cfg.phi_)
        if (!is_integral(v)) cfg.integral_ = false;
    if (cfg.integral_) {
        cfg.int_matrix_ = IntMat(cfg.r_, cfg.n_);
        for (int i = 0; i < cfg.r_; ++i)
            for (int j = 0; j < cfg.n_; ++j) cfg.int_matrix_.at(i, j) = cfg.phi_[j][i].get_num();
    }

    cfg.kernel_rational_ = kernel_basis(cfg.matrix_);
    {
        // Row-scaled integer matrix: same kernel, so its integer kernel is the
        // lattice V cap Z^N even for rational phi.
        IntMat scaled(cfg.r_, cfg.n_);
        for (int i = 0; i < cfg.r_; ++i) {
            Int l = 1;
            for (int j = 0; j < cfg.n_; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cfg.matrix_.at(i, j).get_den().get_mpz_t());
            for (int j = 0; j < cfg.n_; ++j) {
                Rat v = cfg.matrix_.at(i, j) * Rat(l);
                scaled.at(i, j) = v.get_num();
            }
        }
        cfg.kernel_integer_ = integer_kernel_basis(scaled);
    }

    // Walls.
    if (cfg.r_ == 1) {
        Wall w;
        w.normal = int_vec({1});
        w.spanning_indices = 0;
        cfg.walls_.push_back(w);
    } else {
        std::map<IntVec, Wall> dedup;
        enumerate_combinations(cfg.n_, cfg.r_ - 1, [&](SubsetMask m) {
            RatMat rows = rows_of(cfg.phi_, m);
            auto ker = kernel_basis(rows);
            if (ker.size() != 1) return; // dependent subset
            IntVec nrm = canonical_normal(ker[0]);
            auto it = dedup.find(nrm);
            if (it == dedup.end()) dedup.emplace(nrm, Wall{nrm, m});
        });
        for (auto& [nrm, w] : dedup) cfg.walls_.push_back(w);
    }

    // Basic subsets with cached inverses.
    cfg.basic_index_of_mask_.assign(size_t(1) << std::min(cfg.n_, 20), -1);
    enumerate_combinations(cfg.n_, cfg.r_, [&](SubsetMask m) {
        RatMat sub = submatrix_cols(cfg.phi_, cfg.r_, m);
        if (sgn(determinant(sub)) == 0) return;
        if (m < cfg.basic_index_of_mask_.size())
            cfg.basic_index_of_mask_[m] = static_cast<int>(cfg.basic_subsets_.size());
        cfg.basic_subsets_.push_back(m);
        cfg.basic_inverses_.push_back(inverse(sub));
    });

    if (cfg.n_ <= 20) {
        for (SubsetMask m = 0; m <= full_mask(cfg.n_); ++m) {
            if (cfg.is_generating(m)) cfg.generating_subsets_.push_back(m);
            if (m == full_mask(cfg.n_)) break;
        }
    }

    if (check_salient) {
        if (!is_flip_salient(cfg, 0)) fail(ErrorCode::NotSalient, "the cone c(Phi) is not salient");
    }
    return cfg;
}

const RatMat& Configuration::basis_inverse(SubsetMask basic) const {
    if (basic < basic_index_of_mask_.size()) {
        int idx = basic_index_of_mask_[basic];
        if (idx >= 0) return basic_inverses_[idx];
    } else {
        auto it = std::lower_bound(basic_subsets_.begin(), basic_subsets_.end(), basic);
        if (it != basic_subsets_.end() && *it == basic)
            return basic_inverses_[it - basic_subsets_.begin()];
    }
    fail(ErrorCode::Internal, "basis_inverse: subset " + mask_to_string(basic) + " is not basic");
}

bool Configuration::is_basic(SubsetMask m) const {
    if (m < basic_index_of_mask_.size()) return basic_index_of_mask_[m] >= 0;
    return std::binary_search(basic_subsets_.begin(), basic_subsets_.end(), m);
}

bool Configuration::is_generating(SubsetMask m) const {
    for (SubsetMask k : basic_subsets_)
        if ((k & m) == k) return true;
    return false;
}

void validate(const Configuration& cfg) {
    // zero/spanning were enforced at construction; recheck salience here
    if (!is_flip_salient(cfg, 0)) fail(ErrorCode::NotSalient, "the cone c(Phi) is not salient");
}

std::vector<Wall> walls(const Configuration& cfg) { return cfg.walls(); }
std::vector<SubsetMask> basic_subsets(const Configuration& cfg) { return cfg.basic_subsets(); }

std::vector<SubsetMask> generating_subsets(const Configuration& cfg) {
    if (cfg.n() > 20) fail(ErrorCode::Internal, "generating_subsets: N > 20 enumeration not supported");
    return cfg.generating_subsets();
}

bool is_regular(const Configuration& cfg, const RatVec& lambda) {
    if (static_cast<int>(lambda.size()) != cfg.r()) fail(ErrorCode::DimensionMismatch, "is_regular: lambda length");
    for (const Wall& w : cfg.walls())
        if (sgn(wall_value(w, lambda)) == 0) return false;
    return true;
}

Tope tope_of(const Configuration& cfg, const RatVec& lambda) {
    if (static_cast<int>(lambda.size()) != cfg.r()) fail(ErrorCode::DimensionMismatch, "tope_of: lambda length");
    Tope t;
    t.signs.reserve(cfg.walls().size());
    for (const Wall& w : cfg.walls()) {
        int s = sgn(wall_value(w, lambda));
        if (s == 0) fail(ErrorCode::NotRegular, "tope_of: lambda lies on a wall");
        t.signs.push_back(s);
    }
    t.representative = lambda;
    return t;
}

namespace {

// Strict feasibility of a full or partial sign assignment.
std::optional<RatVec> sign_witness(const Configuration& cfg, const std::vector<int>& signs,
                                   int fixed_wall = -1) {
    LinearSystem sys;
    sys.dim = cfg.r();
    const auto& ws = cfg.walls();
    for (size_t i = 0; i < ws.size(); ++i) {
        RatVec cov = to_rational(ws[i].normal);
        if (static_cast<int>(i) == fixed_wall) {
            sys.add(cov, Rel::EQ, 0);
        } else {
            if (signs[i] < 0)
                for (Rat& e : cov) e = -e;
            sys.add(std::move(cov), Rel::GT, 0);
        }
    }
    return feasible_strict(sys);
}

RatVec seed_regular_point(const Configuration& cfg) {
    static const long ts[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    for (long t : ts) {
        RatVec p(cfg.r());
        Rat pw = 1;
        for (int j = 0; j < cfg.r(); ++j) {
            p[j] = pw;
            pw *= t;
        }
        if (is_regular(cfg, p)) return p;
    }
    // Fall back to an LP witness for some realizable sign vector.
    std::vector<int> signs(cfg.walls().size(), 1);
    for (size_t flips = 0; flips < (size_t(1) << std::min<size_t>(cfg.walls().size(), 16)); ++flips) {
        for (size_t i = 0; i < signs.size(); ++i) signs[i] = (flips >> i) & 1 ? -1 : 1;
        auto w = sign_witness(cfg, signs);
        if (w) return *w;
    }
    fail(ErrorCode::Internal, "seed_regular_point: no regular point found");
}

// Replaces an interior witness by a point on a coarse dyadic grid with the
// same wall signs; keeps representative coordinates small across long
// flood-fill chains. Falls back to the exact input.
RatVec simplify_witness(const Configuration& cfg, const RatVec& q, const std::vector<int>& signs) {
    const auto& ws = cfg.walls();
    Rat norm = 0;
    for (const Rat& e : q)
        if (abs(e) > norm) norm = abs(e);
    if (sgn(norm) == 0) return q;
    RatVec base = scale(Rat(1) / norm, q);
    for (long den = 1; den <= (1L << 20); den *= 2) {
        RatVec cand(base.size());
        for (size_t i = 0; i < base.size(); ++i) {
            Rat t = base[i] * den + Rat(1) / 2;
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
            cand[i] = Rat(fl) / den;
        }
        bool match = true;
        for (size_t w = 0; w < ws.size() && match; ++w)
            if (sgn(wall_value(ws[w], cand)) != signs[w]) match = false;
        if (match) return cand;
    }
    return q;
}

// Witness for the neighbor across wall h, built from a point mu interior to
// the shared facet.
RatVec step_across(const Configuration& cfg, const RatVec& mu, int h, int old_sign) {
    const auto& ws = cfg.walls();
    RatVec nh = to_rational(ws[h].normal);
    Rat nh2 = dot(nh, nh);
    Rat delta = 1;
    for (size_t w = 0; w < ws.size(); ++w) {
        if (static_cast<int>(w) == h) continue;
        RatVec nw = to_rational(ws[w].normal);
        Rat cross = dot(nw, nh);
        if (sgn(cross) == 0) continue;
        Rat bound = abs(dot(nw, mu)) / abs(cross);
        if (bound < delta) delta = bound;
    }
    delta /= 2;
    RatVec q = mu;
    for (int j = 0; j < cfg.r(); ++j) q[j] -= Rat(old_sign) * delta * nh[j];
    return q;
}

} // namespace

std::vector<Tope> enumerate_topes(const Configuration& cfg) {
    const auto& ws = cfg.walls();
    size_t m = ws.size();

    RatVec seed = seed_regular_point(cfg);
    Tope first = tope_of(cfg, seed);

    std::map<std::vector<int>, int> found; // sign vector -> index (-1: proven empty)
    std::vector<Tope> topes;
    std::queue<int> frontier;
    found[first.signs] = 0;
    topes.push_back(first);
    frontier.push(0);

    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop();
        for (size_t h = 0; h < m; ++h) {
            Tope t = topes[cur];
            std::vector<int> cand = t.signs;
            cand[h] = -cand[h];
            if (found.count(cand)) continue;

            // cheap route: orthogonal projection of the witness onto the wall
            RatVec nh = to_rational(ws[h].normal);
            Rat f = dot(nh, t.representative) / dot(nh, nh);
            RatVec mu = t.representative;
            for (int j = 0; j < cfg.r(); ++j) mu[j] -= f * nh[j];
            bool interior = true;
            for (size_t w = 0; w < m && interior; ++w) {
                if (w == h) continue;
                if (sgn(wall_value(ws[w], mu)) != t.signs[w]) interior = false;
            }
            if (!interior) {
                auto lp = sign_witness(cfg, t.signs, static_cast<int>(h));
                if (!lp) {
                    found[cand] = -1;
                    continue;
                }
                mu = *lp;
            }
            RatVec q = step_across(cfg, mu, static_cast<int>(h), t.signs[h]);
            Tope nb = tope_of(cfg, q);
            if (nb.signs != cand) fail(ErrorCode::Internal, "enumerate_topes: inconsistent crossing");
            nb.representative = simplify_witness(cfg, nb.representative, nb.signs);
            found[cand] = static_cast<int>(topes.size());
            topes.push_back(nb);
            frontier.push(found[cand]);
        }
    }

    std::sort(topes.begin(), topes.end());
    return topes;
}

std::optional<Wall> adjacent(const Configuration& cfg, const Tope& t1, const Tope& t2) {
    const auto& ws = cfg.walls();
    if (t1.signs.size() != ws.size() || t2.signs.size() != ws.size())
        fail(ErrorCode::DimensionMismatch, "adjacent: foreign topes");
    int diff = -1;
    for (size_t i = 0; i < ws.size(); ++i) {
        if (t1.signs[i] != t2.signs[i]) {
            if (diff >= 0) return std::nullopt;
            diff = static_cast<int>(i);
        }
    }
    if (diff < 0) return std::nullopt;
    // Crossing point of the witness segment; exact check that it is interior
    // to the shared facet (it always is: the other wall values are affine on
    // the segment with equal signs at both ends).
    const RatVec& p1 = t1.representative;
    const RatVec& p2 = t2.representative;
    Rat a = wall_value(ws[diff], p1);
    Rat b = wall_value(ws[diff], p2);
    Rat tstar = a / (a - b);
    RatVec mu(cfg.r());
    for (int j = 0; j < cfg.r(); ++j) mu[j] = p1[j] + tstar * (p2[j] - p1[j]);
    for (size_t w = 0; w < ws.size(); ++w) {
        if (static_cast<int>(w) == diff) continue;
        if (sgn(wall_value(ws[w], mu)) != t1.signs[w])
            fail(ErrorCode::Internal, "adjacent: crossing point not interior to the facet");
    }
    return ws[diff];
}

std::vector<Tope> tope_path(const Configuration& cfg, const Tope& from, const Tope& to) {
    auto topes = enumerate_topes(cfg);
    auto index_of = [&](const Tope& t) -> int {
        auto it = std::lower_bound(topes.begin(), topes.end(), t);
        if (it == topes.end() || !(*it == t)) fail(ErrorCode::Unreachable, "tope_path: unknown tope");
        return static_cast<int>(it - topes.begin());
    };
    int s = index_of(from), g = index_of(to);
    if (s == g) return {from};

    std::vector<int> parent(topes.size(), -2);
    std::queue<int> q;
    parent[s] = -1;
    q.push(s);
    while (!q.empty() && parent[g] == -2) {
        int cur = q.front();
        q.pop();
        for (size_t nb = 0; nb < topes.size(); ++nb) {
            if (parent[nb] != -2) continue;
            int diff = 0;
            for (size_t i = 0; i < topes[cur].signs.size() && diff < 2; ++i)
                if (topes[cur].signs[i] != topes[nb].signs[i]) ++diff;
            if (diff != 1) continue;
            parent[nb] = cur;
            q.push(static_cast<int>(nb));
        }
    }
    if (parent[g] == -2) fail(ErrorCode::Unreachable, "tope_path: target unreachable");
    std::vector<Tope> path;
    for (int cur = g; cur != -1; cur = parent[cur]) path.push_back(topes[cur]);
    std::reverse(path.begin(), path.end());
    path.front() = from;
    path.back() = to;
    return path;
}

std::vector<SubsetMask> basic_subsets_of_tope(const Configuration& cfg, const Tope& tau) {
    std::vector<SubsetMask> out;
    const auto& basics = cfg.basic_subsets();
    for (size_t k = 0; k < basics.size(); ++k) {
        RatVec x = cfg.basis_inverse(basics[k]).apply(tau.representative);
        bool pos = true;
        for (const Rat& e : x)
            if (sgn(e) <= 0) {
                pos = false;
                break;
            }
        if (pos) out.push_back(basics[k]);
    }
    return out;
}

std::vector<SubsetMask> generating_subsets_of_tope(const Configuration& cfg, const Tope& tau) {
    if (cfg.n() > 20) fail(ErrorCode::Internal, "generating_subsets_of_tope: N > 20 enumeration not supported");
    auto bt = basic_subsets_of_tope(cfg, tau);
    std::vector<SubsetMask> out;
    for (SubsetMask m = 0;; ++m) {
        for (SubsetMask k : bt)
            if ((k & m) == k) {
                out.push_back(m);
                break;
            }
        if (m == full_mask(cfg.n())) break;
    }
    return out;
}

RatVec vertex(const Configuration& cfg, SubsetMask basic, const RatVec& lambda) {
    if (!cfg.is_basic(basic)) fail(ErrorCode::Internal, "vertex: subset is not basic");
    RatVec coords = cfg.basis_inverse(basic).apply(lambda);
    RatVec s(cfg.n(), Rat(0));
    auto idx = mask_indices(basic);
    for (size_t k = 0; k < idx.size(); ++k) s[idx[k]] = coords[k];
    return s;
}

EdgeGenerators edge_generators(const Configuration& cfg, SubsetMask basic) {
    if (!cfg.is_basic(basic)) fail(ErrorCode::Internal, "edge_generators: subset is not basic");
    EdgeGenerators eg;
    eg.basic_set = basic;
    const RatMat& inv = cfg.basis_inverse(basic);
    auto bidx = mask_indices(basic);
    for (int j = 0; j < cfg.n(); ++j) {
        if (basic & (1u << j)) continue;
        RatVec u = inv.apply(cfg.phi(j));
        RatVec g(cfg.n(), Rat(0));
        g[j] = 1;
        for (size_t k = 0; k < bidx.size(); ++k) g[bidx[k]] -= u[k];
        eg.complement.push_back(j);
        eg.u_by_complement.push_back(std::move(u));
        eg.generators.push_back(std::move(g));
    }
    return eg;
}

Configuration flip(const Configuration& cfg, SubsetMask b) {
    std::vector<RatVec> phi = cfg.phi();
    for (int i : mask_indices(b))
        for (Rat& e : phi[i]) e = -e;
    return Configuration::make(std::move(phi), /*check_salient=*/false);
}

bool is_flip_salient(const Configuration& cfg, SubsetMask b) {
    LinearSystem sys;
    sys.dim = cfg.n();
    for (int i = 0; i < cfg.n(); ++i) {
        RatVec lo(cfg.n(), Rat(0)), hi(cfg.n(), Rat(0));
        lo[i] = 1;
        hi[i] = 1;
        sys.add(std::move(lo), Rel::GE, 0);
        sys.add(std::move(hi), Rel::LE, 1);
    }
    for (int k = 0; k < cfg.r(); ++k) {
        RatVec row(cfg.n());
        for (int i = 0; i < cfg.n(); ++i) {
            row[i] = cfg.phi(i)[k];
            if (b & (1u << i)) row[i] = -row[i];
        }
        sys.add(std::move(row), Rel::EQ, 0);
    }
    RatVec obj(cfg.n(), Rat(1));
    LPOutcome out = maximize(obj, sys);
    if (out.status != LPOutcome::Status::Optimal) fail(ErrorCode::Internal, "is_flip_salient: LP not optimal");
    return sgn(out.value) == 0;
}

bool in_fattened_tope(const Configuration& cfg, const Tope& tau, const RatVec& lambda) {
    LinearSystem sys;
    sys.dim = cfg.n();
    for (int i = 0; i < cfg.n(); ++i) {
        RatVec lo(cfg.n(), Rat(0)), hi(cfg.n(), Rat(0));
        lo[i] = 1;
        hi[i] = 1;
        sys.add(std::move(lo), Rel::GE, 0);
        sys.add(std::move(hi), Rel::LE, 1);
    }
    const auto& ws = cfg.walls();
    for (size_t w = 0; w < ws.size(); ++w) {
        RatVec row(cfg.n());
        for (int i = 0; i < cfg.n(); ++i) row[i] = Rat(tau.signs[w]) * dot(to_rational(ws[w].normal), cfg.phi(i));
        Rat rhs = -Rat(tau.signs[w]) * wall_value(ws[w], lambda);
        sys.add(std::move(row), Rel::GT, rhs);
    }
    return feasible_strict(sys).has_value();
}

bool is_regular_covector(const Configuration& cfg, const RatVec& beta) {
    if (static_cast<int>(beta.size()) != cfg.n()) fail(ErrorCode::DimensionMismatch, "covector length");
    for (SubsetMask basic : cfg.basic_subsets()) {
        EdgeGenerators eg = edge_generators(cfg, basic);
        for (const RatVec& g : eg.generators)
            if (sgn(dot(beta, g)) == 0) return false;
    }
    return true;
}

RegularCovector random_regular_covector(const Configuration& cfg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    long bound = std::max(4, 2 * cfg.n());
    while (true) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            RatVec beta(cfg.n());
            for (int i = 0; i < cfg.n(); ++i) {
                long span = 2 * bound + 1;
                beta[i] = Rat(static_cast<long>(rng() % span) - bound);
            }
            if (is_regular_covector(cfg, beta)) return {beta};
        }
        bound *= 2;
    }
}

SubsetMask crossing_set(const Configuration& cfg, const Tope& t1, const Tope& t2) {
    auto h = adjacent(cfg, t1, t2);
    if (!h) fail(ErrorCode::NotAdjacent, "crossing_set: topes are not adjacent");
    int side = sgn(wall_value(*h, t1.representative));
    SubsetMask a = 0;
    for (int i = 0; i < cfg.n(); ++i)
        if (sgn(dot(to_rational(h->normal), cfg.phi(i))) == side) a |= 1u << i;
    return a;
}

} // namespace mirage
