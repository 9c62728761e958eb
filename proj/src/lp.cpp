#include "mirage/lp.hpp"

namespace mirage {

void LinearSystem::add(RatVec covector, Rel rel, Rat rhs) {
    if (static_cast<int>(covector.size()) != dim)
        fail(ErrorCode::DimensionMismatch, "LinearSystem: covector length != dim");
    constraints.push_back({std::move(covector), rel, std::move(rhs)});
}

bool LinearSystem::has_strict() const {
    for (const auto& c : constraints)
        if (c.rel == Rel::LT || c.rel == Rel::GT) return true;
    return false;
}

namespace {

// Dense simplex tableau over Q. Variables are indexed 0..nvars-1; basis[i] is
// the variable of row i. Row form: sum_j T[i][j] x_j = rhs[i] with the basic
// variable's column being a unit vector.
struct Tableau {
    int nvars = 0;
    std::vector<RatVec> rows;
    RatVec rhs;
    std::vector<int> basis;

    void pivot(int row, int col) {
        Rat piv = rows[row][col];
        for (int j = 0; j < nvars; ++j) rows[row][j] /= piv;
        rhs[row] /= piv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            Rat f = rows[i][col];
            if (sgn(f) == 0) continue;
            for (int j = 0; j < nvars; ++j)
                if (sgn(rows[row][j]) != 0) rows[i][j] -= f * rows[row][j];
            rows[i][col] = 0;
            rhs[i] -= f * rhs[row];
        }
        basis[row] = col;
    }

    // Bland: entering = lowest-index variable with positive reduced cost,
    // leaving = min ratio with lowest basic variable index on ties.
    // Returns false when unbounded.
    bool run(const RatVec& cost, Rat& objective, const std::vector<bool>& allowed) {
        int m = static_cast<int>(rows.size());
        RatVec red = cost;
        objective = 0;
        for (int i = 0; i < m; ++i) {
            Rat cb = cost[basis[i]];
            if (sgn(cb) == 0) continue;
            objective += cb * rhs[i];
            for (int j = 0; j < nvars; ++j)
                if (sgn(rows[i][j]) != 0) red[j] -= cb * rows[i][j];
        }
        while (true) {
            int enter = -1;
            for (int j = 0; j < nvars; ++j)
                if (allowed[j] && sgn(red[j]) > 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (sgn(rows[i][enter]) <= 0) continue;
                Rat ratio = rhs[i] / rows[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false; // unbounded
            pivot(leave, enter);
            // update reduced costs and objective from the pivot row
            Rat f = red[enter];
            if (sgn(f) != 0) {
                for (int j = 0; j < nvars; ++j)
                    if (sgn(rows[leave][j]) != 0) red[j] -= f * rows[leave][j];
                red[enter] = 0;
                objective += f * rhs[leave];
            }
        }
    }
};

// Standard-form encoding of a weak-relation system plus optional auxiliary
// objective variable t (one extra nonnegative variable appended when
// with_slack_t is set; constraints may reference it through strict_sign).
struct StandardLP {
    int dim;
    bool with_t;
    int nconstraints;
    int n_split;  // 2*dim columns for the free variables
    int t_col;    // column of t, or -1
    int slack0;   // first slack column
    int nslq;     // number of slack columns
    int art0;     // first artificial column
    Tableau tab;
    std::vector<bool> allowed;

    StandardLP(const LinearSystem& sys, bool with_slack_t) {
        dim = sys.dim;
        with_t = with_slack_t;
        nconstraints = static_cast<int>(sys.constraints.size()) + (with_t ? 1 : 0);
        n_split = 2 * dim;
        t_col = with_t ? n_split : -1;
        slack0 = n_split + (with_t ? 1 : 0);

        // one slack per inequality row (strict rows became weak with t folded in)
        nslq = 0;
        for (const auto& c : sys.constraints)
            if (c.rel != Rel::EQ) ++nslq;
        if (with_t) ++nslq; // the t <= 1 row

        art0 = slack0 + nslq;
        int nvars = art0 + nconstraints;
        tab.nvars = nvars;
        tab.rows.assign(nconstraints, RatVec(nvars, Rat(0)));
        tab.rhs.assign(nconstraints, Rat(0));
        tab.basis.assign(nconstraints, -1);

        int slack = slack0;
        int row = 0;
        auto emit = [&](const RatVec& a, const Rat& tcoef, Rel rel, const Rat& b) {
            for (int j = 0; j < dim; ++j) {
                tab.rows[row][2 * j] = a[j];
                tab.rows[row][2 * j + 1] = -a[j];
            }
            if (with_t) tab.rows[row][t_col] = tcoef;
            tab.rhs[row] = b;
            if (rel == Rel::LE)
                tab.rows[row][slack++] = 1;
            else if (rel == Rel::GE)
                tab.rows[row][slack++] = -1;
            // normalize rhs >= 0
            if (sgn(tab.rhs[row]) < 0) {
                for (auto& v : tab.rows[row]) v = -v;
                tab.rhs[row] = -tab.rhs[row];
            }
            ++row;
        };

        for (const auto& c : sys.constraints) {
            switch (c.rel) {
                case Rel::LE: emit(c.covector, Rat(0), Rel::LE, c.rhs); break;
                case Rel::GE: emit(c.covector, Rat(0), Rel::GE, c.rhs); break;
                case Rel::EQ: emit(c.covector, Rat(0), Rel::EQ, c.rhs); break;
                case Rel::LT: emit(c.covector, Rat(1), Rel::LE, c.rhs); break; // a.x + t <= c
                case Rel::GT: emit(c.covector, Rat(-1), Rel::GE, c.rhs); break; // a.x - t >= c
            }
        }
        if (with_t) {
            RatVec zero(dim, Rat(0));
            emit(zero, Rat(1), Rel::LE, Rat(1)); // t <= 1
        }

        for (int i = 0; i < nconstraints; ++i) {
            tab.rows[i][art0 + i] = 1;
            tab.basis[i] = art0 + i;
        }
        allowed.assign(nvars, true);
    }

    bool phase1() {
        RatVec cost(tab.nvars, Rat(0));
        for (int i = 0; i < nconstraints; ++i) cost[art0 + i] = -1;
        Rat obj;
        bool bounded = tab.run(cost, obj, allowed);
        (void)bounded; // phase-1 objective is bounded above by 0
        if (sgn(obj) != 0) return false;
        // pivot leftover artificials out of the basis where possible
        for (int i = 0; i < nconstraints; ++i) {
            if (tab.basis[i] < art0) continue;
            int col = -1;
            for (int j = 0; j < art0; ++j)
                if (sgn(tab.rows[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) tab.pivot(i, col);
        }
        for (int j = art0; j < tab.nvars; ++j) allowed[j] = false;
        return true;
    }

    RatVec extract(int nvals) const {
        RatVec vals(nvals, Rat(0));
        for (int i = 0; i < nconstraints; ++i)
            if (tab.basis[i] < nvals + 0) vals[tab.basis[i]] = tab.rhs[i];
        return vals;
    }

    RatVec witness() const {
        RatVec raw = extract(n_split);
        RatVec x(dim);
        for (int j = 0; j < dim; ++j) x[j] = raw[2 * j] - raw[2 * j + 1];
        return x;
    }

    Rat t_value() const {
        if (!with_t) return 0;
        for (int i = 0; i < nconstraints; ++i)
            if (tab.basis[i] == t_col) return tab.rhs[i];
        return 0;
    }
};

} // namespace

LPOutcome maximize(const RatVec& objective, const LinearSystem& sys) {
    if (static_cast<int>(objective.size()) != sys.dim)
        fail(ErrorCode::DimensionMismatch, "maximize: objective length != dim");
    if (sys.has_strict()) fail(ErrorCode::Internal, "maximize: strict relation in system");

    StandardLP lp(sys, false);
    if (!lp.phase1()) return {LPOutcome::Status::Infeasible, 0, {}};

    RatVec cost(lp.tab.nvars, Rat(0));
    for (int j = 0; j < sys.dim; ++j) {
        cost[2 * j] = objective[j];
        cost[2 * j + 1] = -objective[j];
    }
    Rat obj;
    if (!lp.tab.run(cost, obj, lp.allowed)) return {LPOutcome::Status::Unbounded, 0, {}};
    return {LPOutcome::Status::Optimal, obj, lp.witness()};
}

std::optional<RatVec> feasible_strict(const LinearSystem& sys) {
    StandardLP lp(sys, true);
    if (!lp.phase1()) return std::nullopt;
    RatVec cost(lp.tab.nvars, Rat(0));
    cost[lp.t_col] = 1;
    Rat obj;
    if (!lp.tab.run(cost, obj, lp.allowed))
        fail(ErrorCode::Internal, "feasible_strict: t <= 1 bound violated");
    if (sgn(obj) <= 0) return std::nullopt;
    return lp.witness();
}

} // namespace mirage
