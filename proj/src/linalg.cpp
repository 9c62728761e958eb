#include "mirage/linalg.hpp"

namespace mirage {

namespace {

// Clears denominators row by row; the kernel and the rank are unchanged and the
// determinant picks up the product of the row scales.
IntMat clear_row_denominators(const RatMat& m, Rat* det_scale = nullptr) {
    IntMat out(m.rows, m.cols);
    Rat scale = 1;
    for (int i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (int j = 0; j < m.cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        scale *= Rat(l);
        for (int j = 0; j < m.cols; ++j) {
            Rat v = m.at(i, j) * Rat(l);
            out.at(i, j) = v.get_num();
        }
    }
    if (det_scale) *det_scale = scale;
    return out;
}

// Bareiss elimination; returns the rank and, for square input, leaves the
// determinant (up to recorded row/col swaps) in det_out.
int bareiss(IntMat w, Int* det_out) {
    int rows = w.rows, cols = w.cols;
    Int prev = 1;
    int sign = 1;
    int rk = 0;
    for (int k = 0; rk < rows && k < cols; ++k) {
        int pr = -1;
        for (int i = rk; i < rows; ++i)
            if (sgn(w.at(i, k)) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != rk) {
            for (int j = 0; j < cols; ++j) std::swap(w.at(pr, j), w.at(rk, j));
            sign = -sign;
        }
        for (int i = rk + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j) {
                Int t = w.at(i, j) * w.at(rk, k) - w.at(i, k) * w.at(rk, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(rk, k);
        ++rk;
    }
    if (det_out) {
        if (rk < rows)
            *det_out = 0;
        else
            *det_out = sign > 0 ? prev : Int(-prev);
    }
    return rk;
}

} // namespace

int rank(const RatMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return bareiss(clear_row_denominators(m), nullptr);
}

Int int_determinant(const IntMat& m) {
    if (m.rows != m.cols) fail(ErrorCode::NonSquare, "determinant of non-square matrix");
    if (m.rows == 0) return 1;
    Int d;
    bareiss(m, &d);
    return d;
}

Rat determinant(const RatMat& m) {
    if (m.rows != m.cols) fail(ErrorCode::NonSquare, "determinant of non-square matrix");
    if (m.rows == 0) return 1;
    Rat scale;
    IntMat w = clear_row_denominators(m, &scale);
    return Rat(int_determinant(w)) / scale;
}

RatVec solve_unique(const RatMat& m, const RatVec& b) {
    if (m.rows != m.cols) fail(ErrorCode::NonSquare, "solve_unique: non-square matrix");
    if (static_cast<int>(b.size()) != m.rows) fail(ErrorCode::DimensionMismatch, "solve_unique: rhs length");
    int n = m.rows;
    RatMat w = m;
    RatVec rhs = b;
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i)
            if (sgn(w.at(i, k)) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) fail(ErrorCode::Singular, "solve_unique: singular matrix");
        if (pr != k) {
            for (int j = k; j < n; ++j) std::swap(w.at(pr, j), w.at(k, j));
            std::swap(rhs[pr], rhs[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            if (sgn(w.at(i, k)) == 0) continue;
            Rat f = w.at(i, k) / w.at(k, k);
            w.at(i, k) = 0;
            for (int j = k + 1; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    RatVec x(n, Rat(0));
    for (int i = n - 1; i >= 0; --i) {
        Rat s = rhs[i];
        for (int j = i + 1; j < n; ++j) s -= w.at(i, j) * x[j];
        x[i] = s / w.at(i, i);
    }
    return x;
}

RatMat inverse(const RatMat& m) {
    if (m.rows != m.cols) fail(ErrorCode::NonSquare, "inverse: non-square matrix");
    int n = m.rows;
    RatMat w = m;
    RatMat inv = RatMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i)
            if (sgn(w.at(i, k)) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) fail(ErrorCode::Singular, "inverse: singular matrix");
        if (pr != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pr, j), w.at(k, j));
                std::swap(inv.at(pr, j), inv.at(k, j));
            }
        Rat piv = w.at(k, k);
        for (int j = 0; j < n; ++j) {
            w.at(k, j) /= piv;
            inv.at(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || sgn(w.at(i, k)) == 0) continue;
            Rat f = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
    int rows = m.rows, cols = m.cols;
    RatMat w = m;
    std::vector<int> pivot_col;
    int rk = 0;
    for (int k = 0; k < cols && rk < rows; ++k) {
        int pr = -1;
        for (int i = rk; i < rows; ++i)
            if (sgn(w.at(i, k)) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != rk)
            for (int j = 0; j < cols; ++j) std::swap(w.at(pr, j), w.at(rk, j));
        Rat piv = w.at(rk, k);
        for (int j = 0; j < cols; ++j) w.at(rk, j) /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == rk || sgn(w.at(i, k)) == 0) continue;
            Rat f = w.at(i, k);
            for (int j = 0; j < cols; ++j) w.at(i, j) -= f * w.at(rk, j);
        }
        pivot_col.push_back(k);
        ++rk;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (int p = 0; p < rk; ++p) v[pivot_col[p]] = -w.at(p, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<IntMat, IntMat> hermite_normal_form(const IntMat& m) {
    int rows = m.rows, cols = m.cols;
    IntMat h = m;
    IntMat u = IntMat::identity(cols);

    auto col_addmul = [&](int dst, int src, const Int& f) {
        if (sgn(f) == 0) return;
        for (int i = 0; i < rows; ++i) h.at(i, dst) += f * h.at(i, src);
        for (int i = 0; i < cols; ++i) u.at(i, dst) += f * u.at(i, src);
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(h.at(i, a), h.at(i, b));
        for (int i = 0; i < cols; ++i) std::swap(u.at(i, a), u.at(i, b));
    };
    auto col_negate = [&](int c) {
        for (int i = 0; i < rows; ++i) h.at(i, c) = -h.at(i, c);
        for (int i = 0; i < cols; ++i) u.at(i, c) = -u.at(i, c);
    };

    int pc = 0; // next pivot column slot
    for (int row = 0; row < rows && pc < cols; ++row) {
        // gcd out the entries of this row across columns pc..cols-1
        while (true) {
            int nz = -1;
            for (int j = pc; j < cols; ++j)
                if (sgn(h.at(row, j)) != 0) {
                    if (nz < 0 || abs(h.at(row, j)) < abs(h.at(row, nz))) nz = j;
                }
            if (nz < 0) break; // row is zero beyond pc, no pivot here
            col_swap(pc, nz);
            bool clean = true;
            for (int j = pc + 1; j < cols; ++j) {
                if (sgn(h.at(row, j)) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(), h.at(row, pc).get_mpz_t());
                col_addmul(j, pc, -q);
                if (sgn(h.at(row, j)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pc < cols && sgn(h.at(row, pc)) != 0) {
            if (sgn(h.at(row, pc)) < 0) col_negate(pc);
            // reduce earlier pivot columns against this pivot
            for (int j = 0; j < pc; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(row, j).get_mpz_t(), h.at(row, pc).get_mpz_t());
                col_addmul(j, pc, -q);
            }
            ++pc;
        }
    }
    return {h, u};
}

std::vector<IntVec> integer_kernel_basis(const IntMat& m) {
    auto [h, u] = hermite_normal_form(m);
    std::vector<IntVec> basis;
    for (int j = 0; j < m.cols; ++j) {
        bool zero = true;
        for (int i = 0; i < m.rows; ++i)
            if (sgn(h.at(i, j)) != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        IntVec v(m.cols);
        for (int i = 0; i < m.cols; ++i) v[i] = u.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<IntVec> particular_integer_solution(const IntMat& m, const IntVec& b) {
    if (static_cast<int>(b.size()) != m.rows) fail(ErrorCode::DimensionMismatch, "particular_integer_solution: rhs length");
    auto [h, u] = hermite_normal_form(m);
    // Solve h*z = b using the echelon structure, free coordinates set to zero.
    IntVec z(m.cols, Int(0));
    IntVec res = b;
    int col = 0;
    for (int row = 0; row < m.rows; ++row) {
        // the pivot of column `col` sits at the first nonzero row of that column
        while (col < m.cols) {
            int pr = -1;
            for (int i = 0; i < m.rows; ++i)
                if (sgn(h.at(i, col)) != 0) {
                    pr = i;
                    break;
                }
            if (pr < 0 || pr > row) break; // zero column or pivot below current row
            if (pr == row) break;
            ++col;
        }
        if (col >= m.cols) break;
        int pr = -1;
        for (int i = 0; i < m.rows; ++i)
            if (sgn(h.at(i, col)) != 0) {
                pr = i;
                break;
            }
        if (pr != row) continue; // no pivot in this row
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), res[row].get_mpz_t(), h.at(row, col).get_mpz_t());
        if (sgn(r) != 0) return std::nullopt;
        z[col] = q;
        for (int i = 0; i < m.rows; ++i) res[i] -= q * h.at(i, col);
        ++col;
    }
    for (const Int& e : res)
        if (sgn(e) != 0) return std::nullopt;
    return u.apply(z);
}

} // namespace mirage
