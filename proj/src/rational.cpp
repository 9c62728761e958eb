#include "mirage/rational.hpp"

namespace mirage {

Rat parse_rational(const std::string& text) {
    if (text.empty()) fail(ErrorCode::ParseError, "empty rational literal");
    size_t slash = text.find('/');
    std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_int_literal = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int_literal(num) || !is_int_literal(den))
        fail(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    Int n(num), d(den);
    if (sgn(d) <= 0) fail(ErrorCode::ParseError, "nonpositive denominator in '" + text + "'");
    Rat q;
    q = Rat(n) / Rat(d);
    return q;
}

std::string format_rational(const Rat& x) { return x.get_str(); }

RatVec rat_vec(std::initializer_list<long> entries) {
    RatVec v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

IntVec int_vec(std::initializer_list<long> entries) {
    IntVec v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

RatVec to_rational(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Int& e : v) out.emplace_back(e);
    return out;
}

bool is_integral(const RatVec& v) {
    for (const Rat& e : v)
        if (!is_integer(e)) return false;
    return true;
}

IntVec to_integer(const RatVec& v) {
    IntVec out;
    out.reserve(v.size());
    for (const Rat& e : v) {
        if (!is_integer(e)) fail(ErrorCode::NotIntegral, "vector entry " + format_rational(e) + " is not an integer");
        out.push_back(e.get_num());
    }
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "add: length mismatch");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "sub: length mismatch");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec scale(const Rat& c, const RatVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

bool is_zero(const RatVec& v) {
    for (const Rat& e : v)
        if (sgn(e) != 0) return false;
    return true;
}

IntVec primitive_integer_vector(const RatVec& v) {
    if (is_zero(v)) fail(ErrorCode::ZeroVector, "primitive_integer_vector: zero vector");
    Int den_lcm = 1;
    for (const Rat& e : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den().get_mpz_t());
    IntVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = v[i].get_num() * (den_lcm / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    }
    for (Int& e : w) e /= g;
    return w;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
    RatMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols)
            fail(ErrorCode::DimensionMismatch, "from_rows: ragged rows");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMat RatMat::from_cols(const std::vector<RatVec>& cols) {
    RatMat m(cols.empty() ? 0 : static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        if (static_cast<int>(cols[j].size()) != m.rows)
            fail(ErrorCode::DimensionMismatch, "from_cols: ragged columns");
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatVec RatMat::apply(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols) fail(ErrorCode::DimensionMismatch, "apply: length mismatch");
    RatVec out(rows, Rat(0));
    for (int i = 0; i < rows; ++i) {
        Rat s = 0;
        for (int j = 0; j < cols; ++j)
            if (sgn(x[j]) != 0) s += at(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat IntMat::to_rational() const {
    RatMat m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = Rat(a[i]);
    return m;
}

IntVec IntMat::apply(const IntVec& x) const {
    if (static_cast<int>(x.size()) != cols) fail(ErrorCode::DimensionMismatch, "apply: length mismatch");
    IntVec out(rows, Int(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out[i] += at(i, j) * x[j];
    return out;
}

} // namespace mirage
