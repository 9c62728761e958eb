#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mirage/error.hpp"

namespace mirage {

// Exact scalars. mpq_class keeps denominators positive and fractions reduced,
// which is exactly the Rational invariant; mpz_class is the integer type.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

Rat parse_rational(const std::string& text);
std::string format_rational(const Rat& x);

RatVec rat_vec(std::initializer_list<long> entries);
IntVec int_vec(std::initializer_list<long> entries);
RatVec to_rational(const IntVec& v);
bool is_integral(const RatVec& v);
IntVec to_integer(const RatVec& v); // requires is_integral

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& v);
bool is_zero(const RatVec& v);

// Smallest positive multiple with integer entries, divided by the gcd of those
// entries; the zero vector is rejected.
IntVec primitive_integer_vector(const RatVec& v);

struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a; // row-major

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static RatMat identity(int n);
    static RatMat from_rows(const std::vector<RatVec>& rows);
    static RatMat from_cols(const std::vector<RatVec>& cols);

    RatVec apply(const RatVec& x) const; // this * x
    bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    RatMat to_rational() const;
    IntVec apply(const IntVec& x) const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

} // namespace mirage
