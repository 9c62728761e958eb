#pragma once

#include "mirage/enumeration.hpp"
#include "mirage/wpoly.hpp"

namespace mirage {

struct WeightPolynomial {
    struct Monomial {
        Rat coeff;
        std::vector<unsigned> exponents; // length n
    };
    int n = 0;
    std::vector<Monomial> monomials;

    static WeightPolynomial one(int n);
    static WeightPolynomial coordinate(int n, int zero_based_index);
    static WeightPolynomial product(const WeightPolynomial& a, const WeightPolynomial& b);
    Rat evaluate(const IntVec& x) const;
    int degree() const;
};

struct SignedPoint {
    IntVec x;
    Int value;
};

struct DualCovector {
    RatVec xi;
};

// The lattice support of X(Phi,tau)[V(Phi,lambda)]: every point of every
// nonzero-coefficient flip polytope with its multiplicity z_B. Each point
// belongs to exactly one quadrant.
std::vector<SignedPoint> signed_support(const Configuration& cfg, const Tope& tau, const IntVec& lambda);

// S(Phi,tau,h)(lambda) = sum over the signed support of value * h(x).
Rat discrete_sum(const Configuration& cfg, const Tope& tau, const WeightPolynomial& h, const IntVec& lambda);

// I(Phi,tau,h)(lambda) for h = <xi,.>^M / M!, with the Lebesgue measure on V
// normalized so V cap Z^N has covolume one. M_degree = 0 gives the volume.
Rat volume_integral(const Configuration& cfg, const Tope& tau, int m_degree, const DualCovector& xi,
                    const RatVec& lambda);

DualCovector random_regular_xi(const Configuration& cfg, std::uint64_t seed);
bool is_regular_xi(const Configuration& cfg, const Tope& tau, const RatVec& xi);

struct QuasiPolyFit {
    Int period;    // D
    IntVec base;   // lambda0
    int nvars = 0; // r
    // Polynomial in the scaled shift g = (lambda - lambda0)/D, exponent
    // vectors of length nvars mapping to rational coefficients.
    std::map<std::vector<unsigned>, Rat> coefficients;
    bool holdout_verified = false;

    Rat evaluate(const IntVec& lambda) const;
};

// Interpolates S(Phi,tau,h) on the coset lambda0 + D Z^r, D = lcm of the
// basic-subset determinants, and verifies r+1 held-out grid points exactly.
QuasiPolyFit quasipoly_fit(const Configuration& cfg, const Tope& tau, const WeightPolynomial& h,
                           const IntVec& lambda0);

// Both sides of the wall-crossing sum formula at lambda strictly inside tau2:
// lhs = S(Phi,tau1,h)(lambda) through the quadrant machinery,
// rhs = sum_{p(Phi,lambda)} h - (-1)^{|A|} sum_{p_flip(Phi,A,lambda)} h by
// direct enumeration.
std::pair<Rat, Rat> wallcross_count_check(const Configuration& cfg, const Tope& tau1, const Tope& tau2,
                                          const WeightPolynomial& h, const IntVec& lambda);

// Multiplicity of the character m in the alternating cohomology sum: the
// coefficient z(Phi,tau,B_m), B_m = {i : m_i < 0}.
Int toric_multiplicity(const Configuration& cfg, const Tope& tau, const IntVec& m);

// dim H(tau,lambda) = S(Phi,tau,1)(lambda).
Int virtual_dimension(const Configuration& cfg, const Tope& tau, const IntVec& lambda);

} // namespace mirage
