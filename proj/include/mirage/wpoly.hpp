#pragma once

#include <map>

#include "mirage/configuration.hpp"

namespace mirage {

// Integer combination of the semi-open-quadrant monomials
// w_B = prod_{i not in B} p_i * prod_{i in B} q_i.
struct WPolynomial {
    int n = 0;
    std::map<SubsetMask, Int> coefficients; // nonzero entries only

    Int coefficient(SubsetMask b) const;
    void add_term(SubsetMask b, const Int& z);
    bool is_zero() const { return coefficients.empty(); }

    WPolynomial& operator+=(const WPolynomial& o);
    WPolynomial& operator-=(const WPolynomial& o);
    WPolynomial operator+(const WPolynomial& o) const;
    WPolynomial operator-(const WPolynomial& o) const;
    WPolynomial operator-() const;
    bool operator==(const WPolynomial& o) const { return n == o.n && coefficients == o.coefficients; }
};

// Golden text form: monomials sorted by mask value, "+p1p2 -2q1p2" style.
std::string wpoly_to_text(const WPolynomial& w);
WPolynomial wpoly_from_text(const std::string& text, int n);

struct PolarizationSplit {
    SubsetMask basic_set = 0;
    SubsetMask positive = 0; // K^{c,+}_beta
    SubsetMask negative = 0; // K^{c,-}_beta
};

struct SignedSubsetList {
    std::vector<std::pair<int, SubsetMask>> entries; // (sign, subset), duplicates allowed
};

// X(Phi,tau): z_B = sum over generating I in G(Phi,tau) with I >= B of (-1)^{|I|-r}.
WPolynomial bg_polynomial(const Configuration& cfg, const Tope& tau);

PolarizationSplit polarization_split(const Configuration& cfg, SubsetMask basic, const RatVec& beta);

// Y(Phi,tau,beta): vertex sum with beta-polarized edges; equals X.
WPolynomial lv_polynomial(const Configuration& cfg, const Tope& tau, const RegularCovector& beta);

// Ring homomorphism exchanging p_i and q_i on A: mask B moves to B xor A.
WPolynomial flip_map(const WPolynomial& w, SubsetMask a);

// Geom substitution p_i = [x_i >= 0], q_i = [x_i < 0].
Int geom_eval(const WPolynomial& w, const RatVec& x);
Int geom_eval(const WPolynomial& w, const IntVec& x);

// Geom_A: p_i = [x_i > 0] on A, [x_i >= 0] off A.
Int geom_eval_semiclosed(const WPolynomial& w, SubsetMask a, const RatVec& x);

// Wall-crossing prediction: A = crossing_set(tau1,tau2) and
// predicted = -(-1)^{|A|} Flip_A X(Phi_flip^A, tau2); the contract is
// bg(tau1) = bg(tau2) + predicted.
std::pair<SubsetMask, WPolynomial> wallcross_delta(const Configuration& cfg, const Tope& tau1,
                                                   const Tope& tau2);

// The signed list A(nu,tau) of iterated crossings along an adjacency path,
// entries [(-1)^{|K|}, A_K] over subsequences K of the crossing steps.
SignedSubsetList path_flip_list(const Configuration& cfg, const Tope& tau, const Tope& nu,
                                const std::vector<Tope>& path);

// Continuation identity along the path:
// X(Phi,tau) = sum over [eps,A] of eps * (-1)^{|A|} * Flip_A X(Phi_flip^A, nu).
WPolynomial path_flip_expansion(const Configuration& cfg, const Tope& nu, const SignedSubsetList& list);

// z(Phi,tau,B) computed both from bg_polynomial and from the path formula
// z = (-1)^{|B|} sum of eps over entries [eps,B] of A(nu,tau); both routes
// must agree (internal assertion).
Int quadrant_coefficient(const Configuration& cfg, const Tope& tau, SubsetMask b);

} // namespace mirage
