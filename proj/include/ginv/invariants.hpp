#pragma once

// Degree-bounded brute-force invariant theory: bases of invariants and
// semi-invariants by linear algebra on the monomial basis, averaging
// projections, the gcd d_chi of a semi-invariant module and its character.

#include "ginv/chars.hpp"
#include "ginv/multipoly.hpp"

namespace ginv {

struct GradedBasis {
    unsigned degree = 0;
    std::vector<MultiPoly> basis;  // homogeneous, linearly independent
};

/// The action on the polynomial ring: variables transform by the columns of g,
/// g.x_j = sum_i g[i][j] x_i, extended multiplicatively.
MultiPoly group_action(const Mat& g, const MultiPoly& f);

/// all monomials of total degree d in n variables, grlex order
std::vector<Expo> monomials_of_degree(unsigned n, unsigned d);

GradedBasis invariants_of_degree(const FiniteMatrixGroup& g, unsigned d);
GradedBasis semi_invariants_of_degree(const FiniteMatrixGroup& g, const LinearCharacter& chi,
                                      unsigned d);

/// G-average of f; idempotent projection onto the invariants (p must not divide |G|).
MultiPoly reynolds(const MultiPoly& f, const FiniteMatrixGroup& g);
/// (1/|G|) sum chi(g) g^{-1}(f): projection onto the chi-semi-invariants.
MultiPoly twisted_projection(const MultiPoly& f, const FiniteMatrixGroup& g,
                             const LinearCharacter& chi);

struct SemiInvariantSummary {
    LinearCharacter chi;
    unsigned degree_bound = 0;
    bool conclusive = false;          // false when A_chi = 0 up to the bound
    std::vector<MultiPoly> spanning;  // all basis polynomials of degree <= bound
    MultiPoly dchi;                   // gcd of the spanning set
    LinearCharacter mu;               // character of dchi
    LinearCharacter cls;              // chi^{-1} mu, the class of A_chi
    bool free_module = false;         // cls trivial
};

/// d_chi = gcd of the semi-invariants of degree <= D, with its character and
/// the induced ideal class of A_chi; flagged inconclusive when nothing is
/// found below the bound.
SemiInvariantSummary dchi_estimate(const FiniteMatrixGroup& g, const LinearCharacter& chi,
                                   unsigned D);

struct TransversalReport {
    std::vector<SemiInvariantSummary> per_character;  // aligned with class_group characters
    std::vector<unsigned> class_index;  // index of cls within the class-group kernel
    bool conclusive = false;
    bool injective = false;  // chi -> cls injective on the kernel
};

/// For every character in ker(res_W): computes the class of A_chi and checks
/// the map chi -> class is injective.
TransversalReport transversal_check(const FiniteMatrixGroup& g, const FiniteMatrixGroup& w,
                                    unsigned D);

}  // namespace ginv
