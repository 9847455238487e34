#pragma once

// Brauer character series of graded linear actions. Eigenvalues are computed
// in a splitting field and (in characteristic p) lifted multiplicatively into
// a cyclotomic field through a fixed generator choice; one LiftContext per
// group keeps every lift consistent, so averages and duality identities hold
// exactly.

#include "ginv/chars.hpp"
#include "ginv/ratfun.hpp"

namespace ginv {

struct LiftContext {
    FieldPtr base;    // field of the matrices
    FieldPtr split;   // splitting field for all eigenvalues in scope
    FieldPtr coeff;   // cyclotomic coefficient field of the series
    FieldEmbedding embed;  // base -> split
    std::shared_ptr<const BrauerEmbedding> brauer;  // finite case only

    /// lift a root of unity of the splitting field into coeff
    Scalar lift_split(const Scalar& a) const;
    /// lift a root of unity given in the base field
    Scalar lift_base(const Scalar& a) const;
};

/// Context large enough for one element resp. every element of a group.
LiftContext lift_context_for_element(const Mat& g);
LiftContext lift_context_for_group(const FiniteMatrixGroup& g);

/// Brauer reduction: the inverse of the lift, cyclotomic -> splitting field
/// (characteristic p; denominators must be prime to p).
Scalar reduce_cyclotomic_mod_p(const Scalar& a, const LiftContext& ctx);

struct BrauerSeriesResult {
    RatFun h;            // canonical form; demoted to Q when coefficients are rational
    FieldPtr lift_field; // coefficient field before demotion
    int degree;          // deg h = -n for the symmetric algebra
};

/// H(t) = prod_i 1/(1 - lifted(lambda_i) t) over the eigenvalues of g.
/// Errors on p-singular g (no canonical lift); use trace_series_truncated then.
BrauerSeriesResult brauer_series_sym(const Mat& g);
RatFun brauer_series_sym_in(const Mat& g, const LiftContext& ctx);

/// k-valued traces of g on the graded pieces of degree 0..D of the polynomial
/// ring (action on the monomial basis); defined for every invertible g.
std::vector<Scalar> trace_series_truncated(const Mat& g, unsigned D);

/// prod_i prod_j 1/(1 - lifted(lambda_ij) t^{d_i}) for a graded polynomial
/// algebra whose degree-d_i generator space carries the action pieces[i].
BrauerSeriesResult graded_poly_series(const std::vector<Mat>& pieces,
                                      const std::vector<unsigned>& degrees);
RatFun graded_poly_series_in(const std::vector<Mat>& pieces, const std::vector<unsigned>& degrees,
                             const LiftContext& ctx);

/// Extract lambda-hat from the duality ratio H_g(t) / H_{g^{-1}}(1/t), which
/// must be the monomial (-1)^d lambda-hat t^a; errors otherwise.
Scalar lambda_via_duality(const RatFun& hg, const RatFun& hg_inv, unsigned d, int a);

struct DualityCheckResult {
    RatFun lhs;            // H_g(t) / H_{g^{-1}}(1/t)
    RatFun rhs;            // (-1)^n t^{-n} det-hat(g)^{-1}
    Scalar lambda_duality;  // from the ratio
    Scalar lambda_det;      // det-hat(g)^{-1}, lifted independently
    bool pass = false;
};

/// Exact verification of the duality identity for the symmetric algebra.
DualityCheckResult duality_check(const Mat& g, const LiftContext& ctx);

/// (1/|G|) sum_g H_g: Hilbert series of the invariant ring (non-modular only).
RatFun molien_average(const FiniteMatrixGroup& g);
/// (1/|G|) sum_g lifted(chi(g))^{-1} H_g: Hilbert series of the chi-isotypic part.
RatFun isotypic_average(const FiniteMatrixGroup& g, const LinearCharacter& chi);

/// Rewrite over Q when every coefficient is rational; otherwise unchanged.
RatFun ratfun_demote(const RatFun& f);
/// Embed a rational-function's coefficients into a larger cyclotomic field.
RatFun ratfun_embed(const RatFun& f, const FieldPtr& target);

}  // namespace ginv
