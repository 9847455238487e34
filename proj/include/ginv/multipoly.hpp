#pragma once

// Sparse multivariate polynomials over the ground field. Monomial order is
// graded-lexicographic throughout.

#include "ginv/field.hpp"
#include "ginv/linalg.hpp"

#include <map>
#include <optional>

namespace ginv {

using Expo = std::vector<unsigned>;

/// graded-lex: compare total degree first, then exponent vectors lexicographically
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const;
};

class MultiPoly {
public:
    MultiPoly(FieldPtr f, unsigned nvars);

    static MultiPoly zero(const FieldPtr& f, unsigned nvars) { return MultiPoly(f, nvars); }
    static MultiPoly one(const FieldPtr& f, unsigned nvars);
    static MultiPoly variable(const FieldPtr& f, unsigned nvars, unsigned i);
    static MultiPoly monomial(const FieldPtr& f, unsigned nvars, Expo e, const Scalar& c);

    const FieldPtr& field() const { return field_; }
    unsigned nvars() const { return nvars_; }
    const std::map<Expo, Scalar, GrlexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// total degree; -1 for the zero polynomial
    int total_degree() const;
    /// common total degree of all terms, or nullopt if inhomogeneous (zero -> 0)
    std::optional<unsigned> homogeneous_degree() const;
    /// grlex-greatest term
    std::pair<Expo, Scalar> leading_term() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Scalar& s) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// exact quotient, or nullopt if d does not divide this exactly
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
    /// monic with respect to the grlex leading coefficient
    MultiPoly monic() const;

    /// linear change of variables x_j -> sum_i m[i][j] x_i (the group action on V*)
    MultiPoly linear_substitute(const Mat& m) const;

    std::string str() const;  // "3*x1^2*x2 - x3" style, variables x1..xn

private:
    FieldPtr field_;
    unsigned nvars_;
    std::map<Expo, Scalar, GrlexLess> terms_;
    void add_term(const Expo& e, const Scalar& c);
    friend MultiPoly multipoly_gcd(const MultiPoly&, const MultiPoly&);
};

/// gcd, normalized monic w.r.t. the grlex leading term
MultiPoly multipoly_gcd(const MultiPoly& f, const MultiPoly& g);
MultiPoly multipoly_gcd(const std::vector<MultiPoly>& fs);

}  // namespace ginv
