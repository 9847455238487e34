#pragma once

// Dense univariate polynomials with Scalar coefficients (any field kind).

#include "ginv/field.hpp"

#include <optional>
#include <utility>

namespace ginv {

class UPoly {
public:
    explicit UPoly(FieldPtr f) : field_(std::move(f)) {}
    UPoly(FieldPtr f, std::vector<Scalar> coeffs);

    static UPoly zero(const FieldPtr& f) { return UPoly(f); }
    static UPoly constant(const Scalar& c);
    static UPoly monomial(const FieldPtr& f, unsigned deg, const Scalar& c);
    /// the variable t
    static UPoly var(const FieldPtr& f);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Scalar& coeff(unsigned i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar leading() const;

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Scalar& s) const;
    bool operator==(const UPoly& o) const;
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    /// quotient and remainder; divisor must be nonzero
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    /// exact quotient or nullopt if the division leaves a remainder
    std::optional<UPoly> divide_exact(const UPoly& d) const;
    UPoly derivative() const;
    Scalar eval(const Scalar& at) const;
    UPoly monic() const;
    /// coefficients reversed: t^deg * f(1/t)
    UPoly reversed() const;
    UPoly shifted(unsigned k) const;  // * t^k
    /// map coefficients through a field embedding
    UPoly mapped(const FieldEmbedding& e) const;

    std::string str(const std::string& varname = "t") const;

private:
    FieldPtr field_;
    std::vector<Scalar> c_;  // low-to-high, no trailing zeros
    void trim();
};

UPoly upoly_gcd(const UPoly& a, const UPoly& b);  // monic gcd
UPoly upoly_pow_mod(const UPoly& base, const BigInt& e, const UPoly& mod);

/// multiplicity of `root` as a zero of f
unsigned root_multiplicity(const UPoly& f, const Scalar& root);

/// degrees of irreducible factors over a finite field (with multiplicity collapsed:
/// returns the set of degrees occurring), via distinct-degree factorization of the
/// squarefree part.
std::vector<unsigned> irreducible_factor_degrees(const UPoly& f);

}  // namespace ginv
