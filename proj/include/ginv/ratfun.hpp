#pragma once

// Univariate rational functions in t over Q or a cyclotomic field, kept in
// canonical form: gcd(num, den) = 1 and den monic.

#include "ginv/upoly.hpp"

namespace ginv {

struct PoleError : Error {
    PoleError(const std::string& msg, unsigned ord) : Error(msg), order(ord) {}
    unsigned order;
};

class RatFun {
public:
    explicit RatFun(const FieldPtr& f);  // zero
    RatFun(UPoly num, UPoly den);

    static RatFun zero(const FieldPtr& f) { return RatFun(f); }
    static RatFun one(const FieldPtr& f);
    static RatFun constant(const Scalar& c);
    static RatFun from_poly(UPoly p);

    const FieldPtr& field() const { return num_.field(); }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// deg(num) - deg(den); the degree of the series a(A)
    int degree() const;
    /// nonzero and num, den both monomials (c*t^i / t^j)
    bool is_monomial() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inverse() const;
    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// F(1/t), negative powers cleared by t^k
    RatFun substitute_inverse() const;
    /// exact value; throws PoleError (with order) when den vanishes at the point
    Scalar evaluate(const Scalar& at) const;
    /// Taylor coefficients c_0..c_D at t = 0; requires den(0) != 0
    std::vector<Scalar> series_coefficients(unsigned D) const;

    RatFun mapped(const FieldEmbedding& e) const;
    std::string str() const;

private:
    UPoly num_, den_;
    void canonicalize();
};

}  // namespace ginv
