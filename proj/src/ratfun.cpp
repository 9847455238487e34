#include "ginv/ratfun.hpp"

#include <sstream>

namespace ginv {

RatFun::RatFun(const FieldPtr& f) : num_(f), den_(UPoly::constant(Scalar::one(f))) {
    if (f->is_finite()) throw Error("rational functions require characteristic-0 coefficients");
}

RatFun::RatFun(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.field()->is_finite()) throw Error("rational functions require characteristic-0 coefficients");
    if (!num_.field()->same(*den_.field())) throw Error("rational function field mismatch");
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    canonicalize();
}

void RatFun::canonicalize() {
    if (num_.is_zero()) {
        den_ = UPoly::constant(Scalar::one(num_.field()));
        return;
    }
    UPoly g = upoly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    Scalar lc = den_.leading();
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::one(const FieldPtr& f) { return from_poly(UPoly::constant(Scalar::one(f))); }
RatFun RatFun::constant(const Scalar& c) { return from_poly(UPoly::constant(c)); }

RatFun RatFun::from_poly(UPoly p) {
    FieldPtr f = p.field();
    return RatFun(std::move(p), UPoly::constant(Scalar::one(f)));
}

bool RatFun::is_one() const { return num_.degree() == 0 && den_.degree() == 0 && num_.coeff(0).is_one(); }

int RatFun::degree() const {
    if (is_zero()) throw Error("degree of the zero rational function");
    return num_.degree() - den_.degree();
}

bool RatFun::is_monomial() const {
    if (is_zero()) return false;
    auto one_term = [](const UPoly& p) {
        unsigned cnt = 0;
        for (auto& c : p.coeffs())
            if (!c.is_zero()) ++cnt;
        return cnt == 1;
    };
    return one_term(num_) && one_term(den_);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw Error("inverse of the zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw Error("division by the zero rational function");
    return *this * o.inverse();
}

bool RatFun::operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

RatFun RatFun::substitute_inverse() const {
    if (is_zero()) return *this;
    // f(1/t) = (rev(num) / t^dn) / (rev(den) / t^dd); clear by t^max
    unsigned dn = static_cast<unsigned>(num_.degree());
    unsigned dd = static_cast<unsigned>(den_.degree());
    unsigned d = std::max(dn, dd);
    UPoly n = num_.reversed().shifted(d - dn);
    UPoly m = den_.reversed().shifted(d - dd);
    return RatFun(n, m);
}

Scalar RatFun::evaluate(const Scalar& at) const {
    Scalar dv = den_.eval(at);
    if (dv.is_zero()) {
        unsigned ord = root_multiplicity(den_, at);
        throw PoleError("pole of order " + std::to_string(ord) + " at evaluation point", ord);
    }
    return num_.eval(at) / dv;
}

std::vector<Scalar> RatFun::series_coefficients(unsigned D) const {
    const FieldPtr& f = num_.field();
    Scalar d0 = den_.coeff(0);
    if (d0.is_zero()) throw Error("series expansion: denominator vanishes at t = 0");
    Scalar d0inv = d0.inverse();
    std::vector<Scalar> c(D + 1, Scalar::zero(f));
    for (unsigned k = 0; k <= D; ++k) {
        Scalar s = num_.coeff(k);
        for (unsigned j = 1; j <= k; ++j) {
            const Scalar& dj = den_.coeff(j);
            if (!dj.is_zero()) s = s - dj * c[k - j];
        }
        c[k] = s * d0inv;
    }
    return c;
}

RatFun RatFun::mapped(const FieldEmbedding& e) const { return RatFun(num_.mapped(e), den_.mapped(e)); }

std::string RatFun::str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ") / (" << den_.str() << ")";
    return os.str();
}

}  // namespace ginv
