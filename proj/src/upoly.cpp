#include "ginv/upoly.hpp"

#include <sstream>

namespace ginv {

UPoly::UPoly(FieldPtr f, std::vector<Scalar> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    for (auto& x : c_)
        if (!x.field()->same(*field_)) throw Error("UPoly coefficient field mismatch");
    trim();
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Scalar& c) {
    UPoly p(c.field());
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

UPoly UPoly::monomial(const FieldPtr& f, unsigned deg, const Scalar& c) {
    UPoly p(f);
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, Scalar::zero(f));
        p.c_[deg] = c;
    }
    return p;
}

UPoly UPoly::var(const FieldPtr& f) { return monomial(f, 1, Scalar::one(f)); }

const Scalar& UPoly::coeff(unsigned i) const {
    static const Scalar dummy;
    if (i < c_.size()) return c_[i];
    // return a zero of the right field without allocating per call
    thread_local Scalar z;
    z = Scalar::zero(field_);
    return z;
}

Scalar UPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r = *this;
    if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), Scalar::zero(field_));
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r(field_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator*(const Scalar& s) const {
    UPoly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
}

bool UPoly::operator==(const UPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    UPoly q(field_), r = *this;
    Scalar lcinv = d.leading().inverse();
    int dd = d.degree();
    if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, Scalar::zero(field_));
    while (r.degree() >= dd) {
        unsigned shift = static_cast<unsigned>(r.degree() - dd);
        Scalar c = r.leading() * lcinv;
        q.c_[shift] = c;
        for (int i = 0; i <= dd; ++i)
            r.c_[shift + i] = r.c_[shift + i] - c * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

std::optional<UPoly> UPoly::divide_exact(const UPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UPoly UPoly::derivative() const {
    UPoly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * Scalar::from_int(field_, static_cast<long>(i)));
    r.trim();
    return r;
}

Scalar UPoly::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(field_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) throw Error("monic of zero polynomial");
    return *this * leading().inverse();
}

UPoly UPoly::reversed() const {
    UPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

UPoly UPoly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    UPoly r(field_);
    r.c_.assign(c_.size() + k, Scalar::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

UPoly UPoly::mapped(const FieldEmbedding& e) const {
    UPoly r(e.to());
    r.c_.reserve(c_.size());
    for (auto& x : c_) r.c_.push_back(e(x));
    r.trim();
    return r;
}

std::string UPoly::str(const std::string& varname) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        std::string cs = c_[i].str();
        bool needs_paren = cs.find_first_of("+-") != std::string::npos && cs.find_first_of("+-") != 0;
        if (i == 0) {
            os << cs;
        } else {
            if (!c_[i].is_one()) {
                if (needs_paren) os << "(" << cs << ")";
                else os << cs;
                os << "*";
            }
            os << varname;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.is_zero()) throw Error("gcd of zero polynomials");
    return x.monic();
}

UPoly upoly_pow_mod(const UPoly& base, const BigInt& e, const UPoly& mod) {
    UPoly r = UPoly::constant(Scalar::one(base.field()));
    UPoly b = base.divmod(mod).second;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = (r * b).divmod(mod).second;
        b = (b * b).divmod(mod).second;
        k >>= 1;
    }
    return r;
}

unsigned root_multiplicity(const UPoly& f, const Scalar& root) {
    UPoly lin(f.field(), {-root, Scalar::one(f.field())});
    unsigned m = 0;
    UPoly g = f;
    while (!g.is_zero()) {
        auto q = g.divide_exact(lin);
        if (!q) break;
        ++m;
        g = *q;
    }
    return m;
}

std::vector<unsigned> irreducible_factor_degrees(const UPoly& f) {
    const FieldPtr& k = f.field();
    if (!k->is_finite()) throw Error("factor degrees: finite fields only");
    if (f.degree() < 1) throw Error("factor degrees of a constant");
    unsigned long q = k->field_order();
    // squarefree part: f / gcd(f, f'); in characteristic p the gcd may eat
    // p-th power factors entirely, so iterate until the remaining part is constant.
    std::vector<unsigned> degrees;
    UPoly work = f.monic();
    // strip repeated factors by repeated gcd with derivative; any factor of the
    // original appears in some iterate's squarefree part
    std::vector<UPoly> parts;
    while (work.degree() >= 1) {
        UPoly d = work.derivative();
        if (d.is_zero()) {
            // f is a polynomial in x^p: its factors are the same as those of the
            // p-th root (degrees unchanged). Take the p-th root.
            unsigned p = k->characteristic();
            std::vector<Scalar> cc;
            for (int i = 0; i <= work.degree(); i += static_cast<int>(p)) {
                // in F_{p^m}, c^{p^{m-1}} is the p-th root of c... c -> c^{q/p}
                Scalar ci = work.coeff(static_cast<unsigned>(i));
                cc.push_back(ci.is_zero() ? ci : ci.pow(static_cast<long>(q / p)));
            }
            work = UPoly(k, cc);
            continue;
        }
        UPoly g = upoly_gcd(work, d);
        UPoly sq = *work.divide_exact(g);  // squarefree
        parts.push_back(sq);
        work = g;
    }
    // distinct-degree factorization of each squarefree part
    for (auto& sq : parts) {
        UPoly h = sq.monic();
        UPoly x = UPoly::var(k);
        UPoly xq = x;
        unsigned d = 0;
        while (h.degree() >= 1) {
            ++d;
            if (2 * d > static_cast<unsigned>(h.degree())) {
                // what remains is a single irreducible factor
                degrees.push_back(static_cast<unsigned>(h.degree()));
                break;
            }
            xq = upoly_pow_mod(xq, BigInt(q), h);
            UPoly g = upoly_gcd(xq - x.divmod(h).second, h);
            if (g.degree() >= 1) {
                degrees.push_back(d);
                h = *h.divide_exact(g);
                if (h.degree() >= 1) xq = xq.divmod(h).second;
            }
        }
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    return degrees;
}

}  // namespace ginv
