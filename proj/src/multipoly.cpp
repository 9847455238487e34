#include "ginv/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ginv {

bool GrlexLess::operator()(const Expo& a, const Expo& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(FieldPtr f, unsigned nvars) : field_(std::move(f)), nvars_(nvars) {}

MultiPoly MultiPoly::one(const FieldPtr& f, unsigned nvars) {
    return monomial(f, nvars, Expo(nvars, 0), Scalar::one(f));
}

MultiPoly MultiPoly::variable(const FieldPtr& f, unsigned nvars, unsigned i) {
    if (i >= nvars) throw Error("variable index out of range");
    Expo e(nvars, 0);
    e[i] = 1;
    return monomial(f, nvars, e, Scalar::one(f));
}

MultiPoly MultiPoly::monomial(const FieldPtr& f, unsigned nvars, Expo e, const Scalar& c) {
    if (e.size() != nvars) throw Error("exponent vector length mismatch");
    MultiPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](unsigned x) { return x == 0; }));
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Expo& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
    for (auto& [e, c] : terms_) {
        (void)c;
        if (std::accumulate(e.begin(), e.end(), 0u) != d) return std::nullopt;
    }
    return d;
}

std::pair<Expo, Scalar> MultiPoly::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.rbegin();
}

void MultiPoly::add_term(const Expo& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) {
        (void)e;
        c = -c;
    }
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || !field_->same(*o.field_)) throw Error("polynomial ring mismatch");
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || !field_->same(*o.field_)) throw Error("polynomial ring mismatch");
    MultiPoly r(field_, nvars_);
    Expo e(nvars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            for (unsigned i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& s) const {
    MultiPoly r(field_, nvars_);
    if (s.is_zero()) return r;
    for (auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || !field_->same(*o.field_)) return false;
    return terms_ == o.terms_;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    MultiPoly q(field_, nvars_);
    MultiPoly rem = *this;
    auto [de, dc] = d.leading_term();
    Scalar dcinv = dc.inverse();
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading_term();
        Expo qe(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) {
            if (re[i] < de[i]) return std::nullopt;
            qe[i] = re[i] - de[i];
        }
        Scalar qc = rc * dcinv;
        MultiPoly t = monomial(field_, nvars_, qe, qc);
        q = q + t;
        rem = rem - t * d;
    }
    return q;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) throw Error("monic of zero polynomial");
    return *this * leading_term().second.inverse();
}

MultiPoly MultiPoly::linear_substitute(const Mat& m) const {
    if (m.rows() != nvars_ || m.cols() != nvars_) throw Error("substitution matrix dimension mismatch");
    if (!m.field()->same(*field_)) throw Error("substitution matrix field mismatch");
    // images of the variables: x_j -> sum_i m[i][j] x_i
    std::vector<MultiPoly> img;
    img.reserve(nvars_);
    for (unsigned j = 0; j < nvars_; ++j) {
        MultiPoly s(field_, nvars_);
        for (unsigned i = 0; i < nvars_; ++i)
            if (!m.at(i, j).is_zero()) s = s + variable(field_, nvars_, i) * m.at(i, j);
        img.push_back(std::move(s));
    }
    MultiPoly r(field_, nvars_);
    for (auto& [e, c] : terms_) {
        MultiPoly t = monomial(field_, nvars_, Expo(nvars_, 0), c);
        for (unsigned j = 0; j < nvars_; ++j)
            for (unsigned k = 0; k < e[j]; ++k) t = t * img[j];
        r = r + t;
    }
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print grlex-descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first) os << (neg ? " - " : " + ");
        else if (neg)
            os << "-";
        if (neg) cs = cs.substr(1);
        bool has_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        bool coeff_is_one = (cs == "1");
        bool composite = cs.find_first_of("+-") != std::string::npos;
        if (!has_var || !coeff_is_one) {
            if (composite && has_var) os << "(" << cs << ")";
            else os << cs;
            if (has_var) os << "*";
        }
        bool firstv = true;
        for (unsigned i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            firstv = false;
        }
        first = false;
    }
    return os.str();
}

// ---------- gcd ----------

namespace {

int max_active_var(const MultiPoly& f) {
    int v = -1;
    for (auto& [e, c] : f.terms()) {
        (void)c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) v = std::max(v, static_cast<int>(i));
    }
    return v;
}

// coefficients of f viewed as a univariate polynomial in x_v (exponent of x_v
// zeroed out in the coefficient polynomials)
std::vector<MultiPoly> univar_coeffs(const MultiPoly& f, unsigned v) {
    int dv = 0;
    for (auto& [e, c] : f.terms()) {
        (void)c;
        dv = std::max(dv, static_cast<int>(e[v]));
    }
    std::vector<MultiPoly> coeffs(static_cast<size_t>(dv) + 1, MultiPoly::zero(f.field(), f.nvars()));
    for (auto& [e, c] : f.terms()) {
        Expo e2 = e;
        unsigned k = e2[v];
        e2[v] = 0;
        coeffs[k] = coeffs[k] + MultiPoly::monomial(f.field(), f.nvars(), e2, c);
    }
    return coeffs;
}

int deg_in(const MultiPoly& f, unsigned v) {
    int d = -1;
    for (auto& [e, c] : f.terms()) {
        (void)c;
        d = std::max(d, static_cast<int>(e[v]));
    }
    return d;
}

MultiPoly lead_coeff_in(const MultiPoly& f, unsigned v) {
    auto cs = univar_coeffs(f, v);
    return cs.back();
}

// pseudo-remainder of f by g with respect to x_v
MultiPoly prem(MultiPoly f, const MultiPoly& g, unsigned v) {
    int dg = deg_in(g, v);
    MultiPoly lg = lead_coeff_in(g, v);
    while (!f.is_zero() && deg_in(f, v) >= dg) {
        int df = deg_in(f, v);
        MultiPoly lf = lead_coeff_in(f, v);
        Expo shift(f.nvars(), 0);
        shift[v] = static_cast<unsigned>(df - dg);
        MultiPoly xs = MultiPoly::monomial(f.field(), f.nvars(), shift, Scalar::one(f.field()));
        f = f * lg - g * lf * xs;
    }
    return f;
}

MultiPoly gcd_impl(const MultiPoly& f, const MultiPoly& g);

MultiPoly content_in(const MultiPoly& f, unsigned v) {
    auto cs = univar_coeffs(f, v);
    MultiPoly c = MultiPoly::zero(f.field(), f.nvars());
    for (auto& x : cs) {
        if (x.is_zero()) continue;
        c = c.is_zero() ? x : gcd_impl(c, x);
    }
    return c;
}

MultiPoly primitive_part_in(const MultiPoly& f, unsigned v) {
    MultiPoly c = content_in(f, v);
    auto q = f.divide_exact(c);
    if (!q) throw Error("content does not divide polynomial (internal)");
    return *q;
}

MultiPoly gcd_impl(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int vf = max_active_var(f), vg = max_active_var(g);
    int v = std::max(vf, vg);
    if (v < 0) return MultiPoly::one(f.field(), f.nvars());  // both constants
    if (vf != v || vg != v) {
        // one argument is free of x_v: gcd = gcd(other's content in x_v, that one)
        const MultiPoly& with = (vf == v) ? f : g;
        const MultiPoly& without = (vf == v) ? g : f;
        return gcd_impl(content_in(with, static_cast<unsigned>(v)), without);
    }
    unsigned mv = static_cast<unsigned>(v);
    MultiPoly cf = content_in(f, mv), cg = content_in(g, mv);
    MultiPoly c = gcd_impl(cf, cg);
    MultiPoly a = primitive_part_in(f, mv), b = primitive_part_in(g, mv);
    while (!b.is_zero()) {
        MultiPoly r = prem(a, b, mv);
        a = b;
        b = r.is_zero() ? r : primitive_part_in(r, mv);
    }
    return c * primitive_part_in(a, mv);
}

}  // namespace

MultiPoly multipoly_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw Error("gcd of zero polynomial");
    if (f.nvars() != g.nvars() || !f.field()->same(*g.field())) throw Error("polynomial ring mismatch");
    return gcd_impl(f, g).monic();
}

MultiPoly multipoly_gcd(const std::vector<MultiPoly>& fs) {
    if (fs.empty()) throw Error("gcd of empty list");
    MultiPoly g = fs.front();
    if (g.is_zero()) throw Error("gcd of zero polynomial");
    for (size_t i = 1; i < fs.size(); ++i) g = multipoly_gcd(g, fs[i]);
    return g.monic();
}

}  // namespace ginv
