#include "ginv/field.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ginv {

namespace {

// ---------- small number theory ----------

unsigned long gcd_ul(unsigned long a, unsigned long b) { return std::gcd(a, b); }

unsigned long pow_ul_checked(unsigned long base, unsigned exp, unsigned long cap) {
    unsigned long r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (r > cap / base) throw Error("field order exceeds supported bound");
        r *= base;
    }
    return r;
}

// ---------- dense polynomials over F_p (vectors mod p, low-to-high) ----------

using PolyP = std::vector<unsigned>;

void trim_p(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mul_p(const PolyP& a, const PolyP& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<unsigned>((r[i + j] + static_cast<unsigned long>(a[i]) * b[j]) % p);
    }
    trim_p(r);
    return r;
}

unsigned inv_mod(unsigned a, unsigned p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw Error("not invertible mod p");
    return static_cast<unsigned>((t % p + p) % p);
}

// remainder of a mod f, f monic
PolyP rem_p(PolyP a, const PolyP& f, unsigned p) {
    trim_p(a);
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        unsigned c = a.back();
        size_t shift = a.size() - 1 - df;
        if (c != 0)
            for (size_t i = 0; i < f.size(); ++i) {
                unsigned long sub = static_cast<unsigned long>(c) * f[i] % p;
                a[shift + i] = static_cast<unsigned>((a[shift + i] + p - sub) % p);
            }
        a.pop_back();
        trim_p(a);
        if (a.size() <= df) break;
    }
    trim_p(a);
    return a;
}

PolyP mulmod_p(const PolyP& a, const PolyP& b, const PolyP& f, unsigned p) {
    return rem_p(mul_p(a, b, p), f, p);
}

PolyP powmod_p(PolyP base, BigInt e, const PolyP& f, unsigned p) {
    PolyP r{1};
    base = rem_p(std::move(base), f, p);
    while (e > 0) {
        if ((e & 1) != 0) r = mulmod_p(r, base, f, p);
        base = mulmod_p(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PolyP gcd_p(PolyP a, PolyP b, unsigned p) {
    trim_p(a);
    trim_p(b);
    while (!b.empty()) {
        unsigned lc = b.back();
        if (lc != 1) {
            unsigned li = inv_mod(lc, p);
            for (auto& c : b) c = static_cast<unsigned>(static_cast<unsigned long>(c) * li % p);
        }
        a = rem_p(std::move(a), b, p);
        std::swap(a, b);
    }
    trim_p(a);
    return a;
}

bool irreducible_p(const PolyP& f, unsigned p) {
    // f monic of degree m: irreducible iff x^{p^m} = x mod f and
    // gcd(x^{p^{m/r}} - x, f) = 1 for every prime r | m.
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    if (m == 0) return false;
    if (m == 1) return true;
    PolyP x{0, 1};
    BigInt pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p;
    PolyP xq = powmod_p(x, pm, f, p);
    PolyP diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<unsigned>((diff[1] + p - 1) % p);
    trim_p(diff);
    if (!diff.empty()) return false;
    for (auto [r, e] : factorize(m)) {
        (void)e;
        BigInt pk = 1;
        for (unsigned i = 0; i < m / r; ++i) pk *= p;
        PolyP xk = powmod_p(x, pk, f, p);
        xk.resize(std::max<size_t>(xk.size(), 2), 0);
        xk[1] = static_cast<unsigned>((xk[1] + p - 1) % p);
        trim_p(xk);
        PolyP g = gcd_p(xk, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

// ---------- dense polynomials over Q (low-to-high) ----------

using PolyQ = std::vector<BigRat>;

void trim_q(PolyQ& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyQ mul_q(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim_q(r);
    return r;
}

// divide a by monic f, returning (quotient, remainder)
std::pair<PolyQ, PolyQ> divmod_q(PolyQ a, const PolyQ& f) {
    trim_q(a);
    const size_t df = f.size() - 1;
    PolyQ q;
    if (a.size() > df) q.assign(a.size() - df, BigRat(0));
    while (a.size() > df) {
        BigRat c = a.back() / f.back();
        size_t shift = a.size() - 1 - df;
        q[shift] = c;
        for (size_t i = 0; i < f.size(); ++i) a[shift + i] -= c * f[i];
        trim_q(a);
    }
    return {q, a};
}

// extended gcd: returns (g, u) with u*a = g mod f, g the monic gcd
std::pair<PolyQ, PolyQ> half_ext_gcd_q(PolyQ a, PolyQ f) {
    PolyQ u0{BigRat(1)}, u1{};
    trim_q(a);
    trim_q(f);
    while (!f.empty()) {
        auto [q, r] = divmod_q(a, [&] {
            PolyQ m = f;
            BigRat lc = m.back();
            for (auto& c : m) c /= lc;
            return m;
        }());
        // a = q*(f/lc) + r  ->  a - (q/lc)*f = r
        BigRat lc = f.back();
        PolyQ qs = q;
        for (auto& c : qs) c /= lc;
        PolyQ nu = u0;
        PolyQ qu = mul_q(qs, u1);
        nu.resize(std::max(nu.size(), qu.size()), BigRat(0));
        for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
        trim_q(nu);
        a = f;
        f = r;
        u0 = u1;
        u1 = nu;
    }
    if (a.empty()) throw Error("extended gcd of zero polynomials");
    BigRat lc = a.back();
    for (auto& c : a) c /= lc;
    for (auto& c : u0) c /= lc;
    return {a, u0};
}

// ---------- caches ----------

std::mutex g_cache_mutex;
std::map<unsigned, std::vector<BigInt>> g_cyclo_cache;
std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> g_irred_cache;
std::map<std::string, std::shared_ptr<const BrauerEmbedding>> g_brauer_cache;

std::vector<BigInt> cyclo_poly_impl(unsigned n) {
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
    // (x^n - 1) / prod_{d | n, d < n} Phi_d, exact integer division
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto phi_d = cyclo_poly_impl(d);
        // divide num by phi_d (monic, exact)
        std::vector<BigInt> q(num.size() - phi_d.size() + 1, BigInt(0));
        std::vector<BigInt> rem = num;
        for (size_t k = rem.size(); k >= phi_d.size(); --k) {
            BigInt c = rem[k - 1];
            size_t shift = k - phi_d.size();
            q[shift] = c;
            if (c != 0)
                for (size_t i = 0; i < phi_d.size(); ++i) rem[shift + i] -= c * phi_d[i];
        }
        num = q;
    }
    g_cyclo_cache[n] = num;
    return num;
}

std::vector<unsigned> canonical_irreducible(unsigned p, unsigned deg) {
    auto key = std::make_pair(p, deg);
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = g_irred_cache.find(key);
        if (it != g_irred_cache.end()) return it->second;
    }
    // enumerate monic polynomials by lexicographic coefficient vector (c_0, c_1, ...)
    std::vector<unsigned> c(deg, 0);
    for (;;) {
        PolyP f(c.begin(), c.end());
        f.push_back(1);
        if (irreducible_p(f, p)) {
            std::lock_guard<std::mutex> lk(g_cache_mutex);
            g_irred_cache[key] = f;
            return f;
        }
        size_t i = 0;
        while (i < deg && c[i] == p - 1) c[i++] = 0;
        if (i == deg) throw Error("no irreducible polynomial found");  // cannot happen
        ++c[i];
    }
}

}  // namespace

// ---------- number theory ----------

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
    std::vector<std::pair<unsigned long, unsigned>> r;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        r.emplace_back(d, e);
    }
    if (n > 1) r.emplace_back(n, 1);
    return r;
}

unsigned euler_phi(unsigned n) {
    unsigned long r = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        r = r / p * (p - 1);
    }
    return static_cast<unsigned>(r);
}

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error("cyclotomic index must be positive");
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    return cyclo_poly_impl(n);
}

// ---------- FieldDescriptor ----------

FieldPtr FieldDescriptor::rational() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
        f->kind_ = FieldKind::Rational;
        f->key_ = "Q";
        return f;
    }();
    return q;
}

FieldPtr FieldDescriptor::cyclotomic(unsigned n) {
    if (n == 0) throw Error("cyclotomic index N must be >= 1");
    if (euler_phi(n) > 512) throw Error("cyclotomic field Q(zeta_" + std::to_string(n) + ") too large");
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->kind_ = FieldKind::Cyclotomic;
    f->n_ = n;
    auto phi = cyclotomic_polynomial(n);
    f->cyclo_modulus_.reserve(phi.size());
    for (auto& c : phi) f->cyclo_modulus_.emplace_back(c);
    f->degree_ = static_cast<unsigned>(phi.size() - 1);
    f->key_ = "C" + std::to_string(n);
    return f;
}

FieldPtr FieldDescriptor::finite(unsigned p, std::vector<unsigned> modulus) {
    if (!is_prime(p)) throw Error("characteristic must be prime, got " + std::to_string(p));
    for (auto& c : modulus) c %= p;
    trim_p(modulus);
    if (modulus.size() < 2) throw Error("finite-field modulus must have degree >= 1");
    if (modulus.back() != 1) throw Error("finite-field modulus must be monic");
    if (!irreducible_p(modulus, p)) throw Error("finite-field modulus is reducible over F_p");
    auto f = std::shared_ptr<FieldDescriptor>(new FieldDescriptor());
    f->kind_ = FieldKind::Finite;
    f->p_ = p;
    f->modulus_ = std::move(modulus);
    f->degree_ = static_cast<unsigned>(f->modulus_.size() - 1);
    std::ostringstream os;
    os << "F" << p;
    for (auto c : f->modulus_) os << "." << c;
    f->key_ = os.str();
    return f;
}

FieldPtr FieldDescriptor::prime_field(unsigned p) { return finite(p, {0, 1}); }

unsigned FieldDescriptor::cyclo_n() const {
    if (kind_ != FieldKind::Cyclotomic) throw Error("not a cyclotomic field");
    return n_;
}

unsigned long FieldDescriptor::field_order() const {
    if (kind_ != FieldKind::Finite) throw Error("field_order: not a finite field");
    return pow_ul_checked(p_, degree_, 1000000000000UL);
}

unsigned long FieldDescriptor::root_capacity() const {
    switch (kind_) {
        case FieldKind::Rational:
            return 2;
        case FieldKind::Cyclotomic:
            return std::lcm<unsigned long>(2, n_);
        case FieldKind::Finite:
            return field_order() - 1;
    }
    throw Error("unreachable");
}

std::string FieldDescriptor::describe() const {
    switch (kind_) {
        case FieldKind::Rational:
            return "Q";
        case FieldKind::Cyclotomic:
            return "Q(zeta_" + std::to_string(n_) + ")";
        case FieldKind::Finite: {
            std::ostringstream os;
            os << "F_" << p_;
            if (degree_ > 1) os << "^" << degree_;
            return os.str();
        }
    }
    throw Error("unreachable");
}

// ---------- Scalar ----------

Scalar::Scalar() : field_(FieldDescriptor::rational()), rat_(0) {}

Scalar Scalar::zero(const FieldPtr& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldPtr& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldPtr& f, long v) { return from_rat(f, BigRat(v)); }

Scalar Scalar::from_rat(const FieldPtr& f, const BigRat& v) {
    Scalar s;
    s.field_ = f;
    switch (f->kind()) {
        case FieldKind::Rational:
            s.rat_ = v;
            break;
        case FieldKind::Cyclotomic:
            s.cy_.assign(f->degree(), BigRat(0));
            s.cy_[0] = v;
            trim_q(s.cy_);
            break;
        case FieldKind::Finite: {
            if (boost::multiprecision::denominator(v) % f->characteristic() == 0)
                throw Error("rational with denominator divisible by p in F_p");
            BigInt p(f->characteristic());
            BigInt num = boost::multiprecision::numerator(v) % p;
            BigInt den = boost::multiprecision::denominator(v) % p;
            if (num < 0) num += p;
            unsigned d = inv_mod(static_cast<unsigned>(den), f->characteristic());
            BigInt val = num * d % p;
            s.ff_.assign(f->degree(), 0);
            s.ff_[0] = static_cast<unsigned>(val);
            break;
        }
    }
    return s;
}

Scalar Scalar::gen(const FieldPtr& f) {
    Scalar s;
    s.field_ = f;
    switch (f->kind()) {
        case FieldKind::Rational:
            throw Error("Q has no field generator");
        case FieldKind::Cyclotomic:
            s.cy_.assign(f->degree(), BigRat(0));
            if (f->degree() >= 2)
                s.cy_[1] = 1;
            else {
                // N = 1 or 2: zeta is 1 resp. -1
                s.cy_[0] = (f->cyclo_n() == 1) ? 1 : -1;
            }
            trim_q(s.cy_);
            break;
        case FieldKind::Finite:
            if (f->degree() < 2) throw Error("prime field has no ring generator; use from_int");
            s.ff_.assign(f->degree(), 0);
            s.ff_[1] = 1;
            break;
    }
    return s;
}

Scalar Scalar::from_cyclo_coeffs(const FieldPtr& f, std::vector<BigRat> c) {
    if (!f->is_cyclotomic()) throw Error("from_cyclo_coeffs: not a cyclotomic field");
    Scalar s;
    s.field_ = f;
    trim_q(c);
    // reduce mod Phi_N
    auto [q, r] = divmod_q(std::move(c), f->cyclo_modulus());
    (void)q;
    s.cy_ = std::move(r);
    return s;
}

Scalar Scalar::from_ff_coeffs(const FieldPtr& f, std::vector<unsigned> c) {
    if (!f->is_finite()) throw Error("from_ff_coeffs: not a finite field");
    Scalar s;
    s.field_ = f;
    for (auto& x : c) x %= f->characteristic();
    trim_p(c);
    c = rem_p(std::move(c), f->modulus(), f->characteristic());
    c.resize(f->degree(), 0);
    s.ff_ = std::move(c);
    return s;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!field_->same(*o.field_))
        throw Error("field mismatch: " + field_->describe() + " vs " + o.field_->describe());
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rational:
            return rat_ == 0;
        case FieldKind::Cyclotomic:
            return cy_.empty();
        case FieldKind::Finite:
            return std::all_of(ff_.begin(), ff_.end(), [](unsigned c) { return c == 0; });
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(field_); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (field_->kind()) {
        case FieldKind::Rational:
            r.rat_ = -r.rat_;
            break;
        case FieldKind::Cyclotomic:
            for (auto& c : r.cy_) c = -c;
            break;
        case FieldKind::Finite: {
            unsigned p = field_->characteristic();
            for (auto& c : r.ff_) c = (p - c) % p;
            break;
        }
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r = *this;
    switch (field_->kind()) {
        case FieldKind::Rational:
            r.rat_ += o.rat_;
            break;
        case FieldKind::Cyclotomic: {
            r.cy_.resize(std::max(cy_.size(), o.cy_.size()), BigRat(0));
            for (size_t i = 0; i < o.cy_.size(); ++i) r.cy_[i] += o.cy_[i];
            trim_q(r.cy_);
            break;
        }
        case FieldKind::Finite: {
            unsigned p = field_->characteristic();
            for (size_t i = 0; i < r.ff_.size(); ++i) r.ff_[i] = (r.ff_[i] + o.ff_[i]) % p;
            break;
        }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational:
            r.rat_ = rat_ * o.rat_;
            break;
        case FieldKind::Cyclotomic: {
            auto prod = mul_q(cy_, o.cy_);
            auto [q, rem] = divmod_q(std::move(prod), field_->cyclo_modulus());
            (void)q;
            r.cy_ = std::move(rem);
            break;
        }
        case FieldKind::Finite: {
            unsigned p = field_->characteristic();
            PolyP a = ff_, b = o.ff_;
            trim_p(a);
            trim_p(b);
            auto prod = mulmod_p(a, b, field_->modulus(), p);
            prod.resize(field_->degree(), 0);
            r.ff_ = std::move(prod);
            break;
        }
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Scalar r;
    r.field_ = field_;
    switch (field_->kind()) {
        case FieldKind::Rational:
            r.rat_ = 1 / rat_;
            break;
        case FieldKind::Cyclotomic: {
            auto [g, u] = half_ext_gcd_q(cy_, field_->cyclo_modulus());
            if (g.size() != 1) throw Error("cyclotomic inverse: gcd not constant");
            auto [q, rem] = divmod_q(std::move(u), field_->cyclo_modulus());
            (void)q;
            r.cy_ = std::move(rem);
            break;
        }
        case FieldKind::Finite: {
            // a^{q-2}
            unsigned long q = field_->field_order();
            return pow(static_cast<long>(q - 2));
        }
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Scalar r = one(field_);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rational:
            return rat_ == o.rat_;
        case FieldKind::Cyclotomic:
            return cy_ == o.cy_;
        case FieldKind::Finite:
            return ff_ == o.ff_;
    }
    return false;
}

bool Scalar::lex_less(const Scalar& o) const {
    check_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rational:
            return rat_ < o.rat_;
        case FieldKind::Cyclotomic: {
            auto a = cy_, b = o.cy_;
            a.resize(field_->degree(), BigRat(0));
            b.resize(field_->degree(), BigRat(0));
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }
        case FieldKind::Finite:
            return ff_ < o.ff_;
    }
    return false;
}

std::string Scalar::str() const {
    std::ostringstream os;
    switch (field_->kind()) {
        case FieldKind::Rational:
            os << rat_;
            break;
        case FieldKind::Cyclotomic: {
            if (cy_.empty()) return "0";
            bool first = true;
            for (size_t i = 0; i < cy_.size(); ++i) {
                if (cy_[i] == 0) continue;
                BigRat c = cy_[i];
                if (!first) os << (c > 0 ? "+" : "-");
                else if (c < 0)
                    os << "-";
                BigRat a = c > 0 ? c : BigRat(-c);
                if (a != 1 || i == 0) os << a;
                if (i >= 1) {
                    if (a != 1) os << "*";
                    os << "z";
                    if (i > 1) os << "^" << i;
                }
                first = false;
            }
            break;
        }
        case FieldKind::Finite: {
            if (field_->degree() == 1) {
                os << ff_[0];
                break;
            }
            bool any = false;
            for (size_t i = 0; i < ff_.size(); ++i) {
                if (ff_[i] == 0) continue;
                if (any) os << "+";
                if (ff_[i] != 1 || i == 0) os << ff_[i];
                if (i >= 1) {
                    if (ff_[i] != 1) os << "*";
                    os << "a";
                    if (i > 1) os << "^" << i;
                }
                any = true;
            }
            if (!any) os << 0;
            break;
        }
    }
    return os.str();
}

std::string Scalar::key() const {
    std::ostringstream os;
    switch (field_->kind()) {
        case FieldKind::Rational:
            os << rat_;
            break;
        case FieldKind::Cyclotomic:
            for (auto& c : cy_) os << c << ",";
            break;
        case FieldKind::Finite:
            for (auto c : ff_) os << c << ",";
            break;
    }
    return os.str();
}

// ---------- roots of unity, orders ----------

bool is_root_of_unity(const Scalar& a) {
    if (a.is_zero()) return false;
    if (a.field()->is_finite()) return true;
    unsigned long cap = a.field()->root_capacity();
    return a.pow(static_cast<long>(cap)).is_one();
}

unsigned long mult_order(const Scalar& a) {
    if (a.is_zero()) throw Error("mult_order of zero");
    unsigned long cap = a.field()->root_capacity();
    if (!a.field()->is_finite() && !a.pow(static_cast<long>(cap)).is_one())
        throw Error("element has infinite multiplicative order");
    // order divides cap: strip prime factors
    unsigned long r = cap;
    for (auto [p, e] : factorize(cap)) {
        (void)e;
        while (r % p == 0 && a.pow(static_cast<long>(r / p)).is_one()) r /= p;
    }
    if (!a.pow(static_cast<long>(r)).is_one()) throw Error("mult_order: internal inconsistency");
    return r;
}

Scalar primitive_root_of_unity(const FieldPtr& f) {
    switch (f->kind()) {
        case FieldKind::Rational:
            return Scalar::from_int(f, -1);
        case FieldKind::Cyclotomic: {
            unsigned n = f->cyclo_n();
            Scalar z = Scalar::gen(f);
            if (n % 2 == 0) return z;   // order N = lcm(2, N)
            return -z;                   // order 2N for odd N
        }
        case FieldKind::Finite:
            return BrauerEmbedding(f).generator();
    }
    throw Error("unreachable");
}

Scalar root_of_unity(const FieldPtr& f, unsigned long order, long power) {
    unsigned long cap = f->root_capacity();
    if (order == 0 || cap % order != 0)
        throw Error("no root of unity of order " + std::to_string(order) + " in " + f->describe());
    Scalar prim = primitive_root_of_unity(f);
    long step = static_cast<long>(cap / order);
    long e = power % static_cast<long>(order);
    if (e < 0) e += static_cast<long>(order);
    return prim.pow(step * e);
}

// ---------- embeddings ----------

FieldEmbedding FieldEmbedding::identity(const FieldPtr& f) {
    FieldEmbedding e;
    e.from_ = f;
    e.to_ = f;
    e.trivial_ = true;
    return e;
}

FieldEmbedding FieldEmbedding::make(const FieldPtr& from, const FieldPtr& to) {
    if (from->same(*to)) return identity(from);
    FieldEmbedding e;
    e.from_ = from;
    e.to_ = to;
    e.trivial_ = false;
    if (from->is_rational() && !to->is_finite()) {
        e.trivial_ = true;  // coefficientwise
        return e;
    }
    if (from->is_cyclotomic() && to->is_cyclotomic()) {
        unsigned n = from->cyclo_n(), l = to->cyclo_n();
        if (l % n != 0) throw Error("no canonical embedding Q(zeta_" + std::to_string(n) +
                                    ") -> Q(zeta_" + std::to_string(l) + ")");
        e.gen_image_ = Scalar::gen(to).pow(static_cast<long>(l / n));
        return e;
    }
    if (from->is_finite() && to->is_finite()) {
        if (from->characteristic() != to->characteristic() || to->degree() % from->degree() != 0)
            throw Error("no embedding " + from->describe() + " -> " + to->describe());
        // find the lexicographically least root of the base modulus in `to`
        const auto& mod = from->modulus();
        unsigned p = from->characteristic();
        unsigned long q = to->field_order();
        std::vector<unsigned> coeffs(to->degree(), 0);
        for (unsigned long idx = 0; idx < q; ++idx) {
            unsigned long v = idx;
            for (auto& c : coeffs) {
                c = static_cast<unsigned>(v % p);
                v /= p;
            }
            Scalar x = Scalar::from_ff_coeffs(to, coeffs);
            Scalar acc = Scalar::zero(to);
            for (size_t i = mod.size(); i-- > 0;)
                acc = acc * x + Scalar::from_int(to, static_cast<long>(mod[i]));
            if (acc.is_zero()) {
                e.gen_image_ = x;
                return e;
            }
        }
        throw Error("embedding root not found (internal)");
    }
    throw Error("unsupported embedding " + from->describe() + " -> " + to->describe());
}

Scalar FieldEmbedding::operator()(const Scalar& a) const {
    if (!a.field()->same(*from_)) throw Error("embedding applied to wrong field");
    if (trivial_ && from_->same(*to_)) return a;
    switch (from_->kind()) {
        case FieldKind::Rational:
            return Scalar::from_rat(to_, a.rat());
        case FieldKind::Cyclotomic: {
            Scalar acc = Scalar::zero(to_);
            const auto& c = a.cyclo_coeffs();
            for (size_t i = c.size(); i-- > 0;)
                acc = acc * gen_image_ + Scalar::from_rat(to_, c[i]);
            return acc;
        }
        case FieldKind::Finite: {
            Scalar acc = Scalar::zero(to_);
            const auto& c = a.ff_coeffs();
            for (size_t i = c.size(); i-- > 0;)
                acc = acc * gen_image_ + Scalar::from_int(to_, static_cast<long>(c[i]));
            return acc;
        }
    }
    throw Error("unreachable");
}

Scalar to_rational_scalar(const Scalar& a) {
    switch (a.field()->kind()) {
        case FieldKind::Rational:
            return a;
        case FieldKind::Cyclotomic: {
            const auto& c = a.cyclo_coeffs();
            if (c.size() > 1) throw Error("cyclotomic number is not rational: " + a.str());
            return Scalar::from_rat(FieldDescriptor::rational(), c.empty() ? BigRat(0) : c[0]);
        }
        case FieldKind::Finite:
            throw Error("finite-field element has no rational value");
    }
    throw Error("unreachable");
}

Scalar rational_to(const FieldPtr& f, const BigRat& v) { return Scalar::from_rat(f, v); }

ExtensionField canonical_extension(const FieldPtr& base, unsigned d) {
    if (!base->is_finite()) throw Error("canonical_extension: base must be finite");
    if (d == 0) throw Error("extension degree must be >= 1");
    if (d == 1) return {base, FieldEmbedding::identity(base)};
    unsigned p = base->characteristic();
    unsigned deg = base->degree() * d;
    // guard: exhaustive searches below scan all p^deg elements
    pow_ul_checked(p, deg, 2000000UL);
    FieldPtr ext = FieldDescriptor::finite(p, canonical_irreducible(p, deg));
    return {ext, FieldEmbedding::make(base, ext)};
}

// ---------- Brauer embedding ----------

BrauerEmbedding::BrauerEmbedding(FieldPtr finite_field) : ext_(std::move(finite_field)) {
    if (!ext_->is_finite()) throw Error("Brauer embedding needs a finite field");
    unsigned long q = ext_->field_order();
    if (q - 1 > 2000000UL) throw Error("finite field too large for discrete-log table");
    m_ = q - 1;
    unsigned p = ext_->characteristic();
    unsigned deg = ext_->degree();
    auto fac = factorize(m_);
    // scan elements in lexicographic coefficient order for the least generator
    std::vector<unsigned> coeffs(deg, 0);
    bool found = false;
    for (unsigned long idx = 1; idx < q && !found; ++idx) {
        // idx -> coefficient vector, least-significant digit = c_0 so that
        // enumeration order equals lexicographic order on (c_0, c_1, ...)
        unsigned long v = idx;
        for (auto& c : coeffs) {
            c = static_cast<unsigned>(v % p);
            v /= p;
        }
        Scalar cand = Scalar::from_ff_coeffs(ext_, coeffs);
        if (cand.is_zero()) continue;
        bool gen = true;
        for (auto [r, e] : fac) {
            (void)e;
            if (cand.pow(static_cast<long>(m_ / r)).is_one()) {
                gen = false;
                break;
            }
        }
        if (gen) {
            gamma_ = cand;
            found = true;
        }
    }
    if (!found) throw Error("no multiplicative generator found (internal)");
    Scalar acc = Scalar::one(ext_);
    for (unsigned long e = 0; e < m_; ++e) {
        dlog_.emplace(acc.key(), e);
        acc = acc * gamma_;
    }
}

unsigned long BrauerEmbedding::discrete_log(const Scalar& a) const {
    if (a.is_zero()) throw Error("discrete log of zero");
    if (!a.field()->same(*ext_)) throw Error("discrete log: element not in the embedding field");
    auto it = dlog_.find(a.key());
    if (it == dlog_.end()) throw Error("discrete log lookup failed (internal)");
    return it->second;
}

std::pair<unsigned long, unsigned long> BrauerEmbedding::root_data(const Scalar& a) const {
    unsigned long e = discrete_log(a);
    unsigned long g = gcd_ul(e == 0 ? m_ : e, m_);
    unsigned long r = m_ / g;          // order of a
    unsigned long u = (e / g) % r;     // a = zeta_r^u
    if (r == 1) u = 0;
    return {r, u};
}

Scalar brauer_lift(const Scalar& a, const BrauerEmbedding& emb) {
    unsigned p = a.field()->characteristic();
    auto [r, u] = emb.root_data(a);
    if (r % p == 0) throw Error("p-singular element: order divisible by the characteristic");
    FieldPtr target = FieldDescriptor::cyclotomic(static_cast<unsigned>(r));
    return root_of_unity(target, r, static_cast<long>(u));
}

Scalar brauer_lift_into(const Scalar& a, const BrauerEmbedding& emb, const FieldPtr& cyclo_target) {
    unsigned p = a.field()->characteristic();
    auto [r, u] = emb.root_data(a);
    if (r % p == 0) throw Error("p-singular element: order divisible by the characteristic");
    unsigned long n = cyclo_target->is_rational() ? 2 : cyclo_target->root_capacity();
    if (n % r != 0) throw Error("lift target has no root of unity of order " + std::to_string(r));
    return root_of_unity(cyclo_target, r, static_cast<long>(u));
}

}  // namespace ginv
