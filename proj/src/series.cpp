#include "ginv/series.hpp"

#include "ginv/multipoly.hpp"

#include <functional>
#include <numeric>

namespace ginv {

namespace {

unsigned long p_regular_part(unsigned long r, unsigned p) {
    if (p == 0) return r;
    while (r % p == 0) r /= p;
    return r;
}

unsigned splitting_degree(const Mat& g) {
    auto degs = irreducible_factor_degrees(g.char_poly());
    unsigned d = 1;
    for (auto x : degs) d = static_cast<unsigned>(std::lcm(d, x));
    return d;
}

LiftContext make_context(const FieldPtr& base, unsigned split_deg, unsigned long cyclo_m) {
    if (cyclo_m == 0) cyclo_m = 1;
    if (base->is_finite()) {
        ExtensionField ext = canonical_extension(base, split_deg);
        auto brauer = std::make_shared<const BrauerEmbedding>(ext.ext);
        return LiftContext{base, ext.ext, FieldDescriptor::cyclotomic(cyclo_m), ext.embed, brauer};
    }
    unsigned base_n = base->is_cyclotomic() ? base->cyclo_n() : 1;
    unsigned long l = std::lcm<unsigned long>(base_n, cyclo_m);
    FieldPtr split = FieldDescriptor::cyclotomic(static_cast<unsigned>(l));
    return LiftContext{base, split, split, FieldEmbedding::make(base, split), nullptr};
}

}  // namespace

Scalar LiftContext::lift_split(const Scalar& a) const {
    if (!base->is_finite()) return a;
    return brauer_lift_into(a, *brauer, coeff);
}

Scalar LiftContext::lift_base(const Scalar& a) const { return lift_split(embed(a)); }

LiftContext lift_context_for_element(const Mat& g) {
    const FieldPtr& base = g.field();
    unsigned long r = element_order(g);
    if (base->is_finite())
        return make_context(base, splitting_degree(g), p_regular_part(r, base->characteristic()));
    return make_context(base, 1, r);
}

LiftContext lift_context_for_group(const FiniteMatrixGroup& g) {
    const FieldPtr& base = g.field();
    unsigned p = base->characteristic();
    unsigned split_deg = 1;
    unsigned long m = 1;
    for (unsigned i = 0; i < g.order(); ++i) {
        m = std::lcm(m, p_regular_part(g.element_order(i), p));
        if (base->is_finite())
            split_deg = static_cast<unsigned>(std::lcm(split_deg, splitting_degree(g.element(i))));
    }
    return make_context(base, split_deg, m);
}

Scalar reduce_cyclotomic_mod_p(const Scalar& a, const LiftContext& ctx) {
    if (!ctx.base->is_finite()) throw Error("Brauer reduction needs a finite base field");
    const FieldPtr& split = ctx.split;
    unsigned long q1 = split->field_order() - 1;
    if (a.field()->is_rational()) return rational_to(split, a.rat());
    unsigned long m = a.field()->cyclo_n();
    if (q1 % m != 0) throw Error("cyclotomic order not realizable in the splitting field");
    Scalar z = ctx.brauer->generator().pow(static_cast<long>(q1 / m));
    Scalar acc = Scalar::zero(split);
    Scalar zpow = Scalar::one(split);
    for (const auto& c : a.cyclo_coeffs()) {
        if (c != 0) acc = acc + rational_to(split, c) * zpow;
        zpow = zpow * z;
    }
    return acc;
}

RatFun brauer_series_sym_in(const Mat& g, const LiftContext& ctx) {
    EigenvalueData ev = eigenvalues_in(g, ctx.split, ctx.embed);
    if (ev.p_singular)
        throw Error("p-singular element has no Brauer series; use trace_series_truncated");
    const FieldPtr& f = ctx.coeff;
    UPoly den = UPoly::constant(Scalar::one(f));
    for (const auto& [lam, mult] : ev.values) {
        UPoly factor(f, {Scalar::one(f), -ctx.lift_split(lam)});  // 1 - lifted(lambda) t
        for (unsigned t = 0; t < mult; ++t) den = den * factor;
    }
    return RatFun(UPoly::constant(Scalar::one(f)), den);
}

BrauerSeriesResult brauer_series_sym(const Mat& g) {
    LiftContext ctx = lift_context_for_element(g);
    RatFun h = ratfun_demote(brauer_series_sym_in(g, ctx));
    return BrauerSeriesResult{h, ctx.coeff, h.degree()};
}

std::vector<Scalar> trace_series_truncated(const Mat& g, unsigned D) {
    const FieldPtr& f = g.field();
    if (g.det().is_zero()) throw Error("trace series of a singular matrix");
    const unsigned n = g.rows();
    // images of the variables and their powers up to D
    std::vector<std::vector<MultiPoly>> pw(n);
    for (unsigned j = 0; j < n; ++j) {
        MultiPoly img = MultiPoly::zero(f, n);
        for (unsigned i = 0; i < n; ++i) {
            Expo e(n, 0);
            e[i] = 1;
            img = img + MultiPoly::monomial(f, n, e, g.at(i, j));
        }
        pw[j].push_back(MultiPoly::one(f, n));
        for (unsigned d = 1; d <= D; ++d) pw[j].push_back(pw[j][d - 1] * img);
    }
    std::vector<Scalar> traces(D + 1, Scalar::zero(f));
    std::vector<unsigned> e(n, 0);
    // enumerate all monomials of degree <= D
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
        if (pos == n) {
            unsigned d = D - left;
            MultiPoly img = pw[0][e[0]];
            for (unsigned j = 1; j < n; ++j) img = img * pw[j][e[j]];
            Expo expo(e.begin(), e.end());
            auto it = img.terms().find(expo);
            if (it != img.terms().end()) traces[d] = traces[d] + it->second;
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
        e[pos] = 0;
    };
    rec(0, D);
    return traces;
}

RatFun graded_poly_series_in(const std::vector<Mat>& pieces, const std::vector<unsigned>& degrees,
                             const LiftContext& ctx) {
    if (pieces.size() != degrees.size()) throw Error("one degree per graded piece required");
    const FieldPtr& f = ctx.coeff;
    UPoly den = UPoly::constant(Scalar::one(f));
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (degrees[i] < 1) throw Error("generator degrees must be >= 1");
        EigenvalueData ev = eigenvalues_in(pieces[i], ctx.split, ctx.embed);
        if (ev.p_singular)
            throw Error("p-singular graded action has no Brauer series");
        for (const auto& [lam, mult] : ev.values) {
            // 1 - lifted(lambda) t^{d_i}
            std::vector<Scalar> c(degrees[i] + 1, Scalar::zero(f));
            c[0] = Scalar::one(f);
            c[degrees[i]] = -ctx.lift_split(lam);
            UPoly factor(f, c);
            for (unsigned t = 0; t < mult; ++t) den = den * factor;
        }
    }
    return RatFun(UPoly::constant(Scalar::one(f)), den);
}

BrauerSeriesResult graded_poly_series(const std::vector<Mat>& pieces,
                                      const std::vector<unsigned>& degrees) {
    if (pieces.empty()) throw Error("graded series needs at least one piece");
    const FieldPtr& base = pieces.front().field();
    unsigned p = base->characteristic();
    unsigned split_deg = 1;
    unsigned long m = 1;
    for (const auto& u : pieces) {
        if (!u.field()->same(*base)) throw Error("graded pieces over different fields");
        m = std::lcm(m, p_regular_part(element_order(u), p));
        if (base->is_finite()) split_deg = static_cast<unsigned>(std::lcm(split_deg, splitting_degree(u)));
    }
    LiftContext ctx = make_context(base, split_deg, m);
    RatFun h = ratfun_demote(graded_poly_series_in(pieces, degrees, ctx));
    return BrauerSeriesResult{h, ctx.coeff, h.degree()};
}

Scalar lambda_via_duality(const RatFun& hg, const RatFun& hg_inv, unsigned d, int a) {
    if (hg.is_zero() || hg_inv.is_zero()) throw Error("duality ratio of zero series");
    RatFun ratio = hg / hg_inv.substitute_inverse();
    if (!ratio.is_monomial()) throw Error("duality ratio is not a monomial: " + ratio.str());
    if (ratio.degree() != a)
        throw Error("duality ratio has degree " + std::to_string(ratio.degree()) + ", expected " +
                    std::to_string(a));
    Scalar c = ratio.evaluate(Scalar::one(hg.field()));
    return (d % 2 == 1) ? -c : c;
}

DualityCheckResult duality_check(const Mat& g, const LiftContext& ctx) {
    const unsigned n = g.rows();
    RatFun hg = brauer_series_sym_in(g, ctx);
    RatFun hginv = brauer_series_sym_in(g.inverse(), ctx);
    RatFun lhs = hg / hginv.substitute_inverse();
    Scalar lam_dual = lambda_via_duality(hg, hginv, n, -static_cast<int>(n));
    Scalar lam_det = ctx.lift_base(g.det()).inverse();
    const FieldPtr& f = ctx.coeff;
    Scalar sign = Scalar::from_int(f, n % 2 == 1 ? -1 : 1);
    std::vector<Scalar> den(n + 1, Scalar::zero(f));
    den[n] = Scalar::one(f);
    RatFun rhs(UPoly::constant(sign * lam_det), UPoly(f, den));
    bool pass = (lhs == rhs) && (lam_dual == lam_det);
    return DualityCheckResult{std::move(lhs), std::move(rhs), std::move(lam_dual),
                              std::move(lam_det), pass};
}

namespace {

RatFun averaged(const FiniteMatrixGroup& g, const LinearCharacter* chi) {
    unsigned p = g.field()->characteristic();
    if (p > 0 && g.order() % p == 0)
        throw Error("group order divisible by the characteristic: average undefined");
    LiftContext ctx = lift_context_for_group(g);
    const FieldPtr& f = ctx.coeff;
    RatFun sum = RatFun::zero(f);
    for (unsigned i = 0; i < g.order(); ++i) {
        RatFun h = brauer_series_sym_in(g.element(i), ctx);
        if (chi) {
            Scalar v = ctx.lift_base(chi->value(g.field(), i)).inverse();
            h = h * RatFun::constant(v);
        }
        sum = sum + h;
    }
    sum = sum * RatFun::constant(Scalar::from_rat(f, BigRat(1, static_cast<long>(g.order()))));
    RatFun out = ratfun_demote(sum);
    if (!out.field()->is_rational())
        throw Error("group average has irrational coefficients (internal)");
    return out;
}

}  // namespace

RatFun molien_average(const FiniteMatrixGroup& g) { return averaged(g, nullptr); }

RatFun isotypic_average(const FiniteMatrixGroup& g, const LinearCharacter& chi) {
    return averaged(g, &chi);
}

RatFun ratfun_demote(const RatFun& f) {
    if (f.field()->is_rational()) return f;
    auto rational_coeffs = [](const UPoly& p, std::vector<Scalar>& out) {
        auto q = FieldDescriptor::rational();
        for (const auto& c : p.coeffs()) {
            const auto& cy = c.cyclo_coeffs();
            for (size_t i = 1; i < cy.size(); ++i)
                if (cy[i] != 0) return false;
            out.push_back(Scalar::from_rat(q, cy.empty() ? BigRat(0) : cy[0]));
        }
        return true;
    };
    std::vector<Scalar> nc, dc;
    if (!rational_coeffs(f.num(), nc) || !rational_coeffs(f.den(), dc)) return f;
    auto q = FieldDescriptor::rational();
    return RatFun(UPoly(q, nc), UPoly(q, dc));
}

RatFun ratfun_embed(const RatFun& f, const FieldPtr& target) {
    if (f.field()->same(*target)) return f;
    return f.mapped(FieldEmbedding::make(f.field(), target));
}

}  // namespace ginv
