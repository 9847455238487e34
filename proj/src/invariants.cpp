#include "ginv/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ginv {

MultiPoly group_action(const Mat& g, const MultiPoly& f) {
    if (g.rows() != g.cols() || g.rows() != f.nvars()) throw Error("action dimension mismatch");
    return f.linear_substitute(g);
}

std::vector<Expo> monomials_of_degree(unsigned n, unsigned d) {
    std::vector<Expo> out;
    Expo e(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
        if (pos + 1 == n) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            e[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(0, d);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

namespace {

GradedBasis eigenbasis_of_degree(const FiniteMatrixGroup& g, const LinearCharacter* chi,
                                 unsigned d) {
    const FieldPtr& f = g.field();
    const unsigned n = g.dim();
    auto mons = monomials_of_degree(n, d);
    const unsigned dim = static_cast<unsigned>(mons.size());
    std::map<Expo, unsigned, GrlexLess> pos;
    for (unsigned i = 0; i < dim; ++i) pos.emplace(mons[i], i);

    const auto& gens = g.generators();
    GradedBasis res;
    res.degree = d;
    if (gens.empty()) {
        bool keep = !chi || chi->is_trivial();
        if (keep)
            for (auto& e : mons) res.basis.push_back(MultiPoly::monomial(f, n, e, Scalar::one(f)));
        return res;
    }
    // stack (action(gen) - chi(gen) I) over all generators, kernel = eigenspace
    Mat sys(f, static_cast<unsigned>(gens.size()) * dim, dim);
    for (unsigned gi = 0; gi < gens.size(); ++gi) {
        Scalar lam = chi ? chi->value(f, g.index_of(gens[gi])) : Scalar::one(f);
        for (unsigned j = 0; j < dim; ++j) {
            MultiPoly img = group_action(gens[gi], MultiPoly::monomial(f, n, mons[j], Scalar::one(f)));
            for (const auto& [e, c] : img.terms()) sys.at(gi * dim + pos.at(e), j) = c;
            sys.at(gi * dim + j, j) = sys.at(gi * dim + j, j) - lam;
        }
    }
    for (const auto& v : sys.kernel()) {
        MultiPoly p = MultiPoly::zero(f, n);
        for (unsigned j = 0; j < dim; ++j)
            if (!v[j].is_zero()) p = p + MultiPoly::monomial(f, n, mons[j], v[j]);
        res.basis.push_back(std::move(p));
    }
    return res;
}

Scalar inv_order_scalar(const FiniteMatrixGroup& g) {
    const FieldPtr& f = g.field();
    Scalar o = Scalar::from_int(f, static_cast<long>(g.order()));
    if (o.is_zero()) throw Error("group order vanishes in the coefficient field");
    return o.inverse();
}

}  // namespace

GradedBasis invariants_of_degree(const FiniteMatrixGroup& g, unsigned d) {
    return eigenbasis_of_degree(g, nullptr, d);
}

GradedBasis semi_invariants_of_degree(const FiniteMatrixGroup& g, const LinearCharacter& chi,
                                      unsigned d) {
    return eigenbasis_of_degree(g, &chi, d);
}

MultiPoly reynolds(const MultiPoly& f, const FiniteMatrixGroup& g) {
    Scalar w = inv_order_scalar(g);
    MultiPoly acc = MultiPoly::zero(f.field(), f.nvars());
    for (const auto& m : g.elements()) acc = acc + group_action(m, f);
    return acc * w;
}

MultiPoly twisted_projection(const MultiPoly& f, const FiniteMatrixGroup& g,
                             const LinearCharacter& chi) {
    Scalar w = inv_order_scalar(g);
    MultiPoly acc = MultiPoly::zero(f.field(), f.nvars());
    for (unsigned i = 0; i < g.order(); ++i) {
        Scalar v = chi.value(g.field(), i);
        acc = acc + group_action(g.element(g.inverse(i)), f) * v;
    }
    return acc * w;
}

SemiInvariantSummary dchi_estimate(const FiniteMatrixGroup& g, const LinearCharacter& chi,
                                   unsigned D) {
    std::vector<MultiPoly> spanning;
    for (unsigned d = 0; d <= D; ++d) {
        auto basis = semi_invariants_of_degree(g, chi, d);
        for (auto& p : basis.basis) spanning.push_back(std::move(p));
    }
    unsigned long m = g.field()->root_capacity();
    LinearCharacter triv = LinearCharacter::trivial(g, m);
    if (spanning.empty())
        return SemiInvariantSummary{chi,  D,    false, {}, MultiPoly::zero(g.field(), g.dim()),
                                    triv, triv, false};
    MultiPoly dchi = multipoly_gcd(spanning);
    // character of dchi: each generator scales it by a scalar
    std::vector<Scalar> vals;
    for (const auto& gen : g.generators()) {
        MultiPoly img = group_action(gen, dchi);
        auto ratio = img.divide_exact(dchi);
        if (!ratio || !ratio->is_constant())
            throw Error("gcd of semi-invariants is not semi-invariant (internal)");
        vals.push_back(ratio->is_zero() ? Scalar::zero(g.field()) : ratio->leading_term().second);
    }
    LinearCharacter mu = character_from_generator_values(g, vals, m);
    LinearCharacter cls = chi.inverse() * mu;
    bool free_mod = cls.is_trivial();
    return SemiInvariantSummary{chi, D, true, std::move(spanning), std::move(dchi),
                                std::move(mu), std::move(cls), free_mod};
}

TransversalReport transversal_check(const FiniteMatrixGroup& g, const FiniteMatrixGroup& w,
                                    unsigned D) {
    ClassGroupDescription cg = class_group(g, w);
    TransversalReport rep;
    rep.conclusive = true;
    for (const auto& chi : cg.characters) {
        auto s = dchi_estimate(g, chi, D);
        if (!s.conclusive) rep.conclusive = false;
        rep.class_index.push_back(s.conclusive ? cg.index_of(s.cls)
                                               : static_cast<unsigned>(cg.characters.size()));
        rep.per_character.push_back(std::move(s));
    }
    if (rep.conclusive) {
        std::set<unsigned> seen(rep.class_index.begin(), rep.class_index.end());
        rep.injective = seen.size() == rep.class_index.size();
    }
    return rep;
}

}  // namespace ginv
