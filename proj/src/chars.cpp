#include "ginv/chars.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ginv {

LinearCharacter::LinearCharacter(std::shared_ptr<const FiniteAbelianGroup> ab, unsigned long m,
                                 std::vector<unsigned long> exponents)
    : ab_(std::move(ab)), m_(m), exps_(std::move(exponents)) {
    if (m_ < 1) throw Error("character root order must be >= 1");
    if (exps_.size() != ab_->invariant_factors.size())
        throw Error("character exponent vector has wrong length");
    for (size_t i = 0; i < exps_.size(); ++i) {
        exps_[i] %= m_;
        // zeta_m^{e} must have order dividing m_i: e * m_i = 0 mod m
        if ((exps_[i] * ab_->invariant_factors[i]) % m_ != 0)
            throw Error("character exponent incompatible with generator order");
    }
}

LinearCharacter LinearCharacter::trivial(const FiniteMatrixGroup& g, unsigned long m) {
    auto ab = g.abelianization_ptr();
    return LinearCharacter(ab, m, std::vector<unsigned long>(ab->invariant_factors.size(), 0));
}

bool LinearCharacter::is_trivial() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned long e) { return e == 0; });
}

unsigned long LinearCharacter::value_exponent(unsigned element_index) const {
    const auto& v = ab_->element_vectors.at(element_index);
    unsigned long e = 0;
    for (size_t i = 0; i < exps_.size(); ++i)
        e = (e + exps_[i] * static_cast<unsigned long>(v[i])) % m_;
    return e;
}

Scalar LinearCharacter::value(const FieldPtr& f, unsigned element_index) const {
    return root_of_unity(f, m_, static_cast<long>(value_exponent(element_index)));
}

unsigned long LinearCharacter::order() const {
    unsigned long o = 1;
    for (auto e : exps_)
        if (e != 0) o = std::lcm(o, m_ / std::gcd(m_, e));
    return o;
}

LinearCharacter LinearCharacter::operator*(const LinearCharacter& o) const {
    if (ab_ != o.ab_ || m_ != o.m_) throw Error("character product across different groups");
    std::vector<unsigned long> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = (exps_[i] + o.exps_[i]) % m_;
    return LinearCharacter(ab_, m_, std::move(e));
}

LinearCharacter LinearCharacter::inverse() const {
    std::vector<unsigned long> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = (m_ - exps_[i]) % m_;
    return LinearCharacter(ab_, m_, std::move(e));
}

LinearCharacter LinearCharacter::pow(long p) const {
    long r = p % static_cast<long>(m_);
    if (r < 0) r += static_cast<long>(m_);
    std::vector<unsigned long> e(exps_.size());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = (exps_[i] * static_cast<unsigned long>(r)) % m_;
    return LinearCharacter(ab_, m_, std::move(e));
}

bool LinearCharacter::operator==(const LinearCharacter& o) const {
    return m_ == o.m_ && exps_ == o.exps_;
}

bool LinearCharacter::operator<(const LinearCharacter& o) const {
    if (m_ != o.m_) return m_ < o.m_;
    return exps_ < o.exps_;
}

unsigned CharacterGroup::index_of(const LinearCharacter& c) const {
    for (unsigned i = 0; i < characters.size(); ++i)
        if (characters[i] == c) return i;
    throw Error("character not in group");
}

CharacterGroup character_group(const FiniteMatrixGroup& g, unsigned long m) {
    if (m < 1) throw Error("character root order must be >= 1");
    auto ab = g.abelianization_ptr();
    const auto& inv = ab->invariant_factors;
    CharacterGroup res;
    res.m = m;
    // generator i may map to any zeta_m^e with e a multiple of m / gcd(m, m_i)
    std::vector<unsigned long> step(inv.size()), count(inv.size());
    for (size_t i = 0; i < inv.size(); ++i) {
        unsigned long gc = std::gcd(m, inv[i]);
        step[i] = m / gc;
        count[i] = gc;
    }
    std::vector<unsigned long> idx(inv.size(), 0);
    while (true) {
        std::vector<unsigned long> e(inv.size());
        for (size_t i = 0; i < inv.size(); ++i) e[i] = idx[i] * step[i];
        res.characters.emplace_back(ab, m, std::move(e));
        size_t pos = inv.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < count[pos]) break;
            idx[pos] = 0;
            if (pos == 0) return res;
        }
        if (inv.empty()) return res;
    }
}

LinearCharacter restrict_character(const LinearCharacter& chi, const FiniteMatrixGroup& g,
                                   const FiniteMatrixGroup& h) {
    auto hab = h.abelianization_ptr();
    std::vector<unsigned long> e(hab->invariant_factors.size());
    for (size_t t = 0; t < e.size(); ++t) {
        unsigned in_g = g.index_of(h.element(hab->generator_elements[t]));
        e[t] = chi.value_exponent(in_g);
    }
    LinearCharacter r(hab, chi.m(), std::move(e));
    // consistency: r agrees with chi on all of H
    for (unsigned i = 0; i < h.order(); ++i)
        if (r.value_exponent(i) != chi.value_exponent(g.index_of(h.element(i))))
            throw Error("character restriction inconsistency (internal)");
    return r;
}

unsigned ClassGroupDescription::index_of(const LinearCharacter& c) const {
    for (unsigned i = 0; i < characters.size(); ++i)
        if (characters[i] == c) return i;
    throw Error("character not in class group");
}

ClassGroupDescription class_group(const FiniteMatrixGroup& g, const FiniteMatrixGroup& w) {
    unsigned long m = g.field()->root_capacity();
    CharacterGroup all = character_group(g, m);
    std::vector<unsigned> w_in_g = g.subgroup_indices(w);
    std::vector<LinearCharacter> kernel;
    for (const auto& chi : all.characters) {
        bool trivial_on_w = true;
        for (auto i : w_in_g)
            if (chi.value_exponent(i) != 0) {
                trivial_on_w = false;
                break;
            }
        if (trivial_on_w) kernel.push_back(chi);
    }
    auto lookup = [&](const LinearCharacter& c) -> unsigned {
        for (unsigned i = 0; i < kernel.size(); ++i)
            if (kernel[i] == c) return i;
        throw Error("class group not closed under product (internal)");
    };
    unsigned id = lookup(LinearCharacter::trivial(g, m));
    std::vector<unsigned> gens(kernel.size());
    std::iota(gens.begin(), gens.end(), 0u);
    auto mult = [&](unsigned a, unsigned b) { return lookup(kernel[a] * kernel[b]); };
    FiniteAbelianGroup st = abelian_structure(kernel.size(), id, gens, mult);
    return ClassGroupDescription{std::move(kernel), std::move(st)};
}

namespace {

/// exponent of a root of unity w.r.t. zeta_m: least e with value = zeta_m^e
unsigned long unity_dlog(const Scalar& v, unsigned long m) {
    const FieldPtr& f = v.field();
    Scalar prim = primitive_root_of_unity(f);
    unsigned long cap = f->root_capacity();
    if (m == 0 || cap % m != 0) throw Error("root order does not divide the field's root capacity");
    Scalar zm = prim.pow(static_cast<long>(cap / m));
    Scalar acc = Scalar::one(f);
    for (unsigned long e = 0; e < m; ++e) {
        if (acc == v) return e;
        acc = acc * zm;
    }
    throw Error("value " + v.str() + " is not in mu_" + std::to_string(m));
}

}  // namespace

LinearCharacter character_from_generator_values(const FiniteMatrixGroup& g,
                                                const std::vector<Scalar>& gen_values,
                                                unsigned long m) {
    if (gen_values.size() != g.generators().size())
        throw Error("one value per group generator required");
    std::vector<unsigned long> gexp;
    gexp.reserve(gen_values.size());
    for (const auto& v : gen_values) gexp.push_back(unity_dlog(v, m));
    // propagate over the Cayley graph; closure edges double as homomorphism checks
    std::vector<long> val(g.order(), -1);
    val[g.identity_index()] = 0;
    std::deque<unsigned> queue{g.identity_index()};
    std::vector<unsigned> gen_idx;
    for (const auto& gen : g.generators()) gen_idx.push_back(g.index_of(gen));
    while (!queue.empty()) {
        unsigned e = queue.front();
        queue.pop_front();
        for (size_t j = 0; j < gen_idx.size(); ++j) {
            unsigned f = g.product(e, gen_idx[j]);
            long w = static_cast<long>((static_cast<unsigned long>(val[e]) + gexp[j]) % m);
            if (val[f] < 0) {
                val[f] = w;
                queue.push_back(f);
            } else if (val[f] != w) {
                throw Error("generator values do not define a homomorphism into mu_m");
            }
        }
    }
    const auto& ab = g.abelianization();
    std::vector<unsigned long> e(ab.invariant_factors.size());
    for (size_t t = 0; t < e.size(); ++t)
        e[t] = static_cast<unsigned long>(val[ab.generator_elements[t]]);
    LinearCharacter chi(g.abelianization_ptr(), m, std::move(e));
    for (unsigned i = 0; i < g.order(); ++i)
        if (chi.value_exponent(i) != static_cast<unsigned long>(val[i]))
            throw Error("generator values do not factor through the abelianization");
    return chi;
}

LinearCharacter det_character(const FiniteMatrixGroup& g, unsigned long m) {
    if (m == 0) m = g.field()->root_capacity();
    std::vector<Scalar> dets;
    dets.reserve(g.generators().size());
    for (const auto& gen : g.generators()) dets.push_back(gen.det());
    return character_from_generator_values(g, dets, m);
}

std::vector<LinearCharacter> graded_det_characters(const FiniteMatrixGroup& g,
                                                   const std::vector<std::vector<Mat>>& actions) {
    std::vector<LinearCharacter> res;
    res.reserve(actions.size());
    unsigned long m = g.field()->root_capacity();
    for (const auto& act : actions) {
        if (act.size() != g.generators().size())
            throw Error("graded action needs one matrix per group generator");
        std::vector<Scalar> dets;
        dets.reserve(act.size());
        for (const auto& u : act) {
            if (u.rows() != u.cols() || (!act.empty() && u.rows() != act.front().rows()))
                throw Error("inconsistent graded action dimensions");
            dets.push_back(u.det());
        }
        res.push_back(character_from_generator_values(g, dets, m));
    }
    return res;
}

}  // namespace ginv
