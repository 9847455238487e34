#include "ginv/reflect.hpp"

namespace ginv {

const char* reflection_tag_name(ReflectionTag t) {
    switch (t) {
        case ReflectionTag::Identity: return "identity";
        case ReflectionTag::DiagonalizableReflection: return "diagonalizable-reflection";
        case ReflectionTag::Transvection: return "transvection";
        case ReflectionTag::NonReflection: return "non-reflection";
    }
    throw Error("unreachable");
}

ElementClassification classify_element(const Mat& g) {
    if (g.rows() != g.cols()) throw Error("classification of non-square matrix");
    if (g.det().is_zero()) throw Error("classification of singular matrix");
    const unsigned n = g.rows();
    Mat d = g - Mat::identity(g.field(), n);
    unsigned r = d.rank();
    ElementClassification c;
    c.fixed_dim = n - r;
    c.order = element_order(g);
    if (r == 0)
        c.tag = ReflectionTag::Identity;
    else if (r != 1)
        c.tag = ReflectionTag::NonReflection;
    else if ((d * d).rank() == 0)
        c.tag = ReflectionTag::Transvection;
    else
        c.tag = ReflectionTag::DiagonalizableReflection;
    return c;
}

namespace {

std::vector<unsigned> reflection_members(const FiniteMatrixGroup& g,
                                         std::vector<ElementClassification>* out_classes) {
    std::vector<unsigned> refl;
    for (unsigned i = 0; i < g.order(); ++i) {
        ElementClassification c = classify_element(g.element(i));
        if (c.tag == ReflectionTag::DiagonalizableReflection || c.tag == ReflectionTag::Transvection)
            refl.push_back(i);
        if (out_classes) out_classes->push_back(c);
    }
    return refl;
}

std::vector<unsigned> p_power_members(const FiniteMatrixGroup& g) {
    std::vector<unsigned> res;
    unsigned p = g.field()->characteristic();
    if (p == 0) return res;
    for (unsigned i = 0; i < g.order(); ++i) {
        unsigned o = g.element_order(i);
        if (o == 1) continue;
        while (o % p == 0) o /= p;
        if (o == 1) res.push_back(i);
    }
    return res;
}

}  // namespace

FiniteMatrixGroup reflection_subgroup(const FiniteMatrixGroup& g) {
    return g.generated_subgroup(reflection_members(g, nullptr));
}

FiniteMatrixGroup wtilde_subgroup(const FiniteMatrixGroup& g) {
    std::vector<unsigned> gens = reflection_members(g, nullptr);
    auto pel = p_power_members(g);
    gens.insert(gens.end(), pel.begin(), pel.end());
    return g.generated_subgroup(gens);
}

bool has_no_reflections(const FiniteMatrixGroup& g) { return reflection_members(g, nullptr).empty(); }

ReflectionReport reflection_report(const FiniteMatrixGroup& g) {
    std::vector<ElementClassification> classes;
    std::vector<unsigned> refl = reflection_members(g, &classes);
    std::vector<unsigned> pel = p_power_members(g);
    FiniteMatrixGroup w = g.generated_subgroup(refl);
    std::vector<unsigned> wt = refl;
    wt.insert(wt.end(), pel.begin(), pel.end());
    FiniteMatrixGroup wtilde = g.generated_subgroup(wt);
    unsigned long iw = g.order() / w.order();
    unsigned long iwt = g.order() / wtilde.order();
    bool nr = refl.empty();
    return ReflectionReport{std::move(classes), std::move(refl), std::move(pel),
                            nr,       std::move(w),     std::move(wtilde), iw, iwt};
}

}  // namespace ginv
