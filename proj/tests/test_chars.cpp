#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ginv/chars.hpp"
#include "ginv/reflect.hpp"

#include <numeric>

using namespace ginv;

namespace {

Mat mi(const FieldPtr& f, unsigned n, std::vector<long> entries) {
    std::vector<Scalar> e;
    e.reserve(entries.size());
    for (long v : entries) e.push_back(Scalar::from_int(f, v));
    return Mat::from_entries(f, n, n, std::move(e));
}

Mat diag(const FieldPtr& f, std::vector<Scalar> d) {
    unsigned n = static_cast<unsigned>(d.size());
    Mat m(f, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = d[i];
    return m;
}

void check_group_axioms(const FiniteMatrixGroup& g, const CharacterGroup& cg) {
    // multiplicativity on all pairs of elements, closure under product/inverse
    for (const auto& chi : cg.characters) {
        for (unsigned a = 0; a < g.order(); ++a)
            for (unsigned b = 0; b < g.order(); ++b)
                CHECK((chi.value_exponent(a) + chi.value_exponent(b)) % cg.m ==
                      chi.value_exponent(g.product(a, b)));
        CHECK_NOTHROW(cg.index_of(chi.inverse()));
        for (const auto& psi : cg.characters) CHECK_NOTHROW(cg.index_of(chi * psi));
    }
    // order formula: prod gcd(m_i, m)
    unsigned long expect = 1;
    for (auto mi_ : g.abelianization().invariant_factors) expect *= std::gcd(mi_, cg.m);
    CHECK(cg.characters.size() == expect);
}

}  // namespace

TEST_CASE("character group enumeration") {
    auto q = FieldDescriptor::rational();
    auto c2 = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto cg = character_group(c2, 2);
    CHECK(cg.characters.size() == 2u);
    CHECK(cg.characters[0].is_trivial());
    CHECK_FALSE(cg.characters[1].is_trivial());
    CHECK(cg.characters[1].order() == 2u);
    check_group_axioms(c2, cg);

    auto c3f = FieldDescriptor::cyclotomic(3);
    Scalar z = Scalar::gen(c3f);
    auto c3 = FiniteMatrixGroup::enumerate(c3f, 2, {diag(c3f, {z, Scalar::one(c3f)})});
    CHECK(character_group(c3, 2).characters.size() == 1u);  // gcd(3,2) = 1
    auto cg3 = character_group(c3, c3f->root_capacity());   // mu_6
    CHECK(cg3.characters.size() == 3u);
    check_group_axioms(c3, cg3);

    auto f2 = FieldDescriptor::prime_field(2);
    auto gl2 = FiniteMatrixGroup::enumerate(f2, 2, {mi(f2, 2, {0, 1, 1, 0}), mi(f2, 2, {1, 1, 0, 1})});
    CHECK(character_group(gl2, 1).characters.size() == 1u);  // mu(F_2) trivial
    check_group_axioms(gl2, character_group(gl2, 1));

    auto c4f = FieldDescriptor::cyclotomic(4);
    Scalar i = Scalar::gen(c4f);
    Mat b = Mat::from_entries(c4f, 2, 2, {i, Scalar::zero(c4f), Scalar::zero(c4f), -i});
    auto q8 = FiniteMatrixGroup::enumerate(c4f, 2, {mi(c4f, 2, {0, -1, 1, 0}), b});
    auto cq8 = character_group(q8, 4);
    CHECK(cq8.characters.size() == 4u);  // Hom(C2 x C2, mu_4)
    check_group_axioms(q8, cq8);
}

TEST_CASE("character values as scalars") {
    auto q = FieldDescriptor::rational();
    auto c2 = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto cg = character_group(c2, 2);
    const auto& sgn = cg.characters[1];
    unsigned mi_idx = c2.index_of(mi(q, 2, {-1, 0, 0, -1}));
    CHECK(sgn.value(q, mi_idx) == Scalar::from_int(q, -1));
    CHECK(sgn.value(q, c2.identity_index()).is_one());
    CHECK(sgn.pow(2).is_trivial());
    CHECK(sgn.pow(-1) == sgn);
}

TEST_CASE("restriction") {
    auto q = FieldDescriptor::rational();
    auto c2 = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto cg = character_group(c2, 2);
    auto triv_sub = c2.generated_subgroup({});
    CHECK(restrict_character(cg.characters[1], c2, triv_sub).is_trivial());
    CHECK(restrict_character(cg.characters[0], c2, triv_sub).is_trivial());

    auto c3f = FieldDescriptor::cyclotomic(3);
    Scalar z = Scalar::gen(c3f);
    auto g3 = FiniteMatrixGroup::enumerate(c3f, 2, {diag(c3f, {z, Scalar::one(c3f)})});
    auto w = reflection_subgroup(g3);
    REQUIRE(w.order() == g3.order());
    auto det = det_character(g3);
    auto res = restrict_character(det, g3, w);
    CHECK_FALSE(res.is_trivial());
    CHECK(res.order() == 3u);
}

TEST_CASE("class group as kernel of restriction to W") {
    auto q = FieldDescriptor::rational();
    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto cl = class_group(pm, reflection_subgroup(pm));
    CHECK(cl.structure.invariant_factors == std::vector<unsigned long>{2});
    CHECK(cl.characters.size() == 2u);

    // reflection group: trivial class group
    auto s2 = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, 1, 1, 0})});
    auto cl2 = class_group(s2, reflection_subgroup(s2));
    CHECK(cl2.structure.invariant_factors.empty());
    CHECK(cl2.characters.size() == 1u);

    auto f3 = FieldDescriptor::prime_field(3);
    auto u = FiniteMatrixGroup::enumerate(f3, 2, {mi(f3, 2, {1, 1, 0, 1})});
    auto clu = class_group(u, reflection_subgroup(u));
    CHECK(clu.characters.size() == 1u);

    // C_4 over Q(zeta_4): W = 1, class group cyclic of order 4
    auto c4f = FieldDescriptor::cyclotomic(4);
    auto c4 = FiniteMatrixGroup::enumerate(c4f, 2, {mi(c4f, 2, {0, -1, 1, 0})});
    auto cl4 = class_group(c4, reflection_subgroup(c4));
    CHECK(reflection_subgroup(c4).order() == 1u);
    CHECK(cl4.structure.invariant_factors == std::vector<unsigned long>{4});
    // every member vanishes on every classified reflection (vacuous here), and
    // the kernel is product-closed
    for (const auto& a : cl4.characters)
        for (const auto& b : cl4.characters) CHECK_NOTHROW(cl4.index_of(a * b));
}

TEST_CASE("determinant character") {
    auto q = FieldDescriptor::rational();
    auto c4 = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, -1, 1, 0})});
    CHECK(det_character(c4).is_trivial());  // rotation has det 1

    auto refl = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, 1})});
    auto d = det_character(refl);
    CHECK_FALSE(d.is_trivial());
    CHECK(d.order() == 2u);
    CHECK(d.value(q, refl.index_of(mi(q, 2, {-1, 0, 0, 1}))) == Scalar::from_int(q, -1));

    auto c3f = FieldDescriptor::cyclotomic(3);
    Scalar z = Scalar::gen(c3f);
    auto g3 = FiniteMatrixGroup::enumerate(c3f, 2, {diag(c3f, {z, Scalar::one(c3f)})});
    CHECK(det_character(g3).order() == 3u);

    // det of a transvection is 1
    auto f3 = FieldDescriptor::prime_field(3);
    auto u = FiniteMatrixGroup::enumerate(f3, 2, {mi(f3, 2, {1, 1, 0, 1}), mi(f3, 2, {-1, 0, 0, -1})});
    auto du = det_character(u);
    for (unsigned i = 0; i < u.order(); ++i)
        if (classify_element(u.element(i)).tag == ReflectionTag::Transvection)
            CHECK(du.value_exponent(i) == 0u);
}

TEST_CASE("character from generator values") {
    auto q = FieldDescriptor::rational();
    auto c2 = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto chi = character_from_generator_values(c2, {Scalar::from_int(q, -1)}, 2);
    CHECK(chi.order() == 2u);
    // a generator of order 2 cannot map to a primitive 4th root
    auto c4f = FieldDescriptor::cyclotomic(4);
    auto pm4 = FiniteMatrixGroup::enumerate(c4f, 2, {mi(c4f, 2, {-1, 0, 0, -1})});
    CHECK_THROWS_AS(character_from_generator_values(pm4, {Scalar::gen(c4f)}, 4), Error);
}

TEST_CASE("graded determinant characters") {
    auto q = FieldDescriptor::rational();
    auto refl = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, 1})});
    // single graded piece = the defining action
    std::vector<std::vector<Mat>> acts{{refl.generators()[0]}};
    auto ds = graded_det_characters(refl, acts);
    REQUIRE(ds.size() == 1u);
    CHECK(ds[0] == det_character(refl));

    // trivial action on two graded pieces
    std::vector<std::vector<Mat>> triv{{Mat::identity(q, 1)}, {Mat::identity(q, 1)}};
    for (auto& d : graded_det_characters(refl, triv)) CHECK(d.is_trivial());
}
