#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ginv/reflect.hpp"

#include <random>

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

}  // namespace

TEST_CASE("element classification") {
    auto q = FieldDescriptor::rational();
    auto c = classify_element(Mat::identity(q, 2));
    CHECK(c.tag == ReflectionTag::Identity);
    CHECK(c.fixed_dim == 2u);
    CHECK(c.order == 1u);

    c = classify_element(mi(q, 2, {-1, 0, 0, 1}));
    CHECK(c.tag == ReflectionTag::DiagonalizableReflection);
    CHECK(c.fixed_dim == 1u);
    CHECK(c.order == 2u);

    c = classify_element(mi(q, 2, {-1, 0, 0, -1}));
    CHECK(c.tag == ReflectionTag::NonReflection);
    CHECK(c.fixed_dim == 0u);

    for (auto p : {2u, 3u, 5u}) {
        auto fp = FieldDescriptor::prime_field(p);
        auto t = classify_element(mi(fp, 2, {1, 1, 0, 1}));
        CHECK(t.tag == ReflectionTag::Transvection);
        CHECK(t.fixed_dim == 1u);
        CHECK(t.order == p);
    }

    auto c3 = FieldDescriptor::cyclotomic(3);
    Scalar z = Scalar::gen(c3);
    auto d = classify_element(diag(c3, {z, Scalar::one(c3)}));
    CHECK(d.tag == ReflectionTag::DiagonalizableReflection);
    CHECK(d.order == 3u);

    CHECK_THROWS_AS(classify_element(mi(q, 2, {1, 0, 0, 0})), Error);
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937_64 rng(7);
    auto q = FieldDescriptor::rational();
    std::vector<Mat> samples{mi(q, 3, {-1, 0, 0, 0, 1, 0, 0, 0, 1}),
                             mi(q, 3, {-1, 0, 0, 0, -1, 0, 0, 0, 1}),
                             mi(q, 3, {0, -1, 0, 1, 0, 0, 0, 0, 1}), Mat::identity(q, 3)};
    for (auto& g : samples) {
        auto base = classify_element(g);
        for (int t = 0; t < 10; ++t) {
            Mat h = Mat::identity(q, 3);
            for (int s = 0; s < 3; ++s) {
                unsigned a = rng() % 3, b = rng() % 3;
                if (a == b) continue;
                Mat el = Mat::identity(q, 3);
                el.at(a, b) = Scalar::from_int(q, static_cast<long>(rng() % 5) - 2);
                h = h * el;
            }
            auto conj = classify_element(h * g * h.inverse());
            CHECK(conj.tag == base.tag);
            CHECK(conj.fixed_dim == base.fixed_dim);
            CHECK(conj.order == base.order);
        }
    }
}

TEST_CASE("reflection subgroup") {
    auto q = FieldDescriptor::rational();
    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    CHECK(reflection_subgroup(pm).order() == 1u);
    CHECK(has_no_reflections(pm));

    auto c3 = FieldDescriptor::cyclotomic(3);
    Scalar z = Scalar::gen(c3);
    auto g3 = FiniteMatrixGroup::enumerate(c3, 2, {diag(c3, {z, Scalar::one(c3)})});
    CHECK(reflection_subgroup(g3).order() == 3u);
    CHECK_FALSE(has_no_reflections(g3));

    auto f2 = FieldDescriptor::prime_field(2);
    auto gl2 = FiniteMatrixGroup::enumerate(f2, 2, {mi(f2, 2, {0, 1, 1, 0}), mi(f2, 2, {1, 1, 0, 1})});
    auto w = reflection_subgroup(gl2);
    CHECK(w.order() == gl2.order());

    auto s2 = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, 1, 1, 0})});
    CHECK_FALSE(has_no_reflections(s2));
    CHECK(reflection_subgroup(s2).order() == 2u);
}

TEST_CASE("wtilde subgroup") {
    auto q = FieldDescriptor::rational();
    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    CHECK(wtilde_subgroup(pm).order() == reflection_subgroup(pm).order());

    auto f3 = FieldDescriptor::prime_field(3);
    auto u = FiniteMatrixGroup::enumerate(f3, 2, {mi(f3, 2, {1, 1, 0, 1})});
    CHECK(wtilde_subgroup(u).order() == 3u);

    auto f7 = FieldDescriptor::prime_field(7);
    auto pm7 = FiniteMatrixGroup::enumerate(f7, 2, {mi(f7, 2, {-1, 0, 0, -1})});
    CHECK(wtilde_subgroup(pm7).order() == 1u);
    CHECK(has_no_reflections(pm7));
}

TEST_CASE("NR for diag(a, a^{-1}) over F_p") {
    auto f7 = FieldDescriptor::prime_field(7);
    // 3 has order 6 mod 7
    auto g = FiniteMatrixGroup::enumerate(
        f7, 2, {diag(f7, {Scalar::from_int(f7, 3), Scalar::from_int(f7, 5)})});
    CHECK(g.order() == 6u);
    CHECK(has_no_reflections(g));
    CHECK(reflection_subgroup(g).order() == 1u);
}

TEST_CASE("reflection report invariants") {
    auto run = [](const FiniteMatrixGroup& g) {
        auto r = reflection_report(g);
        REQUIRE(r.classes.size() == g.order());
        CHECK(g.is_normal_subgroup(r.w));
        CHECK(g.is_normal_subgroup(r.wtilde));
        CHECK(r.w.order() * r.index_w == g.order());
        CHECK(r.wtilde.order() * r.index_wtilde == g.order());
        CHECK(r.wtilde.order() % r.w.order() == 0u);
        CHECK(r.no_reflections == has_no_reflections(g));
        CHECK(r.no_reflections == (r.w.order() == 1u));
        unsigned p = g.field()->characteristic();
        if (p > 0)
            CHECK(r.index_wtilde % p != 0u);
        else
            CHECK(r.wtilde.order() == r.w.order());
    };
    auto q = FieldDescriptor::rational();
    run(FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})}));
    run(FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, -1, 1, 0})}));
    run(FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, 1, 1, 0}), mi(q, 2, {-1, 0, 0, -1})}));
    auto f2 = FieldDescriptor::prime_field(2);
    run(FiniteMatrixGroup::enumerate(f2, 2, {mi(f2, 2, {0, 1, 1, 0}), mi(f2, 2, {1, 1, 0, 1})}));
    auto f3 = FieldDescriptor::prime_field(3);
    run(FiniteMatrixGroup::enumerate(f3, 2, {mi(f3, 2, {1, 1, 0, 1}), mi(f3, 2, {-1, 0, 0, -1})}));
    auto f7 = FieldDescriptor::prime_field(7);
    run(FiniteMatrixGroup::enumerate(f7, 2, {diag(f7, {Scalar::from_int(f7, 3), Scalar::from_int(f7, 5)})}));
}
