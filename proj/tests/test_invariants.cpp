#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ginv/invariants.hpp"
#include "ginv/reflect.hpp"
#include "ginv/series.hpp"

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

MultiPoly var(const FieldPtr& f, unsigned n, unsigned i) { return MultiPoly::variable(f, n, i); }

// g(f) = chi(g) f for every group element, not just generators
void check_eigen(const FiniteMatrixGroup& g, const LinearCharacter* chi, const MultiPoly& f) {
    for (unsigned i = 0; i < g.order(); ++i) {
        MultiPoly img = group_action(g.element(i), f);
        Scalar lam = chi ? chi->value(g.field(), i) : Scalar::one(g.field());
        CHECK(img == f * lam);
    }
}

}  // namespace

TEST_CASE("group action on polynomials") {
    auto q = FieldDescriptor::rational();
    auto x = var(q, 2, 0), y = var(q, 2, 1);
    MultiPoly f = x * x * y + y;
    CHECK(group_action(Mat::identity(q, 2), f) == f);

    // diag(-1,1): x -> -x, so x^2 y is fixed
    CHECK(group_action(mi(q, 2, {-1, 0, 0, 1}), x * x * y) == x * x * y);
    CHECK(group_action(mi(q, 2, {-1, 0, 0, 1}), x * y) == -(x * y));

    // transvection over F_2: y -> x + y, so xy -> x^2 + xy
    auto f2 = FieldDescriptor::prime_field(2);
    auto x2 = var(f2, 2, 0), y2 = var(f2, 2, 1);
    CHECK(group_action(mi(f2, 2, {1, 1, 0, 1}), x2 * y2) == x2 * x2 + x2 * y2);

    CHECK_THROWS_AS(group_action(Mat::identity(q, 3), f), Error);
}

TEST_CASE("invariants of degree") {
    auto q = FieldDescriptor::rational();
    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    CHECK(invariants_of_degree(pm, 1).basis.empty());
    auto b2 = invariants_of_degree(pm, 2);
    CHECK(b2.basis.size() == 3u);
    for (const auto& f : b2.basis) check_eigen(pm, nullptr, f);

    auto f2 = FieldDescriptor::prime_field(2);
    auto u = FiniteMatrixGroup::enumerate(f2, 2, {mi(f2, 2, {1, 1, 0, 1})});
    auto ub = invariants_of_degree(u, 2);
    CHECK(ub.basis.size() == 2u);
    for (const auto& f : ub.basis) check_eigen(u, nullptr, f);

    // trivial group: everything is invariant
    auto triv = FiniteMatrixGroup::enumerate(q, 2, {});
    CHECK(invariants_of_degree(triv, 3).basis.size() == 4u);
}

TEST_CASE("semi-invariants of degree") {
    auto q = FieldDescriptor::rational();
    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto cg = character_group(pm, 2);
    const auto& sgn = cg.characters[1];
    CHECK(semi_invariants_of_degree(pm, cg.characters[0], 2).basis.size() == 3u);
    auto s1 = semi_invariants_of_degree(pm, sgn, 1);
    CHECK(s1.basis.size() == 2u);
    for (const auto& f : s1.basis) check_eigen(pm, &sgn, f);

    auto refl = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, 1})});
    auto cgr = character_group(refl, 2);
    auto r1 = semi_invariants_of_degree(refl, cgr.characters[1], 1);
    REQUIRE(r1.basis.size() == 1u);
    CHECK(r1.basis[0].monic() == var(q, 2, 0));  // only x changes sign
    for (const auto& f : r1.basis) check_eigen(refl, &cgr.characters[1], f);
}

TEST_CASE("products of semi-invariants multiply characters") {
    auto c3f = FieldDescriptor::cyclotomic(3);
    Scalar z = Scalar::gen(c3f);
    auto g = FiniteMatrixGroup::enumerate(c3f, 2, {diag(c3f, {z, z * z})});
    auto cg = character_group(g, 6);
    for (const auto& chi : cg.characters)
        for (const auto& psi : cg.characters) {
            auto a = semi_invariants_of_degree(g, chi, 1);
            auto b = semi_invariants_of_degree(g, psi, 2);
            LinearCharacter prod = chi * psi;
            for (const auto& fa : a.basis)
                for (const auto& fb : b.basis) check_eigen(g, &prod, fa * fb);
        }
}

TEST_CASE("dimension oracle: isotypic series coefficients") {
    auto q = FieldDescriptor::rational();
    auto c4 = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, -1, 1, 0})});
    auto cg = character_group(c4, 2);
    for (const auto& chi : cg.characters) {
        auto h = isotypic_average(c4, chi);
        auto cs = h.series_coefficients(8);
        for (unsigned d = 0; d <= 8; ++d) {
            auto basis = semi_invariants_of_degree(c4, chi, d);
            CHECK(cs[d] == Scalar::from_int(q, static_cast<long>(basis.basis.size())));
        }
    }
    auto f7 = FieldDescriptor::prime_field(7);
    auto g7 = FiniteMatrixGroup::enumerate(f7, 2, {diag(f7, {Scalar::from_int(f7, 3), Scalar::from_int(f7, 5)})});
    auto cg7 = character_group(g7, 6);
    for (const auto& chi : {cg7.characters[0], cg7.characters[1], cg7.characters[3]}) {
        auto cs = isotypic_average(g7, chi).series_coefficients(6);
        for (unsigned d = 0; d <= 6; ++d)
            CHECK(cs[d] == Scalar::from_int(q, static_cast<long>(
                               semi_invariants_of_degree(g7, chi, d).basis.size())));
    }
}

TEST_CASE("reynolds operator") {
    auto q = FieldDescriptor::rational();
    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto x = var(q, 2, 0), y = var(q, 2, 1);
    CHECK(reynolds(x, pm).is_zero());
    CHECK(reynolds(x * y, pm) == x * y);
    CHECK(reynolds(reynolds(x * x + x, pm), pm) == reynolds(x * x + x, pm));

    auto c3f = FieldDescriptor::cyclotomic(3);
    Scalar z = Scalar::gen(c3f);
    auto g3 = FiniteMatrixGroup::enumerate(c3f, 2, {diag(c3f, {z, z * z})});
    CHECK(reynolds(var(c3f, 2, 0) * var(c3f, 2, 0), g3).is_zero());

    auto f2 = FieldDescriptor::prime_field(2);
    auto u = FiniteMatrixGroup::enumerate(f2, 2, {mi(f2, 2, {1, 1, 0, 1})});
    CHECK_THROWS_AS(reynolds(var(f2, 2, 0), u), Error);
}

TEST_CASE("twisted projection") {
    auto q = FieldDescriptor::rational();
    auto refl = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, 1})});
    auto cg = character_group(refl, 2);
    const auto& sgn = cg.characters[1];
    auto x = var(q, 2, 0), y = var(q, 2, 1);
    CHECK(twisted_projection(y, refl, sgn).is_zero());
    CHECK(twisted_projection(x + y, refl, sgn) == x);
    CHECK(twisted_projection(x, refl, sgn) == x);
    // idempotent, lands in the eigenspace
    auto p = twisted_projection(x * x * y + x * y, refl, sgn);
    CHECK(twisted_projection(p, refl, sgn) == p);
    check_eigen(refl, &sgn, p);
}

TEST_CASE("d_chi and the class of the semi-invariant module") {
    auto q = FieldDescriptor::rational();
    auto refl = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, 1})});
    auto cgr = character_group(refl, 2);
    auto t = dchi_estimate(refl, cgr.characters[0], 4);
    REQUIRE(t.conclusive);
    CHECK(t.dchi.is_constant());
    CHECK(t.mu.is_trivial());
    CHECK(t.free_module);

    auto s = dchi_estimate(refl, cgr.characters[1], 4);
    REQUIRE(s.conclusive);
    CHECK(s.dchi.monic() == var(q, 2, 0));  // d_chi = x
    CHECK(s.mu == cgr.characters[1]);
    CHECK(s.free_module);  // A_sign = x * invariants

    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto cgp = character_group(pm, 2);
    auto n = dchi_estimate(pm, cgp.characters[1], 4);
    REQUIRE(n.conclusive);
    CHECK(n.dchi.is_constant());  // gcd(x, y) = 1
    CHECK(n.mu.is_trivial());
    CHECK_FALSE(n.free_module);
    CHECK(n.cls == cgp.characters[1].inverse());
    // d_chi divides every spanning polynomial
    for (const auto& f : s.spanning) CHECK(f.divide_exact(s.dchi).has_value());
}

TEST_CASE("transversal of ideal classes") {
    auto q = FieldDescriptor::rational();
    auto refl = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, 1, 1, 0})});
    auto tr = transversal_check(refl, reflection_subgroup(refl), 4);
    REQUIRE(tr.conclusive);
    CHECK(tr.injective);
    CHECK(tr.per_character.size() == 1u);

    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto tr2 = transversal_check(pm, reflection_subgroup(pm), 4);
    REQUIRE(tr2.conclusive);
    CHECK(tr2.injective);
    CHECK(tr2.per_character.size() == 2u);

    // C_4 over Q(zeta_4): four characters, four distinct classes
    auto c4f = FieldDescriptor::cyclotomic(4);
    auto c4 = FiniteMatrixGroup::enumerate(c4f, 2, {mi(c4f, 2, {0, -1, 1, 0})});
    auto tr4 = transversal_check(c4, reflection_subgroup(c4), 5);
    REQUIRE(tr4.conclusive);
    CHECK(tr4.per_character.size() == 4u);
    CHECK(tr4.injective);
}
