#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ginv/multipoly.hpp"
#include "ginv/ratfun.hpp"

#include <random>

using namespace ginv;

namespace {

UPoly up(const FieldPtr& f, std::vector<long> coeffs) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(Scalar::from_int(f, v));
    return UPoly(f, c);
}

MultiPoly mp_x(const FieldPtr& f, unsigned n, unsigned i) { return MultiPoly::variable(f, n, i); }

}  // namespace

TEST_CASE("multipoly arithmetic") {
    auto q = FieldDescriptor::rational();
    auto x = mp_x(q, 2, 0), y = mp_x(q, 2, 1);
    CHECK((x + y) == (y + x));
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).homogeneous_degree() == 1u);
    CHECK_FALSE((x * x + y).homogeneous_degree().has_value());

    auto f2 = FieldDescriptor::prime_field(2);
    auto x2 = mp_x(f2, 2, 0), y2 = mp_x(f2, 2, 1);
    auto sq = (x2 + y2) * (x2 + y2);
    CHECK(sq == x2 * x2 + y2 * y2);  // cross term vanishes in char 2

    auto c3 = FieldDescriptor::cyclotomic(3);
    CHECK_THROWS_AS(mp_x(q, 2, 0) + mp_x(c3, 2, 0), Error);
}

TEST_CASE("multipoly gcd examples") {
    auto q = FieldDescriptor::rational();
    auto x = mp_x(q, 2, 0), y = mp_x(q, 2, 1);
    CHECK(multipoly_gcd({x * x * y, x * y * y}) == x * y);
    CHECK(multipoly_gcd({x, y}) == MultiPoly::one(q, 2));
    // x^2 - y^2 and x^2 + 2xy + y^2 share the factor x + y
    auto two = MultiPoly::one(q, 2) * Scalar::from_int(q, 2);
    auto f = x * x - y * y;
    auto g = x * x + two * x * y + y * y;
    CHECK(multipoly_gcd(f, g) == x + y);
    CHECK_THROWS_AS(multipoly_gcd(f, MultiPoly::zero(q, 2)), Error);
    CHECK_THROWS_AS(multipoly_gcd(std::vector<MultiPoly>{}), Error);
}

TEST_CASE("multipoly gcd divides inputs on random structured sets") {
    auto q = FieldDescriptor::rational();
    std::mt19937_64 rng(4242);
    const unsigned n = 3;
    auto rand_factor = [&] {
        MultiPoly f = MultiPoly::zero(q, n);
        for (int t = 0; t < 2; ++t) {
            Expo e(n, 0);
            e[rng() % n] = static_cast<unsigned>(rng() % 2 + (t == 0 ? 1 : 0));
            long c = static_cast<long>(rng() % 5) - 2;
            if (t == 0 && c == 0) c = 1;
            f = f + MultiPoly::monomial(q, n, e, Scalar::from_int(q, c));
        }
        return f.is_zero() ? MultiPoly::one(q, n) : f;
    };
    for (int iter = 0; iter < 200; ++iter) {
        MultiPoly common = rand_factor();
        std::vector<MultiPoly> fs;
        for (int i = 0; i < 3; ++i) {
            MultiPoly f = common * rand_factor();
            if (!f.is_zero()) fs.push_back(f);
        }
        if (fs.empty()) continue;
        MultiPoly g = multipoly_gcd(fs);
        for (auto& f : fs) {
            auto qt = f.divide_exact(g);
            REQUIRE(qt.has_value());
            CHECK(*qt * g == f);
        }
        // any common divisor divides the gcd
        CHECK(g.divide_exact(common.monic()).has_value());
    }
}

TEST_CASE("rational function arithmetic") {
    auto q = FieldDescriptor::rational();
    RatFun one_minus_t_inv(up(q, {1}), up(q, {1, -1}));  // 1/(1-t)
    RatFun mt(up(q, {0, -1}), up(q, {1, -1}));           // -t/(1-t)
    CHECK(one_minus_t_inv + mt == RatFun::one(q));

    RatFun b(up(q, {1}), up(q, {1, 1}));  // 1/(1+t)
    CHECK(one_minus_t_inv * b == RatFun(up(q, {1}), up(q, {1, 0, -1})));

    // (1/2)[1/(1-t)^2 + 1/(1+t)^2] = (1+t^2)/(1-t^2)^2
    RatFun h1(up(q, {1}), up(q, {1, -1}) * up(q, {1, -1}));
    RatFun h2(up(q, {1}), up(q, {1, 1}) * up(q, {1, 1}));
    RatFun sum = (h1 + h2) * RatFun::constant(Scalar::from_rat(q, BigRat(1, 2)));
    RatFun expect(up(q, {1, 0, 1}), up(q, {1, 0, -1}) * up(q, {1, 0, -1}));
    CHECK(sum == expect);
    auto coeffs = sum.series_coefficients(6);
    std::vector<long> want{1, 0, 3, 0, 5, 0, 7};
    for (size_t i = 0; i < want.size(); ++i) CHECK(coeffs[i] == Scalar::from_int(q, want[i]));

    CHECK_THROWS_AS(sum / RatFun::zero(q), Error);
}

TEST_CASE("substitute inverse") {
    auto q = FieldDescriptor::rational();
    RatFun f(up(q, {1}), up(q, {1, -1}));  // 1/(1-t)
    // 1/(1-1/t) = t/(t-1) = -t/(1-t)
    CHECK(f.substitute_inverse() == RatFun(up(q, {0, 1}), up(q, {-1, 1})));

    RatFun t2 = RatFun::from_poly(up(q, {0, 0, 1}));
    CHECK(t2.substitute_inverse() == RatFun(up(q, {1}), up(q, {0, 0, 1})));

    RatFun g(up(q, {1, 0, 1}), up(q, {1, 0, -1}) * up(q, {1, 0, -1}));
    RatFun expect(up(q, {0, 0, 1, 0, 1}), up(q, {1, 0, -1}) * up(q, {1, 0, -1}));
    CHECK(g.substitute_inverse() == expect);
}

TEST_CASE("substitute inverse is an involution on random rational functions") {
    auto q = FieldDescriptor::rational();
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<long> nc(1 + rng() % 4), dc(1 + rng() % 4);
        for (auto& c : nc) c = static_cast<long>(rng() % 9) - 4;
        for (auto& c : dc) c = static_cast<long>(rng() % 9) - 4;
        UPoly n = up(q, nc), d = up(q, dc);
        if (n.is_zero() || d.is_zero()) continue;
        RatFun f(n, d);
        CHECK(f.substitute_inverse().substitute_inverse() == f);
    }
}

TEST_CASE("series of F*(1-t) is the first difference") {
    auto q = FieldDescriptor::rational();
    std::mt19937_64 rng(8);
    RatFun one_minus_t = RatFun::from_poly(up(q, {1, -1}));
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<long> nc(1 + rng() % 4), dc(1 + rng() % 4);
        for (auto& c : nc) c = static_cast<long>(rng() % 9) - 4;
        for (auto& c : dc) c = static_cast<long>(rng() % 9) - 4;
        dc[0] = 1 + static_cast<long>(rng() % 3);  // den(0) != 0
        UPoly n = up(q, nc), d = up(q, dc);
        if (n.is_zero()) continue;
        RatFun f(n, d);
        auto a = f.series_coefficients(8);
        auto b = (f * one_minus_t).series_coefficients(8);
        CHECK(b[0] == a[0]);
        for (unsigned k = 1; k <= 8; ++k) CHECK(b[k] == a[k] - a[k - 1]);
    }
}

TEST_CASE("evaluation and poles") {
    auto q = FieldDescriptor::rational();
    RatFun f(up(q, {1, 0, -1}), up(q, {1, -1}));  // (1-t^2)/(1-t) = 1+t
    CHECK(f.evaluate(Scalar::one(q)) == Scalar::from_int(q, 2));

    RatFun g(up(q, {1}), up(q, {1, -1}));
    try {
        g.evaluate(Scalar::one(q));
        FAIL("expected pole");
    } catch (const PoleError& e) {
        CHECK(e.order == 1);
    }

    // (-1)*t^{-1} at t=1 is -1
    RatFun h(up(q, {-1}), up(q, {0, 1}));
    CHECK(h.evaluate(Scalar::one(q)) == Scalar::from_int(q, -1));
    CHECK(h.degree() == -1);
}

TEST_CASE("series over cyclotomic coefficients") {
    auto c4 = FieldDescriptor::cyclotomic(4);
    Scalar i = Scalar::gen(c4);
    // 1/(1 - i t): coefficients i^k
    RatFun f(UPoly::constant(Scalar::one(c4)), UPoly(c4, {Scalar::one(c4), -i}));
    auto cs = f.series_coefficients(5);
    for (unsigned k = 0; k <= 5; ++k) CHECK(cs[k] == i.pow(k));
    CHECK(f.degree() == -1);
}
