#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ginv/engine.hpp"

#include <cstdio>
#include <fstream>

using namespace ginv;

namespace {

Mat mi(const FieldPtr& f, unsigned n, std::vector<long> entries) {
    std::vector<Scalar> e;
    e.reserve(entries.size());
    for (long v : entries) e.push_back(Scalar::from_int(f, v));
    return Mat::from_entries(f, n, n, std::move(e));
}

GroupSpec spec_of(const char* text) { return parse_group_spec(text); }

}  // namespace

TEST_CASE("spec parsing") {
    auto s = spec_of(R"({"field":{"kind":"rational"},"dim":2,"generators":[[0,-1,1,0]]})");
    CHECK(s.field->is_rational());
    CHECK(s.dim == 2u);
    REQUIRE(s.generators.size() == 1u);
    CHECK(s.generators[0].at(0, 1) == Scalar::from_int(s.field, -1));
    CHECK(enumerate_spec(s).order() == 4u);

    auto c = spec_of(R"({"field":{"kind":"cyclotomic","n":3},"dim":1,"generators":[["g^2"]]})");
    CHECK(c.generators[0].at(0, 0) == Scalar::gen(c.field).pow(2));

    auto f = spec_of(
        R"({"field":{"kind":"finite","p":3,"modulus":[1,0,1]},"dim":1,"generators":[["-g"]],"cap":50})");
    CHECK(f.field->field_order() == 9u);
    CHECK(f.options.cap == 50u);
    CHECK(f.generators[0].at(0, 0) == -Scalar::gen(f.field));

    auto r = spec_of(R"({"field":{"kind":"rational"},"dim":1,"generators":[["-1/2"]]})");
    CHECK(r.generators[0].at(0, 0) == Scalar::from_rat(r.field, BigRat(-1, 2)));
}

TEST_CASE("spec parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_group_spec("not json"), Error);
    CHECK_THROWS_AS(spec_of(R"({"field":{"kind":"septic"},"dim":1,"generators":[]})"), Error);
    CHECK_THROWS_AS(spec_of(R"({"field":{"kind":"rational"},"dim":2,"generators":[[1,0,0]]})"),
                    Error);
    CHECK_THROWS_AS(spec_of(R"({"field":{"kind":"rational"},"dim":1,"generators":[["x+1"]]})"),
                    Error);
    CHECK_THROWS_AS(spec_of(R"({"field":{"kind":"rational"},"dim":1,"generators":[["1/0"]]})"),
                    Error);
    // generator of Q is not defined
    CHECK_THROWS_AS(spec_of(R"({"field":{"kind":"rational"},"dim":1,"generators":[["g"]]})"), Error);
    CHECK_THROWS_AS(load_group_spec("/nonexistent/spec.json"), Error);
}

TEST_CASE("polynomiality probe") {
    auto q = FieldDescriptor::rational();
    auto triv = FiniteMatrixGroup::enumerate(q, 2, {});
    auto pt = probe_polynomial_structure(triv, 4);
    CHECK(pt.status == ProbeStatus::Polynomial);
    CHECK(pt.degrees == std::vector<unsigned>{1, 1});

    auto f2 = FieldDescriptor::prime_field(2);
    auto u2 = FiniteMatrixGroup::enumerate(f2, 2, {mi(f2, 2, {1, 1, 0, 1})});
    auto p2 = probe_polynomial_structure(u2, 6);
    CHECK(p2.status == ProbeStatus::Polynomial);
    CHECK(p2.degrees == std::vector<unsigned>{1, 2});
    // the degree-1 generator is x (the fixed line), the degree-2 one contains xy
    CHECK(p2.generators[0].monic() == MultiPoly::variable(f2, 2, 0));

    auto swap = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, 1, 1, 0})});
    auto ps = probe_polynomial_structure(swap, 6);
    CHECK(ps.status == ProbeStatus::Polynomial);
    CHECK(ps.degrees == std::vector<unsigned>{1, 2});

    // {+-I}: generated by the three quadrics with one relation
    auto pm = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {-1, 0, 0, -1})});
    auto pp = probe_polynomial_structure(pm, 6);
    CHECK(pp.status == ProbeStatus::NotPolynomial);

    // diag(zeta_3, zeta_3^2): x^3, y^3, xy -- three generators in dimension two
    auto c3f = FieldDescriptor::cyclotomic(3);
    Scalar z = Scalar::gen(c3f);
    Mat d3(c3f, 2, 2);
    d3.at(0, 0) = z;
    d3.at(1, 1) = z * z;
    auto g3 = FiniteMatrixGroup::enumerate(c3f, 2, {d3});
    CHECK(probe_polynomial_structure(g3, 6).status == ProbeStatus::NotPolynomial);

    // dims agree with the free count for a genuine polynomial ring
    for (unsigned d = 0; d <= 6; ++d) {
        unsigned long expect = 0;
        for (unsigned a = 0; 1 * a <= d; ++a)
            if ((d - a) % 2 == 0) ++expect;
        CHECK(p2.dims[d] == expect);
    }
}

TEST_CASE("induced graded actions") {
    // h = <transvection> over F_3, normalized by -I
    auto f3 = FieldDescriptor::prime_field(3);
    auto h = FiniteMatrixGroup::enumerate(f3, 2, {mi(f3, 2, {1, 1, 0, 1})});
    auto probe = probe_polynomial_structure(h, 6);
    REQUIRE(probe.status == ProbeStatus::Polynomial);
    REQUIRE(probe.degrees == std::vector<unsigned>{1, 3});

    Mat minus = mi(f3, 2, {-1, 0, 0, -1});
    auto acts = induced_action_of(minus, h, probe);
    REQUIRE(acts.size() == 2u);
    CHECK(acts[0].at(0, 0) == Scalar::from_int(f3, -1));
    CHECK(acts[1].at(0, 0) == Scalar::from_int(f3, -1));

    // an element of h itself acts trivially on the generator quotients
    auto self = induced_action_of(h.generators()[0], h, probe);
    for (const auto& u : self) CHECK(u == Mat::identity(f3, 1));

    auto g = FiniteMatrixGroup::enumerate(f3, 2, {mi(f3, 2, {1, 1, 0, 1}), minus});
    auto ga = induced_generator_action(g, h, probe);
    CHECK(ga.degrees == std::vector<unsigned>{1, 3});
    REQUIRE(ga.actions.size() == 2u);
    CHECK(ga.actions[0].size() == 2u);

    // a matrix that does not normalize the invariants of h is rejected
    auto q = FieldDescriptor::rational();
    auto swap = FiniteMatrixGroup::enumerate(q, 2, {mi(q, 2, {0, 1, 1, 0})});
    auto sp = probe_polynomial_structure(swap, 6);
    CHECK_THROWS_AS(induced_action_of(mi(q, 2, {1, 1, 0, 1}), swap, sp), Error);
}

TEST_CASE("quotient character cross-check against the duality limit") {
    // g = <transvection, -I> over F_3; S = invariants of h = <transvection>
    auto f3 = FieldDescriptor::prime_field(3);
    auto h = FiniteMatrixGroup::enumerate(f3, 2, {mi(f3, 2, {1, 1, 0, 1})});
    auto probe = probe_polynomial_structure(h, 6);
    REQUIRE(probe.status == ProbeStatus::Polynomial);
    auto g = FiniteMatrixGroup::enumerate(f3, 2, {mi(f3, 2, {1, 1, 0, 1}), mi(f3, 2, {-1, 0, 0, -1})});
    auto ga = induced_generator_action(g, h, probe);
    auto dets = graded_det_characters(g, ga.actions);
    LinearCharacter lam = LinearCharacter::trivial(g, g.field()->root_capacity());
    for (const auto& d : dets) lam = lam * d.inverse();

    // the same character through the series duality of S, per coset representative
    int a = 0;
    for (unsigned d : ga.degrees) a -= static_cast<int>(d);
    for (unsigned i = 0; i < g.order(); ++i) {
        if (g.field()->characteristic() &&
            g.element_order(i) % g.field()->characteristic() == 0)
            continue;
        std::vector<Mat> pieces, pieces_inv;
        auto mm = induced_action_of(g.element(i), h, probe);
        auto mmi = induced_action_of(g.element(g.inverse(i)), h, probe);
        auto ctx = lift_context_for_group(g);
        RatFun hg = graded_poly_series_in(mm, ga.degrees, ctx);
        RatFun hginv = graded_poly_series_in(mmi, ga.degrees, ctx);
        Scalar lhat = lambda_via_duality(hg, hginv, ga.degrees.size(), a);
        CHECK(lhat == lam.value(ctx.coeff, i));
    }
}

TEST_CASE("verdict regression") {
    auto v = [](const char* text) { return quasi_gorenstein_verdict(spec_of(text)); };

    auto r1 = v(R"({"field":{"kind":"rational"},"dim":2,"generators":[[-1,0,0,-1]]})");
    CHECK(r1.verdict == Verdict::Yes);
    CHECK(r1.rule == "no-reflection");

    auto r2 = v(R"({"field":{"kind":"finite","p":7},"dim":2,"generators":[[3,0,0,5]]})");
    CHECK(r2.verdict == Verdict::Yes);  // det = 15 = 1 in F_7
    CHECK(r2.rule == "no-reflection");

    auto r3 = v(R"({"field":{"kind":"rational"},"dim":2,"generators":[[-1,0,0,1]]})");
    CHECK(r3.verdict == Verdict::Yes);
    CHECK(r3.rule == "quotient-character");
    REQUIRE(r3.probe_ran);
    CHECK(r3.probe.status == ProbeStatus::Polynomial);

    auto r4 = v(R"({"field":{"kind":"finite","p":2},"dim":2,"generators":[[1,1,0,1]]})");
    CHECK(r4.verdict == Verdict::Yes);
    CHECK(r4.probe.degrees == std::vector<unsigned>{1, 2});

    auto r5 = v(R"({"field":{"kind":"finite","p":3},"dim":2,"generators":[[1,1,0,1]]})");
    CHECK(r5.verdict == Verdict::Yes);
    CHECK(r5.probe.degrees == std::vector<unsigned>{1, 3});

    auto r6 = v(R"({"field":{"kind":"cyclotomic","n":3},"dim":2,"generators":[["g",0,0,"g"]]})");
    CHECK(r6.verdict == Verdict::No);
    CHECK(r6.rule == "no-reflection");
    CHECK(r6.class_group_desc.structure.invariant_factors == std::vector<unsigned long>{3});
}

TEST_CASE("reports are deterministic") {
    const char* text = R"({"field":{"kind":"cyclotomic","n":4},"dim":2,"generators":[[0,-1,1,0]]})";
    auto a = report_json(quasi_gorenstein_verdict(spec_of(text)));
    auto b = report_json(quasi_gorenstein_verdict(spec_of(text)));
    CHECK(a == b);
    CHECK(!a.empty());
    CHECK(report_text(quasi_gorenstein_verdict(spec_of(text))) ==
          report_text(quasi_gorenstein_verdict(spec_of(text))));
}

TEST_CASE("command line round trip") {
    std::string spec_path = "test_engine_spec.json";
    std::string out_path = "test_engine_out.json";
    {
        std::ofstream f(spec_path);
        f << R"({"field":{"kind":"rational"},"dim":2,"generators":[[0,1,1,0]]})";
    }
    std::vector<std::string> args = {"ginv", "analyze", spec_path, "--json", "--out", out_path};
    std::vector<char*> argv;
    for (auto& s : args) argv.push_back(s.data());
    CHECK(run_cli(static_cast<int>(argv.size()), argv.data()) == 0);
    std::ifstream in(out_path);
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("\"status\": \"yes\"") != std::string::npos);

    std::vector<std::string> bad = {"ginv", "analyze", "no_such_file.json"};
    std::vector<char*> bargv;
    for (auto& s : bad) bargv.push_back(s.data());
    CHECK(run_cli(static_cast<int>(bargv.size()), bargv.data()) == 1);

    std::remove(spec_path.c_str());
    std::remove(out_path.c_str());
}
