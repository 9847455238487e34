#include "ginv/engine.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace ginv {

using ordered_json = nlohmann::ordered_json;

// ---------- spec parsing ----------

Scalar scalar_from_string(const FieldPtr& f, const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw Error("empty scalar literal");
    bool neg = false;
    if (s[0] == '-') {
        neg = true;
        s.erase(0, 1);
    } else if (s[0] == '+') {
        s.erase(0, 1);
    }
    Scalar v = Scalar::zero(f);
    if (!s.empty() && s[0] == 'g') {
        long e = 1;
        if (s.size() > 1) {
            if (s[1] != '^') throw Error("bad scalar literal: " + raw);
            e = std::stol(s.substr(2));
        }
        v = Scalar::gen(f).pow(e);
    } else {
        try {
            v = Scalar::from_rat(f, BigRat(s));
        } catch (const std::exception&) {
            throw Error("bad scalar literal: " + raw);
        }
    }
    return neg ? -v : v;
}

namespace {

Scalar scalar_from_json(const FieldPtr& f, const ordered_json& v) {
    if (v.is_number_integer()) return Scalar::from_int(f, v.get<long>());
    if (v.is_string()) return scalar_from_string(f, v.get<std::string>());
    throw Error("matrix entries must be integers or scalar strings");
}

FieldPtr field_from_json(const ordered_json& fj) {
    if (!fj.is_object() || !fj.contains("kind")) throw Error("field spec needs a \"kind\"");
    std::string kind = fj.at("kind").get<std::string>();
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "cyclotomic") return FieldDescriptor::cyclotomic(fj.at("n").get<unsigned>());
    if (kind == "finite") {
        unsigned p = fj.at("p").get<unsigned>();
        if (!fj.contains("modulus")) return FieldDescriptor::prime_field(p);
        return FieldDescriptor::finite(p, fj.at("modulus").get<std::vector<unsigned>>());
    }
    throw Error("unknown field kind: " + kind);
}

ordered_json field_to_json(const FieldPtr& f) {
    ordered_json j;
    if (f->is_rational()) {
        j["kind"] = "rational";
    } else if (f->is_cyclotomic()) {
        j["kind"] = "cyclotomic";
        j["n"] = f->cyclo_n();
    } else {
        j["kind"] = "finite";
        j["p"] = f->characteristic();
        j["modulus"] = f->modulus();
    }
    return j;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
    GroupSpec spec;
    spec.field = field_from_json(j.at("field"));
    spec.dim = j.at("dim").get<unsigned>();
    if (spec.dim < 1) throw Error("dimension must be >= 1");
    for (const auto& gj : j.at("generators")) {
        if (!gj.is_array() || gj.size() != static_cast<size_t>(spec.dim) * spec.dim)
            throw Error("each generator needs dim*dim row-major entries");
        std::vector<Scalar> e;
        e.reserve(gj.size());
        for (const auto& v : gj) e.push_back(scalar_from_json(spec.field, v));
        spec.generators.push_back(Mat::from_entries(spec.field, spec.dim, spec.dim, std::move(e)));
    }
    if (j.contains("cap")) spec.options.cap = j.at("cap").get<unsigned>();
    if (j.contains("max_degree")) spec.options.max_degree = j.at("max_degree").get<unsigned>();
    return spec;
}

GroupSpec load_group_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_group_spec(ss.str());
}

FiniteMatrixGroup enumerate_spec(const GroupSpec& spec) {
    return FiniteMatrixGroup::enumerate(spec.field, spec.dim, spec.generators, spec.options.cap);
}

// ---------- polynomiality probe ----------

const char* probe_status_name(ProbeStatus s) {
    switch (s) {
        case ProbeStatus::Polynomial: return "polynomial";
        case ProbeStatus::NotPolynomial: return "not-polynomial";
        case ProbeStatus::Inconclusive: return "inconclusive";
    }
    throw Error("unreachable");
}

namespace {

/// incremental row-echelon span over monomial coordinates
struct Span {
    std::map<unsigned, std::vector<Scalar>> rows;  // pivot -> row with 1 at pivot
    bool add(std::vector<Scalar> v) {
        for (const auto& [p, r] : rows) {
            if (v[p].is_zero()) continue;
            Scalar c = v[p];
            for (size_t i = 0; i < v.size(); ++i)
                if (!r[i].is_zero()) v[i] = v[i] - c * r[i];
        }
        for (unsigned i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                Scalar inv = v[i].inverse();
                for (auto& x : v) x = x * inv;
                rows.emplace(i, std::move(v));
                return true;
            }
        return false;
    }
};

std::vector<Scalar> coords(const MultiPoly& f, const std::map<Expo, unsigned, GrlexLess>& pos) {
    std::vector<Scalar> v(pos.size(), Scalar::zero(f.field()));
    for (const auto& [e, c] : f.terms()) {
        auto it = pos.find(e);
        if (it == pos.end()) throw Error("polynomial is not homogeneous of the expected degree");
        v[it->second] = c;
    }
    return v;
}

std::vector<unsigned long> free_series_coeffs(const std::vector<unsigned>& degrees, unsigned D) {
    std::vector<unsigned long> c(D + 1, 0);
    c[0] = 1;
    for (unsigned d : degrees)
        for (unsigned k = d; k <= D; ++k) c[k] += c[k - d];
    return c;
}

}  // namespace

ProbeResult probe_polynomial_structure(const FiniteMatrixGroup& h, unsigned D) {
    const FieldPtr& f = h.field();
    const unsigned n = h.dim();
    ProbeResult res;
    res.bound = D;
    res.dims.push_back(1);
    std::vector<std::vector<MultiPoly>> salg(D + 1);  // basis of the subalgebra per degree
    salg[0].push_back(MultiPoly::one(f, n));
    for (unsigned d = 1; d <= D; ++d) {
        auto mons = monomials_of_degree(n, d);
        std::map<Expo, unsigned, GrlexLess> pos;
        for (unsigned i = 0; i < mons.size(); ++i) pos.emplace(mons[i], i);
        Span span;
        for (size_t gi = 0; gi < res.generators.size(); ++gi) {
            unsigned e = res.degrees[gi];
            if (e >= d) continue;
            for (const auto& s : salg[d - e]) {
                MultiPoly cand = res.generators[gi] * s;
                if (span.add(coords(cand, pos))) salg[d].push_back(std::move(cand));
            }
        }
        auto inv = invariants_of_degree(h, d);
        res.dims.push_back(inv.basis.size());
        for (auto& b : inv.basis)
            if (span.add(coords(b, pos))) {
                salg[d].push_back(b);
                res.generators.push_back(std::move(b));
                res.degrees.push_back(d);
            }
    }
    auto freec = free_series_coeffs(res.degrees, D);
    bool relation = false;
    for (unsigned d = 0; d <= D; ++d)
        if (freec[d] != res.dims[d]) relation = true;  // free count exceeds actual dimension
    if (res.degrees.size() > n || relation)
        res.status = ProbeStatus::NotPolynomial;
    else if (res.degrees.size() == n)
        res.status = ProbeStatus::Polynomial;
    else
        res.status = ProbeStatus::Inconclusive;
    return res;
}

// ---------- induced graded actions ----------

std::vector<Mat> induced_action_of(const Mat& m, const FiniteMatrixGroup& h,
                                   const ProbeResult& probe) {
    const FieldPtr& f = h.field();
    const unsigned n = h.dim();
    std::vector<unsigned> distinct;
    for (unsigned d : probe.degrees)
        if (distinct.empty() || distinct.back() != d) distinct.push_back(d);
    unsigned maxd = distinct.empty() ? 0 : distinct.back();
    // rebuild the subalgebra bases from the probe generators
    std::vector<std::vector<MultiPoly>> salg(maxd + 1), dec(maxd + 1);
    salg[0].push_back(MultiPoly::one(f, n));
    std::vector<std::vector<unsigned>> gens_at(maxd + 1);
    for (unsigned gi = 0; gi < probe.generators.size(); ++gi)
        gens_at[probe.degrees[gi]].push_back(gi);
    std::vector<std::map<Expo, unsigned, GrlexLess>> pos(maxd + 1);
    for (unsigned d = 1; d <= maxd; ++d) {
        auto mons = monomials_of_degree(n, d);
        for (unsigned i = 0; i < mons.size(); ++i) pos[d].emplace(mons[i], i);
        Span span;
        for (unsigned gi = 0; gi < probe.generators.size(); ++gi) {
            unsigned e = probe.degrees[gi];
            if (e >= d) continue;
            for (const auto& s : salg[d - e]) {
                MultiPoly cand = probe.generators[gi] * s;
                if (span.add(coords(cand, pos[d]))) dec[d].push_back(std::move(cand));
            }
        }
        salg[d] = dec[d];
        for (unsigned gi : gens_at[d]) salg[d].push_back(probe.generators[gi]);
    }
    std::vector<Mat> out;
    for (unsigned d : distinct) {
        const auto& gidx = gens_at[d];
        unsigned k = static_cast<unsigned>(gidx.size());
        unsigned rows = static_cast<unsigned>(pos[d].size());
        Mat a(f, rows, k + static_cast<unsigned>(dec[d].size()));
        for (unsigned j = 0; j < k; ++j) {
            auto c = coords(probe.generators[gidx[j]], pos[d]);
            for (unsigned i = 0; i < rows; ++i) a.at(i, j) = c[i];
        }
        for (unsigned j = 0; j < dec[d].size(); ++j) {
            auto c = coords(dec[d][j], pos[d]);
            for (unsigned i = 0; i < rows; ++i) a.at(i, k + j) = c[i];
        }
        Mat u(f, k, k);
        for (unsigned j = 0; j < k; ++j) {
            MultiPoly img = group_action(m, probe.generators[gidx[j]]);
            auto sol = solve(a, coords(img, pos[d]));
            if (!sol) throw Error("induced action does not stabilize the graded quotient");
            for (unsigned i = 0; i < k; ++i) u.at(i, j) = (*sol)[i];
        }
        if (u.det().is_zero()) throw Error("induced graded action is singular");
        out.push_back(std::move(u));
    }
    return out;
}

GradedAction induced_generator_action(const FiniteMatrixGroup& g, const FiniteMatrixGroup& h,
                                      const ProbeResult& probe) {
    GradedAction ga;
    for (unsigned d : probe.degrees)
        if (ga.degrees.empty() || ga.degrees.back() != d) ga.degrees.push_back(d);
    ga.actions.assign(ga.degrees.size(), {});
    for (const auto& gen : g.generators()) {
        auto mats = induced_action_of(gen, h, probe);
        for (size_t i = 0; i < mats.size(); ++i) ga.actions[i].push_back(std::move(mats[i]));
    }
    if (g.generators().empty())
        for (size_t i = 0; i < ga.degrees.size(); ++i) ga.actions[i] = {};
    return ga;
}

// ---------- the verdict pipeline ----------

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Inconclusive: return "inconclusive";
    }
    throw Error("unreachable");
}

AnalysisReport quasi_gorenstein_verdict(const GroupSpec& spec) {
    FiniteMatrixGroup g = enumerate_spec(spec);
    ReflectionReport refl = reflection_report(g);
    ClassGroupDescription cls = class_group(g, refl.w);
    LinearCharacter det = det_character(g);
    AnalysisReport rep{spec, std::move(g),           std::move(refl), std::move(cls),
                       std::move(det), false, {}, {}, {}, Verdict::Inconclusive, {}, {}, {}};
    const FiniteMatrixGroup& grp = rep.group;
    unsigned p = grp.field()->characteristic();

    if (rep.reflections.no_reflections) {
        // no reflections: the invariant ring is quasi-Gorenstein exactly when
        // the determinant character is trivial
        rep.rule = "no-reflection";
        rep.verdict = rep.det_char.is_trivial() ? Verdict::Yes : Verdict::No;
        rep.notes.push_back("group contains no reflections or transvections");
        return rep;
    }

    const FiniteMatrixGroup& h = (p > 0) ? rep.reflections.wtilde : rep.reflections.w;
    unsigned D = spec.options.max_degree;
    if (D == 0) D = std::min<unsigned>(std::max<unsigned>(8, static_cast<unsigned>(grp.order())), 12);
    rep.probe_ran = true;
    rep.probe = probe_polynomial_structure(h, D);
    if (rep.probe.status != ProbeStatus::Polynomial) {
        rep.rule = "none";
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back(std::string("polynomiality probe of the normal-subgroup invariants: ") +
                            probe_status_name(rep.probe.status));
        return rep;
    }
    GradedAction ga = induced_generator_action(grp, h, rep.probe);
    rep.piece_dets = graded_det_characters(grp, ga.actions);
    LinearCharacter lam = LinearCharacter::trivial(grp, grp.field()->root_capacity());
    for (const auto& di : rep.piece_dets) lam = lam * di.inverse();
    rep.lambda_s = lam;
    rep.rule = "quotient-character";
    rep.verdict = lam.is_trivial() ? Verdict::Yes : Verdict::No;
    if (!spec.options.assert_polynomial)
        rep.conditions.push_back("polynomial structure of the subgroup invariants verified up to degree " +
                                 std::to_string(D) + " only");
    else
        rep.notes.push_back("polynomiality of the subgroup invariants asserted by the user");
    if (p > 0)
        rep.notes.push_back("invariant ring is Cohen-Macaulay (polynomial invariants of the modular subgroup)");
    return rep;
}

// ---------- reports ----------

namespace {

ordered_json character_json(const LinearCharacter& c) {
    ordered_json j;
    j["m"] = c.m();
    j["exponents"] = c.exponents();
    j["trivial"] = c.is_trivial();
    return j;
}

ordered_json report_to_json(const AnalysisReport& r) {
    ordered_json j;
    j["field"] = field_to_json(r.group.field());
    j["dim"] = r.group.dim();
    j["order"] = r.group.order();
    ordered_json refl = ordered_json::array();
    for (unsigned i = 0; i < r.reflections.classes.size(); ++i) {
        const auto& c = r.reflections.classes[i];
        refl.push_back({{"element", i},
                        {"tag", reflection_tag_name(c.tag)},
                        {"order", c.order},
                        {"fixed_dim", c.fixed_dim}});
    }
    j["reflections"] = std::move(refl);
    j["no_reflections"] = r.reflections.no_reflections;
    j["W"] = {{"order", r.reflections.w.order()}, {"index", r.reflections.index_w}};
    j["Wtilde"] = {{"order", r.reflections.wtilde.order()}, {"index", r.reflections.index_wtilde}};
    j["class_group"] = {{"invariant_factors", r.class_group_desc.structure.invariant_factors}};
    j["det_character"] = character_json(r.det_char);
    ordered_json probe;
    probe["ran"] = r.probe_ran;
    if (r.probe_ran) {
        probe["status"] = probe_status_name(r.probe.status);
        probe["bound"] = r.probe.bound;
        probe["degrees"] = r.probe.degrees;
        probe["dims"] = r.probe.dims;
    }
    j["probe"] = std::move(probe);
    if (r.lambda_s)
        j["chi_S"] = character_json(*r.lambda_s);
    else
        j["chi_S"] = nullptr;
    j["verdict"] = {{"status", verdict_name(r.verdict)},
                    {"rule", r.rule},
                    {"conditions", r.conditions},
                    {"notes", r.notes}};
    return j;
}

}  // namespace

std::string report_json(const AnalysisReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string report_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "group: order " << r.group.order() << ", dim " << r.group.dim() << ", field "
       << r.group.field()->describe() << "\n";
    unsigned nrefl = 0, ntrans = 0;
    for (const auto& c : r.reflections.classes) {
        if (c.tag == ReflectionTag::DiagonalizableReflection) ++nrefl;
        if (c.tag == ReflectionTag::Transvection) ++ntrans;
    }
    os << "reflections: " << nrefl << " diagonalizable, " << ntrans << " transvections\n";
    os << "W: order " << r.reflections.w.order() << " (index " << r.reflections.index_w << ")";
    os << "; W~: order " << r.reflections.wtilde.order() << " (index " << r.reflections.index_wtilde
       << ")\n";
    os << "class group: ";
    if (r.class_group_desc.structure.invariant_factors.empty())
        os << "trivial";
    else {
        bool first = true;
        for (auto m : r.class_group_desc.structure.invariant_factors) {
            if (!first) os << " x ";
            os << "Z/" << m;
            first = false;
        }
    }
    os << "\n";
    os << "det character: " << (r.det_char.is_trivial() ? "trivial" : "nontrivial") << "\n";
    if (r.probe_ran) {
        os << "probe: " << probe_status_name(r.probe.status) << " (bound " << r.probe.bound
           << "), degrees";
        for (auto d : r.probe.degrees) os << " " << d;
        os << "\n";
    }
    if (r.lambda_s)
        os << "quotient character chi_S: " << (r.lambda_s->is_trivial() ? "trivial" : "nontrivial")
           << "\n";
    os << "verdict: quasi-Gorenstein = " << verdict_name(r.verdict) << " [rule: " << r.rule << "]\n";
    for (const auto& c : r.conditions) os << "  condition: " << c << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

// ---------- command line ----------

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(out_path);
    if (!o) throw Error("cannot write to " + out_path);
    o << text;
}

ordered_json character_values_json(const LinearCharacter& c) {
    ordered_json j = character_json(c);
    j["order"] = c.order();
    return j;
}

int cmd_series(const GroupSpec& spec, int element, unsigned D, bool json, const std::string& out) {
    FiniteMatrixGroup g = enumerate_spec(spec);
    if (D == 0) D = 8;
    LiftContext ctx = lift_context_for_group(g);
    std::vector<unsigned> idx;
    if (element >= 0) {
        if (static_cast<unsigned long>(element) >= g.order())
            throw Error("element index out of range");
        idx.push_back(static_cast<unsigned>(element));
    } else {
        for (unsigned i = 0; i < g.order(); ++i) idx.push_back(i);
    }
    ordered_json jarr = ordered_json::array();
    std::ostringstream os;
    for (unsigned i : idx) {
        const Mat& m = g.element(i);
        unsigned p = g.field()->characteristic();
        bool psing = p > 0 && g.element_order(i) % p == 0;
        std::vector<std::string> traces;
        for (const auto& c : trace_series_truncated(m, D)) traces.push_back(c.str());
        ordered_json je;
        je["element"] = i;
        je["order"] = g.element_order(i);
        je["p_singular"] = psing;
        je["traces"] = traces;
        os << "element " << i << " (order " << g.element_order(i) << ")";
        if (!psing) {
            RatFun h = ratfun_demote(brauer_series_sym_in(m, ctx));
            je["series"] = h.str();
            os << ": H(t) = " << h.str() << "\n";
        } else {
            je["series"] = nullptr;
            os << ": p-singular, no character series; traces";
            for (const auto& t : traces) os << " " << t;
            os << "\n";
        }
        jarr.push_back(std::move(je));
    }
    emit(out, json ? jarr.dump(2) + "\n" : os.str());
    return 0;
}

int cmd_classgroup(const GroupSpec& spec, bool json, const std::string& out) {
    FiniteMatrixGroup g = enumerate_spec(spec);
    auto w = reflection_subgroup(g);
    auto cg = class_group(g, w);
    if (json) {
        ordered_json j;
        j["W_order"] = w.order();
        j["invariant_factors"] = cg.structure.invariant_factors;
        ordered_json chars = ordered_json::array();
        for (const auto& c : cg.characters) chars.push_back(character_values_json(c));
        j["characters"] = std::move(chars);
        emit(out, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "reflection subgroup W: order " << w.order() << "\n";
    os << "class group of the invariant ring: ";
    if (cg.structure.invariant_factors.empty())
        os << "trivial";
    else {
        bool first = true;
        for (auto m : cg.structure.invariant_factors) {
            if (!first) os << " x ";
            os << "Z/" << m;
            first = false;
        }
    }
    os << " (" << cg.characters.size() << " characters)\n";
    emit(out, os.str());
    return 0;
}

int cmd_invariants(const GroupSpec& spec, unsigned D, bool json, const std::string& out) {
    FiniteMatrixGroup g = enumerate_spec(spec);
    if (D == 0) D = 8;
    ordered_json jarr = ordered_json::array();
    std::ostringstream os;
    for (unsigned d = 0; d <= D; ++d) {
        auto b = invariants_of_degree(g, d);
        ordered_json jd;
        jd["degree"] = d;
        jd["dim"] = b.basis.size();
        std::vector<std::string> polys;
        for (const auto& f : b.basis) polys.push_back(f.monic().str());
        jd["basis"] = polys;
        jarr.push_back(std::move(jd));
        os << "degree " << d << ": dim " << b.basis.size();
        for (const auto& s : polys) os << "  " << s;
        os << "\n";
    }
    emit(out, json ? jarr.dump(2) + "\n" : os.str());
    return 0;
}

int cmd_semiinv(const GroupSpec& spec, int character, unsigned D, bool json,
                const std::string& out) {
    FiniteMatrixGroup g = enumerate_spec(spec);
    if (D == 0) D = 8;
    auto w = reflection_subgroup(g);
    auto cg = class_group(g, w);
    std::vector<unsigned> idx;
    if (character >= 0) {
        if (static_cast<size_t>(character) >= cg.characters.size())
            throw Error("character index out of range");
        idx.push_back(static_cast<unsigned>(character));
    } else {
        for (unsigned i = 0; i < cg.characters.size(); ++i) idx.push_back(i);
    }
    ordered_json jarr = ordered_json::array();
    std::ostringstream os;
    for (unsigned i : idx) {
        auto s = dchi_estimate(g, cg.characters[i], D);
        ordered_json je;
        je["character"] = i;
        je["chi"] = character_values_json(cg.characters[i]);
        je["conclusive"] = s.conclusive;
        os << "character " << i << ": ";
        if (s.conclusive) {
            je["d_chi"] = s.dchi.monic().str();
            je["class_index"] = cg.index_of(s.cls);
            je["free"] = s.free_module;
            os << "d_chi = " << s.dchi.monic().str() << ", class " << cg.index_of(s.cls)
               << (s.free_module ? " (free module)" : "") << "\n";
        } else {
            os << "no semi-invariants up to degree " << D << "\n";
        }
        jarr.push_back(std::move(je));
    }
    emit(out, json ? jarr.dump(2) + "\n" : os.str());
    return 0;
}

int cmd_check_identities(const GroupSpec& spec, unsigned D, const std::string& out) {
    FiniteMatrixGroup g = enumerate_spec(spec);
    if (D == 0) D = 6;
    LiftContext ctx = lift_context_for_group(g);
    unsigned p = g.field()->characteristic();
    std::ostringstream os;
    bool ok = true;
    unsigned checked = 0;
    for (unsigned i = 0; i < g.order(); ++i) {
        if (p > 0 && g.element_order(i) % p == 0) continue;
        auto dc = duality_check(g.element(i), ctx);
        ++checked;
        if (!dc.pass) {
            ok = false;
            os << "FAIL duality identity for element " << i << "\n";
        }
    }
    os << "duality identity: " << checked << " p-regular elements checked\n";
    if (p == 0 || g.order() % p != 0) {
        RatFun mol = molien_average(g);
        auto cs = mol.series_coefficients(D);
        for (unsigned d = 0; d <= D; ++d) {
            auto dim = invariants_of_degree(g, d).basis.size();
            if (cs[d] != Scalar::from_int(mol.field(), static_cast<long>(dim))) {
                ok = false;
                os << "FAIL invariant-dimension series at degree " << d << "\n";
            }
        }
        os << "invariant-dimension series checked up to degree " << D << "\n";
    } else {
        os << "modular group: dimension-series check skipped\n";
    }
    os << (ok ? "all identities hold\n" : "IDENTITY FAILURE\n");
    emit(out, os.str());
    return ok ? 0 : 2;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"exact invariant-theory analyzer for finite linear matrix groups"};
    app.require_subcommand(1);

    std::string spec_path, out;
    bool json = false, assert_poly = false;
    unsigned max_degree = 0;
    int element = -1, character = -1;

    auto add_common = [&](CLI::App* c, bool with_json = true) {
        c->add_option("spec", spec_path, "group spec JSON file")->required();
        c->add_option("--out", out, "write the report to a file instead of stdout");
        c->add_option("--max-degree", max_degree, "degree bound (0 = automatic)");
        if (with_json) c->add_flag("--json", json, "machine-readable JSON output");
    };

    auto* analyze = app.add_subcommand("analyze", "full quasi-Gorenstein analysis");
    add_common(analyze);
    analyze->add_flag("--assert-polynomial", assert_poly,
                      "treat the probed subgroup invariants as genuinely polynomial");
    auto* series = app.add_subcommand("series", "Brauer character series per element");
    add_common(series);
    series->add_option("--element", element, "restrict to one element index");
    auto* classgroup = app.add_subcommand("classgroup", "divisor class group of the invariant ring");
    add_common(classgroup);
    auto* invariants = app.add_subcommand("invariants", "invariant bases per degree");
    add_common(invariants);
    auto* semiinv = app.add_subcommand("semiinv", "semi-invariant modules and their classes");
    add_common(semiinv);
    semiinv->add_option("--character", character, "restrict to one class-group character index");
    auto* checkid =
        app.add_subcommand("check-identities", "verify internal series identities on the group");
    add_common(checkid, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        GroupSpec spec = load_group_spec(spec_path);
        if (max_degree) spec.options.max_degree = max_degree;
        spec.options.assert_polynomial = assert_poly;
        if (analyze->parsed()) {
            AnalysisReport rep = quasi_gorenstein_verdict(spec);
            emit(out, json ? report_json(rep) : report_text(rep));
            return 0;
        }
        if (series->parsed()) return cmd_series(spec, element, max_degree, json, out);
        if (classgroup->parsed()) return cmd_classgroup(spec, json, out);
        if (invariants->parsed()) return cmd_invariants(spec, max_degree, json, out);
        if (semiinv->parsed()) return cmd_semiinv(spec, character, max_degree, json, out);
        if (checkid->parsed()) return cmd_check_identities(spec, max_degree, out);
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ginv
