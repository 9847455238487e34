#include "ginv/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace ginv {

namespace {

// ---------- integer lattice / Smith normal form (small, exact) ----------

using ZRow = std::vector<BigInt>;

// maintain a row basis of the relation lattice in echelon-ish form
void lattice_insert(std::vector<ZRow>& basis, ZRow r) {
    const size_t k = r.size();
    for (size_t c = 0; c < k; ++c) {
        if (r[c] == 0) continue;
        if (basis[c].empty()) {
            if (r[c] < 0)
                for (auto& x : r) x = -x;
            basis[c] = std::move(r);
            return;
        }
        ZRow& b = basis[c];
        // extended euclid on leading entries
        BigInt x0 = b[c], x1 = r[c];
        BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (x1 != 0) {
            BigInt q = x0 / x1;
            BigInt x2 = x0 - q * x1;
            BigInt s2 = s0 - q * s1, t2 = t0 - q * t1;
            x0 = x1; x1 = x2;
            s0 = s1; s1 = s2;
            t0 = t1; t1 = t2;
        }
        // g = x0 = s0*b[c] + t0*r[c]
        BigInt bc = b[c] / x0, rc = r[c] / x0;
        ZRow nb(k), nr(k);
        for (size_t j = 0; j < k; ++j) {
            nb[j] = s0 * b[j] + t0 * r[j];
            nr[j] = bc * r[j] - rc * b[j];
        }
        b = std::move(nb);
        r = std::move(nr);
    }
}

struct SnfResult {
    std::vector<BigInt> diag;            // d_1 | d_2 | ...
    std::vector<std::vector<BigInt>> v;  // k x k, column transform
    std::vector<std::vector<BigInt>> vinv;
};

SnfResult smith_normal_form(std::vector<ZRow> m, size_t k) {
    SnfResult res;
    res.v.assign(k, std::vector<BigInt>(k, 0));
    res.vinv.assign(k, std::vector<BigInt>(k, 0));
    for (size_t i = 0; i < k; ++i) res.v[i][i] = res.vinv[i][i] = 1;
    const size_t rows = m.size();

    auto col_add = [&](size_t dst, size_t src, const BigInt& f) {
        // col_dst += f * col_src; inverse op on vinv rows: row_src -= f * row_dst
        for (size_t i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
        for (size_t i = 0; i < k; ++i) res.v[i][dst] += f * res.v[i][src];
        for (size_t j = 0; j < k; ++j) res.vinv[src][j] -= f * res.vinv[dst][j];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (size_t i = 0; i < k; ++i) std::swap(res.v[i][a], res.v[i][b]);
        std::swap(res.vinv[a], res.vinv[b]);
    };
    auto col_neg = [&](size_t a) {
        for (size_t i = 0; i < rows; ++i) m[i][a] = -m[i][a];
        for (size_t i = 0; i < k; ++i) res.v[i][a] = -res.v[i][a];
        for (size_t j = 0; j < k; ++j) res.vinv[a][j] = -res.vinv[a][j];
    };
    auto row_add = [&](size_t dst, size_t src, const BigInt& f) {
        for (size_t j = 0; j < k; ++j) m[dst][j] += f * m[src][j];
    };
    auto row_swap = [&](size_t a, size_t b) { std::swap(m[a], m[b]); };

    size_t t = 0;
    while (t < k && t < rows) {
        // find a nonzero pivot in the remaining submatrix
        size_t pi = rows, pj = k;
        BigInt best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < k; ++j)
                if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
                    best = abs(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);
        if (m[t][t] < 0) col_neg(t);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i)
            if (m[i][t] != 0) {
                BigInt q = m[i][t] / m[t][t];
                row_add(i, t, -q);
                if (m[i][t] != 0) clean = false;
            }
        for (size_t j = t + 1; j < k; ++j)
            if (m[t][j] != 0) {
                BigInt q = m[t][j] / m[t][t];
                col_add(j, t, -q);
                if (m[t][j] != 0) clean = false;
            }
        if (!clean) continue;
        // divisibility: m[t][t] must divide every remaining entry
        bool fixed = false;
        for (size_t i = t + 1; i < rows && !fixed; ++i)
            for (size_t j = t + 1; j < k && !fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    row_add(t, i, 1);
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }
    res.diag.resize(k, 0);
    for (size_t i = 0; i < std::min(rows, k); ++i) res.diag[i] = m[i][i];
    return res;
}

}  // namespace

// ---------- abelian structure ----------

FiniteAbelianGroup abelian_structure(unsigned long size, unsigned id,
                                     const std::vector<unsigned>& gens,
                                     const std::function<unsigned(unsigned, unsigned)>& mult) {
    FiniteAbelianGroup res;
    const size_t k = gens.size();
    if (size == 1 || k == 0) {
        res.element_vectors.assign(size, {});
        return res;
    }
    // BFS assigning exponent vectors over the generators; collect cycle relations
    std::vector<std::vector<BigInt>> vec(size);
    std::vector<char> seen(size, 0);
    std::vector<ZRow> basis(k);
    std::deque<unsigned> queue;
    vec[id].assign(k, 0);
    seen[id] = 1;
    queue.push_back(id);
    unsigned long discovered = 1;
    while (!queue.empty()) {
        unsigned e = queue.front();
        queue.pop_front();
        for (size_t gi = 0; gi < k; ++gi) {
            unsigned f = mult(e, gens[gi]);
            if (!seen[f]) {
                seen[f] = 1;
                vec[f] = vec[e];
                vec[f][gi] += 1;
                queue.push_back(f);
                ++discovered;
            } else {
                ZRow rel = vec[e];
                rel[gi] += 1;
                for (size_t j = 0; j < k; ++j) rel[j] -= vec[f][j];
                lattice_insert(basis, std::move(rel));
            }
        }
    }
    if (discovered != size) throw Error("abelian_structure: generators do not generate");
    std::vector<ZRow> rows;
    for (auto& b : basis)
        if (!b.empty()) rows.push_back(b);
    if (rows.size() != k) throw Error("abelian_structure: relation lattice not full rank");
    auto snf = smith_normal_form(rows, k);

    // keep factors > 1
    std::vector<size_t> kept;
    for (size_t j = 0; j < k; ++j) {
        if (snf.diag[j] == 0) throw Error("abelian_structure: infinite factor (internal)");
        if (snf.diag[j] > 1) kept.push_back(j);
    }
    unsigned long prod = 1;
    for (auto j : kept) {
        res.invariant_factors.push_back(snf.diag[j].convert_to<unsigned long>());
        prod *= res.invariant_factors.back();
    }
    if (prod != size) throw Error("abelian_structure: invariant factor product mismatch");

    // new coordinates of x are (x V); abstract generator j is prod_i gens[i]^{Vinv[j][i]}
    auto elt_pow = [&](unsigned base, BigInt e, unsigned long ord_bound) -> unsigned {
        // reduce exponent modulo the order of `base` by walking its cycle
        std::vector<unsigned> cycle{id};
        unsigned cur = id;
        do {
            cur = mult(cur, base);
            cycle.push_back(cur);
        } while (cur != id && cycle.size() <= ord_bound + 1);
        unsigned long ord = static_cast<unsigned long>(cycle.size() - 1);
        BigInt r = e % BigInt(ord);
        if (r < 0) r += ord;
        return cycle[r.convert_to<size_t>()];
    };
    for (auto j : kept) {
        unsigned g = id;
        for (size_t i = 0; i < k; ++i)
            if (snf.vinv[j][i] != 0) g = mult(g, elt_pow(gens[i], snf.vinv[j][i], size));
        res.generator_elements.push_back(g);
    }

    res.element_vectors.assign(size, {});
    for (unsigned long e = 0; e < size; ++e) {
        std::vector<long> coords;
        coords.reserve(kept.size());
        for (auto j : kept) {
            BigInt s = 0;
            for (size_t i = 0; i < k; ++i) s += vec[e][i] * snf.v[i][j];
            BigInt d(res.invariant_factors[coords.size()]);
            BigInt r = s % d;
            if (r < 0) r += d;
            coords.push_back(r.convert_to<long>());
        }
        res.element_vectors[e] = std::move(coords);
    }
    return res;
}

// ---------- FiniteMatrixGroup ----------

FiniteMatrixGroup FiniteMatrixGroup::enumerate(const FieldPtr& field, unsigned dim,
                                               std::vector<Mat> generators, unsigned cap) {
    if (cap < 1) throw Error("enumeration cap must be >= 1");
    FiniteMatrixGroup g;
    g.field_ = field;
    g.dim_ = dim;
    for (auto& m : generators) {
        if (m.rows() != dim || m.cols() != dim) throw Error("generator dimension mismatch");
        if (!m.field()->same(*field)) throw Error("generator field mismatch");
        if (m.det().is_zero()) throw Error("singular generator");
    }
    g.generators_ = std::move(generators);
    Mat id = Mat::identity(field, dim);
    g.elements_.push_back(id);
    g.index_.emplace(id.key(), 0);
    g.identity_ = 0;
    std::deque<unsigned> queue{0};
    while (!queue.empty()) {
        unsigned i = queue.front();
        queue.pop_front();
        for (const auto& gen : g.generators_) {
            Mat p = g.elements_[i] * gen;
            std::string key = p.key();
            if (g.index_.count(key)) continue;
            if (g.elements_.size() >= cap)
                throw Error("enumeration cap of " + std::to_string(cap) +
                            " exceeded: group too large or infinite");
            unsigned idx = static_cast<unsigned>(g.elements_.size());
            g.index_.emplace(key, idx);
            g.elements_.push_back(std::move(p));
            queue.push_back(idx);
        }
    }
    g.orders_.reserve(g.elements_.size());
    for (const auto& m : g.elements_) g.orders_.push_back(ginv::element_order(m, cap + 1));
    return g;
}

unsigned FiniteMatrixGroup::index_of(const Mat& m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) throw Error("matrix is not a group member");
    return it->second;
}

bool FiniteMatrixGroup::contains(const Mat& m) const { return index_.count(m.key()) > 0; }

unsigned FiniteMatrixGroup::product(unsigned i, unsigned j) const {
    return index_of(elements_.at(i) * elements_.at(j));
}

unsigned FiniteMatrixGroup::inverse(unsigned i) const { return index_of(elements_.at(i).inverse()); }

unsigned FiniteMatrixGroup::exponent() const {
    unsigned long l = 1;
    for (auto o : orders_) l = std::lcm(l, static_cast<unsigned long>(o));
    return static_cast<unsigned>(l);
}

FiniteMatrixGroup FiniteMatrixGroup::commutator_subgroup() const {
    std::set<std::string> seen;
    std::vector<Mat> comms;
    for (unsigned i = 0; i < elements_.size(); ++i)
        for (unsigned j = 0; j < elements_.size(); ++j) {
            Mat c = elements_[i].inverse() * elements_[j].inverse() * elements_[i] * elements_[j];
            if (seen.insert(c.key()).second) comms.push_back(std::move(c));
        }
    return enumerate(field_, dim_, std::move(comms), static_cast<unsigned>(elements_.size()) + 1);
}

FiniteMatrixGroup FiniteMatrixGroup::generated_subgroup(const std::vector<unsigned>& member_indices) const {
    std::vector<Mat> gens;
    gens.reserve(member_indices.size());
    for (auto i : member_indices) gens.push_back(elements_.at(i));
    return enumerate(field_, dim_, std::move(gens), static_cast<unsigned>(elements_.size()) + 1);
}

std::vector<unsigned> FiniteMatrixGroup::subgroup_indices(const FiniteMatrixGroup& sub) const {
    std::vector<unsigned> idx;
    idx.reserve(sub.order());
    for (const auto& m : sub.elements()) idx.push_back(index_of(m));
    return idx;
}

bool FiniteMatrixGroup::is_normal_subgroup(const FiniteMatrixGroup& sub) const {
    for (const auto& g : elements_) {
        Mat gi = g.inverse();
        for (const auto& h : sub.elements())
            if (!sub.contains(g * h * gi)) return false;
    }
    return true;
}

const FiniteAbelianGroup& FiniteMatrixGroup::abelianization() const {
    if (ab_) return *ab_;
    FiniteMatrixGroup comm = commutator_subgroup();
    std::vector<unsigned> comm_idx = subgroup_indices(comm);
    // coset representative: least element index in g[G,G]
    const unsigned n = static_cast<unsigned>(elements_.size());
    std::vector<unsigned> rep(n);
    for (unsigned i = 0; i < n; ++i) {
        unsigned best = n;
        for (auto c : comm_idx) best = std::min(best, product(i, c));
        rep[i] = best;
    }
    std::vector<unsigned> reps;  // distinct, ascending
    std::map<unsigned, unsigned> qid;
    for (unsigned i = 0; i < n; ++i)
        if (rep[i] == i) {
            qid[i] = static_cast<unsigned>(reps.size());
            reps.push_back(i);
        }
    auto qmult = [&](unsigned a, unsigned b) { return qid.at(rep[product(reps[a], reps[b])]); };
    std::vector<unsigned> qgens;
    for (const auto& g : generators_) qgens.push_back(qid.at(rep[index_of(g)]));
    FiniteAbelianGroup qab = abelian_structure(reps.size(), qid.at(rep[identity_]), qgens, qmult);
    auto out = std::make_shared<FiniteAbelianGroup>();
    out->invariant_factors = qab.invariant_factors;
    for (auto q : qab.generator_elements) out->generator_elements.push_back(reps[q]);
    out->element_vectors.resize(n);
    for (unsigned i = 0; i < n; ++i) out->element_vectors[i] = qab.element_vectors[qid.at(rep[i])];
    ab_ = std::move(out);
    return *ab_;
}

unsigned element_order(const Mat& g, unsigned cap) {
    if (g.rows() != g.cols()) throw Error("element order of non-square matrix");
    Mat id = Mat::identity(g.field(), g.rows());
    Mat p = g;
    unsigned r = 1;
    while (p != id) {
        p = p * g;
        ++r;
        if (r > cap) throw Error("element order exceeds cap (matrix may have infinite order)");
    }
    return r;
}

// ---------- eigenvalues ----------

EigenvalueData eigenvalues(const Mat& g) {
    const FieldPtr& k = g.field();
    if (g.det().is_zero()) throw Error("eigenvalues of a singular matrix");
    if (k->is_finite()) {
        UPoly cp = g.char_poly();
        auto degs = irreducible_factor_degrees(cp);
        unsigned d = 1;
        for (auto x : degs) d = static_cast<unsigned>(std::lcm(d, x));
        auto ext = canonical_extension(k, d);
        return eigenvalues_in(g, ext.ext, ext.embed);
    }
    unsigned r = element_order(g);
    unsigned base_n = k->is_cyclotomic() ? k->cyclo_n() : 1;
    unsigned l = static_cast<unsigned>(std::lcm<unsigned long>(base_n, r));
    FieldPtr ext = FieldDescriptor::cyclotomic(l);
    return eigenvalues_in(g, ext, FieldEmbedding::make(k, ext));
}

EigenvalueData eigenvalues_in(const Mat& g, const FieldPtr& ext, const FieldEmbedding& embed) {
    const FieldPtr& k = g.field();
    if (g.det().is_zero()) throw Error("eigenvalues of a singular matrix");
    EigenvalueData res{ext, embed, {}, false};
    UPoly cp = g.char_poly().mapped(embed);
    unsigned n = g.rows();
    unsigned total = 0;
    if (ext->is_finite()) {
        unsigned p = k->characteristic();
        res.p_singular = (element_order(g) % p == 0);
        unsigned long q = ext->field_order();
        std::vector<unsigned> coeffs(ext->degree(), 0);
        for (unsigned long idx = 0; idx < q && total < n; ++idx) {
            unsigned long v = idx;
            for (auto& c : coeffs) {
                c = static_cast<unsigned>(v % p);
                v /= p;
            }
            Scalar cand = Scalar::from_ff_coeffs(ext, coeffs);
            if (!cp.eval(cand).is_zero()) continue;
            unsigned m = root_multiplicity(cp, cand);
            res.values.emplace_back(cand, m);
            total += m;
        }
    } else {
        unsigned long cap = ext->root_capacity();
        Scalar prim = primitive_root_of_unity(ext);
        for (unsigned long j = 0; j < cap && total < n; ++j) {
            Scalar cand = prim.pow(static_cast<long>(j));
            bool dup = false;
            for (auto& [v, m] : res.values)
                if (v == cand) {
                    dup = true;
                    break;
                }
            if (dup || !cp.eval(cand).is_zero()) continue;
            unsigned m = root_multiplicity(cp, cand);
            res.values.emplace_back(cand, m);
            total += m;
        }
    }
    if (total != n)
        throw Error("splitting field does not contain all eigenvalues");
    return res;
}

}  // namespace ginv
