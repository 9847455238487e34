#pragma once

// Finite matrix groups: BFS enumeration, element orders, commutator subgroup,
// abelianization, generated subgroups and exact eigenvalue extraction.

#include "ginv/linalg.hpp"

#include <functional>
#include <map>

namespace ginv {

struct FiniteAbelianGroup {
    /// invariant factors m_1 | m_2 | ... | m_r, each >= 2
    std::vector<unsigned long> invariant_factors;
    /// group-element index realizing each abstract generator
    std::vector<unsigned> generator_elements;
    /// exponent vector of every group element w.r.t. the abstract generators
    std::vector<std::vector<long>> element_vectors;

    unsigned long order() const {
        unsigned long o = 1;
        for (auto m : invariant_factors) o *= m;
        return o;
    }
};

class FiniteMatrixGroup {
public:
    static constexpr unsigned kDefaultCap = 10000;

    /// BFS closure of the generators; deterministic element order; errors once
    /// more than `cap` elements are discovered.
    static FiniteMatrixGroup enumerate(const FieldPtr& field, unsigned dim,
                                       std::vector<Mat> generators, unsigned cap = kDefaultCap);

    const FieldPtr& field() const { return field_; }
    unsigned dim() const { return dim_; }
    unsigned long order() const { return static_cast<unsigned long>(elements_.size()); }
    const std::vector<Mat>& elements() const { return elements_; }
    const std::vector<Mat>& generators() const { return generators_; }
    const Mat& element(unsigned i) const { return elements_.at(i); }
    unsigned identity_index() const { return identity_; }

    unsigned index_of(const Mat& m) const;  // errors if not a member
    bool contains(const Mat& m) const;
    unsigned product(unsigned i, unsigned j) const;
    unsigned inverse(unsigned i) const;
    unsigned element_order(unsigned i) const { return orders_.at(i); }
    unsigned exponent() const;  // lcm of element orders

    FiniteMatrixGroup commutator_subgroup() const;
    /// subgroup generated by the given member indices
    FiniteMatrixGroup generated_subgroup(const std::vector<unsigned>& member_indices) const;
    /// indices (in this group) of the elements of a subgroup
    std::vector<unsigned> subgroup_indices(const FiniteMatrixGroup& sub) const;
    bool is_normal_subgroup(const FiniteMatrixGroup& sub) const;

    const FiniteAbelianGroup& abelianization() const;
    std::shared_ptr<const FiniteAbelianGroup> abelianization_ptr() const {
        abelianization();
        return ab_;
    }

private:
    FiniteMatrixGroup() = default;
    FieldPtr field_;
    unsigned dim_ = 0;
    std::vector<Mat> elements_;
    std::vector<Mat> generators_;
    std::vector<unsigned> orders_;
    std::map<std::string, unsigned> index_;
    unsigned identity_ = 0;
    mutable std::shared_ptr<FiniteAbelianGroup> ab_;  // computed lazily, immutable afterwards
};

/// least r >= 1 with g^r = I; errors past the cap (infinite-order guard)
unsigned element_order(const Mat& g, unsigned cap = FiniteMatrixGroup::kDefaultCap);

struct EigenvalueData {
    FieldPtr splitting_field;
    FieldEmbedding embed;  // base field -> splitting field
    std::vector<std::pair<Scalar, unsigned>> values;  // (eigenvalue, multiplicity)
    bool p_singular = false;  // characteristic p and order(g) divisible by p
};

/// Exact eigenvalues over a splitting extension. Characteristic 0: in
/// Q(zeta_L) with L = lcm(cyclotomic index of k, order(g)). Characteristic p:
/// in F_{q^d}, d = lcm of the irreducible factor degrees of the characteristic
/// polynomial, found by exhaustive root search.
EigenvalueData eigenvalues(const Mat& g);
/// Same but inside a caller-chosen splitting field (must contain all roots).
EigenvalueData eigenvalues_in(const Mat& g, const FieldPtr& ext, const FieldEmbedding& embed);

/// Invariant factors of a finite abelian group presented by generator images
/// in a Cayley-enumerable setting; used by abelianization and character groups.
/// `mult` composes two element ids, `id` is the identity id, `gens` generate.
FiniteAbelianGroup abelian_structure(unsigned long size, unsigned id,
                                     const std::vector<unsigned>& gens,
                                     const std::function<unsigned(unsigned, unsigned)>& mult);

}  // namespace ginv
