#pragma once

// Linear characters G -> mu_m: exponent vectors over the abelianization, so
// comparisons and products are integer arithmetic mod m. The divisor class
// group of the invariant ring appears as the kernel of restriction to the
// reflection subgroup.

#include "ginv/matgroup.hpp"

namespace ginv {

class LinearCharacter {
public:
    /// value of element g is zeta_m^{<exponents, ab(g)>}
    LinearCharacter(std::shared_ptr<const FiniteAbelianGroup> ab, unsigned long m,
                    std::vector<unsigned long> exponents);

    static LinearCharacter trivial(const FiniteMatrixGroup& g, unsigned long m);

    unsigned long m() const { return m_; }
    const std::vector<unsigned long>& exponents() const { return exps_; }
    const std::shared_ptr<const FiniteAbelianGroup>& ab() const { return ab_; }

    bool is_trivial() const;
    /// e with value(g) = zeta_m^e, 0 <= e < m
    unsigned long value_exponent(unsigned element_index) const;
    /// value as a field scalar; requires m | root_capacity(f)
    Scalar value(const FieldPtr& f, unsigned element_index) const;
    /// order in the character group
    unsigned long order() const;

    LinearCharacter operator*(const LinearCharacter& o) const;
    LinearCharacter inverse() const;
    LinearCharacter pow(long e) const;
    bool operator==(const LinearCharacter& o) const;
    bool operator!=(const LinearCharacter& o) const { return !(*this == o); }
    bool operator<(const LinearCharacter& o) const;  // lexicographic, for ordered containers

private:
    std::shared_ptr<const FiniteAbelianGroup> ab_;
    unsigned long m_ = 1;
    std::vector<unsigned long> exps_;  // each in [0, m), multiple of m / gcd(m, m_i)
};

struct CharacterGroup {
    unsigned long m = 1;
    std::vector<LinearCharacter> characters;  // lexicographic in exponent vectors
    unsigned index_of(const LinearCharacter& c) const;
};

/// All homomorphisms G -> mu_m, enumerated deterministically.
CharacterGroup character_group(const FiniteMatrixGroup& g, unsigned long m);

/// chi restricted to a subgroup H of G (as produced by generated_subgroup).
LinearCharacter restrict_character(const LinearCharacter& chi, const FiniteMatrixGroup& g,
                                   const FiniteMatrixGroup& h);

struct ClassGroupDescription {
    /// characters of G vanishing on W, closed under product
    std::vector<LinearCharacter> characters;
    /// abstract structure of that kernel (element ids = positions in `characters`)
    FiniteAbelianGroup structure;
    unsigned index_of(const LinearCharacter& c) const;
};

/// Divisor class group of the invariant ring: ker(res_W) inside Hom(G, mu(k)).
ClassGroupDescription class_group(const FiniteMatrixGroup& g, const FiniteMatrixGroup& w);

/// Character from prescribed values on the group generators (propagated over
/// the Cayley graph; errors when the values are not consistent with a
/// homomorphism into mu_m).
LinearCharacter character_from_generator_values(const FiniteMatrixGroup& g,
                                                const std::vector<Scalar>& gen_values,
                                                unsigned long m);

/// g -> det(g) as a linear character into mu_m (default: full mu(k)).
LinearCharacter det_character(const FiniteMatrixGroup& g, unsigned long m = 0);

/// Determinant character of each graded action: actions[i][j] is the matrix of
/// generator j on the degree-d_i generator space U_i.
std::vector<LinearCharacter> graded_det_characters(const FiniteMatrixGroup& g,
                                                   const std::vector<std::vector<Mat>>& actions);

}  // namespace ginv
