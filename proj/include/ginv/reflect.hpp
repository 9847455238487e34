#pragma once

// Reflection classification for linear actions: an element is a reflection
// when it fixes a hyperplane pointwise, i.e. rank(g - I) = 1. Splits into the
// diagonalizable kind (nontrivial eigenvalue != 1) and transvections
// ((g - I)^2 = 0, characteristic p only). Also builds the normal subgroup W
// generated by all reflections and its modular enlargement.

#include "ginv/matgroup.hpp"

namespace ginv {

enum class ReflectionTag { Identity, DiagonalizableReflection, Transvection, NonReflection };

const char* reflection_tag_name(ReflectionTag t);

struct ElementClassification {
    ReflectionTag tag = ReflectionTag::Identity;
    unsigned fixed_dim = 0;  // dim ker(g - I)
    unsigned order = 1;
};

ElementClassification classify_element(const Mat& g);

struct ReflectionReport {
    std::vector<ElementClassification> classes;  // indexed like G.elements()
    std::vector<unsigned> reflection_indices;
    std::vector<unsigned> p_element_indices;  // nontrivial elements of p-power order (char p)
    bool no_reflections = false;              // no reflections or transvections at all
    FiniteMatrixGroup w;                      // <all reflections>
    FiniteMatrixGroup wtilde;                 // char 0: W; char p: <W, all p-elements>
    unsigned long index_w = 0;                // [G : W]
    unsigned long index_wtilde = 0;           // [G : W~]
};

FiniteMatrixGroup reflection_subgroup(const FiniteMatrixGroup& g);
FiniteMatrixGroup wtilde_subgroup(const FiniteMatrixGroup& g);
bool has_no_reflections(const FiniteMatrixGroup& g);

/// Full classification pass over the group, with W and W~ and their indices.
ReflectionReport reflection_report(const FiniteMatrixGroup& g);

}  // namespace ginv
