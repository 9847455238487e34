#pragma once

// Decision pipeline: parse a group spec, assemble reflection data, class
// group and determinant characters, probe the invariant ring of the relevant
// normal subgroup for polynomial structure, and decide the quasi-Gorenstein
// property of the invariant ring from the quotient character. Plus the CLI.

#include "ginv/invariants.hpp"
#include "ginv/reflect.hpp"
#include "ginv/series.hpp"

#include <optional>

namespace ginv {

struct GroupSpecOptions {
    unsigned cap = FiniteMatrixGroup::kDefaultCap;
    unsigned max_degree = 0;  // 0 = automatic: min(max(8, |G|), 12)
    bool assert_polynomial = false;
};

struct GroupSpec {
    FieldPtr field;
    unsigned dim = 0;
    std::vector<Mat> generators;
    GroupSpecOptions options;
};

/// Scalar literals: integer, "a/b", or generator powers "g", "g^3", "-g^2"
/// (g = zeta_N resp. the residue of x for extension fields).
Scalar scalar_from_string(const FieldPtr& f, const std::string& s);

GroupSpec parse_group_spec(const std::string& json_text);
GroupSpec load_group_spec(const std::string& path);
FiniteMatrixGroup enumerate_spec(const GroupSpec& spec);

enum class ProbeStatus { Polynomial, NotPolynomial, Inconclusive };
const char* probe_status_name(ProbeStatus s);

struct ProbeResult {
    ProbeStatus status = ProbeStatus::Inconclusive;
    unsigned bound = 0;                // degrees examined: 1..bound
    std::vector<unsigned> degrees;     // generator degrees, ascending
    std::vector<MultiPoly> generators; // minimal generators found, by degree
    std::vector<unsigned long> dims;   // dim of the invariant space per degree 0..bound
};

/// Greedy minimal-generator extraction for the invariant ring of h, degree by
/// degree; polynomial iff dim(h) generators, no relations among their power
/// products, and the Hilbert series matches prod 1/(1 - t^{d_i}) up to the bound.
ProbeResult probe_polynomial_structure(const FiniteMatrixGroup& h, unsigned D);

struct GradedAction {
    std::vector<unsigned> degrees;          // distinct generator degrees, ascending
    std::vector<std::vector<Mat>> actions;  // actions[i][j]: generator j of g on the degree-degrees[i] piece
};

/// Action of one matrix on the spaces S_d / (S^+ S^+)_d spanned by the probe
/// generators of each degree (S = invariant ring of h; m must normalize h).
std::vector<Mat> induced_action_of(const Mat& m, const FiniteMatrixGroup& h,
                                   const ProbeResult& probe);
/// Same for every generator of g.
GradedAction induced_generator_action(const FiniteMatrixGroup& g, const FiniteMatrixGroup& h,
                                      const ProbeResult& probe);

enum class Verdict { Yes, No, Inconclusive };
const char* verdict_name(Verdict v);

struct AnalysisReport {
    GroupSpec spec;
    FiniteMatrixGroup group;
    ReflectionReport reflections;
    ClassGroupDescription class_group_desc;
    LinearCharacter det_char;
    bool probe_ran = false;
    ProbeResult probe;                        // of A^W (char 0) resp. A^{W~} (char p)
    std::vector<LinearCharacter> piece_dets;  // det_i on the graded pieces
    std::optional<LinearCharacter> lambda_s;  // prod det_i^{-1}; trivial <=> quasi-Gorenstein
    Verdict verdict = Verdict::Inconclusive;
    std::string rule;                         // "no-reflection", "quotient-character", "none"
    std::vector<std::string> conditions;
    std::vector<std::string> notes;
};

AnalysisReport quasi_gorenstein_verdict(const GroupSpec& spec);

/// Deterministic JSON rendering (byte-identical across runs for equal input).
std::string report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);

int run_cli(int argc, char** argv);

}  // namespace ginv
