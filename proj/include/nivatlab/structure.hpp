#pragma once

// Generating sets, mlc sets, balanced sets and the strip machinery built
// on top of exact pattern counts.

#include <optional>
#include <string>
#include <vector>

#include "nivatlab/complexity.hpp"
#include "nivatlab/geometry.hpp"

namespace nivatlab {

/// A concrete instance lhs <= rhs of some inequality.
struct InequalityInstance {
    std::string name;
    std::string lhs_text;
    std::string rhs_text;
    Rational lhs;
    Rational rhs;
    bool holds = false;

    static InequalityInstance make(std::string name, std::string lhs_text, Rational lhs, std::string rhs_text,
                                   Rational rhs);
    std::string str() const;
};

std::string to_string(const Rational& r);

struct GenerationCertificate {
    LatticePoint point;
    Int with_point = 0;      // P(S)
    Int without_point = 0;   // P(S \ {g})
    bool generated = false;
};

enum class SearchStatus {
    Found,
    NoClaim,   // precondition fails
    Refused,   // lower-bound counts cannot decide
};

std::string to_string(SearchStatus s);

struct SubsetAudit {
    Int checked = 0;
    bool exhaustive = false;   // every proper convex subset was visited
    Int violations = 0;
    std::vector<InequalityInstance> failures;   // first few
};

struct GeneratingSetResult {
    SearchStatus status = SearchStatus::NoClaim;
    std::string kind;   // GENERATING, DIRECTIONAL or MLC
    std::string message;
    std::optional<ConvexLatticeSet> set;
    std::optional<OrientedLine> direction;
    Int complexity = 0;
    InequalityInstance precondition;
    InequalityInstance bound_check;
    std::vector<GenerationCertificate> certificates;
    std::vector<Int> chain_sizes;   // sizes along the descent

    // Directional search.
    std::vector<Int> peel_sizes;
    Int peel_index = 0;   // I, 1-based
    std::optional<InequalityInstance> increment_bound;   // P(S) - P(S \ l_S) <= |l_S ∩ S| - 1
    std::optional<bool> half_plane_section;              // S \ l_S == U ∩ H
    std::optional<OrientedLine> half_plane_boundary;

    // mlc search.
    std::optional<SubsetAudit> minimality;        // proper convex subsets all violate the mlc bound
    std::optional<SubsetAudit> mlc_inequality;    // P(S) - P(T) <= ceil(|S \ T| / 2) - 1
    std::vector<InequalityInstance> increment_audit;   // increment bound over audit directions
    bool positive_area = false;
    std::optional<InequalityInstance> three_on_support;  // 3 <= |l_S ∩ S|; positive-area sets only
};

/// P(S) == P(S \ {g}); nullopt when either count is only a lower bound.
std::optional<bool> is_generated(ComplexityEngine& engine, const ConvexLatticeSet& s, LatticePoint g);

/// Minimal convex subset along a vertex-removal chain with
/// P(T) <= |T| + |A| - 2.
GeneratingSetResult find_generating_set(ComplexityEngine& engine, const ConvexLatticeSet& u);

/// Row peeling along l followed by a descent that only removes vertices
/// on the supporting line of the selected peel.
GeneratingSetResult find_directional_generating_set(ComplexityEngine& engine, const ConvexLatticeSet& u,
                                                    const OrientedLine& l);

struct MlcOptions {
    std::optional<OrientedLine> nonexpansive_candidate;
    std::size_t exhaustive_limit = 200000;   // cap on enumerated convex subsets
};

/// Minimal convex subset with 2 P(T) <= |T| + 2|A| - 2, audited against
/// every proper convex subset when the enumeration fits the limit.
GeneratingSetResult find_mlc_set(ComplexityEngine& engine, const ConvexLatticeSet& u, const MlcOptions& opts = {});

/// Proper nonempty convex subsets of s, in breadth-first vertex-removal
/// order. `complete` is false when the limit cut the enumeration short.
std::vector<ConvexLatticeSet> proper_convex_subsets(const ConvexLatticeSet& s, std::size_t limit, bool& complete);

struct DirectionalPointSets {
    OrientedLine support;   // l_U
    Vec v;                  // v_l
    Int p = 0;
    std::vector<LatticePoint> initial;   // I^{l,p}(U)
    std::vector<LatticePoint> final;     // F^{l,p}(U)

    /// union over t in [t_lo, t_hi] of initial + t v.
    std::vector<LatticePoint> strip(Int t_lo, Int t_hi) const;
    /// F^+(a) truncated at t_hi.
    std::vector<LatticePoint> half_strip_plus(Int a, Int t_hi) const;
    /// F^-(a) truncated at t_hi.
    std::vector<LatticePoint> half_strip_minus(Int a, Int t_hi) const;
};

/// Throws DomainError unless u has positive area and p >= 1.
DirectionalPointSets directional_point_sets(const ConvexLatticeSet& u, const OrientedLine& l, Int p);

/// Translates x = T^u eta of the enumeration domain with N_U(l, gamma) > 1
/// for every gamma in L^l(U \ l_U, x). One representative per class of
/// equal directional language. Scope is empirical.
struct EmpiricalM {
    std::vector<LatticePoint> members;
    Int translates_examined = 0;
    Int classes = 0;
    Exactness exactness = Exactness::Exact;
};

EmpiricalM empirical_m(ComplexityEngine& engine, const ConvexLatticeSet& u, const OrientedLine& l);

struct XWitness {
    LatticePoint translate;
    Int induced_alphabet = 0;   // |A^{l,p}(U,x)|
    std::optional<Int> p_x;     // smallest admissible p_x, if any
    bool holds = false;
};

struct PhiResult {
    Int value = 0;
    std::string which_case;   // DIFFERENCE or MAX_FORM
    Int increment = 0;        // P(T) - P(T \ l_T)
    Int m_classes = 0;
    bool balanced_for_all = true;   // an admissible p_x exists for each x
    std::vector<XWitness> witnesses;
    InequalityInstance halved_bound;   // 2 Phi <= 2 ceil(|l_T ∩ T| / 2) - 2
    std::string scope = "EMPIRICAL";
};

PhiResult phi(ComplexityEngine& engine, const ConvexLatticeSet& t, const OrientedLine& l, Int p);

struct LineCount {
    Int level = 0;
    Int count = 0;
};

struct BalancedOptions {
    bool assume_nonexpansive = true;
    Int witness_radius = 2;
};

struct BalancedSetCertificate {
    std::string status;        // CONSTRUCTED, DEGENERATE, HYPOTHESIS_FAILS or CONSTRUCTION_ERROR
    std::string failed_step;   // set on CONSTRUCTION_ERROR
    OrientedLine direction = OrientedLine::horizontal();
    InequalityInstance hypothesis;   // P(U) <= |U|/2 + |A| - 1
    Rational centre_x;
    Rational centre_y;
    std::pair<std::size_t, std::size_t> edge_pair{0, 0};
    Int cut_level = 0;   // T = U ∩ {level <= cut_level}
    std::optional<ConvexLatticeSet> t;
    std::optional<ConvexLatticeSet> s;
    bool s_positive_area = false;   // false only when DEGENERATE
    std::vector<InequalityInstance> assertions;
    Int p = 0;
    bool p_positive = false;
    std::vector<LineCount> condition_i;
    bool condition_i_holds = false;
    bool chord_recheck_holds = false;
    std::vector<XWitness> condition_ii;
    bool condition_ii_holds = false;
    Int m_size = 0;
    std::optional<PhiResult> phi;
    bool assume_nonexpansive = true;
    std::optional<ConvexLatticeSet> expansive_witness;   // found within the radius, if any
    Int witness_radius = 0;
    std::string note;
    std::string scope = "EMPIRICAL";
};

/// Throws DomainError when u is not quasi-regular.
BalancedSetCertificate construct_balanced_set(ComplexityEngine& engine, const ConvexLatticeSet& u,
                                              const OrientedLine& l, const BalancedOptions& opts = {});

struct StripLemmaReport {
    std::string status;   // PASS, FAIL or INCONCLUSIVE
    bool vacuous = false; // no x in the empirical M
    bool generating = false;   // vertices of U on l_U are generated
    Int m_size = 0;
    Int checked = 0;
    std::vector<std::string> details;
    std::string scope = "EMPIRICAL";
};

/// For every empirical x in M(l,U) meeting the increment hypothesis, looks
/// for a period t v_l of x on the (l,U,p)-strip with t <= p + |A^{l,p}| - 2,
/// using the strip word over t in [-window, window].
StripLemmaReport verify_strip_lemma(ComplexityEngine& engine, const ConvexLatticeSet& u, const OrientedLine& l,
                                    Int p, Int window);

struct WitnessResult {
    std::optional<ConvexLatticeSet> witness;
    LatticePoint point;   // the single generated point of l_S ∩ S
    Int candidates = 0;
    Int radius = 0;
};

/// First convex hull of at most four points of [-r,r]^2 (by size, then
/// shape) whose supporting intersection with l is one generated point.
WitnessResult expansive_witness(ComplexityEngine& engine, const OrientedLine& l, Int radius);

}  // namespace nivatlab
