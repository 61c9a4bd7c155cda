#pragma once

// Pattern counting: P_eta(S), languages, directional languages and
// extension counts N_U(l, gamma).

#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "nivatlab/configuration.hpp"
#include "nivatlab/geometry.hpp"

namespace nivatlab {

struct ComplexityReport {
    std::vector<LatticePoint> shape;   // lexicographic order, as given (not canonicalized)
    Int count = 0;
    Exactness exactness = Exactness::Exact;
    Int translates_examined = 0;
};

/// Worker count for internal enumeration: NIVATLAB_THREADS, where unset or 0
/// means the hardware concurrency.
unsigned counting_threads();

/// P_eta(S). The empty shape has exactly one (empty) pattern.
ComplexityReport complexity(const Configuration& eta, std::span<const LatticePoint> s);
inline ComplexityReport complexity(const Configuration& eta, const ConvexLatticeSet& s) {
    return complexity(eta, std::span<const LatticePoint>(s.points()));
}

/// Memoizing front end; P_eta is translation invariant so the cache is
/// keyed by canonical shape. Safe to share between threads.
class ComplexityEngine {
public:
    explicit ComplexityEngine(const Configuration& eta) : eta_(eta) {}

    const Configuration& configuration() const { return eta_; }
    ComplexityReport complexity(std::span<const LatticePoint> s);
    ComplexityReport complexity(const ConvexLatticeSet& s) {
        return complexity(std::span<const LatticePoint>(s.points()));
    }
    std::size_t cache_size() const;

private:
    const Configuration& eta_;
    mutable std::mutex mutex_;
    std::map<std::vector<LatticePoint>, ComplexityReport> cache_;
};

struct ComplexityTable {
    Int n_max = 0;
    Int k_max = 0;
    std::vector<ComplexityReport> entries;   // entry (n,k) at (n-1)*k_max + (k-1)

    const ComplexityReport& at(Int n, Int k) const {
        return entries.at(static_cast<std::size_t>((n - 1) * k_max + (k - 1)));
    }
    /// Header `n,k,count,exact`.
    std::string csv() const;
};

/// P_eta(R_{n,k}) for 1 <= n <= n_max, 1 <= k <= k_max.
ComplexityTable complexity_table(const Configuration& eta, Int n_max, Int k_max);

struct Language {
    std::vector<Pattern> patterns;   // sorted
    Exactness exactness = Exactness::Exact;
};

/// L(S, eta).
Language language(const Configuration& eta, std::span<const LatticePoint> s);
inline Language language(const Configuration& eta, const ConvexLatticeSet& s) {
    return language(eta, std::span<const LatticePoint>(s.points()));
}

enum class DirectionalRange {
    All,        // t in Z
    Forward,    // t >= a
    Backward,   // shifts by -t*v, t >= a
};

/// Finite list of t whose shifts base + t*v realise every pattern of the
/// requested range. For Backward the listed values are the actual
/// multipliers of v (so they are <= -a).
struct DirectionalScan {
    std::vector<Int> ts;
    Exactness exactness = Exactness::Exact;
};

DirectionalScan directional_scan(const Configuration& eta, std::span<const LatticePoint> s, Vec v,
                                 LatticePoint base, DirectionalRange range, Int a = 0);

/// L^l(S, T^base eta), L^l_{a+} or L^l_{a-} with v = v_l.
Language directional_language(const Configuration& eta, std::span<const LatticePoint> s, Vec v,
                              LatticePoint base, DirectionalRange range = DirectionalRange::All, Int a = 0);

struct ExtensionTable {
    OrientedLine support;                  // l_U
    std::vector<LatticePoint> base_shape;  // U \ l_U
    /// Letters on U \ l_U -> sorted letters of every extension to U.
    std::map<std::string, std::vector<std::string>> extensions;
    Int full_count = 0;   // P(U), counted independently
    Int base_count = 0;   // P(U \ l_U), counted independently
    Exactness exactness = Exactness::Exact;
    bool identity_holds = false;   // sum (N - 1) == full_count - base_count

    Int n(const std::string& base_letters) const;
    Int excess() const;   // sum over gamma of N - 1
};

/// Throws DomainError when U is a single row parallel to l.
ExtensionTable extension_counts(const Configuration& eta, const ConvexLatticeSet& u, const OrientedLine& l);

/// Letters of (T^u eta)|_S in lexicographic order of S; the cheap key used
/// for hashing. `sorted` must already be sorted.
std::string pattern_key(const Configuration& eta, std::span<const LatticePoint> sorted, LatticePoint u);

}  // namespace nivatlab
