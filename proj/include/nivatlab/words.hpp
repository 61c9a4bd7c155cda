#pragma once

// One-dimensional periodicity engines and period detection on
// configurations along lattice directions.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nivatlab/configuration.hpp"
#include "nivatlab/geometry.hpp"

namespace nivatlab {

/// Finite window (xi_t) for t in [start, start + size). Symbols are small
/// integers so that induced alphabets of patterns fit as well as letters.
struct Word {
    std::vector<int> symbols;
    Int start = 0;

    static Word from_string(std::string_view letters, Int start = 0);
    std::size_t size() const { return symbols.size(); }
    /// Letters when every symbol is printable, otherwise dot-separated ids.
    std::string str() const;
    Int distinct_symbols() const;
};

/// Number of distinct length-n factors. Throws DomainError unless 1 <= n <= |w|.
Int word_complexity(const Word& w, Int n);

bool has_period(const Word& w, Int p, std::size_t from = 0);
/// Smallest p in [1, max_p] that is a period of w[from..]; nullopt if none.
std::optional<Int> smallest_period(const Word& w, Int max_p, std::size_t from = 0);

enum class Sidedness { OneSided, TwoSided };

enum class MhStatus {
    HypothesisFails,   // P(n0) > n0 + |A| - 2: nothing to check
    Verified,          // a period <= n0' was found
    Inconclusive,      // window too short, or not a factor of an infinite sequence with the same factors
    Violation,         // hypothesis holds on an extendable window but no period <= n0'
};

std::string to_string(MhStatus s);

struct MhResult {
    MhStatus status = MhStatus::Inconclusive;
    Int n0 = 0;
    Int n0_prime = 0;
    Int alphabet_size = 0;
    Int complexity = 0;
    std::optional<Int> period;
    std::string detail;
};

/// Alphabetical Morse-Hedlund check. `alphabet_size` defaults to the
/// number of distinct symbols; a word missing letters is a DomainError.
/// One-sided windows drop the first n0' positions before the period search.
MhResult mh_check(const Word& w, Int n0, Sidedness side = Sidedness::OneSided,
                  std::optional<Int> alphabet_size = std::nullopt);

struct FineWilfResult {
    bool applies = false;
    Int combined_period = 0;   // gcd(p,q) when applies
    Int critical_length = 0;   // p + q - gcd(p,q)
};

/// Throws DomainError if p or q is not actually a period of w.
FineWilfResult fine_wilf(const Word& w, Int p, Int q);

struct PeriodReport {
    std::vector<Vec> periods;   // sorted
    bool certified = false;
    std::string note;
};

/// All nonzero h with max(|hx|,|hy|) <= bound and eta(g+h) = eta(g).
PeriodReport detect_periods_2d(const Configuration& eta, Int bound);

struct StripWord {
    Word word;                      // symbol i stands for alphabet[i]
    std::vector<Pattern> alphabet;  // induced alphabet, sorted
};

/// xi_t = (T^{t v} eta)|_base for t in [t_first, t_last].
StripWord strip_word(const Configuration& eta, Vec v, std::span<const LatticePoint> base,
                     Int t_first, Int t_last);

struct StripPeriod {
    std::optional<Int> period;   // smallest t with period t*v on the strip
    bool certified = false;      // proven for the whole strip by the representation
    bool aperiodic = false;      // certified: no period along v at all
};

/// Smallest period along v of eta restricted to union_t (base + t v).
/// Window samples search up to max_period on known cells only.
StripPeriod strip_period(const Configuration& eta, std::span<const LatticePoint> base, Vec v, Int max_period);

struct NullAreaReport {
    bool hypothesis_holds = false;
    Int complexity = 0;
    Exactness exactness = Exactness::Exact;
    Int bound = 0;                   // |S| + |A| - 2
    Vec direction;                    // carrier direction of S
    std::vector<Int> row_periods;     // one per row class
    std::optional<Vec> period;        // lcm of row periods times direction
    bool certified = false;
    bool rows_within_bound = false;   // every row period <= bound
    bool within_magnitude_bound = false;   // |period| <= bound * |direction|
    std::string status;               // NO_CLAIM, PERIODIC, INCONCLUSIVE, VIOLATION
};

/// Periodicity forced by a null-area set meeting P(S) <= |S| + |A| - 2.
NullAreaReport null_area_period(const Configuration& eta, const ConvexLatticeSet& s);

}  // namespace nivatlab
