#pragma once

#include <string>
#include <vector>

#include "nivatlab/complexity.hpp"
#include "nivatlab/configuration.hpp"
#include "nivatlab/geometry.hpp"
#include "nivatlab/words.hpp"

namespace nivatlab {

enum class Verdict {
    Consistent,     // hypothesis holds and a period is certified
    Vacuous,        // hypothesis fails
    Inconclusive,   // lower-bound data or uncertified periods
    Violation,      // hypothesis holds on exact counts, aperiodicity certified
};

std::string to_string(Verdict v);

struct NivatReport {
    std::vector<LatticePoint> shape;
    bool positive_area = false;
    bool quasi_regular = false;
    ComplexityReport complexity;
    Rational bound;   // |S|/2 + |A| - 1
    bool hypothesis_holds = false;
    PeriodReport periods;
    bool certified_aperiodic = false;
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
};

/// Periods certified by the representation itself: the lattice basis of a
/// doubly periodic body, (1,1) for the diagonal family, none for finite
/// defects (certified aperiodic); window samples fall back to an
/// uncertified search.
PeriodReport representation_periods(const Configuration& eta);

NivatReport nivat_check(const Configuration& eta, const ConvexLatticeSet& s);

struct ExampleRow {
    Int n = 0;
    Int k = 0;
    Int count = 0;
    Int expected = 0;
    bool ok = false;
};

struct ExampleSuite {
    std::vector<ExampleRow> closed_form;   // n + k <= max_sum
    std::vector<ExampleRow> half_area;     // P(n,k) > nk/2, expected holds nk
    std::vector<std::string> mismatches;
    bool passed() const { return mismatches.empty(); }
};

/// n + k for n + k <= 7, otherwise n + k + (n+k-7)(n+k-6)/2.
Int diagonal_closed_form(Int n, Int k);

ExampleSuite example_suite(Int max_sum = 14, Int half_max = 12);

}  // namespace nivatlab
