#include "nivatlab/verifier.hpp"

#include <algorithm>
#include <variant>

namespace nivatlab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Consistent: return "CONSISTENT";
        case Verdict::Vacuous: return "VACUOUS";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

PeriodReport representation_periods(const Configuration& eta) {
    PeriodReport rep;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, DoublyPeriodic>) {
                rep.periods = {{b.p, 0}, {b.s, b.q}};
                rep.certified = true;
                rep.note = "period lattice basis";
            } else if constexpr (std::is_same_v<T, DiagonalFamily>) {
                rep.periods = {{1, 1}};
                rep.certified = true;
                rep.note = "constant along (1,1) diagonals";
            } else if constexpr (std::is_same_v<T, FiniteDefect>) {
                rep.certified = true;
                rep.note = "a nonempty finite defect set has no period";
            } else {
                const Int side = std::max<Int>(1, std::min(b.width, b.height) / 2);
                rep = detect_periods_2d(eta, side);
            }
        },
        eta.body());
    std::sort(rep.periods.begin(), rep.periods.end());
    return rep;
}

NivatReport nivat_check(const Configuration& eta, const ConvexLatticeSet& s) {
    NivatReport r;
    r.shape = s.points();
    const Int a = static_cast<Int>(eta.alphabet().size());
    r.bound = Rational(static_cast<Int>(s.size()), 2) + a - 1;
    r.complexity = complexity(eta, s);
    r.hypothesis_holds = Rational(r.complexity.count) <= r.bound;
    r.positive_area = s.has_positive_area();
    r.quasi_regular = r.positive_area && is_quasi_regular(s).regular;
    r.periods = representation_periods(eta);
    r.certified_aperiodic = r.periods.certified && r.periods.periods.empty();

    const bool exact = r.complexity.exactness == Exactness::Exact;
    if (!exact) r.hypothesis_holds = false;
    if (!r.quasi_regular) {
        r.verdict = Verdict::Vacuous;
        r.reason = r.positive_area ? "shape is not quasi-regular" : "shape has a null-area hull";
    } else if (!exact) {
        const bool over = Rational(r.complexity.count) > r.bound;
        r.verdict = over ? Verdict::Vacuous : Verdict::Inconclusive;
        r.reason = over ? "lower bound on P already exceeds the bound"
                        : "complexity is only a lower bound; the hypothesis cannot be confirmed";
    } else if (!r.hypothesis_holds) {
        r.verdict = Verdict::Vacuous;
        r.reason = "P(S) exceeds |S|/2 + |A| - 1";
    } else if (r.periods.certified && !r.periods.periods.empty()) {
        r.verdict = Verdict::Consistent;
        r.reason = "hypothesis holds and a period is certified";
    } else if (r.certified_aperiodic) {
        r.verdict = Verdict::Violation;
        r.reason = "hypothesis holds on exact counts but the configuration is certified aperiodic";
    } else {
        r.verdict = Verdict::Inconclusive;
        r.reason = "hypothesis holds but no period is certified";
    }
    return r;
}

Int diagonal_closed_form(Int n, Int k) {
    const Int m = n + k;
    if (m <= 7) return m;
    return m + (m - 7) * (m - 6) / 2;
}

ExampleSuite example_suite(Int max_sum, Int half_max) {
    const auto eta = Configuration::diagonal_family();
    ComplexityEngine engine(eta);
    ExampleSuite suite;
    auto count = [&](Int n, Int k) {
        const auto rep = engine.complexity(ConvexLatticeSet::rectangle(n, k));
        if (rep.exactness != Exactness::Exact)
            suite.mismatches.push_back("(" + std::to_string(n) + "," + std::to_string(k) + ") count is not exact");
        return rep.count;
    };
    for (Int n = 1; n < max_sum; ++n)
        for (Int k = 1; n + k <= max_sum; ++k) {
            ExampleRow row{n, k, count(n, k), diagonal_closed_form(n, k), false};
            row.ok = row.count == row.expected;
            if (!row.ok)
                suite.mismatches.push_back("P(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                           std::to_string(row.count) + ", closed form gives " +
                                           std::to_string(row.expected));
            suite.closed_form.push_back(row);
        }
    for (Int n = 1; n <= half_max; ++n)
        for (Int k = 1; k <= half_max; ++k) {
            ExampleRow row{n, k, count(n, k), n * k, false};
            row.ok = 2 * row.count > row.expected;
            if (!row.ok)
                suite.mismatches.push_back("P(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                           std::to_string(row.count) + " <= nk/2");
            suite.half_area.push_back(row);
        }
    return suite;
}

}  // namespace nivatlab
