#include <doctest.h>

#include <algorithm>
#include <random>

#include "nivatlab/verifier.hpp"
#include "oracles.hpp"

using namespace nivatlab;

TEST_CASE("nivat check on the reference configurations") {
    auto diag = nivat_check(Configuration::diagonal_family(), ConvexLatticeSet::rectangle(3, 4));
    CHECK(diag.quasi_regular);
    CHECK(diag.complexity.count == 7);
    CHECK(diag.bound == Rational(7));
    CHECK(diag.hypothesis_holds);
    CHECK(diag.periods.certified);
    CHECK(diag.periods.periods == std::vector<Vec>{{1, 1}});
    CHECK(diag.verdict == Verdict::Consistent);

    auto fd = nivat_check(Configuration::finite_defect(Alphabet("bw"), 'w', {{{0, 0}, 'b'}}),
                          ConvexLatticeSet::rectangle(2, 2));
    CHECK(fd.complexity.count == 5);
    CHECK(fd.bound == Rational(3));
    CHECK_FALSE(fd.hypothesis_holds);
    CHECK(fd.certified_aperiodic);
    CHECK(fd.verdict == Verdict::Vacuous);

    auto cb = nivat_check(Configuration::doubly_periodic_tile(Alphabet("ab"), {"ab", "ba"}),
                          ConvexLatticeSet::rectangle(2, 2));
    CHECK(cb.complexity.count == 2);
    CHECK(cb.hypothesis_holds);
    CHECK(cb.verdict == Verdict::Consistent);
}

TEST_CASE("bounds are exact rationals") {
    auto r = nivat_check(Configuration::diagonal_family(), ConvexLatticeSet::rectangle(3, 3));
    CHECK(r.bound == Rational(11, 2));
    CHECK(r.complexity.count == 6);
    CHECK_FALSE(r.hypothesis_holds);
    CHECK(r.verdict == Verdict::Vacuous);
}

TEST_CASE("verdict gating") {
    auto tri = nivat_check(Configuration::diagonal_family(),
                           ConvexLatticeSet::hull_of(std::vector<LatticePoint>{{0, 0}, {2, 0}, {0, 2}}));
    CHECK_FALSE(tri.quasi_regular);
    CHECK(tri.verdict == Verdict::Vacuous);

    auto seg = nivat_check(Configuration::diagonal_family(), ConvexLatticeSet::rectangle(4, 1));
    CHECK_FALSE(seg.positive_area);
    CHECK(seg.verdict == Verdict::Vacuous);

    auto win = Configuration::window(Alphabet("ab"), {0, 0}, {"abab", "baba", "abab", "baba"});
    auto w = nivat_check(win, ConvexLatticeSet::rectangle(2, 2));
    CHECK(w.complexity.exactness == Exactness::LowerBound);
    CHECK(w.verdict == Verdict::Inconclusive);
    CHECK_FALSE(w.periods.certified);
}

TEST_CASE("representation periods") {
    auto sheared = Configuration::doubly_periodic_tile(Alphabet("ab"), {3, 0}, {1, 2}, {"abb", "bab"});
    auto p = representation_periods(sheared);
    CHECK(p.certified);
    CHECK(p.periods.size() == 2);
    auto fd = representation_periods(Configuration::finite_defect(Alphabet("bw"), 'w', {{{0, 0}, 'b'}}));
    CHECK(fd.certified);
    CHECK(fd.periods.empty());
}

TEST_CASE("closed form and example suite") {
    CHECK(diagonal_closed_form(1, 1) == 2);
    CHECK(diagonal_closed_form(3, 4) == 7);
    CHECK(diagonal_closed_form(4, 4) == 9);
    CHECK(diagonal_closed_form(7, 7) == 42);

    auto suite = example_suite(13, 8);
    CHECK(suite.passed());
    for (const auto& row : suite.half_area) CHECK(row.ok);

    auto full = example_suite(14, 4);
    CHECK_FALSE(full.passed());
    for (const auto& row : full.closed_form)
        if (row.n + row.k == 14) {
            CHECK(row.count == 43);
            CHECK(row.expected == 42);
        }
}

TEST_CASE("no violations on random finite-defect and periodic instances") {
    std::mt19937_64 rng(67);
    std::vector<ConvexLatticeSet> shapes = {ConvexLatticeSet::rectangle(2, 2), ConvexLatticeSet::rectangle(3, 2),
                                            ConvexLatticeSet::rectangle(3, 3)};
    for (int trial = 0; trial < 60; ++trial) {
        const auto& s = shapes[static_cast<std::size_t>(trial) % shapes.size()];
        if (trial % 2 == 0) {
            std::map<LatticePoint, char> defects;
            int m = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < m; ++i)
                defects[{static_cast<Int>(rng() % 5), static_cast<Int>(rng() % 5)}] = "bc"[rng() % 2];
            std::string used = "a";
            for (auto [g, c] : defects)
                if (used.find(c) == std::string::npos) used += c;
            std::sort(used.begin(), used.end());
            auto eta = Configuration::finite_defect(Alphabet(used), 'a', defects);
            auto r = nivat_check(eta, s);
            CHECK(r.verdict != Verdict::Violation);
            CHECK(r.verdict == Verdict::Vacuous);
        } else {
            auto tile = oracle::random_tile(rng, "abc", 12);
            auto eta = Configuration::doubly_periodic_tile(Alphabet("abc"), {tile.p, 0}, {tile.s, tile.q},
                                                           tile.rows_top_down());
            auto r = nivat_check(eta, s);
            CHECK(r.verdict != Verdict::Violation);
            CHECK(r.verdict != Verdict::Inconclusive);
        }
    }
}
