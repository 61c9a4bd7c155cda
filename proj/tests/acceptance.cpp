// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nivatlab/complexity.hpp"
#include "nivatlab/structure.hpp"
#include "nivatlab/verifier.hpp"
#include "nivatlab/words.hpp"
#include "oracles.hpp"

using namespace nivatlab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    Int violations = 0;   // VIOLATION-class events, for the global soundness tally
};

using Clock = std::chrono::steady_clock;

Configuration random_periodic(std::mt19937_64& rng, const std::string& letters, Int max_cells, oracle::Tile* out) {
    auto tile = oracle::random_tile(rng, letters, max_cells);
    if (out) *out = tile;
    return Configuration::doubly_periodic_tile(Alphabet(letters), {tile.p, 0}, {tile.s, tile.q}, tile.rows_top_down());
}

Outcome low_range() {
    auto t = complexity_table(Configuration::diagonal_family(), 6, 6);
    std::ostringstream bad;
    int checked = 0;
    for (Int n = 1; n <= 6; ++n)
        for (Int k = 1; n + k <= 7; ++k) {
            ++checked;
            const auto& e = t.at(n, k);
            if (e.count != n + k || e.exactness != Exactness::Exact)
                bad << " P(" << n << "," << k << ")=" << e.count;
        }
    if (!bad.str().empty()) return {false, "mismatch:" + bad.str()};
    return {true, std::to_string(checked) + " entries equal n+k"};
}

Outcome equality_case() {
    auto r = complexity(Configuration::diagonal_family(), ConvexLatticeSet::rectangle(3, 4));
    Rational bound = Rational(12, 2) + 2 - 1;
    bool ok = r.count == 7 && r.exactness == Exactness::Exact && Rational(r.count) == bound;
    return {ok, "P(3,4) = " + std::to_string(r.count) + ", |S|/2 + |A| - 1 = " + to_string(bound)};
}

Outcome high_range() {
    auto t = complexity_table(Configuration::diagonal_family(), 13, 13);
    std::ostringstream bad;
    int checked = 0, failed = 0;
    for (Int n = 1; n <= 13; ++n)
        for (Int k = 1; k <= 13; ++k) {
            Int m = n + k;
            if (m < 8 || m > 14) continue;
            ++checked;
            Int expected = m + (m - 7) * (m - 6) / 2;
            const auto& e = t.at(n, k);
            if (e.count != expected || e.exactness != Exactness::Exact) {
                if (failed < 3) bad << (failed ? ", " : " ") << "P(" << n << "," << k << ")=" << e.count << " expected " << expected;
                ++failed;
            }
        }
    if (failed) return {false, std::to_string(failed) + " of " + std::to_string(checked) + " entries differ:" + bad.str()};
    return {true, std::to_string(checked) + " entries match the closed form"};
}

Outcome half_area() {
    auto t = complexity_table(Configuration::diagonal_family(), 12, 12);
    for (Int n = 1; n <= 12; ++n)
        for (Int k = 1; k <= 12; ++k) {
            const auto& e = t.at(n, k);
            if (e.exactness != Exactness::Exact || 2 * e.count <= n * k)
                return {false, "P(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(e.count) +
                                   " <= nk/2"};
        }
    return {true, "P(n,k) > nk/2 for all 144 blocks"};
}

Outcome nivat_diagonal() {
    auto r = nivat_check(Configuration::diagonal_family(), ConvexLatticeSet::rectangle(3, 4));
    bool has11 = false;
    for (auto h : r.periods.periods) has11 = has11 || h == Vec{1, 1};
    bool ok = r.hypothesis_holds && r.periods.certified && has11 && r.verdict == Verdict::Consistent;
    return {ok, "verdict " + to_string(r.verdict) + ", P = " + std::to_string(r.complexity.count) + ", bound " +
                    to_string(r.bound),
            r.verdict == Verdict::Violation ? 1 : 0};
}

Outcome morse_hedlund() {
    std::mt19937_64 rng(20261015);
    Int violations = 0, hypothesis = 0, engine_violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int asize = 2 + static_cast<int>(rng() % 3);
        std::string letters = std::string("abcd").substr(0, static_cast<std::size_t>(asize));
        std::string period, pre;
        int plen = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < plen; ++i) period += letters[rng() % letters.size()];
        int prelen = static_cast<int>(rng() % 5);
        for (int i = 0; i < prelen; ++i) pre += letters[rng() % letters.size()];
        std::string missing;
        for (char c : letters)
            if ((pre + period).find(c) == std::string::npos) missing += c;
        pre = missing + pre;
        std::string s = pre;
        while (s.size() < 64) s += period;

        Int n0 = 1 + static_cast<Int>(rng() % 6);
        Int n0p = n0 + asize - 2;
        auto r = mh_check(Word::from_string(s), n0, Sidedness::OneSided, asize);
        if (r.status == MhStatus::Violation) ++engine_violations;
        if (oracle::factor_count(s, static_cast<std::size_t>(n0)) > n0p) continue;
        ++hypothesis;
        bool found = false;
        for (Int p = 1; p <= n0p && !found; ++p)
            found = oracle::has_period(s, static_cast<std::size_t>(p), static_cast<std::size_t>(n0p));
        if (!found) ++violations;
        if (r.status != MhStatus::Verified || !r.period || *r.period > n0p ||
            !oracle::has_period(s, static_cast<std::size_t>(*r.period), static_cast<std::size_t>(n0p)))
            ++engine_violations;
    }
    bool ok = violations == 0 && engine_violations == 0;
    return {ok,
            "500 words, hypothesis held on " + std::to_string(hypothesis) + ", violations " +
                std::to_string(violations) + " (oracle) / " + std::to_string(engine_violations) + " (checker)",
            violations + engine_violations};
}

Outcome fine_wilf_suite() {
    Int words = 0, failures = 0;
    for (Int p = 1; p <= 8; ++p)
        for (Int q = 1; q <= 8; ++q) {
            Int g = std::gcd(p, q);
            Int len = p + q - g;
            for (Int mask = 0; mask < (Int{1} << len); ++mask) {
                std::string s;
                for (Int i = 0; i < len; ++i) s += (mask >> i & 1) ? 'b' : 'a';
                if (!oracle::has_period(s, static_cast<std::size_t>(p)) ||
                    !oracle::has_period(s, static_cast<std::size_t>(q)))
                    continue;
                ++words;
                auto r = fine_wilf(Word::from_string(s), p, q);
                if (!r.applies || r.combined_period != g || !oracle::has_period(s, static_cast<std::size_t>(g)))
                    ++failures;
            }
        }
    // Length 7 = 4 + 6 - 2 - 1 with periods 4 and 6 but not 2.
    const std::string sub = "abaaaba";
    auto r = fine_wilf(Word::from_string(sub), 4, 6);
    bool non_example = oracle::has_period(sub, 4) && oracle::has_period(sub, 6) && !oracle::has_period(sub, 2) &&
                       !r.applies;
    bool ok = failures == 0 && non_example;
    return {ok, std::to_string(words) + " critical-length words, " + std::to_string(failures) +
                    " failures; sub-critical \"" + sub + "\" " + (non_example ? "not forced" : "mishandled")};
}

Outcome engine_oracle() {
    std::mt19937_64 rng(8);
    auto masks = oracle::convex_subsets(4, 4);
    Int comparisons = 0, mismatches = 0;
    for (int trial = 0; trial < 50; ++trial) {
        oracle::Tile tile;
        auto eta = random_periodic(rng, trial % 3 == 0 ? "abc" : "ab", 16, &tile);
        for (auto m : masks) {
            auto cells = oracle::mask_points(m, 4);
            std::vector<LatticePoint> shape;
            for (auto [x, y] : cells) shape.push_back({x, y});
            ++comparisons;
            if (complexity(eta, shape).count != oracle::naive_count(tile, cells)) ++mismatches;
        }
    }
    return {mismatches == 0, std::to_string(masks.size()) + " convex shapes x 50 configurations, " +
                                 std::to_string(mismatches) + " mismatches in " + std::to_string(comparisons)};
}

Outcome quasi_regularity() {
    int blocks = 0;
    for (Int n = 2; n <= 8; ++n)
        for (Int k = 2; k <= 8; ++k) {
            if (!is_quasi_regular(ConvexLatticeSet::rectangle(n, k)).regular)
                return {false, "R_{" + std::to_string(n) + "," + std::to_string(k) + "} not quasi-regular"};
            ++blocks;
        }
    // Blocks with a side of length 1 have null area and sit outside the definition.
    int thin = 0;
    for (Int n = 1; n <= 8; ++n)
        for (Int k = 1; k <= 8; ++k) {
            if (n > 1 && k > 1) continue;
            try {
                is_quasi_regular(ConvexLatticeSet::rectangle(n, k));
                return {false, "null-area block accepted"};
            } catch (const DomainError&) {
                ++thin;
            }
        }
    auto tri = ConvexLatticeSet::hull_of(std::vector<LatticePoint>{{0, 0}, {2, 0}, {0, 2}});
    auto hex = ConvexLatticeSet::hull_of(std::vector<LatticePoint>{{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
    bool ok = !is_quasi_regular(tri).regular && is_quasi_regular(hex).regular;
    return {ok, std::to_string(blocks) + " positive-area blocks regular, " + std::to_string(thin) +
                    " null-area blocks rejected, triangle " + (is_quasi_regular(tri).regular ? "regular" : "not regular") +
                    ", hexagon " + (is_quasi_regular(hex).regular ? "regular" : "not regular")};
}

Outcome structural_audit() {
    std::ostringstream bad;
    Int audited = 0, violations = 0;

    auto audit = [&](const Configuration& eta, const ConvexLatticeSet& u, const std::string& name) {
        ComplexityEngine engine(eta);
        auto r = find_mlc_set(engine, u);
        if (r.status != SearchStatus::Found) return;
        ++audited;
        bool ok = r.mlc_inequality && r.mlc_inequality->violations == 0 && r.bound_check.holds;
        for (const auto& i : r.increment_audit) ok = ok && i.holds;
        if (!ok) {
            ++violations;
            bad << " mlc audit failed on " << name << ";";
        }
    };
    audit(Configuration::diagonal_family(), ConvexLatticeSet::rectangle(3, 4), "diagonal R_{3,4}");
    audit(Configuration::doubly_periodic_tile(Alphabet("ab"), {"ab", "ba"}), ConvexLatticeSet::rectangle(2, 2),
          "checkerboard R_{2,2}");
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        auto eta = random_periodic(rng, "ab", 8, nullptr);
        audit(eta, ConvexLatticeSet::rectangle(2 + trial % 2, 3), "random periodic #" + std::to_string(trial));
    }

    auto diag = Configuration::diagonal_family();
    ComplexityEngine de(diag);
    auto c = construct_balanced_set(de, ConvexLatticeSet::rectangle(3, 4), OrientedLine::horizontal());
    bool constructed = c.status == "CONSTRUCTED" && c.s.has_value();
    for (const auto& a : c.assertions) constructed = constructed && a.holds;
    constructed = constructed && c.condition_i_holds && c.chord_recheck_holds && c.condition_ii_holds;
    if (!constructed) {
        ++violations;
        bad << " balanced construction " << c.status << (c.failed_step.empty() ? "" : " at " + c.failed_step) << ";";
    }
    std::string strip = "not run";
    if (c.s) {
        auto s = verify_strip_lemma(de, *c.s, OrientedLine::horizontal(), c.p, 64);
        strip = s.status + (s.vacuous ? " (vacuous)" : "");
        if (s.status != "PASS") {
            if (s.status == "FAIL") ++violations;
            bad << " strip lemma " << s.status << ";";
        }
    }
    bool ok = bad.str().empty();
    return {ok,
            std::to_string(audited) + " mlc sets audited; balanced set " + c.status + ", p = " + std::to_string(c.p) +
                "; strip lemma " + strip + (ok ? "" : ";" + bad.str()),
            violations};
}

Outcome random_nivat(Int& violations) {
    std::mt19937_64 rng(11);
    std::vector<ConvexLatticeSet> shapes = {
        ConvexLatticeSet::rectangle(2, 2), ConvexLatticeSet::rectangle(3, 2), ConvexLatticeSet::rectangle(3, 3),
        ConvexLatticeSet::rectangle(4, 3), ConvexLatticeSet::rectangle(3, 4),
        ConvexLatticeSet::hull_of(std::vector<LatticePoint>{{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}})};
    std::map<Verdict, Int> tally;
    for (int trial = 0; trial < 200; ++trial) {
        const auto& s = shapes[rng() % shapes.size()];
        NivatReport r;
        if (trial % 2 == 0) {
            std::map<LatticePoint, char> defects;
            int m = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < m; ++i)
                defects[{static_cast<Int>(rng() % 6) - 3, static_cast<Int>(rng() % 6) - 3}] = "bc"[rng() % 2];
            std::string used = "a";
            for (auto [g, ch] : defects)
                if (used.find(ch) == std::string::npos) used += ch;
            std::sort(used.begin(), used.end());
            r = nivat_check(Configuration::finite_defect(Alphabet(used), 'a', defects), s);
        } else {
            r = nivat_check(random_periodic(rng, rng() % 2 ? "ab" : "abc", 16, nullptr), s);
        }
        ++tally[r.verdict];
    }
    violations += tally[Verdict::Violation];
    std::ostringstream out;
    out << "200 random instances: " << tally[Verdict::Consistent] << " CONSISTENT, " << tally[Verdict::Vacuous]
        << " VACUOUS, " << tally[Verdict::Inconclusive] << " INCONCLUSIVE, " << tally[Verdict::Violation]
        << " VIOLATION";
    return {tally[Verdict::Violation] == 0, out.str()};
}

Outcome global_soundness() {
    Int violations = 0;
    for (auto f : {nivat_diagonal, morse_hedlund, fine_wilf_suite, engine_oracle, quasi_regularity, structural_audit})
        violations += f().violations;
    Int before = violations;
    auto r = random_nivat(violations);
    return {violations == 0,
            "criteria 5-10: " + std::to_string(before) + " violations; " + r.detail};
}

struct Criterion {
    int id;
    std::function<Outcome()> run;
    double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 1;
        }
    }
    const std::vector<Criterion> criteria = {
        {1, low_range, 5},         {2, equality_case, 1},   {3, high_range, 30},      {4, half_area, 60},
        {5, nivat_diagonal, 1},    {6, morse_hedlund, 10},  {7, fine_wilf_suite, 30}, {8, engine_oracle, 60},
        {9, quasi_regularity, 1},  {10, structural_audit, 30}, {11, global_soundness, 240},
    };
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "unknown criterion " << only << "\n";
        return 1;
    }
    bool all = true;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = o.pass && in_time;
        all = all && pass;
        std::ostringstream t;
        t.precision(2);
        t << std::fixed << secs;
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " (" << o.detail << "; " << t.str()
                  << " s" << (in_time ? "" : ", over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit")
                  << ")\n";
    }
    return all ? 0 : 1;
}
