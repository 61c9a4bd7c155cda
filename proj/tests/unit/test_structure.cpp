#include <doctest.h>

#include <random>

#include "nivatlab/structure.hpp"
#include "oracles.hpp"

using namespace nivatlab;

namespace {

Configuration checkerboard() { return Configuration::doubly_periodic_tile(Alphabet("ab"), {"ab", "ba"}); }

ConvexLatticeSet hull(std::initializer_list<LatticePoint> pts) {
    std::vector<LatticePoint> v(pts);
    return ConvexLatticeSet::hull_of(v);
}

}  // namespace

TEST_CASE("generated points") {
    auto cb = checkerboard();
    ComplexityEngine engine(cb);
    auto domino = ConvexLatticeSet::rectangle(1, 2);
    CHECK(is_generated(engine, domino, {0, 1}) == true);

    auto diag = Configuration::diagonal_family();
    ComplexityEngine de(diag);
    auto r34 = ConvexLatticeSet::rectangle(3, 4);
    for (auto g : r34.vertices()) {
        auto gen = is_generated(de, r34, g);
        REQUIRE(gen.has_value());
        CHECK(*gen == (de.complexity(*r34.without(g)).count == 7));
    }
    auto fd = Configuration::finite_defect(Alphabet("bw"), 'w', {{{0, 0}, 'b'}});
    ComplexityEngine fe(fd);
    CHECK(is_generated(fe, ConvexLatticeSet::rectangle(2, 1), {1, 0}) == false);

    auto win = Configuration::window(Alphabet("ab"), {0, 0}, {"abab", "baba"});
    ComplexityEngine we(win);
    CHECK_FALSE(is_generated(we, domino, {0, 1}).has_value());
}

TEST_CASE("generating sets") {
    auto cb = checkerboard();
    ComplexityEngine engine(cb);
    auto r = find_generating_set(engine, ConvexLatticeSet::rectangle(2, 2));
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.set->size() == 2);
    CHECK(r.bound_check.holds);
    for (const auto& c : r.certificates) CHECK(c.generated);

    auto stripes = Configuration::doubly_periodic_tile(Alphabet("ab"), {"aab"});
    ComplexityEngine se(stripes);
    auto s = find_generating_set(se, ConvexLatticeSet::rectangle(3, 1));
    REQUIRE(s.status == SearchStatus::Found);
    CHECK(s.set->size() >= 2);
    CHECK(s.set->size() <= 3);

    auto rows = Configuration::doubly_periodic_tile(Alphabet("ab"), {"a", "b"});
    ComplexityEngine re(rows);
    auto col = find_generating_set(re, ConvexLatticeSet::rectangle(1, 2));
    REQUIRE(col.status == SearchStatus::Found);
    CHECK(*col.set == ConvexLatticeSet::rectangle(1, 2));

    auto fd = Configuration::finite_defect(Alphabet("bw"), 'w', {{{0, 0}, 'b'}});
    ComplexityEngine fe(fd);
    CHECK(find_generating_set(fe, ConvexLatticeSet::rectangle(2, 2)).status == SearchStatus::NoClaim);

    auto win = Configuration::window(Alphabet("ab"), {0, 0}, {"abab", "baba", "abab"});
    ComplexityEngine we(win);
    CHECK(find_generating_set(we, ConvexLatticeSet::rectangle(2, 2)).status == SearchStatus::Refused);
}

TEST_CASE("directional generating sets") {
    auto cb = checkerboard();
    ComplexityEngine engine(cb);
    for (auto l : {OrientedLine::horizontal(), OrientedLine({0, 1}, 0)}) {
        auto r = find_directional_generating_set(engine, ConvexLatticeSet::rectangle(2, 2), l);
        REQUIRE(r.status == SearchStatus::Found);
        REQUIRE(r.increment_bound.has_value());
        CHECK(r.increment_bound->holds);
        CHECK(r.half_plane_section == true);
        CHECK(r.set->size() == 2);
    }

    auto diag = Configuration::diagonal_family();
    ComplexityEngine de(diag);
    auto d = find_directional_generating_set(de, ConvexLatticeSet::rectangle(3, 4), OrientedLine::horizontal());
    REQUIRE(d.status == SearchStatus::Found);
    CHECK(d.increment_bound->holds);
    CHECK(d.peel_index >= 1);
    CHECK(d.bound_check.holds);
}

TEST_CASE("mlc sets") {
    auto cb = checkerboard();
    ComplexityEngine engine(cb);
    auto r = find_mlc_set(engine, ConvexLatticeSet::rectangle(2, 2));
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.set->size() == 2);
    CHECK(r.complexity == 2);
    REQUIRE(r.minimality.has_value());
    CHECK(r.minimality->violations == 0);
    CHECK(r.mlc_inequality->violations == 0);

    auto diag = Configuration::diagonal_family();
    ComplexityEngine de(diag);
    auto d = find_mlc_set(de, ConvexLatticeSet::rectangle(3, 4));
    REQUIRE(d.status == SearchStatus::Found);
    CHECK(d.precondition.holds);
    CHECK(d.precondition.lhs == Rational(7));
    CHECK(d.precondition.rhs == Rational(7));
    CHECK(d.set->points() == std::vector<LatticePoint>{{0, 2}, {1, 3}});
    CHECK_FALSE(d.positive_area);
    CHECK(d.mlc_inequality->exhaustive);
    CHECK(d.mlc_inequality->violations == 0);
    for (const auto& i : d.increment_audit) CHECK(i.holds);

    auto single = Configuration::doubly_periodic_tile(Alphabet("ab"), {"ab"});
    ComplexityEngine sg(single);
    auto dom = ConvexLatticeSet::rectangle(2, 1);
    auto m = find_mlc_set(sg, dom);
    REQUIRE(m.status == SearchStatus::Found);
    CHECK(*m.set == dom);
}

TEST_CASE("mlc audits on random periodic configurations") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        auto tile = oracle::random_tile(rng, "ab", 8);
        auto eta = Configuration::doubly_periodic_tile(Alphabet("ab"), {tile.p, 0}, {tile.s, tile.q},
                                                       tile.rows_top_down());
        ComplexityEngine engine(eta);
        auto r = find_mlc_set(engine, ConvexLatticeSet::rectangle(3, 3));
        if (r.status != SearchStatus::Found) continue;
        CHECK(r.set->size() >= 2);
        CHECK(r.bound_check.holds);
        CHECK(r.mlc_inequality->violations == 0);
        CHECK(r.minimality->violations == 0);
        for (const auto& c : r.certificates) CHECK(c.generated);
        for (const auto& i : r.increment_audit) CHECK(i.holds);
        if (r.three_on_support) CHECK(r.positive_area);
    }
}

TEST_CASE("convex subsets match the triangle oracle") {
    auto r44 = ConvexLatticeSet::rectangle(4, 4);
    bool complete = false;
    auto subs = proper_convex_subsets(r44, 1000000, complete);
    CHECK(complete);
    auto masks = oracle::convex_subsets(4, 4);
    CHECK(subs.size() + 1 == masks.size());
    std::set<std::vector<LatticePoint>> lib;
    for (const auto& s : subs) lib.insert(s.points());
    for (auto m : masks) {
        std::vector<LatticePoint> p;
        for (auto [x, y] : oracle::mask_points(m, 4)) p.push_back({x, y});
        if (p.size() == 16) continue;
        CHECK(lib.count(p) == 1);
    }
}

TEST_CASE("directional point sets") {
    auto r33 = ConvexLatticeSet::rectangle(3, 3);
    auto d = directional_point_sets(r33, OrientedLine::horizontal(), 2);
    CHECK(d.support.offset() == 0);
    CHECK(d.initial == std::vector<LatticePoint>{{0, 1}, {0, 2}});
    CHECK(d.final == std::vector<LatticePoint>{{2, 1}, {2, 2}});
    CHECK(directional_point_sets(r33, OrientedLine::horizontal(), 4).initial.empty());

    auto tri = hull({{0, 0}, {2, 0}, {0, 2}});
    auto t = directional_point_sets(tri, OrientedLine::horizontal(), 2);
    CHECK(t.initial == std::vector<LatticePoint>{{0, 1}});

    auto strip = d.strip(0, 1);
    CHECK(strip.size() == 4);
    auto plus = d.half_strip_plus(1, 3);
    CHECK(plus.size() == 6);

    CHECK_THROWS_AS(directional_point_sets(r33, OrientedLine::horizontal(), 0), DomainError);
    CHECK_THROWS_AS(directional_point_sets(ConvexLatticeSet::rectangle(3, 1), OrientedLine::horizontal(), 1),
                    DomainError);
}

TEST_CASE("balanced set construction on the diagonal family") {
    auto diag = Configuration::diagonal_family();
    ComplexityEngine de(diag);
    auto c = construct_balanced_set(de, ConvexLatticeSet::rectangle(3, 4), OrientedLine::horizontal());
    CHECK(c.status == "CONSTRUCTED");
    CHECK(c.hypothesis.holds);
    CHECK(c.centre_x == Rational(1));
    CHECK(c.centre_y == Rational(3, 2));
    for (const auto& a : c.assertions) CHECK(a.holds);
    REQUIRE(c.s.has_value());
    CHECK(c.s->points() == std::vector<LatticePoint>{{0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(c.p == 0);
    CHECK(c.condition_i_holds);
    CHECK(c.chord_recheck_holds);
    CHECK(c.condition_ii_holds);
    REQUIRE(c.phi.has_value());
    CHECK(c.phi->which_case == "DIFFERENCE");
    CHECK(c.phi->halved_bound.holds);
    CHECK(c.expansive_witness.has_value());
    CHECK(c.scope == "EMPIRICAL");
}

TEST_CASE("balanced set construction on the checkerboard") {
    auto cb = checkerboard();
    ComplexityEngine engine(cb);
    auto c = construct_balanced_set(engine, ConvexLatticeSet::rectangle(2, 2), OrientedLine::horizontal());
    CHECK(c.status == "DEGENERATE");
    CHECK_FALSE(c.s_positive_area);
    CHECK(c.expansive_witness.has_value());
    CHECK(c.p == 1);
    for (const auto& a : c.assertions) CHECK(a.holds);
    CHECK(c.condition_i_holds);
    CHECK_FALSE(c.phi.has_value());

    BalancedOptions blind;
    blind.witness_radius = 0;
    auto e = construct_balanced_set(engine, ConvexLatticeSet::rectangle(2, 2), OrientedLine::horizontal(), blind);
    CHECK(e.status == "CONSTRUCTION_ERROR");
    CHECK(e.failed_step == "S has positive-area hull");

    CHECK_THROWS_AS(construct_balanced_set(engine, hull({{0, 0}, {2, 0}, {0, 2}}), OrientedLine::horizontal()),
                    DomainError);

    auto fd = Configuration::finite_defect(Alphabet("bw"), 'w', {{{0, 0}, 'b'}});
    ComplexityEngine fe(fd);
    CHECK(construct_balanced_set(fe, ConvexLatticeSet::rectangle(2, 2), OrientedLine::horizontal()).status ==
          "HYPOTHESIS_FAILS");
}

TEST_CASE("balanced sets on random periodic configurations") {
    std::mt19937_64 rng(59);
    std::vector<OrientedLine> lines = {OrientedLine::horizontal(), OrientedLine({0, 1}, 0), OrientedLine({1, 1}, 0),
                                       OrientedLine({-1, 0}, 0)};
    int constructed = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto tile = oracle::random_tile(rng, "ab", 6);
        auto eta = Configuration::doubly_periodic_tile(Alphabet("ab"), {tile.p, 0}, {tile.s, tile.q},
                                                       tile.rows_top_down());
        ComplexityEngine engine(eta);
        auto u = ConvexLatticeSet::rectangle(2 + trial % 2, 3);
        for (const auto& l : lines) {
            auto c = construct_balanced_set(engine, u, l);
            INFO("failed step: " << c.failed_step);
            CHECK(c.status != "CONSTRUCTION_ERROR");
            if (c.status != "CONSTRUCTED" && c.status != "DEGENERATE") continue;
            ++constructed;
            // Periodic configurations are expansive in every direction.
            CHECK(c.expansive_witness.has_value());
            for (const auto& a : c.assertions) CHECK(a.holds);
            CHECK(c.condition_i_holds);
        }
    }
    CHECK(constructed > 0);
}

TEST_CASE("phi") {
    auto cb = checkerboard();
    ComplexityEngine engine(cb);
    auto r = phi(engine, ConvexLatticeSet::rectangle(2, 2), OrientedLine::horizontal(), 1);
    CHECK(r.which_case == "DIFFERENCE");
    CHECK(r.value == r.increment);
    CHECK(r.value == 0);
    CHECK(r.halved_bound.holds);
}

TEST_CASE("strip lemma") {
    auto diag = Configuration::diagonal_family();
    ComplexityEngine de(diag);
    auto c = construct_balanced_set(de, ConvexLatticeSet::rectangle(3, 4), OrientedLine::horizontal());
    REQUIRE(c.s.has_value());
    auto r = verify_strip_lemma(de, *c.s, OrientedLine::horizontal(), std::max<Int>(c.p, 1), 64);
    CHECK(r.status == "PASS");
    CHECK(r.generating);

    CHECK_THROWS_AS(verify_strip_lemma(de, ConvexLatticeSet::rectangle(3, 4), OrientedLine::horizontal(), 1, 64),
                    DomainError);

    std::mt19937_64 rng(61);
    int nonvacuous = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto tile = oracle::random_tile(rng, "ab", 8);
        auto eta = Configuration::doubly_periodic_tile(Alphabet("ab"), {tile.p, 0}, {tile.s, tile.q},
                                                       tile.rows_top_down());
        ComplexityEngine engine(eta);
        auto u = ConvexLatticeSet::rectangle(2, 2);
        try {
            auto s = verify_strip_lemma(engine, u, OrientedLine::horizontal(), 2, 48);
            CHECK(s.status != "FAIL");
            if (!s.vacuous) ++nonvacuous;
        } catch (const DomainError&) {
        }
    }
    MESSAGE("non-vacuous strip checks: " << nonvacuous);
}

TEST_CASE("expansiveness witnesses") {
    auto cb = checkerboard();
    ComplexityEngine engine(cb);
    auto w = expansive_witness(engine, OrientedLine::horizontal(), 2);
    REQUIRE(w.witness.has_value());
    CHECK(is_generated(engine, *w.witness, w.point) == true);
    CHECK(expansive_witness(engine, OrientedLine({1, 1}, 0), 2).witness.has_value());
    auto none = expansive_witness(engine, OrientedLine::horizontal(), 0);
    CHECK_FALSE(none.witness.has_value());

    auto diag = Configuration::diagonal_family();
    ComplexityEngine de(diag);
    auto d = expansive_witness(de, OrientedLine({1, 1}, 0), 2);
    CHECK_FALSE(d.witness.has_value());
    CHECK(d.candidates > 0);
    CHECK(expansive_witness(de, OrientedLine::horizontal(), 2).witness.has_value());
}
