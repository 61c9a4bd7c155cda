#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "nivatlab/geometry.hpp"

using namespace nivatlab;

namespace {

ConvexLatticeSet hull(std::initializer_list<LatticePoint> pts) {
    std::vector<LatticePoint> v(pts);
    return ConvexLatticeSet::hull_of(v);
}

ConvexLatticeSet hexagon() { return hull({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}}); }

}  // namespace

TEST_CASE("primitive directions") {
    CHECK(primitive({4, 6}) == Vec{2, 3});
    CHECK(primitive({-3, 0}) == Vec{-1, 0});
    CHECK_THROWS_AS(primitive({0, 0}), DomainError);
    CHECK(OrientedLine({4, 6}, 0).direction() == Vec{2, 3});
    CHECK(OrientedLine::through({0, 0}, Vec{3, 3}).direction() == Vec{1, 1});
    CHECK(OrientedLine::horizontal().direction() == Vec{1, 0});
    CHECK_THROWS_AS(OrientedLine({0, 0}, 1), DomainError);
}

TEST_CASE("reversal is an involution") {
    for (Int dx = -3; dx <= 3; ++dx)
        for (Int dy = -3; dy <= 3; ++dy) {
            if (std::gcd(dx, dy) != 1) continue;
            OrientedLine l({dx, dy}, 2 * dx - dy);
            CHECK(l.reversed().reversed() == l);
            CHECK(l.reversed().contains({1, 2}));
        }
}

TEST_CASE("hull of small sets") {
    auto single = hull({{0, 0}});
    CHECK(single.size() == 1);
    CHECK(single.edges().empty());
    CHECK_FALSE(single.has_positive_area());

    auto block = hull({{0, 0}, {2, 0}, {0, 1}, {2, 1}, {1, 0}, {1, 1}});
    CHECK(block == ConvexLatticeSet::rectangle(3, 2));
    CHECK(block.vertices() == std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 1}, {0, 1}});
    std::vector<Int> counts;
    for (const auto& e : block.edges()) counts.push_back(e.lattice_count);
    CHECK(counts == std::vector<Int>{3, 2, 3, 2});

    auto seg = hull({{0, 0}, {2, 1}});
    CHECK(seg.points() == std::vector<LatticePoint>{{0, 0}, {2, 1}});

    auto line3 = hull({{0, 0}, {1, 0}, {2, 0}});
    CHECK(line3.vertices() == std::vector<LatticePoint>{{0, 0}, {2, 0}});
    CHECK(line3.edges().empty());

    auto tri = hull({{0, 0}, {2, 0}, {0, 2}});
    CHECK(tri.size() == 6);
    counts.clear();
    for (const auto& e : tri.edges()) counts.push_back(e.lattice_count);
    CHECK(counts == std::vector<Int>{3, 3, 3});

    CHECK(hexagon().vertices() == std::vector<LatticePoint>{{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
    CHECK(hexagon().size() == 7);

    CHECK_THROWS_AS(ConvexLatticeSet::hull_of(std::vector<LatticePoint>{}), DomainError);
}

TEST_CASE("quasi-regularity") {
    for (Int n = 1; n <= 8; ++n)
        for (Int k = 1; k <= 8; ++k) {
            if (n == 1 || k == 1) {
                CHECK_THROWS_AS(is_quasi_regular(ConvexLatticeSet::rectangle(n, k)), DomainError);
                continue;
            }
            CHECK(is_quasi_regular(ConvexLatticeSet::rectangle(n, k)).regular);
        }
    auto tri = is_quasi_regular(hull({{0, 0}, {2, 0}, {0, 2}}));
    CHECK_FALSE(tri.regular);
    REQUIRE(tri.violating_edge.has_value());
    auto hex = is_quasi_regular(hexagon());
    CHECK(hex.regular);
    CHECK(hex.pairing.size() == 3);
}

TEST_CASE("supporting lines") {
    auto r33 = ConvexLatticeSet::rectangle(3, 3);
    auto h = supporting_line(r33, OrientedLine::horizontal());
    CHECK(h.offset() == 0);
    CHECK(points_on(r33.points(), h) == std::vector<LatticePoint>{{0, 0}, {1, 0}, {2, 0}});
    auto back = supporting_line(r33, OrientedLine::horizontal().reversed());
    CHECK(points_on(r33.points(), back) == std::vector<LatticePoint>{{2, 2}, {1, 2}, {0, 2}});

    auto seg = hull({{0, 0}, {2, 1}});
    auto s = supporting_line(seg, OrientedLine({2, 1}, 5));
    CHECK(s.contains({0, 0}));
    CHECK(s.contains({2, 1}));
}

TEST_CASE("adjacent lines") {
    auto h = OrientedLine::horizontal();
    auto out = adjacent_line(h, LineStep::Outward);
    auto in = adjacent_line(h, LineStep::Inward);
    CHECK(out.contains({5, -1}));
    CHECK(in.contains({-4, 1}));
    CHECK(adjacent_line(OrientedLine({1, 1}, 0), LineStep::Outward).contains({1, 0}));
}

TEST_CASE("adjacent line step is the minimal enlargement") {
    for (Int dx = -5; dx <= 5; ++dx)
        for (Int dy = -5; dy <= 5; ++dy) {
            if (std::gcd(dx, dy) != 1) continue;
            for (Int c = -20; c <= 20; ++c) {
                OrientedLine l({dx, dy}, c);
                auto out = adjacent_line(l, LineStep::Outward);
                HalfPlane hl(l), ho(out);
                bool strict = false;
                bool gap = false;
                Int reach = 30;
                for (Int x = -reach; x <= reach; ++x)
                    for (Int y = -reach; y <= reach; ++y) {
                        LatticePoint g{x, y};
                        if (hl.contains(g) && !ho.contains(g)) gap = true;
                        if (ho.contains(g) && !hl.contains(g)) {
                            strict = true;
                            if (!out.contains(g)) gap = true;   // a lattice line strictly between
                        }
                    }
                CHECK(strict);
                CHECK_FALSE(gap);
                CHECK(adjacent_line(out, LineStep::Inward) == l);
            }
        }
}

TEST_CASE("diameter along a direction") {
    auto r34 = ConvexLatticeSet::rectangle(3, 4);
    CHECK(diameter_along(r34.points(), OrientedLine::horizontal()) == 4);
    CHECK(diameter_along(r34.points(), OrientedLine({0, 1}, 0)) == 3);
    CHECK(diameter_along(ConvexLatticeSet::rectangle(3, 3).points(), OrientedLine({1, 1}, 0)) == 5);
}

TEST_CASE("axes of symmetry") {
    auto r33 = ConvexLatticeSet::rectangle(3, 3);
    auto axes = axes_of_symmetry(r33);
    std::set<std::pair<LatticePoint, LatticePoint>> lines;
    for (const auto& a : axes) {
        lines.insert(std::minmax(a.from, a.to));
        CHECK(a.left.size() == a.right.size());
        CHECK(cross(a.to - a.from, LatticePoint{1, 1} - a.from) == 0);
    }
    CHECK(lines == std::set<std::pair<LatticePoint, LatticePoint>>{{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}});

    auto hex_axes = axes_of_symmetry(hexagon());
    CHECK(hex_axes.size() == 6);
    for (const auto& a : hex_axes) {
        CHECK(cross(a.to - a.from, LatticePoint{1, 1} - a.from) == 0);
        CHECK(a.left.size() == a.right.size());
    }
    CHECK_THROWS_AS(axes_of_symmetry(hull({{0, 0}, {2, 0}, {0, 2}})), DomainError);
}

TEST_CASE("strips") {
    Strip h({1, 0}, Rational(1), {0, 0});
    auto rows = h.enumerate({-2, -3}, {2, 3});
    std::set<Int> ys;
    for (auto g : rows) ys.insert(g.y);
    CHECK(ys == std::set<Int>{-1, 0, 1});
    CHECK(rows.size() == 15);

    Strip d({1, 1}, Rational(1, 2), {0, 0});
    for (auto g : d.enumerate({-4, -4}, {4, 4})) CHECK(g.x == g.y);
    CHECK(d.enumerate({-4, -4}, {4, 4}).size() == 9);

    Strip thin({1, 0}, Rational(1, 10), {0, 0});
    for (auto g : thin.enumerate({-3, -3}, {3, 3})) CHECK(g.y == 0);
}

TEST_CASE("random hulls: idempotence, vertices, edge counts") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> coord(-4, 4);
    std::uniform_int_distribution<int> count(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<LatticePoint> pts;
        int m = count(rng);
        for (int i = 0; i < m; ++i) pts.push_back({coord(rng), coord(rng)});
        auto s = ConvexLatticeSet::hull_of(pts);
        CHECK(ConvexLatticeSet::hull_of(s.points()) == s);
        CHECK(is_convex_point_set(s.points()));

        for (auto g : s.points()) {
            std::vector<LatticePoint> rest;
            for (auto h : s.points())
                if (h != g) rest.push_back(h);
            bool removable = !rest.empty() && is_convex_point_set(rest);
            if (rest.empty()) continue;
            CHECK(removable == s.is_vertex(g));
        }

        for (const auto& e : s.edges()) {
            Int on = 0;
            for (Int x = -4; x <= 4; ++x)
                for (Int y = -4; y <= 4; ++y) {
                    LatticePoint g{x, y};
                    if (cross(e.to - e.from, g - e.from) != 0) continue;
                    if (dot(g - e.from, e.to - e.from) < 0 || dot(g - e.to, e.from - e.to) < 0) continue;
                    ++on;
                }
            CHECK(on == e.lattice_count);
        }
    }
}
