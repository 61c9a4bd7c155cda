#include "nivatlab/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nivatlab {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int lattice_count(LatticePoint a, LatticePoint b) {
    return std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y)) + 1;
}

}  // namespace

std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

Vec primitive(Vec v) {
    if (v.x == 0 && v.y == 0) throw DomainError("zero direction vector");
    const Int g = std::gcd(std::abs(v.x), std::abs(v.y));
    return {v.x / g, v.y / g};
}

OrientedLine::OrientedLine(Vec direction, Int offset) : dir_(primitive(direction)), offset_(offset) {}

OrientedLine OrientedLine::through(LatticePoint p, Vec direction) {
    const Vec d = primitive(direction);
    return OrientedLine(d, d.x * p.y - d.y * p.x);
}

OrientedLine adjacent_line(const OrientedLine& line, LineStep step) {
    return line.with_offset(step == LineStep::Outward ? line.offset() - 1 : line.offset() + 1);
}

std::vector<LatticePoint> hull_vertices(std::span<const LatticePoint> input) {
    std::vector<LatticePoint> pts(input.begin(), input.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = pts[i];
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    // Collinear input collapses to the two endpoints.
    hull.resize(k - 1);
    return hull;
}

ConvexLatticeSet ConvexLatticeSet::hull_of(std::span<const LatticePoint> input) {
    if (input.empty()) throw DomainError("convex hull of an empty point set");
    ConvexLatticeSet s;
    s.vertices_ = hull_vertices(input);
    const auto& v = s.vertices_;

    if (v.size() == 1) {
        s.points_ = v;
        return s;
    }
    if (v.size() == 2) {
        const Int steps = lattice_count(v[0], v[1]) - 1;
        const Vec d = primitive(v[1] - v[0]);
        for (Int i = 0; i <= steps; ++i) s.points_.push_back(v[0] + i * d);
        std::sort(s.points_.begin(), s.points_.end());
        return s;
    }

    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        s.edges_.push_back({a, b, lattice_count(a, b)});
    }

    Int min_x = v[0].x, max_x = v[0].x;
    for (const auto& p : v) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
    }
    // Column scan: each edge gives a linear constraint on y for fixed x.
    for (Int x = min_x; x <= max_x; ++x) {
        Int lo = std::numeric_limits<Int>::min();
        Int hi = std::numeric_limits<Int>::max();
        bool empty = false;
        for (const auto& e : s.edges_) {
            const Int ex = e.to.x - e.from.x;
            const Int ey = e.to.y - e.from.y;
            const Int rhs = ey * (x - e.from.x);
            // ex * (y - ay) >= rhs
            if (ex > 0) {
                lo = std::max(lo, e.from.y + ceil_div(rhs, ex));
            } else if (ex < 0) {
                hi = std::min(hi, e.from.y + floor_div(rhs, ex));
            } else if (rhs > 0) {
                empty = true;
            }
        }
        if (empty) continue;
        for (Int y = lo; y <= hi; ++y) s.points_.push_back({x, y});
    }
    return s;
}

ConvexLatticeSet ConvexLatticeSet::rectangle(Int n, Int k) {
    if (n < 1 || k < 1) throw DomainError("rectangle sides must be positive");
    const std::vector<LatticePoint> corners{{0, 0}, {n - 1, 0}, {0, k - 1}, {n - 1, k - 1}};
    return hull_of(corners);
}

bool ConvexLatticeSet::contains(LatticePoint p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

bool ConvexLatticeSet::is_vertex(LatticePoint p) const {
    return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

std::optional<ConvexLatticeSet> ConvexLatticeSet::without(LatticePoint p) const {
    std::vector<LatticePoint> rest;
    rest.reserve(points_.size());
    for (const auto& q : points_)
        if (q != p) rest.push_back(q);
    if (rest.empty()) return std::nullopt;
    return hull_of(rest);
}

std::optional<ConvexLatticeSet> ConvexLatticeSet::intersect(const HalfPlane& h) const {
    std::vector<LatticePoint> kept;
    for (const auto& q : points_)
        if (h.contains(q)) kept.push_back(q);
    if (kept.empty()) return std::nullopt;
    return hull_of(kept);
}

ConvexLatticeSet ConvexLatticeSet::translated(Vec v) const {
    ConvexLatticeSet s = *this;
    for (auto& p : s.points_) p = p + v;
    for (auto& p : s.vertices_) p = p + v;
    for (auto& e : s.edges_) {
        e.from = e.from + v;
        e.to = e.to + v;
    }
    return s;
}

bool is_convex_point_set(std::span<const LatticePoint> points) {
    if (points.empty()) return false;
    std::vector<LatticePoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return ConvexLatticeSet::hull_of(sorted).points() == sorted;
}

QuasiRegularity is_quasi_regular(const ConvexLatticeSet& s) {
    if (!s.has_positive_area())
        throw DomainError("quasi-regularity is defined only for sets with positive-area hull");
    QuasiRegularity out;
    const auto& edges = s.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (i == j) continue;
            if (edges[j].direction() == -edges[i].direction() &&
                edges[j].lattice_count == edges[i].lattice_count) {
                found = true;
                if (i < j) out.pairing.emplace_back(i, j);
                break;
            }
        }
        if (!found && !out.violating_edge) out.violating_edge = i;
    }
    out.regular = !out.violating_edge.has_value();
    if (!out.regular) out.pairing.clear();
    return out;
}

OrientedLine supporting_line(std::span<const LatticePoint> s, const OrientedLine& line) {
    if (s.empty()) throw DomainError("supporting line of an empty set");
    Int c = line.level(s.front());
    for (const auto& p : s) c = std::min(c, line.level(p));
    return line.with_offset(c);
}

std::vector<LatticePoint> points_on(std::span<const LatticePoint> s, const OrientedLine& line) {
    std::vector<LatticePoint> on;
    for (const auto& p : s)
        if (line.contains(p)) on.push_back(p);
    const Vec d = line.direction();
    std::sort(on.begin(), on.end(), [d](LatticePoint a, LatticePoint b) { return dot(a, d) < dot(b, d); });
    return on;
}

std::vector<LatticePoint> points_off(std::span<const LatticePoint> s, const OrientedLine& line) {
    std::vector<LatticePoint> off;
    for (const auto& p : s)
        if (!line.contains(p)) off.push_back(p);
    return off;
}

Int diameter_along(std::span<const LatticePoint> s, const OrientedLine& line) {
    std::set<Int> levels;
    for (const auto& p : s) levels.insert(line.level(p));
    return static_cast<Int>(levels.size());
}

std::vector<AxisOfSymmetry> axes_of_symmetry(const ConvexLatticeSet& s) {
    const auto qr = is_quasi_regular(s);
    if (!qr.regular) throw DomainError("axes of symmetry require a quasi-regular set");

    std::vector<AxisOfSymmetry> axes;
    auto make_axis = [&](LatticePoint a, LatticePoint b) {
        const auto line = OrientedLine::through(a, b - a);
        auto left = s.intersect(HalfPlane(line));
        auto right = s.intersect(HalfPlane(line.reversed()));
        // Both halves contain the segment endpoints, so neither is empty.
        if (left->size() != right->size())
            throw std::logic_error("axis " + to_string(a) + "-" + to_string(b) + " splits the set unevenly");
        axes.push_back({a, b, std::move(*left), std::move(*right)});
    };
    for (const auto& [i, j] : qr.pairing) {
        const auto& e = s.edges()[i];
        const auto& f = s.edges()[j];
        make_axis(e.from, f.from);
        make_axis(e.to, f.to);
    }
    return axes;
}

Strip::Strip(Vec direction, Rational half_width, LatticePoint anchor)
    : dir_(primitive(direction)), t_(half_width), anchor_(anchor) {
    if (t_ <= 0) throw DomainError("strip half-width must be positive");
}

bool Strip::contains(LatticePoint g) const {
    // |cross(d, g - anchor)| / |d| <= num/den, squared and cleared of denominators.
    using Wide = __int128;
    const Wide c = cross(dir_, g - anchor_);
    const Wide num = t_.numerator();
    const Wide den = t_.denominator();
    return c * c * den * den <= num * num * static_cast<Wide>(dot(dir_, dir_));
}

std::vector<LatticePoint> Strip::enumerate(LatticePoint lo, LatticePoint hi) const {
    std::vector<LatticePoint> out;
    for (Int x = lo.x; x <= hi.x; ++x)
        for (Int y = lo.y; y <= hi.y; ++y)
            if (contains({x, y})) out.push_back({x, y});
    return out;
}

}  // namespace nivatlab
