#pragma once

// Exact integer geometry of finite convex subsets of Z^2.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace nivatlab {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Raised when an operation is called outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct LatticePoint {
    Int x = 0;
    Int y = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr LatticePoint operator-(LatticePoint a) { return {-a.x, -a.y}; }
    friend constexpr LatticePoint operator*(Int t, LatticePoint a) { return {t * a.x, t * a.y}; }
};

/// Integer vectors share the point representation.
using Vec = LatticePoint;

constexpr Int cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
constexpr Int dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }

std::string to_string(LatticePoint p);

/// Divides by gcd(|x|,|y|); throws DomainError on the zero vector.
Vec primitive(Vec v);

/// Oriented line {(x,y) : dx*y - dy*x = c} with primitive direction (dx,dy).
///
/// The closed half plane H(l) is the LEFT side of travel: level(g) >= c.
class OrientedLine {
public:
    /// Normalizes a non-primitive direction by its gcd; the offset is taken
    /// as given, so it must refer to the normalized direction.
    OrientedLine(Vec direction, Int offset);

    /// The line through `p` parallel to `direction`.
    static OrientedLine through(LatticePoint p, Vec direction);
    static OrientedLine horizontal() { return OrientedLine({1, 0}, 0); }

    Vec direction() const { return dir_; }
    Int offset() const { return offset_; }

    /// dx*y - dy*x; constant along the line, increasing to its left.
    Int level(LatticePoint p) const { return dir_.x * p.y - dir_.y * p.x; }
    bool contains(LatticePoint p) const { return level(p) == offset_; }
    bool left_of_or_on(LatticePoint p) const { return level(p) >= offset_; }

    OrientedLine reversed() const { return OrientedLine(-dir_, -offset_); }
    OrientedLine with_offset(Int c) const { return OrientedLine(dir_, c); }

    friend bool operator==(const OrientedLine&, const OrientedLine&) = default;

private:
    Vec dir_;
    Int offset_;
};

enum class LineStep { Outward, Inward };

/// l^(-) (outward: half plane grows by one lattice line) or l^(+) (inward).
OrientedLine adjacent_line(const OrientedLine& line, LineStep step);

/// v_l: the primitive lattice vector along the line's orientation.
inline Vec minimal_vector(const OrientedLine& line) { return line.direction(); }

class HalfPlane {
public:
    explicit HalfPlane(OrientedLine boundary) : boundary_(boundary) {}
    const OrientedLine& boundary() const { return boundary_; }
    bool contains(LatticePoint g) const { return boundary_.left_of_or_on(g); }

private:
    OrientedLine boundary_;
};

struct Edge {
    LatticePoint from;
    LatticePoint to;
    Int lattice_count = 0;   // |w ∩ S|, equals gcd(|dx|,|dy|) + 1

    Vec direction() const { return primitive(to - from); }
};

/// A finite nonempty S with S = conv(S) ∩ Z^2.
///
/// Points are kept in lexicographic (x, y) order. Vertices run
/// counterclockwise starting from the lexicographically least point.
class ConvexLatticeSet {
public:
    /// conv(points) ∩ Z^2. Throws DomainError on empty input.
    static ConvexLatticeSet hull_of(std::span<const LatticePoint> points);
    /// The block R_{n,k} = [0,n) x [0,k).
    static ConvexLatticeSet rectangle(Int n, Int k);

    const std::vector<LatticePoint>& points() const { return points_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    /// Counterclockwise hull edges; empty when the hull has null area.
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t size() const { return points_.size(); }
    bool contains(LatticePoint p) const;
    bool has_positive_area() const { return !edges_.empty(); }
    bool is_vertex(LatticePoint p) const;

    /// Hull of S minus {p}; equals S \ {p} exactly when p is a vertex.
    std::optional<ConvexLatticeSet> without(LatticePoint p) const;
    /// S ∩ H, or nullopt when empty.
    std::optional<ConvexLatticeSet> intersect(const HalfPlane& h) const;
    ConvexLatticeSet translated(Vec v) const;

    friend bool operator==(const ConvexLatticeSet& a, const ConvexLatticeSet& b) {
        return a.points_ == b.points_;
    }

private:
    ConvexLatticeSet() = default;
    std::vector<LatticePoint> points_;
    std::vector<LatticePoint> vertices_;
    std::vector<Edge> edges_;
};

/// True when the point set equals the lattice points of its own hull.
bool is_convex_point_set(std::span<const LatticePoint> points);

/// Strictly convex hull corners, counterclockwise (monotone chain).
std::vector<LatticePoint> hull_vertices(std::span<const LatticePoint> points);

struct QuasiRegularity {
    bool regular = false;
    /// Pairs of edge indices (i, j), i < j, antiparallel with equal counts.
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
    /// First edge without a partner when not regular.
    std::optional<std::size_t> violating_edge;
};

/// Throws DomainError when the hull has null area.
QuasiRegularity is_quasi_regular(const ConvexLatticeSet& s);

/// l_S: the line parallel to `line` with S ⊆ H(l_S) touching S.
OrientedLine supporting_line(std::span<const LatticePoint> s, const OrientedLine& line);
inline OrientedLine supporting_line(const ConvexLatticeSet& s, const OrientedLine& line) {
    return supporting_line(std::span<const LatticePoint>(s.points()), line);
}

/// Points of S lying on `line`, ordered along its orientation.
std::vector<LatticePoint> points_on(std::span<const LatticePoint> s, const OrientedLine& line);

/// Points of S not on `line`.
std::vector<LatticePoint> points_off(std::span<const LatticePoint> s, const OrientedLine& line);

/// Number of distinct lattice lines parallel to `line` meeting S.
Int diameter_along(std::span<const LatticePoint> s, const OrientedLine& line);

struct AxisOfSymmetry {
    LatticePoint from;
    LatticePoint to;
    ConvexLatticeSet left;    // A_S: closed left side of from -> to
    ConvexLatticeSet right;   // B_S: closed right side
};

/// One pair of axes per antiparallel edge pair (initial<->initial,
/// final<->final). Throws DomainError if S is not quasi-regular.
std::vector<AxisOfSymmetry> axes_of_symmetry(const ConvexLatticeSet& s);

/// Membership in a lattice translate of the t-neighbourhood of a line
/// through the origin: dist(g - anchor, span(direction)) <= t.
class Strip {
public:
    Strip(Vec direction, Rational half_width, LatticePoint anchor);

    bool contains(LatticePoint g) const;
    /// Members inside the box [lo, hi] (inclusive).
    std::vector<LatticePoint> enumerate(LatticePoint lo, LatticePoint hi) const;

private:
    Vec dir_;
    Rational t_;
    LatticePoint anchor_;
};

}  // namespace nivatlab
