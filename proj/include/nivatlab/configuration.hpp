#pragma once

// Intensional configurations eta : Z^2 -> A and pattern extraction.

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "nivatlab/geometry.hpp"

namespace nivatlab {

enum class Exactness { Exact, LowerBound };

std::string to_string(Exactness e);

/// Combined exactness: LowerBound wins.
inline Exactness combine(Exactness a, Exactness b) {
    return (a == Exactness::Exact && b == Exactness::Exact) ? Exactness::Exact : Exactness::LowerBound;
}

/// Query of a letter the representation does not know (outside a window).
class UnknownLetterError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Ordered set of at least two distinct single-character letters.
class Alphabet {
public:
    explicit Alphabet(std::string letters);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool contains(char c) const { return letters_.find(c) != std::string::npos; }

private:
    std::string letters_;
};

/// Lattice-periodic body. The period lattice is kept in Hermite normal
/// form with basis (p,0), (s,q), 0 <= s < p, q > 0; the table covers the
/// box [0,p) x [0,q) row by row.
struct DoublyPeriodic {
    Vec b1;
    Vec b2;
    Int p = 1;
    Int s = 0;
    Int q = 1;
    std::string table;

    /// Representative of g in the fundamental box.
    LatticePoint reduce(LatticePoint g) const;
    bool in_lattice(Vec h) const;
    /// Smallest m >= 1 with m*v in the period lattice.
    Int period_along(Vec v) const;
    Int domain_size() const { return p * q; }
};

struct FiniteDefect {
    char background = 0;
    std::map<LatticePoint, char> defects;   // never holds the background letter
};

/// Black exactly where x - y lies in {0} ∪ {±sigma(c) : c >= 6},
/// sigma(c) = 6 + 7 + ... + c.
struct DiagonalFamily {
    char black = 0;
    char white = 0;

    static Int sigma(Int c) { return c * (c + 1) / 2 - 15; }
    static bool is_offset(Int d);
};

/// Letters known only on [origin, origin + (width,height)).
struct WindowSample {
    LatticePoint origin;
    Int width = 0;
    Int height = 0;
    std::vector<std::string> rows;   // rows[j] holds y = origin.y + j

    bool covers(LatticePoint g) const {
        return g.x >= origin.x && g.y >= origin.y && g.x < origin.x + width && g.y < origin.y + height;
    }
};

class Configuration {
public:
    using Body = std::variant<DoublyPeriodic, FiniteDefect, DiagonalFamily, WindowSample>;

    static Configuration diagonal_family(char black = 'b', char white = 'w');

    /// Periodic under b1, b2; `cells` must hit every class of Z^2 modulo
    /// the period lattice exactly once.
    static Configuration doubly_periodic(Alphabet alphabet, Vec b1, Vec b2,
                                         const std::vector<std::pair<LatticePoint, char>>& cells);
    /// Rectangular tile with periods (width,0), (0,height). The first row
    /// is the top (highest y).
    static Configuration doubly_periodic_tile(Alphabet alphabet, const std::vector<std::string>& rows);
    /// Tile over the normal-form box of the lattice spanned by b1, b2.
    static Configuration doubly_periodic_tile(Alphabet alphabet, Vec b1, Vec b2,
                                              const std::vector<std::string>& rows);

    static Configuration finite_defect(Alphabet alphabet, char background,
                                       const std::map<LatticePoint, char>& defects);

    /// Window with lower-left corner `origin`; first row is the top.
    static Configuration window(Alphabet alphabet, LatticePoint origin, const std::vector<std::string>& rows);

    const Alphabet& alphabet() const { return alphabet_; }
    const Body& body() const { return body_; }
    std::string kind() const;

    /// Throws UnknownLetterError outside a window.
    char letter_at(LatticePoint g) const;

private:
    Configuration(Alphabet alphabet, Body body);
    void check_letters(const std::string& used) const;

    Alphabet alphabet_;
    Body body_;
};

/// An S-configuration: the shape translated so its lexicographic minimum
/// is the origin, and letters listed in lexicographic shape order.
struct Pattern {
    std::vector<LatticePoint> shape;
    std::string letters;

    friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// Lexicographically sorted copy of `points` shifted so the first is the origin.
std::vector<LatticePoint> canonical_shape(std::span<const LatticePoint> points);

/// (T^u eta)|_S. S need not be sorted; the result follows canonical order.
Pattern extract_pattern(const Configuration& eta, std::span<const LatticePoint> s, LatticePoint u);
inline Pattern extract_pattern(const Configuration& eta, const ConvexLatticeSet& s, LatticePoint u) {
    return extract_pattern(eta, std::span<const LatticePoint>(s.points()), u);
}

/// Text grid of a pattern, top row first, '.' outside the shape.
std::string pattern_grid(const Pattern& pattern);

struct EnumerationDomain {
    std::vector<LatticePoint> translates;
    Exactness exactness = Exactness::Exact;
};

/// Finite list of translates u realising every pattern (T^u eta)|_S.
EnumerationDomain enumeration_domain(const Configuration& eta, std::span<const LatticePoint> s);
inline EnumerationDomain enumeration_domain(const Configuration& eta, const ConvexLatticeSet& s) {
    return enumeration_domain(eta, std::span<const LatticePoint>(s.points()));
}

}  // namespace nivatlab
