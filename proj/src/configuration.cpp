#include "nivatlab/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace nivatlab {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Int k = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - k * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - k * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - k * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

DoublyPeriodic normal_form(Vec b1, Vec b2) {
    if (cross(b1, b2) == 0) throw DomainError("period vectors must be linearly independent");
    DoublyPeriodic dp;
    dp.b1 = b1;
    dp.b2 = b2;
    const auto [g, a, b] = ext_gcd(b1.y, b2.y);
    const Vec w = a * b1 + b * b2;
    const Vec z = (b2.y / g) * b1 - (b1.y / g) * b2;
    dp.q = g;
    dp.p = std::abs(z.x);
    dp.s = floor_mod(w.x, dp.p);
    return dp;
}

std::vector<std::string> bottom_up(const std::vector<std::string>& rows_top_down) {
    return {rows_top_down.rbegin(), rows_top_down.rend()};
}

}  // namespace

std::string to_string(Exactness e) { return e == Exactness::Exact ? "EXACT" : "LOWER_BOUND"; }

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.size() < 2) throw DomainError("an alphabet needs at least two letters");
    std::string sorted = letters_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("alphabet letters must be distinct");
}

LatticePoint DoublyPeriodic::reduce(LatticePoint g) const {
    const Int t = floor_div(g.y, q);
    return {floor_mod(g.x - t * s, p), g.y - t * q};
}

bool DoublyPeriodic::in_lattice(Vec h) const { return reduce(h) == LatticePoint{0, 0}; }

Int DoublyPeriodic::period_along(Vec v) const {
    for (Int m = 1; m <= p * q; ++m)
        if (in_lattice(m * v)) return m;
    throw std::logic_error("lattice index bound exceeded");
}

bool DiagonalFamily::is_offset(Int d) {
    if (d == 0) return true;
    const Int target = 2 * (std::abs(d) + 15);   // c(c+1) = target
    Int c = static_cast<Int>(std::sqrt(static_cast<long double>(target)));
    while (c * (c + 1) > target) --c;
    while ((c + 1) * (c + 2) <= target) ++c;
    return c >= 6 && c * (c + 1) == target;
}

Configuration::Configuration(Alphabet alphabet, Body body) : alphabet_(std::move(alphabet)), body_(std::move(body)) {}

void Configuration::check_letters(const std::string& used) const {
    for (char c : used)
        if (!alphabet_.contains(c))
            throw DomainError(std::string("letter '") + c + "' is not in the alphabet");
    for (char c : alphabet_.letters())
        if (used.find(c) == std::string::npos)
            throw DomainError(std::string("letter '") + c + "' never occurs in the configuration");
}

Configuration Configuration::diagonal_family(char black, char white) {
    Configuration eta(Alphabet(std::string{black, white}), DiagonalFamily{black, white});
    return eta;
}

Configuration Configuration::doubly_periodic(Alphabet alphabet, Vec b1, Vec b2,
                                             const std::vector<std::pair<LatticePoint, char>>& cells) {
    DoublyPeriodic dp = normal_form(b1, b2);
    const Int n = dp.domain_size();
    if (static_cast<Int>(cells.size()) != n)
        throw DomainError("expected " + std::to_string(n) + " cells for one fundamental domain, got " +
                          std::to_string(cells.size()));
    dp.table.assign(static_cast<std::size_t>(n), '\0');
    for (const auto& [g, c] : cells) {
        const auto r = dp.reduce(g);
        auto& slot = dp.table[static_cast<std::size_t>(r.y * dp.p + r.x)];
        if (slot != '\0') throw DomainError("cells " + to_string(g) + " and another share a period class");
        slot = c;
    }
    Configuration eta(std::move(alphabet), dp);
    eta.check_letters(dp.table);
    return eta;
}

Configuration Configuration::doubly_periodic_tile(Alphabet alphabet, const std::vector<std::string>& rows) {
    if (rows.empty() || rows.front().empty()) throw DomainError("empty tile");
    const Int w = static_cast<Int>(rows.front().size());
    const Int h = static_cast<Int>(rows.size());
    return doubly_periodic_tile(std::move(alphabet), {w, 0}, {0, h}, rows);
}

Configuration Configuration::doubly_periodic_tile(Alphabet alphabet, Vec b1, Vec b2,
                                                  const std::vector<std::string>& rows) {
    DoublyPeriodic dp = normal_form(b1, b2);
    if (static_cast<Int>(rows.size()) != dp.q)
        throw DomainError("tile must have " + std::to_string(dp.q) + " rows");
    const auto up = bottom_up(rows);
    for (Int y = 0; y < dp.q; ++y) {
        if (static_cast<Int>(up[y].size()) != dp.p)
            throw DomainError("tile rows must have " + std::to_string(dp.p) + " letters");
        dp.table += up[y];
    }
    Configuration eta(std::move(alphabet), dp);
    eta.check_letters(dp.table);
    return eta;
}

Configuration Configuration::finite_defect(Alphabet alphabet, char background,
                                           const std::map<LatticePoint, char>& defects) {
    FiniteDefect fd{background, {}};
    std::string used(1, background);
    for (const auto& [g, c] : defects) {
        if (c == background) continue;
        fd.defects.emplace(g, c);
        used += c;
    }
    Configuration eta(std::move(alphabet), fd);
    eta.check_letters(used);
    return eta;
}

Configuration Configuration::window(Alphabet alphabet, LatticePoint origin, const std::vector<std::string>& rows) {
    if (rows.empty() || rows.front().empty()) throw DomainError("empty window");
    WindowSample ws{origin, static_cast<Int>(rows.front().size()), static_cast<Int>(rows.size()), bottom_up(rows)};
    std::string used;
    for (const auto& r : ws.rows) {
        if (static_cast<Int>(r.size()) != ws.width) throw DomainError("window rows must have equal length");
        used += r;
    }
    Configuration eta(std::move(alphabet), ws);
    eta.check_letters(used);
    return eta;
}

std::string Configuration::kind() const {
    return std::visit(
        [](const auto& b) -> std::string {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, DoublyPeriodic>) return "doubly_periodic";
            else if constexpr (std::is_same_v<T, FiniteDefect>) return "finite_defect";
            else if constexpr (std::is_same_v<T, DiagonalFamily>) return "diagonal_family";
            else return "window";
        },
        body_);
}

char Configuration::letter_at(LatticePoint g) const {
    return std::visit(
        [g](const auto& b) -> char {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, DoublyPeriodic>) {
                const auto r = b.reduce(g);
                return b.table[static_cast<std::size_t>(r.y * b.p + r.x)];
            } else if constexpr (std::is_same_v<T, FiniteDefect>) {
                const auto it = b.defects.find(g);
                return it == b.defects.end() ? b.background : it->second;
            } else if constexpr (std::is_same_v<T, DiagonalFamily>) {
                return DiagonalFamily::is_offset(g.x - g.y) ? b.black : b.white;
            } else {
                if (!b.covers(g)) throw UnknownLetterError("unknown letter at " + to_string(g) + " (outside window)");
                return b.rows[static_cast<std::size_t>(g.y - b.origin.y)][static_cast<std::size_t>(g.x - b.origin.x)];
            }
        },
        body_);
}

std::vector<LatticePoint> canonical_shape(std::span<const LatticePoint> points) {
    std::vector<LatticePoint> out(points.begin(), points.end());
    std::sort(out.begin(), out.end());
    if (!out.empty()) {
        const auto o = out.front();
        for (auto& p : out) p = p - o;
    }
    return out;
}

Pattern extract_pattern(const Configuration& eta, std::span<const LatticePoint> s, LatticePoint u) {
    std::vector<LatticePoint> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    Pattern pat;
    pat.letters.reserve(sorted.size());
    for (const auto& g : sorted) pat.letters += eta.letter_at(g + u);
    pat.shape = canonical_shape(sorted);
    return pat;
}

std::string pattern_grid(const Pattern& pattern) {
    if (pattern.shape.empty()) return "\n";
    Int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& g : pattern.shape) {
        min_x = std::min(min_x, g.x);
        max_x = std::max(max_x, g.x);
        min_y = std::min(min_y, g.y);
        max_y = std::max(max_y, g.y);
    }
    const auto w = static_cast<std::size_t>(max_x - min_x + 1);
    std::vector<std::string> rows(static_cast<std::size_t>(max_y - min_y + 1), std::string(w, '.'));
    for (std::size_t i = 0; i < pattern.shape.size(); ++i) {
        const auto& g = pattern.shape[i];
        rows[static_cast<std::size_t>(max_y - g.y)][static_cast<std::size_t>(g.x - min_x)] = pattern.letters[i];
    }
    std::string out;
    for (const auto& r : rows) out += r + "\n";
    return out;
}

EnumerationDomain enumeration_domain(const Configuration& eta, std::span<const LatticePoint> s) {
    if (s.empty()) return {{LatticePoint{0, 0}}, Exactness::Exact};
    Int min_x = s.front().x, max_x = min_x, min_y = s.front().y, max_y = min_y;
    Int min_d = s.front().x - s.front().y, max_d = min_d;
    for (const auto& g : s) {
        min_x = std::min(min_x, g.x);
        max_x = std::max(max_x, g.x);
        min_y = std::min(min_y, g.y);
        max_y = std::max(max_y, g.y);
        min_d = std::min(min_d, g.x - g.y);
        max_d = std::max(max_d, g.x - g.y);
    }

    EnumerationDomain dom;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, DoublyPeriodic>) {
                for (Int y = 0; y < b.q; ++y)
                    for (Int x = 0; x < b.p; ++x) dom.translates.push_back({x, y});
            } else if constexpr (std::is_same_v<T, FiniteDefect>) {
                std::set<LatticePoint> us;
                // Defects are sorted by x first, so the last one is rightmost.
                const Int far_x = b.defects.empty() ? 0 : b.defects.rbegin()->first.x;
                for (const auto& [d, c] : b.defects)
                    for (const auto& g : s) us.insert(d - g);
                us.insert({far_x - min_x + 1, 0});
                dom.translates.assign(us.begin(), us.end());
            } else if constexpr (std::is_same_v<T, DiagonalFamily>) {
                // Past sigma(K+1) consecutive black diagonals are farther apart
                // than the shape is wide, so only single hits and blanks remain,
                // and every one of those already occurs next to sigma(K+1).
                const Int width = max_d - min_d + 1;
                const Int k = std::max<Int>(6, width);
                const Int m = DiagonalFamily::sigma(k + 1) + width + std::abs(min_d) + std::abs(max_d) + 1;
                for (Int t = -m; t <= m; ++t) dom.translates.push_back({t, 0});
            } else {
                dom.exactness = Exactness::LowerBound;
                for (Int y = b.origin.y - min_y; y <= b.origin.y + b.height - 1 - max_y; ++y)
                    for (Int x = b.origin.x - min_x; x <= b.origin.x + b.width - 1 - max_x; ++x)
                        dom.translates.push_back({x, y});
            }
        },
        eta.body());
    return dom;
}

}  // namespace nivatlab
