#include "nivatlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "nivatlab/complexity.hpp"

namespace nivatlab {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

using Factor = std::vector<int>;

std::set<Factor> factors(const Word& w, Int n) {
    std::set<Factor> out;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= w.size(); ++i)
        out.emplace(w.symbols.begin() + static_cast<std::ptrdiff_t>(i),
                    w.symbols.begin() + static_cast<std::ptrdiff_t>(i) + n);
    return out;
}

// Nodes are (n-1)-factors and edges the n-factors of w. Returns the nodes
// from which an infinite walk exists (forward) or into which one arrives
// (backward), by repeatedly discarding dead ends.
std::set<Factor> surviving_nodes(const std::set<Factor>& edges, bool forward) {
    std::map<Factor, std::set<Factor>> succ;
    std::set<Factor> alive;
    for (const auto& e : edges) {
        Factor head(e.begin(), e.end() - 1);
        Factor tail(e.begin() + 1, e.end());
        if (!forward) std::swap(head, tail);
        succ[head].insert(tail);
        alive.insert(head);
        alive.insert(tail);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = alive.begin(); it != alive.end();) {
            bool has_next = false;
            if (auto s = succ.find(*it); s != succ.end())
                for (const auto& t : s->second)
                    if (alive.count(t)) {
                        has_next = true;
                        break;
                    }
            if (!has_next) {
                it = alive.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    return alive;
}

// Inclusive range of i with g + i*v inside the window, empty when lo > hi.
std::pair<Int, Int> window_span(const WindowSample& ws, LatticePoint g, Vec v) {
    Int lo = std::numeric_limits<Int>::min() / 4, hi = std::numeric_limits<Int>::max() / 4;
    auto clamp = [&](Int pos, Int comp, Int lo_edge, Int hi_edge) {
        if (comp == 0) {
            if (pos < lo_edge || pos > hi_edge) hi = lo - 1;
        } else if (comp > 0) {
            lo = std::max(lo, ceil_div(lo_edge - pos, comp));
            hi = std::min(hi, floor_div(hi_edge - pos, comp));
        } else {
            lo = std::max(lo, ceil_div(hi_edge - pos, comp));
            hi = std::min(hi, floor_div(lo_edge - pos, comp));
        }
    };
    clamp(g.x, v.x, ws.origin.x, ws.origin.x + ws.width - 1);
    clamp(g.y, v.y, ws.origin.y, ws.origin.y + ws.height - 1);
    return {lo, hi};
}

// Does d + step*Z meet the black offsets {0} ∪ {±sigma(c)}?
bool progression_meets_offsets(Int d, Int step) {
    const Int m = std::abs(step);
    if (floor_mod(d, m) == 0) return true;
    for (Int c = 6; c < 6 + 2 * m; ++c) {
        const Int sg = DiagonalFamily::sigma(c);
        if (floor_mod(sg - d, m) == 0 || floor_mod(-sg - d, m) == 0) return true;
    }
    return false;
}

}  // namespace

Word Word::from_string(std::string_view letters, Int start) {
    Word w;
    w.start = start;
    for (char c : letters) w.symbols.push_back(static_cast<unsigned char>(c));
    return w;
}

std::string Word::str() const {
    const bool printable = std::all_of(symbols.begin(), symbols.end(), [](int s) { return s >= 33 && s < 127; });
    std::string out;
    if (printable) {
        for (int s : symbols) out += static_cast<char>(s);
        return out;
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(symbols[i]);
    }
    return out;
}

Int Word::distinct_symbols() const {
    return static_cast<Int>(std::set<int>(symbols.begin(), symbols.end()).size());
}

Int word_complexity(const Word& w, Int n) {
    if (n < 1 || n > static_cast<Int>(w.size()))
        throw DomainError("factor length " + std::to_string(n) + " outside [1, " + std::to_string(w.size()) + "]");
    return static_cast<Int>(factors(w, n).size());
}

bool has_period(const Word& w, Int p, std::size_t from) {
    if (p < 1) return false;
    for (std::size_t i = from; i + static_cast<std::size_t>(p) < w.size(); ++i)
        if (w.symbols[i] != w.symbols[i + static_cast<std::size_t>(p)]) return false;
    return true;
}

std::optional<Int> smallest_period(const Word& w, Int max_p, std::size_t from) {
    for (Int p = 1; p <= max_p; ++p)
        if (has_period(w, p, from)) return p;
    return std::nullopt;
}

std::string to_string(MhStatus s) {
    switch (s) {
        case MhStatus::HypothesisFails: return "HYPOTHESIS_FAILS";
        case MhStatus::Verified: return "VERIFIED";
        case MhStatus::Inconclusive: return "INCONCLUSIVE";
        case MhStatus::Violation: return "VIOLATION";
    }
    return "?";
}

MhResult mh_check(const Word& w, Int n0, Sidedness side, std::optional<Int> alphabet_size) {
    MhResult r;
    r.n0 = n0;
    const Int distinct = w.distinct_symbols();
    r.alphabet_size = alphabet_size.value_or(distinct);
    if (distinct != r.alphabet_size)
        throw DomainError("the word uses " + std::to_string(distinct) + " letters but the alphabet has " +
                          std::to_string(r.alphabet_size));
    r.n0_prime = n0 + r.alphabet_size - 2;
    r.complexity = word_complexity(w, n0);

    if (r.complexity > r.n0_prime) {
        r.status = MhStatus::HypothesisFails;
        r.detail = "P(" + std::to_string(n0) + ") = " + std::to_string(r.complexity) + " > " +
                   std::to_string(r.n0_prime);
        return r;
    }
    if (static_cast<Int>(w.size()) < 3 * r.n0_prime) {
        r.status = MhStatus::Inconclusive;
        r.detail = "window shorter than 3*n0'";
        return r;
    }

    // The theorem speaks about infinite sequences. The window is covered only
    // if it extends to one without creating new factors of length n0.
    const auto edges = factors(w, n0);
    const auto len = static_cast<std::ptrdiff_t>(n0 - 1);
    const Factor suffix(w.symbols.end() - len, w.symbols.end());
    const Factor prefix(w.symbols.begin(), w.symbols.begin() + len);
    bool extendable = surviving_nodes(edges, true).count(suffix) > 0;
    if (side == Sidedness::TwoSided) extendable = extendable && surviving_nodes(edges, false).count(prefix) > 0;
    if (!extendable) {
        r.status = MhStatus::Inconclusive;
        r.detail = "window does not extend to an infinite sequence with the same factors";
        return r;
    }

    const std::size_t from = side == Sidedness::OneSided ? static_cast<std::size_t>(r.n0_prime) : 0;
    r.period = smallest_period(w, r.n0_prime, from);
    if (r.period) {
        r.status = MhStatus::Verified;
        r.detail = "period " + std::to_string(*r.period) + " <= " + std::to_string(r.n0_prime);
    } else {
        r.status = MhStatus::Violation;
        r.detail = "no period <= " + std::to_string(r.n0_prime);
    }
    return r;
}

FineWilfResult fine_wilf(const Word& w, Int p, Int q) {
    if (p < 1 || q < 1) throw DomainError("periods must be positive");
    if (!has_period(w, p)) throw DomainError(std::to_string(p) + " is not a period of the word");
    if (!has_period(w, q)) throw DomainError(std::to_string(q) + " is not a period of the word");
    FineWilfResult r;
    const Int g = std::gcd(p, q);
    r.critical_length = p + q - g;
    r.applies = static_cast<Int>(w.size()) >= r.critical_length;
    if (r.applies) {
        if (!has_period(w, g)) throw std::logic_error("word of critical length lacks the gcd period");
        r.combined_period = g;
    }
    return r;
}

PeriodReport detect_periods_2d(const Configuration& eta, Int bound) {
    if (bound < 1) throw DomainError("period search bound must be positive");
    PeriodReport rep;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            for (Int hx = -bound; hx <= bound; ++hx)
                for (Int hy = -bound; hy <= bound; ++hy) {
                    const Vec h{hx, hy};
                    if (hx == 0 && hy == 0) continue;
                    bool ok = true;
                    if constexpr (std::is_same_v<T, DoublyPeriodic>) {
                        for (Int y = 0; y < b.q && ok; ++y)
                            for (Int x = 0; x < b.p && ok; ++x)
                                ok = eta.letter_at({x, y}) == eta.letter_at(LatticePoint{x, y} + h);
                    } else if constexpr (std::is_same_v<T, FiniteDefect>) {
                        ok = b.defects.empty();
                    } else if constexpr (std::is_same_v<T, DiagonalFamily>) {
                        ok = hx == hy;
                    } else {
                        bool overlap = false;
                        for (Int y = 0; y < b.height && ok; ++y)
                            for (Int x = 0; x < b.width && ok; ++x) {
                                const LatticePoint g{b.origin.x + x, b.origin.y + y};
                                if (!b.covers(g + h)) continue;
                                overlap = true;
                                ok = eta.letter_at(g) == eta.letter_at(g + h);
                            }
                        ok = ok && overlap;
                    }
                    if (ok) rep.periods.push_back(h);
                }
            if constexpr (std::is_same_v<T, WindowSample>) {
                rep.certified = false;
                rep.note = "verified on the window only";
            } else {
                rep.certified = true;
                if constexpr (std::is_same_v<T, DoublyPeriodic>) rep.note = "checked on a fundamental domain";
                if constexpr (std::is_same_v<T, FiniteDefect>) rep.note = "a nonempty finite defect set has no period";
                if constexpr (std::is_same_v<T, DiagonalFamily>) rep.note = "periodic exactly along (1,1)";
            }
        },
        eta.body());
    std::sort(rep.periods.begin(), rep.periods.end());
    return rep;
}

StripWord strip_word(const Configuration& eta, Vec v, std::span<const LatticePoint> base, Int t_first,
                     Int t_last) {
    if (base.empty()) throw DomainError("strip base must be nonempty");
    std::vector<Pattern> seq;
    for (Int t = t_first; t <= t_last; ++t) seq.push_back(extract_pattern(eta, base, t * v));
    StripWord out;
    out.alphabet = seq;
    std::sort(out.alphabet.begin(), out.alphabet.end());
    out.alphabet.erase(std::unique(out.alphabet.begin(), out.alphabet.end()), out.alphabet.end());
    out.word.start = t_first;
    for (const auto& p : seq)
        out.word.symbols.push_back(static_cast<int>(
            std::lower_bound(out.alphabet.begin(), out.alphabet.end(), p) - out.alphabet.begin()));
    return out;
}

StripPeriod strip_period(const Configuration& eta, std::span<const LatticePoint> base, Vec v, Int max_period) {
    if (base.empty()) throw DomainError("strip base must be nonempty");
    const Vec w = primitive(v);
    StripPeriod out;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, DoublyPeriodic>) {
                const Int m = b.period_along(w);
                out.certified = true;
                for (Int t = 1; t <= m; ++t) {
                    bool ok = true;
                    for (const auto& g : base)
                        for (Int i = 0; i < m && ok; ++i)
                            ok = eta.letter_at(g + i * w) == eta.letter_at(g + (i + t) * w);
                    if (ok) {
                        out.period = t;
                        return;
                    }
                }
            } else if constexpr (std::is_same_v<T, FiniteDefect>) {
                out.certified = true;
                for (const auto& [d, c] : b.defects)
                    for (const auto& g : base)
                        if (cross(d - g, w) == 0) {
                            out.aperiodic = true;
                            return;
                        }
                out.period = 1;
            } else if constexpr (std::is_same_v<T, DiagonalFamily>) {
                out.certified = true;
                const Int step = w.x - w.y;
                if (step != 0)
                    for (const auto& g : base)
                        if (progression_meets_offsets(g.x - g.y, step)) {
                            out.aperiodic = true;
                            return;
                        }
                out.period = 1;
            } else {
                for (Int t = 1; t <= max_period; ++t) {
                    bool ok = true;
                    for (const auto& g : base) {
                        const auto [lo, hi] = window_span(b, g, w);
                        for (Int i = lo; i + t <= hi && ok; ++i)
                            ok = eta.letter_at(g + i * w) == eta.letter_at(g + (i + t) * w);
                        if (!ok) break;
                    }
                    if (ok) {
                        out.period = t;
                        return;
                    }
                }
            }
        },
        eta.body());
    return out;
}

NullAreaReport null_area_period(const Configuration& eta, const ConvexLatticeSet& s) {
    if (s.has_positive_area()) throw DomainError("null_area_period needs a set with null-area hull");
    NullAreaReport rep;
    const auto& vs = s.vertices();
    rep.direction = vs.size() >= 2 ? primitive(vs[1] - vs[0]) : Vec{1, 0};
    const auto cx = complexity(eta, s);
    rep.complexity = cx.count;
    rep.exactness = cx.exactness;
    rep.bound = static_cast<Int>(s.size()) + static_cast<Int>(eta.alphabet().size()) - 2;
    rep.hypothesis_holds = cx.count <= rep.bound;
    if (!rep.hypothesis_holds) {
        rep.status = "NO_CLAIM";
        return rep;
    }

    const Vec v = rep.direction;
    std::vector<LatticePoint> rows;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, DoublyPeriodic>) {
                for (Int y = 0; y < b.q; ++y)
                    for (Int x = 0; x < b.p; ++x) rows.push_back({x, y});
            } else if constexpr (std::is_same_v<T, FiniteDefect>) {
                for (const auto& [d, c] : b.defects) rows.push_back(d);
            } else if constexpr (std::is_same_v<T, DiagonalFamily>) {
                const Int step = std::abs(v.x - v.y);
                if (step == 0) rows.push_back({0, 0});
                for (Int d = 0; d < step; ++d) rows.push_back({d, 0});
            } else {
                std::set<Int> seen;
                for (Int y = 0; y < b.height; ++y)
                    for (Int x = 0; x < b.width; ++x) {
                        const LatticePoint g{b.origin.x + x, b.origin.y + y};
                        if (seen.insert(cross(v, g)).second) rows.push_back(g);
                    }
            }
        },
        eta.body());

    bool certified = true, aperiodic = false, missing = false;
    Int combined = 1;
    for (const auto& g : rows) {
        const std::vector<LatticePoint> base{g};
        const auto sp = strip_period(eta, base, v, rep.bound);
        certified = certified && sp.certified;
        if (sp.aperiodic) aperiodic = true;
        if (!sp.period) {
            missing = true;
            continue;
        }
        rep.row_periods.push_back(*sp.period);
        combined = std::lcm(combined, *sp.period);
    }
    rep.certified = certified && cx.exactness == Exactness::Exact;
    rep.rows_within_bound = std::all_of(rep.row_periods.begin(), rep.row_periods.end(),
                                        [&](Int p) { return p <= rep.bound; });
    if (aperiodic) {
        rep.status = rep.certified ? "VIOLATION" : "INCONCLUSIVE";
        return rep;
    }
    if (missing) {
        rep.status = "INCONCLUSIVE";
        return rep;
    }
    rep.period = combined * v;
    rep.within_magnitude_bound = combined <= rep.bound;
    rep.status = rep.certified ? "PERIODIC" : "INCONCLUSIVE";
    return rep;
}

}  // namespace nivatlab
