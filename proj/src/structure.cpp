#include "nivatlab/structure.hpp"

#include "nivatlab/words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace nivatlab {

namespace {

// Thrown internally when a count is only a lower bound.
struct Refusal {};

Int exact_count(ComplexityEngine& engine, std::span<const LatticePoint> s) {
    const auto r = engine.complexity(s);
    if (r.exactness != Exactness::Exact) throw Refusal{};
    return r.count;
}

Int exact_count(ComplexityEngine& engine, const ConvexLatticeSet& s) {
    return exact_count(engine, std::span<const LatticePoint>(s.points()));
}

Int alphabet_size(ComplexityEngine& engine) {
    return static_cast<Int>(engine.configuration().alphabet().size());
}

Int ceil_half(Int n) { return (n + 1) / 2; }

std::vector<LatticePoint> sorted_vertices(const ConvexLatticeSet& s) {
    auto v = s.vertices();
    std::sort(v.begin(), v.end());
    return v;
}

template <class Ok, class Allow>
ConvexLatticeSet descend(ConvexLatticeSet s, Ok ok, Allow allow, std::vector<Int>& sizes) {
    sizes.push_back(static_cast<Int>(s.size()));
    for (;;) {
        bool moved = false;
        for (const auto& v : sorted_vertices(s)) {
            if (!allow(s, v)) continue;
            auto t = s.without(v);
            if (!t || t->size() == 0) continue;
            if (ok(*t)) {
                s = std::move(*t);
                sizes.push_back(static_cast<Int>(s.size()));
                moved = true;
                break;
            }
        }
        if (!moved) return s;
    }
}

GenerationCertificate certify(ComplexityEngine& engine, const ConvexLatticeSet& s, LatticePoint g) {
    GenerationCertificate c;
    c.point = g;
    c.with_point = exact_count(engine, s);
    std::vector<LatticePoint> rest;
    for (const auto& q : s.points())
        if (q != g) rest.push_back(q);
    c.without_point = exact_count(engine, rest);
    c.generated = c.with_point == c.without_point;
    return c;
}

InequalityInstance generating_bound(const std::string& name, Int count, Int size, Int a, const std::string& set = "S") {
    return InequalityInstance::make(name, "P(" + set + ")", count, "|" + set + "| + |A| - 2", size + a - 2);
}

InequalityInstance mlc_bound(const std::string& name, Int count, Int size, Int a, const std::string& set = "S") {
    return InequalityInstance::make(name, "P(" + set + ")", count, "|" + set + "|/2 + |A| - 1",
                                    Rational(size, 2) + a - 1);
}

std::vector<LatticePoint> minus_line(const ConvexLatticeSet& s, const OrientedLine& line) {
    return points_off(std::span<const LatticePoint>(s.points()), line);
}

// Primitive directions to audit: edge directions of s and every primitive
// vector with coordinates in [-2,2].
std::vector<Vec> audit_directions(const ConvexLatticeSet& s) {
    std::set<Vec> dirs;
    for (const auto& e : s.edges()) {
        dirs.insert(e.direction());
        dirs.insert(-e.direction());
    }
    for (Int dx = -2; dx <= 2; ++dx)
        for (Int dy = -2; dy <= 2; ++dy)
            if ((dx != 0 || dy != 0) && std::gcd(dx, dy) == 1) dirs.insert({dx, dy});
    return {dirs.begin(), dirs.end()};
}

std::string join_keys(const std::set<std::string>& keys) {
    std::string out;
    for (const auto& k : keys) {
        out += k;
        out += '|';
    }
    return out;
}

// Letters of eta on `sorted` + u + t w for each t of the scan.
std::set<std::string> directional_keys(const Configuration& eta, const std::vector<LatticePoint>& sorted, Vec w,
                                       LatticePoint u, Exactness* exactness = nullptr) {
    const auto scan = directional_scan(eta, sorted, w, u, DirectionalRange::All);
    if (exactness) *exactness = combine(*exactness, scan.exactness);
    std::set<std::string> keys;
    for (Int t : scan.ts) keys.insert(pattern_key(eta, sorted, u + t * w));
    return keys;
}

Int induced_alphabet(const Configuration& eta, const std::vector<LatticePoint>& initial, Vec w, LatticePoint u) {
    if (initial.empty()) return 1;
    auto sorted = initial;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<Int>(directional_keys(eta, sorted, w, u).size());
}

// Smallest p_x in [1,p] with increment <= p_x + |A^{l,p_x}| - 2.
XWitness balance_witness(const Configuration& eta, const ConvexLatticeSet& u, const OrientedLine& l, Int p,
                         Int increment, LatticePoint x) {
    XWitness w;
    w.translate = x;
    const Vec v = l.direction();
    if (p >= 1) w.induced_alphabet = induced_alphabet(eta, directional_point_sets(u, l, p).initial, v, x);
    for (Int px = 1; px <= p; ++px) {
        const Int a = px == p ? w.induced_alphabet
                              : induced_alphabet(eta, directional_point_sets(u, l, px).initial, v, x);
        if (increment <= px + a - 2) {
            w.p_x = px;
            break;
        }
    }
    w.holds = w.p_x.has_value();
    return w;
}

}  // namespace

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

InequalityInstance InequalityInstance::make(std::string name, std::string lhs_text, Rational lhs,
                                            std::string rhs_text, Rational rhs) {
    InequalityInstance i;
    i.name = std::move(name);
    i.lhs_text = std::move(lhs_text);
    i.rhs_text = std::move(rhs_text);
    i.lhs = lhs;
    i.rhs = rhs;
    i.holds = lhs <= rhs;
    return i;
}

std::string InequalityInstance::str() const {
    std::ostringstream os;
    os << name << ": " << lhs_text << " = " << to_string(lhs) << (holds ? " <= " : " > ") << rhs_text << " = "
       << to_string(rhs);
    return os.str();
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "FOUND";
        case SearchStatus::NoClaim: return "NO_CLAIM";
        case SearchStatus::Refused: return "REFUSED";
    }
    return "?";
}

std::optional<bool> is_generated(ComplexityEngine& engine, const ConvexLatticeSet& s, LatticePoint g) {
    if (!s.contains(g)) throw DomainError("point " + to_string(g) + " is not in the set");
    try {
        return certify(engine, s, g).generated;
    } catch (const Refusal&) {
        return std::nullopt;
    }
}

GeneratingSetResult find_generating_set(ComplexityEngine& engine, const ConvexLatticeSet& u) {
    GeneratingSetResult out;
    out.kind = "GENERATING";
    const Int a = alphabet_size(engine);
    try {
        const Int pu = exact_count(engine, u);
        out.precondition = generating_bound("P(U) <= |U| + |A| - 2", pu, static_cast<Int>(u.size()), a, "U");
        if (!out.precondition.holds) {
            out.message = "precondition fails; no claim";
            return out;
        }
        auto ok = [&](const ConvexLatticeSet& t) {
            return exact_count(engine, t) <= static_cast<Int>(t.size()) + a - 2;
        };
        auto any = [](const ConvexLatticeSet&, LatticePoint) { return true; };
        auto s = descend(u, ok, any, out.chain_sizes);
        out.complexity = exact_count(engine, s);
        out.bound_check = generating_bound("P(S) <= |S| + |A| - 2", out.complexity, static_cast<Int>(s.size()), a);
        for (const auto& v : sorted_vertices(s)) out.certificates.push_back(certify(engine, s, v));
        out.positive_area = s.has_positive_area();
        out.set = std::move(s);
        out.status = SearchStatus::Found;
    } catch (const Refusal&) {
        out.status = SearchStatus::Refused;
        out.message = "lower-bound counts cannot decide";
    }
    return out;
}

GeneratingSetResult find_directional_generating_set(ComplexityEngine& engine, const ConvexLatticeSet& u,
                                                    const OrientedLine& l) {
    GeneratingSetResult out;
    out.kind = "DIRECTIONAL";
    out.direction = l;
    const Int a = alphabet_size(engine);
    try {
        const Int pu = exact_count(engine, u);
        out.precondition = generating_bound("P(U) <= |U| + |A| - 2", pu, static_cast<Int>(u.size()), a, "U");
        if (!out.precondition.holds) {
            out.message = "precondition fails; no claim";
            return out;
        }
        // S_1 = U, S_{i+1} = S_i minus its supporting row.
        std::vector<ConvexLatticeSet> peels{u};
        for (;;) {
            const auto& cur = peels.back();
            const auto row = supporting_line(cur, l);
            auto next = cur.intersect(HalfPlane(adjacent_line(row, LineStep::Inward)));
            if (!next || next->size() == 0) break;
            peels.push_back(std::move(*next));
        }
        std::size_t best = 0;
        for (std::size_t i = 0; i < peels.size(); ++i) {
            out.peel_sizes.push_back(static_cast<Int>(peels[i].size()));
            if (exact_count(engine, peels[i]) <= static_cast<Int>(peels[i].size()) + a - 2) best = i;
        }
        out.peel_index = static_cast<Int>(best) + 1;
        const auto& si = peels[best];
        const auto top = supporting_line(si, l);

        auto ok = [&](const ConvexLatticeSet& t) {
            return exact_count(engine, t) <= static_cast<Int>(t.size()) + a - 2;
        };
        auto on_top = [&](const ConvexLatticeSet&, LatticePoint v) { return top.contains(v); };
        auto s = descend(si, ok, on_top, out.chain_sizes);

        out.complexity = exact_count(engine, s);
        out.bound_check = generating_bound("P(S) <= |S| + |A| - 2", out.complexity, static_cast<Int>(s.size()), a);
        const auto ls = supporting_line(s, l);
        for (const auto& v : sorted_vertices(s))
            if (ls.contains(v)) out.certificates.push_back(certify(engine, s, v));

        // The empty set has exactly one pattern, so a single row still gets an increment.
        const auto rest = minus_line(s, ls);
        const Int on = static_cast<Int>(s.size() - rest.size());
        out.increment_bound = InequalityInstance::make("P(S) - P(S \\ l_S) <= |l_S ∩ S| - 1", "P(S) - P(S \\ l_S)",
                                                       out.complexity - exact_count(engine, rest), "|l_S ∩ S| - 1",
                                                       on - 1);
        // S \ l_S should be the part of U strictly inside the peeled row.
        const auto boundary = adjacent_line(top, LineStep::Inward);
        const auto section = u.intersect(HalfPlane(boundary));
        out.half_plane_boundary = boundary;
        out.half_plane_section = section ? section->points() == rest : rest.empty();
        out.positive_area = s.has_positive_area();
        out.set = std::move(s);
        out.status = SearchStatus::Found;
    } catch (const Refusal&) {
        out.status = SearchStatus::Refused;
        out.message = "lower-bound counts cannot decide";
    }
    return out;
}

std::vector<ConvexLatticeSet> proper_convex_subsets(const ConvexLatticeSet& s, std::size_t limit, bool& complete) {
    std::vector<ConvexLatticeSet> out;
    std::set<std::vector<LatticePoint>> seen;
    std::deque<ConvexLatticeSet> queue{s};
    complete = true;
    while (!queue.empty()) {
        const auto cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& v : sorted_vertices(cur)) {
            auto t = cur.without(v);
            if (!t || t->size() == 0) continue;
            if (!seen.insert(t->points()).second) continue;
            if (out.size() >= limit) {
                complete = false;
                return out;
            }
            out.push_back(*t);
            queue.push_back(std::move(*t));
        }
    }
    return out;
}

GeneratingSetResult find_mlc_set(ComplexityEngine& engine, const ConvexLatticeSet& u, const MlcOptions& opts) {
    GeneratingSetResult out;
    out.kind = "MLC";
    const Int a = alphabet_size(engine);
    auto qualifies = [&](const ConvexLatticeSet& t) {
        return 2 * exact_count(engine, t) <= static_cast<Int>(t.size()) + 2 * a - 2;
    };
    try {
        out.precondition = mlc_bound("P(U) <= |U|/2 + |A| - 1", exact_count(engine, u), static_cast<Int>(u.size()), a, "U");
        if (!out.precondition.holds) {
            out.message = "precondition fails; no claim";
            return out;
        }
        auto any = [](const ConvexLatticeSet&, LatticePoint) { return true; };
        auto s = descend(u, qualifies, any, out.chain_sizes);

        // Chain minimality is not inclusion minimality: look at every proper
        // convex subset and move to the smallest qualifying one.
        bool complete = false;
        auto subsets = proper_convex_subsets(s, opts.exhaustive_limit, complete);
        std::optional<ConvexLatticeSet> smaller;
        for (const auto& t : subsets) {
            if (!qualifies(t)) continue;
            if (!smaller || t.size() < smaller->size() ||
                (t.size() == smaller->size() && t.points() < smaller->points()))
                smaller = t;
        }
        if (smaller) {
            s = std::move(*smaller);
            out.chain_sizes.push_back(static_cast<Int>(s.size()));
            subsets = proper_convex_subsets(s, opts.exhaustive_limit, complete);
        }

        out.complexity = exact_count(engine, s);
        const Int size = static_cast<Int>(s.size());
        out.bound_check = mlc_bound("P(S) <= |S|/2 + |A| - 1", out.complexity, size, a);

        SubsetAudit minimal, ineq;
        minimal.exhaustive = ineq.exhaustive = complete;
        for (const auto& t : subsets) {
            const Int pt = exact_count(engine, t);
            ++minimal.checked;
            ++ineq.checked;
            const auto own = mlc_bound("P(T) <= |T|/2 + |A| - 1", pt, static_cast<Int>(t.size()), a, "T");
            if (own.holds) {
                ++minimal.violations;
                if (minimal.failures.size() < 5) minimal.failures.push_back(own);
            }
            const Int diff = size - static_cast<Int>(t.size());
            auto inst = InequalityInstance::make("P(S) - P(T) <= ceil(|S \\ T|/2) - 1", "P(S) - P(T)",
                                                 out.complexity - pt, "ceil(|S \\ T|/2) - 1", ceil_half(diff) - 1);
            if (!inst.holds) {
                ++ineq.violations;
                if (ineq.failures.size() < 5) ineq.failures.push_back(inst);
            }
        }
        out.minimality = minimal;
        out.mlc_inequality = ineq;

        for (const auto& v : sorted_vertices(s)) out.certificates.push_back(certify(engine, s, v));

        for (const Vec d : audit_directions(s)) {
            const OrientedLine line(d, 0);
            const auto ls = supporting_line(s, line);
            const auto rest = minus_line(s, ls);
            if (rest.empty()) continue;
            const Int on = size - static_cast<Int>(rest.size());
            out.increment_audit.push_back(InequalityInstance::make(
                "P(S) - P(S \\ l_S) <= ceil(|l_S ∩ S|/2) - 1 along " + to_string(d), "P(S) - P(S \\ l_S)",
                out.complexity - exact_count(engine, rest), "ceil(|l_S ∩ S|/2) - 1", ceil_half(on) - 1));
        }
        out.positive_area = s.has_positive_area();
        if (opts.nonexpansive_candidate && out.positive_area) {
            const auto ls = supporting_line(s, *opts.nonexpansive_candidate);
            out.direction = opts.nonexpansive_candidate;
            out.three_on_support = InequalityInstance::make(
                "3 <= |l_S ∩ S|", "3", 3, "|l_S ∩ S|",
                static_cast<Int>(points_on(std::span<const LatticePoint>(s.points()), ls).size()));
        }
        out.set = std::move(s);
        out.status = SearchStatus::Found;
    } catch (const Refusal&) {
        out.status = SearchStatus::Refused;
        out.message = "lower-bound counts cannot decide";
    }
    return out;
}

std::vector<LatticePoint> DirectionalPointSets::strip(Int t_lo, Int t_hi) const {
    std::set<LatticePoint> pts;
    for (Int t = t_lo; t <= t_hi; ++t)
        for (const auto& g : initial) pts.insert(g + t * v);
    return {pts.begin(), pts.end()};
}

std::vector<LatticePoint> DirectionalPointSets::half_strip_plus(Int a, Int t_hi) const { return strip(a, t_hi); }

std::vector<LatticePoint> DirectionalPointSets::half_strip_minus(Int a, Int t_hi) const {
    std::set<LatticePoint> pts;
    for (Int t = a; t <= t_hi; ++t)
        for (const auto& g : final) pts.insert(g - t * v);
    return {pts.begin(), pts.end()};
}

DirectionalPointSets directional_point_sets(const ConvexLatticeSet& u, const OrientedLine& l, Int p) {
    if (!u.has_positive_area()) throw DomainError("directional point sets need a set with positive-area hull");
    if (p < 1) throw DomainError("p must be at least 1");
    DirectionalPointSets out{supporting_line(u, l), l.direction(), p, {}, {}};
    std::map<Int, std::vector<LatticePoint>> rows;
    for (const auto& g : u.points())
        if (!out.support.contains(g)) rows[l.level(g)].push_back(g);
    auto along = [&](LatticePoint a, LatticePoint b) { return dot(a, out.v) < dot(b, out.v); };
    for (const auto& [level, row] : rows) {
        if (static_cast<Int>(row.size()) < p) continue;
        out.initial.push_back(*std::min_element(row.begin(), row.end(), along));
        out.final.push_back(*std::max_element(row.begin(), row.end(), along));
    }
    std::sort(out.initial.begin(), out.initial.end());
    std::sort(out.final.begin(), out.final.end());
    return out;
}

EmpiricalM empirical_m(ComplexityEngine& engine, const ConvexLatticeSet& u, const OrientedLine& l) {
    const auto& eta = engine.configuration();
    const auto table = extension_counts(eta, u, l);
    EmpiricalM out;
    out.exactness = table.exactness;
    const auto& pts = u.points();
    std::vector<std::size_t> base_index;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!table.support.contains(pts[i])) base_index.push_back(i);

    const auto dom = enumeration_domain(eta, u);
    out.exactness = combine(out.exactness, dom.exactness);
    std::set<std::string> classes;
    const Vec w = l.direction();
    for (const auto& x : dom.translates) {
        ++out.translates_examined;
        const auto keys = directional_keys(eta, pts, w, x, &out.exactness);
        if (!classes.insert(join_keys(keys)).second) continue;
        bool all_multiple = true;
        for (const auto& k : keys) {
            std::string base;
            for (std::size_t i : base_index) base += k[i];
            if (table.n(base) <= 1) {
                all_multiple = false;
                break;
            }
        }
        if (all_multiple) out.members.push_back(x);
    }
    out.classes = static_cast<Int>(classes.size());
    return out;
}

PhiResult phi(ComplexityEngine& engine, const ConvexLatticeSet& t, const OrientedLine& l, Int p) {
    const auto& eta = engine.configuration();
    PhiResult out;
    const auto lt = supporting_line(t, l);
    const auto rest = minus_line(t, lt);
    if (rest.empty()) throw DomainError("T minus its supporting row is empty");
    const Int on = static_cast<Int>(t.size() - rest.size());
    out.increment = engine.complexity(t).count - engine.complexity(rest).count;

    const auto m = empirical_m(engine, t, l);
    out.m_classes = static_cast<Int>(m.members.size());
    bool trivial = true;
    std::optional<Int> best;
    for (const auto& x : m.members) {
        auto w = balance_witness(eta, t, l, p, out.increment, x);
        if (p < 1 || w.induced_alphabet > 1) trivial = false;
        if (!w.holds) out.balanced_for_all = false;
        if (w.p_x) {
            const Int a = induced_alphabet(eta, directional_point_sets(t, l, *w.p_x).initial, l.direction(), x);
            if (a > 1) best = std::max(best.value_or(*w.p_x + a - 2), *w.p_x + a - 2);
        }
        out.witnesses.push_back(std::move(w));
    }
    if (trivial || !best) {
        out.which_case = "DIFFERENCE";
        out.value = out.increment;
    } else {
        out.which_case = "MAX_FORM";
        out.value = *best;
    }
    out.halved_bound = InequalityInstance::make("2 Phi <= 2 ceil(|l_T ∩ T|/2) - 2", "2 Phi", 2 * out.value,
                                                "2 ceil(|l_T ∩ T|/2) - 2", 2 * ceil_half(on) - 2);
    return out;
}

BalancedSetCertificate construct_balanced_set(ComplexityEngine& engine, const ConvexLatticeSet& u,
                                              const OrientedLine& l, const BalancedOptions& opts) {
    const auto qr = is_quasi_regular(u);
    if (!qr.regular) throw DomainError("construction needs a quasi-regular set");
    const auto& eta = engine.configuration();
    const Int a = alphabet_size(engine);
    BalancedSetCertificate out;
    out.direction = l;
    out.assume_nonexpansive = opts.assume_nonexpansive;
    out.witness_radius = opts.witness_radius;
    auto fail = [&](std::string step) {
        out.status = "CONSTRUCTION_ERROR";
        out.failed_step = std::move(step);
        return out;
    };

    const auto pu = engine.complexity(u);
    out.hypothesis = mlc_bound("P(U) <= |U|/2 + |A| - 1", pu.count, static_cast<Int>(u.size()), a, "U");
    if (pu.exactness != Exactness::Exact) {
        out.status = "HYPOTHESIS_FAILS";
        out.note = "lower-bound counts cannot establish the hypothesis";
        return out;
    }
    if (!out.hypothesis.holds) {
        out.status = "HYPOTHESIS_FAILS";
        return out;
    }

    // Centre z: intersection of the first two non-parallel axes of symmetry.
    const auto axes = axes_of_symmetry(u);
    std::optional<std::pair<Rational, Rational>> z;
    for (std::size_t i = 0; i < axes.size() && !z; ++i) {
        for (std::size_t j = i + 1; j < axes.size() && !z; ++j) {
            const Vec d1 = axes[i].to - axes[i].from;
            const Vec d2 = axes[j].to - axes[j].from;
            const Int den = cross(d1, d2);
            if (den == 0) continue;
            const Rational s(cross(axes[j].from - axes[i].from, d2), den);
            z = std::make_pair(Rational(axes[i].from.x) + s * d1.x, Rational(axes[i].from.y) + s * d1.y);
        }
    }
    if (!z) return fail("intersection of two axes of symmetry");
    out.centre_x = z->first;
    out.centre_y = z->second;
    const Vec d = l.direction();
    const Rational fz = Rational(d.x) * z->second - Rational(d.y) * z->first;

    const auto& edges = u.edges();
    auto meets = [&](const Edge& e) {
        const Int f1 = l.level(e.from), f2 = l.level(e.to);
        return Rational(std::min(f1, f2)) <= fz && fz <= Rational(std::max(f1, f2));
    };
    auto fmax = [&](const Edge& e) { return std::max(l.level(e.from), l.level(e.to)); };
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (const auto& [i, j] : qr.pairing) {
        if (cross(edges[i].direction(), d) == 0) continue;
        if (meets(edges[i]) && meets(edges[j])) {
            pair = std::make_pair(i, j);
            break;
        }
    }
    if (!pair) return fail("antiparallel edges met by the line through the centre");
    out.edge_pair = *pair;
    out.cut_level = std::min(fmax(edges[pair->first]), fmax(edges[pair->second]));

    auto t = u.intersect(HalfPlane(OrientedLine(-d, -out.cut_level)));
    if (!t || t->size() == 0) return fail("half plane section T");
    const Int tsize = static_cast<Int>(t->size());
    const Int usize = static_cast<Int>(u.size());
    out.t = *t;
    out.assertions.push_back(
        InequalityInstance::make("|U|/2 + 1 <= |T|", "|U|/2 + 1", Rational(usize, 2) + 1, "|T|", tsize));
    if (!out.assertions.back().holds) return fail(out.assertions.back().name);
    out.assertions.push_back(generating_bound("P(T) <= |T| + |A| - 2", engine.complexity(*t).count, tsize, a, "T"));
    if (!out.assertions.back().holds) return fail(out.assertions.back().name);

    const auto dir = find_directional_generating_set(engine, *t, l);
    if (dir.status != SearchStatus::Found) return fail("directional generating set in T");
    const auto& s = *dir.set;
    out.s = s;
    for (const auto& c : dir.certificates)
        if (!c.generated) return fail("vertex " + to_string(c.point) + " of S on l_S is generated");

    if (opts.witness_radius > 0) {
        auto w = expansive_witness(engine, l, opts.witness_radius);
        if (w.witness) out.expansive_witness = std::move(w.witness);
    }
    out.s_positive_area = s.has_positive_area();
    // A null-area S is only excluded when l is one-sided nonexpansive.
    if (!out.s_positive_area && !out.expansive_witness) return fail("S has positive-area hull");

    const auto ls = supporting_line(s, l);
    const auto lbar = supporting_line(s, l.reversed());
    const std::span<const LatticePoint> sp(s.points());
    const Int on = static_cast<Int>(points_on(sp, ls).size());
    const Int opposite = static_cast<Int>(points_on(sp, lbar).size());
    out.assertions.push_back(InequalityInstance::make("|l_S ∩ S| <= |lbar_S ∩ S|", "|l_S ∩ S|", on,
                                                      "|lbar_S ∩ S|", opposite));
    if (!out.assertions.back().holds) return fail(out.assertions.back().name);
    out.assertions.push_back(*dir.increment_bound);
    if (!out.assertions.back().holds) return fail(out.assertions.back().name);
    if (!dir.half_plane_section.value_or(false)) return fail("S \\ l_S is a half-plane section of T");

    out.p = on - 1;
    out.p_positive = out.p >= 1;

    // Condition (i) on every lattice line strictly inside the support.
    std::map<Int, Int> per_level;
    for (const auto& g : s.points()) ++per_level[l.level(g)];
    out.condition_i_holds = true;
    out.chord_recheck_holds = true;
    const Int chord = std::min(on, opposite) - 1;
    for (Int level = ls.offset() + 1; level <= -lbar.offset(); ++level) {
        const auto it = per_level.find(level);
        const Int count = it == per_level.end() ? 0 : it->second;
        out.condition_i.push_back({level, count});
        if (count < out.p) out.condition_i_holds = false;
        if (count < chord) out.chord_recheck_holds = false;
    }

    if (!out.s_positive_area) {
        out.note = "S is a single row with null-area hull; l is one-sided expansive (witness within radius " +
                   std::to_string(opts.witness_radius) +
                   "), so the positive-area conclusion does not apply and condition (ii) and Phi are undefined.";
        out.status = "DEGENERATE";
        return out;
    }

    // Condition (ii), over the empirical M.
    const auto m = empirical_m(engine, s, l);
    out.m_size = static_cast<Int>(m.members.size());
    const Int increment = dir.increment_bound->lhs.numerator();
    out.condition_ii_holds = true;
    for (const auto& x : m.members) {
        auto w = balance_witness(eta, s, l, out.p, increment, x);
        if (out.p < 1 || w.induced_alphabet > 1)
            if (!w.holds) out.condition_ii_holds = false;
        out.condition_ii.push_back(std::move(w));
    }

    out.phi = phi(engine, s, l, out.p);

    std::string note;
    if (!out.p_positive)
        note += "p = 0: l_S ∩ S is a single generated point, so S itself shows l is one-sided expansive; "
                "the nonexpansive hypothesis does not hold for this direction. ";
    if (out.expansive_witness)
        note += "an expansiveness witness exists within radius " + std::to_string(opts.witness_radius) + ". ";
    else if (opts.witness_radius > 0)
        note += "no expansiveness witness within radius " + std::to_string(opts.witness_radius) +
                " (not a proof of nonexpansiveness). ";
    if (out.m_size == 0) note += "empirical M is empty; condition (ii) holds vacuously. ";
    if (!note.empty()) note.pop_back();
    out.note = note;
    out.status = "CONSTRUCTED";
    return out;
}

StripLemmaReport verify_strip_lemma(ComplexityEngine& engine, const ConvexLatticeSet& u, const OrientedLine& l,
                                    Int p, Int window) {
    const auto& eta = engine.configuration();
    StripLemmaReport out;
    if (window < 1) throw DomainError("window must be positive");
    const auto lu = supporting_line(u, l);
    const auto rest = minus_line(u, lu);
    if (rest.empty()) throw DomainError("U minus its supporting row is empty");

    const auto pu = engine.complexity(u);
    const auto pr = engine.complexity(rest);
    const bool exact = pu.exactness == Exactness::Exact && pr.exactness == Exactness::Exact;
    const Int increment = pu.count - pr.count;

    out.generating = true;
    for (const auto& v : sorted_vertices(u)) {
        if (!lu.contains(v)) continue;
        const auto g = is_generated(engine, u, v);
        if (!g) {
            out.generating = false;
            out.status = "INCONCLUSIVE";
            out.details.push_back("generation of " + to_string(v) + " cannot be decided from lower-bound counts");
            return out;
        }
        if (!*g) throw DomainError("U is not generating along l: vertex " + to_string(v) + " is not generated");
    }

    const auto m = empirical_m(engine, u, l);
    out.m_size = static_cast<Int>(m.members.size());
    const bool certain = exact && m.exactness == Exactness::Exact;
    if (m.members.empty()) {
        out.vacuous = true;
        out.status = certain ? "PASS" : "INCONCLUSIVE";
        out.details.push_back("empirical M is empty");
        return out;
    }
    const auto sets = directional_point_sets(u, l, p);
    const Vec v = l.direction();
    bool failed = false, unsure = !certain;
    for (const auto& x : m.members) {
        std::vector<LatticePoint> base;
        for (const auto& g : sets.initial) base.push_back(g + x);
        if (base.empty()) continue;
        const auto sw = strip_word(eta, v, base, -window, window);
        const Int alpha = static_cast<Int>(sw.alphabet.size());
        const Int bound = p + induced_alphabet(eta, sets.initial, v, x) - 2;
        if (increment > bound) continue;
        ++out.checked;
        if (static_cast<Int>(sw.word.size()) < 3 * bound) {
            unsure = true;
            out.details.push_back("x = T^" + to_string(x) + " eta: window shorter than 3 x " + std::to_string(bound));
            continue;
        }
        const auto period = smallest_period(sw.word, bound);
        if (period) {
            out.details.push_back("x = T^" + to_string(x) + " eta: period " + std::to_string(*period) + " <= " +
                                  std::to_string(bound) + " (window alphabet " + std::to_string(alpha) + ")");
        } else if (certain) {
            failed = true;
            out.details.push_back("x = T^" + to_string(x) + " eta: no period <= " + std::to_string(bound) +
                                  " on strip word " + sw.word.str());
        } else {
            unsure = true;
            out.details.push_back("x = T^" + to_string(x) + " eta: no period found on sampled data");
        }
    }
    out.status = failed ? "FAIL" : unsure ? "INCONCLUSIVE" : "PASS";
    if (out.checked == 0 && !failed && !unsure) out.details.push_back("no x meets the increment hypothesis");
    return out;
}

WitnessResult expansive_witness(ComplexityEngine& engine, const OrientedLine& l, Int radius) {
    WitnessResult out;
    out.radius = radius;
    if (radius <= 0) return out;
    std::vector<LatticePoint> grid;
    for (Int x = -radius; x <= radius; ++x)
        for (Int y = -radius; y <= radius; ++y) grid.push_back({x, y});

    std::set<std::pair<std::size_t, std::vector<LatticePoint>>> shapes;
    const std::size_t n = grid.size();
    std::vector<LatticePoint> pick;
    auto add = [&]() {
        const auto hull = ConvexLatticeSet::hull_of(pick);
        if (hull.size() < 2) return;
        const auto c = canonical_shape(hull.points());
        shapes.insert({c.size(), c});
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pick = {grid[i], grid[j]};
            add();
            for (std::size_t k = j + 1; k < n; ++k) {
                pick = {grid[i], grid[j], grid[k]};
                add();
                for (std::size_t q = k + 1; q < n; ++q) {
                    pick = {grid[i], grid[j], grid[k], grid[q]};
                    add();
                }
            }
        }
    }
    for (const auto& [size, shape] : shapes) {
        ++out.candidates;
        const auto ls = supporting_line(shape, l);
        const auto on = points_on(shape, ls);
        if (on.size() != 1) continue;
        const auto s = ConvexLatticeSet::hull_of(shape);
        const auto g = is_generated(engine, s, on.front());
        if (g && *g) {
            out.witness = s;
            out.point = on.front();
            return out;
        }
    }
    return out;
}

}  // namespace nivatlab
