#include "nivatlab/complexity.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace nivatlab {

namespace {

using KeySet = std::unordered_set<std::string>;

// Below this many letter lookups threads cost more than they save.
constexpr std::size_t kParallelThreshold = 1 << 15;

KeySet distinct_keys(const Configuration& eta, const std::vector<LatticePoint>& sorted,
                     const std::vector<LatticePoint>& translates) {
    const std::size_t work = translates.size() * std::max<std::size_t>(1, sorted.size());
    unsigned threads = counting_threads();
    if (work < kParallelThreshold) threads = 1;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, translates.size()));
    if (threads <= 1) {
        KeySet keys;
        for (const auto& u : translates) keys.insert(pattern_key(eta, sorted, u));
        return keys;
    }

    std::vector<KeySet> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (translates.size() + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
        pool.emplace_back([&, i] {
            try {
                const std::size_t lo = i * chunk;
                const std::size_t hi = std::min(translates.size(), lo + chunk);
                for (std::size_t j = lo; j < hi; ++j) partial[i].insert(pattern_key(eta, sorted, translates[j]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    KeySet merged = std::move(partial[0]);
    for (unsigned i = 1; i < threads; ++i) merged.insert(partial[i].begin(), partial[i].end());
    return merged;
}

std::vector<LatticePoint> sorted_copy(std::span<const LatticePoint> s) {
    std::vector<LatticePoint> out(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Multipliers t >= a covering every pattern of S + base + t*v, t >= a.
DirectionalScan forward_scan(const Configuration& eta, const std::vector<LatticePoint>& s, Vec v,
                             LatticePoint base, Int a) {
    DirectionalScan scan;
    std::visit(
        [&](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, DoublyPeriodic>) {
                const Int m = b.period_along(v);
                for (Int t = a; t < a + m; ++t) scan.ts.push_back(t);
            } else if constexpr (std::is_same_v<T, FiniteDefect>) {
                std::set<Int> hits;
                for (const auto& [d, c] : b.defects) {
                    for (const auto& g : s) {
                        const Vec w = d - base - g;
                        if (cross(w, v) == 0) hits.insert(dot(w, v) / dot(v, v));
                    }
                }
                Int blank = a;
                while (hits.count(blank)) ++blank;
                scan.ts.push_back(blank);
                for (Int t : hits)
                    if (t >= a) scan.ts.push_back(t);
                std::sort(scan.ts.begin(), scan.ts.end());
            } else if constexpr (std::is_same_v<T, DiagonalFamily>) {
                Int step = v.x - v.y;
                if (step == 0) {
                    scan.ts.push_back(a);
                    return;
                }
                Int lo = s.front().x - s.front().y, hi = lo;
                for (const auto& g : s) {
                    lo = std::min(lo, g.x - g.y);
                    hi = std::max(hi, g.x - g.y);
                }
                Int shift = base.x - base.y;
                // The offset set is symmetric, so mirror a decreasing sweep.
                if (step < 0) {
                    std::tie(lo, hi) = std::make_pair(-hi, -lo);
                    shift = -shift;
                    step = -step;
                }
                const Int width = hi - lo + 1;
                Int c = std::max<Int>(6, width + step);
                while (DiagonalFamily::sigma(c) <= hi + shift + a * step) ++c;
                // sigma(c) mod step repeats with period 2*step in c.
                const Int last = DiagonalFamily::sigma(c + 2 * step);
                const Int t_end = floor_div(last - lo - shift, step) + 1;
                for (Int t = a; t <= t_end; ++t) scan.ts.push_back(t);
            } else {
                scan.exactness = Exactness::LowerBound;
                Int t_lo = a, t_hi = std::numeric_limits<Int>::max();
                auto clamp = [&](Int vmin, Int vmax, Int comp, Int lo_edge, Int hi_edge) {
                    // lo_edge <= vmin + t*comp and vmax + t*comp <= hi_edge
                    if (comp == 0) {
                        if (vmin < lo_edge || vmax > hi_edge) t_hi = t_lo - 1;
                    } else if (comp > 0) {
                        t_lo = std::max(t_lo, ceil_div(lo_edge - vmin, comp));
                        t_hi = std::min(t_hi, floor_div(hi_edge - vmax, comp));
                    } else {
                        t_lo = std::max(t_lo, ceil_div(hi_edge - vmax, comp));
                        t_hi = std::min(t_hi, floor_div(lo_edge - vmin, comp));
                    }
                };
                Int min_x = s.front().x, max_x = min_x, min_y = s.front().y, max_y = min_y;
                for (const auto& g : s) {
                    min_x = std::min(min_x, g.x);
                    max_x = std::max(max_x, g.x);
                    min_y = std::min(min_y, g.y);
                    max_y = std::max(max_y, g.y);
                }
                clamp(min_x + base.x, max_x + base.x, v.x, b.origin.x, b.origin.x + b.width - 1);
                clamp(min_y + base.y, max_y + base.y, v.y, b.origin.y, b.origin.y + b.height - 1);
                for (Int t = t_lo; t <= t_hi; ++t) scan.ts.push_back(t);
            }
        },
        eta.body());
    return scan;
}

}  // namespace

unsigned counting_threads() {
    if (const char* env = std::getenv("NIVATLAB_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string pattern_key(const Configuration& eta, std::span<const LatticePoint> sorted, LatticePoint u) {
    std::string key;
    key.reserve(sorted.size());
    for (const auto& g : sorted) key += eta.letter_at(g + u);
    return key;
}

ComplexityReport complexity(const Configuration& eta, std::span<const LatticePoint> s) {
    ComplexityReport rep;
    rep.shape = sorted_copy(s);
    if (rep.shape.empty()) {
        rep.count = 1;
        return rep;
    }
    const auto dom = enumeration_domain(eta, rep.shape);
    rep.exactness = dom.exactness;
    rep.translates_examined = static_cast<Int>(dom.translates.size());
    rep.count = static_cast<Int>(distinct_keys(eta, rep.shape, dom.translates).size());
    return rep;
}

ComplexityReport ComplexityEngine::complexity(std::span<const LatticePoint> s) {
    auto key = canonical_shape(s);
    key.erase(std::unique(key.begin(), key.end()), key.end());
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) {
            ComplexityReport rep = it->second;
            rep.shape = sorted_copy(s);
            return rep;
        }
    }
    ComplexityReport rep = nivatlab::complexity(eta_, s);
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), rep);
    return rep;
}

std::size_t ComplexityEngine::cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

std::string ComplexityTable::csv() const {
    std::ostringstream out;
    out << "n,k,count,exact\n";
    for (Int n = 1; n <= n_max; ++n)
        for (Int k = 1; k <= k_max; ++k) {
            const auto& r = at(n, k);
            out << n << ',' << k << ',' << r.count << ',' << (r.exactness == Exactness::Exact ? "true" : "false")
                << '\n';
        }
    return out.str();
}

ComplexityTable complexity_table(const Configuration& eta, Int n_max, Int k_max) {
    if (n_max < 1 || k_max < 1) throw DomainError("table bounds must be positive");
    ComplexityTable table{n_max, k_max, {}};
    for (Int n = 1; n <= n_max; ++n)
        for (Int k = 1; k <= k_max; ++k) table.entries.push_back(complexity(eta, ConvexLatticeSet::rectangle(n, k)));
    return table;
}

Language language(const Configuration& eta, std::span<const LatticePoint> s) {
    const auto sorted = sorted_copy(s);
    const auto shape = canonical_shape(sorted);
    Language lang;
    if (sorted.empty()) {
        lang.patterns.push_back(Pattern{});
        return lang;
    }
    const auto dom = enumeration_domain(eta, sorted);
    lang.exactness = dom.exactness;
    for (auto& key : distinct_keys(eta, sorted, dom.translates)) lang.patterns.push_back({shape, key});
    std::sort(lang.patterns.begin(), lang.patterns.end());
    return lang;
}

DirectionalScan directional_scan(const Configuration& eta, std::span<const LatticePoint> s, Vec v,
                                 LatticePoint base, DirectionalRange range, Int a) {
    const Vec w = primitive(v);
    const auto sorted = sorted_copy(s);
    if (sorted.empty()) return {{a}, Exactness::Exact};
    auto negate_into = [](DirectionalScan& out, const DirectionalScan& back) {
        for (Int t : back.ts) out.ts.push_back(-t);
        out.exactness = combine(out.exactness, back.exactness);
    };
    DirectionalScan out;
    switch (range) {
        case DirectionalRange::Forward:
            out = forward_scan(eta, sorted, w, base, a);
            break;
        case DirectionalRange::Backward:
            negate_into(out, forward_scan(eta, sorted, -w, base, a));
            break;
        case DirectionalRange::All:
            out = forward_scan(eta, sorted, w, base, 0);
            negate_into(out, forward_scan(eta, sorted, -w, base, 1));
            break;
    }
    std::sort(out.ts.begin(), out.ts.end());
    out.ts.erase(std::unique(out.ts.begin(), out.ts.end()), out.ts.end());
    return out;
}

Language directional_language(const Configuration& eta, std::span<const LatticePoint> s, Vec v,
                              LatticePoint base, DirectionalRange range, Int a) {
    const auto sorted = sorted_copy(s);
    const auto shape = canonical_shape(sorted);
    const auto scan = directional_scan(eta, sorted, v, base, range, a);
    const Vec w = primitive(v);
    std::set<std::string> keys;
    for (Int t : scan.ts) keys.insert(pattern_key(eta, sorted, base + t * w));
    Language lang;
    lang.exactness = scan.exactness;
    for (const auto& k : keys) lang.patterns.push_back({shape, k});
    return lang;
}

Int ExtensionTable::n(const std::string& base_letters) const {
    const auto it = extensions.find(base_letters);
    return it == extensions.end() ? 0 : static_cast<Int>(it->second.size());
}

Int ExtensionTable::excess() const {
    Int sum = 0;
    for (const auto& [g, ext] : extensions) sum += static_cast<Int>(ext.size()) - 1;
    return sum;
}

ExtensionTable extension_counts(const Configuration& eta, const ConvexLatticeSet& u, const OrientedLine& l) {
    ExtensionTable table{supporting_line(u, l), {}, {}, 0, 0, Exactness::Exact, false};
    const auto& pts = u.points();
    std::vector<std::size_t> base_index;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!table.support.contains(pts[i])) {
            base_index.push_back(i);
            table.base_shape.push_back(pts[i]);
        }
    if (table.base_shape.empty()) throw DomainError("U minus its supporting row is empty");

    const auto dom = enumeration_domain(eta, u);
    table.exactness = dom.exactness;
    std::map<std::string, std::set<std::string>> groups;
    for (const auto& key : distinct_keys(eta, pts, dom.translates)) {
        std::string base;
        for (std::size_t i : base_index) base += key[i];
        groups[base].insert(key);
    }
    for (auto& [g, ext] : groups) table.extensions[g] = {ext.begin(), ext.end()};

    const auto full = complexity(eta, u);
    const auto part = complexity(eta, table.base_shape);
    table.full_count = full.count;
    table.base_count = part.count;
    table.exactness = combine(table.exactness, combine(full.exactness, part.exactness));
    table.identity_holds = table.excess() == table.full_count - table.base_count;
    return table;
}

}  // namespace nivatlab
