// Command-line front end for nivatlab.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nivatlab/io.hpp"

using namespace nivatlab;

namespace {

struct Options {
    std::string config;
    std::string shape;
    std::string line = "h";
    std::string word;
    std::string max = "8,8";
    std::string csv;
    bool json = false;
    bool strict = false;
    bool two_sided = false;
    bool patterns = false;
    bool assume_nonexpansive = true;
    Int n0 = 0;
    Int p = 1;
    Int q = 1;
    Int bound = 0;
    Int radius = 2;
    Int window = 64;
    Int alphabet_size = 0;
    Int max_sum = 14;
    Int half_max = 12;
    std::string candidate;
};

enum Exit { Ok = 0, Failure = 1, Undecided = 2 };

int undecided(const Options& o) { return o.strict ? Undecided : Ok; }

void emit(const Options& o, const std::string& command, const Json& body, const std::string& text) {
    if (o.json)
        std::cout << report(command, body).dump(2) << "\n";
    else
        std::cout << text;
}

std::string points_text(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return "none";
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + to_string(pts[i]);
    return s;
}

std::string line_text(const OrientedLine& l) {
    return "direction " + to_string(l.direction()) + " offset " + std::to_string(l.offset());
}

std::string inequality_lines(const std::vector<InequalityInstance>& v, const std::string& indent = "  ") {
    std::string s;
    for (const auto& i : v) s += indent + i.str() + "\n";
    return s;
}

int cmd_hull(const Options& o) {
    const auto s = parse_shape(o.shape);
    std::string t = "points (" + std::to_string(s.size()) + "): " + points_text(s.points()) + "\n";
    t += "vertices: " + points_text(s.vertices()) + "\n";
    for (const auto& e : s.edges())
        t += "edge " + to_string(e.from) + " -> " + to_string(e.to) + " lattice points " +
             std::to_string(e.lattice_count) + "\n";
    t += std::string("positive area: ") + (s.has_positive_area() ? "yes" : "no") + "\n";
    emit(o, "hull", to_json(s), t);
    return Ok;
}

int cmd_quasiregular(const Options& o) {
    const auto s = parse_shape(o.shape);
    if (!s.has_positive_area()) {
        const Json body = {{"quasi_regular", false}, {"reason", "null-area hull"}, {"shape", to_json(s)}};
        emit(o, "quasiregular", body, "NOT QUASI-REGULAR (null-area hull)\n");
        return Ok;
    }
    const auto q = is_quasi_regular(s);
    std::string t = q.regular ? "QUASI-REGULAR\n" : "NOT QUASI-REGULAR\n";
    if (q.violating_edge) {
        const auto& e = s.edges()[*q.violating_edge];
        t += "edge " + to_string(e.from) + " -> " + to_string(e.to) + " has no antiparallel partner with " +
             std::to_string(e.lattice_count) + " lattice points\n";
    }
    emit(o, "quasiregular", to_json(q, s), t);
    return Ok;
}

int cmd_complexity(const Options& o) {
    const auto eta = load_configuration(o.config);
    const auto s = parse_shape(o.shape);
    const auto r = complexity(eta, s);
    Json body = to_json(r);
    std::string t = "P(S) = " + std::to_string(r.count) + " " + to_string(r.exactness) + " (" +
                    std::to_string(r.translates_examined) + " translates)\n";
    if (o.patterns) {
        const auto lang = language(eta, s);
        Json grids = Json::array();
        for (const auto& p : lang.patterns) {
            const auto g = pattern_grid(p);
            grids.push_back(g);
            t += "\n" + g;
        }
        body["patterns"] = grids;
    }
    emit(o, "complexity", body, t);
    return r.exactness == Exactness::Exact ? Ok : undecided(o);
}

int cmd_table(const Options& o) {
    const auto eta = load_configuration(o.config);
    const auto comma = o.max.find(',');
    if (comma == std::string::npos) throw SpecError("--max: expected N,K");
    const Int n = std::stoll(o.max.substr(0, comma)), k = std::stoll(o.max.substr(comma + 1));
    if (n < 1 || k < 1) throw SpecError("--max: sides must be positive");
    const auto table = complexity_table(eta, n, k);
    if (!o.csv.empty()) {
        std::ofstream out(o.csv);
        if (!out) throw SpecError("cannot write " + o.csv);
        out << table.csv();
    }
    emit(o, "table", to_json(table), table.csv());
    return Ok;
}

int cmd_mh(const Options& o) {
    const auto w = parse_word(o.word);
    std::optional<Int> a;
    if (o.alphabet_size > 0) a = o.alphabet_size;
    const auto r = mh_check(w, o.n0, o.two_sided ? Sidedness::TwoSided : Sidedness::OneSided, a);
    std::string t = to_string(r.status);
    if (r.period) t += " period " + std::to_string(*r.period);
    t += " (P(" + std::to_string(r.n0) + ") = " + std::to_string(r.complexity) + ", n0' = " +
         std::to_string(r.n0_prime) + ")";
    if (!r.detail.empty()) t += ": " + r.detail;
    emit(o, "mh", to_json(r), t + "\n");
    if (r.status == MhStatus::Violation) return Failure;
    if (r.status == MhStatus::Inconclusive) return undecided(o);
    return Ok;
}

int cmd_finewilf(const Options& o) {
    const auto w = parse_word(o.word);
    const auto r = fine_wilf(w, o.p, o.q);
    std::string t = r.applies ? "combined period " + std::to_string(r.combined_period)
                              : "not forced: length " + std::to_string(w.size()) + " < " +
                                    std::to_string(r.critical_length);
    emit(o, "finewilf", to_json(r), t + "\n");
    return Ok;
}

int cmd_periods(const Options& o) {
    const auto eta = load_configuration(o.config);
    if (!o.shape.empty()) {
        const auto s = parse_shape(o.shape);
        const auto r = null_area_period(eta, s);
        std::string t = r.status;
        if (r.period) t += " period " + to_string(*r.period);
        t += " (P = " + std::to_string(r.complexity) + ", bound " + std::to_string(r.bound) + ")\n";
        emit(o, "periods", to_json(r), t);
        if (r.status == "VIOLATION") return Failure;
        if (r.status == "INCONCLUSIVE") return undecided(o);
        return Ok;
    }
    const auto r = o.bound > 0 ? detect_periods_2d(eta, o.bound) : representation_periods(eta);
    std::string t = std::string(r.certified ? "certified" : "uncertified") + " periods: " + points_text(r.periods);
    if (!r.note.empty()) t += " (" + r.note + ")";
    emit(o, "periods", to_json(r), t + "\n");
    return r.certified ? Ok : undecided(o);
}

std::string generating_text(const GeneratingSetResult& r) {
    std::string t = r.kind + " " + to_string(r.status);
    if (!r.message.empty()) t += ": " + r.message;
    t += "\n  " + r.precondition.str() + "\n";
    if (r.status != SearchStatus::Found) return t;
    t += "  set (" + std::to_string(r.set->size()) + "): " + points_text(r.set->points()) + "\n";
    t += "  " + r.bound_check.str() + "\n";
    for (const auto& c : r.certificates)
        t += "  vertex " + to_string(c.point) + ": P(S) = " + std::to_string(c.with_point) + ", P(S \\ {g}) = " +
             std::to_string(c.without_point) + (c.generated ? " generated" : " NOT generated") + "\n";
    if (r.increment_bound) t += "  " + r.increment_bound->str() + "\n";
    if (r.half_plane_section)
        t += std::string("  S \\ l_S is a half-plane section of U: ") + (*r.half_plane_section ? "yes" : "no") + "\n";
    if (r.minimality)
        t += "  proper convex subsets checked: " + std::to_string(r.minimality->checked) +
             (r.minimality->exhaustive ? " (all)" : " (truncated)") + ", qualifying: " +
             std::to_string(r.minimality->violations) + "\n";
    if (r.mlc_inequality) t += "  subset inequality violations: " + std::to_string(r.mlc_inequality->violations) + "\n";
    if (r.kind == "MLC") {
        int bad = 0;
        for (const auto& i : r.increment_audit) bad += i.holds ? 0 : 1;
        t += "  increment audit: " + std::to_string(r.increment_audit.size()) + " directions, " +
             std::to_string(bad) + " failures\n";
        t += std::string("  positive area: ") + (r.positive_area ? "yes" : "no") + "\n";
    }
    if (r.three_on_support) t += "  " + r.three_on_support->str() + "\n";
    return t;
}

int cmd_generating(const Options& o, bool directional) {
    const auto eta = load_configuration(o.config);
    ComplexityEngine engine(eta);
    const auto u = parse_shape(o.shape);
    const auto r = directional ? find_directional_generating_set(engine, u, parse_line(o.line))
                               : find_generating_set(engine, u);
    emit(o, "generating", to_json(r), generating_text(r));
    return r.status == SearchStatus::Refused ? undecided(o) : Ok;
}

int cmd_mlc(const Options& o) {
    const auto eta = load_configuration(o.config);
    ComplexityEngine engine(eta);
    MlcOptions opts;
    if (!o.candidate.empty()) opts.nonexpansive_candidate = parse_line(o.candidate);
    const auto r = find_mlc_set(engine, parse_shape(o.shape), opts);
    emit(o, "mlc", to_json(r), generating_text(r));
    return r.status == SearchStatus::Refused ? undecided(o) : Ok;
}

int cmd_balanced(const Options& o) {
    const auto eta = load_configuration(o.config);
    ComplexityEngine engine(eta);
    BalancedOptions opts;
    opts.assume_nonexpansive = o.assume_nonexpansive;
    opts.witness_radius = o.radius;
    const auto c = construct_balanced_set(engine, parse_shape(o.shape), parse_line(o.line), opts);
    std::string t = c.status;
    if (!c.failed_step.empty()) t += " at step: " + c.failed_step;
    t += "\n  " + c.hypothesis.str() + "\n";
    if (c.status != "HYPOTHESIS_FAILS") {
        t += "  centre (" + to_string(c.centre_x) + ", " + to_string(c.centre_y) + "), cut level " +
             std::to_string(c.cut_level) + "\n";
        t += inequality_lines(c.assertions);
        if (c.s) t += "  S (" + std::to_string(c.s->size()) + "): " + points_text(c.s->points()) + "\n";
        t += "  p = " + std::to_string(c.p) + "\n";
        t += std::string("  condition (i): ") + (c.condition_i_holds ? "holds" : "fails") +
             ", chord re-check: " + (c.chord_recheck_holds ? "holds" : "fails") + "\n";
        if (c.status == "DEGENERATE")
            t += "  condition (ii): undefined, S has null area\n";
        else
            t += "  condition (ii): " + std::string(c.condition_ii_holds ? "holds" : "fails") + " over " +
                 std::to_string(c.m_size) + " empirical classes\n";
        if (c.phi) t += "  Phi = " + std::to_string(c.phi->value) + " (" + c.phi->which_case + ")\n";
        t += std::string("  assume nonexpansive: ") + (c.assume_nonexpansive ? "yes" : "no") + "\n";
        if (!c.note.empty()) t += "  note: " + c.note + "\n";
        t += "  scope: " + c.scope + "\n";
    } else if (!c.note.empty()) {
        t += "  note: " + c.note + "\n";
    }
    emit(o, "balanced", to_json(c), t);
    return c.status == "CONSTRUCTION_ERROR" ? Failure : Ok;
}

int cmd_phi(const Options& o) {
    const auto eta = load_configuration(o.config);
    ComplexityEngine engine(eta);
    const auto r = phi(engine, parse_shape(o.shape), parse_line(o.line), o.p);
    std::string t = "Phi = " + std::to_string(r.value) + " (" + r.which_case + ", " + std::to_string(r.m_classes) +
                    " empirical classes)\n  " + r.halved_bound.str() + "\n  scope: " + r.scope + "\n";
    emit(o, "phi", to_json(r), t);
    return Ok;
}

int cmd_striplemma(const Options& o) {
    const auto eta = load_configuration(o.config);
    ComplexityEngine engine(eta);
    const auto r = verify_strip_lemma(engine, parse_shape(o.shape), parse_line(o.line), o.p, o.window);
    std::string t = r.status + (r.vacuous ? " (vacuous)" : "") + "\n";
    for (const auto& d : r.details) t += "  " + d + "\n";
    t += "  scope: " + r.scope + "\n";
    emit(o, "striplemma", to_json(r), t);
    if (r.status == "FAIL") return Failure;
    if (r.status == "INCONCLUSIVE") return undecided(o);
    return Ok;
}

int cmd_witness(const Options& o) {
    const auto eta = load_configuration(o.config);
    ComplexityEngine engine(eta);
    const auto r = expansive_witness(engine, parse_line(o.line), o.radius);
    std::string t;
    if (r.witness)
        t = "WITNESS " + points_text(r.witness->points()) + " generated point " + to_string(r.point) + "\n";
    else
        t = "NONE within radius " + std::to_string(r.radius) + " (" + std::to_string(r.candidates) +
            " candidates; no claim of nonexpansiveness)\n";
    emit(o, "witness", to_json(r), t);
    return Ok;
}

int cmd_nivat(const Options& o) {
    const auto eta = load_configuration(o.config);
    const auto r = nivat_check(eta, parse_shape(o.shape));
    std::string t = to_string(r.verdict) + ": " + r.reason + "\n";
    t += "  P(S) = " + std::to_string(r.complexity.count) + " " + to_string(r.complexity.exactness) +
         ", bound |S|/2 + |A| - 1 = " + to_string(r.bound) + "\n";
    t += std::string("  quasi-regular: ") + (r.quasi_regular ? "yes" : "no") + "\n";
    t += std::string("  periods (") + (r.periods.certified ? "certified" : "uncertified") +
         "): " + points_text(r.periods.periods) + "\n";
    emit(o, "nivat", to_json(r), t);
    switch (r.verdict) {
        case Verdict::Consistent:
        case Verdict::Vacuous: return Ok;
        case Verdict::Inconclusive: return undecided(o);
        case Verdict::Violation: return Failure;
    }
    return Failure;
}

int cmd_example_suite(const Options& o) {
    const auto s = example_suite(o.max_sum, o.half_max);
    std::string t = std::string(s.passed() ? "PASS" : "FAIL") + ": " + std::to_string(s.closed_form.size()) +
                    " closed-form rows, " + std::to_string(s.half_area.size()) + " half-area rows\n";
    for (const auto& m : s.mismatches) t += "  mismatch " + m + "\n";
    emit(o, "example-suite", to_json(s), t);
    return s.passed() ? Ok : Failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern complexity and periodicity toolkit for two-dimensional configurations"};
    app.require_subcommand(1);
    Options o;

    auto add = [&](const std::string& name, const std::string& help) {
        auto* sc = app.add_subcommand(name, help);
        sc->add_flag("--json", o.json, "emit a JSON report");
        sc->add_flag("--strict", o.strict, "exit 2 on inconclusive results");
        return sc;
    };
    auto config = [&](CLI::App* sc) { sc->add_option("--config", o.config, "configuration spec file")->required(); };
    auto shape = [&](CLI::App* sc, bool required = true) {
        auto* opt = sc->add_option("--shape", o.shape, "rect:N,K | points:x,y;... | file:<path>");
        if (required) opt->required();
    };
    auto line = [&](CLI::App* sc) { sc->add_option("--line", o.line, "dx,dy[@offset] or h, v, d")->capture_default_str(); };

    auto* hull = add("hull", "lattice hull, vertices and edges of a shape");
    shape(hull);
    auto* qr = add("quasiregular", "quasi-regularity test");
    shape(qr);
    auto* cx = add("complexity", "pattern count P(S)");
    config(cx);
    shape(cx);
    cx->add_flag("--patterns", o.patterns, "print every pattern as a text grid");
    auto* table = add("table", "P(R_{n,k}) for all n, k up to --max");
    config(table);
    table->add_option("--max", o.max, "N,K")->capture_default_str();
    table->add_option("--csv", o.csv, "write the table as CSV");
    auto* mh = add("mh", "alphabetical Morse-Hedlund check");
    mh->add_option("--word", o.word, "letters or file:<path>")->required();
    mh->add_option("--n0", o.n0, "factor length")->required();
    mh->add_flag("--two-sided", o.two_sided, "treat the word as a window of a two-sided sequence");
    mh->add_option("--alphabet-size", o.alphabet_size, "alphabet size (default: letters in the word)");
    auto* fw = add("finewilf", "Fine-Wilf periodicity lemma");
    fw->add_option("--word", o.word, "letters or file:<path>")->required();
    fw->add_option("--p", o.p, "first period")->required();
    fw->add_option("--q", o.q, "second period")->required();
    auto* per = add("periods", "periods of a configuration, or forced by a null-area shape");
    config(per);
    shape(per, false);
    per->add_option("--bound", o.bound, "search all periods with coordinates up to this bound");
    auto* gen = add("generating", "generating set search (directional with --line)");
    config(gen);
    shape(gen);
    auto* gen_line = gen->add_option("--line", o.line, "dx,dy[@offset] or h, v, d");
    auto* mlc = add("mlc", "minimal lower complexity generating set");
    config(mlc);
    shape(mlc);
    mlc->add_option("--candidate", o.candidate, "nonexpansive candidate direction for the three-point check");
    auto* bal = add("balanced", "balanced set construction");
    config(bal);
    shape(bal);
    line(bal);
    bal->add_option("--radius", o.radius, "expansiveness witness search radius")->capture_default_str();
    bal->add_flag("!--no-assume-nonexpansive", o.assume_nonexpansive, "do not assume l is nonexpansive");
    auto* ph = add("phi", "Phi_p(l, T)");
    config(ph);
    shape(ph);
    line(ph);
    ph->add_option("--p", o.p, "p")->required();
    auto* sl = add("striplemma", "strip periodicity check");
    config(sl);
    shape(sl);
    line(sl);
    sl->add_option("--p", o.p, "p")->required();
    sl->add_option("--window", o.window, "strip word covers t in [-window, window]")->capture_default_str();
    auto* wit = add("witness", "one-sided expansiveness witness search");
    config(wit);
    line(wit);
    wit->add_option("--radius", o.radius, "search box [-r, r]^2")->capture_default_str();
    auto* nv = add("nivat", "check the complexity hypothesis and periodicity on a shape");
    config(nv);
    shape(nv);
    auto* ex = add("example-suite", "closed forms of the diagonal family");
    ex->add_option("--max-sum", o.max_sum, "largest n + k")->capture_default_str();
    ex->add_option("--half-max", o.half_max, "largest side for P > nk/2")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Failure;
    }

    try {
        if (*hull) return cmd_hull(o);
        if (*qr) return cmd_quasiregular(o);
        if (*cx) return cmd_complexity(o);
        if (*table) return cmd_table(o);
        if (*mh) return cmd_mh(o);
        if (*fw) return cmd_finewilf(o);
        if (*per) return cmd_periods(o);
        if (*gen) return cmd_generating(o, gen_line->count() > 0);
        if (*mlc) return cmd_mlc(o);
        if (*bal) return cmd_balanced(o);
        if (*ph) return cmd_phi(o);
        if (*sl) return cmd_striplemma(o);
        if (*wit) return cmd_witness(o);
        if (*nv) return cmd_nivat(o);
        if (*ex) return cmd_example_suite(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Failure;
    }
    return Failure;
}
