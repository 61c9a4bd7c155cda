#include "nivatlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace nivatlab {

namespace {

using nlohmann::json;

class Source {
public:
    Source(std::string_view text, std::string name) : text_(text), name_(std::move(name)) {}

    int line_at(std::size_t byte) const {
        byte = std::min(byte, text_.size());
        return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
    }

    // Line of the first occurrence of "key", 0 when absent.
    int line_of(const std::string& key) const {
        const auto leaf = key.substr(0, key.find('['));
        const auto pos = text_.find("\"" + leaf.substr(leaf.rfind('.') + 1) + "\"");
        return pos == std::string_view::npos ? 0 : line_at(pos);
    }

    [[noreturn]] void fail(const std::string& field, const std::string& msg) const {
        std::string where = name_;
        if (const int line = line_of(field)) where += ":" + std::to_string(line);
        throw SpecError(where + ": field '" + field + "': " + msg);
    }

    [[noreturn]] void fail_at(int line, const std::string& msg) const {
        throw SpecError(name_ + ":" + std::to_string(line) + ": " + msg);
    }

private:
    std::string_view text_;
    std::string name_;
};

char letter(const Source& src, const json& v, const std::string& field) {
    if (!v.is_string() || v.get<std::string>().size() != 1) src.fail(field, "expected a one-character string");
    return v.get<std::string>()[0];
}

Int integer(const Source& src, const json& v, const std::string& field) {
    if (!v.is_number_integer()) src.fail(field, "expected an integer");
    return v.get<Int>();
}

Vec pair(const Source& src, const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2) src.fail(field, "expected [x, y]");
    return {integer(src, v[0], field + "[0]"), integer(src, v[1], field + "[1]")};
}

const json& require(const Source& src, const json& root, const std::string& key) {
    if (!root.contains(key)) src.fail(key, "missing");
    return root.at(key);
}

std::vector<std::string> string_rows(const Source& src, const json& v, const std::string& field) {
    if (!v.is_array() || v.empty()) src.fail(field, "expected a nonempty array of strings");
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) src.fail(field + "[" + std::to_string(i) + "]", "expected a string");
        rows.push_back(v[i].get<std::string>());
    }
    return rows;
}

std::vector<std::string> grid_lines(std::string_view text) {
    std::vector<std::string> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) rows.push_back(line);
    }
    return rows;
}

Alphabet alphabet_of(const Source& src, const json& v) {
    std::string letters;
    if (v.is_string()) {
        letters = v.get<std::string>();
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) letters += letter(src, v[i], "alphabet[" + std::to_string(i) + "]");
    } else {
        src.fail("alphabet", "expected an array of one-character strings");
    }
    try {
        return Alphabet(letters);
    } catch (const std::exception& e) {
        src.fail("alphabet", e.what());
    }
}

// Runs a factory and reports its complaints against `field`.
template <class F>
Configuration build(const Source& src, const std::string& field, F f) {
    try {
        return f();
    } catch (const SpecError&) {
        throw;
    } catch (const std::exception& e) {
        src.fail(field, e.what());
    }
}

Configuration from_json(const Source& src, const json& root, const std::string& base_dir) {
    if (!root.is_object()) src.fail_at(1, "expected a JSON object");
    const auto alphabet = alphabet_of(src, require(src, root, "alphabet"));
    const auto& type_v = require(src, root, "type");
    if (!type_v.is_string()) src.fail("type", "expected a string");
    const auto type = type_v.get<std::string>();

    if (type == "diagonal_family") {
        const char black = root.contains("black") ? letter(src, root["black"], "black") : alphabet.letters()[0];
        const char white = root.contains("white") ? letter(src, root["white"], "white") : alphabet.letters()[1];
        if (alphabet.size() != 2 || !alphabet.contains(black) || !alphabet.contains(white) || black == white)
            src.fail("alphabet", "the diagonal family uses exactly the two letters black and white");
        return build(src, "black", [&] { return Configuration::diagonal_family(black, white); });
    }
    if (type == "doubly_periodic") {
        if (root.contains("cells")) {
            const auto& basis = require(src, root, "basis");
            if (!basis.is_array() || basis.size() != 2) src.fail("basis", "expected two vectors");
            const Vec b1 = pair(src, basis[0], "basis[0]");
            const Vec b2 = pair(src, basis[1], "basis[1]");
            const auto& cells = root["cells"];
            if (!cells.is_array()) src.fail("cells", "expected an array of [x, y, letter]");
            std::vector<std::pair<LatticePoint, char>> list;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                const auto f = "cells[" + std::to_string(i) + "]";
                if (!cells[i].is_array() || cells[i].size() != 3) src.fail(f, "expected [x, y, letter]");
                list.push_back({{integer(src, cells[i][0], f), integer(src, cells[i][1], f)},
                                letter(src, cells[i][2], f)});
            }
            return build(src, "cells", [&] { return Configuration::doubly_periodic(alphabet, b1, b2, list); });
        }
        const auto rows = string_rows(src, require(src, root, "rows"), "rows");
        if (root.contains("basis")) {
            const auto& basis = root["basis"];
            if (!basis.is_array() || basis.size() != 2) src.fail("basis", "expected two vectors");
            const Vec b1 = pair(src, basis[0], "basis[0]");
            const Vec b2 = pair(src, basis[1], "basis[1]");
            return build(src, "rows", [&] { return Configuration::doubly_periodic_tile(alphabet, b1, b2, rows); });
        }
        return build(src, "rows", [&] { return Configuration::doubly_periodic_tile(alphabet, rows); });
    }
    if (type == "finite_defect") {
        const char bg = letter(src, require(src, root, "background"), "background");
        const auto& defects = require(src, root, "defects");
        if (!defects.is_array()) src.fail("defects", "expected an array of [x, y, letter]");
        std::map<LatticePoint, char> map;
        for (std::size_t i = 0; i < defects.size(); ++i) {
            const auto f = "defects[" + std::to_string(i) + "]";
            const auto& d = defects[i];
            LatticePoint g;
            char c = 0;
            if (d.is_array() && d.size() == 3) {
                g = {integer(src, d[0], f), integer(src, d[1], f)};
                c = letter(src, d[2], f);
            } else if (d.is_object()) {
                g = {integer(src, require(src, d, "x"), f + ".x"), integer(src, require(src, d, "y"), f + ".y")};
                c = letter(src, require(src, d, "letter"), f + ".letter");
            } else {
                src.fail(f, "expected [x, y, letter]");
            }
            if (!map.emplace(g, c).second) src.fail(f, "duplicate defect at " + to_string(g));
        }
        return build(src, "defects", [&] { return Configuration::finite_defect(alphabet, bg, map); });
    }
    if (type == "window") {
        const LatticePoint origin = root.contains("origin") ? pair(src, root["origin"], "origin") : LatticePoint{};
        std::vector<std::string> rows;
        if (root.contains("grid_file")) {
            const auto& gf = root["grid_file"];
            if (!gf.is_string()) src.fail("grid_file", "expected a path");
            std::filesystem::path p(gf.get<std::string>());
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            std::string text;
            try {
                text = read_file(p.string());
            } catch (const std::exception& e) {
                src.fail("grid_file", e.what());
            }
            rows = grid_lines(text);
        } else {
            rows = string_rows(src, require(src, root, "rows"), "rows");
        }
        return build(src, root.contains("grid_file") ? "grid_file" : "rows",
                     [&] { return Configuration::window(alphabet, origin, rows); });
    }
    src.fail("type", "unknown type '" + type + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

Int parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw SpecError(what + ": '" + s + "' is not an integer");
    }
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
    if (used != s.size()) throw SpecError(what + ": '" + s + "' is not an integer");
    return static_cast<Int>(v);
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Configuration parse_configuration(std::string_view text, const std::string& source, const std::string& base_dir) {
    const Source src(text, source);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) src.fail_at(1, "empty configuration");
    if (text[first] != '{') {
        const auto rows = grid_lines(text);
        std::string letters;
        for (const auto& r : rows)
            for (char c : r)
                if (letters.find(c) == std::string::npos) letters += c;
        std::sort(letters.begin(), letters.end());
        try {
            return Configuration::window(Alphabet(letters), {0, 0}, rows);
        } catch (const std::exception& e) {
            src.fail_at(1, std::string("grid: ") + e.what());
        }
    }
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        src.fail_at(src.line_at(e.byte == 0 ? 0 : e.byte - 1), std::string("syntax error: ") + e.what());
    }
    return from_json(src, root, base_dir);
}

Configuration load_configuration(const std::string& path) {
    const auto text = read_file(path);
    const auto dir = std::filesystem::path(path).parent_path().string();
    return parse_configuration(text, path, dir.empty() ? "." : dir);
}

ConvexLatticeSet parse_shape(const std::string& literal) {
    const auto colon = literal.find(':');
    if (colon == std::string::npos) throw SpecError("shape '" + literal + "': expected rect:, points: or file:");
    const auto kind = literal.substr(0, colon);
    const auto body = literal.substr(colon + 1);
    std::vector<LatticePoint> pts;
    if (kind == "rect") {
        const auto parts = split(body, ',');
        if (parts.size() != 2) throw SpecError("shape '" + literal + "': expected rect:N,K");
        const Int n = parse_int(parts[0], "shape width"), k = parse_int(parts[1], "shape height");
        if (n < 1 || k < 1) throw SpecError("shape '" + literal + "': sides must be positive");
        return ConvexLatticeSet::rectangle(n, k);
    }
    if (kind == "points") {
        for (const auto& item : split(body, ';')) {
            if (item.find_first_not_of(" ") == std::string::npos) continue;
            const auto xy = split(item, ',');
            if (xy.size() != 2) throw SpecError("shape '" + literal + "': point '" + item + "' is not x,y");
            pts.push_back({parse_int(xy[0], "point x"), parse_int(xy[1], "point y")});
        }
    } else if (kind == "file") {
        const auto text = read_file(body);
        std::istringstream in(text);
        std::string line;
        int n = 0;
        while (std::getline(in, line)) {
            ++n;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream ls(line);
            Int x = 0, y = 0;
            std::string extra;
            if (!(ls >> x >> y) || (ls >> extra))
                throw SpecError(body + ":" + std::to_string(n) + ": expected 'x y'");
            pts.push_back({x, y});
        }
    } else {
        throw SpecError("shape '" + literal + "': unknown kind '" + kind + "'");
    }
    if (pts.empty()) throw SpecError("shape '" + literal + "': no points");
    return ConvexLatticeSet::hull_of(pts);
}

OrientedLine parse_line(const std::string& literal) {
    if (literal == "h") return OrientedLine({1, 0}, 0);
    if (literal == "v") return OrientedLine({0, 1}, 0);
    if (literal == "d") return OrientedLine({1, 1}, 0);
    const auto at = literal.find('@');
    const auto parts = split(literal.substr(0, at), ',');
    if (parts.size() != 2) throw SpecError("line '" + literal + "': expected dx,dy[@offset] or h, v, d");
    const Vec d{parse_int(parts[0], "line dx"), parse_int(parts[1], "line dy")};
    if (d.x == 0 && d.y == 0) throw SpecError("line '" + literal + "': direction must be nonzero");
    const Int offset = at == std::string::npos ? 0 : parse_int(literal.substr(at + 1), "line offset");
    return OrientedLine(d, offset);
}

Word parse_word(const std::string& literal) {
    std::string letters = literal;
    if (literal.rfind("file:", 0) == 0) {
        letters.clear();
        for (char c : read_file(literal.substr(5)))
            if (!std::isspace(static_cast<unsigned char>(c))) letters += c;
    }
    if (letters.empty()) throw SpecError("word is empty");
    return Word::from_string(letters);
}

Json to_json(LatticePoint p) { return Json::array({p.x, p.y}); }

Json to_json(const std::vector<LatticePoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const OrientedLine& l) {
    return {{"direction", to_json(l.direction())}, {"offset", l.offset()}};
}

Json to_json(const ConvexLatticeSet& s) {
    Json edges = Json::array();
    for (const auto& e : s.edges())
        edges.push_back({{"from", to_json(e.from)}, {"to", to_json(e.to)}, {"lattice_count", e.lattice_count}});
    return {{"size", s.size()},
            {"points", to_json(s.points())},
            {"vertices", to_json(s.vertices())},
            {"edges", edges},
            {"positive_area", s.has_positive_area()}};
}

Json to_json(const QuasiRegularity& q, const ConvexLatticeSet& s) {
    Json pairs = Json::array();
    for (const auto& [i, j] : q.pairing) pairs.push_back(Json::array({i, j}));
    Json out = {{"quasi_regular", q.regular}, {"pairing", pairs}, {"shape", to_json(s)}};
    if (q.violating_edge) {
        const auto& e = s.edges()[*q.violating_edge];
        out["violating_edge"] = {{"index", *q.violating_edge},
                                 {"from", to_json(e.from)},
                                 {"to", to_json(e.to)},
                                 {"lattice_count", e.lattice_count}};
    }
    return out;
}

Json to_json(const ComplexityReport& r) {
    return {{"shape", to_json(r.shape)},
            {"count", r.count},
            {"exactness", to_string(r.exactness)},
            {"translates_examined", r.translates_examined}};
}

Json to_json(const ComplexityTable& t) {
    Json rows = Json::array();
    for (const auto& e : t.entries) {
        Int n = 0, k = 0;
        for (const auto& p : e.shape) {
            n = std::max(n, p.x + 1);
            k = std::max(k, p.y + 1);
        }
        rows.push_back({{"n", n}, {"k", k}, {"count", e.count}, {"exactness", to_string(e.exactness)}});
    }
    return {{"n_max", t.n_max}, {"k_max", t.k_max}, {"entries", rows}};
}

Json to_json(const MhResult& r) {
    Json out = {{"status", to_string(r.status)},
                {"n0", r.n0},
                {"n0_prime", r.n0_prime},
                {"alphabet_size", r.alphabet_size},
                {"complexity", r.complexity},
                {"detail", r.detail}};
    out["period"] = r.period ? Json(*r.period) : Json(nullptr);
    return out;
}

Json to_json(const FineWilfResult& r) {
    return {{"applies", r.applies}, {"combined_period", r.combined_period}, {"critical_length", r.critical_length}};
}

Json to_json(const PeriodReport& r) {
    Json periods = Json::array();
    for (const auto& p : r.periods) periods.push_back(to_json(p));
    return {{"periods", periods}, {"certified", r.certified}, {"note", r.note}};
}

Json to_json(const NullAreaReport& r) {
    Json out = {{"status", r.status},
                {"hypothesis_holds", r.hypothesis_holds},
                {"complexity", r.complexity},
                {"exactness", to_string(r.exactness)},
                {"bound", r.bound},
                {"direction", to_json(r.direction)},
                {"row_periods", r.row_periods},
                {"certified", r.certified},
                {"rows_within_bound", r.rows_within_bound},
                {"within_magnitude_bound", r.within_magnitude_bound}};
    out["period"] = r.period ? to_json(*r.period) : Json(nullptr);
    return out;
}

Json to_json(const InequalityInstance& i) {
    return {{"name", i.name},
            {"lhs", i.lhs_text},
            {"lhs_value", to_json(i.lhs)},
            {"rhs", i.rhs_text},
            {"rhs_value", to_json(i.rhs)},
            {"holds", i.holds}};
}

namespace {

Json audit_json(const SubsetAudit& a) {
    Json failures = Json::array();
    for (const auto& f : a.failures) failures.push_back(to_json(f));
    return {{"checked", a.checked}, {"exhaustive", a.exhaustive}, {"violations", a.violations},
            {"failures", failures}};
}

Json witness_json(const XWitness& w) {
    return {{"translate", to_json(w.translate)},
            {"induced_alphabet", w.induced_alphabet},
            {"p_x", w.p_x ? Json(*w.p_x) : Json(nullptr)},
            {"holds", w.holds}};
}

}  // namespace

Json to_json(const GeneratingSetResult& r) {
    Json out = {{"status", to_string(r.status)}, {"kind", r.kind}};
    if (!r.message.empty()) out["message"] = r.message;
    out["precondition"] = to_json(r.precondition);
    if (r.direction) out["direction"] = to_json(*r.direction);
    if (r.status != SearchStatus::Found) return out;
    out["set"] = to_json(*r.set);
    out["complexity"] = r.complexity;
    out["bound_check"] = to_json(r.bound_check);
    Json certs = Json::array();
    for (const auto& c : r.certificates)
        certs.push_back({{"point", to_json(c.point)},
                         {"with_point", c.with_point},
                         {"without_point", c.without_point},
                         {"generated", c.generated}});
    out["certificates"] = certs;
    out["chain_sizes"] = r.chain_sizes;
    out["positive_area"] = r.positive_area;
    if (r.kind == "DIRECTIONAL") {
        out["peel_sizes"] = r.peel_sizes;
        out["peel_index"] = r.peel_index;
        out["increment_bound"] = r.increment_bound ? to_json(*r.increment_bound) : Json(nullptr);
        out["half_plane_section"] = r.half_plane_section ? Json(*r.half_plane_section) : Json(nullptr);
        out["half_plane_boundary"] = r.half_plane_boundary ? to_json(*r.half_plane_boundary) : Json(nullptr);
    }
    if (r.kind == "MLC") {
        out["minimality"] = audit_json(*r.minimality);
        out["mlc_inequality"] = audit_json(*r.mlc_inequality);
        Json audit = Json::array();
        for (const auto& i : r.increment_audit) audit.push_back(to_json(i));
        out["increment_audit"] = audit;
        out["three_on_support"] = r.three_on_support ? to_json(*r.three_on_support) : Json(nullptr);
    }
    return out;
}

Json to_json(const PhiResult& r) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
    return {{"value", r.value},
            {"case", r.which_case},
            {"increment", r.increment},
            {"m_classes", r.m_classes},
            {"balanced_for_all", r.balanced_for_all},
            {"witnesses", ws},
            {"halved_bound", to_json(r.halved_bound)},
            {"scope", r.scope}};
}

Json to_json(const BalancedSetCertificate& c) {
    Json out = {{"status", c.status}};
    if (!c.failed_step.empty()) out["failed_step"] = c.failed_step;
    out["direction"] = to_json(c.direction);
    out["hypothesis"] = to_json(c.hypothesis);
    if (c.status == "HYPOTHESIS_FAILS") {
        if (!c.note.empty()) out["note"] = c.note;
        return out;
    }
    out["centre"] = Json::array({to_json(c.centre_x), to_json(c.centre_y)});
    out["edge_pair"] = Json::array({c.edge_pair.first, c.edge_pair.second});
    out["cut_level"] = c.cut_level;
    out["t"] = c.t ? to_json(*c.t) : Json(nullptr);
    out["set"] = c.s ? to_json(*c.s) : Json(nullptr);
    out["set_positive_area"] = c.s_positive_area;
    Json as = Json::array();
    for (const auto& a : c.assertions) as.push_back(to_json(a));
    out["assertions"] = as;
    out["p"] = c.p;
    out["p_positive"] = c.p_positive;
    Json lines = Json::array();
    for (const auto& lc : c.condition_i) lines.push_back({{"level", lc.level}, {"count", lc.count}});
    out["condition_i"] = {{"lines", lines}, {"holds", c.condition_i_holds}, {"chord_recheck", c.chord_recheck_holds}};
    Json xs = Json::array();
    for (const auto& w : c.condition_ii) xs.push_back(witness_json(w));
    out["condition_ii"] = {{"m_size", c.m_size}, {"witnesses", xs}, {"holds", c.condition_ii_holds}};
    out["phi"] = c.phi ? to_json(*c.phi) : Json(nullptr);
    out["assume_nonexpansive"] = c.assume_nonexpansive;
    out["witness_radius"] = c.witness_radius;
    out["expansive_witness"] = c.expansive_witness ? to_json(*c.expansive_witness) : Json(nullptr);
    out["note"] = c.note;
    out["scope"] = c.scope;
    return out;
}

Json to_json(const StripLemmaReport& r) {
    return {{"status", r.status}, {"vacuous", r.vacuous}, {"generating", r.generating}, {"m_size", r.m_size},
            {"checked", r.checked}, {"details", r.details}, {"scope", r.scope}};
}

Json to_json(const WitnessResult& r) {
    Json out = {{"radius", r.radius}, {"candidates", r.candidates}};
    if (r.witness) {
        out["witness"] = to_json(*r.witness);
        out["point"] = to_json(r.point);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const NivatReport& r) {
    return {{"verdict", to_string(r.verdict)},
            {"reason", r.reason},
            {"shape", to_json(r.shape)},
            {"positive_area", r.positive_area},
            {"quasi_regular", r.quasi_regular},
            {"complexity", to_json(r.complexity)},
            {"bound", to_json(r.bound)},
            {"hypothesis_holds", r.hypothesis_holds},
            {"periods", to_json(r.periods)},
            {"certified_aperiodic", r.certified_aperiodic}};
}

Json to_json(const ExampleSuite& s) {
    auto rows = [](const std::vector<ExampleRow>& v) {
        Json a = Json::array();
        for (const auto& r : v)
            a.push_back({{"n", r.n}, {"k", r.k}, {"count", r.count}, {"expected", r.expected}, {"ok", r.ok}});
        return a;
    };
    return {{"passed", s.passed()},
            {"closed_form", rows(s.closed_form)},
            {"half_area", rows(s.half_area)},
            {"mismatches", s.mismatches}};
}

Json report(const std::string& command, Json body) {
    return {{"schema", 1}, {"command", command}, {"result", std::move(body)}};
}

}  // namespace nivatlab
