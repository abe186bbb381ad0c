#include "positroid/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <sstream>

namespace positroid::io {

namespace {

// Escape per RFC 6901.
std::string pointer_token(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

// Records the starting line of every value. Runs on text that already
// parsed successfully, so it only needs to follow valid JSON.
class LineScanner {
public:
    LineScanner(const std::string& text, std::map<std::string, int>& lines) : s_(text), lines_(lines) {}
    void run() {
        skip();
        value("");
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            if (s_[i_] == '\n') ++line_;
            ++i_;
        }
    }
    std::string string_token() {
        std::string out;
        ++i_;  // opening quote
        while (i_ < s_.size() && s_[i_] != '"') {
            if (s_[i_] == '\\') {
                out += s_[i_ + 1];
                i_ += 2;
                continue;
            }
            out += s_[i_++];
        }
        ++i_;
        return out;
    }
    void value(const std::string& ptr) {
        lines_[ptr] = line_;
        if (i_ >= s_.size()) return;
        char c = s_[i_];
        if (c == '{') {
            ++i_;
            skip();
            if (s_[i_] == '}') {
                ++i_;
                return;
            }
            while (true) {
                skip();
                std::string key = string_token();
                skip();
                ++i_;  // colon
                skip();
                value(ptr + "/" + pointer_token(key));
                skip();
                if (s_[i_++] == '}') return;
            }
        }
        if (c == '[') {
            ++i_;
            skip();
            if (s_[i_] == ']') {
                ++i_;
                return;
            }
            for (int idx = 0;; ++idx) {
                skip();
                value(ptr + "/" + std::to_string(idx));
                skip();
                if (s_[i_++] == ']') return;
            }
        }
        if (c == '"') {
            string_token();
            return;
        }
        while (i_ < s_.size() && !std::strchr(",]} \t\r\n", s_[i_])) ++i_;
    }

    const std::string& s_;
    std::map<std::string, int>& lines_;
    std::size_t i_ = 0;
    int line_ = 1;
};

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw FieldError("", "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw FieldError("", std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_number_integer()) throw FieldError(std::string("/") + key, std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw FieldError(where, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw FieldError(where + "/" + std::to_string(i), "expected an integer");
        out.push_back(j[i].get<int>());
    }
    return out;
}

template <class F>
auto rethrow_inside(const std::string& where, F&& f) {
    try {
        return f();
    } catch (const FieldError& e) {
        throw FieldError(where + e.pointer, e.what());
    } catch (const std::invalid_argument& e) {
        throw FieldError(where, e.what());
    }
}

Color color_from(const Json& j, const std::string& where) {
    if (j == "black") return Color::black;
    if (j == "white") return Color::white;
    throw FieldError(where, "color must be \"black\" or \"white\"");
}

std::string coord_key(Subset s) {
    std::string out;
    for (int e : elements(s)) out += (out.empty() ? "" : ",") + std::to_string(e);
    return out;
}

Subset parse_coord_key(const std::string& key) {
    std::vector<int> xs;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            xs.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad subset key \"" + key + "\"");
        }
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] >= xs[i]) throw std::invalid_argument("subset key \"" + key + "\" is not strictly increasing");
    return subset_of(xs);
}

Json coords_json(int n, int k, const std::vector<Rational>& values) {
    Json c = Json::object();
    auto subs = k_subsets(n, k);
    for (std::size_t i = 0; i < subs.size(); ++i) c[coord_key(subs[i])] = to_json(values[i]);
    return c;
}

std::vector<Rational> coords_from_json(const Json& j, int k, int n) {
    const auto& c = field(j, "coords");
    if (!c.is_object()) throw FieldError("/coords", "\"coords\" must be an object");
    std::vector<Rational> out(k_subsets(n, k).size(), Rational(0));
    std::vector<bool> seen(out.size(), false);
    for (const auto& [key, v] : c.items()) {
        const std::string where = "/coords/" + pointer_token(key);
        rethrow_inside(where, [&] {
            Subset s = parse_coord_key(key);
            if (size_of(s) != k)
                throw std::invalid_argument("subset " + key + " is not a " + std::to_string(k) + "-subset of [" + std::to_string(n) + "]");
            for (int e : elements(s))
                if (e < 1 || e > n) throw std::invalid_argument("subset " + key + " leaves [" + std::to_string(n) + "]");
            std::size_t r = lex_rank(s, n);
            if (seen[r]) throw std::invalid_argument("duplicate subset " + key);
            seen[r] = true;
            out[r] = rational_from_json(v);
            return 0;
        });
    }
    return out;
}

}  // namespace

InputError::InputError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

int Document::line_of(const std::string& pointer) const {
    std::string p = pointer;
    while (true) {
        auto it = lines.find(p);
        if (it != lines.end()) return it->second;
        auto cut = p.rfind('/');
        if (cut == std::string::npos) return 1;
        p = p.substr(0, cut);
    }
}

void Document::fail(const std::string& pointer, const std::string& message) const {
    throw InputError(source, line_of(pointer), message);
}

Document parse_document(const std::string& text, const std::string& source) {
    Document d;
    d.source = source;
    try {
        d.value = Json::parse(text);
    } catch (const Json::parse_error& e) {
        int line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) line += text[i] == '\n';
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw InputError(source, line, pos == std::string::npos ? msg : msg.substr(pos));
    }
    LineScanner(text, d.lines).run();
    return d;
}

Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, 0, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path);
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    auto slash = t.find('/');
    auto integer = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos || s.find_first_of("+-", 1) != std::string::npos)
            throw std::invalid_argument("not a rational number: \"" + text + "\"");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return Rational(integer(t));
    Integer den = integer(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    Rational r(integer(t.substr(0, slash)), den);
    r.canonicalize();
    return r;
}

Json to_json(const Rational& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

Json to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        out.push_back(row);
    }
    return out;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw FieldError("", "matrix must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const std::string where = "/" + std::to_string(r);
        if (!j[r].is_array()) throw FieldError(where, "matrix row must be an array");
        if (r > 0 && j[r].size() != j[0].size()) throw FieldError(where, "rows have different lengths");
        std::vector<Rational> row;
        for (std::size_t c = 0; c < j[r].size(); ++c)
            row.push_back(rethrow_inside(where + "/" + std::to_string(c), [&] { return rational_from_json(j[r][c]); }));
        rows.push_back(row);
    }
    if (rows.empty()) return RatMatrix(0, 0);
    return RatMatrix::from_rows(rows);
}

Json to_json(const PluckerVector& p) {
    Json out;
    out["k"] = p.k();
    out["n"] = p.n();
    out["coords"] = coords_json(p.n(), p.k(), p.coords());
    return out;
}

PluckerVector plucker_from_json(const Json& j) {
    int k = int_field(j, "k"), n = int_field(j, "n");
    if (n < 1 || n > 30 || k < 0 || k > n) throw FieldError("/k", "need 0 <= k <= n <= 30");
    return PluckerVector(k, n, coords_from_json(j, k, n));
}

Json to_json(const DecoratedPermutation& p) {
    Json out;
    out["images"] = p.images();
    out["loops"] = p.loops();
    out["coloops"] = p.coloops();
    out["text"] = p.to_string();
    return out;
}

DecoratedPermutation permutation_from_json(const Json& j) {
    auto images = int_list(field(j, "images"), "/images");
    std::vector<int> coloops;
    if (j.contains("coloops")) coloops = int_list(j["coloops"], "/coloops");
    std::vector<int> loops;
    if (j.contains("loops")) loops = int_list(j["loops"], "/loops");
    auto p = rethrow_inside("/images", [&] { return DecoratedPermutation(images, coloops); });
    if (p.loops() != loops && j.contains("loops")) throw FieldError("/loops", "loops do not match the fixed points of images");
    if (p.coloops() != coloops) throw FieldError("/coloops", "coloops must be fixed points");
    return p;
}

Json to_json(const PlabicGraph& g) {
    Json out;
    out["n"] = g.n();
    Json verts = Json::array();
    auto nb = g.neighbor_lists();
    for (int v = 0; v < g.vertex_count(); ++v) {
        Json x;
        x["id"] = v;
        if (g.is_boundary(v)) x["boundary"] = v + 1;
        else x["color"] = to_string(g.color(v));
        x["neighbors"] = nb[v];
        verts.push_back(x);
    }
    out["vertices"] = verts;
    return out;
}

PlabicGraph graph_from_json(const Json& j) {
    int n = int_field(j, "n");
    const auto& verts = field(j, "vertices");
    if (!verts.is_array()) throw FieldError("/vertices", "\"vertices\" must be an array");
    if (static_cast<int>(verts.size()) < n) throw FieldError("/vertices", "fewer vertices than boundary vertices");
    std::vector<Color> colors;
    std::vector<std::vector<int>> nb;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        const std::string where = "/vertices/" + std::to_string(v);
        rethrow_inside(where, [&] {
            const auto& x = verts[v];
            if (int_field(x, "id") != static_cast<int>(v)) throw FieldError("/id", "vertex ids must be 0, 1, 2, … in order");
            if (static_cast<int>(v) < n) {
                if (int_field(x, "boundary") != static_cast<int>(v) + 1)
                    throw FieldError("/boundary", "boundary vertex " + std::to_string(v) + " must carry label " + std::to_string(v + 1));
                colors.push_back(Color::white);
            } else {
                colors.push_back(color_from(field(x, "color"), "/color"));
            }
            auto list = int_list(field(x, "neighbors"), "/neighbors");
            for (std::size_t i = 0; i < list.size(); ++i)
                if (list[i] < 0 || list[i] >= static_cast<int>(verts.size()))
                    throw FieldError("/neighbors/" + std::to_string(i), "neighbor " + std::to_string(list[i]) + " does not exist");
            nb.push_back(list);
            return 0;
        });
    }
    return rethrow_inside("/vertices", [&] { return PlabicGraph::from_neighbor_lists(n, colors, nb); });
}

Json to_json(const BicoloredTriangulation& t) {
    Json out;
    out["n"] = t.n();
    Json tris = Json::array();
    for (const auto& tr : t.triangles()) tris.push_back({{"vertices", {tr.a, tr.b, tr.c}}, {"color", to_string(tr.color)}});
    out["triangles"] = tris;
    return out;
}

BicoloredTriangulation triangulation_from_json(const Json& j) {
    int n = int_field(j, "n");
    const auto& tris = field(j, "triangles");
    if (!tris.is_array()) throw FieldError("/triangles", "\"triangles\" must be an array");
    std::vector<Triangle> out;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const std::string where = "/triangles/" + std::to_string(i);
        rethrow_inside(where, [&] {
            auto v = int_list(field(tris[i], "vertices"), "/vertices");
            if (v.size() != 3) throw FieldError("/vertices", "a triangle has 3 vertices");
            for (int x : v)
                if (x < 1 || x > n) throw FieldError("/vertices", "vertex " + std::to_string(x) + " is not in [" + std::to_string(n) + "]");
            std::sort(v.begin(), v.end());
            out.push_back({v[0], v[1], v[2], color_from(field(tris[i], "color"), "/color")});
            return 0;
        });
    }
    return rethrow_inside("/triangles", [&] { return BicoloredTriangulation(n, out); });
}

Json to_json(const BicoloredSubdivision& s) {
    Json out;
    out["n"] = s.n;
    out["black"] = s.black;
    out["white"] = s.white;
    return out;
}

BicoloredSubdivision subdivision_from_json(const Json& j) {
    int n = int_field(j, "n");
    const auto& black = field(j, "black");
    if (!black.is_array()) throw FieldError("/black", "\"black\" must be an array of polygons");
    std::vector<std::vector<int>> polys;
    for (std::size_t i = 0; i < black.size(); ++i) polys.push_back(int_list(black[i], "/black/" + std::to_string(i)));
    auto s = rethrow_inside("/black", [&] { return subdivision_from_black_polygons(n, polys); });
    if (j.contains("white")) {
        BicoloredSubdivision given{n, polys, {}};
        const auto& white = j["white"];
        if (!white.is_array()) throw FieldError("/white", "\"white\" must be an array of polygons");
        for (std::size_t i = 0; i < white.size(); ++i) given.white.push_back(int_list(white[i], "/white/" + std::to_string(i)));
        auto canon = [](BicoloredSubdivision x) {
            std::sort(x.black.begin(), x.black.end());
            std::sort(x.white.begin(), x.white.end());
            return x;
        };
        if (canon(given) != canon(s)) throw FieldError("/white", "white polygons do not complement the black region");
    }
    return s;
}

Json to_json(const HeightVector& h) {
    Json out;
    out["k"] = h.k;
    out["n"] = h.n;
    out["coords"] = coords_json(h.n, h.k, h.heights);
    return out;
}

HeightVector heights_from_json(const Json& j) {
    int k = int_field(j, "k"), n = int_field(j, "n");
    if (n < 1 || n > 30 || k < 0 || k > n) throw FieldError("/k", "need 0 <= k <= n <= 30");
    const auto& c = field(j, "coords");
    if (c.is_array()) {
        std::vector<Rational> hs;
        for (std::size_t i = 0; i < c.size(); ++i)
            hs.push_back(rethrow_inside("/coords/" + std::to_string(i), [&] { return rational_from_json(c[i]); }));
        if (hs.size() != k_subsets(n, k).size())
            throw FieldError("/coords", "expected " + std::to_string(k_subsets(n, k).size()) + " heights in lexicographic order");
        return HeightVector(k, n, hs);
    }
    auto hs = coords_from_json(j, k, n);
    if (c.size() != hs.size()) throw FieldError("/coords", "every " + std::to_string(k) + "-subset needs a height");
    return HeightVector(k, n, hs);
}

Json to_json(const Subdivision& d) {
    Json out;
    out["k"] = d.k;
    out["n"] = d.n;
    Json cells = Json::array();
    for (const auto& c : d.cells) {
        Json verts = Json::array();
        for (Subset s : c.vertices) verts.push_back(subset_word(s));
        Json w = Json::array();
        for (const auto& x : c.witness) w.push_back(to_json(x));
        cells.push_back({{"vertices", verts}, {"witness", w}});
    }
    out["cells"] = cells;
    return out;
}

Json to_json(const Matroid& m) {
    Json bases = Json::array();
    for (Subset b : m.sorted_bases()) bases.push_back(subset_word(b));
    return {{"k", m.k}, {"n", m.n}, {"bases", bases}};
}

Json to_json(const Tiling& t) {
    Json out;
    out["space"] = "hypersimplex";
    out["k"] = t.k_plus_1 - 1;
    out["n"] = t.n;
    Json tiles = Json::array();
    for (const auto& tile : t.tiles)
        tiles.push_back({{"perm", to_json(tile.perm)}, {"subdivision", to_json(tile.subdivision)}});
    out["tiles"] = tiles;
    return out;
}

Json to_json(const TilingReport& r) {
    Json out;
    out["valid"] = r.valid;
    out["cover_count"] = r.cover_count;
    out["violations"] = r.violations;
    return out;
}

Json to_json(const AmpTilingReport& r) {
    Json out;
    out["valid"] = r.valid;
    out["k"] = r.k;
    out["n"] = r.n;
    Json perms = Json::array();
    for (const auto& p : r.dual_perms) perms.push_back(p.to_string());
    out["dual_perms"] = perms;
    out["hypersimplex"] = to_json(r.hypersimplex);
    out["samples"] = r.samples;
    out["boundary_samples"] = r.boundary_samples;
    out["uncovered"] = r.uncovered;
    out["overlapping"] = r.overlapping;
    out["violations"] = r.violations;
    Json wit = Json::array();
    for (const auto& tw : r.witnesses) wit.push_back(coords_json(r.n, 2, tw));
    out["witness_twistors"] = wit;
    return out;
}

Json to_json(const Seed& s) {
    Json out;
    out["k"] = s.k;
    out["n"] = s.n;
    Json verts = Json::array();
    for (const auto& v : s.vertices) {
        Json x{{"arc", to_string(v.arc)}, {"frozen", v.frozen}};
        x["variable"] = to_string(*v.label);
        verts.push_back(x);
    }
    out["vertices"] = verts;
    Json arrows = Json::array();
    for (auto [i, j] : s.arrows()) arrows.push_back({i, j});
    out["arrows"] = arrows;
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '(' || c == ')' || c == '[' || c == ']'; }), t.end());
    std::vector<Rational> out;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
    return out;
}

RatMatrix parse_z_spec(const std::string& spec, int n, int p) {
    if (spec.rfind("vandermonde:", 0) == 0) {
        auto nodes = parse_rational_list(spec.substr(12));
        if (static_cast<int>(nodes.size()) != n)
            throw std::invalid_argument("--z: expected " + std::to_string(n) + " nodes, got " + std::to_string(nodes.size()));
        return make_positive_Z(n, p, nodes);
    }
    if (spec.rfind("file:", 0) == 0) {
        auto doc = read_document(spec.substr(5));
        RatMatrix z;
        try {
            z = matrix_from_json(doc.value.is_object() && doc.value.contains("z") ? doc.value["z"] : doc.value);
        } catch (const FieldError& e) {
            doc.fail((doc.value.is_object() ? "/z" : "") + e.pointer, e.what());
        }
        if (static_cast<int>(z.rows()) != n || static_cast<int>(z.cols()) != p)
            doc.fail("", "Z must be " + std::to_string(n) + "x" + std::to_string(p));
        if (!all_maximal_minors_positive(z)) doc.fail("", "Z has a non-positive maximal minor");
        return z;
    }
    throw std::invalid_argument("--z must be vandermonde:<nodes> or file:<path>");
}

}  // namespace positroid::io
