#include "positroid/amplituhedron.hpp"
#include "positroid/cluster.hpp"
#include "positroid/hypersimplex.hpp"
#include "positroid/io.hpp"
#include "positroid/plabic.hpp"
#include "positroid/trop.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

using namespace positroid;
using io::Json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

// Problem with a command-line flag.
struct FlagError : std::invalid_argument {
    FlagError(const std::string& flag, const std::string& what) : std::invalid_argument(flag + ": " + what) {}
};

struct Config {
    std::uint64_t seed = 0;
    std::optional<int> k, n, m;
    std::string z_spec;
    std::string format = "json";
};

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw FlagError(flag, "required for this command");
    return *v;
}

RatMatrix z_for(const Config& cfg, int n, int p) {
    std::string spec = cfg.z_spec;
    if (spec.empty()) {
        spec = "vandermonde:";
        for (int i = 0; i < n; ++i) spec += (i ? "," : "") + std::to_string(i);
    }
    try {
        return io::parse_z_spec(spec, n, p);
    } catch (const io::InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw FlagError("--z", e.what());
    }
}

DecoratedPermutation perm_flag(const std::string& flag, const std::string& text) {
    try {
        return DecoratedPermutation::parse(text);
    } catch (const std::invalid_argument& e) {
        throw FlagError(flag, e.what());
    }
}

Json header(const Config& cfg, const char* command) {
    Json out;
    out["command"] = command;
    out["seed"] = cfg.seed;
    return out;
}

void emit(const Config& cfg, const Json& j, const std::string& text) {
    if (cfg.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << "seed " << cfg.seed << "\n" << text;
}

Json twistor_table(const RatMatrix& y, const RatMatrix& z) {
    Json t = Json::object();
    const int m = static_cast<int>(z.cols() - y.rows());
    for (Subset s : k_subsets(static_cast<int>(z.rows()), m)) {
        std::string key;
        for (int e : elements(s)) key += (key.empty() ? "" : ",") + std::to_string(e);
        t[key] = io::to_json(twistor(y, z, elements(s)));
    }
    return t;
}

// ---- cell ----

struct CellArgs {
    std::string perm, graph;
    int sample = 0;
    bool matchings = false;
};

int cmd_cell(const Config& cfg, const CellArgs& a) {
    if (a.perm.empty() == a.graph.empty()) throw FlagError("cell", "give exactly one of --perm and --graph");
    if (a.sample < 0) throw FlagError("--sample", "must be nonnegative");
    PlabicGraph g;
    DecoratedPermutation p;
    int dim = 0;
    if (!a.perm.empty()) {
        p = perm_flag("--perm", a.perm);
        g = graph_of_decorated_permutation(p).graph;
        dim = dimension_of_permutation(p);
    } else {
        auto doc = io::read_document(a.graph);
        g = doc.decode("", [](const Json& j) { return io::graph_from_json(j); });
        p = trip_permutation(g);
        dim = cell_dimension(g, 3, cfg.seed);
    }
    if (cfg.n && *cfg.n != p.n()) throw FlagError("--n", "the cell has n = " + std::to_string(p.n()));
    if (int pk = type_of(p).first; cfg.k && *cfg.k != pk) throw FlagError("--k", "the cell has k = " + std::to_string(pk));
    if (cfg.format == "dot" || cfg.format == "tikz") {
        std::cout << (cfg.format == "dot" ? "// seed " : "% seed ") << cfg.seed << "\n";
        std::cout << (cfg.format == "dot" ? to_dot(g) : to_tikz(g));
        return exit_ok;
    }
    auto positroid = positroid_of_graph(g);
    Json out = header(cfg, "cell");
    out["perm"] = io::to_json(p);
    out["k"] = positroid.k;
    out["n"] = positroid.n;
    out["dimension"] = dim;
    out["positroid"] = io::to_json(positroid);
    std::string text = "perm " + p.to_string() + "\nk " + std::to_string(positroid.k) + " n " + std::to_string(positroid.n) +
                       "\ndimension " + std::to_string(dim) + "\npositroid " + positroid.to_string() + "\n";
    if (a.sample > 0) {
        Json samples = Json::array(), moments = Json::array();
        for (const auto& s : sample_cell(g, a.sample, cfg.seed)) {
            samples.push_back(io::to_json(s));
            Json mu = Json::array();
            for (const auto& x : moment_map(s)) mu.push_back(io::to_json(x));
            moments.push_back(mu);
            text += "sample";
            for (const auto& x : s.coords()) text += " " + x.get_str();
            text += "\n";
        }
        out["samples"] = samples;
        out["moment_map"] = moments;
    }
    if (a.matchings) {
        auto ms = matchings(g);
        Json list = Json::array();
        for (const auto& m : ms) list.push_back({{"edges", m.edges}, {"boundary", subset_word(m.boundary)}});
        out["matchings"] = {{"count", ms.size()}, {"list", list}};
        text += "matchings " + std::to_string(ms.size()) + "\n";
        for (const auto& m : ms) text += "  boundary " + subset_word(m.boundary) + "\n";
    }
    emit(cfg, out, text);
    return exit_ok;
}

// ---- tilings ----

struct TilingArgs {
    std::string space = "hypersimplex";
    std::string verify;
    bool t_dual = false;
    int samples = 200;
};

// One tiling in either space, stored on the hypersimplex side: tile i is
// Γ_π for π = perms[i]. When π = π(G(T)) for a bicolored subdivision T,
// the amplituhedron tile is Z_{Ĝ(T)} with permutation t_dual(π).
struct TileSet {
    int k = 0, n = 0;
    std::vector<DecoratedPermutation> perms;
    std::vector<std::optional<BicoloredSubdivision>> subs;

    void add(const DecoratedPermutation& p) {
        perms.push_back(p);
        const Tile* t = p.n() == n ? find_tile(k + 1, n, p) : nullptr;
        subs.push_back(t ? std::optional(t->subdivision) : std::nullopt);
    }
};

Json tiles_json(const TileSet& t, const std::string& space) {
    Json out;
    out["space"] = space;
    out["k"] = t.k;
    out["n"] = t.n;
    Json tiles = Json::array();
    for (std::size_t i = 0; i < t.perms.size(); ++i) {
        Json x;
        if (space == "hypersimplex") x["perm"] = io::to_json(t.perms[i]);
        else x["perm"] = io::to_json(t_dual(t.perms[i]));
        if (t.subs[i]) {
            if (space == "amplituhedron") x["triangulation"] = io::to_json(representative(*t.subs[i]));
            x["subdivision"] = io::to_json(*t.subs[i]);
        }
        tiles.push_back(x);
    }
    out["tiles"] = tiles;
    return out;
}

std::string tiles_text(const TileSet& t, const std::string& space) {
    std::string out;
    for (std::size_t i = 0; i < t.perms.size(); ++i) {
        out += "  " + (space == "hypersimplex" ? t.perms[i] : t_dual(t.perms[i])).to_string();
        out += t.subs[i] ? "  " + t.subs[i]->to_string() + "\n" : "  (not a positroid tile)\n";
    }
    return out;
}

// Exact-cover check on Δ_{k+1,n}; the amplituhedron side adds the sampled
// audit of the open tiles.
Json verify_tileset(const Config& cfg, const TileSet& t, const std::string& space, int samples, bool& valid) {
    std::vector<Matroid> ms;
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < t.perms.size(); ++i) {
        auto m = positroid_of_permutation(t.perms[i]);
        if (m.k != t.k + 1) bad.push_back("tile " + std::to_string(i + 1) + " " + t.perms[i].to_string() + " has the wrong type");
        else ms.push_back(m);
    }
    const bool all_tiles = std::all_of(t.subs.begin(), t.subs.end(), [](const auto& s) { return s.has_value(); });
    Json out;
    if (space == "hypersimplex" || !all_tiles || t.perms.empty()) {
        auto rep = verify_tiling(ms, t.k + 1, t.n);
        rep.violations.insert(rep.violations.begin(), bad.begin(), bad.end());
        rep.valid = rep.valid && bad.empty() && !t.perms.empty();
        if (t.perms.empty()) rep.violations.push_back("empty tiling");
        valid = rep.valid;
        out = io::to_json(rep);
        if (space == "amplituhedron") out["sampled_audit"] = "skipped: some tile is not a positroid tile";
        return out;
    }
    std::vector<BicoloredTriangulation> tris;
    for (const auto& sub : t.subs) tris.push_back(representative(*sub));
    auto z = z_for(cfg, t.n, t.k + 2);
    auto rep = verify_amp_tiling_m2(tris, z, samples, cfg.seed);
    valid = rep.valid;
    out = io::to_json(rep);
    out["z"] = io::to_json(z);
    return out;
}

TileSet read_tileset(const io::Document& doc, std::string& space) {
    const auto& v = doc.value;
    if (!v.is_object()) doc.fail("", "expected a tiling object");
    if (!v.contains("space") || !v["space"].is_string()) doc.fail("", "missing \"space\"");
    space = v["space"].get<std::string>();
    if (space != "hypersimplex" && space != "amplituhedron")
        doc.fail("/space", "space must be \"hypersimplex\" or \"amplituhedron\"");
    TileSet t;
    auto integer = [](const char* name) {
        return [name](const Json& j) {
            if (!j.is_number_integer()) throw std::invalid_argument(std::string("\"") + name + "\" must be an integer");
            return j.get<int>();
        };
    };
    t.k = doc.decode("/k", integer("k"));
    t.n = doc.decode("/n", integer("n"));
    if (t.n < 2 || t.n > 12 || t.k < 0 || t.k > t.n - 2) doc.fail("/n", "need 0 <= k <= n-2 and 2 <= n <= 12");
    if (!v.contains("tiles") || !v["tiles"].is_array()) doc.fail("", "missing \"tiles\" array");
    for (std::size_t i = 0; i < v["tiles"].size(); ++i) {
        const std::string ptr = "/tiles/" + std::to_string(i);
        const auto& x = v["tiles"][i];
        auto check_type = [&](const BicoloredSubdivision& sub, const std::string& where) {
            if (sub.n != t.n || sub.k() != t.k)
                doc.fail(where, "tile is not of type (" + std::to_string(t.k) + "," + std::to_string(t.n) + ")");
            return trip_permutation(dual_graph_of_triangulation(representative(sub)));
        };
        if (!x.is_object()) doc.fail(ptr, "tile must be an object");
        if (x.contains("subdivision")) {
            auto sub = doc.decode(ptr + "/subdivision", [](const Json& j) { return io::subdivision_from_json(j); });
            t.add(check_type(sub, ptr + "/subdivision"));
        } else if (x.contains("triangulation")) {
            auto tri = doc.decode(ptr + "/triangulation", [](const Json& j) { return io::triangulation_from_json(j); });
            t.add(check_type(equivalence_class(tri), ptr + "/triangulation"));
        } else if (x.contains("perm")) {
            auto p = doc.decode(ptr + "/perm", [](const Json& j) {
                return j.is_string() ? DecoratedPermutation::parse(j.get<std::string>()) : io::permutation_from_json(j);
            });
            if (p.n() != t.n) doc.fail(ptr + "/perm", "permutation has size " + std::to_string(p.n()) + ", expected " + std::to_string(t.n));
            if (space == "amplituhedron") {
                try {
                    p = t_dual_inverse(p);
                } catch (const std::invalid_argument& e) {
                    doc.fail(ptr + "/perm", e.what());
                }
            }
            t.add(p);
        } else {
            doc.fail(ptr, "tile needs \"subdivision\", \"triangulation\" or \"perm\"");
        }
    }
    return t;
}

int cmd_tilings(const Config& cfg, const TilingArgs& a) {
    if (a.space != "hypersimplex" && a.space != "amplituhedron") throw FlagError("--space", "must be hypersimplex or amplituhedron");
    if (!a.verify.empty()) {
        auto doc = io::read_document(a.verify);
        std::string space;
        auto t = read_tileset(doc, space);
        if (a.t_dual) space = space == "hypersimplex" ? "amplituhedron" : "hypersimplex";
        bool valid = false;
        Json out = header(cfg, "tilings");
        out["tiling"] = tiles_json(t, space);
        out["report"] = verify_tileset(cfg, t, space, a.samples, valid);
        std::string text = std::string(valid ? "valid" : "invalid") + " tiling of " +
                           (space == "hypersimplex" ? "the hypersimplex" : "the amplituhedron") + "\n" + tiles_text(t, space);
        for (const auto& v : out["report"]["violations"]) text += "violation: " + v.get<std::string>() + "\n";
        emit(cfg, out, text);
        return valid ? exit_ok : exit_verification;
    }
    const int k = require(cfg.k, "--k"), n = require(cfg.n, "--n");
    if (k < 0 || n < 2 || k > n - 2 || n > 9) throw FlagError("--k", "need 0 <= k <= n-2 and n <= 9");
    std::string space = a.space;
    if (a.t_dual) space = space == "hypersimplex" ? "amplituhedron" : "hypersimplex";
    auto tilings = enumerate_tilings(k + 1, n);
    Json out = header(cfg, "tilings");
    out["space"] = space;
    out["k"] = k;
    out["n"] = n;
    out["count"] = tilings.size();
    Json list = Json::array();
    std::string text = std::to_string(tilings.size()) + " tilings of " +
                       (space == "hypersimplex" ? "the hypersimplex" : "the amplituhedron") + "\n";
    bool all_valid = true;
    for (std::size_t i = 0; i < tilings.size(); ++i) {
        TileSet t{k, n, {}, {}};
        for (const auto& tile : tilings[i].tiles) t.add(tile.perm);
        Json x = tiles_json(t, space);
        if (space == "amplituhedron") {
            bool valid = false;
            x["report"] = verify_tileset(cfg, t, space, a.samples, valid);
            all_valid = all_valid && valid;
        }
        list.push_back(x);
        text += "tiling " + std::to_string(i + 1) + "\n" + tiles_text(t, space);
    }
    out["tilings"] = list;
    emit(cfg, out, text);
    return all_valid ? exit_ok : exit_verification;
}

// ---- trop ----

struct TropArgs {
    std::string heights_file, values;
};

int cmd_trop(const Config& cfg, const TropArgs& a) {
    if (a.heights_file.empty() == a.values.empty()) throw FlagError("trop", "give exactly one of --heights and --values");
    HeightVector h;
    if (!a.heights_file.empty()) {
        auto doc = io::read_document(a.heights_file);
        h = doc.decode("", [](const Json& j) { return io::heights_from_json(j); });
    } else {
        const int k = require(cfg.k, "--k"), n = require(cfg.n, "--n");
        if (k < 1 || k >= n || n > 12) throw FlagError("--k", "need 1 <= k < n <= 12");
        std::vector<Rational> vals;
        try {
            vals = io::parse_rational_list(a.values);
        } catch (const std::invalid_argument& e) {
            throw FlagError("--values", e.what());
        }
        if (vals.size() != k_subsets(n, k).size())
            throw FlagError("--values", "expected " + std::to_string(k_subsets(n, k).size()) + " heights, got " + std::to_string(vals.size()));
        h = HeightVector(k, n, vals);
    }
    Json out = header(cfg, "trop");
    out["heights"] = io::to_json(h);
    if (auto v = positivity_violation(h)) {
        out["positive_tropical"] = false;
        out["message"] = "not positive-tropical";
        out["violation"] = v->to_string();
        emit(cfg, out, "not positive-tropical " + v->to_string() + "\n");
        return exit_verification;
    }
    auto d = regular_subdivision(h, cfg.seed);
    out["positive_tropical"] = true;
    out["cell_count"] = d.cells.size();
    out["subdivision"] = io::to_json(d);
    bool positroids = faces_are_positroids(d);
    out["faces_are_positroids"] = positroids;
    out["finest"] = is_finest(d);
    std::string text = "positive-tropical\n" + std::to_string(d.cells.size()) + (d.cells.size() == 1 ? " cell\n" : " cells\n");
    for (const auto& c : d.cells) {
        text += " ";
        for (Subset s : c.vertices) text += " " + subset_word(s);
        text += "\n";
    }
    text += std::string("faces are positroids: ") + (positroids ? "yes" : "no") + "\nfinest: " + (is_finest(d) ? "yes" : "no") + "\n";
    emit(cfg, out, text);
    return positroids ? exit_ok : exit_verification;
}

// ---- amp ----

struct AmpArgs {
    std::string cell, file;
    int count = 10;
    int samples = 200;
};

int cmd_amp_sample(const Config& cfg, const AmpArgs& a) {
    const int k = require(cfg.k, "--k"), n = require(cfg.n, "--n"), m = require(cfg.m, "--m");
    if (k < 0 || m < 0 || k + m > n || n > 12) throw FlagError("--n", "need k + m <= n <= 12");
    if (a.count < 0) throw FlagError("--count", "must be nonnegative");
    DecoratedPermutation p = a.cell.empty() ? top_cell_permutation(k, n) : perm_flag("--cell", a.cell);
    if (p.n() != n) throw FlagError("--cell", "permutation has size " + std::to_string(p.n()) + ", expected " + std::to_string(n));
    if (static_cast<int>(anti_excedances(p).size()) != k)
        throw FlagError("--cell", p.to_string() + " is a cell of Gr_{" + std::to_string(anti_excedances(p).size()) + "," + std::to_string(n) + "}, expected k = " + std::to_string(k));
    auto z = z_for(cfg, n, k + m);
    auto g = a.cell.empty() ? top_cell_graph(k, n) : graph_of_decorated_permutation(p).graph;
    Json out = header(cfg, "amp sample");
    out["k"] = k;
    out["n"] = n;
    out["m"] = m;
    out["cell"] = io::to_json(p);
    out["z"] = io::to_json(z);
    Json list = Json::array();
    std::string text = "cell " + p.to_string() + "\n";
    for (const auto& s : sample_amplituhedron(g, z, a.count, cfg.seed)) {
        Json x;
        x["c"] = io::to_json(s.c);
        x["y"] = io::to_json(s.y);
        x["twistors"] = twistor_table(s.y, z);
        auto stratum = sign_stratum(s.y, z).to_string();
        x["sign_stratum"] = stratum;
        bool general = general_m_boundary_signs(s.y, z);
        x["general_m_conditions"] = general;
        if (m == 1) x["m1_membership"] = m1_membership(s.y, z);
        if (m == 2) x["m2_interior"] = m2_interior_test(s.y, z);
        list.push_back(x);
        text += "sample " + stratum + (general ? " interior-signs" : "") + "\n";
    }
    out["samples"] = list;
    emit(cfg, out, text);
    return exit_ok;
}

int cmd_amp_verify(const Config& cfg, const AmpArgs& a) {
    if (a.file.empty()) throw FlagError("--file", "required");
    auto doc = io::read_document(a.file);
    std::string space;
    auto t = read_tileset(doc, space);
    if (space != "amplituhedron") doc.fail("/space", "amp verify-tiling expects an amplituhedron tiling");
    bool valid = false;
    Json out = header(cfg, "amp verify-tiling");
    out["tiling"] = tiles_json(t, space);
    out["report"] = verify_tileset(cfg, t, space, a.samples, valid);
    std::string text = std::string(valid ? "valid" : "invalid") + " tiling\n" + tiles_text(t, space);
    for (const auto& v : out["report"]["violations"]) text += "violation: " + v.get<std::string>() + "\n";
    emit(cfg, out, text);
    return valid ? exit_ok : exit_verification;
}

// ---- cluster ----

struct ClusterArgs {
    std::string file;
    std::vector<std::string> mutate;
};

int cmd_cluster(const Config& cfg, const ClusterArgs& a) {
    if (a.file.empty()) throw FlagError("--file", "required");
    auto doc = io::read_document(a.file);
    auto t = doc.decode("", [](const Json& j) { return io::triangulation_from_json(j); });
    auto s = build_seed(t);
    for (const auto& arc_text : a.mutate) {
        auto parts = io::parse_rational_list(arc_text);
        if (parts.size() != 2) throw FlagError("--mutate", "expected an arc \"h,j\"");
        int v = s.index_of(make_arc(static_cast<int>(parts[0].get_num().get_si()), static_cast<int>(parts[1].get_num().get_si())));
        if (v < 0) throw FlagError("--mutate", "no seed vertex on arc " + arc_text);
        try {
            s = mutate(s, v);
        } catch (const std::invalid_argument& e) {
            throw FlagError("--mutate", e.what());
        }
    }
    Json out = header(cfg, "cluster");
    out["triangulation"] = io::to_json(t);
    out["seed_quiver"] = io::to_json(s);
    std::string text;
    for (const auto& v : s.vertices) text += to_string(v.arc) + (v.frozen ? " frozen " : " mutable ") + to_string(*v.label) + "\n";
    for (auto [i, j] : s.arrows()) text += to_string(s.vertices[i].arc) + " -> " + to_string(s.vertices[j].arc) + "\n";
    emit(cfg, out, text);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positroids, plabic graphs, hypersimplex and amplituhedron tilings"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--seed", cfg.seed, "Seed for all randomized steps");
    app.add_option("--k", cfg.k, "k");
    app.add_option("--n", cfg.n, "n");
    app.add_option("--m", cfg.m, "m");
    app.add_option("--z", cfg.z_spec, "vandermonde:<nodes> or file:<path>");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "tikz", "text"}));

    CellArgs cell;
    auto* c = app.add_subcommand("cell", "Positroid cell of a decorated permutation or plabic graph");
    c->add_option("--perm", cell.perm, "Decorated permutation, e.g. \"3,1,4,2\" or \"(2,1_,3^)\"");
    c->add_option("--graph", cell.graph, "Plabic graph JSON file");
    c->add_option("--sample", cell.sample, "Number of sample points");
    c->add_flag("--matchings", cell.matchings, "List perfect matchings");

    TilingArgs til;
    auto* t = app.add_subcommand("tilings", "Enumerate or verify tilings");
    t->add_option("--space", til.space, "hypersimplex or amplituhedron");
    t->add_option("--verify", til.verify, "Tiling JSON file to verify");
    t->add_flag("--t-dual", til.t_dual, "Work in the T-dual space");
    t->add_option("--samples", til.samples, "Samples for the amplituhedron audit");

    TropArgs trop;
    auto* tr = app.add_subcommand("trop", "Positivity and regular subdivision of a height vector");
    tr->add_option("--heights", trop.heights_file, "Heights JSON file");
    tr->add_option("--values", trop.values, "Heights in lexicographic order, e.g. \"1,0,0,0,0,0\"");

    AmpArgs amp;
    auto* am = app.add_subcommand("amp", "Amplituhedron sampling and tiling verification");
    am->require_subcommand(1);
    auto* as = am->add_subcommand("sample", "Sample points Z̃(C) of a cell");
    as->add_option("--cell", amp.cell, "Decorated permutation (default: top cell)");
    as->add_option("--count", amp.count, "Number of samples");
    auto* av = am->add_subcommand("verify-tiling", "Verify an m = 2 tiling");
    av->add_option("--file", amp.file, "Tiling JSON file");
    av->add_option("--samples", amp.samples, "Samples for the audit");

    ClusterArgs cl;
    auto* cs = app.add_subcommand("cluster", "Seed of a bicolored triangulation");
    cs->add_option("--file", cl.file, "Triangulation JSON file");
    cs->add_option("--mutate", cl.mutate, "Arc \"h,j\" to mutate at (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }
    try {
        if (c->parsed()) return cmd_cell(cfg, cell);
        if (t->parsed()) return cmd_tilings(cfg, til);
        if (tr->parsed()) return cmd_trop(cfg, trop);
        if (as->parsed()) return cmd_amp_sample(cfg, amp);
        if (av->parsed()) return cmd_amp_verify(cfg, amp);
        if (cs->parsed()) return cmd_cluster(cfg, cl);
    } catch (const io::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_input;
}
