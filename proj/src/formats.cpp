#include "wangpoly/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace wangpoly {

namespace {

std::string at_line(int lineno, const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; }

template <typename F>
void for_each_line(std::string_view text, F&& f) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        f(lineno, kw, ls);
    }
}

coord_t read_coord(std::istringstream& ls, int lineno) {
    std::string tok;
    if (!(ls >> tok)) throw FormatError(at_line(lineno, "missing coordinate"));
    coord_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw FormatError(at_line(lineno, "bad integer '" + tok + "'"));
    return v;
}

void expect_end(std::istringstream& ls, int lineno) {
    std::string extra;
    if (ls >> extra) throw FormatError(at_line(lineno, "unexpected '" + extra + "'"));
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw FormatError("write failed for " + path.string());
}

NamedTile parse_polyomino(std::string_view text) {
    std::optional<std::string> name;
    std::vector<Cell> cells;
    for_each_line(text, [&](int lineno, const std::string& kw, std::istringstream& ls) {
        if (kw == "tile") {
            if (name) throw FormatError(at_line(lineno, "one tile per file"));
            std::string n;
            if (!(ls >> n)) throw FormatError(at_line(lineno, "tile needs a name"));
            expect_end(ls, lineno);
            name = n;
        } else if (kw == "cell") {
            if (!name) throw FormatError(at_line(lineno, "'cell' before 'tile'"));
            const coord_t x = read_coord(ls, lineno);
            const coord_t y = read_coord(ls, lineno);
            expect_end(ls, lineno);
            cells.push_back({x, y});
        } else {
            throw FormatError(at_line(lineno, "unknown directive '" + kw + "'"));
        }
    });
    if (!name) throw FormatError("missing 'tile <name>' line");
    const std::size_t listed = cells.size();
    CellSet cs(std::move(cells));
    if (cs.size() != listed) throw FormatError("tile '" + *name + "' lists a cell twice");
    if (cs.empty()) throw FormatError("tile '" + *name + "' has no cells");
    return {*name, std::move(cs)};
}

std::string format_polyomino(const std::string& name, const CellSet& cells) {
    std::string out = "tile " + name + "\n";
    out.reserve(out.size() + cells.size() * 16);
    for (Cell c : cells) {
        out += "cell ";
        out += std::to_string(c.x);
        out += ' ';
        out += std::to_string(c.y);
        out += '\n';
    }
    return out;
}

TileMap load_tile_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw FormatError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".poly") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    TileMap tiles;
    for (const auto& f : files) {
        NamedTile t;
        try {
            t = parse_polyomino(read_file(f));
        } catch (const FormatError& e) {
            throw FormatError(f.string() + ": " + e.what());
        }
        if (!tiles.emplace(t.name, std::move(t.cells)).second) throw FormatError("duplicate tile name '" + t.name + "'");
    }
    if (tiles.empty()) throw FormatError("no .poly files in " + dir.string());
    return tiles;
}

PlacementFile parse_placements(std::string_view text) {
    PlacementFile file;
    for_each_line(text, [&](int lineno, const std::string& kw, std::istringstream& ls) {
        if (kw == "region") {
            if (file.region) throw FormatError(at_line(lineno, "region given twice"));
            std::string lit;
            if (!(ls >> lit)) throw FormatError(at_line(lineno, "region needs a literal"));
            expect_end(ls, lineno);
            try {
                file.region = parse_region(lit);
            } catch (const GeometryError& e) {
                throw FormatError(at_line(lineno, e.what()));
            }
        } else if (kw == "place") {
            std::string name;
            if (!(ls >> name)) throw FormatError(at_line(lineno, "place needs a tile name"));
            const coord_t dx = read_coord(ls, lineno);
            const coord_t dy = read_coord(ls, lineno);
            expect_end(ls, lineno);
            file.placements.push_back({name, {dx, dy}});
        } else {
            throw FormatError(at_line(lineno, "unknown directive '" + kw + "'"));
        }
    });
    return file;
}

std::string format_placements(const PlacementFile& file) {
    std::string out;
    if (file.region) out += "region " + format_region(*file.region) + "\n";
    for (const auto& p : file.placements)
        out += "place " + p.tile + " " + std::to_string(p.offset.dx) + " " + std::to_string(p.offset.dy) + "\n";
    return out;
}

std::string format_params(const ReductionParams& p) {
    std::ostringstream o;
    o << "n " << p.n << "\nm " << p.m << "\nt " << p.t << "\nSEG " << p.seg << "\nGAP " << p.gap << "\nLOC " << p.loc
      << "\nENC " << p.enc << "\nPER " << p.per << "\n";
    return o.str();
}

ReductionParams parse_params(std::string_view text) {
    std::map<std::string, std::int64_t> kv;
    for_each_line(text, [&](int lineno, const std::string& key, std::istringstream& ls) {
        kv[key] = read_coord(ls, lineno);
        expect_end(ls, lineno);
    });
    auto get = [&](const char* k) {
        auto it = kv.find(k);
        if (it == kv.end()) throw FormatError(std::string("params: missing ") + k);
        return it->second;
    };
    ReductionParams p = params(static_cast<int>(get("n")), static_cast<int>(get("m")));
    if (p.t != get("t") || p.seg != get("SEG") || p.gap != get("GAP") || p.loc != get("LOC") || p.enc != get("ENC") ||
        p.per != get("PER"))
        throw FormatError("params: values disagree with n and m");
    return p;
}

std::string format_slots(const ReductionOutput& out) {
    std::string s;
    for (const auto& e : out.slots)
        s += "slot " + std::to_string(e.slot) + " tile " + out.ws.tiles[static_cast<std::size_t>(e.tile)].name + " copy " +
             std::to_string(e.copy) + "\n";
    return s;
}

}  // namespace wangpoly
