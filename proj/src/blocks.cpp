#include "wangpoly/blocks.hpp"

#include <array>
#include <map>
#include <sstream>

#include "wangpoly/raster.hpp"

namespace wangpoly {

namespace {

// Vertical reach of any feature: far mid bumps extend 12 cells beyond the base.
constexpr coord_t kFeatureLow = -12;
constexpr coord_t kFeatureHigh = kBlockHeight + 12;

struct StampTable {
    std::array<std::array<CellSet, kColumns>, 2> bump;
    std::array<std::array<CellSet, kColumns>, 2> dent;
    std::array<CellSet, 2> handle;
    std::array<CellSet, 2> handle_void;
    std::array<std::array<CellSet, 2>, 2> mid;
    CellSet base;

    StampTable() {
        for (Side side : {Side::north, Side::south}) {
            const auto s = static_cast<std::size_t>(side);
            for (int c = 0; c < kColumns; ++c) {
                if (c == 5 || c == 6) continue;
                bump[s][static_cast<std::size_t>(c)] = plus_bump(side, c);
                dent[s][static_cast<std::size_t>(c)] = plus_dent(side, c);
            }
            handle[s] = handle_bump(side);
            handle_void[s] = handle_dent_void(side);
            mid[s][0] = mid_bump(side, Mid::N);
            mid[s][1] = mid_bump(side, Mid::F);
        }
        base = CellSet::rectangle(0, 0, kBlockWidth, kBlockHeight);
    }
};

const StampTable& stamps() {
    static const StampTable table;
    return table;
}

std::size_t idx(Side s) { return static_cast<std::size_t>(s); }

void add_side_bumps(Raster& r, Side side, const SideLabel& label) {
    const auto& t = stamps();
    r.paint(t.handle[idx(side)]);
    for (Letter l : kLetters)
        if (label.bumps.contains(l))
            r.paint(t.bump[idx(side)][static_cast<std::size_t>(position_column(side, l, Role::bump))]);
    if (label.mid) r.paint(t.mid[idx(side)][static_cast<std::size_t>(*label.mid)]);
}

CellSet side_voids(Side side, const SideLabel& label) {
    const auto& t = stamps();
    CellSet out = t.handle_void[idx(side)];
    for (Letter l : kLetters)
        if (label.dents.contains(l))
            out = out | t.dent[idx(side)][static_cast<std::size_t>(position_column(side, l, Role::dent))];
    return out;
}

void paint_block(Raster& r, const BlockSpec& spec, Vec offset) {
    // Base and bumps first, then carve; bumps never fall inside the base.
    Raster local(Box{0, kFeatureLow, kBlockWidth, kFeatureHigh});
    local.fill(Box{0, 0, kBlockWidth, kBlockHeight});
    if (spec.north) add_side_bumps(local, Side::north, *spec.north);
    if (spec.south) add_side_bumps(local, Side::south, *spec.south);
    if (spec.north) local.erase(side_voids(Side::north, *spec.north));
    if (spec.south) local.erase(side_voids(Side::south, *spec.south));
    r.paint(local.to_cells(), offset);
}

LetterSet parse_letters(std::string_view part) {
    LetterSet out;
    if (part.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        auto comma = part.find(',', pos);
        auto tok = part.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.size() != 1) throw LabelError("bad position letter '" + std::string(tok) + "'");
        Letter l;
        switch (tok[0]) {
            case 'A': l = Letter::A; break;
            case 'C': l = Letter::C; break;
            case 'L': l = Letter::L; break;
            case 'M': l = Letter::M; break;
            case 'R': l = Letter::R; break;
            default: throw LabelError("bad position letter '" + std::string(tok) + "'");
        }
        if (out.contains(l)) throw LabelError("repeated letter '" + std::string(tok) + "'");
        out.insert(l);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string format_letters(LetterSet s) {
    std::string out;
    for (Letter l : kLetters) {
        if (!s.contains(l)) continue;
        if (!out.empty()) out.push_back(',');
        out.push_back(letter_char(l));
    }
    return out;
}

}  // namespace

SideLabel parse_label(std::string_view text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw LabelError("label must be written {bumps|mid|dents}: '" + std::string(text) + "'");
    auto body = text.substr(1, text.size() - 2);
    auto bar1 = body.find('|');
    auto bar2 = bar1 == std::string_view::npos ? bar1 : body.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos || body.find('|', bar2 + 1) != std::string_view::npos)
        throw LabelError("label needs exactly three parts: '" + std::string(text) + "'");
    SideLabel label;
    label.bumps = parse_letters(body.substr(0, bar1));
    auto mid = body.substr(bar1 + 1, bar2 - bar1 - 1);
    if (mid.find(',') != std::string_view::npos) throw LabelError("more than one mid letter: '" + std::string(text) + "'");
    if (mid == "N") label.mid = Mid::N;
    else if (mid == "F") label.mid = Mid::F;
    else if (!mid.empty()) throw LabelError("mid part must be empty, N or F: '" + std::string(text) + "'");
    label.dents = parse_letters(body.substr(bar2 + 1));
    return label;
}

std::string format_label(const SideLabel& label) {
    std::string out = "{" + format_letters(label.bumps) + "|";
    if (label.mid) out.push_back(mid_char(*label.mid));
    out += "|" + format_letters(label.dents) + "}";
    return out;
}

CellSet build_block(const BlockSpec& spec) {
    Raster r(Box{0, kFeatureLow, kBlockWidth, kFeatureHigh});
    paint_block(r, spec, {});
    return r.to_cells();
}

bool stackable(const SideLabel& upper_south, const SideLabel& lower_north) {
    return lower_north.bumps.subset_of(upper_south.dents) && upper_south.bumps.subset_of(lower_north.dents);
}

StackResidual stack_residual(const BlockSpec& upper, const BlockSpec& lower) {
    if (!upper.south || !lower.north) throw std::invalid_argument("stack_residual needs labeled facing sides");
    const CellSet lower_cells = build_block(lower);
    const Vec lift{0, kBlockHeight};
    const CellSet upper_cells = translate(build_block(upper), lift);

    StackResidual out;
    out.overlap = intersects(lower_cells, upper_cells);

    const CellSet voids = side_voids(Side::north, *lower.north) | translate(side_voids(Side::south, *upper.south), lift);
    const CellSet residual = voids - lower_cells - upper_cells;
    const CellSet plus = plus_shape(0, 0);
    for (const CellSet& part : components(residual)) {
        if (auto v = translation_between(plus, part)) out.holes.push_back({v->dx, v->dy});
        else out.irregular.push_back(part);
    }
    return out;
}

CellSet build_row(std::span<const BlockSpec> specs) {
    if (specs.empty()) throw std::invalid_argument("build_row needs at least one block");
    const auto width = static_cast<coord_t>(specs.size()) * kBlockWidth;
    Raster r(Box{0, kFeatureLow, width, kFeatureHigh});
    std::map<BlockSpec, CellSet> cache;
    for (std::size_t j = 0; j < specs.size(); ++j) {
        auto it = cache.find(specs[j]);
        if (it == cache.end()) it = cache.emplace(specs[j], build_block(specs[j])).first;
        r.paint(it->second, {static_cast<coord_t>(j) * kBlockWidth, 0});
    }
    return r.to_cells();
}

std::vector<BlockSpec> parse_block_specs(std::string_view text) {
    std::vector<BlockSpec> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw, north, south, extra;
        if (!(ls >> kw)) continue;
        if (kw != "block" || !(ls >> north >> south) || (ls >> extra))
            throw LabelError("line " + std::to_string(lineno) + ": expected 'block <north> <south>'");
        BlockSpec spec;
        try {
            if (north != "-") spec.north = parse_label(north);
            if (south != "-") spec.south = parse_label(south);
        } catch (const LabelError& e) {
            throw LabelError("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!spec.north && !spec.south)
            throw LabelError("line " + std::to_string(lineno) + ": a block needs at least one labeled side");
        out.push_back(spec);
    }
    return out;
}

std::string format_block_specs(std::span<const BlockSpec> specs) {
    std::string out;
    for (const auto& s : specs) {
        out += "block ";
        out += s.north ? format_label(*s.north) : "-";
        out += " ";
        out += s.south ? format_label(*s.south) : "-";
        out += "\n";
    }
    return out;
}

}  // namespace wangpoly
