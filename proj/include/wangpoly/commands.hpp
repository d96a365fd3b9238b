#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace wangpoly {

/// Exit code 0 = ok, 1 = negative answer, 2 = operational error.
struct CommandReport {
    int exit_code = 0;
    std::vector<std::string> lines;

    std::string text() const;
};

struct ReduceArgs {
    std::filesystem::path wang;
    std::filesystem::path out_dir;
    bool pad_colors = false;
    bool svg = false;
};

struct RoundtripArgs {
    std::filesystem::path wang;
    int rows = 2;
    int periods = 1;
    bool pad_colors = false;
};

struct RenderArgs {
    std::filesystem::path tiles_dir;
    std::optional<std::filesystem::path> placements;
    std::filesystem::path out;
};

struct AssembleArgs {
    std::filesystem::path wang;
    std::optional<std::filesystem::path> tiling;  // solved on the torus when absent
    int rows = 2;
    int periods = 1;
    bool pad_colors = false;
    std::optional<std::filesystem::path> out;  // placement file
};

struct VerifyArgs {
    std::filesystem::path tiles_dir;
    std::filesystem::path placements;
    std::optional<std::string> region;  // overrides the file's region line
};

struct WangSolveArgs {
    std::filesystem::path wang;
    int rows = 2;
    int periods = 1;
    bool count = false;
    bool pad_colors = false;
};

struct BnCheckArgs {
    std::filesystem::path tile;
};

struct TileSolveArgs {
    std::filesystem::path tiles_dir;
    std::string region;
    std::uint64_t max_nodes = 50'000'000;
    std::int64_t max_ms = 60'000;
    std::optional<std::filesystem::path> out;
};

struct BlockArgs {
    std::string north;  // label text or "-"
    std::string south;
    std::optional<std::filesystem::path> out;
};

CommandReport cmd_reduce(const ReduceArgs& a);
CommandReport cmd_roundtrip(const RoundtripArgs& a);
CommandReport cmd_render(const RenderArgs& a);
CommandReport cmd_assemble(const AssembleArgs& a);
CommandReport cmd_verify(const VerifyArgs& a);
CommandReport cmd_wang_solve(const WangSolveArgs& a);
CommandReport cmd_bn_check(const BnCheckArgs& a);
CommandReport cmd_tile_solve(const TileSolveArgs& a);
CommandReport cmd_block(const BlockArgs& a);

}  // namespace wangpoly
