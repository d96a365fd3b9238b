#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string all_headers() {
    std::string out;
    for (const auto& e : fs::directory_iterator(fs::path(WANGPOLY_SOURCE_DIR) / "include" / "wangpoly"))
        if (e.path().extension() == ".hpp") out += slurp(e.path());
    return out;
}

}  // namespace

TEST_SUITE("docs") {
    TEST_CASE("every symbol row names an identifier from the public headers") {
        const std::string doc = slurp(fs::path(WANGPOLY_SOURCE_DIR) / "docs" / "notation.md");
        REQUIRE_FALSE(doc.empty());
        const std::string headers = all_headers();
        const std::regex row(R"(^\|(.*)\|\s*`([A-Za-z_][A-Za-z0-9_]*)`\s*\|\s*$)");
        std::istringstream in(doc);
        std::string line;
        int rows = 0;
        while (std::getline(in, line)) {
            std::smatch m;
            if (!std::regex_match(line, m, row)) continue;
            ++rows;
            const std::string id = m[2];
            CAPTURE(line);
            CHECK(std::regex_search(headers, std::regex("\\b" + id + "\\b")));
        }
        CHECK(rows >= 40);
    }

    TEST_CASE("the readme covers every subcommand") {
        const std::string readme = slurp(fs::path(WANGPOLY_SOURCE_DIR) / "README.md");
        for (const char* cmd : {"reduce", "roundtrip", "render", "assemble", "verify", "wang-solve", "bn-check",
                                "tile-solve", "block"})
            CHECK_MESSAGE(readme.find(std::string("wangpoly ") + cmd) != std::string::npos, cmd);
    }
}
