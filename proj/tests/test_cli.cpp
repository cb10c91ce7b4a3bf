#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hadamard/core.hpp"
#include "hadamard/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(HADAMARD_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 65536> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_file(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / ("hadamard_cli_test_" + name);
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

}  // namespace

TEST_CASE("gen matches golden listings") {
    auto r = run("gen 4");
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fs::path(HADAMARD_GOLDEN_DIR) / "order4.txt"));
    auto s = run("gen 12 --skew");
    CHECK(s.code == 0);
    CHECK(s.out == slurp(fs::path(HADAMARD_GOLDEN_DIR) / "skew12.txt"));
    auto c = run("gen 8 --format compact");
    CHECK(c.out == slurp(fs::path(HADAMARD_GOLDEN_DIR) / "order8.had"));
}

TEST_CASE("gen status exits") {
    CHECK(run("gen 668").code == 2);
    CHECK(run("gen 9").code == 1);
    CHECK(run("gen 356 --skew").code == 2);
    CHECK(run("gen").code == 4);
    CHECK(run("gen 12 --format yaml").code == 4);
}

TEST_CASE("exists") {
    auto a = run("exists 12");
    CHECK(a.out == "exists PaleyII\n");
    CHECK(a.code == 0);
    auto b = run("exists --skew 356");
    CHECK(b.out == "unknown\n");
    CHECK(b.code == 2);
    CHECK(run("exists 2").out.rfind("exists", 0) == 0);
    auto c = run("exists 9");
    CHECK(c.out == "not-exist\n");
    CHECK(c.code == 1);
}

TEST_CASE("verify accepts generated output and rejects tampering") {
    auto g = run("gen 292 --skew --format compact");
    REQUIRE(g.code == 0);
    auto f = temp_file("292.had", g.out);
    auto v = run("verify --skew " + f.string());
    CHECK(v.code == 0);
    CHECK(v.out.rfind("PASS", 0) == 0);

    auto text = run("gen 20").out;
    text[5] = text[5] == '+' ? '-' : '+';
    auto t = temp_file("bad20.txt", text);
    auto bad = run("verify " + t.string());
    CHECK(bad.code == 3);
    CHECK(bad.out.rfind("FAIL", 0) == 0);
    CHECK(bad.out.find("rows (0, ") != std::string::npos);

    auto ns = temp_file("nonsquare.txt", "++\n+-\n++\n");
    CHECK(run("verify " + ns.string()).code == 4);
    CHECK(run("verify /nonexistent/file").code == 4);

    auto notskew = run("gen 12");
    auto p = temp_file("12.txt", notskew.out);
    CHECK(run("verify " + p.string()).code == 0);
    CHECK(run("verify --skew " + p.string()).code == 3);
}

TEST_CASE("every format round trips through verify up to order 400") {
    std::vector<int> orders{1, 2};
    for (int o = 4; o <= 400; o += 4) orders.push_back(o);
    for (int o : orders) {
        for (const char* fmt : {"text", "json", "compact"}) {
            auto g = run("gen " + std::to_string(o) + " --format " + fmt);
            REQUIRE(g.code == 0);
            // Round trip in-process as well as through the binary.
            auto m = had::parse_any(g.out);
            CHECK(m.order() == o);
            CHECK(had::is_hadamard(m));
        }
        auto c = run("gen " + std::to_string(o) + " --format compact");
        auto f = temp_file("rt.had", c.out);
        CHECK_MESSAGE(run("verify " + f.string()).code == 0, "order " << o);
    }
}

TEST_CASE("tables") {
    auto h = run("table hadamard --max 300 --bare");
    CHECK(h.out == "167(3)\n179(3)\n223(3)\n283(3)\n");
    CHECK(run("table hadamard --max 300 --regen --bare").out == h.out);
    auto s = run("table skew --max 100");
    CHECK(s.out.find("89(4)") != std::string::npos);
    CHECK(run("table skew --max 5000").code == 4);
    CHECK(run("table other").code == 4);
}

TEST_CASE("riesel") {
    auto r = run("riesel 509203");
    CHECK(r.code == 0);
    CHECK(r.out.find("period = 24") != std::string::npos);
    std::size_t confirmed = 0, pos = 0;
    while ((pos = r.out.find("confirmed", pos)) != std::string::npos) ++confirmed, ++pos;
    CHECK(confirmed == 6);
    auto seven = run("riesel 7");
    CHECK(seven.code == 1);
    CHECK(seven.out.find("m = 1") != std::string::npos);
    CHECK(run("riesel 2").code == 4);
}

TEST_CASE("data directory override") {
    auto dir = fs::temp_directory_path() / "hadamard_cli_test_data";
    fs::remove_all(dir);
    fs::copy(HADAMARD_SOURCE_DATA_DIR, dir);
    std::string env = "HADAMARD_DATA_DIR=" + dir.string() + " ";
    std::string cmd = env + HADAMARD_CLI_PATH + " exists 188 >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    {
        std::ofstream(dir / "manifest.txt", std::ios::app) << "bogus bogus.txt 1\n";
    }
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) != 0);
    fs::remove_all(dir);
}
