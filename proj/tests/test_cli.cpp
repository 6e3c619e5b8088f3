// Drives the built command-line tool through a shell.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false)
{
    const std::string cmd = std::string(CYCLEMAX_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), k);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("cyclemax_cli_" + name);
    std::ofstream(path) << text << "\n";
    return path.string();
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(CYCLEMAX_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}

TEST_CASE("count")
{
    const Run c = run("blowup --gamma 2 --t 2 | " CYCLEMAX_CLI " count -");
    CHECK(c.status == 0);
    CHECK(first_line(c.out) == "593");

    CHECK(first_line(run("gamma 2 --output-format graph6 | " CYCLEMAX_CLI " count -").out) == "1");
    CHECK(first_line(run("gamma 1 | " CYCLEMAX_CLI " count -").out) == "0");
    const Run by_len = run("blowup --gamma 1 --t 4 | " CYCLEMAX_CLI " count --by-length -");
    CHECK(by_len.out.find("4 36") != std::string::npos);
    CHECK(by_len.out.find("8 72") != std::string::npos);
    CHECK(run("count /nonexistent/graph").status == 2);
}

TEST_CASE("bound")
{
    CHECK(first_line(run("bound perm --gamma 3 --t 1").out) == "130");
    CHECK(first_line(run("bound perm --gamma 2 --t 2").out) == "2876");
    CHECK(first_line(run("bound perm --gamma 2 --sizes 1,3,2,2,3").out) == "16273");
    CHECK(first_line(run("bound turan-exact --n 20").out) == "1623855701385");
    CHECK(first_line(run("bound edge --n 5 --m 6 --g 4").out) == "18");
    CHECK(first_line(run("bound hmorph --n 10 --p 5 --q 2 --g 4").out) == "40960");
    CHECK(first_line(run("bound pi --n 7 --m 12").out) == "81");
    const Run prov = run("bound edge --n 5 --m 6 --g 4");
    CHECK(prov.out.find("\n#") != std::string::npos);
    CHECK(run("bound hmorph --n 10 --p 3 --q 2 --g 4").status == 2);
    CHECK(run("bound edge-log --n 10 --m 20").status == 2);
    CHECK(run("bound").status == 2);
}

TEST_CASE("perm reads a block spec")
{
    const std::string spec =
        R"({"p":5,"sizes":[2,2,2,2,2],"h":[[0,0,1,1,0],[0,0,0,1,1],[1,0,0,0,1],[1,1,0,0,0],[0,1,1,0,0]]})";
    const std::string path = temp_file("c5_2.json", spec);
    const Run r = run("perm " + path);
    CHECK(r.status == 0);
    CHECK(first_line(r.out) == "5753");
    CHECK(first_line(run("perm --halve - < " + path).out) == "2876");
    CHECK(run("perm " + temp_file("bad.json", R"({"p":1})")).status == 2);
}

TEST_CASE("gamma and blowup writers round trip through count")
{
    CHECK(first_line(run("gamma 3 | " CYCLEMAX_CLI " count -").out) == "29");
    CHECK(run("gamma 0").status == 2);
}

TEST_CASE("tables reproduce the reference rows")
{
    const Run r = run("tables");
    CHECK(r.status == 0);
    CHECK(r.out.find("K28,28") != std::string::npos);
    CHECK(run("--format csv tables").out == golden("tables.csv"));
}

TEST_CASE("search summaries")
{
    const Run rd = run("search regular-degree", true);
    CHECK(rd.status == 0);
    CHECK(rd.out.find("428 candidates, 428 eliminated, 0 survivors") != std::string::npos);

    const Run v = run("search verify --max-n 6", true);
    CHECK(v.status == 0);
    CHECK(run("search verify --max-n 9").status == 2);

    CHECK(first_line(run("search near-regular").out).find("435") != std::string::npos);
    CHECK(first_line(run("search near-regular --cap 3/8").out).find("91") != std::string::npos);
}

TEST_CASE("search output matches golden files")
{
    CHECK(run("--format json search regular-gamma").out == golden("regular_gamma.jsonl"));
    CHECK(run("--format json search regular-degree").out == golden("regular_degree.jsonl"));
    CHECK(run("--format json search gtwo --max-n 40").out == golden("gtwo_40.jsonl"));
}

TEST_CASE("thread count does not change output")
{
    const std::string one = run("--threads 1 --format json search gtwo --max-n 30").out;
    CHECK(one == run("--threads 4 --format json search gtwo --max-n 30").out);
    CHECK(one == run("--format json search gtwo --max-n 30").out);
}
