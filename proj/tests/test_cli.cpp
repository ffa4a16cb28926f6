#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "symcol/graph.hpp"
#include "symcol/graph6.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(SYMCOL_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("symcol_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t pos; (pos = s.find('\n', start)) != std::string::npos; start = pos + 1)
        out.push_back(s.substr(start, pos - start));
    return out;
}

} // namespace

TEST_CASE("gen") {
    auto r = run("gen petersen");
    CHECK(r.code == 0);
    REQUIRE(lines(r.out).size() == 1);
    CHECK(symcol::parse_graph6(lines(r.out)[0]).order() == 10);
    CHECK(run("gen cycle 5").out == "Dhc\n");
    const auto a = run("gen random-regular 10 3 --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == run("gen random-regular 10 3 --seed 7").out);
    CHECK(lines(run("gen regular 8 3").out).size() == 5);
    CHECK(run("gen cycle two").code == 2);
    CHECK(run("gen frobnicate").code == 2);
    CHECK(run("gen random-regular 5 3").code == 2);
}

TEST_CASE("colour") {
    auto r = run("colour --gen petersen --verify");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("colours_used").get<int>() <= 3);
    CHECK(j.at("distinguishing") == true);
    CHECK(j.at("verified") == true);
    CHECK(j.at("colouring").size() == 15);
    CHECK(j.at("audit").size() == 3);

    CHECK(run("colour --graph6 A_").code == 3);
    CHECK(run("colour --gen \"path 4\"").code == 2);
    CHECK(run("colour --graph6 Bx").code == 2);
    CHECK(run("colour --graph6 A_ --gen petersen").code == 2);

    j = nlohmann::json::parse(run("colour --gen \"cycle 4\"").out);
    CHECK(j.at("colours_used") == 3);

    CHECK(run("colour --gen petersen --format dot").out.starts_with("graph G {"));
    CHECK(run("colour --gen petersen --format text").out.find("distinguishing: true") != std::string::npos);

    const auto file = temp_file("c5.g6", "Dhc\n");
    CHECK(run("colour --input " + file).code == 0);
    CHECK(run("colour < " + file).code == 0);
    CHECK(run("colour --input /nonexistent/x.g6").code == 2);
}

TEST_CASE("dprime") {
    auto j = nlohmann::json::parse(run("dprime --gen \"complete 6\"").out);
    CHECK(j.at("dprime") == 2);
    CHECK(run("dprime --gen \"cycle 5\" --format text").out == "3\n");
    const auto k2 = run("dprime --graph6 A_");
    CHECK(k2.code == 3);
    CHECK(nlohmann::json::parse(k2.out).at("dprime") == "NotDistinguishable");
    CHECK(run("dprime --gen \"complete-bipartite 1 5\" --max-colours 3").code == 4);
    CHECK(run("dprime --gen \"complete 7\" --budget 1").code == 4);
}

TEST_CASE("aut") {
    auto j = nlohmann::json::parse(run("aut --gen petersen --root 0").out);
    CHECK(j.at("order") == 120);
    CHECK(j.at("stabiliser_order") == 12);
    std::vector<std::size_t> sizes;
    for (const auto& o : j.at("stabiliser_orbits")) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 6});
    CHECK(nlohmann::json::parse(run("aut --gen \"complete 5\"").out).at("order") == 120);
    // spider with legs 1, 2, 3
    const symcol::Graph spider(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
    CHECK(nlohmann::json::parse(run("aut --graph6 '" + symcol::serialize_graph6(spider) + "'").out).at("order") == 1);
    CHECK(run("aut --gen \"cycle 20\"").code == 2);
}

TEST_CASE("scan") {
    const auto cubic = temp_file("cubic.g6", run("gen regular 4 3").out + run("gen regular 6 3").out +
                                                 run("gen regular 8 3").out + run("gen regular 10 3").out);
    auto r = run("scan --input " + cubic);
    CHECK(r.code == 0);
    int exceptions = 0;
    for (const auto& line : lines(r.out)) {
        const auto j = nlohmann::json::parse(line);
        exceptions += j.at("status") != "ok";
        CHECK(j.at("status") != "unexpected_exception");
    }
    CHECK(exceptions == 2);  // K4 and K3,3

    const auto c5 = temp_file("c5_scan.g6", "Dhc\nIheA@GUAo\n");
    r = run("scan --input " + c5 + " --jobs 2");
    CHECK(r.code == 0);
    bool flagged = false;
    for (const auto& line : lines(r.out)) {
        const auto j = nlohmann::json::parse(line);
        if (j.at("graph6") == "Dhc") flagged = j.at("status") == "known_exception";
    }
    CHECK(flagged);

    // a doctored report claiming D' = 3 for a 5-regular graph
    const auto five = lines(run("gen regular 8 5").out).front();
    const auto doctored =
        temp_file("doctored.jsonl", nlohmann::json({{"graph6", five}, {"n", 8}, {"degree", 5}, {"dprime", 3},
                                                    {"status", "ok"}})
                                            .dump() +
                                        "\n");
    r = run("scan --report-in " + doctored);
    CHECK(r.code == 5);
    CHECK(nlohmann::json::parse(lines(r.out).front()).at("status") == "unexpected_exception");

    const auto honest = temp_file("honest.jsonl", run("scan --input " + c5).out);
    CHECK(run("scan --report-in " + honest).code == 0);
}
