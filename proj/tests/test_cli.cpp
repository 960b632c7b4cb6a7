#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "tamari/io.hpp"

using namespace tamari;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "tamari-cli");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

}

TEST_SUITE("cli") {

TEST_CASE("count")
{
    auto r = run({"count", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "68\n");
    r = run({"count", "--n", "3", "--m", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["count"] == "58");
    CHECK(run({"count", "--n", "30"}).out == "15827868548437082733879976\n");
}

TEST_CASE("enumerate")
{
    auto r = run({"enumerate", "--n", "3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        poset_from_json(Json::parse(line));
        ++count;
    }
    CHECK(count == 13);
    r = run({"enumerate", "--n", "2", "--m", "2", "--stats"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("involute and stats")
{
    auto input = to_json(fixtures::eight()).dump();
    auto r = run({"involute", "--input", input});
    CHECK(r.code == 0);
    CHECK(poset_from_json(Json::parse(r.out)) == fixtures::eight_image());
    r = run({"stats", "--stdin"}, input);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["distance"] == 3);
    r = run({"involute", "--stdin", "--m", "2"}, to_json(fixtures::m_two_sample()).dump());
    CHECK(r.code == 0);
    CHECK(poset_from_json(Json::parse(r.out)) == fixtures::m_two_sample_image());
}

TEST_CASE("complement and grafting trees")
{
    auto input = to_json(fixtures::eight_left_branch()).dump();
    auto r = run({"complement", "--input", input});
    CHECK(poset_from_json(Json::parse(r.out)) == fixtures::eight_left_branch_complement());
    r = run({"graft-tree", "--input", to_json(fixtures::eight()).dump()});
    CHECK(r.code == 0);
    auto g = Json::parse(r.out);
    CHECK(g["labels"] == Json({0, 1, 0, 2, 0, 0, 1, 0}));
    r = run({"graft-tree", "--input", g.dump()});
    CHECK(poset_from_json(Json::parse(r.out)) == fixtures::eight());
}

TEST_CASE("render")
{
    auto r = run({"render", "--input", to_json(fixtures::five()).dump(), "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph") == 0);
    CHECK(r.out.find("1 -> 3 [color=blue]") != std::string::npos);
    CHECK(r.out.find("2 -> 1 [color=red]") != std::string::npos);
    r = run({"render", "--input", to_json(fixtures::five()).dump(), "--format", "tikz"});
    CHECK(r.out.find("\\begin{tikzpicture}") == 0);
}

TEST_CASE("verify")
{
    auto r = run({"verify", "--suite", "classical", "--max-n", "5", "--jobs", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(run({"verify", "--suite", "mtamari", "--max-n", "2"}).code == 0);
    CHECK(run({"verify", "--suite", "oracles", "--max-n", "4", "--m", "2"}).code == 0);
}

TEST_CASE("errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"count"}).code == 2);
    CHECK(run({"count", "--n", "0"}).code == 2);
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
    CHECK(run({"stats"}).code == 2);
    CHECK(run({"stats", "--stdin"}, "not json").code == 2);
    auto r = run({"stats", "--stdin"}, R"({"size": 3, "increasing": [[1, 3]], "decreasing": [[3, 2]]})");
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);
    CHECK(run({"involute", "--stdin", "--m", "2"}, to_json(IntervalPoset(4)).dump()).code == 2);
}

}
