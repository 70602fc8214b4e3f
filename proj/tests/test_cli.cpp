#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gm/constructions.hpp"
#include "gm/graph.hpp"
#include "gm/graph6.hpp"
#include "gm/products.hpp"
#include "gm/spectrum.hpp"
#include "gm/switching.hpp"

using namespace gm;
using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs a shell command, capturing stdout; stderr is discarded.
RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string cli() {
    const char* path = std::getenv("GM_CLI");
    REQUIRE_MESSAGE(path != nullptr, "GM_CLI must point at the gm binary");
    return path;
}

// graph6 never contains a single quote (bytes 63..126), so this is safe
std::string q(const std::string& s) { return "'" + s + "'"; }

json parse_single(const RunResult& r) {
    json j = json::parse(r.out);
    return j;
}

}  // namespace

TEST_CASE("charpoly") {
    RunResult r = run(cli() + " charpoly 'A_'");
    CHECK(r.status == 0);
    json j = parse_single(r);
    CHECK(j["degree"] == 2);
    CHECK(j["coefficients"] == json({"-1", "0", "1"}));
    CHECK(j["pretty"] == "x^2 - 1");

    CHECK(run(cli() + " charpoly 'A_' --check=-1,0,1").status == 0);
    RunResult bad = run(cli() + " charpoly 'A_' --check=0,0,1");
    CHECK(bad.status == 1);
    CHECK(parse_single(bad)["check"] == false);
}

TEST_CASE("cospectral") {
    std::string star = to_graph6(star_graph(5));
    std::string c4_plus = to_graph6(graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    RunResult r = run(cli() + " cospectral " + q(star) + " " + q(c4_plus));
    CHECK(r.status == 0);
    json j = parse_single(r);
    CHECK(j["cospectral"] == true);
    CHECK(j["charpoly_first"]["coefficients"] == j["charpoly_second"]["coefficients"]);

    RunResult no = run(cli() + " cospectral 'A_' 'A?'");
    CHECK(no.status == 1);
    CHECK(parse_single(no)["cospectral"] == false);
}

TEST_CASE("switch") {
    Graph c4 = cycle_graph(4);
    RunResult r = run(cli() + " switch " + q(to_graph6(c4)) + " --set 0,1 --output g6");
    CHECK(r.status == 0);
    CHECK(r.out == to_graph6(apply_switching(c4, {0, 1})) + "\n");

    // JSON output carries the encoded graph
    RunResult j = run(cli() + " switch " + q(to_graph6(c4)) + " --set 0,1");
    CHECK(j.status == 0);
    CHECK(parse_graph6(parse_single(j)["graph6"].get<std::string>()) ==
          apply_switching(c4, {0, 1}));

    // a set that fails validation: report + exit 1
    RunResult bad = run(cli() + " switch " + q(to_graph6(path_graph(5))) + " --set 0,1,2,3");
    CHECK(bad.status == 1);
    json bj = parse_single(bad);
    CHECK(bj["valid"] == false);
    CHECK(bj["validation"]["valid"] == false);

    // partitions work too
    RunResult part = run(cli() + " switch " + q(to_graph6(c4)) + " --partition '0,2;1,3' --output g6");
    CHECK(part.status == 0);
    CHECK(part.out == to_graph6(apply_switching(c4, SwitchingPartition{{{0, 2}, {1, 3}}})) + "\n");
}

TEST_CASE("find-sets") {
    RunResult r = run(cli() + " find-sets " + q(to_graph6(cycle_graph(4))) + " --size 2");
    CHECK(r.status == 0);
    json j = parse_single(r);
    CHECK(j["count"] == 6);
    CHECK(j["sets"] == json({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));

    RunResult rook = run(cli() + " find-sets " + q(to_graph6(grid_graph(4, 4))) +
                         " --size 4 --cocliques-only");
    json rj = parse_single(rook);
    CHECK(rj["count"] == 24);
    CHECK(rj["cocliques_only"] == true);
}

TEST_CASE("iso") {
    Graph g = grid_graph(3, 2);
    Graph h = apply_permutation(g, Permutation({5, 3, 1, 4, 2, 0}));
    RunResult r = run(cli() + " iso " + q(to_graph6(g)) + " " + q(to_graph6(h)));
    CHECK(r.status == 0);
    json j = parse_single(r);
    REQUIRE(j["isomorphic"] == true);

    // feed the reported witness back through --check
    std::string witness;
    for (int v : j["witness"].get<std::vector<int>>())
        witness += (witness.empty() ? "" : ",") + std::to_string(v);
    RunResult chk =
        run(cli() + " iso " + q(to_graph6(g)) + " " + q(to_graph6(h)) + " --check " + witness);
    CHECK(chk.status == 0);
    CHECK(parse_single(chk)["witness_valid"] == true);

    RunResult wrong =
        run(cli() + " iso " + q(to_graph6(g)) + " " + q(to_graph6(h)) + " --check 0,1,2,3,4,5");
    CHECK(wrong.status == 1);
    CHECK(parse_single(wrong)["witness_valid"] == false);

    // non-isomorphic pair: exit 1
    RunResult no = run(cli() + " iso " + q(to_graph6(cycle_graph(4))) + " " +
                       q(to_graph6(path_graph(4))));
    CHECK(no.status == 1);
    CHECK(parse_single(no)["isomorphic"] == false);
}

TEST_CASE("iso --fix") {
    Graph b = bipartite18();
    Graph bs = apply_switching(b, bipartite18_set());
    RunResult yes = run(cli() + " iso " + q(to_graph6(b)) + " " + q(to_graph6(bs)) +
                        " --fix 0,1,2,3");
    CHECK(yes.status == 0);
    json yj = parse_single(yes);
    CHECK(yj["isomorphic"] == true);
    CHECK(yj["fixed_set"] == json({0, 1, 2, 3}));

    auto [m5, x5] = m5_fixture();
    Graph m5s = apply_switching(m5, x5);
    RunResult no = run(cli() + " iso " + q(to_graph6(m5)) + " " + q(to_graph6(m5s)) +
                       " --fix 0,1,2,3,4,5,6,7,8,9");
    CHECK(no.status == 1);
    CHECK(parse_single(no)["isomorphic"] == false);
}

TEST_CASE("aut, directly and via a pipe") {
    RunResult r = run(cli() + " aut " + q(to_graph6(gadget9())));
    CHECK(r.status == 0);
    json j = parse_single(r);
    CHECK(j["order"] == "3");
    CHECK(j["orbits"] == json({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}));

    RunResult piped = run(cli() + " fixture gadget9 --output g6 | " + cli() + " aut -");
    CHECK(piped.status == 0);
    CHECK(parse_single(piped)["order"] == "3");
}

TEST_CASE("invariants") {
    RunResult r = run(cli() + " invariants " + q(to_graph6(grid_graph(4, 4))) +
                      " --set 0,5,10,15");
    CHECK(r.status == 0);
    json j = parse_single(r);
    CHECK(j["validation"]["valid"] == true);
    CHECK(j["block"]["half_vertices"].size() == 12);
    CHECK(j["block"]["cell_degree"] == 0);
    CHECK(j["lemma3"]["cond_i"] == false);
    CHECK(j["lemma3"]["cond_ii"] == false);
    CHECK(j["lemma3"]["cond_iii"] == false);
    CHECK(j["lemma3"]["certifies_nonisomorphic"] == false);
    // every set vertex trades its entire neighbourhood in the switch
    CHECK(j["mu"] == json({0, 0, 0, 0}));

    RunResult bad = run(cli() + " invariants " + q(to_graph6(path_graph(5))) + " --set 0,1,2,3");
    CHECK(bad.status == 1);
    CHECK(parse_single(bad)["validation"]["valid"] == false);
}

TEST_CASE("thm4") {
    RunResult yes = run(cli() + " thm4 " + q(to_graph6(grid_graph(4, 3))) + " " +
                        q(to_graph6(path_graph(3))) +
                        " --set 0,1,3,4 --vertex 0 --kind tensor");
    CHECK(yes.status == 0);
    json yj = parse_single(yes);
    CHECK(yj["satisfied"] == true);
    CHECK(yj["case_halfregular"] == true);
    CHECK(yj["kind"] == "tensor");

    RunResult no = run(cli() + " thm4 " + q(to_graph6(triangular_graph(4))) + " 'A_'" +
                       " --set 0,1,4,5 --vertex 0 --kind strengthened");
    CHECK(no.status == 1);
    json nj = parse_single(no);
    CHECK(nj["satisfied"] == false);
    CHECK(nj["case_halfregular"] == false);
    CHECK(nj["case_coclique"] == false);
}

TEST_CASE("product") {
    Graph k2 = complete_graph(2), c4 = cycle_graph(4);
    RunResult g6 = run(cli() + " product 'A_' " + q(to_graph6(c4)) +
                       " --kind strengthened --output g6");
    CHECK(g6.status == 0);
    CHECK(g6.out == to_graph6(strengthened_tensor(k2, c4)) + "\n");

    Graph base = grid_graph(3, 2);
    RunResult r = run(cli() + " product " + q(to_graph6(path_graph(3))) + " " +
                      q(to_graph6(base)) + " --kind tensor --set 0,1,2,3 --lift-vertex 1");
    CHECK(r.status == 0);
    json j = parse_single(r);
    CHECK(j["kind"] == "tensor");
    CHECK(j["graph6"] == to_graph6(tensor_product(path_graph(3), base)));
    CHECK(j["partition"] == json({{0, 1, 2, 3}, {6, 7, 8, 9}, {12, 13, 14, 15}}));
    CHECK(j["lifted_set"] == json({6, 7, 8, 9}));
}

TEST_CASE("fixture") {
    RunResult m5 = run(cli() + " fixture m5");
    CHECK(m5.status == 0);
    json j = parse_single(m5);
    CHECK(j["name"] == "m5");
    CHECK(j["n"] == 20);
    CHECK(j["edges"] == 90);
    CHECK(j["set"] == json({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK(parse_graph6(j["graph6"].get<std::string>()) == m5_fixture().first);

    RunResult t = run(cli() + " fixture tournament:5");
    CHECK(t.status == 0);
    json tj = parse_single(t);
    CHECK(tj["m"] == 5);
    TournamentMatrix expect = cyclic_tournament(5);
    CHECK(tj["entries"] == json(expect.entries));

    RunResult g6 = run(cli() + " fixture grid:3,2 --output g6");
    CHECK(g6.status == 0);
    CHECK(g6.out == to_graph6(grid_graph(3, 2)) + "\n");

    CHECK(run(cli() + " fixture petersen").status == 2);
}

TEST_CASE("verify a single scenario") {
    RunResult r = run(cli() + " verify 4");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("[PASS] 4 ", 0) == 0);
    CHECK(r.out.find("\n") == r.out.size() - 1);  // exactly one line
}

TEST_CASE("census") {
    const std::string path = "/tmp/gm_cli_census_input.g6";
    {
        std::ofstream f(path);
        f << ">>graph6<<\n";  // optional header: skipped, but counted as a line
        f << to_graph6(cycle_graph(4)) << "\n";
        f << to_graph6(complete_graph(4)) << "\n";
        f << to_graph6(grid_graph(3, 2)) << "\n";
    }

    RunResult r = run("GM_THREADS=2 " + cli() + " census " + path + " --size 2");
    CHECK(r.status == 0);

    std::vector<json> lines;
    std::istringstream ss(r.out);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(json::parse(line));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0]["line"] == 2);  // the header consumed line 1
    CHECK(lines[1]["line"] == 3);
    CHECK(lines[2]["line"] == 4);
    CHECK(lines[0]["n"] == 4);
    CHECK(lines[0]["sets"].size() == 6);  // every pair of C4
    for (const auto& e : lines[0]["sets"]) {
        CHECK(e["cospectral"] == true);
        CHECK(e["isomorphic"] == true);  // a transposition relabelling
    }

    // resume: skip everything up to and including line 3
    RunResult resumed = run("GM_THREADS=2 " + cli() + " census " + path + " --size 2 --start 3");
    CHECK(resumed.status == 0);
    json last = json::parse(resumed.out);
    CHECK(last["line"] == 4);

    // cap the number of processed graphs
    RunResult capped = run("GM_THREADS=2 " + cli() + " census " + path + " --size 2 --count 1");
    CHECK(json::parse(capped.out)["line"] == 2);

    // a malformed line is reported inline and flips the exit code to 2
    {
        std::ofstream f(path);
        f << to_graph6(cycle_graph(4)) << "\n";
        f << "#### not graph6\n";
    }
    RunResult bad = run("GM_THREADS=2 " + cli() + " census " + path + " --size 2");
    CHECK(bad.status == 2);
    std::istringstream bs(bad.out);
    std::getline(bs, line);
    CHECK(json::parse(line).contains("sets"));
    std::getline(bs, line);
    json err = json::parse(line);
    CHECK(err["line"] == 2);
    CHECK(err.contains("error"));

    std::remove(path.c_str());
    CHECK(run(cli() + " census /tmp/definitely-missing.g6").status == 2);
}

TEST_CASE("exit code 2 on bad usage or bad input") {
    CHECK(run(cli() + " frobnicate").status == 2);
    CHECK(run(cli() + " charpoly '####'").status == 2);
    CHECK(run(cli()).status != 0);  // a subcommand is required
}

TEST_CASE("output is deterministic") {
    Graph g = grid_graph(4, 4);
    std::string cmd = cli() + " iso " + q(to_graph6(g)) + " " + q(to_graph6(g));
    RunResult a = run(cmd), b = run(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    std::string aut_cmd = cli() + " aut " + q(to_graph6(triangular_graph(5)));
    CHECK(run(aut_cmd).out == run(aut_cmd).out);
}
