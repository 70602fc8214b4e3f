#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gm/constructions.hpp"
#include "gm/graph.hpp"
#include "gm/graph6.hpp"
#include "gm/invariants.hpp"
#include "gm/isomorphism.hpp"
#include "gm/json_io.hpp"
#include "gm/products.hpp"
#include "gm/spectrum.hpp"
#include "gm/switching.hpp"
#include "../src/scenarios.hpp"

using namespace gm;

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string first_line(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        line = trim(line);
        if (!line.empty()) return line;
    }
    throw std::invalid_argument("no graph found in input");
}

Graph graph_from_text(const std::string& raw) {
    std::string text = trim(raw);
    if (text.empty()) throw std::invalid_argument("empty graph input");
    if (text[0] == '{') {
        json j = json::parse(text);
        if (!j.contains("graph6") || !j["graph6"].is_string())
            throw std::invalid_argument("JSON graph input needs a \"graph6\" string");
        return parse_graph6(j["graph6"].get<std::string>());
    }
    return parse_graph6(first_line(text));
}

// Accepts a graph6 literal, a file path, or "-" for stdin; files and stdin
// may hold either a raw graph6 line or a JSON object with a "graph6" key.
Graph load_graph(const std::string& arg) {
    if (arg == "-") return graph_from_text(slurp(std::cin));
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream f(arg);
        if (!f) throw std::runtime_error("cannot open " + arg);
        return graph_from_text(slurp(f));
    }
    return graph_from_text(arg);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void emit_graph(const Graph& g, const std::string& output) {
    if (output == "g6") {
        std::cout << to_graph6(g) << "\n";
    } else {
        emit(graph_json(g));
    }
}

int census_threads() {
    if (const char* env = std::getenv("GM_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string census_record(long line_no, const std::string& g6, int size, bool cocliques,
                          std::atomic<bool>* had_error) {
    json j;
    j["line"] = line_no;
    try {
        Graph g = parse_graph6(g6);
        j["graph6"] = g6;
        j["n"] = g.order();
        json sets = json::array();
        for (const auto& x : enumerate_switching_sets(g, size, cocliques)) {
            Graph sw = apply_switching(g, x);
            json e;
            e["set"] = x;
            e["cospectral"] = cospectral(g, sw);
            e["isomorphic"] = are_isomorphic(g, sw).has_value();
            e["isomorphic_fixing_set"] = isomorphism_fixing_set(g, sw, x).has_value();
            sets.push_back(std::move(e));
        }
        j["sets"] = std::move(sets);
    } catch (const std::exception& e) {
        j["error"] = e.what();
        had_error->store(true);
    }
    return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Godsil-McKay switching toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- switch ----
    auto* sw_cmd = app.add_subcommand("switch", "apply switching for a set or partition");
    std::string sw_graph, sw_set, sw_part, sw_output = "json";
    sw_cmd->add_option("graph", sw_graph, "graph6 literal, file, or -")->required();
    sw_cmd->add_option("--set", sw_set, "switching set, e.g. 0,1,2,3");
    sw_cmd->add_option("--partition", sw_part, "cells separated by ';', e.g. 0,1;2,3");
    sw_cmd->add_option("--output", sw_output)->check(CLI::IsMember({"json", "g6"}));
    sw_cmd->callback([&] {
        if (sw_set.empty() == sw_part.empty())
            throw std::invalid_argument("provide exactly one of --set / --partition");
        Graph g = load_graph(sw_graph);
        SwitchingPartition p =
            sw_set.empty() ? parse_partition(sw_part) : SwitchingPartition::single(parse_int_list(sw_set));
        ValidationReport vr = validate_partition(g, p);
        if (!vr.valid) {
            json j;
            j["valid"] = false;
            j["validation"] = validation_json(vr);
            emit(j);
            rc = 1;
            return;
        }
        emit_graph(apply_switching(g, p), sw_output);
    });

    // ---- find-sets ----
    auto* fs_cmd = app.add_subcommand("find-sets", "enumerate switching sets of one size");
    std::string fs_graph;
    int fs_size = 4;
    bool fs_cocl = false;
    fs_cmd->add_option("graph", fs_graph)->required();
    fs_cmd->add_option("--size", fs_size, "set size (default 4)");
    fs_cmd->add_flag("--cocliques-only", fs_cocl, "independent sets only");
    fs_cmd->callback([&] {
        Graph g = load_graph(fs_graph);
        auto sets = enumerate_switching_sets(g, fs_size, fs_cocl);
        json j;
        j["size"] = fs_size;
        j["cocliques_only"] = fs_cocl;
        j["count"] = sets.size();
        j["sets"] = sets;
        emit(j);
    });

    // ---- cospectral ----
    auto* cs_cmd = app.add_subcommand("cospectral", "exact cospectrality of two graphs");
    std::string cs_a, cs_b;
    cs_cmd->add_option("first", cs_a)->required();
    cs_cmd->add_option("second", cs_b)->required();
    cs_cmd->callback([&] {
        Graph a = load_graph(cs_a), b = load_graph(cs_b);
        bool same = cospectral(a, b);
        json j;
        j["cospectral"] = same;
        j["charpoly_first"] = polynomial_json(char_poly(a));
        j["charpoly_second"] = polynomial_json(char_poly(b));
        emit(j);
        if (!same) rc = 1;
    });

    // ---- charpoly ----
    auto* cp_cmd = app.add_subcommand("charpoly", "integer characteristic polynomial");
    std::string cp_graph, cp_check;
    cp_cmd->add_option("graph", cp_graph)->required();
    cp_cmd->add_option("--check", cp_check,
                       "comma-separated expected coefficients, ascending degree");
    cp_cmd->callback([&] {
        Graph g = load_graph(cp_graph);
        IntPolynomial p = char_poly(g);
        json j = polynomial_json(p);
        if (!cp_check.empty()) {
            std::vector<mpz_class> want;
            std::stringstream ss(cp_check);
            std::string tok;
            while (std::getline(ss, tok, ',')) want.emplace_back(trim(tok));
            bool match = want.size() == p.coeffs.size() &&
                         std::equal(want.begin(), want.end(), p.coeffs.begin());
            j["check"] = match;
            if (!match) rc = 1;
        }
        emit(j);
    });

    // ---- iso ----
    auto* iso_cmd = app.add_subcommand("iso", "isomorphism search / witness check");
    std::string iso_a, iso_b, iso_fix, iso_check;
    iso_cmd->add_option("first", iso_a)->required();
    iso_cmd->add_option("second", iso_b)->required();
    iso_cmd->add_option("--fix", iso_fix, "vertex set the isomorphism must fix setwise");
    iso_cmd->add_option("--check", iso_check, "candidate witness as one-line permutation");
    iso_cmd->callback([&] {
        Graph a = load_graph(iso_a), b = load_graph(iso_b);
        json j;
        if (!iso_check.empty()) {
            Permutation p = parse_permutation(iso_check);
            bool ok = check_isomorphism(a, b, p);
            if (ok && !iso_fix.empty()) {
                auto fix = check_vertex_set(a, parse_int_list(iso_fix));
                for (int v : fix)
                    if (!std::binary_search(fix.begin(), fix.end(), p(v))) ok = false;
            }
            j["witness"] = permutation_json(p);
            j["witness_valid"] = ok;
            emit(j);
            if (!ok) rc = 1;
            return;
        }
        std::optional<Permutation> found;
        if (iso_fix.empty()) {
            found = are_isomorphic(a, b);
        } else {
            j["fixed_set"] = parse_int_list(iso_fix);
            found = isomorphism_fixing_set(a, b, parse_int_list(iso_fix));
        }
        j["isomorphic"] = found.has_value();
        if (found) j["witness"] = permutation_json(*found);
        emit(j);
        if (!found) rc = 1;
    });

    // ---- aut ----
    auto* aut_cmd = app.add_subcommand("aut", "automorphism group (generators, order, orbits)");
    std::string aut_graph;
    aut_cmd->add_option("graph", aut_graph)->required();
    aut_cmd->callback([&] {
        Graph g = load_graph(aut_graph);
        emit(automorphism_group_json(automorphism_group(g)));
    });

    // ---- invariants ----
    auto* inv_cmd = app.add_subcommand("invariants", "switching-set reports for one set");
    std::string inv_graph, inv_set;
    inv_cmd->add_option("graph", inv_graph)->required();
    inv_cmd->add_option("--set", inv_set)->required();
    inv_cmd->callback([&] {
        Graph g = load_graph(inv_graph);
        auto x = parse_int_list(inv_set);
        ValidationReport vr = validate_partition(g, SwitchingPartition::single(x));
        json j;
        j["validation"] = validation_json(vr);
        if (!vr.valid) {
            emit(j);
            rc = 1;
            return;
        }
        j["block"] = block_decomposition_json(block_decomposition(g, x));
        j["lemma3"] = lemma3_json(lemma3_check(g, x));
        std::vector<int> mu;
        for (int v : vr.cells[0]) mu.push_back(retained_neighbor_count(g, x, v));
        j["mu"] = mu;
        emit(j);
    });

    // ---- thm4 ----
    auto* t4_cmd = app.add_subcommand("thm4", "product-construction hypothesis check");
    std::string t4_g, t4_h, t4_set, t4_kind;
    int t4_vertex = 0;
    t4_cmd->add_option("graph", t4_g, "base graph carrying the switching set")->required();
    t4_cmd->add_option("host", t4_h, "factor graph providing the lift vertex")->required();
    t4_cmd->add_option("--set", t4_set)->required();
    t4_cmd->add_option("--vertex", t4_vertex)->required();
    t4_cmd->add_option("--kind", t4_kind)->required()->check(
        CLI::IsMember({"tensor", "strengthened"}));
    t4_cmd->callback([&] {
        Graph g = load_graph(t4_g), h = load_graph(t4_h);
        auto x = parse_int_list(t4_set);
        ProductKind kind = product_kind_from_string(t4_kind);
        Theorem4Report rep = theorem4_hypothesis(g, x, h, t4_vertex);
        json j = theorem4_json(rep);
        j["kind"] = t4_kind;
        j["satisfied"] = rep.hypothesis_satisfied(kind);
        emit(j);
        if (!rep.hypothesis_satisfied(kind)) rc = 1;
    });

    // ---- product ----
    auto* pr_cmd = app.add_subcommand("product", "tensor / strengthened tensor product");
    std::string pr_h, pr_g, pr_kind, pr_set, pr_output = "json";
    int pr_vertex = -1;
    pr_cmd->add_option("host", pr_h, "left factor")->required();
    pr_cmd->add_option("graph", pr_g, "right factor")->required();
    pr_cmd->add_option("--kind", pr_kind)->required()->check(
        CLI::IsMember({"tensor", "strengthened"}));
    pr_cmd->add_option("--set", pr_set, "switching set of the right factor to lift");
    pr_cmd->add_option("--lift-vertex", pr_vertex, "host vertex for the lifted set");
    pr_cmd->add_option("--output", pr_output)->check(CLI::IsMember({"json", "g6"}));
    pr_cmd->callback([&] {
        Graph h = load_graph(pr_h), g = load_graph(pr_g);
        ProductKind kind = product_kind_from_string(pr_kind);
        Graph p = product(kind, h, g);
        if (pr_output == "g6" && pr_set.empty()) {
            std::cout << to_graph6(p) << "\n";
            return;
        }
        json j = graph_json(p);
        j["kind"] = pr_kind;
        if (!pr_set.empty()) {
            auto x = parse_int_list(pr_set);
            j["partition"] = product_switching_partition(h, x, g).cells;
            if (pr_vertex >= 0) j["lifted_set"] = lift_switching_set(h, pr_vertex, x, g);
        }
        emit(j);
    });

    // ---- fixture ----
    auto* fx_cmd = app.add_subcommand("fixture", "built-in graphs and matrices");
    std::string fx_name, fx_output = "json";
    fx_cmd->add_option("name", fx_name,
                       "m5 | bipartite18 | gadget9 | example27 | grid:L,M | triangular:M | "
                       "tournament:M")
        ->required();
    fx_cmd->add_option("--output", fx_output)->check(CLI::IsMember({"json", "g6"}));
    fx_cmd->callback([&] {
        if (fx_name.rfind("tournament:", 0) == 0) {
            int m = std::stoi(fx_name.substr(11));
            TournamentMatrix t = cyclic_tournament(m);
            json j;
            j["name"] = fx_name;
            j["m"] = t.m;
            j["entries"] = t.entries;
            emit(j);
            return;
        }
        Fixture f = fixture_by_name(fx_name);
        if (fx_output == "g6") {
            std::cout << to_graph6(f.graph) << "\n";
            return;
        }
        json j;
        j["name"] = f.name;
        j["graph6"] = to_graph6(f.graph);
        j["n"] = f.graph.order();
        j["edges"] = f.graph.edge_count();
        if (f.set) j["set"] = *f.set;
        emit(j);
    });

    // ---- verify ----
    auto* vf_cmd = app.add_subcommand("verify", "run the built-in verification scenarios");
    std::string vf_which = "all";
    vf_cmd->add_option("scenario", vf_which, "scenario id (1..10) or 'all'");
    vf_cmd->callback([&] {
        std::vector<scenarios::ScenarioResult> results;
        if (vf_which == "all") {
            results = scenarios::run_all_scenarios();
        } else {
            results.push_back(scenarios::run_scenario(vf_which));
        }
        for (const auto& r : results) {
            std::cout << (r.passed ? "[PASS]" : "[FAIL]") << " " << r.id << " " << r.title << ": "
                      << r.detail << " (" << std::fixed << std::setprecision(2) << r.seconds
                      << "s)\n";
            if (!r.passed) rc = 1;
        }
    });

    // ---- census ----
    auto* cn_cmd = app.add_subcommand("census", "scan a graph6 catalog, one JSON line per graph");
    std::string cn_file;
    int cn_size = 4;
    bool cn_cocl = false;
    long cn_start = 0, cn_count = -1;
    cn_cmd->add_option("file", cn_file, "graph6 file, one graph per line, or -")->required();
    cn_cmd->add_option("--size", cn_size, "switching-set size (default 4)");
    cn_cmd->add_flag("--cocliques-only", cn_cocl);
    cn_cmd->add_option("--start", cn_start, "skip input lines with number <= START (resume)");
    cn_cmd->add_option("--count", cn_count, "process at most COUNT graphs");
    cn_cmd->callback([&] {
        std::ifstream file_stream;
        std::istream* in = &std::cin;
        if (cn_file != "-") {
            file_stream.open(cn_file);
            if (!file_stream) throw std::runtime_error("cannot open " + cn_file);
            in = &file_stream;
        }
        std::vector<std::pair<long, std::string>> jobs;
        std::string line;
        long line_no = 0;
        while (std::getline(*in, line)) {
            ++line_no;
            if (line_no <= cn_start) continue;
            std::string t = trim(line);
            if (t.empty() || t[0] == '>') continue;  // blank lines and >>header<< lines
            jobs.emplace_back(line_no, t);
            if (cn_count >= 0 && static_cast<long>(jobs.size()) >= cn_count) break;
        }
        const int threads = census_threads();
        std::atomic<bool> had_error{false};
        const std::size_t chunk = static_cast<std::size_t>(threads) * 8;
        for (std::size_t begin = 0; begin < jobs.size(); begin += chunk) {
            const std::size_t end = std::min(jobs.size(), begin + chunk);
            std::vector<std::string> results(end - begin);
            std::atomic<std::size_t> next{begin};
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (std::size_t i = next++; i < end; i = next++)
                        results[i - begin] = census_record(jobs[i].first, jobs[i].second, cn_size,
                                                           cn_cocl, &had_error);
                });
            for (auto& th : pool) th.join();
            for (const auto& r : results) std::cout << r << "\n";
        }
        if (had_error) rc = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
