#include "gm/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "gm/graph6.hpp"

namespace gm {

json graph_json(const Graph& g) {
    json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    return j;
}

json polynomial_json(const IntPolynomial& p) {
    json j;
    j["degree"] = p.degree();
    j["coefficients"] = p.coefficient_strings();  // ascending, exact decimal
    j["pretty"] = p.str();
    return j;
}

json multiset_json(const Multiset& m) { return json(m.values); }

json permutation_json(const Permutation& p) { return json(p.map); }

json validation_json(const ValidationReport& r) {
    json j;
    j["valid"] = r.valid;
    j["cells"] = r.cells;
    j["cell_degrees"] = r.cell_degrees;
    j["y_vertices"] = r.y_vertices;
    json classes = json::array();
    for (const auto& row : r.y_classes) {
        json jr = json::array();
        for (YClass c : row) jr.push_back(y_class_name(c));
        classes.push_back(std::move(jr));
    }
    j["y_classes"] = std::move(classes);
    return j;
}

json block_decomposition_json(const BlockDecomposition& d) {
    json j;
    j["x"] = d.x;
    j["b"] = d.b;
    j["n"] = d.n;
    j["half_vertices"] = d.half_vertices;
    j["full_vertices"] = d.full_vertices;
    j["zero_vertices"] = d.zero_vertices;
    j["cell_degree"] = d.cell_degree;
    return j;
}

json lemma3_json(const Lemma3Report& r) {
    json j;
    j["cond_i"] = r.cond_i;
    j["cond_ii"] = r.cond_ii;
    j["cond_iii"] = r.cond_iii;
    j["certifies_nonisomorphic"] = r.any();
    j["same_degree_on_x"] = r.same_degree_on_x;
    j["x_degrees_before"] = multiset_json(r.x_degrees_before);
    j["x_degrees_after"] = multiset_json(r.x_degrees_after);
    j["lambda_before"] = multiset_json(r.lambda_before);
    j["lambda_after"] = multiset_json(r.lambda_after);
    j["lambda_bar_before"] = multiset_json(r.lambda_bar_before);
    j["lambda_bar_after"] = multiset_json(r.lambda_bar_after);
    return j;
}

json theorem4_json(const Theorem4Report& r) {
    json j;
    j["same_degree_on_x"] = r.same_degree_on_x;
    j["lambda_bar_invariant"] = r.lambda_bar_invariant;
    j["case_coclique"] = r.case_coclique;
    j["case_halfregular"] = r.case_halfregular;
    j["vertex_condition_tensor"] = r.vertex_condition_tensor;
    j["vertex_condition_strengthened"] = r.vertex_condition_strengthened;
    j["satisfied_tensor"] = r.hypothesis_satisfied(ProductKind::Tensor);
    j["satisfied_strengthened"] = r.hypothesis_satisfied(ProductKind::Strengthened);
    return j;
}

json automorphism_group_json(const AutomorphismGroup& a) {
    json j;
    json gens = json::array();
    for (const Permutation& p : a.generators) gens.push_back(p.map);
    j["generators"] = std::move(gens);
    j["order"] = a.order.get_str();
    j["orbits"] = a.orbits;
    return j;
}

json prop4_json(const Prop4Report& r) {
    json j;
    j["rho_is_automorphism"] = r.rho_is_automorphism;
    j["rho_fixed_point_free_involution"] = r.rho_fixed_point_free_involution;
    j["aut_orbits_are_pairs"] = r.aut_orbits_are_pairs;
    j["regular"] = r.regular;
    j["all"] = r.all();
    return j;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in list: " + s);
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

SwitchingPartition parse_partition(const std::string& s) {
    SwitchingPartition p;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ';')) p.cells.push_back(parse_int_list(cell));
    if (p.cells.empty()) throw std::invalid_argument("empty partition");
    return p;
}

Permutation parse_permutation(const std::string& s) { return Permutation(parse_int_list(s)); }

}  // namespace gm
