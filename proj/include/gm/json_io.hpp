#ifndef GM_JSON_IO_HPP
#define GM_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gm/constructions.hpp"
#include "gm/graph.hpp"
#include "gm/invariants.hpp"
#include "gm/isomorphism.hpp"
#include "gm/permutation.hpp"
#include "gm/spectrum.hpp"
#include "gm/switching.hpp"

namespace gm {

using json = nlohmann::ordered_json;

json graph_json(const Graph& g);
json polynomial_json(const IntPolynomial& p);
json multiset_json(const Multiset& m);
json permutation_json(const Permutation& p);
json validation_json(const ValidationReport& r);
json block_decomposition_json(const BlockDecomposition& d);
json lemma3_json(const Lemma3Report& r);
json theorem4_json(const Theorem4Report& r);
json automorphism_group_json(const AutomorphismGroup& a);
json prop4_json(const Prop4Report& r);

// "1,2,3" -> {1,2,3}; throws std::invalid_argument on junk.
std::vector<int> parse_int_list(const std::string& s);

// Cells separated by ';', vertices by ',': "0,1;2,3".
SwitchingPartition parse_partition(const std::string& s);

// Cycle-free one-line permutation "3,2,1,0".
Permutation parse_permutation(const std::string& s);

}  // namespace gm

#endif
