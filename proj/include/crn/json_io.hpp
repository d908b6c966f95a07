#ifndef CRN_JSON_IO_HPP
#define CRN_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "crn/balance.hpp"
#include "crn/groebner.hpp"
#include "crn/hypergraph.hpp"
#include "crn/network.hpp"
#include "crn/transforms.hpp"

namespace crn {

using Json = nlohmann::ordered_json;

Json network_to_json(const Network& n);
/// Inverse of network_to_json; species missing from "species" are appended
/// in order of appearance. Throws Error on malformed or invalid networks.
Network network_from_json(const Json& j);
Json hypergraph_to_json(const NetworkHypergraph& h);
Json certificate_to_json(const Network& n, const NetworkHypergraph& h, const BalanceCertificate& c);
Json obstruction_to_json(const Network& n, const Obstruction& o);
Json transcript_to_json(const Network& input, const Transcript& t);
Json verdict_to_json(const Verdict& v);
Json polynomials_to_json(const std::vector<QPolynomial>& ps);

/// Script format: a JSON array of
///   {"op": "add_product_species", "reaction": i, "species": "S"}
///   {"op": "add_reactant_species", "reaction": i, "species": "S", "aux": j}
///   {"op": "add_degradation", "reaction": i}
std::vector<TransformRequest> parse_script(const std::string& text);
std::vector<TransformRequest> parse_script_file(const std::string& path);

}  // namespace crn

#endif  // CRN_JSON_IO_HPP
