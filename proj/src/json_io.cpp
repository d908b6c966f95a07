#include "crn/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace crn {

namespace {

Json complex_to_json(const Complex& c, const std::vector<std::string>& species) {
  Json out = Json::object();
  for (const auto& [s, e] : c.exponents()) out[species[s]] = e;
  return out;
}

Json colored_to_json(const NetworkHypergraph& h, const std::map<EdgeId, std::uint64_t>& m) {
  Json out = Json::object();
  for (const auto& [e, k] : m) out[h.edge_name(e)] = k;
  return out;
}

}  // namespace

Json network_to_json(const Network& n) {
  Json out;
  out["species"] = n.species();
  Json rs = Json::array();
  for (const auto& r : n.reactions()) {
    rs.push_back({{"reactant", complex_to_json(r.reactant, n.species())},
                  {"product", complex_to_json(r.product, n.species())},
                  {"rate", r.rate}});
  }
  out["reactions"] = std::move(rs);
  return out;
}

Network network_from_json(const Json& j) {
  auto fail = [](const std::string& msg) { return Error("network JSON: " + msg); };
  if (!j.is_object() || !j.contains("reactions") || !j["reactions"].is_array()) throw fail("expected {\"reactions\": [...]}");
  std::vector<std::string> species;
  if (j.contains("species")) {
    if (!j["species"].is_array()) throw fail("\"species\" must be an array");
    for (const auto& s : j["species"]) {
      if (!s.is_string()) throw fail("species names must be strings");
      if (std::find(species.begin(), species.end(), s.get<std::string>()) != species.end()) {
        throw fail("duplicate species " + s.get<std::string>());
      }
      species.push_back(s.get<std::string>());
    }
  }
  auto side = [&](const Json& c) {
    if (!c.is_object()) throw fail("complexes must be objects");
    Complex y;
    for (const auto& [name, e] : c.items()) {
      if (!e.is_number_unsigned() || e.get<unsigned>() == 0) throw fail("exponent of " + name + " must be a positive integer");
      auto it = std::find(species.begin(), species.end(), name);
      if (it == species.end()) {
        species.push_back(name);
        it = species.end() - 1;
      }
      y.set(static_cast<std::size_t>(it - species.begin()), e.get<unsigned>());
    }
    return y;
  };
  std::vector<Reaction> reactions;
  for (const auto& r : j["reactions"]) {
    if (!r.is_object() || !r.contains("reactant") || !r.contains("product") || !r.contains("rate") || !r["rate"].is_string()) {
      throw fail("each reaction needs reactant, product and rate");
    }
    Complex y = side(r["reactant"]);
    Complex y2 = side(r["product"]);
    reactions.push_back(Reaction{reactions.size() + 1, std::move(y), std::move(y2), r["rate"].get<std::string>()});
  }
  Network n(std::move(species), std::move(reactions));
  ValidationReport rep = validate_network(n);
  if (!rep.ok()) throw fail(std::string(to_string(rep.findings.front().kind)) + ": " + rep.findings.front().detail);
  return n;
}

Json hypergraph_to_json(const NetworkHypergraph& h) {
  Json out;
  Json vs = Json::array();
  for (const auto& v : h.vertices()) vs.push_back(vertex_name(v));
  out["vertices"] = std::move(vs);
  Json species_edges = Json::object();
  Json reaction_edges = Json::object();
  for (const auto& e : h.edges()) {
    Json members = Json::array();
    for (const auto& v : h.members(e)) members.push_back(vertex_name(v));
    (e.kind == EdgeKind::Species ? species_edges : reaction_edges)[h.edge_name(e)] = std::move(members);
  }
  out["species_edges"] = std::move(species_edges);
  out["reaction_edges"] = std::move(reaction_edges);
  return out;
}

Json certificate_to_json(const Network& n, const NetworkHypergraph& h, const BalanceCertificate& c) {
  const Reaction& r = n.reaction(c.target.reaction);
  return Json{{"vertex", vertex_name(c.target)},
              {"red", colored_to_json(h, c.red)},
              {"blue", colored_to_json(h, c.blue)},
              {"k", c.k},
              {"monomial", format_monomial(r.reactant, n.species())},
              {"rate", r.rate}};
}

Json obstruction_to_json(const Network& n, const Obstruction& o) {
  Json out{{"kind", to_string(o.kind)}, {"reactions", o.reactions}};
  if (!o.cycle.empty()) {
    Json cycle = Json::array();
    for (const auto& c : o.cycle) cycle.push_back(format_complex(c, n.species()));
    out["cycle"] = std::move(cycle);
  }
  return out;
}

Json transcript_to_json(const Network& input, const Transcript& t) {
  Json out{{"op", to_string(t.op)}, {"reaction", t.reaction}};
  if (t.species) out["species"] = *t.species;
  if (t.aux_reaction) out["aux"] = *t.aux_reaction;
  NetworkHypergraph h(input);
  out["certificate"] = certificate_to_json(input, h, t.certificate);
  out["new_rate"] = t.new_rate;
  return out;
}

Json polynomials_to_json(const std::vector<QPolynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json verdict_to_json(const Verdict& v) {
  Json out{{"answer", to_string(v.answer)},
           {"trials", v.trials},
           {"seed", v.seed},
           {"order", to_string(v.order)},
           {"species", v.context.species},
           {"rates", v.context.rates}};
  Json records = Json::array();
  for (const auto& r : v.records) {
    Json kappa = Json::object();
    for (const auto& [label, q] : r.kappa) kappa[label] = q.get_str();
    Json ideals = Json::array();
    for (const auto& ideal : r.ideals) {
      ideals.push_back({{"name", ideal.name},
                        {"generators", polynomials_to_json(ideal.generators)},
                        {"basis", polynomials_to_json(ideal.basis)}});
    }
    Json rec{{"trial", r.index}, {"answer", to_string(r.answer)}, {"kappa", std::move(kappa)}, {"ideals", std::move(ideals)}};
    if (r.witness) {
      rec["witness"] = {{"description", r.witness->description},
                        {"polynomial", r.witness->polynomial.to_string()},
                        {"normal_form", r.witness->remainder.to_string()}};
    }
    records.push_back(std::move(rec));
  }
  out["records"] = std::move(records);
  return out;
}

std::vector<TransformRequest> parse_script(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("script: ") + e.what());
  }
  if (!doc.is_array()) throw Error("script: expected a JSON array of operations");
  std::vector<TransformRequest> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const Json& step = doc[k];
    auto fail = [&](const std::string& msg) { return Error("script step " + std::to_string(k + 1) + ": " + msg); };
    if (!step.is_object() || !step.contains("op") || !step["op"].is_string()) throw fail("missing \"op\"");
    auto index = [&](const char* key) -> std::size_t {
      if (!step.contains(key) || !step[key].is_number_unsigned()) throw fail(std::string("missing or invalid \"") + key + "\"");
      return step[key].get<std::size_t>();
    };
    auto name = [&](const char* key) -> std::string {
      if (!step.contains(key) || !step[key].is_string()) throw fail(std::string("missing or invalid \"") + key + "\"");
      return step[key].get<std::string>();
    };
    const std::string op = step["op"].get<std::string>();
    if (op == "add_product_species") {
      out.push_back(ProductRequest{index("reaction"), name("species")});
    } else if (op == "add_reactant_species") {
      out.push_back(ReactantRequest{index("reaction"), name("species"), index("aux")});
    } else if (op == "add_degradation") {
      out.push_back(DegradationRequest{index("reaction")});
    } else {
      throw fail("unknown op \"" + op + "\"");
    }
  }
  return out;
}

std::vector<TransformRequest> parse_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_script(buf.str());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace crn
