#include "crn/hypergraph.hpp"

#include <algorithm>
#include <charconv>

namespace crn {

std::string vertex_name(VertexId v) {
  return (v.side == Side::Reactant ? "u" : "v") + std::to_string(v.reaction);
}

namespace {

std::optional<std::size_t> parse_index(std::string_view digits) {
  if (digits.empty()) return std::nullopt;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

}  // namespace

VertexId parse_vertex(std::string_view name) {
  if (name.size() >= 2 && (name[0] == 'u' || name[0] == 'v')) {
    if (auto idx = parse_index(name.substr(1)); idx && *idx > 0) {
      return VertexId{*idx, name[0] == 'u' ? Side::Reactant : Side::Product};
    }
  }
  throw Error("malformed vertex name '" + std::string(name) + "' (expected u<i> or v<i>)");
}

NetworkHypergraph::NetworkHypergraph(const Network& n)
    : species_(n.species()),
      reaction_count_(n.reaction_count()),
      species_edges_(n.species_count()),
      reaction_edges_(n.reaction_count()) {
  for (const auto& r : n.reactions()) {
    VertexId u{r.index, Side::Reactant};
    VertexId v{r.index, Side::Product};
    vertices_.push_back(u);
    vertices_.push_back(v);
    for (auto [s, e] : r.reactant.exponents()) species_edges_.at(s).push_back(u);
    for (auto [s, e] : r.product.exponents()) species_edges_.at(s).push_back(v);
    if (!r.product.empty()) reaction_edges_[r.index - 1] = {u, v};
  }
}

bool NetworkHypergraph::has_vertex(VertexId v) const {
  return v.reaction >= 1 && v.reaction <= reaction_count_;
}

std::size_t NetworkHypergraph::vertex_position(VertexId v) const {
  if (!has_vertex(v)) throw Error("unknown vertex " + vertex_name(v));
  return 2 * (v.reaction - 1) + (v.side == Side::Product ? 1 : 0);
}

std::vector<EdgeId> NetworkHypergraph::edges() const {
  std::vector<EdgeId> out;
  for (std::size_t s = 0; s < species_edges_.size(); ++s) out.push_back(EdgeId::species(s));
  for (std::size_t i = 1; i <= reaction_edges_.size(); ++i) out.push_back(EdgeId::reaction(i));
  return out;
}

bool NetworkHypergraph::has_edge(EdgeId e) const {
  if (e.kind == EdgeKind::Species) return e.index < species_edges_.size();
  return e.index >= 1 && e.index <= reaction_edges_.size();
}

const std::vector<VertexId>& NetworkHypergraph::members(EdgeId e) const {
  if (!has_edge(e)) throw Error("unknown edge");
  return e.kind == EdgeKind::Species ? species_edges_[e.index] : reaction_edges_[e.index - 1];
}

bool NetworkHypergraph::covers(EdgeId e, VertexId v) const {
  const auto& m = members(e);
  return std::find(m.begin(), m.end(), v) != m.end();
}

std::string NetworkHypergraph::edge_name(EdgeId e) const {
  if (e.kind == EdgeKind::Reaction) return "E_r" + std::to_string(e.index);
  return "E_" + (e.index < species_.size() ? species_[e.index] : "?" + std::to_string(e.index));
}

EdgeId NetworkHypergraph::parse_edge(std::string_view name) const {
  if (name.starts_with("E_")) {
    auto rest = name.substr(2);
    for (std::size_t s = 0; s < species_.size(); ++s) {
      if (species_[s] == rest) return EdgeId::species(s);
    }
    if (rest.starts_with("r")) {
      if (auto idx = parse_index(rest.substr(1)); idx && *idx >= 1 && *idx <= reaction_count_) {
        return EdgeId::reaction(*idx);
      }
    }
  }
  throw Error("unknown edge '" + std::string(name) + "'");
}

std::size_t IncidenceMatrix::row_of(VertexId v) const {
  auto it = std::find(rows.begin(), rows.end(), v);
  if (it == rows.end()) throw Error("unknown vertex " + vertex_name(v));
  return static_cast<std::size_t>(it - rows.begin());
}

IncidenceMatrix incidence_matrix(const NetworkHypergraph& h, const std::set<EdgeId>& forbidden) {
  for (const auto& e : forbidden) {
    if (!h.has_edge(e)) throw Error("unknown edge in forbidden set");
  }
  IncidenceMatrix m;
  m.rows = h.vertices();
  for (const auto& e : h.edges()) {
    if (forbidden.contains(e) || h.members(e).empty()) continue;
    m.columns.push_back(e);
  }
  m.entries.assign(m.rows.size(), std::vector<int>(m.columns.size(), 0));
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    for (const auto& v : h.members(m.columns[c])) m.entries[h.vertex_position(v)][c] = 1;
  }
  return m;
}

RatePolynomial species_edge_polynomial(const Network& n, const NetworkHypergraph& h, std::size_t species) {
  if (!is_zero_one(n)) throw Error("species-edge polynomial requires a 0,1-network");
  RatePolynomial p;
  for (const auto& v : h.members(EdgeId::species(species))) {
    const auto& r = n.reaction(v.reaction);
    p.add_term(RateMonomial{r.index, r.rate, r.reactant}, v.side == Side::Product ? 1 : -1);
  }
  return p;
}

std::string hypergraph_to_dot(const Network& n, const NetworkHypergraph& h) {
  static constexpr const char* palette[] = {"lightblue", "palegreen", "lightpink", "khaki",
                                            "orange",    "plum",      "lightgray", "cyan"};
  std::string out = "graph hypergraph {\n  compound=true;\n  node [shape=circle];\n";
  for (const auto& v : h.vertices()) {
    const auto& r = n.reaction(v.reaction);
    const Complex& y = v.side == Side::Reactant ? r.reactant : r.product;
    out += "  " + vertex_name(v) + " [label=\"" + vertex_name(v) + "=" + format_complex(y, n.species()) + "\"];\n";
  }
  // Graphviz clusters cannot overlap, so each species edge gets its own
  // colored hub node joined to the vertices it covers.
  for (std::size_t s = 0; s < h.species().size(); ++s) {
    EdgeId e = EdgeId::species(s);
    std::string hub = "E_" + std::to_string(s);
    const char* color = palette[s % std::size(palette)];
    out += "  \"" + hub + "\" [shape=box, style=filled, fillcolor=" + color + ", label=\"" + h.edge_name(e) + "\"];\n";
    for (const auto& v : h.members(e)) {
      out += "  \"" + hub + "\" -- " + vertex_name(v) + " [color=" + color + "];\n";
    }
  }
  for (std::size_t i = 1; i <= h.reaction_count(); ++i) {
    const auto& m = h.members(EdgeId::reaction(i));
    if (m.size() == 2) {
      out += "  " + vertex_name(m[0]) + " -- " + vertex_name(m[1]) + " [label=\"E_r" + std::to_string(i) + "\", penwidth=2];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace crn
