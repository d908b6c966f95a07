#ifndef CRN_HYPERGRAPH_HPP
#define CRN_HYPERGRAPH_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crn/massaction.hpp"
#include "crn/network.hpp"

namespace crn {

enum class Side { Reactant, Product };

/// u<i> (reactant side) or v<i> (product side) of reaction i.
struct VertexId {
  std::size_t reaction = 0;  // 1-based
  Side side = Side::Reactant;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

enum class EdgeKind { Species, Reaction };

/// E_<species> (index is the species index) or E_r<i> (index is the
/// 1-based reaction index).
struct EdgeId {
  EdgeKind kind = EdgeKind::Species;
  std::size_t index = 0;

  static EdgeId species(std::size_t s) { return {EdgeKind::Species, s}; }
  static EdgeId reaction(std::size_t i) { return {EdgeKind::Reaction, i}; }

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

std::string vertex_name(VertexId v);
/// Accepts `u3` / `v3`; throws Error on malformed names.
VertexId parse_vertex(std::string_view name);

class NetworkHypergraph {
 public:
  explicit NetworkHypergraph(const Network& n);

  const std::vector<std::string>& species() const noexcept { return species_; }
  std::size_t reaction_count() const noexcept { return reaction_count_; }

  /// u1, v1, u2, v2, ... including isolated product vertices of degradations.
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  bool has_vertex(VertexId v) const;
  std::size_t vertex_position(VertexId v) const;

  /// Species edges in species order, then reaction edges in reaction order
  /// (empty reaction edges included).
  std::vector<EdgeId> edges() const;
  bool has_edge(EdgeId e) const;
  const std::vector<VertexId>& members(EdgeId e) const;
  bool covers(EdgeId e, VertexId v) const;

  std::string edge_name(EdgeId e) const;
  /// Accepts `E_<species>` / `E_r<i>`; throws Error when the edge is unknown.
  EdgeId parse_edge(std::string_view name) const;

 private:
  std::vector<std::string> species_;
  std::size_t reaction_count_ = 0;
  std::vector<VertexId> vertices_;
  std::vector<std::vector<VertexId>> species_edges_;
  std::vector<std::vector<VertexId>> reaction_edges_;
};

inline NetworkHypergraph build_hypergraph(const Network& n) { return NetworkHypergraph(n); }

/// 0/1 vertex-by-edge matrix over the nonempty, non-forbidden edges.
struct IncidenceMatrix {
  std::vector<VertexId> rows;
  std::vector<EdgeId> columns;
  std::vector<std::vector<int>> entries;  // entries[row][column]

  std::size_t row_of(VertexId v) const;
  int at(std::size_t row, std::size_t col) const { return entries[row][col]; }
};

IncidenceMatrix incidence_matrix(const NetworkHypergraph& h, const std::set<EdgeId>& forbidden = {});

/// sum over v_i in E_s of kappa_i x^{y_i} minus sum over u_i in E_s of the
/// same; coincides with the mass-action derivative on 0,1-networks.
RatePolynomial species_edge_polynomial(const Network& n, const NetworkHypergraph& h, std::size_t species);

std::string hypergraph_to_dot(const Network& n, const NetworkHypergraph& h);

}  // namespace crn

#endif  // CRN_HYPERGRAPH_HPP
