#include "crn/balance.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "crn/linear.hpp"

namespace crn {

std::int64_t BalanceCertificate::signed_multiplicity(EdgeId e) const {
  std::int64_t z = 0;
  if (auto it = red.find(e); it != red.end()) z += static_cast<std::int64_t>(it->second);
  if (auto it = blue.find(e); it != blue.end()) z -= static_cast<std::int64_t>(it->second);
  return z;
}

std::set<EdgeId> BalanceCertificate::support() const {
  std::set<EdgeId> out;
  for (const auto& [e, m] : red) out.insert(e);
  for (const auto& [e, m] : blue) out.insert(e);
  return out;
}

// ---------------------------------------------------------------------------
// Linear-feasibility search

namespace {

IntMatrix columns_of(const IncidenceMatrix& m, const std::vector<std::size_t>& cols) {
  IntMatrix a(m.rows.size(), std::vector<Integer>(cols.size()));
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) a[r][c] = m.entries[r][cols[c]];
  }
  return a;
}

std::optional<std::vector<Rational>> solve_on(const IncidenceMatrix& m, const std::vector<std::size_t>& cols,
                                              const std::vector<Integer>& rhs) {
  return solve_exact(columns_of(m, cols), rhs);
}

// Advances `comb` (strictly increasing indices below n) to the next
// combination in lexicographic order.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

BalanceCertificate make_certificate(const IncidenceMatrix& m, VertexId v, std::size_t target_row,
                                    const std::vector<std::size_t>& cols, const std::vector<Rational>& z) {
  auto ints = primitive_integer_vector(z);
  Integer k = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) k += ints[c] * m.entries[target_row][cols[c]];
  if (k < 0) {
    for (auto& x : ints) x = -x;
    k = -k;
  }
  auto to_u64 = [](const Integer& x) {
    if (!mpz_fits_ulong_p(x.get_mpz_t())) throw Error("certificate multiplicity exceeds 64 bits");
    return static_cast<std::uint64_t>(x.get_ui());
  };
  BalanceCertificate cert;
  cert.target = v;
  cert.k = to_u64(k);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (ints[c] > 0) cert.red[m.columns[cols[c]]] = to_u64(ints[c]);
    if (ints[c] < 0) cert.blue[m.columns[cols[c]]] = to_u64(Integer(-ints[c]));
  }
  return cert;
}

}  // namespace

std::optional<BalanceCertificate> find_certificate(const NetworkHypergraph& h, VertexId v,
                                                   const std::set<EdgeId>& forbidden) {
  if (!h.has_vertex(v)) throw Error("unknown vertex " + vertex_name(v));
  IncidenceMatrix m = incidence_matrix(h, forbidden);
  const std::size_t target = m.row_of(v);
  std::vector<Integer> rhs(m.rows.size(), 0);
  rhs[target] = 1;

  std::vector<std::size_t> all(m.columns.size());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;
  auto full = solve_on(m, all, rhs);
  if (!full) return std::nullopt;

  // Minimum support: the smallest column subset whose span contains e_v.
  const std::size_t rk = rank(columns_of(m, all));
  std::size_t budget = kSupportSearchLimit;
  for (std::size_t t = 1; t <= rk && budget > 0; ++t) {
    std::vector<std::size_t> comb(t);
    for (std::size_t i = 0; i < t; ++i) comb[i] = i;
    do {
      if (budget-- == 0) break;
      bool touches = std::any_of(comb.begin(), comb.end(), [&](std::size_t c) { return m.entries[target][c] != 0; });
      if (!touches) continue;
      if (auto z = solve_on(m, comb, rhs)) return make_certificate(m, v, target, comb, *z);
    } while (next_combination(comb, all.size()));
  }

  // Budget exhausted: drop columns greedily while e_v stays in the span.
  std::vector<std::size_t> keep = all;
  for (std::size_t c = 0; c < all.size(); ++c) {
    std::vector<std::size_t> trial;
    std::copy_if(keep.begin(), keep.end(), std::back_inserter(trial), [&](std::size_t x) { return x != all[c]; });
    if (solve_on(m, trial, rhs)) keep = std::move(trial);
  }
  return make_certificate(m, v, target, keep, *solve_on(m, keep, rhs));
}

// ---------------------------------------------------------------------------
// Verification

void check_degrees(const NetworkHypergraph& h, VertexId v, const BalanceCertificate& cert) {
  if (!h.has_vertex(v)) throw CertificateError(CertificateFailure::UnknownEdge, "unknown vertex " + vertex_name(v));
  for (const auto* side : {&cert.red, &cert.blue}) {
    for (const auto& [e, mult] : *side) {
      if (!h.has_edge(e)) throw CertificateError(CertificateFailure::UnknownEdge, "certificate uses an unknown edge");
      if (mult == 0) throw CertificateError(CertificateFailure::NotReduced, "zero multiplicity on " + h.edge_name(e));
      if (side == &cert.red && cert.blue.contains(e)) {
        throw CertificateError(CertificateFailure::NotReduced, h.edge_name(e) + " is both red and blue");
      }
    }
  }
  for (const auto& w : h.vertices()) {
    std::int64_t diff = 0;
    for (const auto& [e, mult] : cert.red) {
      if (h.covers(e, w)) diff += static_cast<std::int64_t>(mult);
    }
    for (const auto& [e, mult] : cert.blue) {
      if (h.covers(e, w)) diff -= static_cast<std::int64_t>(mult);
    }
    if (w == v) {
      if (diff <= 0) {
        throw CertificateError(CertificateFailure::DegreeImbalance,
                               vertex_name(w) + " has red-minus-blue degree " + std::to_string(diff) + " (need > 0)");
      }
      if (static_cast<std::uint64_t>(diff) != cert.k) {
        throw CertificateError(CertificateFailure::ExcessMismatch,
                               "excess at " + vertex_name(w) + " is " + std::to_string(diff) + ", certificate claims " +
                                   std::to_string(cert.k));
      }
    } else if (diff != 0) {
      throw CertificateError(CertificateFailure::DegreeImbalance,
                             vertex_name(w) + " unbalanced (red-minus-blue degree " + std::to_string(diff) + ")");
    }
  }
}

VerifiedTerm verify_certificate(const Network& n, VertexId v, const BalanceCertificate& cert) {
  if (!is_zero_one(n)) throw CertificateError(CertificateFailure::NotZeroOne, "certificate verification needs a 0,1-network");
  NetworkHypergraph h(n);
  check_degrees(h, v, cert);

  SteadyStateSystem sys = steady_state_system(n);
  RatePolynomial sum;
  auto accumulate = [&](const std::map<EdgeId, std::uint64_t>& side, std::int64_t sign) {
    for (const auto& [e, mult] : side) {
      if (e.kind != EdgeKind::Species) continue;
      sum += (sign * static_cast<std::int64_t>(mult)) * sys.of(e.index);
    }
  };
  const std::int64_t red_sign = v.side == Side::Reactant ? -1 : 1;
  accumulate(cert.red, red_sign);
  accumulate(cert.blue, -red_sign);

  const Reaction& r = n.reaction(v.reaction);
  RatePolynomial expected = RatePolynomial::term(r.index, r.rate, r.reactant, static_cast<std::int64_t>(cert.k));
  if (sum != expected) {
    throw CertificateError(CertificateFailure::ResidualMismatch,
                           "signed sum is " + format_rate_polynomial(sum, n.species()) + ", expected " +
                               format_rate_polynomial(expected, n.species()));
  }
  return VerifiedTerm{cert.k, r.index, std::move(sum)};
}

// ---------------------------------------------------------------------------
// Brute force

std::optional<BalanceCertificate> brute_force_certificate(const NetworkHypergraph& h, VertexId v, unsigned bound,
                                                          std::uint64_t cap) {
  if (bound == 0) throw Error("brute-force bound must be at least 1");
  if (!h.has_vertex(v)) throw Error("unknown vertex " + vertex_name(v));
  IncidenceMatrix m = incidence_matrix(h);
  const std::size_t ncols = m.columns.size();
  const std::size_t nrows = m.rows.size();
  const std::size_t target = m.row_of(v);

  double space = 1;
  for (std::size_t c = 0; c < ncols; ++c) space *= 2.0 * bound + 1;
  if (space > static_cast<double>(cap)) {
    throw SearchCapExceeded("brute-force search space " + std::to_string(static_cast<long double>(space)) +
                            " exceeds cap " + std::to_string(cap));
  }

  // Rows become fully determined once their last nonzero column is fixed.
  std::vector<std::vector<std::size_t>> closes(ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    std::optional<std::size_t> last;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (m.entries[r][c] != 0) last = c;
    }
    if (last) {
      closes[*last].push_back(r);
    } else if (r == target) {
      return std::nullopt;
    }
  }

  const int b = static_cast<int>(bound);
  std::vector<int> z(ncols, 0), best;
  std::vector<std::int64_t> rows(nrows, 0);
  std::int64_t best_l1 = std::numeric_limits<std::int64_t>::max();

  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t c, std::int64_t l1) {
    if (l1 >= best_l1) return;
    if (c == ncols) {
      best = z;
      best_l1 = l1;
      return;
    }
    for (int val = -b; val <= b; ++val) {
      std::int64_t next_l1 = l1 + (val < 0 ? -val : val);
      if (next_l1 >= best_l1) continue;
      z[c] = val;
      for (std::size_t r = 0; r < nrows; ++r) rows[r] += static_cast<std::int64_t>(m.entries[r][c]) * val;
      bool ok = true;
      for (std::size_t r : closes[c]) {
        if (r == target ? rows[r] <= 0 : rows[r] != 0) {
          ok = false;
          break;
        }
      }
      if (ok) dfs(c + 1, next_l1);
      for (std::size_t r = 0; r < nrows; ++r) rows[r] -= static_cast<std::int64_t>(m.entries[r][c]) * val;
    }
    z[c] = 0;
  };
  dfs(0, 0);
  if (best.empty() && ncols > 0) return std::nullopt;
  if (ncols == 0) return std::nullopt;

  BalanceCertificate cert;
  cert.target = v;
  std::int64_t k = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    k += static_cast<std::int64_t>(m.entries[target][c]) * best[c];
    if (best[c] > 0) cert.red[m.columns[c]] = static_cast<std::uint64_t>(best[c]);
    if (best[c] < 0) cert.blue[m.columns[c]] = static_cast<std::uint64_t>(-best[c]);
  }
  cert.k = static_cast<std::uint64_t>(k);
  return cert;
}

// ---------------------------------------------------------------------------
// Structural obstructions

std::string_view to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::ReversiblePair: return "ReversiblePair";
    case ObstructionKind::ReactionCycle: return "ReactionCycle";
    case ObstructionKind::WeaklyReversible: return "WeaklyReversible";
  }
  return "?";
}

namespace {

// Reactions leaving each complex, by position in n.complexes().
struct ComplexGraph {
  std::vector<Complex> nodes;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;  // (reaction index, target node)

  explicit ComplexGraph(const Network& n) : nodes(derive_complexes(n.reactions())), out(nodes.size()) {
    for (const auto& r : n.reactions()) out[node(r.reactant)].emplace_back(r.index, node(r.product));
  }
  std::size_t node(const Complex& y) const {
    return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), y) - nodes.begin());
  }
  bool reaches(std::size_t from, std::size_t to) const {
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      for (auto [ri, y] : out[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return false;
  }
};

}  // namespace

bool is_weakly_reversible(const Network& n) {
  ComplexGraph g(n);
  return std::all_of(n.reactions().begin(), n.reactions().end(), [&](const Reaction& r) {
    return g.reaches(g.node(r.product), g.node(r.reactant));
  });
}

std::vector<Obstruction> structural_obstructions(const Network& n, VertexId v) {
  const Reaction& r = n.reaction(v.reaction);
  std::vector<Obstruction> out;

  for (const auto& o : n.reactions()) {
    if (o.reactant == r.product && o.product == r.reactant) {
      out.push_back({ObstructionKind::ReversiblePair, {std::min(r.index, o.index), std::max(r.index, o.index)}, {}});
    }
  }

  if (!r.product.empty()) {
    ComplexGraph g(n);
    const std::size_t start = g.node(r.reactant);
    std::vector<bool> on_path(g.nodes.size(), false);
    std::vector<std::size_t> path_nodes{start, g.node(r.product)};
    std::vector<std::size_t> path_reactions{r.index};
    on_path[start] = on_path[path_nodes[1]] = true;
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> cycles;

    // Simple paths from the product back to the reactant; two-step cycles
    // are the reversible pairs above.
    std::function<void()> extend = [&]() {
      std::size_t here = path_nodes.back();
      for (auto [ri, next] : g.out[here]) {
        if (next == start) {
          if (path_reactions.size() + 1 >= 3) {
            auto rs = path_reactions;
            rs.push_back(ri);
            cycles.emplace_back(path_nodes, rs);
          }
          continue;
        }
        if (on_path[next]) continue;
        on_path[next] = true;
        path_nodes.push_back(next);
        path_reactions.push_back(ri);
        extend();
        path_reactions.pop_back();
        path_nodes.pop_back();
        on_path[next] = false;
      }
    };
    extend();

    for (auto& [nodes, rs] : cycles) {
      // Rotate so the smallest reaction index leads.
      auto lead = static_cast<std::ptrdiff_t>(std::min_element(rs.begin(), rs.end()) - rs.begin());
      std::rotate(nodes.begin(), nodes.begin() + lead, nodes.end());
      std::rotate(rs.begin(), rs.begin() + lead, rs.end());
      Obstruction ob{ObstructionKind::ReactionCycle, rs, {}};
      for (auto x : nodes) ob.cycle.push_back(g.nodes[x]);
      out.push_back(std::move(ob));
    }
  }

  if (is_weakly_reversible(n)) out.push_back({ObstructionKind::WeaklyReversible, {}, {}});
  return out;
}

// ---------------------------------------------------------------------------
// Minimal reactants

std::optional<std::vector<MinimalReactantCertificate>> monomial_ideal_certificate(const Network& n) {
  if (!is_zero_one(n)) throw Error("monomial ideal certificate requires a 0,1-network");
  NetworkHypergraph h(n);
  std::vector<MinimalReactantCertificate> out;
  for (const auto& y : minimal_reactants(n)) {
    std::optional<BalanceCertificate> found;
    for (const auto& r : n.reactions()) {
      if (r.reactant != y) continue;
      found = find_certificate(h, VertexId{r.index, Side::Reactant});
      if (!found) found = find_certificate(h, VertexId{r.index, Side::Product});
      if (found) break;
    }
    if (!found) return std::nullopt;
    out.push_back({y, std::move(*found)});
  }
  return out;
}

}  // namespace crn
