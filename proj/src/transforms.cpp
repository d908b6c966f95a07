#include "crn/transforms.hpp"

#include <set>

namespace crn {

std::string_view to_string(TransformOp op) {
  switch (op) {
    case TransformOp::AddProductSpecies: return "add_product_species";
    case TransformOp::AddReactantSpecies: return "add_reactant_species";
    case TransformOp::AddDegradation: return "add_degradation";
  }
  return "?";
}

namespace {

void require_zero_one(const Network& n) {
  if (!is_zero_one(n)) throw TransformError(TransformFailure::NotZeroOne, "network is not a 0,1-network");
}

const Reaction& require_reaction(const Network& n, std::size_t i) {
  if (i == 0 || i > n.reaction_count()) {
    throw TransformError(TransformFailure::UnknownReaction, "no reaction with index " + std::to_string(i));
  }
  return n.reaction(i);
}

std::string fresh_label(const Network& n, std::string label) {
  while (n.has_rate(label)) label += "_p";
  return label;
}

// Certificate at `v` avoiding `avoid` (when that edge exists); separates
// "not almost balanced at all" from "only with the forbidden edge".
BalanceCertificate qualifying_certificate(const Network& n, VertexId v, std::optional<EdgeId> avoid,
                                          const std::string& avoid_name) {
  NetworkHypergraph h(n);
  std::set<EdgeId> forbidden;
  if (avoid && h.has_edge(*avoid)) forbidden.insert(*avoid);
  if (auto cert = find_certificate(h, v, forbidden)) return *cert;
  if (!forbidden.empty() && find_certificate(h, v)) {
    throw TransformError(TransformFailure::NoQualifyingCertificate,
                         vertex_name(v) + " is almost balanced only with " + avoid_name + " in the multiset");
  }
  throw TransformError(TransformFailure::VertexNotBalanced, vertex_name(v) + " is not almost balanced");
}

Network with_reactions(std::vector<Reaction> reactions, const std::vector<std::string>& species) {
  for (std::size_t a = 0; a < reactions.size(); ++a) {
    if (reactions[a].reactant == reactions[a].product) {
      throw TransformError(TransformFailure::SelfLoop,
                           "rewrite turns reaction " + std::to_string(reactions[a].index) + " into a self-loop");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (reactions[a].reactant == reactions[b].reactant && reactions[a].product == reactions[b].product) {
        throw TransformError(TransformFailure::DuplicateReaction,
                             "rewrite duplicates reaction " + std::to_string(reactions[b].index));
      }
    }
  }
  return Network(species, std::move(reactions));
}

std::pair<std::vector<std::string>, std::size_t> species_with(const Network& n, const std::string& s) {
  auto species = n.species();
  if (auto idx = n.species_index(s)) return {species, *idx};
  species.push_back(s);
  return {species, species.size() - 1};
}

}  // namespace

TransformResult add_species_to_product(const Network& n, std::size_t i, const std::string& s) {
  require_zero_one(n);
  const Reaction& r = require_reaction(n, i);
  auto existing = n.species_index(s);
  if (existing && r.product.contains(*existing)) {
    throw TransformError(TransformFailure::SpeciesInSupport, s + " already in the product of reaction " + std::to_string(i));
  }
  VertexId u{i, Side::Reactant};
  std::optional<EdgeId> avoid;
  if (existing) avoid = EdgeId::species(*existing);
  BalanceCertificate cert = qualifying_certificate(n, u, avoid, "E_" + s);

  auto [species, sidx] = species_with(n, s);
  auto reactions = n.reactions();
  Reaction& target = reactions[i - 1];
  target.product.set(sidx, 1);
  target.rate = fresh_label(n, r.rate + "_p");
  std::string new_rate = target.rate;
  Network out = with_reactions(std::move(reactions), species);
  return {std::move(out), Transcript{TransformOp::AddProductSpecies, i, s, std::nullopt, std::move(cert), new_rate}};
}

TransformResult add_species_to_reactant(const Network& n, std::size_t i, const std::string& s, std::size_t j) {
  require_zero_one(n);
  const Reaction& ri = require_reaction(n, i);
  const Reaction& rj = require_reaction(n, j);
  if (i == j) throw TransformError(TransformFailure::SameReaction, "reactions i and j must be distinct");
  if (!complex_divides(rj.reactant, ri.reactant)) {
    throw TransformError(TransformFailure::NotDivisible, "y_" + std::to_string(j) + " = " +
                                                             format_complex(rj.reactant, n.species()) + " does not divide y_" +
                                                             std::to_string(i) + " = " +
                                                             format_complex(ri.reactant, n.species()));
  }
  auto existing = n.species_index(s);
  if (existing && ri.reactant.contains(*existing)) {
    throw TransformError(TransformFailure::SpeciesInSupport, s + " already in the reactant of reaction " + std::to_string(i));
  }
  VertexId u{j, Side::Reactant};
  std::optional<EdgeId> avoid;
  if (existing) avoid = EdgeId::species(*existing);
  BalanceCertificate cert = qualifying_certificate(n, u, avoid, "E_" + s);

  auto [species, sidx] = species_with(n, s);
  auto reactions = n.reactions();
  Reaction& target = reactions[i - 1];
  target.reactant.set(sidx, 1);
  target.rate = fresh_label(n, ri.rate + "_p");
  std::string new_rate = target.rate;
  Network out = with_reactions(std::move(reactions), species);
  return {std::move(out), Transcript{TransformOp::AddReactantSpecies, i, s, j, std::move(cert), new_rate}};
}

TransformResult add_degradation(const Network& n, std::size_t i) {
  require_zero_one(n);
  const Reaction& r = require_reaction(n, i);
  for (const auto& o : n.reactions()) {
    if (o.reactant == r.reactant && o.product.empty()) {
      throw TransformError(TransformFailure::DuplicateDegradation,
                           "reaction " + std::to_string(o.index) + " already degrades " +
                               format_complex(r.reactant, n.species()));
    }
  }
  VertexId v{i, Side::Product};
  BalanceCertificate cert = qualifying_certificate(n, v, EdgeId::reaction(i), "E_r" + std::to_string(i));

  auto reactions = n.reactions();
  std::size_t index = reactions.size() + 1;
  std::string rate = fresh_label(n, "k" + std::to_string(index));
  reactions.push_back(Reaction{index, r.reactant, Complex{}, rate});
  Network out = with_reactions(std::move(reactions), n.species());
  return {std::move(out), Transcript{TransformOp::AddDegradation, i, std::nullopt, std::nullopt, std::move(cert), rate}};
}

TransformResult apply_transform(const Network& n, const TransformRequest& req) {
  return std::visit(
      [&](const auto& r) -> TransformResult {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ProductRequest>) {
          return add_species_to_product(n, r.reaction, r.species);
        } else if constexpr (std::is_same_v<T, ReactantRequest>) {
          return add_species_to_reactant(n, r.reaction, r.species, r.aux);
        } else {
          return add_degradation(n, r.reaction);
        }
      },
      req);
}

ScriptError::ScriptError(std::size_t step, const TransformError& cause)
    : Error("step " + std::to_string(step) + ": " + cause.what()), step_(step), cause_(cause.kind()) {}

ScriptResult apply_script(const Network& n, const std::vector<TransformRequest>& ops) {
  ScriptResult result{n, {}};
  for (std::size_t k = 0; k < ops.size(); ++k) {
    try {
      auto step = apply_transform(result.output, ops[k]);
      result.output = step.output;
      result.steps.push_back(std::move(step));
    } catch (const TransformError& e) {
      throw ScriptError(k + 1, e);
    }
  }
  return result;
}

VertexId certificate_vertex(const Transcript& t) {
  switch (t.op) {
    case TransformOp::AddProductSpecies: return {t.reaction, Side::Reactant};
    case TransformOp::AddReactantSpecies: return {*t.aux_reaction, Side::Reactant};
    case TransformOp::AddDegradation: return {t.reaction, Side::Product};
  }
  return {};
}

}  // namespace crn
