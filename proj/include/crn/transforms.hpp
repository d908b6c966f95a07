#ifndef CRN_TRANSFORMS_HPP
#define CRN_TRANSFORMS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crn/balance.hpp"
#include "crn/network.hpp"

namespace crn {

enum class TransformOp { AddProductSpecies, AddReactantSpecies, AddDegradation };

std::string_view to_string(TransformOp op);

/// Audit record of one ideal-preserving rewrite.
struct Transcript {
  TransformOp op;
  std::size_t reaction = 0;
  std::optional<std::string> species;
  std::optional<std::size_t> aux_reaction;  // j of the reactant rewrite
  BalanceCertificate certificate;           // over the input hypergraph
  std::string new_rate;
};

struct TransformResult {
  Network output;
  Transcript transcript;
};

enum class TransformFailure {
  NotZeroOne,
  UnknownReaction,
  SpeciesInSupport,
  VertexNotBalanced,    // no certificate at all
  NoQualifyingCertificate,  // certificates exist but all use the forbidden edge
  SameReaction,
  NotDivisible,
  DuplicateDegradation,
  DuplicateReaction,    // rewrite would collide with an existing reaction
  SelfLoop,             // rewritten reactant equals its product
};

class TransformError : public Error {
 public:
  TransformError(TransformFailure kind, const std::string& what) : Error(what), kind_(kind) {}
  TransformFailure kind() const noexcept { return kind_; }

 private:
  TransformFailure kind_;
};

/// Replaces y_i -> y_i' by y_i -> y_i' + s. Requires u_i to be almost
/// balanced without E_s. `s` may be a species new to the network.
TransformResult add_species_to_product(const Network& n, std::size_t i, const std::string& s);

/// Replaces y_i -> y_i' by y_i + s -> y_i'. Requires i != j, y_j | y_i and u_j
/// almost balanced without E_s.
TransformResult add_species_to_reactant(const Network& n, std::size_t i, const std::string& s, std::size_t j);

/// Appends y_i -> 0. Requires v_i almost balanced without E_r<i>.
TransformResult add_degradation(const Network& n, std::size_t i);

struct ProductRequest {
  std::size_t reaction;
  std::string species;
};
struct ReactantRequest {
  std::size_t reaction;
  std::string species;
  std::size_t aux;
};
struct DegradationRequest {
  std::size_t reaction;
};
using TransformRequest = std::variant<ProductRequest, ReactantRequest, DegradationRequest>;

TransformResult apply_transform(const Network& n, const TransformRequest& req);

/// Failure of step `step()` (1-based) of a script.
class ScriptError : public Error {
 public:
  ScriptError(std::size_t step, const TransformError& cause);
  std::size_t step() const noexcept { return step_; }
  TransformFailure cause() const noexcept { return cause_; }

 private:
  std::size_t step_;
  TransformFailure cause_;
};

struct ScriptResult {
  Network output;
  std::vector<TransformResult> steps;
};

/// Applies the requests in order; all or nothing.
ScriptResult apply_script(const Network& n, const std::vector<TransformRequest>& ops);

/// Vertex whose certificate a transcript records (u_i, u_j or v_i).
VertexId certificate_vertex(const Transcript& t);

}  // namespace crn

#endif  // CRN_TRANSFORMS_HPP
