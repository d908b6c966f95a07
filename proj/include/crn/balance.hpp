#ifndef CRN_BALANCE_HPP
#define CRN_BALANCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "crn/hypergraph.hpp"
#include "crn/massaction.hpp"
#include "crn/network.hpp"

namespace crn {

/// A 2-colored edge multiset witnessing that `target` is almost balanced:
/// red-degree minus blue-degree is k > 0 at the target and zero everywhere
/// else. Red and blue supports are disjoint.
struct BalanceCertificate {
  VertexId target;
  std::map<EdgeId, std::uint64_t> red;
  std::map<EdgeId, std::uint64_t> blue;
  std::uint64_t k = 0;

  /// Signed multiplicity (red positive, blue negative) of `e`.
  std::int64_t signed_multiplicity(EdgeId e) const;
  std::set<EdgeId> support() const;

  friend bool operator==(const BalanceCertificate&, const BalanceCertificate&) = default;
};

/// Decides whether `v` is almost balanced using only edges outside
/// `forbidden`. The returned certificate has minimum support (fewest
/// distinct edges), ties broken by the lexicographic order of edge
/// positions; above `kSupportSearchLimit` subsets the search falls back to
/// an inclusion-minimal support found by greedy edge removal.
std::optional<BalanceCertificate> find_certificate(const NetworkHypergraph& h, VertexId v,
                                                   const std::set<EdgeId>& forbidden = {});

inline constexpr std::size_t kSupportSearchLimit = 200000;

enum class CertificateFailure {
  NotZeroOne,
  UnknownEdge,
  NotReduced,
  DegreeImbalance,
  ExcessMismatch,
  ResidualMismatch,
};

class CertificateError : public Error {
 public:
  CertificateError(CertificateFailure kind, const std::string& what) : Error(what), kind_(kind) {}
  CertificateFailure kind() const noexcept { return kind_; }

 private:
  CertificateFailure kind_;
};

struct VerifiedTerm {
  std::uint64_t k = 0;
  std::size_t reaction = 0;  // j of kappa_j x^{y_j}
  RatePolynomial residual;   // exactly k * kappa_j * x^{y_j}
};

/// Re-derives the degree conditions of `cert` on the hypergraph of `n` and
/// evaluates the signed sum of species-edge derivatives (blue minus red at a
/// reactant vertex, red minus blue at a product vertex). Throws
/// CertificateError unless the sum is exactly k * kappa_j * x^{y_j}.
VerifiedTerm verify_certificate(const Network& n, VertexId v, const BalanceCertificate& cert);

/// Only the degree conditions (works for any network).
void check_degrees(const NetworkHypergraph& h, VertexId v, const BalanceCertificate& cert);

class SearchCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search over signed multiplicities in [-bound, bound] per
/// nonempty edge. Among all solutions of A z = k e_v with k > 0 it returns
/// the one with the smallest total multiplicity sum |z_e|, ties broken
/// lexicographically (edges in incidence order, values ascending). Throws
/// SearchCapExceeded when (2 bound + 1)^edges exceeds `cap`.
std::optional<BalanceCertificate> brute_force_certificate(const NetworkHypergraph& h, VertexId v, unsigned bound,
                                                          std::uint64_t cap = 50'000'000);

enum class ObstructionKind { ReversiblePair, ReactionCycle, WeaklyReversible };

struct Obstruction {
  ObstructionKind kind;
  std::vector<std::size_t> reactions;  // reaction indices along the witness
  std::vector<Complex> cycle;          // complexes along a ReactionCycle

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

std::string_view to_string(ObstructionKind k);

/// Structural reasons that `v` cannot be almost balanced: its reaction has a
/// reverse reaction, its reaction lies on a directed cycle of three or more
/// distinct complexes, or every reaction of the network lies on a cycle.
std::vector<Obstruction> structural_obstructions(const Network& n, VertexId v);

/// True iff every reaction lies on a directed cycle of the complex graph.
bool is_weakly_reversible(const Network& n);

struct MinimalReactantCertificate {
  Complex reactant;
  BalanceCertificate certificate;
};

/// If every minimal reactant has a reaction whose u_i or v_i is almost
/// balanced, returns one certificate per minimal reactant; the steady-state
/// ideal is then generated by the minimal reactant monomials. nullopt is
/// inconclusive. Throws Error on non-0,1 networks.
std::optional<std::vector<MinimalReactantCertificate>> monomial_ideal_certificate(const Network& n);

}  // namespace crn

#endif  // CRN_BALANCE_HPP
