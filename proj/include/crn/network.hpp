#ifndef CRN_NETWORK_HPP
#define CRN_NETWORK_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in the `.crn` text format, with a 1-based
/// source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail, const std::string& source = "");

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// A complex as a sparse exponent vector: species index -> exponent.
/// Only strictly positive exponents are stored, so the empty map is the
/// empty complex.
class Complex {
 public:
  Complex() = default;
  explicit Complex(std::map<std::size_t, unsigned> exponents);

  bool empty() const noexcept { return exponents_.empty(); }
  unsigned exponent(std::size_t species) const;
  const std::map<std::size_t, unsigned>& exponents() const noexcept { return exponents_; }

  /// Sets the exponent of `species`; zero erases the entry.
  void set(std::size_t species, unsigned exponent);
  bool contains(std::size_t species) const { return exponents_.contains(species); }
  unsigned degree() const;

  friend bool operator==(const Complex&, const Complex&) = default;
  friend auto operator<=>(const Complex&, const Complex&) = default;

 private:
  std::map<std::size_t, unsigned> exponents_;
};

/// True iff every exponent of `y` is at most the matching exponent of
/// `y2`, i.e. x^y divides x^y2.
bool complex_divides(const Complex& y, const Complex& y2);

struct Reaction {
  std::size_t index = 0;  // 1-based
  Complex reactant;
  Complex product;
  std::string rate;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// A reaction network over an ordered species list. Construction does not
/// validate; use validate_network() or parse_network() for that.
class Network {
 public:
  Network() = default;
  /// Complexes are derived from the reactions.
  Network(std::vector<std::string> species, std::vector<Reaction> reactions);
  /// Explicit complex list, for building deliberately malformed networks.
  Network(std::vector<std::string> species, std::vector<Reaction> reactions,
          std::vector<Complex> complexes);

  const std::vector<std::string>& species() const noexcept { return species_; }
  const std::vector<Reaction>& reactions() const noexcept { return reactions_; }
  const std::vector<Complex>& complexes() const noexcept { return complexes_; }

  std::size_t species_count() const noexcept { return species_.size(); }
  std::size_t reaction_count() const noexcept { return reactions_.size(); }

  std::optional<std::size_t> species_index(std::string_view name) const;
  /// Reaction by its 1-based index; throws Error when out of range.
  const Reaction& reaction(std::size_t index) const;
  bool has_rate(std::string_view label) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::vector<std::string> species_;
  std::vector<Reaction> reactions_;
  std::vector<Complex> complexes_;
};

/// Deduplicated complexes in order of first appearance (reactant, then
/// product, reaction by reaction).
std::vector<Complex> derive_complexes(const std::vector<Reaction>& reactions);

/// Parses the `.crn` text format:
///
///     line    := complex arrow complex [',' IDENT]
///     arrow   := '->' | '<->'
///     complex := '0' | term ('+' term)*
///     term    := [UINT] IDENT
///
/// `#` starts a comment. `<->` expands into `<label>_f` / `<label>_b`.
/// Reactions without a label get `k<index>`.
Network parse_network(std::string_view text);
Network parse_network_file(const std::string& path);

/// Parses a single complex (same syntax as one side of a reaction) against
/// the species of `n`. Unknown species are an error.
Complex parse_complex(std::string_view text, const Network& n);

/// Inverse of parse_network for valid networks.
std::string serialize_network(const Network& n);

std::string format_complex(const Complex& y, const std::vector<std::string>& species);

enum class Violation {
  SelfLoop,
  OrphanComplex,
  SpeciesNotCovered,
  ProductionReaction,
  DuplicateReaction,
  DuplicateRateLabel,
  UnknownSpecies,
  BadReactionIndex,
};

struct Finding {
  Violation kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const noexcept { return findings.empty(); }
  std::size_t count(Violation kind) const;
};

std::string_view to_string(Violation v);

ValidationReport validate_network(const Network& n);

/// Every exponent of every complex is at most one.
bool is_zero_one(const Network& n);

/// Species and rate-label order of a polynomial ring shared by one or more
/// networks. Species of later networks are appended in their own order.
struct RingContext {
  std::vector<std::string> species;
  std::vector<std::string> rates;

  std::optional<std::size_t> species_index(std::string_view name) const;
  friend bool operator==(const RingContext&, const RingContext&) = default;
};

RingContext context_of(const Network& n);
RingContext union_context(const Network& a, const Network& b);

/// Maps each species of `n` to its position in `ctx`; throws if missing.
std::vector<std::size_t> species_embedding(const Network& n, const RingContext& ctx);

}  // namespace crn

#endif  // CRN_NETWORK_HPP
