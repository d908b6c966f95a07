#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace crn {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& detail, const std::string& source)
    : Error((source.empty() ? "line " + std::to_string(line) + ", column " + std::to_string(column)
                            : source + ":" + std::to_string(line) + ":" + std::to_string(column)) +
            ": " + detail),
      line_(line),
      column_(column),
      detail_(detail) {}

// ---------------------------------------------------------------------------
// Complex

Complex::Complex(std::map<std::size_t, unsigned> exponents) {
  for (auto [s, e] : exponents) {
    if (e > 0) exponents_.emplace(s, e);
  }
}

unsigned Complex::exponent(std::size_t species) const {
  auto it = exponents_.find(species);
  return it == exponents_.end() ? 0U : it->second;
}

void Complex::set(std::size_t species, unsigned exponent) {
  if (exponent == 0) {
    exponents_.erase(species);
  } else {
    exponents_[species] = exponent;
  }
}

unsigned Complex::degree() const {
  unsigned d = 0;
  for (auto [s, e] : exponents_) d += e;
  return d;
}

bool complex_divides(const Complex& y, const Complex& y2) {
  return std::all_of(y.exponents().begin(), y.exponents().end(),
                     [&](const auto& kv) { return kv.second <= y2.exponent(kv.first); });
}

// ---------------------------------------------------------------------------
// Network

std::vector<Complex> derive_complexes(const std::vector<Reaction>& reactions) {
  std::vector<Complex> out;
  auto add = [&](const Complex& y) {
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  };
  for (const auto& r : reactions) {
    add(r.reactant);
    add(r.product);
  }
  return out;
}

Network::Network(std::vector<std::string> species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  complexes_ = derive_complexes(reactions_);
}

Network::Network(std::vector<std::string> species, std::vector<Reaction> reactions,
                 std::vector<Complex> complexes)
    : species_(std::move(species)),
      reactions_(std::move(reactions)),
      complexes_(std::move(complexes)) {}

std::optional<std::size_t> Network::species_index(std::string_view name) const {
  for (std::size_t i = 0; i < species_.size(); ++i) {
    if (species_[i] == name) return i;
  }
  return std::nullopt;
}

const Reaction& Network::reaction(std::size_t index) const {
  if (index == 0 || index > reactions_.size()) {
    throw Error("no reaction with index " + std::to_string(index));
  }
  return reactions_[index - 1];
}

bool Network::has_rate(std::string_view label) const {
  return std::any_of(reactions_.begin(), reactions_.end(),
                     [&](const Reaction& r) { return r.rate == label; });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& what) const { throw ParseError(line_, col, what); }

  std::optional<unsigned long> uint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9) {
      pos_ = start;
      fail("stoichiometric coefficient too large");
    }
    return std::stoul(std::string(digits));
  }

  std::optional<std::string> ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct ComplexTerm {
  std::string species;
  unsigned coeff;
};

// Parses `'0' | term ('+' term)*`. Returns the terms in source order; an
// empty vector is the empty complex.
std::vector<ComplexTerm> parse_complex_terms(LineScanner& sc) {
  std::vector<ComplexTerm> terms;
  // '0' alone denotes the empty complex.
  if (sc.peek() == '0') {
    auto n = sc.uint();
    if (*n == 0) {
      if (ident_start(sc.peek())) sc.fail("zero coefficient on a species");
      return terms;
    }
    sc.fail("expected a species name after coefficient");
  }
  while (true) {
    std::size_t col = sc.column();
    unsigned coeff = 1;
    if (auto n = sc.uint()) {
      if (*n == 0) sc.fail_at(col, "zero coefficient on a species");
      coeff = static_cast<unsigned>(*n);
    }
    auto name = sc.ident();
    if (!name) sc.fail("expected a species name");
    terms.push_back({*name, coeff});
    if (sc.peek() != '+') break;
    sc.consume("+");
  }
  return terms;
}

Complex terms_to_complex(const std::vector<ComplexTerm>& terms, std::vector<std::string>& species,
                         bool allow_new, LineScanner& sc) {
  Complex y;
  for (const auto& t : terms) {
    auto it = std::find(species.begin(), species.end(), t.species);
    std::size_t idx;
    if (it == species.end()) {
      if (!allow_new) sc.fail("unknown species '" + t.species + "'");
      species.push_back(t.species);
      idx = species.size() - 1;
    } else {
      idx = static_cast<std::size_t>(it - species.begin());
    }
    y.set(idx, y.exponent(idx) + t.coeff);
  }
  return y;
}

}  // namespace

Network parse_network(std::string_view text) {
  std::vector<std::string> species;
  std::vector<Reaction> reactions;
  std::set<std::string> labels;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineScanner sc(line, line_no);
    if (sc.at_end()) {
      if (end == text.size()) break;
      continue;
    }

    std::size_t lhs_col = sc.column();
    auto lhs_terms = parse_complex_terms(sc);
    bool reversible = false;
    if (sc.consume("<->")) {
      reversible = true;
    } else if (!sc.consume("->")) {
      sc.fail("expected '->' or '<->'");
    }
    std::size_t rhs_col = sc.column();
    auto rhs_terms = parse_complex_terms(sc);

    std::optional<std::string> label;
    std::size_t label_col = 0;
    if (sc.consume(",")) {
      label_col = sc.column();
      label = sc.ident();
      if (!label) sc.fail("expected a rate label after ','");
    }
    if (!sc.at_end()) sc.fail("unexpected trailing input");

    Complex lhs = terms_to_complex(lhs_terms, species, true, sc);
    Complex rhs = terms_to_complex(rhs_terms, species, true, sc);

    if (lhs == rhs) throw ParseError(line_no, lhs_col, "self-loop reaction");
    if (lhs.empty()) throw ParseError(line_no, lhs_col, "production reaction (empty reactant complex)");
    if (reversible && rhs.empty()) {
      throw ParseError(line_no, rhs_col, "production reaction (reverse of a degradation)");
    }

    auto add = [&](Complex reactant, Complex product, std::string rate) {
      std::size_t index = reactions.size() + 1;
      if (rate.empty()) rate = "k" + std::to_string(index);
      if (!labels.insert(rate).second) {
        throw ParseError(line_no, label ? label_col : lhs_col, "duplicate rate label '" + rate + "'");
      }
      for (const auto& r : reactions) {
        if (r.reactant == reactant && r.product == product) {
          throw ParseError(line_no, lhs_col, "duplicate reaction (same as reaction " + std::to_string(r.index) + ")");
        }
      }
      reactions.push_back(Reaction{index, std::move(reactant), std::move(product), std::move(rate)});
    };

    if (reversible) {
      std::size_t base = reactions.size() + 1;
      std::string fwd = label ? *label + "_f" : "k" + std::to_string(base);
      std::string bwd = label ? *label + "_b" : "k" + std::to_string(base + 1);
      add(lhs, rhs, fwd);
      add(rhs, lhs, bwd);
    } else {
      add(lhs, rhs, label.value_or(""));
    }
    if (end == text.size()) break;
  }
  return Network(std::move(species), std::move(reactions));
}

Network parse_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_network(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.detail(), path);
  }
}

Complex parse_complex(std::string_view text, const Network& n) {
  LineScanner sc(text, 1);
  auto terms = parse_complex_terms(sc);
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  auto species = n.species();
  return terms_to_complex(terms, species, false, sc);
}

std::string format_complex(const Complex& y, const std::vector<std::string>& species) {
  if (y.empty()) return "0";
  std::string out;
  for (auto [s, e] : y.exponents()) {
    if (!out.empty()) out += " + ";
    if (e != 1) out += std::to_string(e);
    out += s < species.size() ? species[s] : "?" + std::to_string(s);
  }
  return out;
}

std::string serialize_network(const Network& n) {
  std::string out;
  for (const auto& r : n.reactions()) {
    out += format_complex(r.reactant, n.species());
    out += " -> ";
    out += format_complex(r.product, n.species());
    out += ", " + r.rate + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::SelfLoop: return "self-loop";
    case Violation::OrphanComplex: return "orphan complex";
    case Violation::SpeciesNotCovered: return "species not covered";
    case Violation::ProductionReaction: return "production reaction";
    case Violation::DuplicateReaction: return "duplicate reaction";
    case Violation::DuplicateRateLabel: return "duplicate rate label";
    case Violation::UnknownSpecies: return "unknown species";
    case Violation::BadReactionIndex: return "bad reaction index";
  }
  return "?";
}

std::size_t ValidationReport::count(Violation kind) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [&](const Finding& f) { return f.kind == kind; }));
}

ValidationReport validate_network(const Network& n) {
  ValidationReport report;
  auto add = [&](Violation v, std::string detail) { report.findings.push_back({v, std::move(detail)}); };
  const auto& sp = n.species();

  std::set<std::string> labels;
  for (std::size_t i = 0; i < n.reactions().size(); ++i) {
    const auto& r = n.reactions()[i];
    std::string name = "reaction " + std::to_string(r.index);
    if (r.index != i + 1) add(Violation::BadReactionIndex, name + " at position " + std::to_string(i + 1));
    if (r.reactant == r.product) add(Violation::SelfLoop, name + ": " + format_complex(r.reactant, sp));
    if (r.reactant.empty()) add(Violation::ProductionReaction, name);
    if (!labels.insert(r.rate).second) add(Violation::DuplicateRateLabel, name + ": " + r.rate);
    for (std::size_t j = 0; j < i; ++j) {
      const auto& o = n.reactions()[j];
      if (o.reactant == r.reactant && o.product == r.product) {
        add(Violation::DuplicateReaction, name + " repeats reaction " + std::to_string(o.index));
      }
    }
    for (const Complex* y : {&r.reactant, &r.product}) {
      for (auto [s, e] : y->exponents()) {
        if (s >= sp.size()) add(Violation::UnknownSpecies, name + ": species index " + std::to_string(s));
      }
    }
  }

  for (const auto& y : n.complexes()) {
    bool used = std::any_of(n.reactions().begin(), n.reactions().end(),
                            [&](const Reaction& r) { return r.reactant == y || r.product == y; });
    if (!used) add(Violation::OrphanComplex, format_complex(y, sp));
  }
  for (const auto& r : n.reactions()) {
    for (const Complex* y : {&r.reactant, &r.product}) {
      if (std::find(n.complexes().begin(), n.complexes().end(), *y) == n.complexes().end()) {
        add(Violation::OrphanComplex, "complex " + format_complex(*y, sp) + " of reaction " +
                                          std::to_string(r.index) + " missing from complex list");
      }
    }
  }

  for (std::size_t s = 0; s < sp.size(); ++s) {
    bool covered = std::any_of(n.complexes().begin(), n.complexes().end(),
                               [&](const Complex& y) { return y.contains(s); });
    if (!covered) add(Violation::SpeciesNotCovered, sp[s]);
  }
  return report;
}

bool is_zero_one(const Network& n) {
  return std::all_of(n.complexes().begin(), n.complexes().end(), [](const Complex& y) {
    return std::all_of(y.exponents().begin(), y.exponents().end(), [](const auto& kv) { return kv.second <= 1; });
  });
}

// ---------------------------------------------------------------------------
// Ring contexts

std::optional<std::size_t> RingContext::species_index(std::string_view name) const {
  for (std::size_t i = 0; i < species.size(); ++i) {
    if (species[i] == name) return i;
  }
  return std::nullopt;
}

RingContext context_of(const Network& n) {
  RingContext ctx;
  ctx.species = n.species();
  for (const auto& r : n.reactions()) ctx.rates.push_back(r.rate);
  return ctx;
}

RingContext union_context(const Network& a, const Network& b) {
  RingContext ctx = context_of(a);
  for (const auto& s : b.species()) {
    if (!ctx.species_index(s)) ctx.species.push_back(s);
  }
  for (const auto& r : b.reactions()) {
    if (std::find(ctx.rates.begin(), ctx.rates.end(), r.rate) == ctx.rates.end()) ctx.rates.push_back(r.rate);
  }
  return ctx;
}

std::vector<std::size_t> species_embedding(const Network& n, const RingContext& ctx) {
  std::vector<std::size_t> map;
  map.reserve(n.species_count());
  for (const auto& s : n.species()) {
    auto idx = ctx.species_index(s);
    if (!idx) throw Error("species '" + s + "' is not part of the ring context");
    map.push_back(*idx);
  }
  return map;
}

}  // namespace crn
