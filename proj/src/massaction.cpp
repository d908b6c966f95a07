#include "crn/massaction.hpp"

#include <algorithm>

namespace crn {

RatePolynomial RatePolynomial::term(std::size_t reaction, std::string rate, Complex monomial, std::int64_t coeff) {
  RatePolynomial p;
  p.add_term(RateMonomial{reaction, std::move(rate), std::move(monomial)}, coeff);
  return p;
}

std::int64_t RatePolynomial::coefficient(std::size_t reaction, const Complex& monomial) const {
  for (const auto& [m, c] : terms_) {
    if (m.reaction == reaction && m.monomial == monomial) return c;
  }
  return 0;
}

void RatePolynomial::add_term(const RateMonomial& m, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RatePolynomial& RatePolynomial::operator+=(const RatePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RatePolynomial& RatePolynomial::operator-=(const RatePolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RatePolynomial& RatePolynomial::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string format_monomial(const Complex& m, const std::vector<std::string>& species) {
  if (m.empty()) return "1";
  std::string out;
  for (auto [s, e] : m.exponents()) {
    if (!out.empty()) out += "*";
    out += "x_" + (s < species.size() ? species[s] : std::to_string(s));
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string format_rate_polynomial(const RatePolynomial& p, const std::vector<std::string>& species) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += m.rate;
    if (!m.monomial.empty()) out += "*" + format_monomial(m.monomial, species);
    first = false;
  }
  return out;
}

SteadyStateSystem steady_state_system(const Network& n) {
  SteadyStateSystem sys;
  sys.context = context_of(n);
  sys.rates.resize(n.species_count());
  for (const auto& r : n.reactions()) {
    for (std::size_t s = 0; s < n.species_count(); ++s) {
      auto gamma = static_cast<std::int64_t>(r.product.exponent(s)) - static_cast<std::int64_t>(r.reactant.exponent(s));
      if (gamma != 0) sys.rates[s].add_term(RateMonomial{r.index, r.rate, r.reactant}, gamma);
    }
  }
  return sys;
}

std::string format_system(const SteadyStateSystem& sys) {
  std::string out;
  for (std::size_t s = 0; s < sys.rates.size(); ++s) {
    out += "x_" + sys.context.species[s] + "' = " + format_rate_polynomial(sys.rates[s], sys.context.species) + "\n";
  }
  return out;
}

std::vector<Complex> reactant_support_generators(const Network& n) {
  std::vector<Complex> out;
  for (const auto& r : n.reactions()) {
    if (std::find(out.begin(), out.end(), r.reactant) == out.end()) out.push_back(r.reactant);
  }
  return out;
}

std::vector<Complex> minimal_reactants(const Network& n) {
  auto reactants = reactant_support_generators(n);
  std::vector<Complex> out;
  for (const auto& y : reactants) {
    bool dominated = std::any_of(reactants.begin(), reactants.end(),
                                 [&](const Complex& other) { return other != y && complex_divides(other, y); });
    if (!dominated) out.push_back(y);
  }
  return out;
}

}  // namespace crn
