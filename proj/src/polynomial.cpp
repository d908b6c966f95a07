#include "crn/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace crn {

std::string_view to_string(MonomialOrder o) { return o == MonomialOrder::Lex ? "lex" : "degrevlex"; }

MonomialOrder parse_order(std::string_view s) {
  if (s == "degrevlex" || s == "grevlex") return MonomialOrder::DegRevLex;
  if (s == "lex") return MonomialOrder::Lex;
  throw Error("unknown monomial order '" + std::string(s) + "' (expected degrevlex or lex)");
}

int compare_monomials(const Exponents& a, const Exponents& b, MonomialOrder o) {
  if (o == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  unsigned long da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

RingPtr make_ring(std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const Ring>(Ring{std::move(variables), order});
}

QPolynomial::QPolynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error("polynomial without a ring");
}

QPolynomial QPolynomial::monomial(RingPtr ring, Exponents e, Rational c) {
  if (e.size() != ring->size()) throw Error("exponent vector does not match the ring");
  QPolynomial p(std::move(ring));
  c.canonicalize();
  if (c != 0) p.terms_.push_back(Term{std::move(e), std::move(c)});
  return p;
}

QPolynomial QPolynomial::constant(RingPtr ring, Rational c) {
  Exponents e(ring->size(), 0);
  return monomial(std::move(ring), std::move(e), std::move(c));
}

QPolynomial QPolynomial::variable(RingPtr ring, std::size_t i) {
  Exponents e(ring->size(), 0);
  e.at(i) = 1;
  return monomial(std::move(ring), std::move(e));
}

const Term& QPolynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

void QPolynomial::drop_leading_term() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coefficient();
  return inv * *this;
}

QPolynomial QPolynomial::times_term(const Exponents& e, const Rational& c) const {
  if (c == 0) return QPolynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents m(t.exponents);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += e[i];
    out.push_back(Term{std::move(m), t.coefficient * c});
  }
  return QPolynomial(ring_, std::move(out));
}

void require_same_ring(const QPolynomial& a, const QPolynomial& b) {
  if (a.ring() != b.ring() && !(*a.ring() == *b.ring())) {
    throw Error("polynomials from different rings or monomial orders");
  }
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract, MonomialOrder o) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : compare_monomials(a[i].exponents, b[j].exponents, o);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].exponents, subtract ? Rational(-b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coefficient - b[j].coefficient) : Rational(a[i].coefficient + b[j].coefficient);
      if (s != 0) out.push_back(Term{a[i].exponents, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  require_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, false, ring_->order);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  require_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, true, ring_->order);
  return *this;
}

QPolynomial operator*(const Rational& c, const QPolynomial& p) {
  return p.times_term(Exponents(p.ring()->size(), 0), c);
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  require_same_ring(a, b);
  QPolynomial out(a.ring());
  for (const auto& t : b.terms()) out += a.times_term(t.exponents, t.coefficient);
  return out;
}

bool operator==(const QPolynomial& a, const QPolynomial& b) {
  return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x_" + ring_->variables[i];
      if (t.exponents[i] > 1) mono += '^' + std::to_string(t.exponents[i]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

QPolynomial complex_monomial(const Complex& c, const std::vector<std::size_t>& embedding, const RingPtr& ring) {
  Exponents e(ring->size(), 0);
  for (const auto& [s, k] : c.exponents()) e.at(embedding.at(s)) += k;
  return QPolynomial::monomial(ring, std::move(e));
}

QPolynomial specialize(const RatePolynomial& p, const std::map<std::string, Rational>& assignment,
                       const std::vector<std::size_t>& embedding, const RingPtr& ring) {
  QPolynomial out(ring);
  for (const auto& [m, coeff] : p.terms()) {
    auto it = assignment.find(m.rate);
    if (it == assignment.end()) throw Error("no value assigned to rate " + m.rate);
    if (it->second == 0) throw Error("rate " + m.rate + " specialized to zero");
    out += complex_monomial(m.monomial, embedding, ring).times_term(Exponents(ring->size(), 0),
                                                                    it->second * Rational(static_cast<long>(coeff)));
  }
  return out;
}

QPolynomial specialize(const RatePolynomial& p, const std::map<std::string, Rational>& assignment, const RingPtr& ring) {
  std::vector<std::size_t> id(ring->size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return specialize(p, assignment, id, ring);
}

}  // namespace crn
