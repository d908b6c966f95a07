#include "crn/groebner.hpp"

#include <algorithm>
#include <set>

#include "crn/massaction.hpp"

namespace crn {

QPolynomial normal_form(const QPolynomial& f, const std::vector<QPolynomial>& basis) {
  for (const auto& g : basis) require_same_ring(f, g);
  QPolynomial p = f;
  QPolynomial rem(f.ring());
  const std::size_t nv = f.ring()->size();
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const QPolynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && monomial_divides(g.leading_monomial(), lt.exponents)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem += QPolynomial::monomial(f.ring(), lt.exponents, lt.coefficient);
      p.drop_leading_term();
      continue;
    }
    Exponents q(nv);
    for (std::size_t i = 0; i < nv; ++i) q[i] = lt.exponents[i] - divisor->leading_monomial()[i];
    Rational c = lt.coefficient / divisor->leading_coefficient();
    p -= divisor->times_term(q, c);
  }
  return rem;
}

QPolynomial s_polynomial(const QPolynomial& f, const QPolynomial& g) {
  require_same_ring(f, g);
  const Exponents l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  const std::size_t nv = l.size();
  Exponents a(nv), b(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    a[i] = l[i] - f.leading_monomial()[i];
    b[i] = l[i] - g.leading_monomial()[i];
  }
  return f.times_term(a, 1 / f.leading_coefficient()) - g.times_term(b, 1 / g.leading_coefficient());
}

namespace {

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

}  // namespace

std::vector<QPolynomial> reduced_groebner_basis(const std::vector<QPolynomial>& gens) {
  std::vector<QPolynomial> g;
  for (const auto& f : gens) {
    if (!g.empty()) require_same_ring(g.front(), f);
    if (!f.is_zero()) g.push_back(f.monic());
  }
  if (g.empty()) return {};
  const MonomialOrder order = g.front().ring()->order;

  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pair = [&](std::size_t i, std::size_t j) {
    pairs.push_back(Pair{i, j, monomial_lcm(g[i].leading_monomial(), g[j].leading_monomial())});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);
  }

  while (!pairs.empty()) {
    // normal selection strategy: smallest lcm first, then smallest indices
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      int c = compare_monomials(it->lcm, best->lcm, order);
      if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
    }
    Pair p = *best;
    pairs.erase(best);
    pending.erase({p.i, p.j});

    if (coprime(g[p.i].leading_monomial(), g[p.j].leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!monomial_divides(g[k].leading_monomial(), p.lcm)) continue;
      if (pending.contains({std::min(p.i, k), std::max(p.i, k)})) continue;
      if (pending.contains({std::min(p.j, k), std::max(p.j, k)})) continue;
      chain = true;
    }
    if (chain) continue;

    QPolynomial r = normal_form(s_polynomial(g[p.i], g[p.j]), g);
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < g.size(); ++k) add_pair(k, g.size() - 1);
  }

  // minimal basis: a divisor sorts before its multiples
  std::stable_sort(g.begin(), g.end(), [&](const QPolynomial& a, const QPolynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  std::vector<QPolynomial> minimal;
  for (const auto& f : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const QPolynomial& h) {
      return monomial_divides(h.leading_monomial(), f.leading_monomial());
    });
    if (!redundant) minimal.push_back(f);
  }

  std::vector<QPolynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<QPolynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(k < i ? reduced[k] : minimal[k]);
    }
    // the leading term survives since no other leading monomial divides it
    QPolynomial lead = QPolynomial::monomial(minimal[i].ring(), minimal[i].leading_monomial());
    QPolynomial tail = minimal[i] - lead;
    reduced.push_back(lead + normal_form(tail, others));
  }
  std::reverse(reduced.begin(), reduced.end());
  return reduced;
}

BasisCheck check_groebner_basis(const std::vector<QPolynomial>& gens, const std::vector<QPolynomial>& basis) {
  BasisCheck out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      QPolynomial r = normal_form(s_polynomial(basis[i], basis[j]), basis);
      if (!r.is_zero()) {
        out.failures.push_back("S(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") reduces to " + r.to_string());
      }
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    QPolynomial r = normal_form(gens[i], basis);
    if (!r.is_zero()) out.failures.push_back("generator " + std::to_string(i + 1) + " reduces to " + r.to_string());
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) {
      out.failures.push_back("basis element " + std::to_string(i + 1) + " is zero");
      continue;
    }
    if (basis[i].leading_coefficient() != 1) out.failures.push_back("basis element " + std::to_string(i + 1) + " is not monic");
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || basis[j].is_zero()) continue;
      for (const auto& t : basis[i].terms()) {
        if (monomial_divides(basis[j].leading_monomial(), t.exponents)) {
          out.failures.push_back("basis element " + std::to_string(i + 1) + " is reducible by element " +
                                 std::to_string(j + 1));
          break;
        }
      }
    }
  }
  return out;
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Equal: return "EQUAL";
    case Answer::NotEqual: return "NOT_EQUAL";
    case Answer::Member: return "MEMBER";
    case Answer::NotMember: return "NOT_MEMBER";
    case Answer::Monomial: return "MONOMIAL";
    case Answer::NotMonomial: return "NOT_MONOMIAL";
  }
  return "?";
}

bool is_affirmative(Answer a) { return a == Answer::Equal || a == Answer::Member || a == Answer::Monomial; }

const Witness* Verdict::witness() const {
  for (const auto& r : records) {
    if (r.witness) return &*r.witness;
  }
  return nullptr;
}

RateSampler::RateSampler(std::uint64_t seed) : engine_(seed) {}

std::vector<std::pair<std::string, Rational>> RateSampler::draw(const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, Rational>> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    long den = std::uniform_int_distribution<long>(1, 997)(engine_);
    long num = std::uniform_int_distribution<long>(1, den)(engine_);
    Rational q(num, den);
    q.canonicalize();
    out.emplace_back(l, q);
  }
  return out;
}

std::vector<QPolynomial> specialized_generators(const Network& n,
                                                const std::vector<std::pair<std::string, Rational>>& kappa,
                                                const RingPtr& ring) {
  std::vector<std::size_t> embedding;
  for (const auto& s : n.species()) {
    auto it = std::find(ring->variables.begin(), ring->variables.end(), s);
    if (it == ring->variables.end()) throw Error("species " + s + " is not a ring variable");
    embedding.push_back(static_cast<std::size_t>(it - ring->variables.begin()));
  }
  std::map<std::string, Rational> assignment(kappa.begin(), kappa.end());
  SteadyStateSystem sys = steady_state_system(n);
  std::vector<QPolynomial> out;
  for (const auto& p : sys.rates) out.push_back(specialize(p, assignment, embedding, ring));
  return out;
}

namespace {

struct TrialOutcome {
  Answer answer;
  std::vector<SpecializedIdeal> ideals;
  std::optional<Witness> witness;
};

template <typename TrialFn>
Verdict run_trials(const RingContext& ctx, const OracleOptions& opt, TrialFn&& fn) {
  if (opt.trials == 0) throw Error("at least one trial is required");
  RingPtr ring = make_ring(ctx.species, opt.order);
  RateSampler sampler(opt.seed);
  Verdict v;
  v.trials = opt.trials;
  v.seed = opt.seed;
  v.order = opt.order;
  v.context = ctx;
  for (unsigned t = 0; t < opt.trials; ++t) {
    TrialRecord rec;
    rec.index = t;
    rec.kappa = sampler.draw(ctx.rates);
    TrialOutcome o = fn(rec.kappa, ring);
    rec.answer = o.answer;
    rec.ideals = std::move(o.ideals);
    rec.witness = std::move(o.witness);
    v.records.push_back(std::move(rec));
  }
  v.answer = v.records.front().answer;
  for (const auto& r : v.records) {
    if (r.answer != v.answer) {
      throw UnluckySpecialization("unlucky specialization: trial 1 answered " + std::string(to_string(v.answer)) +
                                  " but trial " + std::to_string(r.index + 1) + " answered " +
                                  std::string(to_string(r.answer)) + "; rerun with more trials or another seed");
    }
  }
  return v;
}

std::string generator_name(const Network& n, std::size_t s) { return "x_" + n.species()[s] + "'"; }

// First generator of `from` outside the ideal of `basis`.
std::optional<Witness> first_outside(const Network& from, const std::string& from_name, const std::string& to_name,
                                     const std::vector<QPolynomial>& gens, const std::vector<QPolynomial>& basis) {
  for (std::size_t s = 0; s < gens.size(); ++s) {
    QPolynomial r = normal_form(gens[s], basis);
    if (!r.is_zero()) {
      return Witness{generator_name(from, s) + " of " + from_name + " is not in I(" + to_name + ")", gens[s], r};
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict ideal_equal(const Network& n1, const Network& n2, const OracleOptions& opt) {
  RingContext ctx = union_context(n1, n2);
  return run_trials(ctx, opt, [&](const auto& kappa, const RingPtr& ring) {
    SpecializedIdeal a{"N1", specialized_generators(n1, kappa, ring), {}};
    SpecializedIdeal b{"N2", specialized_generators(n2, kappa, ring), {}};
    a.basis = reduced_groebner_basis(a.generators);
    b.basis = reduced_groebner_basis(b.generators);
    auto w = first_outside(n1, "N1", "N2", a.generators, b.basis);
    if (!w) w = first_outside(n2, "N2", "N1", b.generators, a.basis);
    Answer ans = w ? Answer::NotEqual : Answer::Equal;
    return TrialOutcome{ans, {std::move(a), std::move(b)}, std::move(w)};
  });
}

Verdict contains_monomial(const Network& n, const Complex& m, const OracleOptions& opt) {
  for (const auto& [s, e] : m.exponents()) {
    (void)e;
    if (s >= n.species().size()) throw Error("monomial uses a species outside the network");
  }
  RingContext ctx = context_of(n);
  return run_trials(ctx, opt, [&](const auto& kappa, const RingPtr& ring) {
    SpecializedIdeal a{"N", specialized_generators(n, kappa, ring), {}};
    a.basis = reduced_groebner_basis(a.generators);
    std::vector<std::size_t> id(ring->size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    QPolynomial xm = complex_monomial(m, id, ring);
    QPolynomial r = normal_form(xm, a.basis);
    std::optional<Witness> w;
    if (!r.is_zero()) w = Witness{xm.to_string() + " is not in I(N)", xm, r};
    Answer ans = w ? Answer::NotMember : Answer::Member;
    return TrialOutcome{ans, {std::move(a)}, std::move(w)};
  });
}

Verdict is_monomial_ideal(const Network& n, const OracleOptions& opt) {
  RingContext ctx = context_of(n);
  return run_trials(ctx, opt, [&](const auto& kappa, const RingPtr& ring) {
    SpecializedIdeal a{"N", specialized_generators(n, kappa, ring), {}};
    a.basis = reduced_groebner_basis(a.generators);
    std::vector<std::size_t> id(ring->size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    SpecializedIdeal m{"reactants", {}, {}};
    for (const auto& y : reactant_support_generators(n)) m.generators.push_back(complex_monomial(y, id, ring));
    m.basis = reduced_groebner_basis(m.generators);
    // both bases are reduced, so the ideals agree iff the bases do
    std::optional<Witness> w;
    for (const auto& g : a.basis) {
      QPolynomial r = normal_form(g, m.basis);
      if (!r.is_zero()) {
        w = Witness{"basis element " + g.to_string() + " is not in the reactant ideal", g, r};
        break;
      }
    }
    if (!w) {
      for (const auto& g : m.basis) {
        QPolynomial r = normal_form(g, a.basis);
        if (!r.is_zero()) {
          w = Witness{"reactant monomial " + g.to_string() + " is not in I(N)", g, r};
          break;
        }
      }
    }
    Answer ans = w ? Answer::NotMonomial : Answer::Monomial;
    return TrialOutcome{ans, {std::move(a), std::move(m)}, std::move(w)};
  });
}

Verdict groebner_trials(const Network& n, const OracleOptions& opt) {
  RingContext ctx = context_of(n);
  return run_trials(ctx, opt, [&](const auto& kappa, const RingPtr& ring) {
    SpecializedIdeal a{"N", specialized_generators(n, kappa, ring), {}};
    a.basis = reduced_groebner_basis(a.generators);
    return TrialOutcome{Answer::Equal, {std::move(a)}, std::nullopt};
  });
}

}  // namespace crn
