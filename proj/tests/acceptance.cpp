// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "crn/balance.hpp"
#include "crn/groebner.hpp"
#include "crn/json_io.hpp"
#include "crn/massaction.hpp"
#include "crn/transforms.hpp"
#include "support.hpp"

using namespace crn;

namespace {

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// Every oracle call made by criteria 2-5, kept so criterion 7 can audit and rerun it.
struct OracleCall {
  std::string label;
  std::function<Verdict()> run;
  Verdict first;
};
std::vector<OracleCall> g_calls;

Verdict oracle(const std::string& label, std::function<Verdict()> fn) {
  Verdict v = fn();
  g_calls.push_back({label, std::move(fn), v});
  return v;
}

std::vector<std::string> strings(const std::vector<QPolynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Reactions as species-name multisets, ignoring rate labels and species order.
std::multiset<std::string> shape(const Network& n) {
  auto side = [&](const Complex& c) {
    std::vector<std::string> parts;
    for (const auto& [s, e] : c.exponents()) parts.push_back(std::to_string(e) + n.species()[s]);
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p + " ";
    return out;
  };
  std::multiset<std::string> out;
  for (const auto& r : n.reactions()) out.insert(side(r.reactant) + "-> " + side(r.product));
  return out;
}

Network with_reaction(const Network& n, std::size_t i, const Reaction& r) {
  std::vector<Reaction> rs = n.reactions();
  rs[i - 1] = r;
  rs[i - 1].index = i;
  return Network(n.species(), rs);
}

Network without_reaction(const Network& n, std::size_t i) {
  std::vector<Reaction> rs;
  for (const auto& r : n.reactions()) {
    if (r.index == i) continue;
    rs.push_back(r);
    rs.back().index = rs.size();
  }
  return Network(n.species(), rs);
}

void criterion1(Check& c) {
  Network n = test::load("dimerization.crn");
  SteadyStateSystem sys = steady_state_system(n);
  c.expect(format_rate_polynomial(sys.of(0), n.species()) == "-k1*x_A^2 - 2*k2*x_A^2 - k3*x_A*x_B", "x_A' string");
  c.expect(format_rate_polynomial(sys.of(1), n.species()) == "k1*x_A^2 + 2*k2*x_A^2 + k3*x_A*x_B", "x_B' string");
  c.expect((sys.of(0) + sys.of(1)).is_zero(), "x_A' + x_B' != 0");
}

void criterion2(Check& c) {
  std::vector<Network> ns{test::load("monomial_n1.crn"), test::load("monomial_n2.crn"), test::load("monomial_n3.crn")};
  for (std::uint64_t seed : {0, 1, 2}) {
    OracleOptions opt{3, seed};
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        std::string label = "N" + std::to_string(a + 1) + " vs N" + std::to_string(b + 1) + " seed " + std::to_string(seed);
        Verdict v = oracle(label, [x = ns[a], y = ns[b], opt] { return ideal_equal(x, y, opt); });
        c.expect(v.answer == Answer::Equal, label);
      }
    }
    for (std::size_t a = 0; a < 3; ++a) {
      std::string label = "monomial N" + std::to_string(a + 1) + " seed " + std::to_string(seed);
      Verdict v = oracle(label, [x = ns[a], opt] { return is_monomial_ideal(x, opt); });
      c.expect(v.answer == Answer::Monomial, label);
      for (const auto& r : v.records) {
        c.expect(strings(r.ideals.front().basis) == std::vector<std::string>{"x_A", "x_C"}, label + " basis");
      }
    }
  }
}

void criterion3(Check& c) {
  Network n = test::load("triangle.crn");
  NetworkHypergraph h(n);
  VertexId u1{1, Side::Reactant};
  auto cert = find_certificate(h, u1);
  if (!cert) {
    c.expect(false, "no certificate at u1");
    return;
  }
  c.expect(cert->k == 2, "k != 2");
  bool reduced = true;
  for (const auto& [e, m] : cert->red) reduced = reduced && !cert->blue.contains(e);
  c.expect(reduced, "certificate not reduced");
  VerifiedTerm t = verify_certificate(n, u1, *cert);
  c.expect(format_rate_polynomial(t.residual, n.species()) == "2*k1*x_A*x_B", "verified term");
  auto brute = brute_force_certificate(h, u1, 1);
  c.expect(brute && *brute == *cert, "brute force disagrees");
}

void criterion4(Check& c) {
  Network cur = test::load("chain_start.crn");
  std::vector<Network> stages{cur};
  try {
    ScriptResult res = apply_script(cur, parse_script_file(test::data_path("chain_script.json")));
    for (const auto& s : res.steps) stages.push_back(s.output);
    c.expect(res.output == test::load("chain_degrade.crn"), "final network differs from the expected chain end");
  } catch (const Error& e) {
    c.expect(false, std::string("script failed: ") + e.what());
    return;
  }
  for (std::size_t k = 0; k < stages.size(); ++k) {
    const Network& n = stages[k];
    std::string at = "stage " + std::to_string(k);
    if (k > 0) {
      const Network& prev = stages[k - 1];
      c.expect(oracle(at + " equal", [prev, n] { return ideal_equal(prev, n); }).answer == Answer::Equal,
               at + " ideal changed");
    }
    for (const char* s : {"A", "B"}) {
      Complex m = parse_complex(s, n);
      c.expect(oracle(at + " member " + s, [n, m] { return contains_monomial(n, m); }).answer == Answer::Member,
               at + " x_" + s + " not a member");
    }
  }
}

// Forward: every admissible operation on N2 fails. Reverse: no network one
// operation away produces N2.
void criterion5(Check& c) {
  Network n1 = test::load("degrade_pair.crn"), n2 = test::load("reversible_degrade.crn");
  c.expect(oracle("degradation pair equal", [n1, n2] { return ideal_equal(n1, n2); }).answer == Answer::Equal, "N1 != N2");

  std::vector<TransformRequest> forward;
  for (const auto& r : n2.reactions()) {
    forward.push_back(DegradationRequest{r.index});
    for (const auto& s : n2.species()) {
      forward.push_back(ProductRequest{r.index, s});
      for (const auto& q : n2.reactions()) forward.push_back(ReactantRequest{r.index, s, q.index});
    }
  }
  for (const auto& req : forward) {
    try {
      TransformResult res = apply_transform(n2, req);
      c.expect(false, "transform applied: " + std::string(to_string(res.transcript.op)) + " on reaction " +
                          std::to_string(res.transcript.reaction));
    } catch (const TransformError&) {
    }
  }

  // Candidate predecessors: drop a species from one side of a reaction, or drop a degradation.
  auto target = shape(n2);
  std::size_t predecessors = 0;
  auto produces_n2 = [&](const Network& p, const TransformRequest& req) {
    if (!validate_network(p).ok()) return false;
    ++predecessors;
    try {
      return shape(apply_transform(p, req).output) == target;
    } catch (const TransformError&) {
      return false;
    }
  };
  for (const auto& r : n2.reactions()) {
    for (const auto& [s, e] : r.product.exponents()) {
      Reaction q = r;
      q.product.set(s, 0);
      Network p = with_reaction(n2, r.index, q);
      c.expect(!produces_n2(p, ProductRequest{r.index, n2.species()[s]}),
               "N2 reachable by adding to product of reaction " + std::to_string(r.index));
    }
    for (const auto& [s, e] : r.reactant.exponents()) {
      Reaction q = r;
      q.reactant.set(s, 0);
      Network p = with_reaction(n2, r.index, q);
      for (const auto& j : n2.reactions()) {
        c.expect(!produces_n2(p, ReactantRequest{r.index, n2.species()[s], j.index}),
                 "N2 reachable by adding to reactant of reaction " + std::to_string(r.index));
      }
    }
    if (r.product.empty()) {
      Network p = without_reaction(n2, r.index);
      for (const auto& q : p.reactions()) {
        if (q.reactant == r.reactant) {
          c.expect(!produces_n2(p, DegradationRequest{q.index}),
                   "N2 reachable by adding degradation " + std::to_string(r.index));
        }
      }
    }
  }
  c.expect(predecessors > 0, "no predecessor candidates examined");
}

void criterion6(Check& c) {
  std::size_t certs = 0, compared = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Network n = test::random_network(seed, 5, 6);
    std::string tag = "seed " + std::to_string(seed) + ": ";
    NetworkHypergraph h(n);
    bool wr = is_weakly_reversible(n);
    bool small = incidence_matrix(h).columns.size() <= 6;

    for (const auto& v : h.vertices()) {
      auto cert = find_certificate(h, v);
      // (a)
      if (wr || !structural_obstructions(n, v).empty()) c.expect(!cert, tag + "(a) obstructed " + vertex_name(v));
      // (d)
      if (cert) {
        ++certs;
        try {
          VerifiedTerm t = verify_certificate(n, v, *cert);
          Complex m = n.reaction(t.reaction).reactant;
          c.expect(contains_monomial(n, m, {1, seed}).answer == Answer::Member, tag + "(d) not a member");
        } catch (const CertificateError& e) {
          c.expect(false, tag + "(d) " + e.what());
        }
      }
      // (e)
      if (small) {
        ++compared;
        auto brute = brute_force_certificate(h, v, 4);
        c.expect(cert.has_value() == brute.has_value(), tag + "(e) disagreement at " + vertex_name(v));
      }
    }
    // (b)
    for (const auto& r : n.reactions()) {
      if (r.product.empty()) continue;
      c.expect(find_certificate(h, {r.index, Side::Reactant}).has_value() ==
                   find_certificate(h, {r.index, Side::Product}).has_value(),
               tag + "(b) swap symmetry at reaction " + std::to_string(r.index));
    }
    // (c)
    SteadyStateSystem sys = steady_state_system(n);
    for (std::size_t s = 0; s < n.species_count(); ++s) {
      c.expect(species_edge_polynomial(n, h, s) == sys.of(s), tag + "(c) species " + n.species()[s]);
    }
  }
  c.expect(certs > 0, "no certificates found at all");
  c.expect(compared > 0, "no small instances compared");
}

void criterion7(Check& c) {
  for (const auto& call : g_calls) {
    for (const auto& r : call.first.records) {
      for (const auto& ideal : r.ideals) {
        BasisCheck bc = check_groebner_basis(ideal.generators, ideal.basis);
        for (const auto& f : bc.failures) c.expect(false, call.label + " " + ideal.name + ": " + f);
      }
    }
    Verdict again = call.run();
    bool same = again.records.size() == call.first.records.size();
    for (std::size_t t = 0; same && t < again.records.size(); ++t) {
      same = again.records[t].kappa == call.first.records[t].kappa;
      for (std::size_t k = 0; same && k < again.records[t].ideals.size(); ++k) {
        same = again.records[t].ideals[k].basis == call.first.records[t].ideals[k].basis;
      }
    }
    c.expect(same, call.label + " differs on rerun");
  }
  c.expect(!g_calls.empty(), "no bases recorded");
}

void criterion8(Check& c) {
  Network n = test::load("reversible_then_c.crn");
  c.expect(!monomial_ideal_certificate(n).has_value(), "certificate found");
  Verdict v = is_monomial_ideal(n);
  c.expect(v.answer == Answer::Monomial, "oracle says not monomial");
  for (const auto& r : v.records) {
    c.expect(strings(r.ideals.front().basis) == std::vector<std::string>{"x_A", "x_B"}, "basis != {x_A, x_B}");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    void (*fn)(Check&);
  };
  const Criterion criteria[] = {
      {1, "mass-action system of A+A/A+B network", criterion1},
      {2, "three networks with ideal <x_A, x_C>", criterion2},
      {3, "triangle certificate k=2", criterion3},
      {4, "product, reactant, degradation chain", criterion4},
      {5, "degradation pair vs reversible pair minimality", criterion5},
      {6, "obstruction and certificate properties on 200 random networks", criterion6},
      {7, "Groebner basis self-checks and reruns", criterion7},
      {8, "monomial ideal without certificate", criterion8},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title;
    line.precision(2);
    line << std::fixed << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::cout << "  " << c.failures[k] << "\n";
    if (!c.failures.empty()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
