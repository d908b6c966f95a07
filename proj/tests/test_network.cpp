#include <doctest.h>

#include <random>

#include "crn/json_io.hpp"
#include "crn/network.hpp"
#include "support.hpp"

using namespace crn;

namespace {

Complex cx(std::initializer_list<std::pair<const std::size_t, unsigned>> e) { return Complex(std::map<std::size_t, unsigned>(e)); }

}  // namespace

TEST_CASE("parse: first monomial network") {
  Network n = parse_network("A -> B, k1\nC -> D, k2\nC -> B, k3");
  CHECK(n.species() == std::vector<std::string>{"A", "B", "C", "D"});
  REQUIRE(n.reaction_count() == 3);
  CHECK(n.reaction(1).reactant == cx({{0, 1}}));
  CHECK(n.reaction(1).product == cx({{1, 1}}));
  CHECK(n.reaction(3).rate == "k3");
  CHECK(n.complexes().size() == 4);
  CHECK(validate_network(n).ok());
}

TEST_CASE("parse: coefficients, empty complex, comments and blank lines") {
  Network n = parse_network("# dimers\n\n2A -> A + B, k1   # first\n2A -> 2B, k2\nA + B -> 2B\nB -> 0\n");
  CHECK(n.species() == std::vector<std::string>{"A", "B"});
  REQUIRE(n.reaction_count() == 4);
  CHECK(n.reaction(1).reactant.exponent(0) == 2);
  CHECK(n.reaction(3).rate == "k3");
  CHECK(n.reaction(4).product.empty());
  CHECK(n.reaction(4).rate == "k4");
}

TEST_CASE("parse: reversible shorthand") {
  Network n = parse_network("A <-> B, r\nB <-> C");
  REQUIRE(n.reaction_count() == 4);
  CHECK(n.reaction(1).rate == "r_f");
  CHECK(n.reaction(2).rate == "r_b");
  CHECK(n.reaction(2).reactant == n.reaction(1).product);
  CHECK(n.reaction(3).rate == "k3");
  CHECK(n.reaction(4).rate == "k4");
}

TEST_CASE("parse errors carry locations") {
  auto expect_error = [](const char* text, std::size_t line, const char* fragment) {
    try {
      parse_network(text);
      FAIL("no error for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("A -> A, k1", 1, "self-loop");
  expect_error("0 -> A, k1", 1, "production");
  expect_error("A -> B, k1\nB -> C, k1", 2, "duplicate rate label");
  expect_error("A -> B, k1\nA -> B, k2", 2, "duplicate reaction");
  expect_error("A => B", 1, "expected '->'");
  expect_error("A -> B,", 1, "rate label");
  expect_error("A -> 0B", 1, "zero coefficient");
  expect_error("A -> B\nA + -> C", 2, "species name");
  expect_error("A <-> 0", 1, "production");
}

TEST_CASE("parse error column points at the offending token") {
  try {
    parse_network("A -> B, k1\nA -> C x");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("validate: injected defects") {
  Network good = parse_network("A -> B, k1\nC -> D, k2\nC -> B, k3");
  CHECK(validate_network(good).ok());

  auto complexes = good.complexes();
  complexes.push_back(cx({{0, 1}, {3, 1}}));
  Network orphan(good.species(), good.reactions(), complexes);
  ValidationReport r1 = validate_network(orphan);
  CHECK(r1.findings.size() == 1);
  CHECK(r1.count(Violation::OrphanComplex) == 1);

  auto reactions = good.reactions();
  reactions.push_back(Reaction{4, cx({{0, 1}}), cx({{0, 1}}), "k4"});
  Network loop(good.species(), reactions);
  ValidationReport r2 = validate_network(loop);
  CHECK(r2.findings.size() == 1);
  CHECK(r2.count(Violation::SelfLoop) == 1);

  auto species = good.species();
  species.push_back("E");
  Network uncovered(species, good.reactions());
  CHECK(validate_network(uncovered).count(Violation::SpeciesNotCovered) == 1);

  reactions = good.reactions();
  reactions.push_back(Reaction{4, Complex{}, cx({{0, 1}}), "k4"});
  CHECK(validate_network(Network(good.species(), reactions)).count(Violation::ProductionReaction) == 1);
}

TEST_CASE("is_zero_one") {
  CHECK_FALSE(is_zero_one(test::load("dimerization.crn")));
  CHECK(is_zero_one(test::load("monomial_n1.crn")));
  CHECK(is_zero_one(parse_network("A -> 0")));
}

TEST_CASE("complex_divides") {
  CHECK(complex_divides(cx({{0, 1}}), cx({{0, 1}, {1, 1}})));
  CHECK_FALSE(complex_divides(cx({{0, 2}}), cx({{0, 1}})));
  CHECK(complex_divides(Complex{}, cx({{0, 1}})));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<unsigned> e(0, 2);
  auto random_complex = [&] {
    Complex y;
    for (std::size_t s = 0; s < 3; ++s) y.set(s, e(rng));
    return y;
  };
  for (int t = 0; t < 300; ++t) {
    Complex a = random_complex(), b = random_complex(), c = random_complex();
    CHECK(complex_divides(a, a));
    if (complex_divides(a, b) && complex_divides(b, a)) CHECK(a == b);
    if (complex_divides(a, b) && complex_divides(b, c)) CHECK(complex_divides(a, c));
  }
}

TEST_CASE("serialize round trip") {
  for (const char* f : {"dimerization.crn", "triangle.crn", "chain_start.crn", "chain_degrade.crn", "reversible_degrade.crn"}) {
    Network n = test::load(f);
    CHECK(parse_network(serialize_network(n)) == n);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Network n = test::random_network(seed);
    CHECK(parse_network(serialize_network(n)) == n);
    CHECK(validate_network(n).ok());
  }
  CHECK(serialize_network(parse_network("2A -> A + B, k1\nB -> 0, k2")) == "2A -> A + B, k1\nB -> 0, k2\n");
}

TEST_CASE("json round trip") {
  Network n = test::load("chain_degrade.crn");
  Json j = network_to_json(n);
  CHECK(j.dump() ==
        R"({"species":["A","B","C"],"reactions":[{"reactant":{"A":1,"B":1},"product":{"B":1},"rate":"k1_p"},)"
        R"({"reactant":{"B":1},"product":{"A":1},"rate":"k2"},{"reactant":{"A":1},"product":{"B":1,"C":1},"rate":"k3_p"},)"
        R"({"reactant":{"A":1},"product":{},"rate":"k4"}]})");
  CHECK(network_from_json(j) == n);
  CHECK_THROWS_AS(network_from_json(Json::parse(R"({"reactions":[{"reactant":{"A":1},"product":{"A":1},"rate":"k"}]})")),
                  Error);
}

TEST_CASE("parse_complex and format_complex") {
  Network n = test::load("dimerization.crn");
  CHECK(parse_complex("A + 2B", n) == cx({{0, 1}, {1, 2}}));
  CHECK(parse_complex("0", n).empty());
  CHECK_THROWS_AS(parse_complex("Z", n), ParseError);
  CHECK(format_complex(cx({{0, 2}, {1, 1}}), n.species()) == "2A + B");
  CHECK(format_complex(Complex{}, n.species()) == "0");
}

TEST_CASE("union ring context") {
  Network a = test::load("monomial_n1.crn");
  Network b = test::load("monomial_n3.crn");
  RingContext ctx = union_context(a, b);
  CHECK(ctx.species == std::vector<std::string>{"A", "B", "C", "D", "E", "F"});
  CHECK(ctx.rates == std::vector<std::string>{"k1", "k2", "k3"});
  CHECK(species_embedding(b, ctx) == std::vector<std::size_t>{0, 1, 4, 2, 3, 5});
  CHECK_THROWS_AS(species_embedding(b, context_of(a)), Error);
}
