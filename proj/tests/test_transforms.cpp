#include <doctest.h>

#include "crn/groebner.hpp"
#include "crn/json_io.hpp"
#include "crn/transforms.hpp"
#include "support.hpp"

using namespace crn;

namespace {

TransformFailure failure_of(auto&& fn) {
  try {
    fn();
  } catch (const TransformError& e) {
    return e.kind();
  }
  FAIL("expected a TransformError");
  return TransformFailure::NotZeroOne;
}

}  // namespace

TEST_CASE("add species to product: chain start") {
  Network start = test::load("chain_start.crn");
  TransformResult r = add_species_to_product(start, 3, "B");
  CHECK(r.output == test::load("chain_product.crn"));
  CHECK(r.transcript.new_rate == "k3_p");
  CHECK(r.transcript.op == TransformOp::AddProductSpecies);
  CHECK(r.transcript.certificate.target == VertexId{3, Side::Reactant});
  CHECK_NOTHROW(verify_certificate(start, {3, Side::Reactant}, r.transcript.certificate));

  CHECK(failure_of([&] { add_species_to_product(start, 1, "C"); }) == TransformFailure::VertexNotBalanced);
  CHECK(failure_of([&] { add_species_to_product(start, 3, "C"); }) == TransformFailure::SpeciesInSupport);
  CHECK(failure_of([&] { add_species_to_product(start, 7, "C"); }) == TransformFailure::UnknownReaction);
  CHECK(failure_of([&] { add_species_to_product(test::load("dimerization.crn"), 1, "C"); }) == TransformFailure::NotZeroOne);
}

TEST_CASE("certificate exists only through the forbidden edge") {
  // E_A is the only nonempty edge at u1
  Network single = parse_network("A -> 0, k1");
  CHECK(failure_of([&] { add_species_to_product(single, 1, "A"); }) == TransformFailure::NoQualifyingCertificate);
  Network two = parse_network("A -> C, k1\nB -> C, k2");
  CHECK(add_species_to_product(two, 1, "A").output.reaction(1).product.contains(0));
}

TEST_CASE("add species to a fresh species name") {
  Network n = parse_network("A -> 0, k1");
  TransformResult r = add_species_to_product(n, 1, "Z");
  CHECK(r.output.species() == std::vector<std::string>{"A", "Z"});
  CHECK(serialize_network(r.output) == "A -> Z, k1_p\n");
  CHECK(ideal_equal(n, r.output).answer == Answer::Equal);
}

TEST_CASE("add species to reactant: chain product step") {
  Network after_product = test::load("chain_product.crn");
  TransformResult r = add_species_to_reactant(after_product, 1, "B", 3);
  CHECK(r.output == test::load("chain_reactant.crn"));
  CHECK(r.transcript.aux_reaction == 3u);
  CHECK(r.transcript.new_rate == "k1_p");
  CHECK(certificate_vertex(r.transcript) == VertexId{3, Side::Reactant});

  CHECK(failure_of([&] { add_species_to_reactant(after_product, 1, "B", 1); }) == TransformFailure::SameReaction);
  CHECK(failure_of([&] { add_species_to_reactant(after_product, 1, "B", 2); }) == TransformFailure::NotDivisible);
  CHECK(failure_of([&] { add_species_to_reactant(after_product, 1, "A", 3); }) == TransformFailure::SpeciesInSupport);

  Network loop = parse_network("B -> 0, k1\nB -> A + B, k2");
  CHECK(failure_of([&] { add_species_to_reactant(loop, 2, "A", 1); }) == TransformFailure::SelfLoop);
}

TEST_CASE("add degradation: chain reactant step") {
  Network after_reactant = test::load("chain_reactant.crn");
  TransformResult r = add_degradation(after_reactant, 3);
  CHECK(r.output == test::load("chain_degrade.crn"));
  CHECK(r.transcript.new_rate == "k4");
  NetworkHypergraph h(after_reactant);
  CHECK(r.transcript.certificate.red == std::map<EdgeId, std::uint64_t>{{h.parse_edge("E_C"), 1}});
  CHECK(r.transcript.certificate.blue.empty());

  CHECK(failure_of([&] { add_degradation(parse_network("A <-> B"), 1); }) == TransformFailure::VertexNotBalanced);
  CHECK(failure_of([&] { add_degradation(test::load("degrade_pair.crn"), 1); }) == TransformFailure::DuplicateDegradation);
}

TEST_CASE("fresh degradation labels avoid collisions") {
  Network n = parse_network("A -> B + C, k3\nB -> A, k1");
  TransformResult r = add_degradation(n, 1);
  CHECK(r.transcript.new_rate == "k3_p");
}

TEST_CASE("script: full chain") {
  Network start = test::load("chain_start.crn");
  auto ops = parse_script_file(test::data_path("chain_script.json"));
  ScriptResult res = apply_script(start, ops);
  CHECK(res.output == test::load("chain_degrade.crn"));
  REQUIRE(res.steps.size() == 3);
  CHECK(transcript_to_json(start, res.steps[0].transcript).dump() ==
        R"({"op":"add_product_species","reaction":3,"species":"B","certificate":{"vertex":"u3","red":{"E_r3":1},)"
        R"("blue":{"E_C":1},"k":1,"monomial":"x_A","rate":"k3"},"new_rate":"k3_p"})");

  CHECK(apply_script(start, {}).output == start);

  std::vector<TransformRequest> bad{ProductRequest{3, "B"}, ReactantRequest{1, "B", 2}, DegradationRequest{3}};
  try {
    apply_script(start, bad);
    FAIL("expected a script error");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 2);
    CHECK(e.cause() == TransformFailure::NotDivisible);
    CHECK(std::string(e.what()).rfind("step 2:", 0) == 0);
  }
  CHECK(start == test::load("chain_start.crn"));
}

TEST_CASE("script parsing errors") {
  CHECK_THROWS_AS(parse_script("{}"), Error);
  CHECK_THROWS_AS(parse_script(R"([{"op":"add_degradation"}])"), Error);
  CHECK_THROWS_AS(parse_script(R"([{"op":"rename","reaction":1}])"), Error);
  CHECK_THROWS_AS(parse_script("[1,"), Error);
  CHECK(parse_script("[]").empty());
}

TEST_CASE("transform invariants on random networks") {
  std::size_t applied = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Network n = test::random_network(seed, 4, 5);
    std::vector<TransformRequest> reqs;
    for (const auto& r : n.reactions()) {
      reqs.push_back(DegradationRequest{r.index});
      for (const auto& s : n.species()) {
        reqs.push_back(ProductRequest{r.index, s});
        for (const auto& q : n.reactions()) reqs.push_back(ReactantRequest{r.index, s, q.index});
      }
    }
    for (const auto& req : reqs) {
      std::optional<TransformResult> res;
      try {
        res = apply_transform(n, req);
      } catch (const TransformError&) {
        continue;
      }
      ++applied;
      ValidationReport report = validate_network(res->output);
      std::string kinds;
      for (const auto& f : report.findings) kinds += std::string(to_string(f.kind)) + " ";
      CHECK_MESSAGE(report.ok(), kinds, serialize_network(n), "=>\n", serialize_network(res->output));
      CHECK(is_zero_one(res->output));
      VertexId w = certificate_vertex(res->transcript);
      CHECK_NOTHROW(verify_certificate(n, w, res->transcript.certificate));
      // the certificate still balances over the output hypergraph
      CHECK_NOTHROW(verify_certificate(res->output, w, res->transcript.certificate));
      if (applied % 7 == 0) CHECK(ideal_equal(n, res->output, {2, seed}).answer == Answer::Equal);
    }
  }
  CHECK(applied > 20);
}
